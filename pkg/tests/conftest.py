import subprocess
import sys
from pathlib import Path

import pytest

from folenum import abstract_surface_context, p2_context

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def p2():
    return p2_context()


@pytest.fixture
def sc(p2):
    return p2.scalars


@pytest.fixture
def surface_sym():
    return abstract_surface_context()


@pytest.fixture
def run_cli():
    def run(args, **kw):
        return subprocess.run([sys.executable, "-m", "folenum", *args],
                              capture_output=True, text=True, timeout=120,
                              cwd=REPO_ROOT, **kw)
    return run
