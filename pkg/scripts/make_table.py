#!/usr/bin/env python3
"""Print the degree/codimension table for all three loci.

Usage: python scripts/make_table.py [KMAX] [--format text|json|csv]
"""

import sys

sys.path.insert(0, "src")

from folenum.cli import main  # noqa: E402

if __name__ == "__main__":
    argv = sys.argv[1:]
    kmax = argv.pop(0) if argv and argv[0].isdigit() else "6"
    sys.exit(main(["table", "--kmax", kmax, *argv]))
