#!/usr/bin/env python3
"""Degrees of the order-k singularity locus on an abstract polarized surface.

Prints, for k up to KMAX (default 4), the degree of the locus as a
polynomial in d and the four intersection numbers h2, c1h, c1sq, c2, and
its specialization to the projective plane.

Usage: python scripts/general_surface.py [KMAX]
"""

import sys

sys.path.insert(0, "src")

from folenum import general_surface_deg_M, specialize_surface, deg_M  # noqa: E402

if __name__ == "__main__":
    kmax = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for k in range(1, kmax + 1):
        g = general_surface_deg_M(k)
        print(f"k = {k}")
        print(f"  general surface : {g.text()}")
        print(f"  at P^2 numbers  : {specialize_surface(g).text()}")
        print(f"  direct on P^2   : {deg_M(k).degree.text()}")
