#!/usr/bin/env python3
"""A Gassmann pair inside the simple group of order 168.

The group acts on the 8 points of the projective line over F_7.  Its
order-24 subgroups fall into exactly two conjugacy classes, and a pair
taken across classes meets every conjugacy class of the big group in
the same number of elements without being conjugate.  Consequently all
invariants built from cycle counts on the coset spaces, including the
coset types of every cyclic subgroup, agree for the two subgroups.
This is the group-theoretic engine behind arithmetically equivalent,
non-isomorphic field extensions.
"""

import sys

from gosslift.demos import run_demo

if __name__ == "__main__":
    report = run_demo("psl27")
    print(report.text())
    sys.exit(0 if report.ok else 1)
