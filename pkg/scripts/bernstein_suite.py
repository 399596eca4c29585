"""BKK equality against face degeneracy on random dense, bidegree and hand-built degenerate systems."""

import argparse
import random
from itertools import product

from gradus.bernstein import SparseSystem, dense_support_poly, equality_verdict
from gradus.poly import format_rational, parse

VARS = ("x", "y")

# each pair shares a torus zero of some face system
DEGENERATE = [
    ("1 + x + y", "2 + x + y"),
    ("3 + x - 2*y", "-1 + 3*x - 6*y"),
    ("y - 2 + x*(3 + y)", "(y - 2)*(y + 3) + x*(1 - y)"),
    ("x^2*y^2 - 1 + x", "x^2*y^2 - 1 + 2*x"),
]


def systems(rng):
    for d1, d2 in product(range(1, 4), repeat=2):
        yield f"dense {d1},{d2}", SparseSystem([dense_support_poly(VARS, d1, rng), dense_support_poly(VARS, d2, rng)])
    for b in [(1, 1), (1, 2), (2, 2), (3, 3)]:
        yield f"bidegree {b}", SparseSystem([dense_support_poly(VARS, 0, rng, bidegree=b),
                                              dense_support_poly(VARS, 0, rng, bidegree=b[::-1])])
    for a, b in DEGENERATE:
        yield "degenerate", SparseSystem([parse(a, VARS, True), parse(b, VARS, True)])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    bad = 0
    for name, s in systems(rng):
        v = equality_verdict(s, seed=args.seed)
        bad += not v.consistent
        verdict = "nondegenerate" if v.degeneracy.nondegenerate else "degenerate"
        print(f"{name:<16} MV {format_rational(v.bound):>3}  torus roots {v.count:>3}  {verdict:<13}"
              f"  {'consistent' if v.consistent else 'INCONSISTENT'}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
