"""Fiber sizes of f_k = (x1 + h^2, h^k), h = x1^2 - x2^3, against the iterated and weighted Bezout bounds."""

import argparse
import random
import time
from fractions import Fraction

from gradus.bezout import bezout_bound, count_fiber_2d, iterated_ratio, weighted_ratio
from gradus.degfun import WeightedDegree
from gradus.iterate import IteratedSemidegree
from gradus.poly import Polynomial, format_rational, parse

VARS = ("x1", "x2")


def fk(k):
    h = parse("x1^2 - x2^3", VARS)
    return [Polynomial.variable("x1", VARS) + h ** 2, h ** k]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--points", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    delta = IteratedSemidegree.build([3, 2], [(parse("x1^2 - x2^3", VARS), 1)], VARS)
    data = iterated_ratio(delta)
    plain = WeightedDegree([3, 2], vars=VARS)
    print(f"{'k':>2} {'iterated':>8} {'weighted':>8}  counts")
    for k in range(1, args.k_max + 1):
        fs = fk(k)
        sharp = bezout_bound(data, delta, fs)
        coarse = bezout_bound(weighted_ratio([3, 2]), plain, fs)
        start = time.perf_counter()
        counts = []
        for _ in range(args.points):
            a = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(2))
            counts.append(count_fiber_2d(*fs, a=a, seed=rng.randrange(10**6)).count)
        print(f"{k:>2} {format_rational(sharp):>8} {format_rational(coarse):>8}  {counts}"
              f"  ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
