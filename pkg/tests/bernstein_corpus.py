"""A fixed corpus of bivariate sparse systems: generic dense, face-degenerate and parallel-support."""

import random

from gradus.bernstein import SparseSystem, dense_support_poly
from gradus.poly import parse

VARS = ("x", "y")


def L(text):
    return parse(text, VARS, laurent=True)


def corpus(seed=2024):
    rng = random.Random(seed)
    systems = []
    for d1, d2 in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]:
        systems.append(("dense", (d1, d2), SparseSystem([dense_support_poly(VARS, d1, rng),
                                                         dense_support_poly(VARS, d2, rng)])))
    for b1, b2 in [((1, 1), (1, 1)), ((1, 2), (2, 1)), ((2, 2), (2, 2)), ((2, 3), (3, 2)), ((3, 3), (3, 3))]:
        systems.append(("bidegree", (b1, b2), SparseSystem([dense_support_poly(VARS, 0, rng, bidegree=b1),
                                                            dense_support_poly(VARS, 0, rng, bidegree=b2)])))
    degenerate = [
        ("1 + x + y", "2 + x + y"),
        ("3 + x - 2*y", "-1 + 3*x - 6*y"),
        ("y - 2 + x*(3 + y)", "(y - 2)*(y + 3) + x*(1 - y)"),
        ("x - 1 + y*(x + 5)", "(x - 1)*(x + 4) + y*(2 - 3*x)"),
        ("x^2*y^2 - 1 + x", "x^2*y^2 - 1 + 2*x"),
        ("(x + y)*(x - y) + 1 + x", "(x + y)*(2*x + y) - 4 + y"),
    ]
    for a, b in degenerate:
        systems.append(("face-degenerate", None, SparseSystem([L(a), L(b)])))
    parallel = [
        ("1 + x*y", "1 + 2*x*y"),
        ("1 + x*y", "3 - x*y"),
        ("x + y + x^2*y^2", "x*y + 2*x^2*y^2 - 5"),
        ("x*y", "x^2"),
        ("1 + x + x^2", "2 - x + y"),
    ]
    for a, b in parallel:
        systems.append(("parallel/sparse", None, SparseSystem([L(a), L(b)])))
    laurent = [
        ("x + y^(-1) + 1", "x^(-1) + y + 3"),
        ("x*y + x^(-1) - 2", "y^(-1) + 4*x - 1"),
    ]
    for a, b in laurent:
        systems.append(("laurent", None, SparseSystem([L(a), L(b)])))
    return systems
