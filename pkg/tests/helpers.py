"""Shared builders and hypothesis strategies for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from gradus.degfun import PullbackSemidegree, Quasidegree, WeightedDegree
from gradus.iterate import IteratedSemidegree
from gradus.poly import Polynomial, parse

XY = ("x1", "x2")


def P(text, vars=XY, laurent=False):
    return parse(text, vars, laurent)


def sheared_quasidegree(vars=XY):
    """max of the pullbacks of weights (-1, 1) along x1 -> x1 +- x2^2."""
    base = WeightedDegree([-1, 1])
    parts = [PullbackSemidegree(vars, {"x1": P(s, vars)}, base) for s in ("x2^2", "-x2^2")]
    return Quasidegree(parts)


def cusp_iteration(vars=XY):
    """Weights (3, 2) with x1^2 - x2^3 adjoined at weight 1."""
    return IteratedSemidegree.build([3, 2], [(P("x1^2 - x2^3", vars), 1)], vars)


def fk_map(k, vars=XY):
    h = P("x1^2 - x2^3", vars)
    return [Polynomial.variable(vars[0], vars) + h ** 2, h ** k]


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def exponents(n, max_deg=3, laurent=False):
    lo = -max_deg if laurent else 0
    return st.tuples(*[st.integers(lo, max_deg)] * n)


def polynomials(vars=XY, max_terms=5, max_deg=3, laurent=False, nonzero=False):
    coeff = st.integers(-100, 100).filter(bool) | rationals.filter(bool)
    terms = st.dictionaries(exponents(len(vars), max_deg, laurent), coeff,
                            min_size=1 if nonzero else 0, max_size=max_terms)
    return terms.map(lambda t: Polynomial(vars, t, laurent))


def random_rational_point(rng, n=2, lo=-20, hi=20, den=7):
    return tuple(Fraction(rng.randint(lo, hi), rng.randint(1, den)) for _ in range(n))
