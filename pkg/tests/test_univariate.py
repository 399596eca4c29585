from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gradus import univariate as U

import oracles

small = st.lists(st.integers(-6, 6), min_size=1, max_size=5)


def nonconstant(max_size=5):
    return st.lists(st.integers(-6, 6), min_size=2, max_size=max_size).map(U.trim).filter(lambda p: U.degree(p) >= 1)


@pytest.mark.parametrize("coeffs,expected", [
    ([-2, 0, 1], True),
    ([-4, 0, 1], False),
    ([1, 0, 1], True),
    ([4, 0, 0, 0, 1], False),
    ([1, 1, 1, 1, 1], True),
    ([2, 0, 0, 1], True),
    ([1, 0, 0, 0, 0, 0, 1], False),
    ([5], False),
])
def test_irreducible_examples(coeffs, expected):
    assert U.is_irreducible(coeffs) is expected
    assert oracles.irreducible_over_q(coeffs) is expected


@settings(max_examples=150)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8))
def test_irreducible_matches_sympy(coeffs):
    if U.degree(U.trim(coeffs)) < 1:
        return
    assert U.is_irreducible(coeffs) == oracles.irreducible_over_q(coeffs)


@settings(max_examples=100)
@given(nonconstant(), nonconstant())
def test_products_are_reducible(p, q):
    assert not U.is_irreducible(U.mul(p, q))


def test_irreducibility_degree_cap():
    with pytest.raises(ValueError):
        U.is_irreducible([1] + [0] * 8 + [1])


@given(small, small)
def test_gcd_divides_both(p, q):
    g = U.gcd_poly(p, q)
    if not g:
        assert not U.trim(p) and not U.trim(q)
        return
    assert g[-1] == 1
    for f in (p, q):
        if U.trim(f):
            assert not U.divmod_(f, g)[1]


@given(small, nonconstant())
def test_divmod_round_trip(p, q):
    quo, rem = U.divmod_(p, q)
    assert U.add(U.mul(quo, q), rem) == U.trim(U.as_fractions(p))
    assert U.degree(rem) < U.degree(q)


def test_rational_roots():
    # (2t - 1)(t + 3) t^2
    p = U.mul(U.mul([-1, 2], [3, 1]), [0, 0, 1])
    assert U.rational_roots(p) == [Fraction(-3), Fraction(0), Fraction(1, 2)]
    assert U.rational_roots([1, 0, 1]) == []


def test_root_multiplicity_mass():
    r = U.mul(U.mul([-1, 1], [-1, 1]), [2, 0, 1])  # (t-1)^2 (t^2+2)
    assert U.root_multiplicity_mass(r, [-1, 1]) == 2
    assert U.root_multiplicity_mass(r, [2, 0, 1]) == 2
    assert U.root_multiplicity_mass(r, [5, 1]) == 0


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_sympy(rows):
    assert U.det_int(rows) == sympy.Matrix(rows).det()


@given(st.lists(st.fractions(-10, 10, max_denominator=5), min_size=1, max_size=6))
def test_interpolate_recovers_polynomial(coeffs):
    xs = list(range(len(coeffs)))
    ys = [U.evaluate(coeffs, x) for x in xs]
    assert U.interpolate(xs, ys) == U.trim(U.as_fractions(coeffs))
