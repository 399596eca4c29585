from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradus.errors import DegreeZeroInEliminationVariable, NotBivariate, SchemaError, VariableMismatch, ZeroDivisor
from gradus.poly import (
    MonomialOrder,
    Polynomial,
    as_rational,
    divide_with_remainder,
    format_rational,
    parse,
    resultant_bivariate,
    substitute,
)

import oracles
from helpers import XY, P, polynomials


class TestArithmetic:
    def test_cancellation(self):
        assert P("x1 + x2") + P("x1 - x2") == P("2*x1")
        assert P("x1^2 - x2^3") + P("x2^3") == P("x1^2")

    def test_additive_identity(self):
        p = P("3*x1*x2 - 1/2")
        assert p + Polynomial.zero(XY) == p
        assert p + 0 == p

    def test_products(self):
        assert P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2")
        assert P("x1 - x2^2") * P("x1 + x2^2") == P("x1^2 - x2^4")

    def test_laurent_inverse_monomials(self):
        a = Polynomial.monomial((1, -1), XY, laurent=True)
        b = Polynomial.monomial((-1, 1), XY, laurent=True)
        assert a * b == 1
        assert a ** -1 == b

    def test_negative_power_needs_laurent_monomial(self):
        with pytest.raises(ZeroDivisor):
            P("x1 + 1") ** -1

    def test_negative_exponent_rejected_outside_laurent(self):
        with pytest.raises(VariableMismatch):
            Polynomial(XY, {(-1, 0): 1})

    def test_ring_mismatch(self):
        with pytest.raises(VariableMismatch):
            P("x1") + parse("y", ("y",))
        with pytest.raises(VariableMismatch):
            P("x1") + P("x1", laurent=True)

    def test_canonical_storage(self):
        p = Polynomial(XY, {(1, 0): Fraction(4, 2), (0, 1): 0})
        assert p.terms == {(1, 0): 2}
        assert type(p.terms[(1, 0)]) is int
        assert type((P("x1") / 3).coefficient((1, 0))) is Fraction

    def test_rationals_reduced(self):
        assert as_rational("6/4") == Fraction(3, 2)
        assert format_rational(Fraction(-6, 4)) == "-3/2"
        with pytest.raises(TypeError):
            as_rational(0.5)

    @settings(max_examples=200)
    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert p + q == q + p
        assert p - p == 0

    @given(polynomials(max_terms=4, max_deg=2), polynomials(max_terms=4, max_deg=2))
    def test_product_matches_sympy(self, p, q):
        assert oracles.from_sympy(oracles.to_sympy(p)[0] * oracles.to_sympy(q)[0], XY) == p * q


class TestDivision:
    def test_cusp_division(self):
        q, r = divide_with_remainder(P("x1^2"), P("x1^2 - x2^3"), MonomialOrder.graded([3, 2]))
        assert q == 1 and r == P("x2^3")

    def test_no_divisible_term(self):
        q, r = divide_with_remainder(P("x2"), P("x1"), MonomialOrder.lex())
        assert q == 0 and r == P("x2")

    def test_self_division(self):
        g = P("x1^3 - 2*x1*x2 + 5")
        assert divide_with_remainder(g, g, MonomialOrder.lex()) == (1, 0)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisor):
            divide_with_remainder(P("x1"), Polynomial.zero(XY), MonomialOrder.lex())

    @settings(max_examples=200)
    @given(polynomials(max_deg=4), polynomials(nonzero=True),
           st.sampled_from([MonomialOrder.lex(), MonomialOrder.graded([1, 1]), MonomialOrder.graded([3, 2])]))
    def test_round_trip(self, p, g, order):
        q, r = divide_with_remainder(p, g, order)
        assert q * g + r == p
        lead = order.leading_exponent(g)
        assert not any(all(a >= b for a, b in zip(e, lead)) for e in r.terms)


class TestResultant:
    def test_hand_values(self):
        assert resultant_bivariate(P("x2^2 - x1"), P("x2 - 1"), "x2") == P("1 - x1")
        assert resultant_bivariate(P("x2 - x1"), P("x2 + x1"), "x2") == P("2*x1")

    def test_common_factor_gives_zero(self):
        p = P("x1*x2 + x2^2 - 3")
        assert resultant_bivariate(p, p, "x2") == 0

    def test_errors(self):
        with pytest.raises(DegreeZeroInEliminationVariable):
            resultant_bivariate(P("x1"), P("x2"), "x2")
        with pytest.raises(NotBivariate):
            resultant_bivariate(parse("x", ("x",)), parse("x", ("x",)), "x")

    @settings(max_examples=80)
    @given(polynomials(max_terms=4, max_deg=3), polynomials(max_terms=4, max_deg=3))
    def test_matches_sympy(self, p, q):
        if p.degree_in("x2") < 1 or q.degree_in("x2") < 1:
            return
        assert resultant_bivariate(p, q, "x2") == oracles.resultant(p, q, "x2")

    @settings(max_examples=150)
    @given(polynomials(max_terms=4, max_deg=3), polynomials(max_terms=4, max_deg=3))
    def test_antisymmetry(self, p, q):
        if p.degree_in("x1") < 1 or q.degree_in("x1") < 1:
            return
        sign = (-1) ** (p.degree_in("x1") * q.degree_in("x1"))
        assert resultant_bivariate(p, q, "x1") == resultant_bivariate(q, p, "x1") * sign


class TestSubstitute:
    def test_shear(self):
        big = ("u", "x1", "x2")
        img = {"x1": parse("u + x2^2", big)}
        assert substitute(P("x1^2 - x2^4"), img, big) == parse("u^2 + 2*u*x2^2", big)

    def test_identity(self):
        p = P("x1^3*x2 - 7")
        assert substitute(p, {v: Polynomial.variable(v, XY) for v in XY}) == p

    def test_zero_image(self):
        assert substitute(P("x1*x2 + x2"), {"x1": Polynomial.zero(XY)}) == P("x2")


class TestParseAndJson:
    def test_parse_forms(self):
        p = parse("3/2*x1^2 - x2^(-1) + x1**2", XY, laurent=True)
        assert p.terms == {(2, 0): Fraction(5, 2), (0, -1): -1}
        assert P("(x1 + 1)^2") == P("x1^2 + 2*x1 + 1")

    @pytest.mark.parametrize("text", ["x1 + ", "x1 ** ", "x3", "(x1", "x1 $ 2", "x1^x2"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            P(text)

    @settings(max_examples=200)
    @given(polynomials(laurent=True))
    def test_string_round_trip(self, p):
        assert parse(str(p), XY, laurent=True) == p

    @given(polynomials(laurent=True))
    def test_json_round_trip(self, p):
        assert Polynomial.from_json(p.to_json()) == p

    def test_json_errors_carry_pointer(self):
        bad = {"vars": ["x1"], "terms": [{"c": "1", "e": [-1]}]}
        with pytest.raises(SchemaError) as info:
            Polynomial.from_json(bad, pointer="/inputs/p")
        assert info.value.pointer == "/inputs/p/terms/0/e"
        with pytest.raises(SchemaError):
            Polynomial.from_json({"vars": ["x1"], "terms": [{"c": "1", "e": [1]}, {"c": "2", "e": [1]}]})

    def test_embed(self):
        assert P("x1").embed(("x0", "x1", "x2")) == parse("x1", ("x0", "x1", "x2"))
        with pytest.raises(VariableMismatch):
            P("x2").embed(("x1",))

    def test_evaluate(self):
        assert P("x1^2 - x2^3").evaluate((Fraction(1, 2), 2)) == Fraction(-31, 4)
