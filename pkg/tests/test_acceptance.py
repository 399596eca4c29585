"""Acceptance criteria 1-9, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary (see conftest.py) and also to stdout when run with ``-s``.
"""

import random
import time
from fractions import Fraction
from itertools import product
from math import factorial, lcm

import pytest

from gradus.bernstein import bkk_bound, dense_support_poly, equality_verdict, SparseSystem
from gradus.bezout import (
    bezout_bound,
    count_fiber_2d,
    iterated_ratio,
    okounkov_body_weighted,
    weighted_ratio,
)
from gradus.degfun import (
    SampleSpec,
    WeightedDegree,
    check_degree_like,
    check_power_law,
    check_semidegree,
    leading_form,
    random_polynomial,
)
from gradus.poly import MonomialOrder, Polynomial, divide_with_remainder, parse, resultant_bivariate
from gradus.polytope import gauge, hull, polytope_quasidegree, volume
from gradus.rees import (
    ClosureRule,
    FiltrationSpec,
    counterexample_filtration,
    fiber_hypersurfaces,
    normalized_degree_probe,
    preserves_at_infinity,
)

import oracles
from bernstein_corpus import VARS as BXY, corpus
from helpers import XY, P, cusp_iteration, fk_map, random_rational_point, sheared_quasidegree

RESULTS = []


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def xy(text):
    return parse(text, ("x", "y"))


def test_criterion_1_iterated_values():
    start = time.perf_counter()
    d = cusp_iteration()
    values = [d.value(P(t)) for t in ("x1", "x2", "x1^2 - x2^3")]
    elapsed = time.perf_counter() - start
    record(1, values == [3, 2, 1] and elapsed < 1, f"values {values}, {elapsed:.3f}s")


def test_criterion_2_ratios():
    it = iterated_ratio(cusp_iteration()).degree_ratio
    wt = weighted_ratio([3, 2]).degree_ratio
    record(2, it == 1 and wt == Fraction(1, 6), f"iterated {it}, weighted {wt}")


def test_criterion_3_fiber_counts():
    start = time.perf_counter()
    rng = random.Random(3)
    d = cusp_iteration()
    data = iterated_ratio(d)
    failures = []
    for k in (1, 2, 3):
        fs = fk_map(k)
        bound = bezout_bound(data, d, fs)
        weighted = bezout_bound(weighted_ratio([3, 2]), WeightedDegree([3, 2], vars=XY), fs)
        for _ in range(5):
            a = random_rational_point(rng)
            n = count_fiber_2d(*fs, a=a, seed=rng.randrange(10**6)).count
            if not (n == 3 * k == bound and n < weighted == 12 * k):
                failures.append((k, a, n, bound, weighted))
    elapsed = time.perf_counter() - start
    record(3, not failures and elapsed < 10, f"15 fibers, failures {failures}, {elapsed:.2f}s")


def _powers(*texts):
    return FiltrationSpec(("x", "y"), {1: [xy(t) for t in texts]}, ClosureRule.POWERS)


def test_criterion_4_preservation():
    rng = random.Random(4)
    cubic = _powers("1", "x", "y", "x^3")
    f = [xy("x"), xy("y + x^3")]
    points = [(0, 0)] + [random_rational_point(rng) for _ in range(3)]
    cubic_ok = all(preserves_at_infinity(cubic, fiber_hypersurfaces(f, a), d_max=4).certified for a in points)

    axes = _powers("1", "x", "y", "x*y", "x^2*y^2")
    g = [xy("x"), xy("y")]
    verdicts = {a: preserves_at_infinity(axes, fiber_hypersurfaces(g, a), d_max=8).certified
                for a in [(0, 1), (1, 0), (1, 1)]}
    axes_ok = verdicts == {(0, 1): True, (1, 0): True, (1, 1): False}

    hs = [P("(x1^2 - x2^4)^2 + x1*x2"), P("(x1^2 - x2^4)^3 + x1*x2")]
    quasi_ok = all(preserves_at_infinity(counterexample_filtration(), fiber_hypersurfaces(hs, random_rational_point(rng))).certified
                   for _ in range(3))
    record(4, cubic_ok and axes_ok and quasi_ok, f"cubic {cubic_ok}, axes {verdicts}, quasidegree {quasi_ok}")


def test_criterion_5_quasidegree():
    q = sheared_quasidegree()
    texts = ["x1", "x2", "x1^2 - x2^4", "(x1^2 - x2^4)^2 + x1*x2", "(x1^2 - x2^4)^3 + x1*x2"]
    values = [q.value(P(t)) for t in texts]
    spec = SampleSpec(degree_bound=4, random_pairs=150)
    report = check_semidegree(q, spec)
    witness = next((v for v in report.violations if v["axiom"] == "product_equality"), None)
    witness_ok = False
    if witness is not None:
        wf, wg = P(witness["f"]), P(witness["g"])
        witness_ok = q.value(wf * wg) < q.value(wf) + q.value(wg)
    parts_ok = all(check_semidegree(part, spec).passed for part in q.parts)
    ok = values == [2, 1, 1, 3, 3] and not report.passed and witness_ok and parts_ok
    pair = None if witness is None else (witness["f"], witness["g"])
    record(5, ok, f"values {values}, witness {pair}, parts pass {parts_ok}")


def test_criterion_6_probe():
    F = FiltrationSpec(("x",), {2: [parse("x", ("x",))], 3: [parse("x^2", ("x",))]})
    probe = normalized_degree_probe(F, parse("x", ("x",)))
    probe_ok = (probe.value == Fraction(3, 2) and probe.stable and probe.stabilized_at <= 4
                and probe.denominator == 2)

    def odd_even(e):
        k = e[0]
        return Fraction(3 * k, 2) if k % 2 == 0 else Fraction(3 * (k - 1), 2) + 2

    from gradus.degfun import MonomialDegree
    report = check_degree_like(MonomialDegree(odd_even, 1, "odd-even"), SampleSpec(degree_bound=6, random_pairs=50))
    flagged = {"f": "x1", "g": "x1", "lhs": 3, "rhs": 4} in report.strict_products
    record(6, probe_ok and flagged,
           f"limit {probe.value} at m={probe.stabilized_at}, e={probe.denominator}, strict product flagged {flagged}")


def test_criterion_7_bernstein():
    start = time.perf_counter()
    systems = corpus()
    inconsistent = [(kind, str(s.polys)) for kind, _, s in systems if not equality_verdict(s).consistent]
    rng = random.Random(7)
    mv_bad = []
    for d1, d2 in product(range(1, 4), repeat=2):
        s = SparseSystem([dense_support_poly(BXY, d1, rng), dense_support_poly(BXY, d2, rng)])
        if bkk_bound(s) != d1 * d2:
            mv_bad.append((d1, d2))
    elapsed = time.perf_counter() - start
    ok = len(systems) >= 20 and not inconsistent and not mv_bad and elapsed < 30
    record(7, ok, f"{len(systems)} systems, inconsistent {inconsistent}, dense MV mismatches {mv_bad}, {elapsed:.1f}s")


def test_criterion_8_polytope_oracle():
    shapes = {"square": [(1, 1), (-1, 1), (-1, -1), (1, -1)], "triangle": [(-1, -1), (2, -1), (-1, 2)]}
    mismatches = []
    axioms = {}
    spec = SampleSpec(degree_bound=6, random_pairs=200)
    for name, vertices in shapes.items():
        poly = hull(vertices)
        q = polytope_quasidegree(poly)
        for alpha in product(range(-5, 6), repeat=2):
            value = q.value(Polynomial.monomial(alpha, XY, laurent=True))
            if not value == oracles.brute_gauge_degree(vertices, alpha, q.k) == q.k * gauge(poly, alpha):
                mismatches.append((name, alpha))
        axioms[name] = check_degree_like(q, spec).passed and check_power_law(q, spec, m_max=6).passed
    record(8, not mismatches and all(axioms.values()), f"gauge mismatches {mismatches}, axioms {axioms}")


SEEDED = SampleSpec(degree_bound=4, random_pairs=1000, seed=9, max_terms=4, random_degree=3)


def _random_polys(seed, count, vars=XY, spec=SEEDED):
    rng = random.Random(seed)
    return [random_polynomial(rng, vars, spec) for _ in range(count)]


def _semidegree_multiplicativity():
    ds = [WeightedDegree([3, 2], vars=XY), sheared_quasidegree().parts[0], cusp_iteration()]
    fs, gs = _random_polys(11, 1000), _random_polys(12, 1000)
    return all(d.value(f * g) == d.value(f) + d.value(g) for d in ds for f, g in zip(fs, gs))


def _quasidegree_laws():
    q = sheared_quasidegree()
    fs, gs = _random_polys(21, 1000), _random_polys(22, 1000)
    for f, g in zip(fs, gs):
        vf, vg = q.value(f), q.value(g)
        if q.value(f * g) > vf + vg:
            return False
        if f + g and q.value(f + g) > max(vf, vg):
            return False
    spec = SampleSpec(degree_bound=3, random_pairs=1000, seed=23, max_terms=3, random_degree=3)
    return check_power_law(q, spec, m_max=6).passed


def _leading_form_multiplicativity():
    d = WeightedDegree([3, 2], vars=XY)
    fs, gs = _random_polys(31, 1000), _random_polys(32, 1000)
    return all(leading_form(d, f * g) == leading_form(d, f) * leading_form(d, g) for f, g in zip(fs, gs))


def _divide_round_trip():
    orders = [MonomialOrder.lex(), MonomialOrder.graded([3, 2])]
    fs, gs = _random_polys(41, 1000), _random_polys(42, 1000)
    for i, (f, g) in enumerate(zip(fs, gs)):
        order = orders[i % 2]
        q, r = divide_with_remainder(f, g, order)
        lead, _ = order.leading_term(g)
        if q * g + r != f or any(all(a >= b for a, b in zip(e, lead)) for e in r.terms):
            return False
    return True


def _resultant_antisymmetry():
    rng = random.Random(51)
    spec = SampleSpec(max_terms=3, random_degree=3)
    done = 0
    while done < 1000:
        p, q = random_polynomial(rng, XY, spec), random_polynomial(rng, XY, spec)
        var = XY[done % 2]
        if p.degree_in(var) < 1 or q.degree_in(var) < 1:
            continue
        sign = -1 if p.degree_in(var) * q.degree_in(var) % 2 else 1
        if resultant_bivariate(q, p, var) != resultant_bivariate(p, q, var) * sign:
            return False
        done += 1
    return True


def _okounkov():
    rng = random.Random(61)
    for i in range(10):
        n = 2 if i < 6 else 3
        weights = [rng.randint(1, 6) for _ in range(n)]
        d = lcm(*weights) * rng.randint(1, 2)
        body = okounkov_body_weighted(weights, d)
        if factorial(n) * volume(body) / Fraction(d) ** n != weighted_ratio(weights).degree_ratio:
            return False
    return True


def test_criterion_9_property_suites():
    suites = {
        "semidegree multiplicativity": _semidegree_multiplicativity,
        "quasidegree subadditivity and power law": _quasidegree_laws,
        "leading form multiplicativity": _leading_form_multiplicativity,
        "divide round-trip": _divide_round_trip,
        "resultant antisymmetry": _resultant_antisymmetry,
        "Okounkov consistency": _okounkov,
    }
    outcome, notes = {}, []
    for name, check in suites.items():
        start = time.perf_counter()
        outcome[name] = check()
        notes.append(f"{name} {'ok' if outcome[name] else 'FAILED'} in {time.perf_counter() - start:.1f}s")
    record(9, all(outcome.values()), "; ".join(notes))
