from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gradus.linalg import EchelonSpace, fourier_motzkin_point, nullspace

vectors = st.dictionaries(st.integers(0, 5), st.integers(-4, 4), max_size=4)


def dense(vecs, width=6):
    return sympy.Matrix([[v.get(k, 0) for k in range(width)] for v in vecs]) if vecs else sympy.zeros(0, width)


@settings(max_examples=150)
@given(st.lists(vectors, max_size=6), vectors)
def test_span_matches_sympy_rank(vecs, target):
    space = EchelonSpace()
    for v in vecs:
        space.add(v)
    assert len(space) == dense(vecs).rank()
    inside = dense(vecs + [target]).rank() == dense(vecs).rank()
    assert space.contains(target) == inside


@settings(max_examples=150)
@given(st.lists(vectors, max_size=6), vectors)
def test_express_certifies(vecs, target):
    space = EchelonSpace(track=True)
    for i, v in enumerate(vecs):
        space.add(v, tag=i)
    combo = space.express(target)
    if combo is None:
        assert not space.contains(target)
        return
    total = {}
    for i, c in combo.items():
        for k, x in vecs[i].items():
            total[k] = total.get(k, 0) + c * x
    assert {k: v for k, v in total.items() if v} == {k: Fraction(v) for k, v in target.items() if v}


@given(st.lists(vectors, max_size=6))
def test_nullspace(columns):
    kernel = nullspace(columns)
    assert len(kernel) == len(columns) - dense(columns).rank()
    for coeffs in kernel:
        assert any(coeffs)
        for k in range(6):
            assert sum(c * col.get(k, 0) for c, col in zip(coeffs, columns)) == 0


constraint = st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(-3, 3))


@settings(max_examples=200)
@given(st.lists(constraint, max_size=6))
def test_fourier_motzkin_points_are_feasible(constraints):
    point = fourier_motzkin_point(constraints, 3)
    if point is not None:
        for row, b in constraints:
            assert sum(a * x for a, x in zip(row, point)) >= b


@settings(max_examples=200)
@given(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=3, max_size=3),
       st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(0, 3)), max_size=6))
def test_fourier_motzkin_finds_planted_solutions(planted, rows):
    constraints = [(a, sum(x * y for x, y in zip(a, planted)) - slack) for a, slack in rows]
    point = fourier_motzkin_point(constraints, 3)
    assert point is not None
    for row, b in constraints:
        assert sum(a * x for a, x in zip(row, point)) >= b


def test_fourier_motzkin_infeasible():
    assert fourier_motzkin_point([([1, 0], 1), ([-1, 0], 0)], 2) is None
    assert fourier_motzkin_point([([1, 1], 1), ([-1, 0], 0), ([0, -1], 0)], 2) is None
