import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradus.bernstein import (
    SparseSystem,
    bkk_bound,
    check_degeneracy,
    count_torus_roots,
    dense_support_poly,
    equality_verdict,
    face_directions,
    face_system,
)
from gradus.errors import DegenerateSum, InfinitelyManyRoots, NotBivariate, ZeroDirection
from gradus.poly import Polynomial, parse
from gradus.polytope import hull, mixed_volume

import oracles
from bernstein_corpus import VARS, L, corpus


def system(a, b):
    return SparseSystem([L(a), L(b)])


class TestBound:
    def test_generic_lines(self):
        assert bkk_bound(system("1 + 2*x - y", "3 - x + 5*y")) == 1

    def test_dense_bidegree(self):
        rng = random.Random(3)
        s = SparseSystem([dense_support_poly(VARS, 0, rng, bidegree=(2, 3)),
                          dense_support_poly(VARS, 0, rng, bidegree=(2, 3))])
        assert bkk_bound(s) == 12
        assert count_torus_roots(s).count == 12

    def test_triangle_and_diagonal(self):
        s = system("1 + 2*x - 3*y", "4 - 5*x*y")
        expected = oracles.mixed_volume_2d([(0, 0), (1, 0), (0, 1)], [(0, 0), (1, 1)])
        assert bkk_bound(s) == expected == 2
        assert equality_verdict(s).count == 2

    @pytest.mark.parametrize("d1,d2", list(product(range(1, 4), repeat=2)))
    def test_dense_mixed_volume(self, d1, d2):
        A = [(i, j) for i in range(d1 + 1) for j in range(d1 + 1 - i)]
        B = [(i, j) for i in range(d2 + 1) for j in range(d2 + 1 - i)]
        assert mixed_volume([hull(A), hull(B)]) == d1 * d2

    @settings(max_examples=50)
    @given(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.sampled_from([((1, 1), (0, 1)), ((2, 1), (1, 1)), ((1, 0), (0, 1))]))
    def test_translation_and_unimodular_invariance(self, shift, matrix):
        s = system("1 + 2*x - 3*y + x*y^2", "4 - 5*x*y + x^2")
        (a, b), (c, d) = matrix

        def move(p, t):
            terms = {(a * e[0] + b * e[1] + t[0], c * e[0] + d * e[1] + t[1]): v for e, v in p.terms.items()}
            return Polynomial(VARS, terms, True)

        moved = SparseSystem([move(s.polys[0], shift), move(s.polys[1], (0, 0))])
        assert bkk_bound(moved) == bkk_bound(s)
        assert check_degeneracy(moved).nondegenerate == check_degeneracy(s).nondegenerate


class TestFaces:
    def test_square_directions(self):
        s = system("1 + x + y + x*y", "2 - x + 3*y + 5*x*y")
        assert sorted(face_directions(s)) == sorted([(1, 0), (-1, 0), (0, 1), (0, -1)])

    def test_simplex_directions(self):
        assert sorted(face_directions(system("1 + x + y", "3 - x + 2*y"))) == sorted([(1, 0), (0, 1), (-1, -1)])

    def test_segments_make_square(self):
        assert len(face_directions(system("1 + x", "1 + y"))) == 4

    def test_degenerate_sum(self):
        with pytest.raises(DegenerateSum):
            face_directions(system("1 + x*y", "2 + x*y"))

    def test_face_system(self):
        s = system("1 + x + y", "1 + x + y")
        assert face_system(s, (1, 0)).polys[0] == L("1 + y")
        assert face_system(s, (-1, -1)).polys[0] == L("x + y")
        assert face_system(s, (1, 1)).polys[0] == L("1")
        with pytest.raises(ZeroDirection):
            face_system(s, (0, 0))

    @settings(max_examples=60)
    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_interior_directions_give_monomials(self, a, b):
        if (a, b) == (0, 0):
            return
        s = system("1 + 2*x - 3*y + x*y^2", "4 - 5*x*y + x^2")
        dirs = set(face_directions(s))
        if (a, b) in dirs or any(a * d[1] == b * d[0] and a * d[0] + b * d[1] > 0 for d in dirs):
            return
        assert all(p.is_monomial() for p in face_system(s, (a, b)).polys)


class TestDegeneracy:
    def test_shared_face(self):
        report = check_degeneracy(system("1 + x + y", "2 + x + y"))
        assert not report.nondegenerate
        w = report.witnesses[0]
        assert w["direction"] == [-1, -1] and w["face_polys"] == ["x + y", "x + y"]

    def test_monomials(self):
        assert check_degeneracy(system("3*x*y", "x^2")).nondegenerate

    def test_generic(self):
        rng = random.Random(5)
        s = SparseSystem([dense_support_poly(VARS, 2, rng), dense_support_poly(VARS, 3, rng)])
        assert check_degeneracy(s).nondegenerate

    def test_needs_two_variables(self):
        xyz = ("x", "y", "z")
        s = SparseSystem([parse(t, xyz, True) for t in ("x + 1", "y + 1", "z + 1")])
        with pytest.raises(NotBivariate):
            check_degeneracy(s)


class TestVerdict:
    def test_generic_bilinear(self):
        rng = random.Random(9)
        s = SparseSystem([dense_support_poly(VARS, 0, rng, bidegree=(1, 1)),
                          dense_support_poly(VARS, 0, rng, bidegree=(1, 1))])
        v = equality_verdict(s)
        assert (v.bound, v.count, v.degeneracy.nondegenerate, v.consistent) == (2, 2, True, True)

    def test_degenerate_undercounts(self):
        v = equality_verdict(system("1 + x + y", "2 + x + y"))
        assert v.count < v.bound and v.consistent

    def test_parallel_supports(self):
        v = equality_verdict(system("1 + x*y", "1 + 2*x*y"))
        assert (v.bound, v.count, v.consistent) == (0, 0, True)

    def test_infinitely_many(self):
        with pytest.raises(InfinitelyManyRoots):
            equality_verdict(system("1 + x + y", "2 + 2*x + 2*y"))

    def test_axis_roots_are_excluded(self):
        # (x, y) = (0, -1) solves both but lies off the torus
        s = system("x + y^2 + y", "x*y + x - y - 1")
        t = count_torus_roots(s)
        assert t.axis_mass >= 1
        assert t.count == t.affine_count - t.axis_mass

    @pytest.mark.parametrize("case", range(len(corpus())))
    def test_corpus_consistency(self, case):
        kind, _, s = corpus()[case]
        v = equality_verdict(s)
        assert v.consistent
        if kind == "face-degenerate":
            assert not v.degeneracy.nondegenerate and v.count < v.bound
        if kind in ("dense", "bidegree"):
            assert v.equality

    def test_corpus_size_and_counts(self):
        systems = corpus()
        assert len(systems) >= 20
        for kind, _, s in systems:
            if kind in ("dense", "face-degenerate"):
                polys = [p.as_polynomial() for p in s.polys]
                affine = oracles.count_solutions(polys[0], polys[1], (0, 0))
                assert count_torus_roots(s).count <= affine
