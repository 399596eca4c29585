"""Sparse systems, face systems and the BKK equality test in two variables.

Only edge normals of the Newton polygon of the sum need checking: for a
direction in the interior of a maximal normal cone every face is a single
exponent, and a monomial has no zero on the torus.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import univariate as U
from .bezout import sheared_resultant
from .errors import (
    DegenerateSum,
    DimensionTooHigh,
    InfinitelyManyRoots,
    InvariantViolation,
    NotBivariate,
    ShearFailure,
    ZeroDirection,
)
from .poly import Polynomial, format_rational
from .polytope import MAX_DIM, hull, minkowski_sum, mixed_volume, primitive


@dataclass
class SparseSystem:
    polys: list

    def __post_init__(self):
        self.polys = [p if p.laurent else p.as_laurent() for p in self.polys]
        if not self.polys:
            raise ValueError("empty system")
        if any(p.is_zero() for p in self.polys):
            raise ValueError("zero polynomial in a sparse system")
        if len({p.vars for p in self.polys}) != 1:
            raise NotBivariate("all polynomials must share one ring")
        if len(self.polys) != self.polys[0].nvars:
            raise ValueError(f"{len(self.polys)} polynomials in {self.polys[0].nvars} variables")

    @property
    def n(self):
        return len(self.polys)

    @property
    def vars(self):
        return self.polys[0].vars

    @property
    def supports(self):
        return [sorted(p.terms) for p in self.polys]

    def newton_polytopes(self):
        return [hull(s) for s in self.supports]

    def to_json(self):
        return [p.to_json() for p in self.polys]


def bkk_bound(s):
    if s.n > MAX_DIM:
        raise DimensionTooHigh(f"mixed volumes implemented up to dimension {MAX_DIM}")
    return mixed_volume(s.newton_polytopes())


def _require_2d(s):
    if s.n != 2:
        raise NotBivariate(f"this check is exact for two variables only, got {s.n}")


def face_directions(s):
    """alpha = -eta over the outward edge normals eta of conv(A_1 + A_2), in facet order."""
    _require_2d(s)
    P1, P2 = s.newton_polytopes()
    P = minkowski_sum(P1, P2)
    if P.degenerate:
        raise DegenerateSum(f"the summed Newton polygon has dimension {P.affine_dim}")
    return [tuple(-x for x in f.normal) for f in P.facets]


@dataclass
class FaceSystem:
    direction: tuple
    polys: list
    supports: list

    def to_json(self):
        return {"direction": list(self.direction), "polys": [str(p) for p in self.polys],
                "supports": [[list(e) for e in sup] for sup in self.supports]}


def face_system(s, alpha):
    alpha = tuple(alpha)
    if not any(alpha):
        raise ZeroDirection("the direction must be nonzero")
    polys, sups = [], []
    for p in s.polys:
        best = min(sum(a * b for a, b in zip(alpha, e)) for e in p.terms)
        keep = {e: c for e, c in p.terms.items() if sum(a * b for a, b in zip(alpha, e)) == best}
        polys.append(Polynomial(p.vars, keep, True))
        sups.append(sorted(keep))
    return FaceSystem(alpha, polys, sups)


def _line_poly(p, v):
    """Write p (support on a line parallel to v) as x^b0 * g(x^v); returns g, low degree first."""
    k = next(i for i, x in enumerate(v) if x)
    base = min(p.terms, key=lambda e: e[k] * v[k])
    g = {}
    for e, c in p.terms.items():
        t = Fraction(e[k] - base[k], v[k])
        if t.denominator != 1 or any(e[i] - base[i] != t * v[i] for i in range(len(v))):
            raise ValueError(f"support of {p} is not on a line parallel to {v}")
        g[int(t)] = c
    return [g.get(i, 0) for i in range(max(g) + 1)]


@dataclass
class DegeneracyReport:
    nondegenerate: bool
    witnesses: list = field(default_factory=list)
    directions: list = field(default_factory=list)

    def to_json(self):
        return {
            "verdict": "NondegenerateEverywhere" if self.nondegenerate else "DegenerateAt",
            "directions": [list(a) for a in self.directions],
            "witnesses": self.witnesses,
        }


def _directions_for_check(s):
    try:
        return face_directions(s)
    except DegenerateSum:
        P = minkowski_sum(*s.newton_polytopes())
        if P.affine_dim == 0:
            return []
        a, b = P.vertices
        v = primitive(tuple(y - x for x, y in zip(a, b)))
        return [(-v[1], v[0]), (v[1], -v[0])]


def check_degeneracy(s):
    """For each relevant direction, test whether the face system has a torus zero via gcd of g_1(t), g_2(t)."""
    _require_2d(s)
    dirs = _directions_for_check(s)
    witnesses = []
    for alpha in dirs:
        fs = face_system(s, alpha)
        v = (-alpha[1], alpha[0])
        g1, g2 = (_line_poly(p, v) for p in fs.polys)
        g = U.gcd_poly(g1, g2)
        if len(g) > 1:
            witnesses.append({
                "direction": list(alpha),
                "face_polys": [str(p) for p in fs.polys],
                "t": "x^(" + ",".join(str(x) for x in v) + ")",
                "gcd": str(Polynomial.from_univariate(g, "t", ("t",))),
            })
    return DegeneracyReport(not witnesses, witnesses, dirs)


def _restriction(p, var_index):
    """p with variable ``var_index`` set to 0, as a dense univariate list in the other variable."""
    other = 1 - var_index
    out = {}
    for e, c in p.terms.items():
        if e[var_index] == 0:
            out[e[other]] = c
    return U.trim(out.get(i, 0) for i in range(max(out) + 1)) if out else []


@dataclass
class TorusCount:
    count: int
    affine_count: int
    axis_mass: int
    shear: int

    def to_json(self):
        return {"count": self.count, "affine_count": self.affine_count, "axis_mass": self.axis_mass, "shear": self.shear}


def _torus_count_once(g1, g2, lam):
    x, y = g1.vars
    r = sheared_resultant(g1, g2, x, y, lam)
    if r is None:
        return None
    if r.is_zero():
        raise InfinitelyManyRoots("the system has a common curve component")
    R = r.univariate(x)
    # axis x1 = 0: points (0, q) project to x1' = -lam*q
    G1 = U.gcd_poly(_restriction(g1, 0), _restriction(g2, 0))
    H1 = [c * Fraction(-1, lam) ** k for k, c in enumerate(G1)]
    # axis x2 = 0: points (q, 0) project to x1' = q
    H2 = U.gcd_poly(_restriction(g1, 1), _restriction(g2, 1))
    S = U.mul(H1 or [1], H2 or [1])
    mass = U.root_multiplicity_mass(R, S)
    return TorusCount(U.degree(R) - mass, U.degree(R), mass, lam)


def count_torus_roots(s, seed=0, retries=3, lam_range=1000):
    """Roots in (k*)^2 with multiplicity, via a sheared resultant minus the roots on the coordinate axes.

    Two independent shears must agree; a disagreement (an accidental
    projection collision) triggers another pair.
    """
    _require_2d(s)
    g = []
    for p in s.polys:
        shift = tuple(-m for m in p.min_exponents())
        g.append(p.scale_exponents(shift).as_polynomial())
    g1, g2 = g
    if g1.is_constant() or g2.is_constant():
        return TorusCount(0, 0, 0, 0)
    rng = random.Random(seed)
    prev = None
    for _ in range(2 * retries + 2):
        lam = rng.randint(1, lam_range) * rng.choice((1, -1))
        res = _torus_count_once(g1, g2, lam)
        if res is None:
            continue
        if prev is not None and prev.count == res.count:
            return prev
        prev = res
    raise ShearFailure("shears did not produce two agreeing torus counts")


@dataclass
class VerdictReport:
    bound: Fraction
    count: int
    degeneracy: DegeneracyReport
    torus: TorusCount

    @property
    def equality(self):
        return Fraction(self.count) == self.bound

    @property
    def consistent(self):
        return self.equality == self.degeneracy.nondegenerate

    def to_json(self):
        return {
            "bound": format_rational(self.bound),
            "count": self.count,
            "equality": self.equality,
            "degeneracy": self.degeneracy.to_json(),
            "consistent": self.consistent,
            "torus_count": self.torus.to_json(),
            "interpretation": ("count equals the mixed volume exactly when no face system has a torus zero; "
                               "equivalently the toric completion of the summed polygon keeps the zero set away "
                               "from infinity"),
        }


def equality_verdict(s, seed=0, retries=3):
    _require_2d(s)
    bound = bkk_bound(s)
    torus = count_torus_roots(s, seed=seed, retries=retries)
    if torus.count > bound:
        raise InvariantViolation(f"torus count {torus.count} exceeds the BKK bound {bound}")
    return VerdictReport(bound, torus.count, check_degeneracy(s), torus)


def dense_support_poly(vars, degree, rng, coeff_range=50, bidegree=None):
    """Random coefficients on all monomials of total degree <= degree (or a bidegree box)."""
    terms = {}
    if bidegree is not None:
        exps = [(i, j) for i in range(bidegree[0] + 1) for j in range(bidegree[1] + 1)]
    else:
        exps = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    for e in exps:
        c = 0
        while c == 0:
            c = rng.randint(-coeff_range, coeff_range)
        terms[e] = c
    return Polynomial(vars, terms, True)

