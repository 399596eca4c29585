"""Affine Bezout bounds and exact fiber counts for plane maps."""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .degfun import NEG_INF, Quasidegree, degree_to_json
from .errors import (
    InvalidStep,
    InvariantViolation,
    NonpositiveComponentDegree,
    NonpositiveWeight,
    NotBivariate,
    NotCommonMultiple,
    PartsDisagree,
    ShearFailure,
)
from .iterate import IteratedSemidegree
from .poly import Polynomial, as_rational, format_rational, resultant_bivariate, substitute
from .polytope import hull


@dataclass(frozen=True)
class BezoutData:
    degree_ratio: Fraction
    provenance: str
    detail: str = ""

    def __post_init__(self):
        if self.degree_ratio <= 0:
            raise InvalidStep(f"degree ratio must be positive, got {self.degree_ratio}")

    def to_json(self):
        return {"degree_ratio": format_rational(self.degree_ratio), "provenance": self.provenance, "detail": self.detail}


def weighted_ratio(weights):
    weights = [as_rational(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise NonpositiveWeight(f"weights must be positive, got {[format_rational(w) for w in weights]}")
    return BezoutData(1 / prod(weights, start=Fraction(1)), "WeightedFormula",
                      "1/(" + "*".join(format_rational(w) for w in weights) + ")")


def iterated_ratio_values(weights, es, ws):
    """prod(e_j) / (prod(d_i) * prod(w_j))."""
    weights = [as_rational(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise NonpositiveWeight(f"weights must be positive, got {weights}")
    for e, w in zip(es, ws):
        if not (0 < w < e):
            raise InvalidStep(f"step needs 0 < w < e, got w={w}, e={e}")
    num = prod((Fraction(e) for e in es), start=Fraction(1))
    den = prod(weights, start=Fraction(1)) * prod((Fraction(w) for w in ws), start=Fraction(1))
    factors = [format_rational(Fraction(x)) for x in list(weights) + list(ws)]
    detail = f"{format_rational(num)}/(" + "*".join(factors) + ")"
    return BezoutData(num / den, "IteratedFormula" if es else "WeightedFormula", detail)


def iterated_ratio(d):
    if not isinstance(d, IteratedSemidegree):
        raise InvalidStep("iterated_ratio needs an iterated semidegree")
    for j, s in enumerate(d.steps):
        if s.e != d.truncate(j).value(s.h):
            raise InvalidStep(f"cached e for step {j + 1} is stale")
    return iterated_ratio_values(d.base.weights, [s.e for s in d.steps], [s.w for s in d.steps])


def bezout_bound(data, delta, fs):
    """degree_ratio * prod(delta(f_i)); for quasidegrees all parts must agree on each f_i."""
    if len(fs) != delta.nvars:
        raise NotBivariate(f"need {delta.nvars} polynomials, got {len(fs)}")
    values = []
    for f in fs:
        if isinstance(delta, Quasidegree) and len(delta.parts) > 1:
            pv = delta.part_values(f)
            if len(set(pv)) != 1:
                raise PartsDisagree(f"parts disagree on {f}: {[degree_to_json(v) for v in pv]}")
        v = delta.value(f)
        if v == NEG_INF or v <= 0:
            raise NonpositiveComponentDegree(f"delta({f}) = {degree_to_json(v)} is not positive")
        values.append(Fraction(v))
    return data.degree_ratio * prod(values, start=Fraction(1))


# -- fiber counting -----------------------------------------------------------

INFINITE = "Infinite"


@dataclass
class FiberCountResult:
    count: object
    method: str
    shear: int
    cross_shear: int = None
    attempts: int = 1

    @property
    def infinite(self):
        return self.count == INFINITE

    def to_json(self):
        return {"count": self.count, "method": self.method, "shear": self.shear,
                "cross_shear": self.cross_shear, "attempts": self.attempts}


def _shear(p, lam, target, other):
    """p with target -> target + lam*other."""
    t = Polynomial.variable(target, p.vars) + Polynomial.variable(other, p.vars) * lam
    return substitute(p, {target: t}, p.vars, False)


def _lc_constant(p, var):
    return p.coefficients_in(var)[p.degree_in(var)].is_constant()


def sheared_resultant(g1, g2, keep, elim, lam):
    """Res_elim of both polynomials after keep -> keep + lam*elim, or None if a leading coefficient in elim is not constant."""
    s1, s2 = _shear(g1, lam, keep, elim), _shear(g2, lam, keep, elim)
    if not (_lc_constant(s1, elim) and _lc_constant(s2, elim)):
        return None
    return resultant_bivariate(s1, s2, elim)


def _eliminate_count(g1, g2, keep, elim, lam):
    r = sheared_resultant(g1, g2, keep, elim, lam)
    if r is None:
        return None
    if r.is_zero():
        return INFINITE
    return r.degree_in(keep)


def count_fiber_2d(f1, f2, a=(0, 0), seed=0, retries=3, lam_range=1000):
    """Number of points (with multiplicity) of {f1 = a1, f2 = a2} over the algebraic closure."""
    if f1.nvars != 2 or f2.nvars != 2 or f1.vars != f2.vars:
        raise NotBivariate("count_fiber_2d needs two polynomials in the same two variables")
    if f1.laurent or f2.laurent:
        raise NotBivariate("count_fiber_2d works in the polynomial ring")
    x, y = f1.vars
    g1, g2 = f1 - as_rational(a[0]), f2 - as_rational(a[1])
    if g1.is_zero() or g2.is_zero():
        return FiberCountResult(INFINITE, "ShearResultant", 0)
    if g1.is_constant() or g2.is_constant():
        return FiberCountResult(0, "ShearResultant", 0)
    rng = random.Random(seed)
    results = {}
    for order, (keep, elim) in enumerate(((x, y), (y, x))):
        for attempt in range(1, retries + 1):
            lam = rng.randint(1, lam_range) * rng.choice((1, -1))
            c = _eliminate_count(g1, g2, keep, elim, lam)
            if c is not None:
                results[order] = (c, lam, attempt)
                break
        else:
            raise ShearFailure(f"no shear out of {retries} made the leading coefficients constant")
    (c1, lam1, att), (c2, lam2, _) = results[0], results[1]
    if c1 != c2:
        raise InvariantViolation(f"eliminations disagree: {c1} (shear {lam1}) vs {c2} (shear {lam2})")
    return FiberCountResult(c1, "ShearResultant", lam1, lam2, att)


@dataclass
class FiberReport:
    bound: Fraction
    count: object
    point: tuple
    preservation: str = None

    @property
    def equality(self):
        return self.count != INFINITE and Fraction(self.count) == self.bound

    def to_json(self):
        out = {
            "a": [format_rational(x) for x in self.point],
            "bound": format_rational(self.bound),
            "count": self.count,
            "equality": self.equality,
        }
        if self.preservation is not None:
            out["preservation"] = self.preservation
        return out


def okounkov_body_weighted(weights, d):
    """The simplex {x >= 0 : sum x_j d_j <= d}."""
    weights = [int(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise NonpositiveWeight(f"weights must be positive, got {weights}")
    if d <= 0 or any(d % w for w in weights):
        raise NotCommonMultiple(f"{d} is not a positive common multiple of {weights}")
    n = len(weights)
    verts = [tuple(Fraction(0) for _ in range(n))]
    for j, w in enumerate(weights):
        verts.append(tuple(Fraction(d, w) if i == j else Fraction(0) for i in range(n)))
    return hull(verts)
