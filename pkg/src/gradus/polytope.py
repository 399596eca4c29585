"""Exact rational polytopes in dimension at most 3.

Facets carry primitive outward integer normals, so a polytope is
``{x : <eta, x> <= c}`` over its facets.  Faces in a direction alpha are
taken at the MINIMUM of <alpha, .>, matching the face systems of sparse
polynomial systems.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, gcd, lcm

from .degfun import Quasidegree, WeightedDegree
from .errors import DimensionMismatch, DimensionTooHigh, InvariantViolation, OriginNotInterior, SchemaError, ZeroDirection
from .poly import as_rational, format_rational

MAX_DIM = 3


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector with the same direction."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints))
    if g == 0:
        raise ZeroDirection("zero vector has no primitive direction")
    return tuple(x // g for x in ints)


def _rank(vectors):
    rows = [list(map(Fraction, v)) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: Fraction
    vertices: tuple

    def to_json(self):
        return {
            "normal": list(self.normal),
            "offset": format_rational(self.offset),
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
        }


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple
    facets: tuple = ()
    affine_dim: int = 0
    triangles: tuple = field(default=(), repr=False, compare=False)

    @property
    def degenerate(self):
        return self.affine_dim < self.dim

    @property
    def full_dimensional(self):
        return not self.degenerate

    def contains(self, point):
        if self.degenerate:
            raise ValueError("membership through the H-representation needs a full-dimensional polytope")
        return all(_dot(f.normal, point) <= f.offset for f in self.facets)

    def to_json(self):
        return {
            "dim": self.dim,
            "affine_dim": self.affine_dim,
            "degenerate": self.degenerate,
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
            "facets": [f.to_json() for f in self.facets],
            "volume": format_rational(volume(self)),
        }

    @classmethod
    def from_json(cls, obj, pointer=""):
        if not isinstance(obj, dict) or "vertices" not in obj:
            raise SchemaError("polytope needs a 'vertices' list", pointer)
        pts = []
        for i, v in enumerate(obj["vertices"]):
            try:
                pts.append(tuple(as_rational(x) for x in v))
            except (TypeError, ValueError) as exc:
                raise SchemaError(str(exc), f"{pointer}/vertices/{i}") from None
        if not pts:
            raise SchemaError("polytope needs at least one vertex", f"{pointer}/vertices")
        if len({len(p) for p in pts}) != 1:
            raise SchemaError("vertices have different lengths", f"{pointer}/vertices")
        return hull(pts)


def hull(points):
    """Convex hull of rational points in R^n, n <= 3."""
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise ValueError("hull of an empty point set")
    n = len(pts[0])
    if n > MAX_DIM:
        raise DimensionTooHigh(f"hulls are implemented up to dimension {MAX_DIM}, got {n}")
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of different dimensions")
    adim = _rank([_sub(p, pts[0]) for p in pts[1:]]) if len(pts) > 1 else 0
    if n == 0:
        return Polytope(0, (pts[0],), (), 0)
    if adim < n:
        return Polytope(n, tuple(_degenerate_vertices(pts, adim)), (), adim)
    if n == 1:
        lo, hi = pts[0], pts[-1]
        facets = (Facet((-1,), -lo[0], (lo,)), Facet((1,), hi[0], (hi,)))
        P = Polytope(1, (lo, hi), facets, 1)
    elif n == 2:
        P = _hull2(pts)
    else:
        P = _hull3(pts)
    _validate(P)
    return P


def _chain2(pts):
    """Andrew's monotone chain; counterclockwise, collinear points dropped."""
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull2(pts):
    verts = _chain2(pts)
    facets = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        # outward normal of a ccw edge a->b is (dy, -dx)
        eta = primitive((b[1] - a[1], a[0] - b[0]))
        facets.append(Facet(eta, Fraction(_dot(eta, a)), (a, b)))
    return Polytope(2, tuple(verts), tuple(facets), 2)


def _degenerate_vertices(pts, adim):
    if adim == 0:
        return [pts[0]]
    if adim == 1:
        d = next(_sub(p, pts[0]) for p in pts[1:] if any(_sub(p, pts[0])))
        key = lambda p: _dot(_sub(p, pts[0]), d)
        return [min(pts, key=key), max(pts, key=key)]
    # planar set in R^3: hull of a coordinate projection that stays injective
    base = pts[0]
    others = [_sub(p, base) for p in pts[1:]]
    u = next(v for v in others if any(v))
    nrm = next(_cross(u, v) for v in others if any(_cross(u, v)))
    drop = max(range(3), key=lambda i: abs(nrm[i]))
    keep = [i for i in range(3) if i != drop]
    proj = {(p[keep[0]], p[keep[1]]): p for p in pts}
    return [proj[q] for q in _chain2(sorted(proj))]


def _orient(a, b, c, p):
    return _dot(_cross(_sub(b, a), _sub(c, a)), _sub(p, a))


def _hull3(pts):
    # initial tetrahedron
    a = pts[0]
    b = next(p for p in pts if p != a)
    c = next(p for p in pts if any(_cross(_sub(b, a), _sub(p, a))))
    d = next(p for p in pts if _orient(a, b, c, p) != 0)
    if _orient(a, b, c, d) > 0:
        b, c = c, b
    faces = {(a, b, c), (a, c, d), (a, d, b), (b, d, c)}
    for p in pts:
        if p in (a, b, c, d):
            continue
        visible = {f for f in faces if _orient(*f, p) > 0}
        if not visible:
            continue
        edges = set()
        for f in visible:
            for e in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
                edges.add(e)
        horizon = [e for e in edges if (e[1], e[0]) not in edges]
        faces -= visible
        for u, v in horizon:
            faces.add((u, v, p))
    triangles = tuple(sorted(faces))
    planes = {}
    for f in triangles:
        eta = primitive(_cross(_sub(f[1], f[0]), _sub(f[2], f[0])))
        planes.setdefault((eta, Fraction(_dot(eta, f[0]))), set()).update(f)
    tight = {}
    for (eta, _), members in planes.items():
        for v in members:
            tight.setdefault(v, []).append(eta)
    verts = sorted(v for v, normals in tight.items() if _rank(normals) == 3)
    vset = set(verts)
    facets = []
    for (eta, c), members in sorted(planes.items()):
        facets.append(Facet(eta, c, tuple(_order_facet([v for v in members if v in vset], eta))))
    return Polytope(3, tuple(verts), tuple(facets), 3, triangles)


def _order_facet(vs, eta):
    drop = max(range(3), key=lambda i: abs(eta[i]))
    keep = [i for i in range(3) if i != drop]
    proj = {(v[keep[0]], v[keep[1]]): v for v in vs}
    ring = [proj[q] for q in _chain2(sorted(proj))]
    # counterclockwise when seen from outside
    if len(ring) >= 3 and _dot(_cross(_sub(ring[1], ring[0]), _sub(ring[2], ring[0])), eta) < 0:
        ring.reverse()
    return ring


def _validate(P):
    for v in P.vertices:
        tight = 0
        for f in P.facets:
            s = _dot(f.normal, v)
            if s > f.offset:
                raise InvariantViolation(f"vertex {v} violates facet {f.normal}.x <= {f.offset}")
            tight += s == f.offset
        if tight < P.dim:
            raise InvariantViolation(f"vertex {v} lies on only {tight} facets")


def volume(P):
    """Exact Euclidean volume (zero for degenerate polytopes)."""
    if P.degenerate:
        return Fraction(0)
    if P.dim == 0:
        return Fraction(1)
    if P.dim == 1:
        return P.vertices[1][0] - P.vertices[0][0]
    if P.dim == 2:
        vs = P.vertices
        twice = sum(_cross2((0, 0), a, b) for a, b in zip(vs, vs[1:] + vs[:1]))
        return Fraction(twice, 2)
    if P.dim == 3:
        six = sum(_dot(a, _cross(b, c)) for a, b, c in P.triangles)
        return Fraction(six) / 6
    raise DimensionTooHigh(f"volume implemented up to dimension {MAX_DIM}")


def minkowski_sum(P, Q):
    if P.dim != Q.dim:
        raise DimensionMismatch(f"cannot add polytopes in R^{P.dim} and R^{Q.dim}")
    return hull([tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices])


def scale(P, r):
    r = Fraction(r)
    return hull([tuple(r * x for x in v) for v in P.vertices])


def mixed_volume(polys):
    """Inclusion-exclusion, normalized so that mixed_volume([P]*n) == n! * volume(P)."""
    polys = list(polys)
    n = len(polys)
    if n == 0:
        raise DimensionMismatch("mixed volume of no polytopes")
    if any(P.dim != n for P in polys):
        raise DimensionMismatch(f"mixed volume needs {n} polytopes in R^{n}")
    if n > MAX_DIM:
        raise DimensionTooHigh(f"mixed volumes implemented up to dimension {MAX_DIM}")
    total = Fraction(0)
    for size in range(1, n + 1):
        for subset in combinations(polys, size):
            S = reduce(minkowski_sum, subset)
            total += (-1) ** (n - size) * volume(S)
    return total


def face_in_direction(P, alpha):
    """Vertices minimizing <alpha, .>."""
    alpha = tuple(alpha)
    if len(alpha) != P.dim:
        raise DimensionMismatch(f"direction {alpha} does not live in R^{P.dim}")
    if not any(alpha):
        raise ZeroDirection("the direction must be nonzero")
    best = min(_dot(alpha, v) for v in P.vertices)
    return [v for v in P.vertices if _dot(alpha, v) == best]


def normalized_volume(P):
    return factorial(P.dim) * volume(P)


class PolytopeQuasidegree(Quasidegree):
    """k times the gauge of P: the max over facets of k <eta, a> / c."""

    def __init__(self, source, k, parts):
        super().__init__(parts)
        self.source = source
        self.k = k

    def describe(self):
        verts = ", ".join("(" + ",".join(format_rational(x) for x in v) + ")" for v in self.source.vertices)
        return f"polytope[k={self.k}; {verts}]"


def polytope_quasidegree(P, vars=None):
    if P.degenerate:
        raise OriginNotInterior("the polytope is not full-dimensional")
    if any(f.offset <= 0 for f in P.facets):
        raise OriginNotInterior("the origin is not in the interior of the polytope")
    k = lcm(*(f.offset.numerator for f in P.facets))
    parts = []
    for f in P.facets:
        w = [k * x / f.offset for x in f.normal]
        if any(x.denominator != 1 for x in w):
            raise InvariantViolation(f"scaled normal {w} is not integral")
        parts.append(WeightedDegree([int(x) for x in w], laurent_ok=True, vars=vars))
    return PolytopeQuasidegree(P, k, parts)


def gauge(P, alpha):
    """inf{r >= 0 : alpha in rP} for P with the origin in its interior."""
    return max(Fraction(0), max(Fraction(_dot(f.normal, alpha)) / f.offset for f in P.facets))
