"""Finitely generated filtrations, their Rees algebras and the preserves-at-infinity checker.

A filtration is given by explicit spans E_d added at level d.  Graded pieces
are computed level by level inside an echelon space keyed by exponents:

    F_0 = span{1}
    F_d = F_{d-1} + sum_e E_e * new_{d-e}     (new_0 = {1})

where new_j holds the vectors that enlarged F_j.  For PowersOfF1 only E_1 is
used and the recursion yields F_1^d; for Convolution it yields
F_{d-1} + sum_j F_j F_{d-j} + E_d.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import prod

from .degfun import NEG_INF, DegreeFunction, StabilizationReport, default_vars, normalize
from .errors import (
    CertificateIdentityFails,
    DegreeAboveBound,
    InvariantViolation,
    LeadingCoefficientZero,
    NotPrincipal,
    RingMismatch,
    ZeroPolynomial,
)
from .linalg import EchelonSpace, nullspace
from .poly import MonomialOrder, Polynomial, divide_with_remainder, format_rational, substitute

ABOVE_BOUND = "AboveBound"


class ClosureRule(str, Enum):
    POWERS = "PowersOfF1"
    CONVOLUTION = "Convolution"


def _vec(p):
    return dict(p.terms)


class FiltrationSpec:
    """Filtration of Q[vars] generated by explicit spans at positive levels.

    Graded pieces are memoized on first use; instances are not thread-safe.
    """

    def __init__(self, vars, level_generators, closure=ClosureRule.CONVOLUTION):
        self.vars = tuple(vars)
        self.closure = ClosureRule(closure)
        gens = {}
        for level, polys in dict(level_generators).items():
            level = int(level)
            if level <= 0:
                raise ValueError(f"generator levels must be positive, got {level}")
            clean = []
            for p in polys:
                if p.vars != self.vars:
                    raise RingMismatch(f"generator {p} lives in {p.vars}, expected {self.vars}")
                if p.laurent:
                    raise RingMismatch("filtrations are built on the polynomial ring")
                if not p.is_zero() and p not in clean:
                    clean.append(p)
            if clean:
                gens[level] = clean
        if self.closure == ClosureRule.POWERS and set(gens) - {1}:
            raise ValueError("PowersOfF1 filtrations take generators at level 1 only")
        self.level_generators = dict(sorted(gens.items()))
        one = Polynomial.constant(1, self.vars)
        space = EchelonSpace()
        space.add(_vec(one))
        self._spaces = [space]
        self._new = [[one]]

    @property
    def nvars(self):
        return len(self.vars)

    def _generators(self):
        if self.closure == ClosureRule.POWERS:
            return {1: [Polynomial.constant(1, self.vars)] + self.level_generators.get(1, [])}
        return self.level_generators

    def _extend_to(self, d):
        gens = self._generators()
        while len(self._spaces) <= d:
            level = len(self._spaces)
            space = self._spaces[-1].copy()
            new = []
            for e, polys in gens.items():
                if e > level:
                    break
                for g in polys:
                    for v in self._new[level - e]:
                        p = g * v
                        if space.add(_vec(p)):
                            new.append(p)
            self._spaces.append(space)
            self._new.append(new)

    def space(self, d):
        self._extend_to(d)
        return self._spaces[d]

    def basis(self, d):
        """A basis of F_d: the vectors that enlarged F_0, ..., F_d, in order."""
        self._extend_to(d)
        return [p for level in self._new[:d + 1] for p in level]

    def dimension(self, d):
        return len(self.space(d))

    def contains(self, f, d):
        if d < 0:
            return f.is_zero()
        return self.space(d).contains(_vec(f))

    def algebra_generators(self):
        """(g, e) pairs whose elements (g)_e generate the irrelevant ideal, (1)_1 first."""
        out = [(Polynomial.constant(1, self.vars), 1)]
        for e, polys in self.level_generators.items():
            out.extend((g, e) for g in polys if not g.is_constant())
        return out

    def piece(self, d):
        return GradedPiece(d, self.basis(d))

    def to_json(self):
        return {
            "vars": list(self.vars),
            "closure_rule": self.closure.value,
            "level_generators": {str(k): [str(p) for p in v] for k, v in self.level_generators.items()},
        }


@dataclass
class GradedPiece:
    level: int
    basis: list

    def to_json(self):
        return {"level": self.level, "dimension": len(self.basis), "basis": [str(p) for p in self.basis]}


def filtration_degree(F, f, d_max):
    """Smallest d <= d_max with f in F_d, or ABOVE_BOUND."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial lies in every F_d")
    if f.vars != F.vars:
        raise RingMismatch(f"{f} lives in {f.vars}, filtration in {F.vars}")
    vec = _vec(f)
    for d in range(d_max + 1):
        if F.space(d).contains(vec):
            return d
    return ABOVE_BOUND


class FiltrationDegree(DegreeFunction):
    """delta_F as a degree-like function; the search bound doubles up to ``cap``."""

    def __init__(self, F, start=8, cap=256):
        self.F = F
        self.vars = F.vars
        self.nvars = F.nvars
        self.start = start
        self.cap = cap

    def value(self, f):
        self.check_ring(f)
        if f.is_zero():
            return NEG_INF
        lo, hi = 0, self.start
        vec = _vec(f)
        while True:
            for d in range(lo, hi + 1):
                if self.F.space(d).contains(vec):
                    return d
            if hi >= self.cap:
                raise DegreeAboveBound(f"{f} is not in F_{self.cap}")
            lo, hi = hi + 1, min(2 * hi, self.cap)

    def describe(self):
        return f"filtration[{self.F.closure.value}]"


@dataclass(frozen=True)
class ReesElement:
    """(f)_d: f placed in degree d of the Rees algebra."""

    poly: Polynomial
    level: int
    filtration: FiltrationSpec = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        F = self.filtration
        if F is not None and not self.poly.is_zero() and not F.contains(self.poly, self.level):
            raise ValueError(f"{self.poly} is not in F_{self.level}")

    def __mul__(self, other):
        if isinstance(other, ReesElement):
            return ReesElement(self.poly * other.poly, self.level + other.level, self.filtration)
        return ReesElement(self.poly * other, self.level, self.filtration)

    __rmul__ = __mul__

    def __add__(self, other):
        if self.level != other.level:
            raise ValueError(f"cannot add elements of degrees {self.level} and {other.level}")
        return ReesElement(self.poly + other.poly, self.level, self.filtration)

    def __sub__(self, other):
        return self + other * -1

    @classmethod
    def t(cls, vars, filtration=None):
        return cls(Polynomial.constant(1, vars), 1, filtration)

    def to_json(self):
        return {"poly": str(self.poly), "level": self.level}


# -- certificates --------------------------------------------------------------

def _principal(q, where):
    if isinstance(q, Polynomial):
        return q
    q = list(q)
    if len(q) != 1:
        raise NotPrincipal(f"{where}: ideal with {len(q)} generators is not supported")
    return q[0]


@dataclass
class CertificateRow:
    exponent: int
    members: list
    remainder: Polynomial


@dataclass
class IntersectionCertificate:
    """x_i^{d_i} = f_{i,1} + ... + f_{i,m} + g_i with f_{i,j} in <q_j> and g_i in Q[x_i] of degree < d_i."""

    vars: tuple
    ideals: list
    rows: list

    def verify(self):
        ideals = [_principal(q, f"ideal {j}") for j, q in enumerate(self.ideals)]
        if len(self.rows) != len(self.vars):
            raise CertificateIdentityFails(f"need one row per variable, got {len(self.rows)}")
        for i, (name, row) in enumerate(zip(self.vars, self.rows)):
            if row.exponent < 1:
                raise CertificateIdentityFails(f"row {name}: exponent must be >= 1")
            if len(row.members) != len(ideals):
                raise CertificateIdentityFails(f"row {name}: {len(row.members)} members for {len(ideals)} ideals")
            g = row.remainder
            if any(e[k] for e in g.terms for k in range(len(self.vars)) if k != i):
                raise CertificateIdentityFails(f"row {name}: remainder {g} involves other variables", g)
            if not g.is_zero() and g.degree_in(name) >= row.exponent:
                raise CertificateIdentityFails(f"row {name}: remainder {g} has degree >= {row.exponent}", g)
            for j, (f, q) in enumerate(zip(row.members, ideals)):
                if f.is_zero():
                    continue
                if q.is_zero():
                    raise CertificateIdentityFails(f"row {name}: member {f} is not in the zero ideal", f)
                r = divide_with_remainder(f, q, MonomialOrder.graded([1] * len(self.vars)))[1]
                if r:
                    raise CertificateIdentityFails(f"row {name}: member {f} is not a multiple of {q}", r)
            residual = Polynomial.variable(name, self.vars) ** row.exponent - sum(row.members, g)
            if residual:
                raise CertificateIdentityFails(f"row {name}: identity fails, residual {residual}", residual)
        return ideals


def build_from_intersection_certificate(c):
    """F_1 = span{1, x_1..x_n, nonzero f_{i,j}}, F_k = F_1^k."""
    c.verify()
    gens = [Polynomial.constant(1, c.vars)] + [Polynomial.variable(v, c.vars) for v in c.vars]
    gens += [f for row in c.rows for f in row.members if not f.is_zero()]
    return FiltrationSpec(c.vars, {1: gens}, ClosureRule.POWERS)


@dataclass
class QuasifiniteCertificate:
    """sum_j g_{i,j}(f) x_i^{k_i - j} = 0 with g_{i,0} != 0, the g's in the symbols ``ysyms``."""

    vars: tuple
    components: list
    relations: list
    ysyms: tuple = None

    def __post_init__(self):
        n = len(self.components)
        self.ysyms = tuple(self.ysyms) if self.ysyms is not None else tuple(f"y{j + 1}" for j in range(n))
        if set(self.ysyms) & set(self.vars):
            raise CertificateIdentityFails(f"symbols {self.ysyms} clash with variables {self.vars}")

    def verify(self):
        if len(self.relations) != len(self.vars):
            raise CertificateIdentityFails(f"need one relation per variable, got {len(self.relations)}")
        if len(self.components) != len(self.ysyms):
            raise CertificateIdentityFails("one symbol per map component is required")
        assignment = dict(zip(self.ysyms, self.components))
        for name, gs in zip(self.vars, self.relations):
            if not gs or len(gs) < 2:
                raise CertificateIdentityFails(f"relation for {name} needs g_0 and at least one more coefficient")
            if gs[0].is_zero():
                raise LeadingCoefficientZero(f"relation for {name} has g_0 = 0")
            k = len(gs) - 1
            x = Polynomial.variable(name, self.vars)
            total = Polynomial.zero(self.vars)
            for j, g in enumerate(gs):
                total = total + substitute(g, assignment, self.vars, False) * x ** (k - j)
            if total:
                raise CertificateIdentityFails(f"relation for {name} does not vanish: residual {total}", total)


def _downset(alpha):
    out = [()]
    for a in alpha:
        out = [b + (t,) for b in out for t in range(a + 1)]
    return out


def build_from_quasifinite_certificate(c):
    """The filtration for generic fibers and the polynomial g = prod g_{i,0} (in the y symbols)."""
    c.verify()
    vars = tuple(c.vars)
    comps = list(c.components)

    def ypow(beta):
        return prod((f ** b for f, b in zip(comps, beta)), start=Polynomial.constant(1, vars))

    level1 = [Polynomial.constant(1, vars)] + [Polynomial.variable(v, vars) for v in vars] + comps
    extra = {}
    for name, gs in zip(vars, c.relations):
        x = Polynomial.variable(name, vars)
        k = len(gs) - 1
        for level in range(0, k + 1):
            g = gs[k - level]
            betas = sorted({b for alpha in g.terms for b in _downset(alpha)})
            target = level1 if level <= 1 else extra.setdefault(level, [])
            target.extend(x ** level * ypow(b) for b in betas)
    gens = {1: level1}
    gens.update(extra)
    genericity = prod((gs[0] for gs in c.relations), start=Polynomial.constant(1, c.ysyms))
    return FiltrationSpec(vars, gens, ClosureRule.CONVOLUTION), genericity


# -- preservation at infinity --------------------------------------------------

@dataclass
class GeneratorCertificate:
    generator: Polynomial
    level: int
    power: int = None
    combination: list = None

    @property
    def certified(self):
        return self.power is not None

    def to_json(self):
        out = {"generator": str(self.generator), "level": self.level, "certified": self.certified}
        if self.certified:
            out["power"] = self.power
            out["ideal_level"] = self.level * self.power
            out["combination"] = self.combination
        return out


@dataclass
class PreservationReport:
    verdict: str
    d_max: int
    n_max: int
    hypersurfaces: list
    generators: list

    @property
    def certified(self):
        return self.verdict == "Certified"

    def to_json(self):
        return {
            "verdict": self.verdict,
            "d_max": self.d_max,
            "N_max": self.n_max,
            "hypersurfaces": [str(h) for h in self.hypersurfaces],
            "generators": [g.to_json() for g in self.generators],
        }


class _IdealPieces:
    """Graded pieces I_d = sum_j (<h_j> cap F_d) + F_{d-1} with tracked spanning members."""

    def __init__(self, F, hs):
        self.F = F
        self.hs = hs
        self.order = MonomialOrder.graded([1] * F.nvars)
        self._cache = {}

    def level(self, d):
        hit = self._cache.get(d)
        if hit is not None:
            return hit
        F = self.F
        space = EchelonSpace(track=True)
        members = {}
        for k, b in enumerate(F.basis(d - 1)):
            tag = ("infinity", k)
            members[tag] = b
            space.add(_vec(b), tag)
        basis = F.basis(d)
        for j, h in enumerate(self.hs):
            rems = [_vec(divide_with_remainder(b, h, self.order)[1]) for b in basis]
            for idx, coeffs in enumerate(nullspace(rems)):
                m = Polynomial.zero(F.vars)
                for c, b in zip(coeffs, basis):
                    if c:
                        m = m + b * c
                if m.is_zero():
                    continue
                tag = ("hypersurface", j, idx)
                if space.add(_vec(m), tag):
                    members[tag] = m
        self._cache[d] = (space, members)
        return space, members

    def certify(self, target, d):
        """An explicit, re-verified combination for target in I_d, or None."""
        space, members = self.level(d)
        combo = space.express(_vec(target))
        if combo is None:
            return None
        total = Polynomial.zero(self.F.vars)
        out = []
        for tag in sorted(combo, key=lambda t: (t[0], t[1:])):
            c = combo[tag]
            m = members[tag]
            total = total + m * c
            if tag[0] == "hypersurface":
                h = self.hs[tag[1]]
                q, r = divide_with_remainder(m, h, self.order)
                if r or not self.F.contains(m, d):
                    raise InvariantViolation(f"member {m} is not in <{h}> cap F_{d}")
                out.append({"kind": "hypersurface", "index": tag[1], "coefficient": format_rational(c),
                            "member": str(m), "quotient": str(q)})
            else:
                if not self.F.contains(m, d - 1):
                    raise InvariantViolation(f"member {m} is not in F_{d - 1}")
                out.append({"kind": "infinity", "coefficient": format_rational(c), "member": str(m)})
        if total != target:
            raise InvariantViolation(f"combination for {target} expands to {total}")
        return out


def preserves_at_infinity(F, hypersurfaces, d_max=8, n_max=8):
    """Bounded certificate that sqrt<h_1^F, ..., h_m^F, (1)_1> is the irrelevant ideal.

    Certified is sound; NotCertifiedWithinBounds says nothing either way.
    """
    hs = [_principal(h, f"hypersurface {j}") for j, h in enumerate(hypersurfaces)]
    for h in hs:
        if h.vars != F.vars:
            raise RingMismatch(f"hypersurface {h} lives in {h.vars}, filtration in {F.vars}")
    pieces = _IdealPieces(F, hs)
    results = []
    for g, e in F.algebra_generators():
        cert = GeneratorCertificate(g, e)
        power = Polynomial.constant(1, F.vars)
        for n in range(1, n_max + 1):
            if e * n > d_max:
                break
            power = power * g
            combo = pieces.certify(power, e * n)
            if combo is not None:
                cert.power, cert.combination = n, combo
                break
        results.append(cert)
    verdict = "Certified" if all(c.certified for c in results) else "NotCertifiedWithinBounds"
    return PreservationReport(verdict, d_max, n_max, hs, results)


def fiber_hypersurfaces(components, a):
    return [f - Fraction(x) for f, x in zip(components, a)]


# -- filtrations of degree-like functions -------------------------------------

def semidegree_filtration(base_weights, steps=(), vars=None):
    """Generators {d_i: [x_i]} plus {w_j: [h_j]} for a weighted or iterated semidegree."""
    vars = tuple(vars) if vars is not None else default_vars(len(base_weights))
    gens = {}
    for v, d in zip(vars, base_weights):
        gens.setdefault(int(d), []).append(Polynomial.variable(v, vars))
    for h, w in steps:
        gens.setdefault(int(w), []).append(h)
    return FiltrationSpec(vars, gens, ClosureRule.CONVOLUTION)


def counterexample_filtration(vars=("x1", "x2")):
    x1, x2 = (Polynomial.variable(v, vars) for v in vars)
    return FiltrationSpec(vars, {1: [x2, x1 ** 2 - x2 ** 4], 2: [x1]}, ClosureRule.CONVOLUTION)


# -- normalization probe -------------------------------------------------------

DEFAULT_SCHEDULE = (1, 2, 4, 8, 16)


@dataclass
class ProbeReport(StabilizationReport):
    last_two_agree: bool = False
    denominator: int = None

    def to_json(self):
        out = super().to_json()
        out["last_two_agree"] = self.last_two_agree
        out["denominator"] = self.denominator
        return out


def normalized_degree_probe(delta, h, schedule=DEFAULT_SCHEDULE):
    """delta(h^m)/m along the schedule; a FiltrationSpec is wrapped in FiltrationDegree."""
    if isinstance(delta, FiltrationSpec):
        delta = FiltrationDegree(delta)
    schedule = sorted(set(int(m) for m in schedule))
    if not schedule or schedule[0] < 1:
        raise ValueError("schedule entries must be positive")
    seq = []
    power, done = Polynomial.constant(1, h.vars, h.laurent), 0
    for m in schedule:
        power = power * h ** (m - done)
        done = m
        v = delta.value(power)
        seq.append(NEG_INF if v == NEG_INF else normalize(Fraction(v) / m))
    k = len(seq) - 1
    while k > 0 and seq[k - 1] == seq[k]:
        k -= 1
    agree = len(seq) >= 2 and seq[-1] == seq[-2]
    last = seq[-1]
    den = None if last == NEG_INF else Fraction(last).denominator
    return ProbeReport(seq, last, schedule[k] if (agree or len(seq) == 1) else None,
                       agree or len(seq) == 1, list(schedule), agree, den)


__all__ = [
    "ABOVE_BOUND", "ClosureRule", "FiltrationSpec", "GradedPiece", "filtration_degree", "FiltrationDegree",
    "ReesElement", "CertificateRow", "IntersectionCertificate", "build_from_intersection_certificate",
    "QuasifiniteCertificate", "build_from_quasifinite_certificate", "GeneratorCertificate",
    "PreservationReport", "preserves_at_infinity", "fiber_hypersurfaces", "semidegree_filtration",
    "counterexample_filtration", "ProbeReport", "normalized_degree_probe",
]
