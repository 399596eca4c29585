"""Iterated semidegrees: a positive weighted degree with prime elements adjoined at lowered weights."""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from . import univariate as U
from .degfun import NEG_INF, DegreeFunction, SampleSpec, WeightedDegree, _frame_monomials, check_semidegree, default_vars, normalize
from .errors import ConstantDivisor, InvalidStep, InvariantViolation, NonpositiveWeight, UnsupportedShape
from .poly import MonomialOrder, Polynomial, divide_with_remainder


def f_adic_expansion(f, h, order):
    """Coefficients a_0..a_m with f = sum a_i h^i, each a_i reduced modulo the leading monomial of h."""
    if h.is_constant():
        raise ConstantDivisor(f"cannot expand in powers of the constant {h}")
    coeffs = []
    rest = f
    while not rest.is_zero():
        rest, r = divide_with_remainder(rest, h, order)
        coeffs.append(r)
    return coeffs or [Polynomial.zero(f.vars)]


class Primality(str, Enum):
    PRIME = "Prime"
    NOT_PRIME = "NotPrime"
    UNDETERMINED = "Undetermined"


@dataclass
class PrimalityReport:
    status: Primality
    absolutely_prime: object = None
    leading_form: Polynomial = None
    detail: str = ""
    statistics: dict = None

    def to_json(self):
        out = {"status": self.status.value, "detail": self.detail}
        if self.absolutely_prime is not None:
            out["absolutely_prime"] = self.absolutely_prime
        if self.leading_form is not None:
            out["leading_form"] = str(self.leading_form)
        if self.statistics is not None:
            out["statistics"] = self.statistics
        return out


@dataclass
class IteratedStep:
    h: Polynomial
    w: int
    e: int
    primality: PrimalityReport = None
    asserted: bool = False

    @property
    def verified(self):
        return self.asserted or (self.primality is not None and self.primality.status == Primality.PRIME)


class IteratedSemidegree(DegreeFunction):
    """delta_k(f) = max_i(delta_{k-1}(a_i) + i*w_k) over the h_k-adic expansion of f.

    Expansions use the order graded by the base weights with lex tie-break
    (x1 > x2 > ...), recorded in ``order``.
    """

    is_semidegree = True

    def __init__(self, base_weights, steps=(), vars=None):
        self.base = WeightedDegree(base_weights)
        if any(w <= 0 for w in self.base.weights):
            raise NonpositiveWeight(f"iterated semidegrees start from positive weights, got {self.base.weights}")
        self.nvars = self.base.nvars
        self.vars = tuple(vars) if vars is not None else default_vars(self.nvars)
        self.order = MonomialOrder.graded(self.base.weights)
        self.steps = list(steps)
        self._cache = {}

    @classmethod
    def build(cls, base_weights, steps, vars=None, require_prime=True, sample_spec=None):
        """Adjoin (h, w) pairs one at a time, caching e = delta_prev(h) and checking w < e and primality.

        ``steps`` items are (h, w) or (h, w, asserted).  A step whose primality
        test answers NotPrime raises InvalidStep when ``require_prime``;
        asserted steps skip the test.
        """
        d = cls(base_weights, (), vars)
        for item in steps:
            h, w = item[0], normalize(item[1])
            asserted = bool(item[2]) if len(item) > 2 else False
            d = d.extend(h, w, asserted=asserted, require_prime=require_prime, sample_spec=sample_spec)
        return d

    def extend(self, h, w, asserted=False, require_prime=True, sample_spec=None):
        h = h.embed(self.vars) if h.vars != self.vars else h
        if h.is_constant():
            raise InvalidStep(f"cannot adjoin the constant {h}")
        e = self.value(h)
        if not w < e:
            raise InvalidStep(f"new weight {w} must be below delta({h}) = {e}")
        report = None
        if not asserted:
            report = primality_check(self, h, sample_spec=sample_spec, w=w)
            if report.status == Primality.NOT_PRIME and require_prime:
                raise InvalidStep(f"{h} is not prime for the previous semidegree: {report.detail}")
        return IteratedSemidegree(self.base.weights, self.steps + [IteratedStep(h, w, e, report, asserted)], self.vars)

    def truncate(self, k):
        return IteratedSemidegree(self.base.weights, self.steps[:k], self.vars)

    def value(self, f):
        self.check_ring(f)
        return self._value(f, len(self.steps))

    def _value(self, f, level):
        if f.is_zero():
            return NEG_INF
        if level == 0:
            return self.base.value(f)
        key = (level, f)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        step = self.steps[level - 1]
        best = NEG_INF
        for i, a in enumerate(f_adic_expansion(f, step.h, self.order)):
            if a.is_zero():
                continue
            best = max(best, normalize(self._value(a, level - 1) + i * step.w))
        if len(self._cache) > 50000:
            self._cache.clear()
        self._cache[key] = best
        return best

    def sample_polys(self, bound):
        xs = _frame_monomials([Polynomial.variable(v, self.vars) for v in self.vars], min(bound, 2))
        out = []
        for step in self.steps:
            hp = Polynomial.constant(1, self.vars)
            for _ in range(2):
                hp = hp * step.h
                out.append(hp)
                out.extend(hp * m for m in xs)
        return out

    def describe(self):
        base = "weighted(" + ",".join(str(w) for w in self.base.weights) + ")"
        if not self.steps:
            return f"iterated[{base}]"
        steps = "; ".join(f"h={s.h}, w={s.w}, e={s.e}" for s in self.steps)
        return f"iterated[{base}; {steps}]"

    def evaluate_with_steps(self, f, k):
        return self._value(f, k)


def evaluate_iterated(d, f):
    return d.value(f)


def primality_check(prev, h, sample_spec=None, w=None):
    """Primality of h for ``prev``: exact for two variables and no prior steps, else Undetermined.

    In the exact case the graded ring is Q[x1, x2] with the base grading, so
    h is prime iff its weighted leading form is an irreducible polynomial.
    A weighted-homogeneous form with trivial monomial content is G(x1^p, x2^q)
    for a binary form G, and it is irreducible over Q iff G is.
    """
    if prev.steps or prev.nvars != 2:
        return _statistical(prev, h, sample_spec, w)
    lf = prev.base.leading_form(h)
    a, b = lf.content_monomial()
    stripped = lf.scale_exponents((-a, -b)) if (a or b) else lf
    if a + b > 1:
        return PrimalityReport(Primality.NOT_PRIME, False, lf, f"leading form {lf} has monomial factor of degree {a + b}")
    if a + b == 1:
        if stripped.is_constant():
            return PrimalityReport(Primality.PRIME, True, lf, "leading form is a variable")
        return PrimalityReport(Primality.NOT_PRIME, False, lf, f"leading form {lf} has a variable factor and a nonconstant cofactor")
    if stripped.is_constant():
        return PrimalityReport(Primality.NOT_PRIME, False, lf, "leading form is a unit")
    d1, d2 = prev.base.weights
    g = gcd(d1, d2)
    p, q = d2 // g, d1 // g
    coeffs = {}
    for (i, j), c in stripped.terms.items():
        if i % p or j % q:
            raise InvariantViolation(f"leading form {lf} is not a form in x1^{p}, x2^{q}")
        coeffs[i // p] = c
    n = max(coeffs)
    univ = [coeffs.get(k, 0) for k in range(n + 1)]
    if n > U.MAX_IRREDUCIBILITY_DEGREE:
        return _statistical(prev, h, sample_spec, w, detail=f"dehomogenized form has degree {n} > {U.MAX_IRREDUCIBILITY_DEGREE}")
    irreducible = U.is_irreducible(univ)
    status = Primality.PRIME if irreducible else Primality.NOT_PRIME
    detail = (f"leading form {lf} = G(x1^{p}, x2^{q}) with G(t, 1) of degree {n} "
              f"{'irreducible' if irreducible else 'reducible'} over Q")
    return PrimalityReport(status, irreducible and n == 1, lf, detail)


def _statistical(prev, h, sample_spec, w, detail="exact test covers two variables without prior steps"):
    stats = None
    if w is not None:
        spec = sample_spec or SampleSpec(degree_bound=3, random_pairs=100)
        candidate = IteratedSemidegree(prev.base.weights, prev.steps + [IteratedStep(h, w, prev.value(h))], prev.vars)
        report = check_semidegree(candidate, spec)
        stats = {"pairs": report.checked.get("pairs", 0), "violations": sum(report.violation_counts.values()),
                 "passed": report.passed}
    return PrimalityReport(Primality.UNDETERMINED, None, None, detail, stats)


# -- weighted projective presentation ----------------------------------------

@dataclass
class PresentationReport:
    variables: list
    relations: list
    warnings: list = field(default_factory=list)

    @property
    def ambient(self):
        return "P(" + ",".join(str(w) for _, w in self.variables) + ")"

    def to_json(self):
        return {
            "ambient": self.ambient,
            "variables": [{"name": n, "weight": w} for n, w in self.variables],
            "relations": [str(r) for r in self.relations],
            "relations_json": [r.to_json() for r in self.relations],
            "warnings": list(self.warnings),
        }


def rees_presentation(d):
    """Generators x0, x_i, s_j of the graded ring with relations h~_j - x0^(e_j - w_j) s_j.

    h~_j rewrites h_j through the earlier expansions (h_l^i becomes s_l^i)
    and homogenizes it with x0 to weighted degree e_j.
    """
    if not isinstance(d, IteratedSemidegree):
        raise UnsupportedShape(f"only iterated semidegrees have this presentation, got {type(d).__name__}")
    names = ["x0"] + list(d.vars) + [f"s{j + 1}" for j in range(len(d.steps))]
    if len(set(names)) != len(names):
        raise UnsupportedShape(f"variable names clash with x0/s_j: {d.vars}")
    weights = [1] + list(d.base.weights) + [s.w for s in d.steps]
    big = tuple(names)
    warnings = []
    relations = []

    def lift(f, level):
        if level == 0:
            return f.embed(big)
        s = Polynomial.variable(f"s{level}", big)
        out = Polynomial.zero(big)
        sp = Polynomial.constant(1, big)
        for a in f_adic_expansion(f, d.steps[level - 1].h, d.order):
            if a:
                out = out + lift(a, level - 1) * sp
            sp = sp * s
        return out

    def wdeg(e):
        return sum(w * a for w, a in zip(weights, e))

    for j, step in enumerate(d.steps):
        if not step.verified:
            warnings.append(f"step {j + 1} (h={step.h}) is not verified prime; the relation may not present the ring")
        if step.w <= 0:
            warnings.append(f"step {j + 1} has weight {step.w} <= 0, so the weighted projective space is formal")
        lifted = lift(step.h, j)
        top = max(wdeg(e) for e in lifted.terms)
        if top != step.e:
            raise InvariantViolation(f"lift of h_{j + 1} has degree {top}, expected {step.e}")
        homog = Polynomial(big, {(top - wdeg(e),) + e[1:]: c for e, c in lifted.terms.items()})
        x0 = Polynomial.variable("x0", big)
        s = Polynomial.variable(f"s{j + 1}", big)
        relations.append(homog - x0 ** (step.e - step.w) * s)
    return PresentationReport(list(zip(names, weights)), relations, warnings)
