"""Degree-like functions on polynomial and Laurent rings.

Values are ints (or Fractions for non-integral weights) together with the
bottom element ``NEG_INF``, which is what the zero polynomial evaluates to.

Every degree function exposes ``value(f)``, ``nvars``, ``vars`` (or None),
``laurent_ok`` and ``is_semidegree``; ``evaluate`` dispatches on that
protocol so filtration-backed and iterated degrees plug in unchanged.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import lcm

from .errors import NotTriangular, RingMismatch, UnsupportedPartKind, UnsupportedSemidegreeKind, ZeroPolynomial
from .linalg import fourier_motzkin_point
from .poly import Polynomial, as_rational, substitute

NEG_INF = float("-inf")


def normalize(v):
    """Canonical DegreeValue: ints stay ints, integral Fractions become ints."""
    if v == NEG_INF:
        return NEG_INF
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def dadd(a, b):
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return normalize(a + b)


def format_degree(v):
    if v == NEG_INF:
        return "-inf"
    return str(normalize(v))


def degree_to_json(v):
    v = normalize(v)
    if v == NEG_INF:
        return "-inf"
    return v if isinstance(v, int) else f"{v.numerator}/{v.denominator}"


def default_vars(n):
    return tuple(f"x{i + 1}" for i in range(n))


class DegreeFunction:
    vars = None
    laurent_ok = False
    is_semidegree = False
    nvars = 0

    def value(self, f):
        raise NotImplementedError

    def __call__(self, f):
        return self.value(f)

    def check_ring(self, f):
        if f.nvars != self.nvars:
            raise RingMismatch(f"{self.describe()} acts on {self.nvars} variables, got {f.nvars}")
        if self.vars is not None and tuple(f.vars) != tuple(self.vars):
            raise RingMismatch(f"{self.describe()} expects variables {self.vars}, got {f.vars}")
        if f.laurent and not self.laurent_ok:
            raise RingMismatch(f"{self.describe()} is not defined on Laurent polynomials")

    def sample_polys(self, bound):
        """Extra polynomials whose monomials in a twisted frame are worth testing."""
        return []

    def describe(self):
        return type(self).__name__


class WeightedDegree(DegreeFunction):
    """x^a has degree <weights, a>; a polynomial takes the max over its support."""

    is_semidegree = True

    def __init__(self, weights, laurent_ok=False, vars=None):
        self.weights = tuple(normalize(as_rational(w)) for w in weights)
        self.laurent_ok = laurent_ok
        self.nvars = len(self.weights)
        self.vars = tuple(vars) if vars is not None else None

    def of_exponent(self, exp):
        return normalize(sum(w * a for w, a in zip(self.weights, exp)))

    def value(self, f):
        self.check_ring(f)
        if f.is_zero():
            return NEG_INF
        return max(self.of_exponent(e) for e in f.terms)

    def leading_form(self, f):
        d = self.value(f)
        return Polynomial(f.vars, {e: c for e, c in f.terms.items() if self.of_exponent(e) == d}, f.laurent)

    def frame(self, vars):
        return None

    def __eq__(self, other):
        return isinstance(other, WeightedDegree) and self.weights == other.weights and self.laurent_ok == other.laurent_ok

    def __hash__(self):
        return hash(("weighted", self.weights, self.laurent_ok))

    def describe(self):
        return "weighted(" + ",".join(str(w) for w in self.weights) + ")"


class PullbackSemidegree(DegreeFunction):
    """base(phi(f)) for a triangular automorphism phi: x_i -> x_i + g_i.

    ``shifts`` maps a variable name to g_i.  Variables appearing in g_i must
    not (transitively) depend back on x_i; any order consistent with that
    acyclicity is accepted, so permuted triangular maps are fine.
    """

    is_semidegree = True

    def __init__(self, vars, shifts, base):
        self.vars = tuple(vars)
        self.nvars = len(self.vars)
        self.base = base
        if base.nvars != self.nvars:
            raise RingMismatch("base weights and variables disagree in length")
        self.shifts = {}
        for v, g in shifts.items():
            if v not in self.vars:
                raise RingMismatch(f"{v} is not one of {self.vars}")
            self.shifts[v] = g.embed(self.vars)
        self._order = self._topological_order()
        self._forward = {v: Polynomial.variable(v, self.vars) + self.shifts[v] if v in self.shifts
                         else Polynomial.variable(v, self.vars) for v in self.vars}
        self._inverse = self._invert()
        self._powers = {}

    def _topological_order(self):
        deps = {}
        for v in self.vars:
            g = self.shifts.get(v)
            used = set()
            if g is not None:
                for e in g.terms:
                    used |= {self.vars[i] for i, a in enumerate(e) if a}
            if v in used:
                raise NotTriangular(f"the shift of {v} involves {v} itself")
            deps[v] = used
        order, done, visiting = [], set(), set()

        def visit(v):
            if v in done:
                return
            if v in visiting:
                raise NotTriangular(f"cyclic dependency through {v}")
            visiting.add(v)
            for u in sorted(deps[v]):
                visit(u)
            visiting.discard(v)
            done.add(v)
            order.append(v)

        for v in self.vars:
            visit(v)
        return order

    def _invert(self):
        # psi(x_i) = x_i - g_i(psi(deps)); deps come first in the order
        inv = {}
        for v in self._order:
            x = Polynomial.variable(v, self.vars)
            g = self.shifts.get(v)
            if g is None:
                inv[v] = x
            else:
                inv[v] = x - substitute(g, {u: inv[u] for u in self.vars if u in inv}, self.vars, False)
        return inv

    def pull(self, f):
        """phi(f): f rewritten in the sheared coordinates."""
        return substitute(f, self._forward, self.vars, False, cache=self._powers)

    def push(self, f):
        return substitute(f, self._inverse, self.vars, False)

    def value(self, f):
        self.check_ring(f)
        if f.is_zero():
            return NEG_INF
        return self.base.value(self.pull(f))

    def leading_form(self, f):
        """Leading form of phi(f), in the sheared coordinates."""
        self.check_ring(f)
        return self.base.leading_form(self.pull(f))

    def frame(self, vars=None):
        """Images psi(x_k): the coordinates in which this part is a plain weighted degree."""
        return [self._inverse[v] for v in self.vars]

    def sample_polys(self, bound):
        return _frame_monomials(self.frame(), bound)

    def describe(self):
        shifts = ", ".join(f"{v}->{v}+({g})" for v, g in self.shifts.items())
        return f"pullback[{shifts}] of {self.base.describe()}"


class MonomialDegree(DegreeFunction):
    """max over the support of a function of the exponent vector (monomial filtrations)."""

    def __init__(self, func, nvars, name="monomial", laurent_ok=False):
        self.func = func
        self.nvars = nvars
        self.name = name
        self.laurent_ok = laurent_ok

    def value(self, f):
        self.check_ring(f)
        if f.is_zero():
            return NEG_INF
        return max(normalize(self.func(tuple(e))) for e in f.terms)

    def describe(self):
        return self.name


class Quasidegree(DegreeFunction):
    """Pointwise maximum of semidegrees."""

    def __init__(self, parts, minimal=False):
        parts = list(parts)
        if not parts:
            raise ValueError("a quasidegree needs at least one part")
        n = {p.nvars for p in parts}
        if len(n) != 1:
            raise RingMismatch("quasidegree parts act on different numbers of variables")
        self.parts = parts
        self.nvars = n.pop()
        named = {tuple(p.vars) for p in parts if p.vars is not None}
        if len(named) > 1:
            raise RingMismatch("quasidegree parts use different variable names")
        self.vars = named.pop() if named else None
        self.laurent_ok = all(p.laurent_ok for p in parts)
        self.is_semidegree = len(parts) == 1
        self.minimal = minimal
        if minimal:
            for i in range(len(parts)):
                if nonredundancy_witness(self, i) is None:
                    raise ValueError(f"part {i} is redundant, so the presentation is not minimal")

    def value(self, f):
        self.check_ring(f)
        if f.is_zero():
            return NEG_INF
        return max(p.value(f) for p in self.parts)

    def part_values(self, f):
        return [p.value(f) for p in self.parts]

    def sample_polys(self, bound):
        out = []
        for p in self.parts:
            out.extend(p.sample_polys(bound))
        return out

    def describe(self):
        return "max{" + ", ".join(p.describe() for p in self.parts) + "}"


def evaluate(d, f):
    return d.value(f)


def leading_form(d, f):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading form")
    if isinstance(d, (WeightedDegree, PullbackSemidegree)):
        return d.leading_form(f)
    if isinstance(d, Quasidegree) and len(d.parts) == 1:
        return leading_form(d.parts[0], f)
    raise UnsupportedSemidegreeKind(f"leading forms are only computed for weighted and pullback degrees, not {d.describe()}")


# -- sampling ---------------------------------------------------------------

@dataclass
class SampleSpec:
    degree_bound: int = 6
    random_pairs: int = 1000
    seed: int = 0
    coeff_range: int = 100
    max_terms: int = 6
    random_degree: int = 4
    frame_bound: int = 4
    laurent_range: int = 3


def _exponents(n, bound, laurent):
    if laurent:
        rng = range(-bound, bound + 1)
        return [e for e in product(rng, repeat=n) if sum(abs(a) for a in e) <= bound]
    out = []
    for total in range(bound + 1):
        for combo in combinations_with_replacement(range(n), total):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _frame_monomials(frame, bound):
    n = len(frame)
    out = []
    for e in _exponents(n, bound, False):
        if not any(e):
            continue
        m = None
        for img, a in zip(frame, e):
            if a:
                t = img ** a
                m = t if m is None else m * t
        out.append(m)
    return out


def sample_monomials(d, spec):
    vars = d.vars or default_vars(d.nvars)
    laurent = d.laurent_ok
    return [Polynomial.monomial(e, vars, 1, laurent) for e in _exponents(d.nvars, spec.degree_bound, laurent)]


def random_polynomial(rng, vars, spec, laurent=False):
    n = len(vars)
    terms = {}
    for _ in range(rng.randint(1, spec.max_terms)):
        if laurent:
            e = tuple(rng.randint(-spec.laurent_range, spec.laurent_range) for _ in range(n))
        else:
            e = [0] * n
            for _ in range(rng.randint(0, spec.random_degree)):
                e[rng.randrange(n)] += 1
            e = tuple(e)
        c = 0
        while c == 0:
            c = rng.randint(-spec.coeff_range, spec.coeff_range)
        terms[e] = c
    return Polynomial(vars, terms, laurent)


def random_pairs(d, spec):
    vars = d.vars or default_vars(d.nvars)
    rng = random.Random(spec.seed)
    pairs = []
    for _ in range(spec.random_pairs):
        f = random_polynomial(rng, vars, spec, d.laurent_ok)
        g = random_polynomial(rng, vars, spec, d.laurent_ok)
        pairs.append((f, g))
    return pairs


# -- axiom reports ----------------------------------------------------------

MAX_RECORDS = 20


@dataclass
class AxiomReport:
    function: str
    requirement: str
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    violation_counts: dict = field(default_factory=dict)
    strict_products: list = field(default_factory=list)
    strict_product_count: int = 0

    @property
    def passed(self):
        return not self.violation_counts

    def record(self, axiom, **data):
        self.violation_counts[axiom] = self.violation_counts.get(axiom, 0) + 1
        if sum(1 for v in self.violations if v["axiom"] == axiom) < MAX_RECORDS:
            self.violations.append({"axiom": axiom, **data})

    def to_json(self):
        return {
            "function": self.function,
            "requirement": self.requirement,
            "passed": self.passed,
            "checked": dict(self.checked),
            "violation_counts": dict(self.violation_counts),
            "violations": self.violations,
            "strict_product_count": self.strict_product_count,
            "strict_products": self.strict_products,
        }


class _Memo:
    def __init__(self, d):
        self.d = d
        self.cache = {}

    def __call__(self, f):
        v = self.cache.get(f)
        if v is None:
            v = self.d.value(f)
            self.cache[f] = v
        return v


def _pairs_for(d, spec):
    mons = sample_monomials(d, spec)
    pairs = [(f, g) for i, f in enumerate(mons) for g in mons[i:]]
    frame = d.sample_polys(spec.frame_bound)
    if frame:
        vars = d.vars or default_vars(d.nvars)
        frame = [p.embed(vars, d.laurent_ok) for p in frame]
        pairs += [(f, g) for i, f in enumerate(frame) for g in frame[i:]]
        pairs += [(f, g) for f in frame for g in mons[: 3 * d.nvars + 1]]
    rand = random_pairs(d, spec)
    pairs += rand
    # cancellation: (f, g - f) sums back to g
    pairs += [(f, g - f) for f, g in rand if g != f]
    return pairs


def _check(d, spec, semidegree):
    spec = spec or SampleSpec()
    report = AxiomReport(d.describe(), "semidegree" if semidegree else "degree-like")
    delta = _Memo(d)
    vars = d.vars or default_vars(d.nvars)
    for c in (1, -3, Fraction(7, 2)):
        v = delta(Polynomial.constant(c, vars, d.laurent_ok))
        report.checked["constants"] = report.checked.get("constants", 0) + 1
        if v > 0 or (semidegree and v != 0):
            report.record("constants", f=str(c), value=degree_to_json(v))
    n_pairs = 0
    for f, g in _pairs_for(d, spec):
        if f.is_zero() or g.is_zero():
            continue
        n_pairs += 1
        df, dg, ds = delta(f), delta(g), delta(f + g)
        top = max(df, dg)
        if ds > top:
            report.record("subadditivity", f=str(f), g=str(g), lhs=degree_to_json(ds), rhs=degree_to_json(top))
        elif ds < top and df != dg:
            report.record("strict_forces_equal", f=str(f), g=str(g),
                          df=degree_to_json(df), dg=degree_to_json(dg), dsum=degree_to_json(ds))
        dp, bound = delta(f * g), dadd(df, dg)
        if dp > bound:
            report.record("product_bound", f=str(f), g=str(g), lhs=degree_to_json(dp), rhs=degree_to_json(bound))
        elif dp < bound:
            report.strict_product_count += 1
            rec = {"f": str(f), "g": str(g), "lhs": degree_to_json(dp), "rhs": degree_to_json(bound)}
            if len(report.strict_products) < MAX_RECORDS:
                report.strict_products.append(rec)
            if semidegree:
                report.record("product_equality", **rec)
    report.checked["pairs"] = n_pairs
    return report


def check_degree_like(d, spec=None):
    """Subadditivity, strict-inequality equality, product bound and constants.

    Pairs with delta(fg) < delta(f) + delta(g) are allowed for degree-like
    functions and are listed under ``strict_products``.
    """
    return _check(d, spec, semidegree=False)


def check_semidegree(d, spec=None):
    return _check(d, spec, semidegree=True)


def check_power_law(d, spec=None, m_max=6):
    """delta(f^m) == m delta(f) for m <= m_max on sample monomials and random polynomials."""
    spec = spec or SampleSpec()
    report = AxiomReport(d.describe(), "power-law")
    vars = d.vars or default_vars(d.nvars)
    rng = random.Random(spec.seed + 1)
    samples = sample_monomials(d, spec) + [p.embed(vars, d.laurent_ok) for p in d.sample_polys(spec.frame_bound)]
    samples += [random_polynomial(rng, vars, spec, d.laurent_ok) for _ in range(spec.random_pairs)]
    count = 0
    for f in samples:
        if f.is_zero():
            continue
        base = d.value(f)
        power = f
        for m in range(2, m_max + 1):
            power = power * f
            count += 1
            v = d.value(power)
            expected = NEG_INF if base == NEG_INF else normalize(m * base)
            if v != expected:
                report.record("power_law", f=str(f), m=m, lhs=degree_to_json(v), rhs=degree_to_json(expected))
    report.checked["powers"] = count
    return report


# -- non-redundancy ---------------------------------------------------------

@dataclass
class Witness:
    part: int
    exponent: tuple
    frame: int
    polynomial: Polynomial
    values: list

    def to_json(self):
        return {
            "part": self.part,
            "exponent": list(self.exponent),
            "frame": self.frame,
            "polynomial": self.polynomial.to_json(),
            "values": [degree_to_json(v) for v in self.values],
        }


def _frames(q):
    vars = q.vars or default_vars(q.nvars)
    ident = [Polynomial.variable(v, vars, q.laurent_ok) for v in vars]
    frames = [ident]
    for p in q.parts:
        if isinstance(p, PullbackSemidegree):
            frames.append(p.frame())
    return frames


def nonredundancy_witness(q, i):
    """A frame monomial u^a with part i strictly above every other part, or None.

    Frames are the identity coordinates plus the coordinates of each pullback
    part.  In a fixed frame every part is linear in a, so the search is a
    strict LP feasibility problem solved exactly by Fourier-Motzkin.
    """
    for p in q.parts:
        if not isinstance(p, (WeightedDegree, PullbackSemidegree)):
            raise UnsupportedPartKind(f"witness search needs weighted or pullback parts, got {p.describe()}")
    n = q.nvars
    for k, frame in enumerate(_frames(q)):
        rows = [[p.value(u) for u in frame] for p in q.parts]
        cons = []
        for j, row in enumerate(rows):
            if j != i:
                cons.append(([a - b for a, b in zip(rows[i], row)], 1))
        if not q.laurent_ok:
            for t in range(n):
                cons.append(([1 if s == t else 0 for s in range(n)], 0))
        point = fourier_motzkin_point(cons, n)
        if point is None:
            continue
        scale = lcm(*(Fraction(x).denominator for x in point))
        alpha = tuple(int(x * scale) for x in point)
        poly = Polynomial.constant(1, frame[0].vars, q.laurent_ok)
        for u, a in zip(frame, alpha):
            poly = poly * (u ** a)
        values = q.part_values(poly)
        if all(values[i] > v for j, v in enumerate(values) if j != i):
            return Witness(i, alpha, k, poly, values)
    return None


def minimal_presentation(q):
    """Drop parts without a witness, one at a time."""
    parts = list(q.parts)
    i = 0
    while i < len(parts) and len(parts) > 1:
        trial = Quasidegree(parts)
        if nonredundancy_witness(trial, i) is None:
            parts.pop(i)
        else:
            i += 1
    return Quasidegree(parts)


# -- stabilization ----------------------------------------------------------

@dataclass
class StabilizationReport:
    sequence: list
    value: object
    stabilized_at: object
    stable: bool
    schedule: list = None

    def to_json(self):
        out = {
            "sequence": [degree_to_json(v) for v in self.sequence],
            "value": degree_to_json(self.value),
            "stabilized_at": self.stabilized_at,
            "stable": self.stable,
        }
        if self.schedule is not None:
            out["schedule"] = list(self.schedule)
        return out


def stabilization(sequence, index):
    """Earliest index from which ``sequence`` is constant; unstable if only the last entry qualifies."""
    k = len(sequence) - 1
    while k > 0 and sequence[k - 1] == sequence[k]:
        k -= 1
    stable = len(sequence) == 1 or k < len(sequence) - 1
    return StabilizationReport(list(sequence), sequence[-1], index[k] if stable else None, stable)


def recover_part_limit(q, f_i, f, k_max=8):
    """delta(f_i^k f) - delta(f_i^k) for k = 0..k_max."""
    seq = []
    power = Polynomial.constant(1, f_i.vars, f_i.laurent)
    for _ in range(k_max + 1):
        top = q.value(power * f)
        seq.append(NEG_INF if top == NEG_INF else normalize(top - q.value(power)))
        power = power * f_i
    return stabilization(seq, list(range(k_max + 1)))
