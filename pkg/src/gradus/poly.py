"""Exact sparse multivariate (Laurent) polynomials over Q.

Polynomials are immutable.  Terms live in a dict keyed by exponent tuples
(coefficients are ints when integral, Fractions otherwise),
kept in ascending lexicographic key order so iteration (and therefore every
report built from it) is deterministic.

>>> x1, x2 = variables("x1", "x2")
>>> (x1 - x2**2) * (x1 + x2**2)
x1^2 - x2^4
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType

from . import univariate as U
from .errors import (
    DegreeZeroInEliminationVariable,
    NotBivariate,
    SchemaError,
    VariableMismatch,
    ZeroDivisor,
)


def as_rational(value):
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", value):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _canon(c):
    # integral coefficients are stored as int: exact and much faster than Fraction
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """An element of Q[x1..xn] or of the Laurent ring Q[x1^±1..xn^±1]."""

    __slots__ = ("vars", "laurent", "_terms", "_hash")

    def __init__(self, vars, terms=None, laurent=False):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise VariableMismatch(f"repeated variable names in {vars}")
        n = len(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise VariableMismatch(f"exponent {exp} does not match {n} variables")
            if not laurent and any(e < 0 for e in exp):
                raise VariableMismatch(f"negative exponent {exp} in a polynomial ring")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.vars = vars
        self.laurent = bool(laurent)
        self._terms = {e: _canon(clean[e]) for e in sorted(clean) if clean[e]}
        self._hash = None

    @classmethod
    def _raw(cls, vars, laurent, terms):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.laurent = laurent
        obj._terms = {e: _canon(terms[e]) for e in sorted(terms) if terms[e]}
        obj._hash = None
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars, laurent=False):
        return cls(vars, {}, laurent)

    @classmethod
    def constant(cls, c, vars, laurent=False):
        return cls(vars, {(0,) * len(tuple(vars)): c}, laurent)

    @classmethod
    def monomial(cls, exp, vars, coeff=1, laurent=False):
        return cls(vars, {tuple(exp): coeff}, laurent)

    @classmethod
    def variable(cls, name, vars, laurent=False):
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): 1}, laurent)

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def nvars(self):
        return len(self.vars)

    def support(self):
        return list(self._terms)

    def coefficient(self, exp):
        return Fraction(self._terms.get(tuple(exp), 0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def constant_term(self):
        return Fraction(self._terms.get((0,) * self.nvars, 0))

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var):
        i = self.vars.index(var)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def ring(self):
        return (self.vars, self.laurent)

    def same_ring(self, other):
        return self.vars == other.vars and self.laurent == other.laurent

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if not self.same_ring(other):
                raise VariableMismatch(
                    f"ring mismatch: {self.vars}{'(Laurent)' if self.laurent else ''} vs "
                    f"{other.vars}{'(Laurent)' if other.laurent else ''}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.vars, self.laurent)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(self.vars, self.laurent, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, self.laurent, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Polynomial._raw(self.vars, self.laurent, {e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw(self.vars, self.laurent, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not (self.laurent and self.is_monomial()):
                raise ZeroDivisor("negative powers only exist for Laurent monomials")
            (e, c), = self._terms.items()
            return Polynomial._raw(self.vars, True, {tuple(k * a for a in e): Fraction(c) ** k})
        result = Polynomial.constant(1, self.vars, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisor("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.same_ring(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.laurent, tuple(self._terms.items())))
        return self._hash

    # -- structural helpers ----------------------------------------------

    def scale_exponents(self, shift):
        """Multiply by the monomial x^shift (exponents may be negative in Laurent rings)."""
        return Polynomial(self.vars, {_add_exp(e, shift): c for e, c in self._terms.items()}, self.laurent)

    def min_exponents(self):
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def as_laurent(self):
        return Polynomial._raw(self.vars, True, dict(self._terms))

    def as_polynomial(self):
        """Drop the Laurent flag (only if no negative exponents occur)."""
        return Polynomial(self.vars, self._terms, laurent=False)

    def embed(self, vars, laurent=None):
        """Re-express in a ring whose variables contain ours (by name)."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        if missing and any(any(e[self.vars.index(v)] for v in missing) for e in self._terms):
            raise VariableMismatch(f"variables {missing} not in target ring {vars}")
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        out = {}
        for e, c in self._terms.items():
            out[tuple(e[i] if i is not None else 0 for i in idx)] = c
        return Polynomial(vars, out, self.laurent if laurent is None else laurent)

    def content_monomial(self):
        """Exponent of the largest monomial dividing every term (polynomial rings)."""
        if not self._terms:
            return (0,) * self.nvars
        return self.min_exponents()

    def univariate(self, var):
        """Coefficient list in ``var`` (dense, low first) of a polynomial in that variable only."""
        i = self.vars.index(var)
        out = {}
        for e, c in self._terms.items():
            if any(a for j, a in enumerate(e) if j != i):
                raise VariableMismatch(f"{self} is not univariate in {var}")
            out[e[i]] = c
        if not out:
            return []
        return U.trim(out.get(k, Fraction(0)) for k in range(max(out) + 1))

    @classmethod
    def from_univariate(cls, coeffs, var, vars, laurent=False):
        vars = tuple(vars)
        i = vars.index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * len(vars)
                e[i] = k
                terms[tuple(e)] = c
        return cls(vars, terms, laurent)

    def coefficients_in(self, var):
        """Map k -> coefficient of var^k (a polynomial in the same ring, free of var)."""
        i = self.vars.index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Polynomial(self.vars, t, self.laurent) for k, t in sorted(out.items())}

    def evaluate(self, point):
        """Evaluate at a full point (mapping var -> rational, or a sequence)."""
        if isinstance(point, dict):
            point = [point[v] for v in self.vars]
        point = [as_rational(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for a, x in zip(e, point):
                if a:
                    term *= x ** a
            total += term
        return total

    # -- printing ----------------------------------------------------------

    def sorted_terms(self):
        """Terms in display order (lex descending, x1 > x2 > ...)."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if a == 1 else (f"{v}^{a}" if a > 0 else f"{v}^({a})")
                for v, a in zip(self.vars, exp) if a)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return str(self)

    # -- serialisation -----------------------------------------------------

    def to_json(self):
        return {
            "vars": list(self.vars),
            "laurent": self.laurent,
            "terms": [{"c": format_rational(c), "e": list(e)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, obj, vars=None, pointer=""):
        if isinstance(obj, str):
            if vars is None:
                raise SchemaError("a polynomial string needs an enclosing 'vars'", pointer)
            try:
                return parse(obj, vars)
            except ValueError as exc:
                raise SchemaError(str(exc), pointer) from None
        if not isinstance(obj, dict):
            raise SchemaError("polynomial must be an object or a string", pointer)
        pvars = obj.get("vars", vars)
        if pvars is None or not isinstance(pvars, list) or not all(isinstance(v, str) for v in pvars):
            raise SchemaError("missing or malformed 'vars'", pointer + "/vars")
        laurent = obj.get("laurent", False)
        if not isinstance(laurent, bool):
            raise SchemaError("'laurent' must be a boolean", pointer + "/laurent")
        if "expr" in obj:
            try:
                return parse(obj["expr"], pvars, laurent=laurent)
            except (ValueError, TypeError) as exc:
                raise SchemaError(str(exc), pointer + "/expr") from None
        terms = obj.get("terms")
        if not isinstance(terms, list):
            raise SchemaError("'terms' must be a list", pointer + "/terms")
        out = {}
        for i, t in enumerate(terms):
            where = f"{pointer}/terms/{i}"
            if not isinstance(t, dict) or "c" not in t or "e" not in t:
                raise SchemaError("term needs 'c' and 'e'", where)
            c, e = t["c"], t["e"]
            if not isinstance(c, (str, int)) or isinstance(c, bool):
                raise SchemaError("coefficient must be a 'num/den' string", where + "/c")
            try:
                c = as_rational(c)
            except (ValueError, TypeError) as exc:
                raise SchemaError(str(exc), where + "/c") from None
            if (not isinstance(e, list) or len(e) != len(pvars)
                    or not all(isinstance(a, int) and not isinstance(a, bool) for a in e)):
                raise SchemaError(f"exponent must be a list of {len(pvars)} integers", where + "/e")
            if not laurent and any(a < 0 for a in e):
                raise SchemaError("negative exponent in a non-Laurent polynomial", where + "/e")
            e = tuple(e)
            if e in out:
                raise SchemaError("repeated exponent", where + "/e")
            out[e] = c
        return cls(pvars, out, laurent)


def variables(*names, laurent=False):
    return tuple(Polynomial.variable(v, names, laurent) for v in names)


# -- monomial orders ---------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Graded-by-weights order with lex tie-break, or plain lex (``weights=None``).

    The tie-break is lexicographic in the fixed variable order (x1 > x2 > ...).
    """

    weights: tuple = None

    @classmethod
    def lex(cls):
        return cls(None)

    @classmethod
    def graded(cls, weights):
        return cls(tuple(as_rational(w) for w in weights))

    def key(self, exp):
        if self.weights is None:
            return (0, tuple(exp))
        return (sum(w * a for w, a in zip(self.weights, exp)), tuple(exp))

    def leading_exponent(self, p):
        if p.is_zero():
            raise ZeroDivisor("zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)

    def leading_term(self, p):
        e = self.leading_exponent(p)
        return e, p.terms[e]

    def describe(self):
        if self.weights is None:
            return "lex"
        return "graded(" + ",".join(format_rational(w) for w in self.weights) + ")+lex"


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def divide_with_remainder(p, g, order):
    """Divide ``p`` by the single polynomial ``g``; returns (q, r) with p = q*g + r.

    No term of ``r`` is divisible by the leading monomial of ``g``.  Needs a
    well-order (lex, or positive weights) to terminate.
    """
    if g.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if not p.same_ring(g):
        raise VariableMismatch(f"ring mismatch: {p.vars} vs {g.vars}")
    if p.laurent:
        raise VariableMismatch("division with remainder needs a polynomial ring")
    if order.weights is not None and any(w <= 0 for w in order.weights):
        raise ValueError("graded order needs positive weights to be a well-order")
    lead, lc = order.leading_term(g)
    g_terms = list(g.terms.items())
    rest = dict(p.terms)
    quo = {}
    rem = {}
    key = order.key
    while rest:
        e = max(rest, key=key)
        c = rest.pop(e)
        if _divides(lead, e):
            shift = tuple(a - b for a, b in zip(e, lead))
            f = Fraction(c) / lc
            quo[shift] = quo.get(shift, 0) + f
            for ge, gc in g_terms:
                if ge == lead:
                    continue
                t = _add_exp(ge, shift)
                v = rest.get(t, 0) - f * gc
                if v:
                    rest[t] = v
                else:
                    rest.pop(t, None)
        else:
            rem[e] = c
    return Polynomial._raw(p.vars, False, quo), Polynomial._raw(p.vars, False, rem)


def remainder(p, g, order=None):
    order = order or MonomialOrder.graded([1] * p.nvars)
    return divide_with_remainder(p, g, order)[1]


def divides(g, p):
    """Exact divisibility test in a polynomial ring."""
    return remainder(p, g).is_zero()


def exact_quotient(p, g):
    q, r = divide_with_remainder(p, g, MonomialOrder.graded([1] * p.nvars))
    if r:
        raise ArithmeticError(f"{g} does not divide {p}")
    return q


# -- substitution ------------------------------------------------------------

def substitute(p, assignment, target_vars=None, laurent=None, cache=None):
    """Compose ``p`` with ``assignment`` (var name -> Polynomial).

    Unassigned variables map to the variable of the same name in the target
    ring.  The target ring is taken from the images unless given.  ``cache``
    may be a dict shared between calls with the same assignment; it keeps
    the powers of the images.
    """
    images = dict(assignment)
    if target_vars is None:
        rings = {(q.vars, q.laurent) for q in images.values()}
        if len(rings) > 1:
            raise VariableMismatch("substitution images live in different rings")
        if rings:
            target_vars, tl = rings.pop()
        else:
            target_vars, tl = p.vars, p.laurent
        if laurent is None:
            laurent = tl
    target_vars = tuple(target_vars)
    if laurent is None:
        laurent = p.laurent
    for v in images:
        if v not in p.vars:
            raise VariableMismatch(f"{v} is not a variable of {p.vars}")
    for v in p.vars:
        if v not in images:
            if v not in target_vars:
                raise VariableMismatch(f"no image for {v} and it is not in the target ring")
            images[v] = Polynomial.variable(v, target_vars, laurent)
    for v, q in images.items():
        if q.vars != target_vars or q.laurent != laurent:
            images[v] = q.embed(target_vars, laurent)
    if p.laurent and not laurent:
        raise VariableMismatch("Laurent sources need Laurent targets")
    if cache is None:
        cache = {}

    def power(v, k):
        key = (v, k)
        if key not in cache:
            cache[key] = images[v] ** k
        return cache[key]

    n = len(target_vars)
    out = {}
    for e, c in p.terms.items():
        acc = {(0,) * n: c}
        for v, k in zip(p.vars, e):
            if not k:
                continue
            factor = power(v, k)._terms
            if len(factor) == 1:
                (fe, fc), = factor.items()
                acc = {_add_exp(a, fe): ac * fc for a, ac in acc.items()}
            else:
                nxt = {}
                for a, ac in acc.items():
                    for b, bc in factor.items():
                        t = _add_exp(a, b)
                        nxt[t] = nxt.get(t, 0) + ac * bc
                acc = nxt
        for t, v in acc.items():
            out[t] = out.get(t, 0) + v
    return Polynomial._raw(target_vars, laurent, out)


# -- resultants --------------------------------------------------------------

def _coeff_table(p, y, t):
    """p as sum_k P_k(t) y^k with P_k dense univariate in t."""
    iy, it = p.vars.index(y), p.vars.index(t)
    table = {}
    for e, c in p.terms.items():
        row = table.setdefault(e[iy], {})
        row[e[it]] = c
    deg = max(table)
    out = []
    for k in range(deg + 1):
        row = table.get(k, {})
        out.append(U.trim(row.get(j, Fraction(0)) for j in range(max(row) + 1)) if row else [])
    return out


def resultant_bivariate(p, q, eliminate):
    """Sylvester resultant Res_eliminate(p, q) in the other variable.

    Computed by evaluating the Sylvester matrix at integer points, taking
    each determinant with integer Bareiss elimination, and interpolating.
    The result lives in the same two-variable ring.
    """
    if p.nvars != 2 or not p.same_ring(q):
        raise NotBivariate("resultant_bivariate needs two polynomials in the same 2-variable ring")
    if p.laurent:
        raise NotBivariate("resultant_bivariate needs a polynomial (non-Laurent) ring")
    if eliminate not in p.vars:
        raise VariableMismatch(f"{eliminate} not in {p.vars}")
    other = p.vars[1 - p.vars.index(eliminate)]
    if p.is_zero() or q.is_zero() or p.degree_in(eliminate) < 1 or q.degree_in(eliminate) < 1:
        raise DegreeZeroInEliminationVariable(
            f"both polynomials need positive degree in {eliminate}")
    P = _coeff_table(p, eliminate, other)
    Q = _coeff_table(q, eliminate, other)
    m, n = len(P) - 1, len(Q) - 1
    den_p = lcm(*(c.denominator for row in P for c in row))
    den_q = lcm(*(c.denominator for row in Q for c in row))
    Pi = [[int(c * den_p) for c in row] for row in P]
    Qi = [[int(c * den_q) for c in row] for row in Q]
    deg_p_t = max(len(r) - 1 for r in Pi)
    deg_q_t = max(len(r) - 1 for r in Qi)
    bound = n * deg_p_t + m * deg_q_t
    bound = min(bound, p.total_degree() * q.total_degree())
    size = m + n
    xs, ys = [], []
    half = bound // 2
    for x in range(-half, bound - half + 1):
        pv = [U.evaluate(r, x) for r in Pi][::-1]
        qv = [U.evaluate(r, x) for r in Qi][::-1]
        rows = []
        for i in range(n):
            rows.append([0] * i + pv + [0] * (size - m - 1 - i))
        for i in range(m):
            rows.append([0] * i + qv + [0] * (size - n - 1 - i))
        xs.append(x)
        ys.append(U.det_int(rows))
    coeffs = U.interpolate(xs, ys)
    factor = Fraction(1, den_p ** n * den_q ** m)
    coeffs = [c * factor for c in coeffs]
    return Polynomial.from_univariate(coeffs, other, p.vars)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse(text, vars, laurent=False):
    """Parse an expression like ``"3/2*x1^2 - x2^(-1)"`` in the ring over ``vars``."""
    vars = tuple(vars)
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            nxt = power()
            if op == "*":
                acc = acc * nxt
            else:
                if not nxt.is_constant() or nxt.is_zero():
                    raise ValueError("can only divide by nonzero constants")
                acc = acc * (1 / Fraction(nxt.constant_term()))
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            neg = False
            if peek() == ("op", "("):
                take()
                if peek() == ("op", "-"):
                    take()
                    neg = True
                kind, val = take()
                if kind != "num" or take() != ("op", ")"):
                    raise ValueError("malformed exponent")
            else:
                if peek() == ("op", "-"):
                    take()
                    neg = True
                kind, val = take()
                if kind != "num":
                    raise ValueError("malformed exponent")
            return base ** (-val if neg else val)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(val, vars, laurent)
        if kind == "name":
            if val not in vars:
                raise ValueError(f"unknown variable {val!r} (ring {vars})")
            return Polynomial.variable(val, vars, laurent)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        if kind is None:
            raise ValueError(f"unexpected end of input in {text!r}")
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if pos[0] != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return result
