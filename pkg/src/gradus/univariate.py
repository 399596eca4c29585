"""Dense univariate polynomials over Q.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Everything here is exact;
the helpers back the bivariate resultant, the primality check for
weighted-homogeneous forms and the torus root bookkeeping.
"""

from fractions import Fraction
import random
from itertools import combinations
from math import gcd, isqrt, lcm

Upoly = list

_BIG_PRIMES = (2 ** 61 - 1, 2 ** 89 - 1, 2 ** 107 - 1, 2 ** 127 - 1, 2 ** 521 - 1)
_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def as_fractions(p):
    return trim(Fraction(c) for c in p)


def degree(p):
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim(c * a for a in p)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim(i * p[i] for i in range(1, len(p)))


def divmod_(p, q):
    """Quotient and remainder over Q."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = [Fraction(c) for c in p]
    lc = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(p) - 1 - dq, -1, -1):
        c = p[i + dq] / lc
        quo[i] = c
        if c:
            for j, b in enumerate(q):
                p[i + j] -= c * b
    return trim(quo), trim(p[:dq])


def exact_div(p, q):
    quo, rem = divmod_(p, q)
    if rem:
        raise ArithmeticError("division is not exact")
    return quo


def monic(p):
    if not p:
        return []
    lc = Fraction(p[-1])
    return [Fraction(c) / lc for c in p]


def gcd_poly(p, q):
    """Monic gcd over Q (``[]`` if both are zero)."""
    a, b = as_fractions(p), as_fractions(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def squarefree_part(p):
    p = as_fractions(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd_poly(p, derivative(p))
    return monic(exact_div(p, g))


def strip_zero_roots(p):
    """Remove the factor t^k from ``p``; returns (k, rest)."""
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return k, list(p[k:])


def root_multiplicity_mass(r, s):
    """Sum of ord_c(r) over the distinct roots c of ``s`` (over the algebraic closure)."""
    s = squarefree_part(s)
    if len(s) <= 1 or not r:
        return 0
    total = 0
    r = as_fractions(r)
    while True:
        g = gcd_poly(r, s)
        if len(g) <= 1:
            return total
        total += len(g) - 1
        r = exact_div(r, g)


def interpolate(xs, ys):
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = []
    for i in range(n - 1, -1, -1):
        out = add(mul(out, [-xs[i], 1]), [coef[i]])
    return trim(out)


def det_int(rows):
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# -- irreducibility over Q -------------------------------------------------

def primitive_int(p):
    """Scale ``p`` to a primitive integer polynomial with positive leading coefficient."""
    p = as_fractions(p)
    if not p:
        return []
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p):
    """All rational roots of ``p`` (without multiplicity), sorted."""
    f = primitive_int(p)
    if len(f) <= 1:
        return []
    roots = set()
    k, f = strip_zero_roots(f)
    if k:
        roots.add(Fraction(0))
    if len(f) <= 1:
        return sorted(roots)
    for num in _divisors(f[0]):
        for den in _divisors(f[-1]):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if evaluate(f, r) == 0:
                    roots.add(r)
    return sorted(roots)


def _poly_mod(p, q, m):
    """Remainder of p by a monic q, coefficients mod m."""
    p = [c % m for c in p]
    dq = len(q) - 1
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c:
            for j in range(dq + 1):
                p[i - dq + j] = (p[i - dq + j] - c * q[j]) % m
    return _trim_mod(p[:dq])


def _trim_mod(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul_mod(p, q, m):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % m
    return _trim_mod(out)


def _monic_mod(p, m):
    inv = pow(p[-1], -1, m)
    return [(c * inv) % m for c in p]


def _gcd_mod(a, b, m):
    a, b = _trim_mod([c % m for c in a]), _trim_mod([c % m for c in b])
    while b:
        a, b = b, _poly_mod(a, _monic_mod(b, m), m)
    return _monic_mod(a, m) if a else []


def _div_mod(p, q, m):
    q = _monic_mod(q, m)
    p = [c % m for c in p]
    dq = len(q) - 1
    quo = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        quo[i - dq] = c
        if c:
            for j in range(dq + 1):
                p[i - dq + j] = (p[i - dq + j] - c * q[j]) % m
    return _trim_mod(quo)


def _distinct_degree(f, p):
    """Distinct-degree split of a squarefree monic f mod p: pairs (d, product of the degree-d factors)."""
    out = []
    h = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = _pow_mod_poly(h, p, f, p)
        g = _gcd_mod(_sub_mod(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((i, g))
            f = _div_mod(f, g, p)
            h = _poly_mod(h, f, p) if len(f) > 1 else []
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def _distinct_degree_pattern(f, p):
    """Degrees of the irreducible factors of a squarefree f mod p."""
    return [d for d, g in _distinct_degree(_monic_mod(f, p), p) for _ in range((len(g) - 1) // d)]


def _equal_degree(g, d, p, rng):
    """Irreducible factors of a monic g mod an odd prime p whose factors all have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = _trim_mod([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        b = _pow_mod_poly(a, (p ** d - 1) // 2, g, p)
        c = _gcd_mod(_sub_mod(b, [1], p), g, p)
        if 1 < len(c) < len(g):
            return _equal_degree(c, d, p, rng) + _equal_degree(_div_mod(g, c, p), d, p, rng)


def _sub_mod(a, b, m):
    n = max(len(a), len(b))
    return _trim_mod([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _pow_mod_poly(base, e, f, m):
    result = [1]
    base = _poly_mod(base, f, m)
    while e:
        if e & 1:
            result = _poly_mod(_mul_mod(result, base, m), f, m)
        base = _poly_mod(_mul_mod(base, base, m), f, m)
        e >>= 1
    return result


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _candidate_factor_degrees(f):
    n = len(f) - 1
    candidates = set(range(1, n // 2 + 1))
    for p in _SMALL_PRIMES:
        if f[-1] % p == 0:
            continue
        fp = [c % p for c in f]
        if len(_gcd_mod(fp, [(i * f[i]) % p for i in range(1, len(f))], p)) > 1:
            continue
        candidates &= _subset_sums(_distinct_degree_pattern(fp, p))
        if not candidates:
            break
    return sorted(candidates)


def _has_proper_factor(f):
    """Factor the primitive squarefree f modulo one prime above twice the Mignotte bound, then test subset products over Z.

    Any integer factor g, scaled to lc(f)/lc(g) * g, has coefficients below
    2^n * ||f||_2, so its symmetric residue is exact.
    """
    n = len(f) - 1
    lc = f[-1]
    bound = 2 * abs(lc) * 2 ** n * (isqrt(sum(c * c for c in f)) + 1)
    df = [i * f[i] for i in range(1, len(f))]
    for p in _BIG_PRIMES:
        if p > bound and lc % p and len(_gcd_mod(f, df, p)) == 1:
            break
    else:
        raise ValueError("no prime in the table suits this polynomial")
    rng = random.Random(0)
    factors = []
    for d, g in _distinct_degree(_monic_mod([c % p for c in f], p), p):
        factors.extend(_equal_degree(g, d, p, rng))
    for size in range(1, len(factors) // 2 + 1):
        for subset in combinations(factors, size):
            g = [lc % p]
            for h in subset:
                g = _mul_mod(g, h, p)
            g = primitive_int([c - p if c > p // 2 else c for c in g])
            if 0 < len(g) - 1 < n and not divmod_(f, g)[1]:
                return True
    return False


MAX_IRREDUCIBILITY_DEGREE = 8


def is_irreducible(p):
    """Exact irreducibility over Q for polynomials of degree at most 8."""
    f = primitive_int(p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if n > MAX_IRREDUCIBILITY_DEGREE:
        raise ValueError(f"irreducibility test limited to degree {MAX_IRREDUCIBILITY_DEGREE}, got {n}")
    if len(gcd_poly(f, derivative(f))) > 1:
        return False
    if rational_roots(f):
        return False
    if n <= 3:
        return True
    if not [m for m in _candidate_factor_degrees(f) if m > 1]:
        return True
    return not _has_proper_factor(f)
