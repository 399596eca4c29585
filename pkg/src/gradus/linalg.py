"""Exact linear algebra over Q: sparse echelon spaces and Fourier-Motzkin."""

from fractions import Fraction


class EchelonSpace:
    """Incrementally built Q-span of sparse vectors (dicts key -> Fraction).

    Each stored row has a distinct pivot, which is its largest key, with
    coefficient 1.  Rows optionally carry a *tag combination*: a dict
    tag -> coefficient recording the row as a combination of the inserted
    vectors, so membership answers can be certified afterwards.
    """

    def __init__(self, track=False):
        self.rows = {}
        self.combos = {} if track else None

    def __len__(self):
        return len(self.rows)

    def copy(self):
        other = EchelonSpace(track=self.combos is not None)
        other.rows = dict(self.rows)
        if self.combos is not None:
            other.combos = dict(self.combos)
        return other

    def _reduce(self, vec, combo):
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        while vec:
            lead = max(vec)
            row = self.rows.get(lead)
            if row is None:
                return vec, combo, lead
            c = vec[lead]
            for k, v in row.items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            if combo is not None:
                for t, v in self.combos[lead].items():
                    nv = combo.get(t, 0) - c * v
                    if nv:
                        combo[t] = nv
                    else:
                        combo.pop(t, None)
        return vec, combo, None

    def add(self, vec, tag=None):
        """Insert ``vec``; returns True if it enlarged the span."""
        combo = {tag: Fraction(1)} if self.combos is not None else None
        vec, combo, lead = self._reduce(vec, combo)
        if not vec:
            return False
        inv = 1 / vec[lead]
        self.rows[lead] = {k: v * inv for k, v in vec.items()}
        if combo is not None:
            self.combos[lead] = {t: v * inv for t, v in combo.items()}
        return True

    def contains(self, vec):
        return not self._reduce(vec, None)[0]

    def express(self, vec):
        """Coefficients (by tag) writing ``vec`` as a combination of inserted vectors, or None."""
        if self.combos is None:
            raise ValueError("space was built without tracking")
        # reduce while recording how much of each row was subtracted
        combo = {}
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        while vec:
            lead = max(vec)
            row = self.rows.get(lead)
            if row is None:
                return None
            c = vec[lead]
            for k, v in row.items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for t, v in self.combos[lead].items():
                nv = combo.get(t, 0) + c * v
                if nv:
                    combo[t] = nv
                else:
                    combo.pop(t, None)
        return combo

    def basis(self):
        return [self.rows[k] for k in sorted(self.rows)]


def nullspace(columns):
    """Kernel of the linear map sending basis vector i to ``columns[i]`` (sparse dicts).

    Returns a list of coefficient lists c with sum_i c[i]*columns[i] == 0.
    """
    space = EchelonSpace(track=True)
    kernel = []
    for i, col in enumerate(columns):
        combo = {i: Fraction(1)}
        vec, combo, lead = space._reduce(dict(col), combo)
        if not vec:
            coeffs = [Fraction(0)] * len(columns)
            for t, v in combo.items():
                coeffs[t] = v
            kernel.append(coeffs)
        else:
            inv = 1 / vec[lead]
            space.rows[lead] = {k: v * inv for k, v in vec.items()}
            space.combos[lead] = {t: v * inv for t, v in combo.items()}
    return kernel


def fourier_motzkin_point(constraints, nvars):
    """A rational point x with a.x >= b for every (a, b) in ``constraints``, or None.

    Plain Fourier-Motzkin elimination followed by back-substitution; meant
    for the handful of variables the redundancy checks need.
    """
    system = [(tuple(Fraction(v) for v in a), Fraction(b)) for a, b in constraints]
    stages = []
    for k in range(nvars - 1, -1, -1):
        stages.append(system)
        pos, neg, rest = [], [], []
        for a, b in system:
            (pos if a[k] > 0 else neg if a[k] < 0 else rest).append((a, b))
        new = list(rest)
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[k], ap[k]
                a = tuple(lp * x + ln * y for x, y in zip(ap, an))
                b = lp * bp + ln * bn
                new.append((a, b))
        system = _dedupe(new)
    if any(b > 0 for a, b in system):
        return None
    point = [Fraction(0)] * nvars
    for k, stage in zip(range(nvars), reversed(stages)):
        lo, hi = None, None
        for a, b in stage:
            if a[k] == 0:
                continue
            rest = sum(a[j] * point[j] for j in range(k))
            bound = (b - rest) / a[k]
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        point[k] = lo if lo is not None else (hi if hi is not None and hi < 0 else Fraction(0))
    return point


def _dedupe(system):
    seen = {}
    for a, b in system:
        if not any(a):
            if b > 0:
                return [(a, b)]
            continue
        scale = max(abs(x) for x in a)
        key = tuple(x / scale for x in a)
        nb = b / scale
        if key not in seen or nb > seen[key]:
            seen[key] = nb
    return list(seen.items())
