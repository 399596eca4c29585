"""JSON <-> object conversion for job files and reports.

Every loader takes a JSON pointer so errors name the offending location.
"""

import json
from fractions import Fraction

from .degfun import PullbackSemidegree, Quasidegree, WeightedDegree, default_vars
from .errors import GradusError, SchemaError
from .iterate import IteratedSemidegree
from .poly import Polynomial, as_rational, format_rational, parse
from .polytope import PolytopeQuasidegree, hull, polytope_quasidegree
from .rees import (
    CertificateRow,
    ClosureRule,
    FiltrationDegree,
    FiltrationSpec,
    IntersectionCertificate,
    QuasifiniteCertificate,
    semidegree_filtration,
)


def dumps(obj):
    """Canonical report text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_vars(obj, pointer, default=None):
    if obj is None:
        if default is None:
            raise SchemaError("missing 'vars'", pointer)
        return tuple(default)
    if not isinstance(obj, list) or not obj or not all(isinstance(v, str) for v in obj):
        raise SchemaError("'vars' must be a nonempty list of names", pointer)
    if len(set(obj)) != len(obj):
        raise SchemaError("repeated variable name", pointer)
    return tuple(obj)


def load_rational(obj, pointer):
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise SchemaError("expected an integer or a 'num/den' string", pointer)
    try:
        return as_rational(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc), pointer) from None


def load_int(obj, pointer, minimum=None):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError("expected an integer", pointer)
    if minimum is not None and obj < minimum:
        raise SchemaError(f"expected an integer >= {minimum}", pointer)
    return obj


def load_list(obj, pointer, nonempty=False):
    if not isinstance(obj, list):
        raise SchemaError("expected a list", pointer)
    if nonempty and not obj:
        raise SchemaError("expected a nonempty list", pointer)
    return obj


def load_poly(obj, vars, pointer, laurent=False):
    """A polynomial given as an expression string in ``vars`` or as a term object."""
    if isinstance(obj, str):
        try:
            return parse(obj, vars, laurent=laurent)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(str(exc), pointer) from None
    p = Polynomial.from_json(obj, vars, pointer)
    if laurent and not p.laurent:
        p = p.as_laurent()
    if vars is not None and p.vars != tuple(vars):
        try:
            p = p.embed(tuple(vars))
        except GradusError as exc:
            raise SchemaError(str(exc), pointer) from None
    return p


def load_polys(obj, vars, pointer, laurent=False, nonempty=True):
    return [load_poly(p, vars, f"{pointer}/{i}", laurent) for i, p in enumerate(load_list(obj, pointer, nonempty))]


def load_point(obj, pointer, n=None):
    pt = tuple(load_rational(x, f"{pointer}/{i}") for i, x in enumerate(load_list(obj, pointer, True)))
    if n is not None and len(pt) != n:
        raise SchemaError(f"expected {n} coordinates, got {len(pt)}", pointer)
    return pt


def _field(obj, key, pointer, default=...):
    if key in obj:
        return obj[key]
    if default is ...:
        raise SchemaError(f"missing '{key}'", pointer)
    return default


# -- degree-like functions ----------------------------------------------------

DEGREE_KINDS = ("weighted", "pullback", "iterated", "quasidegree", "polytope", "filtration")


def _implied_vars(obj):
    # x1..xn when the job gives no names; n from the weights or vertex length
    seq = obj.get("weights")
    if not isinstance(seq, list):
        verts = obj.get("vertices")
        seq = verts[0] if isinstance(verts, list) and verts and isinstance(verts[0], list) else None
    return default_vars(len(seq)) if seq else None


def load_degree(obj, vars, pointer):
    if not isinstance(obj, dict):
        raise SchemaError("degree must be an object", pointer)
    kind = obj.get("kind")
    if kind not in DEGREE_KINDS:
        raise SchemaError(f"'kind' must be one of {', '.join(DEGREE_KINDS)}", pointer + "/kind")
    vars = load_vars(obj.get("vars"), pointer + "/vars", vars or _implied_vars(obj))
    try:
        if kind == "weighted":
            w = [load_rational(x, f"{pointer}/weights/{i}") for i, x in
                 enumerate(load_list(_field(obj, "weights", pointer), pointer + "/weights", True))]
            if len(w) != len(vars):
                raise SchemaError(f"{len(w)} weights for {len(vars)} variables", pointer + "/weights")
            return WeightedDegree(w, laurent_ok=bool(obj.get("laurent", False)), vars=vars)
        if kind == "pullback":
            w = [load_rational(x, f"{pointer}/weights/{i}") for i, x in
                 enumerate(load_list(_field(obj, "weights", pointer), pointer + "/weights", True))]
            shifts = _field(obj, "shifts", pointer)
            if not isinstance(shifts, dict):
                raise SchemaError("'shifts' must map variable names to polynomials", pointer + "/shifts")
            sh = {v: load_poly(g, vars, f"{pointer}/shifts/{v}") for v, g in sorted(shifts.items())}
            return PullbackSemidegree(vars, sh, WeightedDegree(w))
        if kind == "iterated":
            w = [load_int(x, f"{pointer}/weights/{i}") for i, x in
                 enumerate(load_list(_field(obj, "weights", pointer), pointer + "/weights", True))]
            steps = []
            for i, s in enumerate(load_list(obj.get("steps", []), pointer + "/steps")):
                where = f"{pointer}/steps/{i}"
                if not isinstance(s, dict):
                    raise SchemaError("step must be an object", where)
                steps.append((load_poly(_field(s, "h", where), vars, where + "/h"),
                              load_int(_field(s, "w", where), where + "/w"), bool(s.get("asserted", False))))
            return IteratedSemidegree.build(w, steps, vars)
        if kind == "quasidegree":
            parts = [load_degree(p, vars, f"{pointer}/parts/{i}") for i, p in
                     enumerate(load_list(_field(obj, "parts", pointer), pointer + "/parts", True))]
            return Quasidegree(parts, minimal=bool(obj.get("minimal", False)))
        if kind == "polytope":
            pts = [load_point(p, f"{pointer}/vertices/{i}", len(vars)) for i, p in
                   enumerate(load_list(_field(obj, "vertices", pointer), pointer + "/vertices", True))]
            return polytope_quasidegree(hull(pts), vars)
        F = load_filtration(_field(obj, "filtration", pointer), vars, pointer + "/filtration")
        return FiltrationDegree(F, cap=load_int(obj.get("cap", 256), pointer + "/cap", 1))
    except SchemaError:
        raise
    except GradusError as exc:
        exc.pointer = getattr(exc, "pointer", None) or pointer
        raise


def dump_degree(d):
    vars = list(d.vars) if d.vars is not None else list(default_vars(d.nvars))
    if isinstance(d, PolytopeQuasidegree):
        return {"kind": "polytope", "vars": vars, "vertices": [[format_rational(x) for x in v] for v in d.source.vertices]}
    if isinstance(d, WeightedDegree):
        out = {"kind": "weighted", "vars": vars, "weights": [format_rational(Fraction(w)) for w in d.weights]}
        if d.laurent_ok:
            out["laurent"] = True
        return out
    if isinstance(d, PullbackSemidegree):
        return {"kind": "pullback", "vars": vars, "weights": [format_rational(Fraction(w)) for w in d.base.weights],
                "shifts": {v: str(g) for v, g in sorted(d.shifts.items())}}
    if isinstance(d, IteratedSemidegree):
        return {"kind": "iterated", "vars": vars, "weights": [int(w) for w in d.base.weights],
                "steps": [{"h": str(s.h), "w": s.w, "asserted": s.asserted} for s in d.steps]}
    if isinstance(d, Quasidegree):
        out = {"kind": "quasidegree", "vars": vars, "parts": [dump_degree(p) for p in d.parts]}
        if d.minimal:
            out["minimal"] = True
        return out
    if isinstance(d, FiltrationDegree):
        return {"kind": "filtration", "vars": vars, "filtration": dump_filtration(d.F), "cap": d.cap}
    raise SchemaError(f"no JSON form for {d.describe()}", "")


# -- filtrations and certificates ---------------------------------------------

def load_filtration(obj, vars, pointer):
    if not isinstance(obj, dict):
        raise SchemaError("filtration must be an object", pointer)
    vars = load_vars(obj.get("vars"), pointer + "/vars", vars)
    if "from_degree" in obj:
        d = load_degree(obj["from_degree"], vars, pointer + "/from_degree")
        if isinstance(d, (WeightedDegree, IteratedSemidegree)):
            base = d.weights if isinstance(d, WeightedDegree) else d.base.weights
            if any(Fraction(w).denominator != 1 or w <= 0 for w in base):
                raise SchemaError("filtrations need positive integral weights", pointer + "/from_degree")
            steps = [] if isinstance(d, WeightedDegree) else [(s.h, s.w) for s in d.steps]
            return semidegree_filtration([int(w) for w in base], steps, vars)
        raise SchemaError("only weighted and iterated degrees convert to generator filtrations",
                          pointer + "/from_degree/kind")
    rule = obj.get("closure_rule", ClosureRule.CONVOLUTION.value)
    if rule not in {r.value for r in ClosureRule}:
        raise SchemaError("'closure_rule' must be PowersOfF1 or Convolution", pointer + "/closure_rule")
    gens = _field(obj, "level_generators", pointer)
    if not isinstance(gens, dict) or not gens:
        raise SchemaError("'level_generators' must map levels to polynomial lists", pointer + "/level_generators")
    levels = {}
    for key, polys in gens.items():
        where = f"{pointer}/level_generators/{key}"
        if not key.isdigit() or int(key) <= 0:
            raise SchemaError("levels must be positive integers", where)
        levels[int(key)] = load_polys(polys, vars, where)
    try:
        return FiltrationSpec(vars, levels, rule)
    except ValueError as exc:
        raise SchemaError(str(exc), pointer) from None


def dump_filtration(F):
    return F.to_json()


def load_intersection_certificate(obj, vars, pointer):
    vars = load_vars(obj.get("vars"), pointer + "/vars", vars)
    ideals = []
    for j, q in enumerate(load_list(_field(obj, "ideals", pointer), pointer + "/ideals", True)):
        where = f"{pointer}/ideals/{j}"
        ideals.append(load_polys(q, vars, where) if isinstance(q, list) else load_poly(q, vars, where))
    rows = []
    for i, r in enumerate(load_list(_field(obj, "rows", pointer), pointer + "/rows", True)):
        where = f"{pointer}/rows/{i}"
        if not isinstance(r, dict):
            raise SchemaError("row must be an object", where)
        rows.append(CertificateRow(load_int(_field(r, "exponent", where), where + "/exponent", 1),
                                   load_polys(_field(r, "members", where), vars, where + "/members"),
                                   load_poly(r.get("remainder", "0"), vars, where + "/remainder")))
    return IntersectionCertificate(vars, ideals, rows)


def dump_intersection_certificate(c):
    return {
        "kind": "intersection",
        "vars": list(c.vars),
        "ideals": [str(q) if isinstance(q, Polynomial) else [str(p) for p in q] for q in c.ideals],
        "rows": [{"exponent": r.exponent, "members": [str(f) for f in r.members], "remainder": str(r.remainder)}
                 for r in c.rows],
    }


def load_quasifinite_certificate(obj, vars, pointer):
    vars = load_vars(obj.get("vars"), pointer + "/vars", vars)
    comps = load_polys(_field(obj, "components", pointer), vars, pointer + "/components")
    syms = obj.get("symbols")
    syms = load_vars(syms, pointer + "/symbols") if syms is not None else tuple(f"y{j + 1}" for j in range(len(comps)))
    rels = []
    for i, rel in enumerate(load_list(_field(obj, "relations", pointer), pointer + "/relations", True)):
        rels.append(load_polys(rel, syms, f"{pointer}/relations/{i}"))
    return QuasifiniteCertificate(vars, comps, rels, syms)


def dump_quasifinite_certificate(c):
    return {
        "kind": "quasifinite",
        "vars": list(c.vars),
        "components": [str(f) for f in c.components],
        "symbols": list(c.ysyms),
        "relations": [[str(g) for g in rel] for rel in c.relations],
    }


def load_certificate(obj, vars, pointer):
    if not isinstance(obj, dict):
        raise SchemaError("certificate must be an object", pointer)
    kind = obj.get("kind")
    if kind == "intersection":
        return load_intersection_certificate(obj, vars, pointer)
    if kind == "quasifinite":
        return load_quasifinite_certificate(obj, vars, pointer)
    raise SchemaError("'kind' must be intersection or quasifinite", pointer + "/kind")
