"""Command line job runner: ``gradus <command> --job file.json [--out report.json] [--seed N]``.

Exit codes: 0 ok or consistent, 1 input error, 2 inconclusive, 3 internal
invariant violation.
"""

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources

import jsonschema

from . import __version__
from .bernstein import SparseSystem, equality_verdict
from .bezout import INFINITE, BezoutData, bezout_bound, count_fiber_2d, iterated_ratio, weighted_ratio
from .degfun import (
    NEG_INF,
    Quasidegree,
    SampleSpec,
    WeightedDegree,
    check_degree_like,
    check_power_law,
    check_semidegree,
    degree_to_json,
    nonredundancy_witness,
)
from .errors import DegreeAboveBound, GradusError, InvariantViolation, SchemaError, ShearFailure, UnsupportedPartKind
from .iterate import IteratedSemidegree, rees_presentation
from .poly import format_rational
from .polytope import Polytope, face_in_direction, hull, mixed_volume, normalized_volume, polytope_quasidegree
from .rees import (
    QuasifiniteCertificate,
    build_from_intersection_certificate,
    build_from_quasifinite_certificate,
    fiber_hypersurfaces,
    normalized_degree_probe,
    preserves_at_infinity,
    semidegree_filtration,
)
from .serialize import (
    dumps,
    load_certificate,
    load_degree,
    load_filtration,
    load_int,
    load_list,
    load_point,
    load_poly,
    load_polys,
    load_rational,
    load_vars,
)

COMMANDS = ("eval", "axioms", "iterate", "polytope", "bezout", "count", "bernstein", "rees-build", "rees-check", "probe")
EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_INTERNAL = 0, 1, 2, 3
STATUS_EXIT = {"ok": EXIT_OK, "inconclusive": EXIT_INCONCLUSIVE, "violation": EXIT_INTERNAL}
ENV_DEGREE_BOUND = "GRADUS_DEGREE_BOUND"


@dataclass
class Options:
    degree_bound: int = 8
    power_bound: int = 8
    seed: int = 0
    sample_count: int = 1000
    shear_retries: int = 3


def resolve_options(job_options, env=None, seed=None):
    """Job values win over the environment, which wins over the built-in defaults; --seed wins over all."""
    env = os.environ if env is None else env
    opts = Options()
    raw = env.get(ENV_DEGREE_BOUND)
    if raw is not None:
        try:
            opts.degree_bound = int(raw)
        except ValueError:
            raise SchemaError(f"{ENV_DEGREE_BOUND}={raw!r} is not an integer", "") from None
        if opts.degree_bound < 0:
            raise SchemaError(f"{ENV_DEGREE_BOUND} must be >= 0", "")
    for key, value in (job_options or {}).items():
        setattr(opts, key, value)
    if seed is not None:
        opts.seed = seed
    return opts


def load_schema():
    return json.loads(resources.files("gradus").joinpath("schema/gradus.schema.json").read_text())


def validate_job(job):
    """Schema validation; the first error (by path) becomes a SchemaError with a JSON pointer."""
    validator = jsonschema.Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(job), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        best = jsonschema.exceptions.best_match(errors)
        pointer = "".join(f"/{p}" for p in best.absolute_path)
        raise SchemaError(best.message, pointer)


# -- helpers ---------------------------------------------------------------------

def _sample_spec(opts):
    return SampleSpec(degree_bound=opts.degree_bound, random_pairs=opts.sample_count, seed=opts.seed)


def _points(inputs, n, opts, pointer="/inputs"):
    if "points" in inputs:
        return [load_point(p, f"{pointer}/points/{i}", n) for i, p in enumerate(load_list(inputs["points"], pointer + "/points", True))]
    k = load_int(inputs.get("random_points", 1), pointer + "/random_points", 1)
    r = load_int(inputs.get("point_range", 20), pointer + "/point_range", 1)
    rng = random.Random(opts.seed)
    return [tuple(Fraction(rng.randint(-r, r), rng.randint(1, r)) for _ in range(n)) for _ in range(k)]


def _filtration_for(d):
    if isinstance(d, WeightedDegree) and all(Fraction(w).denominator == 1 and w > 0 for w in d.weights):
        return semidegree_filtration([int(w) for w in d.weights], (), d.vars)
    if isinstance(d, IteratedSemidegree):
        return semidegree_filtration(d.base.weights, [(s.h, s.w) for s in d.steps], d.vars)
    return None


def _degree_ratio(d, inputs):
    if "degree_ratio" in inputs:
        return BezoutData(load_rational(inputs["degree_ratio"], "/inputs/degree_ratio"), "Supplied")
    if isinstance(d, IteratedSemidegree):
        return iterated_ratio(d)
    if isinstance(d, WeightedDegree):
        return weighted_ratio(d.weights)
    raise SchemaError(f"no closed-form degree ratio for {d.describe()}; supply 'degree_ratio'", "/inputs/degree_ratio")


# -- commands --------------------------------------------------------------------

def cmd_eval(inputs, vars, opts):
    d = load_degree(inputs["degree"], vars, "/inputs/degree")
    polys = load_polys(inputs["polys"], d.vars or vars, "/inputs/polys", laurent=d.laurent_ok)
    rows = []
    for f in polys:
        row = {"poly": str(f), "value": degree_to_json(d.value(f))}
        if isinstance(d, Quasidegree) and len(d.parts) > 1:
            row["parts"] = [degree_to_json(v) for v in d.part_values(f)]
        rows.append(row)
    return {"degree": d.describe(), "values": rows}, "ok"


def cmd_axioms(inputs, vars, opts):
    d = load_degree(inputs["degree"], vars, "/inputs/degree")
    checks = inputs.get("checks") or (["degree_like", "semidegree", "power_law"] if d.is_semidegree
                                     else ["degree_like", "power_law"])
    spec = _sample_spec(opts)
    out = {"degree": d.describe(), "sample": asdict(spec), "checks": {}}
    for name in checks:
        if name == "degree_like":
            rep = check_degree_like(d, spec)
        elif name == "semidegree":
            rep = check_semidegree(d, spec)
        else:
            rep = check_power_law(d, spec, m_max=load_int(inputs.get("m_max", 6), "/inputs/m_max", 2))
        out["checks"][name] = rep.to_json()
    if isinstance(d, Quasidegree) and len(d.parts) > 1:
        wits = []
        for i in range(len(d.parts)):
            try:
                w = nonredundancy_witness(d, i)
                wits.append(w.to_json() if w is not None else None)
            except UnsupportedPartKind as exc:
                wits.append({"unsupported": str(exc)})
        out["nonredundancy_witnesses"] = wits
    return out, "ok"


def cmd_iterate(inputs, vars, opts):
    obj = dict(inputs)
    obj["kind"] = "iterated"
    d = load_degree({k: v for k, v in obj.items() if k in ("kind", "vars", "weights", "steps")}, vars, "/inputs")
    out = {
        "degree": d.describe(),
        "order": d.order.describe(),
        "steps": [{"h": str(s.h), "w": s.w, "e": s.e, "asserted": s.asserted,
                   "primality": s.primality.to_json() if s.primality else None} for s in d.steps],
    }
    if d.steps:
        out["degree_ratio"] = iterated_ratio(d).to_json()
    if "evaluate" in inputs:
        polys = load_polys(inputs["evaluate"], d.vars, "/inputs/evaluate")
        out["values"] = [{"poly": str(f), "value": degree_to_json(d.value(f))} for f in polys]
    if inputs.get("presentation", True):
        out["presentation"] = rees_presentation(d).to_json()
    if inputs.get("check", False):
        rep = check_semidegree(d, _sample_spec(opts))
        out["semidegree_check"] = rep.to_json()
        if not rep.passed and all(s.verified for s in d.steps):
            return out, "violation"
    return out, "ok"


def cmd_polytope(inputs, vars, opts):
    pts = [load_point(p, f"/inputs/vertices/{i}") for i, p in enumerate(load_list(inputs["vertices"], "/inputs/vertices", True))]
    P = hull(pts)
    out = {"polytope": P.to_json()}
    if not P.degenerate:
        out["normalized_volume"] = format_rational(normalized_volume(P))
    for i, a in enumerate(inputs.get("directions", [])):
        alpha = load_point(a, f"/inputs/directions/{i}", P.dim)
        out.setdefault("faces", []).append({"direction": [format_rational(x) for x in alpha],
                                            "face": [[format_rational(x) for x in v] for v in face_in_direction(P, alpha)]})
    if "mixed_with" in inputs:
        others = [Polytope.from_json({"vertices": v}, f"/inputs/mixed_with/{i}") for i, v in
                  enumerate(load_list(inputs["mixed_with"], "/inputs/mixed_with", True))]
        out["mixed_volume"] = format_rational(mixed_volume([P] + others))
    if inputs.get("quasidegree", True) and not P.degenerate and all(f.offset > 0 for f in P.facets):
        pvars = load_vars(inputs.get("vars"), "/inputs/vars", vars if vars and len(vars) == P.dim else
                          tuple(f"x{i + 1}" for i in range(P.dim)))
        q = polytope_quasidegree(P, pvars)
        out["quasidegree"] = {"k": q.k, "parts": [list(p.weights) for p in q.parts]}
        if "evaluate" in inputs:
            polys = load_polys(inputs["evaluate"], pvars, "/inputs/evaluate", laurent=True)
            out["quasidegree"]["values"] = [{"poly": str(f), "value": degree_to_json(q.value(f))} for f in polys]
    return out, "ok"


def _map(inputs, vars):
    fs = load_polys(inputs["map"], vars, "/inputs/map")
    if len(fs) != 2:
        raise SchemaError("fiber counting needs exactly two components", "/inputs/map")
    return fs


def cmd_count(inputs, vars, opts):
    fs = _map(inputs, vars)
    rows = []
    for a in _points(inputs, 2, opts):
        res = count_fiber_2d(fs[0], fs[1], a, seed=opts.seed, retries=opts.shear_retries)
        rows.append({"a": [format_rational(x) for x in a], **res.to_json()})
    return {"map": [str(f) for f in fs], "fibers": rows}, "ok"


def cmd_bezout(inputs, vars, opts):
    d = load_degree(inputs["degree"], vars, "/inputs/degree")
    fs = _map(inputs, d.vars or vars)
    data = _degree_ratio(d, inputs)
    bound = bezout_bound(data, d, fs)
    F = _filtration_for(d) if inputs.get("certify", True) else None
    out = {"degree": d.describe(), "degree_ratio": data.to_json(), "bound": format_rational(bound),
           "map": [str(f) for f in fs]}
    if isinstance(d, IteratedSemidegree) and d.steps:
        wb = bezout_bound(weighted_ratio(d.base.weights), d.base, fs)
        out["weighted_bound"] = format_rational(wb)
    status = "ok"
    fibers = []
    for a in _points(inputs, 2, opts):
        res = count_fiber_2d(fs[0], fs[1], a, seed=opts.seed, retries=opts.shear_retries)
        row = {"a": [format_rational(x) for x in a], "bound": format_rational(bound), "count": res.count,
               "equality": res.count != INFINITE and Fraction(res.count) == bound, "shear": res.shear}
        if F is not None:
            rep = preserves_at_infinity(F, fiber_hypersurfaces(fs, a), opts.degree_bound, opts.power_bound)
            row["preservation"] = "certified" if rep.certified else "not_certified"
            if rep.certified and not row["equality"]:
                status = "violation"
        if res.count != INFINITE and res.count > bound:
            status = "violation"
        fibers.append(row)
    out["fibers"] = fibers
    if len(fibers) == 1:
        out.update({k: v for k, v in fibers[0].items() if k != "shear"})
    return out, status


def cmd_bernstein(inputs, vars, opts):
    systems = inputs.get("systems") or [inputs["system"]]
    where = "/inputs/systems" if "systems" in inputs else "/inputs/system"
    rows = []
    status = "ok"
    for i, sysobj in enumerate(systems):
        ptr = f"{where}/{i}" if "systems" in inputs else where
        polys = load_polys(sysobj, vars, ptr, laurent=True)
        s = SparseSystem(polys)
        v = equality_verdict(s, seed=opts.seed, retries=opts.shear_retries)
        rows.append({"system": [str(p) for p in s.polys], **v.to_json()})
        if not v.consistent:
            status = "violation"
    out = {"systems": rows, "all_consistent": status == "ok"}
    return out, status


def _filtration_input(inputs, vars):
    if "filtration" in inputs:
        return load_filtration(inputs["filtration"], vars, "/inputs/filtration"), None
    c = load_certificate(inputs["certificate"], vars, "/inputs/certificate")
    if isinstance(c, QuasifiniteCertificate):
        return build_from_quasifinite_certificate(c)
    return build_from_intersection_certificate(c), None


def cmd_rees_build(inputs, vars, opts):
    F, genericity = _filtration_input(inputs, vars)
    levels = load_int(inputs.get("levels", 2), "/inputs/levels", 0)
    out = {"filtration": F.to_json(), "dimensions": [F.dimension(d) for d in range(levels + 1)],
           "pieces": [F.piece(d).to_json() for d in range(levels + 1)]}
    if genericity is not None:
        out["genericity_poly"] = str(genericity)
    return out, "ok"


def cmd_rees_check(inputs, vars, opts):
    F, genericity = _filtration_input(inputs, vars)
    if "hypersurfaces" in inputs:
        hs = []
        for i, h in enumerate(load_list(inputs["hypersurfaces"], "/inputs/hypersurfaces", True)):
            where = f"/inputs/hypersurfaces/{i}"
            hs.append(load_polys(h, F.vars, where) if isinstance(h, list) else load_poly(h, F.vars, where))
    else:
        fs = load_polys(inputs["map"], F.vars, "/inputs/map")
        a = load_point(inputs["point"], "/inputs/point", len(fs))
        hs = fiber_hypersurfaces(fs, a)
    rep = preserves_at_infinity(F, hs, opts.degree_bound, opts.power_bound)
    out = {"filtration": F.to_json(), **rep.to_json()}
    if genericity is not None:
        out["genericity_poly"] = str(genericity)
    return out, "ok" if rep.certified else "inconclusive"


def cmd_probe(inputs, vars, opts):
    if "filtration" in inputs:
        F = load_filtration(inputs["filtration"], vars, "/inputs/filtration")
        delta, pvars, laurent = F, F.vars, False
    else:
        delta = load_degree(inputs["degree"], vars, "/inputs/degree")
        pvars, laurent = delta.vars or vars, delta.laurent_ok
    h = load_poly(inputs["h"], pvars, "/inputs/h", laurent=laurent)
    schedule = [load_int(m, f"/inputs/schedule/{i}", 1) for i, m in enumerate(inputs.get("schedule", [1, 2, 4, 8, 16]))]
    rep = normalized_degree_probe(delta, h, schedule)
    return {"h": str(h), **rep.to_json()}, "ok" if rep.stable else "inconclusive"


HANDLERS = {
    "eval": cmd_eval, "axioms": cmd_axioms, "iterate": cmd_iterate, "polytope": cmd_polytope,
    "bezout": cmd_bezout, "count": cmd_count, "bernstein": cmd_bernstein, "rees-build": cmd_rees_build,
    "rees-check": cmd_rees_check, "probe": cmd_probe,
}


# -- running -------------------------------------------------------------------

def run(command, job, env=None, seed=None):
    """Validate and execute one job; returns (report dict, exit code)."""
    if not isinstance(job, dict):
        raise SchemaError("job must be a JSON object", "")
    if job.get("command", command) != command:
        raise SchemaError(f"job is for '{job['command']}', not '{command}'", "/command")
    validate_job({**job, "command": command})
    opts = resolve_options(job.get("options"), env, seed)
    vars = tuple(job["vars"]) if "vars" in job else None
    result, status = HANDLERS[command](job.get("inputs", {}), vars, opts)
    report = {"gradus": __version__, "command": command, "options": asdict(opts), "status": status, "result": result}
    return report, STATUS_EXIT[status]


def render_text(report):
    lines = [f"gradus {report['command']}: {report['status']}"]

    def scalar(v):
        return not isinstance(v, (dict, list)) or not v or (isinstance(v, list) and all(
            not isinstance(x, (dict, list)) for x in v))

    def walk(obj, indent):
        pad = "  " * indent
        items = sorted(obj.items()) if isinstance(obj, dict) else [(None, v) for v in obj]
        for k, v in items:
            head = f"{pad}{k}:" if k is not None else f"{pad}-"
            if scalar(v):
                lines.append(f"{head} {json.dumps(v)}")
            else:
                lines.append(head)
                walk(v, indent + 1)

    walk({"options": report["options"], "result": report["result"]}, 1)
    return "\n".join(lines) + "\n"


def _error_report(command, kind, exc, code):
    pointer = getattr(exc, "pointer", None)
    message = getattr(exc, "message", None) or str(exc)
    body = {"command": command, "status": kind, "error": {"type": type(exc).__name__, "message": message}}
    if pointer is not None:
        body["error"]["pointer"] = pointer or "/"
    return body, code


def execute(command, job_path, out_path=None, seed=None, env=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with open(job_path, encoding="utf-8") as fh:
            job = json.load(fh)
    except OSError as exc:
        report, code = _error_report(command, "input_error", exc, EXIT_INPUT)
    except json.JSONDecodeError as exc:
        err = SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", "")
        report, code = _error_report(command, "input_error", err, EXIT_INPUT)
    else:
        try:
            report, code = run(command, job, env, seed)
        except InvariantViolation as exc:
            report, code = _error_report(command, "violation", exc, EXIT_INTERNAL)
        except (ShearFailure, DegreeAboveBound) as exc:
            report, code = _error_report(command, "inconclusive", exc, EXIT_INCONCLUSIVE)
        except (GradusError, ValueError, ArithmeticError) as exc:
            report, code = _error_report(command, "input_error", exc, EXIT_INPUT)
        except Exception as exc:  # noqa: BLE001 - anything else is a bug in the runner
            report, code = _error_report(command, "internal_error", exc, EXIT_INTERNAL)
    if "result" in report:
        stdout.write(render_text(report))
    else:
        err = report["error"]
        where = f" at {err['pointer']}" if "pointer" in err else ""
        stderr.write(f"gradus {command}: {report['status']}{where}: {err['type']}: {err['message']}\n")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    return code


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; argparse's own code 2 means inconclusive here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="gradus", description="Degree-like functions, filtrations and root-count checks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--job", required=True, help="job file (JSON)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--seed", type=int, help="overrides options.seed")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return execute(args.command, args.job, args.out, args.seed)


if __name__ == "__main__":
    sys.exit(main())
