"""Command-line front end: job files in, deterministic JSON reports out.

Commands:
    insep run <job.json | ->      execute the tasks of a job file
    insep verify-all              run the full verification catalog
    insep pdegree --field F e...  p-degree of K^p(e_1,...,e_k)
    insep classify --field F --lambda e...   classify one hypersurface

Exit codes: 0 success, 1 task failure, 2 validation error.  Reports are
byte-stable for identical inputs apart from the timing fields.
"""

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import artin, catalog, curves, fermat
from .fieldarith import FunctionField, ParseError, PrimeField, parse_expr
from .frobenius import p_linear_independent, pdegree_generated
from .groebner import verify_codim

TASK_KINDS = (
    "pdegree", "classify", "rational-point", "curve-normalize", "curve-singular",
    "curve-conductor", "curve-cohomology", "artin-edim", "verify-codim", "verify-all",
)

TIMING_KEYS = ("seconds", "total_seconds")


class JobValidationError(ValueError):
    pass


# -- serialization helpers -----------------------------------------------------


def _fmt(x):
    return x.format()


def _fmt_ext(elem):
    return {"coeffs": [c.format() for c in elem.coeffs]}


def _fmt_point(point):
    return None if point is None else [c.format() for c in point]


# -- job validation and task execution ----------------------------------------


def validate_job(job):
    if not isinstance(job, dict):
        raise JobValidationError("job must be a JSON object")
    if "field" not in job or "tasks" not in job:
        raise JobValidationError("job needs 'field' and 'tasks'")
    try:
        field = FunctionField.from_descriptor(job["field"])
    except (KeyError, TypeError, ValueError) as exc:
        raise JobValidationError("bad field descriptor: %s" % exc) from exc
    if not isinstance(job["tasks"], list):
        raise JobValidationError("'tasks' must be a list")
    for i, task in enumerate(job["tasks"]):
        kind = task.get("kind")
        if kind not in TASK_KINDS:
            raise JobValidationError("task %d: unknown kind %r" % (i, kind))
        for expr in _task_expressions(task):
            try:
                parse_expr(expr, field)
            except ParseError as exc:
                raise JobValidationError(
                    "task %d: bad expression %r: %s" % (i, expr, exc)) from exc
    return field


def _task_expressions(task):
    for key in ("exprs", "lambda"):
        for expr in task.get(key, []):
            yield expr
    if "b" in task:
        yield task["b"]


def _hypersurface(field, task):
    lams = tuple(parse_expr(e, field) for e in task["lambda"])
    if len(lams) < 2:
        raise JobValidationError("need at least two coefficients")
    return fermat.PFermatHypersurface(field=field, n=len(lams) - 1, coeffs=lams)


def _normal_form(field, task):
    lams = [parse_expr(e, field) for e in task["lambda"]]
    if len(lams) != 3:
        raise JobValidationError("curve tasks need exactly three coefficients")
    return curves.normal_form(field, *lams)


def _algebra_from_description(desc):
    construction = desc.get("construction")
    if construction == "tensor-self":
        field = FunctionField.from_descriptor(desc["field"])
        powers = [parse_expr(e, field) for e in desc["pth_powers"]]
        return artin.tensor_self(field, powers)
    if construction == "adjoin-root":
        base_field = PrimeField(int(desc["p"]))
        base = artin.truncated_polynomial_algebra(base_field, desc.get("base_exponents", []))
        f = [base_field.from_int(int(c)) for c in desc["f"]]
        if len(f) != base.dim:
            raise JobValidationError("f needs %d coefficients" % base.dim)
        return artin.adjoin_root(base, f, int(desc["r"]))
    raise JobValidationError("unknown algebra construction %r" % construction)


def execute_task(field_desc, task):
    """Run one task; returns a JSON-able result dict (raises on task failure)."""
    field = FunctionField.from_descriptor(field_desc)
    kind = task["kind"]

    if kind == "pdegree":
        exprs = [parse_expr(e, field) for e in task["exprs"]]
        res = pdegree_generated(exprs)
        return {"d": res.d, "selected": [_fmt(x) for x in res.selected],
                "operations": ["pdegree_generated"]}

    if kind == "classify":
        X = _hypersurface(field, task)
        cls = fermat.classify(X)
        return {"d": cls.d, "verdict": cls.verdict, "codim": cls.codim,
                "rational_point": _fmt_point(cls.rational_point),
                "equation": X.defining_upoly().format(),
                "operations": ["invariant_d", "classify", "rational_point"]}

    if kind == "rational-point":
        X = _hypersurface(field, task)
        point = fermat.rational_point(X)
        return {"point": _fmt_point(point),
                "p_linear_independent": p_linear_independent(list(X.coeffs)),
                "operations": ["rational_point", "p_linear_independent"],
                "asserted": ["point_satisfies_equation"] if point else []}

    if kind == "curve-normalize":
        nf = _normal_form(field, task)
        curves.normalization(nf)
        return {"lambda": _fmt(nf.lam), "Q": _fmt(nf.q_of_lambda()),
                "root_coeffs": [_fmt(c) for c in nf.root_coeffs],
                "scale_unit": _fmt(nf.scale_unit),
                "slot_to_index": list(nf.slot_to_index),
                "operations": ["normal_form", "normalization"],
                "asserted": ["pullback_vanishes", "preimage_length_p"]}

    if kind == "curve-singular":
        nf = _normal_form(field, task)
        sp = curves.singular_point(nf)
        return {"point_on_line": [_fmt_ext(c) for c in sp.point_on_line],
                "image_point": [_fmt_ext(c) for c in sp.image_point],
                "residue_degree": sp.residue_degree,
                "operations": ["singular_point"],
                "asserted": ["image_satisfies_singular_ideal"]}

    if kind == "curve-conductor":
        nf = _normal_form(field, task)
        cp = curves.conductor_profile(nf)
        return {"case": cp.case, "dim_subalgebra": cp.dim_subalgebra,
                "dim_conductor_ring": cp.ring.dim_K,
                "residue_degree": cp.residue_degree, "chart": cp.chart_index,
                "operations": ["conductor_profile"],
                "asserted": ["gorenstein_halving", "L_meets_subalgebra_in_K",
                             "conductor_exactness_guard"]}

    if kind == "curve-cohomology":
        nf = _normal_form(field, task)
        cp = curves.conductor_profile(nf)
        gc = curves.glueing_cohomology(cp.ring, cp.subalgebra_basis)
        return {"h0": gc.h0, "h1": gc.h1, "admissible": gc.admissible,
                "operations": ["conductor_profile", "glueing_cohomology"]}

    if kind == "artin-edim":
        algebra = _algebra_from_description(task["algebra"])
        report = artin.edim(algebra)
        return {"dim": report.dim_total, "residue_dim": report.residue_dim,
                "edim": report.edim, "operations": ["edim"]}

    if kind == "verify-codim":
        X = _hypersurface(field, task)
        chk = verify_codim(X)
        return {"predicted_d": chk.predicted_d, "oracle_codim": chk.oracle_codim,
                "match": chk.match,
                "operations": ["buchberger", "ideal_dimension", "verify_codim"]}

    if kind == "verify-all":
        entries = catalog.load_catalog(task.get("catalog"))
        results = [catalog.check_catalog_entry(e) for e in entries]
        return {"entries": results, "ok": all(r["ok"] for r in results),
                "operations": ["verify_all"]}

    raise JobValidationError("unknown task kind %r" % kind)


def _task_worker(payload):
    field_desc, task = payload
    start = time.perf_counter()
    try:
        result = execute_task(field_desc, task)
        record = {"kind": task["kind"], "ok": True, "result": result}
    except Exception as exc:  # reported per task, never aborts the job
        record = {"kind": task["kind"], "ok": False,
                  "error": {"type": type(exc).__name__, "message": str(exc)}}
    record["seconds"] = round(time.perf_counter() - start, 6)
    return record


def run_job(job, jobs=1, fail_fast=False):
    """Execute a validated job dict; returns the report dict."""
    field = validate_job(job)
    payloads = [(job["field"], task) for task in job["tasks"]]
    start = time.perf_counter()
    records = []
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_task_worker, payloads))
        if fail_fast:
            for i, r in enumerate(records):
                if not r["ok"]:
                    records = records[: i + 1]
                    break
    else:
        for payload in payloads:
            record = _task_worker(payload)
            records.append(record)
            if fail_fast and not record["ok"]:
                break
    return {
        "field": {"p": field.p, "vars": list(field.vars)},
        "tasks": records,
        "ok": all(r["ok"] for r in records),
        "total_seconds": round(time.perf_counter() - start, 6),
    }


def run_catalog(entries, jobs=1, fail_fast=False):
    """Check every catalog entry (optionally in parallel); order-normalized report."""
    start = time.perf_counter()
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_entry_worker, entries))
        if fail_fast:
            for i, r in enumerate(results):
                if not r["ok"]:
                    results = results[: i + 1]
                    break
    else:
        results = []
        for e in entries:
            results.append(_entry_worker(e))
            if fail_fast and not results[-1]["ok"]:
                break
    return {
        "entries": results,
        "ok": all(r["ok"] for r in results),
        "count": len(results),
        "total_seconds": round(time.perf_counter() - start, 6),
    }


def _entry_worker(entry):
    try:
        return catalog.check_catalog_entry(entry)
    except Exception as exc:
        return {"name": entry.get("name", "<unnamed>"), "ok": False,
                "checks": {}, "error": {"type": type(exc).__name__, "message": str(exc)}}


def strip_timing(obj):
    """Copy a report without its timing fields (the only nondeterministic part)."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def emit(report, stream=None):
    stream = stream or sys.stdout
    json.dump(report, stream, sort_keys=True, indent=2)
    stream.write("\n")


# -- argument parsing -----------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="insep",
        description="Exact inseparability invariants of p-Fermat hypersurfaces "
                    "over rational function fields of characteristic p.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a JSON job file ('-' for stdin)")
    p_run.add_argument("job")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--fail-fast", action="store_true")

    p_all = sub.add_parser("verify-all", help="run the verification catalog")
    p_all.add_argument("--catalog", default=None)
    p_all.add_argument("--jobs", type=int, default=1)
    p_all.add_argument("--fail-fast", action="store_true")

    p_pdeg = sub.add_parser("pdegree", help="p-degree of K^p(expressions)")
    p_pdeg.add_argument("--field", required=True, help='JSON, e.g. {"p":2,"vars":["s","t"]}')
    p_pdeg.add_argument("exprs", nargs="+")

    p_cls = sub.add_parser("classify", help="classify one hypersurface")
    p_cls.add_argument("--field", required=True)
    p_cls.add_argument("--lambda", dest="lambdas", action="append", nargs="+",
                       required=True, help="coefficient expressions")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            if args.job == "-":
                job = json.load(sys.stdin)
            else:
                with open(args.job) as fh:
                    job = json.load(fh)
            report = run_job(job, jobs=args.jobs, fail_fast=args.fail_fast)
            emit(report)
            return 0 if report["ok"] else 1

        if args.command == "verify-all":
            entries = catalog.load_catalog(args.catalog)
            report = run_catalog(entries, jobs=args.jobs, fail_fast=args.fail_fast)
            emit(report)
            if not report["ok"]:
                for r in report["entries"]:
                    if not r["ok"]:
                        print("FAILED: %s" % r["name"], file=sys.stderr)
            return 0 if report["ok"] else 1

        if args.command == "pdegree":
            field_desc = json.loads(args.field)
            report = run_job({"field": field_desc,
                              "tasks": [{"kind": "pdegree", "exprs": args.exprs}]})
            emit(report)
            return 0 if report["ok"] else 1

        if args.command == "classify":
            field_desc = json.loads(args.field)
            lams = [e for group in args.lambdas for e in group]
            report = run_job({"field": field_desc,
                              "tasks": [{"kind": "classify", "lambda": lams}]})
            emit(report)
            return 0 if report["ok"] else 1
    except (JobValidationError, ParseError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
