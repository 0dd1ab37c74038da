"""Command-line front end: ``qtwist <command> --input f.json [--max-degree N] [--output f.json]``.

Exit codes: 0 all checks pass, 1 some check failed, 2 error before checking.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import re
import sys
import time
from dataclasses import dataclass, field

from . import errors as E
from .exactnum import RadicalTable, format_rational, rat
from .yd import size_budget

log = logging.getLogger("qtwist")

DATUM_KEYS = {"cartan", "q", "linking", "q_I", "sqrt_q", "max_degree"}

COMMANDS = {
    "validate": (DATUM_KEYS, {"cartan", "q"}),
    "present": (DATUM_KEYS, {"cartan", "q"}),
    "serre": (DATUM_KEYS | {"n"}, {"cartan", "q"}),
    "twist-to-dj": (DATUM_KEYS, {"cartan", "q", "q_I"}),
    "verify-iso": (DATUM_KEYS | {"r5_constant"}, {"cartan", "q"}),
    "quotient-dj": (DATUM_KEYS, {"cartan", "q"}),
    "halfroot-cocycle": (DATUM_KEYS | {"span"}, {"cartan", "q", "sqrt_q"}),
    "rack-check": ({"n", "cocycle", "elements", "op", "q", "phi"}, set()),
    "nichols-hilbert": ({"n", "cocycle", "max_degree"}, {"n"}),
    "hq-deform": ({"n", "lambda"}, {"n", "lambda"}),
    "compose-twist": ({"n", "lambda", "phi"}, {"n"}),
}


@dataclass
class Job:
    command: str
    data: dict
    raw: bytes
    max_degree: int | None = None
    inputs: dict = field(default_factory=dict)


# ------------------------------------------------------------ parsing

def _line_of(raw: str, token) -> int | None:
    m = re.search(re.escape(json.dumps(token)), raw)
    return raw.count("\n", 0, m.start()) + 1 if m else None


def _rationals(obj, raw, path):
    """Parse every string/int leaf of ``obj`` as an exact rational."""
    if isinstance(obj, list):
        return [_rationals(v, raw, f"{path}[{k}]") for k, v in enumerate(obj)]
    if isinstance(obj, float):
        raise E.ParseError(f"{path}: floating-point value {obj!r}; use \"p/q\"", _line_of(raw, obj))
    try:
        return rat(obj)
    except E.ParseError as e:
        raise E.ParseError(f"{path}: {e.reason}", _line_of(raw, obj)) from None


def _int(data, key, raw):
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise E.SchemaError(key, "expected an integer")
    return v


def parse_input(command: str, source, max_degree: int | None = None) -> Job:
    if command not in COMMANDS:
        raise E.UnknownCommand(f"unknown command {command!r}")
    if hasattr(source, "read"):
        raw = source.read()
    else:
        with open(source, "rb") as fh:
            raw = fh.read()
    if isinstance(raw, str):
        raw = raw.encode()
    text = raw.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise E.ParseError(e.msg, e.lineno) from None
    if not isinstance(data, dict):
        raise E.SchemaError("<root>", "expected a JSON object")
    allowed, required = COMMANDS[command]
    for k in sorted(data):
        if k not in allowed:
            raise E.SchemaError(k, "unknown key")
    for k in sorted(required):
        if k not in data:
            raise E.SchemaError(k, "missing")
    if command == "rack-check" and "n" not in data and not {"elements", "op", "q"} <= set(data):
        raise E.SchemaError("n", "give n or elements/op/q")
    job = Job(command, data, raw, max_degree)
    inp = job.inputs
    if "cartan" in data:
        A = data["cartan"]
        if not (isinstance(A, list) and all(isinstance(r, list) and all(isinstance(a, int) and not isinstance(a, bool) for a in r) for r in A)):
            raise E.SchemaError("cartan", "expected an array of integer arrays")
        inp["cartan"] = A
    for key in ("q", "linking", "q_I", "r5_constant", "lambda"):
        if key in data:
            inp[key] = _rationals(data[key], text, key)
    if "sqrt_q" in data:
        inp["sqrt_q"] = _rationals(data["sqrt_q"], text, "sqrt_q")
    for key in ("n", "span", "max_degree"):
        if key in data:
            inp[key] = _int(data, key, text)
    if "cocycle" in data:
        c = data["cocycle"]
        alias = {"-1": "minus_one", "minus_one": "minus_one", "chi": "chi"}
        if c not in alias:
            raise E.SchemaError("cocycle", "expected \"-1\" or \"chi\"")
        inp["cocycle"] = alias[c]
    if "op" in data:
        inp["op"] = data["op"]
        inp["elements"] = data.get("elements")
    if "phi" in data:
        if not isinstance(data["phi"], dict):
            raise E.SchemaError("phi", "expected a table object")
        inp["phi"] = data["phi"]
    if job.max_degree is None:
        job.max_degree = inp.get("max_degree")
    return job


# ------------------------------------------------------------ execution

def _datum(inp):
    from .datum import validate_reduced_datum

    return validate_reduced_datum(inp["cartan"], inp["q"], inp.get("linking"))


def _radicals(inp, datum):
    r = inp["sqrt_q"]
    t = datum.theta
    if len(r) == t and all(len(row) == t for row in r) and all(
        r[i][j] * r[i][j] == datum.q[i][j] for i in range(t) for j in range(t)
    ):
        return r
    table = RadicalTable()
    for row in r:
        if len(row) != 2:
            raise E.SchemaError("sqrt_q", "expected [q, r] pairs or a matrix of roots")
        table.add(row[0], row[1])
    return table


def _elem_list(P):
    return [{"label": lab, "element": r.to_json()} for lab, r in zip(P.labels, P.relations)]


def _strip(report):
    report = dict(report)
    report.pop("seconds", None)
    return report


def run_validate(job):
    d = _datum(job.inputs)
    out = {"datum": d.to_json(), "warnings": list(d.warnings), "checks": [{"item": "datum", "pass": True}]}
    if "q_I" in job.inputs:
        from .datum import build_dj_datum

        dj = build_dj_datum(d, job.inputs["q_I"])
        out["qhat"] = [[format_rational(a) for a in r] for r in dj.qhat]
        out["checks"].append({"item": "dj_datum", "pass": True})
    return out


def run_present(job, quotient=False):
    from .qgroups import build_ured, default_bound, quotient_dj

    d = _datum(job.inputs)
    D = job.max_degree or default_bound(d)
    P = build_ured(d, D)
    if quotient:
        P = quotient_dj(P)
    return {
        "bound": D,
        "generators": P.generators,
        "relations": _elem_list(P),
        "checks": [{"item": "relations_built", "count": len(P.relations), "pass": True}],
    }


def run_serre(job):
    from .qgroups import iterated_adjoint, serre_expand

    d = _datum(job.inputs)
    t = d.theta
    checks, elems = [], []
    for kind in ("x", "y"):
        for i in range(t):
            for j in range(t):
                if i == j:
                    continue
                n = job.inputs.get("n", 1 - d.cartan[i][j])
                s = serre_expand(kind, i, j, n, d)
                ok = s == iterated_adjoint(kind, i, j, n, d)
                checks.append({"item": f"serre_{kind}[{i + 1},{j + 1}]", "n": n, "pass": ok})
                elems.append({"label": f"serre_{kind}[{i + 1},{j + 1}]", "element": s.to_json()})
    return {"relations": elems, "checks": checks}


def run_twist(job):
    from .qgroups import twist_to_dj

    d = _datum(job.inputs)
    _, P, rep = twist_to_dj(d, job.inputs["q_I"], job.max_degree)
    return _strip(rep)


def run_iso(job):
    from .qgroups import verify_isomorphism

    d = _datum(job.inputs)
    rep = verify_isomorphism(d, job.max_degree, job.inputs.get("r5_constant"))
    for c in rep["checks"]:
        c["pass"] = c["member"]
    return _strip(rep)


def run_halfroot(job):
    from .qgroups import verify_halfroot

    d = _datum(job.inputs)
    rep = verify_halfroot(d, _radicals(job.inputs, d), job.max_degree, job.inputs.get("span", 3))
    return _strip(rep)


def run_rack(job):
    from . import racks as R

    inp = job.inputs
    checks = []
    if "op" in inp:
        X = R.validate_rack(inp["op"], inp.get("elements"))
        checks.append({"item": "rack", "pass": True})
        q = inp.get("q")
        out = {"size": X.size}
    else:
        T = R.transposition_rack(inp["n"])
        X = T.rack
        checks.append({"item": "rack", "pass": True})
        q = T.cocycles[inp.get("cocycle", "minus_one")] if "q" not in inp else inp["q"]
        out = {"size": X.size, "elements": T.labels}
    if q is not None:
        R.validate_rack_cocycle(X, q)
        checks.append({"item": "rack_cocycle", "pass": True})
    if "phi" in inp:
        tab = {}
        names = {X.label(i): i for i in range(X.size)}
        from .cocycles import _split_pair

        for key, v in inp["phi"].get("values", {}).items():
            a, b = _split_pair(key)
            if a not in names or b not in names:
                raise E.SchemaError("phi", f"unknown rack elements in {key!r}")
            tab[(names[a], names[b])] = rat(v)

        def phi(x, y):
            return tab.get((x, y), rat(1))

        qphi, valid, witness = R.twist_rack_cocycle(X, q if q is not None else [[rat(1)] * X.size] * X.size, phi)
        out["twisted"] = [[format_rational(a) for a in r] for r in qphi]
        out["witness"] = list(witness) if witness else None
        checks.append({"item": "twisted_rack_cocycle", "pass": valid})
    out["checks"] = checks
    return out


def run_hilbert(job):
    from . import racks as R

    inp = job.inputs
    c = inp.get("cocycle", "minus_one")
    D = job.max_degree if job.max_degree is not None else 4
    series = R.nichols_hilbert(inp["n"], c, D)
    checks = []
    if inp["n"] in (3, 4, 5):
        fk = R.fk_hilbert(inp["n"], c, min(D, 3 if inp["n"] > 3 else D))
        checks.append({"item": "fk_quadratic_agrees", "degrees": len(fk) - 1, "pass": fk == series[: len(fk)]})
    return {"series": series, "total": sum(series), "bound": D, "checks": checks}


def run_hq(job):
    from . import racks as R

    return _strip(R.verify_exp_deformation(job.inputs["n"], job.inputs["lambda"]))


def run_compose(job):
    from . import racks as R
    from .cocycles import GroupCocycleTable

    inp = job.inputs
    if "phi" in inp:
        phi = GroupCocycleTable.from_json(inp["phi"], validate=False)
    else:
        phi = R.load_phi_table()
    try:
        return _strip(R.compose_with_group_twist(inp["n"], phi, inp.get("lambda", 1)))
    except (E.BadTwistTable, E.CocycleViolation) as e:
        # a rejected table is a failed check, not a malformed job
        return {"checks": [{"item": "phi_table", "error": type(e).__name__, "witness": list(e.witness or ()), "pass": False}]}


RUNNERS = {
    "validate": run_validate,
    "present": run_present,
    "serre": run_serre,
    "twist-to-dj": run_twist,
    "verify-iso": run_iso,
    "quotient-dj": lambda job: run_present(job, quotient=True),
    "halfroot-cocycle": run_halfroot,
    "rack-check": run_rack,
    "nichols-hilbert": run_hilbert,
    "hq-deform": run_hq,
    "compose-twist": run_compose,
}


def execute(job: Job):
    """Run ``job``; returns (report dict, exit code)."""
    t0 = time.perf_counter()
    report = {
        "command": job.command,
        "input_hash": hashlib.sha256(job.raw).hexdigest(),
        "bounds": {"max_degree": job.max_degree, "size_budget": size_budget()},
    }
    try:
        body = RUNNERS[job.command](job)
    except E.QtwistError as e:
        report.update({"error": {"type": type(e).__name__, "message": str(e)}, "checks": [], "pass": False})
        w = getattr(e, "witness", None)
        if w is not None:
            report["error"]["witness"] = list(w)
        code = 2
    else:
        report.update(body)
        if "bound" in body:
            report["bounds"]["max_degree"] = body["bound"]
        report["pass"] = bool(body.get("pass", True)) and all(c.get("pass", True) for c in body.get("checks", []))
        code = 0 if report["pass"] else 1
    report["wall_time"] = round(time.perf_counter() - t0, 6)
    return report, code


def _dump(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="qtwist", description="Exact verification of Hopf 2-cocycle deformations.")
    ap.add_argument("command", help=", ".join(COMMANDS))
    ap.add_argument("--input", required=True, help="JSON input file, or - for stdin")
    ap.add_argument("--max-degree", type=int, default=None)
    ap.add_argument("--output", default=None)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        job = parse_input(args.command, sys.stdin.buffer if args.input == "-" else args.input, args.max_degree)
    except (E.QtwistError, OSError) as e:
        report = {"command": args.command, "error": {"type": type(e).__name__, "message": str(e)}, "pass": False}
        code = 2
    else:
        log.info("running %s", job.command)
        report, code = execute(job)
    text = _dump(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
