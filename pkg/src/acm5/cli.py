"""Command line front end.

Subcommands:

* ``acm5 validate <file>`` -- schema check plus the d^2 = 0 gate;
* ``acm5 classify <file> [--json|--text] [--float]`` -- full structure
  report (torsion class, predicates, compatible-connection data);
* ``acm5 family --params a1 a2 a3 a4 (--emit <file> | --verify |
  --identify)`` -- generate, replay or identify a family coframe.

Exit codes: 0 success, 1 verification or validation failure, 2 usage or
constraint error.  All numbers are exact rational strings unless --float
is given.  Set ACM5_COLOR=1 to colorize text output.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .acms import PHI, d_eta_form, frame_connection, predicates
from .connection import (
    characteristic_connection,
    curvature,
    parallel_spinor_check,
    spinor_kernel,
    spinor_space,
    torsion_type,
)
from .errors import (
    ACM5Error,
    DegenerateInputError,
    IntegrabilityError,
    SchemaError,
)
from .exterior import CoframeData, Form, Symbol, d_squared_zero, form, render_form
from .family import build, identify_group, verify_identities
from .frames import connection_from_structure
from .scalars import fmt_scalar
from .torsionclass import MODULE_NAMES, classify, intrinsic_torsion

_RAT = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _parse_rational(s, where):
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RAT.match(s.strip()):
        raise SchemaError(f"{where}: not a rational 'p/q' string: {s!r}")
    return Fraction(s)


def load_coframe(path: str) -> CoframeData:
    """Parse and schema-check a coframe document."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(
                f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level document must be an object")
    for key in ("symbols", "d", "orientation"):
        if key not in doc:
            raise SchemaError(f"missing required key {key!r}")
    symbols = []
    for i, entry in enumerate(doc["symbols"]):
        if not isinstance(entry, dict) or "name" not in entry or "kind" not in entry:
            raise SchemaError(f"symbols[{i}]: need objects with 'name' and 'kind'")
        symbols.append(Symbol(entry["name"], entry["kind"], entry.get("index")))
    metric = [s for s in symbols if s.kind == "metric"]
    auxiliary = [s for s in symbols if s.kind == "auxiliary"]
    if len(metric) != 5 or sorted(s.index for s in metric) != [1, 2, 3, 4, 5]:
        raise SchemaError("need exactly five metric symbols with indices 1..5")
    if any(s.kind not in ("metric", "auxiliary") for s in symbols):
        raise SchemaError("symbol kind must be 'metric' or 'auxiliary'")
    ordered = sorted(metric, key=lambda s: s.index) + auxiliary
    ids = {s.name: i for i, s in enumerate(ordered)}

    def parse_form(terms, degree, where):
        if not isinstance(terms, list):
            raise SchemaError(f"{where}: expected a list of terms")
        out = {}
        for t in terms:
            if not isinstance(t, dict) or "coeff" not in t or "wedge" not in t:
                raise SchemaError(f"{where}: terms need 'coeff' and 'wedge'")
            names = t["wedge"]
            if len(names) != degree:
                raise SchemaError(f"{where}: wedge list must have length {degree}")
            try:
                idx = tuple(ids[n] for n in names)
            except KeyError as exc:
                raise SchemaError(f"{where}: unknown symbol {exc.args[0]!r}") from exc
            if list(idx) != sorted(set(idx)):
                raise SchemaError(f"{where}: wedge list must be strictly increasing")
            coef = _parse_rational(t["coeff"], where)
            if idx in out:
                raise SchemaError(f"{where}: duplicate monomial {names}")
            if coef:
                out[idx] = coef
        return form(degree, out)

    if set(doc["d"].keys()) - set(ids):
        raise SchemaError(f"d-table names unknown symbols: {sorted(set(doc['d']) - set(ids))}")
    d_table = {}
    for name, terms in doc["d"].items():
        d_table[ids[name]] = parse_form(terms, 2, f"d[{name}]")
    for name, sid in ids.items():
        d_table.setdefault(sid, form(2, {}))
    orientation = doc["orientation"]
    if sorted(orientation) != sorted(s.name for s in metric):
        raise SchemaError("orientation must list the five metric symbols")
    orient_ids = tuple(ids[n] for n in orientation)
    trig_rules = None
    if "trig" in doc:
        from .exterior import TrigRules

        tr = doc["trig"]
        df = parse_form(tr["df"], 1, "trig.df") if "df" in tr else None
        dg = parse_form(tr["dg"], 1, "trig.dg") if "dg" in tr else None
        trig_rules = TrigRules(df, dg)
    return CoframeData(tuple(ordered), d_table, orient_ids, trig_rules)


def emit_coframe(c: CoframeData, path: str):
    doc = coframe_document(c)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def coframe_document(c: CoframeData):
    def term_list(f: Form):
        return [
            {"coeff": fmt_scalar(f.terms[idx]), "wedge": [c.name_of(i) for i in idx]}
            for idx in sorted(f.terms)
        ]

    return {
        "symbols": [
            {"name": s.name, "kind": s.kind, **({"index": s.index} if s.index else {})}
            for s in c.symbols
        ],
        "d": {c.name_of(sid): term_list(c.d_table[sid]) for sid in range(c.n_symbols)},
        "orientation": [c.name_of(i) for i in c.orientation],
    }


def _to_float_coframe(c: CoframeData) -> CoframeData:
    def conv(f: Form):
        return Form(f.degree, {idx: float(v) for idx, v in f.terms.items()})

    table = {sid: conv(f) for sid, f in c.d_table.items()}
    return CoframeData(c.symbols, table, c.orientation, c.trig_rules)


def _tol_scale(c: CoframeData):
    m = max((f.max_abs() for f in c.d_table.values()), default=1.0)
    return max(1.0, m) ** 3


# ---------------------------------------------------------------------------
# report assembly


def classification_report(c: CoframeData, tol_scale=1.0):
    """The full pipeline: solve, project, classify, predicates, connection."""
    report = {}
    report["symbols"] = [s.name for s in c.symbols]
    gate = d_squared_zero(c, tol_scale)
    report["validation"] = {
        "d_squared_zero": gate.ok,
        "failing_generators": gate.failing,
    }
    if not gate.ok:
        return report, 1
    omega = connection_from_structure(c)
    fc = frame_connection(omega)
    gamma = intrinsic_torsion(fc, tol_scale)
    cls = classify(gamma, tol_scale)
    report["classification"] = {
        "norms": {k: fmt_scalar(v) for k, v in cls.norms.items()},
        "strict_class": list(cls.class_tags),
        "integrable": cls.integrable,
    }
    preds = predicates(fc, tol_scale)
    report["predicates"] = preds.as_dict()
    deta = d_eta_form(fc, tol_scale)
    prop = _proportionality(deta, PHI, tol_scale)
    report["predicates"]["d_eta_vs_fundamental"] = (
        fmt_scalar(prop) if (preds.quasi_sasaki and prop is not None) else None
    )
    if not preds.generalized_quasi_sasaki:
        report["characteristic_connection"] = None
        report["note"] = (
            "no compatible connection section: the structure is not "
            "generalized quasi-Sasaki"
        )
        return report, 0
    cc = characteristic_connection(c, omega, tol_scale)
    parts, tag = torsion_type(cc, tol_scale)
    cur = curvature(c, cc.omega_c, tol_scale)
    space = spinor_space()
    flip = form(2, {(0, 1): 1, (2, 3): -1})
    ker = spinor_kernel(space, flip)
    parallel = parallel_spinor_check(space, cc.omega_c, ker.kernel_basis)
    names = [s.name for s in c.symbols]
    report["characteristic_connection"] = {
        "connection_forms": {
            f"w({i + 1},{j + 1})": render_form(cc.omega_c.omega[i][j], names)
            for i in range(5)
            for j in range(i + 1, 5)
            if not cc.omega_c.omega[i][j].is_zero(tol_scale)
        },
        "torsion_type": tag,
        "curvature_entries": {
            f"R({i + 1},{j + 1})": render_form(cur.curvature[i][j], names)
            for i in range(5)
            for j in range(i + 1, 5)
            if not cur.curvature[i][j].is_zero(tol_scale)
        },
        "ricci_diagonal": [fmt_scalar(cur.ricci[i][i]) for i in range(5)],
        "ricci": [[fmt_scalar(v) for v in row] for row in cur.ricci],
        "holonomy_dimension": len(cur.holonomy_basis),
        "spinor_kernel_dimension": ker.dimension,
        "parallel_spinors": parallel,
    }
    return report, 0


def _proportionality(f1: Form, f2: Form, tol_scale=1.0):
    """Constant c with f1 = c f2, or None."""
    if f1.is_zero(tol_scale):
        return Fraction(0)
    for idx, c in f2.terms.items():
        ratio = f1.coefficient(idx) / c
        if (f1 - f2.scale(ratio)).is_zero(tol_scale):
            return ratio
        return None
    return None


def _color(s, code, enabled):
    return f"\x1b[{code}m{s}\x1b[0m" if enabled else s


def render_text(report, color=False):
    lines = []
    lines.append(_color("coframe: " + " ".join(report["symbols"]), "1", color))
    v = report["validation"]
    lines.append(f"d^2 = 0: {v['d_squared_zero']}")
    if not v["d_squared_zero"]:
        lines.append("failing generators: " + ", ".join(v["failing_generators"]))
        return "\n".join(lines)
    cls = report["classification"]
    if cls["integrable"]:
        lines.append("class: cosymplectic (integrable); torsion vanishes")
    else:
        lines.append("strict class: " + (" + ".join(cls["strict_class"]) or "none"))
    lines.append(
        "norms: " + "  ".join(f"{k}={cls['norms'][k]}" for k in (*MODULE_NAMES, "residual"))
    )
    lines.append("predicates:")
    for k, val in report["predicates"].items():
        if k == "d_eta_vs_fundamental":
            if val is not None:
                lines.append(f"  d eta = {val} * fundamental form")
            continue
        lines.append(f"  {k}: {val}")
    cc = report.get("characteristic_connection")
    if cc is None:
        lines.append(report.get("note", ""))
    else:
        lines.append("compatible connection:")
        for k, val in cc["connection_forms"].items():
            lines.append(f"  {k} = {val}")
        lines.append(f"  torsion type: {cc['torsion_type']}")
        for k, val in cc["curvature_entries"].items():
            lines.append(f"  {k} = {val}")
        lines.append("  ricci diagonal: " + " ".join(cc["ricci_diagonal"]))
        lines.append(f"  holonomy dimension: {cc['holonomy_dimension']}")
        lines.append(f"  spinor kernel dimension: {cc['spinor_kernel_dimension']}")
        lines.append(f"  parallel spinors: {cc['parallel_spinors']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args):
    try:
        c = load_coframe(args.path)
    except FileNotFoundError:
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    gate = d_squared_zero(c)
    if gate.ok:
        print("ok: schema valid and d^2 = 0 on all generators")
        return 0
    names = [s.name for s in c.symbols]
    for name in gate.failing:
        res = gate.residuals[name]
        print(f"d^2 {name} = {render_form(res, names)} != 0", file=sys.stderr)
    return 1


def cmd_classify(args):
    try:
        c = load_coframe(args.path)
    except FileNotFoundError:
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    tol = 1.0
    if args.float:
        c = _to_float_coframe(c)
        tol = _tol_scale(c)
    try:
        report, code = classification_report(c, tol)
    except ACM5Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        color = bool(os.environ.get("ACM5_COLOR"))
        print(render_text(report, color))
    return code


def _family_params(args):
    try:
        return [Fraction(p) for p in args.params]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"parameters must be rationals: {exc}") from exc


def cmd_family(args):
    try:
        params = _family_params(args)
    except SchemaError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.emit:
        try:
            inst = build(*params)
        except IntegrabilityError as exc:
            print(f"constraint error: {exc}", file=sys.stderr)
            return 2
        emit_coframe(inst.coframe, args.emit)
        print(f"wrote {args.emit}")
        return 0
    if args.verify:
        try:
            inst = build(*params)
        except IntegrabilityError as exc:
            print(f"constraint error: {exc}", file=sys.stderr)
            return 2
        rep = verify_identities(inst)
        color = bool(os.environ.get("ACM5_COLOR"))
        for name, ok, detail in rep.items:
            mark = _color("PASS", "32", color) if ok else _color("FAIL", "31", color)
            print(f"{mark} {name}" + (f" ({detail})" if detail else ""))
        print("all identities hold" if rep.ok else "verification failed")
        return 0 if rep.ok else 1
    # --identify
    try:
        g = identify_group(tuple(params))
    except (DegenerateInputError, IntegrabilityError) as exc:
        print(f"constraint error: {exc}", file=sys.stderr)
        return 2
    a1, a2, a3, a4 = params
    flavor = ""
    if g.tag == "su2+su2" and a3 == 0 and a4 == 0:
        flavor = " (Stiefel-type W4 structure)"
    print(f"{g.tag}{flavor}")
    if g.frame_change is None:
        print(f"certificate: not emitted ({g.note})")
    else:
        status = "verified" if g.certificate_verified else "FAILED"
        extra = ", reconstructed by parameter swap" if g.reconstructed else ""
        print(f"certificate: {status} ({g.note}{extra})")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="acm5",
        description="exact computations with almost contact metric 5-coframes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="schema check plus the d^2 = 0 gate")
    p_val.add_argument("path")
    p_val.set_defaults(func=cmd_validate)

    p_cls = sub.add_parser("classify", help="full structure report for a coframe file")
    p_cls.add_argument("path")
    fmt = p_cls.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true")
    p_cls.add_argument("--float", action="store_true", help="binary64 cross-check mode")
    p_cls.set_defaults(func=cmd_classify)

    p_fam = sub.add_parser("family", help="generate, replay or identify a family coframe")
    p_fam.add_argument("--params", nargs=4, required=True, metavar=("a1", "a2", "a3", "a4"))
    action = p_fam.add_mutually_exclusive_group(required=True)
    action.add_argument("--emit", metavar="path")
    action.add_argument("--verify", action="store_true")
    action.add_argument("--identify", action="store_true")
    p_fam.set_defaults(func=cmd_family)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
