"""Command-line front end.

    foliamilnor analyze input.json [--excess] [--track] [--seed N] [--t0 Q] [--json out.json]
    foliamilnor chern N D
    foliamilnor local input.json --point "a,b,c"

Input documents are JSON with a top-level ``"schema": 1``.  A foliation
input looks like::

    {
      "schema": 1,
      "n": 3,
      "chart": 3,
      "variables": ["z1", "z2", "z3"],
      "field": "Qi",
      "vector_field": ["z1^2", "z1^2", "z2^2"],
      "components": [
        {"name": "C", "kind": "curve", "generators": ["x0", "x1"], "ci_degrees": [1, 1]},
        {"name": "p", "kind": "point", "point": ["1", "1", "1", "0"]}
      ],
      "perturbation": {"style": "full", "seed": 0, "t0": "1/64"}
    }

Curve generators are homogeneous in the coordinates x0..xn (or the names in
``"coords"``); ``"affine_generators"`` in the chart variables may be given
instead.  ``local`` also accepts ``{"schema": 1, "variables": [...],
"generators": [...]}``.

Exit codes: 0 when every check in the report holds, 1 when one fails,
2 for invalid input, 3 when the declared components do not exhaust the
positive-dimensional singular set.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .chow import baum_bott_total, chern_twisted_tangent
from .continuation import DEFAULT_T0, DEFAULT_T_MIN, STYLES, PerturbationNotGeneric, run_continuation, write_tracking_log
from .foliation import CodimensionError, ComponentSpec, Foliation, default_coords
from .ideal import Ideal, LimitExceeded, local_multiplicity
from .milnor import ComponentResult, NotExhaustive, milnor_by_conservation, milnor_curve_excess
from .poly import ParseError, Scalar, make_ring, parse_poly

__all__ = ["InputError", "load_input", "parse_scalar", "cmd_analyze", "cmd_chern", "cmd_local",
           "exit_code", "main"]

SCHEMA = 1
EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_NOT_EXHAUSTIVE = 0, 1, 2, 3


class InputError(ValueError):
    """An input document that cannot be interpreted."""


def parse_scalar(text) -> Scalar:
    """A Gaussian rational such as ``3``, ``-1/2`` or ``1+2*i``."""
    if isinstance(text, (int, Fraction)):
        return Scalar(text)
    try:
        p = parse_poly(str(text), ())
    except ParseError as exc:
        raise InputError(f"bad number {text!r}: {exc}") from exc
    if not p.is_constant():
        raise InputError(f"bad number {text!r}")
    return p.constant_term()


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError("top level of the input must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise InputError(f"unsupported or missing schema {doc.get('schema')!r}; expected {SCHEMA}")
    return doc


def _parse_list(items, ring, what: str) -> list:
    if not isinstance(items, list) or not all(isinstance(s, str) for s in items):
        raise InputError(f"{what} must be a list of polynomial strings")
    out = []
    for k, s in enumerate(items):
        try:
            out.append(parse_poly(s, ring))
        except ParseError as exc:
            raise InputError(f"{what}[{k}]: {exc}") from exc
    return out


def load_input(doc: dict) -> tuple[Foliation, list]:
    """Foliation and declared components of an input document."""
    n, chart = doc.get("n"), doc.get("chart")
    if not isinstance(n, int) or n < 1:
        raise InputError("'n' must be a positive integer")
    if not isinstance(chart, int) or not 0 <= chart <= n:
        raise InputError(f"'chart' must be an integer in 0..{n}")
    if doc.get("field", "Qi") != "Qi":
        raise InputError("only the field 'Qi' (Gaussian rationals) is supported")
    coords = doc.get("coords") or list(default_coords(n))
    if len(coords) != n + 1:
        raise InputError(f"'coords' needs {n + 1} names")
    variables = doc.get("variables") or [c for k, c in enumerate(coords) if k != chart]
    if len(variables) != n:
        raise InputError(f"'variables' needs {n} names, got {len(variables)}")
    try:
        ring = make_ring(variables)
        coords = make_ring(coords)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    field_strings = doc.get("vector_field")
    if field_strings is None or len(field_strings) != n:
        raise InputError(f"'vector_field' needs {n} polynomial strings")
    comps = _parse_list(field_strings, ring, "vector_field")
    try:
        F = Foliation.from_affine(comps, chart, n, coords)
    except (CodimensionError, ValueError) as exc:
        raise InputError(f"vector field rejected: {exc}") from exc
    components = []
    for k, c in enumerate(doc.get("components") or []):
        name = c.get("name", f"C{k}")
        kind = c.get("kind", "curve")
        ci = c.get("ci_degrees")
        try:
            if kind == "point":
                pt = [parse_scalar(a) for a in c.get("point", [])]
                if len(pt) != n + 1:
                    raise InputError(f"component {name!r}: point needs {n + 1} homogeneous coordinates")
                components.append(ComponentSpec.at_point(name, pt))
            elif kind == "curve":
                if "affine_generators" in c:
                    gens = _parse_list(c["affine_generators"], ring, f"components[{k}].affine_generators")
                    gens = [g.rename(dict(zip(ring, F.chart_ring(chart)))) for g in gens]
                    components.append(ComponentSpec.curve_from_affine(name, gens, coords, chart, ci))
                else:
                    gens = _parse_list(c.get("generators"), coords, f"components[{k}].generators")
                    components.append(ComponentSpec.curve(name, gens, coords, ci))
            else:
                raise InputError(f"component {name!r}: unknown kind {kind!r}")
        except InputError:
            raise
        except ValueError as exc:
            raise InputError(f"component {name!r}: {exc}") from exc
    if len({C.name for C in components}) != len(components):
        raise InputError("component names must be distinct")
    return F, components


def _finite(x):
    """JSON-safe copy: non-finite floats become null."""
    if isinstance(x, float):
        return x if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: _finite(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_finite(v) for v in x]
    return x


def cmd_analyze(path: str, excess: bool = False, track: bool = False, seed: int | None = None,
                t0=None, style: str | None = None, t_min: float | None = None,
                log_path: str | None = None) -> dict:
    """Run the exact pipeline (and optionally excess and continuation) on an input file."""
    doc = _read_json(path)
    F, components = load_input(doc)
    pert = dict(doc.get("perturbation") or {})
    seed = seed if seed is not None else int(pert.get("seed", 0))
    try:
        base = milnor_by_conservation(F, components)
    except NotExhaustive:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "seed": seed,
        "input": doc,
        "foliation": F.summary(),
        "degree": F.degree,
        "baum_bott_total": base.baum_bott_total,
        "isolated_total": base.isolated_total,
        "isolated_by_chart": base.pieces,
        "aggregate_curves": base.aggregate,
        "components": [c.to_dict() for c in base.components],
        "residuals": {},
        "continuation": None,
        "notes": [],
    }
    checks = {"conservation_exact": bool(base.checks["conservation"])}
    if "declared_points_within_isolated" in base.checks:
        checks["declared_points_within_isolated"] = base.checks["declared_points_within_isolated"]
    curves = [C for C in components if C.kind == "curve"]
    if F.degree == 0:
        report["notes"].append("degree 0: the singular set is a single point; nothing to split")

    if excess:
        total = 0
        for C in curves:
            r = milnor_curve_excess(F, C)
            total += r.value
            report["components"].append(
                ComponentResult(C.name, "curve", "excess", r.value, r.flags + r.warnings).to_dict())
        if curves:
            # conservation wins; the gap is reported, never reconciled
            report["residuals"]["conservation_minus_excess"] = base.aggregate - total

    if track:
        style = style or pert.get("style", "full")
        if style not in STYLES:
            raise InputError(f"unknown perturbation style {style!r}; choose from {', '.join(STYLES)}")
        t0 = Fraction(str(t0)) if t0 is not None else Fraction(str(pert.get("t0", DEFAULT_T0)))
        t_min = t_min if t_min is not None else float(pert.get("t_min", DEFAULT_T_MIN))
        params = {k: [int(parse_scalar(a).re) for a in pert[k]] for k in ("alpha", "beta") if k in pert}
        log: list | None = [] if log_path else None
        try:
            res = run_continuation(F, components, seed=seed, style=style, t0=t0, t_min=t_min,
                                   params=params or None, log=log)
        except PerturbationNotGeneric as exc:
            report["continuation"] = {"error": str(exc)}
            checks["continuation_ran"] = False
        else:
            if log_path:
                with open(log_path, "w", encoding="utf-8") as fh:
                    write_tracking_log(log, fh)
            report["continuation"] = res.summary()
            counts = res.counts()
            for C in components:
                report["components"].append(ComponentResult(C.name, C.kind, "continuation", counts.get(C.name)).to_dict())
            tracked_iso = res.attribution.isolated + sum(counts.get(C.name, 0) for C in components if C.kind == "point")
            tracked_curves = sum(counts.get(C.name, 0) for C in curves)
            checks["continuation_total_equals_baum_bott"] = (res.checks["attribution_complete"]
                                                             and res.attribution.total() == base.baum_bott_total)
            checks["continuation_matches_exact"] = (tracked_iso == base.isolated_total
                                                    and tracked_curves == base.aggregate)
            if excess and curves:
                for C in curves:
                    ex = next(c for c in report["components"] if c["name"] == C.name and c["method"] == "excess")
                    report["residuals"][f"{C.name}:continuation_minus_excess"] = counts.get(C.name, 0) - ex["value"]
    checks["conservation"] = all(checks.values())
    report["checks"] = checks
    return _finite(report)


def exit_code(report: dict) -> int:
    return EXIT_OK if all(report["checks"].values()) else EXIT_CHECK_FAILED


def cmd_chern(n: int, d: int) -> dict:
    """Coefficients of c(TP^n(d-1)) and the Baum-Bott total for degree d."""
    if n < 1 or d < 0:
        raise InputError("chern needs n >= 1 and d >= 0")
    c = chern_twisted_tangent(n, d - 1)
    total = baum_bott_total(n, d)
    closed = sum(d ** i for i in range(n + 1))
    text = " ".join(str(a) for a in c.coeffs) + f"; total {total}"
    if d >= 2:
        text += f" = Σ {d}^i " + ("✓" if total == closed else "✗")
    return {"schema": SCHEMA, "n": n, "d": d, "coefficients": list(c.coeffs), "baum_bott_total": total,
            "sum_of_powers": closed, "check": total == closed, "text": text}


def cmd_local(generators: Sequence[str], point: Sequence, variables: Sequence[str] | None = None) -> int:
    """Local multiplicity of the ideal of ``generators`` at an affine point."""
    pt = [parse_scalar(a) for a in point]
    if variables is None:
        names = sorted({v for g in generators for v in _identifiers(g)})
        variables = names if len(names) == len(pt) else [f"x{k}" for k in range(len(pt))]
    if len(variables) != len(pt):
        raise InputError(f"point has {len(pt)} coordinates but there are {len(variables)} variables")
    ring = make_ring(variables)
    gens = _parse_list(list(generators), ring, "generators")
    try:
        return local_multiplicity(Ideal(ring, gens), pt)
    except LimitExceeded as exc:
        raise InputError(f"{exc}") from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _identifiers(text: str) -> set:
    from .poly import _IDENT
    return {m for m in _IDENT.findall(text) if m != "i"}


def _local_from_file(path: str, point_text: str) -> int:
    doc = _read_json(path)
    point = [s.strip() for s in point_text.split(",") if s.strip()]
    if "generators" in doc:
        return cmd_local(doc["generators"], point, doc.get("variables"))
    if "vector_field" in doc:
        n = doc.get("n")
        variables = doc.get("variables") or [c for k, c in enumerate(default_coords(n)) if k != doc.get("chart")]
        return cmd_local(doc["vector_field"], point, variables)
    raise InputError("local needs 'generators' or 'vector_field' in the input")


def _print_summary(report: dict, out) -> None:
    f = report["foliation"]
    print(f"degree {report['degree']} foliation on P^{f['n']}; Baum-Bott total {report['baum_bott_total']}", file=out)
    pieces = ", ".join(f"chart {p['chart']}: {p['count']}" for p in report["isolated_by_chart"])
    print(f"isolated total {report['isolated_total']} ({pieces})", file=out)
    for c in report["components"]:
        flags = f"  [{'; '.join(c['flags'])}]" if c["flags"] else ""
        value = "-" if c["value"] is None else c["value"]
        print(f"  {c['name']:<8} {c['kind']:<6} {c['method']:<13} {value}{flags}", file=out)
    for k, v in report["residuals"].items():
        print(f"  residual {k}: {v}", file=out)
    cont = report["continuation"]
    if cont and "error" not in cont:
        a = cont["attribution"]
        print(f"continuation: seed(s) {cont['seeds_tried']}, paths {cont['path_status']}, "
              f"isolated clusters {a['isolated']}, unattributed {len(a['unattributed'])}", file=out)
    elif cont:
        print(f"continuation failed: {cont['error']}", file=out)
    for note in report["notes"]:
        print(f"note: {note}", file=out)
    print("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in report["checks"].items()), file=out)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="foliamilnor", description="Milnor numbers of foliations on P^n.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="Milnor numbers of an input foliation")
    a.add_argument("file")
    a.add_argument("--excess", action="store_true", help="also apply the excess-intersection formula")
    a.add_argument("--track", action="store_true", help="also run the perturbation tracking")
    a.add_argument("--seed", type=int, default=None)
    a.add_argument("--t0", default=None, help="start parameter as a rational, e.g. 1/64")
    a.add_argument("--t-min", type=float, default=None, help="smallest |t| reached by the tracker")
    a.add_argument("--style", choices=STYLES, default=None, help="perturbation family")
    a.add_argument("--json", dest="json_out", default=None, help="write the report here")
    a.add_argument("--log", default=None, help="write the tracking log (JSON lines) here")
    c = sub.add_parser("chern", help="Chern class of the twisted tangent bundle")
    c.add_argument("n", type=int)
    c.add_argument("d", type=int)
    c.add_argument("--json", action="store_true", help="print JSON instead of text")
    lo = sub.add_parser("local", help="local multiplicity at a point")
    lo.add_argument("file")
    lo.add_argument("--point", required=True, help='affine coordinates, e.g. "0,0"')
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "chern":
            res = cmd_chern(args.n, args.d)
            print(json.dumps(res, sort_keys=True, ensure_ascii=False) if args.json else res["text"])
            return EXIT_OK if res["check"] else EXIT_CHECK_FAILED
        if args.command == "local":
            print(_local_from_file(args.file, args.point))
            return EXIT_OK
        report = cmd_analyze(args.file, excess=args.excess, track=args.track, seed=args.seed, t0=args.t0,
                             style=args.style, t_min=args.t_min, log_path=args.log)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotExhaustive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_EXHAUSTIVE
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    _print_summary(report, sys.stdout)
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
