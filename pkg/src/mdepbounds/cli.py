"""Command-line front end.

Verbs:
  report  MODEL [--exact] [--mc TRIALS SEED]     bound report as JSON
  verify  MODEL [--max-subset K] [--tol X]       derivation + dependence audit
  sweep   MODEL PARAM=LO..HI[:STEP]              CSV over a parameter sweep
  window  MODEL I WINDOW_N                       windowed bound as JSON
  mc      MODEL FIRST LAST TRIALS SEED [--exact] Monte Carlo union estimate

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or model-spec error.  Numbers print with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Sequence

from .bounds import build_report, build_threshold, windowed_bound
from .dependence import check_m_dependence
from .errors import BoundViolationError, CapExceededError, ModelSpecError
from .families import WindowModel
from .modelspec import load_model, parse_model
from .montecarlo import estimate_union
from .oracle import union_prob
from .verify import verify_derivation

CSV_COLUMNS = ["param", "n", "m", "s_n", "t_local", "thm1_bound", "thm2_bound",
               "thm2_sharper", "exact_union", "mc_estimate", "mc_ci_low",
               "mc_ci_high"]


def _round12(value: Any) -> Any:
    """Round floats (recursively) to 12 significant digits for output."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _round12(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round12(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out_path: str | None) -> None:
    _emit(json.dumps(_round12(payload), indent=2) + "\n", out_path)


def _cmd_report(args: argparse.Namespace) -> int:
    family = load_model(args.model)
    mc = tuple(args.mc) if args.mc else None
    if mc is not None and not isinstance(family, WindowModel):
        raise ModelSpecError("--mc applies to window models only "
                             "(explicit families are exact by enumeration)")
    report = build_report(family, exact=args.exact, mc=mc)
    _emit_json(report.to_dict(), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    family = load_model(args.model)
    derivation = verify_derivation(family, tol=args.tol)
    dependence = check_m_dependence(family, max_subset=args.max_subset,
                                    tol=args.tol)
    passed = derivation.passed and dependence.passed
    _emit_json({"passed": passed,
                "derivation": derivation.to_dict(),
                "dependence": dependence.to_dict()}, args.out)
    return 0 if passed else 1


_SWEEP_RE = re.compile(
    r"^(?P<name>[A-Za-z_()0-9]+)=(?P<lo>-?[0-9.]+)\.\.(?P<hi>-?[0-9.]+)"
    r"(?::(?P<step>-?[0-9.]+))?$")


def _parse_sweep(spec: str) -> tuple[str, list[Any]]:
    match = _SWEEP_RE.match(spec)
    if not match:
        raise ModelSpecError(
            f"invalid sweep spec {spec!r}; expected PARAM=LO..HI[:STEP]")
    name = match["name"]
    prob = re.fullmatch(r"p\(?(\d+)\)?", name)
    if name in ("horizon", "m"):
        lo, hi = int(match["lo"]), int(match["hi"])
        step = int(match["step"]) if match["step"] else 1
        if step < 1:
            raise ModelSpecError("integer sweep step must be >= 1")
        return name, list(range(lo, hi + 1, step))
    if prob:
        if not match["step"]:
            raise ModelSpecError(
                "probability sweeps need an explicit step, e.g. p1=0.1..0.9:0.1")
        lo, hi, step = float(match["lo"]), float(match["hi"]), float(match["step"])
        if step <= 0:
            raise ModelSpecError("probability sweep step must be positive")
        count = int(round((hi - lo) / step)) + 1 if hi >= lo else 0
        values = [lo + k * step for k in range(count)]
        return f"p{prob[1]}", [v for v in values if v <= hi + 1e-12]
    raise ModelSpecError(f"unknown sweep parameter {name!r}; supported: "
                         f"horizon, m, p<digit> (symbol probability)")


def _apply_sweep(template: dict, name: str, value: Any) -> dict:
    spec = dict(template)
    if name == "horizon":
        if spec.get("type") != "window":
            raise ModelSpecError("horizon sweeps need a window model template")
        spec["horizon"] = value
    elif name == "m":
        if spec.get("type") != "explicit":
            raise ModelSpecError("m sweeps need an explicit model template "
                                 "(a window model's table length depends on m)")
        spec["m"] = value
    else:  # p<digit>
        if spec.get("type") != "window":
            raise ModelSpecError("symbol-probability sweeps need a window "
                                 "model template")
        digit = int(name[1:])
        dist = [float(p) for p in spec.get("symbol_dist", [])]
        if not 0 <= digit < len(dist):
            raise ModelSpecError(f"symbol index {digit} outside the alphabet")
        rest = sum(dist) - dist[digit]
        if not 0.0 <= value <= 1.0:
            raise ModelSpecError(f"swept probability {value} outside [0, 1]")
        if rest <= 0:
            raise ModelSpecError("cannot rescale the remaining symbol "
                                 "probabilities: they sum to 0")
        scale = (1.0 - value) / rest
        dist = [p * scale for p in dist]
        dist[digit] = value
        spec["symbol_dist"] = dist
    return spec


def _cmd_sweep(args: argparse.Namespace) -> int:
    with open(args.model) as fh:
        try:
            template = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelSpecError(f"{args.model}: line {exc.lineno} column "
                                 f"{exc.colno}: {exc.msg}") from exc
    name, values = _parse_sweep(args.sweep)
    mc = tuple(args.mc) if args.mc else None
    if mc is not None and template.get("type") != "window":
        raise ModelSpecError("--mc applies to window models only")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for value in values:
        family = parse_model(_apply_sweep(template, name, value),
                             where=f"{args.model}[{name}={value}]")
        report = build_report(family, exact=args.exact, mc=mc)
        row = {
            "param": value,
            "n": report.n,
            "m": report.m,
            "s_n": report.s_n,
            "t_local": report.t_local,
            "thm1_bound": report.thm1_bound,
            "thm2_bound": report.thm2_bound,
            "thm2_sharper": report.thm2_sharper,
            "exact_union": report.exact_union,
            "mc_estimate": report.mc_union.estimate if report.mc_union else None,
            "mc_ci_low": report.mc_union.ci_low if report.mc_union else None,
            "mc_ci_high": report.mc_union.ci_high if report.mc_union else None,
        }
        writer.writerow([_cell(row[col]) for col in CSV_COLUMNS])
    _emit(buffer.getvalue(), args.out)
    return 0


def _cmd_window(args: argparse.Namespace) -> int:
    family = load_model(args.model)
    threshold = build_threshold(family)
    result = windowed_bound(family, threshold, args.i, args.window_n)
    exact = union_prob(family, result.first, result.last)
    _emit_json({
        "first": result.first,
        "last": result.last,
        "window_n": result.window_n,
        "m": family.m,
        "bound": result.bound,
        "exact_union": exact,
        "mass": result.mass,
        "mass_required": result.window_n,
        "mass_ok": result.mass >= result.window_n - 1e-9,
    }, args.out)
    return 0


def _cmd_mc(args: argparse.Namespace) -> int:
    family = load_model(args.model)
    if not isinstance(family, WindowModel):
        raise ModelSpecError("Monte Carlo estimation applies to window "
                             "models only")
    est = estimate_union(family, args.first, args.last, args.trials, args.seed)
    payload = {
        "first": args.first, "last": args.last,
        "trials": args.trials, "seed": args.seed,
        "estimate": est.estimate, "ci_low": est.ci_low, "ci_high": est.ci_high,
    }
    if args.exact:
        payload["exact_union"] = union_prob(family, args.first, args.last) \
            if args.first <= args.last else 0.0
    _emit_json(payload, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdepbounds",
        description="Union lower bounds and exact oracles for m-dependent "
                    "event families")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("model", help="model-spec JSON file")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write output to PATH instead of stdout")

    p_report = sub.add_parser("report", help="bound report for a model")
    add_common(p_report)
    p_report.add_argument("--exact", action="store_true",
                          help="include the exact union probability")
    p_report.add_argument("--mc", nargs=2, type=int, metavar=("TRIALS", "SEED"),
                          help="include a Monte Carlo estimate")
    p_report.set_defaults(func=_cmd_report)

    p_verify = sub.add_parser("verify", help="audit the derivation and the "
                                             "claimed dependence range")
    add_common(p_verify)
    p_verify.add_argument("--max-subset", type=int, default=4, metavar="K",
                          help="largest |I|+|J| for factorization checks "
                               "(default 4)")
    p_verify.add_argument("--tol", type=float, default=1e-9, metavar="X",
                          help="comparison tolerance (default 1e-9)")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="CSV report over a parameter sweep")
    add_common(p_sweep)
    p_sweep.add_argument("sweep", metavar="PARAM=LO..HI[:STEP]",
                         help="swept parameter: horizon, m, or p<digit>")
    p_sweep.add_argument("--exact", action="store_true",
                         help="include the exact union probability per row")
    p_sweep.add_argument("--mc", nargs=2, type=int, metavar=("TRIALS", "SEED"),
                         help="include a Monte Carlo estimate per row")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_window = sub.add_parser("window", help="windowed rate bound")
    add_common(p_window)
    p_window.add_argument("i", type=int, help="number of leading events to skip")
    p_window.add_argument("window_n", type=int, help="window mass target")
    p_window.set_defaults(func=_cmd_window)

    p_mc = sub.add_parser("mc", help="Monte Carlo union estimate")
    add_common(p_mc)
    p_mc.add_argument("first", type=int)
    p_mc.add_argument("last", type=int)
    p_mc.add_argument("trials", type=int)
    p_mc.add_argument("seed", type=int)
    p_mc.add_argument("--exact", action="store_true",
                      help="include the exact union probability")
    p_mc.set_defaults(func=_cmd_mc)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundViolationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ModelSpecError, CapExceededError, ValueError, IndexError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
