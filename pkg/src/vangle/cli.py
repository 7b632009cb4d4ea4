"""Command line front end.

Subcommands: dist, points, verify, figure, holder.  Output goes to stdout
in one of three formats (json, csv, text); json and csv carry 15
significant digits, text is rounded to 6 for reading.  Exit codes: 0 on
success, 1 when a verification suite fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys

from .distortion import holder_rhs, lambda_k
from .errors import (
    GeometryError,
    OutOfRange,
    ParseError,
    UnknownFigure,
    UnknownSuite,
)
from .figures import figure_data
from .geom import chordal
from .hyperbolic import require_half_plane, rho_half_plane
from .verify import SUITES, run_suites
from .visual import (
    catalog_constructed,
    catalog_general,
    catalog_unit,
    visual_angle,
    visual_angle_bounds,
)

__all__ = ["main", "parse_complex", "build_parser"]

FORMAT_ENV_VAR = "VANGLE_FORMAT"
FORMATS = ("json", "csv", "text")

_CATALOG_ORDER = ("a_star", "b_star", "u1", "u", "c", "d", "f", "g", "m", "p", "q", "s", "v")

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:/(?:\d+(?:\.\d*)?|\.\d+))?"
_IMAG_RE = re.compile(rf"([+-]?)({_NUM})?i")
_REAL_RE = re.compile(rf"[+-]?{_NUM}")
_PAIR_RE = re.compile(rf"([+-]?{_NUM})([+-])({_NUM})?i")


def _parse_number(text: str) -> float:
    if "/" in text:
        top, bottom = text.split("/", 1)
        den = float(bottom)
        if den == 0.0:
            raise ParseError(f"zero denominator in {text!r}")
        return float(top) / den
    return float(text)


def _signed_number(text: str) -> float:
    sign = 1.0
    if text and text[0] in "+-":
        sign = -1.0 if text[0] == "-" else 1.0
        text = text[1:]
    return sign * _parse_number(text)


def parse_complex(text: str) -> complex:
    """Parse literals like 2, 2i, i, -i, -1+1i, 3/4-2i, 1.5+0.5i."""
    s = text.strip()
    if s:
        m = _IMAG_RE.fullmatch(s)
        if m:
            sign = -1.0 if m.group(1) == "-" else 1.0
            mag = _parse_number(m.group(2)) if m.group(2) else 1.0
            return complex(0.0, sign * mag)
        if _REAL_RE.fullmatch(s):
            return complex(_signed_number(s), 0.0)
        m = _PAIR_RE.fullmatch(s)
        if m:
            sign = -1.0 if m.group(2) == "-" else 1.0
            mag = _parse_number(m.group(3)) if m.group(3) else 1.0
            return complex(_signed_number(m.group(1)), sign * mag)
    raise ParseError(f"cannot parse complex literal {text!r}; expected forms like 2i, -1+1i, 3/4-2i")


def _round15(x: float) -> float:
    return float(f"{float(x):.15g}") + 0.0


def _g15(x) -> str:
    return f"{float(x):.15g}"


def _g6(x) -> str:
    return f"{float(x):.6g}"


def _pair(z: complex) -> list:
    z = complex(z)
    return [_round15(z.real), _round15(z.imag)]


def _complex_text(z: complex) -> str:
    z = complex(z)
    sep = "-" if z.imag < 0 else "+"
    return f"{z.real:.6g} {sep} {abs(z.imag):.6g}i"


def _resolve_format(args) -> str:
    if args.format:
        return args.format
    env = os.environ.get(FORMAT_ENV_VAR)
    if env is None:
        return "text"
    if env not in FORMATS:
        raise ParseError(f"{FORMAT_ENV_VAR}={env!r} is not one of {FORMATS}")
    return env


def _parse_tols(items: list[str]) -> dict:
    tols = {}
    for item in items:
        name, eq, value = item.partition("=")
        if not eq or not name:
            raise ParseError(f"--tol expects NAME=VALUE, got {item!r}")
        try:
            tols[name] = float(value)
        except ValueError as exc:
            raise ParseError(f"--tol value in {item!r} is not a number") from exc
    return tols


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _cmd_dist(args, fmt: str) -> int:
    a, b = parse_complex(args.a), parse_complex(args.b)
    require_half_plane(a, b)
    if a == b:
        record = {
            "a": _pair(a),
            "b": _pair(b),
            "rho": 0.0,
            "visual_angle": 0.0,
            "branch": "degenerate",
            "attaining_point": None,
            "chordal": 0.0,
            "lower_bound": 0.0,
            "upper_bound": 0.0,
        }
    else:
        result = visual_angle(a, b)
        lower, upper = visual_angle_bounds(a, b)
        record = {
            "a": _pair(a),
            "b": _pair(b),
            "rho": _round15(rho_half_plane(a, b)),
            "visual_angle": _round15(result.angle),
            "branch": result.branch.value,
            "attaining_point": _round15(result.attaining_point),
            "chordal": _round15(chordal(a, b)),
            "lower_bound": _round15(lower),
            "upper_bound": _round15(upper),
        }
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(
            ["a_re", "a_im", "b_re", "b_im", "rho", "visual_angle", "branch",
             "attaining_point", "chordal", "lower_bound", "upper_bound"]
        )
        ap = record["attaining_point"]
        writer.writerow(
            [_g15(record["a"][0]), _g15(record["a"][1]), _g15(record["b"][0]), _g15(record["b"][1]),
             _g15(record["rho"]), _g15(record["visual_angle"]), record["branch"],
             "" if ap is None else _g15(ap), _g15(record["chordal"]),
             _g15(record["lower_bound"]), _g15(record["upper_bound"])]
        )
    else:
        print(f"a               = {_complex_text(a)}")
        print(f"b               = {_complex_text(b)}")
        for key in ("rho", "visual_angle"):
            print(f"{key:<16}= {_g6(record[key])}")
        print(f"branch          = {record['branch']}")
        ap = record["attaining_point"]
        print(f"attaining_point = {'-' if ap is None else _g6(ap)}")
        for key in ("chordal", "lower_bound", "upper_bound"):
            print(f"{key:<16}= {_g6(record[key])}")
    return 0


def _points_payload(a: complex, b: complex) -> dict:
    on_unit = abs(abs(a) - 1.0) <= 1e-9 and abs(abs(b) - 1.0) <= 1e-9
    closed = (catalog_unit if on_unit else catalog_general)(a, b).as_dict()
    built = catalog_constructed(a, b).as_dict()
    payload = {}
    for name in _CATALOG_ORDER:
        if name not in closed and name not in built:
            continue
        entry = {"closed_form": None, "definitional": None, "residual": None}
        if name in closed:
            entry["closed_form"] = _pair(closed[name])
        if name in built:
            entry["definitional"] = _pair(built[name])
        if entry["closed_form"] is not None and entry["definitional"] is not None:
            cf = complex(entry["closed_form"][0], entry["closed_form"][1])
            df = complex(entry["definitional"][0], entry["definitional"][1])
            entry["residual"] = _round15(abs(cf - df) / max(1.0, abs(cf)))
        payload[name] = entry
    return payload


def _cmd_points(args, fmt: str) -> int:
    a, b = parse_complex(args.a), parse_complex(args.b)
    payload = _points_payload(a, b)
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(["field", "closed_re", "closed_im", "definitional_re", "definitional_im", "residual"])
        for name, entry in payload.items():
            cf, df, res = entry["closed_form"], entry["definitional"], entry["residual"]
            writer.writerow([
                name,
                "" if cf is None else _g15(cf[0]),
                "" if cf is None else _g15(cf[1]),
                "" if df is None else _g15(df[0]),
                "" if df is None else _g15(df[1]),
                "" if res is None else _g15(res),
            ])
    else:
        print(f"{'field':<8}{'closed_form':<26}{'definitional':<26}residual")
        for name, entry in payload.items():
            cf, df, res = entry["closed_form"], entry["definitional"], entry["residual"]
            cf_s = "-" if cf is None else _complex_text(complex(cf[0], cf[1]))
            df_s = "-" if df is None else _complex_text(complex(df[0], df[1]))
            res_s = "-" if res is None else _g6(res)
            print(f"{name:<8}{cf_s:<26}{df_s:<26}{res_s}")
    return 0


def _cmd_verify(args, fmt: str) -> int:
    tols = _parse_tols(args.tol)
    reports = run_suites(args.suite, seed=args.seed, samples=args.samples, tols=tols)
    payload = [
        {
            "suite": rep.suite,
            "passed": rep.passed,
            "cases_run": rep.cases_run,
            "checks": [
                {
                    "name": c.name,
                    "cases": c.cases,
                    "max_residual": _round15(c.max_residual),
                    "tolerance": _round15(c.tolerance),
                    "passed": c.passed,
                    "worst_inputs": c.worst_inputs,
                }
                for c in rep.checks
            ],
        }
        for rep in reports
    ]
    all_passed = all(rep.passed for rep in reports)
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(["suite", "check", "cases", "max_residual", "tolerance", "passed", "worst_inputs"])
        for rep in payload:
            for c in rep["checks"]:
                writer.writerow([
                    rep["suite"], c["name"], c["cases"], _g15(c["max_residual"]),
                    _g15(c["tolerance"]), "pass" if c["passed"] else "fail", c["worst_inputs"],
                ])
    else:
        total = 0
        for rep in payload:
            print(f"suite: {rep['suite']}")
            for c in rep["checks"]:
                verdict = "PASS" if c["passed"] else "FAIL"
                total += c["cases"]
                print(
                    f"  {verdict}  {c['name']:<30} cases={c['cases']:<6} "
                    f"max_residual={_g6(c['max_residual'])}  tol={_g6(c['tolerance'])}"
                )
                if c["worst_inputs"]:
                    print(f"        worst: {c['worst_inputs']}")
        print(f"overall: {'PASS' if all_passed else 'FAIL'} ({total} cases)")
    return 0 if all_passed else 1


def _cmd_figure(args, fmt: str) -> int:
    a, b = parse_complex(args.a), parse_complex(args.b)
    elements = figure_data(args.name, a, b)
    rounded = [
        {
            "kind": e["kind"],
            "label": e["label"],
            "x1": _round15(e["x1"]),
            "y1": _round15(e["y1"]),
            "x2": None if e["x2"] is None else _round15(e["x2"]),
            "y2": None if e["y2"] is None else _round15(e["y2"]),
        }
        for e in elements
    ]
    if fmt == "json":
        print(json.dumps(rounded, indent=2))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(["kind", "label", "x1", "y1", "x2", "y2"])
        for e in rounded:
            writer.writerow([
                e["kind"], e["label"], _g15(e["x1"]), _g15(e["y1"]),
                "" if e["x2"] is None else _g15(e["x2"]),
                "" if e["y2"] is None else _g15(e["y2"]),
            ])
    else:
        print(f"{'kind':<9}{'label':<18}{'x1':>12}{'y1':>12}{'x2':>12}{'y2':>12}")
        for e in rounded:
            x2 = "" if e["x2"] is None else _g6(e["x2"])
            y2 = "" if e["y2"] is None else _g6(e["y2"])
            print(f"{e['kind']:<9}{e['label']:<18}{_g6(e['x1']):>12}{_g6(e['y1']):>12}{x2:>12}{y2:>12}")
    return 0


def _cmd_holder(args, fmt: str) -> int:
    lam = lambda_k(args.K)
    bound = holder_rhs(args.K, args.v)
    record = {
        "K": _round15(args.K),
        "v": _round15(args.v),
        "lambda": _round15(lam),
        "bound": _round15(bound),
        "sharp_value": _round15(math.tan(args.v)) if args.K == 1.0 else None,
    }
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(["K", "v", "lambda", "bound", "sharp_value"])
        sharp = record["sharp_value"]
        writer.writerow([
            _g15(record["K"]), _g15(record["v"]), _g15(record["lambda"]),
            _g15(record["bound"]), "" if sharp is None else _g15(sharp),
        ])
    else:
        for key in ("K", "v", "lambda", "bound"):
            print(f"{key:<12}= {_g6(record[key])}")
        sharp = record["sharp_value"]
        print(f"sharp_value = {'-' if sharp is None else _g6(sharp)}")
    return 0


class _Parser(argparse.ArgumentParser):
    # Let complex literals with a leading minus ("-1+1i", "-i") stand as
    # positionals instead of being read as option flags.
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-(?:\d|\.\d|i$)")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _seed_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV_VAR} or text)")
    common.add_argument("--seed", type=_seed_int, default=1729, help="seed for all random sampling")
    common.add_argument("--samples", type=_positive_int, default=500, help="sample count per check")
    common.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                        help="override a named check tolerance (repeatable)")

    parser = _Parser(
        prog="vangle",
        description="Visual angle metric on the upper half plane: distances, point catalogs, verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_dist = sub.add_parser("dist", parents=[common], help="distances and the visual angle for one pair")
    p_dist.add_argument("a", help="complex literal, e.g. 2i or -1+1i")
    p_dist.add_argument("b", help="complex literal")
    p_dist.set_defaults(func=_cmd_dist)

    p_points = sub.add_parser("points", parents=[common], help="closed-form vs definitional point catalog")
    p_points.add_argument("a", help="complex literal")
    p_points.add_argument("b", help="complex literal")
    p_points.set_defaults(func=_cmd_points)

    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("suite", help=f"one of {', '.join(sorted(SUITES))}, or all")
    p_verify.set_defaults(func=_cmd_verify)

    p_figure = sub.add_parser("figure", parents=[common], help="plottable data for a named construction")
    p_figure.add_argument("name", help="fig3, fig4, fig5, fig6, or fig7")
    p_figure.add_argument("a", help="complex literal")
    p_figure.add_argument("b", help="complex literal")
    p_figure.set_defaults(func=_cmd_figure)

    p_holder = sub.add_parser("holder", parents=[common], help="distortion bound for the visual angle under K-quasiconformal maps")
    p_holder.add_argument("K", type=float, help="maximal dilatation, K >= 1")
    p_holder.add_argument("v", type=float, help="angle in (0, pi/2)")
    p_holder.set_defaults(func=_cmd_holder)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fmt = _resolve_format(args)
        return args.func(args, fmt)
    except (ParseError, UnknownSuite, UnknownFigure, OutOfRange, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
