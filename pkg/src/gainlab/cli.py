"""Command-line front end.

Subcommands: analyze one solution, evaluate bounds for parameters, search
a box with fixed k, hunt a box with derived k, verify the built-in corpus.
Reports go to stdout in json, csv, or human form; progress, timing, and
errors go to stderr.  Identical invocations produce byte-identical stdout:
big integers serialize as exact decimal strings and every real as a
6-significant-digit decimal string, never a binary float.

Exit codes: 0 success, 1 invalid solution, 2 usage error, 3 resource
limits (factorization budget, box ceiling).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .bigmath import gcd3, ipow, round_sig
from .factor import FactorBudgetExceeded
from .gains import (
    GainReport,
    QMAX_STRONG,
    QMAX_ULTRA,
    QMax,
    Solution,
    SolutionError,
    compute_gains,
    custom_qmax,
    ga_lower_bound,
    gp_upper_bound,
    k1_quality_bound,
    max_admissible_exponent,
    q_lower_bound,
    validate_solution,
)
from .corpus import builtin_corpus, verify_entry
from .search import (
    DERIVED_K,
    FIXED_K,
    BoxTooLarge,
    SearchBox,
    SearchResult,
    enumerate_fixed_k,
    hunt_derived_k,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FORMATS = ("json", "csv", "human")


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: one command plus its parameters."""

    command: str
    output_format: str = "human"
    precision_digits: int = 6
    qmax: Decimal | None = None
    n: int | None = None
    x: int | None = None
    y: int | None = None
    A: int | None = None
    B: int | None = None
    k: int | None = None
    n_range: tuple[int, int] | None = None
    x_range: tuple[int, int] | None = None
    y_range: tuple[int, int] | None = None
    A_range: tuple[int, int] | None = None
    B_range: tuple[int, int] | None = None
    k_range: tuple[int, int] | None = None
    q_threshold: Decimal | None = None
    allow_trivial_x: bool = False


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            v = int(text)
            return (v, v)
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"not a LO:HI range: {text!r}"
        ) from None


def _qmax_arg(text: str) -> Decimal:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("qmax must be positive")
    return value


def _threshold_arg(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainlab",
        description=(
            "Gain and quality analysis for coprime solutions of "
            "B*y^n = A*x^n + k"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze one solution tuple")
    for name in ("n", "x", "y", "A", "B", "k"):
        analyze.add_argument(f"--{name}", type=_int_arg, required=True)
    analyze.add_argument("--format", choices=FORMATS, default="human")
    analyze.add_argument("--qmax", type=_qmax_arg, default=None)

    bounds = sub.add_parser("bounds", help="evaluate bounds for parameters")
    for name in ("n", "A", "B", "y"):
        bounds.add_argument(f"--{name}", type=_int_arg, required=True)
    bounds.add_argument("--format", choices=FORMATS, default="human")
    bounds.add_argument("--qmax", type=_qmax_arg, default=None)

    search = sub.add_parser("search", help="enumerate a box with fixed k")
    for name in ("n", "x", "y", "A", "B", "k"):
        search.add_argument(f"--{name}", type=_range_arg, required=True, metavar="LO:HI")
    search.add_argument("--allow-trivial-x", action="store_true")
    search.add_argument("--format", choices=FORMATS, default="human")

    hunt = sub.add_parser("hunt", help="enumerate a box with derived k")
    for name in ("n", "x", "y", "A", "B"):
        hunt.add_argument(f"--{name}", type=_range_arg, required=True, metavar="LO:HI")
    hunt.add_argument("--q-threshold", type=_threshold_arg, default=None)
    hunt.add_argument("--allow-trivial-x", action="store_true")
    hunt.add_argument("--format", choices=FORMATS, default="human")

    verify = sub.add_parser("verify-corpus", help="verify the built-in corpus")
    verify.add_argument("--format", choices=FORMATS, default="human")

    return parser


def parse_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    command = ns.command
    if command == "analyze":
        return RunConfig(
            command=command,
            output_format=ns.format,
            qmax=ns.qmax,
            n=ns.n,
            x=ns.x,
            y=ns.y,
            A=ns.A,
            B=ns.B,
            k=ns.k,
        )
    if command == "bounds":
        return RunConfig(
            command=command,
            output_format=ns.format,
            qmax=ns.qmax,
            n=ns.n,
            A=ns.A,
            B=ns.B,
            y=ns.y,
        )
    if command == "search":
        return RunConfig(
            command=command,
            output_format=ns.format,
            n_range=ns.n,
            x_range=ns.x,
            y_range=ns.y,
            A_range=ns.A,
            B_range=ns.B,
            k_range=ns.k,
            allow_trivial_x=ns.allow_trivial_x,
        )
    if command == "hunt":
        return RunConfig(
            command=command,
            output_format=ns.format,
            n_range=ns.n,
            x_range=ns.x,
            y_range=ns.y,
            A_range=ns.A,
            B_range=ns.B,
            q_threshold=ns.q_threshold,
            allow_trivial_x=ns.allow_trivial_x,
        )
    return RunConfig(command=command, output_format=ns.format)


def _display(value: Decimal | None, digits: int) -> str | None:
    if value is None:
        return None
    # format(..., "f") keeps plain decimal notation at any magnitude.
    return format(round_sig(value, digits), "f")


def solution_report(
    s: Solution,
    g: GainReport,
    digits: int = 6,
) -> dict:
    """The per-solution report document, keys in fixed order."""
    axn = s.A * ipow(s.x, s.n)
    dominant = g.C > axn
    identity_ok = g.C == axn + s.k
    coprime_ok = gcd3(s.A * s.x, s.B * s.y, s.k) == 1
    ga_bound_ok = bool(dominant and g.G_a > g.ga_min)
    q_bound_ok = None if g.q is None else bool(g.q > g.q_min)
    bounds = {
        "ga_min": _display(g.ga_min, digits),
        "q_min": _display(g.q_min, digits),
        "gp_max_strong": _display(g.gp_max_strong, digits),
        "gp_max_ultra": _display(g.gp_max_ultra, digits),
    }
    if g.gp_max_custom is not None:
        bounds["gp_max_custom"] = _display(g.gp_max_custom, digits)
    bounds["k1_q_bound"] = _display(g.k1_q_bound, digits)
    return {
        "solution": {
            "n": str(s.n),
            "x": str(s.x),
            "y": str(s.y),
            "A": str(s.A),
            "B": str(s.B),
            "k": str(s.k),
            "trivial_x": s.trivial_x,
        },
        "terms": {
            "C": str(g.C),
            "P": str(g.P),
            "radical_P": None if g.R is None else str(g.R),
        },
        "gains": {
            "G_a": _display(g.G_a, digits),
            "G_p": _display(g.G_p, digits),
            "q": _display(g.q, digits),
        },
        "bounds": bounds,
        "checks": {
            "identity": identity_ok,
            "coprime": coprime_ok,
            "thm1_holds": ga_bound_ok,
            "thm5_holds": q_bound_ok,
        },
    }


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _flatten_solution_report(doc: dict) -> list:
    row: list = []
    for section in doc.values():
        row.extend(section.values())
    return row


def _solution_csv_header(doc: dict) -> list[str]:
    names: list[str] = []
    for section in doc.values():
        names.extend(section.keys())
    return names


def _emit_single_report(doc: dict, fmt: str) -> None:
    """Write one solution report document to stdout."""
    if fmt == "json":
        print(json.dumps(doc, indent=2))
        return
    if fmt == "csv":
        print(",".join(_solution_csv_header(doc)))
        print(",".join(_csv_cell(v) for v in _flatten_solution_report(doc)))
        return
    for section, fields in doc.items():
        pairs = "  ".join(f"{k}={_csv_cell(v)}" for k, v in fields.items())
        print(f"{section:<9} {pairs}")


def _empty_csv_header() -> list[str]:
    sections = {
        "solution": ("n", "x", "y", "A", "B", "k", "trivial_x"),
        "terms": ("C", "P", "radical_P"),
        "gains": ("G_a", "G_p", "q"),
        "bounds": ("ga_min", "q_min", "gp_max_strong", "gp_max_ultra", "k1_q_bound"),
        "checks": ("identity", "coprime", "thm1_holds", "thm5_holds"),
    }
    names: list[str] = []
    for cols in sections.values():
        names.extend(cols)
    return names


def _run_analyze(config: RunConfig) -> int:
    q_custom = custom_qmax(config.qmax) if config.qmax is not None else None
    try:
        s = validate_solution(config.n, config.x, config.y, config.A, config.B, config.k)
    except SolutionError as err:
        _emit_validation_failure(err, config.output_format)
        return EXIT_INVALID
    except (TypeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    try:
        g = compute_gains(s, q_max_custom=q_custom)
    except FactorBudgetExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as err:
        # e.g. an unparseable GAINLAB_FACTOR_BUDGET setting
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    doc = solution_report(s, g, config.precision_digits)
    _emit_single_report(doc, config.output_format)
    return EXIT_OK


def _emit_validation_failure(err: SolutionError, fmt: str) -> None:
    violations = err.report.violations
    if fmt == "json":
        doc = {
            "valid": False,
            "violations": [
                {
                    "kind": v.kind,
                    "detail": v.detail,
                    "residual": None if v.residual is None else str(v.residual),
                }
                for v in violations
            ],
        }
        print(json.dumps(doc, indent=2))
        return
    if fmt == "csv":
        print("kind,residual")
        for v in violations:
            print(f"{v.kind},{_csv_cell(None if v.residual is None else v.residual)}")
        return
    print("invalid solution:")
    for v in violations:
        print(f"  {v.kind}: {v.detail}")


def _run_bounds(config: RunConfig) -> int:
    n, A, B, y = config.n, config.A, config.B, config.y
    digits = config.precision_digits
    try:
        ga = ga_lower_bound(n, A, B, y)
        qmin = q_lower_bound(n, A, B, y)
        gp_strong = gp_upper_bound(n, A, B, y, QMAX_STRONG)
        gp_ultra = gp_upper_bound(n, A, B, y, QMAX_ULTRA)
        k1 = k1_quality_bound(n)
    except (TypeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    gp_custom = None
    max_n_custom = None
    if config.qmax is not None:
        cap = custom_qmax(config.qmax)
        gp_custom = gp_upper_bound(n, A, B, y, cap)
        try:
            max_n_custom = max_admissible_exponent(cap)
        except ValueError:
            max_n_custom = None  # cap <= 1 excludes every exponent
    bounds = {
        "ga_min": _display(ga, digits),
        "q_min": _display(qmin, digits),
        "gp_max_strong": _display(gp_strong, digits),
        "gp_max_ultra": _display(gp_ultra, digits),
    }
    if gp_custom is not None:
        bounds["gp_max_custom"] = _display(gp_custom, digits)
    bounds["k1_q_bound"] = _display(k1, digits)
    bounds["max_admissible_exponent_strong"] = max_admissible_exponent(QMAX_STRONG)
    bounds["max_admissible_exponent_ultra"] = max_admissible_exponent(QMAX_ULTRA)
    if config.qmax is not None:
        bounds["max_admissible_exponent_custom"] = max_n_custom
    doc = {
        "params": {
            "n": str(n),
            "A": str(A),
            "B": str(B),
            "y": str(y),
            "q_max_custom": None if config.qmax is None else str(config.qmax),
        },
        "bounds": bounds,
    }
    fmt = config.output_format
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    elif fmt == "csv":
        names: list[str] = []
        values: list = []
        for section in doc.values():
            names.extend(section.keys())
            values.extend(section.values())
        print(",".join(names))
        print(",".join(_csv_cell(v) for v in values))
    else:
        for section, fields in doc.items():
            print(f"{section}:")
            for kname, v in fields.items():
                print(f"  {kname:<28} {_csv_cell(v)}")
    return EXIT_OK


def _search_box_from(config: RunConfig, mode: str) -> SearchBox:
    return SearchBox(
        n_range=config.n_range,
        x_range=config.x_range,
        y_range=config.y_range,
        A_range=config.A_range,
        B_range=config.B_range,
        mode=mode,
        k_range=config.k_range,
        q_threshold=config.q_threshold,
        require_nontrivial=not config.allow_trivial_x,
    )


def _run_box_command(config: RunConfig, mode: str) -> int:
    box = _search_box_from(config, mode)
    runner = enumerate_fixed_k if mode == FIXED_K else hunt_derived_k
    try:
        result: SearchResult = runner(box)
    except BoxTooLarge as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except (TypeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    docs = [solution_report(s, g, config.precision_digits) for s, g in result.solutions]
    _emit_search_output(docs, result, config.output_format)
    print(
        f"scanned {result.cells_scanned} cells in {result.duration:.3f}s, "
        f"{len(result.solutions)} solutions",
        file=sys.stderr,
    )
    return EXIT_OK


def _emit_search_output(docs: list[dict], result: SearchResult, fmt: str) -> None:
    if fmt == "json":
        payload = {"solutions": docs, "cells_scanned": result.cells_scanned}
        print(json.dumps(payload, indent=2))
        return
    if fmt == "csv":
        header = _solution_csv_header(docs[0]) if docs else _empty_csv_header()
        print(",".join(header))
        for doc in docs:
            print(",".join(_csv_cell(v) for v in _flatten_solution_report(doc)))
        return
    if not docs:
        print("no solutions")
    for doc in docs:
        s = doc["solution"]
        g = doc["gains"]
        print(
            f"n={s['n']} x={s['x']} y={s['y']} A={s['A']} B={s['B']} k={s['k']}"
            f"  q={_csv_cell(g['q'])} G_a={_csv_cell(g['G_a'])} G_p={_csv_cell(g['G_p'])}"
        )
    print(f"cells_scanned: {result.cells_scanned}")


def _run_verify_corpus(config: RunConfig) -> int:
    digits = config.precision_digits
    entries = []
    for entry in builtin_corpus():
        try:
            report = verify_entry(entry)
        except FactorBudgetExceeded as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_RESOURCE
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_USAGE
        quantities = {}
        for qty, verdict in report.quantities.items():
            if verdict.actual is None:
                shown = None
            elif isinstance(verdict.actual, int):
                shown = str(verdict.actual)
            else:
                shown = _display(verdict.actual, digits)
            quantities[qty] = {
                "expected": str(verdict.expected),
                "tolerance": str(verdict.tolerance),
                "actual": shown,
                "pass": verdict.passed,
            }
        entries.append(
            {
                "name": entry.name,
                "params": {
                    "n": str(entry.n),
                    "x": str(entry.x),
                    "y": str(entry.y),
                    "A": str(entry.A),
                    "B": str(entry.B),
                },
                "k_printed": None if entry.k_printed is None else str(entry.k_printed),
                "k_derived": str(entry.k_derived),
                "consistency": dict(report.consistency),
                "quantities": quantities,
            }
        )
    fmt = config.output_format
    if fmt == "json":
        print(json.dumps({"entries": entries}, indent=2))
    elif fmt == "csv":
        print("name,kind,item,expected,tolerance,actual,pass")
        for e in entries:
            for check, verdict in e["consistency"].items():
                print(f"{e['name']},consistency,{check},,,,{verdict}")
            for qty, v in e["quantities"].items():
                print(
                    f"{e['name']},quantity,{qty},{v['expected']},{v['tolerance']},"
                    f"{_csv_cell(v['actual'])},{_csv_cell(v['pass'])}"
                )
    else:
        for e in entries:
            p = e["params"]
            print(
                f"{e['name']}: n={p['n']} x={p['x']} y={p['y']} "
                f"A={p['A']} B={p['B']} k_derived={e['k_derived']}"
            )
            for check, verdict in e["consistency"].items():
                print(f"  consistency {check:<12} {verdict}")
            for qty, v in e["quantities"].items():
                status = "pass" if v["pass"] else "FAIL"
                print(
                    f"  {qty:<16} expected {v['expected']} +/- {v['tolerance']}"
                    f"  actual {_csv_cell(v['actual'])}  {status}"
                )
            print()
    return EXIT_OK


def run(config: RunConfig) -> int:
    """Dispatch a validated config; returns the process exit code."""
    if config.command == "analyze":
        return _run_analyze(config)
    if config.command == "bounds":
        return _run_bounds(config)
    if config.command == "search":
        return _run_box_command(config, FIXED_K)
    if config.command == "hunt":
        return _run_box_command(config, DERIVED_K)
    if config.command == "verify-corpus":
        return _run_verify_corpus(config)
    print(f"error: unknown command {config.command!r}", file=sys.stderr)
    return EXIT_USAGE


def main(argv=None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exit_:
        # argparse exits 2 on usage errors and 0 for --help.
        code = exit_.code
        return code if isinstance(code, int) else EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
