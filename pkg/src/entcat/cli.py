"""Command-line front end: compare, find, verify, oracle.

Inputs are exact rationals given as decimal strings or p/q fractions,
inline (--psi1 0.4,0.4,0.1,0.1) or in a JSON document (--input). Machine
output renders every rational as a p/q string; decimals are display-only.

Exit codes: 0 = transformation possible (directly or with a catalyst),
1 = no catalyst at the requested dimension, 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .closed_form import catalyst_interval_4x4
from .core import (
    ClosedInterval,
    Comparison,
    SchmidtVector,
    compare,
    merge_intervals,
    normalize_and_sort,
    padded_pair,
    prefix_sums,
    tensor_spectrum,
    verify_catalyst,
)
from .errors import CatalysisError
from .oracle import GridSpec, grid_search
from .regions import Verdict, feasible_union_k2, find_catalysts
from .sweep import breakpoints, find_catalysts_k2


class InputError(Exception):
    """Bad command-line or file input (maps to exit code 2)."""


def _parse_vector(text: str) -> SchmidtVector:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("empty vector")
    try:
        return normalize_and_sort(parts)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse vector {text!r}: {exc}") from exc


def _load_input_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input file {path!r}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("input file must hold a JSON object")
    return doc


def _vector_from_doc(doc: dict, field: str) -> SchmidtVector | None:
    raw = doc.get(field)
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise InputError(f"field {field!r} must be a list of rational strings")
    for item in raw:
        if isinstance(item, float):
            raise InputError(
                f"field {field!r} holds a float; spell rationals as strings"
            )
    try:
        return normalize_and_sort([str(v) if isinstance(v, int) else v for v in raw])
    except (ValueError, TypeError) as exc:
        raise InputError(f"cannot parse field {field!r}: {exc}") from exc


def _resolve(args) -> dict:
    doc = _load_input_file(args.input) if getattr(args, "input", None) else {}
    resolved = {
        "psi1": _parse_vector(args.psi1) if args.psi1 else _vector_from_doc(doc, "psi1"),
        "psi2": _parse_vector(args.psi2) if args.psi2 else _vector_from_doc(doc, "psi2"),
    }
    if resolved["psi1"] is None or resolved["psi2"] is None:
        raise InputError("both --psi1 and --psi2 are required (flags or input file)")
    if hasattr(args, "phi"):
        phi = _parse_vector(args.phi) if args.phi else _vector_from_doc(doc, "phi")
        resolved["phi"] = phi
    if hasattr(args, "k"):
        k = args.k if args.k is not None else doc.get("k", 2)
        if not isinstance(k, int):
            raise InputError("k must be an integer")
        resolved["k"] = k
    if hasattr(args, "grid_denominator"):
        d = (
            args.grid_denominator
            if args.grid_denominator is not None
            else doc.get("grid_denominator", 100)
        )
        if not isinstance(d, int) or d < 1:
            raise InputError("grid denominator must be a positive integer")
        resolved["d"] = d
    return resolved


def _fmt(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def _fmt_human(value: Fraction) -> str:
    return f"{_fmt(value)} ({float(value):.6g})"


def _interval_doc(iv: ClosedInterval) -> dict:
    return {"lo": _fmt(iv.lo), "hi": _fmt(iv.hi)}


def _emit(doc: dict, args) -> None:
    if args.stats:
        doc["timing_ms"] = round(doc.pop("_elapsed_ms"), 3)
    else:
        doc.pop("_elapsed_ms", None)
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _print_prefix_table(psi1: SchmidtVector, psi2: SchmidtVector) -> None:
    a, b = padded_pair(psi1, psi2)
    pa, pb = prefix_sums(a), prefix_sums(b)
    print(f"{'l':>3} {'sum psi1[:l]':>22} {'sum psi2[:l]':>22}  cmp")
    for l, (va, vb) in enumerate(zip(pa, pb), start=1):
        rel = "<=" if va <= vb else "> "
        print(f"{l:>3} {_fmt_human(va):>22} {_fmt_human(vb):>22}  {rel}")


def cmd_compare(inputs, args) -> int:
    t0 = time.perf_counter()
    psi1, psi2 = inputs["psi1"], inputs["psi2"]
    verdict = compare(psi1, psi2)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.format == "machine":
        a, b = padded_pair(psi1, psi2)
        doc = {
            "verdict": verdict.value,
            "prefix_sums": {
                "psi1": [_fmt(v) for v in prefix_sums(a)],
                "psi2": [_fmt(v) for v in prefix_sums(b)],
            },
            "_elapsed_ms": elapsed,
        }
        _emit(doc, args)
    else:
        print(f"verdict: {verdict.value}")
        _print_prefix_table(psi1, psi2)
        if args.stats:
            print(f"timing: {elapsed:.3f} ms")
    return 0


def _find_k2(psi1, psi2):
    """Sweep (always) plus closed form on 4x4, with an agreement assertion."""
    feasible = find_catalysts_k2(psi1, psi2)
    intervals = feasible.intervals
    a, b = padded_pair(psi1, psi2)
    n_breakpoints = len(breakpoints(a, b))
    stats = {
        "breakpoints": n_breakpoints,
        "systems_solved": n_breakpoints - 1,
    }
    if len(a) == 4:
        closed = catalyst_interval_4x4(a, b)
        closed_union = (closed,) if closed is not None else ()
        if closed_union != intervals:
            raise RuntimeError(
                f"closed-form and sweep disagree: {closed_union} vs {intervals}"
            )
    return intervals, stats


def cmd_find(inputs, args) -> int:
    t0 = time.perf_counter()
    psi1, psi2, k = inputs["psi1"], inputs["psi2"], inputs["k"]
    if k < 2:
        raise InputError(f"catalyst dimension must be >= 2, got {k}")
    relation = compare(psi1, psi2)
    witnesses: list[dict] = []
    stats: dict = {}
    if relation is Comparison.EQUIVALENT:
        verdict = Verdict.EQUIVALENT
    elif relation is Comparison.FORWARD_TRANSFORMABLE:
        verdict = Verdict.ALREADY_TRANSFORMABLE
    elif relation is Comparison.BACKWARD_TRANSFORMABLE:
        verdict = Verdict.REVERSE_ONLY
    elif k == 2:
        intervals, stats = _find_k2(psi1, psi2)
        verdict = Verdict.EXISTS if intervals else Verdict.NOT_EXISTS
        witnesses = [{"interval": _interval_doc(iv)} for iv in intervals]
    else:
        result = find_catalysts(psi1, psi2, k)
        verdict = result.verdict
        stats = {
            "cells": result.stats.cells,
            "systems_solved": result.stats.systems_solved,
        }
        witnesses = [
            {
                "cell_signature": "".join("+" if s > 0 else "-" for s in w.signature),
                "point": [_fmt(v) for v in w.point],
            }
            for w in result.witnesses
        ]
    elapsed = (time.perf_counter() - t0) * 1000

    if args.format == "machine":
        doc = {
            "verdict": verdict.value,
            "witnesses": witnesses,
            "stats": stats,
            "_elapsed_ms": elapsed,
        }
        _emit(doc, args)
    else:
        print(f"verdict: {verdict.value}")
        for w in witnesses:
            if "interval" in w:
                print(f"  catalyst parameter interval: [{w['interval']['lo']}, {w['interval']['hi']}]")
            else:
                print(f"  catalyst: ({', '.join(w['point'])})")
        if args.stats:
            if stats:
                pairs = ", ".join(f"{key}={val}" for key, val in stats.items())
                print(f"stats: {pairs}")
            print(f"timing: {elapsed:.3f} ms")
    return 0 if verdict in (Verdict.EXISTS, Verdict.ALREADY_TRANSFORMABLE, Verdict.EQUIVALENT) else 1


def cmd_verify(inputs, args) -> int:
    t0 = time.perf_counter()
    psi1, psi2 = inputs["psi1"], inputs["psi2"]
    phi = inputs.get("phi")
    if phi is None:
        raise InputError("verify needs --phi (or a phi field in the input file)")
    a, b = padded_pair(psi1, psi2)
    spec_a = tensor_spectrum(a, phi)
    spec_b = tensor_spectrum(b, phi)
    ok = verify_catalyst(a, b, phi)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.format == "machine":
        doc = {
            "verdict": "catalyst" if ok else "not_catalyst",
            "is_catalyst": ok,
            "spectra": {
                "psi1_x_phi": [_fmt(v) for v in spec_a.values],
                "psi2_x_phi": [_fmt(v) for v in spec_b.values],
            },
            "prefix_sums": {
                "psi1_x_phi": [_fmt(v) for v in spec_a.prefix_sums()],
                "psi2_x_phi": [_fmt(v) for v in spec_b.prefix_sums()],
            },
            "_elapsed_ms": elapsed,
        }
        _emit(doc, args)
    else:
        print(f"spectrum psi1 x phi: ({', '.join(_fmt(v) for v in spec_a.values)})")
        print(f"spectrum psi2 x phi: ({', '.join(_fmt(v) for v in spec_b.values)})")
        print(f"{'l':>3} {'prefix psi1xphi':>18} {'prefix psi2xphi':>18}  cmp")
        for l, (va, vb) in enumerate(zip(spec_a.prefix_sums(), spec_b.prefix_sums()), 1):
            rel = "<=" if va <= vb else "> "
            print(f"{l:>3} {_fmt(va):>18} {_fmt(vb):>18}  {rel}")
        print(f"verdict: {'catalyst' if ok else 'not a catalyst'}")
        if args.stats:
            print(f"timing: {elapsed:.3f} ms")
    return 0 if ok else 1


def cmd_oracle(inputs, args) -> int:
    t0 = time.perf_counter()
    psi1, psi2, k, d = inputs["psi1"], inputs["psi2"], inputs["k"], inputs["d"]
    witness = grid_search(psi1, psi2, GridSpec(k=k, denominator=d))
    elapsed = (time.perf_counter() - t0) * 1000
    if args.format == "machine":
        doc = {
            "verdict": "witness" if witness is not None else "no_witness",
            "witness": None if witness is None else [_fmt(v) for v in witness],
            "grid_denominator": d,
            "_elapsed_ms": elapsed,
        }
        _emit(doc, args)
    else:
        if witness is None:
            print(f"no grid witness at resolution 1/{d}")
        else:
            print(f"grid witness: ({', '.join(_fmt(v) for v in witness)})")
        if args.stats:
            print(f"timing: {elapsed:.3f} ms")
    return 0 if witness is not None else 1


def _add_common(sub, *, phi=False, k=False, grid=False):
    sub.add_argument("--psi1", help="source state, comma-separated rationals")
    sub.add_argument("--psi2", help="target state, comma-separated rationals")
    sub.add_argument("--input", help="JSON file with psi1/psi2 (and optional k, phi)")
    if phi:
        sub.add_argument("--phi", help="catalyst candidate, comma-separated rationals")
    if k:
        sub.add_argument("--k", type=int, default=None, help="catalyst dimension (default 2)")
    if grid:
        sub.add_argument(
            "--grid-denominator", type=int, default=None, help="grid step denominator"
        )
    sub.add_argument(
        "--format", choices=("human", "machine"), default="human", help="output format"
    )
    sub.add_argument("--stats", action="store_true", help="include counters and timing")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entcat",
        description="Exact existence decisions for entanglement catalysts.",
    )
    parser.add_argument("--version", action="version", version=f"entcat {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    _add_common(subs.add_parser("compare", help="classify a pair by majorization"))
    _add_common(subs.add_parser("find", help="find all k x k catalysts"), k=True)
    _add_common(subs.add_parser("verify", help="check one catalyst candidate"), phi=True)
    _add_common(
        subs.add_parser("oracle", help="brute-force grid search"), k=True, grid=True
    )
    return parser


_COMMANDS = {
    "compare": cmd_compare,
    "find": cmd_find,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        inputs = _resolve(args)
        return _COMMANDS[args.command](inputs, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CatalysisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
