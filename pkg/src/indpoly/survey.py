"""Catalog surveys: which coefficient orderings show up inside roller-coaster windows.

Records are JSON lines (big integers as decimal strings); the summary is a
single JSON document. Output is identical for any worker count: workers
return results in input order and aggregation is order-independent.
"""
from __future__ import annotations

import ast
import json
import multiprocessing
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from . import limits
from .bounds import TheoremId, Window, WindowKind, check_bounds, roller_coaster_window
from .classification import ClassificationRecord, classify
from .enumeration import CoefficientSequence, independence_coefficients
from .formats import FormatError, from_graph6, iter_graph6

__all__ = [
    "WindowSignature",
    "SurveyConfig",
    "SurveyError",
    "pattern_signature",
    "compile_filter",
    "run_survey",
]

FILTER_FIELDS = (
    "n",
    "alpha",
    "well_covered",
    "very_well_covered",
    "one_well_covered",
    "lambda_star",
    "has_isolated",
    "connected",
)


class SurveyError(ValueError):
    pass


@dataclass(frozen=True)
class WindowSignature:
    """Competition ranks of ``s_lo..s_hi`` (rank 1 = largest; ties share a rank).

    ``strict_pattern`` is present only when all window values differ; it lists
    the window indices in increasing order of coefficient value, i.e. the
    ordering ``sigma`` with ``s_sigma(lo) < s_sigma(lo+1) < ...``.
    """

    window: Window
    pattern: tuple[int, ...]
    strict_pattern: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "window": self.window.to_dict(),
            "pattern": list(self.pattern),
            "strict_pattern": None if self.strict_pattern is None else list(self.strict_pattern),
        }


def pattern_signature(coeffs: CoefficientSequence | Sequence[int], window: Window) -> WindowSignature:
    values = list(coeffs)
    alpha = len(values) - 1
    if window.empty:
        return WindowSignature(window, (), ())
    if window.lo < 0 or window.hi > alpha:
        raise ValueError(f"window {window.lo}..{window.hi} outside [0, {alpha}]")
    vals = [values[k] for k in window.indices]
    ranks = tuple(1 + sum(1 for w in vals if w > v) for v in vals)
    strict = None
    if len(set(vals)) == len(vals):
        strict = tuple(sorted(window.indices, key=lambda k: values[k]))
    return WindowSignature(window, ranks, strict)


# -- filter expressions ---------------------------------------------------

_ALLOWED_NODES = (
    ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not,
    ast.Compare, ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE,
    ast.Name, ast.Load, ast.Constant, ast.BinOp, ast.Div,
)


def compile_filter(expr: str | None):
    """Compile a predicate such as ``"well_covered and alpha >= 3"``.

    Only record field names, ``and``/``or``/``not``, comparisons, numeric
    and boolean constants, and ``/`` (for rational ``lambda_star`` bounds)
    are accepted.
    """
    if expr is None or not expr.strip():
        return None
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise SurveyError(f"bad filter expression {expr!r}: {exc.msg}") from None
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise SurveyError(f"filter {expr!r}: {type(node).__name__} not allowed")
        if isinstance(node, ast.Name) and node.id not in FILTER_FIELDS:
            raise SurveyError(f"filter {expr!r}: unknown field {node.id!r}")
        if isinstance(node, ast.BinOp) and not all(
            isinstance(x, ast.Constant) for x in (node.left, node.right)
        ):
            raise SurveyError(f"filter {expr!r}: '/' only between constants")
    code = compile(tree, "<filter>", "eval")
    return code


def _apply_filter(code, rec: ClassificationRecord) -> bool:
    if code is None:
        return True
    env = {f: getattr(rec, f) for f in FILTER_FIELDS}
    env["__builtins__"] = {}
    return bool(eval(code, env))  # noqa: S307 - AST whitelisted in compile_filter


# -- the survey -----------------------------------------------------------


@dataclass
class SurveyConfig:
    inputs: list[str]
    output: str
    summary_output: str | None = None
    filter: str | None = None
    window_kind: WindowKind = WindowKind.WELL_COVERED
    checks: list[TheoremId] = field(default_factory=list)
    workers: int = 1
    max_n: int = 16
    skip_parse_errors: bool = False
    chunksize: int = 64

    def __post_init__(self):
        self.window_kind = WindowKind(self.window_kind)
        self.checks = [TheoremId(c) for c in self.checks]
        if self.workers < 1:
            raise SurveyError("workers must be >= 1")
        if not 0 <= self.max_n <= limits.ENUM_MAX_N:
            raise SurveyError(f"max_n must lie in [0, {limits.ENUM_MAX_N}]")


@dataclass
class SurveySummary:
    inputs: int = 0
    records: int = 0
    filtered_out: int = 0
    skipped_limit: list[int] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)
    cells: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        cells = []
        for (alpha, n, kind) in sorted(self.cells):
            strict, tied = self.cells[(alpha, n, kind)]
            cells.append({
                "alpha": alpha,
                "n": n,
                "window_kind": kind,
                "records": sum(strict.values()) + sum(tied.values()),
                "strict_patterns": [
                    {"pattern": list(p), "count": c} for p, c in sorted(strict.items())
                ],
                "tied_patterns": [
                    {"pattern": list(p), "count": c} for p, c in sorted(tied.items())
                ],
            })
        return {
            "inputs": self.inputs,
            "records": self.records,
            "filtered_out": self.filtered_out,
            "skipped_limit": self.skipped_limit,
            "parse_errors": self.parse_errors,
            "cells": cells,
        }


# set in each worker (or the main process) before processing
_job: dict = {}


def _init_job(filter_expr, window_kind, checks, max_n) -> None:
    _job["filter"] = compile_filter(filter_expr)
    _job["kind"] = WindowKind(window_kind)
    _job["checks"] = [TheoremId(c) for c in checks]
    _job["max_n"] = max_n


def _process(item: tuple[int, int, str]) -> tuple[str, int, object]:
    ordinal, lineno, text = item
    try:
        g = from_graph6(text)
    except (FormatError, ValueError) as exc:
        return ("parse_error", ordinal, {"line": lineno, "error": str(exc)})
    if g.n > _job["max_n"]:
        return ("skipped", ordinal, None)
    rec = classify(g)
    if not _apply_filter(_job["filter"], rec):
        return ("filtered", ordinal, None)
    coeffs = independence_coefficients(g)
    out = {
        "ordinal": ordinal,
        "graph6": text,
        "n": g.n,
        "alpha": rec.alpha,
        "classification": rec.to_dict(),
        "coefficients": coeffs.as_strings(),
    }
    if rec.alpha >= 1:
        window = roller_coaster_window(rec.alpha, g.n, _job["kind"])
        out["signature"] = pattern_signature(coeffs, window).to_dict()
    else:
        out["signature"] = None
    reports = {}
    for tid in _job["checks"]:
        if tid is TheoremId.CORONA_K2:
            # the catalog graph plays the role of H in H o K2
            if g.n == 0 or not rec.connected:
                reports[tid.value] = {"hypotheses_met": False, "passed": False,
                                      "checked": 0, "violations": 0}
                continue
        lam = "star" if tid is TheoremId.TH13 else None
        reports[tid.value] = check_bounds(g, tid, lam).summary()
    out["bounds"] = reports
    return ("record", ordinal, out)


def _items(inputs: Iterable[str]) -> Iterator[tuple[int, int, str]]:
    ordinal = 0
    for path in inputs:
        for lineno, text in iter_graph6(path):
            yield ordinal, lineno, text
            ordinal += 1


def run_survey(config: SurveyConfig) -> dict:
    """Run the survey, write JSON-lines records (and the summary if configured), return the summary."""
    for path in config.inputs:
        if not Path(path).is_file():
            raise SurveyError(f"input file not found: {path}")
    init_args = (
        config.filter,
        config.window_kind.value,
        [c.value for c in config.checks],
        config.max_n,
    )
    compile_filter(config.filter)
    summary = SurveySummary()
    pool = None
    if config.workers > 1:
        ctx = multiprocessing.get_context("spawn")
        pool = ctx.Pool(config.workers, initializer=_init_job, initargs=init_args)
        results = pool.imap(_process, _items(config.inputs), chunksize=config.chunksize)
    else:
        _init_job(*init_args)
        results = map(_process, _items(config.inputs))
    try:
        with open(config.output, "w", encoding="utf-8") as out:
            for status, ordinal, payload in results:
                summary.inputs += 1
                if status == "parse_error":
                    if not config.skip_parse_errors:
                        raise SurveyError(
                            f"graph6 parse error at line {payload['line']}: {payload['error']}"
                        )
                    summary.parse_errors.append({"ordinal": ordinal, **payload})
                elif status == "skipped":
                    summary.skipped_limit.append(ordinal)
                elif status == "filtered":
                    summary.filtered_out += 1
                else:
                    out.write(json.dumps(payload, sort_keys=True) + "\n")
                    summary.records += 1
                    _aggregate(summary, payload, config.window_kind.value)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    doc = summary.to_dict()
    if config.summary_output:
        with open(config.summary_output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")
    return doc


def _aggregate(summary: SurveySummary, rec: dict, kind: str) -> None:
    key = (rec["alpha"], rec["n"], kind)
    strict, tied = summary.cells.setdefault(key, (Counter(), Counter()))
    sig = rec["signature"]
    if sig is None:
        tied[()] += 1
    elif sig["strict_pattern"] is not None:
        strict[tuple(sig["strict_pattern"])] += 1
    else:
        tied[tuple(sig["pattern"])] += 1
