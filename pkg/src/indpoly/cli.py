"""Command-line front end.

Exit codes: 0 success or check passed, 1 check failed (violations or unmet
hypotheses), 2 usage, parse or size-limit error.

Graph arguments: ``g6:<graph6>`` is raw graph6, ``@path`` a graph6 or
edge-list file, anything else a graph spec such as ``corona(Star(3),K(2))``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from ._backend import BACKEND
from .bounds import TheoremId, WindowKind, check_bounds, roller_coaster_window
from .classification import classify
from .enumeration import brute_force_coefficients, independence_coefficients
from .formats import FormatError, from_graph6, read_graph_file, to_graph6
from .graph import Graph, corona
from .graphspec import GraphSpecError, parse_graph_spec
from .limits import SizeLimitError
from .polynomial import IntPolynomial, corona_compose, real_root_census
from .survey import SurveyConfig, SurveyError, run_survey


class UsageError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    if arg.startswith("g6:"):
        return from_graph6(arg[3:])
    if arg.startswith("@"):
        return read_graph_file(arg[1:])
    return parse_graph_spec(arg)


def _emit(fmt: str, payload: dict, tsv: str, human: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "tsv":
        print(tsv)
    else:
        print(human)


def _poly_fields(coeffs) -> tuple[list[str], str]:
    strs = [str(c) for c in coeffs]
    return strs, "\t".join(strs)


def cmd_poly(args) -> int:
    g = load_graph(args.graph)
    s = independence_coefficients(g)
    strs, tsv = _poly_fields(s)
    _emit(args.format, {"n": g.n, "alpha": s.alpha, "coefficients": strs}, tsv,
          f"I(G;x) = {IntPolynomial(s.coeffs)}  (n={g.n}, alpha={s.alpha})")
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    s = brute_force_coefficients(g)
    strs, tsv = _poly_fields(s)
    _emit(args.format, {"n": g.n, "alpha": s.alpha, "coefficients": strs, "method": "brute_force"},
          tsv, f"I(G;x) = {IntPolynomial(s.coeffs)}  (brute force over 2^{g.n} subsets)")
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    rec = classify(g, compute_w2=args.w2)
    d = rec.to_dict()
    keys = list(d)
    tsv = "\t".join(keys) + "\n" + "\t".join(str(d[k]).lower() if isinstance(d[k], bool) else str(d[k]) for k in keys)
    _emit(args.format, d, tsv, "\n".join(f"{k:18s} {d[k]}" for k in keys))
    return 0


def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    lam = None
    if args.theorem == TheoremId.TH13.value:
        if args.lam is None:
            raise UsageError("--lambda is required for TH13 (a rational like 3/2, or 'star')")
        if args.lam == "star":
            lam = "star"
        else:
            try:
                lam = Fraction(args.lam)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad --lambda value {args.lam!r}") from None
            if lam <= 0:
                raise UsageError("--lambda must be positive")
    try:
        rep = check_bounds(g, args.theorem, lam)
    except ValueError as exc:
        if isinstance(exc, SizeLimitError):
            raise
        raise UsageError(str(exc)) from None
    d = rep.to_dict()
    status = "passed" if rep.passed else ("hypotheses_unmet" if not rep.hypotheses_met else "violated")
    d["status"] = status
    tsv = f"{rep.theorem_id.value}\t{status}\t{rep.checked_count}\t{len(rep.violations)}"
    lines = [f"{rep.theorem_id.value}: {status} ({rep.checked_count} inequalities checked)"]
    lines += [f"  reason: {r}" for r in rep.reasons]
    lines += [f"  violation k={v.k} [{v.tag}]: {v.lhs} vs {v.rhs}" for v in rep.violations]
    _emit(args.format, d, tsv, "\n".join(lines))
    return 0 if rep.passed else 1


def cmd_corona(args) -> int:
    h = load_graph(args.base)
    y = load_graph(args.attached)
    want_formula = args.via_formula
    want_enum = args.via_enum
    if not (want_formula or want_enum):
        g = corona(h, y)
        g6 = to_graph6(g)
        _emit(args.format, {"n": g.n, "graph6": g6, "edges": g.edge_count}, g6,
              f"corona: n={g.n}, edges={g.edge_count}, graph6 {g6}")
        return 0
    payload: dict = {}
    tsv_parts = []
    human = []
    if want_formula:
        pf = corona_compose(independence_coefficients(h).coeffs, independence_coefficients(y).coeffs, h.n)
        payload["via_formula"] = pf.to_json()
        tsv_parts.append("formula\t" + "\t".join(pf.to_json()))
        human.append(f"via formula:     {pf}")
    if want_enum:
        pe = IntPolynomial(independence_coefficients(corona(h, y)).coeffs)
        payload["via_enum"] = pe.to_json()
        tsv_parts.append("enum\t" + "\t".join(pe.to_json()))
        human.append(f"via enumeration: {pe}")
    rc = 0
    if want_formula and want_enum:
        agree = payload["via_formula"] == payload["via_enum"]
        payload["agree"] = agree
        tsv_parts.append(f"agree\t{str(agree).lower()}")
        human.append("agree" if agree else "DISAGREE")
        rc = 0 if agree else 1
    _emit(args.format, payload, "\n".join(tsv_parts), "\n".join(human))
    return rc


def cmd_roots(args) -> int:
    if args.coeffs:
        try:
            p = IntPolynomial(int(c) for c in args.graph.replace(",", " ").split())
        except ValueError:
            raise UsageError(f"bad coefficient list {args.graph!r}") from None
        if p.is_zero():
            raise UsageError("the zero polynomial has no root census")
    else:
        p = IntPolynomial(independence_coefficients(load_graph(args.graph)).coeffs)
    c = real_root_census(p)
    d = c.to_dict()
    d["polynomial"] = p.to_json()
    _emit(args.format, d,
          f"{c.degree}\t{c.squarefree_degree}\t{c.distinct_real_roots}\t{str(c.real_rooted).lower()}",
          f"{p}\n  degree {c.degree}, square-free degree {c.squarefree_degree}, "
          f"{c.distinct_real_roots} distinct real roots, real-rooted: {c.real_rooted}")
    return 0


def cmd_window(args) -> int:
    try:
        w = roller_coaster_window(args.alpha, args.n, args.kind, convention=args.convention)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = w.to_dict()
    d["indices"] = list(w.indices)
    _emit(args.format, d, f"{w.lo}\t{w.hi}",
          f"{w.kind.value} window for alpha={args.alpha}, n={args.n}: "
          + ("empty" if w.empty else f"{{{', '.join(map(str, w.indices))}}}"))
    return 0


def cmd_survey(args) -> int:
    checks = [c for c in (args.checks or "").split(",") if c]
    try:
        cfg = SurveyConfig(
            inputs=args.inputs,
            output=args.output,
            summary_output=args.summary,
            filter=args.filter,
            window_kind=args.window_kind,
            checks=checks,
            workers=args.workers,
            max_n=args.max_n,
            skip_parse_errors=args.skip_parse_errors,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = run_survey(cfg)
    brief = {k: summary[k] for k in ("inputs", "records", "filtered_out")}
    brief["skipped_limit"] = len(summary["skipped_limit"])
    brief["parse_errors"] = len(summary["parse_errors"])
    _emit(args.format, brief, "\t".join(str(brief[k]) for k in brief),
          ", ".join(f"{k}={v}" for k, v in brief.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indpoly", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, graph=True):
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("graph", help="graph spec, g6:<graph6>, or @file")
        sp.add_argument("--format", choices=["json", "tsv", "human"], default="human")
        sp.set_defaults(func=fn)
        return sp

    add("poly", cmd_poly, "independence polynomial coefficients")
    add("oracle", cmd_oracle, "coefficients by brute force over all subsets (n <= 32)")
    sp = add("classify", cmd_classify, "well-covered hierarchy and lambda*")
    sp.add_argument("--w2", action="store_true", help="also test class W2 directly (n <= 16)")
    sp = add("bounds", cmd_bounds, "run one theorem check")
    sp.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    sp.add_argument("--lambda", dest="lam", help="rational lambda for TH13, or 'star' for lambda*")
    sp = add("corona", cmd_corona, "corona of two graphs, or its polynomial", graph=False)
    sp.add_argument("base")
    sp.add_argument("attached")
    sp.add_argument("--via-formula", action="store_true")
    sp.add_argument("--via-enum", action="store_true")
    sp = add("roots", cmd_roots, "exact real-root census of I(G;x)")
    sp.add_argument("--coeffs", action="store_true",
                    help="treat the argument as a coefficient list (lowest degree first)")
    sp = add("window", cmd_window, "roller-coaster index window", graph=False)
    sp.add_argument("alpha", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--kind", choices=[k.value for k in WindowKind], default="WELL_COVERED")
    sp.add_argument("--convention", choices=["ceil", "listing"], default="ceil")
    sp = add("survey", cmd_survey, "survey graph6 catalogs", graph=False)
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("--output", "-o", required=True, help="JSON-lines record file")
    sp.add_argument("--summary", help="summary JSON file")
    sp.add_argument("--filter", help="predicate, e.g. 'well_covered and connected'")
    sp.add_argument("--window-kind", choices=[k.value for k in WindowKind], default="WELL_COVERED")
    sp.add_argument("--checks", help="comma-separated theorem ids")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=16)
    sp.add_argument("--skip-parse-errors", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphSpecError, FormatError, SizeLimitError, SurveyError) as exc:
        print(f"indpoly {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"indpoly {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
