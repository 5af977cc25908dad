"""What each subcommand does once its arguments are parsed. Every function returns the exit status."""

from __future__ import annotations

import logging
import sys
import typing

from knotperm.cli import effective_preferences
from knotperm.decider import Status, decide_unknot, is_unlinked
from knotperm.diagram import topology_summary
from knotperm.permutation import is_cycle
from knotperm.util.json_lib import drop_none, dumps_stable

if typing.TYPE_CHECKING:
    import argparse

    from knotperm.counting.tables import CountTable
    from knotperm.decider import Verdict
    from knotperm.permutation import Permutation
    from knotperm.util.json_lib import JsonObject

logger = logging.getLogger(__name__)

TEXT_FIELDS = (
    "input", "status", "components", "crossings", "ur_indices", "writhe", "seifert_circle_count", "tb", "tree",
)


def classify(p: Permutation, count_fixed_points: bool = False) -> Verdict:
    if is_cycle(p):
        return decide_unknot(p)
    return is_unlinked(p, count_fixed_points)


def classification_report(p: Permutation, verdict: Verdict) -> JsonObject:
    """The classify report, in the field set and order shared by the text and JSON forms."""
    return drop_none({
        "input": p.one_line(),
        "status": verdict.label,
        "components": verdict.components,
        **topology_summary(p).to_json(),
        "tree": str(verdict.tree) if verdict.tree is not None else None,
        "witness": verdict.witness_json(),
    })


def run_classify(args: argparse.Namespace) -> int:
    p: Permutation = args.permutation
    verdict = classify(p, args.count_fixed_points)
    report = classification_report(p, verdict)
    if args.json:
        sys.stdout.write(dumps_stable(report))
        return 0

    for key in TEXT_FIELDS:
        if key not in report:
            continue
        value = report[key]
        if isinstance(value, list):
            value = " ".join(str(v) for v in value) or "-"
        print(f"{key}: {value}")
    witness = verdict.describe_witness()
    if witness is not None:
        print(f"witness: {witness}")
    return 0


def run_tree_to_cycle(args: argparse.Namespace) -> int:
    from knotperm.trees import TraceStep, tree_to_cycle

    trace: list[TraceStep] = []
    cycle = tree_to_cycle(args.tree, trace=trace)
    if args.trace:
        print("start 2,1")
        for step in trace:
            print(f"insert {step.sign.symbol} at {step.slot} -> {step.cycle}")
    print(cycle)
    return 0


def run_tree_from_cycle(args: argparse.Namespace) -> int:
    from knotperm.trees import left_normal_form

    verdict = decide_unknot(args.cycle)
    if verdict.status is Status.KNOTTED:
        print(f"knotted: {verdict.describe_witness()}", file=sys.stderr)
        return 1
    assert verdict.tree is not None
    print(left_normal_form(verdict.tree) if args.left_normal else verdict.tree)
    return 0


def _check_table(target: str, table: CountTable) -> list[str]:
    from knotperm.counting import expected
    from knotperm.counting.series import schroder, series_F, series_G

    mismatches = []
    top = max(row.n for row in table.rows)
    if target == "unknotted-cycles":
        for row in table.rows:
            if row.total != schroder(row.n - 1):
                mismatches.append(f"n={row.n}: counted {row.total}, S_{row.n - 1} = {schroder(row.n - 1)}")
        vendored = expected.UNKNOTTED_CYCLES
    else:
        series = series_G(top) if target == "unlinked-with-fixed" else series_F(top)
        for row in table.rows:
            from_series = sum(series.x_coefficient(row.n))
            if row.total != from_series:
                mismatches.append(f"n={row.n}: counted {row.total}, series gives {from_series}")
            for k, count in (row.by_components or {}).items():
                if count != series.coefficient(k, row.n):
                    mismatches.append(f"n={row.n}, k={k}: counted {count}, series gives {series.coefficient(k, row.n)}")
        vendored = (
            expected.UNLINKED_WITH_FIXED_POINTS if target == "unlinked-with-fixed" else expected.UNLINKED_DERANGEMENTS
        )

    for row in table.rows:
        if row.n in vendored and vendored[row.n] != row.total:
            mismatches.append(f"n={row.n}: counted {row.total}, reference sequence has {vendored[row.n]}")
    return mismatches


def run_count(args: argparse.Namespace) -> int:
    from knotperm.counting.tables import unknotted_cycle_table, unlinked_table

    preferences = effective_preferences(args)
    options = {"threads": preferences.threads, "progress": args.progress}
    if args.target == "unknotted-cycles":
        table = unknotted_cycle_table(args.n_range, cap=preferences.cycle_cap, **options)
    elif args.target == "unlinked":
        table = unlinked_table(args.n_range, args.by_components, cap=preferences.derangement_cap, **options)
    else:
        table = unlinked_table(
            args.n_range, args.by_components, include_fixed_points=True, cap=preferences.permutation_cap, **options
        )

    mismatches = _check_table(args.target, table) if args.check else []
    if args.json:
        data = table.to_json()
        if args.check:
            data["check"] = {"passed": not mismatches, "mismatches": mismatches}
        sys.stdout.write(dumps_stable(data))
    else:
        sys.stdout.write(table.format())
        if args.check:
            print("check: pass" if not mismatches else "check: FAIL")
    for mismatch in mismatches:
        print(f"mismatch: {mismatch}", file=sys.stderr)
    return 1 if mismatches else 0


def run_render(args: argparse.Namespace) -> int:
    from knotperm.render.ascii import render_ascii
    from knotperm.render.spec import RenderFormat, RenderSpec
    from knotperm.render.svg import render_svg

    spec = RenderSpec(
        format=RenderFormat(args.format),
        cell_size=args.cell_size,
        show_diagonal=not args.no_diagonal,
        show_crossings=not args.no_crossings,
        show_seifert=args.seifert,
    )
    if spec.format is RenderFormat.SVG:
        text = render_svg(args.permutation, spec)
    else:
        text = render_ascii(args.permutation, spec)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
        logger.info("wrote %s", args.out)
    return 0


def run_verify(args: argparse.Namespace) -> int:
    from knotperm.checks.base import VerifyContext
    from knotperm.checks.runner import run_suites

    context = VerifyContext(args.size, effective_preferences(args), args.progress)
    results = run_suites(context)
    passed = all(result.passed for result in results)
    if args.json:
        sys.stdout.write(dumps_stable({
            "max_n": args.size,
            "passed": passed,
            "suites": [result.to_json() for result in results],
        }))
    else:
        for result in results:
            print(result.describe())
    return 0 if passed else 1


def run_dg_experiment(args: argparse.Namespace) -> int:
    from knotperm.counting.tables import dg_experiment

    preferences = effective_preferences(args)
    report = dg_experiment(
        args.n, cap=preferences.permutation_cap, threads=preferences.threads, progress=args.progress
    )
    if args.json:
        sys.stdout.write(dumps_stable(report.to_json()))
        return 0

    verdict = "equal" if report.equal else "different"
    print(f"n={report.n}: {verdict} ({report.dg_tight} DG-tight, {report.unlinked} unlinked)")
    for images in report.only_dg:
        print(f"only DG-tight: {','.join(map(str, images))}")
    for images in report.only_unlinked:
        print(f"only unlinked: {','.join(map(str, images))}")
    return 0


def run_prob_unknot(args: argparse.Namespace) -> int:
    from knotperm.counting.tables import unknot_probability

    if args.n < 2:
        print("error: cycles start at length 2", file=sys.stderr)
        return 2
    probability = unknot_probability(args.n)
    if args.json:
        sys.stdout.write(dumps_stable({
            "n": args.n,
            "probability": str(probability),
            "numerator": int(probability.p),
            "denominator": int(probability.q),
        }))
    else:
        print(f"{probability} ~ {float(probability):.6g}")
    return 0


def run_config(args: argparse.Namespace) -> int:
    from knotperm.preferences import default_preferences_path

    if args.action == "show":
        sys.stdout.write(dumps_stable(effective_preferences(args).to_json()))
        return 0

    # environment overrides stay out of the file
    preferences = effective_preferences(args, include_environment=False)
    path = args.config or default_preferences_path()
    preferences.write_to_path(path)
    print(f"wrote {path}")
    return 0
