"""Command-line front end.

Subcommands:

    bases      build, validate, and print a pattern basis from a recipe
    classify   one function -> outcome distribution, nearest set, theta
    enumerate  exhaustive distance profile (lengths 8 and 16)
    sample     stratified sampled profile plus deterministic probes
    tables     recompute the published reference tables and diff
    game       Monte Carlo simulation of the guessing game

Exit codes: 0 success, 1 usage error, 2 reference-table diff failure.
The default seed comes from the BASISKET_SEED environment variable when
set, else 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classifier import (
    BASIS_TO_FACTOR,
    ClassifierSpec,
    classification_threshold,
    outcome_distribution,
)
from .experiment import (
    exhaustive_profile,
    interval_summary,
    probe_suite,
    profile_rho,
    stratified_sample_profile,
)
from .game import GameConfig, estimate_win_rate, play_round
from .patterns import PatternVector, class_rho, validate_basis
from . import reference
from .report import (
    RunManifest,
    Stopwatch,
    ascii_histogram,
    distribution_to_csv,
    distribution_to_json,
    profile_to_csv,
    profile_to_json,
    svg_histogram,
)

SEED_ENV_VAR = "BASISKET_SEED"


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _basis_recipe(spec: ClassifierSpec) -> tuple[str, ...]:
    from .classifier import FACTOR_TO_BASIS
    return tuple(FACTOR_TO_BASIS[f] for f in spec.factors)


def _parse_quotas(items: list[str] | None, length: int,
                  default: int = 200) -> dict[int, int]:
    if not items:
        return {d: default for d in range(1, length // 2)}
    quotas: dict[int, int] = {}
    for item in items:
        d, _, count = item.partition("=")
        quotas[int(d)] = int(count)
    return quotas


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_profile(profile, args, manifest: RunManifest, runtime: float) -> None:
    body = (profile_to_json(profile, runtime) if args.format == "json"
            else profile_to_csv(profile))
    _write_or_print(body, args.out)
    if args.out:
        manifest.outputs.append(args.out)
        manifest_path = args.out + ".manifest.json"
        Path(manifest_path).write_text(
            json.dumps(manifest.to_dict(), indent=2), encoding="utf-8")
    if args.hist:
        chart = (svg_histogram(profile) if args.hist == "svg"
                 else ascii_histogram(profile))
        if args.hist == "svg":
            target = (args.out or "profile") + ".svg"
            Path(target).write_text(chart, encoding="utf-8")
            print(f"histogram written to {target}")
        else:
            sys.stdout.write(chart)


def cmd_bases(args) -> int:
    spec = ClassifierSpec.parse(args.recipe)
    basis = spec.basis()
    violation = validate_basis(basis.members)
    print(str(basis))
    rho = class_rho(basis)
    print(f"# rank {basis.rank}, zero-count {rho}")
    if violation is not None:
        print(f"# INVALID: {violation}")
        return 1
    return 0


def cmd_classify(args) -> int:
    spec = ClassifierSpec.parse(args.recipe)
    basis = spec.basis()
    h = PatternVector.parse(args.function)
    report = classification_threshold(spec, basis, h)
    probs = report.distribution
    body = (distribution_to_json(probs, spec.total_bits) if args.format == "json"
            else distribution_to_csv(probs, spec.total_bits))
    _write_or_print(body, args.out)
    top = int(np.argmax(probs))
    print(f"distance {report.nearest.distance}  "
          f"nearest_kets {sorted(report.nearest.indices)}  "
          f"theta {report.theta:.6f}  most_likely_outcome {top} "
          f"({format(top, f'0{spec.total_bits}b')})")
    return 0


def cmd_enumerate(args) -> int:
    spec = ClassifierSpec.parse(args.recipe)
    with Stopwatch() as timer:
        profile = exhaustive_profile(spec.factors)
    manifest = RunManifest("enumerate", args.recipe, "exhaustive", None,
                           tool_version=__version__,
                           runtime_seconds=timer.elapsed)
    _emit_profile(profile, args, manifest, timer.elapsed)
    return 0


def cmd_sample(args) -> int:
    spec = ClassifierSpec.parse(args.recipe)
    quotas = _parse_quotas(args.quota, spec.dim)
    with Stopwatch() as timer:
        profile = stratified_sample_profile(
            spec.factors, quotas, args.seed,
            attempt_factor=args.attempt_factor)
    manifest = RunManifest("sample", args.recipe, "sampled", args.seed,
                           quotas=quotas, tool_version=__version__,
                           runtime_seconds=timer.elapsed)
    _emit_profile(profile, args, manifest, timer.elapsed)
    if profile.short_buckets:
        print(f"# short buckets (quota unmet): {list(profile.short_buckets)}")
    print("# probes:")
    for name, report in probe_suite(spec.factors):
        print(f"#   {name}: distance {report.nearest.distance} "
              f"theta {report.theta:.6f}")
    summary = interval_summary(profile, profile_rho(spec.factors))
    for region in summary.regions:
        status = "consistent" if region.consistent else \
            f"violated at {list(region.offending)}"
        print(f"# region [{region.low}, {region.high}] "
              f"({region.expectation}): {status}")
    if summary.monotonicity_violations:
        print(f"# note: non-monotone buckets at "
              f"{list(summary.monotonicity_violations)}")
    return 0


def _diff_exhaustive_table(which: int, recipes, expected) -> list[reference.CellDiff]:
    diffs = []
    for recipe in recipes:
        profile = exhaustive_profile(recipe)
        name = ",".join(BASIS_TO_FACTOR.get(f, f) for f in recipe)
        for d, want in expected.items():
            actual = profile.mean(d) if profile.counts[d] > 0 else 0.0
            tol = reference.cell_tolerance(want)
            if abs(actual - want) > tol:
                diffs.append(reference.CellDiff(which, name, d, want, actual, tol))
    return diffs


def cmd_tables(args) -> int:
    which = args.which
    diffs: list[reference.CellDiff] = []
    if which == 3:
        diffs = _diff_exhaustive_table(
            3, reference.TABLE_3_RECIPES, reference.TABLE_3)
    elif which == 5:
        diffs = _diff_exhaustive_table(
            5, reference.TABLE_5_GENERIC_RECIPES, reference.TABLE_5_GENERIC)
        diffs += _diff_exhaustive_table(
            5, (("C2", "C2"),), reference.TABLE_5_C2C2)
    elif which == 7:
        recipe = reference.TABLE_7_RECIPE
        quotas = {d: reference.TABLE_7_QUOTA for d in range(1, 16)}
        profile = stratified_sample_profile(
            recipe, quotas, reference.TABLE_7_SEED,
            attempt_factor=args.attempt_factor)
        name = ",".join(recipe)
        for low, high, lo_bound, hi_bound in reference.TABLE_7_REGIONS:
            for d in range(low, high + 1):
                mean = profile.mean(d) if profile.counts[d] > 0 else float("nan")
                if not lo_bound < mean < hi_bound:
                    diffs.append(reference.CellDiff(
                        7, name, d, (lo_bound + hi_bound) / 2, mean,
                        (hi_bound - lo_bound) / 2))
        for probe_name, report in probe_suite(recipe):
            if probe_name.startswith("complement_of_member"):
                if report.theta > reference.EXACT_TOL:
                    diffs.append(reference.CellDiff(
                        7, name, report.nearest.distance, 0.0, report.theta,
                        reference.EXACT_TOL))
    elif which == 8:
        from .patterns import rho_recurrence
        for m, (recipe, rho) in enumerate(reference.TABLE_8_RHO.items(), start=1):
            name = ",".join(recipe)
            if profile_rho(recipe) != rho or rho_recurrence(m) != rho:
                diffs.append(reference.CellDiff(8, name, 0, rho,
                                                float(profile_rho(recipe)),
                                                0.0))
            reports = dict(probe_suite(recipe))
            all_ones = reports["all_ones"]
            if all_ones.nearest.distance != rho:
                diffs.append(reference.CellDiff(
                    8, name, rho, rho, float(all_ones.nearest.distance), 0.0))
            if abs(all_ones.theta - 1.0) > reference.EXACT_TOL:
                diffs.append(reference.CellDiff(
                    8, name, rho, 1.0, all_ones.theta, reference.EXACT_TOL))
    else:
        print(f"unknown table {which}; choose from 3, 5, 7, 8", file=sys.stderr)
        return 1
    if diffs:
        for diff in diffs:
            print(f"DIFF {diff}")
        print(f"table {which}: {len(diffs)} cell(s) outside tolerance")
        return 2
    print(f"table {which}: all cells within tolerance")
    return 0


def cmd_game(args) -> int:
    config = GameConfig(
        recipe=tuple(ClassifierSpec.parse(args.recipe).factors),
        bob=args.bob, alice=args.alice,
        trials=args.trials, seed=args.seed,
        bob_distance=args.distance)
    if args.rounds_out:
        seeds = np.random.SeedSequence(config.seed).spawn(config.trials)
        wins = 0
        with open(args.rounds_out, "w", encoding="utf-8") as fh:
            for s in seeds:
                record = play_round(config, s)
                wins += record.alice_wins
                fh.write(json.dumps({
                    "distance": record.distance,
                    "outcome": record.outcome,
                    "in_nearest": record.in_nearest,
                    "alice_yes": record.alice_yes,
                    "alice_wins": record.alice_wins,
                    "function": str(record.function),
                }) + "\n")
        rate = wins / config.trials
        se = float(np.sqrt(rate * (1 - rate) / config.trials))
    else:
        result = estimate_win_rate(config)
        rate, se = result.rate, result.standard_error
    print(json.dumps({
        "recipe": args.recipe, "bob": args.bob, "alice": args.alice,
        "distance": args.distance, "trials": args.trials, "seed": args.seed,
        "alice_win_rate": rate, "standard_error": se,
    }, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basisket",
        description="Pattern-basis classification of Boolean functions.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed=False, output=False):
        p.add_argument("--recipe", required=True,
                       help="comma-separated factors, e.g. H,C2,H")
        if seed:
            p.add_argument("--seed", type=int, default=_default_seed())
        if output:
            p.add_argument("--out", help="output file (default: stdout)")
            p.add_argument("--format", choices=("csv", "json"), default="csv")
            p.add_argument("--hist", choices=("ascii", "svg"),
                           help="also emit a histogram")

    p = sub.add_parser("bases", help="build and validate a pattern basis")
    add_common(p)
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("classify", help="classify one Boolean function")
    add_common(p, output=True)
    p.add_argument("--function", required=True,
                   help="pattern bit string, MSB first")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="exhaustive distance profile")
    add_common(p, output=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="stratified sampled profile + probes")
    add_common(p, seed=True, output=True)
    p.add_argument("--quota", action="append", metavar="D=COUNT",
                   help="per-distance sample quota (repeatable)")
    p.add_argument("--attempt-factor", type=int, default=50,
                   help="attempt cap per bucket, as a multiple of its quota")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("tables", help="diff against published reference tables")
    p.add_argument("--which", type=int, required=True, choices=(3, 5, 7, 8))
    p.add_argument("--attempt-factor", type=int, default=100_000,
                   help="sampling attempt cap multiple (table 7 only)")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("game", help="simulate the guessing game")
    add_common(p, seed=True)
    p.add_argument("--bob", choices=("at_distance", "pivot", "uniform_random"),
                   default="uniform_random")
    p.add_argument("--alice",
                   choices=("interval_threshold", "always_yes", "always_no"),
                   default="interval_threshold")
    p.add_argument("--distance", type=int,
                   help="Bob's target distance (at_distance strategy)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--rounds-out", help="write per-round records (JSON lines)")
    p.set_defaults(func=cmd_game)
    return parser


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract is exit 1
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
