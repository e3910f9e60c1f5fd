"""Command-line front end.

Commands: ``dist`` (single query), ``bench`` (full pairing benchmark),
``verify`` (randomized oracle cross-check), ``plot`` (plot-ready series
from a benchmark report). Data documents go to stdout as JSON;
diagnostics go to stderr.

Exit codes: 0 success, 1 usage error, 2 invalid input file,
3 verification failure, 4 algorithm error, 5 benchmark distance
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .baselines import gjk_distance, lin_canny_distance
from .benchmark import (
    ALGORITHMS,
    DEFAULT_ALGORITHMS,
    Scene,
    build_report,
    default_scene,
    run_benchmark,
    write_records_csv,
)
from .dyop import MovementAxis, dyop_distance
from .errors import (
    DegenerateInput,
    Penetrating,
    SceneFormatError,
    ZeroDirection,
    ZeroVelocity,
)
from .geometry import DistanceResult, Vector2, brute_force_triangle_distance
from .sceneio import load_scene
from .verify import DEFAULT_TOLERANCE, run_verify

_ALGORITHM_ERRORS = (DegenerateInput, Penetrating, ZeroVelocity, ZeroDirection)

SPEED_CSV_COLUMNS = ("pair_a", "pair_b", "algorithm", "median_ns")
PCT_CSV_COLUMNS = ("pair_a", "pair_b", "baseline", "pct", "delta_pct")


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _result_doc(result: DistanceResult) -> dict:
    return {
        "distance": result.distance,
        "point_a": [result.point_a.x, result.point_a.y],
        "point_b": [result.point_b.x, result.point_b.y],
        "feature_a": {"kind": result.feature_a.kind.value, "index": result.feature_a.index},
        "feature_b": {"kind": result.feature_b.kind.value, "index": result.feature_b.index},
        "counters": {
            "vv_tests": result.counters.vv_tests,
            "ve_tests": result.counters.ve_tests,
            "ee_tests": result.counters.ee_tests,
        },
        "flags": list(result.flags),
    }


def _load_scene_arg(path: str | None) -> Scene:
    if path is None:
        return default_scene()
    return load_scene(path)


def cmd_dist(args: argparse.Namespace) -> int:
    try:
        scene = _load_scene_arg(args.scene)
    except SceneFormatError as exc:
        _diag(f"invalid scene: {exc}")
        return 2

    by_name = {t.name: t for t in scene.objects}
    for name in (args.a, args.b):
        if name not in by_name:
            _diag(f"unknown object: {name}")
            return 1
    tri_a = by_name[args.a]
    tri_b = by_name[args.b]

    axis = MovementAxis(args.axis) if args.axis else scene.axis
    velocity = Vector2(1.0, 0.0) if axis is MovementAxis.X else Vector2(0.0, 1.0)
    try:
        if args.algo == "dyop":
            result = dyop_distance(tri_a, tri_b, velocity)
        elif args.algo == "gjk":
            result = gjk_distance(tri_a, tri_b)
        elif args.algo == "lincanny":
            result = lin_canny_distance(tri_a, tri_b)[0]
        else:
            result = brute_force_triangle_distance(tri_a, tri_b)
    except _ALGORITHM_ERRORS as exc:
        _diag(f"algorithm error ({type(exc).__name__}): {exc}")
        return 4

    doc = {"pair": [args.a, args.b], "algorithm": args.algo, "axis": axis.value}
    doc.update(_result_doc(result))
    _emit(doc)
    return 0


def _parse_algos(raw: str) -> tuple[str, ...] | None:
    algos = tuple(a.strip() for a in raw.split(",") if a.strip())
    if not algos or any(a not in ALGORITHMS for a in algos):
        return None
    return algos


def cmd_bench(args: argparse.Namespace) -> int:
    algos = _parse_algos(args.algos)
    if algos is None:
        _diag(f"invalid algorithm list: {args.algos!r} (choose from {', '.join(ALGORITHMS)})")
        return 1
    if args.repeats < 1:
        _diag(f"repeats must be at least 1: {args.repeats}")
        return 1
    try:
        scene = _load_scene_arg(args.scene)
    except SceneFormatError as exc:
        _diag(f"invalid scene: {exc}")
        return 2

    records = run_benchmark(scene, algos, args.repeats)
    write_records_csv(records, args.out_csv)

    report = None
    if "dyop" in algos and any(a != "dyop" for a in algos):
        report = build_report(records)

    doc = {
        "scene_objects": len(scene.objects),
        "separation": scene.separation,
        "axis": scene.axis.value,
        "repeats": args.repeats,
        "algorithms": list(algos),
        "records": [
            {
                "pair_a": r.pair[0],
                "pair_b": r.pair[1],
                "algorithm": r.algorithm,
                "median_ns": r.median_ns,
                "vv_tests": r.counters.vv_tests,
                "ve_tests": r.counters.ve_tests,
                "ee_tests": r.counters.ee_tests,
                "distance": r.distance,
                "flags": list(r.flags),
            }
            for r in records
        ],
        "report": report.to_dict() if report is not None else None,
    }
    with open(args.out_json, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")

    summary_doc = {
        "records": len(records),
        "mismatches": sum(1 for r in records if "mismatch" in r.flags),
        "failed": sum(1 for r in records if r.failed),
        "summary": doc["report"]["summary"] if report is not None else {},
        "counter_totals": doc["report"]["counter_totals"] if report is not None else {},
        "out_csv": args.out_csv,
        "out_json": args.out_json,
    }
    _emit(summary_doc)
    if report is not None:
        for name, s in report.summary.items():
            _diag(
                f"{name} vs dyop: max {s.max_pct:.7f}% min {s.min_pct:.7f}% "
                f"mean {s.mean_pct:.7f}%"
            )
    if summary_doc["mismatches"] > 0:
        _diag(f"{summary_doc['mismatches']} record(s) exceeded the distance mismatch tolerance")
        return 5
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        _diag(f"trials must be at least 1: {args.trials}")
        return 1
    report = run_verify(args.trials, args.seed, args.tol)
    _emit(
        {
            "trials": report.trials,
            "mismatches": report.mismatches,
            "mismatch_rate": report.mismatch_rate,
            "max_overestimate": report.max_overestimate,
            "conservative_violations": report.conservative_violations,
            "tolerance": report.tolerance,
        }
    )
    if report.conservative_violations > 0:
        _diag(
            f"{report.conservative_violations} conservative-bound violation(s): "
            "the pruned distance dropped below the exact distance"
        )
        return 3
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    try:
        with open(args.report) as fh:
            doc = json.load(fh)
        records = doc["records"]
        report = doc.get("report")
        if not isinstance(records, list):
            raise SceneFormatError("'records' must be a list")
    except (OSError, json.JSONDecodeError, KeyError, SceneFormatError, TypeError) as exc:
        _diag(f"unreadable report: {exc}")
        return 2

    os.makedirs(args.out, exist_ok=True)
    speed_path = os.path.join(args.out, "speed.csv")
    pct_path = os.path.join(args.out, "percentages.csv")

    with open(speed_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SPEED_CSV_COLUMNS)
        for r in records:
            writer.writerow([r["pair_a"], r["pair_b"], r["algorithm"], repr(r["median_ns"])])

    with open(pct_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(PCT_CSV_COLUMNS)
        if report is not None:
            for p in report["pairs"]:
                for baseline, pct in p["pct"].items():
                    writer.writerow(
                        [
                            p["pair_a"],
                            p["pair_b"],
                            baseline,
                            repr(pct),
                            repr(p["delta_pct"][baseline]),
                        ]
                    )

    _emit({"speed_csv": speed_path, "percentages_csv": pct_path})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyop2d",
        description="2D triangle proximity queries: pruned distance, exact oracle, and baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("dist", help="distance between two named scene objects")
    p_dist.add_argument("--scene", help="scene JSON file (default: built-in scene)")
    p_dist.add_argument("--a", required=True, help="first object name")
    p_dist.add_argument("--b", required=True, help="second object name")
    p_dist.add_argument("--algo", required=True, choices=ALGORITHMS)
    p_dist.add_argument("--axis", choices=("x", "y"), help="movement axis override")
    p_dist.set_defaults(func=cmd_dist)

    p_bench = sub.add_parser("bench", help="run the full pairing benchmark")
    p_bench.add_argument("--scene", help="scene JSON file (default: built-in scene)")
    p_bench.add_argument("--repeats", type=int, default=1000, help="timed runs per record")
    p_bench.add_argument(
        "--algos",
        default=",".join(DEFAULT_ALGORITHMS),
        help="comma-separated algorithms (default: %(default)s)",
    )
    p_bench.add_argument("--out-csv", required=True, help="records CSV output path")
    p_bench.add_argument("--out-json", required=True, help="report JSON output path")
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify", help="randomized oracle cross-check")
    p_verify.add_argument("--trials", type=int, required=True)
    p_verify.add_argument("--seed", type=int, required=True)
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="emit plot-ready series from a bench report")
    p_plot.add_argument("--report", required=True, help="bench JSON report path")
    p_plot.add_argument("--out", required=True, help="output directory")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return 0 if exc.code in (0, None) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
