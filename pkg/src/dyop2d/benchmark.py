"""Benchmark protocol: named triangles, all ordered pairings, fixed separation.

A scene holds n named triangles; the plan runs every ordered pair
(mover, static) once, n*(n-1) queries total. Before each query the mover
is translated along the negative movement axis until the exact
separation distance matches the scene's configured value, so every
algorithm answers the same question. Wall times use a monotonic clock
(one warm-up, median of the repeats); primitive-test counters are
recorded alongside as the machine-independent cost metric.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass

from .baselines import gjk_distance, lin_canny_distance
from .dyop import MovementAxis, dyop_distance
from .errors import (
    DegenerateInput,
    IncompleteRecords,
    Penetrating,
    PlacementFailure,
    ZeroVelocity,
)
from .geometry import (
    DistanceResult,
    Point2,
    TestCounters,
    Triangle,
    Vector2,
    brute_force_triangle_distance,
)

ALGORITHMS = ("dyop", "gjk", "lincanny", "oracle")
DEFAULT_ALGORITHMS = ("dyop", "gjk", "lincanny")
MISMATCH_TOLERANCE = 1e-6
PLACEMENT_TOLERANCE = 1e-9
CSV_COLUMNS = (
    "pair_a",
    "pair_b",
    "algorithm",
    "median_ns",
    "vv_tests",
    "ve_tests",
    "ee_tests",
    "distance",
    "flags",
)


@dataclass(frozen=True)
class Scene:
    """Named triangles plus the separation and movement axis used for placement."""

    objects: tuple[Triangle, ...]
    separation: float
    axis: MovementAxis

    def __post_init__(self) -> None:
        if not self.objects:
            raise ValueError("scene needs at least one object")
        names = [t.name for t in self.objects]
        if any(not n for n in names):
            raise ValueError("every scene object needs a name")
        if len(set(names)) != len(names):
            raise ValueError("scene object names must be unique")
        if not self.separation > 0.0:
            raise ValueError(f"separation must be positive: {self.separation}")


@dataclass(frozen=True)
class PairingPlan:
    pairs: tuple[tuple[int, int], ...]


def enumerate_pairs(n: int) -> PairingPlan:
    """All ordered pairs (mover, static) without self-pairs, in row-major order."""
    if n < 1:
        raise ValueError(f"object count must be at least 1: {n}")
    return PairingPlan(
        tuple((i, j) for i in range(n) for j in range(n) if i != j)
    )


def _tri(name: str, a: tuple[float, float], b: tuple[float, float], c: tuple[float, float]) -> Triangle:
    return Triangle(Point2(*a), Point2(*b), Point2(*c), name)


def default_scene() -> Scene:
    """The checked-in ten-object scene: varied shapes, scales 0.5 to 4 units."""
    return Scene(
        objects=(
            _tri("Obj1", (0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
            _tri("Obj2", (0.0, 0.0), (2.0, 0.0), (1.0, 1.7320508075688772)),
            _tri("Obj3", (0.0, 0.0), (3.0, 0.0), (2.6, 0.8)),
            _tri("Obj4", (0.0, 0.0), (4.0, 0.0), (2.0, 0.15)),
            _tri("Obj5", (0.0, 0.0), (0.5, 0.0), (0.22, 0.45)),
            _tri("Obj6", (0.0, 0.0), (1.2, 0.0), (0.3, 3.5)),
            _tri("Obj7", (0.0, 0.0), (2.5, 0.0), (0.0, 1.5)),
            _tri("Obj8", (0.0, 0.0), (3.8, 0.0), (3.1, 1.0)),
            _tri("Obj9", (0.0, 0.0), (0.8, 0.0), (0.4, 0.6928203230275509)),
            _tri("Obj10", (0.0, 0.0), (1.8, 0.3), (0.5, 1.6)),
        ),
        separation=1.0,
        axis=MovementAxis.X,
    )


def _translated_along(tri: Triangle, axis: MovementAxis, offset: float) -> Triangle:
    if axis is MovementAxis.X:
        return tri.translated(-offset, 0.0)
    return tri.translated(0.0, -offset)


def _span(tri: Triangle, axis: MovementAxis) -> float:
    if axis is MovementAxis.X:
        cs = [v.x for v in tri.vertices]
    else:
        cs = [v.y for v in tri.vertices]
    return max(cs) - min(cs)


def place_pair(
    scene: Scene, pair: tuple[int, int]
) -> tuple[Triangle, Triangle, Vector2]:
    """Translate the mover along the negative axis until the exact distance
    equals the scene separation; the static object keeps its canonical pose.

    The separation is found by bisecting the translation offset against
    the brute-force distance, which is convex in the offset.
    """
    i, j = pair
    n = len(scene.objects)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise ValueError(f"invalid pair: {pair}")
    mover = scene.objects[i]
    static = scene.objects[j]
    axis = scene.axis

    def gap(offset: float) -> float:
        moved = _translated_along(mover, axis, offset)
        return brute_force_triangle_distance(moved, static).distance - scene.separation

    hi = _span(mover, axis) + _span(static, axis) + scene.separation + 1.0
    for _ in range(64):
        if gap(hi) >= 0.0:
            break
        hi *= 2.0
    else:
        raise PlacementFailure(f"no offset reaches separation {scene.separation}")

    lo = 0.0
    if gap(lo) > 0.0:
        # Canonical poses already separated: find the closest-approach offset
        # by ternary search (the gap is convex in the offset).
        a, b = -hi, hi
        for _ in range(200):
            m1 = a + (b - a) / 3.0
            m2 = b - (b - a) / 3.0
            if gap(m1) <= gap(m2):
                b = m2
            else:
                a = m1
        lo = 0.5 * (a + b)
        if gap(lo) > 0.0:
            raise PlacementFailure(
                f"pair {pair} cannot reach separation {scene.separation} along {scene.axis.value}"
            )

    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    if abs(gap(hi)) > PLACEMENT_TOLERANCE:
        raise PlacementFailure(f"bisection did not converge for pair {pair}")

    moved = _translated_along(mover, axis, hi)
    velocity = Vector2(1.0, 0.0) if axis is MovementAxis.X else Vector2(0.0, 1.0)
    return moved, static, velocity


@dataclass(frozen=True)
class TimingRecord:
    """One (pair, algorithm) measurement."""

    pair: tuple[str, str]
    algorithm: str
    median_ns: float
    counters: TestCounters
    distance: float | None
    flags: tuple[str, ...] = ()

    @property
    def failed(self) -> bool:
        return any(f.startswith("error:") for f in self.flags)


def _run_algorithm(
    algorithm: str, moving: Triangle, static: Triangle, velocity: Vector2
) -> DistanceResult:
    if algorithm == "dyop":
        return dyop_distance(moving, static, velocity)
    if algorithm == "gjk":
        return gjk_distance(moving, static)
    if algorithm == "lincanny":
        return lin_canny_distance(moving, static)[0]
    if algorithm == "oracle":
        return brute_force_triangle_distance(moving, static)
    raise ValueError(f"unknown algorithm: {algorithm}")


def run_benchmark(
    scene: Scene,
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS,
    repeats: int = 1000,
) -> list[TimingRecord]:
    """Time every algorithm on every ordered pair of the scene.

    Per (pair, algorithm): one untimed warm-up, then ``repeats`` timed
    runs on the monotonic clock, keeping the median. Distances and
    counters are deterministic; a record whose distance strays more than
    MISMATCH_TOLERANCE from the exact value is flagged "mismatch", and
    algorithm errors produce a record flagged "error:<kind>" instead of
    aborting the run.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1: {repeats}")
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm: {algorithm}")

    plan = enumerate_pairs(len(scene.objects))
    records: list[TimingRecord] = []
    for i, j in plan.pairs:
        moving, static, velocity = place_pair(scene, (i, j))
        reference = brute_force_triangle_distance(moving, static).distance
        names = (scene.objects[i].name or "", scene.objects[j].name or "")
        for algorithm in algorithms:
            begin = time.perf_counter_ns()
            try:
                result = _run_algorithm(algorithm, moving, static, velocity)
            except (DegenerateInput, Penetrating, ZeroVelocity) as exc:
                elapsed = max(time.perf_counter_ns() - begin, 1)
                records.append(
                    TimingRecord(
                        names,
                        algorithm,
                        float(elapsed),
                        TestCounters(),
                        None,
                        (f"error:{type(exc).__name__}",),
                    )
                )
                continue
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter_ns()
                result = _run_algorithm(algorithm, moving, static, velocity)
                times.append(time.perf_counter_ns() - t0)
            flags = result.flags
            if abs(result.distance - reference) > MISMATCH_TOLERANCE:
                flags = flags + ("mismatch",)
            records.append(
                TimingRecord(
                    names,
                    algorithm,
                    float(statistics.median(times)),
                    result.counters,
                    result.distance,
                    flags,
                )
            )
    return records


def write_records_csv(records: list[TimingRecord], path: str) -> None:
    """One row per record; see CSV_COLUMNS for the stable column set."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.pair[0],
                    r.pair[1],
                    r.algorithm,
                    repr(r.median_ns),
                    r.counters.vv_tests,
                    r.counters.ve_tests,
                    r.counters.ee_tests,
                    "" if r.distance is None else repr(r.distance),
                    ";".join(r.flags),
                ]
            )


def percentage_diff(t_baseline: float, t_dyop: float) -> float:
    """Baseline time as a percentage of the pruned algorithm's time."""
    if not (t_baseline > 0.0 and t_dyop > 0.0):
        raise ValueError("times must be positive")
    return t_baseline / t_dyop * 100.0


@dataclass(frozen=True)
class PairTiming:
    pair: tuple[str, str]
    dyop_ns: float
    baseline_ns: dict[str, float]
    pct: dict[str, float]
    delta_pct: dict[str, float]


@dataclass(frozen=True)
class BaselineSummary:
    max_pct: float
    min_pct: float
    mean_pct: float


@dataclass(frozen=True)
class ComparisonReport:
    """Per-pair percentage ratios of each baseline against the pruned
    algorithm, with max/min/mean summaries, counter totals, and both the
    ratio (pct) and difference (delta_pct = pct - 100) readings."""

    pairs: tuple[PairTiming, ...]
    summary: dict[str, BaselineSummary]
    counter_totals: dict[str, dict[str, int]]
    counter_pct: dict[str, float]
    mismatches: int
    failed: int

    def to_dict(self) -> dict:
        return {
            "pairs": [
                {
                    "pair_a": p.pair[0],
                    "pair_b": p.pair[1],
                    "dyop_ns": p.dyop_ns,
                    "baseline_ns": p.baseline_ns,
                    "pct": p.pct,
                    "delta_pct": p.delta_pct,
                }
                for p in self.pairs
            ],
            "summary": {
                name: {
                    "max_pct": s.max_pct,
                    "min_pct": s.min_pct,
                    "mean_pct": s.mean_pct,
                }
                for name, s in self.summary.items()
            },
            "counter_totals": self.counter_totals,
            "counter_pct": self.counter_pct,
            "mismatches": self.mismatches,
            "failed": self.failed,
        }

    @staticmethod
    def from_dict(doc: dict) -> "ComparisonReport":
        return ComparisonReport(
            pairs=tuple(
                PairTiming(
                    pair=(p["pair_a"], p["pair_b"]),
                    dyop_ns=p["dyop_ns"],
                    baseline_ns=dict(p["baseline_ns"]),
                    pct=dict(p["pct"]),
                    delta_pct=dict(p["delta_pct"]),
                )
                for p in doc["pairs"]
            ),
            summary={
                name: BaselineSummary(s["max_pct"], s["min_pct"], s["mean_pct"])
                for name, s in doc["summary"].items()
            },
            counter_totals={k: dict(v) for k, v in doc["counter_totals"].items()},
            counter_pct=dict(doc["counter_pct"]),
            mismatches=doc["mismatches"],
            failed=doc["failed"],
        )


def build_report(records: list[TimingRecord]) -> ComparisonReport:
    """Aggregate timing records into the baseline-vs-pruned comparison.

    Requires a successful pruned-algorithm record for every pair and at
    least one baseline algorithm; raises IncompleteRecords otherwise.
    Failed records are counted but excluded from percentages.
    """
    by_pair: dict[tuple[str, str], dict[str, TimingRecord]] = {}
    order: list[tuple[str, str]] = []
    for r in records:
        if r.pair not in by_pair:
            by_pair[r.pair] = {}
            order.append(r.pair)
        by_pair[r.pair][r.algorithm] = r

    baselines = sorted(
        {r.algorithm for r in records if r.algorithm != "dyop"}
    )
    if not baselines:
        raise IncompleteRecords("a baseline algorithm is required for comparison")
    for pair in order:
        rec = by_pair[pair].get("dyop")
        if rec is None or rec.failed:
            raise IncompleteRecords(f"missing dyop record for pair {pair}")

    pairs: list[PairTiming] = []
    pct_by_baseline: dict[str, list[float]] = {b: [] for b in baselines}
    for pair in order:
        group = by_pair[pair]
        dyop_rec = group["dyop"]
        baseline_ns: dict[str, float] = {}
        pct: dict[str, float] = {}
        delta: dict[str, float] = {}
        for b in baselines:
            rec = group.get(b)
            if rec is None or rec.failed:
                continue
            baseline_ns[b] = rec.median_ns
            ratio = percentage_diff(rec.median_ns, dyop_rec.median_ns)
            pct[b] = ratio
            delta[b] = ratio - 100.0
            pct_by_baseline[b].append(ratio)
        pairs.append(PairTiming(pair, dyop_rec.median_ns, baseline_ns, pct, delta))

    summary = {
        b: BaselineSummary(max(vals), min(vals), statistics.fmean(vals))
        for b, vals in pct_by_baseline.items()
        if vals
    }
    if not summary:
        raise IncompleteRecords("no successful baseline records to compare")

    counter_totals: dict[str, dict[str, int]] = {}
    for r in records:
        if r.failed:
            continue
        tot = counter_totals.setdefault(
            r.algorithm, {"vv_tests": 0, "ve_tests": 0, "ee_tests": 0, "total": 0}
        )
        tot["vv_tests"] += r.counters.vv_tests
        tot["ve_tests"] += r.counters.ve_tests
        tot["ee_tests"] += r.counters.ee_tests
        tot["total"] += r.counters.total()

    counter_pct: dict[str, float] = {}
    dyop_total = counter_totals.get("dyop", {}).get("total", 0)
    if dyop_total > 0:
        for b in baselines:
            b_total = counter_totals.get(b, {}).get("total", 0)
            if b_total > 0:
                counter_pct[b] = b_total / dyop_total * 100.0

    mismatches = sum(1 for r in records if "mismatch" in r.flags)
    failed = sum(1 for r in records if r.failed)
    return ComparisonReport(
        pairs=tuple(pairs),
        summary=summary,
        counter_totals=counter_totals,
        counter_pct=counter_pct,
        mismatches=mismatches,
        failed=failed,
    )
