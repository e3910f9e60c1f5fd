"""Pivot-point pruned triangle distance.

For two triangles separated along a movement axis, the space between
their facing extremes bounds an inner gap box. Its midpoint — the
dynamic origin point — serves as a reference: only the two vertices of
each triangle nearest to it (and the edge joining them) are kept as
candidates, cutting the nine vertex-vertex tests of the exhaustive
sweep down to four, plus four vertex-edge tests and one edge-edge test.

The pruned minimum can only overestimate: every candidate evaluation
measures two subsets of the triangle boundaries, so the result is never
below the exact separation distance. Whether it matches exactly depends
on the winning features being inside the candidate sets; the verify
sweep measures the observed mismatch rate empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateInput, ZeroVelocity
from .geometry import (
    Aabb,
    DistanceResult,
    FeatureId,
    Point2,
    TestCounters,
    Triangle,
    Vector2,
    _classify_edge_point,
    _point_segment_param,
    _segment_segment_params,
    edge_index_joining,
    vertex_feature,
)


class MovementAxis(Enum):
    X = "x"
    Y = "y"

    @property
    def perpendicular(self) -> MovementAxis:
        return MovementAxis.Y if self is MovementAxis.X else MovementAxis.X


@dataclass(frozen=True)
class InternalAabb:
    """The gap box between two facing triangles.

    ``leading``/``higher`` are argument positions (0 = first triangle,
    1 = second). ``degenerate_gap`` is set when the facing extremes
    overlap along the movement axis, i.e. the triangles' extents are not
    disjoint there and the pruning premise does not hold.
    """

    box: Aabb
    leading: int
    higher: int
    degenerate_gap: bool


@dataclass(frozen=True)
class DyopPoint:
    """The dynamic origin point: the midpoint of the internal gap box."""

    point: Point2


@dataclass(frozen=True)
class CandidateSet:
    """The features retained per triangle: two vertices and the edge joining them."""

    verts_a: tuple[int, int]
    verts_b: tuple[int, int]
    edge_a: int
    edge_b: int

    def __post_init__(self) -> None:
        for pair, edge in ((self.verts_a, self.edge_a), (self.verts_b, self.edge_b)):
            if pair[0] == pair[1]:
                raise ValueError(f"candidate vertices must be distinct: {pair}")
            if edge_index_joining(pair[0], pair[1]) != edge:
                raise ValueError(f"edge {edge} does not join vertices {pair}")


def dominant_axis(relative_velocity: Vector2) -> MovementAxis:
    """The axis the movement is mostly along; ties go to X."""
    if relative_velocity.dx == 0.0 and relative_velocity.dy == 0.0:
        raise ZeroVelocity("zero relative velocity: supply a separation axis explicitly")
    if abs(relative_velocity.dx) >= abs(relative_velocity.dy):
        return MovementAxis.X
    return MovementAxis.Y


def _coord(p: Point2, axis: MovementAxis) -> float:
    return p.x if axis is MovementAxis.X else p.y


def _extent(tri: Triangle, axis: MovementAxis) -> tuple[float, float]:
    cs = [_coord(v, axis) for v in tri.vertices]
    return min(cs), max(cs)


def _extreme_index(tri: Triangle, axis: MovementAxis, maximize: bool) -> int:
    """Index of the extremal vertex on the axis; ties keep the lower index."""
    best_i = 0
    best = _coord(tri.v0, axis)
    for i in (1, 2):
        c = _coord(tri.vertex(i), axis)
        if (c > best) if maximize else (c < best):
            best_i, best = i, c
    return best_i


def _foremost(tA: Triangle, tB: Triangle, axis: MovementAxis) -> int:
    """Which argument (0 or 1) sits ahead on the axis.

    Greater extent maximum wins, ties fall to the greater minimum, and a
    full tie returns 1; fully tied extents always clamp to the same
    midpoint downstream, so the choice cannot change any result.
    """
    lo_a, hi_a = _extent(tA, axis)
    lo_b, hi_b = _extent(tB, axis)
    if hi_a != hi_b:
        return 0 if hi_a > hi_b else 1
    if lo_a != lo_b:
        return 0 if lo_a > lo_b else 1
    return 1


def nearest_facing_vertices(
    tA: Triangle, tB: Triangle, axis: MovementAxis
) -> tuple[int, int]:
    """The vertex of each triangle on its side of the gap.

    The trailing triangle contributes its maximal vertex on the axis,
    the leading one its minimal vertex; ties keep the lower index.
    """
    if _foremost(tA, tB, axis) == 1:
        return (
            _extreme_index(tA, axis, maximize=True),
            _extreme_index(tB, axis, maximize=False),
        )
    return (
        _extreme_index(tA, axis, maximize=False),
        _extreme_index(tB, axis, maximize=True),
    )


def build_internal_aabb(tA: Triangle, tB: Triangle, axis: MovementAxis) -> InternalAabb:
    """Construct the gap box between two facing triangles.

    Along the movement axis the box spans from the trailing triangle's
    facing extreme to the leading triangle's; on the perpendicular axis
    it spans from the lower triangle's maximum to the higher triangle's
    minimum. An inverted interval (extents overlapping on that axis)
    clamps to its midpoint with zero width; on the movement axis that
    also sets ``degenerate_gap``, since the construction's premise of an
    actual gap is then violated.
    """
    if tA.is_degenerate or tB.is_degenerate:
        raise DegenerateInput("internal box requires non-degenerate triangles")

    lead = _foremost(tA, tB, axis)
    idx_a, idx_b = nearest_facing_vertices(tA, tB, axis)
    coord_a = _coord(tA.vertex(idx_a), axis)
    coord_b = _coord(tB.vertex(idx_b), axis)
    lo, hi = (coord_a, coord_b) if lead == 1 else (coord_b, coord_a)
    degenerate_gap = lo > hi
    if degenerate_gap:
        lo = hi = 0.5 * (lo + hi)

    perp = axis.perpendicular
    high = _foremost(tA, tB, perp)
    higher_tri = (tA, tB)[high]
    lower_tri = (tA, tB)[1 - high]
    p_lo = _extent(lower_tri, perp)[1]
    p_hi = _extent(higher_tri, perp)[0]
    if p_lo > p_hi:
        p_lo = p_hi = 0.5 * (p_lo + p_hi)

    if axis is MovementAxis.X:
        box = Aabb(Point2(lo, p_lo), Point2(hi, p_hi))
    else:
        box = Aabb(Point2(p_lo, lo), Point2(p_hi, hi))
    return InternalAabb(box=box, leading=lead, higher=high, degenerate_gap=degenerate_gap)


def compute_dyop(iaabb: InternalAabb) -> DyopPoint:
    """Midpoint of the internal box, componentwise."""
    box = iaabb.box
    return DyopPoint(
        Point2(0.5 * (box.min.x + box.max.x), 0.5 * (box.min.y + box.max.y))
    )


def select_candidates(tri: Triangle, dyop: DyopPoint) -> tuple[tuple[int, int], int]:
    """The two vertices nearest the pivot and the edge joining them.

    Ties resolve to the lower vertex index. Any two distinct vertices of
    a triangle are joined by exactly one edge, so the candidate edge is
    always well defined.
    """
    p = dyop.point
    ranked = sorted(
        range(3),
        key=lambda i: (
            (tri.vertex(i).x - p.x) ** 2 + (tri.vertex(i).y - p.y) ** 2,
            i,
        ),
    )
    pair = (ranked[0], ranked[1])
    return pair, edge_index_joining(pair[0], pair[1])


def dyop_distance(
    tA: Triangle, tB: Triangle, relative_velocity: Vector2
) -> DistanceResult:
    """Pruned shortest distance between two triangles.

    Runs the full pipeline: movement axis, facing vertices, internal gap
    box, pivot point, candidate selection, then exactly four
    vertex-vertex, four vertex-edge, and one edge-edge evaluation over
    the candidates. The result is never below the exact separation
    distance; it equals it whenever the true witness features survive
    pruning. A "overlapping-boxes" flag marks queries whose extents were
    not disjoint along the movement axis.
    """
    axis = dominant_axis(relative_velocity)
    if tA.is_degenerate or tB.is_degenerate:
        raise DegenerateInput("pruned distance requires non-degenerate triangles")

    iaabb = build_internal_aabb(tA, tB, axis)
    pivot = compute_dyop(iaabb)
    verts_a, edge_a = select_candidates(tA, pivot)
    verts_b, edge_b = select_candidates(tB, pivot)
    cand = CandidateSet(verts_a, verts_b, edge_a, edge_b)

    counters = TestCounters()
    best: tuple[float, Point2, Point2, FeatureId, FeatureId] | None = None

    def consider(d: float, pa: Point2, pb: Point2, fa: FeatureId, fb: FeatureId) -> None:
        nonlocal best
        if (
            best is None
            or d < best[0]
            or (d == best[0] and (fa.index, fb.index) < (best[3].index, best[4].index))
        ):
            best = (d, pa, pb, fa, fb)

    ea = tA.edge(cand.edge_a)
    eb = tB.edge(cand.edge_b)
    for i in cand.verts_a:
        va = tA.vertex(i)
        for j in cand.verts_b:
            vb = tB.vertex(j)
            counters.vv_tests += 1
            d = math.hypot(va.x - vb.x, va.y - vb.y)
            consider(d, va, vb, vertex_feature(i), vertex_feature(j))
    for i in cand.verts_a:
        va = tA.vertex(i)
        d, closest, t = _point_segment_param(va, eb)
        counters.ve_tests += 1
        consider(d, va, closest, vertex_feature(i), _classify_edge_point(cand.edge_b, t))
    for j in cand.verts_b:
        vb = tB.vertex(j)
        d, closest, t = _point_segment_param(vb, ea)
        counters.ve_tests += 1
        consider(d, closest, vb, _classify_edge_point(cand.edge_a, t), vertex_feature(j))
    d, pa, pb, t1, t2 = _segment_segment_params(ea, eb)
    counters.ee_tests += 1
    consider(
        d,
        pa,
        pb,
        _classify_edge_point(cand.edge_a, t1),
        _classify_edge_point(cand.edge_b, t2),
    )

    assert best is not None
    flags = ("overlapping-boxes",) if iaabb.degenerate_gap else ()
    return DistanceResult(best[0], best[1], best[2], best[3], best[4], counters, flags)
