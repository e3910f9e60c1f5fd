"""Comparison algorithms: GJK distance and a planar Lin-Canny feature walk.

Both are specialized to 2D triangles and fill the same counters as the
other algorithms so benchmark cost comparisons stay portable. For GJK
the counters record simplex solves by size (vv = point, ve = segment,
ee = triangle); for the feature walk they record the actual feature-pair
distance evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, Penetrating, ZeroDirection
from .geometry import (
    DistanceResult,
    FeatureId,
    FeatureKind,
    Point2,
    TestCounters,
    Triangle,
    Vector2,
    edge_feature,
    edge_index_joining,
    point_segment_distance,
    segment_segment_distance,
    triangles_overlap,
    vertex_feature,
)

GJK_MAX_ITERATIONS = 64
GJK_IMPROVEMENT_TOL = 1e-12
_VORONOI_EPS = 1e-12


def support(tri: Triangle, direction: Vector2) -> tuple[int, Point2]:
    """The vertex maximizing the dot product with direction; ties to lower index."""
    if direction.dx == 0.0 and direction.dy == 0.0:
        raise ZeroDirection("support direction must be non-zero")
    best_i = 0
    best = tri.v0.x * direction.dx + tri.v0.y * direction.dy
    for i in (1, 2):
        v = tri.vertex(i)
        d = v.x * direction.dx + v.y * direction.dy
        if d > best:
            best_i, best = i, d
    return best_i, tri.vertex(best_i)


@dataclass(frozen=True)
class SupportPoint:
    """A difference-space point with the source vertices that produced it."""

    point: Point2
    index_a: int
    index_b: int


@dataclass
class Simplex:
    """1 to 3 difference-space points, no duplicates."""

    points: list[SupportPoint]

    def __post_init__(self) -> None:
        if not 1 <= len(self.points) <= 3:
            raise ValueError(f"simplex size out of range: {len(self.points)}")
        keys = {(sp.index_a, sp.index_b) for sp in self.points}
        if len(keys) != len(self.points):
            raise ValueError("duplicate simplex points")

    def contains_sources(self, sp: SupportPoint) -> bool:
        return any(
            p.index_a == sp.index_a and p.index_b == sp.index_b for p in self.points
        )


def _minkowski_support(tA: Triangle, tB: Triangle, dx: float, dy: float) -> SupportPoint:
    ia, va = support(tA, Vector2(dx, dy))
    ib, vb = support(tB, Vector2(-dx, -dy))
    return SupportPoint(Point2(va.x - vb.x, va.y - vb.y), ia, ib)


_LambdaList = list[tuple[SupportPoint, float]]


def _closest_on_segment(a: SupportPoint, b: SupportPoint) -> tuple[float, float, _LambdaList, bool]:
    ax, ay = a.point.x, a.point.y
    abx, aby = b.point.x - ax, b.point.y - ay
    ab2 = abx * abx + aby * aby
    if ab2 == 0.0:
        return ax, ay, [(a, 1.0)], False
    t = -(ax * abx + ay * aby) / ab2
    if t <= 0.0:
        return ax, ay, [(a, 1.0)], False
    if t >= 1.0:
        return b.point.x, b.point.y, [(b, 1.0)], False
    return ax + t * abx, ay + t * aby, [(a, 1.0 - t), (b, t)], False


def _closest_on_triangle(
    a: SupportPoint, b: SupportPoint, c: SupportPoint
) -> tuple[float, float, _LambdaList, bool]:
    """Closest point of the simplex triangle to the origin, by Voronoi regions."""
    ax, ay = a.point.x, a.point.y
    bx, by = b.point.x, b.point.y
    cx, cy = c.point.x, c.point.y
    abx, aby = bx - ax, by - ay
    acx, acy = cx - ax, cy - ay

    d1 = -(abx * ax + aby * ay)
    d2 = -(acx * ax + acy * ay)
    if d1 <= 0.0 and d2 <= 0.0:
        return ax, ay, [(a, 1.0)], False

    d3 = -(abx * bx + aby * by)
    d4 = -(acx * bx + acy * by)
    if d3 >= 0.0 and d4 <= d3:
        return bx, by, [(b, 1.0)], False

    vc = d1 * d4 - d3 * d2
    if vc <= 0.0 and d1 >= 0.0 and d3 <= 0.0 and d1 != d3:
        t = d1 / (d1 - d3)
        return ax + t * abx, ay + t * aby, [(a, 1.0 - t), (b, t)], False

    d5 = -(abx * cx + aby * cy)
    d6 = -(acx * cx + acy * cy)
    if d6 >= 0.0 and d5 <= d6:
        return cx, cy, [(c, 1.0)], False

    vb = d5 * d2 - d1 * d6
    if vb <= 0.0 and d2 >= 0.0 and d6 <= 0.0 and d2 != d6:
        t = d2 / (d2 - d6)
        return ax + t * acx, ay + t * acy, [(a, 1.0 - t), (c, t)], False

    va = d3 * d6 - d5 * d4
    if va <= 0.0 and d4 - d3 >= 0.0 and d5 - d6 >= 0.0 and (d4 - d3) + (d5 - d6) > 0.0:
        t = (d4 - d3) / ((d4 - d3) + (d5 - d6))
        return bx + t * (cx - bx), by + t * (cy - by), [(b, 1.0 - t), (c, t)], False

    denom = va + vb + vc
    if denom <= 0.0:
        # Flat simplex: fall back to the best edge.
        candidates = (
            _closest_on_segment(a, b),
            _closest_on_segment(a, c),
            _closest_on_segment(b, c),
        )
        return min(candidates, key=lambda r: r[0] * r[0] + r[1] * r[1])
    v = vb / denom
    w = vc / denom
    u = 1.0 - v - w
    return 0.0, 0.0, [(a, u), (b, v), (c, w)], True


def _solve_simplex(simplex: Simplex, counters: TestCounters) -> tuple[float, float, _LambdaList, bool]:
    pts = simplex.points
    if len(pts) == 1:
        counters.vv_tests += 1
        return pts[0].point.x, pts[0].point.y, [(pts[0], 1.0)], False
    if len(pts) == 2:
        counters.ve_tests += 1
        return _closest_on_segment(pts[0], pts[1])
    counters.ee_tests += 1
    return _closest_on_triangle(pts[0], pts[1], pts[2])


def _side_feature(lambdas: _LambdaList, side: str) -> FeatureId:
    weights: dict[int, float] = {}
    for sp, lam in lambdas:
        idx = sp.index_a if side == "a" else sp.index_b
        weights[idx] = weights.get(idx, 0.0) + lam
    active = sorted(i for i, w in weights.items() if w > 1e-12)
    if not active:
        active = [min(weights)]
    if len(active) == 1:
        return vertex_feature(active[0])
    if len(active) == 2:
        return edge_feature(edge_index_joining(active[0], active[1]))
    # All three vertices active: an interior contact; report the heaviest vertex.
    heaviest = max(active, key=lambda i: (weights[i], -i))
    return vertex_feature(heaviest)


def gjk_distance(tA: Triangle, tB: Triangle) -> DistanceResult:
    """Distance between convex triangles via support functions.

    Iterates on the difference space of the two shapes, keeping a 1-3
    point simplex of support points. Terminates when the squared-length
    improvement bound drops below GJK_IMPROVEMENT_TOL, when a support
    point repeats, or after GJK_MAX_ITERATIONS (then flagged
    "gjk-unconverged" and the best simplex so far is reported).
    Intersecting triangles return distance 0 with coincident witnesses.
    """
    if tA.is_degenerate or tB.is_degenerate:
        raise DegenerateInput("gjk requires non-degenerate triangles")

    counters = TestCounters()
    ca, cb = tA.centroid(), tB.centroid()
    dx, dy = ca.x - cb.x, ca.y - cb.y
    if dx == 0.0 and dy == 0.0:
        dx = 1.0
    start = _minkowski_support(tA, tB, dx, dy)
    simplex = Simplex([start])

    lambdas: _LambdaList = [(start, 1.0)]
    intersecting = False
    converged = False
    for _ in range(GJK_MAX_ITERATIONS):
        vx, vy, lambdas, inside = _solve_simplex(simplex, counters)
        simplex = Simplex([sp for sp, _ in lambdas])
        if inside:
            intersecting = True
            converged = True
            break
        v2 = vx * vx + vy * vy
        if v2 <= 1e-24:
            intersecting = True
            converged = True
            break
        w = _minkowski_support(tA, tB, -vx, -vy)
        if simplex.contains_sources(w):
            converged = True
            break
        if v2 - (vx * w.point.x + vy * w.point.y) < GJK_IMPROVEMENT_TOL:
            converged = True
            break
        simplex = Simplex(simplex.points + [w])

    pax = sum(lam * tA.vertex(sp.index_a).x for sp, lam in lambdas)
    pay = sum(lam * tA.vertex(sp.index_a).y for sp, lam in lambdas)
    pbx = sum(lam * tB.vertex(sp.index_b).x for sp, lam in lambdas)
    pby = sum(lam * tB.vertex(sp.index_b).y for sp, lam in lambdas)
    if intersecting:
        point_a = point_b = Point2(pax, pay)
        distance = 0.0
    else:
        point_a = Point2(pax, pay)
        point_b = Point2(pbx, pby)
        distance = math.hypot(pax - pbx, pay - pby)
    flags = () if converged else ("gjk-unconverged",)
    return DistanceResult(
        distance,
        point_a,
        point_b,
        _side_feature(lambdas, "a"),
        _side_feature(lambdas, "b"),
        counters,
        flags,
    )


@dataclass(frozen=True)
class FeaturePair:
    """A witness feature pair, reusable as the seed for the next query."""

    feature_a: FeatureId
    feature_b: FeatureId


def _feature_distance(
    tA: Triangle, fa: FeatureId, tB: Triangle, fb: FeatureId, counters: TestCounters
) -> tuple[float, Point2, Point2]:
    a_vertex = fa.kind is FeatureKind.VERTEX
    b_vertex = fb.kind is FeatureKind.VERTEX
    if a_vertex and b_vertex:
        va, vb = tA.vertex(fa.index), tB.vertex(fb.index)
        counters.vv_tests += 1
        return math.hypot(va.x - vb.x, va.y - vb.y), va, vb
    if a_vertex:
        va = tA.vertex(fa.index)
        counters.ve_tests += 1
        d, closest = point_segment_distance(va, tB.edge(fb.index))
        return d, va, closest
    if b_vertex:
        vb = tB.vertex(fb.index)
        counters.ve_tests += 1
        d, closest = point_segment_distance(vb, tA.edge(fa.index))
        return d, closest, vb
    counters.ee_tests += 1
    return segment_segment_distance(tA.edge(fa.index), tB.edge(fb.index))


def _voronoi_escape(tri: Triangle, feature: FeatureId, p: Point2) -> FeatureId | None:
    """None when p lies in the feature's outer Voronoi region, else the feature to move to."""
    if feature.kind is FeatureKind.VERTEX:
        i = feature.index
        v = tri.vertex(i)
        nxt = tri.vertex((i + 1) % 3)
        prv = tri.vertex((i + 2) % 3)
        if (p.x - v.x) * (nxt.x - v.x) + (p.y - v.y) * (nxt.y - v.y) > _VORONOI_EPS:
            return edge_feature(i)
        if (p.x - v.x) * (prv.x - v.x) + (p.y - v.y) * (prv.y - v.y) > _VORONOI_EPS:
            return edge_feature((i + 2) % 3)
        return None

    i = feature.index
    a = tri.vertex(i)
    b = tri.vertex((i + 1) % 3)
    ux, uy = b.x - a.x, b.y - a.y
    t = (p.x - a.x) * ux + (p.y - a.y) * uy
    if t < -_VORONOI_EPS:
        return vertex_feature(i)
    if t > ux * ux + uy * uy + _VORONOI_EPS:
        return vertex_feature((i + 1) % 3)
    # CCW winding puts the outward normal at (uy, -ux); a point behind the
    # edge cannot have it as closest feature, so step to the nearer endpoint.
    if (p.x - a.x) * uy - (p.y - a.y) * ux < -_VORONOI_EPS:
        da = math.hypot(p.x - a.x, p.y - a.y)
        db = math.hypot(p.x - b.x, p.y - b.y)
        return vertex_feature(i) if da <= db else vertex_feature((i + 1) % 3)
    return None


_ALL_FEATURES = tuple(
    [FeatureId(FeatureKind.VERTEX, i) for i in range(3)]
    + [FeatureId(FeatureKind.EDGE, i) for i in range(3)]
)


def _exhaustive_pair(
    tA: Triangle, tB: Triangle, counters: TestCounters
) -> tuple[float, Point2, Point2, FeatureId, FeatureId]:
    best: tuple[float, Point2, Point2, FeatureId, FeatureId] | None = None
    for fa in _ALL_FEATURES:
        for fb in _ALL_FEATURES:
            d, pa, pb = _feature_distance(tA, fa, tB, fb, counters)
            if best is None or d < best[0]:
                best = (d, pa, pb, fa, fb)
    assert best is not None
    return best


def _walk_features(
    tA: Triangle,
    tB: Triangle,
    fa: FeatureId,
    fb: FeatureId,
    counters: TestCounters,
    trace: list[tuple[FeatureId, FeatureId, float]] | None = None,
) -> tuple[float, Point2, Point2, FeatureId, FeatureId]:
    """Walk neighboring feature pairs until both Voronoi conditions hold.

    A pair whose witnesses each lie in the other feature's outer Voronoi
    region realizes the global minimum (mutual projections of convex
    shapes). Revisiting a pair or failing to strictly decrease the
    distance aborts the walk into an exhaustive sweep of all 36 feature
    pairs, so floating-point oscillation can never produce a wrong
    answer or an endless loop.
    """
    visited: set[tuple[FeatureId, FeatureId]] = set()
    prev = math.inf
    while True:
        key = (fa, fb)
        if key in visited:
            return _exhaustive_pair(tA, tB, counters)
        visited.add(key)
        d, pa, pb = _feature_distance(tA, fa, tB, fb, counters)
        if trace is not None:
            trace.append((fa, fb, d))
        if d >= prev:
            return _exhaustive_pair(tA, tB, counters)
        prev = d
        step_a = _voronoi_escape(tA, fa, pb)
        if step_a is not None:
            fa = step_a
            continue
        step_b = _voronoi_escape(tB, fb, pa)
        if step_b is not None:
            fb = step_b
            continue
        return d, pa, pb, fa, fb


def lin_canny_distance(
    tA: Triangle, tB: Triangle, seed: FeaturePair | None = None
) -> tuple[DistanceResult, FeaturePair]:
    """Closest features of two disjoint triangles by Voronoi walking.

    Returns the distance result and the witness pair; passing that pair
    back as ``seed`` on temporally coherent queries lets the walk
    terminate in a single verification step. Overlapping or touching
    triangles raise Penetrating.
    """
    if tA.is_degenerate or tB.is_degenerate:
        raise DegenerateInput("feature walk requires non-degenerate triangles")
    if triangles_overlap(tA, tB):
        raise Penetrating("triangles overlap; the feature walk handles disjoint shapes only")

    counters = TestCounters()
    if seed is not None:
        fa, fb = seed.feature_a, seed.feature_b
    else:
        fa, fb = vertex_feature(0), vertex_feature(0)
    d, pa, pb, fa, fb = _walk_features(tA, tB, fa, fb, counters)
    result = DistanceResult(d, pa, pb, fa, fb, counters)
    return result, FeaturePair(fa, fb)
