"""Randomized cross-check of the pruned distance against the exact oracle.

The pruned algorithm minimizes over a subset of the oracle's feature
pairs, so it can overestimate but never underestimate. This sweep
generates seeded random axis-separated pairs and measures both the
mismatch rate (overestimates beyond tolerance) and the count of
conservative-bound violations, which must be zero on a correct build.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .dyop import MovementAxis, dyop_distance
from .geometry import (
    DEGENERATE_AREA,
    Point2,
    Triangle,
    Vector2,
    aabb_of_triangle,
    brute_force_triangle_distance,
)

CONSERVATIVE_SLACK = 1e-12
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class VerifyReport:
    trials: int
    mismatches: int
    max_overestimate: float
    conservative_violations: int
    tolerance: float

    @property
    def mismatch_rate(self) -> float:
        return self.mismatches / self.trials


def random_triangle(rng: random.Random) -> Triangle:
    """A non-degenerate triangle with vertices uniform in the unit box."""
    while True:
        tri = Triangle(
            Point2(rng.random(), rng.random()),
            Point2(rng.random(), rng.random()),
            Point2(rng.random(), rng.random()),
        )
        if abs(tri.signed_area) > DEGENERATE_AREA:
            return tri


def _diameter(tri: Triangle) -> float:
    vs = tri.vertices
    return max(
        math.hypot(vs[i].x - vs[j].x, vs[i].y - vs[j].y)
        for i in range(3)
        for j in range(i + 1, 3)
    )


def random_separated_pair(
    rng: random.Random,
) -> tuple[Triangle, Triangle, Vector2]:
    """Two disjoint triangles with boxes strictly separated along an axis.

    The second triangle is pushed along a random axis by at least its
    own diameter; samples whose boxes still overlap on that axis are
    rejected and redrawn.
    """
    first = random_triangle(rng)
    while True:
        second = random_triangle(rng)
        axis = MovementAxis.X if rng.random() < 0.5 else MovementAxis.Y
        offset = _diameter(second) + rng.uniform(0.0, 2.0)
        if axis is MovementAxis.X:
            second = second.translated(offset, 0.0)
        else:
            second = second.translated(0.0, offset)
        box_a = aabb_of_triangle(first)
        box_b = aabb_of_triangle(second)
        if axis is MovementAxis.X:
            separated = box_b.min.x > box_a.max.x
        else:
            separated = box_b.min.y > box_a.max.y
        if separated:
            velocity = (
                Vector2(1.0, 0.0) if axis is MovementAxis.X else Vector2(0.0, 1.0)
            )
            return first, second, velocity


def run_verify(trials: int, seed: int, tolerance: float = DEFAULT_TOLERANCE) -> VerifyReport:
    """Compare the pruned distance to the oracle on ``trials`` random pairs."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1: {trials}")
    rng = random.Random(seed)
    mismatches = 0
    violations = 0
    max_over = 0.0
    for _ in range(trials):
        first, second, velocity = random_separated_pair(rng)
        exact = brute_force_triangle_distance(first, second).distance
        pruned = dyop_distance(first, second, velocity).distance
        if pruned < exact - CONSERVATIVE_SLACK:
            violations += 1
        over = pruned - exact
        if over > max_over:
            max_over = over
        if abs(pruned - exact) > tolerance:
            mismatches += 1
    return VerifyReport(
        trials=trials,
        mismatches=mismatches,
        max_overestimate=max_over,
        conservative_violations=violations,
        tolerance=tolerance,
    )
