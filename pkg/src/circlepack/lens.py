"""Chain between two equal touching circles and their common tangent line.

Frame: the tangent line is the x-axis and the two circles of radius R are
centred at (-R, R) and (R, R).  The chain climbs the symmetry axis x = 0
from the line towards the point where the two circles touch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import soddy
from .errors import InvalidInput
from .geometry import (
    Branch,
    Line,
    PlacedCircle,
    Tangency,
    VerificationReport,
    line_tangency_residual,
    place_tangent_circle,
    tangency_residual,
)
from .model import ArcShape, PackedCircle, PackingSequence, SegmentShape
from .verify import chain_overlap_checks


@dataclass(frozen=True)
class LensSpec:
    radius: float
    count: int

    def __post_init__(self):
        _check_radius(self.radius)
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise InvalidInput(f"count must be a positive integer, got {self.count!r}", "count")


def _check_radius(R: float) -> float:
    R = float(R)
    if not (math.isfinite(R) and R > 0.0):
        raise InvalidInput(f"radius must be a positive finite length, got {R!r}", "radius")
    return R


def closed_form(n: int, R: float) -> float:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}", "n")
    return _check_radius(R) / (2 * n * (n + 1))


def denominator(n: int) -> int:
    return 2 * n * (n + 1)


def big_circles(R: float) -> tuple[PlacedCircle, PlacedCircle]:
    return PlacedCircle(-R, R, R), PlacedCircle(R, R, R)


def pack(spec: LensSpec) -> PackingSequence:
    R = float(spec.radius)
    radii = [soddy.inner_tangent_radius_with_line(R, R)]
    while len(radii) < spec.count:
        radii.append(soddy.inner_tangent_radius((R, R, radii[-1])))

    left, right = big_circles(R)
    circles = []
    for i, r in enumerate(radii, start=1):
        p = place_tangent_circle(left, right, r, Tangency.EXTERNAL, Tangency.EXTERNAL, Branch.LOWER)
        circles.append(PackedCircle(index=i, radius=r, cx=p.x, cy=p.y))

    boundary = [
        SegmentShape(-2.0 * R, 0.0, 2.0 * R, 0.0),
        ArcShape(-R, R, R),
        ArcShape(R, R, R),
    ]
    return PackingSequence(
        region="lens",
        scale=R,
        circles=circles,
        boundary=boundary,
        params={"radius": R, "count": spec.count},
    )


def verify(seq: PackingSequence, tolerance: float) -> VerificationReport:
    R = seq.scale
    report = VerificationReport(tolerance=tolerance * R)
    left, right = big_circles(R)
    base = Line((0.0, 0.0), (1.0, 0.0))
    placed = [c.placed() for c in seq.circles]
    for i, (c, p) in enumerate(zip(seq.circles, placed)):
        tag = f"circle {c.index}"
        report.add(f"{tag} tangent left", tangency_residual(p, left, Tangency.EXTERNAL))
        report.add(f"{tag} tangent right", tangency_residual(p, right, Tangency.EXTERNAL))
        if i > 0:
            report.add(f"{tag} tangent previous", tangency_residual(p, placed[i - 1], Tangency.EXTERNAL))
        report.add(f"{tag} above line", max(0.0, p.radius - p.y))
        report.add(f"{tag} below contact point", max(0.0, p.y + p.radius - R))
        report.add(f"{tag} on axis", abs(p.x))
    if placed:
        report.add("circle 1 tangent line", line_tangency_residual(placed[0], base))
    report.extend(chain_overlap_checks(placed, tolerance * R))
    return report
