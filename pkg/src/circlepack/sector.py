"""Chain of circles inside a circular sector.

Frame: apex O at the origin, side OB along +x, side OA at the central angle.
Circle i is tangent to side OB and to the arc, and occupies the sub-sector of
angle theta_i measured from OB; its centre therefore sits on that
sub-sector's bisector at distance R - r_i from O.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidAngle, InvalidInput
from .geometry import (
    Line,
    PlacedCircle,
    Tangency,
    VerificationReport,
    containment_excess,
    line_tangency_residual,
    tangency_residual,
)
from .model import ArcShape, PackedCircle, PackingSequence, SegmentShape
from .verify import chain_overlap_checks

SQRT2 = math.sqrt(2.0)

# Radii below this are treated as underflow and end the chain early.
TINY_RADIUS = 1e-300


def _check_angle(theta: float, name: str = "central_angle") -> float:
    theta = float(theta)
    if not (math.isfinite(theta) and 0.0 < theta < math.pi):
        raise InvalidAngle(f"{name} must lie strictly between 0 and pi radians, got {theta!r}", name)
    return theta


def _check_radius(R: float) -> float:
    R = float(R)
    if not (math.isfinite(R) and R > 0.0):
        raise InvalidInput(f"radius must be a positive finite length, got {R!r}", "radius")
    return R


@dataclass(frozen=True)
class SectorSpec:
    radius: float
    central_angle: float  # radians
    count: int

    def __post_init__(self):
        _check_radius(self.radius)
        _check_angle(self.central_angle)
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise InvalidInput(f"count must be a positive integer, got {self.count!r}", "count")


def first_radius(spec: SectorSpec) -> float:
    s = math.sin(spec.central_angle / 2.0)
    return spec.radius * s / (1.0 + s)


def _numerator(theta: float) -> tuple[float, float]:
    s = math.sin(theta / 2.0)
    return s * s + 3.0 * s - SQRT2 * math.sin(theta), s


def step(theta_n: float, R: float) -> tuple[float, float]:
    """Radius and subtended angle of the next circle from the previous angle."""
    theta_n = _check_angle(theta_n, "theta_n")
    R = _check_radius(R)
    num, s = _numerator(theta_n)
    r_next = R * num / (1.0 + 3.0 * s) ** 2
    theta_next = 2.0 * math.asin(num / (SQRT2 * math.sin(theta_n) + 8.0 * s * s + 3.0 * s + 1.0))
    return r_next, theta_next


def angle_from_radius(r: float, R: float) -> float:
    """Angle subtended at O by a circle of radius r touching the arc and one side."""
    return 2.0 * math.asin(r / (R - r))


def pack(spec: SectorSpec) -> PackingSequence:
    R = float(spec.radius)
    theta = float(spec.central_angle)
    radii = [first_radius(spec)]
    thetas = [theta]
    truncated = False
    while len(radii) < spec.count:
        r, theta = step(thetas[-1], R)
        if r < TINY_RADIUS or theta <= 0.0:
            truncated = True
            break
        radii.append(r)
        thetas.append(theta)

    circles = []
    for i, (r, t) in enumerate(zip(radii, thetas), start=1):
        d = R - r
        circles.append(PackedCircle(index=i, radius=r, cx=d * math.cos(t / 2.0), cy=d * math.sin(t / 2.0), theta=t))

    theta1 = float(spec.central_angle)
    boundary = [
        SegmentShape(0.0, 0.0, R, 0.0),
        SegmentShape(0.0, 0.0, R * math.cos(theta1), R * math.sin(theta1)),
        ArcShape(0.0, 0.0, R, 0.0, theta1),
    ]
    return PackingSequence(
        region="sector",
        scale=R,
        circles=circles,
        boundary=boundary,
        params={"radius": R, "angle_deg": math.degrees(theta1), "count": spec.count},
        meta={"truncated": truncated},
    )


def verify(seq: PackingSequence, tolerance: float) -> VerificationReport:
    R = seq.scale
    theta1 = math.radians(seq.params["angle_deg"])
    report = VerificationReport(tolerance=tolerance * R)
    outer = PlacedCircle(0.0, 0.0, R)
    side_ob = Line((0.0, 0.0), (1.0, 0.0))
    side_oa = Line((0.0, 0.0), (math.cos(theta1), math.sin(theta1)))
    placed = [c.placed() for c in seq.circles]
    for i, (c, p) in enumerate(zip(seq.circles, placed)):
        tag = f"circle {c.index}"
        report.add(f"{tag} tangent OB", line_tangency_residual(p, side_ob))
        report.add(f"{tag} tangent arc", tangency_residual(p, outer, Tangency.INTERNAL))
        if i > 0:
            report.add(f"{tag} tangent previous", tangency_residual(p, placed[i - 1], Tangency.EXTERNAL))
        report.add(f"{tag} inside arc", containment_excess(p, outer))
        report.add(f"{tag} above OB", max(0.0, p.radius - side_ob.signed_distance(p.x, p.y)))
        report.add(f"{tag} below OA", max(0.0, p.radius + side_oa.signed_distance(p.x, p.y)))
        report.add(f"{tag} angle consistent", abs(math.sin(c.theta / 2.0) * (R - c.radius) - c.radius))
    if placed:
        report.add("circle 1 tangent OA", line_tangency_residual(placed[0], side_oa))
    report.extend(chain_overlap_checks(placed, tolerance * R))
    return report
