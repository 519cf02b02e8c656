"""Chains of circles inside a square of side ``x``.

The frame has its origin at vertex A with AB along +x and AD along +y.  Both
regions are pockets of the crescent between the semicircle on AB (centre
E = (x/2, 0), radius x/2) and the quarter circle about B (radius x), so every
chain follows the same recurrence; only the first circle differs.

* mode A: the crescent is closed off by side BC.
* mode B: it is closed off by the semicircle on AD (centre G = (0, x/2)).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import bisect, newton

from .errors import InternalCheckFailed, InvalidInput
from .geometry import (
    Branch,
    Line,
    PlacedCircle,
    Tangency,
    VerificationReport,
    containment_excess,
    line_tangency_residual,
    place_tangent_circle,
    tangency_residual,
)
from .model import ArcShape, PackedCircle, PackingSequence, SegmentShape
from .verify import chain_overlap_checks


class SquareMode(enum.Enum):
    A_SEMI_QUARTER = "square-a"
    B_TWO_SEMI_QUARTER = "square-b"


@dataclass(frozen=True)
class SquareRegionSpec:
    side: float
    mode: SquareMode
    count: int

    def __post_init__(self):
        _check_side(self.side)
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise InvalidInput(f"count must be a positive integer, got {self.count!r}", "count")


def _check_side(x: float) -> float:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise InvalidInput(f"side must be a positive finite length, got {x!r}", "side")
    return float(x)


def first_radius_mode_a(x: float) -> float:
    return _check_side(x) / 4.0


def first_center_mode_a(x: float) -> tuple[float, float]:
    x = _check_side(x)
    return (3.0 * x / 4.0, x * math.sqrt(0.5))


def recurrence_step(r_n: float, x: float) -> float:
    """Radius of the next circle down the crescent, from the current radius."""
    x = _check_side(x)
    if not (math.isfinite(r_n) and r_n > 0.0):
        raise InvalidInput(f"radius must be positive, got {r_n!r}", "r_n")
    if r_n > x / 2.0:
        raise InvalidInput(f"radius {r_n!r} exceeds half the side {x / 2.0!r}", "r_n")
    root = math.sqrt(max(0.0, x * r_n - 2.0 * r_n * r_n))
    return x * (r_n * r_n + x * r_n - 2.0 * r_n * root) / (9.0 * r_n * r_n - 2.0 * x * r_n + x * x)


def first_radius_cubic(t: float) -> float:
    """Cubic in t = r1/x whose admissible root is the first mode-B radius."""
    return ((297.0 * t - 234.0) * t + 57.0) * t - 4.0


MODE_B_RATIO = 4.0 / 33.0


def solve_first_radius_ratio() -> float:
    """Admissible root of :func:`first_radius_cubic`, found numerically.

    The cubic also has a double root at 1/3, which is too large for the
    region (the first radius must stay below the mode-A value 1/4).
    """
    t = bisect(first_radius_cubic, 1e-9, 0.25 - 1e-9, xtol=1e-14, maxiter=200)
    return newton(first_radius_cubic, t, fprime=lambda u: (891.0 * u - 468.0) * u + 57.0, tol=1e-16)


def first_radius_mode_b(x: float) -> float:
    x = _check_side(x)
    t = solve_first_radius_ratio()
    if abs(t - MODE_B_RATIO) > 1e-12:
        raise InternalCheckFailed(f"numeric cubic root {t!r} differs from 4/33")
    return 4.0 * x / 33.0


def auxiliary_height(r1: float, x: float) -> float:
    """Height of the first mode-B centre above AB, expressed through r1."""
    return (9.0 * x * r1 - 13.0 * r1 * r1) / (x + 4.0 * r1)


def first_center_mode_b(x: float) -> tuple[float, float]:
    x = _check_side(x)
    cx, cy = 4.0 * x / 11.0, 20.0 * x / 33.0
    y_aux = auxiliary_height(4.0 * x / 33.0, x)
    if abs(y_aux - cy) > 1e-12 * cy:
        raise InternalCheckFailed(f"auxiliary height {y_aux!r} differs from 20x/33 = {cy!r}")
    return cx, cy


def closed_form_mode_b(n: int, x: float) -> float:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}", "n")
    x = _check_side(x)
    return 4.0 * x / (4 * n * n + 12 * n + 17)


def boundary_circles(x: float) -> dict[str, PlacedCircle]:
    return {
        "E": PlacedCircle(x / 2.0, 0.0, x / 2.0),
        "B": PlacedCircle(x, 0.0, x),
        "G": PlacedCircle(0.0, x / 2.0, x / 2.0),
    }


def pack(spec: SquareRegionSpec) -> PackingSequence:
    x, n = float(spec.side), spec.count
    if spec.mode is SquareMode.A_SEMI_QUARTER:
        radii = [first_radius_mode_a(x)]
    else:
        radii = [first_radius_mode_b(x)]
    for _ in range(n - 1):
        radii.append(recurrence_step(radii[-1], x))

    extra = {}
    if spec.mode is SquareMode.B_TWO_SEMI_QUARTER:
        closed = [closed_form_mode_b(i, x) for i in range(1, n + 1)]
        worst = max(abs(r - c) / c for r, c in zip(radii, closed))
        if worst > 1e-10:
            raise InternalCheckFailed(f"recurrence departs from the closed form by {worst:.3e}")
        extra["closed_form"] = closed

    fixed = boundary_circles(x)
    circles = []
    for i, r in enumerate(radii, start=1):
        c = place_tangent_circle(fixed["E"], fixed["B"], r, Tangency.EXTERNAL, Tangency.INTERNAL, Branch.UPPER)
        circles.append(PackedCircle(index=i, radius=r, cx=c.x, cy=c.y))

    boundary = [
        SegmentShape(0.0, 0.0, x, 0.0),
        SegmentShape(x, 0.0, x, x),
        SegmentShape(x, x, 0.0, x),
        SegmentShape(0.0, x, 0.0, 0.0),
        ArcShape(x / 2.0, 0.0, x / 2.0, 0.0, math.pi),
        ArcShape(x, 0.0, x, math.pi / 2.0, math.pi),
    ]
    if spec.mode is SquareMode.B_TWO_SEMI_QUARTER:
        boundary.append(ArcShape(0.0, x / 2.0, x / 2.0, -math.pi / 2.0, math.pi / 2.0))

    return PackingSequence(
        region=spec.mode.value,
        scale=x,
        circles=circles,
        boundary=boundary,
        params={"side": x, "count": n},
        extra_columns=extra,
    )


def verify(seq: PackingSequence, tolerance: float) -> VerificationReport:
    """Tangency and containment residuals for a square chain.

    ``tolerance`` is relative to the side length.
    """
    x = seq.scale
    fixed = boundary_circles(x)
    report = VerificationReport(tolerance=tolerance * x)
    placed = [c.placed() for c in seq.circles]
    for i, (c, p) in enumerate(zip(seq.circles, placed)):
        tag = f"circle {c.index}"
        report.add(f"{tag} tangent E", tangency_residual(p, fixed["E"], Tangency.EXTERNAL))
        report.add(f"{tag} tangent B", tangency_residual(p, fixed["B"], Tangency.INTERNAL))
        if i > 0:
            report.add(f"{tag} tangent previous", tangency_residual(p, placed[i - 1], Tangency.EXTERNAL))
        report.add(
            f"{tag} inside square",
            max(0.0, p.radius - p.x, p.x + p.radius - x, p.radius - p.y, p.y + p.radius - x),
        )
        if seq.region == SquareMode.B_TWO_SEMI_QUARTER.value:
            report.add(f"{tag} inside G", containment_excess(p, fixed["G"]))
    if placed:
        if seq.region == SquareMode.A_SEMI_QUARTER.value:
            report.add("circle 1 tangent BC", line_tangency_residual(placed[0], Line((x, 0.0), (0.0, 1.0))))
        else:
            report.add("circle 1 tangent G", tangency_residual(placed[0], fixed["G"], Tangency.INTERNAL))
    report.extend(chain_overlap_checks(placed, tolerance * x))
    return report
