"""Independent geometric oracle.

Everything here works from centre coordinates and distances only.  Nothing
in this module calls the closed forms in :mod:`circlepack.soddy`; the region
modules use it to place centres and the test suite uses it to check the
closed forms from the outside.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

from scipy.optimize import brentq

from .errors import InvalidInput, NoIntersection, NoRoot


class Tangency(enum.Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"


class Branch(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class PlacedCircle:
    x: float
    y: float
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInput(f"centre must be finite, got ({self.x!r}, {self.y!r})", "center")
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InvalidInput(f"radius must be positive and finite, got {self.radius!r}", "radius")

    @property
    def center(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Line:
    """Infinite line through ``point`` along ``direction``."""

    point: tuple[float, float]
    direction: tuple[float, float]

    def __post_init__(self):
        dx, dy = self.direction
        if dx == 0.0 and dy == 0.0:
            raise InvalidInput("line direction must be nonzero", "direction")

    def distance(self, px: float, py: float) -> float:
        dx, dy = self.direction
        qx, qy = px - self.point[0], py - self.point[1]
        return abs(dx * qy - dy * qx) / math.hypot(dx, dy)

    def signed_distance(self, px: float, py: float) -> float:
        """Positive on the left of ``direction``."""
        dx, dy = self.direction
        qx, qy = px - self.point[0], py - self.point[1]
        return (dx * qy - dy * qx) / math.hypot(dx, dy)


def required_distance(fixed_radius: float, r: float, kind: Tangency) -> float:
    if kind is Tangency.EXTERNAL:
        return fixed_radius + r
    return abs(fixed_radius - r)


def intersect_circles(
    p1: tuple[float, float], d1: float, p2: tuple[float, float], d2: float
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Both intersection points of two circles given by centre and radius.

    The first point lies to the left of the direction ``p1 -> p2``.
    """
    ex, ey = p2[0] - p1[0], p2[1] - p1[1]
    d = math.hypot(ex, ey)
    if d == 0.0:
        raise NoIntersection("distance constraints share a centre")
    along = (d * d + d1 * d1 - d2 * d2) / (2.0 * d)
    h2 = d1 * d1 - along * along
    if h2 < 0.0:
        # Tangent distance circles: tolerate rounding, reject real gaps.
        if h2 < -1e-12 * max(d1, d2, d) ** 2:
            raise NoIntersection(
                f"distance circles of radii {d1!r} and {d2!r} with centres {d!r} apart do not meet"
            )
        h2 = 0.0
    h = math.sqrt(h2)
    ux, uy = ex / d, ey / d
    mx, my = p1[0] + along * ux, p1[1] + along * uy
    return (mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)


def place_tangent_circle(
    c1: PlacedCircle,
    c2: PlacedCircle,
    r_new: float,
    tangency1: Tangency,
    tangency2: Tangency,
    branch: Branch,
) -> PlacedCircle:
    """Centre a circle of radius ``r_new`` tangent to ``c1`` and ``c2``.

    ``branch`` picks between the two candidate centres: UPPER is the one
    with the larger y coordinate (ties go to the larger x), LOWER the other.
    """
    p, q = candidate_centers(c1, c2, r_new, tangency1, tangency2)
    upper, lower = (p, q) if (p[1], p[0]) >= (q[1], q[0]) else (q, p)
    x, y = upper if branch is Branch.UPPER else lower
    return PlacedCircle(x, y, r_new)


def candidate_centers(
    c1: PlacedCircle, c2: PlacedCircle, r_new: float, tangency1: Tangency, tangency2: Tangency
) -> tuple[tuple[float, float], tuple[float, float]]:
    d1 = required_distance(c1.radius, r_new, tangency1)
    d2 = required_distance(c2.radius, r_new, tangency2)
    return intersect_circles(c1.center, d1, c2.center, d2)


def tangency_residual(c1: PlacedCircle, c2: PlacedCircle, kind: Tangency) -> float:
    d = math.hypot(c1.x - c2.x, c1.y - c2.y)
    if kind is Tangency.EXTERNAL:
        return abs(d - (c1.radius + c2.radius))
    return abs(d - abs(c1.radius - c2.radius))


def line_tangency_residual(c: PlacedCircle, line: Line) -> float:
    return abs(line.distance(c.x, c.y) - c.radius)


def containment_excess(inner: PlacedCircle, outer: PlacedCircle) -> float:
    """How far ``inner`` pokes outside ``outer`` (zero when contained)."""
    d = math.hypot(inner.x - outer.x, inner.y - outer.y)
    return max(0.0, d + inner.radius - outer.radius)


def overlap_excess(c1: PlacedCircle, c2: PlacedCircle) -> float:
    """Depth of overlap between two circle interiors (zero when disjoint)."""
    d = math.hypot(c1.x - c2.x, c1.y - c2.y)
    return max(0.0, c1.radius + c2.radius - d)


@dataclass
class VerificationReport:
    """Residuals of every checked constraint against one tolerance.

    Containment checks are recorded as residuals too (the penetration depth),
    so ``passed`` is simply ``max_residual <= tolerance``.
    """

    tolerance: float
    residuals: list[tuple[str, float]] = field(default_factory=list)

    def add(self, label: str, value: float) -> None:
        self.residuals.append((label, float(value)))

    def extend(self, other: "VerificationReport") -> None:
        self.residuals.extend(other.residuals)

    @property
    def max_residual(self) -> float:
        return max((v for _, v in self.residuals), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def failures(self) -> list[tuple[str, float]]:
        return [(k, v) for k, v in self.residuals if not v <= self.tolerance]


# Bracketed search for a tangent radius.

MAX_ITER = 200
_GRID_POINTS = 400


def _radius_residual_fn(fixed, line, branch_index):
    (c1, k1), (c2, k2) = fixed[0], fixed[1]

    def g(r: float) -> float:
        try:
            pts = candidate_centers(c1, c2, r, k1, k2)
        except NoIntersection:
            return math.nan
        x, y = pts[branch_index]
        if line is not None:
            return line.distance(x, y) - r
        c3, k3 = fixed[2]
        return math.hypot(x - c3.x, y - c3.y) - required_distance(c3.radius, r, k3)

    return g


def bisect_tangent_radius(
    fixed: Sequence[tuple[PlacedCircle, Tangency]],
    line: Line | None = None,
    bracket: tuple[float, float] | None = None,
) -> float:
    """Smallest radius in ``bracket`` of a circle tangent to every constraint.

    The constraints are either three circles, or two circles plus a line.
    For a trial radius the first two circles fix the centre up to a mirror
    choice; the signed miss against the remaining constraint is scanned on a
    log-spaced grid for both mirror choices and every sign change is refined
    by bracketed root finding.

    Raises:
        NoRoot: no tangent radius exists inside the bracket.
    """
    fixed = list(fixed)
    if line is None and len(fixed) != 3:
        raise InvalidInput("need three circles, or two circles and a line", "fixed")
    if line is not None and len(fixed) != 2:
        raise InvalidInput("with a line, exactly two circles are required", "fixed")
    scale = max(c.radius for c, _ in fixed)
    if bracket is None:
        bracket = (1e-9 * scale, min(c.radius for c, _ in fixed))
    lo, hi = bracket
    if not (0.0 < lo < hi and math.isfinite(hi)):
        raise NoRoot(f"invalid bracket {bracket!r}")

    xtol = 1e-13 * scale
    roots: list[float] = []
    grid = _log_grid(lo, hi, _GRID_POINTS)
    for branch_index in (0, 1):
        g = _radius_residual_fn(fixed, line, branch_index)
        values = [g(r) for r in grid]
        for (r0, g0), (r1, g1) in zip(zip(grid, values), zip(grid[1:], values[1:])):
            if math.isnan(g0) or math.isnan(g1):
                continue
            if g0 == 0.0:
                roots.append(r0)
                continue
            if g0 * g1 < 0.0:
                r = brentq(g, r0, r1, xtol=xtol, rtol=4 * sys.float_info.epsilon, maxiter=MAX_ITER)
                if abs(g(r)) <= 1e-11 * scale:
                    roots.append(r)
        if values and values[-1] == 0.0:
            roots.append(grid[-1])
    if not roots:
        raise NoRoot(f"no tangent radius in bracket ({lo!r}, {hi!r})")
    return min(roots)


def _log_grid(lo: float, hi: float, n: int) -> list[float]:
    llo, lhi = math.log(lo), math.log(hi)
    pts = [math.exp(llo + (lhi - llo) * i / (n - 1)) for i in range(n)]
    pts[0], pts[-1] = lo, hi
    return pts
