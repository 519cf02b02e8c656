"""Containers shared by the region modules, the renderers and the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Union

from .geometry import PlacedCircle, VerificationReport


@dataclass(frozen=True)
class PackedCircle:
    """One circle of a chain.  ``theta`` is the subtended angle in radians (sectors only)."""

    index: int
    radius: float
    cx: float | None = None
    cy: float | None = None
    theta: float | None = None

    @property
    def center_known(self) -> bool:
        return self.cx is not None and self.cy is not None

    def placed(self) -> PlacedCircle:
        if not self.center_known:
            raise ValueError(f"circle {self.index} has no centre")
        return PlacedCircle(self.cx, self.cy, self.radius)


@dataclass(frozen=True)
class ArcShape:
    """Boundary arc from ``start`` to ``end`` (radians, counter-clockwise)."""

    cx: float
    cy: float
    radius: float
    start: float = 0.0
    end: float = 2.0 * math.pi

    @property
    def full(self) -> bool:
        return self.end - self.start >= 2.0 * math.pi


@dataclass(frozen=True)
class SegmentShape:
    x0: float
    y0: float
    x1: float
    y1: float


Shape = Union[ArcShape, SegmentShape]


@dataclass
class PackingSequence:
    """An ordered chain of packed circles together with the region that holds it."""

    region: str
    scale: float
    circles: list[PackedCircle]
    boundary: list[Shape] = field(default_factory=list)
    params: dict[str, Any] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)
    extra_columns: dict[str, list[Any]] = field(default_factory=dict)

    @property
    def radii(self) -> list[float]:
        return [c.radius for c in self.circles]

    def __len__(self) -> int:
        return len(self.circles)


def bounding_box(shapes, circles) -> tuple[float, float, float, float]:
    """(xmin, ymin, xmax, ymax) covering boundary shapes and placed circles."""
    xs: list[float] = []
    ys: list[float] = []
    for s in shapes:
        if isinstance(s, SegmentShape):
            xs += [s.x0, s.x1]
            ys += [s.y0, s.y1]
        else:
            for x, y in arc_points(s, 64):
                xs.append(x)
                ys.append(y)
    for c in circles:
        if c.center_known:
            xs += [c.cx - c.radius, c.cx + c.radius]
            ys += [c.cy - c.radius, c.cy + c.radius]
    return min(xs), min(ys), max(xs), max(ys)


def arc_points(arc: ArcShape, segments: int) -> list[tuple[float, float]]:
    span = arc.end - arc.start
    return [
        (
            arc.cx + arc.radius * math.cos(arc.start + span * i / segments),
            arc.cy + arc.radius * math.sin(arc.start + span * i / segments),
        )
        for i in range(segments + 1)
    ]


def report_dict(report: VerificationReport) -> dict[str, Any]:
    return {
        "tolerance": report.tolerance,
        "max_residual": report.max_residual,
        "passed": report.passed,
        "checks": len(report.residuals),
    }
