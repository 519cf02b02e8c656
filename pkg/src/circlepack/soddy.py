"""Tangent-circle algebra for three mutually tangent circles.

Every region in this package reduces to the same configuration: two circles
of radii ``a`` and ``b`` touching each other externally and touching a third
circle of radius ``R`` internally.  The functions here give the circle that
encloses three tangent circles, the two circles that complete a pair inside
an enclosing circle, and the small circle nestled between three circles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput, InvalidTriple, NoRealSolution

# |R - a - b| <= DEGENERATE_RTOL * R counts as the equal-roots case.
DEGENERATE_RTOL = 1e-12


def _check_radius(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidInput(f"{name} must be a positive finite length, got {value!r}", name)
    return value


@dataclass(frozen=True)
class TangentTriple:
    """Radii of three mutually externally tangent circles, in any order."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _check_radius(getattr(self, name), name))

    def sorted_desc(self) -> tuple[float, float, float]:
        a, b, c = sorted((self.a, self.b, self.c), reverse=True)
        return a, b, c


@dataclass(frozen=True)
class InscribedPairResult:
    """Both radii completing ``(a, b)`` inside an enclosing circle."""

    c_min: float
    c_max: float
    degenerate: bool


def _as_triple(t: TangentTriple | tuple[float, float, float]) -> TangentTriple:
    return t if isinstance(t, TangentTriple) else TangentTriple(*t)


def line_limit_threshold(a: float, b: float) -> float:
    """Radius of the circle touching ``a``, ``b`` and their common tangent line."""
    return a * b / (math.sqrt(a) + math.sqrt(b)) ** 2


def circumscribing_radius(t: TangentTriple | tuple[float, float, float]) -> float:
    """Radius of the circle internally tangent to three tangent circles.

    Raises:
        InvalidTriple: the smallest radius is too small for an enclosing
            circle to exist (the three circles would need a straight line or
            an exterior circle to close them off).
    """
    t = _as_triple(t)
    a, b, c = t.sorted_desc()
    if not c > line_limit_threshold(a, b):
        raise InvalidTriple(
            f"smallest radius {c!r} must exceed ab/(sqrt(a)+sqrt(b))^2 = "
            f"{line_limit_threshold(a, b)!r} for an enclosing circle to exist",
            "c",
        )
    denom = 2.0 * math.sqrt(a * b * c * (a + b + c)) - (a * b + b * c + c * a)
    if not denom > 0.0:
        raise InvalidTriple(f"enclosing-circle denominator is {denom!r}", "c")
    return a * b * c / denom


def third_inscribed_radii(a: float, b: float, R: float) -> InscribedPairResult:
    """Radii of the two circles tangent to ``a``, ``b`` (externally) and ``R`` (internally).

    ``c_min`` fills the smaller of the two pockets left between the pair and
    the enclosing circle, ``c_max`` the larger one.  When ``R == a + b`` both
    pockets are congruent and the two radii coincide; ``degenerate`` is set
    whenever ``R - a - b`` is within ``DEGENERATE_RTOL * R`` of zero.

    Raises:
        NoRealSolution: ``a + b > R``.
        InvalidInput: a radius is nonpositive, non-finite, or not below ``R``.
    """
    a = _check_radius(a, "a")
    b = _check_radius(b, "b")
    R = _check_radius(R, "R")
    if a >= R or b >= R:
        raise InvalidInput(f"a and b must be smaller than R (a={a!r}, b={b!r}, R={R!r})", "R")
    gap = R - a - b
    degenerate = abs(gap) <= DEGENERATE_RTOL * R
    if gap < 0.0 and not degenerate:
        raise NoRealSolution(f"a + b = {a + b!r} exceeds R = {R!r}", "R")
    # Inside the band the flag is set, but a positive gap still enters the
    # root: its square root moves the radii far more than the gap itself.
    root = 2.0 * math.sqrt(a * b * R * max(gap, 0.0))

    s = a * R + b * R - a * b
    denom = (a * R + b * R + a * b) ** 2 - 4.0 * a * b * R * R
    if not denom > 0.0:
        raise InvalidInput(f"quadratic leading coefficient is {denom!r}", "R")
    c_max = a * b * R * (s + root) / denom
    # Product of the roots is (abR)^2 / denom, so the small root needs no subtraction.
    c_min = a * b * R / (s + root)
    if root == 0.0:
        c_max = c_min
    return InscribedPairResult(c_min=c_min, c_max=c_max, degenerate=degenerate)


def inner_tangent_radius(t: TangentTriple | tuple[float, float, float]) -> float:
    """Radius of the circle externally tangent to three mutually tangent circles."""
    t = _as_triple(t)
    a, b, c = t.a, t.b, t.c
    return a * b * c / (2.0 * math.sqrt(a * b * c * (a + b + c)) + (a * b + b * c + c * a))


def inner_tangent_radius_with_line(a: float, b: float) -> float:
    """Inner tangent radius when the third circle degenerates to a common tangent line."""
    a = _check_radius(a, "a")
    b = _check_radius(b, "b")
    return line_limit_threshold(a, b)
