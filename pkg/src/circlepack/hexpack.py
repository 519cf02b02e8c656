"""Closed-form metrics for equal circles packed hexagonally inside a regular hexagon."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput, InvalidRange

SQRT3 = math.sqrt(3.0)


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInput(f"n must be an integer, got {n!r}", "n")
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n!r}", "n")
    return n


def _check_r(r) -> float:
    r = float(r)
    if not (math.isfinite(r) and r > 0.0):
        raise InvalidInput(f"r must be a positive finite length, got {r!r}", "r")
    return r


@dataclass(frozen=True)
class HexPackSpec:
    """``n`` circles of radius ``r`` touch each side of the hexagon."""

    n: int
    r: float

    def __post_init__(self):
        _check_n(self.n)
        _check_r(self.r)


@dataclass(frozen=True)
class HexPackMetrics:
    N: int
    N_v: int
    side: float
    circumradius: float
    string_length: float
    density: float

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "Nv": self.N_v,
            "a": self.side,
            "R": self.circumradius,
            "L": self.string_length,
            "density": self.density,
        }


def circle_count(n: int) -> int:
    n = _check_n(n)
    return 3 * n * n - 3 * n + 1


def void_count(n: int) -> int:
    n = _check_n(n)
    return 6 * (n * n - n + 1)


def density(n: int) -> float:
    n = _check_n(n)
    return (math.pi * SQRT3 / 6.0) * circle_count(n) / (SQRT3 * (n - 1) + 1.0) ** 2


def density_limit() -> float:
    return math.pi * SQRT3 / 6.0


def metrics(spec: HexPackSpec) -> HexPackMetrics:
    n, r = spec.n, float(spec.r)
    return HexPackMetrics(
        N=circle_count(n),
        N_v=void_count(n),
        side=2.0 * r * (n + 1.0 / SQRT3 - 1.0),
        circumradius=(2 * n - 1) * r,
        string_length=2.0 * (6 * n + math.pi - 6.0) * r,
        density=density(n),
    )


def density_curve(n_min: int, n_max: int) -> list[tuple[int, float]]:
    for name, v in (("n_min", n_min), ("n_max", n_max)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidRange(f"{name} must be an integer, got {v!r}", name)
    if n_min < 2:
        raise InvalidRange(f"n_min must be at least 2, got {n_min!r}", "n_min")
    if n_max < n_min:
        raise InvalidRange(f"n_max ({n_max!r}) is below n_min ({n_min!r})", "n_max")
    return [(n, density(n)) for n in range(n_min, n_max + 1)]
