"""Chains of mutually tangent circles packed into planar regions."""

from .errors import (
    CirclePackError,
    InternalCheckFailed,
    InvalidAngle,
    InvalidInput,
    InvalidRange,
    InvalidTriple,
    NoIntersection,
    NoRealSolution,
    NoRoot,
)
from .soddy import (
    InscribedPairResult,
    TangentTriple,
    circumscribing_radius,
    inner_tangent_radius,
    inner_tangent_radius_with_line,
    third_inscribed_radii,
)

__version__ = "0.1.0"

__all__ = [
    "CirclePackError",
    "InscribedPairResult",
    "InternalCheckFailed",
    "InvalidAngle",
    "InvalidInput",
    "InvalidRange",
    "InvalidTriple",
    "NoIntersection",
    "NoRealSolution",
    "NoRoot",
    "TangentTriple",
    "circumscribing_radius",
    "inner_tangent_radius",
    "inner_tangent_radius_with_line",
    "third_inscribed_radii",
]
