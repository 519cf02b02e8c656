"""Exception types raised by the packing library."""


class CirclePackError(Exception):
    """Base class for every error raised by circlepack."""


class InvalidInput(CirclePackError, ValueError):
    """A parameter is nonpositive, non-finite or outside its admissible range."""

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.parameter = parameter


class InvalidTriple(InvalidInput):
    """Three radii admit no circle internally tangent to all of them."""


class NoRealSolution(InvalidInput):
    """The tangency quadratic has a negative discriminant (a + b > R)."""


class InvalidAngle(InvalidInput):
    """A sector angle lies outside the open interval (0, pi)."""


class InvalidRange(InvalidInput):
    """An integer range is empty or starts below its lower bound."""


class NoIntersection(CirclePackError, ValueError):
    """Two distance constraints describe circles that do not meet."""


class NoRoot(CirclePackError, ValueError):
    """A bracketed search found no tangent radius."""


class InternalCheckFailed(CirclePackError, RuntimeError):
    """An internal cross-check between two independent routes disagreed."""
