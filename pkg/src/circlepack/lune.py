"""Chains in the two pockets left by two tangent circles inside a third.

Frame: the enclosing circle (radius R) is centred at the origin and the
reference circle (radius b) at (b - R, 0), touching it at (-R, 0).  The
starting circle (radius a) touches both and sits above the x-axis.

Every circle of either chain touches the reference circle and the enclosing
circle, so together they form one chain wrapped around the reference circle.
The two roots of the tangency quadratic for a member are exactly its two
neighbours in that chain.  The minor chain keeps taking the small root and
runs into the cusp at (-R, 0) along the upper side.  The major chain starts
with the large root of ``a``, climbs around the far side of the reference
circle and, once past its largest member, comes back down along the lower
side.  After the first step each member is the root farther from its
predecessor, so the chain never steps back onto a circle it already holds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import soddy
from .errors import InvalidInput, NoRealSolution
from .geometry import (
    PlacedCircle,
    Tangency,
    VerificationReport,
    candidate_centers,
    containment_excess,
    overlap_excess,
    tangency_residual,
)
from .model import ArcShape, PackedCircle, PackingSequence
from .verify import chain_overlap_checks

# Ascent threshold on radii for R = 1; scaled by R otherwise.
ASCENT_EPS = 1e-17
RESONANCE_RTOL = 1e-12


class Phase(enum.Enum):
    ASCENDING = "ascending"
    AT_MAX = "at_max"
    DESCENDING = "descending"


class Resonance(enum.Enum):
    RESONANT = "Resonant"
    NON_RESONANT = "NonResonant"


def _positive(value, name: str) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise InvalidInput(f"{name} must be a positive finite length, got {value!r}", name)
    return value


def _count(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInput(f"{name} must be a nonnegative integer, got {value!r}", name)
    return value


@dataclass(frozen=True)
class LuneSpec:
    R: float
    a: float
    b: float
    minor_count: int = 0
    major_count: int = 0

    def __post_init__(self):
        R = _positive(self.R, "R")
        a = _positive(self.a, "a")
        b = _positive(self.b, "b")
        _count(self.minor_count, "minor_count")
        _count(self.major_count, "major_count")
        if b >= R:
            raise InvalidInput(f"b must be smaller than R, got b={b!r}, R={R!r}", "b")
        if a >= R:
            raise InvalidInput(f"a must be smaller than R, got a={a!r}, R={R!r}", "a")
        if _excess(a, b, R) > 0.0:
            raise InvalidInput(f"a + b = {a + b!r} exceeds R = {R!r}", "a")

    @property
    def degenerate(self) -> bool:
        return abs(self.R - self.a - self.b) <= soddy.DEGENERATE_RTOL * self.R


def _excess(r: float, b: float, R: float) -> float:
    """Amount by which r + b overshoots R, with the degenerate band counted as zero."""
    over = r + b - R
    return over if over > soddy.DEGENERATE_RTOL * R else 0.0


def _roots(r_i: float, b: float, R: float) -> soddy.InscribedPairResult:
    r_i = _positive(r_i, "r_i")
    b = _positive(b, "b")
    R = _positive(R, "R")
    if _excess(r_i, b, R) > 0.0:
        raise InvalidInput(f"r_i + b = {r_i + b!r} exceeds R = {R!r}", "r_i")
    try:
        return soddy.third_inscribed_radii(r_i, b, R)
    except NoRealSolution as exc:  # pragma: no cover - screened above
        raise InvalidInput(str(exc), "r_i") from exc


def minor_step(r_i: float, b: float, R: float) -> float:
    """Next radius heading into the minor pocket (the small root)."""
    return _roots(r_i, b, R).c_min


def major_step(r_i: float, b: float, R: float) -> float:
    """Neighbour of ``r_i`` on the major-pocket side (the large root)."""
    return _roots(r_i, b, R).c_max


def max_major_radius(b: float, R: float) -> float:
    """Radius of two equal chain circles meeting on the x-axis."""
    b = _positive(b, "b")
    R = _positive(R, "R")
    if b >= R:
        raise InvalidInput(f"b must be smaller than R, got b={b!r}, R={R!r}", "b")
    return 4.0 * b * R * (R - b) / (R + b) ** 2


def classify_resonance(r_i: float, b: float, R: float) -> Resonance:
    _roots(r_i, b, R)
    if abs(r_i - max_major_radius(b, R)) <= RESONANCE_RTOL * R:
        return Resonance.NON_RESONANT
    return Resonance.RESONANT


def minor_radii(spec: LuneSpec) -> list[float]:
    out: list[float] = []
    cur = float(spec.a)
    for _ in range(spec.minor_count):
        cur = minor_step(cur, spec.b, spec.R)
        out.append(cur)
    return out


def major_radii(spec: LuneSpec) -> list[float]:
    out: list[float] = []
    if spec.major_count == 0:
        return out
    prev, cur = float(spec.a), major_step(spec.a, spec.b, spec.R)
    out.append(cur)
    while len(out) < spec.major_count:
        roots = _roots(cur, spec.b, spec.R)
        nxt = roots.c_max if abs(roots.c_max - prev) >= abs(roots.c_min - prev) else roots.c_min
        prev, cur = cur, nxt
        out.append(cur)
    return out


def phases(radii: list[float], start: float, following: float | None, R: float) -> list[Phase]:
    """Label each member of a chain by comparing it with its neighbours.

    ``start`` is the radius before the first member and ``following`` the
    one after the last (None when unknown).
    """
    eps = ASCENT_EPS * R
    seq = [start] + list(radii) + [following]
    out = []
    for k in range(1, len(seq) - 1):
        before, here, after = seq[k - 1], seq[k], seq[k + 1]
        if after is not None and after > here + eps:
            out.append(Phase.ASCENDING)
        elif before > here + eps:
            out.append(Phase.DESCENDING)
        else:
            out.append(Phase.AT_MAX)
    return out


def frame(spec: LuneSpec) -> dict[str, PlacedCircle]:
    R, a, b = float(spec.R), float(spec.a), float(spec.b)
    outer = PlacedCircle(0.0, 0.0, R)
    ref = PlacedCircle(b - R, 0.0, b)
    p, q = candidate_centers(outer, ref, a, Tangency.INTERNAL, Tangency.EXTERNAL)
    x, y = p if (p[1], p[0]) >= (q[1], q[0]) else q
    return {"R": outer, "b": ref, "a": PlacedCircle(x, y, a)}


def _place_chain(radii, fixed, start: PlacedCircle, prefer_upper: bool) -> list[PlacedCircle]:
    placed: list[PlacedCircle] = []
    prev, before = start, None
    for r in radii:
        p, q = candidate_centers(fixed["R"], fixed["b"], r, Tangency.INTERNAL, Tangency.EXTERNAL)
        cands = [PlacedCircle(p[0], p[1], r), PlacedCircle(q[0], q[1], r)]
        res = [tangency_residual(c, prev, Tangency.EXTERNAL) for c in cands]
        if abs(res[0] - res[1]) > 1e-12 * fixed["R"].radius:
            chosen = cands[0] if res[0] < res[1] else cands[1]
        elif before is not None:
            # Predecessor on the axis: move away from the circle before it.
            chosen = max(cands, key=lambda c: math.hypot(c.x - before.x, c.y - before.y))
        else:
            upper, lower = sorted(cands, key=lambda c: (c.y, c.x), reverse=True)
            chosen = upper if prefer_upper else lower
        placed.append(chosen)
        before, prev = prev, chosen
    return placed


def pack_lune(spec: LuneSpec) -> tuple[PackingSequence, PackingSequence]:
    R = float(spec.R)
    fixed = frame(spec)
    r_max = max_major_radius(spec.b, R)
    resonance = classify_resonance(spec.a, spec.b, R)
    boundary = [
        ArcShape(0.0, 0.0, R),
        ArcShape(fixed["b"].x, 0.0, fixed["b"].radius),
        ArcShape(fixed["a"].x, fixed["a"].y, fixed["a"].radius),
    ]
    params = {"R": R, "a": float(spec.a), "b": float(spec.b)}
    meta = {"r_max": r_max, "resonance": resonance.value, "degenerate": spec.degenerate}

    minor = minor_radii(spec)
    minor_placed = _place_chain(minor, fixed, fixed["a"], prefer_upper=True)

    major = major_radii(spec)
    if major:
        nxt = major_radii(LuneSpec(spec.R, spec.a, spec.b, 0, len(major) + 1))[-1]
        major_phase = phases(major, float(spec.a), nxt, R)
    else:
        major_phase = []
    major_placed = _place_chain(major, fixed, fixed["a"], prefer_upper=False)

    def seq(region, radii, placed, count, phase_labels):
        return PackingSequence(
            region=region,
            scale=R,
            circles=[
                PackedCircle(index=i, radius=r, cx=p.x, cy=p.y)
                for i, (r, p) in enumerate(zip(radii, placed), start=1)
            ],
            boundary=list(boundary),
            params={**params, "count": count},
            meta=dict(meta),
            extra_columns={"phase": phase_labels} if phase_labels is not None else {},
        )

    minor_phase = [Phase.DESCENDING.value] * len(minor)
    return (
        seq("lune-minor", minor, minor_placed, spec.minor_count, minor_phase),
        seq("lune-major", major, major_placed, spec.major_count, [p.value for p in major_phase]),
    )


def verify(seq: PackingSequence, tolerance: float) -> VerificationReport:
    R = seq.scale
    spec = LuneSpec(seq.params["R"], seq.params["a"], seq.params["b"])
    fixed = frame(spec)
    report = VerificationReport(tolerance=tolerance * R)
    placed = [c.placed() for c in seq.circles]
    for i, (c, p) in enumerate(zip(seq.circles, placed)):
        tag = f"{seq.region} circle {c.index}"
        report.add(f"{tag} tangent R", tangency_residual(p, fixed["R"], Tangency.INTERNAL))
        report.add(f"{tag} tangent b", tangency_residual(p, fixed["b"], Tangency.EXTERNAL))
        prev = placed[i - 1] if i > 0 else fixed["a"]
        report.add(f"{tag} tangent previous", tangency_residual(p, prev, Tangency.EXTERNAL))
        report.add(f"{tag} inside R", containment_excess(p, fixed["R"]))
        report.add(f"{tag} clear of b", overlap_excess(p, fixed["b"]))
        if i > 0:
            report.add(f"{tag} clear of a", overlap_excess(p, fixed["a"]))
    report.extend(chain_overlap_checks(placed, tolerance * R))
    return report
