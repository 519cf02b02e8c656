"""Checks shared by every chain region."""

from __future__ import annotations

from typing import Sequence

from .geometry import PlacedCircle, VerificationReport, overlap_excess

# Chains shrink monotonically towards a cusp, so circles further back than
# this can no longer reach the newest one.
OVERLAP_WINDOW = 64


def chain_overlap_checks(placed: Sequence[PlacedCircle], tolerance: float) -> VerificationReport:
    """Interior overlap between non-consecutive members of a chain."""
    report = VerificationReport(tolerance=tolerance)
    for i in range(len(placed)):
        for j in range(max(0, i - OVERLAP_WINDOW), i - 1):
            report.add(f"circles {j + 1} and {i + 1} disjoint", overlap_excess(placed[i], placed[j]))
    return report
