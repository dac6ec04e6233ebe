"""Pattern-to-detector dispatch and a convenience runner.

The dispatch table sends every pattern to the cheapest detector that is
correct for it:

=====================  ===========================  =========================
pattern                permutation stream           distinct-value sequence
=====================  ===========================  =========================
increasing (any k)     MonotoneDetector             MonotoneDetector
decreasing (any k)     complement(MonotoneDetector) complement(MonotoneDetector)
312                    Detector312                  baseline (with a warning)
132                    complement(Detector312)      baseline (with a warning)
231                    Detector231                  baseline (with a warning)
213                    complement(Detector231)      baseline (with a warning)
other (k >= 4)         baseline (with a warning)    baseline (with a warning)
=====================  ===========================  =========================

Patterns longer than the universe dispatch to the trivial rejector.  The
k >= 4 fallback warns because linear space is not an implementation gap:
for those patterns no sublinear one-pass detector exists.
"""

from __future__ import annotations

import warnings

from ..core import Pattern, PatternKind, StreamInstance, StreamMode, stream_violation
from .adapter import ComplementAdapter
from .base import Detector, DetectorReport
from .baseline import BaselineDetector, TrivialRejectDetector
from .monotone import MonotoneDetector
from .strips231 import Detector231
from .window312 import Detector312


def new_detector(
    pattern: Pattern, n: int, mode: StreamMode = StreamMode.PERMUTATION
) -> Detector:
    """Build the dispatched detector for ``pattern`` over universe [1..n]."""
    k = len(pattern)
    if k > n:
        return TrivialRejectDetector(pattern, n, mode)
    if pattern.kind is PatternKind.INCREASING:
        return MonotoneDetector(k, n, mode)
    if pattern.kind is PatternKind.DECREASING:
        return ComplementAdapter(MonotoneDetector(k, n, mode))
    if pattern.kind is PatternKind.NONMONOTONE3:
        if mode is not StreamMode.PERMUTATION:
            warnings.warn(
                f"no sublinear sequence-mode detector for {pattern}; "
                "falling back to the full-storage baseline",
                stacklevel=2,
            )
            return BaselineDetector(pattern, n, mode)
        values = pattern.values
        if values == (3, 1, 2):
            return Detector312(n, mode)
        if values == (1, 3, 2):
            return ComplementAdapter(Detector312(n, mode))
        if values == (2, 3, 1):
            return Detector231(n, mode)
        assert values == (2, 1, 3)
        return ComplementAdapter(Detector231(n, mode))
    warnings.warn(
        f"pattern {pattern} needs linear space (no sublinear one-pass detector "
        "exists for it); using the full-storage baseline",
        stacklevel=2,
    )
    return BaselineDetector(pattern, n, mode)


def run_detector(
    inst: StreamInstance, pattern: Pattern, detector: Detector | None = None
) -> DetectorReport:
    """Validate the stream, feed it to the detector, and return the report.

    Stops pushing as soon as the detector accepts (the streaming early exit).
    """
    reason = stream_violation(inst)
    if reason is not None:
        raise ValueError(f"invalid stream: {reason}")
    if detector is None:
        detector = new_detector(pattern, inst.n, inst.mode)
    for value in inst.elements:
        if detector.push(value):
            break
    return detector.finish()
