"""Shared detector machinery: the push/finish state machine and space metering.

A detector consumes one value per :meth:`Detector.push` call and may *accept*
(report that the pattern is present) at any push or at :meth:`Detector.finish`.
Once accepted, a detector is latched: further pushes are no-ops that keep
returning True.

Space is metered in *cells*: one cell per stored value, per stored point, and
per stored pair.  ``peak_bits`` estimates the footprint as
``peak_cells * ceil(log2 n)`` plus the widths of any bit-arrays the detector
keeps.  The duplicate-input guard (a bitmask used to reject malformed pushes
with a clear error) is boundary validation rather than algorithm state, so it
is deliberately excluded from the metering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..core import Occurrence, Pattern, StreamMode


@dataclass(frozen=True)
class DetectorReport:
    """Final verdict plus the space telemetry gathered during the run."""

    verdict: bool
    occurrence: Occurrence | None
    peak_cells: int
    peak_bits: int
    structure_peaks: dict[str, int] = field(default_factory=dict)


def bits_per_cell(n: int) -> int:
    """Width of one cell for universe [1..n]."""
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


class Detector:
    """Base class for all streaming detectors."""

    #: set by subclasses that keep bit-arrays (width in bits)
    bit_array_bits: int = 0

    def __init__(self, pattern: Pattern, n: int, mode: StreamMode) -> None:
        if n < 1:
            raise ValueError(f"universe size must be at least 1, got n={n}")
        self.pattern = pattern
        self.n = n
        self.mode = mode
        self.accepted = False
        self.occurrence: Occurrence | None = None
        self.pushes = 0
        self.peak_cells = 0
        self.structure_peaks: dict[str, int] = {}
        self._finished = False
        self._seen_mask = 0

    # -- the push/finish state machine ----------------------------------

    def push(self, value: int) -> bool:
        """Feed one stream value.  Returns True once the pattern is found."""
        if self._finished:
            raise ValueError("push after finish")
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"stream values must be ints, got {value!r}")
        if not 1 <= value <= self.n:
            raise ValueError(f"value {value} out of range [1, {self.n}]")
        if self.accepted:
            return True
        bit = 1 << value
        if self._seen_mask & bit:
            raise ValueError(f"duplicate value {value}")
        self._seen_mask |= bit
        self.pushes += 1
        return self._step(value)

    def finish(self) -> DetectorReport:
        """Declare end of stream and collect the verdict and telemetry."""
        if self._finished:
            raise ValueError("finish called twice")
        if (
            self.mode is StreamMode.PERMUTATION
            and not self.accepted
            and 0 < self.pushes < self.n
        ):
            raise ValueError(
                f"permutation mode requires all n={self.n} values before finish, "
                f"got {self.pushes}"
            )
        self._finished = True
        verdict = self.accepted or (self.pushes > 0 and self._end_check())
        return DetectorReport(
            verdict=verdict,
            occurrence=self.occurrence,
            peak_cells=self.peak_cells,
            peak_bits=self.peak_cells * bits_per_cell(self.n) + self.bit_array_bits,
            structure_peaks=dict(self.structure_peaks),
        )

    # -- hooks for subclasses -------------------------------------------

    def _step(self, value: int) -> bool:
        raise NotImplementedError

    def _end_check(self) -> bool:
        """Extra acceptance work at end of stream (default: none)."""
        return False

    # -- telemetry helpers ----------------------------------------------

    def _accept(self, occurrence: Occurrence | None = None) -> bool:
        self.accepted = True
        self.occurrence = occurrence
        return True

    def _note_space(self, cells: int, **structures: int) -> None:
        if cells > self.peak_cells:
            self.peak_cells = cells
        for name, size in structures.items():
            if size > self.structure_peaks.get(name, -1):
                self.structure_peaks[name] = size
