"""One-pass 231 detector that cuts the stream into sqrt(n)-sized strips.

The core machinery natively detects the pattern 213; feeding it the
complement of each incoming value (v -> n+1-v) turns it into a 231 detector,
because a stream contains 231 exactly when its complement contains 213.

Within the current strip every point is buffered, so occurrences living
inside one strip are caught by a direct scan when the strip closes.  Across
strips, four summaries suffice (all in the complemented value space):

1. the closing scan itself;
2. ``low_starter`` -- the lowest value that starts a descent inside some
   closed strip; any later higher value completes a 213 (the descent's low
   end, then the new value);
3. per strip, the widest *increasing pair with an outside value strictly
   between*: a counter tracks how many values strictly between its endpoints
   have been seen in or after the strip; if at end of stream the counter is
   short of the gap size, some in-between value occurred *earlier*, and that
   value, followed by the pair, forms a 213;
4. per strip, its minimum together with the highest later value above it:
   the same counting argument with the pair (minimum, running maximum).

Only the end-of-stream checks of (3) and (4) can conclude "some value must
have occurred earlier", so this detector needs the permutation promise and
delivers verdict-only acceptance: it proves existence without ever holding
all three witness positions at once.

Space: one buffer of at most floor(sqrt(n)) points plus a constant number of
counters per closed strip.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from ..core import StreamMode, classify_pattern
from .base import Detector


@dataclass(slots=True)
class StripRecord:
    """Counters summarizing one closed strip (complemented value space).

    ``gap_lo``/``gap_hi`` bound the widest increasing pair with an outside
    value strictly between (None when the strip has no such pair); ``seen``
    counts values strictly between them observed in or after the strip.
    ``low`` is the strip minimum, ``high_after`` the highest value observed
    above it from within-strip-after-it onwards, and ``seen_above`` how many
    such values were observed.
    """

    gap_lo: int | None
    gap_hi: int | None
    seen: int
    low: int
    high_after: int | None
    seen_above: int

    def observe(self, w: int) -> None:
        if self.gap_lo is not None and self.gap_lo < w < self.gap_hi:
            self.seen += 1
        if w > self.low:
            self.seen_above += 1
            if self.high_after is None or w > self.high_after:
                self.high_after = w

    def accepts_at_end(self) -> bool:
        if self.gap_lo is not None and self.seen < self.gap_hi - self.gap_lo - 1:
            return True
        return (
            self.high_after is not None
            and self.seen_above < self.high_after - self.low
        )

    def cells(self) -> int:
        return (3 if self.gap_lo is not None else 0) + 2 + (
            1 if self.high_after is not None else 0
        )


def contains_213(seq: list[int]) -> bool:
    """Direct scan for 213 in a short sequence of distinct values.

    For each candidate middle index j (the pattern's low point), the best
    possible first value is the smallest earlier value above seq[j]; a later
    value beating any such best completes the pattern.
    """
    best = math.inf
    for idx, w in enumerate(seq):
        if w > best:
            return True
        m = min((u for u in seq[:idx] if u > w), default=math.inf)
        if m < best:
            best = m
    return False


class Detector231(Detector):
    """Streaming detector for the pattern 231 on permutation streams.

    Acceptance is verdict-only (``occurrence`` stays None): parts (3) and (4)
    prove that a witness exists without storing its positions.
    """

    def __init__(self, n: int, mode: StreamMode = StreamMode.PERMUTATION) -> None:
        if mode is not StreamMode.PERMUTATION:
            raise ValueError("Detector231 requires a permutation stream")
        super().__init__(classify_pattern((2, 3, 1)), n, mode)
        self.strip_size = max(1, math.isqrt(n))
        self._buffer: list[int] = []
        self._records: list[StripRecord] = []
        # lowest descent starter over closed strips; n+1 means none yet, and
        # no complemented value can exceed it.
        self._low_starter = n + 1

    def _step(self, v: int) -> bool:
        w = self.n + 1 - v  # work in the complement space (213 mechanics)
        if w > self._low_starter:
            return self._accept()
        for rec in self._records:
            rec.observe(w)
        self._buffer.append(w)
        if len(self._buffer) == self.strip_size:
            if self._close_strip():
                return self._accept()
        self._meter()
        return False

    def _end_check(self) -> bool:
        if self._buffer and self._close_strip():
            return True
        return any(rec.accepts_at_end() for rec in self._records)

    def _close_strip(self) -> bool:
        """Summarize the buffered strip.  True when the strip itself has 213."""
        buf = self._buffer
        if contains_213(buf):
            return True

        # part (2): the lowest value starting a descent within the strip.
        running_min = math.inf
        lowest_starter = math.inf
        for w in reversed(buf):
            if running_min < w < lowest_starter:
                lowest_starter = w
            if w < running_min:
                running_min = w
        if lowest_starter < self._low_starter:
            self._low_starter = int(lowest_starter)

        # part (3): widest increasing pair with an outside value in the gap.
        ordered = sorted(buf)

        def between(lo: int, hi: int) -> int:
            return bisect_left(ordered, hi) - bisect_right(ordered, lo)

        gap_lo: int | None = None
        gap_hi: int | None = None
        for i, a in enumerate(buf):
            for b in buf[i + 1 :]:
                if a < b and b - a - 1 > between(a, b):
                    if gap_lo is None or a < gap_lo:
                        gap_lo = a
                    if gap_hi is None or b > gap_hi:
                        gap_hi = b
        seen = between(gap_lo, gap_hi) if gap_lo is not None else 0

        # part (4): the strip minimum and the highest value after it.
        low = min(buf)
        after = buf[buf.index(low) + 1 :]
        high_after = max(after) if after else None

        self._records.append(
            StripRecord(
                gap_lo=gap_lo,
                gap_hi=gap_hi,
                seen=seen,
                low=low,
                high_after=high_after,
                seen_above=len(after),
            )
        )
        buf.clear()
        self._meter()
        return False

    def _meter(self) -> None:
        cells = 1 + len(self._buffer) + sum(rec.cells() for rec in self._records)
        self._note_space(
            cells,
            buffer=len(self._buffer),
            strips=len(self._records),
        )
