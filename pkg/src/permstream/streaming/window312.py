"""One-pass 312 detector with a value window and disjoint decreasing pairs.

The detector keeps three things while scanning a permutation of [1..n]:

* ``h`` -- the highest value read so far (with its position);
* ``A`` -- exactly the values read that lie in the window (h-k, h], a set of
  at most k values, logically a k-wide bit-array anchored at h;
* ``D`` -- decreasing pairs (a, b) with a - b >= k whose value intervals
  [b, a] are pairwise disjoint, so at most ceil(n/k) of them fit in [1..n].

Each push runs four steps: report if the new value lands strictly inside a
stored pair; grow the window when a new maximum arrives; inside the window,
either report (using a value that is provably still unread -- a *future*
witness) or record the value; below the window, replace any pairs the new
value undercuts with the single wider pair (h, value).

With k ~ sqrt(n log2 n) both structures stay within O(sqrt(n log2 n)) bits.
The permutation promise is essential: future witnesses count on every
unread window value eventually arriving.
"""

from __future__ import annotations

import math

from ..core import Occurrence, StreamMode, classify_pattern
from .base import Detector


def default_window(n: int) -> int:
    """The window width k = max(1, floor(sqrt(n * log2 n)))."""
    return max(1, math.isqrt(int(n * math.log2(n))) if n > 1 else 1)


class Detector312(Detector):
    """Streaming detector for the pattern 312 on permutation streams."""

    def __init__(self, n: int, mode: StreamMode = StreamMode.PERMUTATION, k: int | None = None) -> None:
        if mode is not StreamMode.PERMUTATION:
            raise ValueError("Detector312 requires a permutation stream")
        super().__init__(classify_pattern((3, 1, 2)), n, mode)
        if k is None:
            k = default_window(n)
        if k < 1:
            raise ValueError(f"window width must be at least 1, got k={k}")
        self.k = k
        self.bit_array_bits = k
        self._h = 0
        self._h_pos = 0
        self._window: set[int] = set()
        # pair entries (a, b, position of a, position of b)
        self._pairs: list[tuple[int, int, int, int]] = []

    # read-only views for the invariant checker and tests
    @property
    def h(self) -> int:
        return self._h

    @property
    def window_values(self) -> frozenset[int]:
        return frozenset(self._window)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b, _, _ in self._pairs)

    def _step(self, v: int) -> bool:
        pos = self.pushes
        if self.pushes == 1:
            self._h = v
            self._h_pos = pos
            self._window.add(v)
            self._meter()
            return False

        # (1) v strictly inside a stored pair completes it.
        for a, b, pa, pb in self._pairs:
            if a > v > b:
                return self._accept(
                    Occurrence(positions=(pa, pb, pos), values=(a, b, v))
                )

        if v > self._h:
            # (2) new maximum: slide the window up to (v-k, v].
            cut = v - self.k
            self._window = {x for x in self._window if x > cut}
            self._window.add(v)
            self._h = v
            self._h_pos = pos
        elif v > self._h - self.k:
            # (3) v lands in the window.  Any window value still missing
            # above v must arrive later and completes (h, v, missing).
            c = self._largest_missing_above(v)
            if c is not None:
                return self._accept(
                    Occurrence(positions=(self._h_pos, pos, None), values=(self._h, v, c))
                )
            self._window.add(v)
        else:
            # (4) v undercuts the window: merge any pairs it is below into
            # the single wider pair (h, v).
            self._pairs = [entry for entry in self._pairs if entry[1] < v]
            self._pairs.append((self._h, v, self._h_pos, pos))

        self._meter()
        return False

    def _largest_missing_above(self, v: int) -> int | None:
        for cand in range(self._h - 1, v, -1):
            if cand not in self._window:
                return cand
        return None

    def _meter(self) -> None:
        # h with its position is one stored point; the running index is one
        # value; each pair entry keeps a value pair and a position pair.
        self._note_space(
            2 + 2 * len(self._pairs),
            A=len(self._window),
            D=len(self._pairs),
        )
