"""Core types and order-isomorphism primitives for permutation pattern matching.

A *pattern* is a permutation of [1..k].  A *stream instance* is a sequence of
distinct integers drawn from the universe [1..n], delivered one value at a
time.  Two sequences are *order-isomorphic* when their values appear in the
same relative order; a stream *contains* a pattern when some subsequence of
the stream is order-isomorphic to it.

Streams come in two flavours:

* ``StreamMode.PERMUTATION`` -- the stream is promised to be a permutation of
  [1..n] (exactly n values, each value once).
* ``StreamMode.DISTINCT_SEQUENCE`` -- the stream is any sequence of distinct
  values from [1..n]; it may be shorter than n.

This module also defines the on-disk stream file format used by the CLI:

.. code-block:: text

    # optional comment lines
    n=18 mode=seq
    3 1 9 7 15 13 18 16 14 8 5

The header declares the universe size and the mode (``perm`` or ``seq``);
the remaining whitespace-separated tokens are the stream values.  Comment
lines start with ``#`` and may carry provenance or segment annotations such
as ``# segment alice 1 8``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class StreamMode(enum.Enum):
    """How much the stream promises about its contents."""

    PERMUTATION = "perm"
    DISTINCT_SEQUENCE = "seq"

    @classmethod
    def from_token(cls, token: str) -> "StreamMode":
        for mode in cls:
            if mode.value == token:
                return mode
        raise ValueError(f"unknown stream mode {token!r} (expected 'perm' or 'seq')")


class PatternKind(enum.Enum):
    """Coarse classification used by the detector dispatch table."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    NONMONOTONE3 = "nonmonotone3"
    OTHER = "other"


@dataclass(frozen=True)
class Pattern:
    """A pattern permutation together with its dispatch classification.

    Build instances through :func:`classify_pattern` or :func:`parse_pattern`;
    the constructor checks that ``values`` really is a permutation of [1..k]
    and that ``kind`` matches.
    """

    values: tuple[int, ...]
    kind: PatternKind

    def __post_init__(self) -> None:
        k = len(self.values)
        if k == 0:
            raise ValueError("pattern must have at least one value")
        if sorted(self.values) != list(range(1, k + 1)):
            raise ValueError(f"pattern {self.values} is not a permutation of 1..{k}")
        if self.kind is not _kind_of(self.values):
            raise ValueError(f"pattern {self.values} has kind {_kind_of(self.values)}, not {self.kind}")

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        if len(self.values) <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)


def _kind_of(values: Sequence[int]) -> PatternKind:
    k = len(values)
    if tuple(values) == tuple(range(1, k + 1)):
        return PatternKind.INCREASING
    if tuple(values) == tuple(range(k, 0, -1)):
        return PatternKind.DECREASING
    if k == 3:
        return PatternKind.NONMONOTONE3
    return PatternKind.OTHER


def classify_pattern(values: Sequence[int]) -> Pattern:
    """Validate ``values`` as a pattern and attach its :class:`PatternKind`.

    >>> classify_pattern((1, 2, 3)).kind
    <PatternKind.INCREASING: 'increasing'>
    >>> classify_pattern((3, 1, 2)).kind
    <PatternKind.NONMONOTONE3: 'nonmonotone3'>
    >>> classify_pattern((4, 2, 3, 1)).kind
    <PatternKind.OTHER: 'other'>
    """
    return Pattern(tuple(values), _kind_of(values))


def parse_pattern(text: str) -> Pattern:
    """Parse a CLI pattern argument.

    Two spellings are accepted: compact digits for short patterns ("4231")
    and comma-separated values for any length ("10,3,2,1,4,5,6,7,8,9").

    >>> parse_pattern("312").values
    (3, 1, 2)
    >>> parse_pattern("2,1").values
    (2, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty pattern")
    if "," in text:
        values = tuple(int(part) for part in text.split(","))
    elif text.isdigit():
        values = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse pattern {text!r}: use digits ('312') or commas ('3,1,2')")
    return classify_pattern(values)


@dataclass(frozen=True)
class StreamInstance:
    """A concrete stream: universe size, mode, and the values in order.

    The constructor is permissive so that malformed candidate streams can be
    represented and then rejected; use :func:`validate_stream` /
    :func:`stream_violation` before trusting an instance.
    """

    n: int
    mode: StreamMode
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


def stream_violation(inst: StreamInstance) -> str | None:
    """Return a human-readable reason the instance is malformed, or None."""
    if inst.n < 1:
        return f"universe size must be at least 1, got n={inst.n}"
    if inst.mode is StreamMode.PERMUTATION and len(inst.elements) != inst.n:
        return (
            f"permutation mode requires exactly n={inst.n} values, "
            f"got {len(inst.elements)}"
        )
    seen: set[int] = set()
    for pos, value in enumerate(inst.elements, start=1):
        if not isinstance(value, int) or isinstance(value, bool):
            return f"non-integer value {value!r} at position {pos}"
        if not 1 <= value <= inst.n:
            return f"value {value} out of range [1, {inst.n}] at position {pos}"
        if value in seen:
            return f"duplicate value {value} at position {pos}"
        seen.add(value)
    return None


def validate_stream(inst: StreamInstance) -> bool:
    """True when the instance satisfies its declared mode's promises."""
    return stream_violation(inst) is None


class Point(NamedTuple):
    """A stream element viewed as a point: x is the 1-based position, y the value."""

    x: int
    y: int


@dataclass(frozen=True)
class Occurrence:
    """A witness that a stream contains a pattern.

    ``positions`` are 1-based stream indices, strictly increasing.  The final
    position may be ``None``, marking a *future* witness: the detector has
    proven that some not-yet-read value must complete the occurrence, and
    ``values`` records which value that is.  Only the last position may be
    ``None``.
    """

    positions: tuple[int | None, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.positions) != len(self.values):
            raise ValueError("positions and values must have equal length")
        known = [p for p in self.positions if p is not None]
        if None in self.positions[:-1]:
            raise ValueError("only the final position may be a future marker")
        if any(b <= a for a, b in zip(known, known[1:])):
            raise ValueError(f"positions must be strictly increasing, got {self.positions}")
        if any(p is not None and p < 1 for p in self.positions):
            raise ValueError("positions are 1-based")

    @property
    def has_future(self) -> bool:
        return bool(self.positions) and self.positions[-1] is None


def is_order_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``a`` and ``b`` have the same length and relative order.

    >>> is_order_isomorphic((4, 2, 3, 1), (18, 8, 10, 6))
    True
    >>> is_order_isomorphic((1, 2), (2, 1))
    False
    """
    if len(a) != len(b):
        return False
    return all(
        (a[i] < a[j]) == (b[i] < b[j])
        for i in range(len(a))
        for j in range(i + 1, len(a))
    )


def complement(values: Sequence[int], n: int) -> tuple[int, ...]:
    """Map each value v to n+1-v, turning ascents into descents and back.

    Complementing is an involution, and a stream contains a pattern exactly
    when the complemented stream contains the complemented pattern.  The
    detector dispatch table leans on both facts.

    >>> complement((3, 1, 2), 3)
    (1, 3, 2)
    """
    out = []
    for v in values:
        if not 1 <= v <= n:
            raise ValueError(f"value {v} outside universe [1, {n}]")
        out.append(n + 1 - v)
    return tuple(out)


def reverse(values: Sequence[int]) -> tuple[int, ...]:
    """The sequence read right to left (the other classical symmetry)."""
    return tuple(reversed(values))


def rank_normalize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace each value by its 1-based rank within the sequence.

    The result is the unique pattern order-isomorphic to ``values``.

    >>> rank_normalize((18, 8, 10, 6))
    (4, 2, 3, 1)
    """
    if len(set(values)) != len(values):
        raise ValueError("rank normalization requires distinct values")
    rank = {v: i for i, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


# ---------------------------------------------------------------------------
# Stream file format
# ---------------------------------------------------------------------------

_VALUES_PER_LINE = 20


def format_stream_text(
    inst: StreamInstance,
    segments: Iterable[tuple[str, int, int]] = (),
    comments: Iterable[str] = (),
) -> str:
    """Render an instance in the stream file format.

    ``segments`` are (owner, start, end) annotations written as comments;
    ``comments`` are free-form provenance lines.
    """
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"n={inst.n} mode={inst.mode.value}")
    for owner, start, end in segments:
        lines.append(f"# segment {owner} {start} {end}")
    values = inst.elements
    for i in range(0, len(values), _VALUES_PER_LINE):
        lines.append(" ".join(str(v) for v in values[i : i + _VALUES_PER_LINE]))
    return "\n".join(lines) + "\n"


def parse_stream_text(text: str) -> StreamInstance:
    """Parse the stream file format.  Raises ValueError on malformed input."""
    header: str | None = None
    tokens: list[str] = []
    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
        else:
            tokens.extend(line.split())
    if header is None:
        raise ValueError("missing stream header line 'n=<int> mode=<perm|seq>'")
    parts = header.split()
    if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("mode="):
        raise ValueError(f"malformed header {header!r} (expected 'n=<int> mode=<perm|seq>')")
    try:
        n = int(parts[0][2:])
    except ValueError:
        raise ValueError(f"malformed universe size in header {header!r}") from None
    mode = StreamMode.from_token(parts[1][5:])
    try:
        elements = tuple(int(tok) for tok in tokens)
    except ValueError as exc:
        raise ValueError(f"non-integer stream value: {exc}") from None
    return StreamInstance(n=n, mode=mode, elements=elements)


def read_stream_file(path: str) -> StreamInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_stream_text(fh.read())


def write_stream_file(
    path: str,
    inst: StreamInstance,
    segments: Iterable[tuple[str, int, int]] = (),
    comments: Iterable[str] = (),
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_stream_text(inst, segments=segments, comments=comments))
