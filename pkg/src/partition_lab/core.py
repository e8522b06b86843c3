"""Integer partitions and their scalar statistics.

A partition is stored once, canonically, as a non-increasing tuple of
positive integers.  Every statistic here is a pure function of that tuple,
so values are safe to share between threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


class Partition:
    """A partition of a nonnegative integer.

    Accepts parts in any order and stores them non-increasing; the empty
    partition represents zero.  Instances are immutable by convention and
    hashable.
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ordered = tuple(sorted(parts, reverse=True))
        for part in ordered:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
        self.parts = ordered

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def multiplicity(self, j: int) -> int:
        """Number of parts equal to ``j``."""
        if j < 1:
            raise ValueError("part values are positive")
        return self.parts.count(j)

    def is_strict(self) -> bool:
        """True when no part repeats."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def is_odd_parts(self) -> bool:
        """True when every part is odd."""
        return all(part % 2 for part in self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "+".join(str(part) for part in self.parts) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def parse(text: str) -> Partition:
    """Parse a ``7+6+6+5+1+1`` literal; "" or "0" is the empty partition.

    Parts must be listed non-increasing; superscript shorthand is rejected.
    """
    body = text.strip()
    if body in ("", "0"):
        return Partition()
    parts = []
    for token in body.split("+"):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise ValueError(f"bad part {token!r} in partition literal {text!r}")
        parts.append(int(token))
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"partition literal must be non-increasing: {text!r}")
    return Partition(parts)


def union(p: Partition, r: Partition) -> Partition:
    """Multiset union of the parts of two partitions."""
    return Partition(p.parts + r.parts)


def runs(p: Partition) -> tuple[tuple[int, ...], ...]:
    """Maximal blocks of consecutive integers among the parts, largest first.

    Defined on strict partitions only; concatenating the blocks gives back
    the part list.
    """
    if not p.is_strict():
        dup = next(a for a, b in zip(p.parts, p.parts[1:]) if a == b)
        raise ValueError(f"runs requires distinct parts, part {dup} repeats")
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for part in p.parts:
        if current and current[-1] - part != 1:
            blocks.append(tuple(current))
            current = []
        current.append(part)
    if current:
        blocks.append(tuple(current))
    return tuple(blocks)


def sol(p: Partition) -> int:
    """Number of odd-length runs of consecutive parts in a strict partition."""
    return sum(1 for block in runs(p) if len(block) % 2)


def k_measure(p: Partition, k: int) -> int:
    """Longest subsequence of parts with pairwise differences at least ``k``.

    Greedy from the largest part; on a sorted list this greedy choice is
    optimal (cross-checked against exhaustive search in the test suite).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    count = 0
    last: int | None = None
    for part in p.parts:
        if last is None or last - part >= k:
            count += 1
            last = part
    return count


def parity_index(values: Sequence[int]) -> int:
    """Number of parity switches scanning ``0, s_1, ..., s_l`` left to right."""
    switches = 0
    prev = 0
    for value in values:
        if (value - prev) % 2:
            switches += 1
        prev = value
    return switches


def partitions(
    n: int, *, max_part: int | None = None, distinct: bool = False
) -> Iterator[Partition]:
    """Yield every partition of ``n`` in reverse-lexicographic order.

    ``max_part`` caps the largest part; ``distinct`` restricts to strict
    partitions.  The stream is deterministic.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    stack: list[int] = []

    def emit(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(stack)
            return
        for part in range(min(cap, remaining), 0, -1):
            stack.append(part)
            yield from emit(remaining - part, part - 1 if distinct else part)
            stack.pop()

    yield from emit(n, cap)
