"""Partitions as weakly decreasing tuples and as sets of boxes.

Boxes are indexed ``(x, y)`` by the upper-right corner of the unit square,
so ``x`` is the column and ``y`` the row, both starting at 1.  Row ``y`` of
a partition ``p`` holds the boxes ``(1, y), ..., (p[y-1], y)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import NotAPartition

Box = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    and ``Partition((3, 1))`` are the same value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotAPartition(f"parts must be weakly decreasing, got {tuple(parts)}")
        if parts and parts[-1] < 0:
            raise NotAPartition(f"parts must be nonnegative, got {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def row(self, y: int) -> int:
        """Length of row ``y`` (1-based); zero past the last part."""
        return self[y - 1] if 1 <= y <= len(self) else 0

    def boxes(self) -> frozenset[Box]:
        return boxes(self)

    def corners(self) -> frozenset[Box]:
        return corners(self)

    # comparison operators stay lexicographic so partitions sort as tuples;
    # the containment order is leq()

    def __or__(self, other):
        return union(self, other)


def leq(a: Iterable[int], b: Iterable[int]) -> bool:
    """Componentwise order; missing parts read as zero."""
    a, b = tuple(a), tuple(b)
    if len(a) > len(b) and any(a[len(b):]):
        return False
    return all(x <= y for x, y in zip(a, b))


def corners(p: Iterable[int]) -> frozenset[Box]:
    p = tuple(p)
    padded = p + (0,)
    return frozenset((p[j], j + 1) for j in range(len(p)) if padded[j] > padded[j + 1])


def boxes(p: Iterable[int]) -> frozenset[Box]:
    return frozenset((x, y) for y, length in enumerate(p, start=1) for x in range(1, length + 1))


def from_boxes(cells: Iterable[Box]) -> Partition:
    """Inverse of :func:`boxes`; raises :class:`NotAPartition` on a non-diagram."""
    cells = set(cells)
    rows: dict[int, int] = {}
    for x, y in cells:
        if x < 1 or y < 1:
            raise NotAPartition(f"box {(x, y)} has a nonpositive coordinate")
        rows[y] = max(rows.get(y, 0), x)
    height = max(rows, default=0)
    parts = []
    for y in range(1, height + 1):
        length = rows.get(y, 0)
        if length == 0:
            raise NotAPartition(f"row {y} is empty below a nonempty row")
        if sum(1 for x in range(1, length + 1) if (x, y) in cells) != length:
            missing = next(x for x in range(1, length + 1) if (x, y) not in cells)
            raise NotAPartition(f"row {y} is missing box {(missing, y)}")
        if parts and length > parts[-1]:
            raise NotAPartition(f"row {y} is longer than row {y - 1}")
        parts.append(length)
    return Partition(parts)


def union(a: Iterable[int], b: Iterable[int]) -> Partition:
    a, b = tuple(a), tuple(b)
    k = max(len(a), len(b))
    a, b = a + (0,) * (k - len(a)), b + (0,) * (k - len(b))
    return Partition(max(x, y) for x, y in zip(a, b))


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    return Partition(sum(1 for part in p if part > i) for i in range(p[0] if p else 0))


def hook(p: Iterable[int], x: int, y: int) -> int:
    p = tuple(p)
    arm = p[y - 1] - x
    leg = sum(1 for part in p[y:] if part >= x)
    return arm + leg + 1


def schur_dim(p: Iterable[int], k: int) -> int:
    """Dimension of the Schur functor ``S_p`` applied to ``C^k``.

    Hook-content formula with exact rational intermediates; the quotient is
    integral only as a whole product.
    """
    p = tuple(p)
    if len(p) > k:
        return 0
    value = Fraction(1)
    for y, length in enumerate(p, start=1):
        for x in range(1, length + 1):
            value *= Fraction(k + x - y, hook(p, x, y))
    assert value.denominator == 1, f"non-integral dimension {value} for {p}, k={k}"
    return int(value)


_PART_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"(4,3,1,1)"``, ``"(3^3,1^2)"``, ``"()"`` or a bare ``"4,3,1,1"``."""
    body = text.strip()
    if body[:1] in "([" and body[-1:] in ")]":
        body = body[1:-1]
    parts: list[int] = []
    if body.strip():
        for token in body.split(","):
            match = _PART_RE.match(token)
            if not match:
                raise NotAPartition(f"cannot parse {token!r} in {text!r}")
            value, exponent = int(match.group(1)), int(match.group(2) or 1)
            parts.extend([value] * exponent)
    return Partition(parts)


def partitions_between(
    inner: Iterable[int], size: int, max_rows: int, max_cols: int | None = None
) -> Iterator[Partition]:
    """All partitions ``mu >= inner`` with ``|mu| == size`` and at most ``max_rows`` rows.

    ``max_cols`` optionally bounds the first part.
    """
    inner = tuple(inner) + (0,) * max(0, max_rows - len(tuple(inner)))
    if len(Partition(inner)) > max_rows:
        return

    def rec(y: int, cap: int, remaining: int, acc: list[int]):
        if y == max_rows:
            if remaining == 0:
                yield Partition(acc)
            return
        low = inner[y]
        # later rows can absorb at most (rows left) * (this row's length)
        for length in range(min(cap, low + remaining), low - 1, -1):
            rest = remaining - (length - low)
            if rest > (max_rows - y - 1) * length:
                break
            acc.append(length)
            yield from rec(y + 1, length, rest, acc)
            acc.pop()

    top = size if max_cols is None else max_cols
    yield from rec(0, top, size - sum(inner), [])


def partitions_in_region(inner: Iterable[int], max_rows: int, max_cols: int) -> Iterator[Partition]:
    """All partitions ``mu >= inner`` fitting in a ``max_rows`` by ``max_cols`` box."""
    inner = tuple(inner) + (0,) * max(0, max_rows - len(tuple(inner)))
    if len(Partition(inner)) > max_rows or (inner and inner[0] > max_cols):
        return

    def rec(y: int, cap: int, acc: list[int]):
        if y == max_rows:
            yield Partition(acc)
            return
        for length in range(inner[y], cap + 1):
            acc.append(length)
            yield from rec(y + 1, length, acc)
            acc.pop()

    yield from rec(0, max_cols, [])
