"""Dyck paths, augmented Dyck paths, Dyck patterns and admissibility.

A Dyck path here is a chain of boxes moving one step east ``(x+1, y)`` or
one step south ``(x, y-1)`` at a time, starting and ending on the same
antidiagonal ``x + y == level`` and never dipping below it.  Along any such
chain the content ``x - y`` grows by exactly one per step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotAPartition, NotAPath, NotDyck, Overlap, UncoverableBullet
from .partitions import Box, Partition, boxes, from_boxes


@lru_cache(maxsize=None)
def nne(cells: tuple[Box, ...]) -> frozenset[Box]:
    """Boxes directly N, E or NE of some box in ``cells``."""
    out = set()
    for x, y in cells:
        out.add((x, y + 1))
        out.add((x + 1, y))
        out.add((x + 1, y + 1))
    return frozenset(out)


def _check_dyck(cells: tuple[Box, ...]) -> int:
    if not cells:
        raise NotAPath("a path needs at least one box")
    for x, y in cells:
        if x < 1 or y < 1:
            raise NotAPath(f"box {(x, y)} has a nonpositive coordinate")
    for (x0, y0), (x1, y1) in zip(cells, cells[1:]):
        if (x1, y1) != (x0 + 1, y0) and (x1, y1) != (x0, y0 - 1):
            raise NotAPath(f"{(x1, y1)} does not follow {(x0, y0)} by an east or south step")
    level = sum(cells[0])
    if sum(cells[-1]) != level:
        raise NotDyck(f"endpoints lie on antidiagonals {level} and {sum(cells[-1])}")
    for box in cells:
        if sum(box) < level:
            raise NotDyck(f"box {box} dips below level {level}")
    return level


@dataclass(frozen=True, order=False)
class DyckPath:
    cells: tuple[Box, ...]

    def __post_init__(self):
        cells = tuple((int(x), int(y)) for x, y in self.cells)
        object.__setattr__(self, "cells", cells)
        _check_dyck(cells)

    @property
    def level(self) -> int:
        return sum(self.cells[0])

    @property
    def start(self) -> Box:
        return self.cells[0]

    @property
    def end(self) -> Box:
        return self.cells[-1]

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def sort_key(self):
        x, y = self.start
        return (y, x, len(self.cells))

    def __repr__(self):
        return "DyckPath(" + ",".join(f"({x},{y})" for x, y in self.cells) + ")"


def validate_dyck_path(cells: Sequence[Box]) -> DyckPath:
    """Return a :class:`DyckPath`; raises :class:`NotAPath` or :class:`NotDyck`."""
    return DyckPath(tuple(cells))


def path_corners(path: DyckPath) -> tuple[frozenset[Box], frozenset[Box]]:
    """``(inner, outer)`` corners of ``path``."""
    inner, outer = set(), set()
    cells = path.cells
    for i in range(1, len(cells) - 1):
        (xp, yp), (x, y), (xn, yn) = cells[i - 1], cells[i], cells[i + 1]
        # the chain runs south-east, so "turning" means dx = 1 and dy = -1 overall
        if xn - xp == 1 and yp - yn == 1:
            if xp == x:
                inner.add((x, y))
            elif yp == y:
                outer.add((x, y))
    return frozenset(inner), frozenset(outer)


@dataclass(frozen=True)
class AugmentedDyckPath:
    path: DyckPath
    head: int = 0
    tail: int = 0

    def __post_init__(self):
        if self.head < 0 or self.tail < 0:
            raise ValueError("bullet counts must be nonnegative")
        x1, y1 = self.path.start
        xk, yk = self.path.end
        if x1 - self.head < 1:
            raise NotAPath(f"head of {self.head} bullets runs past column 1")
        if yk - self.tail < 1:
            raise NotAPath(f"tail of {self.tail} bullets runs past row 1")

    @property
    def head_bullets(self) -> frozenset[Box]:
        x1, y1 = self.path.start
        return frozenset((x1 - i, y1) for i in range(1, self.head + 1))

    @property
    def tail_bullets(self) -> frozenset[Box]:
        xk, yk = self.path.end
        return frozenset((xk, yk - i) for i in range(1, self.tail + 1))

    @property
    def bullets(self) -> frozenset[Box]:
        return self.head_bullets | self.tail_bullets

    def __len__(self):
        return len(self.path) + self.head + self.tail


@dataclass(frozen=True)
class PatternSizes:
    dyck_size: int
    bullet_size: int

    @property
    def total(self) -> int:
        return self.dyck_size + self.bullet_size


def decompose_bullets(
    paths: Sequence[DyckPath], bullets: Iterable[Box]
) -> dict[Box, list[tuple[int, str]]]:
    """For each bullet, every ``(path index, "head" | "tail")`` run that can hold it.

    A bullet sits in the head run of a path when it lies west of the path's
    start in the same row with every box in between also a bullet; tail runs
    go south of the path's end in the same column.  The runs may overlap, so
    all feasible assignments are reported.  Raises
    :class:`UncoverableBullet` if some bullet has none.
    """
    bullets = frozenset(bullets)
    assignment: dict[Box, list[tuple[int, str]]] = {b: [] for b in bullets}
    for index, path in enumerate(paths):
        x, y = path.start
        x -= 1
        while (x, y) in bullets:
            assignment[(x, y)].append((index, "head"))
            x -= 1
        x, y = path.end
        y -= 1
        while (x, y) in bullets:
            assignment[(x, y)].append((index, "tail"))
            y -= 1
    for bullet in sorted(bullets, key=lambda b: (b[1], b[0])):
        if not assignment[bullet]:
            raise UncoverableBullet(f"bullet {bullet} is in no head or tail run", witness=bullet)
    return assignment


@dataclass(frozen=True)
class DyckPattern:
    """Disjoint Dyck paths plus a set of bullet boxes.

    Paths are stored in canonical order (start row, start column, length),
    so equality ignores the order they were given in.
    """

    paths: tuple[DyckPath, ...] = ()
    bullets: frozenset[Box] = field(default_factory=frozenset)

    def __post_init__(self):
        paths = tuple(p if isinstance(p, DyckPath) else DyckPath(tuple(p)) for p in self.paths)
        paths = tuple(sorted(paths, key=DyckPath.sort_key))
        bullets = frozenset((int(x), int(y)) for x, y in self.bullets)
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "bullets", bullets)
        seen: set[Box] = set()
        for path in paths:
            for box in path.cells:
                if box in seen:
                    raise Overlap(f"box {box} used twice", witness=box)
                seen.add(box)
        clash = seen & bullets
        if clash:
            box = min(clash)
            raise Overlap(f"bullet {box} lies on a path", witness=box)
        decompose_bullets(paths, bullets)

    @classmethod
    def _trusted(cls, paths: tuple[DyckPath, ...], bullets: frozenset[Box] = frozenset()):
        # skip validation for objects built by the enumerators
        obj = object.__new__(cls)
        object.__setattr__(obj, "paths", tuple(sorted(paths, key=DyckPath.sort_key)))
        object.__setattr__(obj, "bullets", bullets)
        return obj

    def sizes(self) -> PatternSizes:
        return PatternSizes(sum(len(p) for p in self.paths), len(self.bullets))

    @property
    def d(self) -> int:
        return sum(len(p) for p in self.paths)

    @property
    def b(self) -> int:
        return len(self.bullets)

    def __len__(self):
        return self.d + self.b

    def without_bullets(self) -> "DyckPattern":
        return DyckPattern._trusted(self.paths)

    def to_json(self) -> dict:
        return {
            "paths": [[list(c) for c in p.cells] for p in self.paths],
            "bullets": [list(b) for b in sorted(self.bullets, key=lambda b: (b[1], b[0]))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DyckPattern":
        return cls(
            tuple(DyckPath(tuple(tuple(c) for c in p)) for p in data.get("paths", [])),
            frozenset(tuple(b) for b in data.get("bullets", [])),
        )


def support(pattern: DyckPattern) -> frozenset[Box]:
    cells = set(pattern.bullets)
    for path in pattern.paths:
        cells.update(path.cells)
    return frozenset(cells)


def _union_with(p: Partition, cells: frozenset[Box]) -> Partition:
    base = boxes(p)
    clash = base & cells
    if clash:
        box = min(clash)
        raise Overlap(f"box {box} already lies in {p}", witness=box)
    return from_boxes(base | cells)


def lambda_of(p: Partition, pattern: DyckPattern) -> Partition:
    """``p`` together with the support of ``pattern``, as a partition."""
    return _union_with(Partition(p), support(pattern))


def lambda_of_bullets(p: Partition, pattern: DyckPattern) -> Partition:
    """``p`` together with the bullets of ``pattern``, as a partition."""
    return _union_with(Partition(p), pattern.bullets)


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    condition: int | None = None
    witness: Box | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_admissible(p: Partition, pattern: DyckPattern) -> Admissibility:
    """Check the four admissibility conditions in order; report the first failure."""
    p = Partition(p)
    supp = support(pattern)
    for x, y in sorted(supp, key=lambda b: (b[1], b[0])):
        if x <= p.row(y):
            return Admissibility(False, 1, (x, y), f"box {(x, y)} lies inside {p}")
    try:
        from_boxes(boxes(p) | supp)
    except NotAPartition as exc:
        return Admissibility(False, 2, None, f"union is not a partition: {exc}")
    paths = pattern.paths
    cells = [frozenset(path.cells) for path in paths]
    around = [nne(path.cells) for path in paths]
    for i in range(len(paths)):
        for j in range(len(paths)):
            if i == j or not (around[i] & cells[j]):
                continue
            stray = around[i] - cells[i] - cells[j]
            if stray:
                box = min(stray, key=lambda b: (b[1], b[0]))
                return Admissibility(
                    False, 3, box,
                    f"path {paths[j]!r} touches {paths[i]!r} but {box} lies in neither",
                )
    for i, path in enumerate(paths):
        hit = around[i] & pattern.bullets
        if hit:
            box = min(hit, key=lambda b: (b[1], b[0]))
            return Admissibility(False, 4, box, f"bullet {box} sits N/E/NE of {path!r}")
    return Admissibility(True)
