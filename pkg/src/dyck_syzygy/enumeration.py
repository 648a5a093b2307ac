"""Exhaustive enumeration of the pattern families behind the main formulas.

Kac families (bullet-free, singletons allowed) are generated by growing
patterns one Dyck path at a time.  A Dyck path that can be added to a
partition ``nu`` while keeping it a partition is a border strip of ``nu``
whose two ends share an antidiagonal; given its top and bottom rows the
strip is fixed, so there are at most ``n * (n + 1) / 2`` candidates per step.

Completeness: say path ``Q`` *leans on* ``P`` when ``Q`` holds a box
directly N, E or NE of a box of ``P``.  In an admissible pattern this
relation is acyclic (a cycle would make the union of its paths closed under
taking N neighbours), every box whose W or S neighbour lies on another path
leans on that path, and admissibility is inherited by subsets closed under
leaning.  Adding paths in a linear extension of the relation therefore
reaches every admissible pattern through admissible patterns only.

Syzygy families add bullets: writing ``mu = lam + bullets``, a pattern is
admissible for ``lam`` exactly when ``mu`` is a partition, its paths form a
``mu``-admissible bullet-free pattern, no bullet sits N/E/NE of a path, and
every bullet lies in a head or tail run.  Row 1 can only hold tail bullets,
one column per path, which bounds ``mu[0] - lam[0]`` by the number of paths.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .dyck import DyckPath, DyckPattern, decompose_bullets, is_admissible, lambda_of_bullets, nne
from .errors import RegionOverflow, UncoverableBullet
from .partitions import Box, Partition, boxes, corners, leq, partitions_between, partitions_in_region

log = logging.getLogger(__name__)

KAC = "KacFactors"
SYZYGY = "SyzygyPatterns"
BSIDE = "BSide"

# how many times the syzygy search region may double before giving up
_MAX_DOUBLINGS = 6


def _row(rows: Sequence[int], y: int) -> int:
    return rows[y - 1] if y <= len(rows) else 0


def dyck_strips(rows: Sequence[int], n: int) -> Iterator[tuple[Box, ...]]:
    """Dyck paths that can be added to the partition ``rows`` within ``n`` rows."""
    for top in range(1, n + 1):
        level = _row(rows, top) + 1 + top
        for bot in range(top, 0, -1):
            x_end = level - bot
            if x_end <= _row(rows, bot):
                continue
            if bot > 1 and x_end > _row(rows, bot - 1):
                continue
            cells = []
            for y in range(top, bot - 1, -1):
                x_out = _row(rows, y - 1) + 1 if y > bot else x_end
                for x in range(_row(rows, y) + 1, x_out + 1):
                    cells.append((x, y))
            if all(x + y >= level for x, y in cells):
                yield tuple(cells)


def _grow(rows: tuple[int, ...], cells: Iterable[Box]) -> tuple[int, ...]:
    out = list(rows)
    for x, y in cells:
        while len(out) < y:
            out.append(0)
        if x > out[y - 1]:
            out[y - 1] = x
    return tuple(out)


def _compatible(new: tuple[Box, ...], state: Iterable[tuple[Box, ...]]) -> bool:
    new_cells = frozenset(new)
    new_around = nne(new)
    for old in state:
        old_cells = frozenset(old)
        old_around = nne(old)
        if old_around & new_cells and not old_around <= old_cells | new_cells:
            return False
        if new_around & old_cells and not new_around <= new_cells | old_cells:
            return False
    return True


@lru_cache(maxsize=None)
def kac_states(
    rows: tuple[int, ...], n: int, size_bound: int, min_len: int = 1
) -> tuple[frozenset[tuple[Box, ...]], ...]:
    """All bullet-free admissible path sets for ``rows`` as sets of cell tuples.

    Only paths of length ``>= min_len`` are used, and the total number of
    path boxes is at most ``size_bound``.
    """
    empty: frozenset[tuple[Box, ...]] = frozenset()
    seen = {empty}
    found = [empty]
    stack = [(empty, tuple(rows), 0)]
    while stack:
        state, nu, used = stack.pop()
        for strip in dyck_strips(nu, n):
            if len(strip) < min_len or used + len(strip) > size_bound:
                continue
            if not _compatible(strip, state):
                continue
            grown = state | {strip}
            if grown in seen:
                continue
            seen.add(grown)
            found.append(grown)
            stack.append((grown, _grow(nu, strip), used + len(strip)))
    return tuple(found)


@lru_cache(maxsize=None)
def kac_labels(rows: tuple[int, ...], n: int, size_bound: int | None = None) -> tuple[tuple[Partition, int], ...]:
    """Label multiset of the Kac family of ``rows`` as sorted ``(label, multiplicity)`` pairs."""
    bound = n * n if size_bound is None else size_bound
    counts = Counter(Partition(_grow(rows, (c for path in state for c in path))) for state in kac_states(rows, n, bound))
    return tuple(sorted(counts.items(), key=lambda kv: (sum(kv[0]), tuple(kv[0]))))


def pattern_key(pattern: DyckPattern):
    return (
        tuple(p.cells for p in pattern.paths),
        tuple(sorted(pattern.bullets, key=lambda b: (b[1], b[0]))),
    )


@dataclass(frozen=True)
class FamilyMember:
    pattern: DyckPattern
    label: Partition
    mu: Partition | None = None

    @property
    def d(self) -> int:
        return self.pattern.d

    def to_json(self, base: Partition | None = None) -> dict:
        out = {
            "pattern": self.pattern.to_json(),
            "label": list(self.label),
            "d": self.pattern.d,
            "b": self.pattern.b if self.mu is None or base is None else self.mu.size() - base.size(),
        }
        if self.mu is not None:
            out["mu"] = list(self.mu)
        return out


@dataclass
class PatternFamily:
    base: Partition
    n: int
    kind: str
    members: list[FamilyMember] = field(default_factory=list)

    def labels(self) -> Counter:
        return Counter(m.label for m in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def by_bullet_size(self) -> dict[int, list[FamilyMember]]:
        out: dict[int, list[FamilyMember]] = {}
        for member in self.members:
            out.setdefault(member.pattern.b, []).append(member)
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "n": self.n,
            "kind": self.kind,
            "members": [m.to_json(self.base) for m in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PatternFamily":
        members = [
            FamilyMember(
                DyckPattern.from_json(m["pattern"]),
                Partition(m["label"]),
                Partition(m["mu"]) if "mu" in m else None,
            )
            for m in data["members"]
        ]
        return cls(Partition(data["base"]), data["n"], data["kind"], members)


def _sorted_members(members: Iterable[FamilyMember]) -> list[FamilyMember]:
    return sorted(
        members,
        key=lambda m: (m.label.size(), tuple(m.label), tuple(m.mu or ()), pattern_key(m.pattern)),
    )


def _checked(base: Partition, pattern: DyckPattern) -> DyckPattern:
    verdict = is_admissible(base, pattern)
    if not verdict:
        raise AssertionError(f"enumerator produced a non-admissible pattern for {base}: {verdict.reason}")
    return pattern


def _pattern_from_state(state, bullets=frozenset()) -> DyckPattern:
    return DyckPattern._trusted(tuple(DyckPath(cells) for cells in state), frozenset(bullets))


def _require_fits(lam: Partition, n: int):
    if lam.length() > n:
        raise ValueError(f"{lam} has more than n={n} rows")


def enumerate_kac_patterns(lam: Iterable[int], n: int, size_bound: int | None = None) -> PatternFamily:
    """Bullet-free admissible patterns with at most ``n`` rows and Dyck size ``<= size_bound``.

    The default bound ``n * n`` is exact: every pattern indexes a composition
    factor of a module spread over ``n * n + 1`` consecutive degrees.
    """
    lam = Partition(lam)
    _require_fits(lam, n)
    bound = n * n if size_bound is None else size_bound
    members = []
    for state in kac_states(tuple(lam), n, bound):
        pattern = _checked(lam, _pattern_from_state(state))
        members.append(FamilyMember(pattern, Partition(_grow(tuple(lam), (c for p in state for c in p)))))
    family = PatternFamily(lam, n, KAC, _sorted_members(members))
    repeated = [label for label, k in family.labels().items() if k > 1]
    if repeated:
        log.warning("Kac family of %s (n=%d) repeats labels %s", lam, n, repeated)
    return family


def _syzygy_members_for(lam: Partition, mu: Partition, n: int) -> list[FamilyMember]:
    bullets = boxes(mu) - boxes(lam)
    members = []
    for state in kac_states(tuple(mu), n, n * n, 3):
        around = frozenset().union(*(nne(p) for p in state)) if state else frozenset()
        if around & bullets:
            continue
        pattern = _pattern_from_state(state, bullets)
        try:
            decompose_bullets(pattern.paths, bullets)
        except UncoverableBullet:
            continue
        label = Partition(_grow(tuple(mu), (c for p in state for c in p)))
        members.append(FamilyMember(_checked(lam, pattern), label))
    return members


def _map(func, items, jobs: int):
    if jobs <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


def syzygy_width(n: int) -> int:
    """Initial column allowance past ``lam[0]`` for the bullet region."""
    return max(2 * n, n * n // 3 + 1)


def enumerate_syzygy_patterns(lam: Iterable[int], n: int, jobs: int = 1) -> PatternFamily:
    """Admissible augmented patterns whose paths all have length at least 3.

    Candidates ``mu = lam + bullets`` are scanned inside a region of columns
    ``1 .. lam[0] + W``; if any member reaches the last column, ``W`` doubles.
    """
    lam = Partition(lam)
    _require_fits(lam, n)
    width = syzygy_width(n)
    for _ in range(_MAX_DOUBLINGS):
        edge = lam.row(1) + width
        candidates = list(partitions_in_region(lam, n, edge))
        chunks = _map(lambda mu: _syzygy_members_for(lam, mu, n), candidates, jobs)
        members = [m for chunk in chunks for m in chunk]
        if all(lambda_of_bullets(lam, m.pattern).row(1) < edge for m in members):
            return PatternFamily(lam, n, SYZYGY, _sorted_members(members))
        log.info("syzygy region for %s touched column %d; doubling", lam, edge)
        width *= 2
    raise RegionOverflow(f"syzygy search for {lam} (n={n}) did not stabilize")


def _corner_exempt(corner: Box, state) -> bool:
    """True when a corner of mu must belong to lam under the B-side rule."""
    a, c = corner
    around = {(a, c + 1), (a + 1, c), (a + 1, c + 1)}
    if any(around <= set(path) for path in state):
        return True
    supp = {cell for path in state for cell in path}
    return not (around & supp)


def _b_side_members_for(lam: Partition, mu: Partition, n: int) -> list[FamilyMember]:
    lam_boxes = boxes(lam)
    new_corners = [c for c in corners(mu) if c not in lam_boxes]
    members = []
    for state in kac_states(tuple(mu), n, n * n, 3):
        if any(_corner_exempt(c, state) for c in new_corners):
            continue
        pattern = _checked(mu, _pattern_from_state(state))
        label = Partition(_grow(tuple(mu), (c for p in state for c in p)))
        members.append(FamilyMember(pattern, label, mu))
    return members


def enumerate_b_side(lam: Iterable[int], b: int, n: int, jobs: int = 1) -> PatternFamily:
    """Pairs ``(mu, D')`` with ``lam <= mu``, ``|mu| = |lam| + b`` and the corner rule."""
    lam = Partition(lam)
    _require_fits(lam, n)
    candidates = list(partitions_between(lam, lam.size() + b, n))
    chunks = _map(lambda mu: _b_side_members_for(lam, mu, n), candidates, jobs)
    return PatternFamily(lam, n, BSIDE, _sorted_members(m for chunk in chunks for m in chunk))


def a_to_b(lam: Iterable[int], pattern: DyckPattern) -> tuple[Partition, DyckPattern]:
    """Fold the bullets into the base partition."""
    lam = Partition(lam)
    if any(len(p) < 3 for p in pattern.paths):
        raise ValueError("syzygy patterns have no paths of length one")
    verdict = is_admissible(lam, pattern)
    if not verdict:
        raise ValueError(f"pattern is not admissible for {lam}: {verdict.reason}")
    return lambda_of_bullets(lam, pattern), pattern.without_bullets()


def b_to_a(lam: Iterable[int], mu: Iterable[int], pattern: DyckPattern) -> DyckPattern:
    """Turn the boxes of ``mu`` outside ``lam`` back into bullets."""
    lam, mu = Partition(lam), Partition(mu)
    if not leq(lam, mu):
        raise ValueError(f"{lam} is not contained in {mu}")
    if pattern.bullets:
        raise ValueError("B-side patterns carry no bullets")
    result = DyckPattern(pattern.paths, boxes(mu) - boxes(lam))
    verdict = is_admissible(lam, result)
    if not verdict:
        raise ValueError(f"result is not admissible for {lam}: {verdict.reason}")
    return result
