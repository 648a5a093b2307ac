"""Independent brute-force checks for the combinatorial machinery.

Nothing here calls the border-strip enumerator or the Hilbert-series
inversion except where a check compares against them explicitly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Callable, Iterable, Iterator

from .dyck import DyckPath, DyckPattern, is_admissible
from .errors import Mismatch, UncoverableBullet
from .partitions import Box, Partition, boxes, partitions_between, schur_dim


# exact linear algebra

def _integer_rows(matrix: list[list[Fraction]]) -> list[list[int]]:
    rows = []
    for row in matrix:
        scale = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        rows.append([int(Fraction(v) * scale) for v in row])
    return rows


def exact_rank(matrix: list[list]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = _integer_rows([list(r) for r in matrix])
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            factor = a[r][col]
            a[r] = [(p * a[r][c] - factor * a[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _matmul(x: list[list], y: list[list]) -> list[list]:
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


# the subset-cube complex, which should be exact

@dataclass
class CubeComplex:
    n: int
    bases: list[list[tuple[int, ...]]]
    differentials: list[list[list[Fraction]]]


@dataclass
class CubeReport:
    n: int
    d_squared_zero: bool
    exact: bool
    ranks: list[int]

    @property
    def ok(self) -> bool:
        return self.d_squared_zero and self.exact


def cube_complex(n: int, rescale: random.Random | None = None) -> CubeComplex:
    """``F_i`` spanned by ``i``-subsets of ``{1..n}``, with Koszul-signed inclusion maps.

    With ``rescale`` every basis vector gets a random positive rational
    scalar and the maps are conjugated by them; the support pattern and the
    homology are unchanged.
    """
    bases = [list(combinations(range(1, n + 1), i)) for i in range(n + 1)]
    scalars = {}
    for basis in bases:
        for subset in basis:
            scalars[subset] = Fraction(rescale.randint(1, 9), rescale.randint(1, 9)) if rescale else Fraction(1)
    differentials = []
    for i in range(n):
        index = {subset: k for k, subset in enumerate(bases[i + 1])}
        matrix = [[Fraction(0)] * len(bases[i]) for _ in bases[i + 1]]
        for col, subset in enumerate(bases[i]):
            for j in range(1, n + 1):
                if j in subset:
                    continue
                target = tuple(sorted(subset + (j,)))
                sign = (-1) ** sum(1 for a in subset if a < j)
                matrix[index[target]][col] = sign * scalars[target] / scalars[subset]
        differentials.append(matrix)
    return CubeComplex(n, bases, differentials)


def cube_complex_check(n: int, rescale: random.Random | None = None) -> CubeReport:
    if not 1 <= n <= 12:
        raise ValueError("cube complex check supports 1 <= n <= 12")
    cx = cube_complex(n, rescale)
    d_squared_zero = all(
        all(v == 0 for row in _matmul(cx.differentials[i + 1], cx.differentials[i]) for v in row)
        for i in range(n - 1)
    )
    ranks = [exact_rank(d) for d in cx.differentials]
    # dim F_i = rank(F_i -> F_{i+1}) + rank(F_{i-1} -> F_i) everywhere
    exact = all(
        comb(n, i) == (ranks[i] if i < n else 0) + (ranks[i - 1] if i > 0 else 0)
        for i in range(n + 1)
    )
    return CubeReport(n, d_squared_zero, exact, ranks)


# semistandard tableaux

def ssyt_count(shape: Iterable[int], k: int) -> int:
    """Number of semistandard fillings of ``shape`` with entries ``1..k``, by backtracking."""
    shape = tuple(shape)
    if not shape:
        return 1
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def rec(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(low, k + 1):
            filling[(r, c)] = v
            total += rec(i + 1)
        filling.pop((r, c), None)
        return total

    return rec(0)


def eagon_northcott_betti(m: int, n: int) -> list[tuple[int, int]]:
    """Betti numbers of the maximal minors of a generic ``m x n`` matrix, all in row ``n``."""
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    return [(i, comb(m, n + i) * comb(n + i - 1, i)) for i in range(m - n + 1)]


# Euler characteristic of the BGG complex, degree by degree

@dataclass
class EulerReport:
    lam: Partition
    m: int
    n: int
    degrees: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.degrees)

    def raise_for_mismatch(self):
        for d, lhs, rhs in self.degrees:
            if lhs != rhs:
                raise Mismatch(f"degree {d}: complex gives {lhs}, homology gives {rhs}", degree=d)


def euler_check(lam: Iterable[int], m: int, n: int, d_max: int) -> EulerReport:
    """Compare alternating dimension sums of the complex and of its homology classes."""
    from .syzygy import homology_classes

    lam = Partition(lam)
    if d_max < lam.size():
        raise ValueError("d_max must be at least |lam|")
    mn = m * n
    rank_at: dict[int, int] = {}

    def kac_rank(t: int) -> int:
        if t not in rank_at:
            rank_at[t] = sum(schur_dim(mu, m) * schur_dim(mu, n) for mu in partitions_between(lam, t, n))
        return rank_at[t]

    homology = homology_classes(lam, m, n)
    report = EulerReport(lam, m, n)
    for d in range(0, d_max + 1):
        lhs = sum((-1) ** t * kac_rank(t) * comb(mn, d - t) for t in range(max(lam.size(), d - mn), d + 1))
        rhs = sum(
            (-1) ** (lam.size() + b) * member.series[d]
            for b, members in homology.strands.items()
            for member in members
        )
        report.degrees.append((d, lhs, rhs))
    return report


# brute-force pattern enumeration by decomposing skew shapes

def _dyck_paths_from(start: Box, free: set[Box], min_len: int) -> Iterator[tuple[Box, ...]]:
    level = sum(start)
    path = [start]

    def rec():
        x, y = path[-1]
        if sum(path[-1]) == level and len(path) >= min_len:
            yield tuple(path)
        for nxt in ((x + 1, y), (x, y - 1)):
            if nxt in free and sum(nxt) >= level and nxt not in path:
                path.append(nxt)
                yield from rec()
                path.pop()

    yield from rec()


def _decompositions(cells: frozenset[Box], bullets_allowed: bool, min_len: int):
    order = sorted(cells, key=lambda b: (b[0] - b[1], -b[1]))

    def rec(free: set[Box], paths: list, bullets: list):
        if not free:
            yield list(paths), list(bullets)
            return
        first = next(b for b in order if b in free)
        if bullets_allowed:
            free.discard(first)
            bullets.append(first)
            yield from rec(free, paths, bullets)
            bullets.pop()
            free.add(first)
        for path in list(_dyck_paths_from(first, free, min_len)):
            free.difference_update(path)
            paths.append(path)
            yield from rec(free, paths, bullets)
            paths.pop()
            free.update(path)

    yield from rec(set(cells), [], [])


def brute_force_patterns(
    lam: Iterable[int],
    n: int,
    max_total: int,
    *,
    bullets: bool,
    min_len: int = 1,
    keep: Callable[[DyckPattern], bool] | None = None,
    admissible_only: bool = True,
) -> list[tuple[DyckPattern, Partition]]:
    """All ``lam``-admissible patterns with total size ``<= max_total`` and at most ``n`` rows.

    Every partition ``nu >= lam`` in range is split into Dyck paths and
    bullets in every possible way; survivors of the admissibility predicate
    are returned with their label ``nu``.  With ``admissible_only=False``
    every structurally valid pattern is returned instead.
    """
    lam = Partition(lam)
    found = []
    lam_boxes = boxes(lam)
    for extra in range(0, max_total + 1):
        for nu in partitions_between(lam, lam.size() + extra, n):
            skew = boxes(nu) - lam_boxes
            for paths, bullet_list in _decompositions(frozenset(skew), bullets, min_len):
                try:
                    pattern = DyckPattern(tuple(DyckPath(p) for p in paths), frozenset(bullet_list))
                except UncoverableBullet:
                    continue
                if keep is not None and not keep(pattern):
                    continue
                if not admissible_only or is_admissible(lam, pattern):
                    found.append((pattern, nu))
    return found


# TAP-style suite used by the ``check`` subcommand

def check_suite(scope: str = "quick") -> list[tuple[str, bool, str]]:
    """Run the oracle checks; ``scope`` is ``"quick"`` or ``"all"``."""
    from .enumeration import enumerate_kac_patterns
    from .syzygy import betti_table

    results: list[tuple[str, bool, str]] = []
    top = 8 if scope == "all" else 5
    for n in range(1, top + 1):
        rep = cube_complex_check(n)
        results.append((f"cube complex n={n}", rep.ok, f"ranks={rep.ranks}"))
    rep = cube_complex_check(4, random.Random(0))
    results.append(("cube complex n=4 rescaled", rep.ok, f"ranks={rep.ranks}"))
    size, k_max = (6, 5) if scope == "all" else (4, 4)
    bad = [
        (mu, k)
        for s in range(size + 1)
        for mu in partitions_between((), s, s)
        for k in range(1, k_max + 1)
        if ssyt_count(mu, k) != schur_dim(mu, k)
    ]
    results.append((f"schur_dim vs SSYT count |p|<={size} k<={k_max}", not bad, f"failures={bad[:3]}"))
    lams = [(), (1,), (2,), (1, 1), (2, 1), (3, 2)] if scope == "all" else [(), (1,), (1, 1)]
    for lam in lams:
        rep = euler_check(lam, 3, 3, sum(lam) + 9)
        results.append((f"euler identity lambda={Partition(lam)} m=n=3", rep.ok, ""))
    for m, n in [(2, 2), (3, 2), (4, 2), (3, 3)]:
        table = betti_table((1,) * n, m, n)
        want = dict(eagon_northcott_betti(m, n))
        got = table.row(n)
        results.append((f"Eagon-Northcott m={m} n={n}", got == want and table.rows() == [n], f"got {got}"))
    kac_sizes = [(2,), (1, 1), (2, 1)] if scope == "all" else [(1,)]
    for lam in kac_sizes:
        for n in (2, 3):
            if len(lam) > n:
                continue
            fast = sorted(m.label for m in enumerate_kac_patterns(lam, n))
            slow = sorted(nu for _, nu in brute_force_patterns(lam, n, n * n, bullets=False))
            results.append((f"Kac family vs brute force lambda={Partition(lam)} n={n}", fast == slow, ""))
    return results
