"""Homology classes of the BGG complex and Betti tables of principal ideals."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .dyck import DyckPattern
from .enumeration import enumerate_syzygy_patterns
from .errors import ComparablePair
from .grothendieck import HilbertCache, HilbertSeries, hilbert_series_simple
from .partitions import Partition, leq, union


@dataclass(frozen=True)
class StrandMember:
    pattern: DyckPattern
    label: Partition
    series: HilbertSeries

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.to_json(),
            "label": list(self.label),
            "d": self.pattern.d,
            "b": self.pattern.b,
            "series": self.series.to_json(),
        }


@dataclass
class HomologyResult:
    lam: Partition
    m: int
    n: int
    strands: dict[int, list[StrandMember]] = field(default_factory=dict)

    def labels(self, b: int) -> list[Partition]:
        return [member.label for member in self.strands.get(b, [])]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "m": self.m,
            "n": self.n,
            "strands": {str(b): [s.to_json() for s in members] for b, members in self.strands.items()},
        }


def homology_classes(
    lam: Iterable[int], m: int, n: int, jobs: int = 1, cache: HilbertCache | None = None
) -> HomologyResult:
    """Class of ``H_{|lam|+b}`` for every ``b``, one simple module per syzygy pattern."""
    lam = Partition(lam)
    if not lam.length() <= n <= m:
        raise ValueError(f"need length({lam}) <= n <= m, got n={n}, m={m}")
    family = enumerate_syzygy_patterns(lam, n, jobs=jobs)
    members = list(family)

    def series(member):
        return hilbert_series_simple(member.label, m, n, cache=cache)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            all_series = list(pool.map(series, members))
    else:
        all_series = [series(member) for member in members]
    result = HomologyResult(lam, m, n)
    for member, hs in zip(members, all_series):
        result.strands.setdefault(member.pattern.b, []).append(StrandMember(member.pattern, member.label, hs))
    result.strands = dict(sorted(result.strands.items()))
    return result


@dataclass
class BettiTable:
    """Graded Betti numbers keyed by ``(row, column)``.

    Column ``s`` is the homological degree and row ``j - s`` the internal
    degree minus ``s``, as in Macaulay2's display.
    """

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def add(self, row: int, col: int, value: int):
        if value:
            self.entries[(row, col)] = self.entries.get((row, col), 0) + value

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = BettiTable(dict(self.entries))
        for (row, col), value in other.entries.items():
            out.add(row, col, value)
        return out

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return {k: v for k, v in self.entries.items() if v} == {k: v for k, v in other.entries.items() if v}

    def rows(self) -> list[int]:
        return sorted({row for row, _ in self.entries})

    def columns(self) -> list[int]:
        return sorted({col for _, col in self.entries})

    def row(self, r: int) -> dict[int, int]:
        return {col: v for (row, col), v in sorted(self.entries.items()) if row == r}

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, col), value in self.entries.items():
            out[col] = out.get(col, 0) + value
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {str(r): {str(c): v for c, v in self.row(r).items()} for r in self.rows()}

    @classmethod
    def from_json(cls, rows: dict) -> "BettiTable":
        table = cls()
        for r, cols in rows.items():
            for c, v in cols.items():
                table.add(int(r), int(c), int(v))
        return table

    def render(self) -> str:
        """Macaulay2-style text rendering with ``.`` for zeros."""
        if not self.entries:
            return "total:\n"
        rows = list(range(min(self.rows()), max(self.rows()) + 1))
        cols = list(range(0, max(self.columns()) + 1))
        totals = self.totals()
        labels = ["", "total:"] + [f"{r}:" for r in rows]
        body = [[str(c) for c in cols], [str(totals.get(c, 0)) for c in cols]]
        body += [[str(self[r, c]) if self[r, c] else "." for c in cols] for r in rows]
        label_width = max(len(s) for s in labels)
        widths = [max(len(line[i]) for line in body) for i in range(len(cols))]
        lines = []
        for label, line in zip(labels, body):
            cells = " ".join(cell.rjust(w) for cell, w in zip(line, widths))
            lines.append(f"{label.rjust(label_width)} {cells}".rstrip())
        return "\n".join(lines) + "\n"


def member_table(lam: Partition, member: StrandMember) -> BettiTable:
    """Contribution of one simple module: row ``|lam| + b``, starting in column ``d``."""
    table = BettiTable()
    row = lam.size() + member.pattern.b
    for degree, value in member.series.coeffs.items():
        table.add(row, degree - row, value)
    return table


def betti_table(
    lam: Iterable[int], m: int, n: int, jobs: int = 1, cache: HilbertCache | None = None,
    homology: HomologyResult | None = None,
) -> BettiTable:
    lam = Partition(lam)
    result = homology if homology is not None else homology_classes(lam, m, n, jobs=jobs, cache=cache)
    table = BettiTable()
    for members in result.strands.values():
        for member in members:
            table = table + member_table(lam, member)
    return table


@dataclass(frozen=True)
class InclusionExclusionTerm:
    subset: tuple[int, ...]
    partition: Partition
    sign: int

    def to_json(self) -> dict:
        return {"subset": list(self.subset), "partition": list(self.partition), "sign": self.sign}


def general_ideal_terms(lams: Sequence[Iterable[int]]) -> list[InclusionExclusionTerm]:
    """Signed unions over nonempty subsets for a sum of principal ideals.

    Subsets are 1-based index tuples, listed by size and then
    lexicographically.  No homology is computed for the sum.
    """
    lams = [Partition(p) for p in lams]
    for i, j in combinations(range(len(lams)), 2):
        if leq(lams[i], lams[j]) or leq(lams[j], lams[i]):
            raise ComparablePair(f"{lams[i]} and {lams[j]} are comparable")
    terms = []
    for k in range(1, len(lams) + 1):
        for subset in combinations(range(len(lams)), k):
            joined = Partition()
            for i in subset:
                joined = union(joined, lams[i])
            terms.append(InclusionExclusionTerm(tuple(i + 1 for i in subset), joined, (-1) ** (k + 1)))
    return terms
