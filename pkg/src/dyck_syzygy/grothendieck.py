"""Grothendieck classes and graded Hilbert series of Kac and simple modules.

The Kac module ``K_mu`` is free over the exterior algebra on ``m * n``
generators, generated in degree ``|mu|``, so its Hilbert series is known in
closed form.  The simple quotient ``L_mu`` is recovered by inverting the
composition-series expansion

    HS(L_mu) = HS(K_mu) - sum over nonempty Kac patterns D of HS(L_mu(D)).

That recursion never bottoms out on its own: a singleton can always be
appended at the end of row 1, so every family has nonempty members.  It
becomes finite after truncating at a degree ``N``: ``L_nu`` is a quotient
of ``K_nu``, so its series starts in degree ``|nu|``, and only labels with
``|nu| <= N`` touch the first ``N + 1`` coefficients.  Since ``L_mu`` is a
subquotient of ``K_mu`` its series ends by degree ``|mu| + m * n``, and
truncating there loses nothing.
"""
from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

from .enumeration import kac_labels
from .errors import NegativeCoefficient
from .partitions import Partition, schur_dim

SIMPLE = "Simple"
KAC = "Kac"


@dataclass(frozen=True)
class HilbertSeries:
    """Finitely supported map from degree to integer coefficient."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(c) for d, c in dict(self.coeffs).items() if c}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_list(cls, values: Iterable[int], min_deg: int = 0) -> "HilbertSeries":
        return cls({min_deg + i: c for i, c in enumerate(values)})

    def __getitem__(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return HilbertSeries(out)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + other.scale(-1)

    def scale(self, k: int) -> "HilbertSeries":
        return HilbertSeries({d: k * c for d, c in self.coeffs.items()})

    def truncate(self, top: int) -> "HilbertSeries":
        return HilbertSeries({d: c for d, c in self.coeffs.items() if d <= top})

    def ord(self) -> int | None:
        return min(self.coeffs, default=None)

    def top(self) -> int | None:
        return max(self.coeffs, default=None)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict:
        if not self.coeffs:
            return {"min_deg": 0, "coeffs": []}
        lo, hi = self.ord(), self.top()
        return {"min_deg": lo, "coeffs": [self[d] for d in range(lo, hi + 1)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "HilbertSeries":
        return cls.from_list(data["coeffs"], data.get("min_deg", 0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in self.coeffs.items():
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


@dataclass(frozen=True)
class GrothendieckClass:
    """Integer combination of simple (or Kac) classes indexed by partitions."""

    coeffs: Mapping[Partition, int] = field(default_factory=dict)
    basis: str = SIMPLE

    def __post_init__(self):
        clean = {Partition(k): int(v) for k, v in dict(self.coeffs).items() if v}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), key=lambda kv: (kv[0].size(), tuple(kv[0])))))

    def __getitem__(self, key) -> int:
        return self.coeffs.get(Partition(key), 0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GrothendieckClass):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, tuple(self.coeffs.items())))

    def __add__(self, other):
        if other.basis != self.basis:
            raise ValueError("cannot add classes written in different bases")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GrothendieckClass(out, self.basis)

    def to_json(self) -> dict:
        return {"basis": self.basis, "terms": [[list(k), v] for k, v in self.coeffs.items()]}


def kac_class(lam: Iterable[int], n: int) -> GrothendieckClass:
    """Composition factors of ``K_lam`` in the simple basis."""
    lam = Partition(lam)
    if lam.length() > n:
        raise ValueError(f"{lam} has more than n={n} rows")
    return GrothendieckClass(dict(kac_labels(tuple(lam), n)), SIMPLE)


def simple_in_kac_basis(mu: Iterable[int], n: int, size_bound: int) -> GrothendieckClass:
    """``[L_mu]`` as a combination of Kac classes, ignoring partitions larger than ``size_bound``."""
    mu = Partition(mu)
    memo: dict[Partition, dict[Partition, int]] = {}

    def solve(nu: Partition) -> dict[Partition, int]:
        if nu in memo:
            return memo[nu]
        out = {nu: 1}
        for label, mult in kac_labels(tuple(nu), n):
            if label == nu or label.size() > size_bound:
                continue
            for key, value in solve(label).items():
                out[key] = out.get(key, 0) - mult * value
        memo[nu] = out
        return out

    if mu.size() > size_bound:
        return GrothendieckClass({}, KAC)
    return GrothendieckClass(solve(mu), KAC)


def hilbert_series_kac(mu: Iterable[int], m: int, n: int) -> HilbertSeries:
    mu = Partition(mu)
    rank = schur_dim(mu, m) * schur_dim(mu, n)
    mn = m * n
    return HilbertSeries({mu.size() + k: rank * comb(mn, k) for k in range(mn + 1)})


class HilbertCache:
    """Memo of truncated simple-module series keyed by ``(mu, m, n)``.

    An entry computed to degree ``N`` answers every request with a smaller
    truncation, so only the deepest prefix is kept.  Readers need no lock;
    insertions are serialized and only ever deepen an entry, so the stored
    values do not depend on thread interleaving.

    With a ``path`` the cache is mirrored to a versioned, append-only file
    of JSON lines ``{"key", "N", "series"}``, one per insertion.
    """

    VERSION = 1

    def __init__(self, path: str | os.PathLike | None = None):
        self._entries: dict[tuple, tuple[int, tuple[int, ...]]] = {}
        self._lock = threading.Lock()
        self.path = Path(path) if path is not None else None
        if self.path is not None:
            self._load()

    @staticmethod
    def key_hash(mu: Partition, m: int, n: int) -> str:
        payload = json.dumps({"mu": list(mu), "m": m, "n": n}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def _load(self):
        if not self.path.exists():
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(json.dumps({"format": "dyck-syzygy-hilbert", "version": self.VERSION}) + "\n")
            return
        with self.path.open() as fh:
            header = json.loads(fh.readline() or "{}")
            if header.get("version") != self.VERSION:
                raise ValueError(f"cache {self.path} has unsupported version {header.get('version')}")
            for line in fh:
                if not line.strip():
                    continue
                record = json.loads(line)
                key = (Partition(record["mu"]), record["m"], record["n"])
                if self.key_hash(*key) != record["key"]:
                    raise ValueError(f"corrupt cache record for {key}")
                depth = record["N"]
                values = tuple(record["series"])
                if key not in self._entries or self._entries[key][0] < depth:
                    self._entries[key] = (depth, values)

    def get(self, mu: Partition, m: int, n: int, depth: int):
        entry = self._entries.get((mu, m, n))
        if entry is None or entry[0] < depth:
            return None
        return entry[1][: depth + 1]

    def put(self, mu: Partition, m: int, n: int, depth: int, values: tuple[int, ...]):
        key = (mu, m, n)
        with self._lock:
            current = self._entries.get(key)
            if current is not None and current[0] >= depth:
                return
            self._entries[key] = (depth, values)
            if self.path is not None:
                record = {"key": self.key_hash(*key), "mu": list(mu), "m": m, "n": n, "N": depth, "series": list(values)}
                with self.path.open("a") as fh:
                    fh.write(json.dumps(record) + "\n")

    def __len__(self):
        return len(self._entries)


_default_cache = HilbertCache()


def default_cache() -> HilbertCache:
    return _default_cache


def _simple_prefix(mu: Partition, m: int, n: int, depth: int, cache: HilbertCache) -> tuple[int, ...]:
    # values[d] is the coefficient of t^d for d <= depth
    hit = cache.get(mu, m, n, depth)
    if hit is not None:
        return hit
    values = [0] * (depth + 1)
    rank = schur_dim(mu, m) * schur_dim(mu, n)
    mn = m * n
    base = mu.size()
    for k in range(mn + 1):
        if base + k > depth:
            break
        values[base + k] = rank * comb(mn, k)
    for label, mult in kac_labels(tuple(mu), n):
        if label == mu or label.size() > depth:
            continue
        sub = _simple_prefix(label, m, n, depth, cache)
        for d in range(label.size(), depth + 1):
            values[d] -= mult * sub[d]
    for d, c in enumerate(values):
        if c < 0:
            raise NegativeCoefficient(
                f"HS(L_{mu}) for m={m}, n={n} has coefficient {c} in degree {d}; "
                "the composition-factor enumeration is incomplete or wrong"
            )
    result = tuple(values)
    cache.put(mu, m, n, depth, result)
    return result


def hilbert_series_simple(
    mu: Iterable[int], m: int, n: int, trunc: int | None = None, cache: HilbertCache | None = None
) -> HilbertSeries:
    """Hilbert series of ``L_mu`` up to degree ``trunc`` (exact by default)."""
    mu = Partition(mu)
    if not mu.length() <= n <= m:
        raise ValueError(f"need length({mu}) <= n <= m, got n={n}, m={m}")
    depth = mu.size() + m * n if trunc is None else trunc
    if depth < 0:
        return HilbertSeries()
    cache = _default_cache if cache is None else cache
    return HilbertSeries.from_list(_simple_prefix(mu, m, n, depth, cache))
