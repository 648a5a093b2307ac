import json
from math import comb

import pytest
from hypothesis import given, strategies as st

from dyck_syzygy import (
    GrothendieckClass,
    HilbertCache,
    HilbertSeries,
    NegativeCoefficient,
    Partition,
    hilbert_series_kac,
    hilbert_series_simple,
    kac_class,
    schur_dim,
    simple_in_kac_basis,
)
from dyck_syzygy import grothendieck
from dyck_syzygy.partitions import partitions_between

from conftest import partitions

EXAMPLE_SERIES = {
    (3, 2): [225, 1132, 2673, 3582, 2785, 1188, 225],
    (4, 4): [225, 700, 828, 450, 100],
    (3, 3, 3): [1],
    (4, 4, 3): [9, 16, 9],
    (5, 5, 5): [1],
}


@pytest.mark.parametrize("mu,coeffs", EXAMPLE_SERIES.items())
def test_simple_series_examples(mu, coeffs, cache):
    assert hilbert_series_simple(mu, 3, 3, cache=cache) == HilbertSeries.from_list(coeffs, sum(mu))


def test_series_text():
    hs = hilbert_series_simple((3, 2), 3, 3)
    assert str(hs) == "225t^5 + 1132t^6 + 2673t^7 + 3582t^8 + 2785t^9 + 1188t^10 + 225t^11"
    assert str(HilbertSeries({0: 1, 1: -2})) == "1 - 2t"
    assert str(HilbertSeries()) == "0"


def test_kac_series_examples():
    assert hilbert_series_kac((), 2, 3) == HilbertSeries({k: comb(6, k) for k in range(7)})
    assert hilbert_series_kac((3, 2), 3, 3) == HilbertSeries({5 + k: 225 * comb(9, k) for k in range(10)})
    assert hilbert_series_kac((5, 5, 5), 3, 3) == HilbertSeries({15 + k: comb(9, k) for k in range(10)})


def test_kac_class_examples():
    cls = kac_class((4, 3, 1, 1), 4)
    assert len(cls) == 19 and set(cls.coeffs.values()) == {1}
    for d in (0, 2, 4):
        lam = (d,) if d else ()
        assert kac_class(lam, 1) == GrothendieckClass({lam: 1, (d + 1,): 1})


def test_simple_in_kac_basis_one_row():
    # K_(d) = L_(d) + L_(d+1) for n = 1, so L_(d) alternates down the row
    cls = simple_in_kac_basis((2,), 1, 6)
    assert cls.basis == "Kac"
    assert cls.coeffs == {Partition((k,)): (-1) ** (k - 2) for k in range(2, 7)}
    assert simple_in_kac_basis((5,), 1, 4) == GrothendieckClass({}, "Kac")


@pytest.mark.parametrize("mu", [(1,), (2, 1), (3, 2), (2, 2)])
def test_kac_basis_reproduces_simple_series(mu):
    m = n = 2 if len(mu) <= 2 else 3
    top = sum(mu) + m * n
    cls = simple_in_kac_basis(mu, n, top)
    total = HilbertSeries()
    for nu, c in cls.coeffs.items():
        total = total + hilbert_series_kac(nu, m, n).scale(c)
    assert total.truncate(top) == hilbert_series_simple(mu, m, n)


def test_truncation_is_a_prefix(cache):
    full = hilbert_series_simple((2, 1), 3, 3, cache=cache)
    for trunc in range(0, 13):
        assert hilbert_series_simple((2, 1), 3, 3, trunc=trunc, cache=HilbertCache()) == full.truncate(trunc)
    # deeper truncations change nothing
    assert hilbert_series_simple((2, 1), 3, 3, trunc=20, cache=HilbertCache()) == full


def test_cache_file_round_trip(tmp_path):
    path = tmp_path / "hs.jsonl"
    first = HilbertCache(path)
    hs = hilbert_series_simple((3, 2), 3, 3, cache=first)
    lines = path.read_text().splitlines()
    assert json.loads(lines[0]) == {"format": "dyck-syzygy-hilbert", "version": 1}
    assert len(lines) == len(first) + 1
    second = HilbertCache(path)
    assert len(second) == len(first)
    assert second.get(Partition((3, 2)), 3, 3, 11) == tuple(hs[d] for d in range(12))
    assert hilbert_series_simple((3, 2), 3, 3, cache=second) == hs
    assert len(path.read_text().splitlines()) == len(lines)


def test_cache_rejects_corruption(tmp_path):
    path = tmp_path / "hs.jsonl"
    hilbert_series_simple((1,), 2, 2, cache=HilbertCache(path))
    lines = path.read_text().splitlines()
    record = json.loads(lines[1])
    record["n"] += 1
    path.write_text("\n".join([lines[0], json.dumps(record)]) + "\n")
    with pytest.raises(ValueError):
        HilbertCache(path)
    path.write_text(json.dumps({"format": "dyck-syzygy-hilbert", "version": 99}) + "\n")
    with pytest.raises(ValueError):
        HilbertCache(path)


def test_cache_keeps_deepest_prefix():
    cache = HilbertCache()
    key = Partition((1,))
    cache.put(key, 2, 2, 3, (0, 4, 8, 6))
    cache.put(key, 2, 2, 1, (0, 99))
    assert cache.get(key, 2, 2, 2) == (0, 4, 8)
    assert cache.get(key, 2, 2, 5) is None


def test_negative_coefficient_is_reported(monkeypatch):
    # a spurious factor with a large multiplicity makes the inversion undershoot
    real = grothendieck.kac_labels

    def broken(rows, n, size_bound=None):
        return real(rows, n, size_bound) + ((Partition((1, 1)), 100),) if rows == (1,) else real(rows, n, size_bound)

    monkeypatch.setattr(grothendieck, "kac_labels", broken)
    with pytest.raises(NegativeCoefficient):
        hilbert_series_simple((1,), 2, 2, cache=HilbertCache())


def test_series_arithmetic_and_json():
    a = HilbertSeries.from_list([1, 2, 1], 3)
    b = HilbertSeries({4: 2})
    assert (a - b) == HilbertSeries({3: 1, 5: 1})
    assert (a + b)[4] == 4 and a.ord() == 3 and a.top() == 5
    assert HilbertSeries.from_json(a.to_json()) == a
    assert HilbertSeries().to_json() == {"min_deg": 0, "coeffs": []}


def test_bad_shapes():
    with pytest.raises(ValueError):
        hilbert_series_simple((1, 1, 1), 3, 2)
    with pytest.raises(ValueError):
        hilbert_series_simple((1,), 2, 3)


@given(partitions(max_size=6, max_rows=3), st.integers(min_value=1, max_value=3))
def test_simple_series_shape(mu, n):
    n = max(n, mu.length())
    m = n
    hs = hilbert_series_simple(mu, m, n)
    assert hs.ord() == mu.size()
    assert hs[mu.size()] == schur_dim(mu, m) * schur_dim(mu, n)
    assert hs.top() <= mu.size() + m * n
    assert all(c > 0 for c in hs.coeffs.values())
    assert list(hs.coeffs) == list(range(hs.ord(), hs.top() + 1))


@pytest.mark.parametrize("m,n", [(2, 1), (3, 1), (3, 2)])
def test_series_bounded_by_kac(m, n):
    for size in range(6):
        for mu in partitions_between((), size, n):
            simple, kac = hilbert_series_simple(mu, m, n), hilbert_series_kac(mu, m, n)
            assert all(simple[d] <= kac[d] for d in simple.coeffs)
