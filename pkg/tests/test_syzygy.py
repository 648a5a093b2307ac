import pytest

from dyck_syzygy import (
    BettiTable,
    ComparablePair,
    HilbertCache,
    Partition,
    betti_table,
    general_ideal_terms,
    homology_classes,
)
from dyck_syzygy.oracle import eagon_northcott_betti


def test_homology_classes_32():
    result = homology_classes((3, 2), 3, 3)
    assert result.labels(0) == [(3, 2), (4, 4)]
    assert result.labels(1) == [(3, 3, 3), (4, 4, 3)]
    assert result.labels(2) == [(5, 5, 5)]
    assert sorted(result.strands) == [0, 1, 2]


def test_homology_classes_trivial():
    result = homology_classes((), 3, 3)
    assert list(result.strands) == [0] and result.labels(0) == [()]
    result = homology_classes((1, 1), 3, 2)
    assert list(result.strands) == [0] and result.labels(0) == [(1, 1)]


def test_betti_table_32(golden):
    table = betti_table((3, 2), 3, 3)
    assert table.rows() == [5, 6, 7]
    assert [table[5, c] for c in range(8)] == [225, 1132, 2673, 3807, 3485, 2016, 675, 100]
    assert table.row(6) == {3: 1, 5: 9, 6: 16, 7: 9}
    assert table.row(7) == {8: 1}
    assert table.render() == golden("betti_I32.txt")


def test_betti_table_trivial():
    table = betti_table((), 3, 3)
    assert table.entries == {(0, 0): 1}
    assert table.render() == "       0\ntotal: 1\n    0: 1\n"


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3)])
def test_maximal_minors(m, n):
    table = betti_table((1,) * n, m, n)
    assert table.rows() == [n]
    assert table.row(n) == dict(eagon_northcott_betti(m, n))


def test_columns_bounded_by_mn():
    for lam, m, n in [((2, 1), 3, 3), ((2,), 2, 2), ((2, 2), 3, 2)]:
        table = betti_table(lam, m, n)
        assert max(table.columns()) <= m * n
        assert all(v > 0 for v in table.entries.values())


def test_strand_starts_at_dyck_size():
    result = homology_classes((3, 2), 3, 3)
    table = betti_table((3, 2), 3, 3, homology=result)
    for b, members in result.strands.items():
        row = 5 + b
        assert min(m.pattern.d for m in members) == min(table.row(row))


def test_table_json_round_trip():
    table = betti_table((3, 2), 3, 3)
    assert BettiTable.from_json(table.to_json()) == table
    assert table.totals()[3] == 3808


def test_jobs_and_shared_cache():
    cache = HilbertCache()
    serial = betti_table((2, 1), 3, 3, cache=cache)
    parallel = betti_table((2, 1), 3, 3, jobs=4, cache=HilbertCache())
    assert serial == parallel
    assert betti_table((2, 1), 3, 3, cache=cache) == serial


def test_general_ideal_terms():
    terms = general_ideal_terms([(4, 3, 1, 1), (4, 3, 2)])
    assert [(t.subset, t.partition, t.sign) for t in terms] == [
        ((1,), (4, 3, 1, 1), 1),
        ((2,), (4, 3, 2), 1),
        ((1, 2), (4, 3, 2, 1), -1),
    ]
    three = general_ideal_terms([(3,), (2, 2), (1, 1, 1)])
    assert len(three) == 7 and three[-1].partition == Partition((3, 2, 1)) and three[-1].sign == 1
    with pytest.raises(ComparablePair):
        general_ideal_terms([(2,), (3,)])


def test_bad_dimensions():
    with pytest.raises(ValueError):
        homology_classes((1,), 2, 3)
