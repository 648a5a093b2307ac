import pytest
from hypothesis import given, strategies as st

from dyck_syzygy import NotAPartition, Partition, conjugate, corners, from_boxes, leq, parse_partition, schur_dim, union
from dyck_syzygy.oracle import ssyt_count
from dyck_syzygy.partitions import boxes, partitions_between, partitions_in_region

from conftest import partitions


def test_partition_strips_zeros_and_prints():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert repr(Partition((4, 3, 1, 1))) == "(4,3,1,1)"
    assert repr(Partition()) == "()"


@pytest.mark.parametrize("bad", [(1, 2), (3, -1), (2, 3, 1)])
def test_partition_rejects_bad_input(bad):
    with pytest.raises(NotAPartition):
        Partition(bad)


def test_leq_examples():
    assert leq((3, 2), (4, 4))
    assert not leq((4, 3, 1, 1), (4, 4))
    assert not leq((4, 4), (4, 3, 1, 1))
    assert leq((), (5, 2, 1))


def test_corners_examples():
    assert corners((4, 3, 1, 1)) == {(4, 1), (3, 2), (1, 4)}
    assert corners(()) == frozenset()
    assert corners((3, 2)) == {(3, 1), (2, 2)}


def test_boxes_and_from_boxes():
    assert boxes((2, 1)) == {(1, 1), (2, 1), (1, 2)}
    assert boxes(()) == frozenset()
    b = boxes((3, 2))
    assert len(b) == 5 and sum(1 for _, y in b if y == 1) == 3
    assert from_boxes({(1, 1), (2, 1), (1, 2)}) == (2, 1)
    assert from_boxes(boxes((4, 3, 1, 1))) == (4, 3, 1, 1)
    with pytest.raises(NotAPartition):
        from_boxes({(2, 1)})


def test_union_examples():
    assert union((4, 3, 1, 1), (4, 3, 2)) == (4, 3, 2, 1)
    assert union((3,), (1, 1, 1)) == (3, 1, 1)
    assert Partition((3, 2)) | Partition((1, 1, 1)) == (3, 2, 1)


def test_schur_dim_examples():
    assert schur_dim((3, 2), 3) == 15
    assert schur_dim((3, 2), 3) ** 2 == 225
    for k in range(1, 6):
        assert schur_dim((1,) * k, k) == 1
    assert schur_dim((1, 1, 1), 2) == 0


@pytest.mark.parametrize("text,expected", [
    ("(4,3,1,1)", (4, 3, 1, 1)),
    ("(3^3,1^2)", (3, 3, 3, 1, 1)),
    ("()", ()),
    ("[2, 1]", (2, 1)),
    ("5", (5,)),
])
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


def test_parse_partition_rejects_garbage():
    with pytest.raises(NotAPartition):
        parse_partition("(a,b)")
    with pytest.raises(NotAPartition):
        parse_partition("(1,2)")


def test_partitions_between_counts():
    # partitions of 5 with at most 3 rows containing (2,1)
    found = list(partitions_between((2, 1), 5, 3))
    assert all(leq((2, 1), p) and p.size() == 5 and p.length() <= 3 for p in found)
    assert set(found) == {Partition(q) for q in [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)]}
    assert len(found) == 4


def test_partitions_in_region():
    found = set(partitions_in_region((), 2, 2))
    assert found == {Partition(p) for p in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]}


@given(partitions(), partitions())
def test_union_is_least_upper_bound(a, b):
    u = union(a, b)
    assert leq(a, u) and leq(b, u)
    assert boxes(u) == boxes(a) | boxes(b)


@given(partitions())
def test_boxes_round_trip_and_conjugate(p):
    assert from_boxes(boxes(p)) == p
    assert conjugate(conjugate(p)) == p
    assert {(y, x) for x, y in boxes(p)} == boxes(conjugate(p))


@given(partitions(max_size=5), st.integers(min_value=1, max_value=4))
def test_schur_dim_matches_tableau_count(p, k):
    assert schur_dim(p, k) == ssyt_count(p, k)
