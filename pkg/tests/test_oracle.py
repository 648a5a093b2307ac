import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyck_syzygy import Mismatch, cube_complex_check, eagon_northcott_betti, euler_check, exact_rank, ssyt_count
from dyck_syzygy.oracle import EulerReport, check_suite, cube_complex


@pytest.mark.parametrize("n", range(1, 7))
def test_cube_complex_exact(n):
    report = cube_complex_check(n)
    assert report.ok and report.d_squared_zero and report.exact


def test_cube_complex_rescaled():
    for seed in range(3):
        assert cube_complex_check(5, random.Random(seed)).ok


def test_cube_complex_range():
    with pytest.raises(ValueError):
        cube_complex_check(0)
    with pytest.raises(ValueError):
        cube_complex_check(13)


def test_cube_complex_detects_a_bad_sign():
    cx = cube_complex(3)
    cx.differentials[0][0][0] *= -1
    d1, d0 = cx.differentials[1], cx.differentials[0]
    product = [[sum(d1[i][k] * d0[k][j] for k in range(len(d0))) for j in range(len(d0[0]))] for i in range(len(d1))]
    assert any(v != 0 for row in product for v in row)


def test_exact_rank_examples():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([]) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_exact_rank_bounds_and_transpose(rows):
    r = exact_rank(rows)
    assert 0 <= r <= min(len(rows), 3)
    assert exact_rank([list(c) for c in zip(*rows)]) == r


def test_ssyt_count_examples():
    assert ssyt_count((3, 2), 3) == 15
    assert ssyt_count((), 4) == 1
    assert ssyt_count((1, 1, 1), 2) == 0


def test_eagon_northcott():
    assert eagon_northcott_betti(3, 2) == [(0, 3), (1, 2)]
    assert eagon_northcott_betti(4, 2) == [(0, 6), (1, 8), (2, 3)]
    with pytest.raises(ValueError):
        eagon_northcott_betti(2, 3)


@pytest.mark.parametrize("lam", [(), (1,), (2, 1)])
def test_euler_identity(lam):
    report = euler_check(lam, 3, 3, sum(lam) + 9)
    assert report.ok
    report.raise_for_mismatch()


def test_euler_mismatch_reports_degree():
    report = EulerReport((1,), 2, 2, [(1, 4, 4), (2, 5, 7)])
    assert not report.ok
    with pytest.raises(Mismatch) as info:
        report.raise_for_mismatch()
    assert info.value.degree == 2


def test_check_suite_quick():
    results = check_suite("quick")
    assert results and all(ok for _, ok, _ in results)
