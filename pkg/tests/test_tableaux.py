from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from grassmann_dh.errors import CapExceededError, InputError
from grassmann_dh.tableaux import Partition, c0, hook_count, partitions, rect_plus, syt_enumerate

small_partitions = st.integers(0, 9).flatmap(lambda s: st.sampled_from(list(partitions(s)) or [Partition()]))


@pytest.mark.parametrize("shape, count", [((5,), 1), ((2, 2), 2), ((3, 3), 5), ((2, 1), 2), ((1, 1, 1), 1), ((3, 3, 2), 42)])
def test_counts(shape, count):
    assert hook_count(shape) == count
    assert syt_enumerate(shape) == count


def test_partition_parsing():
    assert Partition.parse("3,3,2,0") == Partition((3, 3, 2))
    for bad in ("2,3", "a", "1,-1"):
        with pytest.raises(InputError):
            Partition.parse(bad)


def test_partition_counts():
    # p(0..10)
    assert [sum(1 for _ in partitions(s)) for s in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert all(len(p) <= 2 for p in partitions(6, max_parts=2))


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        syt_enumerate((7, 6))


def test_c0_examples():
    assert all(c0(1, n) == 1 for n in range(2, 12))
    assert c0(2, 4) == 2 == syt_enumerate((2, 2))
    assert c0(1, 2) == 1
    with pytest.raises(InputError):
        c0(2, 2)


def test_rect_plus():
    assert rect_plus(2, 2, (0, 0)) == Partition((2, 2))
    assert rect_plus(2, 2, (2, 1)) == Partition((4, 3))
    assert rect_plus(3, 1, (1, 1, 1)) == Partition((2, 2, 2))
    with pytest.raises(InputError):
        rect_plus(1, 2, (1, 1))


@given(small_partitions)
def test_hook_formula_matches_enumeration(lam):
    assert hook_count(lam) == syt_enumerate(lam)


@given(small_partitions)
def test_conjugation(lam):
    assert lam.conjugate().conjugate() == lam
    assert hook_count(lam.conjugate()) == hook_count(lam)
    assert sorted(lam.hook_lengths()) == sorted(lam.conjugate().hook_lengths())


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.integers(1, n - 1), st.just(n))))
def test_c0_is_rectangle_count(kn):
    k, n = kn
    assert c0(k, n) == hook_count((n - k,) * k)
    assert c0(k, n) == c0(n - k, n)
    assert isinstance(c0(k, n), Fraction) and c0(k, n).denominator == 1


def test_sum_of_squares_is_factorial():
    # Robinson-Schensted: sum over shapes of f_lambda^2 = s!
    for s in range(1, 9):
        assert sum(hook_count(lam) ** 2 for lam in partitions(s)) == factorial(s)
