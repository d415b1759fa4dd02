import pytest
from hypothesis import given
from hypothesis import strategies as st

from gclt.errors import ClosedFormDomainError, NumberOutOfRangeError
from gclt.models import AbelianPGroupShape, CyclicShape, NonabelianPRQShape
from gclt.numbers import (
    classify,
    classify_range,
    cyclic_subgroup_count_closed_form,
    divisors,
    factorize,
    g_cclt_count,
    g_cclt_prime_power_bound,
    is_abelian_number,
    is_aclt_number,
    is_cclt_number,
    is_cyclic_number,
    phi,
    prime_set,
    proper_divisors,
    subgroup_count_closed_form,
    tau,
)


def test_arithmetic_helpers():
    assert factorize(360).factors == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1).factors == []
    assert tau(12) == 6
    assert phi(12) == 4
    assert prime_set(28) == {2, 7}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert proper_divisors(12) == [1, 2, 3, 4, 6]


@pytest.mark.parametrize("n", [0, -3, 10**6 + 1])
def test_out_of_range(n):
    with pytest.raises(NumberOutOfRangeError):
        is_cyclic_number(n)


def test_classify_one():
    result = classify(1)
    assert (result.cyclic, result.abelian, result.cclt, result.aclt) == (True, True, True, True)


def test_classify_twenty_eight():
    result = classify(28)
    assert (result.cyclic, result.abelian, result.cclt, result.aclt) == (False, False, False, True)
    assert result.reasons["aclt"] == "n=4q, q=4k+3"
    assert result.reasons["cclt"] == "no clause matched"


@pytest.mark.parametrize(
    "n, expected",
    [(1, True), (4, True), (6, True), (8, False), (9, True), (12, False), (15, True), (35, True), (45, False)],
)
def test_cclt_numbers(n, expected):
    assert is_cclt_number(n) == expected


@pytest.mark.parametrize(
    "n, expected",
    [(12, False), (16, True), (20, False), (28, True), (32, False), (44, True), (75, False), (63, True), (18, False)],
)
def test_aclt_numbers(n, expected):
    assert is_aclt_number(n) == expected


def test_abelian_and_cyclic_numbers():
    assert is_abelian_number(45)
    assert is_abelian_number(4)
    assert not is_abelian_number(8)
    assert not is_abelian_number(75)
    assert is_cyclic_number(15)
    assert not is_cyclic_number(21)
    assert not is_cyclic_number(9)


@pytest.mark.parametrize("n, count", [(6, 2), (10, 2), (12, 2), (15, 1), (18, 1), (20, 2), (28, 2), (30, 1), (42, 1)])
def test_g_cclt_count(n, count):
    assert g_cclt_count(n) == count


def test_g_cclt_count_needs_two_primes():
    with pytest.raises(ClosedFormDomainError):
        g_cclt_count(8)
    with pytest.raises(ClosedFormDomainError):
        g_cclt_count(1)


def test_prime_power_bounds():
    assert g_cclt_prime_power_bound(2, 3) == (4, True)
    assert g_cclt_prime_power_bound(2, 4) == (6, False)
    assert g_cclt_prime_power_bound(3, 3) == (3, False)
    assert g_cclt_prime_power_bound(5, 2) == (2, True)
    with pytest.raises(ClosedFormDomainError):
        g_cclt_prime_power_bound(4, 2)


@pytest.mark.parametrize(
    "shape, subgroups, cyclic_subgroups",
    [
        (CyclicShape(n=12), 6, 6),
        (AbelianPGroupShape(p=2, k=2), 5, 4),
        (AbelianPGroupShape(p=3, k=3), 10, 8),
        (NonabelianPRQShape(p=2, r=1, q=3), 6, 5),
        (NonabelianPRQShape(p=2, r=2, q=5), 10, 9),
    ],
)
def test_closed_forms(shape, subgroups, cyclic_subgroups):
    assert subgroup_count_closed_form(shape) == subgroups
    assert cyclic_subgroup_count_closed_form(shape) == cyclic_subgroups


def test_classify_range():
    rows = classify_range(1, 12)
    assert [r.n for r in rows] == list(range(1, 13))
    assert rows[11].csv_row() == "12,false,false,false,false"
    with pytest.raises(NumberOutOfRangeError):
        classify_range(5, 4)


@given(st.integers(1, 5000))
def test_number_containments(n):
    if is_cyclic_number(n):
        assert is_cclt_number(n) and is_abelian_number(n)
    if is_cclt_number(n) or is_abelian_number(n):
        assert is_aclt_number(n)


@given(st.integers(2, 5000))
def test_noncyclic_cclt_numbers_have_two_prime_factors(n):
    fact = factorize(n)
    if is_cclt_number(n) and not is_cyclic_number(n):
        assert sum(fact.exponents) == 2
