import numpy as np
import pytest

from gclt.config import bound_override
from gclt.errors import NotApplicableError
from gclt.numbers import is_aclt_number, is_cclt_number
from gclt.witness import non_aclt_witness, non_cclt_witness, unit_of_order, witness


def test_elementary_abelian_eight():
    found = non_cclt_witness(8)
    assert found.spec == "C2xC2xC2"
    assert found.failing_divisor == 4
    assert found.verified


def test_twelve_is_the_alternating_group():
    found = non_aclt_witness(12)
    assert found.spec == "E(2,2,[0,1;1,1],3)"
    assert found.failing_divisor == 6
    assert found.verified


@pytest.mark.parametrize("n, d", [(20, 10), (18, 6), (32, 16)])
def test_small_aclt_witnesses(n, d):
    found = non_aclt_witness(n)
    assert found.failing_divisor == d
    assert found.group.order == n
    assert found.verified


def test_cclt_and_aclt_numbers_have_no_witness():
    with pytest.raises(NotApplicableError):
        non_cclt_witness(15)
    with pytest.raises(NotApplicableError):
        non_aclt_witness(28)
    with pytest.raises(NotApplicableError):
        non_cclt_witness(6)


def test_unverified_witness():
    found = witness(24, "cclt", verify=False)
    assert not found.verified
    assert found.group.order == 24


def test_unknown_kind():
    with pytest.raises(ValueError):
        witness(8, "clt")


def test_witness_above_bound_has_no_table():
    found = non_aclt_witness(486)
    assert found.group is None
    assert not found.verified
    record = found.to_record()
    assert record.table is None
    assert record.spec == "M(81,3,28)xC2"
    assert record.failing_divisor == 243


def test_record_carries_table():
    record = non_cclt_witness(8).to_record()
    assert record.spec == "C2xC2xC2"
    assert len(record.table) == 8
    assert non_cclt_witness(8).to_record(include_table=False).table is None


@pytest.mark.parametrize("n", [n for n in range(1, 64) if not is_cclt_number(n)])
def test_every_non_cclt_order_has_a_verified_witness(n):
    found = non_cclt_witness(n)
    assert found.verified
    assert n % found.failing_divisor == 0 and found.failing_divisor < n


@pytest.mark.parametrize("n", [n for n in range(1, 64) if not is_aclt_number(n)])
def test_every_non_aclt_order_has_a_verified_witness(n):
    found = non_aclt_witness(n)
    assert found.verified


@pytest.mark.slow
def test_odd_prime_power_witness():
    with bound_override(400):
        found = non_aclt_witness(243)
    assert found.spec == "M(27,9,4)"
    assert found.failing_divisor == 81
    assert found.verified


@pytest.mark.parametrize("n", [8, 16, 24, 27, 48, 60])
def test_cclt_witness_tables_are_reproducible(n):
    first, second = non_cclt_witness(n), non_cclt_witness(n)
    assert first.spec == second.spec
    assert np.array_equal(first.group.table, second.group.table)


@pytest.mark.parametrize("n", [12, 18, 20, 32, 36, 50])
def test_aclt_witness_tables_are_reproducible(n):
    first, second = non_aclt_witness(n), non_aclt_witness(n)
    assert first.spec == second.spec
    assert np.array_equal(first.group.table, second.group.table)


@pytest.mark.parametrize("modulus, k, expected", [(7, 3, 2), (9, 3, 4), (13, 4, 5), (8, 2, 3)])
def test_unit_of_order(modulus, k, expected):
    assert unit_of_order(modulus, k) == expected
