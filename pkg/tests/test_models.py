import json

import pytest
from pydantic import ValidationError

from gclt.config import DEFAULT_ENUMERATION_BOUND
from gclt.errors import UnsupportedOrderError
from gclt.models import (
    AbelianPGroupShape,
    CliConfig,
    DivisorResult,
    DivisorWitnessReport,
    ErrorResponse,
    Factorization,
    NonabelianPRQShape,
    NumberClass,
    WitnessRecord,
)


def test_factorization_validates_product():
    fact = Factorization(n=28, factors=[(2, 2), (7, 1)])
    assert fact.primes == [2, 7]
    assert fact.exponent(2) == 2
    assert fact.exponent(3) == 0
    with pytest.raises(ValidationError):
        Factorization(n=28, factors=[(2, 1), (7, 1)])
    with pytest.raises(ValidationError):
        Factorization(n=8, factors=[(4, 1), (2, 1)])


def test_number_class_containments():
    with pytest.raises(ValidationError):
        NumberClass(n=6, cyclic=True, abelian=True, cclt=False, aclt=True)
    with pytest.raises(ValidationError):
        NumberClass(n=6, cyclic=False, abelian=True, cclt=False, aclt=False)


def test_number_class_csv():
    row = NumberClass(n=28, cyclic=False, abelian=False, cclt=False, aclt=True)
    assert NumberClass.csv_header() == "n,cyclic,abelian,cclt,aclt"
    assert row.csv_row() == "28,false,false,false,true"


def test_divisor_report_missing():
    report = DivisorWitnessReport(
        kind="cclt",
        ok=False,
        divisors={1: DivisorResult(found=True, witness=[0]), 4: DivisorResult(found=False)},
    )
    assert report.missing == [4]
    assert not report


def test_shapes():
    assert AbelianPGroupShape(p=3, k=2).kind == "abelian-p-group"
    with pytest.raises(ValidationError):
        AbelianPGroupShape(p=4, k=2)
    with pytest.raises(ValidationError):
        NonabelianPRQShape(p=3, r=1, q=5)


def test_witness_record_needs_proper_divisor():
    WitnessRecord(n=8, kind="cclt", spec="C2xC2xC2", failing_divisor=4, clause="prime power")
    with pytest.raises(ValidationError):
        WitnessRecord(n=8, kind="cclt", spec="C2xC2xC2", failing_divisor=8, clause="prime power")


def test_cli_config_ignores_small_bound():
    assert CliConfig(command="classify", bound=10).bound == DEFAULT_ENUMERATION_BOUND
    assert CliConfig(command="classify", bound=800).bound == 800
    with pytest.raises(ValidationError):
        CliConfig(command="verify", output_format="xml")


def test_error_response_from_exception():
    payload = ErrorResponse.from_exception(UnsupportedOrderError(22 * 23, [1, 2]))
    data = json.loads(payload.model_dump_json())
    assert "not supported" in data["error"]
    assert data["details"].startswith("UnsupportedOrderError")
