from math import prod
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

from .config import DEFAULT_ENUMERATION_BOUND, DEFAULT_SUITE_MAX_ORDER


class Factorization(BaseModel):
    """Prime factorization n = p_1^a_1 ... p_k^a_k with increasing primes."""

    n: int = Field(..., ge=1, description="The factored integer")
    factors: List[Tuple[int, int]] = Field(
        default_factory=list, description="(prime, exponent) pairs, primes increasing"
    )

    @model_validator(mode="after")
    def validate_factors(self) -> "Factorization":
        """Check that the factors multiply back to n."""
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("Primes must be strictly increasing")
        if any(a < 1 or not isprime(p) for p, a in self.factors):
            raise ValueError("Factors must be primes with positive exponents")
        if prod(p**a for p, a in self.factors) != self.n:
            raise ValueError(f"Factors do not multiply to {self.n}")
        return self

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    @property
    def exponents(self) -> List[int]:
        return [a for _, a in self.factors]

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)


class NumberClass(BaseModel):
    """Classification of n as cyclic / abelian / CCLT / ACLT number."""

    n: int = Field(..., ge=1, description="The classified integer")
    cyclic: bool = Field(..., description="Every group of order n is cyclic")
    abelian: bool = Field(..., description="Every group of order n is abelian")
    cclt: bool = Field(..., description="Every group of order n is CCLT")
    aclt: bool = Field(..., description="Every group of order n is ACLT")
    reasons: Dict[str, str] = Field(
        default_factory=dict, description="Matched clause per flag"
    )

    @model_validator(mode="after")
    def validate_containments(self) -> "NumberClass":
        """Cyclic implies CCLT implies ACLT; abelian implies ACLT."""
        if self.cyclic and not self.cclt:
            raise ValueError(f"{self.n} is cyclic but not CCLT")
        if (self.cclt or self.abelian) and not self.aclt:
            raise ValueError(f"{self.n} is CCLT or abelian but not ACLT")
        return self

    @staticmethod
    def csv_header() -> str:
        return "n,cyclic,abelian,cclt,aclt"

    def csv_row(self) -> str:
        flags = (self.cyclic, self.abelian, self.cclt, self.aclt)
        return ",".join([str(self.n), *("true" if f else "false" for f in flags)])


class DivisorResult(BaseModel):
    """Outcome for one divisor d of the group order."""

    found: bool = Field(..., description="A subgroup of order d and the required kind exists")
    witness: Optional[List[int]] = Field(None, description="Element indices of one such subgroup")


class DivisorWitnessReport(BaseModel):
    """Per-divisor subgroup existence report for CLT, CCLT or ACLT."""

    group: Optional[str] = Field(None, description="Spec string of the group")
    kind: Literal["clt", "cclt", "aclt"] = Field(..., description="Kind of subgroup required")
    ok: bool = Field(..., description="Every listed divisor has a witness")
    divisors: Dict[int, DivisorResult] = Field(default_factory=dict, description="Divisor results")

    @property
    def missing(self) -> List[int]:
        return [d for d, result in self.divisors.items() if not result.found]

    def __bool__(self) -> bool:
        return self.ok


class CyclicShape(BaseModel):
    kind: Literal["cyclic"] = "cyclic"
    n: int = Field(..., ge=1)


class AbelianPGroupShape(BaseModel):
    """C_p x C_{p^(k-1)} of order p^k."""

    kind: Literal["abelian-p-group"] = "abelian-p-group"
    p: int = Field(..., ge=2)
    k: int = Field(..., ge=2)

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"{v} is not prime")
        return v


class NonabelianPRQShape(BaseModel):
    """Nonabelian CCLT group of order p^r q with p | q - 1."""

    kind: Literal["nonabelian-prq"] = "nonabelian-prq"
    p: int = Field(..., ge=2)
    r: int = Field(..., ge=1)
    q: int = Field(..., ge=3)

    @model_validator(mode="after")
    def validate_primes(self) -> "NonabelianPRQShape":
        if not (isprime(self.p) and isprime(self.q)) or self.p == self.q:
            raise ValueError("p and q must be distinct primes")
        if (self.q - 1) % self.p:
            raise ValueError(f"{self.p} does not divide {self.q} - 1")
        return self


Shape = Union[CyclicShape, AbelianPGroupShape, NonabelianPRQShape]


class GroupReport(BaseModel):
    """Description of a built group for the group command and tool."""

    spec: Optional[str] = Field(None, description="Canonical spec string")
    order: int = Field(..., ge=1, description="Group order")
    element_orders: Dict[int, int] = Field(default_factory=dict, description="Element order -> count")
    table: Optional[List[List[int]]] = Field(None, description="Cayley table, row-major")
    predicates: Optional[Dict[str, bool]] = Field(None, description="Group properties")
    subgroups: Optional[List[List[int]]] = Field(None, description="All subgroups as element lists")


class WitnessRecord(BaseModel):
    """A non-CCLT or non-ACLT group of order n with its failing divisor."""

    n: int = Field(..., ge=1, description="Order of the witness group")
    kind: Literal["cclt", "aclt"] = Field(..., description="Property the group fails")
    spec: str = Field(..., description="Recipe of the witness group")
    failing_divisor: int = Field(..., ge=1, description="Divisor d < n without a subgroup of the kind")
    clause: str = Field(..., description="Case of the construction that produced the group")
    verified: bool = Field(False, description="Brute force confirmed the failure")
    table: Optional[List[List[int]]] = Field(None, description="Cayley table when within the bound")

    @model_validator(mode="after")
    def validate_divisor(self) -> "WitnessRecord":
        if self.n % self.failing_divisor or self.failing_divisor >= self.n:
            raise ValueError(f"{self.failing_divisor} is not a proper divisor of {self.n}")
        return self


class CatalogEntryModel(BaseModel):
    """One catalog order with its recipes."""

    n: int = Field(..., ge=1)
    completeness: Literal["complete", "partial"]
    fixture_count: Optional[int] = Field(None, description="Known number of groups of order n")
    recipes: List[str] = Field(default_factory=list, description="One spec per isomorphism class")


class XGraphModel(BaseModel):
    """JSON document of the graph X_n."""

    n: int = Field(..., ge=1)
    vertices: List[str]
    edges: List[Tuple[int, int]]
    complete: bool
    connected: bool


class CheckResult(BaseModel):
    """Outcome of one verification check."""

    suite: str
    name: str
    passed: bool
    detail: str = ""


class CliConfig(BaseModel):
    """Validated command line."""

    command: str = Field(..., description="Subcommand name")
    arguments: Dict[str, Any] = Field(default_factory=dict, description="Subcommand arguments")
    output_format: Literal["text", "json", "csv"] = Field("json", description="Output format")
    bound: int = Field(DEFAULT_ENUMERATION_BOUND, description="Enumeration bound in effect")
    slow: bool = Field(False, description="Include order-243 checks")
    max_order: int = Field(DEFAULT_SUITE_MAX_ORDER, ge=1, description="Largest catalog order for suites")

    @field_validator("bound")
    @classmethod
    def validate_bound(cls, v: int) -> int:
        """Overrides below the default never take effect."""
        return max(v, DEFAULT_ENUMERATION_BOUND)


class ErrorResponse(BaseModel):
    """Error payload for the CLI and the tool server."""

    error: str = Field(..., description="Error message")
    details: Optional[str] = Field(None, description="Error details")

    @classmethod
    def from_exception(cls, e: Exception) -> "ErrorResponse":
        """Create an ErrorResponse from an exception."""
        return cls(error=str(e), details=repr(e))
