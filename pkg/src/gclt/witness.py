"""
Counterexample groups for orders that are not CCLT or not ACLT numbers.

Each construction follows the shape of n; the group is rebuilt and checked
by brute force whenever its order is within the enumeration bound.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

import logfire
from sympy import n_order

from . import catalog
from .config import enumeration_bound
from .constructors import companion_matrix_of_order, operand, render_matrix
from .errors import (
    BoundExceededError,
    NotApplicableError,
    UnsupportedOrderError,
    WitnessGapError,
    WitnessVerificationError,
)
from .group_core import FiniteGroup
from .models import WitnessRecord
from .numbers import factorize, is_aclt_number, is_cclt_number
from .predicates import is_aclt_group, is_cclt_group
from .specs import build

JORDAN_3 = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]

@dataclass(frozen=True)
class Witness:
    """A group of order n lacking a cyclic (cclt) or abelian (aclt) subgroup of order d."""

    n: int
    kind: str
    spec: str
    failing_divisor: int
    clause: str
    group: Optional[FiniteGroup] = field(default=None, repr=False, compare=False)
    verified: bool = False

    def to_record(self, include_table: bool = True) -> WitnessRecord:
        table = self.group.rows if include_table and self.group is not None else None
        return WitnessRecord(
            n=self.n,
            kind=self.kind,
            spec=self.spec,
            failing_divisor=self.failing_divisor,
            clause=self.clause,
            verified=self.verified,
            table=table,
        )


def _times(spec: str, m: int) -> str:
    """spec x C_m, or spec alone when m is 1."""
    return spec if m == 1 else f"{operand(spec, 'x')}xC{m}"


def unit_of_order(modulus: int, k: int) -> int:
    """Smallest r >= 2 of multiplicative order k modulo modulus."""
    for r in range(2, modulus):
        if gcd(r, modulus) == 1 and n_order(r, modulus) == k:
            return r
    raise WitnessGapError(f"no unit of order {k} modulo {modulus}")


def _metacyclic(m: int, n: int) -> str:
    """The split metacyclic group C_m x| C_n with an action of order n."""
    return f"M({m},{n},{unit_of_order(m, n)})"


def _divides_pair(primes: List[int], exponent: Dict[int, int]) -> Optional[Tuple[int, int]]:
    for pi in primes:
        for pj in primes:
            if pi != pj and any((pj**k - 1) % pi == 0 for k in range(1, exponent[pj] + 1)):
                return pi, pj
    return None


def _cclt_construction(n: int) -> Tuple[str, int, str]:
    fact = factorize(n)
    exponent = dict(fact.factors)
    primes = fact.primes

    if len(primes) == 1:
        p, k = fact.factors[0]
        return _times(f"C{p}xC{p}", p ** (k - 2)), p ** (k - 1), "prime power: C_p x C_p x C_p^(k-2)"

    if all(a == 1 for a in fact.exponents):
        pi, pj = next((a, b) for a in primes for b in primes if (b - 1) % a == 0 and a != b)
        spec = _times(_metacyclic(pj, pi), n // (pi * pj))
        return spec, pi * pj, "squarefree: (C_pj x| C_pi) x C_rest"

    pj = max(p for p in primes if exponent[p] >= 2)
    a = exponent[pj]
    spec = _times(f"C{pj}xC{pj ** (a - 1)}", n // pj**a)
    return spec, pj**a, "mixed: C_pj x C_pj^(a-1) x C_rest"


def _nonabelian_p_power(p: int, a: int) -> str:
    if p == 2:
        return f"D{2 ** (a - 1)}"
    return f"M({p ** (a - 1)},{p},{1 + p ** (a - 2)})"


def _p2q_construction(p: int, q: int) -> Optional[Tuple[str, int, str]]:
    """Witness for n = p^2 q, or None when every group of that order is ACLT."""
    n = p * p * q
    if n == 12:
        return catalog.A4, 6, "n=12: A4"
    if p == 2 and q % 4 == 1:
        return _metacyclic(q, 4), 2 * q, "n=4q, q=4k+1: C_q x| C_4"
    if p == 2:
        return None
    if (q - 1) % (p * p) == 0:
        return _metacyclic(q, p * p), p * q, "n=p^2q, p^2|q-1: C_q x| C_p^2"
    if (p - 1) % q == 0:
        return _metacyclic(p * p, q), p * q, "n=p^2q, q|p-1: C_p^2 x| C_q"
    if (p + 1) % q == 0:
        matrix = companion_matrix_of_order(p, q)
        if matrix is None:
            raise WitnessGapError(f"no matrix of order {q} over F_{p}")
        return f"E({p},2,{render_matrix(matrix)},{q})", p * q, "n=p^2q, q|p+1: (C_p x C_p) x| C_q"
    return None


def _aclt_construction(n: int) -> Optional[Tuple[str, int, str]]:
    fact = factorize(n)
    exponent = dict(fact.factors)
    primes = fact.primes

    if len(primes) == 1:
        p, m = fact.factors[0]
        if p == 2:
            base = f"E(2,3,{render_matrix(JORDAN_3)},4)"
        else:
            base = _metacyclic(p**3, p**2)
        return _times(base, p ** (m - 5)), p ** (m - 1), "prime power p^m, m>=5"

    if all(a == 1 for a in fact.exponents):
        pi, pj = next((a, b) for a in primes for b in primes if (b - 1) % a == 0 and a != b)
        spec = _times(_metacyclic(pj, pi), n // (pi * pj))
        return spec, pi * pj, "squarefree: (C_pj x| C_pi) x C_rest"

    high = [p for p in primes if exponent[p] >= 3]
    if high:
        p = high[0]
        a = exponent[p]
        return _times(_nonabelian_p_power(p, a), n // p**a), p**a, "exponent >= 3: H x C_rest"

    if len(primes) >= 3:
        pair = _divides_pair(primes, exponent)
        if pair is None:
            return None
        pi, pj = pair
        top = pj ** exponent[pj]
        if (pj - 1) % pi == 0:
            H = _metacyclic(top, pi)
        else:
            matrix = companion_matrix_of_order(pj, pi)
            if matrix is None:
                return None
            H = f"E({pj},2,{render_matrix(matrix)},{pi})"
        d = pi ** exponent[pi] * top
        return _times(H, n // (pi * top)), d, "three or more primes: H x C_rest"

    p, q = primes
    if sorted(fact.exponents) == [1, 2]:
        if exponent[q] == 2:
            p, q = q, p
        return _p2q_construction(p, q)

    # n = p^2 q^2 with p < q
    if (q - 1) % p == 0 and (q - 1) % (p * p) and (q + 1) % p and (p * p - 1) % q:
        lam = unit_of_order(q, p)
        spec = f"E({q},2,{render_matrix([[lam, 0], [0, lam]])},{p * p})"
        return spec, p * p * q, "n=p^2q^2: (C_q x C_q) x| C_p^2"
    for a, b in ((p, q), (q, p)):
        inner = _p2q_construction(a, b)
        if inner is not None:
            spec, d, _ = inner
            return _times(spec, b), d * b, "n=p^2q^2: H x C_q"
    return None


def _catalog_fallback(n: int, kind: str) -> Tuple[str, int, str]:
    check = is_cclt_group if kind == "cclt" else is_aclt_group
    try:
        groups, complete = catalog.groups_of_order(n)
    except UnsupportedOrderError:
        raise WitnessGapError(f"no {kind} witness construction for n={n} and no catalog entry")
    for G in groups:
        report = check(G)
        if not report.ok:
            return G.spec, report.missing[0], "catalog search"
    raise WitnessGapError(
        f"no non-{kind.upper()} group of order {n} in the {'complete' if complete else 'partial'} catalog"
    )


def _realize(n: int, kind: str, spec: str, d: int, clause: str, verify: bool) -> Witness:
    if n > enumeration_bound():
        logfire.info("Witness above the enumeration bound, table omitted", n=n, kind=kind, spec=spec)
        return Witness(n, kind, spec, d, clause)

    try:
        group = build(spec)
    except BoundExceededError:
        return Witness(n, kind, spec, d, clause)

    verified = False
    if verify:
        report = (is_cclt_group if kind == "cclt" else is_aclt_group)(group)
        if group.order != n or report.ok or report.divisors[d].found:
            error = WitnessVerificationError(
                f"{spec} of order {group.order} does not witness non-{kind.upper()} at d={d}"
            )
            logfire.error("Witness verification failed", exception=error, n=n, spec=spec)
            raise error
        verified = True
    return Witness(n, kind, group.spec or spec, d, clause, group, verified)


def non_cclt_witness(n: int, verify: bool = True) -> Witness:
    """A group of order n without a cyclic subgroup of some proper divisor order.

    Raises:
        NotApplicableError: If n is a CCLT number
        WitnessVerificationError: If brute force does not confirm the failure
    """
    if is_cclt_number(n):
        raise NotApplicableError(f"{n} is a CCLT number; every group of order {n} is CCLT")
    with logfire.span("Constructing non-CCLT witness", n=n):
        spec, d, clause = _cclt_construction(n)
        return _realize(n, "cclt", spec, d, clause, verify)


def non_aclt_witness(n: int, verify: bool = True) -> Witness:
    """A group of order n without an abelian subgroup of some proper divisor order.

    Raises:
        NotApplicableError: If n is an ACLT number
        WitnessGapError: If no construction applies and the catalog has no fallback
        WitnessVerificationError: If brute force does not confirm the failure
    """
    if is_aclt_number(n):
        raise NotApplicableError(f"{n} is an ACLT number; every group of order {n} is ACLT")
    with logfire.span("Constructing non-ACLT witness", n=n):
        construction = _aclt_construction(n)
        if construction is None:
            construction = _catalog_fallback(n, "aclt")
        spec, d, clause = construction
        return _realize(n, "aclt", spec, d, clause, verify)


def witness(n: int, kind: str, verify: bool = True) -> Witness:
    """Dispatch to the CCLT or ACLT witness construction."""
    if kind == "cclt":
        return non_cclt_witness(n, verify)
    if kind == "aclt":
        return non_aclt_witness(n, verify)
    raise ValueError(f"unknown witness kind {kind!r}; expected 'cclt' or 'aclt'")
