"""
Arithmetic classification of group orders.

Decides whether every group of order n is cyclic, abelian, CCLT or ACLT from
the factorization of n alone, and evaluates the closed-form subgroup counts
for the three shapes of CCLT groups.
"""

from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Set, Tuple

import logfire
from sympy import divisor_count, factorint, totient
from sympy import divisors as sympy_divisors

from .config import MAX_NUMBER
from .errors import ClosedFormDomainError, NumberOutOfRangeError
from .models import (
    AbelianPGroupShape,
    CyclicShape,
    Factorization,
    NonabelianPRQShape,
    NumberClass,
    Shape,
)


def _check_range(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise NumberOutOfRangeError(f"expected an integer, got {n!r}")
    if not 1 <= n <= MAX_NUMBER:
        raise NumberOutOfRangeError(f"{n} is outside the supported range 1..{MAX_NUMBER}")
    return n


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime factorization of n, primes increasing.

    Raises:
        NumberOutOfRangeError: If n < 1 or n > 10^6
    """
    _check_range(n)
    return Factorization(n=n, factors=sorted(factorint(n).items()))


def tau(n: int) -> int:
    """Number of divisors of n."""
    _check_range(n)
    return int(divisor_count(n))


def phi(n: int) -> int:
    """Euler's totient."""
    _check_range(n)
    return int(totient(n))


def prime_set(n: int) -> Set[int]:
    return set(factorize(n).primes)


def divisors(n: int) -> List[int]:
    _check_range(n)
    return [int(d) for d in sympy_divisors(n)]


def proper_divisors(n: int) -> List[int]:
    """Divisors d of n with d < n."""
    return divisors(n)[:-1]


def _omega(fact: Factorization) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(fact.exponents)


def _cyclic_clause(n: int) -> Optional[str]:
    if gcd(n, phi(n)) == 1:
        return "gcd(n,phi(n))=1"
    return None


def _abelian_clause(fact: Factorization) -> Optional[str]:
    if any(a > 2 for a in fact.exponents):
        return None
    for p, _ in fact.factors:
        for q, b in fact.factors:
            if p != q and any((q**k - 1) % p == 0 for k in range(1, b + 1)):
                return None
    return "cubefree and no p_i | p_j^k - 1"


def _cclt_clause(n: int, fact: Factorization) -> Optional[str]:
    cyclic = _cyclic_clause(n)
    if cyclic:
        return cyclic
    if _omega(fact) == 2:
        return "n=pq"
    return None


def _p2q(fact: Factorization) -> Optional[Tuple[int, int]]:
    """(p, q) when n = p^2 q with p, q distinct primes."""
    if sorted(fact.exponents) != [1, 2]:
        return None
    p = next(prime for prime, a in fact.factors if a == 2)
    q = next(prime for prime, a in fact.factors if a == 1)
    return p, q


def _aclt_clause(n: int, fact: Factorization) -> Optional[str]:
    abelian = _abelian_clause(fact)
    if abelian:
        return "abelian number"
    if len(fact.factors) == 2 and fact.exponents == [1, 1]:
        return "n=pq"
    if len(fact.factors) <= 1 and _omega(fact) <= 4:
        return "n=p^m, m<=4"
    pq = _p2q(fact)
    if pq:
        p, q = pq
        # the quadratic clause starts at k=1, so q=3 (n=12) is excluded
        if p == 2 and q % 4 == 3 and q >= 7:
            return "n=4q, q=4k+3"
        if (q - 1) % p == 0 and (q - 1) % (p * p) and (q + 1) % p and (p * p - 1) % q:
            return "n=p^2q, p|q-1, p^2!|q-1, p!|q+1, q!|p^2-1"
    return None


def is_cyclic_number(n: int) -> bool:
    """Every group of order n is cyclic: gcd(n, phi(n)) = 1."""
    return _cyclic_clause(_check_range(n)) is not None


def is_abelian_number(n: int) -> bool:
    """Every group of order n is abelian.

    n is cubefree and no prime p_i divides p_j^k - 1 for k up to the
    exponent of p_j.
    """
    return _abelian_clause(factorize(n)) is not None


def is_cclt_number(n: int) -> bool:
    """Cyclic number, or a product of exactly two (not necessarily distinct) primes."""
    return _cclt_clause(n, factorize(n)) is not None


def is_aclt_number(n: int) -> bool:
    return _aclt_clause(n, factorize(n)) is not None


def _prq(fact: Factorization) -> Optional[Tuple[int, int, int]]:
    """(p, r, q) when n = p^r q with p | q - 1."""
    if len(fact.factors) != 2:
        return None
    (p1, a1), (p2, a2) = fact.factors
    for (p, r), (q, b) in (((p1, a1), (p2, a2)), ((p2, a2), (p1, a1))):
        if b == 1 and (q - 1) % p == 0:
            return p, r, q
    return None


def g_cclt_count(n: int) -> int:
    """Number of CCLT groups of order n for n not a prime power.

    Raises:
        ClosedFormDomainError: If n is 1 or a prime power
    """
    fact = factorize(n)
    if len(fact.factors) < 2:
        raise ClosedFormDomainError(f"{n} is a prime power; the count formula needs two distinct primes")
    return 2 if _prq(fact) else 1


def g_cclt_prime_power_bound(p: int, k: int) -> Tuple[int, bool]:
    """Known number of CCLT groups of order p^k as (count, exact).

    exact is False when count is only a lower bound.
    """
    fact = factorize(p)
    if len(fact.factors) != 1 or fact.exponents != [1] or k < 1:
        raise ClosedFormDomainError(f"p^k needs a prime p and k >= 1, got p={p}, k={k}")
    if k <= 2:
        return k, True
    if p == 2:
        return (4, True) if k == 3 else (6, False)
    return 3, False


def _shape(shape: Shape) -> Shape:
    if not isinstance(shape, (CyclicShape, AbelianPGroupShape, NonabelianPRQShape)):
        raise ClosedFormDomainError(f"no closed form for {shape!r}")
    return shape


def subgroup_count_closed_form(shape: Shape) -> int:
    """Number of subgroups of a CCLT group of the given shape."""
    shape = _shape(shape)
    if isinstance(shape, CyclicShape):
        return tau(shape.n)
    if isinstance(shape, AbelianPGroupShape):
        return 2 + (shape.p + 1) * (shape.k - 1)
    return 2 * shape.r + shape.q + 1


def cyclic_subgroup_count_closed_form(shape: Shape) -> int:
    """Number of cyclic subgroups of a CCLT group of the given shape."""
    shape = _shape(shape)
    if isinstance(shape, CyclicShape):
        return tau(shape.n)
    if isinstance(shape, AbelianPGroupShape):
        return (shape.k - 1) * shape.p + 2
    return 2 * shape.r + shape.q


def classify(n: int) -> NumberClass:
    """All four number classes of n with the clause that decided each flag."""
    fact = factorize(n)
    clauses: Dict[str, Optional[str]] = {
        "cyclic": _cyclic_clause(n),
        "abelian": _abelian_clause(fact),
        "cclt": _cclt_clause(n, fact),
        "aclt": _aclt_clause(n, fact),
    }
    result = NumberClass(
        n=n,
        reasons={flag: clause or "no clause matched" for flag, clause in clauses.items()},
        **{flag: clause is not None for flag, clause in clauses.items()},
    )
    logfire.debug("Number classified", n=n, cclt=result.cclt, aclt=result.aclt)
    return result


def classify_range(start: int, stop: int) -> List[NumberClass]:
    """Classify every n with start <= n <= stop."""
    _check_range(start)
    _check_range(stop)
    if start > stop:
        raise NumberOutOfRangeError(f"empty range {start}..{stop}")
    with logfire.span("Classifying range", start=start, stop=stop):
        return [classify(n) for n in range(start, stop + 1)]
