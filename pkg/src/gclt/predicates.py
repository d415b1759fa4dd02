"""
Brute-force group properties.

The converse-of-Lagrange predicates return a DivisorWitnessReport that keeps
an explicit subgroup for every divisor it found, so failures can be replayed.
"""

from collections import Counter
from math import gcd
from typing import Callable, Dict, List, Optional

from sympy import isprime, primefactors

from .config import check_order
from .errors import ClosedFormDomainError
from .group_core import (
    FiniteGroup,
    Subgroup,
    abelian_subgroup_of_order,
    all_cyclic_subgroups,
    all_subgroups,
    center,
    centralizer,
    commutator_subgroup,
    is_abelian_subgroup,
    is_cyclic_subgroup,
    is_isomorphic,
    is_normal,
    maximal_abelian_subgroups,
    maximal_subgroups,
    quotient,
    sylow_subgroup,
)
from .models import (
    AbelianPGroupShape,
    CyclicShape,
    DivisorResult,
    DivisorWitnessReport,
    GroupReport,
    NonabelianPRQShape,
    Shape,
)
from .numbers import divisors


def is_abelian(G: FiniteGroup) -> bool:
    return bool(G.commutes.all())


def is_cyclic(G: FiniteGroup) -> bool:
    return bool((G.element_orders == G.order).any())


def _report(
    G: FiniteGroup,
    kind: str,
    divisors: List[int],
    find: Callable[[int], Optional[Subgroup]],
) -> DivisorWitnessReport:
    results: Dict[int, DivisorResult] = {}
    for d in divisors:
        witness = find(d)
        results[d] = DivisorResult(
            found=witness is not None,
            witness=list(witness.elements) if witness is not None else None,
        )
    return DivisorWitnessReport(
        group=G.spec,
        kind=kind,
        ok=all(r.found for r in results.values()),
        divisors=results,
    )


def is_clt_group(G: FiniteGroup) -> DivisorWitnessReport:
    """Subgroups of every order dividing |G|, |G| included.

    Raises:
        BoundExceededError: If G is larger than the enumeration bound
    """
    by_order: Dict[int, Subgroup] = {}
    for sub in all_subgroups(G):
        by_order.setdefault(sub.order, sub)
    return _report(G, "clt", divisors(G.order), by_order.get)


def is_cclt_group(G: FiniteGroup) -> DivisorWitnessReport:
    """Cyclic subgroups of every proper divisor order."""
    check_order(G.order, "CCLT check of group")
    by_order: Dict[int, Subgroup] = {}
    for sub in all_cyclic_subgroups(G):
        by_order.setdefault(sub.order, sub)
    return _report(G, "cclt", divisors(G.order)[:-1], by_order.get)


def is_aclt_group(G: FiniteGroup) -> DivisorWitnessReport:
    """Abelian subgroups of every proper divisor order.

    Every abelian subgroup lies in a maximal one, and an abelian group has
    subgroups of all orders dividing its own, so only maximal abelian
    subgroups are inspected.
    """
    check_order(G.order, "ACLT check of group")
    maximal = maximal_abelian_subgroups(G)

    def find(d: int) -> Optional[Subgroup]:
        for A in maximal:
            if A.order % d == 0:
                return abelian_subgroup_of_order(G, A, d)
        return None

    return _report(G, "aclt", divisors(G.order)[:-1], find)


def is_metacyclic(G: FiniteGroup) -> bool:
    """Some cyclic normal subgroup has a cyclic quotient."""
    check_order(G.order, "metacyclic check of group")
    for H in all_cyclic_subgroups(G):
        if is_normal(G, H) and is_cyclic(quotient(G, H)):
            return True
    return False


def _sylows(G: FiniteGroup) -> List[Subgroup]:
    return [sylow_subgroup(G, p) for p in primefactors(G.order)]


def is_z_group(G: FiniteGroup) -> bool:
    """All Sylow subgroups cyclic."""
    return all(is_cyclic_subgroup(G, P) for P in _sylows(G))


def is_a_group(G: FiniteGroup) -> bool:
    """All Sylow subgroups abelian."""
    return all(is_abelian_subgroup(G, P) for P in _sylows(G))


def is_metabelian(G: FiniteGroup) -> bool:
    return is_abelian_subgroup(G, commutator_subgroup(G))


def is_supersolvable(G: FiniteGroup) -> bool:
    """Every maximal subgroup has prime index."""
    return all(isprime(G.order // M.order) for M in maximal_subgroups(G))


def is_nilpotent(G: FiniteGroup) -> bool:
    """Every Sylow subgroup is normal."""
    return all(is_normal(G, P) for P in _sylows(G))


def is_minimal_noncyclic(G: FiniteGroup) -> bool:
    """Non-cyclic with every proper subgroup cyclic."""
    if is_cyclic(G):
        return False
    return all(is_cyclic_subgroup(G, M) for M in maximal_subgroups(G))


def is_minimal_nonabelian(G: FiniteGroup) -> bool:
    """Non-abelian with every proper subgroup abelian."""
    if is_abelian(G):
        return False
    return all(is_abelian_subgroup(G, M) for M in maximal_subgroups(G))


def product_cclt_expected(H: FiniteGroup, K: FiniteGroup) -> bool:
    """Whether H x K is CCLT, decided without building the product.

    Both factors must be cyclic with coprime orders, or H x K must be
    C_p x C_{p^k}. A trivial factor leaves the other factor unchanged.
    """
    if H.order == 1:
        return is_cclt_group(K).ok
    if K.order == 1:
        return is_cclt_group(H).ok
    if not (is_cyclic(H) and is_cyclic(K)):
        return False
    if gcd(H.order, K.order) == 1:
        return True

    primes = primefactors(H.order * K.order)
    return len(primes) == 1 and min(H.order, K.order) == primes[0]


def product_aclt_expected(H: FiniteGroup, K: FiniteGroup) -> bool:
    """Whether H x K is ACLT, decided without building the product.

    Both factors must be ACLT and one abelian; when the other is not
    abelian, every prime of the abelian factor's order must divide the
    other factor's order.
    """
    h_abelian, k_abelian = is_abelian(H), is_abelian(K)
    if not (h_abelian or k_abelian):
        return False
    if h_abelian and k_abelian:
        return True

    abelian, other = (H, K) if h_abelian else (K, H)
    if not is_aclt_group(other).ok:
        return False
    return set(primefactors(abelian.order)) <= set(primefactors(other.order))


def count_subgroups(G: FiniteGroup) -> int:
    return len(all_subgroups(G))


def count_cyclic_subgroups(G: FiniteGroup) -> int:
    check_order(G.order, "cyclic subgroup count of group")
    return len(all_cyclic_subgroups(G))


def cclt_shape(G: FiniteGroup) -> Shape:
    """The closed-form shape of a CCLT group.

    Raises:
        ClosedFormDomainError: If G is not CCLT or is a nonabelian p-group
    """
    n = G.order
    if is_cyclic(G):
        return CyclicShape(n=n)
    if not is_cclt_group(G).ok:
        raise ClosedFormDomainError(f"{G.spec or 'group'} is not CCLT")

    primes = primefactors(n)
    if is_abelian(G):
        if len(primes) != 1:
            raise ClosedFormDomainError(f"abelian CCLT group of order {n} must be a p-group")
        p = primes[0]
        return AbelianPGroupShape(p=p, k=_exponent(n, p))

    if len(primes) == 2:
        for p, q in (primes, primes[::-1]):
            r = _exponent(n, p)
            if n == p**r * q and (q - 1) % p == 0:
                return NonabelianPRQShape(p=p, r=r, q=q)
    raise ClosedFormDomainError(f"nonabelian CCLT group of order {n} is outside the counted shapes")


def _exponent(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def has_trivial_center_commutator_meet(G: FiniteGroup) -> bool:
    """Z(G) and G' meet only in the identity."""
    return center(G).members & commutator_subgroup(G).members == {0}


def abelian_index_p_subgroup_is_normal(G: FiniteGroup) -> bool:
    """Every abelian subgroup of index p, p the smallest prime of |G|, is normal."""
    if G.order == 1 or is_abelian(G):
        return True
    p = primefactors(G.order)[0]
    # a proper abelian subgroup of index p cannot lie in a larger abelian one
    return all(is_normal(G, A) for A in maximal_abelian_subgroups(G) if A.order * p == G.order)


def sylow_q_structure(G: FiniteGroup) -> Dict[str, bool]:
    """Structure of the Sylow subgroup K for the largest prime q of |G|.

    Reports whether K is normal, whether G' lies in K and, for nonabelian G
    with two prime divisors p < q, whether C_G(K) is abelian of index p.
    """
    if G.order == 1:
        return {"normal": True, "commutator_inside": True, "centralizer_abelian_index_p": True}
    primes = primefactors(G.order)
    K = sylow_subgroup(G, primes[-1])
    result = {
        "normal": is_normal(G, K),
        "commutator_inside": commutator_subgroup(G).issubset(K),
        "centralizer_abelian_index_p": True,
    }
    if len(primes) == 2 and not is_abelian(G):
        C = centralizer(G, K)
        result["centralizer_abelian_index_p"] = is_abelian_subgroup(G, C) and C.order * primes[0] == G.order
    return result


def same_order_subgroups_isomorphic(G: FiniteGroup) -> bool:
    """Any two subgroups of the same order are isomorphic."""
    by_order: Dict[int, List[Subgroup]] = {}
    for sub in all_subgroups(G):
        by_order.setdefault(sub.order, []).append(sub)
    for subs in by_order.values():
        first = subs[0].as_group()
        if not all(is_isomorphic(first, other.as_group()) for other in subs[1:]):
            return False
    return True


GROUP_PROPERTIES: Dict[str, Callable[[FiniteGroup], bool]] = {
    "abelian": is_abelian,
    "cyclic": is_cyclic,
    "clt": lambda G: is_clt_group(G).ok,
    "cclt": lambda G: is_cclt_group(G).ok,
    "aclt": lambda G: is_aclt_group(G).ok,
    "metacyclic": is_metacyclic,
    "z_group": is_z_group,
    "a_group": is_a_group,
    "metabelian": is_metabelian,
    "supersolvable": is_supersolvable,
    "nilpotent": is_nilpotent,
    "minimal_noncyclic": is_minimal_noncyclic,
    "minimal_nonabelian": is_minimal_nonabelian,
}


def group_report(G: FiniteGroup, with_predicates: bool = False, with_subgroups: bool = False) -> GroupReport:
    """Order statistics of G, optionally with every property and the subgroup lattice."""
    report = GroupReport(
        spec=G.spec,
        order=G.order,
        element_orders=dict(sorted(Counter(G.element_orders.tolist()).items())),
        table=G.rows,
    )
    if with_predicates:
        report.predicates = {name: check(G) for name, check in GROUP_PROPERTIES.items()}
    if with_subgroups:
        report.subgroups = [list(H.elements) for H in all_subgroups(G)]
    return report
