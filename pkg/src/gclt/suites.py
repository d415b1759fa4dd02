"""
Brute-force verification suites behind `gclt verify`.

Every suite compares a characterization against direct computation on the
catalog (or on constructed families) and yields one CheckResult per claim.
"""

from typing import Callable, Dict, Iterator, List, Tuple

import logfire
from sympy import isprime, primefactors

from . import catalog, xgraph
from .config import DEFAULT_SUITE_MAX_ORDER, SLOW_SUITE_ORDER, enumeration_bound
from .constructors import abelian, cyclic, dicyclic, dihedral, direct_product, metacyclic
from .errors import GcltError
from .group_core import FiniteGroup, all_subgroups, is_normal, maximal_abelian_subgroups, quotient
from .models import AbelianPGroupShape, CheckResult, CyclicShape, NonabelianPRQShape
from .numbers import (
    cyclic_subgroup_count_closed_form,
    g_cclt_count,
    g_cclt_prime_power_bound,
    is_abelian_number,
    is_aclt_number,
    is_cclt_number,
    is_cyclic_number,
    subgroup_count_closed_form,
)
from .predicates import (
    abelian_index_p_subgroup_is_normal,
    cclt_shape,
    count_cyclic_subgroups,
    count_subgroups,
    has_trivial_center_commutator_meet,
    is_a_group,
    is_abelian,
    is_aclt_group,
    is_cclt_group,
    is_clt_group,
    is_cyclic,
    is_metabelian,
    is_metacyclic,
    is_minimal_nonabelian,
    is_minimal_noncyclic,
    is_supersolvable,
    is_z_group,
    product_aclt_expected,
    product_cclt_expected,
    same_order_subgroups_isomorphic,
    sylow_q_structure,
)
from .witness import non_aclt_witness, non_cclt_witness, unit_of_order

Suite = Callable[[int, bool], Iterator[CheckResult]]

CONTAINMENT_LIMIT = 500
CYCLIC_COUNT_LIMIT = 100
ABELIAN_COUNT_LIMIT = 250
PRQ_COUNT_LIMIT = 200
EDGE_ORACLE_LIMIT = 20
DIHEDRAL_LIMIT = 32
DICYCLIC_LIMIT = 16


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite=suite, name=name, passed=bool(passed), detail=detail)


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(primefactors(n)) == 1


def _catalog_groups(max_order: int, complete_only: bool = False) -> Iterator[Tuple[int, List[FiniteGroup]]]:
    for n, completeness in catalog.supported_orders():
        if n > max_order or (complete_only and completeness != catalog.COMPLETE):
            continue
        groups, _ = catalog.groups_of_order(n)
        yield n, groups


def cclt_numbers(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "cclt-numbers"
    for n, groups in _catalog_groups(max_order, complete_only=True):
        cclt = [G for G in groups if is_cclt_group(G).ok]
        expected = is_cclt_number(n)
        yield _result(suite, f"cclt number {n}", expected == (len(cclt) == len(groups)),
                      f"arithmetic={expected}, cclt groups {len(cclt)}/{len(groups)}")
        if not _is_prime_power(n) and n > 1:
            yield _result(suite, f"G_CCLT({n})", g_cclt_count(n) == len(cclt),
                          f"formula={g_cclt_count(n)}, brute force={len(cclt)}")

    for p, k in ((2, 3), (2, 4), (3, 3)):
        if p**k > max_order:
            continue
        groups, _ = catalog.groups_of_order(p**k)
        count = sum(is_cclt_group(G).ok for G in groups)
        bound, exact = g_cclt_prime_power_bound(p, k)
        passed = count == bound if exact else count >= bound
        yield _result(suite, f"G_CCLT({p}^{k})", passed, f"brute force={count}, expected {'=' if exact else '>='}{bound}")

    for n in range(1, max_order + 1):
        if not is_cclt_number(n):
            yield _witness_check(suite, n, non_cclt_witness)


def _witness_check(suite: str, n: int, construct: Callable) -> CheckResult:
    try:
        found = construct(n)
    except GcltError as e:
        return _result(suite, f"witness {n}", False, str(e))
    return _result(suite, f"witness {n}", found.verified,
                   f"{found.spec} lacks d={found.failing_divisor} ({found.clause})")


def aclt_numbers(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "aclt-numbers"
    for n, groups in _catalog_groups(max_order, complete_only=True):
        flags = {
            "aclt": (is_aclt_number(n), all(is_aclt_group(G).ok for G in groups)),
            "abelian": (is_abelian_number(n), all(is_abelian(G) for G in groups)),
            "cyclic": (is_cyclic_number(n), all(is_cyclic(G) for G in groups)),
        }
        for flag, (arithmetic, brute) in flags.items():
            yield _result(suite, f"{flag} number {n}", arithmetic == brute,
                          f"arithmetic={arithmetic}, brute force={brute}")

    violations = [
        n for n in range(1, CONTAINMENT_LIMIT + 1)
        if (is_cyclic_number(n) and not is_cclt_number(n))
        or (is_cclt_number(n) and not is_aclt_number(n))
        or (is_abelian_number(n) and not is_aclt_number(n))
    ]
    yield _result(suite, f"number containments up to {CONTAINMENT_LIMIT}", not violations, f"violations: {violations}")

    orders = [n for n in range(1, max_order + 1) if not is_aclt_number(n)]
    if slow:
        orders.append(SLOW_SUITE_ORDER)
    for n in orders:
        yield _witness_check(suite, n, non_aclt_witness)


def subgroup_counts(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "subgroup-counts"
    cases: List[Tuple[str, FiniteGroup, object]] = []
    for n in range(1, CYCLIC_COUNT_LIMIT + 1):
        cases.append((f"C{n}", cyclic(n), CyclicShape(n=n)))
    for p in (2, 3, 5):
        k = 2
        while p**k <= ABELIAN_COUNT_LIMIT:
            cases.append((f"C{p}xC{p ** (k - 1)}", abelian([p, p ** (k - 1)]), AbelianPGroupShape(p=p, k=k)))
            k += 1
    for q in (q for q in range(3, PRQ_COUNT_LIMIT) if isprime(q)):
        for p in primefactors(q - 1):
            r = 1
            while p**r * q <= PRQ_COUNT_LIMIT:
                G = metacyclic(q, p**r, unit_of_order(q, p))
                cases.append((G.spec, G, NonabelianPRQShape(p=p, r=r, q=q)))
                r += 1

    for name, G, shape in cases:
        expected = (subgroup_count_closed_form(shape), cyclic_subgroup_count_closed_form(shape))
        actual = (count_subgroups(G), count_cyclic_subgroups(G))
        yield _result(suite, f"counts {name}", expected == actual and cclt_shape(G) == shape,
                      f"closed form {expected}, brute force {actual}")


def hereditary(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "hereditary"
    for n, groups in _catalog_groups(max_order):
        for G in groups:
            cclt, aclt = is_cclt_group(G).ok, is_aclt_group(G).ok
            if not (cclt or aclt):
                continue
            subs = all_subgroups(G)
            if cclt:
                bad = [H.order for H in subs if not is_cclt_group(H.as_group()).ok]
                yield _result(suite, f"{G.spec} subgroups CCLT", not bad, f"non-CCLT subgroup orders {bad}")
                bad = [N.order for N in subs if is_normal(G, N) and not is_cclt_group(quotient(G, N)).ok]
                yield _result(suite, f"{G.spec} quotients CCLT", not bad, f"non-CCLT quotients by orders {bad}")
            if aclt:
                bad = [H.order for H in subs if not is_aclt_group(H.as_group()).ok]
                yield _result(suite, f"{G.spec} subgroups ACLT", not bad, f"non-ACLT subgroup orders {bad}")


def _dihedral_checks(suite: str) -> Iterator[CheckResult]:
    def prime_or_two_power(n: int) -> bool:
        return isprime(n) or n & (n - 1) == 0

    for n in range(2, DIHEDRAL_LIMIT + 1):
        G = dihedral(n)
        yield _result(suite, f"D{n} CCLT criterion", is_cclt_group(G).ok == prime_or_two_power(n))
        aclt_expected = prime_or_two_power(n) or (n % 2 == 0 and isprime(n // 2))
        yield _result(suite, f"D{n} ACLT criterion", is_aclt_group(G).ok == aclt_expected)
    for n in range(2, DICYCLIC_LIMIT + 1):
        yield _result(suite, f"Dic{n} CCLT criterion", is_cclt_group(dicyclic(n)).ok == prime_or_two_power(n))


def _structure_failures(G: FiniteGroup) -> List[str]:
    failures = []
    n = G.order
    cclt, aclt = is_cclt_group(G).ok, is_aclt_group(G).ok
    abelian_g, cyclic_g = is_abelian(G), is_cyclic(G)
    prime_power = _is_prime_power(n)

    if cclt:
        if not is_metacyclic(G):
            failures.append("CCLT but not metacyclic")
        if not prime_power and n > 1 and not is_z_group(G):
            failures.append("CCLT but not a Z-group")
        if not cyclic_g and not prime_power and not is_minimal_noncyclic(G):
            failures.append("CCLT but not minimal non-cyclic")
        if abelian_g or not prime_power:
            try:
                cclt_shape(G)
            except GcltError as e:
                failures.append(f"CCLT outside the counted shapes: {e}")
    if n > 1 and is_z_group(G) and not same_order_subgroups_isomorphic(G):
        failures.append("Z-group with non-isomorphic subgroups of equal order")
    if is_minimal_nonabelian(G) and is_clt_group(G).ok and not aclt:
        failures.append("minimal non-abelian CLT group but not ACLT")
    if is_a_group(G) and not has_trivial_center_commutator_meet(G):
        failures.append("A-group with Z(G) and G' meeting")
    if aclt:
        if not is_metabelian(G):
            failures.append("ACLT but not metabelian")
        if not is_supersolvable(G):
            failures.append("ACLT but not supersolvable")
        if not abelian_index_p_subgroup_is_normal(G):
            failures.append("ACLT with a non-normal abelian subgroup of index p")
        if not abelian_g:
            if len(primefactors(n)) > 2:
                failures.append("nonabelian ACLT with more than two primes")
            broken = [k for k, ok in sylow_q_structure(G).items() if not ok]
            if broken:
                failures.append(f"nonabelian ACLT Sylow-q structure fails: {broken}")
    return failures


def structure(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "structure"
    yield from _dihedral_checks(suite)
    for n, groups in _catalog_groups(max_order):
        for G in groups:
            failures = _structure_failures(G)
            yield _result(suite, f"structure {G.spec}", not failures, "; ".join(failures))

    if 16 <= max_order:
        groups, _ = catalog.groups_of_order(16)
        missing = [G.spec for G in groups if not any(A.order % 8 == 0 for A in maximal_abelian_subgroups(G))]
        yield _result(suite, "order 16 abelian subgroups of order 8", not missing, f"missing in {missing}")


def products(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "products"
    bound = enumeration_bound()
    groups = [G for _, gs in _catalog_groups(max_order) for G in gs]
    with logfire.span("Checking product characterizations", groups=len(groups), bound=bound):
        for i, H in enumerate(groups):
            for K in groups[i:]:
                if H.order * K.order > bound:
                    continue
                product = direct_product(H, K)
                cclt = product_cclt_expected(H, K) == is_cclt_group(product).ok
                aclt = product_aclt_expected(H, K) == is_aclt_group(product).ok
                yield _result(suite, f"{product.spec}", cclt and aclt, f"cclt agrees={cclt}, aclt agrees={aclt}")


def xgraph_claims(max_order: int, slow: bool) -> Iterator[CheckResult]:
    suite = "xgraph-claims"
    if 28 <= max_order:
        X = xgraph.build(28)
        passed = X.vertices == ("C28", "C2xC14", "D14", "Dic7") and X.sorted_edges == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        yield _result(suite, "X_28 vertices and edges", passed, xgraph.to_dot(X))

    for n in catalog.complete_orders(max_order):
        X = xgraph.build(n)
        complete = xgraph.is_complete(X) == (is_abelian_number(n) or is_cclt_number(n))
        connected = xgraph.is_connected(X) == is_aclt_number(n)
        yield _result(suite, f"X_{n} completeness", complete)
        yield _result(suite, f"X_{n} connectivity", connected)
        if is_aclt_number(n):
            star = all((0, j) in X.edges for j in range(1, len(X.vertices)))
            yield _result(suite, f"X_{n} cyclic vertex adjacent to all", star)
        if n <= EDGE_ORACLE_LIMIT and n * n <= enumeration_bound():
            yield _result(suite, f"X_{n} theorem edges equal brute force", X.edges == xgraph.brute_force_build(n).edges)


SUITES: Dict[str, Suite] = {
    "cclt-numbers": cclt_numbers,
    "aclt-numbers": aclt_numbers,
    "subgroup-counts": subgroup_counts,
    "hereditary": hereditary,
    "structure": structure,
    "products": products,
    "xgraph-claims": xgraph_claims,
}


def run_suite(name: str, max_order: int = DEFAULT_SUITE_MAX_ORDER, slow: bool = False) -> List[CheckResult]:
    """Run one suite, or every suite for "all".

    Raises:
        KeyError: If the suite name is unknown
    """
    names = list(SUITES) if name == "all" else [name]
    if name != "all" and name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")

    results: List[CheckResult] = []
    for suite in names:
        with logfire.span("Running verification suite", suite=suite, max_order=max_order, slow=slow):
            results.extend(SUITES[suite](max_order, slow))
        failed = sum(not r.passed for r in results if r.suite == suite)
        logfire.info("Suite finished", suite=suite, failed=failed)
    return results
