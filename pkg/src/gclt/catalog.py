"""
Isomorphism-class representatives of every group of a small order.

Complete orders list one recipe per isomorphism class and must match the
shipped fixture count. Squarefree orders without an explicit list are
filled by enumerating the split metacyclic groups C_a x| C_b with ab = n.
"""

import csv
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Dict, List, Optional, Tuple

import logfire
from sympy import factorint

from .errors import CatalogConsistencyError, UnsupportedOrderError
from .group_core import FiniteGroup, is_isomorphic
from .models import CatalogEntryModel
from .specs import GroupSpec, build, parse_spec

COMPLETE = "complete"
PARTIAL = "partial"
SQUAREFREE_LIMIT = 63

A4 = "E(2,2,[0,1;1,1],3)"

_RECIPES: Dict[int, List[str]] = {
    1: ["C1"],
    2: ["C2"],
    3: ["C3"],
    4: ["C4", "C2xC2"],
    5: ["C5"],
    6: ["C6", "D3"],
    7: ["C7"],
    8: ["C8", "C2xC4", "C2xC2xC2", "D4", "Q8"],
    9: ["C9", "C3xC3"],
    10: ["C10", "D5"],
    11: ["C11"],
    12: ["C12", "C2xC6", "D6", "Dic3", A4],
    13: ["C13"],
    14: ["C14", "D7"],
    15: ["C15"],
    16: [
        "C16",
        "C2xC8",
        "C4xC4",
        "C2xC2xC4",
        "C2xC2xC2xC2",
        "D8",
        "Q16",
        "SD16",
        "M(8,2,5)",
        "C2xD4",
        "C2xQ8",
        "M(4,4,3)",
        "E(2,2,[1,1;0,1],4)",
        "C4oD4",
    ],
    18: ["C18", "C3xC6", "D9", "C3xD3", "E(3,2,[2,0;0,2],2)"],
    20: ["C20", "C2xC10", "D10", "Dic5", "M(5,4,2)"],
    27: ["C27", "C3xC9", "C3xC3xC3", "E(3,2,[1,1;0,1],3)", "M(9,3,4)"],
    28: ["C28", "C2xC14", "D14", "Dic7"],
}

_PARTIAL_RECIPES: Dict[int, List[str]] = {
    24: [
        "C24",
        "C2xC12",
        "C2xC2xC6",
        "D12",
        "Dic6",
        "C3xD4",
        "C3xQ8",
        f"C2x{A4}",
        "P(4;(1,2),(1,2,3,4))",
    ],
    32: [
        "C32",
        "C2xC16",
        "C4xC8",
        "C2xC2xC8",
        "D16",
        "Q32",
        "SD32",
        "E(2,3,[1,1,0;0,1,1;0,0,1],4)",
    ],
}


def _is_squarefree(n: int) -> bool:
    return all(a == 1 for a in factorint(n).values())


@lru_cache(maxsize=1)
def fixture_counts() -> Dict[int, Tuple[int, str]]:
    """Known number of groups per order with its provenance, from data/group_counts.csv."""
    text = resources.files("gclt").joinpath("data/group_counts.csv").read_text()
    rows = csv.DictReader(text.splitlines())
    return {int(row["n"]): (int(row["count"]), row["source"]) for row in rows}


def _squarefree_recipe(a: int, b: int, r: int) -> str:
    if b == 1:
        return f"C{a}"
    if b == 2 and a > 2 and r == a - 1:
        return f"D{a}"
    return f"M({a},{b},{r})"


def enumerate_squarefree(n: int) -> List[str]:
    """One recipe per group of squarefree order n.

    Every group of squarefree order is metacyclic(a, b, r) with ab = n and
    r^b = 1 (mod a); candidates are taken with b and then r increasing and
    kept when not isomorphic to an earlier one.

    Raises:
        ValueError: If n is not squarefree
    """
    if n < 1 or not _is_squarefree(n):
        raise ValueError(f"{n} is not squarefree")
    if n == 1:
        return ["C1"]

    kept: List[Tuple[str, FiniteGroup]] = []
    with logfire.span("Enumerating squarefree order", n=n):
        for b in (d for d in range(1, n) if n % d == 0):
            a = n // b
            for r in range(1, a):
                if pow(r, b, a) != 1 or gcd(r, a) != 1:
                    continue
                recipe = _squarefree_recipe(a, b, r)
                group = build(recipe)
                if not any(is_isomorphic(group, other) for _, other in kept):
                    kept.append((recipe, group))
    logfire.debug("Squarefree order enumerated", n=n, count=len(kept))
    return [recipe for recipe, _ in kept]


def supported_orders() -> List[Tuple[int, str]]:
    """Every catalog order with its completeness, increasing."""
    orders = {n: COMPLETE for n in _RECIPES}
    orders.update((n, COMPLETE) for n in range(1, SQUAREFREE_LIMIT + 1) if _is_squarefree(n))
    orders.update((n, PARTIAL) for n in _PARTIAL_RECIPES)
    return sorted(orders.items())


def _unsupported(n: int, detail: str = "") -> UnsupportedOrderError:
    return UnsupportedOrderError(n, [m for m, _ in supported_orders()], detail)


@lru_cache(maxsize=None)
def _entry(n: int) -> CatalogEntryModel:
    counts = fixture_counts()
    fixture = counts.get(n, (None, ""))[0]
    if n in _RECIPES:
        return CatalogEntryModel(n=n, completeness=COMPLETE, fixture_count=fixture, recipes=_RECIPES[n])
    if n in _PARTIAL_RECIPES:
        return CatalogEntryModel(n=n, completeness=PARTIAL, fixture_count=fixture, recipes=_PARTIAL_RECIPES[n])
    if 1 <= n <= SQUAREFREE_LIMIT and _is_squarefree(n):
        return CatalogEntryModel(n=n, completeness=COMPLETE, fixture_count=fixture, recipes=enumerate_squarefree(n))
    raise _unsupported(n)


def catalog_entry(n: int) -> CatalogEntryModel:
    """The catalog entry of order n.

    Raises:
        UnsupportedOrderError: If n is not a catalog order
    """
    return _entry(n).model_copy(deep=True)


@lru_cache(maxsize=None)
def _groups(n: int) -> Tuple[FiniteGroup, ...]:
    entry = _entry(n)
    with logfire.span("Building catalog order", n=n, count=len(entry.recipes)):
        return tuple(build(recipe) for recipe in entry.recipes)


def groups_of_order(n: int) -> Tuple[List[FiniteGroup], bool]:
    """Representatives of order n, cyclic first, and whether the list is complete.

    Raises:
        UnsupportedOrderError: If n is not a catalog order
    """
    entry = _entry(n)
    return list(_groups(n)), entry.completeness == COMPLETE


def complete_orders(max_order: Optional[int] = None) -> List[int]:
    return [n for n, c in supported_orders() if c == COMPLETE and (max_order is None or n <= max_order)]


def find_iso_class(G: FiniteGroup) -> GroupSpec:
    """The catalog recipe isomorphic to G.

    Raises:
        UnsupportedOrderError: If |G| is not a complete catalog order
        CatalogConsistencyError: If no recipe of a complete order matches
    """
    groups, complete = groups_of_order(G.order)
    if not complete:
        raise _unsupported(G.order, "(catalog is partial)")
    for recipe, H in zip(_entry(G.order).recipes, groups):
        if is_isomorphic(G, H):
            return parse_spec(recipe)
    raise CatalogConsistencyError(
        f"{G.spec or 'group'} of order {G.order} matches no catalog recipe", G.order
    )


def verify_entry(n: int) -> CatalogEntryModel:
    """Check pairwise non-isomorphism and, for complete orders, the fixture count.

    Raises:
        CatalogConsistencyError: On a duplicate class or a count mismatch
    """
    entry = _entry(n)
    groups = _groups(n)
    for i, G in enumerate(groups):
        for j in range(i):
            if is_isomorphic(G, groups[j]):
                raise CatalogConsistencyError(
                    f"recipes {entry.recipes[j]} and {entry.recipes[i]} are isomorphic", n
                )
    if entry.completeness == COMPLETE and entry.fixture_count != len(groups):
        raise CatalogConsistencyError(
            f"order {n} has {len(groups)} recipes but {entry.fixture_count} groups are known", n
        )
    return catalog_entry(n)


def catalog_dump(n: Optional[int] = None) -> List[CatalogEntryModel]:
    """Entries of one order, or of every supported order."""
    orders = [n] if n is not None else [m for m, _ in supported_orders()]
    return [catalog_entry(m) for m in orders]
