"""
Exact computation on finite groups given by Cayley tables.

Elements are the indices 0..n-1 and the identity is always index 0. Tables
are read-only numpy arrays. Derived data (element orders, lattices, Sylow
subgroups) is memoised per group; every fill is idempotent.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import logfire
import networkx as nx
import numpy as np
from sympy import factorint, isprime

from .config import check_order
from .errors import (
    ElementIndexError,
    InvalidGroupTableError,
    NotASubgroupError,
    NotNormalError,
    NotPrimeError,
)

EXHAUSTIVE_ASSOCIATIVITY_ORDER = 64
ASSOCIATIVITY_SAMPLES_PER_CELL = 10

T = TypeVar("T")


def _is_associative(table: np.ndarray) -> bool:
    n = table.shape[0]
    if n <= EXHAUSTIVE_ASSOCIATIVITY_ORDER:
        # left[x, y, z] = (xy)z and right[x, y, z] = x(yz)
        left = table[table]
        right = table[:, table]
        return bool(np.array_equal(left, right))

    rng = np.random.default_rng(n)
    x, y, z = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES_PER_CELL * n * n))
    return bool(np.array_equal(table[table[x, y], z], table[x, table[y, z]]))


def _validate_table(table: np.ndarray) -> None:
    n = table.shape[0]
    ident = np.arange(n)

    if table.min() < 0 or table.max() >= n:
        raise InvalidGroupTableError(f"Cayley table entries must lie in 0..{n - 1}")
    if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
        raise InvalidGroupTableError("Index 0 is not a two-sided identity")
    if not (np.sort(table, axis=1) == ident).all():
        raise InvalidGroupTableError("Every row of the Cayley table must be a permutation")
    if not (np.sort(table, axis=0) == ident[:, None]).all():
        raise InvalidGroupTableError("Every column of the Cayley table must be a permutation")

    inverse = np.argmax(table == 0, axis=1)
    if not (table[inverse, ident] == 0).all():
        raise InvalidGroupTableError("Left and right inverses differ")
    if not _is_associative(table):
        raise InvalidGroupTableError("Cayley table is not associative")


class FiniteGroup:
    """A finite group as a Cayley table.

    table[x][y] is the index of the product x*y and index 0 is the identity.
    Instances are immutable; memoised data never changes observable results.
    """

    def __init__(self, table: Any, spec: Optional[str] = None, *, check: bool = True):
        array = np.array(table, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise InvalidGroupTableError(
                f"Cayley table must be a non-empty square array, got shape {array.shape}"
            )
        if check:
            _validate_table(array)

        array.setflags(write=False)
        inverse = np.argmax(array == 0, axis=1)
        inverse.setflags(write=False)

        self._table = array
        self._inverse = inverse
        self._memo: Dict[str, Any] = {}
        self.spec = spec

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def inverse(self) -> np.ndarray:
        return self._inverse

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested lists, for scalar loops."""
        return self._table.tolist()

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by stepping all powers at once."""
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        power = idx.copy()
        for k in range(1, n + 1):
            orders[(power == 0) & (orders == 0)] = k
            if orders.all():
                break
            power = self._table[power, idx]
        orders.setflags(write=False)
        return orders

    @cached_property
    def commutes(self) -> np.ndarray:
        """Boolean matrix with commutes[x, y] true iff xy = yx."""
        matrix = self._table == self._table.T
        matrix.setflags(write=False)
        return matrix

    def memo(self, key: str, factory: Callable[[], T]) -> T:
        """Return memoised data, computing it on first use."""
        try:
            return self._memo[key]
        except KeyError:
            value = factory()
            return self._memo.setdefault(key, value)

    def multiply(self, x: int, y: int) -> int:
        self.check_element(x)
        self.check_element(y)
        return self.rows[x][y]

    def check_element(self, x: int) -> None:
        if not 0 <= int(x) < self.order:
            raise ElementIndexError(f"Element index {x} out of range for group of order {self.order}")

    def with_spec(self, spec: Optional[str]) -> "FiniteGroup":
        """Same table under another provenance string."""
        return FiniteGroup(self._table, spec, check=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "spec": self.spec, "table": self.rows}

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "FiniteGroup":
        """Create a group from its JSON document, re-checking the axioms."""
        data = json.loads(text)
        group = cls(data["table"], data.get("spec"))
        if group.order != data.get("order", group.order):
            raise InvalidGroupTableError(
                f"Declared order {data['order']} does not match table size {group.order}"
            )
        return group

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, spec={self.spec!r})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices of its parent."""

    parent: FiniteGroup = field(repr=False)
    elements: Tuple[int, ...]

    @classmethod
    def from_elements(cls, parent: FiniteGroup, elements: Iterable[int]) -> "Subgroup":
        """Create a subgroup after checking identity, closure and inverses."""
        members = sorted({int(x) for x in elements})
        for x in members:
            parent.check_element(x)
        if not members or members[0] != 0:
            raise NotASubgroupError("A subgroup must contain the identity")

        array = np.array(members)
        products = parent.table[np.ix_(array, array)]
        if not np.isin(products, array).all():
            raise NotASubgroupError("Element set is not closed under the group product")
        if not np.isin(parent.inverse[array], array).all():
            raise NotASubgroupError("Element set is not closed under inverses")
        return cls(parent, tuple(members))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        values = np.array(self.elements, dtype=np.int64)
        values.setflags(write=False)
        return values

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def issubset(self, other: "Subgroup") -> bool:
        return self.order <= other.order and self.members <= other.members

    def as_group(self) -> FiniteGroup:
        """The subgroup as a stand-alone group, elements renumbered in order."""
        position = np.full(self.parent.order, -1, dtype=np.int64)
        position[self.array] = np.arange(self.order)
        table = position[self.parent.table[np.ix_(self.array, self.array)]]
        return FiniteGroup(table, None, check=False)


def _require_subgroup(G: FiniteGroup, H: Subgroup) -> None:
    if H.parent is not G:
        raise NotASubgroupError("Subgroup belongs to a different group")


def _validated(G: FiniteGroup, elements: Iterable[int]) -> List[int]:
    values = [int(x) for x in elements]
    for x in values:
        G.check_element(x)
    return values


def _closure(G: FiniteGroup, generators: Sequence[int]) -> np.ndarray:
    """Sorted elements of the subgroup generated by generators."""
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = np.unique(np.asarray(generators, dtype=np.int64))
    gens = gens[gens != 0]
    frontier = np.zeros(1, dtype=np.int64)
    while gens.size and frontier.size:
        products = G.table[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return np.flatnonzero(mask)


def _subgroup(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(sorted(int(x) for x in elements)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def element_order(G: FiniteGroup, x: int) -> int:
    """Smallest k >= 1 with x^k equal to the identity."""
    G.check_element(x)
    return int(G.element_orders[x])


def power(G: FiniteGroup, x: int, k: int) -> int:
    """x raised to the integer k (negative k uses the inverse)."""
    G.check_element(x)
    if k < 0:
        x, k = int(G.inverse[x]), -k
    rows = G.rows
    result, base = 0, x
    while k:
        if k & 1:
            result = rows[result][base]
        base = rows[base][base]
        k >>= 1
    return result


def generated_subgroup(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing S."""
    gens = _validated(G, S)
    return Subgroup(G, tuple(_closure(G, gens).tolist()))


def _cyclic_with_generators(G: FiniteGroup) -> Tuple[Tuple[Subgroup, int], ...]:
    def compute() -> Tuple[Tuple[Subgroup, int], ...]:
        rows = G.rows
        orders = G.element_orders
        done = np.zeros(G.order, dtype=bool)
        found = []
        for x in range(G.order):
            if done[x]:
                continue
            powers = [0]
            y = x
            while y != 0:
                powers.append(y)
                y = rows[y][x]
            members = np.array(powers)
            # every generator of <x> yields the same subgroup
            done[members[orders[members] == orders[x]]] = True
            found.append((_subgroup(G, powers), x))
        found.sort(key=lambda item: (item[0].order, item[0].elements))
        return tuple(found)

    return G.memo("cyclic_subgroups", compute)


def all_cyclic_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """One entry per distinct cyclic subgroup <x>."""
    return [sub for sub, _ in _cyclic_with_generators(G)]


def _subgroup_lattice(G: FiniteGroup) -> Tuple[Subgroup, ...]:
    with logfire.span("Enumerating subgroup lattice", order=G.order, spec=G.spec):
        cyclic = _cyclic_with_generators(G)
        generators: Dict[Tuple[int, ...], List[int]] = {}
        queue: deque = deque()
        for sub, g in cyclic:
            generators[sub.elements] = [g] if g else []
            queue.append(sub.elements)

        # joins with cyclic subgroups reach every join of the lattice
        while queue:
            key = queue.popleft()
            gens = generators[key]
            members = set(key)
            for _, g in cyclic:
                if g in members:
                    continue
                joined = tuple(_closure(G, gens + [g]).tolist())
                if joined not in generators:
                    generators[joined] = gens + [g]
                    queue.append(joined)

        lattice = sorted(
            (Subgroup(G, key) for key in generators), key=lambda s: (s.order, s.elements)
        )
        logfire.debug("Subgroup lattice computed", order=G.order, count=len(lattice))
        return tuple(lattice)


def all_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Every subgroup of G exactly once, trivial subgroup and G included.

    Raises:
        BoundExceededError: If G is larger than the enumeration bound
    """
    check_order(G.order, "subgroup lattice of group")
    return list(G.memo("subgroups", lambda: _subgroup_lattice(G)))


def maximal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Proper subgroups not contained in another proper subgroup."""

    def compute() -> Tuple[Subgroup, ...]:
        proper = [s for s in all_subgroups(G) if s.order < G.order]
        maximal: List[Subgroup] = []
        for sub in sorted(proper, key=lambda s: -s.order):
            if not any(sub.order < m.order and sub.issubset(m) for m in maximal):
                maximal.append(sub)
        return tuple(maximal)

    check_order(G.order, "subgroup lattice of group")
    return list(G.memo("maximal_subgroups", compute))


def _cosets(G: FiniteGroup, N: Subgroup) -> Tuple[np.ndarray, np.ndarray]:
    """Left coset index of every element and the coset representatives."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if coset_of[x] < 0:
            coset_of[G.table[x, N.array]] = len(reps)
            reps.append(x)
    return coset_of, np.array(reps, dtype=np.int64)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """True iff xHx^-1 = H for every x."""
    _require_subgroup(G, H)
    conjugates = G.table[G.table[:, H.array], G.inverse[:, None]]
    return bool(np.isin(conjugates, H.array).all())


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """G/N on coset representatives, identity coset at index 0.

    Raises:
        NotNormalError: If N is not normal in G
    """
    _require_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormalError(f"Subgroup of order {N.order} is not normal in {G.spec or 'the group'}")

    coset_of, reps = _cosets(G, N)
    table = coset_of[G.table[np.ix_(reps, reps)]]
    logfire.debug("Quotient built", order=G.order, normal_order=N.order)
    return FiniteGroup(table, None)


def center(G: FiniteGroup) -> Subgroup:
    return G.memo("center", lambda: _subgroup(G, np.flatnonzero(G.commutes.all(axis=1))))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators x^-1 y^-1 x y."""

    def compute() -> Subgroup:
        inv = G.inverse
        left = G.table[np.ix_(inv, inv)]
        commutators = np.unique(G.table[left, G.table])
        return Subgroup(G, tuple(_closure(G, commutators.tolist()).tolist()))

    return G.memo("commutator", compute)


def centralizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    _require_subgroup(G, H)
    return _subgroup(G, np.flatnonzero(G.commutes[:, H.array].all(axis=1)))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    _require_subgroup(G, H)
    conjugates = G.table[G.table[:, H.array], G.inverse[:, None]]
    return _subgroup(G, np.flatnonzero(np.isin(conjugates, H.array).all(axis=1)))


def _coset_order(G: FiniteGroup, y: int, P: Subgroup) -> int:
    rows = G.rows
    z, k = y, 1
    while z not in P:
        z = rows[z][y]
        k += 1
    return k


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one factor p at a time inside normalizers.

    Raises:
        NotPrimeError: If p is not prime
    """
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")

    def compute() -> Subgroup:
        target = p ** factorint(G.order).get(p, 0)
        P = trivial_subgroup(G)
        while P.order < target:
            N = normalizer(G, P)
            step = None
            for y in N.elements:
                k = _coset_order(G, y, P)
                if k % p == 0:
                    step = power(G, y, k // p)
                    break
            if step is None:
                raise InvalidGroupTableError(f"No p-element found above a subgroup of order {P.order}")
            P = generated_subgroup(G, list(P.elements) + [step])
        return P

    return G.memo(f"sylow_{p}", compute)


def _generating_sequence(G: FiniteGroup) -> Tuple[int, ...]:
    """Irredundant generating sequence, chosen greedily by element order."""

    def compute() -> Tuple[int, ...]:
        orders = G.element_orders
        gens: List[int] = []
        covered = np.zeros(G.order, dtype=bool)
        covered[0] = True
        for x in sorted(range(G.order), key=lambda x: (-orders[x], x)):
            if covered.all():
                break
            if not covered[x]:
                gens.append(x)
                covered[:] = False
                covered[_closure(G, gens)] = True

        for g in list(gens):
            rest = [h for h in gens if h != g]
            if rest and len(_closure(G, rest)) == G.order:
                gens = rest
        return tuple(gens)

    return G.memo("generating_sequence", compute)


def generating_sequence(G: FiniteGroup) -> List[int]:
    return list(_generating_sequence(G))


def _extend(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[List[int]]:
    """Extend gens -> images along right multiplication; None on conflict."""
    g_rows, h_rows = G.rows, H.rows
    phi = [-1] * G.order
    used = [False] * H.order
    phi[0] = 0
    used[0] = True
    pairs = list(zip(gens, images))
    frontier = [0]
    while frontier:
        following = []
        for x in frontier:
            gx, hx = g_rows[x], h_rows[phi[x]]
            for g, h in pairs:
                y, v = gx[g], hx[h]
                current = phi[y]
                if current < 0:
                    if used[v]:
                        return None
                    phi[y] = v
                    used[v] = True
                    following.append(y)
                elif current != v:
                    return None
        frontier = following
    return phi


def _search(
    G: FiniteGroup,
    H: FiniteGroup,
    gens: Sequence[int],
    candidates: Sequence[Sequence[int]],
    images: List[int],
) -> Optional[List[int]]:
    level = len(images)
    for h in candidates[level]:
        if h in images:
            continue
        trial = images + [h]
        phi = _extend(G, H, gens[: level + 1], trial)
        if phi is None:
            continue
        if level + 1 == len(gens):
            return phi
        found = _search(G, H, gens, candidates, trial)
        if found is not None:
            return found
    return None


def _invariants(G: FiniteGroup) -> Tuple[Any, ...]:
    return G.memo(
        "iso_invariants",
        lambda: (
            G.order,
            tuple(np.sort(G.element_orders).tolist()),
            center(G).order,
            commutator_subgroup(G).order,
        ),
    )


def isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[np.ndarray]:
    """An isomorphism G -> H as an index array, or None.

    Images of a generating sequence of G are searched among elements of H
    with the same order; each partial assignment is extended over the
    subgroup it generates and dropped on the first conflict.
    """
    if _invariants(G) != _invariants(H):
        return None
    if G.order == 1:
        return np.zeros(1, dtype=np.int64)

    gens = generating_sequence(G)
    g_orders, h_orders = G.element_orders, H.element_orders
    candidates = [np.flatnonzero(h_orders == g_orders[g]).tolist() for g in gens]

    with logfire.span("Searching for isomorphism", order=G.order, left=G.spec, right=H.spec):
        phi = _search(G, H, gens, candidates, [])
    return None if phi is None else np.array(phi, dtype=np.int64)


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return isomorphism(G, H) is not None


def relabel(G: FiniteGroup, permutation: Sequence[int]) -> FiniteGroup:
    """Renumber elements: old element x becomes permutation[x].

    Raises:
        InvalidGroupTableError: If permutation is not a bijection fixing 0
    """
    perm = np.asarray(permutation, dtype=np.int64)
    if perm.shape != (G.order,) or perm[0] != 0 or not np.array_equal(np.sort(perm), np.arange(G.order)):
        raise InvalidGroupTableError("Relabelling must be a permutation of the elements fixing 0")
    old_of_new = np.argsort(perm)
    table = perm[G.table[np.ix_(old_of_new, old_of_new)]]
    return FiniteGroup(table, G.spec)


def _maximal_abelian(G: FiniteGroup) -> Tuple[Subgroup, ...]:
    Z = center(G)
    if Z.order == G.order:
        return (whole_group(G),)

    # commuting depends only on cosets of the center, so cliques live on G/Z
    coset_of, reps = _cosets(G, Z)
    count = len(reps)
    adjacency = np.triu(G.commutes[np.ix_(reps, reps)][1:, 1:], k=1)
    left, right = np.nonzero(adjacency)

    graph = nx.Graph()
    graph.add_nodes_from(range(1, count))
    graph.add_edges_from(zip((left + 1).tolist(), (right + 1).tolist()))

    members = [np.flatnonzero(coset_of == c) for c in range(count)]
    found = set()
    for clique in nx.find_cliques(graph):
        elements = np.sort(np.concatenate([members[c] for c in [0, *clique]]))
        found.add(tuple(elements.tolist()))

    logfire.debug("Maximal abelian subgroups found", order=G.order, count=len(found))
    return tuple(sorted((Subgroup(G, e) for e in found), key=lambda s: (-s.order, s.elements)))


def maximal_abelian_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Maximal abelian subgroups, largest first."""
    return list(G.memo("maximal_abelian", lambda: _maximal_abelian(G)))


def _is_power_of(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def abelian_subgroup_of_order(G: FiniteGroup, A: Subgroup, d: int) -> Subgroup:
    """A subgroup of order d inside the abelian subgroup A.

    Each Sylow part is built as a chain, adding an element whose p-th power
    already lies in the chain.

    Raises:
        ValueError: If d does not divide |A|
    """
    _require_subgroup(G, A)
    if d < 1 or A.order % d:
        raise ValueError(f"{d} does not divide the order {A.order} of the abelian subgroup")

    orders = G.element_orders
    gens: List[int] = []
    for p, e in sorted(factorint(d).items()):
        target = p**e
        p_elements = [x for x in A.elements if _is_power_of(int(orders[x]), p)]
        chain: List[int] = []
        current = {0}
        while len(current) < target:
            step = next(y for y in p_elements if y not in current and power(G, y, p) in current)
            chain.append(step)
            current = set(_closure(G, chain).tolist())
        gens.extend(chain)
    return generated_subgroup(G, gens)


def is_abelian_subgroup(G: FiniteGroup, H: Subgroup) -> bool:
    _require_subgroup(G, H)
    return bool(G.commutes[np.ix_(H.array, H.array)].all())


def is_cyclic_subgroup(G: FiniteGroup, H: Subgroup) -> bool:
    _require_subgroup(G, H)
    return bool((G.element_orders[H.array] == H.order).any())
