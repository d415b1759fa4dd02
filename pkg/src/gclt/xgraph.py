"""
The graph X_n on the isomorphism classes of groups of order n.

Two distinct classes are adjacent when their direct product is ACLT. Edges
come from the product characterization; brute_force_build rebuilds them
from the product groups themselves as an oracle.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, FrozenSet, List, Tuple

import logfire
import networkx as nx

from . import catalog
from .constructors import direct_product
from .errors import UnsupportedOrderError
from .group_core import FiniteGroup
from .models import XGraphModel
from .predicates import is_aclt_group, product_aclt_expected

Edge = Tuple[int, int]


@dataclass(frozen=True)
class XGraph:
    """Simple graph on the catalog of order n; vertices are spec strings in catalog order."""

    n: int
    vertices: Tuple[str, ...]
    edges: FrozenSet[Edge]

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @property
    def is_complete(self) -> bool:
        return is_complete(self)

    @property
    def is_connected(self) -> bool:
        return is_connected(self)


def brute_edge_check(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Whether G x H is ACLT, by building the product.

    Raises:
        BoundExceededError: If |G||H| is above the enumeration bound
    """
    return is_aclt_group(direct_product(G, H)).ok


def _complete_groups(n: int) -> List[FiniteGroup]:
    groups, complete = catalog.groups_of_order(n)
    if not complete:
        raise UnsupportedOrderError(n, catalog.complete_orders(), "(X_n needs a complete catalog)")
    return groups


def _build(n: int, adjacent: Callable[[FiniteGroup, FiniteGroup], bool], how: str) -> XGraph:
    groups = _complete_groups(n)
    with logfire.span("Building X_n", n=n, vertices=len(groups), rule=how):
        edges = frozenset(
            (i, j) for i, j in combinations(range(len(groups)), 2) if adjacent(groups[i], groups[j])
        )
    graph = XGraph(n, tuple(G.spec or "?" for G in groups), edges)
    logfire.debug("X_n built", n=n, edges=len(edges), complete=graph.is_complete, connected=graph.is_connected)
    return graph


def build(n: int) -> XGraph:
    """X_n with edges from the direct-product characterization.

    Raises:
        UnsupportedOrderError: If n is not a complete catalog order
    """
    return _build(n, product_aclt_expected, "theorem")


def brute_force_build(n: int) -> XGraph:
    """X_n with every edge decided on the product group itself."""
    return _build(n, brute_edge_check, "brute force")


def to_networkx(X: XGraph) -> nx.Graph:
    graph = nx.Graph(name=f"X_{X.n}")
    graph.add_nodes_from((i, {"label": label}) for i, label in enumerate(X.vertices))
    graph.add_edges_from(X.edges)
    return graph


def is_complete(X: XGraph) -> bool:
    k = len(X.vertices)
    return len(X.edges) == k * (k - 1) // 2


def is_connected(X: XGraph) -> bool:
    return nx.is_connected(to_networkx(X))


def to_dot(X: XGraph) -> str:
    lines = [f"graph X_{X.n} {{"]
    lines.extend(f'  {i} [label="{label}"];' for i, label in enumerate(X.vertices))
    lines.extend(f"  {i} -- {j};" for i, j in X.sorted_edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_model(X: XGraph) -> XGraphModel:
    return XGraphModel(
        n=X.n,
        vertices=list(X.vertices),
        edges=X.sorted_edges,
        complete=is_complete(X),
        connected=is_connected(X),
    )


def to_json(X: XGraph) -> str:
    return to_model(X).model_dump_json()
