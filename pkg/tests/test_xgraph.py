import json
from pathlib import Path

import pytest

from gclt import catalog, xgraph
from gclt.errors import UnsupportedOrderError
from gclt.numbers import is_abelian_number, is_aclt_number, is_cclt_number

DATA = Path(__file__).parent / "data"


def test_x28_matches_golden_dot():
    X = xgraph.build(28)
    assert xgraph.to_dot(X) == (DATA / "x28.dot").read_text()


def test_x28_edges():
    X = xgraph.build(28)
    assert X.vertices == ("C28", "C2xC14", "D14", "Dic7")
    assert X.sorted_edges == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    assert (2, 3) not in X.edges
    assert not X.is_complete
    assert X.is_connected


def test_x6_is_a_single_edge():
    X = xgraph.build(6)
    assert X.vertices == ("C6", "D3")
    assert X.sorted_edges == [(0, 1)]
    assert xgraph.is_complete(X)


def test_x1_is_a_single_vertex():
    X = xgraph.build(1)
    assert X.vertices == ("C1",)
    assert xgraph.is_complete(X) and xgraph.is_connected(X)


def test_x12_is_disconnected():
    X = xgraph.build(12)
    assert not xgraph.is_connected(X)
    # the alternating group is isolated
    assert not any(4 in edge for edge in X.edges)


def test_partial_orders_rejected():
    with pytest.raises(UnsupportedOrderError):
        xgraph.build(24)


def test_json_document():
    data = json.loads(xgraph.to_json(xgraph.build(28)))
    assert data["n"] == 28
    assert data["vertices"] == ["C28", "C2xC14", "D14", "Dic7"]
    assert data["edges"] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]
    assert data["complete"] is False
    assert data["connected"] is True


def test_networkx_view():
    graph = xgraph.to_networkx(xgraph.build(28))
    assert graph.number_of_nodes() == 4
    assert graph.nodes[2]["label"] == "D14"


@pytest.mark.parametrize("n", catalog.complete_orders(63))
def test_completeness_and_connectivity_claims(n):
    X = xgraph.build(n)
    assert xgraph.is_complete(X) == (is_abelian_number(n) or is_cclt_number(n))
    assert xgraph.is_connected(X) == is_aclt_number(n)


@pytest.mark.parametrize("n", catalog.complete_orders(20))
def test_theorem_edges_equal_brute_force(n):
    assert xgraph.build(n).edges == xgraph.brute_force_build(n).edges


def test_brute_edge_check():
    C12, _, D6, Dic3, A4 = catalog.groups_of_order(12)[0]
    assert xgraph.brute_edge_check(C12, D6)
    assert not xgraph.brute_edge_check(D6, Dic3)
    assert not xgraph.brute_edge_check(C12, A4)
