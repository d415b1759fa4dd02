import asyncio
import json

from gclt import server


def call(tool, *args):
    return json.loads(asyncio.run(tool(*args)))


def test_tools_registered():
    tools = asyncio.run(server.server.list_tools())
    assert {t.name for t in tools} == {
        "classify_number",
        "describe_group",
        "find_witness",
        "catalog_entry",
        "build_xgraph",
    }


def test_classify_number():
    data = call(server.classify_number, 28)
    assert data["aclt"] is True
    assert data["cclt"] is False


def test_describe_group():
    data = call(server.describe_group, "Dic7", True)
    assert data["order"] == 28
    assert data["predicates"]["cclt"] is True
    assert data["subgroups"] is None


def test_find_witness():
    data = call(server.find_witness, 12, "aclt")
    assert data["spec"] == "E(2,2,[0,1;1,1],3)"
    assert data["verified"] is True


def test_catalog_and_graph():
    assert call(server.catalog_entry, 30)["recipes"][0] == "C30"
    assert call(server.build_xgraph, 28)["edges"] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]


def test_errors_become_payloads():
    data = call(server.describe_group, "C2x")
    assert "position" in data["error"]
    data = call(server.classify_number, 0)
    assert "outside the supported range" in data["error"]
    data = call(server.find_witness, 8, "clt")
    assert "unknown witness kind" in data["error"]
