"""
MCP tool server over stdio.

Every tool returns a JSON string; failures come back as an ErrorResponse
payload instead of crossing the protocol boundary as exceptions.
"""

import asyncio
import json
from typing import Optional

import logfire
from mcp.server.fastmcp import FastMCP

from . import catalog, numbers, xgraph
from .config import resolve_bound, set_enumeration_bound
from .models import ErrorResponse
from .predicates import group_report
from .specs import build
from .witness import witness

server = FastMCP("CLT Groups")


def _error(tool: str, e: Exception) -> str:
    logfire.error(f"Error in {tool}", exception=e)
    return json.dumps(ErrorResponse.from_exception(e).model_dump())


@server.tool()
async def classify_number(n: int) -> str:
    """Classify n as a cyclic, abelian, CCLT and ACLT number.

    Args:
        n: Integer between 1 and 10^6

    Returns:
        The four flags with the clause that decided each one
    """
    logfire.debug("Tool called: classify_number", n=n)
    try:
        return numbers.classify(n).model_dump_json()
    except Exception as e:
        return _error("classify_number", e)


@server.tool()
async def describe_group(spec: str, predicates: bool = False, subgroups: bool = False) -> str:
    """Build a group from a spec string such as "D14", "C2xC14" or "M(5,4,2)".

    Args:
        spec: Group spec string
        predicates: Also evaluate every group property
        subgroups: Also list every subgroup as element indices

    Returns:
        Order, element order statistics and Cayley table of the group
    """
    logfire.debug("Tool called: describe_group", spec=spec)
    try:
        return group_report(build(spec), predicates, subgroups).model_dump_json()
    except Exception as e:
        return _error("describe_group", e)


@server.tool()
async def find_witness(n: int, kind: str) -> str:
    """Find a group of order n that is not CCLT (kind="cclt") or not ACLT (kind="aclt").

    Returns:
        Witness recipe, the divisor it lacks a subgroup for, and its table when small
    """
    logfire.debug("Tool called: find_witness", n=n, kind=kind)
    try:
        return witness(n, kind).to_record().model_dump_json()
    except Exception as e:
        return _error("find_witness", e)


@server.tool()
async def catalog_entry(n: int) -> str:
    """Recipes of every group of order n held in the catalog."""
    logfire.debug("Tool called: catalog_entry", n=n)
    try:
        return catalog.catalog_entry(n).model_dump_json()
    except Exception as e:
        return _error("catalog_entry", e)


@server.tool()
async def build_xgraph(n: int) -> str:
    """The graph X_n: groups of order n, adjacent when their direct product is ACLT."""
    logfire.debug("Tool called: build_xgraph", n=n)
    try:
        return xgraph.to_json(xgraph.build(n))
    except Exception as e:
        return _error("build_xgraph", e)


def main(bound: Optional[int] = None) -> None:
    """Serve the tools on stdio until the client disconnects."""
    set_enumeration_bound(bound if bound is not None else resolve_bound())
    logfire.info("Starting CLT Groups server")
    try:
        asyncio.run(server.run_stdio_async())
    except KeyboardInterrupt:
        logfire.info("Server stopped by user")
    except Exception as e:
        logfire.error("Error running server", exception=e)
        raise
