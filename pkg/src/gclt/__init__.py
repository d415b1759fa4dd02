import sys

import logfire

from . import catalog, cli, models, numbers, predicates, xgraph
from .group_core import FiniteGroup, Subgroup
from .specs import build, parse_spec


def main():
    """Main entry point for the package."""
    try:
        code = cli.run(sys.argv[1:], configure_logging=True)
    except Exception as e:
        logfire.error("Error running gclt", exception=e)
        raise
    sys.exit(code)


# Expose important items at package level
__all__ = [
    "main",
    "cli",
    "models",
    "numbers",
    "predicates",
    "catalog",
    "xgraph",
    "FiniteGroup",
    "Subgroup",
    "build",
    "parse_spec",
]
