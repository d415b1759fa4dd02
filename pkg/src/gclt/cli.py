"""
Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors and
unsupported orders.
"""

import argparse
import contextlib
import json
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import logfire
from dotenv import load_dotenv

from . import catalog, numbers, suites, xgraph
from .config import DEFAULT_SUITE_MAX_ORDER, SLOW_SUITE_ORDER, bound_override, resolve_bound
from .errors import GcltError, WitnessVerificationError
from .models import CliConfig, ErrorResponse
from .predicates import group_report
from .specs import build
from .witness import witness

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def configure_logfire(verbose: bool = False) -> None:
    """Configure logfire once for a command-line run.

    Console output stays off unless verbose, so stdout carries only the
    command's JSON, CSV or DOT.
    """
    console = None if verbose else False
    logfire_token = os.getenv("LOGFIRE_TOKEN")
    if logfire_token:
        logfire.configure(token=logfire_token, console=console)
        logfire.info("Logfire initialized with token")
    else:
        logfire.configure(send_to_logfire="if-token-present", console=console)
        logfire.warning("Logfire initialized without token. Logs will not be sent to logfire.ai")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gclt", description="Converse-of-Lagrange checks on finite groups and their orders"
    )
    parser.add_argument("--bound", type=int, help="Enumeration bound (ignored below the default 400)")
    parser.add_argument("--env-file", help="Path to .env file")
    parser.add_argument("--verbose", action="store_true", help="Print logfire records to the console")
    parser.add_argument("--format", choices=["text", "json", "csv"], default="json", dest="output_format")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", help="Classify n as cyclic, abelian, CCLT and ACLT number")
    classify.add_argument("n", type=int)

    span = commands.add_parser("range", help="Classify every n in a..b")
    span.add_argument("span", metavar="a..b")
    span.add_argument("--csv", action="store_true", help="CSV with columns n,cyclic,abelian,cclt,aclt")

    group = commands.add_parser("group", help="Build a group from a spec string and describe it")
    group.add_argument("spec")
    group.add_argument("--predicates", action="store_true", help="Evaluate every group property")
    group.add_argument("--subgroups", action="store_true", help="List the subgroup lattice")

    found = commands.add_parser("witness", help="A group of order n that is not CCLT or not ACLT")
    found.add_argument("n", type=int)
    found.add_argument("--kind", choices=["cclt", "aclt"], required=True)
    found.add_argument("--verify", action="store_true", help="Confirm the failure by brute force")
    found.add_argument("--slow", action="store_true", help="Allow --verify on orders from 243 up")

    entries = commands.add_parser("catalog", help="Catalog recipes of order n, or of every order")
    entries.add_argument("n", type=int, nargs="?")

    graph = commands.add_parser("xgraph", help="The graph X_n on the groups of order n")
    graph.add_argument("n", type=int)
    graph.add_argument("--dot", type=Path, help="Write Graphviz DOT to FILE")
    graph.add_argument("--json", type=Path, help="Write the JSON document to FILE")

    verify = commands.add_parser("verify", help="Run a brute-force verification suite")
    verify.add_argument("suite", choices=["all", *suites.SUITES])
    verify.add_argument("--max-order", type=int, default=DEFAULT_SUITE_MAX_ORDER)
    verify.add_argument("--slow", action="store_true", help="Include the order-243 witness")

    commands.add_parser("serve", help="Serve the tools over MCP stdio")
    return parser


def parse_span(text: str) -> Tuple[int, int]:
    """Parse "a..b" into (a, b)."""
    start, sep, stop = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like a..b, got {text!r}")
    a, b = int(start), int(stop)
    if a > b:
        raise ValueError(f"empty range {text!r}")
    return a, b


def _dump(value: Any) -> str:
    if isinstance(value, list):
        return json.dumps([item.model_dump(mode="json") for item in value], indent=2)
    return value.model_dump_json(indent=2)


def _classify(config: CliConfig, out: TextIO) -> int:
    result = numbers.classify(config.arguments["n"])
    if config.output_format == "csv":
        out.write(f"{result.csv_header()}\n{result.csv_row()}\n")
    elif config.output_format == "text":
        for flag in ("cyclic", "abelian", "cclt", "aclt"):
            out.write(f"{flag}: {str(getattr(result, flag)).lower()} ({result.reasons[flag]})\n")
    else:
        out.write(_dump(result) + "\n")
    return EXIT_OK


def _range(config: CliConfig, out: TextIO) -> int:
    start, stop = parse_span(config.arguments["span"])
    results = numbers.classify_range(start, stop)
    if config.output_format == "json" and not config.arguments["csv"]:
        out.write(_dump(results) + "\n")
    else:
        out.write("\n".join([results[0].csv_header(), *(r.csv_row() for r in results)]) + "\n")
    return EXIT_OK


def _group(config: CliConfig, out: TextIO) -> int:
    G = build(config.arguments["spec"])
    report = group_report(G, config.arguments["predicates"], config.arguments["subgroups"])
    if config.output_format == "text":
        out.write(f"{report.spec}: order {report.order}, element orders {report.element_orders}\n")
        for name, value in (report.predicates or {}).items():
            out.write(f"  {name}: {str(value).lower()}\n")
        if report.subgroups is not None:
            out.write(f"  subgroups: {len(report.subgroups)}\n")
    else:
        out.write(_dump(report) + "\n")
    return EXIT_OK


def _witness(config: CliConfig, out: TextIO) -> int:
    args = config.arguments
    verify = args["verify"]
    if verify and args["n"] >= SLOW_SUITE_ORDER and not config.slow:
        logfire.warning("Skipping brute-force verification without --slow", n=args["n"])
        verify = False
    found = witness(args["n"], args["kind"], verify=verify)
    record = found.to_record()
    if config.output_format == "text":
        status = "verified" if record.verified else "unverified"
        out.write(f"{record.spec}: no {record.kind} subgroup of order {record.failing_divisor} ({status}; {record.clause})\n")
    else:
        out.write(_dump(record) + "\n")
    return EXIT_OK


def _catalog(config: CliConfig, out: TextIO) -> int:
    entries = catalog.catalog_dump(config.arguments["n"])
    if config.output_format == "json":
        out.write(_dump(entries) + "\n")
    elif config.output_format == "csv":
        out.write("n,completeness,fixture_count,recipes\n")
        for e in entries:
            out.write(f"{e.n},{e.completeness},{e.fixture_count or ''},{';'.join(e.recipes)}\n")
    else:
        for e in entries:
            out.write(f"{e.n} ({e.completeness}, {len(e.recipes)}): {', '.join(e.recipes)}\n")
    return EXIT_OK


def _xgraph(config: CliConfig, out: TextIO) -> int:
    args = config.arguments
    X = xgraph.build(args["n"])
    if args["dot"]:
        args["dot"].write_text(xgraph.to_dot(X))
        logfire.info("DOT written", path=str(args["dot"]))
    if args["json"]:
        args["json"].write_text(xgraph.to_json(X))
        logfire.info("JSON written", path=str(args["json"]))
    out.write((xgraph.to_dot(X) if config.output_format == "text" else _dump(xgraph.to_model(X)) + "\n"))
    return EXIT_OK


def _verify(config: CliConfig, out: TextIO) -> int:
    results = suites.run_suite(config.arguments["suite"], config.max_order, config.slow)
    failed = [r for r in results if not r.passed]
    if config.output_format == "json":
        out.write(_dump(results) + "\n")
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.suite}: {r.name}"
            out.write(f"{line} ({r.detail})\n" if not r.passed and r.detail else line + "\n")
        out.write(f"{len(results) - len(failed)} passed, {len(failed)} failed\n")
    if failed:
        logfire.warning("Verification failed", suite=config.arguments["suite"], failed=len(failed))
        return EXIT_FAILED
    return EXIT_OK


def _serve(config: CliConfig, out: TextIO) -> int:
    from . import server

    server.main(config.bound)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    "classify": _classify,
    "range": _range,
    "group": _group,
    "witness": _witness,
    "catalog": _catalog,
    "xgraph": _xgraph,
    "verify": _verify,
    "serve": _serve,
}

_GLOBAL_OPTIONS = {"bound", "env_file", "verbose", "output_format", "command", "max_order", "slow"}


def _config(args: argparse.Namespace) -> CliConfig:
    arguments = {k: v for k, v in vars(args).items() if k not in _GLOBAL_OPTIONS}
    return CliConfig(
        command=args.command,
        arguments=arguments,
        output_format="csv" if getattr(args, "csv", False) else args.output_format,
        bound=resolve_bound(args.bound),
        slow=getattr(args, "slow", False),
        max_order=getattr(args, "max_order", DEFAULT_SUITE_MAX_ORDER),
    )


def _fail(err: TextIO, e: Exception, code: int) -> int:
    err.write(json.dumps(ErrorResponse.from_exception(e).model_dump()) + "\n")
    return code


def run(
    argv: Optional[List[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    configure_logging: bool = False,
) -> int:
    """Run one command line and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr

    try:
        with contextlib.redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.env_file:
        load_dotenv(args.env_file)
    else:
        load_dotenv()
    if configure_logging:
        configure_logfire(args.verbose)

    try:
        config = _config(args)
        with bound_override(config.bound):
            logfire.debug("Command called", command=config.command, bound=config.bound)
            return COMMANDS[config.command](config, out)
    except WitnessVerificationError as e:
        logfire.error("Witness verification failed", exception=e)
        return _fail(err, e, EXIT_FAILED)
    except (GcltError, ValueError, OSError) as e:
        logfire.error("Command failed", command=args.command, exception=e)
        return _fail(err, e, EXIT_USAGE)
