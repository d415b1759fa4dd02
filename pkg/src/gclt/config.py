"""
Runtime configuration: the enumeration bound and its overrides.
"""

import os
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

import logfire

from .errors import BoundExceededError

DEFAULT_ENUMERATION_BOUND = 400
DEFAULT_SUITE_MAX_ORDER = 63
SLOW_SUITE_ORDER = 243
MAX_NUMBER = 10**6
BOUND_ENV_VAR = "GCLT_MAX_ORDER"

_bound: ContextVar[int] = ContextVar("gclt_enumeration_bound", default=DEFAULT_ENUMERATION_BOUND)


def enumeration_bound() -> int:
    """Return the enumeration bound in effect for the current context."""
    return _bound.get()


def set_enumeration_bound(bound: int) -> None:
    _bound.set(bound)


@contextmanager
def bound_override(bound: int) -> Iterator[int]:
    """Temporarily replace the enumeration bound.

    Args:
        bound: New bound, used as given

    Yields:
        The bound in effect inside the block
    """
    token = _bound.set(bound)
    try:
        yield bound
    finally:
        _bound.reset(token)


def resolve_bound(flag: Optional[int] = None) -> int:
    """Resolve the enumeration bound from the command line or the environment.

    The --bound flag wins over GCLT_MAX_ORDER. An override below the default
    is ignored.

    Args:
        flag: Optional bound from the command line

    Returns:
        The bound to use
    """
    raw = flag if flag is not None else os.getenv(BOUND_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_ENUMERATION_BOUND

    try:
        bound = int(raw)
    except (TypeError, ValueError):
        raise ValueError(
            f"Enumeration bound must be an integer, got {raw!r}. "
            f"Provide it via --bound or the {BOUND_ENV_VAR} environment variable."
        )

    if bound < DEFAULT_ENUMERATION_BOUND:
        logfire.warning(
            "Bound override below default ignored",
            requested=bound,
            default=DEFAULT_ENUMERATION_BOUND,
        )
        return DEFAULT_ENUMERATION_BOUND
    return bound


def check_order(order: int, what: str = "group") -> None:
    """Raise BoundExceededError when order is above the bound in effect."""
    bound = enumeration_bound()
    if order > bound:
        raise BoundExceededError(order, bound, what)
