"""
Exceptions raised by the gclt package.

Every error derives from GcltError and from the matching built-in exception,
so callers may catch either.
"""

from typing import Optional, Sequence


class GcltError(Exception):
    """Base class for all gclt errors."""


class InvalidGroupTableError(GcltError, ValueError):
    """A Cayley table violates the group axioms."""


class ElementIndexError(GcltError, IndexError):
    """An element index lies outside 0..order-1."""


class NotASubgroupError(GcltError, ValueError):
    """A subgroup belongs to another group or is not closed."""


class NotNormalError(GcltError, ValueError):
    """A quotient was requested by a subgroup that is not normal."""


class NotPrimeError(GcltError, ValueError):
    """An argument that must be prime is not."""


class BoundExceededError(GcltError, ValueError):
    """A group order exceeds the configured enumeration bound."""

    def __init__(self, order: int, bound: int, what: str = "group"):
        self.order = order
        self.bound = bound
        super().__init__(
            f"{what} of order {order} exceeds the enumeration bound {bound}; "
            f"raise it with --bound or GCLT_MAX_ORDER"
        )


class ParameterConditionError(GcltError, ValueError):
    """Constructor parameters violate a family's existence condition."""

    def __init__(self, message: str, condition: str):
        self.condition = condition
        super().__init__(f"{message} (violated: {condition})")


class SpecParseError(GcltError, ValueError):
    """A group spec string does not match the grammar."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class UnsupportedOrderError(GcltError, ValueError):
    """The catalog holds no (complete) entry for an order."""

    def __init__(self, order: int, supported: Sequence[int], detail: str = ""):
        self.order = order
        self.supported = list(supported)
        listing = ", ".join(str(n) for n in self.supported)
        suffix = f" {detail}" if detail else ""
        super().__init__(f"order {order} is not supported{suffix}; supported: {listing}")


class NumberOutOfRangeError(GcltError, ValueError):
    """An integer argument lies outside the supported range."""


class ClosedFormDomainError(GcltError, ValueError):
    """Closed-form counting formulas do not cover the given shape."""


class NotApplicableError(GcltError, ValueError):
    """A witness was requested for a number that has none."""


class WitnessGapError(GcltError):
    """No construction and no catalog fallback exists for a witness."""


class WitnessVerificationError(GcltError, AssertionError):
    """A constructed witness failed its brute-force verification."""


class CatalogConsistencyError(GcltError):
    """The catalog contradicts itself (duplicate or missing class)."""

    def __init__(self, message: str, order: Optional[int] = None):
        self.order = order
        super().__init__(message)
