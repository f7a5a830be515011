"""Exception types shared across the package."""

from __future__ import annotations


class KhsError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(KhsError, ValueError):
    """An argument that must be prime is not."""


class EvenPrimeError(KhsError, ValueError):
    """p = 2 was passed to an odd-primes-only operation."""


class OutOfRangeError(KhsError, ValueError):
    """An index argument is outside its documented range."""


class ZeroInputError(KhsError, ValueError):
    """Zero was passed where a nonzero value is required."""


class IndexOutOfRangeError(KhsError, IndexError):
    """A summand index is outside 0..p-2."""


class OutOfValidatedRangeError(KhsError, ValueError):
    """A degree query lies beyond the range a formula or table is valid for.

    Queries past a validity bound fail loudly instead of returning a
    fabricated zero.  ``constituent`` names the formula or table whose
    range was exceeded.
    """

    def __init__(self, constituent: str, limit: int, queried: int, p: int | None = None):
        self.constituent = constituent
        self.limit = limit
        self.queried = queried
        self.p = p
        at_p = f" at p={p}" if p is not None else ""
        super().__init__(
            f"{constituent}{at_p} is validated only for degrees <= {limit} "
            f"(queried {queried})"
        )
