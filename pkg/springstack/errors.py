"""
errors.py — Exception hierarchy for springstack.

Every error raised by the library derives from :class:`SpringstackError`, a
``ValueError``, so callers can catch bad input in one place. The CLI turns
these into ``[springstack] ...`` diagnostics with exit code 2.
"""

from __future__ import annotations

from collections.abc import Sequence


class SpringstackError(ValueError):
    """Base class for all springstack errors."""


class ConfigError(SpringstackError):
    """An invalid configuration value (argument or environment variable)."""


class PartitionError(SpringstackError):
    """Invalid partition, composition or Levi datum."""

    def __init__(self, message: str, parts: Sequence[int] | None = None) -> None:
        self.parts = tuple(parts) if parts is not None else None
        super().__init__(message)


class TableauError(SpringstackError):
    """A filling that is not a standard tableau.

    ``kind`` names the violated invariant: ``"entries"``, ``"row"``,
    ``"column"``, ``"shape"``, ``"nesting"`` or ``"range"``. ``position`` is the
    1-based (row, column) of the first offending box, when there is one.
    """

    def __init__(
        self, kind: str, message: str, position: tuple[int, int] | None = None
    ) -> None:
        self.kind = kind
        self.position = position
        where = f" at row {position[0]}, column {position[1]}" if position else ""
        super().__init__(f"{kind} violation{where}: {message}")


class DimensionError(SpringstackError):
    """Matrix or subspace dimensions do not fit together."""


class SingularMatrixError(SpringstackError):
    """A matrix that must be invertible is not."""


class NotNilpotentError(SpringstackError):
    """An operator expected to be nilpotent is not."""


class NotInvariantError(SpringstackError):
    """A subspace is not stable under the operator it is restricted to."""


class FibreMembershipError(SpringstackError):
    """A flag is not in the Springer fibre of the given operator."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"e(F_{index}) is not contained in F_{index - 1}")


class CeilingExceededError(SpringstackError):
    """Raised when an enumeration would exceed the configured ceiling."""

    def __init__(self, estimate: int, ceiling: int, what: str = "flags") -> None:
        self.estimate = estimate
        self.ceiling = ceiling
        self.what = what
        super().__init__(
            f"springstack ceiling exceeded: about {estimate:,} {what} "
            f"against a ceiling of {ceiling:,}"
        )
