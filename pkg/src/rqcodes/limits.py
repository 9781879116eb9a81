"""Size guards for exhaustive operations.

``RQCODES_ENUM_LIMIT`` overrides the default combination guard.  Every
exhaustive routine checks its guard up front and raises
:class:`~rqcodes.errors.ResourceLimitError`; nothing is ever truncated.
"""

from __future__ import annotations

import os

from .errors import ResourceLimitError

DEFAULT_ENUM_LIMIT = 2**24
# codeword arrays are materialised in memory; this caps (#words * length)
DEFAULT_CELL_LIMIT = 2**26


def enum_limit() -> int:
    raw = os.environ.get("RQCODES_ENUM_LIMIT")
    if raw is None:
        return DEFAULT_ENUM_LIMIT
    try:
        value = int(raw, 0)
    except ValueError:
        raise ResourceLimitError(f"RQCODES_ENUM_LIMIT is not an integer: {raw!r}") from None
    if value < 1:
        raise ResourceLimitError("RQCODES_ENUM_LIMIT must be positive")
    return value


def cell_limit() -> int:
    return max(DEFAULT_CELL_LIMIT, 4 * enum_limit())


def check(what: str, amount: int, limit: int | None = None) -> None:
    limit = enum_limit() if limit is None else limit
    if amount > limit:
        raise ResourceLimitError(f"{what}: {amount} exceeds guard {limit}")
