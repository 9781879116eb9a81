"""Exception types shared across the package."""

from __future__ import annotations


class RqError(Exception):
    """Base class for every error raised by rqcodes."""


class ParameterError(RqError, ValueError):
    """A parameter lies outside the range an operation accepts."""


class ResourceLimitError(RqError):
    """An exhaustive operation would exceed its configured size guard."""
