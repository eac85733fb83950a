"""Exception types shared across the toolkit.

Everything user-facing derives from ChronoscopeError so the CLI and the HTTP
service can map failures to exit codes / status codes in one place.
"""

from __future__ import annotations


class ChronoscopeError(Exception):
    """Base class for all errors raised by chronoscope."""


class DataError(ChronoscopeError):
    """Bad input data or an invalid logical query (CLI exit 2, HTTP 400)."""


class UnknownNameError(DataError):
    """A name lookup failed; carries near-miss candidates (HTTP 404).

    ``what`` labels the namespace that was searched, e.g. "entity" or "group".
    """

    def __init__(self, what: str, name: str, candidates: list[str]):
        self.what = what
        self.name = name
        self.candidates = list(candidates)
        hint = f" (did you mean: {', '.join(self.candidates)}?)" if self.candidates else ""
        super().__init__(f"unknown {what}: {name!r}{hint}")
