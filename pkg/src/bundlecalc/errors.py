"""Exception hierarchy shared by all bundlecalc modules.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured JSON diagnostics and map errors to exit statuses.
"""

from __future__ import annotations


class BundleCalcError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DomainError(BundleCalcError):
    """A precondition on the mathematical input was violated."""

    code = "domain_error"


class MissingConstantError(DomainError):
    """A required ambient constant (a beta value) is not configured."""

    code = "missing_beta"


class CapExceededError(BundleCalcError):
    """A configured desk-scale resource cap was exceeded."""

    code = "cap_exceeded"


class PrecisionError(BundleCalcError):
    """Interval arithmetic could not separate a floor/ceiling boundary.

    Retry with a higher precision cap; the value may also be exactly on an
    integer boundary, in which case no finite precision suffices.
    """

    code = "precision"
