"""Exception types shared across the package.

ValueError subclasses mark bad caller input; RuntimeError subclasses mark
refused or impossible computations. ContractViolation in particular is
raised by internal postcondition checks that are theorem-backed and must
never fire; if one does, the bug is in this package, not in the caller.
"""
from __future__ import annotations


class InvalidInput(ValueError):
    """Malformed object, morphism, or JSON payload."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated contract."""


class GuardExceeded(RuntimeError):
    """A size guard refused a computation; raise the guard to proceed."""


class ContractViolation(RuntimeError):
    """A verified construction failed its own postcondition."""
