"""Exception types raised across the package."""


class DscxError(Exception):
    """Base class for all package errors."""


class DomainError(DscxError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConstraintViolation(DscxError):
    """A complex is grown with a model different from the one it was built with."""


class ResourceGuardError(DscxError):
    """A computation was refused because it exceeds a desk-scale guard.

    ``guard`` names the limit and ``override`` the keyword or flag that lifts it.
    """

    def __init__(self, message, guard, override):
        super().__init__(f"{message} [guard: {guard}; override with {override}]")
        self.guard = guard
        self.override = override


class SimplexNotFound(DscxError, KeyError):
    pass


class UnsupportedOrder(DomainError):
    pass


class InsufficientData(DscxError):
    pass


class ContractViolation(DscxError, ValueError):
    """Input violates a precondition that callers are expected to uphold."""
