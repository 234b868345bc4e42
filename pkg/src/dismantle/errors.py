"""Exception types used across the package."""


class DismantleError(Exception):
    """Base class for all package errors."""


class InputError(DismantleError):
    """Malformed arguments: unknown ids, mismatched objects, bad maps."""


class ValidationError(InputError):
    """An object violates its construction axioms."""


class ParseError(ValidationError):
    """Text input failed to parse; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DominationError(InputError):
    """A fold or collapse was requested whose domination precondition fails."""


class PreconditionError(InputError):
    """A mathematical precondition of the operation does not hold."""


class CertificateError(DismantleError):
    """A certificate required to be valid is not."""


class StaleCertificateError(CertificateError):
    """The certificate's start digest does not match the supplied object."""


class ResourceError(DismantleError):
    """A configured enumeration budget was exceeded."""


class InternalConsistencyError(DismantleError):
    """A structural guarantee failed; indicates a bug, not a user error."""
