"""Exception hierarchy."""


class OrbibundleError(Exception):
    """Base class for all package errors."""


class SignatureSyntaxError(OrbibundleError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class SignatureSemanticError(OrbibundleError, ValueError):
    pass


class ActionSyntaxError(OrbibundleError, ValueError):
    pass


class OutOfScopeError(OrbibundleError):
    """Input outside the supported class (higher cone orders, corners, ...)."""


class InvalidActionError(OrbibundleError, ValueError):
    pass


class InconsistencyError(OrbibundleError):
    """Two independent computations disagree; signals a bug, never user error."""


class UnderdeterminedError(OrbibundleError):
    """An exact sequence does not pin down a group and no finer data was supplied."""
