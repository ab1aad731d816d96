"""Exception types shared by all modules."""


class InvalidInput(ValueError):
    """An argument is malformed or outside an operation's domain."""


class PreconditionViolation(ValueError):
    """A structural precondition (e.g. sortability) does not hold."""


class Unsupported(ValueError):
    """The input is well formed but outside the scope of the operation."""
