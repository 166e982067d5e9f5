"""Exception types shared across the package."""


class InputValidationError(ValueError):
    """An input matrix or document violates a standing assumption.

    ``assumption`` is a short, stable name for the violated assumption
    ("zero row", "negative entry", "shape mismatch", ...) so callers such
    as the CLI can report it without parsing the message.
    """

    def __init__(self, assumption: str, message: str | None = None):
        self.assumption = assumption
        super().__init__(message or assumption)


class InternalError(RuntimeError):
    """A structural invariant the library guarantees was violated.

    Seeing this is a defect in the library, never a property of the input.
    """
