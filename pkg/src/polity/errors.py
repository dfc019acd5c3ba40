"""Exception types shared by the whole package."""


class InputError(ValueError):
    """Malformed input or a violated precondition.

    ``path`` locates the problem inside a JSON document when known.
    """

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class SizeLimitError(InputError):
    """A request that would exceed a combinatorial cap."""


class ConsistencyError(RuntimeError):
    """Two characterizations that must agree returned different answers.

    This always indicates a bug in this package, never bad input.
    """
