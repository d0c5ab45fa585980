"""Exception types shared across the package."""


class ResourceCapError(RuntimeError):
    """A configured search or refinement limit was exceeded."""


class ModelMismatch(ValueError):
    pass


class InvariantError(ValueError):
    """A value violates the invariant of the type it was meant to become."""


class PreconditionError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int, token: int | None = None):
        where = f"at position {position}"
        if token is not None:
            where = f"at token {token} ({where})"
        super().__init__(f"{message} {where}")
        self.position = position
        self.token = token
