"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text does not have the shape of an identifier.

    Deliberately distinct from a ``False`` verification result: a failed
    checksum means "corrupted ID", a ParseError means "not an ID at all".
    ``position`` is the zero-based index of the offending character in the
    original input when one can be named.
    """

    def __init__(self, message: str, *, text: str | None = None,
                 position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.text = text
        self.position = position
