"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all planacyclic errors."""


class InvalidInputError(Error, ValueError):
    """A graph, vertex set, or vertex argument violates a precondition."""


class InvalidParameterError(Error, ValueError):
    """A numeric parameter is outside its documented range."""


class InvalidEmbeddingError(Error, ValueError):
    """A rotation system is malformed (missing or duplicated darts)."""


class InvalidFaceError(Error, ValueError):
    """A face walk does not belong to the embedding or lacks a required vertex."""


class UnsupportedInputError(Error, ValueError):
    """The input is structurally valid but outside what the operation supports."""


class ResourceGuardError(Error, RuntimeError):
    """An instance exceeds a size guard; pass the override to force the run."""


class ParseError(Error, ValueError):
    """Malformed edge-list or planar_code input.

    ``offset`` is the 1-based line number for text formats and the 0-based
    byte position for binary formats.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset
