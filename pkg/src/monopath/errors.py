"""Error types shared across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable error records.
"""

from __future__ import annotations


class MonopathError(Exception):
    """Base class; ``code`` identifies the error kind, ``detail`` is JSON-safe."""

    code = "Error"

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail

    def payload(self) -> dict:
        return {"error": self.code, "message": str(self), **self.detail}


class SelfLoopError(MonopathError):
    code = "SelfLoop"


class BidirectedPairError(MonopathError):
    code = "BidirectedPair"


class DuplicateEdgeError(MonopathError):
    code = "DuplicateEdge"


class VertexOutOfRangeError(MonopathError):
    code = "VertexOutOfRange"


class CyclicError(MonopathError):
    """Raised when an acyclic order is requested on a cyclic graph.

    ``witness`` is a directed cycle [v0, v1, ..., v0] (first vertex repeated).
    """

    code = "Cyclic"

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message, witness=list(witness))
        self.witness = tuple(witness)


class CyclicInputError(MonopathError):
    """An operation that requires an acyclic input was given a cyclic one."""

    code = "CyclicInput"

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message, witness=list(witness))
        self.witness = tuple(witness)


class NotSpecialError(MonopathError):
    code = "NotSpecial"


class InvalidNError(MonopathError):
    code = "InvalidN"


class TooManyEdgesError(MonopathError):
    code = "TooManyEdges"


class EpsOutOfRangeError(MonopathError):
    code = "EpsOutOfRange"


class TooLargeError(MonopathError):
    code = "TooLarge"


class InvalidSpecError(MonopathError):
    code = "InvalidSpec"


class ParseError(MonopathError):
    code = "Parse"

    def __init__(self, message: str, line: int | None = None, **detail):
        if line is not None:
            detail["line"] = line
        super().__init__(message, **detail)
        self.line = line


class UnknownEdgeError(MonopathError):
    code = "UnknownEdge"


class IncompleteColouringError(MonopathError):
    code = "IncompleteColouring"
