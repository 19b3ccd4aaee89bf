"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed graph or representation input.

    Carries the 1-based line number and the byte offset of the offending
    location when they are known.
    """

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.message = message
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class InternalInconsistencyError(AssertionError):
    """A structural invariant of the certification pipeline failed.

    These correspond to facts the underlying proofs guarantee on twin-free,
    forbidden-subgraph-free inputs.  If one fires, either a generator
    transcription or the pipeline itself is wrong; the payload localizes the
    offending stage and vertices.
    """

    def __init__(self, stage: str, detail: str, data: object = None):
        self.stage = stage
        self.detail = detail
        self.data = data
        super().__init__(f"[{stage}] {detail}" + (f": {data!r}" if data is not None else ""))


class UnitizeError(RuntimeError):
    """The difference-constraint system of the unit remap was infeasible."""
