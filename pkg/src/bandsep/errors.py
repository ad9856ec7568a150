"""Exception types and the verdict record shared by all validators."""

from __future__ import annotations

from dataclasses import dataclass


class SizeGuardError(ValueError):
    """An exact routine was asked to run above its configured size limit."""


class CertificateError(RuntimeError):
    """A produced certificate failed one of its own postconditions."""


class FormatError(ValueError):
    """Malformed input text; ``line`` is 1-based (0 when not attributable)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class PartitionError(ValueError):
    """An S/P/R partition violates a named condition, e.g. ``"(ii)"``."""

    def __init__(self, condition: str, detail: str):
        self.condition = condition
        self.detail = detail
        super().__init__(f"condition {condition} violated: {detail}")


class SeparatorNotFound(Exception):
    """A heuristic separator finder gave up; ``diagnostics`` says why."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class ExpanderFound(Exception):
    """No non-expanding set was found in the induced subgraph on ``vertices``.

    With an exact finder this is a proof that the subgraph is an expander;
    with a heuristic finder it only marks a candidate.
    """

    def __init__(self, vertices, proven: bool):
        self.vertices = frozenset(vertices)
        self.proven = proven
        kind = "expander" if proven else "expander candidate"
        super().__init__(f"{kind} on {len(self.vertices)} vertices")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> Verdict:
        return cls(True)

    @classmethod
    def failed(cls, condition: str, detail: str) -> Verdict:
        return cls(False, condition, detail)
