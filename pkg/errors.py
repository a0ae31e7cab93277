"""
errors.py

Exception hierarchy for the certificate engine. Everything raised on purpose
derives from NullaError so the CLI can map it onto a stable exit code.
"""

from typing import Any, FrozenSet, Optional, Tuple


class NullaError(Exception):
    """Base class for every deliberate failure in the engine."""


class StructuralError(NullaError):
    """Mismatched variable tables, missing assignments or misaligned lengths."""


class GraphParseError(NullaError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EncodingError(NullaError):
    """Encoder parameters that do not describe a valid system."""


class FormatError(NullaError):
    """A system or certificate file that does not parse."""


class OracleRefusal(NullaError):
    def __init__(self, limit: str, value: int, actual: int):
        self.limit = limit
        self.value = value
        self.actual = actual
        super().__init__(f"refusing to enumerate: {limit}={value} exceeded ({actual})")


class ResourceRefusal(NullaError):
    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class NotSubsetClosed(NullaError):
    def __init__(self, witness: Optional[Tuple[FrozenSet[int], FrozenSet[int]]]):
        self.witness = witness
        if witness is None:
            message = "family does not contain the empty structure"
        else:
            outer, inner = witness
            message = f"family not subset closed: {sorted(outer)} present, {sorted(inner)} missing"
        super().__init__(message)


class InfeasibilityError(NullaError):
    """The cardinality target is reachable, so no certificate can exist."""


class CertificateError(NullaError):
    """A constructed certificate failed its own exact verification."""
