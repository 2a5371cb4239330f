"""Exception hierarchy.

Every error carries an optional ``payload`` (JSON-serialisable) so the CLI can
report violating sets and similar certificates on stderr.
"""

from __future__ import annotations

from typing import Any


class RootedTuranError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message: str, payload: Any = None):
        super().__init__(message)
        self.payload = payload

    def to_json(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        if self.payload is not None:
            out["payload"] = self.payload
        return out


class ValidationError(RootedTuranError):
    code = "ValidationError"


class OutOfRangeVertex(ValidationError):
    code = "OutOfRangeVertex"


class LoopEdge(ValidationError):
    code = "LoopEdge"


class RootsNotProper(ValidationError):
    code = "RootsNotProper"


class BadLabel(ValidationError):
    code = "BadLabel"


class EmptySubset(ValidationError):
    code = "EmptySubset"


class SubsetTouchesRoots(ValidationError):
    code = "SubsetTouchesRoots"


class BadParameters(ValidationError):
    code = "BadParameters"


class NotConnected(ValidationError):
    code = "NotConnected"


class NotBipartite(ValidationError):
    code = "NotBipartite"


class MixedRootStatus(ValidationError):
    code = "MixedRootStatus"


class SameVertex(ValidationError):
    code = "SameVertex"


class BadFraction(ValidationError):
    code = "BadFraction"


class BadCongruence(ValidationError):
    code = "BadCongruence"


class ZeroDensity(ValidationError):
    code = "ZeroDensity"


class DegenerateFit(ValidationError):
    code = "DegenerateFit"


class BudgetExceeded(RootedTuranError):
    """A search or enumeration was truncated; the answer is unknown, not negative."""

    code = "BudgetExceeded"


class ExpansionFails(RootedTuranError):
    """Hall-type expansion fails; ``payload`` holds the violating set."""

    code = "ExpansionFails"


class HypothesisViolated(RootedTuranError):
    code = "HypothesisViolated"


class InternalStuck(RootedTuranError):
    """A constructive step that the argument guarantees could not be completed."""

    code = "InternalStuck"
