"""
Errors
Exception hierarchy shared by the alphabet loader, the algebra, the engine and the DSL
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Optional


@dataclass(frozen=True)
class Position:
    """1-based source position inside an expression or alphabet file."""
    line: int
    column: int

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


class SpehKitError(Exception):
    """Base class for every domain error raised by speh-kit."""

    def __init__(self, message: str, position: Optional[Position] = None):
        self.message = message
        self.position = position
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.position is not None:
            return f"{self.position}: {self.message}"
        return self.message

    def at(self, position: Optional[Position]) -> "SpehKitError":
        """Attach a position if none is known yet."""
        if self.position is None and position is not None:
            self.position = position
            self.args = (str(self),)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "line": self.position.line if self.position else None,
            "column": self.position.column if self.position else None,
        }


# Alphabet loading

class ParseError(SpehKitError):
    """Malformed alphabet file."""


class DanglingReference(SpehKitError):
    """A dual or sigma id that is not declared."""


class BrokenInvolution(SpehKitError):
    """dual/sigma maps that are not involutive, do not commute, or change degree."""


class ParityOnNonSelfDual(SpehKitError):
    """Parity declared on a symbol with sigma(dual(rho)) != rho."""


class MissingParity(SpehKitError):
    """A sigma-self-dual symbol without a declared parity."""


class UnknownSymbol(SpehKitError):
    """A cuspidal id that the alphabet does not declare."""


# Algebra

class InvalidEndpoints(SpehKitError):
    """Segment endpoints whose difference is not a non-negative integer."""


class EmptySegment(SpehKitError):
    """An operation that needs length >= 1 received the trivial segment."""


class NonUnitarySegment(SpehKitError):
    """A segment with nonzero center used where a unitary one is required."""


class BadMultiplier(SpehKitError):
    """A Speh multiplier k outside its allowed range."""


class AlphaOutOfRange(SpehKitError):
    """A complementary-series exponent outside the open interval (0, 1/2)."""


# Engine

class NotGeneric(SpehKitError):
    """The generic criterion was asked about a representation with some k >= 2."""


class NotSelfDual(SpehKitError):
    """The dichotomy was asked about a factor that is not sigma-self-dual."""


class InvalidUniverse(SpehKitError):
    """Enumeration bounds that do not describe a finite universe."""


# Expression language

class ExprSyntaxError(SpehKitError):
    """Expression text that does not follow the grammar."""

    def __init__(
        self,
        message: str,
        position: Optional[Position] = None,
        expected: FrozenSet[str] = frozenset(),
    ):
        self.expected = expected
        super().__init__(message, position)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["expected"] = sorted(self.expected)
        return data


class ExprTypeError(SpehKitError):
    """A well-formed expression whose node kinds do not lower (e.g. pi of a segment)."""
