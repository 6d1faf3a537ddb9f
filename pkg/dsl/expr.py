"""
Expression Trees
Parse-tree node kinds produced by the parser; every node carries its source position
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Tuple, Union

from core.errors import Position
from core.segments import format_rational


@dataclass(frozen=True)
class SegmentLit:
    """St(id, l)"""
    symbol: str
    length: int
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"node": "SegmentLit", "id": self.symbol, "l": self.length}


@dataclass(frozen=True)
class TwistedSegment:
    """nu^{shift}*segment"""
    shift: Fraction
    segment: "SegmentExpr"
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "node": "TwistedSegment",
            "shift": format_rational(self.shift),
            "segment": self.segment.to_dict(),
        }


@dataclass(frozen=True)
class EndpointSegment:
    """D(id; a..b)"""
    symbol: str
    a: Fraction
    b: Fraction
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "node": "EndpointSegment",
            "id": self.symbol,
            "a": format_rational(self.a),
            "b": format_rational(self.b),
        }


@dataclass(frozen=True)
class Speh:
    """u(expr, k)"""
    child: "Expr"
    k: int
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"node": "Speh", "child": self.child.to_dict(), "k": self.k}


@dataclass(frozen=True)
class Comp:
    """pi(expr, alpha)"""
    child: "Expr"
    alpha: Fraction
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "node": "Comp",
            "child": self.child.to_dict(),
            "alpha": format_rational(self.alpha),
        }


@dataclass(frozen=True)
class Product:
    factors: Tuple["Expr", ...]
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"node": "Product", "factors": [f.to_dict() for f in self.factors]}


@dataclass(frozen=True)
class Trivial:
    position: Position = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"node": "Trivial"}


SegmentExpr = Union[SegmentLit, TwistedSegment, EndpointSegment]
Expr = Union[SegmentLit, TwistedSegment, EndpointSegment, Speh, Comp, Product, Trivial]

SEGMENT_NODES = (SegmentLit, TwistedSegment, EndpointSegment)
