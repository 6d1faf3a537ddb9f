"""
Lowering
Expression trees to canonical unitary representations, and back to text
"""

from core.alphabet import Alphabet
from core.errors import ExprTypeError, SpehKitError
from core.segments import Segment, from_endpoints, steinberg
from core.unitary import TRIVIAL, ComplementaryFactor, SpehFactor, UnitaryRep, product

from .expr import (
    SEGMENT_NODES,
    Comp,
    EndpointSegment,
    Expr,
    Product,
    SegmentLit,
    Speh,
    Trivial,
    TwistedSegment,
)
from .parser import parse, parse_segment_expr


def lower_segment(expr: Expr, alphabet: Alphabet) -> Segment:
    """Evaluate a segment node; twists are kept, so the result need not be unitary."""
    try:
        if isinstance(expr, SegmentLit):
            return steinberg(alphabet.get(expr.symbol), expr.length)
        if isinstance(expr, TwistedSegment):
            return lower_segment(expr.segment, alphabet).twisted(expr.shift)
        if isinstance(expr, EndpointSegment):
            return from_endpoints(alphabet.get(expr.symbol), expr.a, expr.b)
    except SpehKitError as e:
        raise e.at(expr.position)
    raise ExprTypeError(
        f"expected a segment, got {type(expr).__name__}",
        getattr(expr, "position", None),
    )


def _lower_speh(expr: Speh, alphabet: Alphabet) -> SpehFactor:
    if not isinstance(expr.child, SEGMENT_NODES):
        raise ExprTypeError(
            f"u(...) needs a segment, got {type(expr.child).__name__}",
            expr.position,
        )
    delta = lower_segment(expr.child, alphabet)
    try:
        return SpehFactor(delta, expr.k)
    except SpehKitError as e:
        raise e.at(expr.child.position)


def lower(expr: Expr, alphabet: Alphabet) -> UnitaryRep:
    """Canonical product of the constructed factors; bare segments become u(D,1)."""
    if isinstance(expr, Trivial):
        return TRIVIAL
    if isinstance(expr, Product):
        return product(*(lower(factor, alphabet) for factor in expr.factors))
    if isinstance(expr, Speh):
        return UnitaryRep([_lower_speh(expr, alphabet)])
    if isinstance(expr, Comp):
        if not isinstance(expr.child, Speh):
            raise ExprTypeError(
                f"pi(...) needs a Speh factor u(...), got {type(expr.child).__name__}",
                expr.position,
            )
        base = _lower_speh(expr.child, alphabet)
        try:
            return UnitaryRep([ComplementaryFactor(base, expr.alpha)])
        except SpehKitError as e:
            raise e.at(expr.position)
    if isinstance(expr, SEGMENT_NODES):
        delta = lower_segment(expr, alphabet)
        try:
            return UnitaryRep([SpehFactor(delta, 1)])
        except SpehKitError as e:
            raise e.at(expr.position)
    raise ExprTypeError(f"cannot lower {type(expr).__name__}")


def print_canonical(rep: UnitaryRep) -> str:
    return rep.to_text()


def read_rep(text: str, alphabet: Alphabet) -> UnitaryRep:
    """parse followed by lower."""
    return lower(parse(text, alphabet), alphabet)


def read_segment(text: str, alphabet: Alphabet) -> Segment:
    return lower_segment(parse_segment_expr(text, alphabet), alphabet)
