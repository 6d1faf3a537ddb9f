# Expression language for unitary representations

from .expr import (
    Comp,
    EndpointSegment,
    Expr,
    Product,
    SegmentLit,
    Speh,
    Trivial,
    TwistedSegment,
)
from .lexer import Token, TokenKind, tokenize
from .lowering import lower, lower_segment, print_canonical, read_rep, read_segment
from .parser import parse, parse_segment_expr

__all__ = [
    # Trees
    'Expr',
    'SegmentLit',
    'TwistedSegment',
    'EndpointSegment',
    'Speh',
    'Comp',
    'Product',
    'Trivial',
    # Lexing / parsing
    'Token',
    'TokenKind',
    'tokenize',
    'parse',
    'parse_segment_expr',
    # Lowering
    'lower',
    'lower_segment',
    'print_canonical',
    'read_rep',
    'read_segment',
]
