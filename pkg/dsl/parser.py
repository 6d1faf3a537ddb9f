"""
Expression Parser
Recursive descent over the representation grammar, with positioned errors
"""

from fractions import Fraction
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from core.alphabet import Alphabet
from core.errors import (
    AlphaOutOfRange,
    BadMultiplier,
    ExprSyntaxError,
    Position,
    SpehKitError,
)
from core.segments import format_rational, from_endpoints
from core.unitary import HALF

from .expr import (
    Comp,
    EndpointSegment,
    Expr,
    Product,
    SegmentExpr,
    SegmentLit,
    Speh,
    Trivial,
    TwistedSegment,
)
from .lexer import Lexer, Token, TokenKind

PRODUCT_SIGN = "x"

SEGMENT_START = frozenset({TokenKind.ST_OPEN, TokenKind.NU_OPEN, TokenKind.D_OPEN})
FACTOR_START = SEGMENT_START | {TokenKind.U_OPEN, TokenKind.PI_OPEN, "1"}
RATIONAL_START = frozenset({TokenKind.INT, TokenKind.MINUS})

# Below the smallest interpreter limit on int() conversion (640 digits).
MAX_INT_DIGITS = 600
MAX_TWIST_DEPTH = 64


def _names(expected: Iterable) -> FrozenSet[str]:
    return frozenset(e.value if isinstance(e, TokenKind) else str(e) for e in expected)


class Parser:
    """
    One parser per input text.

    rep     := factor { WS "x" WS factor }
    factor  := speh | comp | segment | "1"
    speh    := "u(" segment "," INT ")"
    comp    := "pi(" speh "," RAT ")"
    segment := "St(" ID "," INT ")" | "nu^{" RAT "}*" segment | "D(" ID ";" RAT ".." RAT ")"
    """

    def __init__(self, text: str, alphabet: Alphabet):
        self._stream: Iterator[Token] = iter(Lexer(text))
        self._current: Token = next(self._stream)
        self.alphabet = alphabet

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------

    @property
    def current(self) -> Token:
        return self._current

    def _advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self._current = next(self._stream)
        return token

    def _fail(self, expected: Iterable) -> ExprSyntaxError:
        token = self.current
        found = "end of input" if token.kind is TokenKind.EOF else repr(token.text)
        names = _names(expected)
        return ExprSyntaxError(
            f"unexpected {found}, expected one of: {', '.join(sorted(names))}",
            token.position,
            names,
        )

    def _expect(self, kind: TokenKind) -> Token:
        if self.current.kind is not kind:
            raise self._fail([kind])
        return self._advance()

    def _at_product_sign(self) -> bool:
        token = self.current
        return token.kind is TokenKind.ID and token.text == PRODUCT_SIGN

    # ------------------------------------------------------------------
    # Grammar
    # ------------------------------------------------------------------

    def parse_rep(self) -> Expr:
        start = self.current.position
        factors = [self.parse_factor()]
        while self._at_product_sign():
            sign = self._advance()
            spaced_after = self.current.spaced_before or self.current.kind is TokenKind.EOF
            if not sign.spaced_before or not spaced_after:
                raise ExprSyntaxError(
                    "product sign 'x' must be surrounded by whitespace",
                    sign.position,
                    frozenset({" x "}),
                )
            factors.append(self.parse_factor())
        if self.current.kind is not TokenKind.EOF:
            raise self._fail([TokenKind.EOF, PRODUCT_SIGN])
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), start)

    def parse_factor(self) -> Expr:
        token = self.current
        if token.kind is TokenKind.U_OPEN:
            return self.parse_speh()
        if token.kind is TokenKind.PI_OPEN:
            return self.parse_comp()
        if token.kind in SEGMENT_START:
            return self.parse_segment()
        if token.kind is TokenKind.INT and token.text == "1":
            self._advance()
            return Trivial(token.position)
        raise self._fail(FACTOR_START)

    def parse_speh(self) -> Speh:
        start = self._expect(TokenKind.U_OPEN).position
        segment = self.parse_segment()
        self._expect(TokenKind.COMMA)
        k_token = self._expect(TokenKind.INT)
        k = self._int(k_token)
        if k < 1:
            raise BadMultiplier(f"Speh multiplier k must be >= 1, got {k}", k_token.position)
        self._expect(TokenKind.RPAREN)
        return Speh(segment, k, start)

    def parse_comp(self) -> Comp:
        start = self._expect(TokenKind.PI_OPEN).position
        if self.current.kind is not TokenKind.U_OPEN:
            raise self._fail([TokenKind.U_OPEN])
        speh = self.parse_speh()
        self._expect(TokenKind.COMMA)
        alpha_position = self.current.position
        alpha = self.parse_rational()
        if not 0 < alpha < HALF:
            raise AlphaOutOfRange(
                f"alpha must satisfy 0 < alpha < 1/2, got {format_rational(alpha)}",
                alpha_position,
            )
        self._expect(TokenKind.RPAREN)
        return Comp(speh, alpha, start)

    def parse_segment(self) -> SegmentExpr:
        """Twist prefixes are read in a loop, then wrapped innermost first."""
        twists: List[Tuple[Fraction, Position]] = []
        while self.current.kind is TokenKind.NU_OPEN:
            token = self._advance()
            if len(twists) == MAX_TWIST_DEPTH:
                raise ExprSyntaxError(
                    f"more than {MAX_TWIST_DEPTH} nested twists",
                    token.position,
                    frozenset({"St(", "D("}),
                )
            shift = self.parse_rational()
            self._expect(TokenKind.CLOSE_STAR)
            if self.current.kind not in SEGMENT_START:
                raise self._fail(SEGMENT_START)
            twists.append((shift, token.position))

        segment: SegmentExpr = self._parse_plain_segment()
        for shift, position in reversed(twists):
            segment = TwistedSegment(shift, segment, position)
        return segment

    def _parse_plain_segment(self) -> SegmentExpr:
        token = self.current
        if token.kind is TokenKind.ST_OPEN:
            self._advance()
            symbol = self._symbol()
            self._expect(TokenKind.COMMA)
            length = self._int(self._expect(TokenKind.INT))
            self._expect(TokenKind.RPAREN)
            return SegmentLit(symbol, length, token.position)

        if token.kind is TokenKind.D_OPEN:
            self._advance()
            symbol = self._symbol()
            self._expect(TokenKind.SEMI)
            a = self.parse_rational()
            self._expect(TokenKind.DOTS)
            b = self.parse_rational()
            self._expect(TokenKind.RPAREN)
            try:
                from_endpoints(self.alphabet.get(symbol), a, b)
            except SpehKitError as e:
                raise e.at(token.position)
            return EndpointSegment(symbol, a, b, token.position)

        raise self._fail(SEGMENT_START)

    def _symbol(self) -> str:
        token = self._expect(TokenKind.ID)
        self.alphabet.get(token.text, token.position)
        return token.text

    def _int(self, token: Token) -> int:
        if len(token.text) > MAX_INT_DIGITS:
            raise ExprSyntaxError(
                f"integer literal longer than {MAX_INT_DIGITS} digits",
                token.position,
                frozenset({"INT"}),
            )
        return int(token.text)

    def parse_rational(self) -> Fraction:
        negative = False
        while self.current.kind is TokenKind.MINUS:
            self._advance()
            if self.current.kind not in RATIONAL_START:
                raise self._fail(RATIONAL_START)
            negative = not negative

        numerator = self._int(self._expect(TokenKind.INT))
        if negative:
            numerator = -numerator
        if self.current.kind is not TokenKind.SLASH:
            return Fraction(numerator)
        self._advance()
        denominator_token = self._expect(TokenKind.INT)
        denominator = self._int(denominator_token)
        if denominator == 0:
            raise ExprSyntaxError(
                "zero denominator",
                denominator_token.position,
                frozenset({"nonzero INT"}),
            )
        return Fraction(numerator, denominator)


def parse(text: str, alphabet: Alphabet) -> Expr:
    """Parse a representation expression; symbol ids are resolved against the alphabet."""
    return Parser(text, alphabet).parse_rep()


def parse_segment_expr(text: str, alphabet: Alphabet) -> SegmentExpr:
    """Parse text that must consist of a single segment expression."""
    parser = Parser(text, alphabet)
    segment = parser.parse_segment()
    if parser.current.kind is not TokenKind.EOF:
        raise parser._fail([TokenKind.EOF])
    return segment

