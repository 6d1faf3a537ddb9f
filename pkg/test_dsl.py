"""
Tests for the expression language: lexing, parsing, lowering and printing
"""

from fractions import Fraction

import pytest

from core.errors import (
    AlphaOutOfRange,
    BadMultiplier,
    EmptySegment,
    ExprSyntaxError,
    ExprTypeError,
    InvalidEndpoints,
    NonUnitarySegment,
    Position,
    SpehKitError,
    UnknownSymbol,
)
from core.segments import steinberg
from core.unitary import TRIVIAL
from dsl import (
    Comp,
    Product,
    SegmentLit,
    Speh,
    Trivial,
    TokenKind,
    TwistedSegment,
    lower,
    parse,
    print_canonical,
    read_rep,
    read_segment,
    tokenize,
)
from oracle import enumerate_universe

HERE = Position(1, 1)


class TestLexer:
    def test_multi_char_tokens(self):
        kinds = [t.kind for t in tokenize("pi(u(nu^{1/2}*St(r0,1),2),1/4)")]
        assert kinds[:5] == [
            TokenKind.PI_OPEN, TokenKind.U_OPEN, TokenKind.NU_OPEN, TokenKind.INT, TokenKind.SLASH,
        ]
        assert TokenKind.CLOSE_STAR in kinds
        assert kinds[-1] is TokenKind.EOF

    def test_positions_track_lines(self):
        tokens = tokenize("St(r0,1)\n  x St(t,1)")
        sign = next(t for t in tokens if t.text == "x")
        assert sign.position == Position(2, 3)
        assert sign.spaced_before

    def test_identifier_is_not_a_keyword_without_paren(self):
        tokens = tokenize("St(u,1)")
        assert tokens[1].kind is TokenKind.ID
        assert tokens[1].text == "u"


class TestParse:
    def test_speh(self, alphabet):
        assert parse("u(St(r0,2),3)", alphabet) == Speh(SegmentLit("r0", 2, HERE), 3, HERE)

    def test_product_of_two(self, alphabet):
        expr = parse("pi(u(St(r1,1),2),1/3) x St(r0,2)", alphabet)
        assert isinstance(expr, Product)
        assert len(expr.factors) == 2
        assert [lower(f, alphabet).degree for f in expr.factors] == [8, 2]

    def test_twisted_and_endpoint_segments(self, alphabet):
        expr = parse("nu^{-1/2}*D(r0; 0..1)", alphabet)
        assert isinstance(expr, TwistedSegment)
        assert expr.shift == Fraction(-1, 2)
        assert read_segment("nu^{-1/2}*D(r0; 0..1)", alphabet) == steinberg(alphabet.get("r0"), 2)

    def test_trivial(self, alphabet):
        assert parse("1", alphabet) == Trivial(HERE)

    def test_whitespace_is_insignificant(self, alphabet):
        assert read_rep("  u(St( r0 , 2 ) ,\n 3 )  ", alphabet) == read_rep("u(St(r0,2),3)", alphabet)

    def test_node_positions(self, alphabet):
        expr = parse("St(r0,1) x\n  u(St(t,1),2)", alphabet)
        assert expr.factors[0].position == Position(1, 1)
        assert expr.factors[1].position == Position(2, 3)
        assert expr.factors[1].child.position == Position(2, 5)

    def test_to_dict(self, alphabet):
        data = parse("pi(u(St(r0,1),1),1/4)", alphabet).to_dict()
        assert data == {
            "node": "Comp",
            "child": {"node": "Speh", "child": {"node": "SegmentLit", "id": "r0", "l": 1}, "k": 1},
            "alpha": "1/4",
        }


MALFORMED = [
    ("", ExprSyntaxError, 1, 1),
    ("u(St(r0,2),3", ExprSyntaxError, 1, 13),
    ("St(r9,1)", UnknownSymbol, 1, 4),
    ("pi(u(St(r0,1),1),1/2)", AlphaOutOfRange, 1, 18),
    ("pi(u(St(r0,1),1),0)", AlphaOutOfRange, 1, 18),
    ("pi(u(St(r0,1),1),-1/4)", AlphaOutOfRange, 1, 18),
    ("u(St(r0,1),0)", BadMultiplier, 1, 12),
    ("D(r0; 1..0)", InvalidEndpoints, 1, 1),
    ("D(r0; 0..1/2)", InvalidEndpoints, 1, 1),
    ("St(r0,1) x", ExprSyntaxError, 1, 11),
    ("St(r0,1)xSt(r0,1)", ExprSyntaxError, 1, 9),
    ("St(r0,1)x St(r0,1)", ExprSyntaxError, 1, 9),
    ("St(r0,1) St(r0,1)", ExprSyntaxError, 1, 10),
    ("pi(St(r0,1),1/4)", ExprSyntaxError, 1, 4),
    ("u(u(St(r0,1),1),2)", ExprSyntaxError, 1, 3),
    ("St(r0,1.5)", ExprSyntaxError, 1, 8),
    ("St(r0,2) × St(r0,1)", ExprSyntaxError, 1, 10),
    ("nu^{1/3}St(r0,1)", ExprSyntaxError, 1, 8),
    ("nu^{1/2}*", ExprSyntaxError, 1, 10),
    ("pi(u(St(r0,1),1),1/0)", ExprSyntaxError, 1, 20),
    ("u(St(r0,1),-2)", ExprSyntaxError, 1, 12),
    ("St(r0)", ExprSyntaxError, 1, 6),
    ("2", ExprSyntaxError, 1, 1),
    ("D(r0 1..2)", ExprSyntaxError, 1, 6),
    ("(St(r0,1))", ExprSyntaxError, 1, 1),
    ("St(r0,1) x\nSt(q,1)", UnknownSymbol, 2, 4),
    ("u(St(r0," + "9" * 5000 + "),1)", ExprSyntaxError, 1, 9),
    ("u(St(r0,1)," + "9" * 601 + ")", ExprSyntaxError, 1, 12),
    ("pi(u(St(r0,1),1),1/" + "3" * 700 + ")", ExprSyntaxError, 1, 20),
    ("nu^{0}*" * 65 + "St(r0,1)", ExprSyntaxError, 1, 449),
    ("nu^{" + "-" * 5000 + "1/3}*St(r0,1)", NonUnitarySegment, 1, 1),
    ("nu^{" + "-" * 5000 + "}*St(r0,1)", ExprSyntaxError, 1, 5005),
]


class TestMalformed:
    @pytest.mark.parametrize("text, error, line, column", MALFORMED)
    def test_positioned_errors(self, alphabet, text, error, line, column):
        with pytest.raises(error) as info:
            read_rep(text, alphabet)
        assert info.value.position == Position(line, column)

    def test_syntax_error_lists_expected_tokens(self, alphabet):
        with pytest.raises(ExprSyntaxError) as info:
            parse("St(r0)", alphabet)
        assert info.value.expected == frozenset({","})
        assert info.value.to_dict()["expected"] == [","]

    def test_factor_start_set(self, alphabet):
        with pytest.raises(ExprSyntaxError) as info:
            parse("", alphabet)
        assert {"u(", "pi(", "St(", "nu^{", "D(", "1"} == info.value.expected

    def test_message_carries_position(self, alphabet):
        with pytest.raises(SpehKitError) as info:
            read_rep("St(r9,1)", alphabet)
        assert str(info.value).startswith("line 1, column 4:")


class TestLower:
    def test_bare_segment_is_k_one(self, alphabet, rep):
        assert lower(SegmentLit("r0", 2, HERE), alphabet) == rep("u(St(r0,2),1)")

    def test_multiplicity(self, alphabet, rep):
        pi = rep("u(St(r0,1),2) x u(St(r0,1),2)")
        assert pi.multiplicity(pi.distinct()[0]) == 2

    def test_trivial_inside_product(self, rep):
        assert rep("1 x St(r0,1) x 1") == rep("St(r0,1)")
        assert rep("1") == TRIVIAL

    def test_twisted_factor(self, alphabet):
        with pytest.raises(NonUnitarySegment) as info:
            read_rep("nu^{1/3}*St(r0,1)", alphabet)
        assert info.value.position == Position(1, 1)

    def test_twisted_segment_inside_speh(self, alphabet):
        with pytest.raises(NonUnitarySegment) as info:
            read_rep("St(r0,1) x u(nu^{1/2}*St(r0,1),2)", alphabet)
        assert info.value.position == Position(1, 14)

    def test_twist_that_recenters_is_fine(self, alphabet, rep):
        assert read_rep("nu^{1/2}*D(r0; -1..0)", alphabet) == rep("St(r0,2)")

    def test_deepest_allowed_twist_chain(self, alphabet, rep):
        text = "nu^{1/4}*" * 32 + "nu^{-1/4}*" * 32 + "St(r0,1)"
        assert read_rep(text, alphabet) == rep("St(r0,1)")

    def test_long_sign_chain(self, alphabet, rep):
        text = "pi(u(St(r0,1),1)," + "-" * 4000 + "1/4)"
        assert read_rep(text, alphabet) == rep("pi(u(St(r0,1),1),1/4)")

    def test_empty_segment_factor(self, alphabet):
        with pytest.raises(EmptySegment) as info:
            read_rep("St(r0,1) x St(r0,0)", alphabet)
        assert info.value.position == Position(1, 12)

    def test_comp_of_segment_is_a_type_error(self, alphabet):
        with pytest.raises(ExprTypeError):
            lower(Comp(SegmentLit("r0", 1, HERE), Fraction(1, 4), HERE), alphabet)

    def test_speh_of_speh_is_a_type_error(self, alphabet):
        inner = Speh(SegmentLit("r0", 1, HERE), 1, HERE)
        with pytest.raises(ExprTypeError):
            lower(Speh(inner, 2, HERE), alphabet)


class TestPrint:
    def test_empty(self):
        assert print_canonical(TRIVIAL) == "1"

    def test_speh(self, rep):
        assert print_canonical(rep("u(St(r0,2),3)")) == "u(St(r0,2),3)"

    def test_k_one_prints_explicitly(self, rep):
        assert print_canonical(rep("St(r0,2)")) == "u(St(r0,2),1)"

    def test_canonical_order(self, rep):
        text = print_canonical(rep("pi(u(St(r0,1),1),1/3) x St(ts,1) x St(t,1)"))
        assert text == "u(St(t,1),1) x u(St(ts,1),1) x pi(u(St(r0,1),1),1/3)"

    def test_round_trip_on_universe(self, alphabet, small_universe):
        for pi in enumerate_universe(small_universe):
            assert read_rep(print_canonical(pi), alphabet) == pi
