"""
Tests for the segment algebra
"""

from fractions import Fraction

import pytest

from core.errors import EmptySegment, InvalidEndpoints
from core.segments import (
    dual_segment,
    down,
    from_endpoints,
    is_sigma_self_dual_segment,
    segment_distinguished,
    segment_eta_distinguished,
    sigma_segment,
    steinberg,
    twist,
    up,
)


class TestConstruction:
    def test_from_endpoints_centered(self, r0):
        segment = from_endpoints(r0, Fraction(-1, 2), Fraction(1, 2))
        assert segment == steinberg(r0, 2)
        assert segment.center == 0

    def test_from_endpoints_singleton(self, r0):
        assert from_endpoints(r0, 0, 0) == steinberg(r0, 1)

    def test_from_endpoints_shifted(self, r0):
        segment = from_endpoints(r0, 1, 2)
        assert segment.length == 2
        assert segment.center == Fraction(3, 2)
        assert segment.endpoints == (1, 2)

    @pytest.mark.parametrize("a, b", [(1, 0), (0, Fraction(1, 2)), (Fraction(1, 3), 1)])
    def test_from_endpoints_rejects(self, r0, a, b):
        with pytest.raises(InvalidEndpoints):
            from_endpoints(r0, a, b)

    def test_degree(self, r1):
        assert steinberg(r1, 3).degree == 6

    def test_text(self, r0):
        assert steinberg(r0, 2).to_text() == "St(r0,2)"
        assert twist(steinberg(r0, 2), Fraction(-1, 3)).to_text() == "nu^{-1/3}*St(r0,2)"
        assert steinberg(r0, 0).to_text() == "1"


class TestLadder:
    def test_up(self, r0):
        assert up(steinberg(r0, 1)) == steinberg(r0, 2)

    def test_down_to_trivial(self, r0, r1):
        trivial = down(steinberg(r0, 1))
        assert trivial.is_trivial
        assert trivial == down(steinberg(r1, 1))

    def test_down_trivial_raises(self, r0):
        with pytest.raises(EmptySegment):
            down(steinberg(r0, 0))

    def test_up_keeps_center(self, r0):
        shifted = twist(steinberg(r0, 1), Fraction(1, 2))
        assert up(shifted).center == Fraction(1, 2)


class TestInvolutions:
    def test_dual_negates_center(self, alphabet, r0):
        shifted = twist(steinberg(r0, 2), Fraction(1, 2))
        assert dual_segment(shifted, alphabet) == twist(steinberg(r0, 2), Fraction(-1, 2))

    def test_sigma_uses_alphabet(self, alphabet, t, ts):
        assert sigma_segment(steinberg(t, 3), alphabet) == steinberg(ts, 3)

    def test_twist_is_a_group_action(self, r0):
        segment = steinberg(r0, 1)
        assert twist(twist(segment, Fraction(1, 2)), Fraction(-1, 2)) == segment

    def test_self_duality(self, alphabet, r0, t):
        assert is_sigma_self_dual_segment(steinberg(r0, 4), alphabet)
        assert not is_sigma_self_dual_segment(steinberg(t, 1), alphabet)
        assert not is_sigma_self_dual_segment(twist(steinberg(r0, 1), Fraction(1, 3)), alphabet)


class TestDistinction:
    @pytest.mark.parametrize("length, expected", [(1, True), (2, False), (3, True), (4, False)])
    def test_sigma_alternates_with_length(self, alphabet, r0, length, expected):
        assert segment_distinguished(steinberg(r0, length), alphabet) is expected

    @pytest.mark.parametrize("length, expected", [(1, True), (2, False)])
    def test_odd_parity_symbol(self, alphabet, r1, length, expected):
        assert segment_eta_distinguished(steinberg(r1, length), alphabet) is expected

    def test_twisted_is_never_distinguished(self, alphabet, r0):
        shifted = twist(steinberg(r0, 1), Fraction(1, 3))
        assert not segment_distinguished(shifted, alphabet)
        assert not segment_eta_distinguished(shifted, alphabet)

    def test_eta(self, alphabet, r0, t):
        assert segment_eta_distinguished(steinberg(r0, 2), alphabet)
        assert not segment_eta_distinguished(steinberg(r0, 1), alphabet)
        assert not segment_eta_distinguished(steinberg(t, 5), alphabet)

    def test_alternation(self, alphabet, r0, r1):
        for rho in (r0, r1):
            for length in range(1, 6):
                segment = steinberg(rho, length)
                assert segment_distinguished(segment, alphabet) == segment_eta_distinguished(
                    up(segment), alphabet
                )
                assert segment_distinguished(segment, alphabet) != segment_eta_distinguished(
                    segment, alphabet
                )

    def test_trivial_segment_raises(self, alphabet, r0):
        with pytest.raises(EmptySegment):
            segment_distinguished(steinberg(r0, 0), alphabet)
