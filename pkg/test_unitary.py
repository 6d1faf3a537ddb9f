"""
Tests for Tadic normal forms
"""

from fractions import Fraction

import pytest

from core.errors import AlphaOutOfRange, BadMultiplier, EmptySegment, NonUnitarySegment
from core.segments import steinberg, twist
from core.unitary import (
    TRIVIAL,
    ComplementaryFactor,
    SpehFactor,
    UnitaryRep,
    dual_rep,
    is_sigma_self_dual,
    langlands_data,
    mk_complementary,
    mk_speh,
    product,
    rep_of,
    self_dual_blocks,
    sigma_contragredient,
    sigma_rep,
)


class TestFactors:
    def test_mk_speh(self, r0):
        factor = mk_speh(steinberg(r0, 2), 3)
        assert factor.to_text() == "u(St(r0,2),3)"
        assert factor.degree == 6

    def test_k_one_is_the_segment(self, r0):
        assert mk_speh(steinberg(r0, 1), 1).degree == 1

    def test_non_unitary_segment(self, r0):
        with pytest.raises(NonUnitarySegment):
            mk_speh(twist(steinberg(r0, 2), Fraction(1, 3)), 2)

    def test_bad_multiplier(self, r0):
        with pytest.raises(BadMultiplier):
            mk_speh(steinberg(r0, 1), 0)

    def test_empty_segment(self, r0):
        with pytest.raises(EmptySegment):
            mk_speh(steinberg(r0, 0), 1)

    def test_mk_complementary(self, r0, r1):
        factor = mk_complementary(steinberg(r0, 1), 2, Fraction(1, 4))
        assert factor.to_text() == "pi(u(St(r0,1),2),1/4)"
        assert factor.degree == 4
        assert mk_complementary(steinberg(r1, 1), 1, Fraction(1, 3)).degree == 4

    @pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(0), Fraction(-1, 4), Fraction(3, 4)])
    def test_alpha_out_of_range(self, r0, alpha):
        with pytest.raises(AlphaOutOfRange):
            mk_complementary(steinberg(r0, 1), 1, alpha)

    def test_canonical_factor_order(self, r0, t):
        speh = mk_speh(steinberg(r0, 1), 2)
        comp = mk_complementary(steinberg(r0, 1), 1, Fraction(1, 4))
        single = mk_speh(steinberg(t, 1), 1)
        assert sorted([comp, speh, single], key=lambda f: f.sort_key()) == [single, speh, comp]


class TestProduct:
    def test_multiplicity(self, r0):
        factor = mk_speh(steinberg(r0, 1), 2)
        rep = product(rep_of(factor), rep_of(factor))
        assert rep.multiplicity(factor) == 2
        assert rep.degree == 4

    def test_identity(self, rep):
        pi = rep("u(St(r0,2),3) x St(t,1)")
        assert product(pi, TRIVIAL) == pi
        assert pi * TRIVIAL == pi

    def test_commutative(self, rep):
        assert rep("St(t,1) x St(r0,2)") == rep("St(r0,2) x St(t,1)")

    def test_hashable_and_canonical(self, rep):
        seen = {rep("St(t,1) x St(ts,1)"), rep("St(ts,1) x St(t,1)")}
        assert len(seen) == 1

    def test_empty_text(self):
        assert UnitaryRep().to_text() == "1"
        assert TRIVIAL.is_trivial

    def test_to_dict(self, rep):
        data = rep("u(St(r0,1),2) x u(St(r0,1),2)").to_dict()
        assert data["degree"] == 4
        assert data["factors"][0]["multiplicity"] == 2


class TestInvolutions:
    def test_dual_of_self_contragredient(self, alphabet, rep):
        assert dual_rep(rep("u(St(t,1),2)"), alphabet) == rep("u(St(t,1),2)")

    def test_sigma_swaps(self, alphabet, rep):
        assert sigma_rep(rep("u(St(t,1),2)"), alphabet) == rep("u(St(ts,1),2)")

    def test_sigma_contragredient(self, alphabet, rep):
        assert sigma_contragredient(rep("St(t,1)"), alphabet) == rep("St(ts,1)")

    @pytest.mark.parametrize("text, expected", [
        ("St(t,1) x St(ts,1)", True),
        ("St(t,1)", False),
        ("pi(u(St(r0,1),2),1/4)", True),
        ("pi(u(St(t,1),1),1/4)", False),
        ("pi(u(St(t,1),1),1/4) x pi(u(St(ts,1),1),1/4)", True),
        ("1", True),
    ])
    def test_sigma_self_dual(self, alphabet, rep, text, expected):
        assert is_sigma_self_dual(rep(text), alphabet) is expected


class TestLanglands:
    def test_speh(self, rep):
        centers = [s.center for s in langlands_data(rep("u(St(r0,1),2)"))]
        assert centers == [Fraction(1, 2), Fraction(-1, 2)]

    def test_discrete_series(self, rep, r0):
        assert langlands_data(rep("St(r0,3)")) == [steinberg(r0, 3)]

    def test_complementary(self, rep):
        centers = [s.center for s in langlands_data(rep("pi(u(St(r0,1),2),1/4)"))]
        assert centers == [Fraction(3, 4), Fraction(1, 4), Fraction(-1, 4), Fraction(-3, 4)]

    def test_degree_is_preserved(self, rep):
        pi = rep("pi(u(St(r1,1),2),1/3) x St(r0,2)")
        assert sum(s.degree for s in langlands_data(pi)) == pi.degree == 10


class TestSelfDualBlocks:
    def test_not_self_dual(self, alphabet, rep):
        assert self_dual_blocks(rep("St(t,1)"), alphabet) is None

    def test_pairs_and_odd_factors(self, alphabet, rep):
        pi = rep("St(t,1) x St(ts,1) x u(St(r0,1),2) x u(St(r0,1),2) x u(St(r0,1),2)")
        blocks = self_dual_blocks(pi, alphabet)
        assert [f.to_text() for f in blocks.odd_factors] == ["u(St(r0,1),2)"]
        assert len(blocks.pairs) == 2

    def test_complementary_splits_into_halves(self, alphabet, rep):
        blocks = self_dual_blocks(rep("pi(u(St(r0,1),1),1/3)"), alphabet)
        assert blocks.to_dict()["pairs"] == [["nu^{1/3}*u(St(r0,1),1)", "nu^{-1/3}*u(St(r0,1),1)"]]
        assert blocks.odd_factors == []

    def test_non_self_dual_complementary_pairs_with_partner(self, alphabet, rep):
        pi = rep("pi(u(St(t,1),1),1/4) x pi(u(St(ts,1),1),1/4)")
        blocks = self_dual_blocks(pi, alphabet)
        assert len(blocks.pairs) == 1
        first, second = blocks.pairs[0]
        assert isinstance(first, ComplementaryFactor)
        assert {first.to_text(), second.to_text()} == {
            "pi(u(St(t,1),1),1/4)", "pi(u(St(ts,1),1),1/4)",
        }

    def test_lines(self, alphabet, rep):
        lines = self_dual_blocks(rep("St(r0,1)"), alphabet).to_lines()
        assert lines == ["odd   u(St(r0,1),1)"]


def test_speh_factor_equality_ignores_symbol_identity(alphabet, r0):
    flipped = alphabet.with_flipped_parity("r0")
    assert SpehFactor(steinberg(r0, 1), 2) == SpehFactor(steinberg(flipped.get("r0"), 1), 2)
