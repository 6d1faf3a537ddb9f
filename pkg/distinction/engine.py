"""
Distinction Engine
Decision procedures for sigma-distinction of irreducible unitary representations
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from core.alphabet import Alphabet
from core.errors import BadMultiplier, EmptySegment, NonUnitarySegment, NotGeneric, NotSelfDual
from core.segments import (
    Segment,
    is_sigma_self_dual_segment,
    segment_distinguished,
    segment_eta_distinguished,
)
from core.unitary import Factor, SpehFactor, UnitaryRep, is_sigma_self_dual

from .trace import ProofTrace, Rule, conjunction


class DistinctionType(str, Enum):
    """Which of the two characters a sigma-self-dual Speh factor is distinguished by"""
    SIGMA = "SIGMA"
    ETA = "ETA"


# ============================================================================
# LEAVES
# ============================================================================

def self_duality_trace(rep: UnitaryRep, alphabet: Alphabet) -> ProofTrace:
    verdict = is_sigma_self_dual(rep, alphabet)
    return ProofTrace(
        rule=Rule.PROP_SELFDUAL_NECESSARY,
        verdict=verdict,
        subject=rep.to_text(),
        detail=None if verdict else "pi^vee differs from pi^sigma",
    )


def segment_trace(segment: Segment, alphabet: Alphabet) -> ProofTrace:
    """Leaf citing the declared parity behind segment_distinguished."""
    verdict = segment_distinguished(segment, alphabet)
    if segment.center != 0 or not alphabet.is_sigma_self_dual(segment.rho):
        detail = "segment is not sigma-self-dual"
    else:
        detail = (
            f"parity({segment.rho.id})={alphabet.parity_of(segment.rho)}, "
            f"needs {(segment.length - 1) % 2}"
        )
    return ProofTrace(
        rule=Rule.PROP_DISCRDIST,
        verdict=verdict,
        subject=segment.to_text(),
        detail=detail,
    )


def alternation_trace(
    segment: Segment,
    alphabet: Alphabet,
    reference: Optional[Alphabet] = None,
) -> ProofTrace:
    """
    Delta is sigma-distinguished iff Delta_+ is (sigma, eta)-distinguished.

    The eta side is read from `reference` when given, so a corrupted alphabet
    on the sigma side shows up as a failed node.
    """
    eta_alphabet = reference or alphabet
    lower = segment_trace(segment, alphabet)
    upper_segment = segment.up()
    upper = ProofTrace(
        rule=Rule.PROP_DISCRDIST,
        verdict=segment_eta_distinguished(upper_segment, eta_alphabet),
        subject=upper_segment.to_text(),
        detail="(sigma, eta)-distinction",
    )
    return ProofTrace(
        rule=Rule.COR_ALTERNATION,
        verdict=lower.verdict == upper.verdict,
        subject=f"{segment.to_text()} / {upper_segment.to_text()}",
        children=[lower, upper],
    )


def _odd_factor_trace(factor: SpehFactor, multiplicity: int, alphabet: Alphabet) -> ProofTrace:
    leaf = segment_trace(factor.delta, alphabet)
    if factor.k == 1:
        return leaf
    return ProofTrace(
        rule=Rule.COR_SPEHDIST,
        verdict=leaf.verdict,
        subject=factor.to_text(),
        children=[leaf],
        detail=f"multiplicity {multiplicity}",
    )


# ============================================================================
# DECISION PROCEDURES
# ============================================================================

def is_sigma_induced(rep: UnitaryRep, alphabet: Alphabet) -> Tuple[bool, ProofTrace]:
    """
    sigma-self-dual, and every sigma-self-dual Speh factor of odd multiplicity
    sits on a sigma-distinguished segment.
    """
    children = [self_duality_trace(rep, alphabet)]
    for f, m in rep.items():
        if not isinstance(f, SpehFactor) or m % 2 == 0:
            continue
        if not is_sigma_self_dual_segment(f.delta, alphabet):
            continue
        children.append(_odd_factor_trace(f, m, alphabet))
    trace = conjunction(Rule.DEF_SIGMA_INDUCED, rep.to_text(), children)
    return trace.verdict, trace


def is_distinguished(rep: UnitaryRep, alphabet: Alphabet) -> Tuple[bool, ProofTrace]:
    """An irreducible unitary representation is sigma-distinguished iff it is sigma-induced."""
    _, induced = is_sigma_induced(rep, alphabet)
    trace = conjunction(Rule.THM_UNITDIST, rep.to_text(), [induced])
    return trace.verdict, trace


def is_distinguished_generic(rep: UnitaryRep, alphabet: Alphabet) -> Tuple[bool, ProofTrace]:
    """Generic case (every k = 1) of the same criterion."""
    rigid = [f for f in rep.distinct() if f.k != 1]
    if rigid:
        raise NotGeneric(f"{rigid[0].to_text()} has k = {rigid[0].k} >= 2")
    _, induced = is_sigma_induced(rep, alphabet)
    trace = conjunction(Rule.THM_DISTGEN, rep.to_text(), [induced])
    return trace.verdict, trace


def dichotomy(factor: SpehFactor, alphabet: Alphabet) -> DistinctionType:
    """A sigma-self-dual u(D,k) is sigma- or (sigma, eta)-distinguished, never both."""
    if not is_sigma_self_dual_segment(factor.delta, alphabet):
        raise NotSelfDual(f"{factor.to_text()} is not sigma-self-dual")
    if segment_distinguished(factor.delta, alphabet):
        return DistinctionType.SIGMA
    return DistinctionType.ETA


def speh_eta_distinguished(factor: SpehFactor, alphabet: Alphabet) -> bool:
    """u(D,k) is (sigma, eta)-distinguished iff it is sigma-self-dual and not sigma-distinguished."""
    if not is_sigma_self_dual_segment(factor.delta, alphabet):
        return False
    return dichotomy(factor, alphabet) is DistinctionType.ETA


# ============================================================================
# TRACE-FREE VERDICTS
# ============================================================================

class VerdictCache:
    """
    The is_distinguished criterion without a ProofTrace.

    Per-factor facts (sigma-contragredient partner, whether an odd
    multiplicity is allowed) are computed once and reused, so a verdict
    costs one dictionary pass over the factors.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._facts: Dict[Factor, Tuple[Factor, bool]] = {}

    def facts(self, factor: Factor) -> Tuple[Factor, bool]:
        known = self._facts.get(factor)
        if known is None:
            partner = factor.sigma(self.alphabet).dual(self.alphabet)
            odd_allowed = (
                not isinstance(factor, SpehFactor)
                or not is_sigma_self_dual_segment(factor.delta, self.alphabet)
                or segment_distinguished(factor.delta, self.alphabet)
            )
            known = (partner, odd_allowed)
            self._facts[factor] = known
        return known

    def is_sigma_self_dual(self, rep: UnitaryRep) -> bool:
        items = rep.items()
        counts = dict(items)
        return all(counts.get(self.facts(f)[0], 0) == m for f, m in items)

    def is_distinguished(self, rep: UnitaryRep) -> bool:
        items = rep.items()
        counts = dict(items)
        for f, m in items:
            partner, odd_allowed = self.facts(f)
            if counts.get(partner, 0) != m:
                return False
            if m % 2 and not odd_allowed:
                return False
        return True


def distinguished_verdict(rep: UnitaryRep, alphabet: Alphabet) -> bool:
    """is_distinguished(rep, alphabet)[0] without building the trace."""
    return VerdictCache(alphabet).is_distinguished(rep)


# ============================================================================
# END OF COMPLEMENTARY SERIES
# ============================================================================

def end_of_complementary_series(
    delta: Segment,
    k: int,
    alphabet: Alphabet,
) -> Tuple[UnitaryRep, UnitaryRep]:
    """
    The two subquotients of pi(u(D,k), 1/2):
    u(D_-,k) x u(D_+,k) and u(D,k-1) x u(D,k+1); trivial factors are dropped.

    Raises EmptySegment for the trivial segment, NonUnitarySegment for a
    nonzero center and BadMultiplier for k < 2.
    """
    if delta.is_trivial:
        raise EmptySegment("end of complementary series needs a segment of length >= 1")
    if not delta.is_unitary:
        raise NonUnitarySegment(f"{delta.to_text()} is not unitary (center must be 0)")
    if k < 2:
        raise BadMultiplier(f"end of complementary series needs k >= 2, got {k}")
    alphabet.get(delta.rho.id)

    lower = delta.down()
    pi_a_factors = [SpehFactor(delta.up(), k)]
    if not lower.is_trivial:
        pi_a_factors.append(SpehFactor(lower, k))
    pi_a = UnitaryRep(pi_a_factors)
    pi_b = UnitaryRep([SpehFactor(delta, k - 1), SpehFactor(delta, k + 1)])
    return pi_a, pi_b


@dataclass
class EndOfSeriesReport:
    """Both subquotients of pi(u(D,k),1/2) with their verdicts"""
    delta: Segment
    k: int
    pi_a: UnitaryRep
    pi_b: UnitaryRep
    distinguished_a: bool
    distinguished_b: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "segment": self.delta.to_text(),
            "k": self.k,
            "subquotients": [
                {"rep": self.pi_a.to_text(), "degree": self.pi_a.degree,
                 "distinguished": self.distinguished_a},
                {"rep": self.pi_b.to_text(), "degree": self.pi_b.degree,
                 "distinguished": self.distinguished_b},
            ],
        }


def end_of_series_report(delta: Segment, k: int, alphabet: Alphabet) -> EndOfSeriesReport:
    pi_a, pi_b = end_of_complementary_series(delta, k, alphabet)
    return EndOfSeriesReport(
        delta=delta,
        k=k,
        pi_a=pi_a,
        pi_b=pi_b,
        distinguished_a=is_distinguished(pi_a, alphabet)[0],
        distinguished_b=is_distinguished(pi_b, alphabet)[0],
    )

