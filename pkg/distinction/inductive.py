"""
Inductive Checker
Independent verdicts obtained by peeling highest shifted derivatives off the rigid part
"""

from collections import Counter
from typing import Dict, FrozenSet, List, Tuple

from core.alphabet import Alphabet
from core.derivatives import highest_shifted_derivative, split_rigid_generic
from core.segments import Segment, segment_distinguished
from core.unitary import Factor, SpehFactor, UnitaryRep, is_sigma_self_dual

from .engine import segment_trace, self_duality_trace
from .trace import ProofTrace, Rule, conjunction


def _generic_criterion(rep: UnitaryRep, alphabet: Alphabet) -> ProofTrace:
    """sigma-induced test for a generic rep, written against the raw factor counts."""
    children = [self_duality_trace(rep, alphabet)]
    speh_counts: Counter = Counter()
    for f in rep:
        if isinstance(f, SpehFactor):
            speh_counts[f.delta] += 1
    for delta, count in speh_counts.items():
        if count % 2 and alphabet.is_sigma_self_dual(delta.rho):
            children.append(segment_trace(delta, alphabet))
    return conjunction(Rule.THM_DISTGEN, rep.to_text(), children)


def _judge(rep: UnitaryRep, alphabet: Alphabet) -> List[ProofTrace]:
    rigid, generic = split_rigid_generic(rep)
    nodes: List[ProofTrace] = []
    if not rigid.is_trivial:
        lowered = highest_shifted_derivative(rigid)
        nodes.append(conjunction(
            Rule.LEM_DERNIER,
            rigid.to_text(),
            _judge(lowered, alphabet),
            detail=f"highest shifted derivative {lowered.to_text()}",
        ))
    if not generic.is_trivial or rigid.is_trivial:
        nodes.append(_generic_criterion(generic, alphabet))
    return nodes


def inductive_checker(rep: UnitaryRep, alphabet: Alphabet) -> Tuple[bool, ProofTrace]:
    """
    Decide distinction without the closed-form criterion:
    require sigma-self-duality, split off the generic part, and reduce the rigid
    part by highest shifted derivatives until it is generic too.
    """
    necessary = ProofTrace(
        rule=Rule.PROP_SELFDUAL_NECESSARY,
        verdict=is_sigma_self_dual(rep, alphabet),
        subject=rep.to_text(),
    )
    trace = conjunction(Rule.THM_UNITDIST, rep.to_text(), [necessary, *_judge(rep, alphabet)])
    return trace.verdict, trace


Counts = Dict[Factor, int]


class InductiveVerdicts:
    """
    inductive_checker without traces, over raw factor counts.

    Rigid parts recur across a universe, so their verdicts are memoized
    by multiset; factor partners and derivatives are memoized per factor.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._partners: Dict[Factor, Factor] = {}
        self._lowered: Dict[Factor, Factor] = {}
        self._segments: Dict[Segment, bool] = {}
        self._rigid: Dict[FrozenSet[Tuple[Factor, int]], bool] = {}

    def _partner(self, factor: Factor) -> Factor:
        partner = self._partners.get(factor)
        if partner is None:
            partner = factor.sigma(self.alphabet).dual(self.alphabet)
            self._partners[factor] = partner
        return partner

    def _lower(self, factor: Factor) -> Factor:
        lowered = self._lowered.get(factor)
        if lowered is None:
            lowered = factor.with_k(factor.k - 1)
            self._lowered[factor] = lowered
        return lowered

    def _segment(self, delta: Segment) -> bool:
        verdict = self._segments.get(delta)
        if verdict is None:
            verdict = segment_distinguished(delta, self.alphabet)
            self._segments[delta] = verdict
        return verdict

    def _self_dual(self, counts: Counts) -> bool:
        return all(counts.get(self._partner(f), 0) == m for f, m in counts.items())

    def _generic(self, counts: Counts) -> bool:
        if not self._self_dual(counts):
            return False
        for f, m in counts.items():
            if m % 2 == 0 or not isinstance(f, SpehFactor):
                continue
            if self.alphabet.is_sigma_self_dual(f.delta.rho) and not self._segment(f.delta):
                return False
        return True

    def _judge_rigid(self, rigid: Counts) -> bool:
        key = frozenset(rigid.items())
        verdict = self._rigid.get(key)
        if verdict is None:
            verdict = self._judge({self._lower(f): m for f, m in rigid.items()})
            self._rigid[key] = verdict
        return verdict

    def _judge(self, counts: Counts) -> bool:
        rigid = {f: m for f, m in counts.items() if f.k >= 2}
        generic = {f: m for f, m in counts.items() if f.k == 1}
        if rigid and not self._judge_rigid(rigid):
            return False
        if generic or not rigid:
            return self._generic(generic)
        return True

    def verdict(self, rep: UnitaryRep) -> bool:
        counts = dict(rep.items())
        return self._self_dual(counts) and self._judge(counts)
