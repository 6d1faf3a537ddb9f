"""
Derivative Calculus
Highest shifted derivatives of Tadic factors and products, and the rigid/generic split
"""

from collections import Counter
from typing import List, Tuple

from .unitary import TRIVIAL, Factor, UnitaryRep


def highest_shifted_derivative_factor(factor: Factor) -> UnitaryRep:
    """u(D,k) -> u(D,k-1) and pi(u(D,k),a) -> pi(u(D,k-1),a); k = 1 gives the trivial rep."""
    if factor.k == 1:
        return TRIVIAL
    return UnitaryRep([factor.with_k(factor.k - 1)])


def highest_shifted_derivative(rep: UnitaryRep) -> UnitaryRep:
    """The derivative of a product is the product of the factor derivatives."""
    lowered: Counter = Counter()
    for f, m in rep.items():
        if f.k > 1:
            lowered[f.with_k(f.k - 1)] += m
    return UnitaryRep.from_counts(lowered)


def derivative_ladder(rep: UnitaryRep) -> List[UnitaryRep]:
    """[rep, rep^[-], rep^[-][-], ...] down to the trivial representation."""
    ladder = [rep]
    while not ladder[-1].is_trivial:
        ladder.append(highest_shifted_derivative(ladder[-1]))
    return ladder


def split_rigid_generic(rep: UnitaryRep) -> Tuple[UnitaryRep, UnitaryRep]:
    """(factors with k >= 2, factors with k = 1)."""
    rigid = {f: m for f, m in rep.items() if f.k >= 2}
    generic = {f: m for f, m in rep.items() if f.k == 1}
    return UnitaryRep.from_counts(rigid), UnitaryRep.from_counts(generic)
