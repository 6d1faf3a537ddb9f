"""
Matching Oracle
Brute-force search for a pairing of factors with their sigma-contragredients
"""

from typing import List, Sequence

from core.alphabet import Alphabet
from core.unitary import Factor, UnitaryRep


def _partner(factor: Factor, alphabet: Alphabet) -> Factor:
    return factor.sigma(alphabet).dual(alphabet)


def all_pairings(items: Sequence[Factor], alphabet: Alphabet) -> bool:
    """
    True if the items split into singletons f with f = (f^vee)^sigma and
    pairs {f, (f^vee)^sigma}. Equal candidates are tried once per level.
    """
    if not items:
        return True

    first, rest = items[0], list(items[1:])
    partner = _partner(first, alphabet)
    if partner == first and all_pairings(rest, alphabet):
        return True

    tried: List[Factor] = []
    for index, item in enumerate(rest):
        if item != partner or item in tried:
            continue
        tried.append(item)
        if all_pairings(rest[:index] + rest[index + 1:], alphabet):
            return True
    return False


def matching_oracle(rep: UnitaryRep, alphabet: Alphabet) -> bool:
    """Existence of a perfect sigma-contragredient matching on the factor multiset."""
    items = sorted(rep, key=lambda f: _partner(f, alphabet) == f)
    return all_pairings(items, alphabet)
