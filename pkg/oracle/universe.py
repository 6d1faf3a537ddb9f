"""
Universe Enumerator
Bounded, duplicate-free generation of canonical unitary representations
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Tuple

import structlog

from core.alphabet import Alphabet
from core.errors import InvalidUniverse
from core.segments import Segment, format_rational, steinberg
from core.unitary import HALF, ComplementaryFactor, Factor, SpehFactor, UnitaryRep

logger = structlog.get_logger(__name__)


def parse_alpha_grid(text: str) -> Tuple[Fraction, ...]:
    """"1/4,1/3" -> (Fraction(1, 4), Fraction(1, 3)); blanks are skipped."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            values.append(Fraction(chunk))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidUniverse(f"bad alpha value {chunk!r}") from e
    return tuple(values)


@dataclass(frozen=True)
class UniverseSpec:
    """Finite slice of the unitary dual: degree bound, k bound and an alpha grid"""
    alphabet: Alphabet = field(compare=False)
    max_degree: int
    max_k: int
    alpha_grid: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.max_degree < 0:
            raise InvalidUniverse(f"max_degree must be >= 0, got {self.max_degree}")
        if self.max_k < 1:
            raise InvalidUniverse(f"max_k must be >= 1, got {self.max_k}")
        grid = tuple(sorted(set(Fraction(a) for a in self.alpha_grid)))
        for alpha in grid:
            if not 0 < alpha < HALF:
                raise InvalidUniverse(
                    f"alpha grid values must lie in (0, 1/2), got {format_rational(alpha)}"
                )
        object.__setattr__(self, "alpha_grid", grid)

    @classmethod
    def from_options(
        cls,
        alphabet: Alphabet,
        max_degree: int,
        max_k: int,
        alpha_grid: str,
    ) -> "UniverseSpec":
        return cls(alphabet, max_degree, max_k, parse_alpha_grid(alpha_grid))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphabet": [symbol.id for symbol in self.alphabet],
            "maxDegree": self.max_degree,
            "maxK": self.max_k,
            "alphaGrid": [format_rational(a) for a in self.alpha_grid],
        }


def unitary_segments(spec: UniverseSpec) -> List[Segment]:
    """Every St(rho, l) with degree <= max_degree, in (degree, rho, l) order."""
    segments = []
    for rho in spec.alphabet:
        for length in range(1, spec.max_degree // rho.degree + 1):
            segments.append(steinberg(rho, length))
    segments.sort(key=lambda s: (s.degree, s.rho.id, s.length))
    return segments


def enumerate_factors(spec: UniverseSpec) -> List[Factor]:
    """All Tadic factors that fit in the universe, in canonical order."""
    factors: List[Factor] = []
    for delta in unitary_segments(spec):
        for k in range(1, spec.max_k + 1):
            if delta.degree * k > spec.max_degree:
                break
            speh = SpehFactor(delta, k)
            factors.append(speh)
            if 2 * speh.degree <= spec.max_degree:
                factors.extend(ComplementaryFactor(speh, alpha) for alpha in spec.alpha_grid)
    factors.sort(key=lambda f: f.sort_key())
    return factors


def _exact_degree(
    factors: List[Factor],
    degrees: List[int],
    start: int,
    remaining: int,
    chosen: List[Tuple[Factor, int]],
) -> Iterator[UnitaryRep]:
    if remaining == 0:
        yield UnitaryRep.from_sorted_items(tuple(chosen))
        return
    for index in range(start, len(factors)):
        degree = degrees[index]
        if degree > remaining:
            break
        factor = factors[index]
        if chosen and chosen[-1][0] is factor:
            chosen[-1] = (factor, chosen[-1][1] + 1)
            yield from _exact_degree(factors, degrees, index, remaining - degree, chosen)
            chosen[-1] = (factor, chosen[-1][1] - 1)
        else:
            chosen.append((factor, 1))
            yield from _exact_degree(factors, degrees, index, remaining - degree, chosen)
            chosen.pop()


def enumerate_universe(spec: UniverseSpec) -> Iterator[UnitaryRep]:
    """
    Stream every canonical rep of total degree <= max_degree exactly once.

    Emission order is UnitaryRep.sort_key order: by degree, then by the
    factor sequence, which is what the non-decreasing index walk produces.
    Repeated picks of one factor extend its multiplicity in place, so each
    rep is built from already sorted items.
    """
    factors = enumerate_factors(spec)
    degrees = [f.degree for f in factors]
    logger.debug("universe.factors", count=len(factors), **spec.to_dict())
    for degree in range(spec.max_degree + 1):
        yield from _exact_degree(factors, degrees, 0, degree, [])
