"""
Unitary Core
Tadic normal forms: Speh factors, complementary-series factors and canonical multiset products
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .alphabet import Alphabet
from .errors import AlphaOutOfRange, BadMultiplier, EmptySegment, NonUnitarySegment
from .segments import Rational, Segment, format_rational

HALF = Fraction(1, 2)
ZERO = Fraction(0)


class FactorKind(IntEnum):
    """Kinds of Tadic factors, in canonical order"""
    SPEH = 0
    COMPLEMENTARY = 1


# ============================================================================
# FACTORS
# ============================================================================

@dataclass(frozen=True, eq=False)
class SpehFactor:
    """The Speh representation u(delta, k) on a unitary segment."""
    delta: Segment
    k: int
    _key: Tuple[Any, ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    kind = FactorKind.SPEH

    def __post_init__(self):
        if self.delta.is_trivial:
            raise EmptySegment("a Speh factor needs a segment of length >= 1")
        if not self.delta.is_unitary:
            raise NonUnitarySegment(
                f"{self.delta.to_text()} is not unitary (center must be 0)"
            )
        if self.k < 1:
            raise BadMultiplier(f"Speh multiplier k must be >= 1, got {self.k}")
        key = (self.degree, self.kind, self.delta.rho.id, self.delta.length, self.k, ZERO)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    @property
    def degree(self) -> int:
        return self.k * self.delta.degree

    @property
    def speh(self) -> "SpehFactor":
        return self

    def sort_key(self) -> Tuple[Any, ...]:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (SpehFactor, ComplementaryFactor)):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SpehFactor({self.to_text()})"

    def with_k(self, k: int) -> "SpehFactor":
        return SpehFactor(self.delta, k)

    def dual(self, alphabet: Alphabet) -> "SpehFactor":
        return SpehFactor(self.delta.dual(alphabet), self.k)

    def sigma(self, alphabet: Alphabet) -> "SpehFactor":
        return SpehFactor(self.delta.sigma(alphabet), self.k)

    def to_text(self) -> str:
        return f"u({self.delta.to_text()},{self.k})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "speh",
            "segment": self.delta.to_text(),
            "k": self.k,
            "degree": self.degree,
        }


@dataclass(frozen=True, eq=False)
class ComplementaryFactor:
    """The complementary series pi(u(delta, k), alpha) = nu^alpha u x nu^-alpha u."""
    base: SpehFactor
    alpha: Fraction
    _key: Tuple[Any, ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    kind = FactorKind.COMPLEMENTARY

    def __post_init__(self):
        alpha = Fraction(self.alpha)
        if not 0 < alpha < HALF:
            raise AlphaOutOfRange(
                f"alpha must satisfy 0 < alpha < 1/2, got {format_rational(alpha)}"
            )
        object.__setattr__(self, "alpha", alpha)
        key = (self.degree, self.kind, self.delta.rho.id, self.delta.length, self.k, alpha)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    @property
    def delta(self) -> Segment:
        return self.base.delta

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def degree(self) -> int:
        return 2 * self.base.degree

    @property
    def speh(self) -> SpehFactor:
        return self.base

    def sort_key(self) -> Tuple[Any, ...]:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (SpehFactor, ComplementaryFactor)):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ComplementaryFactor({self.to_text()})"

    def with_k(self, k: int) -> "ComplementaryFactor":
        return ComplementaryFactor(self.base.with_k(k), self.alpha)

    def dual(self, alphabet: Alphabet) -> "ComplementaryFactor":
        return ComplementaryFactor(self.base.dual(alphabet), self.alpha)

    def sigma(self, alphabet: Alphabet) -> "ComplementaryFactor":
        return ComplementaryFactor(self.base.sigma(alphabet), self.alpha)

    def halves(self) -> Tuple["TwistedSpeh", "TwistedSpeh"]:
        return TwistedSpeh(self.base, self.alpha), TwistedSpeh(self.base, -self.alpha)

    def to_text(self) -> str:
        return f"pi({self.base.to_text()},{format_rational(self.alpha)})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "complementary",
            "segment": self.delta.to_text(),
            "k": self.k,
            "alpha": format_rational(self.alpha),
            "degree": self.degree,
        }


Factor = Union[SpehFactor, ComplementaryFactor]


@dataclass(frozen=True)
class TwistedSpeh:
    """nu^shift * u(delta, k); shift 0 is a genuine unitary factor."""
    base: SpehFactor
    shift: Fraction = Fraction(0)

    @property
    def degree(self) -> int:
        return self.base.degree

    def dual(self, alphabet: Alphabet) -> "TwistedSpeh":
        return TwistedSpeh(self.base.dual(alphabet), -self.shift)

    def sigma(self, alphabet: Alphabet) -> "TwistedSpeh":
        return TwistedSpeh(self.base.sigma(alphabet), self.shift)

    def segments(self) -> List[Segment]:
        """Langlands data nu^{(k-1)/2} delta, ..., nu^{(1-k)/2} delta, shifted."""
        k = self.base.k
        return [
            self.base.delta.twisted(self.shift + Fraction(k - 1, 2) - j)
            for j in range(k)
        ]

    def to_text(self) -> str:
        if self.shift == 0:
            return self.base.to_text()
        return f"nu^{{{format_rational(self.shift)}}}*{self.base.to_text()}"


# ============================================================================
# REPRESENTATIONS
# ============================================================================

class UnitaryRep:
    """
    Canonical multiset of Tadic factors.

    Factors are stored once each with their multiplicity, sorted by
    Factor.sort_key; equal representations have identical stored forms.
    """

    __slots__ = ("_items", "_degree", "_hash")

    def __init__(self, factors: Iterable[Factor] = ()):
        counts: Mapping[Factor, int] = Counter(factors)
        self._set_items(counts)

    @classmethod
    def from_counts(cls, counts: Mapping[Factor, int]) -> "UnitaryRep":
        rep = cls.__new__(cls)
        rep._set_items({f: m for f, m in counts.items() if m > 0})
        return rep

    @classmethod
    def from_sorted_items(cls, items: Tuple[Tuple[Factor, int], ...]) -> "UnitaryRep":
        """Trusts the caller: distinct factors in sort_key order, multiplicities >= 1."""
        rep = cls.__new__(cls)
        rep._items = items
        rep._degree = sum(f.degree * m for f, m in items)
        rep._hash = hash(items)
        return rep

    def _set_items(self, counts: Mapping[Factor, int]) -> None:
        self._items: Tuple[Tuple[Factor, int], ...] = tuple(
            sorted(counts.items(), key=lambda item: item[0].sort_key())
        )
        self._degree = sum(f.degree * m for f, m in self._items)
        self._hash = hash(self._items)

    # ------------------------------------------------------------------
    # Multiset view
    # ------------------------------------------------------------------

    def items(self) -> Tuple[Tuple[Factor, int], ...]:
        return self._items

    def distinct(self) -> List[Factor]:
        return [f for f, _ in self._items]

    def multiplicity(self, factor: Factor) -> int:
        for f, m in self._items:
            if f == factor:
                return m
        return 0

    def counts(self) -> Counter:
        return Counter(dict(self._items))

    def __iter__(self) -> Iterator[Factor]:
        for f, m in self._items:
            for _ in range(m):
                yield f

    def __len__(self) -> int:
        return sum(m for _, m in self._items)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def is_trivial(self) -> bool:
        return not self._items

    @property
    def is_generic(self) -> bool:
        return all(f.k == 1 for f, _ in self._items)

    @property
    def max_k(self) -> int:
        return max((f.k for f, _ in self._items), default=0)

    def sort_key(self) -> Tuple[Any, ...]:
        return (self._degree, tuple(f.sort_key() for f in self))

    # ------------------------------------------------------------------
    # Identity
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitaryRep):
            return NotImplemented
        return self._hash == other._hash and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "UnitaryRep") -> "UnitaryRep":
        return product(self, other)

    def __repr__(self) -> str:
        return f"UnitaryRep({self.to_text()})"

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        if self.is_trivial:
            return "1"
        return " x ".join(f.to_text() for f in self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "text": self.to_text(),
            "degree": self.degree,
            "factors": [
                {**f.to_dict(), "multiplicity": m} for f, m in self._items
            ],
        }


TRIVIAL = UnitaryRep()


def mk_speh(delta: Segment, k: int) -> SpehFactor:
    return SpehFactor(delta, k)


def mk_complementary(delta: Segment, k: int, alpha: Rational) -> ComplementaryFactor:
    return ComplementaryFactor(SpehFactor(delta, k), Fraction(alpha))


def rep_of(*factors: Factor) -> UnitaryRep:
    return UnitaryRep(factors)


def product(*reps: UnitaryRep) -> UnitaryRep:
    """Commutative product; the trivial representation is the identity."""
    total: Counter = Counter()
    for rep in reps:
        for f, m in rep.items():
            total[f] += m
    return UnitaryRep.from_counts(total)


def dual_rep(rep: UnitaryRep, alphabet: Alphabet) -> UnitaryRep:
    return UnitaryRep.from_counts(_mapped_counts(rep, lambda f: f.dual(alphabet)))


def sigma_rep(rep: UnitaryRep, alphabet: Alphabet) -> UnitaryRep:
    return UnitaryRep.from_counts(_mapped_counts(rep, lambda f: f.sigma(alphabet)))


def sigma_contragredient(rep: UnitaryRep, alphabet: Alphabet) -> UnitaryRep:
    """(pi^vee)^sigma, factor by factor."""
    return UnitaryRep.from_counts(
        _mapped_counts(rep, lambda f: f.sigma(alphabet).dual(alphabet))
    )


def _mapped_counts(rep: UnitaryRep, fn) -> Counter:
    mapped: Counter = Counter()
    for f, m in rep.items():
        mapped[fn(f)] += m
    return mapped


def is_sigma_self_dual(rep: UnitaryRep, alphabet: Alphabet) -> bool:
    return dual_rep(sigma_rep(rep, alphabet), alphabet) == rep


def langlands_data(rep: UnitaryRep) -> List[Segment]:
    """
    Expand every factor into twisted segments and order them by non-increasing
    center; equal centers keep canonical factor order.
    """
    segments: List[Segment] = []
    for f in rep:
        if isinstance(f, ComplementaryFactor):
            for half in f.halves():
                segments.extend(half.segments())
        else:
            segments.extend(TwistedSpeh(f).segments())
    segments.sort(key=lambda s: -s.center)
    return segments


# ============================================================================
# SELF-DUAL BLOCKS
# ============================================================================

Block = Union[TwistedSpeh, ComplementaryFactor]


@dataclass
class SelfDualBlocks:
    """A sigma-self-dual rep written as pairs X x (X^vee)^sigma plus odd self-dual Speh factors."""
    pairs: List[Tuple[Block, Block]] = field(default_factory=list)
    odd_factors: List[SpehFactor] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pairs": [[a.to_text(), b.to_text()] for a, b in self.pairs],
            "odd": [f.to_text() for f in self.odd_factors],
        }

    def to_lines(self) -> List[str]:
        lines = [f"pair  {a.to_text()} x {b.to_text()}" for a, b in self.pairs]
        lines.extend(f"odd   {f.to_text()}" for f in self.odd_factors)
        return lines


def self_dual_blocks(rep: UnitaryRep, alphabet: Alphabet) -> Optional[SelfDualBlocks]:
    """Decompose a sigma-self-dual rep into its pairing blocks; None if not sigma-self-dual."""
    if not is_sigma_self_dual(rep, alphabet):
        return None

    blocks = SelfDualBlocks()
    for f, m in rep.items():
        partner = f.sigma(alphabet).dual(alphabet)
        if isinstance(f, ComplementaryFactor):
            if partner == f:
                blocks.pairs.extend([f.halves()] * m)
            elif f.sort_key() < partner.sort_key():
                blocks.pairs.extend([(f, partner)] * m)
            continue

        if partner == f:
            blocks.pairs.extend([(TwistedSpeh(f), TwistedSpeh(f))] * (m // 2))
            if m % 2:
                blocks.odd_factors.append(f)
        elif f.sort_key() < partner.sort_key():
            blocks.pairs.extend([(TwistedSpeh(f), TwistedSpeh(partner))] * m)
    return blocks
