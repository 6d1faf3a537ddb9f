"""
Segment Algebra
Segments nu^e * St(rho, l), their involutions, and the segment-level distinction rules
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple, Union

from .alphabet import Alphabet, CuspidalSymbol
from .errors import EmptySegment, InvalidEndpoints

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """Render an exact rational the way the expression language reads it back."""
    return str(Fraction(value))


@dataclass(frozen=True, eq=False)
class Segment:
    """
    The quasi-discrete series nu^center * St(rho, length).

    length 0 is the trivial representation of G_0; all trivial segments are
    equal whatever their rho and center fields hold.
    """
    rho: CuspidalSymbol
    length: int
    center: Fraction = Fraction(0)

    def __post_init__(self):
        if self.length < 0:
            raise EmptySegment(f"negative segment length {self.length}")
        object.__setattr__(self, "center", Fraction(self.center))

    # ------------------------------------------------------------------
    # Identity
    # ------------------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return self.length == 0

    def key(self) -> Tuple[Any, ...]:
        if self.is_trivial:
            return ("1",)
        return (self.rho.id, self.length, self.center)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Segment):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Segment({self.to_text()})"

    # ------------------------------------------------------------------
    # Numeric data
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.length * self.rho.degree

    @property
    def is_unitary(self) -> bool:
        return self.center == 0

    @property
    def endpoints(self) -> Tuple[Fraction, Fraction]:
        """(a, b) with the segment equal to Delta(rho, b, a)."""
        half = Fraction(self.length - 1, 2)
        return self.center - half, self.center + half

    # ------------------------------------------------------------------
    # Ladder moves
    # ------------------------------------------------------------------

    def up(self) -> "Segment":
        return Segment(self.rho, self.length + 1, self.center)

    def down(self) -> "Segment":
        if self.is_trivial:
            raise EmptySegment("cannot shorten the trivial segment")
        return Segment(self.rho, self.length - 1, self.center)

    def twisted(self, shift: Rational) -> "Segment":
        return Segment(self.rho, self.length, self.center + Fraction(shift))

    # ------------------------------------------------------------------
    # Involutions
    # ------------------------------------------------------------------

    def dual(self, alphabet: Alphabet) -> "Segment":
        if self.is_trivial:
            return self
        return Segment(alphabet.dual(self.rho), self.length, -self.center)

    def sigma(self, alphabet: Alphabet) -> "Segment":
        if self.is_trivial:
            return self
        return Segment(alphabet.sigma(self.rho), self.length, self.center)

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        if self.is_trivial:
            return "1"
        base = f"St({self.rho.id},{self.length})"
        if self.center == 0:
            return base
        return f"nu^{{{format_rational(self.center)}}}*{base}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rho": self.rho.id,
            "length": self.length,
            "center": format_rational(self.center),
            "degree": self.degree,
            "text": self.to_text(),
        }


def steinberg(rho: CuspidalSymbol, length: int) -> Segment:
    """The unitary segment St(rho, length)."""
    return Segment(rho, length, Fraction(0))


def from_endpoints(rho: CuspidalSymbol, a: Rational, b: Rational) -> Segment:
    """Delta(rho, b, a) = nu^{(a+b)/2} St(rho, b-a+1)."""
    a, b = Fraction(a), Fraction(b)
    span = b - a
    if span.denominator != 1 or span < 0:
        raise InvalidEndpoints(
            f"b - a must be a non-negative integer, got {format_rational(span)}"
        )
    return Segment(rho, int(span) + 1, (a + b) / 2)


def up(segment: Segment) -> Segment:
    return segment.up()


def down(segment: Segment) -> Segment:
    return segment.down()


def dual_segment(segment: Segment, alphabet: Alphabet) -> Segment:
    return segment.dual(alphabet)


def sigma_segment(segment: Segment, alphabet: Alphabet) -> Segment:
    return segment.sigma(alphabet)


def twist(segment: Segment, shift: Rational) -> Segment:
    return segment.twisted(shift)


def is_sigma_self_dual_segment(segment: Segment, alphabet: Alphabet) -> bool:
    return segment.dual(alphabet).sigma(alphabet) == segment


def _centered_parity(segment: Segment, alphabet: Alphabet) -> Optional[int]:
    """Parity of rho when the segment can be distinguished at all, else None."""
    if segment.is_trivial:
        raise EmptySegment("distinction is only defined for segments of length >= 1")
    if segment.center != 0 or not alphabet.is_sigma_self_dual(segment.rho):
        return None
    return alphabet.parity_of(segment.rho)


def segment_distinguished(segment: Segment, alphabet: Alphabet) -> bool:
    """St(rho, l) is sigma-distinguished iff rho is (sigma, eta^{l-1})-distinguished."""
    parity = _centered_parity(segment, alphabet)
    return parity is not None and parity == (segment.length - 1) % 2


def segment_eta_distinguished(segment: Segment, alphabet: Alphabet) -> bool:
    """St(rho, l) is (sigma, eta)-distinguished iff rho is (sigma, eta^l)-distinguished."""
    parity = _centered_parity(segment, alphabet)
    return parity is not None and parity == segment.length % 2
