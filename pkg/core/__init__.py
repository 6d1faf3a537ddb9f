"""
Core module for speh-kit
Cuspidal alphabet, segment algebra, Tadic normal forms and highest shifted derivatives
"""

from .errors import SpehKitError, Position
from .alphabet import Alphabet, CuspidalSymbol, load_alphabet, load_alphabet_file
from .segments import Segment, from_endpoints, steinberg
from .unitary import (
    ComplementaryFactor,
    SpehFactor,
    UnitaryRep,
    TRIVIAL,
    mk_complementary,
    mk_speh,
    product,
)
from .derivatives import (
    derivative_ladder,
    highest_shifted_derivative,
    split_rigid_generic,
)

__all__ = [
    'SpehKitError',
    'Position',
    'Alphabet',
    'CuspidalSymbol',
    'load_alphabet',
    'load_alphabet_file',
    'Segment',
    'from_endpoints',
    'steinberg',
    'SpehFactor',
    'ComplementaryFactor',
    'UnitaryRep',
    'TRIVIAL',
    'mk_speh',
    'mk_complementary',
    'product',
    'highest_shifted_derivative',
    'derivative_ladder',
    'split_rigid_generic',
]
