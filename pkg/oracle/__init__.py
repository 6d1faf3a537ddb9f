# Bounded enumeration and brute-force oracles

from .cross_check import (
    REPORT_VERSION,
    CrossChecker,
    CrossCheckReport,
    PropertyResult,
    cross_check,
    proper_splits,
)
from .matching import all_pairings, matching_oracle
from .universe import (
    UniverseSpec,
    enumerate_factors,
    enumerate_universe,
    parse_alpha_grid,
    unitary_segments,
)

__all__ = [
    # Universe
    'UniverseSpec',
    'parse_alpha_grid',
    'unitary_segments',
    'enumerate_factors',
    'enumerate_universe',
    # Oracles
    'all_pairings',
    'matching_oracle',
    # Cross-check
    'REPORT_VERSION',
    'PropertyResult',
    'CrossCheckReport',
    'CrossChecker',
    'cross_check',
    'proper_splits',
]
