# Distinction Engine
# sigma-distinction verdicts, proof traces and the inductive cross-checker

from .trace import ProofTrace, Rule, TRACE_VERSION
from .engine import (
    DistinctionType,
    EndOfSeriesReport,
    alternation_trace,
    dichotomy,
    end_of_complementary_series,
    end_of_series_report,
    is_distinguished,
    is_distinguished_generic,
    is_sigma_induced,
    VerdictCache,
    distinguished_verdict,
    speh_eta_distinguished,
)
from .inductive import InductiveVerdicts, inductive_checker

__all__ = [
    'ProofTrace',
    'Rule',
    'TRACE_VERSION',
    'DistinctionType',
    'EndOfSeriesReport',
    'alternation_trace',
    'dichotomy',
    'end_of_complementary_series',
    'end_of_series_report',
    'is_distinguished',
    'is_distinguished_generic',
    'is_sigma_induced',
    'VerdictCache',
    'distinguished_verdict',
    'speh_eta_distinguished',
    'InductiveVerdicts',
    'inductive_checker',
]
