"""
speh-kit
Symbolic calculator for distinction in the unitary dual of GL(n) over a quadratic extension

SpehKit ties one validated alphabet to the expression language, the
distinction engine, the derivative calculus and the exhaustive self-check.
The CLI is a thin layer over this class.
"""

import sys
from pathlib import Path
from typing import Iterator, List, Optional, Union

import structlog

from config import Settings, get_settings
from core.alphabet import Alphabet, load_alphabet_file
from core.derivatives import derivative_ladder, highest_shifted_derivative
from core.errors import ParseError
from core.segments import Segment
from core.unitary import SelfDualBlocks, UnitaryRep, langlands_data, self_dual_blocks
from distinction import EndOfSeriesReport, ProofTrace, end_of_series_report, is_distinguished
from dsl import read_rep, read_segment
from oracle import CrossCheckReport, UniverseSpec, cross_check, enumerate_universe

__version__ = "1.0.0"

logger = structlog.get_logger("speh-kit")


class SpehKit:
    """
    Facade over one alphabet.

    Every expression argument is parsed and lowered against the alphabet
    the kit was built with.
    """

    def __init__(self, alphabet: Alphabet, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.alphabet = alphabet

    @classmethod
    def from_file(
        cls,
        path: Optional[Union[str, Path]] = None,
        settings: Optional[Settings] = None,
    ) -> "SpehKit":
        """Load the alphabet from `path`, falling back to settings.alphabet_path."""
        settings = settings or get_settings()
        path = path or settings.alphabet_path
        if path is None:
            raise ParseError("no alphabet file given (use --alphabet or SPEHKIT_ALPHABET_PATH)")
        try:
            alphabet = load_alphabet_file(path)
        except OSError as e:
            raise ParseError(f"cannot read alphabet file {str(path)!r}: {e.strerror}") from e
        logger.debug("kit.ready", alphabet=str(path), symbols=len(alphabet))
        return cls(alphabet, settings)

    # ========================================================================
    # EXPRESSIONS
    # ========================================================================

    def parse(self, text: str) -> UnitaryRep:
        return read_rep(text, self.alphabet)

    def canonical(self, text: str) -> str:
        return self.parse(text).to_text()

    def check(self, text: str) -> bool:
        return is_distinguished(self.parse(text), self.alphabet)[0]

    def trace(self, text: str) -> ProofTrace:
        return is_distinguished(self.parse(text), self.alphabet)[1]

    def derive(self, text: str, ladder: bool = False) -> List[UnitaryRep]:
        """[rep^[-]], or the whole ladder rep, rep^[-], ..., 1 with ladder=True."""
        rep = self.parse(text)
        if ladder:
            return derivative_ladder(rep)
        return [highest_shifted_derivative(rep)]

    def langlands(self, text: str) -> List[Segment]:
        return langlands_data(self.parse(text))

    def decompose(self, text: str) -> Optional[SelfDualBlocks]:
        return self_dual_blocks(self.parse(text), self.alphabet)

    def end_cs(self, segment_text: str, k: int) -> EndOfSeriesReport:
        return end_of_series_report(read_segment(segment_text, self.alphabet), k, self.alphabet)

    # ========================================================================
    # UNIVERSE
    # ========================================================================

    def universe(
        self,
        max_degree: Optional[int] = None,
        max_k: Optional[int] = None,
        alpha_grid: Optional[str] = None,
    ) -> UniverseSpec:
        """Universe bounds; anything not given comes from settings."""
        defaults = self.settings.universe_defaults()
        return UniverseSpec.from_options(
            self.alphabet,
            defaults['max_degree'] if max_degree is None else max_degree,
            defaults['max_k'] if max_k is None else max_k,
            defaults['alpha_grid'] if alpha_grid is None else alpha_grid,
        )

    def enumerate(self, spec: Optional[UniverseSpec] = None) -> Iterator[UnitaryRep]:
        return enumerate_universe(spec or self.universe())

    def selfcheck(
        self,
        spec: Optional[UniverseSpec] = None,
        inject_parity_flip: Optional[str] = None,
        detail_degree: Optional[int] = None,
    ) -> CrossCheckReport:
        """
        Run the cross-checker. With inject_parity_flip the decision engine
        sees the alphabet with that symbol's parity flipped; detail_degree
        defaults to settings.detail_max_degree.
        """
        engine_alphabet = None
        if inject_parity_flip is not None:
            engine_alphabet = self.alphabet.with_flipped_parity(inject_parity_flip)
        return cross_check(
            spec or self.universe(),
            engine_alphabet=engine_alphabet,
            max_failures=self.settings.max_failures_reported,
            detail_degree=(
                self.settings.detail_max_degree if detail_degree is None else detail_degree
            ),
        )


if __name__ == "__main__":
    from cli import main

    sys.exit(main())
