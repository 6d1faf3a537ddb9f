"""
Shared pytest fixtures
"""

from pathlib import Path

import pytest

from config import Settings
from core.alphabet import Alphabet, load_alphabet
from dsl import read_rep
from oracle import UniverseSpec

FIXTURE_PATH = Path(__file__).parent / "alphabets" / "fixture.json"


@pytest.fixture(scope="session")
def fixture_text() -> str:
    return FIXTURE_PATH.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def alphabet(fixture_text) -> Alphabet:
    """r0 (deg 1, parity 0), r1 (deg 2, parity 1), t/ts (deg 1, swapped by sigma)"""
    return load_alphabet(fixture_text)


@pytest.fixture(scope="session")
def rep(alphabet):
    """Parse-and-lower helper bound to the fixture alphabet."""
    return lambda text: read_rep(text, alphabet)


@pytest.fixture
def r0(alphabet):
    return alphabet.get("r0")


@pytest.fixture
def r1(alphabet):
    return alphabet.get("r1")


@pytest.fixture
def t(alphabet):
    return alphabet.get("t")


@pytest.fixture
def ts(alphabet):
    return alphabet.get("ts")


@pytest.fixture(scope="session")
def small_universe(alphabet) -> UniverseSpec:
    return UniverseSpec.from_options(alphabet, max_degree=6, max_k=4, alpha_grid="1/4,1/3")


@pytest.fixture
def settings() -> Settings:
    return Settings(
        alphabet_path=FIXTURE_PATH,
        max_degree=4,
        max_k=3,
        _env_file=None,
    )
