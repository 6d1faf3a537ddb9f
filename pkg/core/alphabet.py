"""
Cuspidal Alphabet
Declares and validates the finite universe of cuspidal symbols everything else is computed over
"""

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from types import MappingProxyType
from typing import Annotated, Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, model_validator

from .errors import (
    BrokenInvolution,
    DanglingReference,
    MissingParity,
    ParityOnNonSelfDual,
    ParseError,
    Position,
    UnknownSymbol,
)

logger = structlog.get_logger(__name__)

TOKEN_PATTERN = r"^[A-Za-z_][A-Za-z0-9_]*$"


# ============================================================================
# FILE SCHEMA
# ============================================================================

class CuspidalEntry(BaseModel):
    """One entry of the "cuspidals" array"""
    model_config = ConfigDict(strict=True, extra="forbid")

    id: str = Field(pattern=TOKEN_PATTERN)
    degree: int = Field(ge=1)
    dual: str = Field(pattern=TOKEN_PATTERN)
    sigma: str = Field(pattern=TOKEN_PATTERN)
    parity: Optional[Annotated[StrictInt, Field(ge=0, le=1)]] = None

    @model_validator(mode="after")
    def _parity_omitted_not_null(self) -> "CuspidalEntry":
        if "parity" in self.model_fields_set and self.parity is None:
            raise ValueError("parity must be omitted, not null")
        return self


class AlphabetFile(BaseModel):
    """Top-level alphabet document"""
    model_config = ConfigDict(strict=True, extra="forbid")

    cuspidals: List[CuspidalEntry]


# ============================================================================
# DOMAIN TYPES
# ============================================================================

@dataclass(frozen=True)
class CuspidalSymbol:
    """An abstract unitary cuspidal representation of G_degree."""
    id: str
    degree: int
    dual_id: str
    sigma_id: str
    parity: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "id": self.id,
            "degree": self.degree,
            "dual": self.dual_id,
            "sigma": self.sigma_id,
        }
        if self.parity is not None:
            data["parity"] = self.parity
        return data


@dataclass(frozen=True)
class Alphabet:
    """
    Validated table of cuspidal symbols.

    Instances built by load_alphabet/Alphabet.from_symbols satisfy every
    involution and parity invariant; with_flipped_parity is the one exception
    and exists for mutation testing only.
    """
    symbols: Mapping[str, CuspidalSymbol] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "symbols", MappingProxyType(dict(self.symbols)))

    @classmethod
    def from_symbols(cls, symbols: List[CuspidalSymbol]) -> "Alphabet":
        """Build and validate an alphabet from already-parsed symbols."""
        table: Dict[str, CuspidalSymbol] = {}
        for symbol in symbols:
            if symbol.id in table:
                raise ParseError(f"duplicate cuspidal id {symbol.id!r}")
            table[symbol.id] = symbol
        alphabet = cls(table)
        alphabet.validate()
        return alphabet

    def validate(self) -> None:
        """Raise the first violated invariant, checked in declaration order."""
        for symbol in self.symbols.values():
            for ref in (symbol.dual_id, symbol.sigma_id):
                if ref not in self.symbols:
                    raise DanglingReference(
                        f"symbol {symbol.id!r} refers to undeclared {ref!r}"
                    )

        for symbol in self.symbols.values():
            dual = self.symbols[symbol.dual_id]
            sigma = self.symbols[symbol.sigma_id]
            if dual.dual_id != symbol.id:
                raise BrokenInvolution(f"dual is not an involution at {symbol.id!r}")
            if sigma.sigma_id != symbol.id:
                raise BrokenInvolution(f"sigma is not an involution at {symbol.id!r}")
            if dual.sigma_id != sigma.dual_id:
                raise BrokenInvolution(f"dual and sigma do not commute at {symbol.id!r}")
            if dual.degree != symbol.degree or sigma.degree != symbol.degree:
                raise BrokenInvolution(f"dual or sigma changes the degree of {symbol.id!r}")

        for symbol in self.symbols.values():
            self_dual = self.symbols[symbol.dual_id].sigma_id == symbol.id
            if symbol.parity is not None and not self_dual:
                raise ParityOnNonSelfDual(
                    f"symbol {symbol.id!r} declares a parity but is not sigma-self-dual"
                )
            if symbol.parity is None and self_dual:
                raise MissingParity(
                    f"sigma-self-dual symbol {symbol.id!r} needs a parity"
                )

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    def get(self, symbol_id: str, position: Optional[Position] = None) -> CuspidalSymbol:
        try:
            return self.symbols[symbol_id]
        except KeyError:
            raise UnknownSymbol(f"unknown cuspidal {symbol_id!r}", position) from None

    def __contains__(self, item: Union[str, CuspidalSymbol]) -> bool:
        if isinstance(item, CuspidalSymbol):
            return self.symbols.get(item.id) == item
        return item in self.symbols

    def __iter__(self) -> Iterator[CuspidalSymbol]:
        for symbol_id in sorted(self.symbols):
            yield self.symbols[symbol_id]

    def __len__(self) -> int:
        return len(self.symbols)

    def _member(self, rho: CuspidalSymbol) -> CuspidalSymbol:
        return self.get(rho.id)

    def dual(self, rho: CuspidalSymbol) -> CuspidalSymbol:
        return self.symbols[self._member(rho).dual_id]

    def sigma(self, rho: CuspidalSymbol) -> CuspidalSymbol:
        return self.symbols[self._member(rho).sigma_id]

    # ------------------------------------------------------------------
    # Distinction facts
    # ------------------------------------------------------------------

    def is_sigma_self_dual(self, rho: CuspidalSymbol) -> bool:
        return self.sigma(self.dual(rho)).id == rho.id

    def distinguished_by(self, rho: CuspidalSymbol, j: int) -> bool:
        """True iff rho is (sigma, eta^j)-distinguished; only the parity of j matters."""
        parity = self._member(rho).parity
        return parity is not None and parity == j % 2

    def parity_of(self, rho: CuspidalSymbol) -> Optional[int]:
        return self._member(rho).parity

    # ------------------------------------------------------------------
    # Serialization / test hooks
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {"cuspidals": [symbol.to_dict() for symbol in self]}

    def with_flipped_parity(self, symbol_id: str) -> "Alphabet":
        """Copy with one declared parity flipped, deliberately skipping validation."""
        symbol = self.get(symbol_id)
        if symbol.parity is None:
            raise ParityOnNonSelfDual(f"symbol {symbol_id!r} has no parity to flip")
        table = dict(self.symbols)
        table[symbol_id] = replace(symbol, parity=1 - symbol.parity)
        logger.warning("alphabet.parity_flipped", symbol=symbol_id)
        return Alphabet(table)


# ============================================================================
# LOADING
# ============================================================================

def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise ValueError(f"duplicate key {key!r}")
        result[key] = value
    return result


def load_alphabet(text: str) -> Alphabet:
    """Parse and validate alphabet-file contents."""
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, Position(e.lineno, e.colno)) from e
    except ValueError as e:
        raise ParseError(str(e)) from e
    except RecursionError as e:
        raise ParseError("alphabet document is nested too deeply") from e

    try:
        document = AlphabetFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ParseError(f"{location}: {first['msg']}") from e
    except RecursionError as e:
        raise ParseError("alphabet document is nested too deeply") from e

    alphabet = Alphabet.from_symbols([
        CuspidalSymbol(
            id=entry.id,
            degree=entry.degree,
            dual_id=entry.dual,
            sigma_id=entry.sigma,
            parity=entry.parity,
        )
        for entry in document.cuspidals
    ])
    logger.info("alphabet.loaded", symbols=len(alphabet))
    return alphabet


def load_alphabet_file(path: Union[str, Path]) -> Alphabet:
    """Read an alphabet file from disk (UTF-8)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"alphabet file is not valid UTF-8 (byte {e.start})") from e
    return load_alphabet(text)


def is_sigma_self_dual_cuspidal(rho: CuspidalSymbol, alphabet: Alphabet) -> bool:
    """True iff sigma(dual(rho)) = rho."""
    return alphabet.is_sigma_self_dual(rho)


def cuspidal_distinguished_by(rho: CuspidalSymbol, j: int, alphabet: Alphabet) -> bool:
    """True iff rho carries declared parity j."""
    return alphabet.distinguished_by(rho, j)
