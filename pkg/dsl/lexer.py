"""
Expression Lexer
Turns expression text into positioned tokens
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List

from core.errors import ExprSyntaxError, Position


class TokenKind(str, Enum):
    U_OPEN = "u("
    PI_OPEN = "pi("
    ST_OPEN = "St("
    D_OPEN = "D("
    NU_OPEN = "nu^{"
    CLOSE_STAR = "}*"
    DOTS = ".."
    COMMA = ","
    SEMI = ";"
    RPAREN = ")"
    SLASH = "/"
    MINUS = "-"
    INT = "INT"
    ID = "ID"
    EOF = "end of input"


# keyword -> (text that must follow the identifier, token kind)
KEYWORDS = {
    "u": ("(", TokenKind.U_OPEN),
    "pi": ("(", TokenKind.PI_OPEN),
    "St": ("(", TokenKind.ST_OPEN),
    "D": ("(", TokenKind.D_OPEN),
    "nu": ("^{", TokenKind.NU_OPEN),
}

PUNCTUATION = [
    ("}*", TokenKind.CLOSE_STAR),
    ("..", TokenKind.DOTS),
    (",", TokenKind.COMMA),
    (";", TokenKind.SEMI),
    (")", TokenKind.RPAREN),
    ("/", TokenKind.SLASH),
    ("-", TokenKind.MINUS),
]


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: Position
    spaced_before: bool = False


class Lexer:
    """Single pass over the text; whitespace separates tokens and is otherwise dropped."""

    def __init__(self, text: str):
        self.text = text
        self.index = 0
        self.line = 1
        self.column = 1

    def _position(self) -> Position:
        return Position(self.line, self.column)

    def _advance(self, count: int) -> str:
        chunk = self.text[self.index:self.index + count]
        for char in chunk:
            if char == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
        self.index += count
        return chunk

    def _skip_whitespace(self) -> bool:
        start = self.index
        while self.index < len(self.text) and self.text[self.index].isspace():
            self._advance(1)
        return self.index > start

    def _read_while(self, predicate) -> int:
        end = self.index
        while end < len(self.text) and predicate(self.text[end]):
            end += 1
        return end - self.index

    def __iter__(self) -> Iterator[Token]:
        """Tokens on demand; a bad character raises only once it is reached."""
        while True:
            spaced = self._skip_whitespace()
            position = self._position()
            if self.index >= len(self.text):
                yield Token(TokenKind.EOF, "", position, spaced)
                return

            char = self.text[self.index]
            if char.isascii() and char.isdigit():
                size = self._read_while(lambda c: c.isascii() and c.isdigit())
                yield Token(TokenKind.INT, self._advance(size), position, spaced)
                continue

            if char == "_" or (char.isascii() and char.isalpha()):
                size = self._read_while(lambda c: c == "_" or (c.isascii() and c.isalnum()))
                word = self.text[self.index:self.index + size]
                keyword = KEYWORDS.get(word)
                if keyword and self.text.startswith(keyword[0], self.index + size):
                    text = self._advance(size + len(keyword[0]))
                    yield Token(keyword[1], text, position, spaced)
                else:
                    yield Token(TokenKind.ID, self._advance(size), position, spaced)
                continue

            for text, kind in PUNCTUATION:
                if self.text.startswith(text, self.index):
                    yield Token(kind, self._advance(len(text)), position, spaced)
                    break
            else:
                raise ExprSyntaxError(f"unexpected character {char!r}", position)


def tokenize(text: str) -> List[Token]:
    return list(Lexer(text))
