"""Tokenizer for the geometry scripting language.

Token kinds: NUMBER, IDENT, OP (the expression operators), PUNCT
(statement punctuation), COMMENT, EOF. Numbers are plain decimals,
`12` or `0.75`; there is no exponent form, since `1e2` would collide
with scalar-times-basis-vector spellings. Comments run from `//` to
the end of the line and keep their text verbatim.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagnostics import Span

NUMBER = "number"
IDENT = "ident"
OP = "op"
PUNCT = "punct"
COMMENT = "comment"
EOF = "eof"

OPERATOR_CHARS = "+-*/.^~"
PUNCT_CHARS = "=;:?(),"


class LexError(Exception):
    def __init__(self, message: str, span: Span):
        super().__init__(message)
        self.message = message
        self.span = span


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: Span
    value: float = 0.0


def _ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _ident_char(c: str) -> bool:
    return c.isalnum() or c == "_"


def lex(source: str) -> list[Token]:
    """Split the source into tokens, raising LexError on stray characters."""
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        start_span = Span(line, col)
        if c == "/" and i + 1 < n and source[i + 1] == "/":
            j = i + 2
            while j < n and source[j] != "\n":
                j += 1
            text = source[i + 2 : j]
            tokens.append(Token(COMMENT, text, Span(line, col, j - i)))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i + 1
            while j < n and source[j].isdigit():
                j += 1
            if j < n and source[j] == "." and j + 1 < n and source[j + 1].isdigit():
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            text = source[i:j]
            tokens.append(Token(NUMBER, text, Span(line, col, j - i), float(text)))
            col += j - i
            i = j
            continue
        if _ident_start(c):
            j = i + 1
            while j < n and _ident_char(source[j]):
                j += 1
            text = source[i:j]
            tokens.append(Token(IDENT, text, Span(line, col, j - i)))
            col += j - i
            i = j
            continue
        if c in OPERATOR_CHARS:
            tokens.append(Token(OP, c, start_span))
            i += 1
            col += 1
            continue
        if c in PUNCT_CHARS:
            tokens.append(Token(PUNCT, c, start_span))
            i += 1
            col += 1
            continue
        raise LexError(f"unexpected character {c!r}", start_span)
    tokens.append(Token(EOF, "", Span(line, col, 0)))
    return tokens
