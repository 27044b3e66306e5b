"""Recursive-descent parser.

Grammar:

    script    := { statement }
    statement := COMMENT | draw | assign
    assign    := ["?"] IDENT "=" expr ";"
    draw      := ":" IDENT [ color ] ";"
    color     := IDENT | "rgb" "(" NUMBER "," NUMBER "," NUMBER ")"
    expr      := term { ("+" | "-") term }
    term      := factor { ("*" | "." | "^" | "/") factor }
    factor    := ("-" | "~") factor | atom
    atom      := NUMBER | IDENT | IDENT "(" [ expr { "," expr } ] ")"
               | "(" expr ")"

The product operators share one precedence level and associate left.
Comments are kept as statements when they sit between statements and
are dropped when they appear inside one.
"""
from __future__ import annotations

from .diagnostics import Span
from .lexer import COMMENT, EOF, IDENT, NUMBER, OP, PUNCT, Token, lex
from .nodes import (
    Assign,
    BasisVec,
    Binary,
    Call,
    ColorSpec,
    Comment,
    Draw,
    Expr,
    Ident,
    Num,
    Script,
    Stmt,
    Unary,
)

BASIS_NAMES = ("e1", "e2", "e3", "einf", "e0")

_TERM_OPS = ("*", ".", "^", "/")


class ParseError(Exception):
    def __init__(self, message: str, span: Span):
        super().__init__(message)
        self.message = message
        self.span = span


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # comments are transparent everywhere except the statement loop
    def _peek(self) -> Token:
        pos = self.pos
        while self.tokens[pos].kind == COMMENT:
            pos += 1
        return self.tokens[pos]

    def _advance(self) -> Token:
        while self.tokens[self.pos].kind == COMMENT:
            self.pos += 1
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: str, text: str | None = None) -> Token:
        tok = self._peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            got = tok.text or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok.span)
        return self._advance()

    def parse_script(self) -> Script:
        statements: list[Stmt] = []
        while True:
            tok = self.tokens[self.pos]
            if tok.kind == EOF:
                break
            if tok.kind == COMMENT:
                self.pos += 1
                statements.append(Comment(tok.text, span=tok.span))
                continue
            statements.append(self._statement())
        return Script(tuple(statements))

    def _statement(self) -> Stmt:
        tok = self._peek()
        if tok.kind == PUNCT and tok.text == ":":
            return self._draw()
        optimize = False
        if tok.kind == PUNCT and tok.text == "?":
            self._advance()
            optimize = True
        name_tok = self._peek()
        if name_tok.kind != IDENT:
            raise ParseError(
                f"expected a statement, found {name_tok.text or 'end of input'!r}",
                name_tok.span,
            )
        self._advance()
        self._expect(PUNCT, "=")
        expr = self._expr()
        self._expect(PUNCT, ";")
        return Assign(name_tok.text, expr, optimize=optimize, span=name_tok.span)

    def _draw(self) -> Draw:
        colon = self._expect(PUNCT, ":")
        name_tok = self._expect(IDENT)
        color = None
        tok = self._peek()
        if not (tok.kind == PUNCT and tok.text == ";"):
            color = self._color()
        self._expect(PUNCT, ";")
        return Draw(name_tok.text, color=color, span=colon.span)

    def _color(self) -> ColorSpec:
        tok = self._expect(IDENT)
        if tok.text == "rgb":
            self._expect(PUNCT, "(")
            parts = [self._expect(NUMBER).value]
            for _ in range(2):
                self._expect(PUNCT, ",")
                parts.append(self._expect(NUMBER).value)
            self._expect(PUNCT, ")")
            return ColorSpec(rgb=(parts[0], parts[1], parts[2]), span=tok.span)
        return ColorSpec(name=tok.text, span=tok.span)

    def _expr(self) -> Expr:
        left = self._term()
        while True:
            tok = self._peek()
            if tok.kind == OP and tok.text in ("+", "-"):
                self._advance()
                left = Binary(tok.text, left, self._term(), span=tok.span)
            else:
                return left

    def _term(self) -> Expr:
        left = self._factor()
        while True:
            tok = self._peek()
            if tok.kind == OP and tok.text in _TERM_OPS:
                self._advance()
                left = Binary(tok.text, left, self._factor(), span=tok.span)
            else:
                return left

    def _factor(self) -> Expr:
        tok = self._peek()
        if tok.kind == OP and tok.text in ("-", "~"):
            self._advance()
            return Unary(tok.text, self._factor(), span=tok.span)
        return self._atom()

    def _atom(self) -> Expr:
        tok = self._peek()
        if tok.kind == NUMBER:
            self._advance()
            return Num(tok.value, span=tok.span)
        if tok.kind == IDENT:
            self._advance()
            nxt = self._peek()
            if nxt.kind == PUNCT and nxt.text == "(":
                self._advance()
                args: list[Expr] = []
                if not (self._peek().kind == PUNCT and self._peek().text == ")"):
                    args.append(self._expr())
                    while self._peek().kind == PUNCT and self._peek().text == ",":
                        self._advance()
                        args.append(self._expr())
                self._expect(PUNCT, ")")
                return Call(tok.text, tuple(args), span=tok.span)
            if tok.text in BASIS_NAMES:
                return BasisVec(tok.text, span=tok.span)
            return Ident(tok.text, span=tok.span)
        if tok.kind == PUNCT and tok.text == "(":
            self._advance()
            inner = self._expr()
            self._expect(PUNCT, ")")
            return inner
        raise ParseError(
            f"expected an expression, found {tok.text or 'end of input'!r}", tok.span
        )


def parse(source: str) -> Script:
    """Parse source text into a Script, raising LexError or ParseError."""
    return _Parser(lex(source)).parse_script()
