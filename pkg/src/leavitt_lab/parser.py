"""Expression grammar shared by every presentation.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (['*'] power | '/' INT)*
    power  := atom ['^' ['-'] INT]
    atom   := INT | IDENT | '(' expr ')'

Multiplication may be written with ``*`` or by juxtaposition.  A ``*``
written immediately after the letter ``c`` or ``d`` is part of the
identifier (``c*``, ``d*``); put whitespace before it to mean a product.
Identifiers are single letters, so ``cd`` is the product of c and d and
``2x`` is 2 times x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .field import Field

DEFAULT_MAX_EXPONENT = 10_000


class ParseError(ValueError):
    """Syntax error, unknown identifier or exponent overflow."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
            if text:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    k, n = 0, len(text)
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isdigit():
            start = k
            while k < n and text[k].isdigit():
                k += 1
            tokens.append(Token("int", text[start:k], start))
        elif ch.isalpha():
            if ch in "cd" and k + 1 < n and text[k + 1] == "*":
                tokens.append(Token("ident", ch + "*", k))
                k += 2
            else:
                tokens.append(Token("ident", ch, k))
                k += 1
        elif ch in "+-*/^()":
            tokens.append(Token("op", ch, k))
            k += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, k)
    tokens.append(Token("end", "", n))
    return tokens


# AST nodes are plain tuples: ("int", n), ("id", name, pos), ("add", a, b),
# ("neg", a), ("mul", a, b), ("div", a, n), ("pow", a, n)


class _Parser:
    def __init__(self, text: str, max_exponent: int):
        self.text = text
        self.toks = tokenize(text)
        self.k = 0
        self.max_exponent = max_exponent

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def take(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        neg = False
        if self.tok.kind == "op" and self.tok.text in "+-":
            neg = self.take().text == "-"
        node = self.term()
        if neg:
            node = ("neg", node)
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take().text
            rhs = self.term()
            node = ("add", node, rhs if op == "+" else ("neg", rhs))
        return node

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "ident") or (t.kind == "op" and t.text == "(")

    def term(self):
        node = self.power()
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.take()
                node = ("mul", node, self.power())
            elif t.kind == "op" and t.text == "/":
                self.take()
                d = self.tok
                if d.kind != "int":
                    raise self.error("division is only by an integer literal")
                self.take()
                if int(d.text) == 0:
                    raise self.error("division by zero", d)
                node = ("div", node, int(d.text))
            elif self._starts_atom():
                node = ("mul", node, self.power())
            else:
                return node

    def power(self):
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            sign = 1
            if self.tok.kind == "op" and self.tok.text == "-":
                self.take()
                sign = -1
            t = self.tok
            if t.kind != "int":
                raise self.error("expected integer exponent")
            self.take()
            n = int(t.text)
            if n > self.max_exponent:
                raise self.error(f"exponent {n} exceeds bound {self.max_exponent}", t)
            node = ("pow", node, sign * n)
        return node

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return ("int", int(t.text))
        if t.kind == "ident":
            self.take()
            return ("id", t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.take()
            node = self.expr()
            if self.tok.kind != "op" or self.tok.text != ")":
                raise self.error("expected ')'")
            self.take()
            return node
        if t.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {t.text!r}")


def parse_ast(text: str, max_exponent: int = DEFAULT_MAX_EXPONENT):
    return _Parser(text, max_exponent).parse()


@dataclass
class RingSyntax:
    """How to build elements of one ring from parsed syntax."""

    field: Field
    identifiers: dict[str, Callable[[], object]]
    from_scalar: Callable[[object], object]
    name: str = "ring"


def evaluate(node, ring: RingSyntax, text: str = ""):
    kind = node[0]
    if kind == "int":
        return ring.from_scalar(ring.field(node[1]))
    if kind == "id":
        name, pos = node[1], node[2]
        if name not in ring.identifiers:
            allowed = ", ".join(ring.identifiers)
            raise ParseError(f"unknown identifier {name!r} for {ring.name} (expected one of {allowed})", text, pos)
        return ring.identifiers[name]()
    if kind == "add":
        return evaluate(node[1], ring, text) + evaluate(node[2], ring, text)
    if kind == "neg":
        return -evaluate(node[1], ring, text)
    if kind == "mul":
        return evaluate(node[1], ring, text) * evaluate(node[2], ring, text)
    if kind == "div":
        inv = ring.field.one / ring.field(node[2])
        return evaluate(node[1], ring, text) * ring.from_scalar(inv)
    if kind == "pow":
        base = evaluate(node[1], ring, text)
        try:
            return base ** node[2]
        except ValueError as exc:
            raise ParseError(str(exc), text) from None
    raise AssertionError(node)


def parse_with(text: str, ring: RingSyntax, max_exponent: int = DEFAULT_MAX_EXPONENT):
    return evaluate(parse_ast(text, max_exponent), ring, text)
