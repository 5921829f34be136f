"""A small expression language over the monoid and its integer ideal.

Grammar, loosely:

    expr   := power { ["*"] power }          products, juxtaposition allowed
    power  := atom { "^" int }               int may be negative or zero
    atom   := "a" | "b" | "I" | "e[" int "]"
            | "iso([" ints "]," int ")" | "grp(" int ")"
            | "(" expr ")"

Parse errors carry the offending column.  Evaluation returns a map or an
adjoined integer; with params given, results above the noise bound are
rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import ALPHA, BETA, IDENTITY, InvalidShift, NoiseParams, PartialIso, punctured_identity
from .extension import ExtElem, Group, ext_mul


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


class EvalError(ValueError):
    """The expression parsed but does not denote a value under the given params."""


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Puncture:
    index: int


@dataclass(frozen=True)
class IsoLit:
    excluded: tuple
    shift: int


@dataclass(frozen=True)
class GrpLit:
    k: int


@dataclass(frozen=True)
class Prod:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Gen, Puncture, IsoLit, GrpLit, Prod, Pow]

_GENS = {"a": ALPHA, "b": BETA, "I": IDENTITY}


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        col = pos + 1
        if ch.isspace():
            pos += 1
            continue
        if text.startswith("iso", pos):
            tokens.append(("iso", "iso", col))
            pos += 3
        elif text.startswith("grp", pos):
            tokens.append(("grp", "grp", col))
            pos += 3
        elif ch in "abIe":
            tokens.append(("name", ch, col))
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(("int", text[pos:end], col))
            pos = end
        elif ch in "()[],*^-":
            tokens.append((ch, ch, col))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len_hint(self.tokens))
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self) -> Node:
        node = self.parse_power()
        while True:
            tok = self.peek()
            if tok is None:
                return node
            if tok[0] == "*":
                self.next()
                node = Prod(node, self.parse_power())
            elif tok[0] in ("name", "iso", "grp", "("):
                node = Prod(node, self.parse_power())
            else:
                return node

    def parse_power(self) -> Node:
        node = self.parse_atom()
        while self.peek() is not None and self.peek()[0] == "^":
            self.next()
            node = Pow(node, self.signed_int())
        return node

    def signed_int(self) -> int:
        tok = self.next()
        if tok[0] == "-":
            return -int(self.expect("int")[1])
        if tok[0] == "int":
            return int(tok[1])
        raise ParseError(f"expected an integer, found {tok[1]!r}", tok[2])

    def parse_atom(self) -> Node:
        tok = self.next()
        kind = tok[0]
        if kind == "name" and tok[1] in _GENS:
            return Gen(tok[1])
        if kind == "name":  # "e", needs a bracketed index
            self.expect("[")
            num = self.expect("int")
            index = int(num[1])
            if index < 1:
                raise ParseError("puncture index must be >= 1", num[2])
            self.expect("]")
            return Puncture(index)
        if kind == "iso":
            self.expect("(")
            self.expect("[")
            entries = []
            if self.peek() is not None and self.peek()[0] == "int":
                entries.append(int(self.next()[1]))
                while self.peek() is not None and self.peek()[0] == ",":
                    self.next()
                    entries.append(int(self.expect("int")[1]))
            self.expect("]")
            self.expect(",")
            shift = self.signed_int()
            self.expect(")")
            return IsoLit(tuple(entries), shift)
        if kind == "grp":
            self.expect("(")
            k = self.signed_int()
            self.expect(")")
            return GrpLit(k)
        if kind == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def len_hint(tokens: list) -> int:
    return tokens[-1][2] + len(tokens[-1][1]) if tokens else 1


def parse(text: str) -> Node:
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
    return node


def _ext_pow(x: ExtElem, n: int) -> ExtElem:
    if isinstance(x, Group):
        return Group(x.k * n)
    return x ** n


def _eval(node: Node) -> ExtElem:
    if isinstance(node, Gen):
        return _GENS[node.name]
    if isinstance(node, Puncture):
        return punctured_identity(node.index)
    if isinstance(node, IsoLit):
        try:
            return PartialIso(node.excluded, node.shift)
        except (InvalidShift, ValueError) as exc:
            raise EvalError(f"bad literal {unparse(node)}: {exc}") from exc
    if isinstance(node, GrpLit):
        return Group(node.k)
    if isinstance(node, Prod):
        return ext_mul(_eval(node.left), _eval(node.right))
    if isinstance(node, Pow):
        return _ext_pow(_eval(node.base), node.exponent)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, params: Optional[NoiseParams] = None) -> ExtElem:
    value = _eval(node)
    if params is not None and isinstance(value, PartialIso) and value.noise > params.j:
        raise EvalError(
            f"{unparse(node)} evaluates to {value!r} with noise {value.noise}, "
            f"above the bound {params.j}"
        )
    return value


def unparse(node: Node) -> str:
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Puncture):
        return f"e[{node.index}]"
    if isinstance(node, IsoLit):
        return f"iso([{','.join(str(x) for x in node.excluded)}],{node.shift})"
    if isinstance(node, GrpLit):
        return f"grp({node.k})"
    if isinstance(node, Prod):
        left = unparse(node.left)
        right = unparse(node.right)
        if isinstance(node.right, Prod):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if isinstance(node.base, (Prod, Pow)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")
