"""Text syntax for sigma-sets and sigma-set expressions.

Sets::

    set  := '{' [atom (',' atom)*] '}'
    atom := INT ('*' | '_0')?

Expressions, one precedence level, left-associative::

    expr    := unary (BINOP unary)*
    unary   := '~' unary | primary
    primary := set | '(' expr ')'
    BINOP   := '+' fusion | '^' star-intersection | '\\' star-difference | '|' union

Output is always ASCII.  On input, ``⊕ ∩̂ ⋇ ∪ ★ ₀ ∅`` are accepted as
aliases of ``+ ^ \\ | * _0 {}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple, Union as TUnion

from .core import Atom, Kind, SigmaSet, anti_set, fuse, star_difference, star_intersection, union
from .errors import NotEntireError, ParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<star>[*★∗])
  | (?P<zero>_0|₀)
  | (?P<empty>∅)
  | (?P<punct>[{},()~])
  | (?P<fuse>[+⊕])
  | (?P<inter>\^|∩̂?)
  | (?P<diff>\\|⋇)
  | (?P<union>[|∪])
    """,
    re.VERBOSE,
)

_BINOP_KINDS = ("fuse", "inter", "diff", "union")
_READABLE = {"eof": "end of input", "int": "an atom"}


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "punct":
                kind = value
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# Expression tree -----------------------------------------------------------


@dataclass(frozen=True)
class SetLiteral:
    value: SigmaSet


@dataclass(frozen=True)
class Anti:
    child: "ExprNode"


@dataclass(frozen=True)
class Fuse:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class StarInter:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class StarDiff:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Union:
    left: "ExprNode"
    right: "ExprNode"


ExprNode = TUnion[SetLiteral, Anti, Fuse, StarInter, StarDiff, Union]

_NODE_FOR = {"fuse": Fuse, "inter": StarInter, "diff": StarDiff, "union": Union}
_SYMBOL_FOR = {Fuse: "+", StarInter: "^", StarDiff: "\\", Union: "|"}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message):
        raise ParseError(message, self.text, self.tok.pos)

    def take(self, kind):
        if self.tok.kind != kind:
            want = _READABLE.get(kind, repr(kind))
            got = "end of input" if self.tok.kind == "eof" else repr(self.tok.value)
            self.error(f"expected {want}, found {got}")
        tok = self.tok
        self.i += 1
        return tok

    def set_literal(self) -> SigmaSet:
        if self.tok.kind == "empty":
            self.i += 1
            return SigmaSet()
        self.take("{")
        atoms = []
        if self.tok.kind != "}":
            atoms.append(self.atom())
            while self.tok.kind == ",":
                self.i += 1
                atoms.append(self.atom())
        self.take("}")
        return SigmaSet(atoms)

    def atom(self) -> Atom:
        tok = self.take("int")
        index = int(tok.value)
        if index < 1:
            raise ParseError("atom index must be at least 1", self.text, tok.pos)
        kind = Kind.NATURAL
        if self.tok.kind == "star":
            kind = Kind.ANTI
            self.i += 1
        elif self.tok.kind == "zero":
            kind = Kind.ZERO
            self.i += 1
        return Atom(index, kind)

    def expr(self) -> ExprNode:
        node = self.unary()
        while self.tok.kind in _BINOP_KINDS:
            cls = _NODE_FOR[self.tok.kind]
            self.i += 1
            node = cls(node, self.unary())
        return node

    def unary(self) -> ExprNode:
        if self.tok.kind == "~":
            self.i += 1
            return Anti(self.unary())
        return self.primary()

    def primary(self) -> ExprNode:
        if self.tok.kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        if self.tok.kind in ("{", "empty"):
            return SetLiteral(self.set_literal())
        if self.tok.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected {self.tok.value!r}")


def parse_set(text: str) -> SigmaSet:
    """Parse a set literal such as ``"{1, 2*, 3_0}"``."""
    p = _Parser(text)
    s = p.set_literal()
    p.take("eof")
    return s


def parse_expr(text: str) -> ExprNode:
    p = _Parser(text)
    node = p.expr()
    p.take("eof")
    return node


def format_set(s: SigmaSet) -> str:
    return "{" + ", ".join(str(a) for a in s) + "}"


def format_expr(node: ExprNode) -> str:
    """Render a tree fully parenthesised, so the grouping is explicit."""
    if isinstance(node, SetLiteral):
        return format_set(node.value)
    if isinstance(node, Anti):
        return "~" + format_expr(node.child)
    op = _SYMBOL_FOR[type(node)]
    return f"({format_expr(node.left)} {op} {format_expr(node.right)})"


class FusionStep(NamedTuple):
    expr: str
    result: SigmaSet
    annihilation_count: int


def eval_trace(node: ExprNode) -> Tuple[SigmaSet, List[FusionStep]]:
    """Evaluate `node`, also recording every fusion in evaluation order."""
    steps: List[FusionStep] = []

    def ev(n):
        if isinstance(n, SetLiteral):
            return n.value
        if isinstance(n, Anti):
            value = ev(n.child)
            inv = anti_set(value)
            if inv is None:
                raise NotEntireError(f"{format_set(value)} has no antiset")
            return inv
        left, right = ev(n.left), ev(n.right)
        if isinstance(n, Fuse):
            out = fuse(left, right)
            steps.append(FusionStep(format_expr(n), out.result, out.annihilation_count))
            return out.result
        if isinstance(n, StarInter):
            return star_intersection(left, right)
        if isinstance(n, StarDiff):
            return star_difference(left, right)
        return union(left, right)

    return ev(node), steps


def eval_expr(node: ExprNode) -> SigmaSet:
    return eval_trace(node)[0]
