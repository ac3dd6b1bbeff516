"""A small language for continuous predicates over the conaturals.

Bit indices are literals or variables bound by a literally bounded
quantifier, so every expression has a finite modulus that is computable
without running it: a static bound on how many bits evaluation may read.

Grammar (whitespace-insensitive)::

    expr  := imp
    imp   := or ("=>" imp)?                  right associative
    or    := and ("|" and)*
    and   := unary ("&" unary)*
    unary := "!" unary | atom
    atom  := "true" | "false" | "bit(" index ")" | "atleast(" nat ")"
           | "all" name "<" nat "." expr | "(" expr ")"

``index`` is a natural literal or a variable bound by an enclosing
``all``.  Precedence is ! > & > | > =>.  Parse errors carry a 0-based
byte offset and the set of tokens that would have been accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .conat import CoNat
from .search import Predicate

MAX_INDEX = 1 << 16


@dataclass(frozen=True)
class BitAt:
    """Read one bit; the index is a literal or an all-bound variable name."""

    index: Union[int, str]


@dataclass(frozen=True)
class ConstTrue:
    pass


@dataclass(frozen=True)
class ConstFalse:
    pass


@dataclass(frozen=True)
class Not:
    body: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Implies:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class AllBelow:
    """Conjunction of body over var = 0 .. bound-1, expanded at compile time."""

    bound: int
    var: str
    body: "Expr"


@dataclass(frozen=True)
class IsAtLeast:
    """"The argument is at least n": bit n-1, or true when n = 0."""

    n: int


Expr = Union[BitAt, ConstTrue, ConstFalse, Not, And, Or, Implies, AllBelow, IsAtLeast]


class ParseError(ValueError):
    """Rejected input, with the byte offset and the expected token set."""

    def __init__(self, offset: int, expected: Sequence[str], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        super().__init__(
            f"at offset {offset}: expected {' or '.join(expected)}, found {found}"
        )


class IndexTooLargeError(ValueError):
    """A literal bit index beyond the configured maximum."""

    def __init__(self, offset: int, value: int, limit: int):
        self.offset = offset
        self.value = value
        self.limit = limit
        super().__init__(f"at offset {offset}: index {value} exceeds maximum {limit}")


_KEYWORDS = frozenset(["true", "false", "bit", "atleast", "all"])


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("nat", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(_Token(word if word in _KEYWORDS else "name", word, i))
            i = j
            continue
        if text.startswith("=>", i):
            toks.append(_Token("=>", "=>", i))
            i += 2
            continue
        if c in "&|!()<.":
            toks.append(_Token(c, c, i))
            i += 1
            continue
        raise ParseError(i, ["a token"], f"character {c!r}")
    toks.append(_Token("end", "", n))
    return toks


_ATOM_EXPECTED = ['"true"', '"false"', '"bit"', '"atleast"', '"all"', '"("', '"!"']


class _Parser:
    def __init__(self, tokens: list[_Token], max_index: int):
        self.tokens = tokens
        self.i = 0
        self.max_index = max_index

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def fail(self, expected: Sequence[str]) -> None:
        tok = self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(tok.pos, expected, found)

    def take(self, kind: str, label: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail([label])
        self.i += 1
        return tok

    def expr(self, env: frozenset[str]) -> Expr:
        return self.imp(env)

    def imp(self, env: frozenset[str]) -> Expr:
        left = self.or_(env)
        if self.peek().kind == "=>":
            self.i += 1
            return Implies(left, self.imp(env))
        return left

    def or_(self, env: frozenset[str]) -> Expr:
        e = self.and_(env)
        while self.peek().kind == "|":
            self.i += 1
            e = Or(e, self.and_(env))
        return e

    def and_(self, env: frozenset[str]) -> Expr:
        e = self.unary(env)
        while self.peek().kind == "&":
            self.i += 1
            e = And(e, self.unary(env))
        return e

    def unary(self, env: frozenset[str]) -> Expr:
        if self.peek().kind == "!":
            self.i += 1
            return Not(self.unary(env))
        return self.atom(env)

    def atom(self, env: frozenset[str]) -> Expr:
        kind = self.peek().kind
        if kind == "true":
            self.i += 1
            return ConstTrue()
        if kind == "false":
            self.i += 1
            return ConstFalse()
        if kind == "bit":
            self.i += 1
            self.take("(", '"("')
            idx = self.index_arg(env)
            self.take(")", '")"')
            return BitAt(idx)
        if kind == "atleast":
            self.i += 1
            self.take("(", '"("')
            n = self.nat(limit=self.max_index + 1)  # reads bit n-1
            self.take(")", '")"')
            return IsAtLeast(n)
        if kind == "all":
            self.i += 1
            name = self.take("name", "a variable name").text
            self.take("<", '"<"')
            bound = self.nat(limit=self.max_index + 1)  # variables reach bound-1
            self.take(".", '"."')
            return AllBelow(bound, name, self.expr(env | {name}))
        if kind == "(":
            self.i += 1
            e = self.expr(env)
            self.take(")", '")"')
            return e
        self.fail(_ATOM_EXPECTED)

    def index_arg(self, env: frozenset[str]) -> Union[int, str]:
        tok = self.peek()
        if tok.kind == "nat":
            return self.nat(limit=self.max_index)
        if tok.kind == "name":
            if tok.text not in env:
                raise ParseError(tok.pos, ["a bound variable"], repr(tok.text))
            self.i += 1
            return tok.text
        self.fail(["a number", "a bound variable"])

    def nat(self, limit: int) -> int:
        tok = self.take("nat", "a number")
        value = int(tok.text)
        if value > limit:
            raise IndexTooLargeError(tok.pos, value, limit)
        return value


def parse(text: str, max_index: int = MAX_INDEX) -> Expr:
    """Parse source text into an expression tree.

    Raises :class:`ParseError` on bad syntax or unbound variables and
    :class:`IndexTooLargeError` on out-of-range indices.
    """
    parser = _Parser(_tokenize(text), max_index)
    e = parser.expr(frozenset())
    if parser.peek().kind != "end":
        parser.fail(['"&"', '"|"', '"=>"', "end of input"])
    return e


# Precedence levels used by the printer; AllBelow is lowest because its
# body extends as far to the right as the input allows.
_PREC_ALL = 0
_PREC_IMP = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NOT = 4


def print_expr(e: Expr) -> str:
    """Render canonical text; ``parse(print_expr(e))`` reproduces e."""
    return _render(e, 0)


def _render(e: Expr, min_prec: int) -> str:
    if isinstance(e, ConstTrue):
        return "true"
    if isinstance(e, ConstFalse):
        return "false"
    if isinstance(e, BitAt):
        return f"bit({e.index})"
    if isinstance(e, IsAtLeast):
        return f"atleast({e.n})"
    if isinstance(e, Not):
        # unary is legal at every operand position, so never parenthesized
        return "!" + _render(e.body, _PREC_NOT)
    if isinstance(e, And):
        s = f"{_render(e.left, _PREC_AND)} & {_render(e.right, _PREC_AND + 1)}"
        prec = _PREC_AND
    elif isinstance(e, Or):
        s = f"{_render(e.left, _PREC_OR)} | {_render(e.right, _PREC_OR + 1)}"
        prec = _PREC_OR
    elif isinstance(e, Implies):
        s = f"{_render(e.left, _PREC_IMP + 1)} => {_render(e.right, _PREC_IMP)}"
        prec = _PREC_IMP
    elif isinstance(e, AllBelow):
        s = f"all {e.var} < {e.bound}. {_render(e.body, 0)}"
        prec = _PREC_ALL
    else:
        raise TypeError(f"not an expression node: {e!r}")
    return f"({s})" if prec < min_prec else s


def modulus(e: Expr) -> int:
    """Static continuity bound: 1 + the largest bit index evaluation can read.

    Compiled evaluation never inspects a bit at or beyond this index.
    """
    return _modulus(e, {})


def _modulus(e: Expr, env: dict[str, int]) -> int:
    if isinstance(e, BitAt):
        idx = env[e.index] if isinstance(e.index, str) else e.index
        return idx + 1
    if isinstance(e, (ConstTrue, ConstFalse)):
        return 0
    if isinstance(e, IsAtLeast):
        return e.n
    if isinstance(e, Not):
        return _modulus(e.body, env)
    if isinstance(e, (And, Or, Implies)):
        return max(_modulus(e.left, env), _modulus(e.right, env))
    if isinstance(e, AllBelow):
        if e.bound == 0:
            return 0
        # indices are monotone in the variable, so the last instance is
        # the widest one
        return _modulus(e.body, {**env, e.var: e.bound - 1})
    raise TypeError(f"not an expression node: {e!r}")


def compile_expr(e: Expr) -> Predicate:
    """Compile to a predicate carrying the statically inferred modulus.

    The tree is flattened into a single Python expression over a
    bit-reader callable, with bounded quantifiers expanded into literal
    conjunctions, so evaluation pays no per-node interpretation overhead.
    """
    fn = eval(f"lambda bit: {_pysource(e, {})}", {"__builtins__": {}})

    def run(p: CoNat) -> int:
        return 1 if fn(p.bit_at) else 0

    return Predicate(eval=run, declared_modulus=modulus(e))


def _pysource(e: Expr, env: dict[str, int]) -> str:
    if isinstance(e, ConstTrue):
        return "True"
    if isinstance(e, ConstFalse):
        return "False"
    if isinstance(e, BitAt):
        idx = env[e.index] if isinstance(e.index, str) else e.index
        return f"bit({idx})"
    if isinstance(e, IsAtLeast):
        return "True" if e.n == 0 else f"bit({e.n - 1})"
    if isinstance(e, Not):
        return f"(not {_pysource(e.body, env)})"
    if isinstance(e, And):
        return f"({_pysource(e.left, env)} and {_pysource(e.right, env)})"
    if isinstance(e, Or):
        return f"({_pysource(e.left, env)} or {_pysource(e.right, env)})"
    if isinstance(e, Implies):
        return f"((not {_pysource(e.left, env)}) or {_pysource(e.right, env)})"
    if isinstance(e, AllBelow):
        if e.bound == 0:
            return "True"
        clauses = [_pysource(e.body, {**env, e.var: i}) for i in range(e.bound)]
        return "(" + " and ".join(clauses) + ")"
    raise TypeError(f"not an expression node: {e!r}")
