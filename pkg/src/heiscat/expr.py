"""Parser and printer for the textual expression grammar.

::

    expr    := term (("+" | "-") term)*
    term    := ["-"] factor ("*" factor)*
    factor  := number ["/" number] | atom | "(" expr ")"
    atom    := ("p" | "q") "[" int "]" ["^(" int ")"]
             | ("pv" | "qv") "[(" int ("," int)* ")]" ["^(" int ")"]
             | "a" "[" int "](" int ")"
             | "1_{" int "}" | "1_" int

Basis indices are 1-based in text.  ``p[1]^(2)`` is the divided power
``p^(2)``, not ``p[1]*p[1]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import heisenberg as hz
from .heisenberg import AlgebraElement
from .lattice import Lattice


class ParseError(SyntaxError):
    def __init__(self, message: str, text: str, pos: int, expected: str = ""):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}" + (f" (expected {expected})" if expected else ""))
        self.line, self.col, self.expected = line, col, expected


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int  # 1-based, as written
    level: int


@dataclass(frozen=True)
class VecGen:
    kind: str
    vector: tuple[int, ...]
    level: int


@dataclass(frozen=True)
class PowerSum:
    index: int
    n: int


@dataclass(frozen=True)
class Idem:
    weight: int


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Prod:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple["Expr", ...]


Expr = Union[Gen, VecGen, PowerSum, Idem, Num, Neg, Prod, Sum]

_TOKEN = re.compile(
    r"\s*(?:(?P<vgen>pv|qv)|(?P<gen>[pqa])(?=\s*\[)|(?P<idem>1_)|(?P<num>\d+)|(?P<op>\^\(|\[\(|\)\]|[-+*/()\[\],{}]))"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, expected: str = ""):
        raise ParseError(msg, self.text, self.pos, expected)

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str] | None:
        self._skip()
        if self.pos >= len(self.text):
            return None
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return ("bad", self.text[self.pos])
        kind = m.lastgroup
        return (kind, m.group(kind))

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if tok[0] == "bad":
            self.error(f"unexpected character {tok[1]!r}")
        m = _TOKEN.match(self.text, self.pos)
        self.pos = m.end()
        return tok

    def expect(self, value: str):
        self._skip()
        tok = self.peek()
        if tok is None or tok[1] != value:
            self.error(f"unexpected {'end of input' if tok is None else repr(tok[1])}", repr(value))
        self.take()

    def integer(self) -> int:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[1] == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok is None or tok[0] != "num":
            self.error("expected an integer", "integer")
        return sign * int(self.take()[1])

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}", "'+', '-', '*' or end of input")
        return e

    def expr(self) -> Expr:
        terms = [self.term()]
        while (tok := self.peek()) is not None and tok[1] in "+-" and tok[0] == "op":
            self.take()
            t = self.term()
            terms.append(Neg(t) if tok[1] == "-" else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        neg = False
        tok = self.peek()
        if tok is not None and tok == ("op", "-"):
            self.take()
            neg = True
        factors = [self.factor()]
        while (tok := self.peek()) is not None and tok == ("op", "*"):
            self.take()
            factors.append(self.factor())
        e = factors[0] if len(factors) == 1 else Prod(tuple(factors))
        return Neg(e) if neg else e

    def _level(self) -> int:
        tok = self.peek()
        if tok is not None and tok[1] == "^(":
            self.take()
            n = self.integer()
            self.expect(")")
            return n
        return 1

    def factor(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input", "a generator, number or '('")
        kind, val = tok
        if kind == "num":
            self.take()
            value = Fraction(int(val))
            nxt = self.peek()
            if nxt == ("op", "/"):
                self.take()
                d = self.peek()
                if d is None or d[0] != "num":
                    self.error("expected a denominator", "integer")
                den = int(self.take()[1])
                if den == 0:
                    self.error("zero denominator")
                value /= den
            return Num(value)
        if kind == "idem":
            self.take()
            if self.peek() == ("op", "{"):
                self.take()
                k = self.integer()
                self.expect("}")
            else:
                k = self.integer()
            return Idem(k)
        if kind == "gen":
            self.take()
            self.expect("[")
            idx = self.integer()
            self.expect("]")
            if val == "a":
                self.expect("(")
                n = self.integer()
                self.expect(")")
                if n == 0:
                    self.error("a(0) is not a generator")
                return PowerSum(idx, n)
            return Gen(val, idx, self._level())
        if kind == "vgen":
            self.take()
            self.expect("[(")
            vec = [self.integer()]
            while self.peek() == ("op", ","):
                self.take()
                vec.append(self.integer())
            self.expect(")]")
            return VecGen(val[0], tuple(vec), self._level())
        if tok == ("op", "("):
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        self.error(f"unexpected {val!r}", "a generator, number or '('")


def parse(text: str, rank: int | None = None) -> Expr:
    """Parse ``text``; with ``rank`` given, indices and vector lengths are validated."""
    e = _Parser(text).parse()
    if rank is not None:
        validate(e, rank)
    return e


def validate(e: Expr, rank: int) -> None:
    if isinstance(e, (Gen, PowerSum)):
        if not 1 <= e.index <= rank:
            raise IndexOutOfRange(f"index {e.index} outside 1..{rank}")
    elif isinstance(e, VecGen):
        if len(e.vector) != rank:
            raise IndexOutOfRange(f"vector {e.vector} has length {len(e.vector)}, lattice rank is {rank}")
    elif isinstance(e, Neg):
        validate(e.arg, rank)
    elif isinstance(e, Prod):
        for f in e.factors:
            validate(f, rank)
    elif isinstance(e, Sum):
        for t in e.terms:
            validate(t, rank)


def to_text(e: Expr) -> str:
    """Print an AST back into the grammar; ``parse(to_text(e)) == e``."""
    if isinstance(e, Gen):
        return f"{e.kind}[{e.index}]^({e.level})"
    if isinstance(e, VecGen):
        return f"{e.kind}v[({','.join(map(str, e.vector))})]^({e.level})"
    if isinstance(e, PowerSum):
        return f"a[{e.index}]({e.n})"
    if isinstance(e, Idem):
        return f"1_{{{e.weight}}}"
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Neg):
        inner = to_text(e.arg)
        return f"-{inner}" if isinstance(e.arg, (Prod, Gen, VecGen, PowerSum, Idem, Num)) else f"-({inner})"
    if isinstance(e, Prod):
        return "*".join(f"({to_text(f)})" if isinstance(f, (Sum, Neg)) else to_text(f) for f in e.factors)
    if isinstance(e, Sum):
        out = _term_text(e.terms[0], first=True)
        for t in e.terms[1:]:
            out += _term_text(t, first=False)
        return out
    raise TypeError(f"not an expression: {e!r}")


def _term_text(t: Expr, first: bool) -> str:
    if isinstance(t, Neg) and not isinstance(t.arg, (Neg, Sum)):
        return ("-" if first else " - ") + to_text(t.arg)
    s = f"({to_text(t)})" if isinstance(t, (Sum, Neg)) else to_text(t)
    return s if first else " + " + s


def evaluate(e: Expr, lattice: Lattice) -> AlgebraElement:
    validate(e, lattice.rank)
    if isinstance(e, Gen):
        return hz.generator(e.kind, e.index - 1, e.level)
    if isinstance(e, VecGen):
        return hz.expand_vector_generator(e.kind, e.vector, e.level, lattice)
    if isinstance(e, PowerSum):
        return hz.to_power_sums(e.index - 1, e.n, lattice)
    if isinstance(e, Idem):
        return hz.idempotent(e.weight)
    if isinstance(e, Num):
        return hz.scalar(e.value)
    if isinstance(e, Neg):
        return -evaluate(e.arg, lattice)
    if isinstance(e, Prod):
        return hz.product([evaluate(f, lattice) for f in e.factors], lattice)
    if isinstance(e, Sum):
        acc = hz.ZERO
        for t in e.terms:
            acc = acc + evaluate(t, lattice)
        return acc
    raise TypeError(f"not an expression: {e!r}")


def parse_element(text: str, lattice: Lattice) -> AlgebraElement:
    return evaluate(parse(text, lattice.rank), lattice)
