"""Text grammar for structured groups.

    group  := term { "+" term } | "0"
    term   := atom [ "^" mult ]
    atom   := "Z" | "Z(" int ")" | "Z(" prime "^" int ")" | "Z(" prime "^inf)"
            | "Q" | "J(" prime ")" | "T(" prime ")"
    mult   := posint | "(" cardinal ")"

Composite cyclic orders are split into prime powers.
"""

from __future__ import annotations

import re

from .arith import factorize, is_prime
from .cardinal import Cardinal, CardinalParseError, Finite, ZERO, parse_cardinal_prefix, render
from .groups import Q, Z, Atom, AtomKind, StructuredGroup, ZERO_GROUP, cyc, padic, prufer, torprod


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _GroupParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def eat(self, token: str):
        if not self.at(token):
            raise ParseError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def prime(self) -> int:
        start = self.pos
        p = self.integer()
        if not is_prime(p):
            raise ParseError(f"{p} is not prime", start)
        return p

    def group(self) -> StructuredGroup:
        self.skip()
        if self.text.strip() == "0":
            self.pos = len(self.text)
            return ZERO_GROUP
        terms: list[tuple[Atom, Cardinal]] = []
        terms.extend(self.term())
        while self.at("+"):
            self.eat("+")
            terms.extend(self.term())
        self.skip()
        if self.pos != len(self.text):
            raise ParseError("unexpected input", self.pos)
        return StructuredGroup.of(terms)

    def term(self) -> list[tuple[Atom, Cardinal]]:
        atoms = self.atom()
        mult: Cardinal = Finite(1)
        if self.at("^"):
            self.eat("^")
            start = self.pos
            if self.at("("):
                self.eat("(")
                try:
                    mult, self.pos = parse_cardinal_prefix(self.text, self.pos)
                except CardinalParseError as exc:
                    raise ParseError(str(exc).rsplit(" at offset", 1)[0], exc.offset) from None
                self.eat(")")
            else:
                mult = Finite(self.integer())
            if mult == ZERO:
                raise ParseError("multiplicity must be at least 1", start)
        return [(a, mult) for a in atoms]

    def atom(self) -> list[Atom]:
        self.skip()
        start = self.pos
        if self.at("Q"):
            self.eat("Q")
            return [Q]
        for tag, make in (("J(", padic), ("T(", torprod)):
            if self.at(tag):
                self.eat(tag)
                p = self.prime()
                self.eat(")")
                return [make(p)]
        if not self.at("Z"):
            raise ParseError("expected an atom", start)
        self.eat("Z")
        if not self.at("("):
            return [Z]
        self.eat("(")
        n_pos = self.pos
        n = self.integer()
        if self.at("^"):
            if not is_prime(n):
                raise ParseError(f"{n} is not prime", n_pos)
            self.eat("^")
            if self.at("inf"):
                self.eat("inf")
                self.eat(")")
                return [prufer(n)]
            k_pos = self.pos
            k = self.integer()
            if k < 1:
                raise ParseError("exponent must be positive", k_pos)
            self.eat(")")
            return [cyc(n, k)]
        self.eat(")")
        if n < 1:
            raise ParseError("cyclic order must be positive", n_pos)
        # Z(1) is the trivial group
        return [cyc(p, e) for p, e in factorize(n)]


def parse_group(text: str) -> StructuredGroup:
    return _GroupParser(text).group()


def render_atom(a: Atom) -> str:
    if a.kind is AtomKind.Z:
        return "Z"
    if a.kind is AtomKind.Q:
        return "Q"
    if a.kind is AtomKind.CYC:
        return f"Z({a.p})" if a.k == 1 else f"Z({a.p}^{a.k})"
    if a.kind is AtomKind.PRUFER:
        return f"Z({a.p}^inf)"
    return f"{'J' if a.kind is AtomKind.PADIC else 'T'}({a.p})"


def render_group(g: StructuredGroup) -> str:
    if g.is_zero:
        return "0"
    parts = []
    for a, m in g:
        text = render_atom(a)
        if isinstance(m, Finite):
            if m.n != 1:
                text += f"^{m.n}"
        else:
            text += f"^({render(m)})"
        parts.append(text)
    return " + ".join(parts)
