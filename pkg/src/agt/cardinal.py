"""Symbolic cardinal numbers with ZFC-sound comparison and a GCH mode.

A cardinal is one of

* ``Finite(n)``
* ``Aleph(i)`` for a natural index ``i``
* ``Exp(k)``, the power ``2**k`` of an infinite cardinal ``k``
* ``Sup(members)``, the supremum of finitely many pairwise
  ZFC-incomparable infinite cardinals.

Values built through :func:`normalize` (or the arithmetic helpers) are in
normal form, so structural equality coincides with provable equality for
the expressions this module produces.

Comparison in ZFC mode is semantic.  A *continuum assignment* sends each
aleph index ``i`` to the index of ``2**aleph_i``; it must be non-decreasing
and satisfy ``f(i) >= i + 1``.  Every such assignment on finitely many
alephs is realised in some model of ZFC (Easton), so a relation is provable
iff it holds under every assignment.  Normal forms are sups of exponential
towers over alephs, and provability between towers has a closed form (see
``_tower_le``), so comparison is quadratic in the number of towers.
GCH mode fixes ``f(i) = i + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable


class Ordering(Enum):
    LT = "lt"
    EQ = "eq"
    GT = "gt"
    UNKNOWN = "unknown"


class CardinalMode(Enum):
    ZFC = "zfc"
    GCH = "gch"


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        raise TypeError("Verdict is three-valued; compare against Verdict.TRUE explicitly")


class Cardinal:
    __slots__ = ()

    @property
    def is_finite(self) -> bool:
        return isinstance(self, Finite)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Finite(Cardinal):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("finite cardinal must be non-negative")


@dataclass(frozen=True)
class Aleph(Cardinal):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("aleph index must be a natural number")


@dataclass(frozen=True)
class Exp(Cardinal):
    exponent: Cardinal


@dataclass(frozen=True)
class Sup(Cardinal):
    members: frozenset


MAX_FINITE_EXPONENT = 1 << 16


def _pow2(n: int) -> int:
    if n > MAX_FINITE_EXPONENT:
        raise OverflowError(f"2^{n} is too large to hold exactly")
    return 1 << n


ZERO = Finite(0)
ONE = Finite(1)
ALEPH0 = Aleph(0)
CONTINUUM = Exp(ALEPH0)


# -- towers -------------------------------------------------------------------
#
# After normalization every infinite value is a sup of towers
# 2^2^...^aleph_i, written (k, i) with k the number of exponentials.  Under
# a continuum assignment f the tower evaluates to f^k(i).

Tower = tuple[int, int]


def _tower(x: Cardinal) -> Tower:
    k = 0
    while isinstance(x, Exp):
        k += 1
        x = x.exponent
    if not isinstance(x, Aleph):
        raise TypeError(f"not a tower: {x!r}")
    return (k, x.index)


def _towers(x: Cardinal) -> frozenset:
    if isinstance(x, Sup):
        return frozenset(_tower(m) for m in x.members)
    return frozenset([_tower(x)])


def _tower_le(t: Tower, s: Tower) -> bool:
    """``f^k(i) <= f^l(j)`` under every assignment.

    Sufficiency: f^m(j) >= j + m, so step from j up to i and spend the
    remaining l - (i - j) >= k steps from there.  Necessity: if j + l < i + k
    GCH already refutes it; otherwise l < k and an assignment constant on
    [i, j] with a large value does.
    """
    (k, i), (l, j) = t, s
    return l >= k and j + l >= i + k


def _tower_lt(t: Tower, s: Tower) -> bool:
    """``f^k(i) < f^l(j)`` under every assignment."""
    if t == s or not _tower_le(t, s):
        return False
    (k, i), (l, j) = t, s
    if k == l:
        # equal heights collapse when f is constant on [i, j]
        return k == 0
    # l > k: equality is reachable only when GCH already gives it
    return j + l != i + k


def _gch_value(x: Cardinal) -> tuple[int, int]:
    """``(0, n)`` for finite, ``(1, i)`` for aleph_i, with f(i) = i + 1."""
    if isinstance(x, Finite):
        return (0, x.n)
    if isinstance(x, Aleph):
        return (1, x.index)
    if isinstance(x, Exp):
        kind, i = _gch_value(x.exponent)
        return (0, _pow2(i)) if kind == 0 else (1, i + 1)
    if isinstance(x, Sup):
        return max(_gch_value(m) for m in x.members)
    raise TypeError(f"not a cardinal: {x!r}")


def _sign(a, b) -> Ordering:
    return Ordering.LT if a < b else Ordering.GT if a > b else Ordering.EQ


# One assignment (successor below i, very fast from i on) beats every tower
# that does not provably dominate (k, i), so a tower is provably below a sup
# exactly when it is provably below one member.

def _provably_le(a: Cardinal, b: Cardinal) -> bool:
    if isinstance(a, Finite):
        return not isinstance(b, Finite) or a.n <= b.n
    if isinstance(b, Finite):
        return False
    tb = _towers(b)
    return all(any(_tower_le(t, s) for s in tb) for t in _towers(a))


def _provably_lt(a: Cardinal, b: Cardinal) -> bool:
    if isinstance(b, Finite):
        return isinstance(a, Finite) and a.n < b.n
    if isinstance(a, Finite):
        return True
    tb = _towers(b)
    return all(any(_tower_lt(t, s) for s in tb) for t in _towers(a))


# -- normal form --------------------------------------------------------------

def _sort_key(x: Cardinal):
    return (_gch_value(x), render(x))


def normalize(x: Cardinal, mode: CardinalMode = CardinalMode.ZFC) -> Cardinal:
    """Bring ``x`` to normal form; in GCH mode the result is Finite or Aleph."""
    if mode is CardinalMode.GCH:
        kind, v = _gch_value(_normalize_zfc(x))
        return Finite(v) if kind == 0 else Aleph(v)
    return _normalize_zfc(x)


@lru_cache(maxsize=100_000)
def _normalize_zfc(x: Cardinal) -> Cardinal:
    if isinstance(x, (Finite, Aleph)):
        return x
    if isinstance(x, Exp):
        e = _normalize_zfc(x.exponent)
        if isinstance(e, Finite):
            return Finite(_pow2(e.n))
        if isinstance(e, Sup):
            return _normalize_sup(Exp(m) for m in e.members)
        return Exp(e)
    if isinstance(x, Sup):
        return _normalize_sup(_normalize_zfc(m) for m in x.members)
    raise TypeError(f"not a cardinal: {x!r}")


def _normalize_sup(items: Iterable[Cardinal]) -> Cardinal:
    flat: set[Cardinal] = set()
    for m in items:
        m = _normalize_zfc(m)
        if isinstance(m, Sup):
            flat.update(m.members)
        else:
            flat.add(m)
    if not flat:
        raise ValueError("sup of an empty family")
    finite = [m for m in flat if isinstance(m, Finite)]
    infinite = sorted((m for m in flat if not isinstance(m, Finite)), key=_sort_key)
    if not infinite:
        return max(finite, key=lambda m: m.n)
    # distinct towers are never provably equal, so plain domination suffices
    keep = [m for m in infinite if not any(o != m and _provably_le(m, o) for o in infinite)]
    if len(keep) == 1:
        return keep[0]
    return Sup(frozenset(keep))


# -- public operations ----------------------------------------------------------

def cmp(a: Cardinal, b: Cardinal, mode: CardinalMode = CardinalMode.ZFC) -> Ordering:
    a, b = _normalize_zfc(a), _normalize_zfc(b)
    if mode is CardinalMode.GCH:
        return _sign(_gch_value(a), _gch_value(b))
    if a == b:
        return Ordering.EQ
    if _provably_lt(a, b):
        return Ordering.LT
    if _provably_lt(b, a):
        return Ordering.GT
    if _provably_le(a, b) and _provably_le(b, a):
        return Ordering.EQ
    return Ordering.UNKNOWN


def leq(a: Cardinal, b: Cardinal, mode: CardinalMode = CardinalMode.ZFC) -> Verdict:
    """Three-valued ``a <= b``: TRUE iff provable, FALSE iff refutable."""
    a, b = _normalize_zfc(a), _normalize_zfc(b)
    if mode is CardinalMode.GCH:
        return Verdict.of(_gch_value(a) <= _gch_value(b))
    if _provably_le(a, b):
        return Verdict.TRUE
    if _provably_lt(b, a):
        return Verdict.FALSE
    return Verdict.UNKNOWN


def add(a: Cardinal, b: Cardinal) -> Cardinal:
    if isinstance(a, Finite) and isinstance(b, Finite):
        return Finite(a.n + b.n)
    return sup([a, b])


def mul(a: Cardinal, b: Cardinal) -> Cardinal:
    if a == ZERO or b == ZERO:
        return ZERO
    if isinstance(a, Finite) and isinstance(b, Finite):
        return Finite(a.n * b.n)
    return sup([a, b])


def exp2(a: Cardinal) -> Cardinal:
    return _normalize_zfc(Exp(_normalize_zfc(a)))


def sup(items: Iterable[Cardinal]) -> Cardinal:
    return _normalize_sup(items)


def leq_log(a: Cardinal, b: Cardinal, mode: CardinalMode = CardinalMode.ZFC) -> Verdict:
    """Decide ``log a <= b`` as ``a <= 2**b``; log itself is never computed."""
    return leq(a, exp2(b), mode)


def is_infinite(x: Cardinal) -> bool:
    return not isinstance(_normalize_zfc(x), Finite)


# -- text form ------------------------------------------------------------------

def render(x: Cardinal) -> str:
    if isinstance(x, Finite):
        return str(x.n)
    if isinstance(x, Aleph):
        return f"aleph{x.index}"
    if isinstance(x, Exp):
        inner = render(x.exponent)
        if isinstance(x.exponent, Sup):
            inner = f"({inner})"
        return f"2^{inner}"
    if isinstance(x, Sup):
        return "sup(" + ", ".join(render(m) for m in sorted(x.members, key=_sort_key)) + ")"
    raise TypeError(f"not a cardinal: {x!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|(aleph)(\d+)|(c)\b|(sup)\b|(\^)|(\()|(\))|(,))")


class CardinalParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _CardinalParser:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = offset

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        return m

    def expect(self, group: int, what: str):
        m = self.peek()
        if not m or m.group(group) is None:
            raise CardinalParseError(f"expected {what}", self.pos)
        self.pos = m.end()
        return m

    def parse(self) -> Cardinal:
        m = self.peek()
        if not m:
            raise CardinalParseError("expected a cardinal", self.pos)
        if m.group(1) is not None:
            self.pos = m.end()
            base = Finite(int(m.group(1)))
            nxt = self.peek()
            if nxt and nxt.group(6) is not None:
                if base.n != 2:
                    raise CardinalParseError("only base 2 powers are supported", self.pos)
                self.pos = nxt.end()
                return Exp(self.parse())
            return base
        if m.group(2) is not None:
            self.pos = m.end()
            return Aleph(int(m.group(3)))
        if m.group(4) is not None:
            self.pos = m.end()
            return CONTINUUM
        if m.group(5) is not None:
            self.pos = m.end()
            self.expect(7, "'('")
            items = [self.parse()]
            while self.peek() and self.peek().group(9) is not None:
                self.pos = self.peek().end()
                items.append(self.parse())
            self.expect(8, "')'")
            return Sup(frozenset(items))
        if m.group(7) is not None:
            self.pos = m.end()
            inner = self.parse()
            self.expect(8, "')'")
            return inner
        raise CardinalParseError("expected a cardinal", self.pos)


def parse_cardinal_prefix(text: str, offset: int = 0) -> tuple[Cardinal, int]:
    """Parse a cardinal starting at ``offset``; return it with the end offset."""
    p = _CardinalParser(text, offset)
    value = p.parse()
    return normalize(value), p.pos


def parse_cardinal(text: str) -> Cardinal:
    value, end = parse_cardinal_prefix(text)
    if text[end:].strip():
        raise CardinalParseError("trailing input", end)
    return value
