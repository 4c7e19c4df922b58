"""Brute-force engine for finite abelian groups ``Z(n_1) + ... + Z(n_r)``.

Elements are coded by mixed radix; subgroups are sorted code tuples.  Everything
here is deliberately naive so it can serve as an oracle for the symbolic side.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .lattice import snf

DEFAULT_CAP = 10_000


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    orders: tuple[int, ...]
    cap: int = field(default=DEFAULT_CAP, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if any(n < 2 for n in self.orders):
            raise ValueError("cyclic factor orders must be at least 2")
        if prod(self.orders) > self.cap:
            raise CapExceeded(f"|G| = {prod(self.orders)} exceeds the cap {self.cap}")

    @property
    def size(self) -> int:
        return prod(self.orders)

    @cached_property
    def _weights(self) -> np.ndarray:
        w = [1] * len(self.orders)
        for i in range(len(self.orders) - 2, -1, -1):
            w[i] = w[i + 1] * self.orders[i + 1]
        return np.array(w, dtype=np.int64)

    @cached_property
    def coords(self) -> np.ndarray:
        """``size x rank`` array of element coordinates, row ``c`` decodes code ``c``."""
        codes = np.arange(self.size, dtype=np.int64)
        if not self.orders:
            return np.zeros((1, 0), dtype=np.int64)
        return np.stack([(codes // w) % n for w, n in zip(self._weights, self.orders)], axis=1)

    def encode(self, coords: np.ndarray) -> np.ndarray:
        if not self.orders:
            return np.zeros(len(coords), dtype=np.int64)
        return (np.mod(coords, self.orders) * self._weights).sum(axis=1)

    def code(self, element: Sequence[int]) -> int:
        return int(self.encode(np.array([element], dtype=np.int64))[0])

    def element(self, code: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.coords[code])

    def translate(self, codes: np.ndarray, x: int) -> np.ndarray:
        return self.encode(self.coords[codes] + self.coords[x])

    @cached_property
    def _negation(self) -> np.ndarray:
        return self.encode(-self.coords)

    @cached_property
    def _sub_table(self) -> np.ndarray | None:
        # table[z, y] = z - y; only worth its memory on small groups
        if self.size > 2048:
            return None
        return self.encode((self.coords[:, None, :] - self.coords[None, :, :]).reshape(-1, len(self.orders))).reshape(
            self.size, self.size
        )

    def shift(self, y: int) -> np.ndarray:
        """Permutation ``z -> z - y``; ``mask[shift(y)]`` translates a set by ``y``."""
        table = self._sub_table
        if table is not None:
            return table[:, y]
        return self.encode(self.coords - self.coords[y])

    def add(self, x: int, y: int) -> int:
        table = self._sub_table
        if table is not None:
            return int(table[x, self._negation[y]])
        return int(self.encode(self.coords[[x]] + self.coords[y])[0])

    @cached_property
    def primes(self) -> tuple[int, ...]:
        from .arith import factorize

        return tuple(p for p, _ in factorize(self.size)) if self.orders else ()

    def scale(self, codes: np.ndarray, m: int) -> np.ndarray:
        return self.encode(self.coords[codes] * m)

    def order_of(self, code: int) -> int:
        return lcm(1, *(n // np.gcd(int(x), n) for x, n in zip(self.coords[code], self.orders)))

    def exponent(self) -> int:
        return lcm(1, *self.orders)

    def __str__(self) -> str:
        return " + ".join(f"Z({n})" for n in self.orders) or "0"


@dataclass(frozen=True)
class FinSubgroup:
    group: FiniteGroup
    codes: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.codes)

    @property
    def index(self) -> int:
        return self.group.size // self.order

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return [self.group.element(c) for c in self.codes]

    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.size, dtype=bool)
        m[list(self.codes)] = True
        return m

    def __contains__(self, code: int) -> bool:
        return code in set(self.codes)

    def generators(self) -> list[tuple[int, ...]]:
        """A small generating set, chosen greedily in code order."""
        target = self.mask()
        spanned = np.zeros(self.group.size, dtype=bool)
        spanned[0] = True
        gens = []
        while True:
            missing = target & ~spanned
            if not missing.any():
                return [self.group.element(c) for c in gens]
            x = int(np.argmax(missing))
            gens.append(x)
            spanned = _join_mask(self.group, spanned, x)


def _subgroup(group: FiniteGroup, codes: Iterable[int]) -> FinSubgroup:
    return FinSubgroup(group, tuple(sorted(int(c) for c in set(codes))))


def trivial_subgroup(group: FiniteGroup) -> FinSubgroup:
    return FinSubgroup(group, (0,))


def whole_group(group: FiniteGroup) -> FinSubgroup:
    return FinSubgroup(group, tuple(range(group.size)))


def _join_mask(group: FiniteGroup, mask: np.ndarray, x: int) -> np.ndarray:
    out = mask.copy()
    y = x
    while not mask[y]:
        out |= mask[group.shift(y)]
        y = group.add(y, x)
    return out


def _from_mask(group: FiniteGroup, mask: np.ndarray) -> FinSubgroup:
    return FinSubgroup(group, tuple(np.flatnonzero(mask).tolist()))


def join_cyclic(s: FinSubgroup, x: int) -> FinSubgroup:
    """``S + <x>`` as the union of the translates ``S + kx``."""
    return _from_mask(s.group, _join_mask(s.group, s.mask(), x))


def span(group: FiniteGroup, generators: Iterable[Sequence[int]]) -> FinSubgroup:
    s = trivial_subgroup(group)
    for gen in generators:
        s = join_cyclic(s, group.code(gen))
    return s


def is_subgroup(group: FiniteGroup, codes: Iterable[int]) -> bool:
    codes = sorted(set(int(c) for c in codes))
    if not codes or codes[0] != 0:
        return False
    inside = np.zeros(group.size, dtype=bool)
    inside[codes] = True
    arr = np.array(codes, dtype=np.int64)
    return all(inside[group.translate(arr, c)].all() for c in codes)


def validate(s: FinSubgroup) -> FinSubgroup:
    if not is_subgroup(s.group, s.codes):
        raise ValueError("not a subgroup")
    return s


def all_subgroups(group: FiniteGroup) -> list[FinSubgroup]:
    """The whole subgroup lattice.

    Closes {0} under joins ``S + <x>``.  Only ``x`` of prime order modulo ``S``
    is needed, since every subgroup sits atop a chain of prime-index steps.
    """
    start = np.zeros(group.size, dtype=bool)
    start[0] = True
    seen = {np.packbits(start).tobytes(): start}
    queue = [start]
    everything = np.arange(group.size, dtype=np.int64)
    multiples = {p: group.scale(everything, p) for p in group.primes}
    while queue:
        mask = queue.pop()
        for p, times_p in multiples.items():
            candidates = mask[times_p] & ~mask
            while candidates.any():
                x = int(np.argmax(candidates))
                joined = _join_mask(group, mask, x)
                # the whole step S + <x> yields the same join
                candidates &= ~joined
                key = np.packbits(joined).tobytes()
                if key not in seen:
                    seen[key] = joined
                    queue.append(joined)
    subs = [_from_mask(group, m) for m in seen.values()]
    return sorted(subs, key=lambda h: (h.order, h.codes))


def intersection(a: FinSubgroup, b: FinSubgroup) -> FinSubgroup:
    return _subgroup(a.group, set(a.codes) & set(b.codes))


def join(a: FinSubgroup, b: FinSubgroup) -> FinSubgroup:
    s = a
    for gen in b.generators():
        s = join_cyclic(s, a.group.code(gen))
    return s


def multiple_subgroup(group: FiniteGroup, m: int) -> FinSubgroup:
    """``mG``."""
    return _subgroup(group, group.scale(np.arange(group.size, dtype=np.int64), m).tolist())


def quotient_structure(group: FiniteGroup, sub: FinSubgroup) -> FiniteGroup:
    """Invariant factors of ``G/N`` via the Smith form of the relations."""
    rank = len(group.orders)
    if rank == 0:
        return FiniteGroup((), cap=group.cap)
    rows = [[n if i == j else 0 for j in range(rank)] for i, n in enumerate(group.orders)]
    rows += [list(gen) for gen in sub.generators()]
    _, factors = snf(rows)
    return FiniteGroup(tuple(d for d in factors if d > 1), cap=group.cap)


def quotient_is_cyclic(group: FiniteGroup, sub: FinSubgroup) -> bool:
    return len(quotient_structure(group, sub).orders) <= 1


def cyclic_quotient_subgroups(group: FiniteGroup) -> list[FinSubgroup]:
    return [s for s in all_subgroups(group) if quotient_is_cyclic(group, s)]


# -- characters -------------------------------------------------------------------


@dataclass(frozen=True)
class FinCharacter:
    """Images of the standard generators in Q/Z."""

    images: tuple[Fraction, ...]

    def __call__(self, element: Sequence[int]) -> Fraction:
        return sum((a * x for a, x in zip(self.images, element)), Fraction(0)) % 1


def all_characters(group: FiniteGroup) -> list[FinCharacter]:
    out = [()]
    for n in group.orders:
        out = [c + (Fraction(a, n),) for c in out for a in range(n)]
    return [FinCharacter(c) for c in out]


def _character_numerators(group: FiniteGroup) -> tuple[np.ndarray, int]:
    """Character ``a`` sends generator ``i`` to ``a_i * (L / n_i) / L``."""
    big = group.exponent()
    scale = np.array([big // n for n in group.orders], dtype=np.int64)
    return group.coords * scale, big


def kernel_fibers(group: FiniteGroup) -> dict[tuple[int, ...], int]:
    """Map each subgroup (as a code tuple) to the number of characters with that kernel."""
    return dict(_kernel_fibers(group))


@lru_cache(maxsize=64)
def _kernel_fibers(group: FiniteGroup, chunk: int = 256) -> Counter:
    weighted, big = _character_numerators(group)
    elements = group.coords.T
    fibers: Counter = Counter()
    for start in range(0, group.size, chunk):
        values = (weighted[start : start + chunk] @ elements) % big
        for row in values == 0:
            fibers[tuple(np.flatnonzero(row).tolist())] += 1
    return fibers


def kernel_fiber_count(group: FiniteGroup, sub: FinSubgroup) -> int:
    validate(sub)
    return _kernel_fibers(group).get(sub.codes, 0)


def character_kernel(group: FiniteGroup, chi: FinCharacter) -> FinSubgroup:
    return _subgroup(group, (c for c in range(group.size) if chi(group.element(c)) == 0))
