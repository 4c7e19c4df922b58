"""Abelian groups as formal direct sums of atoms with cardinal multiplicities.

The atom universe is closed: Z, Z(p^k), Z(p^inf), Q, the p-adic integers
J_p, and T_p, the torsion part of the product of all Z(p^n).  Inside this
class the first Ulm subgroup equals the divisible part, and every invariant
is additive over summands, so everything below is computed atomwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from functools import reduce
from math import lcm
from typing import Iterable

from .arith import factorize, is_prime, next_prime
from .cardinal import (
    ALEPH0,
    CONTINUUM,
    ONE,
    ZERO,
    Cardinal,
    Finite,
    add,
    mul,
    normalize,
    sup,
)


class AtomKind(IntEnum):
    Z = 0
    CYC = 1
    PRUFER = 2
    Q = 3
    PADIC = 4
    TORPROD = 5


@dataclass(frozen=True, order=True)
class Atom:
    """One indecomposable building block; field order gives the canonical sort."""

    kind: AtomKind
    p: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind in (AtomKind.Z, AtomKind.Q):
            if self.p or self.k:
                raise ValueError(f"{self.kind.name} takes no parameters")
            return
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind is AtomKind.CYC:
            if self.k < 1:
                raise ValueError("cyclic exponent must be positive")
        elif self.k:
            raise ValueError(f"{self.kind.name} takes no exponent")

    @property
    def is_divisible(self) -> bool:
        return self.kind in (AtomKind.PRUFER, AtomKind.Q)

    @property
    def is_torsion(self) -> bool:
        return self.kind in (AtomKind.CYC, AtomKind.PRUFER, AtomKind.TORPROD)

    @property
    def is_finite(self) -> bool:
        return self.kind is AtomKind.CYC

    @property
    def order(self) -> int:
        if self.kind is not AtomKind.CYC:
            raise ValueError("only cyclic atoms have a finite order")
        return self.p**self.k

    def __repr__(self) -> str:
        if self.kind in (AtomKind.Z, AtomKind.Q):
            return self.kind.name
        if self.kind is AtomKind.CYC:
            return f"Cyc({self.p},{self.k})"
        return f"{self.kind.name.title()}({self.p})"


Z = Atom(AtomKind.Z)
Q = Atom(AtomKind.Q)


def cyc(p: int, k: int = 1) -> Atom:
    return Atom(AtomKind.CYC, p, k)


def prufer(p: int) -> Atom:
    return Atom(AtomKind.PRUFER, p)


def padic(p: int) -> Atom:
    return Atom(AtomKind.PADIC, p)


def torprod(p: int) -> Atom:
    return Atom(AtomKind.TORPROD, p)


@dataclass(frozen=True)
class StructuredGroup:
    """Canonical finite map ``Atom -> multiplicity`` stored as a sorted tuple."""

    summands: tuple[tuple[Atom, Cardinal], ...] = ()

    @classmethod
    def of(cls, terms: Iterable[tuple[Atom, Cardinal | int]]) -> "StructuredGroup":
        merged: dict[Atom, Cardinal] = {}
        for atom, mult in terms:
            if isinstance(mult, int):
                mult = Finite(mult)
            mult = normalize(mult)
            if mult == ZERO:
                raise ValueError(f"multiplicity of {atom!r} must be at least 1")
            merged[atom] = add(merged[atom], mult) if atom in merged else mult
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def atom(cls, atom: Atom, mult: Cardinal | int = 1) -> "StructuredGroup":
        return cls.of([(atom, mult)])

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a, _ in self.summands)

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def multiplicity(self, atom: Atom) -> Cardinal:
        return dict(self.summands).get(atom, ZERO)

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({a.p for a in self.atoms if a.p}))

    def select(self, keep) -> "StructuredGroup":
        return StructuredGroup(tuple((a, m) for a, m in self.summands if keep(a)))

    def scale(self, mult: Cardinal) -> "StructuredGroup":
        """Direct sum of ``mult`` copies."""
        if mult == ZERO:
            return ZERO_GROUP
        return StructuredGroup(tuple((a, mul(m, mult)) for a, m in self.summands))

    def __str__(self) -> str:
        from .parse import render_group

        return render_group(self)


ZERO_GROUP = StructuredGroup()


def direct_sum(*groups: StructuredGroup) -> StructuredGroup:
    return StructuredGroup.of(t for g in groups for t in g.summands)


# -- the per-atom table -----------------------------------------------------------


@dataclass(frozen=True)
class AtomRow:
    size: Cardinal
    rank0: Cardinal
    divisible: bool


def atom_row(a: Atom) -> AtomRow:
    kind = a.kind
    if kind is AtomKind.Z:
        return AtomRow(ALEPH0, ONE, False)
    if kind is AtomKind.CYC:
        return AtomRow(Finite(a.order), ZERO, False)
    if kind is AtomKind.PRUFER:
        return AtomRow(ALEPH0, ZERO, True)
    if kind is AtomKind.Q:
        return AtomRow(ALEPH0, ONE, True)
    # J_p and T_p both have the size of the continuum
    return AtomRow(CONTINUUM, CONTINUUM if kind is AtomKind.PADIC else ZERO, False)


def atom_rank_p(a: Atom, p: int) -> Cardinal:
    """Dimension of ``a[p]`` over Z(p)."""
    if a.p != p:
        return ZERO
    if a.kind in (AtomKind.CYC, AtomKind.PRUFER):
        return ONE
    if a.kind is AtomKind.TORPROD:
        return CONTINUUM
    return ZERO  # J_p is torsion-free


def atom_quotient(a: Atom, p: int, k: int = 1) -> StructuredGroup:
    """``a / p^k a`` for a prime ``p``."""
    kind = a.kind
    if kind is AtomKind.Z:
        return StructuredGroup.atom(cyc(p, k))
    if a.is_divisible or a.p != p:
        # divisible atoms vanish; p acts invertibly on the other-prime atoms
        return ZERO_GROUP
    if kind is AtomKind.CYC:
        return StructuredGroup.atom(cyc(p, min(a.k, k)))
    if kind is AtomKind.PADIC:
        return StructuredGroup.atom(cyc(p, k))
    # T_p / p^k T_p: bounded elements are eventually p^k-divisible coordinatewise
    terms = [(cyc(p, j), ONE) for j in range(1, k)] + [(cyc(p, k), ALEPH0)]
    return StructuredGroup.of(terms)


def atom_in_ulm_p(a: Atom, p: int) -> bool:
    """Whether ``a`` equals its own ``p``-Ulm subgroup (otherwise that subgroup is 0)."""
    if a.is_divisible:
        return True
    if a.kind is AtomKind.Z:
        return False
    return a.p != p


# -- invariants -------------------------------------------------------------------


def _copies_size(size: Cardinal, mult: Cardinal) -> Cardinal:
    if isinstance(size, Finite) and isinstance(mult, Finite):
        return Finite(size.n**mult.n)
    return mul(size, mult)


def group_size(g: StructuredGroup) -> Cardinal:
    return reduce(mul, (_copies_size(atom_row(a).size, m) for a, m in g), ONE)


def _weighted(g: StructuredGroup, value) -> Cardinal:
    return reduce(add, (mul(m, value(a)) for a, m in g), ZERO)


def generic_prime(g: StructuredGroup) -> int:
    """Smallest prime not occurring in ``g``; it stands in for all such primes."""
    used = set(g.primes())
    p = 2
    while p in used:
        p = next_prime(p)
    return p


def relevant_primes(g: StructuredGroup) -> tuple[int, ...]:
    return g.primes() + (generic_prime(g),)


@dataclass(frozen=True)
class InvariantsRecord:
    group: StructuredGroup
    size: Cardinal
    rank0: Cardinal
    divisible_part: StructuredGroup
    torsion_part: StructuredGroup
    ulm: StructuredGroup
    exponent: int | None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def rank_p(self, p: int) -> Cardinal:
        return _weighted(self.group, lambda a: atom_rank_p(a, p))

    def quotient_mod(self, m: int) -> StructuredGroup:
        """``G / mG``, assembled from the prime-power quotients."""
        if m < 1:
            raise ValueError("modulus must be positive")
        if m not in self._cache:
            parts = [
                atom_quotient(a, p, k).scale(mult)
                for p, k in factorize(m)
                for a, mult in self.group
            ]
            self._cache[m] = direct_sum(*parts)
        return self._cache[m]

    def quotient_size(self, m: int) -> Cardinal:
        return group_size(self.quotient_mod(m))

    def ulm_p(self, p: int) -> StructuredGroup:
        return self.group.select(lambda a: atom_in_ulm_p(a, p))


def exponent(g: StructuredGroup) -> int | None:
    if not all(a.is_finite for a in g.atoms):
        return None
    return lcm(1, *(a.order for a in g.atoms))


def invariants(g: StructuredGroup) -> InvariantsRecord:
    divisible = g.select(lambda a: a.is_divisible)
    return InvariantsRecord(
        group=g,
        size=group_size(g),
        rank0=_weighted(g, lambda a: atom_row(a).rank0),
        divisible_part=divisible,
        torsion_part=g.select(lambda a: a.is_torsion),
        ulm=divisible,
        exponent=exponent(g),
    )


def hausdorff_reflection(g: StructuredGroup) -> StructuredGroup:
    """``G / G^1``: strip the divisible atoms."""
    return g.select(lambda a: not a.is_divisible)


def p_reflection(g: StructuredGroup, p: int) -> StructuredGroup:
    """``G / G^1_p``."""
    return g.select(lambda a: not atom_in_ulm_p(a, p))


def is_finite_group(g: StructuredGroup) -> bool:
    return all(a.is_finite and isinstance(m, Finite) for a, m in g)


def finite_orders(g: StructuredGroup) -> list[int]:
    """Cyclic factor orders of a finite structured group, one per copy."""
    if not is_finite_group(g):
        raise ValueError("group is not finite")
    return [a.order for a, m in g for _ in range(m.n)]


def size_sup_over_primes(g: StructuredGroup, value) -> Cardinal:
    """``sup`` of ``value(p)`` over all primes, via the relevant primes."""
    return sup(value(p) for p in relevant_primes(g))
