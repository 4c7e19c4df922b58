"""Finitely generated abelian groups ``Z^n + Z(t_1) + ... + Z(t_r)``.

A subgroup ``H`` is stored as the Hermite normal form of its preimage
``L`` in ``Z^(n+r)``.  ``L`` always contains the relation lattice
``R = 0 + t_1 Z + ... + t_r Z``, so ``G/H = Z^(n+r)/L`` and every quotient
question becomes a Smith normal form computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import prod
from typing import Iterable, Sequence

from .arith import divisors, factorize
from .finite import DEFAULT_CAP, FinSubgroup, FiniteGroup, span
from .lattice import Matrix, hnf, identity, in_lattice, pivots, snf, snf_decomposition


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    __str__ = __repr__


INFINITE = _Infinite()
IndexValue = "int | _Infinite"


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FgGroup:
    free_rank: int
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(t) for t in self.torsion_orders))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(t < 2 for t in self.torsion_orders):
            raise ValueError("torsion orders must be at least 2")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    def relations(self) -> Matrix:
        n = self.free_rank
        return [
            [t if j == n + i else 0 for j in range(self.dim)] for i, t in enumerate(self.torsion_orders)
        ]

    def reduce(self, vector: Sequence[int]) -> tuple[int, ...]:
        n = self.free_rank
        if len(vector) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(vector)}")
        return tuple(int(x) if j < n else int(x) % self.torsion_orders[j - n] for j, x in enumerate(vector))

    def __str__(self) -> str:
        parts = [] if not self.free_rank else ["Z" if self.free_rank == 1 else f"Z^{self.free_rank}"]
        parts += [f"Z({t})" for t in self.torsion_orders]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class FgSubgroup:
    group: FgGroup
    basis: tuple[tuple[int, ...], ...]  # HNF of the preimage lattice

    @classmethod
    def generated(cls, group: FgGroup, generators: Iterable[Sequence[int]]) -> "FgSubgroup":
        rows = [list(group.reduce(g)) for g in generators] + group.relations()
        return cls._of(group, rows)

    @classmethod
    def _of(cls, group: FgGroup, rows: Matrix) -> "FgSubgroup":
        if not rows:
            return cls(group, ())
        return cls(group, tuple(tuple(r) for r in hnf(rows)))

    @classmethod
    def whole(cls, group: FgGroup) -> "FgSubgroup":
        return cls._of(group, identity(group.dim))

    @classmethod
    def multiple(cls, group: FgGroup, m: int) -> "FgSubgroup":
        """``mG``."""
        return cls._of(group, [[m * x for x in row] for row in identity(group.dim)] + group.relations())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, element: Sequence[int]) -> bool:
        return in_lattice(self.basis, self.group.reduce(element)) if self.basis else not any(self.group.reduce(element))

    def is_subgroup_of(self, other: "FgSubgroup") -> bool:
        return all(other.contains(row) for row in self.basis)

    def index(self):
        """``[G : H]`` as an int, or ``INFINITE`` when ``G/H`` has a free part."""
        if self.rank < self.group.dim:
            return INFINITE
        return prod(self.basis[i][i] for i in range(self.rank))

    def quotient_invariants(self) -> tuple[int, list[int]]:
        """``G/H`` as (free rank, invariant factors greater than 1)."""
        if not self.basis:
            return self.group.dim, []
        _, factors = snf(self.basis)
        return self.group.dim - len(factors), [d for d in factors if d > 1]

    def plus(self, other: "FgSubgroup") -> "FgSubgroup":
        return FgSubgroup._of(self.group, [list(r) for r in self.basis + other.basis])

    def plus_multiple(self, m: int) -> "FgSubgroup":
        """``H + mG``."""
        return self.plus(FgSubgroup.multiple(self.group, m))

    # component views

    @property
    def free_part(self) -> Matrix:
        """HNF of the projection of ``H`` to the free coordinates."""
        n = self.group.free_rank
        return [list(r[:n]) for r in self.basis if any(r[:n])]

    @property
    def torsion_part(self) -> FinSubgroup:
        """``H`` intersected with the torsion subgroup."""
        n = self.group.free_rank
        tgroup = FiniteGroup(self.group.torsion_orders, cap=max(DEFAULT_CAP, prod(self.group.torsion_orders)))
        rows = [r[n:] for r, j in zip(self.basis, pivots(self.basis)) if j >= n]
        return span(tgroup, rows)

    @property
    def mixing_part(self) -> list[tuple[int, ...]]:
        """Torsion coordinates attached to each free-part generator."""
        n = self.group.free_rank
        return [self.group.reduce((0,) * n + r[n:])[n:] for r, j in zip(self.basis, pivots(self.basis)) if j < n]


def index(group: FgGroup, sub: FgSubgroup):
    if sub.group != group:
        raise ValueError("subgroup belongs to a different group")
    return sub.index()


def _ordered_factorizations(m: int, length: int):
    if length == 0:
        if m == 1:
            yield ()
        return
    for d in divisors(m):
        for rest in _ordered_factorizations(m // d, length - 1):
            yield (d,) + rest


def enumerate_finite_index(group: FgGroup, m: int, budget: int = 200_000) -> list[FgSubgroup]:
    """All subgroups of index exactly ``m``.

    Walks every full-rank HNF of determinant ``m`` in ``Z^(n+r)`` and keeps
    those containing the torsion relations.
    """
    if m < 1:
        raise ValueError("index must be positive")
    dim = group.dim
    rels = group.relations()
    out = []
    examined = 0
    for diag in _ordered_factorizations(m, dim):
        # row i may carry any residue mod diag[j] in each column j > i
        slots = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
        for values in iproduct(*(range(diag[j]) for _, j in slots)):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"more than {budget} candidate lattices")
            rows = [[0] * dim for _ in range(dim)]
            for i in range(dim):
                rows[i][i] = diag[i]
            for (i, j), v in zip(slots, values):
                rows[i][j] = v
            if all(in_lattice(rows, r) for r in rels):
                out.append(FgSubgroup(group, tuple(tuple(r) for r in rows)))
    if dim == 0 and m == 1:
        out.append(FgSubgroup(group, ()))
    return out


def nu_closure(group: FgGroup, sub: FgSubgroup) -> FgSubgroup:
    """``intersection over m of (H + mG)``, evaluated in Smith coordinates.

    With ``U B V = D`` the preimage lattice is spanned by ``d_i f_i`` where
    ``f_i`` are the rows of ``V^-1``, a basis of ``Z^(n+r)``.  In these
    coordinates ``H + mG`` is ``gcd(d_i, m) Z`` in slot ``i`` (``mZ`` for the
    empty slots), and the intersection over all ``m`` is ``d_i Z`` or ``0``.
    """
    if sub.group != group:
        raise ValueError("subgroup belongs to a different group")
    if not sub.basis:
        return sub
    d, _, _, vinv = snf_decomposition(sub.basis)
    rows = []
    for i in range(min(len(d), group.dim)):
        di = d[i][i]
        if di:
            rows.append([di * x for x in vinv[i]])
    return FgSubgroup._of(group, rows + group.relations())


def separating_modulus(group: FgGroup, sub: FgSubgroup, element: Sequence[int], limit: int = 10_000) -> int | None:
    """Least ``m`` with ``x`` outside ``H + mG``, or None if none up to ``limit``."""
    for m in range(1, limit + 1):
        if not sub.plus_multiple(m).contains(element):
            return m
    return None


def enclosing_finite_index(group: FgGroup, sub: FgSubgroup) -> FgSubgroup:
    """A proper finite-index subgroup ``H + pG`` containing ``H``."""
    rank, torsion = sub.quotient_invariants()
    if rank == 0 and not torsion:
        raise ValueError("H = G has no proper enclosing subgroup")
    # a free part in G/H makes p = 2 work; otherwise p must divide |G/H|
    p = 2 if rank else factorize(prod(torsion))[0][0]
    return sub.plus_multiple(p)


def parse_matrix(text: str) -> Matrix:
    import json

    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed matrix at offset {exc.pos}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("matrix must be a list of rows")
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows differ in length")
    if not all(isinstance(x, int) for r in rows for x in r):
        raise ValueError("matrix entries must be integers")
    return rows
