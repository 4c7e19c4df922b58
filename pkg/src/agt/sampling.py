"""Seeded random generators for sweeps and verification suites."""

from __future__ import annotations

import random

from .cardinal import Aleph, Cardinal, Exp, Finite, Sup, normalize
from .groups import Atom, StructuredGroup, cyc, padic, prufer, torprod, Z, Q

PRIMES = (2, 3, 5)


def random_cardinal(rng: random.Random, depth: int = 4, max_index: int = 3) -> Cardinal:
    """A normalized cardinal expression of nesting depth at most ``depth``."""
    return normalize(_raw_cardinal(rng, depth, max_index))


def _raw_cardinal(rng: random.Random, depth: int, max_index: int) -> Cardinal:
    roll = rng.random()
    if depth <= 1 or roll < 0.35:
        if rng.random() < 0.2:
            return Finite(rng.randint(0, 9))
        return Aleph(rng.randint(0, max_index))
    if roll < 0.8:
        inner = _raw_cardinal(rng, depth - 1, max_index)
        if isinstance(normalize(inner), Finite) and depth > 2:
            # keep finite towers small
            inner = Aleph(rng.randint(0, max_index))
        return Exp(inner)
    return Sup(frozenset(_raw_cardinal(rng, depth - 1, max_index) for _ in range(2)))


def random_multiplicity(rng: random.Random) -> Cardinal:
    roll = rng.random()
    if roll < 0.6:
        return Finite(rng.randint(1, 3))
    if roll < 0.8:
        return Aleph(0)
    if roll < 0.9:
        return Aleph(1)
    return Exp(Aleph(0))


def random_atom(rng: random.Random) -> Atom:
    kind = rng.choice("ZCCCPQJT")
    p = rng.choice(PRIMES)
    if kind == "Z":
        return Z
    if kind == "C":
        return cyc(p, rng.randint(1, 3))
    if kind == "P":
        return prufer(p)
    if kind == "Q":
        return Q
    if kind == "J":
        return padic(p)
    return torprod(p)


def random_group(rng: random.Random, max_terms: int = 4) -> StructuredGroup:
    terms = [(random_atom(rng), normalize(random_multiplicity(rng))) for _ in range(rng.randint(0, max_terms))]
    return StructuredGroup.of(terms)


def random_fg_instance(rng: random.Random):
    """A finitely generated group with a random proper subgroup."""
    from .fg import FgGroup, FgSubgroup

    while True:
        rank = rng.randint(0, 3)
        torsion = tuple(rng.choice((2, 3, 4, 6, 9)) for _ in range(rng.randint(0, 2)))
        if rank == 0 and not torsion:
            continue
        group = FgGroup(rank, torsion)
        gens = []
        for _ in range(rng.randint(0, 3)):
            free = [rng.randint(-6, 6) for _ in range(rank)]
            tors = [rng.randrange(n) for n in torsion]
            gens.append(free + tors)
        sub = FgSubgroup.generated(group, gens)
        if sub.index() != 1:
            return group, sub
