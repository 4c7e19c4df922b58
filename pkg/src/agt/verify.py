"""Batch verification suites.

Each suite compares two independent routes (symbolic formula against brute
force, or a closed-form rule against a structural property) and stops at
the first counterexample.  Suites are deterministic in ``(seed, cap, mode)``.
"""

from __future__ import annotations

import random
from math import prod
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .arith import divisors, sigma, totient
from .cardinal import (
    ALEPH0,
    CONTINUUM,
    CardinalMode,
    Ordering,
    Verdict,
    cmp,
    exp2,
    render,
)
from .classify import (
    BOHR,
    GAMMA,
    INDISCRETE,
    NU,
    ClassKind,
    GroupClass,
    TopologyKind,
    TopologyName,
    _EQUALIZERS,
    equalizer_member,
    is_in_class,
)
from .fg import FgGroup, FgSubgroup, enclosing_finite_index, enumerate_finite_index, nu_closure, INFINITE
from .finite import FiniteGroup, all_subgroups, kernel_fibers, quotient_is_cyclic
from .groups import StructuredGroup, direct_sum, hausdorff_reflection, cyc
from .sampling import random_cardinal, random_fg_instance, random_group
from .topology import CardinalInvariantKind, Unsupported, csize, invariant


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    cap: int = 200
    mode: CardinalMode = CardinalMode.ZFC
    samples: int | None = None  # overrides the per-suite default


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


Check = Iterator[str | None]  # yields None per passed case, a message on failure


def order_factorizations(n: int, smallest: int = 2) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of factors >= 2 with product ``n``."""
    if n == 1:
        yield ()
        return
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in order_factorizations(n // d, d):
                yield (d,) + rest


def finite_structured(orders) -> StructuredGroup:
    from .arith import factorize

    return StructuredGroup.of([(cyc(p, e), 1) for n in orders for p, e in factorize(n)])


# -- suites ----------------------------------------------------------------------------


def _finite_lattice(cfg: VerifyConfig) -> Check:
    for n in range(2, cfg.cap + 1):
        for orders in order_factorizations(n):
            group = FiniteGroup(orders, cap=max(cfg.cap, n))
            subs = all_subgroups(group)
            symbolic = csize(finite_structured(orders))
            if render(symbolic) != str(len(subs)):
                yield f"{group}: csize {render(symbolic)} but {len(subs)} subgroups enumerated"
                return
            fibers = kernel_fibers(group)
            if sum(fibers.values()) != group.size:
                yield f"{group}: kernel fibers sum to {sum(fibers.values())}"
                return
            for s in subs:
                expected = totient(s.index) if quotient_is_cyclic(group, s) else 0
                if fibers.get(s.codes, 0) != expected:
                    yield f"{group}: subgroup {s.generators()} has fiber {fibers.get(s.codes, 0)}, expected {expected}"
                    return
            yield None


def _fg_zeta(cfg: VerifyConfig) -> Check:
    for m in range(1, 51):
        got = len(enumerate_finite_index(FgGroup(2), m))
        yield None if got == sigma(m) else f"Z^2 index {m}: {got} subgroups, sigma = {sigma(m)}"
    for m in range(1, 13):
        got = len(enumerate_finite_index(FgGroup(3), m))
        want = sum(d * sigma(d) for d in divisors(m))
        yield None if got == want else f"Z^3 index {m}: {got} subgroups, expected {want}"
    # torsion groups against the finite engine
    for orders in [(2, 2), (2, 4), (3, 9), (2, 6), (4, 4)]:
        subs = all_subgroups(FiniteGroup(orders))
        for m in divisors(prod(orders)):
            got = len(enumerate_finite_index(FgGroup(0, orders), m))
            want = sum(1 for s in subs if s.index == m)
            yield None if got == want else f"Z({orders}) index {m}: {got} lattices vs {want} subgroups"


def _fg_closure(cfg: VerifyConfig) -> Check:
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples or 500):
        group, sub = random_fg_instance(rng)
        if nu_closure(group, sub) != sub:
            yield f"nu_closure moved {sub.basis} in {group}"
            return
        big = enclosing_finite_index(group, sub)
        if not sub.is_subgroup_of(big):
            yield f"{sub.basis} not inside its enclosure {big.basis}"
            return
        idx = big.index()
        if idx is INFINITE or idx == 1:
            yield f"enclosure of {sub.basis} in {group} has index {idx}"
            return
        yield None


_FLIP = {Ordering.LT: Ordering.GT, Ordering.GT: Ordering.LT, Ordering.EQ: Ordering.EQ}


def _cardinal(cfg: VerifyConfig) -> Check:
    rng = random.Random(cfg.seed)
    pool = [random_cardinal(rng) for _ in range(200)]
    for _ in range(cfg.samples or 10_000):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        g = cmp(a, b, CardinalMode.GCH)
        if g is Ordering.UNKNOWN:
            yield f"GCH comparison of {render(a)} and {render(b)} undecided"
            return
        z = cmp(a, b, CardinalMode.ZFC)
        if z is not Ordering.UNKNOWN and z is not g:
            yield f"{render(a)} vs {render(b)}: ZFC {z.name} but GCH {g.name}"
            return
        if cmp(a, exp2(a), CardinalMode.ZFC) is not Ordering.LT:
            yield f"Cantor fails for {render(a)}"
            return
        if cmp(b, a, CardinalMode.GCH) is not _FLIP[g]:
            yield f"antisymmetry fails for {render(a)}, {render(b)}"
            return
        for mode in CardinalMode:
            ab, bc, ac = cmp(a, b, mode), cmp(b, c, mode), cmp(a, c, mode)
            if ab in (Ordering.LT, Ordering.EQ) and bc in (Ordering.LT, Ordering.EQ):
                want = Ordering.EQ if ab is bc is Ordering.EQ else Ordering.LT
                if ac is not want:
                    yield f"transitivity fails ({mode.value}) on {render(a)}, {render(b)}, {render(c)}"
                    return
        yield None


_IMPLIES = [
    (ClassKind.STRONGLY_NON_DIVISIBLE, ClassKind.RESIDUALLY_FINITE),
    (ClassKind.DIVISIBLE, ClassKind.NARROW),
    (ClassKind.DIVISIBLE, ClassKind.ALMOST_DIVISIBLE),
    (ClassKind.FINITE, ClassKind.NARROW),
    (ClassKind.FINITE, ClassKind.ALMOST_DIVISIBLE),
]


def equalizer_classes(p: int) -> list[GroupClass]:
    from .classify import _LOCAL_CLASSES

    kinds = {k for rule in _EQUALIZERS.values() for k in rule.classes}
    return [GroupClass(k, p if k in _LOCAL_CLASSES else None) for k in sorted(kinds, key=lambda k: k.value)]


def _classifier(cfg: VerifyConfig) -> Check:
    rng = random.Random(cfg.seed)
    backing = [c for p in (2, 3) for c in equalizer_classes(p)]
    backing = list(dict.fromkeys(backing))
    for _ in range(cfg.samples or 1000):
        g = random_group(rng)
        for a, b in _IMPLIES:
            if is_in_class(g, GroupClass(a)) is Verdict.TRUE and is_in_class(g, GroupClass(b)) is not Verdict.TRUE:
                yield f"{g}: {a.value} but not {b.value}"
                return
        narrow = is_in_class(g, GroupClass(ClassKind.NARROW)) is Verdict.TRUE
        countable = cmp(csize(g), ALEPH0, CardinalMode.GCH) is not Ordering.GT
        if narrow != countable:
            yield f"{g}: narrow={narrow} but csize = {render(csize(g))}"
            return
        h = random_group(rng)
        both = direct_sum(g, h)
        for c in backing:
            if is_in_class(g, c) is Verdict.TRUE and is_in_class(h, c) is Verdict.TRUE:
                if is_in_class(both, c) is not Verdict.TRUE:
                    yield f"{c} not closed under {g} (+) {h}"
                    return
        yield None


def _dichotomy(cfg: VerifyConfig) -> Check:
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples or 1000):
        g = random_group(rng)
        value = csize(g)
        above = cmp(ALEPH0, value, CardinalMode.GCH) is Ordering.LT
        below = cmp(value, CONTINUUM, CardinalMode.GCH) is Ordering.LT
        yield f"{g}: csize = {render(value)} lies strictly between aleph0 and c" if above and below else None


def _invariants(cfg: VerifyConfig) -> Check:
    rng = random.Random(cfg.seed)
    W, D = CardinalInvariantKind.WEIGHT, CardinalInvariantKind.DENSITY
    for _ in range(cfg.samples or 300):
        g = random_group(rng)
        tops = [GAMMA, NU, BOHR] + [TopologyName(k, p) for p in (2, 3) for k in (TopologyKind.GAMMA_P, TopologyKind.NU_P)]
        for t in tops:
            w, d = invariant(g, t, W).value, invariant(g, t, D).value
            if cmp(w, d, CardinalMode.GCH) is Ordering.LT:
                yield f"{g}: w < d for {t}"
                return
        wg, wp = invariant(g, GAMMA, W).value, invariant(g, BOHR, W).value
        if cmp(wg, wp, CardinalMode.GCH) is Ordering.GT:
            yield f"{g}: w(gamma) > w(bohr)"
            return
        if is_in_class(g, GroupClass(ClassKind.BOUNDED)) is Verdict.TRUE and wg != wp:
            yield f"{g}: bounded but w(gamma) = {render(wg)} != w(bohr) = {render(wp)}"
            return
        yield None


def _equalizers(cfg: VerifyConfig) -> Check:
    """Coinciding topologies must have equal invariants; divisibility tables agree."""
    rng = random.Random(cfg.seed)
    tops = [GAMMA, NU, BOHR] + [TopologyName(k, p) for p in (2, 3) for k in (TopologyKind.GAMMA_P, TopologyKind.NU_P)]
    for _ in range(cfg.samples or 300):
        g = random_group(rng)
        for i, t in enumerate(tops):
            for s in tops[i + 1 :]:
                if equalizer_member(t, s, g) is not Verdict.TRUE:
                    continue
                for k in CardinalInvariantKind:
                    try:
                        a, b = invariant(g, t, k).value, invariant(g, s, k).value
                    except Unsupported:
                        continue
                    if a != b:
                        yield f"{g}: E({t},{s}) holds but {k.value} = {render(a)} vs {render(b)}"
                        return
        div = is_in_class(g, GroupClass(ClassKind.DIVISIBLE)) is Verdict.TRUE
        if (equalizer_member(GAMMA, INDISCRETE, g) is Verdict.TRUE) != div or hausdorff_reflection(g).is_zero != div:
            yield f"{g}: E(gamma, indiscrete), G/G^1 = 0 and divisibility disagree"
            return
        yield None


SUITES: dict[str, Callable[[VerifyConfig], Check]] = {
    "finite-lattice": _finite_lattice,
    "fg-zeta": _fg_zeta,
    "fg-closure": _fg_closure,
    "cardinal": _cardinal,
    "classifier": _classifier,
    "dichotomy": _dichotomy,
    "invariants": _invariants,
    "equalizers": _equalizers,
}


def run_suite(name: str, cfg: VerifyConfig = VerifyConfig()) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    result = SuiteResult(name)
    for outcome in SUITES[name](cfg):
        result.checked += 1
        if outcome is not None:
            result.counterexample = outcome
            break
    return result
