"""Group classes, equalizers of functorial topologies, and Hausdorff classes.

Every predicate reads off the atom decomposition.  A few facts used below:

* ``G / pG`` is finite iff Z, Z(p^k) and J_p occur with finite multiplicity
  and T_p does not occur.
* ``G`` maps onto Z(p^inf) iff it has one of Z(p^inf), Q, J_q, T_p as a
  summand or infinitely many copies of Z.  Every other atom has bounded
  image in Z(p^inf).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import factorize, is_prime
from .cardinal import ALEPH0, Finite, Ordering, Verdict, cmp
from .groups import (
    AtomKind,
    StructuredGroup,
    hausdorff_reflection,
    invariants,
    is_finite_group,
    relevant_primes,
)


class ClassKind(Enum):
    DIVISIBLE = "divisible"
    BOUNDED = "bounded"
    BOUNDED_P = "bounded_p"
    FINITE = "finite"
    FINITE_P = "finite_p"
    COUNTABLE = "countable"
    TORSION_NO_P = "torsion_no_p"
    RESIDUALLY_FINITE = "residually_finite"
    RESIDUALLY_P_FINITE = "residually_p_finite"
    NARROW = "narrow"
    NARROW_P = "narrow_p"
    ALMOST_DIVISIBLE = "almost_divisible"
    STRONGLY_NON_DIVISIBLE = "strongly_non_divisible"
    P_DIVISIBLE = "p_divisible"
    ZERO = "zero"
    FINITE_RANK_FREE = "finite_rank_free"
    NO_PRUFER_QUOTIENT = "no_prufer_quotient"


_LOCAL_CLASSES = {
    ClassKind.BOUNDED_P,
    ClassKind.FINITE_P,
    ClassKind.TORSION_NO_P,
    ClassKind.RESIDUALLY_P_FINITE,
    ClassKind.NARROW_P,
    ClassKind.P_DIVISIBLE,
    ClassKind.NO_PRUFER_QUOTIENT,
}


@dataclass(frozen=True)
class GroupClass:
    kind: ClassKind
    p: int | None = None

    def __post_init__(self):
        if (self.kind in _LOCAL_CLASSES) != (self.p is not None):
            raise ValueError(f"class {self.kind.value} {'needs' if self.p is None else 'takes no'} prime")

    def __str__(self) -> str:
        return self.kind.value if self.p is None else f"{self.kind.value}:{self.p}"


class TopologyKind(Enum):
    GAMMA = "gamma"
    NU = "nu"
    BOHR = "bohr"
    GAMMA_P = "gamma_p"
    NU_P = "nu_p"
    BOHR_P = "bohr_p"
    DISCRETE = "discrete"
    INDISCRETE = "indiscrete"
    PRO_COUNTABLE = "rho"
    ALEPH_BOUNDED = "gbound"


_LOCAL_TOPOLOGIES = {TopologyKind.GAMMA_P, TopologyKind.NU_P, TopologyKind.BOHR_P}


@dataclass(frozen=True)
class TopologyName:
    kind: TopologyKind
    p: int | None = None

    def __post_init__(self):
        if (self.kind in _LOCAL_TOPOLOGIES) != (self.p is not None):
            raise ValueError(f"topology {self.kind.value} {'needs' if self.p is None else 'takes no'} prime")

    @property
    def is_local(self) -> bool:
        return self.p is not None

    def __str__(self) -> str:
        return self.kind.value if self.p is None else f"{self.kind.value}:{self.p}"


def _split_name(text: str) -> tuple[str, int | None]:
    base, sep, tail = text.strip().partition(":")
    if not sep:
        return base, None
    if not tail.isdigit() or not is_prime(int(tail)):
        raise ValueError(f"{tail!r} is not a prime")
    return base, int(tail)


def parse_topology(text: str) -> TopologyName:
    base, p = _split_name(text)
    try:
        kind = TopologyKind(base)
    except ValueError:
        names = ", ".join(k.value for k in TopologyKind)
        raise ValueError(f"unknown topology {base!r}; expected one of {names}") from None
    return TopologyName(kind, p)


def parse_class(text: str) -> GroupClass:
    base, p = _split_name(text)
    try:
        kind = ClassKind(base)
    except ValueError:
        names = ", ".join(k.value for k in ClassKind)
        raise ValueError(f"unknown class {base!r}; expected one of {names}") from None
    return GroupClass(kind, p)


GAMMA = TopologyName(TopologyKind.GAMMA)
NU = TopologyName(TopologyKind.NU)
BOHR = TopologyName(TopologyKind.BOHR)
DISCRETE = TopologyName(TopologyKind.DISCRETE)
INDISCRETE = TopologyName(TopologyKind.INDISCRETE)
RHO = TopologyName(TopologyKind.PRO_COUNTABLE)
GBOUND = TopologyName(TopologyKind.ALEPH_BOUNDED)


def gamma_p(p: int) -> TopologyName:
    return TopologyName(TopologyKind.GAMMA_P, p)


def nu_p(p: int) -> TopologyName:
    return TopologyName(TopologyKind.NU_P, p)


def bohr_p(p: int) -> TopologyName:
    return TopologyName(TopologyKind.BOHR_P, p)


# -- class predicates ---------------------------------------------------------------


def _finite_mult(m) -> bool:
    return isinstance(m, Finite)


def _narrow_at(g: StructuredGroup, p: int) -> bool:
    for a, m in g:
        if a.kind is AtomKind.TORPROD and a.p == p:
            return False
        if a.kind is AtomKind.Z or (a.kind in (AtomKind.CYC, AtomKind.PADIC) and a.p == p):
            if not _finite_mult(m):
                return False
    return True


def _maps_onto_prufer(g: StructuredGroup, p: int) -> bool:
    for a, m in g:
        if a.kind is AtomKind.Z and not _finite_mult(m):
            return True
        if a.kind in (AtomKind.Q, AtomKind.PADIC):
            return True
        if a.kind in (AtomKind.PRUFER, AtomKind.TORPROD) and a.p == p:
            return True
    return False


def _membership(g: StructuredGroup, c: GroupClass) -> bool:
    kind, p = c.kind, c.p
    atoms = g.atoms
    if kind is ClassKind.ZERO:
        return g.is_zero
    if kind is ClassKind.DIVISIBLE:
        return all(a.is_divisible for a in atoms)
    if kind is ClassKind.BOUNDED:
        return all(a.kind is AtomKind.CYC for a in atoms)
    if kind is ClassKind.BOUNDED_P:
        return all(a.kind is AtomKind.CYC and a.p == p for a in atoms)
    if kind is ClassKind.FINITE:
        return is_finite_group(g)
    if kind is ClassKind.FINITE_P:
        return is_finite_group(g) and all(a.p == p for a in atoms)
    if kind is ClassKind.COUNTABLE:
        return cmp(invariants(g).size, ALEPH0) is not Ordering.GT
    if kind is ClassKind.TORSION_NO_P:
        return all(a.is_torsion and a.p != p for a in atoms)
    if kind is ClassKind.RESIDUALLY_FINITE:
        return invariants(g).ulm.is_zero
    if kind is ClassKind.RESIDUALLY_P_FINITE:
        return invariants(g).ulm_p(p).is_zero
    if kind is ClassKind.NARROW:
        return all(_narrow_at(g, q) for q in relevant_primes(g))
    if kind is ClassKind.NARROW_P:
        return _narrow_at(g, p)
    if kind is ClassKind.ALMOST_DIVISIBLE:
        return is_finite_group(hausdorff_reflection(g))
    if kind is ClassKind.STRONGLY_NON_DIVISIBLE:
        return all(
            a.kind is AtomKind.CYC or (a.kind is AtomKind.Z and _finite_mult(m)) for a, m in g
        )
    if kind is ClassKind.P_DIVISIBLE:
        return invariants(g).quotient_mod(p).is_zero
    if kind is ClassKind.FINITE_RANK_FREE:
        return all(a.kind is AtomKind.Z and _finite_mult(m) for a, m in g)
    if kind is ClassKind.NO_PRUFER_QUOTIENT:
        return not _maps_onto_prufer(g, p)
    raise ValueError(f"unhandled class {c}")


def is_in_class(g: StructuredGroup, c: GroupClass) -> Verdict:
    return Verdict.of(_membership(g, c))


# -- equalizers ----------------------------------------------------------------------

G_, N_, P_ = TopologyKind.GAMMA, TopologyKind.NU, TopologyKind.BOHR
GP, NP, PP = TopologyKind.GAMMA_P, TopologyKind.NU_P, TopologyKind.BOHR_P
D_, I_ = TopologyKind.DISCRETE, TopologyKind.INDISCRETE
RHO_, GB_ = TopologyKind.PRO_COUNTABLE, TopologyKind.ALEPH_BOUNDED


@dataclass(frozen=True)
class EqualizerRule:
    classes: tuple[ClassKind, ...]  # conjunction
    note: str = ""

    def describe(self, p: int | None) -> str:
        return " and ".join(str(GroupClass(k, p if k in _LOCAL_CLASSES else None)) for k in self.classes)


def _rule(*classes: ClassKind, note: str = "") -> EqualizerRule:
    return EqualizerRule(tuple(classes), note)


_EQUALIZERS: dict[frozenset, EqualizerRule] = {
    frozenset({G_, N_}): _rule(ClassKind.NARROW),
    # nu = P forces gamma = inf(nu, P) = P, hence bounded, hence nu discrete
    frozenset({N_, P_}): _rule(
        ClassKind.FINITE, note="Z is narrow yet nu_Z is metrizable and P_Z is not"
    ),
    frozenset({G_, P_}): _rule(ClassKind.BOUNDED),
    frozenset({N_, D_}): _rule(ClassKind.BOUNDED),
    frozenset({G_, D_}): _rule(ClassKind.FINITE),
    frozenset({P_, D_}): _rule(ClassKind.FINITE),
    frozenset({N_, I_}): _rule(ClassKind.DIVISIBLE),
    frozenset({G_, I_}): _rule(ClassKind.DIVISIBLE),
    frozenset({D_, I_}): _rule(ClassKind.ZERO),
    frozenset({RHO_, I_}): _rule(ClassKind.ZERO),
    frozenset({GB_, I_}): _rule(ClassKind.ZERO),
    frozenset({GB_, D_}): _rule(ClassKind.COUNTABLE),
    frozenset({RHO_, D_}): _rule(ClassKind.COUNTABLE),
    frozenset({NP, D_}): _rule(ClassKind.BOUNDED_P),
    frozenset({GP, D_}): _rule(ClassKind.FINITE_P),
    frozenset({PP, D_}): _rule(ClassKind.FINITE_P),
    frozenset({GP, P_}): _rule(ClassKind.BOUNDED_P),
    frozenset({GP, NP}): _rule(ClassKind.NARROW_P),
    # characters onto Z(p^inf) are never continuous for nu^p or gamma^p
    frozenset({NP, PP}): _rule(
        ClassKind.NARROW_P,
        ClassKind.NO_PRUFER_QUOTIENT,
        note="Z(p^inf) is p-narrow yet nu^p is indiscrete and P^p is not",
    ),
    frozenset({GP, PP}): _rule(
        ClassKind.NO_PRUFER_QUOTIENT,
        note="gamma^p and P^p are both the p-adic topology on Z",
    ),
    frozenset({NP, I_}): _rule(ClassKind.P_DIVISIBLE),
    frozenset({GP, I_}): _rule(ClassKind.P_DIVISIBLE),
    frozenset({PP, I_}): _rule(ClassKind.TORSION_NO_P),
}


@dataclass(frozen=True)
class EqualizerAnswer:
    verdict: Verdict
    rule: str
    note: str = ""


def equalizer_rule(t: TopologyName, s: TopologyName) -> tuple[EqualizerRule | None, int | None, str]:
    """The table rule for an unordered pair, its prime, and a note when absent."""
    primes = {x.p for x in (t, s) if x.p is not None}
    if len(primes) > 1:
        return None, None, "pairs of p-local topologies at different primes are not tabulated"
    p = primes.pop() if primes else None
    rule = _EQUALIZERS.get(frozenset({t.kind, s.kind}))
    if rule is None:
        if {t.kind, s.kind} == {GB_, RHO_}:
            return None, p, "the relation between gbound and rho is an open problem"
        return None, p, "this pair is not settled by the equalizer table"
    return rule, p, rule.note


def equalizer(t: TopologyName, s: TopologyName, g: StructuredGroup) -> EqualizerAnswer:
    if t == s:
        return EqualizerAnswer(Verdict.TRUE, "reflexive")
    rule, p, note = equalizer_rule(t, s)
    if rule is None:
        return EqualizerAnswer(Verdict.UNKNOWN, "none", note)
    ok = all(_membership(g, GroupClass(k, p if k in _LOCAL_CLASSES else None)) for k in rule.classes)
    return EqualizerAnswer(Verdict.of(ok), rule.describe(p), note)


def equalizer_member(t: TopologyName, s: TopologyName, g: StructuredGroup) -> Verdict:
    return equalizer(t, s, g).verdict


# -- Hausdorff classes and base membership -------------------------------------------


def hausdorff_class_member(t: TopologyName, g: StructuredGroup) -> Verdict:
    if t.kind in (P_, RHO_, GB_):
        return Verdict.TRUE
    if t.kind in (G_, N_):
        return is_in_class(g, GroupClass(ClassKind.RESIDUALLY_FINITE))
    if t.kind in (GP, NP):
        return is_in_class(g, GroupClass(ClassKind.RESIDUALLY_P_FINITE, t.p))
    raise ValueError(f"no Hausdorff class is tabulated for {t}")


_BASE_CLASSES = {
    ClassKind.FINITE,
    ClassKind.FINITE_P,
    ClassKind.BOUNDED,
    ClassKind.BOUNDED_P,
    ClassKind.COUNTABLE,
    ClassKind.FINITE_RANK_FREE,
}


def class_topology_base_member(c: GroupClass, group, sub) -> bool:
    """Whether ``G/N`` lies in the discrete class ``c`` (f.g. ``G``)."""
    if c.kind not in _BASE_CLASSES:
        raise ValueError(f"{c} is not a discrete class with a base test")
    if sub.group != group:
        raise ValueError("subgroup belongs to a different group")
    rank, torsion = sub.quotient_invariants()
    if c.kind is ClassKind.COUNTABLE:
        return True
    if c.kind is ClassKind.FINITE_RANK_FREE:
        return not torsion
    if rank:
        return False
    if c.kind in (ClassKind.FINITE_P, ClassKind.BOUNDED_P):
        return all(p == c.p for d in torsion for p, _ in factorize(d))
    return True
