"""Cardinal invariants (weight, character, density) of functorial topologies.

Values come from closed-form cardinal formulas in the atom data; the finite
cases use the closed-form subgroup count of a finite abelian p-group

    N(lam, mu; p) = prod_i p^(mu'_{i+1} (lam'_i - mu'_i))
                    * binom(lam'_i - mu'_{i+1}, mu'_i - mu'_{i+1})_p

summed over partitions ``mu`` contained in ``lam`` (primes are multiplicative).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product as iproduct
from math import prod

from .arith import factorize
from .cardinal import (
    ALEPH0,
    ONE,
    Cardinal,
    CardinalMode,
    Finite,
    Verdict,
    exp2,
    is_infinite,
    leq_log,
    mul,
    normalize,
)
from .classify import ClassKind, GroupClass, TopologyKind, TopologyName, is_in_class
from .groups import (
    AtomKind,
    StructuredGroup,
    hausdorff_reflection,
    invariants,
    is_finite_group,
    p_reflection,
    size_sup_over_primes,
)


class CardinalInvariantKind(Enum):
    WEIGHT = "w"
    CHARACTER = "chi"
    DENSITY = "d"


class Unsupported(ValueError):
    """The (topology, invariant) pair has no implemented formula."""


@dataclass(frozen=True)
class InvariantResult:
    value: Cardinal
    basis: str
    mode: CardinalMode


# -- finite subgroup counting --------------------------------------------------------


def _conjugate(partition: tuple[int, ...]) -> list[int]:
    if not partition:
        return []
    return [sum(1 for part in partition if part > i) for i in range(partition[0])]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def _subpartitions(lam: tuple[int, ...]):
    """All partitions ``mu`` with ``mu_i <= lam_i``."""
    ranges = [range(part + 1) for part in lam]
    for mu in iproduct(*ranges):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield tuple(x for x in mu if x)


def _count_of_type(lam: tuple[int, ...], mu: tuple[int, ...], p: int) -> int:
    lc, mc = _conjugate(lam), _conjugate(mu)
    mc = mc + [0] * (len(lc) + 1 - len(mc))
    out = 1
    for i in range(len(lc)):
        out *= p ** (mc[i + 1] * (lc[i] - mc[i]))
        out *= gaussian_binomial(lc[i] - mc[i + 1], mc[i] - mc[i + 1], p)
    return out


@lru_cache(maxsize=4096)
def p_group_subgroup_count(lam: tuple[int, ...], p: int) -> int:
    """Number of subgroups of ``Z(p^lam_1) + Z(p^lam_2) + ...``."""
    lam = tuple(sorted((x for x in lam if x), reverse=True))
    return sum(_count_of_type(lam, mu, p) for mu in _subpartitions(lam))


def partitions_by_prime(orders) -> dict[int, tuple[int, ...]]:
    parts: dict[int, list[int]] = {}
    for n in orders:
        for p, e in factorize(n):
            parts.setdefault(p, []).append(e)
    return {p: tuple(sorted(es, reverse=True)) for p, es in parts.items()}


def finite_subgroup_count(orders) -> int:
    """Subgroup count of the finite group with the given cyclic factor orders."""
    return prod(p_group_subgroup_count(lam, p) for p, lam in partitions_by_prime(orders).items())


def _structured_partitions(g: StructuredGroup) -> dict[int, tuple[int, ...]]:
    parts: dict[int, list[int]] = {}
    for a, m in g:
        parts.setdefault(a.p, []).extend([a.k] * m.n)
    return {p: tuple(sorted(ks, reverse=True)) for p, ks in parts.items()}


# -- |C(G)| and |C_p(G)| ----------------------------------------------------------------


def _quotient_size(g: StructuredGroup, p: int) -> Cardinal:
    return invariants(g).quotient_size(p)


def csize(g: StructuredGroup) -> Cardinal:
    """Number of finite-index subgroups."""
    return _csize(g)[0]


def _csize(g: StructuredGroup) -> tuple[Cardinal, str]:
    reflection = hausdorff_reflection(g)
    if is_finite_group(reflection):
        parts = _structured_partitions(reflection)
        return Finite(prod(p_group_subgroup_count(lam, p) for p, lam in parts.items())), "finite-hausdorff-reflection"
    def term(p: int) -> Cardinal:
        q = _quotient_size(g, p)
        # a finite 2^|G/pG| is absorbed by the omega factor
        return exp2(q) if is_infinite(q) else ONE

    return mul(ALEPH0, size_sup_over_primes(g, term)), "profinite-weight-formula"


def csize_p(g: StructuredGroup, p: int) -> Cardinal:
    """Number of subgroups of finite ``p``-power index."""
    return _csize_p(g, p)[0]


def _csize_p(g: StructuredGroup, p: int) -> tuple[Cardinal, str]:
    quotient = _quotient_size(g, p)
    if is_infinite(quotient):
        return exp2(quotient), "pro-p-count"
    reflection = p_reflection(g, p)
    if any(a.kind in (AtomKind.Z, AtomKind.PADIC) for a in reflection.atoms):
        # infinitely many p-power index subgroups, countably many since G/pG is finite
        return ALEPH0, "pro-p-countable-chain"
    lam = _structured_partitions(reflection).get(p, ())
    return Finite(p_group_subgroup_count(lam, p)), "finite-p-reflection"


# -- invariant dispatch ----------------------------------------------------------------


def _is(g: StructuredGroup, kind: ClassKind, p: int | None = None) -> bool:
    return is_in_class(g, GroupClass(kind, p)) is Verdict.TRUE


def _finite_reflection(reflection: StructuredGroup, k: CardinalInvariantKind) -> Cardinal:
    # the topology is pulled back from the finite discrete reflection
    if k is CardinalInvariantKind.CHARACTER:
        return ONE
    return invariants(reflection).size


def _density_formula(g: StructuredGroup) -> Cardinal:
    return mul(ALEPH0, size_sup_over_primes(g, lambda p: _quotient_size(g, p)))


def _global(g: StructuredGroup, t: TopologyKind, k: CardinalInvariantKind) -> tuple[Cardinal, str]:
    if t is TopologyKind.BOHR:
        size = invariants(g).size
        if not is_infinite(size):
            return (ONE if k is CardinalInvariantKind.CHARACTER else size), "finite-discrete"
        if k is CardinalInvariantKind.DENSITY:
            return size, "bohr-density"
        return exp2(size), "bohr-weight"
    reflection = hausdorff_reflection(g)
    if is_finite_group(reflection):
        return _finite_reflection(reflection, k), "finite-hausdorff-reflection"
    if k is CardinalInvariantKind.DENSITY:
        return _density_formula(g), "natural-density-formula"
    if t is TopologyKind.GAMMA:
        value, _ = _csize(g)
        basis = "bounded-profinite-is-bohr" if _is(g, ClassKind.BOUNDED) else "profinite-weight-formula"
        return value, basis
    if k is CardinalInvariantKind.WEIGHT:
        return _density_formula(g), "natural-density-formula"
    # nu has a least open subgroup iff G/D(G) is bounded
    bounded = all(a.kind is AtomKind.CYC for a in reflection.atoms)
    return (ONE if bounded else ALEPH0), "natural-character"


def _local(g: StructuredGroup, t: TopologyKind, p: int, k: CardinalInvariantKind) -> tuple[Cardinal, str]:
    reflection = p_reflection(g, p)
    if is_finite_group(reflection):
        return _finite_reflection(reflection, k), "finite-p-reflection"
    if k is CardinalInvariantKind.DENSITY or (t is TopologyKind.NU_P and k is CardinalInvariantKind.WEIGHT):
        basis = "p-adic-density" if _is(g, ClassKind.RESIDUALLY_P_FINITE, p) else "p-adic-density-via-p-reflection"
        return mul(ALEPH0, _quotient_size(g, p)), basis
    if t is TopologyKind.GAMMA_P:
        return _csize_p(g, p)
    bounded = all(a.kind is AtomKind.CYC for a in reflection.atoms)
    return (ONE if bounded else ALEPH0), "natural-character"


def invariant(
    g: StructuredGroup,
    t: TopologyName,
    k: CardinalInvariantKind,
    mode: CardinalMode = CardinalMode.ZFC,
) -> InvariantResult:
    if t.kind in (TopologyKind.GAMMA, TopologyKind.NU, TopologyKind.BOHR):
        value, basis = _global(g, t.kind, k)
    elif t.kind in (TopologyKind.GAMMA_P, TopologyKind.NU_P):
        value, basis = _local(g, t.kind, t.p, k)
    else:
        raise Unsupported(f"no formula for {k.value} of {t}")
    return InvariantResult(normalize(value, mode), basis, mode)


def check_log_bound(g: StructuredGroup, mode: CardinalMode = CardinalMode.ZFC) -> Verdict:
    """``log |G| <= w(G, nu_G)`` for infinite residually finite ``G``."""
    inv = invariants(g)
    if not is_infinite(inv.size) or not inv.ulm.is_zero:
        raise ValueError("log bound needs an infinite residually finite group")
    w = invariant(g, TopologyName(TopologyKind.NU), CardinalInvariantKind.WEIGHT).value
    return leq_log(inv.size, w, mode)
