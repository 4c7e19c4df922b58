import random

import pytest
from hypothesis import given, settings, strategies as st

from agt.cardinal import Verdict
from agt.classify import (
    BOHR,
    DISCRETE,
    GAMMA,
    GBOUND,
    INDISCRETE,
    NU,
    RHO,
    ClassKind,
    GroupClass,
    bohr_p,
    class_topology_base_member,
    equalizer,
    equalizer_member,
    gamma_p,
    hausdorff_class_member,
    is_in_class,
    nu_p,
    parse_class,
    parse_topology,
)
from agt.fg import FgGroup, FgSubgroup
from agt.finite import FiniteGroup, multiple_subgroup
from agt.groups import direct_sum, finite_orders, hausdorff_reflection
from agt.parse import parse_group
from agt.sampling import random_group
from agt.topology import CardinalInvariantKind, invariant
from agt.verify import equalizer_classes

T, F, U = Verdict.TRUE, Verdict.FALSE, Verdict.UNKNOWN


def groups():
    return st.integers(0, 2**32).map(lambda s: random_group(random.Random(s)))


def member(text, kind, p=None):
    return is_in_class(parse_group(text), GroupClass(kind, p))


@pytest.mark.parametrize(
    "text, kind, p, want",
    [
        ("Z^3 + Z(5^2)^(c)", ClassKind.STRONGLY_NON_DIVISIBLE, None, T),
        ("Z(2) + Z(2^2) + Z(2^3) + Z(2^inf)", ClassKind.STRONGLY_NON_DIVISIBLE, None, F),
        ("T(2)", ClassKind.STRONGLY_NON_DIVISIBLE, None, F),
        ("Z^(aleph0)", ClassKind.STRONGLY_NON_DIVISIBLE, None, F),
        ("Q", ClassKind.RESIDUALLY_FINITE, None, F),
        ("J(3)", ClassKind.RESIDUALLY_FINITE, None, T),
        ("Z(2^inf)", ClassKind.NARROW, None, T),
        ("Z(2)^(aleph0)", ClassKind.NARROW, None, F),
        ("J(2) + Z^4", ClassKind.NARROW, None, T),
        ("Q + Z(6)", ClassKind.ALMOST_DIVISIBLE, None, T),
        ("Z(3)", ClassKind.RESIDUALLY_P_FINITE, 2, F),
        ("Z(3)", ClassKind.P_DIVISIBLE, 2, T),
        ("Z(3) + Q", ClassKind.TORSION_NO_P, 2, F),
        ("Z(3) + Z(5^inf)", ClassKind.TORSION_NO_P, 2, T),
        ("Z(2^3)^(c)", ClassKind.BOUNDED_P, 2, T),
        ("Z(2^3) + Z(3)", ClassKind.BOUNDED_P, 2, F),
        ("Z(2)^(aleph1)", ClassKind.COUNTABLE, None, F),
        ("Z", ClassKind.NO_PRUFER_QUOTIENT, 2, T),
        ("Z^(aleph0)", ClassKind.NO_PRUFER_QUOTIENT, 2, F),
        ("J(3)", ClassKind.NO_PRUFER_QUOTIENT, 2, F),
        ("0", ClassKind.ZERO, None, T),
    ],
)
def test_membership_examples(text, kind, p, want):
    assert member(text, kind, p) is want


@pytest.mark.parametrize(
    "t, s, text, want",
    [
        (GAMMA, BOHR, "Z(2)^(aleph0)", T),
        (GAMMA, NU, "Z", T),
        (GBOUND, RHO, "Z", U),
        (GAMMA, BOHR, "Z", F),
        (NU, DISCRETE, "Z(4)^(c)", T),
        (GAMMA, DISCRETE, "Z(4)^(c)", F),
        (NU, INDISCRETE, "Q + Z(3^inf)", T),
        (DISCRETE, INDISCRETE, "0", T),
        (RHO, DISCRETE, "Z^(aleph0)", T),
        (GBOUND, DISCRETE, "Z^(aleph1)", F),
        (gamma_p(2), nu_p(3), "Z", U),
        (nu_p(3), nu_p(3), "Q", T),
    ],
)
def test_equalizer_examples(t, s, text, want):
    assert equalizer_member(t, s, parse_group(text)) is want


def test_unknown_pairs_carry_notes():
    ans = equalizer(GBOUND, RHO, parse_group("Z"))
    assert ans.verdict is U and "open problem" in ans.note


def test_corrected_rows_are_forced_by_invariants():
    # topologies that coincide have equal character; these witnesses separate them
    chi = CardinalInvariantKind.CHARACTER
    z = parse_group("Z")
    assert invariant(z, NU, chi).value != invariant(z, BOHR, chi).value
    assert equalizer_member(NU, BOHR, z) is F
    assert is_in_class(z, GroupClass(ClassKind.NARROW)) is T
    # gamma^p and P^p are both the p-adic topology on Z
    assert equalizer_member(gamma_p(2), bohr_p(2), z) is T


@pytest.mark.parametrize(
    "t, text, want",
    [
        (BOHR, "Q", T),
        (GAMMA, "Z(3^inf)", F),
        (nu_p(2), "Z(3)", F),
        (gamma_p(3), "Z(3)^(aleph0)", T),
        (RHO, "Q", T),
    ],
)
def test_hausdorff_classes(t, text, want):
    assert hausdorff_class_member(t, parse_group(text)) is want


def test_hausdorff_class_rejects_untabulated():
    with pytest.raises(ValueError):
        hausdorff_class_member(DISCRETE, parse_group("Z"))


@pytest.mark.parametrize(
    "kind, p, group, rows, want",
    [
        (ClassKind.FINITE, None, FgGroup(2), [[2, 0], [0, 3]], True),
        (ClassKind.FINITE_RANK_FREE, None, FgGroup(2), [[2, 0], [0, 3]], False),
        (ClassKind.FINITE_P, 2, FgGroup(1), [[6]], False),
        (ClassKind.FINITE_P, 2, FgGroup(1), [[8]], True),
        (ClassKind.BOUNDED, None, FgGroup(2), [[1, 0]], False),
        (ClassKind.FINITE_RANK_FREE, None, FgGroup(2), [[1, 0]], True),
        (ClassKind.COUNTABLE, None, FgGroup(1, (4,)), [], True),
    ],
)
def test_base_membership(kind, p, group, rows, want):
    sub = FgSubgroup.generated(group, rows)
    assert class_topology_base_member(GroupClass(kind, p), group, sub) is want


def test_base_membership_rejects_foreign_subgroup():
    sub = FgSubgroup.generated(FgGroup(1), [[2]])
    with pytest.raises(ValueError):
        class_topology_base_member(GroupClass(ClassKind.FINITE), FgGroup(2), sub)


def test_names_round_trip():
    for text in ["gamma", "nu_p:3", "bohr_p:2", "rho", "gbound", "indiscrete"]:
        assert str(parse_topology(text)) == text
    assert str(parse_class("bounded_p:5")) == "bounded_p:5"
    for bad in ["gamma:2", "nu_p", "nu_p:4", "sigma"]:
        with pytest.raises(ValueError):
            parse_topology(bad)
    with pytest.raises(ValueError):
        parse_class("narrow:2")


def test_narrow_is_not_subgroup_closed():
    # Z(p)^(N) embeds in its divisible hull Z(p^inf)^(N)
    assert member("Z(2^inf)^(aleph0)", ClassKind.NARROW) is T
    assert member("Z(2)^(aleph0)", ClassKind.NARROW) is F


@settings(max_examples=200, deadline=None)
@given(groups())
def test_implications(g):
    def is_(kind, p=None):
        return is_in_class(g, GroupClass(kind, p)) is T

    if is_(ClassKind.STRONGLY_NON_DIVISIBLE):
        assert is_(ClassKind.RESIDUALLY_FINITE)
    if is_(ClassKind.DIVISIBLE):
        assert is_(ClassKind.ALMOST_DIVISIBLE) and is_(ClassKind.NARROW)
    if is_(ClassKind.FINITE):
        assert is_(ClassKind.NARROW) and is_(ClassKind.ALMOST_DIVISIBLE) and is_(ClassKind.BOUNDED)
    for p in (2, 3):
        if is_(ClassKind.BOUNDED_P, p):
            assert is_(ClassKind.BOUNDED) and is_(ClassKind.NO_PRUFER_QUOTIENT, p)


@settings(max_examples=200, deadline=None)
@given(groups())
def test_divisibility_tables_agree(g):
    div = is_in_class(g, GroupClass(ClassKind.DIVISIBLE))
    assert equalizer_member(GAMMA, INDISCRETE, g) is div
    assert hausdorff_reflection(g).is_zero is (div is T)


@settings(max_examples=150, deadline=None)
@given(groups(), groups())
def test_equalizer_classes_closed_under_finite_sums(g, h):
    s = direct_sum(g, h)
    for c in equalizer_classes(2) + equalizer_classes(3):
        if is_in_class(g, c) is T and is_in_class(h, c) is T:
            assert is_in_class(s, c) is T, c


def _finite_samples():
    rng = random.Random(3)
    texts = []
    for _ in range(30):
        terms = [f"Z({rng.choice((2, 3, 4, 5, 8, 9))})" for _ in range(rng.randint(1, 3))]
        texts.append(" + ".join(terms))
    return texts


@pytest.mark.parametrize("text", _finite_samples())
def test_finite_predicates_agree_with_brute_force(text):
    g = parse_group(text)
    fin = FiniteGroup(tuple(finite_orders(g)))
    assert member(text, ClassKind.FINITE) is T
    assert member(text, ClassKind.BOUNDED) is T
    assert member(text, ClassKind.NARROW) is T
    assert member(text, ClassKind.RESIDUALLY_FINITE) is T
    assert member(text, ClassKind.ZERO) is F
    for p in (2, 3, 5):
        p_group = all(_is_power(fin.order_of(c), p) for c in range(fin.size))
        assert (member(text, ClassKind.FINITE_P, p) is T) == p_group
        assert (member(text, ClassKind.BOUNDED_P, p) is T) == p_group
        p_div = multiple_subgroup(fin, p).order == fin.size
        assert (member(text, ClassKind.P_DIVISIBLE, p) is T) == p_div
        no_p_torsion = all(fin.order_of(c) % p for c in range(1, fin.size))
        assert (member(text, ClassKind.TORSION_NO_P, p) is T) == no_p_torsion
        # residually p-finite: intersection of p^k G is trivial
        core = multiple_subgroup(fin, p ** 12).order
        assert (member(text, ClassKind.RESIDUALLY_P_FINITE, p) is T) == (core == 1)


def _is_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
