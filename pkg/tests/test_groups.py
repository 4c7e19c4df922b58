import random
from math import lcm, prod

import pytest
from hypothesis import given, settings, strategies as st

from agt.arith import factorize
from agt.cardinal import ALEPH0, CONTINUUM, CardinalMode, Finite, Ordering, add, cmp, sup
from agt.finite import FiniteGroup, multiple_subgroup, quotient_structure
from agt.groups import (
    Q,
    Z,
    StructuredGroup,
    ZERO_GROUP,
    atom_quotient,
    atom_rank_p,
    cyc,
    direct_sum,
    finite_orders,
    hausdorff_reflection,
    invariants,
    padic,
    p_reflection,
    torprod,
)
from agt.parse import ParseError, parse_group, render_group
from agt.sampling import random_group

from oracles import padic_truncation_ulm, torprod_truncation_mod_p


def groups():
    return st.integers(0, 2**32).map(lambda s: random_group(random.Random(s)))


@pytest.mark.parametrize(
    "text, rendered",
    [
        ("Z(12)", "Z(2^2) + Z(3)"),
        ("Z^2 + Q", "Z^2 + Q"),
        ("Z + Z", "Z^2"),
        ("Z(2^inf)^(c) + J(3)", "Z(2^inf)^(2^aleph0) + J(3)"),
        ("Z(1)", "0"),
        ("0", "0"),
        ("T(5) + Z(5)^(aleph1)", "Z(5)^(aleph1) + T(5)"),
    ],
)
def test_parse_examples(text, rendered):
    assert render_group(parse_group(text)) == rendered


@pytest.mark.parametrize(
    "text, offset",
    [
        ("Z(4^2)", 2),
        ("J(6)", 2),
        ("Z(2^0)", 4),
        ("Z^0", 2),
        ("Z + ", 4),
        ("Z(3^inf", 7),
        ("W", 0),
    ],
)
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as err:
        parse_group(text)
    assert err.value.offset == offset


@settings(max_examples=200, deadline=None)
@given(groups())
def test_render_round_trip(g):
    assert parse_group(render_group(g)) == g


def test_atom_table_rows():
    assert invariants(StructuredGroup.atom(Q)).divisible_part == StructuredGroup.atom(Q)
    assert atom_quotient(cyc(3, 2), 2).is_zero
    assert atom_quotient(torprod(2), 2) == StructuredGroup.atom(cyc(2), ALEPH0)
    assert atom_quotient(padic(3), 3) == StructuredGroup.atom(cyc(3))
    assert atom_quotient(padic(3), 2).is_zero
    # torsion-free, so no elements of order p
    assert atom_rank_p(padic(3), 3) == Finite(0)
    assert atom_rank_p(torprod(3), 3) == CONTINUUM


def test_torprod_quotient_against_truncations():
    # t(prod Z(2^n)) / 2 is approximated by (Z(2) + ... + Z(2^N)) / 2 = Z(2)^N
    for n in range(1, 5):
        assert torprod_truncation_mod_p(2, n) == (2,) * n


def test_torprod_quotient_higher_powers():
    # bounded-order elements are eventually 4-divisible coordinatewise
    q = atom_quotient(torprod(2), 2, 2)
    assert render_group(q) == "Z(2) + Z(2^2)^(aleph0)"


def test_padic_is_reduced_on_truncations():
    for n in range(1, 9):
        assert padic_truncation_ulm(2, n) == 1
    assert hausdorff_reflection(StructuredGroup.atom(padic(2))) == StructuredGroup.atom(padic(2))


def test_invariants_examples():
    assert invariants(parse_group("Z + Z(2^3)")).quotient_mod(2) == parse_group("Z(2)^2")
    assert invariants(parse_group("Q + Z(3)^(aleph0)")).ulm == StructuredGroup.atom(Q)
    assert invariants(StructuredGroup.atom(torprod(2))).size == CONTINUUM
    assert invariants(parse_group("Z(4) + Z(6)")).exponent == 12
    assert invariants(ZERO_GROUP).exponent == 1
    assert invariants(parse_group("Z + Z(2)")).exponent is None


def test_reflections():
    assert hausdorff_reflection(parse_group("Q + Z")) == StructuredGroup.atom(Z)
    assert hausdorff_reflection(parse_group("Z(3^inf)^(c)")).is_zero
    assert p_reflection(parse_group("Z(3) + Z(2)"), 2) == parse_group("Z(2)")


def test_direct_sum_examples():
    assert direct_sum(StructuredGroup.atom(Z), StructuredGroup.atom(Z)) == parse_group("Z^2")
    assert direct_sum(parse_group("Z^(aleph0)"), parse_group("Z^3")) == parse_group("Z^(aleph0)")
    g = parse_group("Q + Z(5)")
    assert direct_sum(ZERO_GROUP, g) == g


def test_multiplicity_zero_rejected():
    with pytest.raises(ValueError):
        StructuredGroup.of([(Z, 0)])


@settings(max_examples=150, deadline=None)
@given(groups(), groups())
def test_additivity(g, h):
    s = direct_sum(g, h)
    ig, ih, is_ = invariants(g), invariants(h), invariants(s)
    assert is_.rank0 == add(ig.rank0, ih.rank0)
    assert is_.ulm == direct_sum(ig.ulm, ih.ulm)
    for p in (2, 3, 5):
        assert is_.rank_p(p) == add(ig.rank_p(p), ih.rank_p(p))
        assert is_.quotient_mod(p) == direct_sum(ig.quotient_mod(p), ih.quotient_mod(p))
    if ig.exponent and ih.exponent:
        assert is_.exponent == lcm(ig.exponent, ih.exponent)
    else:
        assert is_.exponent is None


@settings(max_examples=150, deadline=None)
@given(groups())
def test_ulm_idempotence_and_quotient_consistency(g):
    assert invariants(hausdorff_reflection(g)).ulm.is_zero
    inv = invariants(g)
    for m, primes in [(6, (2, 3)), (12, (2, 3)), (10, (2, 5))]:
        size = inv.quotient_size(m)
        if size.is_finite:
            assert size.n == prod(inv.quotient_size(p**k).n for p, k in factorize(m))
        else:
            assert cmp(size, sup(inv.quotient_size(p) for p in primes), CardinalMode.ZFC) is Ordering.EQ


def _finite_instances():
    rng = random.Random(7)
    out = []
    while len(out) < 40:
        terms = [(cyc(rng.choice((2, 3, 5)), rng.randint(1, 3)), rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
        g = StructuredGroup.of(terms)
        if invariants(g).size.n <= 3000:
            out.append(g)
    return out


@pytest.mark.parametrize("g", _finite_instances(), ids=render_group)
def test_finite_groups_agree_with_brute_force(g):
    fin = FiniteGroup(tuple(finite_orders(g)), cap=3000)
    inv = invariants(g)
    assert inv.size == Finite(fin.size)
    assert inv.exponent == fin.exponent()
    for p in (2, 3, 5, 7):
        mp = multiple_subgroup(fin, p)
        assert inv.quotient_size(p) == Finite(fin.size // mp.order)
        # r_p = log_p |G[p]|
        socle = sum(1 for c in range(fin.size) if fin.order_of(c) in (1, p))
        assert p ** inv.rank_p(p).n == socle
        quotient = quotient_structure(fin, mp)
        assert sorted(quotient.orders) == sorted(finite_orders(inv.quotient_mod(p)))
