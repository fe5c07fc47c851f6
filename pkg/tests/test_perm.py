import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hkinv.perm import (ClosureTooLarge, Permutation, TargetGroup, canonical_form,
                        canonical_indices, format_cycles, parse_cycles, parse_group,
                        s6_outer_automorphism, subgroup_closure)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_right_action_composition():
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    # p*q applies p first
    assert (p * q)(1) == 3
    assert p * q == parse_cycles("(1 3 2)", 3)


def test_conjugate_is_g_inverse_x_g():
    x = parse_cycles("(1 2 3)", 4)
    g = parse_cycles("(3 4)", 4)
    assert x.conjugate(g) == g.inverse() * x * g
    assert x.conjugate(g) == parse_cycles("(1 2 4)", 4)


def test_parse_forms():
    assert parse_cycles("(12345)", 5) == parse_cycles("(1 2 3 4 5)", 5)
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(1 2)(3 4)", 4).cycle_type() == (2, 2)
    with pytest.raises(ValueError):
        parse_cycles("(1 7)", 5)
    with pytest.raises(ValueError):
        parse_cycles("(1 2 1)", 5)


@given(perms(7))
def test_format_parse_roundtrip(p):
    assert parse_cycles(format_cycles(p), 7) == p


@given(perms(6), perms(6))
def test_order_sign_homomorphic(p, q):
    assert (p * q).sign() == p.sign() * q.sign()
    assert (p ** p.order()).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order()))
    assert (p * q).inverse() == q.inverse() * p.inverse()


@pytest.mark.parametrize("spec,size", [("S3", 6), ("A4", 12), ("S4", 24), ("A5", 60),
                                       ("D10", 10), ("Z5", 5), ("1", 1)])
def test_group_orders(groups, spec, size):
    assert groups(spec).order == size


def test_a6_order(groups):
    assert groups("A6").order == 360


def test_tables_consistent(groups):
    g = groups("S4")
    elts = g.elements
    for i, x in enumerate(elts):
        assert elts[g.inv_table[i]] == x.inverse()
        for j in (0, 5, 17):
            assert elts[g.mul_table[i][j]] == x * elts[j]
    assert list(elts) == sorted(elts)
    assert elts[g.identity_index].is_identity()


@pytest.mark.parametrize("spec,aut,size", [("A5", "sn", 120), ("A5", "inner", 60),
                                           ("S4", "sn", 24), ("A4", "sn", 24),
                                           ("D10", "sn", 20), ("Z5", "sn", 4)])
def test_automorphism_counts(groups, spec, aut, size):
    auts = groups(spec, aut).automorphisms
    assert auts.shape == (size, groups(spec).order)
    assert (auts[0] == np.arange(auts.shape[1])).all()


def test_full_aut_a6(groups):
    g = groups("A6", "full")
    assert g.automorphisms.shape[0] == 1440


def test_s6_outer_automorphism():
    phi = s6_outer_automorphism()
    t = parse_cycles("(1 2)", 6)
    assert phi[t].cycle_type() == (2, 2, 2)
    some = list(phi)[::37]
    for a, b in itertools.product(some, repeat=2):
        assert phi[a * b] == phi[a] * phi[b]


@settings(max_examples=30)
@given(st.lists(st.integers(0, 59), min_size=1, max_size=3), st.integers(0, 119))
def test_canonical_form_constant_on_orbits(groups, vec, k):
    g = groups("A5")
    auts = g.automorphisms
    c1, n1 = canonical_indices(g, vec)
    c2, n2 = canonical_indices(g, [int(auts[k, v]) for v in vec])
    assert c1 == c2 and n1 == n2
    stab = sum(1 for row in auts if all(row[v] == v for v in vec))
    assert n1 * stab == len(auts)


def test_canonical_form_permutations(groups):
    g = groups("S4")
    x = parse_cycles("(1 2 3 4)", 4)
    y = parse_cycles("(1 3)", 4)
    h = parse_cycles("(2 4 3)", 4)
    assert canonical_form([x, y], g) == canonical_form([x.conjugate(h), y.conjugate(h)], g)


def test_closure():
    a = parse_cycles("(1 2 3 4 5)", 5)
    b = parse_cycles("(1 2 3)", 5)
    assert len(subgroup_closure([a, b])) == 60
    assert len(subgroup_closure([a])) == 5
    big = [parse_cycles("(1 2)", 9), parse_cycles("(1 2 3 4 5 6 7 8 9)", 9)]
    with pytest.raises(ClosureTooLarge):
        subgroup_closure(big, bound=1000)


def test_generates(groups):
    g = groups("A5")
    idx = g.index
    a = idx[parse_cycles("(1 2 3 4 5)", 5)]
    b = idx[parse_cycles("(1 3 5 2 4)", 5)]  # a squared
    c = idx[parse_cycles("(1 3 5 4 2)", 5)]
    assert not g.generates([a, b])
    assert g.generates([a, c])


def test_parse_group_errors():
    with pytest.raises(ValueError):
        parse_group("Q8x")
    with pytest.raises(ValueError):
        parse_group("D7")


def test_explicit_group():
    g = TargetGroup.explicit([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert g.order == 4
