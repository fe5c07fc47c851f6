import itertools

import pytest
import sympy as sp

from hkinv.data import list_data, load_pd
from hkinv.diagram import (PDCode, PDError, connected_sum, crossing_signs, format_pd, mirror,
                           parse_pd, wirtinger, writhe)
from hkinv.fpgroup import abelian_invariants, evaluate
from hkinv.homsearch import enumerate_homs

KNOTS = [n[:-3] for n in list_data() if n.endswith(".pd")]
A, t = sp.symbols("A t")


def jones(pd: PDCode):
    """Jones polynomial from the Kauffman bracket; A-smoothing joins (a,b) and (c,d)."""
    labels = {x for cr in pd.crossings for x in cr}
    total = 0
    for state in itertools.product((0, 1), repeat=len(pd)):
        parent = {x: x for x in labels}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for s, (a, b, c, d) in zip(state, pd.crossings):
            pairs = ((a, b), (c, d)) if s == 0 else ((a, d), (b, c))
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(x) for x in labels})
        na = state.count(0)
        total += A ** (2 * na - len(pd)) * (-A ** 2 - A ** -2) ** (loops - 1)
    f = sp.expand((-A ** 3) ** (-writhe(pd)) * total)
    return sp.expand(f.subs(A, t ** sp.Rational(-1, 4)))


def test_sign_convention_against_listed_jones():
    # listed Jones polynomials of the right-handed trefoil and the figure-eight
    assert sp.expand(jones(load_pd("3_1")) - (t + t ** 3 - t ** 4)) == 0
    assert sp.expand(jones(load_pd("4_1")) - (t ** -2 - t ** -1 + 1 - t + t ** 2)) == 0
    assert sp.expand(jones(mirror(load_pd("3_1"))) - (t ** -1 + t ** -3 - t ** -4)) == 0


@pytest.mark.parametrize("name,w", [("3_1", 3), ("4_1", 0), ("9_42", 1), ("10_71", 0)])
def test_writhe(name, w):
    pd = load_pd(name)
    assert writhe(pd) == w
    assert writhe(mirror(pd)) == -writhe(pd)


def test_trefoil_is_positive():
    assert crossing_signs(load_pd("3_1")) == [1, 1, 1]


@pytest.mark.parametrize("name", KNOTS)
def test_mirror_involution(name):
    pd = load_pd(name)
    assert mirror(mirror(pd)).crossings == pd.crossings


@pytest.mark.parametrize("name", KNOTS)
def test_parse_format_roundtrip(name):
    pd = load_pd(name)
    assert parse_pd(format_pd(pd)) == pd


def test_parse_variants_and_errors():
    assert parse_pd("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]").crossings == load_pd("3_1").crossings
    with pytest.raises(PDError):
        parse_pd("X 1 2 3")
    with pytest.raises(PDError):
        parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 7")
    with pytest.raises(PDError):
        parse_pd("X 1 4 3 5\nX 3 1 4 6\nX 5 3 6 2")
    with pytest.raises(PDError):
        parse_pd("Y 1 5 2 4")


@pytest.mark.parametrize("name", KNOTS)
def test_wirtinger_abelianization_is_z(name):
    p = wirtinger(load_pd(name))
    assert p.rank == len(load_pd(name))
    assert abelian_invariants(p) == [0]


@pytest.mark.parametrize("name", KNOTS)
def test_longitude_exponent_sum_zero(name):
    p = wirtinger(load_pd(name))
    lon = p.selected[p.role_index("l1")]
    assert sum(1 if x > 0 else -1 for x in lon.letters) == 0


@pytest.mark.parametrize("name", ["3_1", "4_1"])
def test_longitude_commutes_with_meridian(groups, name):
    p = wirtinger(load_pd(name))
    for h in enumerate_homs(p, groups("A5")):
        m, l = h.selected_images
        assert m * l == l * m


def test_base_edge_changes_only_basepoint(groups):
    pd = load_pd("4_1")
    a = enumerate_homs(wirtinger(pd, base_edge=1), groups("A5"))
    b = enumerate_homs(wirtinger(pd, base_edge=5), groups("A5"))
    def orders(hs):
        return sorted(tuple(x.order() for x in h.selected_images) for h in hs)

    assert len(a) == len(b) and orders(a) == orders(b)


def test_unknot_presentation():
    p = wirtinger(PDCode(()))
    assert p.rank == 1 and abelian_invariants(p) == [0]


def test_connected_sum():
    t = load_pd("3_1")
    g = connected_sum(t, t)
    s = connected_sum(t, mirror(t))
    assert len(g) == 6 and writhe(g) == 6 and writhe(s) == 0
    assert abelian_invariants(wirtinger(g)) == [0]
    assert connected_sum(t, PDCode(())) == t


def test_relators_hold_for_meridian_longitude_words(groups):
    p = wirtinger(load_pd("3_1"))
    for h in enumerate_homs(p, groups("S4")):
        assert all(evaluate(r, h.images).is_identity() for r in p.relators)
