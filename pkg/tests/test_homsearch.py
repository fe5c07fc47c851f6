import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hkinv.data import load_pd, load_presentation
from hkinv.diagram import wirtinger
from hkinv.fpgroup import Presentation, Word, evaluate, parse_presentation
from hkinv.homsearch import (SearchLimitExceeded, brute_force_enumerate, enumerate_homs,
                             format_listing, to_json)
from hkinv.perm import canonical_indices

SMALL = ["S3", "A4", "S4"]


def bundled_small():
    """Every bundled presentation with at most three generators."""
    out = {"HK5_1_appcontour": load_presentation("HK5_1_appcontour")}
    for name in ("3_1", "4_1", "9_42", "10_71"):
        p = wirtinger(load_pd(name))
        if p.rank <= 3:
            out[name] = p
    return out


def signature(homs):
    return [(tuple(x.images for x in h.images), h.surjective, h.orbit_size) for h in homs]


@pytest.mark.parametrize("name", sorted(bundled_small()))
@pytest.mark.parametrize("spec", SMALL)
def test_matches_brute_force(groups, name, spec):
    p = bundled_small()[name]
    g = groups(spec)
    fast = enumerate_homs(p, g)
    slow = brute_force_enumerate(p, g)
    assert signature(fast) == signature(slow)
    assert fast.raw_count == slow.raw_count


def test_raw_count_is_number_of_homomorphisms(groups):
    # raw count is the sum of orbit sizes; compare with a direct count
    p = load_presentation("HK5_1_appcontour")
    g = groups("S3")
    direct = sum(1 for imgs in itertools.product(g.elements, repeat=3)
                 if evaluate(p.relators[0], imgs).is_identity())
    assert enumerate_homs(p, g).raw_count == direct


def test_cyclic_into_a4(groups):
    # <a; a^3> -> A4 up to S4-conjugacy: the trivial map and one 3-cycle class
    p = parse_presentation("<a; aaa>")
    homs = enumerate_homs(p, groups("A4"))
    assert len(homs) == 2
    assert sorted(h.images[0].order() for h in homs) == [1, 3]
    assert homs.raw_count == 9


def test_free_rank_two_into_s2(groups):
    homs = enumerate_homs(parse_presentation("<a,b;>"), groups("S2"))
    assert homs.raw_count == 4 and len(homs) == 4


def test_trivial_group_and_identity_class(groups):
    p = parse_presentation("<a,b; abAB>")
    assert len(enumerate_homs(p, groups("1"))) == 1
    homs = enumerate_homs(p, groups("S3"))
    assert any(all(x.is_identity() for x in h.images) for h in homs)
    assert all(not all(x.is_identity() for x in h.images) for h in homs.surjective())


def test_inner_action_refines_sn_action(groups):
    p = wirtinger(load_pd("3_1"))
    sn = enumerate_homs(p, groups("A5"))
    inner = enumerate_homs(p, groups("A5", "inner"))
    assert sn.raw_count == inner.raw_count
    assert len(inner) >= len(sn)


def test_dihedral_d10(groups):
    p = wirtinger(load_pd("4_1"))
    homs = enumerate_homs(p, groups("D10"), surjective_only=True)
    # the figure-eight has determinant 5, so it is 5-colourable
    assert len(homs) >= 1
    assert brute_force_enumerate(p, groups("D10"), surjective_only=True).raw_count == homs.raw_count


def test_parallel_equals_serial(groups):
    p = load_presentation("HK5_1")
    g = groups("A5")
    assert signature(enumerate_homs(p, g, jobs=3)) == signature(enumerate_homs(p, g))


def test_node_limit(groups):
    with pytest.raises(SearchLimitExceeded):
        enumerate_homs(load_presentation("HK5_1"), groups("A5"), node_limit=10)
    with pytest.raises(SearchLimitExceeded):
        brute_force_enumerate(load_presentation("HK5_1"), groups("A5"), bound=1000)


def test_classes_are_canonical_and_distinct(groups):
    g = groups("A5")
    homs = enumerate_homs(load_presentation("HK5_1"), g)
    keys = [tuple(g.index[x] for x in h.images) for h in homs]
    assert len(set(keys)) == len(keys)
    for k in keys:
        assert canonical_indices(g, k)[0] == k


def test_selected_images_evaluate(groups):
    p = load_presentation("HK5_1")
    for h in enumerate_homs(p, groups("S4")):
        assert h.selected_images == tuple(evaluate(w, h.images) for w in p.selected)
        assert all(evaluate(r, h.images).is_identity() for r in p.relators)


def test_listing_and_json(groups):
    p = wirtinger(load_pd("3_1"))
    homs = enumerate_homs(p, groups("A5"), surjective_only=True)
    text = format_listing(p, homs)
    assert text.splitlines()[0] == "====== Homomorphism #1 defined by the permutations:"
    assert "Selected element #2 -> " in text
    assert text.rstrip().endswith("Result: 1")
    assert '"count": 1' in to_json(homs)


rel = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=8)


@settings(max_examples=40, deadline=None)
@given(st.lists(rel, min_size=0, max_size=3), st.sampled_from(["S3", "A4"]))
def test_random_presentations_match_oracle(groups, relators, spec):
    p = Presentation(("a", "b"), tuple(Word(tuple(r)) for r in relators))
    g = groups(spec)
    assert signature(enumerate_homs(p, g)) == signature(brute_force_enumerate(p, g))
