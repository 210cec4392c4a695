import itertools
import random
from fractions import Fraction

import pytest
from conftest import F, complexes
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_1_representable, has_consecutive_arrangement, random_graph_dual_complex

from nerverep.complex import build_complex, dual, skeleton
from nerverep.errors import InvalidObstruction, SizeGuardExceeded
from nerverep.fixtures import load
from nerverep.geometry import is_faithful, realizes
from nerverep.planar import planar_embed, verify_drawing, verify_kuratowski
from nerverep.representability import (
    AsteroidalMap1,
    AsteroidalTriple,
    InducedCycle,
    IntervalRepresentation,
    NonClique,
    build_asteroidal_map,
    consecutive_arrangement,
    decide_1_representable,
    decide_2_representable_cograph,
    find_asteroidal_triple,
    find_induced_long_cycle,
    verify_asteroidal_map,
    verify_intervals,
    verify_obstruction,
)

C4 = build_complex([[1, 2], [2, 3], [3, 4], [1, 4]])


def test_induced_cycle_examples(fig1, fig2):
    assert find_induced_long_cycle(C4) == ("1", "2", "3", "4")
    assert find_induced_long_cycle(skeleton(fig2, 1)) is None
    assert find_induced_long_cycle(skeleton(fig1, 1)) == ("1", "2", "5", "3")


def test_asteroidal_triple_examples(fig2, path4, spider):
    at = find_asteroidal_triple(skeleton(fig2, 1))
    assert at.triple == ("4", "5", "6")
    assert at.paths == (("4", "1", "2", "5"), ("4", "1", "3", "6"), ("5", "2", "3", "6"))
    assert find_asteroidal_triple(skeleton(path4, 1)) is None
    assert set(find_asteroidal_triple(spider).triple) == {"1", "2", "3"}


def test_decide1_examples(path4, fig2, bd2, delta2):
    v = decide_1_representable(path4)
    assert v.representable and v.intervals.as_dict() == {
        "1": (1, 1),
        "2": (1, 2),
        "3": (2, 3),
        "4": (3, 3),
    }
    no = decide_1_representable(fig2)
    assert not no.representable and isinstance(no.obstruction, AsteroidalTriple)
    assert no.obstruction.triple == ("4", "5", "6")
    assert decide_1_representable(bd2).obstruction == NonClique(F(1, 2, 3))
    assert decide_1_representable(delta2).representable


def test_decide1_guard_gives_pending_yes():
    K = build_complex([[i, i + 1] for i in range(15)])
    v = decide_1_representable(K, guard=5)
    assert v.representable and v.certificate_pending and v.intervals is None
    with pytest.raises(SizeGuardExceeded):
        consecutive_arrangement(K, guard=5)


def test_verify_intervals(path4):
    good = IntervalRepresentation(tuple((v, Fraction(a), Fraction(b)) for v, a, b in
                                        [("1", 1, 1), ("2", 1, 2), ("3", 2, 3), ("4", 3, 3)]))
    assert verify_intervals(path4, good)
    touching = IntervalRepresentation(tuple((v, Fraction(a), Fraction(b)) for v, a, b in
                                            [("1", 1, 1), ("2", 1, 2), ("3", 2, 3), ("4", 2, 3)]))
    assert not verify_intervals(path4, touching)
    backwards = IntervalRepresentation((("1", Fraction(2), Fraction(1)),))
    assert not verify_intervals(path4, backwards)


def test_verify_obstruction(fig1, fig2, bd2):
    assert verify_obstruction(fig1, InducedCycle(("1", "2", "5", "3")))
    assert not verify_obstruction(fig1, InducedCycle(("1", "2", "5")))
    assert not verify_obstruction(C4, InducedCycle(("1", "2", "4", "3")))
    assert verify_obstruction(bd2, NonClique(F(1, 2, 3)))
    assert not verify_obstruction(fig2, NonClique(F(1, 2, 3)))
    bad_at = AsteroidalTriple(("4", "5", "1"), (("4", "1"), ("4", "1"), ("5", "2", "1")))
    assert not verify_obstruction(fig2, bad_at)


def test_asteroidal_map_nonclique(bd2):
    m = build_asteroidal_map(bd2, NonClique(F(1, 2, 3)))
    assert m.faces == (F(2, 3), F(1, 3), F(1, 2))
    assert m.path(0, 1) == (F(2, 3), F(3), F(1, 3))
    assert verify_asteroidal_map(bd2, m)


def test_asteroidal_map_cycle():
    m = build_asteroidal_map(C4, InducedCycle(("1", "2", "3", "4")))
    assert m.faces == (F(4, 1), F(1, 2), F(2, 3))
    assert m.path(0, 2) == (F(4, 1), F(4), F(3, 4), F(3), F(2, 3))
    assert verify_asteroidal_map(C4, m)


def test_asteroidal_map_triple(fig2):
    at = find_asteroidal_triple(skeleton(fig2, 1))
    m = build_asteroidal_map(fig2, at)
    assert m.faces == (F(4), F(5), F(6))
    assert m.path(0, 1) == (F(4), F(1, 4), F(1), F(1, 2), F(2), F(2, 5), F(5))
    assert verify_asteroidal_map(fig2, m)
    rerouted = (F(4), F(1, 4), F(1), F(1, 3), F(3), F(2, 3), F(2), F(2, 5), F(5))
    assert not verify_asteroidal_map(fig2, AsteroidalMap1(m.faces, (rerouted,) + m.paths[1:]))
    wrong_end = (F(4), F(1, 4), F(1))
    assert not verify_asteroidal_map(fig2, AsteroidalMap1(m.faces, (wrong_end,) + m.paths[1:]))


def test_build_asteroidal_map_rejects_invalid(fig2):
    with pytest.raises(InvalidObstruction):
        build_asteroidal_map(fig2, NonClique(F(1, 2, 3)))


def test_decide2_examples(fig2, mobius):
    v = decide_2_representable_cograph(fig2)
    assert v.applicable and v.representable
    assert is_faithful(fig2, v.realization) and realizes(fig2, v.realization)
    vkf = load("vkf1")
    no = decide_2_representable_cograph(vkf)
    assert no.applicable and no.representable is False and no.obstruction.kind == "K5"
    assert verify_kuratowski(dual(vkf).complex, no.obstruction)
    k33 = decide_2_representable_cograph(load("k33"))
    assert k33.representable is False and k33.obstruction.kind == "K3,3"
    assert not decide_2_representable_cograph(mobius).applicable


def test_fig2_dual_star_drawing(fig2):
    D = dual(fig2).complex
    res = planar_embed(D)
    assert res.planar and verify_drawing(D, res.drawing)


# -- properties -----------------------------------------------------------


@given(complexes(max_vertices=6, max_faces=6))
def test_decide1_agrees_with_arrangement_oracle(K):
    v = decide_1_representable(K)
    assert v.representable == has_consecutive_arrangement(K.facets)
    assert v.representable == brute_1_representable(K.facets, K.vertices)
    if v.representable:
        assert verify_intervals(K, v.intervals)
    else:
        assert verify_obstruction(K, v.obstruction)


@given(complexes(max_vertices=6, max_faces=6))
def test_asteroidal_map_always_verifies(K):
    v = decide_1_representable(K)
    if not v.representable:
        assert verify_asteroidal_map(K, build_asteroidal_map(K, v.obstruction))


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_decide2_matches_planarity_of_dual(n, seed):
    K = build_complex(random_graph_dual_complex(random.Random(seed), n))
    v = decide_2_representable_cograph(K)
    assert v.applicable
    res = planar_embed(dual(K).complex)
    assert v.representable == res.planar
    if v.representable:
        assert realizes(K, v.realization)
    else:
        assert verify_kuratowski(dual(K).complex, v.obstruction)


@given(st.integers(4, 8))
def test_long_cycles(n):
    G = build_complex([[i, (i + 1) % n] for i in range(n)])
    cyc = find_induced_long_cycle(G)
    assert cyc is not None and len(cyc) == n
    assert verify_obstruction(G, InducedCycle(cyc))
    assert not decide_1_representable(G).representable


def test_chordal_graph_has_no_long_induced_cycle():
    fan = build_complex([[0, i, i + 1] for i in range(1, 6)])
    assert find_induced_long_cycle(skeleton(fan, 1)) is None


@pytest.mark.parametrize("n", [3, 4, 5])
def test_paths_are_interval(n):
    K = build_complex([[i, i + 1] for i in range(n)])
    v = decide_1_representable(K)
    assert v.representable and verify_intervals(K, v.intervals)


def test_all_triangle_pairs_asteroidal_map_pairs():
    assert AsteroidalMap1.PAIRS == tuple(itertools.combinations(range(3), 2))
