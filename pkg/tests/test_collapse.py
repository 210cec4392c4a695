import pytest
from conftest import F, complexes
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_collapsible

from nerverep.collapse import (
    CollapseSequence,
    CollapseStep,
    Mode,
    collapse_or_raise,
    elementary_collapse,
    free_faces,
    is_d_collapsible,
    verify_collapse,
)
from nerverep.complex import build_complex, is_d_leray, simplex_skeleton
from nerverep.errors import DimTooBig, NotAFace, NotFree, SizeGuardExceeded


def test_elementary_collapse(fig2):
    K = elementary_collapse(fig2, ["4"], 1)
    assert set(K.facets) == {F(1, 2, 3), F(1), F(2, 5), F(3, 6)} - {F(1)}
    with pytest.raises(NotFree):
        elementary_collapse(fig2, ["1"], 1)
    with pytest.raises(DimTooBig):
        elementary_collapse(fig2, ["1", "4"], 1)
    with pytest.raises(NotAFace):
        elementary_collapse(fig2, ["4", "5"], 2)


def test_collapse_edge_leaves_vertex():
    K = elementary_collapse(build_complex([[1, 2]]), ["1"], 1)
    assert K.facets == (F(2),)


def test_free_faces_order(fig2):
    moves = free_faces(frozenset(fig2.facets), 1)
    assert moves[0] == (F(4), F(1, 4))
    assert all(len(f) == 1 for f, _ in moves)


def test_fixture_collapsibility(mobius, spider, fig2, bd2):
    m = is_d_collapsible(mobius, 2)
    assert m.collapsible and m.authoritative and verify_collapse(mobius, m.sequence)
    assert is_d_collapsible(mobius, 1).collapsible is False
    for K in (spider, fig2):
        out = is_d_collapsible(K, 1)
        assert out.collapsible and verify_collapse(K, out.sequence)
    b = is_d_collapsible(bd2, 1)
    assert b.collapsible is False and b.authoritative


def test_greedy_mode(fig2, bd2):
    assert is_d_collapsible(fig2, 1, Mode.GREEDY).collapsible
    out = is_d_collapsible(bd2, 1, "greedy")
    assert out.collapsible is False and not out.authoritative


def test_guard(mobius):
    assert is_d_collapsible(mobius, 2, guard=2).collapsible is None
    with pytest.raises(SizeGuardExceeded):
        collapse_or_raise(mobius, 2, guard=2)


def test_d_must_be_positive(fig2):
    with pytest.raises(ValueError):
        is_d_collapsible(fig2, 0)


def test_verify_rejects_bad_sequences(fig2):
    assert not verify_collapse(fig2, CollapseSequence(1, (CollapseStep(F(1), F(1, 2, 3)),)))
    assert not verify_collapse(fig2, CollapseSequence(1, (CollapseStep(F(4), F(1, 4)),)))
    assert not verify_collapse(fig2, CollapseSequence(1, (CollapseStep(F(1, 4), F(1, 4)),)))


@pytest.mark.parametrize("n", range(2, 5))
def test_simplex_is_collapsible_but_boundary_is_not(n):
    assert is_d_collapsible(simplex_skeleton(n, n), 1).collapsible
    bd = simplex_skeleton(n, n - 1)
    assert is_d_collapsible(bd, n - 1).collapsible is False
    assert is_d_collapsible(bd, n).collapsible


@given(complexes(max_vertices=5, max_faces=4), st.integers(1, 3))
def test_exhaustive_agrees_with_brute_force(K, d):
    out = is_d_collapsible(K, d)
    assert out.collapsible == brute_collapsible(K.facets, d)
    if out.collapsible:
        assert verify_collapse(K, out.sequence)


@given(complexes(max_vertices=5, max_faces=4), st.integers(1, 2))
def test_collapsibility_is_monotone_in_d(K, d):
    if is_d_collapsible(K, d).collapsible:
        assert is_d_collapsible(K, d + 1).collapsible


@given(complexes(max_vertices=5, max_faces=4), st.integers(1, 3))
def test_collapsible_implies_leray(K, d):
    if is_d_collapsible(K, d).collapsible:
        assert is_d_leray(K, d)


@given(complexes(max_vertices=5, max_faces=4), st.integers(1, 3))
def test_greedy_success_is_sound(K, d):
    out = is_d_collapsible(K, d, Mode.GREEDY)
    if out.collapsible:
        assert verify_collapse(K, out.sequence)
