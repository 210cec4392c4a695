"""Deciding representability in dimensions one and two, with certificates.

Dimension one follows the Lekkerkerker–Boland characterization: a complex
is a nerve of intervals exactly when it is the clique complex of its
1-skeleton, the 1-skeleton has no chordless cycle of length four or more,
and it has no asteroidal triple. Positive answers come with intervals read
off a consecutive arrangement of the facets; negative ones with the failing
condition, which ``build_asteroidal_map`` turns into a 1-asteroidal map.

Dimension two is decided when the dual complex is a graph: the complex is
2-representable exactly when that graph is planar.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .complex import (
    FACE_GUARD,
    SimplicialComplex,
    clique_witness,
    dual,
    face_key,
    skeleton,
)
from .errors import InvalidObstruction, SizeGuardExceeded, VerificationFailed
from .geometry import HullFamily, LinearRealization, is_faithful, nerve_of_hulls, realizes
from .planar import KuratowskiSubgraph, PlanarDrawing, planar_embed

ARRANGEMENT_GUARD = 12
CYCLE_GUARD = 1_000_000


def adjacency(K: SimplicialComplex) -> dict[str, set[str]]:
    """Neighbours in the 1-skeleton."""
    adj: dict[str, set[str]] = {v: set() for v in K.vertices}
    for J in K.facets:
        for u, v in itertools.combinations(J, 2):
            adj[u].add(v)
            adj[v].add(u)
    return adj


# -- obstructions ----------------------------------------------------------


@dataclass(frozen=True)
class NonClique:
    face: frozenset


@dataclass(frozen=True)
class InducedCycle:
    cycle: tuple[str, ...]


@dataclass(frozen=True)
class AsteroidalTriple:
    triple: tuple[str, str, str]
    # paths for the pairs (0,1), (0,2), (1,2) of the triple
    paths: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]


Obstruction1 = Union[NonClique, InducedCycle, AsteroidalTriple]


def find_induced_long_cycle(G: SimplicialComplex, guard: int = CYCLE_GUARD) -> tuple[str, ...] | None:
    """A chordless cycle on at least four vertices, or ``None``.

    Searches induced paths rooted at the smallest vertex of the cycle.
    """
    adj = adjacency(G)
    budget = [guard]

    def extend(path: list[str], banned: set[str]) -> tuple[str, ...] | None:
        budget[0] -= 1
        if budget[0] < 0:
            raise SizeGuardExceeded("induced cycle search exceeded its budget")
        root, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= root or v in path or v in banned:
                continue
            # v must stay non-adjacent to every interior path vertex
            if any(u in adj[v] for u in path[1:-1]):
                continue
            if root in adj[v]:
                if len(path) >= 3:
                    return tuple(path) + (v,)
                continue
            found = extend(path + [v], banned)
            if found:
                return found
        return None

    for root in G.vertices:
        for nb in sorted(adj[root]):
            if nb <= root:
                continue
            found = extend([root, nb], set())
            if found:
                return found
    return None


def _components_avoiding(adj: dict[str, set[str]], removed: set[str]) -> dict[str, int]:
    comp: dict[str, int] = {}
    for s in sorted(adj):
        if s in removed or s in comp:
            continue
        comp[s] = s_id = len(comp)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in removed and w not in comp:
                    comp[w] = s_id
                    queue.append(w)
    return comp


def _path_avoiding(adj: dict[str, set[str]], src: str, dst: str, removed: set[str]) -> tuple[str, ...]:
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in sorted(adj[u]):
            if w not in removed and w not in parent:
                parent[w] = u
                queue.append(w)
    path = [dst]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def find_asteroidal_triple(G: SimplicialComplex) -> AsteroidalTriple | None:
    """First triple (canonical order) where each pair is joined avoiding the third's closed neighbourhood."""
    adj = adjacency(G)
    closed = {v: adj[v] | {v} for v in adj}
    comps = {v: _components_avoiding(adj, closed[v]) for v in adj}
    for u, v, w in itertools.combinations(sorted(adj), 3):
        ok = True
        for x, (a, b) in ((w, (u, v)), (v, (u, w)), (u, (v, w))):
            c = comps[x]
            if a not in c or b not in c or c[a] != c[b]:
                ok = False
                break
        if ok:
            paths = (
                _path_avoiding(adj, u, v, closed[w]),
                _path_avoiding(adj, u, w, closed[v]),
                _path_avoiding(adj, v, w, closed[u]),
            )
            return AsteroidalTriple((u, v, w), paths)
    return None


def verify_obstruction(K: SimplicialComplex, obs: Obstruction1) -> bool:
    adj = adjacency(K)
    if isinstance(obs, NonClique):
        I = frozenset(obs.face)
        return (
            len(I) >= 3
            and set(I) <= set(K.vertices)
            and not K.contains(I)
            and all(K.contains(I - {v}) for v in I)
        )
    if isinstance(obs, InducedCycle):
        c = obs.cycle
        n = len(c)
        if n < 4 or len(set(c)) != n or not set(c) <= set(adj):
            return False
        for i, j in itertools.combinations(range(n), 2):
            consecutive = j - i == 1 or (i == 0 and j == n - 1)
            if (c[j] in adj[c[i]]) != consecutive:
                return False
        return True
    if isinstance(obs, AsteroidalTriple):
        tri = obs.triple
        if len(set(tri)) != 3 or not set(tri) <= set(adj):
            return False
        pairs = ((0, 1, 2), (0, 2, 1), (1, 2, 0))
        for path, (a, b, x) in zip(obs.paths, pairs):
            if not path or path[0] != tri[a] or path[-1] != tri[b]:
                return False
            avoid = adj[tri[x]] | {tri[x]}
            if any(p in avoid for p in path):
                return False
            if any(q not in adj[p] for p, q in zip(path, path[1:])):
                return False
        return True
    return False


# -- interval representations ---------------------------------------------


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[str, Fraction, Fraction], ...]

    def as_dict(self) -> dict[str, tuple[Fraction, Fraction]]:
        return {v: (lo, hi) for v, lo, hi in self.intervals}

    def hull_family(self) -> HullFamily:
        return HullFamily([(v, [(lo,), (hi,)]) for v, lo, hi in self.intervals])


def verify_intervals(K: SimplicialComplex, rep: IntervalRepresentation) -> bool:
    if any(lo > hi for _, lo, hi in rep.intervals):
        return False
    if {v for v, _, _ in rep.intervals} != set(K.vertices):
        return False
    return nerve_of_hulls(rep.hull_family()) == K


def consecutive_arrangement(K: SimplicialComplex, guard: int = ARRANGEMENT_GUARD) -> list[frozenset] | None:
    """Order the facets so that each vertex's facets form one block.

    Branch and bound over prefixes: a facet may follow the current prefix
    only if it avoids every vertex whose block is already closed. Dead
    (prefix-set, last facet) states are memoized.
    """
    facets = list(K.facets)
    m = len(facets)
    if m > guard:
        raise SizeGuardExceeded(f"{m} facets exceeds the arrangement bound {guard}")
    if m == 0:
        return []
    full = (1 << m) - 1
    dead: set[tuple[int, int]] = set()

    def closed_after(mask: int, last: int) -> set[str]:
        seen = set().union(*(facets[i] for i in range(m) if mask >> i & 1))
        return seen - facets[last]

    def grow(mask: int, last: int, order: list[int]) -> list[int] | None:
        if mask == full:
            return order
        if (mask, last) in dead:
            return None
        closed = closed_after(mask, last)
        for i in range(m):
            if mask >> i & 1 or facets[i] & closed:
                continue
            found = grow(mask | 1 << i, i, order + [i])
            if found:
                return found
        dead.add((mask, last))
        return None

    for first in range(m):
        found = grow(1 << first, first, [first])
        if found:
            return [facets[i] for i in found]
    return None


def intervals_from_arrangement(K: SimplicialComplex, order: list[frozenset]) -> IntervalRepresentation:
    spans = {}
    for idx, J in enumerate(order, 1):
        for v in J:
            lo, hi = spans.get(v, (idx, idx))
            spans[v] = (min(lo, idx), max(hi, idx))
    return IntervalRepresentation(
        tuple((v, Fraction(spans[v][0]), Fraction(spans[v][1])) for v in K.vertices)
    )


@dataclass(frozen=True)
class OneRepVerdict:
    """``representable`` with either intervals or an obstruction.

    ``certificate_pending`` marks a positive verdict whose intervals were not
    built because the arrangement search hit its bound.
    """

    representable: bool
    intervals: IntervalRepresentation | None = None
    obstruction: Obstruction1 | None = None
    certificate_pending: bool = False


def one_rep_obstruction(K: SimplicialComplex) -> Obstruction1 | None:
    """The first failing condition of the characterization, if any."""
    I = clique_witness(K)
    if I is not None:
        return NonClique(I)
    G = skeleton(K, 1)
    cyc = find_induced_long_cycle(G)
    if cyc is not None:
        return InducedCycle(cyc)
    return find_asteroidal_triple(G)


def decide_1_representable(K: SimplicialComplex, guard: int = ARRANGEMENT_GUARD) -> OneRepVerdict:
    obs = one_rep_obstruction(K)
    if obs is not None:
        return OneRepVerdict(False, obstruction=obs)
    try:
        order = consecutive_arrangement(K, guard)
    except SizeGuardExceeded:
        return OneRepVerdict(True, certificate_pending=True)
    if order is None:
        raise VerificationFailed("no consecutive arrangement despite all three conditions holding")
    rep = intervals_from_arrangement(K, order)
    if not verify_intervals(K, rep):
        raise VerificationFailed("interval nerve differs from the complex")
    return OneRepVerdict(True, intervals=rep)


# -- asteroidal maps ------------------------------------------------------


@dataclass(frozen=True)
class AsteroidalMap1:
    """Images of the triangle's vertices and edges in the subdivision of ``K``.

    ``paths[(j, k)]`` walks from ``faces[j]`` to ``faces[k]`` through faces of
    ``K`` with consecutive entries comparable by inclusion. Pairs are
    ``(0, 1)``, ``(0, 2)`` and ``(1, 2)``.
    """

    faces: tuple[frozenset, frozenset, frozenset]
    paths: tuple[tuple[frozenset, ...], tuple[frozenset, ...], tuple[frozenset, ...]]

    PAIRS = ((0, 1), (0, 2), (1, 2))

    def path(self, j: int, k: int) -> tuple[frozenset, ...]:
        return self.paths[self.PAIRS.index((j, k))]


def _vertex_path(path: tuple[str, ...]) -> tuple[frozenset, ...]:
    out = [frozenset((path[0],))]
    for a, b in zip(path, path[1:]):
        out.append(frozenset((a, b)))
        out.append(frozenset((b,)))
    return tuple(out)


def build_asteroidal_map(K: SimplicialComplex, obs: Obstruction1) -> AsteroidalMap1:
    if not verify_obstruction(K, obs):
        raise InvalidObstruction(f"{obs!r} is not an obstruction for this complex")
    if isinstance(obs, NonClique):
        v = face_key(obs.face)[:3]
        I = frozenset(obs.face)
        F = tuple(I - {x} for x in v)
        paths = tuple((F[j], F[j] & F[k], F[k]) for j, k in AsteroidalMap1.PAIRS)
        m = AsteroidalMap1(F, paths)
    elif isinstance(obs, InducedCycle):
        # the cycle is read as v_1..v_n with v_0 = v_n
        c = obs.cycle
        n = len(c)
        vtx = {i: c[(i - 1) % n] for i in range(0, n + 1)}
        e = lambda a, b: frozenset((vtx[a], vtx[b]))  # noqa: E731
        s = lambda a: frozenset((vtx[a],))  # noqa: E731
        F = (e(0, 1), e(1, 2), e(2, 3))
        p12 = (e(0, 1), s(1), e(1, 2))
        p23 = (e(1, 2), s(2), e(2, 3))
        p13 = [e(n, 1), s(n)]
        for i in range(n, 3, -1):
            p13 += [e(i - 1, i), s(i - 1)]
        p13.append(e(2, 3))
        m = AsteroidalMap1(F, (p12, tuple(p13), p23))
    else:
        F = tuple(frozenset((x,)) for x in obs.triple)
        m = AsteroidalMap1(F, tuple(_vertex_path(p) for p in obs.paths))
    if not verify_asteroidal_map(K, m):
        raise VerificationFailed("constructed asteroidal map does not verify")
    return m


def verify_asteroidal_map(K: SimplicialComplex, m: AsteroidalMap1) -> bool:
    if len(m.faces) != 3 or len(m.paths) != 3:
        return False
    for F in m.faces:
        if not F or not K.contains(F):
            return False
    for (j, k), path in zip(AsteroidalMap1.PAIRS, m.paths):
        if not path or path[0] != m.faces[j] or path[-1] != m.faces[k]:
            return False
        for G in path:
            if not G or not K.contains(G):
                return False
        for A, B in zip(path, path[1:]):
            if not (A <= B or B <= A):
                return False
        i = 3 - j - k
        if any(K.contains(G | m.faces[i]) for G in path):
            return False
    return True


# -- dimension two through planarity of the dual --------------------------


@dataclass(frozen=True)
class TwoRepVerdict:
    """``applicable`` is False unless the dual complex is a graph."""

    applicable: bool
    representable: bool | None = None
    realization: LinearRealization | None = None
    drawing: PlanarDrawing | None = None
    obstruction: KuratowskiSubgraph | None = None


def decide_2_representable_cograph(K: SimplicialComplex, guard: int = FACE_GUARD) -> TwoRepVerdict:
    D = dual(K)
    if D.complex.dim != 1:
        return TwoRepVerdict(False)
    result = planar_embed(D.complex, guard)
    if result.drawing is None:
        return TwoRepVerdict(True, False, obstruction=result.obstruction)
    pos = result.drawing.as_dict()
    R = LinearRealization(2, [(D.facet_of[label], pos[label]) for label in D.complex.vertices])
    if not (is_faithful(K, R) and realizes(K, R)):
        raise VerificationFailed("planar drawing of the dual is not a faithful realization")
    return TwoRepVerdict(True, True, realization=R, drawing=result.drawing)
