"""Configuration spaces and deleted products as product Z2-complexes.

A cell is a pair ``(alpha, beta)`` of nonempty faces of a base complex; the
involution swaps the coordinates. For the configuration space of ``K`` the
base is the dual ``K'`` and a pair is a cell when
``(meet alpha) | (meet beta)`` is not a face of ``K``, the meets taken over
the facets named in each coordinate. For a deleted product the condition is
plain disjointness.

Connectivity questions only need the 1-skeleton of the cell structure, so
the search graph has the 0-cells (vertex, vertex) and the 1-cells
(edge, vertex) / (vertex, edge), joined when one lies in the other.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .complex import (
    FACE_GUARD,
    SimplicialComplex,
    cont,
    dual,
    face_key,
    face_labels,
    induced_subcomplex,
    simplex_skeleton,
)
from .errors import (
    InvalidAsteroidalMap,
    NotADualFace,
    SizeGuardExceeded,
    VerificationFailed,
)
from .geometry import LinearRealization, is_faithful, moment_curve_realization, realizes
from .planar import KuratowskiSubgraph
from .representability import (
    AsteroidalMap1,
    decide_2_representable_cograph,
    verify_asteroidal_map,
)

Cell = tuple[frozenset, frozenset]

CONFIG = "config-space"
DELETED = "deleted-product"


def swap(c: Cell) -> Cell:
    return (c[1], c[0])


def cell_key(c: Cell) -> tuple:
    return (len(c[0]) + len(c[1]), face_key(c[0]), face_key(c[1]))


@dataclass(frozen=True)
class Z2Complex:
    """A product Z2-complex over ``base``.

    ``source`` is the complex ``K`` for a configuration space and ``None``
    for a deleted product. ``meets`` maps each base vertex to the set whose
    intersections decide the cell condition.
    """

    base: SimplicialComplex
    kind: str
    source: SimplicialComplex | None = None
    meets: tuple[tuple[str, frozenset], ...] = field(default=(), repr=False)

    @cached_property
    def _meet(self) -> dict[str, frozenset]:
        return dict(self.meets)

    def holds(self, alpha: frozenset, beta: frozenset) -> bool:
        if not alpha or not beta:
            return False
        if self.kind == DELETED:
            return not (alpha & beta)
        m = self._meet
        a = frozenset.intersection(*(m[x] for x in alpha))
        b = frozenset.intersection(*(m[x] for x in beta))
        return not self.source.contains(a | b)

    def is_cell(self, c: Cell) -> bool:
        alpha, beta = frozenset(c[0]), frozenset(c[1])
        return self.base.contains(alpha) and self.base.contains(beta) and self.holds(alpha, beta)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        faces = [f for f in self.base.faces() if f]
        if len(faces) ** 2 > FACE_GUARD:
            raise SizeGuardExceeded(f"{len(faces)}^2 face pairs exceed the guard")
        out = [(a, b) for a in faces for b in faces if self.holds(a, b)]
        return tuple(sorted(out, key=cell_key))

    @cached_property
    def maximal_cells(self) -> tuple[Cell, ...]:
        # downward closure: a cell is maximal iff no one-vertex extension is a cell
        verts = self.base.vertices
        out = []
        for a, b in self.cells:
            grow = any(
                v not in a and self.base.contains(a | {v}) and self.holds(a | {v}, b) for v in verts
            ) or any(v not in b and self.base.contains(b | {v}) and self.holds(a, b | {v}) for v in verts)
            if not grow:
                out.append((a, b))
        return tuple(out)

    def _pair_test(self):
        """Cell test on (meet, meet) with results cached by the union."""
        if self.kind == DELETED:
            return lambda a, b: not (a & b)
        seen: dict[frozenset, bool] = {}

        def test(a, b):
            u = a | b
            if u not in seen:
                seen[u] = not self.source.contains(u)
            return seen[u]

        return test

    def _meet_of(self, face: frozenset) -> frozenset:
        if self.kind == DELETED:
            return face
        return frozenset.intersection(*(self._meet[x] for x in face))

    @cached_property
    def vertex_pairs(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.node_graph[0] if len(c[0]) + len(c[1]) == 2)

    @cached_property
    def node_graph(self) -> tuple[tuple[Cell, ...], dict[Cell, tuple[Cell, ...]]]:
        """Nodes are the cells of dimension at most one, in canonical order.

        Neighbour lists come in construction order; see ``ordered_adjacency``.
        """
        test = self._pair_test()
        singles = [frozenset((v,)) for v in self.base.vertices]
        edges = sorted(
            {frozenset(p) for J in self.base.facets for p in itertools.combinations(sorted(J), 2)}, key=face_key
        )
        meet = {f: self._meet_of(f) for f in singles + edges}
        nodes = [(a, b) for a in singles for b in singles if a != b and test(meet[a], meet[b])]
        adj: dict[Cell, list[Cell]] = {c: [] for c in nodes}
        for e in edges:
            ends = [frozenset((x,)) for x in face_key(e)]
            for v in singles:
                for c, sides in (((e, v), [(x, v) for x in ends]), ((v, e), [(v, x) for x in ends])):
                    # both endpoint pairs must already be cells
                    if sides[0] not in adj or sides[1] not in adj or not test(meet[c[0]], meet[c[1]]):
                        continue
                    nodes.append(c)
                    adj[c] = sides
                    for x in sides:
                        adj[x].append(c)
        fk = {f: face_key(f) for f in meet}
        keys = {c: (len(c[0]) + len(c[1]), fk[c[0]], fk[c[1]]) for c in nodes}
        nodes.sort(key=keys.__getitem__)
        return tuple(nodes), {c: tuple(n) for c, n in adj.items()}

    @cached_property
    def ordered_adjacency(self) -> dict[Cell, tuple[Cell, ...]]:
        """Node-graph neighbours in canonical order, for deterministic searches."""
        nodes, adj = self.node_graph
        rank = {c: i for i, c in enumerate(nodes)}
        return {c: tuple(sorted(n, key=rank.__getitem__)) for c, n in adj.items()}

    @cached_property
    def components(self) -> dict[Cell, int]:
        nodes, adj = self.node_graph
        comp: dict[Cell, int] = {}
        cid = -1
        for s in nodes:
            if s in comp:
                continue
            cid += 1
            comp[s] = cid
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in comp:
                        comp[w] = cid
                        queue.append(w)
        return comp


def config_space(K: SimplicialComplex) -> Z2Complex:
    if K.is_empty():
        raise ValueError("configuration space of the empty complex")
    D = dual(K)
    return Z2Complex(D.complex, CONFIG, K, tuple(sorted(D.facet_of.items())))


def deleted_product(L: SimplicialComplex) -> Z2Complex:
    return Z2Complex(L, DELETED)


def cell_condition(K: SimplicialComplex, alpha, beta) -> bool:
    Z = config_space(K)
    alpha, beta = frozenset(alpha), frozenset(beta)
    for x in (alpha, beta):
        if not x or not Z.base.contains(x):
            raise NotADualFace(f"{face_key(x)} is not a face of the dual")
    return Z.holds(alpha, beta)


# -- the co-graph identity ------------------------------------------------


@dataclass(frozen=True)
class CographCheck:
    """``applicable`` is False unless the dual is a graph; ``witness`` is a differing cell."""

    applicable: bool
    equal: bool | None = None
    witness: Cell | None = None


def check_cograph_identity(K: SimplicialComplex) -> CographCheck:
    Z = config_space(K)
    if Z.base.dim != 1:
        return CographCheck(False)
    P = deleted_product(Z.base)
    diff = sorted(set(Z.cells) ^ set(P.cells), key=cell_key)
    if diff:
        return CographCheck(True, False, diff[0])
    return CographCheck(True, True)


# -- index at most zero ---------------------------------------------------


@dataclass(frozen=True)
class S0Result:
    """Either a sign per node (swap flips it) or a swap-invariant component.

    ``component`` is the node of smallest canonical key in that component.
    """

    coloring: tuple[tuple[Cell, int], ...] | None = None
    component: Cell | None = None

    @property
    def colorable(self) -> bool:
        return self.component is None


def s0_colorable(Z: Z2Complex) -> S0Result:
    comp = Z.components
    nodes, _ = Z.node_graph
    sign: dict[int, int] = {}
    for c in nodes:
        mine, theirs = comp[c], comp[swap(c)]
        if mine == theirs:
            # nodes are in canonical order, so the first hit is the smallest
            return S0Result(component=next(n for n in nodes if comp[n] == mine))
        if mine not in sign:
            sign[mine] = 1
            sign[theirs] = -1
    return S0Result(coloring=tuple((c, sign[comp[c]]) for c in nodes))


def verify_coloring(Z: Z2Complex, coloring: tuple[tuple[Cell, int], ...]) -> bool:
    nodes, adj = Z.node_graph
    col = dict(coloring)
    if set(col) != set(nodes) or any(s not in (1, -1) for s in col.values()):
        return False
    return all(col[swap(c)] == -col[c] and all(col[n] == col[c] for n in adj[c]) for c in nodes)


# -- symmetric cycles -----------------------------------------------------


@dataclass(frozen=True)
class SymmetricCycle:
    nodes: tuple[Cell, ...]

    @property
    def half(self) -> int:
        return len(self.nodes) // 2


def _bfs_path(adj: dict[Cell, tuple[Cell, ...]], src: Cell, dst: Cell) -> list[Cell] | None:
    parent: dict[Cell, Cell | None] = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def find_symmetric_cycle(Z: Z2Complex) -> SymmetricCycle | None:
    """A cycle ``P + swap(P)`` with ``P`` a shortest path from ``p`` to ``swap(p)``.

    ``p`` is the canonically first node whose component is swap-invariant,
    and breadth-first search visits neighbours in canonical order.
    """
    nodes, _ = Z.node_graph
    adj = Z.ordered_adjacency
    comp = Z.components
    start = next((p for p in nodes if comp[p] == comp[swap(p)]), None)
    if start is None:
        return None
    best = _bfs_path(adj, start, swap(start))
    half = best[:-1]
    cyc = SymmetricCycle(tuple(half + [swap(c) for c in half]))
    if not verify_symmetric_cycle(Z, cyc):
        raise VerificationFailed("symmetric cycle failed its own check")
    return cyc


def verify_symmetric_cycle(Z: Z2Complex, c: SymmetricCycle) -> bool:
    nodes = [(frozenset(a), frozenset(b)) for a, b in c.nodes]
    n = len(nodes)
    if n < 2 or n % 2:
        return False
    m = n // 2
    for i, x in enumerate(nodes):
        if not Z.is_cell(x):
            return False
        if nodes[(i + m) % n] != swap(x):
            return False
        y = nodes[(i + 1) % n]
        if x == y:
            return False
        if x[0] == y[0]:
            moved = (x[1], y[1])
        elif x[1] == y[1]:
            moved = (x[0], y[0])
        else:
            return False
        if not (moved[0] <= moved[1] or moved[1] <= moved[0]):
            return False
    return True


def lift_asteroidal(K: SimplicialComplex, m: AsteroidalMap1) -> SymmetricCycle:
    """Push an asteroidal map around the hexagon of the triangle's deleted product.

    Each face ``G`` goes to ``cont_G``. The first half runs
    ``(A1, pi_23)``, ``(pi_12, A3)``, then ``(A2, pi_13 reversed)`` and ends at
    ``(A2, A1)``, the swap of where it started.
    """
    if not verify_asteroidal_map(K, m):
        raise InvalidAsteroidalMap("asteroidal map does not verify")
    A = [cont(K, F) for F in m.faces]
    C = lambda G: cont(K, G)  # noqa: E731
    half = (
        [(A[0], C(G)) for G in m.path(1, 2)]
        + [(C(G), A[2]) for G in m.path(0, 1)]
        + [(A[1], C(G)) for G in reversed(m.path(0, 2))]
    )
    dedup = [half[0]]
    for c in half[1:]:
        if c != dedup[-1]:
            dedup.append(c)
    body = dedup[:-1]
    Z = config_space(K)
    cyc = SymmetricCycle(tuple(body + [swap(c) for c in body]))
    if not verify_symmetric_cycle(Z, cyc):
        raise VerificationFailed("lifted cycle does not verify")
    return cyc


# -- induced subcomplexes -------------------------------------------------


def induced_cell_map(K: SimplicialComplex, W) -> dict[str, str]:
    """Send each facet of ``K[W]`` to the first facet ``J`` of ``K`` with ``W & J`` equal to it."""
    L = induced_subcomplex(K, W)
    W = frozenset(W)
    lab_L, lab_K = L.facet_labels, K.facet_labels
    return {lab_L[JL]: lab_K[next(J for J in K.facets if J & W == JL)] for JL in L.facets}


def check_induced_functoriality(K: SimplicialComplex, W) -> bool:
    """Every cell of the configuration space of ``K[W]`` lands on a cell of ``K``'s."""
    L = induced_subcomplex(K, W)
    if L.is_empty():
        return True
    f = induced_cell_map(K, W)
    ZL, ZK = config_space(L), config_space(K)
    img = lambda S: frozenset(f[x] for x in S)  # noqa: E731
    return all(ZK.is_cell((img(a), img(b))) for a, b in ZL.cells)


# -- dual classifying complexes -------------------------------------------


@dataclass(frozen=True)
class DualClassified:
    complex: SimplicialComplex
    iso: tuple[tuple[str, frozenset], ...]

    def as_dict(self) -> dict[str, frozenset]:
        return dict(self.iso)


DUAL_CLASSIFY_GUARD = 20


def dual_classify(L: SimplicialComplex, guard: int = DUAL_CLASSIFY_GUARD) -> DualClassified:
    """The nerve of the nonempty faces of ``L``, whose dual is ``L`` again."""
    if L.is_empty():
        raise ValueError("dual classifying complex of the empty complex")
    if len(L.vertices) > guard:
        raise SizeGuardExceeded(f"{len(L.vertices)} vertices exceeds the bound {guard}")
    faces = [f for f in L.faces() if f]
    names = face_labels(faces)
    C = {i: frozenset(names[F] for F in faces if i in F) for i in L.vertices}
    K = SimplicialComplex(C.values())
    out = DualClassified(K, tuple(sorted(C.items())))
    if not verify_dual_classify(L, out):
        raise VerificationFailed("dual classifying equivalences failed")
    return out


def verify_dual_classify(L: SimplicialComplex, dc: DualClassified) -> bool:
    K = dc.complex
    C = dc.as_dict()
    if set(C) != set(L.vertices) or set(C.values()) != set(K.facets):
        return False
    Kd = dual(K)
    back = {J: lab for lab, J in Kd.facet_of.items()}
    for r in range(1, len(L.vertices) + 1):
        for I in itertools.combinations(L.vertices, r):
            if L.contains(I) != Kd.complex.contains(back[C[i]] for i in I):
                return False
    meet = {F: frozenset.intersection(*(C[i] for i in F)) for F in L.faces() if F}
    for F, G in itertools.product(meet, repeat=2):
        if bool(F & G) != K.contains(meet[F] | meet[G]):
            return False
    return True


def vkf_instance(d: int) -> SimplicialComplex:
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > 2:
        raise SizeGuardExceeded("only d = 1 and d = 2 are built")
    return dual_classify(simplex_skeleton(2 * d + 2, d)).complex


# -- Matousek status ------------------------------------------------------


MatousekCertificate = Union[S0Result, SymmetricCycle, KuratowskiSubgraph, LinearRealization]


@dataclass(frozen=True)
class MatousekStatus:
    """``holds`` is ``None`` when undecided; ``source`` names the route taken."""

    d: int
    holds: bool | None
    certificate: MatousekCertificate | None = None
    source: str = "unknown"


def matousek_status(K: SimplicialComplex, d: int) -> MatousekStatus:
    if d < 1:
        raise ValueError("d must be at least 1")
    if K.is_empty() or len(K.facets) == 1:
        return MatousekStatus(d, True, None, "empty configuration space")
    if d == 1:
        Z = config_space(K)
        s0 = s0_colorable(Z)
        if s0.colorable:
            return MatousekStatus(1, True, s0, "coloring")
        return MatousekStatus(1, False, find_symmetric_cycle(Z), "symmetric cycle")
    if d == 2:
        two = decide_2_representable_cograph(K)
        if two.applicable:
            if two.representable:
                return MatousekStatus(2, True, two.realization, "planar dual")
            return MatousekStatus(2, False, two.obstruction, "Kuratowski subgraph")
    R = moment_curve_realization(K, d)
    if is_faithful(K, R) and realizes(K, R):
        return MatousekStatus(d, True, R, "moment curve")
    s0 = s0_colorable(config_space(K))
    if s0.colorable:
        return MatousekStatus(d, True, s0, "coloring")
    return MatousekStatus(d, None)
