"""Planarity with checkable certificates.

``networkx`` finds the embedding or the Kuratowski subgraph; everything it
returns is re-verified here with exact integer geometry and plain graph
checks before it leaves this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .complex import FACE_GUARD, SimplicialComplex, face_key
from .errors import ComplexError, SizeGuardExceeded, VerificationFailed

Point2 = tuple[int, int]


@dataclass(frozen=True)
class PlanarDrawing:
    positions: tuple[tuple[str, Point2], ...]
    edges: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict[str, Point2]:
        return dict(self.positions)


@dataclass(frozen=True)
class KuratowskiSubgraph:
    """A subdivided K5 or K3,3 inside a host graph.

    For ``K3,3`` the first three branch vertices form one side.
    """

    kind: str
    branches: tuple[str, ...]
    paths: tuple[tuple[str, ...], ...]


def graph_edges(G: SimplicialComplex) -> list[tuple[str, str]]:
    if G.dim > 1:
        raise ComplexError("expected a graph (a complex of dimension at most 1)")
    return [tuple(face_key(f)) for f in G.facets if len(f) == 2]


def _orient(a: Point2, b: Point2, c: Point2) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    return (
        _orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_meet(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """Closed segments ``ab`` and ``cd`` share at least one point."""
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return _on_segment(a, b, c) or _on_segment(a, b, d) or _on_segment(c, d, a) or _on_segment(c, d, b)


def verify_drawing(G: SimplicialComplex, drawing: PlanarDrawing) -> bool:
    """Straight-line drawing of ``G`` with no improper contact anywhere."""
    pos = drawing.as_dict()
    if set(pos) != set(G.vertices):
        return False
    if any(not all(isinstance(c, int) for c in p) for p in pos.values()):
        return False
    if len(set(pos.values())) != len(pos):
        return False
    edges = graph_edges(G)
    if sorted(map(tuple, map(sorted, drawing.edges))) != sorted(edges):
        return False
    for u, v in edges:
        for w in G.vertices:
            if w not in (u, v) and _on_segment(pos[u], pos[v], pos[w]):
                return False
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        shared = {a, b} & {c, d}
        if not shared:
            if segments_meet(pos[a], pos[b], pos[c], pos[d]):
                return False
        else:
            # two edges at a common vertex may only touch there
            s = shared.pop()
            x = b if a == s else a
            y = d if c == s else c
            if _orient(pos[s], pos[x], pos[y]) == 0 and (
                _on_segment(pos[s], pos[x], pos[y]) or _on_segment(pos[s], pos[y], pos[x])
            ):
                return False
    return True


def verify_kuratowski(G: SimplicialComplex, cert: KuratowskiSubgraph) -> bool:
    """Whether the paths form a subdivision of the named graph inside ``G``."""
    edges = {frozenset(e) for e in graph_edges(G)}
    branches = list(cert.branches)
    if len(set(branches)) != len(branches) or not set(branches) <= set(G.vertices):
        return False
    if cert.kind == "K5":
        if len(branches) != 5:
            return False
        wanted = {frozenset(p) for p in itertools.combinations(branches, 2)}
    elif cert.kind == "K3,3":
        if len(branches) != 6:
            return False
        wanted = {frozenset((a, b)) for a in branches[:3] for b in branches[3:]}
    else:
        return False
    if len(cert.paths) != len(wanted):
        return False
    got = set()
    interior_seen: set[str] = set()
    for path in cert.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        ends = frozenset((path[0], path[-1]))
        if ends not in wanted or ends in got:
            return False
        got.add(ends)
        for u, v in zip(path, path[1:]):
            if frozenset((u, v)) not in edges:
                return False
        inner = set(path[1:-1])
        if inner & set(branches) or inner & interior_seen:
            return False
        interior_seen |= inner
    return got == wanted


@dataclass(frozen=True)
class PlanarityResult:
    drawing: PlanarDrawing | None
    obstruction: KuratowskiSubgraph | None

    @property
    def planar(self) -> bool:
        return self.drawing is not None


def _to_nx(G: SimplicialComplex) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(graph_edges(G))
    return H


def _kuratowski_from(sub: nx.Graph) -> KuratowskiSubgraph:
    deg = dict(sub.degree())
    branches = sorted(v for v, k in deg.items() if k >= 3)
    paths = []
    seen = set()
    for b in branches:
        for nb in sorted(sub.neighbors(b)):
            path = [b, nb]
            while path[-1] not in branches:
                cur, prev = path[-1], path[-2]
                path.append(next(x for x in sorted(sub.neighbors(cur)) if x != prev))
            key = frozenset((path[0], path[-1])), frozenset(path)
            if key in seen:
                continue
            seen.add(key)
            if path[0] > path[-1]:
                path.reverse()
            paths.append(tuple(path))
    paths.sort()
    if len(branches) == 5:
        return KuratowskiSubgraph("K5", tuple(branches), tuple(paths))
    # two-colour the branch vertices of a K3,3 subdivision
    adj = {b: set() for b in branches}
    for p in paths:
        adj[p[0]].add(p[-1])
        adj[p[-1]].add(p[0])
    first = branches[0]
    side_b = sorted(adj[first])
    side_a = sorted(set(branches) - set(side_b))
    return KuratowskiSubgraph("K3,3", tuple(side_a + side_b), tuple(paths))


def planar_embed(G: SimplicialComplex, guard: int = FACE_GUARD) -> PlanarityResult:
    """A verified straight-line grid drawing, or a verified Kuratowski subgraph."""
    if len(G.vertices) + len(G.facets) > guard:
        raise SizeGuardExceeded("graph too large")
    H = _to_nx(G)
    planar, emb = nx.check_planarity(H, counterexample=False)
    if planar:
        if H.number_of_nodes() == 0:
            pos = {}
        else:
            pos = nx.combinatorial_embedding_to_pos(emb)
        drawing = PlanarDrawing(
            tuple(sorted((v, (int(p[0]), int(p[1]))) for v, p in pos.items())),
            tuple(graph_edges(G)),
        )
        if not verify_drawing(G, drawing):
            raise VerificationFailed("grid drawing has a crossing")
        return PlanarityResult(drawing, None)
    _, sub = nx.check_planarity(H, counterexample=True)
    cert = _kuratowski_from(sub)
    if not verify_kuratowski(G, cert):
        raise VerificationFailed("Kuratowski subgraph did not verify")
    return PlanarityResult(None, cert)

