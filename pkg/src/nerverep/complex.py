"""Finite abstract simplicial complexes and their combinatorial constructions.

A complex is stored by its facet antichain only. Vertex labels are text
tokens ordered as plain strings, and every enumeration below walks faces in
that order so results are reproducible run to run.

Faces are ``frozenset[str]``. The *canonical key* of a face is its sorted
tuple of labels; facet lists are kept sorted by that key.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    BadLabel,
    EmptyInput,
    NotAFace,
    SizeGuardExceeded,
    UnknownVertex,
)

Face = frozenset

FACE_GUARD = 2_000_000
LERAY_VERTEX_GUARD = 16


def face_key(face: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(face))


def size_key(face: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Order by dimension first, then canonically."""
    key = face_key(face)
    return (len(key), key)


def check_label(label: object) -> str:
    if not isinstance(label, str) or not label:
        raise BadLabel(f"vertex label must be a nonempty string, got {label!r}")
    if any(ch.isspace() for ch in label) or "#" in label:
        raise BadLabel(f"vertex label {label!r} contains whitespace or '#'")
    return label


def face_labels(faces: Iterable[Iterable[str]]) -> dict[frozenset, str]:
    """Give each face a unique text label, e.g. ``{1,2,3} -> "123"``.

    Labels are concatenated when every vertex label is a single character
    and joined with ``+`` otherwise. If that is not injective (labels that
    themselves contain ``+``), faces fall back to ``F1, F2, ...`` in
    canonical order.
    """
    faces = sorted({frozenset(f) for f in faces}, key=face_key)
    verts = set().union(*faces) if faces else set()
    sep = "" if all(len(v) == 1 for v in verts) else "+"
    names = {f: sep.join(face_key(f)) for f in faces}
    if all(names.values()) and len(set(names.values())) == len(names):
        return names
    return {f: f"F{i}" for i, f in enumerate(faces, 1)}


def maximal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    """Inclusion-maximal members, canonical order, duplicates removed."""
    # Larger sets first so a set only needs checking against kept ones.
    uniq = sorted({frozenset(s) for s in sets}, key=lambda s: (-len(s), face_key(s)))
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return sorted(kept, key=face_key)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.

    The constructor accepts any iterable of faces and keeps the
    inclusion-maximal nonempty ones, so ``SimplicialComplex([{1,2},{1}])``
    has the single facet ``{1,2}``.
    """

    facets: tuple[frozenset, ...]

    def __init__(self, faces: Iterable[Iterable[str]] = ()):
        clean = []
        for f in faces:
            f = frozenset(f)
            for v in f:
                check_label(v)
            if f:
                clean.append(f)
        object.__setattr__(self, "facets", tuple(maximal_sets(clean)))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(face_key(f)) + "}" for f in self.facets)
        return f"SimplicialComplex([{body}])"

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(set().union(*self.facets))) if self.facets else ()

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def contains(self, face: Iterable[str]) -> bool:
        face = frozenset(face)
        if not face:
            return True
        return any(face <= f for f in self.facets)

    def facets_containing(self, face: Iterable[str]) -> list[frozenset]:
        face = frozenset(face)
        return [f for f in self.facets if face <= f]

    def faces(self, guard: int = FACE_GUARD) -> list[frozenset]:
        """All nonempty faces ordered by dimension, then canonically."""
        return list(self._faces(guard))

    def _faces(self, guard: int) -> tuple[frozenset, ...]:
        cache = self.__dict__.setdefault("_face_cache", {})
        if "faces" in cache:
            if len(cache["faces"]) > guard:
                raise SizeGuardExceeded(f"complex has more than {guard} faces")
            return cache["faces"]
        seen: set[frozenset] = set()
        for facet in self.facets:
            members = face_key(facet)
            for r in range(1, len(members) + 1):
                for sub in itertools.combinations(members, r):
                    seen.add(frozenset(sub))
                if len(seen) > guard:
                    raise SizeGuardExceeded(f"complex has more than {guard} faces")
        cache["faces"] = tuple(sorted(seen, key=size_key))
        return cache["faces"]

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(self._faces(FACE_GUARD))

    @cached_property
    def facet_labels(self) -> dict[frozenset, str]:
        """Labels used for the facets when they become vertices of the dual."""
        return face_labels(self.facets)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self._faces(FACE_GUARD))


def build_complex(raw_faces: Sequence[Iterable[str]]) -> SimplicialComplex:
    if not raw_faces:
        raise EmptyInput("no faces given")
    faces = []
    for f in raw_faces:
        f = frozenset(str(v) if isinstance(v, int) else v for v in f)
        if not f:
            raise EmptyInput("faces must be nonempty")
        faces.append(f)
    return SimplicialComplex(faces)


def contains_face(K: SimplicialComplex, F: Iterable[str]) -> bool:
    return K.contains(F)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    out = []
    for f in K.facets:
        if len(f) <= k + 1:
            out.append(f)
        else:
            out.extend(frozenset(c) for c in itertools.combinations(face_key(f), k + 1))
    return SimplicialComplex(out)


def simplex_skeleton(n: int, k: int) -> SimplicialComplex:
    """The k-skeleton of the n-simplex on vertices ``"1"`` .. ``str(n+1)``."""
    if k > n:
        raise ValueError("k must not exceed n")
    verts = [str(i) for i in range(1, n + 2)]
    return SimplicialComplex(itertools.combinations(verts, k + 1))


def nerve(family: Sequence[tuple[str, Iterable]]) -> SimplicialComplex:
    """Nerve of named finite sets: name-subsets whose sets share an element."""
    names = [check_label(name) for name, _ in family]
    if len(set(names)) != len(names):
        raise ValueError("names in a nerve family must be distinct")
    holders: dict[object, set[str]] = {}
    for name, members in family:
        for x in members:
            holders.setdefault(x, set()).add(name)
    return SimplicialComplex(holders.values())


class Dual(NamedTuple):
    complex: SimplicialComplex
    facet_of: dict[str, frozenset]


def dual(K: SimplicialComplex) -> Dual:
    """The nerve of the facets of ``K``, with labels mapped back to facets."""
    labels = K.facet_labels
    result = nerve([(labels[J], J) for J in K.facets])
    return Dual(result, {name: J for J, name in labels.items()})


def cont(K: SimplicialComplex, F: Iterable[str]) -> frozenset:
    """Labels of the facets of ``K`` that contain ``F`` (a face of the dual)."""
    F = frozenset(F)
    holders = K.facets_containing(F)
    if not holders:
        raise NotAFace(f"{face_key(F)} is not a face of the complex")
    labels = K.facet_labels
    return frozenset(labels[J] for J in holders)


def sd_labels(K: SimplicialComplex, guard: int = FACE_GUARD) -> dict[frozenset, str]:
    """Labels of the faces of ``K`` as vertices of the barycentric subdivision."""
    cache = K.__dict__.setdefault("_sd_labels", {})
    if "labels" not in cache:
        cache["labels"] = face_labels(K.faces(guard))
    return cache["labels"]


def maximal_chains(K: SimplicialComplex) -> list[tuple[frozenset, ...]]:
    chains = []
    for J in K.facets:
        for order in itertools.permutations(face_key(J)):
            chains.append(tuple(frozenset(order[: i + 1]) for i in range(len(order))))
    return chains


def barycentric_subdivision(K: SimplicialComplex, guard: int = FACE_GUARD) -> SimplicialComplex:
    labels = sd_labels(K, guard)
    if sum(_factorial(len(J)) for J in K.facets) > guard:
        raise SizeGuardExceeded("too many maximal chains")
    return SimplicialComplex(
        frozenset(labels[F] for F in chain) for chain in maximal_chains(K)
    )


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def minimal_nonfaces(K: SimplicialComplex, guard: int = FACE_GUARD) -> list[frozenset]:
    """Inclusion-minimal vertex sets that are not faces."""
    faces = K.face_set if guard >= FACE_GUARD else frozenset(K.faces(guard))
    V = K.vertices
    found = set()
    for u, v in itertools.combinations(V, 2):
        if frozenset((u, v)) not in faces:
            found.add(frozenset((u, v)))
    for F in faces:
        if len(F) < 2:
            continue
        top = max(F)
        for v in V:
            if v <= top:
                continue
            cand = F | {v}
            if cand in faces:
                continue
            if all(cand - {u} in faces for u in cand):
                found.add(cand)
    return sorted(found, key=size_key)


def induced_subcomplex(K: SimplicialComplex, W: Iterable[str]) -> SimplicialComplex:
    W = frozenset(W)
    missing = W - set(K.vertices)
    if missing:
        raise UnknownVertex(f"not vertices of the complex: {sorted(missing)}")
    return SimplicialComplex(J & W for J in K.facets)


def clique_witness(K: SimplicialComplex) -> frozenset | None:
    """A minimal non-face all of whose pairs are edges, or ``None``."""
    for I in minimal_nonfaces(K):
        if len(I) >= 3:
            return I
    return None


def is_clique_complex(K: SimplicialComplex) -> bool:
    return clique_witness(K) is None


def _rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in pivots:
                r ^= pivots[h]
            else:
                pivots[h] = r
                rank += 1
                break
    return rank


def betti_z2(K: SimplicialComplex, guard: int = FACE_GUARD) -> list[int]:
    """Reduced Betti numbers over GF(2) in dimensions ``0 .. dim K``."""
    if K.is_empty():
        return []
    by_dim: list[list[frozenset]] = [[] for _ in range(K.dim + 1)]
    for F in K.faces(guard):
        by_dim[len(F) - 1].append(F)
    index = [{F: i for i, F in enumerate(fs)} for fs in by_dim]
    # rank[k] is the rank of the boundary map out of dimension k;
    # the augmentation C_0 -> GF(2) has rank 1.
    rank = [1] + [0] * K.dim + [0]
    for k in range(1, K.dim + 1):
        lower = index[k - 1]
        rows = []
        for F in by_dim[k]:
            mask = 0
            for v in F:
                mask |= 1 << lower[F - {v}]
            rows.append(mask)
        rank[k] = _rank_gf2(rows)
    return [len(by_dim[k]) - rank[k] - rank[k + 1] for k in range(K.dim + 1)]


@dataclass(frozen=True)
class LerayWitness:
    vertices: frozenset
    dim: int


def leray_witness(
    K: SimplicialComplex, d: int, vertex_guard: int = LERAY_VERTEX_GUARD
) -> LerayWitness | None:
    """First induced subcomplex with nonzero reduced homology in some dim >= d."""
    V = K.vertices
    if len(V) > vertex_guard:
        raise SizeGuardExceeded(f"{len(V)} vertices exceeds the Leray bound {vertex_guard}")
    if K.dim < d:
        return None
    facets = [frozenset(J) for J in K.facets]
    for r in range(d + 1, len(V) + 1):
        for W in itertools.combinations(V, r):
            Wset = frozenset(W)
            pieces = {J & Wset for J in facets}
            tops = [P for P in pieces if not any(P < Q for Q in pieces)]
            if max(map(len, tops)) <= d:
                continue
            # a vertex in exactly one facet of size >= 2 collapses away, so the
            # homology equals that of W minus the vertex, which came earlier
            owners = {}
            for P in tops:
                for v in P:
                    owners[v] = owners.get(v, 0) + 1
            if any(owners[v] == 1 and len(P) > 1 for P in tops for v in P):
                continue
            betti = betti_z2(SimplicialComplex(tops))
            for m in range(d, len(betti)):
                if betti[m]:
                    return LerayWitness(frozenset(W), m)
    return None


def is_d_leray(K: SimplicialComplex, d: int, vertex_guard: int = LERAY_VERTEX_GUARD) -> bool:
    return leray_witness(K, d, vertex_guard) is None


@dataclass(frozen=True)
class GeometricPoint:
    """A point of a geometric realization, as positive barycentric weights.

    ``weights`` is stored as a sorted tuple of ``(vertex, weight)`` pairs;
    the support is the set of vertices carrying weight.
    """

    weights: tuple[tuple[str, Fraction], ...]

    def __init__(self, weights: Mapping[str, Fraction | int] | Iterable[tuple[str, Fraction | int]]):
        items = dict(weights).items() if not isinstance(weights, dict) else weights.items()
        pairs = tuple(sorted((v, Fraction(w)) for v, w in items))
        if not pairs:
            raise ValueError("a point needs at least one vertex")
        if any(w <= 0 for _, w in pairs):
            raise ValueError("weights must be strictly positive")
        if sum(w for _, w in pairs) != 1:
            raise ValueError("weights must sum to 1")
        object.__setattr__(self, "weights", pairs)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.weights)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.weights)

    @classmethod
    def vertex(cls, v: str) -> "GeometricPoint":
        return cls({v: 1})

    @classmethod
    def barycenter(cls, face: Iterable[str]) -> "GeometricPoint":
        face = face_key(face)
        return cls({v: Fraction(1, len(face)) for v in face})


def subdivision_coordinates(x: GeometricPoint) -> list[tuple[frozenset, Fraction]]:
    """Write ``x`` as a convex combination of barycenters along a chain.

    Returns ``[(F_1, c_1), ..., (F_n, c_n)]`` with ``F_1 < ... < F_n = supp(x)``
    and positive ``c_j`` summing to 1, so that
    ``x = sum c_j * barycenter(F_j)``.
    """
    # heaviest vertices first; ties broken by label
    ranked = sorted(x.weights, key=lambda vw: (-vw[1], vw[0]))
    out = []
    for j, (_, w) in enumerate(ranked, 1):
        nxt = ranked[j][1] if j < len(ranked) else Fraction(0)
        coeff = j * (w - nxt)
        if coeff:
            out.append((frozenset(v for v, _ in ranked[:j]), coeff))
    return out


def iota_point(K: SimplicialComplex, x: GeometricPoint) -> GeometricPoint:
    """Send a point of ``|K|`` into ``|K'|`` through the barycentric subdivision.

    Each chain vertex ``F`` goes to the barycenter of ``cont(F)``; the result
    is the matching convex combination. Its support is ``cont(F_1)`` for the
    smallest chain face ``F_1`` with positive coefficient.
    """
    if not K.contains(x.support):
        raise NotAFace(f"support {face_key(x.support)} is not a face")
    total: dict[str, Fraction] = {}
    for F, c in subdivision_coordinates(x):
        target = cont(K, F)
        share = c / len(target)
        for label in target:
            total[label] = total.get(label, Fraction(0)) + share
    return GeometricPoint(total)
