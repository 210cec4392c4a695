"""Exact convex geometry over the rationals.

Convex sets are always hulls of finite generator sets. Whether a family of
hulls has a common point is an LP feasibility question on the convex
combination weights, which ``lp.feasible_point`` answers exactly, so no
verdict here depends on floating point.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .complex import (
    SimplicialComplex,
    face_key,
    minimal_nonfaces,
)
from .errors import DimensionMismatch, FacetMismatch
from .lp import feasible_point

QPoint = tuple[Fraction, ...]

_RATIONAL = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def qpoint(coords: Iterable[Fraction | int | str]) -> QPoint:
    out = tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coords)
    if not out:
        raise DimensionMismatch("points need at least one coordinate")
    return out


def _dimension(sets: Sequence[Sequence[QPoint]]) -> int:
    dims = {len(p) for s in sets for p in s}
    if len(dims) != 1:
        raise DimensionMismatch(f"points of mixed dimension {sorted(dims)}")
    return dims.pop()


def common_point(sets: Sequence[Iterable[QPoint]]) -> QPoint | None:
    """A point lying in the convex hull of every set, or ``None``."""
    sets = [sorted(set(map(tuple, s))) for s in sets]
    if not sets or any(not s for s in sets):
        raise ValueError("need at least one nonempty set")
    d = _dimension(sets)
    if len(sets) == 1:
        return sets[0][0]
    if d == 1:
        # on the line a hull is [min, max]; no LP needed
        lo = max(s[0][0] for s in sets)
        hi = min(s[-1][0] for s in sets)
        return (lo,) if lo <= hi else None

    offsets = []
    n = 0
    for s in sets:
        offsets.append(n)
        n += len(s)
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for t, s in enumerate(sets):
        row = [Fraction(0)] * n
        for k in range(len(s)):
            row[offsets[t] + k] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    base = sets[0]
    for t in range(1, len(sets)):
        for axis in range(d):
            row = [Fraction(0)] * n
            for k, p in enumerate(sets[t]):
                row[offsets[t] + k] += p[axis]
            for k, p in enumerate(base):
                row[k] -= p[axis]
            A.append(row)
            b.append(Fraction(0))
    x = feasible_point(A, b)
    if x is None:
        return None
    return tuple(sum((x[k] * p[axis] for k, p in enumerate(base)), Fraction(0)) for axis in range(d))


def hulls_intersect(sets: Sequence[Iterable[QPoint]]) -> bool:
    return common_point(sets) is not None


@dataclass(frozen=True)
class HullFamily:
    """Named generator sets; the convex sets are their hulls."""

    members: tuple[tuple[str, tuple[QPoint, ...]], ...]

    def __init__(self, members: Mapping[str, Iterable[QPoint]] | Iterable[tuple[str, Iterable[QPoint]]]):
        items = members.items() if isinstance(members, Mapping) else members
        clean = tuple((name, tuple(sorted(set(map(tuple, pts))))) for name, pts in items)
        names = [name for name, _ in clean]
        if len(set(names)) != len(names):
            raise ValueError("hull names must be distinct")
        if clean:
            _dimension([pts for _, pts in clean if pts])
        object.__setattr__(self, "members", clean)

    def as_dict(self) -> dict[str, tuple[QPoint, ...]]:
        return dict(self.members)


def nerve_of_hulls(family: HullFamily) -> SimplicialComplex:
    """Nerve of the hulls, grown one cardinality at a time.

    A k-set is only tested when all its (k-1)-subsets already intersect.
    """
    gens = {name: pts for name, pts in family.members if pts}
    if not family.members:
        raise ValueError("empty family")
    level = [frozenset((name,)) for name in sorted(gens)]
    faces: list[frozenset] = list(level)
    while level:
        known = set(level)
        nxt = []
        ordered = sorted(level, key=face_key)
        for a, b in itertools.combinations(ordered, 2):
            ka, kb = face_key(a), face_key(b)
            if ka[:-1] != kb[:-1]:
                continue
            cand = a | b
            if not all(cand - {v} in known for v in cand):
                continue
            if hulls_intersect([gens[v] for v in face_key(cand)]):
                nxt.append(cand)
        faces.extend(nxt)
        level = nxt
    return SimplicialComplex(faces)


@dataclass(frozen=True)
class LinearRealization:
    """A point ``p_J`` in Q^d for every facet ``J``; extends linearly to ``|K'|``."""

    d: int
    points: tuple[tuple[frozenset, QPoint], ...]

    def __init__(self, d: int, points: Mapping[frozenset, Iterable] | Iterable[tuple[frozenset, Iterable]]):
        items = points.items() if isinstance(points, Mapping) else points
        clean = []
        for J, p in items:
            p = qpoint(p)
            if len(p) != d:
                raise DimensionMismatch(f"point {p} is not in dimension {d}")
            clean.append((frozenset(J), p))
        clean.sort(key=lambda jp: face_key(jp[0]))
        if len({J for J, _ in clean}) != len(clean):
            raise FacetMismatch("a facet was given two points")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "points", tuple(clean))

    def as_dict(self) -> dict[frozenset, QPoint]:
        return dict(self.points)

    def padded(self, d: int) -> "LinearRealization":
        """The same realization inside a higher-dimensional space."""
        if d < self.d:
            raise ValueError("can only pad upwards")
        zeros = (Fraction(0),) * (d - self.d)
        return LinearRealization(d, [(J, p + zeros) for J, p in self.points])


def _check_cover(K: SimplicialComplex, R: LinearRealization) -> dict[frozenset, QPoint]:
    pts = R.as_dict()
    if set(pts) != set(K.facets):
        raise FacetMismatch("realization does not match the facets of the complex")
    return pts


def convex_sets_of(K: SimplicialComplex, R: LinearRealization) -> HullFamily:
    """For each vertex ``i``, the generators ``{p_J : i in J}`` of the image of ``|cont_i|``."""
    pts = _check_cover(K, R)
    return HullFamily([(v, [pts[J] for J in K.facets if v in J]) for v in K.vertices])


def faithfulness_violation(K: SimplicialComplex, R: LinearRealization) -> frozenset | None:
    """First minimal non-face whose hulls meet, or ``None`` when faithful.

    Minimal non-faces suffice: adding sets to a family can only shrink the
    common intersection.
    """
    family = convex_sets_of(K, R).as_dict()
    for I in minimal_nonfaces(K):
        if hulls_intersect([family[v] for v in face_key(I)]):
            return I
    return None


def is_faithful(K: SimplicialComplex, R: LinearRealization) -> bool:
    return faithfulness_violation(K, R) is None


def realizes(K: SimplicialComplex, R: LinearRealization) -> bool:
    """Whether the hulls built from ``R`` have nerve exactly ``K``."""
    return nerve_of_hulls(convex_sets_of(K, R)) == K


def moment_curve_realization(K: SimplicialComplex, d: int) -> LinearRealization:
    """Facets in canonical order go to ``(t, t^2, ..., t^d)`` for ``t = 1, 2, ...``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return LinearRealization(
        d, [(J, [Fraction(t) ** k for k in range(1, d + 1)]) for t, J in enumerate(K.facets, 1)]
    )

