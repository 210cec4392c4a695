"""Elementary d-collapses and the search for a collapse to the empty complex."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .complex import SimplicialComplex, face_key, size_key
from .errors import DimTooBig, NotAFace, NotFree, SizeGuardExceeded

STATE_GUARD = 50_000


@dataclass(frozen=True)
class CollapseStep:
    free_face: frozenset
    unique_facet: frozenset


@dataclass(frozen=True)
class CollapseSequence:
    d: int
    steps: tuple[CollapseStep, ...]


class Mode(str, Enum):
    GREEDY = "greedy"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class CollapseOutcome:
    """Result of a collapsibility search.

    ``collapsible`` is ``None`` when the state guard stopped the search.
    A ``False`` from greedy mode is a heuristic and has ``authoritative``
    set to ``False``.
    """

    collapsible: bool | None
    sequence: CollapseSequence | None = None
    authoritative: bool = True
    states: int = 0


def _collapse_facets(facets: frozenset, F: frozenset, J: frozenset) -> frozenset:
    rest = [G for G in facets if G != J]
    pieces = [J - {v} for v in F if len(J) > 1]
    pieces = [P for P in pieces if not any(P <= G for G in rest)]
    # the pieces are pairwise incomparable, and none lies in a remaining facet
    return frozenset(rest + [frozenset(P) for P in pieces if P])


def elementary_collapse(K: SimplicialComplex, F, d: int) -> SimplicialComplex:
    """Delete ``F`` and every face containing it; ``F`` must be free and small."""
    F = frozenset(F)
    if not F or not K.contains(F):
        raise NotAFace(f"{face_key(F)} is not a face")
    if len(F) > d:
        raise DimTooBig(f"face of dimension {len(F) - 1} is not below {d}")
    holders = K.facets_containing(F)
    if len(holders) != 1:
        raise NotFree(f"{face_key(F)} lies in {len(holders)} facets")
    return SimplicialComplex(_collapse_facets(frozenset(K.facets), F, holders[0]))


def free_faces(facets: frozenset, d: int) -> list[tuple[frozenset, frozenset]]:
    """``(F, J)`` pairs with ``|F| <= d`` and ``J`` the only facet above ``F``.

    Ordered smallest dimension first, then canonically.
    """
    out = []
    ordered = sorted(facets, key=face_key)
    for J in ordered:
        others = [G for G in ordered if G != J]
        members = face_key(J)
        for r in range(1, min(d, len(members)) + 1):
            for sub in itertools.combinations(members, r):
                F = frozenset(sub)
                if not any(F <= G for G in others):
                    out.append((F, J))
    out.sort(key=lambda fj: size_key(fj[0]))
    return out


def is_d_collapsible(
    K: SimplicialComplex,
    d: int,
    mode: Mode | str = Mode.EXHAUSTIVE,
    guard: int = STATE_GUARD,
) -> CollapseOutcome:
    if d < 1:
        raise ValueError("d must be at least 1")
    mode = Mode(mode)
    start = frozenset(K.facets)
    if mode is Mode.GREEDY:
        return _greedy(start, d, guard)
    return _exhaustive(start, d, guard)


def _greedy(state: frozenset, d: int, guard: int) -> CollapseOutcome:
    steps = []
    for count in itertools.count(1):
        if not state:
            return CollapseOutcome(True, CollapseSequence(d, tuple(steps)), True, count)
        if count > guard:
            return CollapseOutcome(None, None, False, count)
        moves = free_faces(state, d)
        if not moves:
            return CollapseOutcome(False, None, False, count)
        F, J = moves[0]
        steps.append(CollapseStep(F, J))
        state = _collapse_facets(state, F, J)
    raise AssertionError("unreachable")


def _exhaustive(start: frozenset, d: int, guard: int) -> CollapseOutcome:
    """Depth-first search over reachable complexes, memoizing dead ends.

    Moves are tried in canonical order, so the first sequence found is the
    canonically first one.
    """
    dead: set[frozenset] = set()
    seen = 1
    # each frame: (state, remaining moves iterator, move that led here)
    stack = [(start, iter(free_faces(start, d)), None)]
    while stack:
        state, moves, _ = stack[-1]
        if not state:
            steps = tuple(CollapseStep(F, J) for _, _, (F, J) in stack[1:])
            return CollapseOutcome(True, CollapseSequence(d, steps), True, seen)
        advanced = False
        for F, J in moves:
            nxt = _collapse_facets(state, F, J)
            if nxt in dead:
                continue
            seen += 1
            if seen > guard:
                return CollapseOutcome(None, None, False, seen)
            stack.append((nxt, iter(free_faces(nxt, d)), (F, J)))
            advanced = True
            break
        if not advanced:
            dead.add(state)
            stack.pop()
    return CollapseOutcome(False, None, True, seen)


def verify_collapse(K: SimplicialComplex, seq: CollapseSequence) -> bool:
    """Replay ``seq`` from ``K`` and check it ends at the empty complex."""
    state = frozenset(K.facets)
    for step in seq.steps:
        F, J = frozenset(step.free_face), frozenset(step.unique_facet)
        if not F or len(F) > seq.d or not F <= J:
            return False
        holders = [G for G in state if F <= G]
        if holders != [J]:
            return False
        state = _collapse_facets(state, F, J)
    return not state


def collapse_or_raise(K: SimplicialComplex, d: int, guard: int = STATE_GUARD) -> CollapseOutcome:
    """Exhaustive search that raises instead of returning an undecided outcome."""
    out = is_d_collapsible(K, d, Mode.EXHAUSTIVE, guard)
    if out.collapsible is None:
        raise SizeGuardExceeded(f"collapse search exceeded {guard} states")
    return out
