"""Text file formats and the versioned JSON encoding of certificates.

Every certificate encodes enough to be re-verified offline: ``from_json``
rebuilds the same object, which can then be handed to its ``verify_*``
function.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .collapse import CollapseSequence, CollapseStep
from .complex import SimplicialComplex, build_complex, face_key
from .configspace import S0Result, SymmetricCycle
from .errors import BadLabel, ComplexError, DimensionMismatch, EmptyInput
from .geometry import LinearRealization, format_rational, parse_rational
from .planar import KuratowskiSubgraph, PlanarDrawing
from .representability import (
    AsteroidalMap1,
    AsteroidalTriple,
    InducedCycle,
    IntervalRepresentation,
    NonClique,
)

SCHEMA = "nerverep/1"


# -- complex files ----------------------------------------------------------


def parse_complex(text: str) -> SimplicialComplex:
    """One facet per line, labels separated by whitespace, ``#`` comments."""
    faces = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            faces.append(line.split())
    if not faces:
        raise EmptyInput("no facets in complex file")
    return build_complex(faces)


def format_complex(K: SimplicialComplex) -> str:
    return "".join(" ".join(face_key(J)) + "\n" for J in K.facets)


# -- realization files ------------------------------------------------------


def parse_realization(text: str) -> LinearRealization:
    """Header ``d=<n>`` then ``labels : coordinates`` per facet."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("d="):
        raise ComplexError("realization file must start with d=<n>")
    try:
        d = int(lines[0][2:])
    except ValueError:
        raise ComplexError(f"bad header {lines[0]!r}") from None
    points = []
    for ln in lines[1:]:
        if ":" not in ln:
            raise ComplexError(f"missing ':' in {ln!r}")
        left, right = ln.split(":", 1)
        labels, coords = left.split(), right.split()
        if not labels:
            raise BadLabel(f"no facet labels in {ln!r}")
        if len(coords) != d:
            raise DimensionMismatch(f"expected {d} coordinates in {ln!r}")
        points.append((frozenset(labels), [parse_rational(c) for c in coords]))
    return LinearRealization(d, points)


def format_realization(R: LinearRealization) -> str:
    out = [f"d={R.d}\n"]
    for J, p in R.points:
        out.append(" ".join(face_key(J)) + " : " + " ".join(format_rational(c) for c in p) + "\n")
    return "".join(out)


# -- JSON -----------------------------------------------------------------


def _face(F) -> list[str]:
    return list(face_key(F))


def _q(x: Fraction) -> str:
    return format_rational(x)


def to_json(obj: Any) -> dict:
    """Encode a complex or certificate as a plain dict with a ``type`` tag."""
    if isinstance(obj, SimplicialComplex):
        body = {"type": "complex", "facets": [_face(J) for J in obj.facets]}
    elif isinstance(obj, IntervalRepresentation):
        body = {"type": "intervals", "intervals": [[v, _q(lo), _q(hi)] for v, lo, hi in obj.intervals]}
    elif isinstance(obj, PlanarDrawing):
        body = {
            "type": "drawing",
            "positions": [[v, list(p)] for v, p in obj.positions],
            "edges": [list(e) for e in obj.edges],
        }
    elif isinstance(obj, LinearRealization):
        body = {
            "type": "realization",
            "d": obj.d,
            "points": [[_face(J), [_q(c) for c in p]] for J, p in obj.points],
        }
    elif isinstance(obj, CollapseSequence):
        body = {
            "type": "collapse",
            "d": obj.d,
            "steps": [[_face(s.free_face), _face(s.unique_facet)] for s in obj.steps],
        }
    elif isinstance(obj, NonClique):
        body = {"type": "non-clique", "face": _face(obj.face)}
    elif isinstance(obj, InducedCycle):
        body = {"type": "induced-cycle", "cycle": list(obj.cycle)}
    elif isinstance(obj, AsteroidalTriple):
        body = {"type": "asteroidal-triple", "triple": list(obj.triple), "paths": [list(p) for p in obj.paths]}
    elif isinstance(obj, AsteroidalMap1):
        body = {
            "type": "asteroidal-map",
            "faces": [_face(F) for F in obj.faces],
            "paths": [[_face(G) for G in p] for p in obj.paths],
        }
    elif isinstance(obj, SymmetricCycle):
        body = {"type": "symmetric-cycle", "nodes": [[_face(a), _face(b)] for a, b in obj.nodes]}
    elif isinstance(obj, KuratowskiSubgraph):
        body = {
            "type": "kuratowski",
            "kind": obj.kind,
            "branches": list(obj.branches),
            "paths": [list(p) for p in obj.paths],
        }
    elif isinstance(obj, S0Result):
        body = {
            "type": "s0",
            "coloring": None
            if obj.coloring is None
            else [[_face(a), _face(b), s] for (a, b), s in obj.coloring],
            "component": None if obj.component is None else [_face(x) for x in obj.component],
        }
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")
    return {"schema": SCHEMA, **body}


def from_json(data: dict) -> Any:
    if data.get("schema") != SCHEMA:
        raise ComplexError(f"unsupported schema {data.get('schema')!r}")
    kind = data["type"]
    fs = frozenset
    if kind == "complex":
        return SimplicialComplex(data["facets"])
    if kind == "intervals":
        return IntervalRepresentation(
            tuple((v, parse_rational(lo), parse_rational(hi)) for v, lo, hi in data["intervals"])
        )
    if kind == "drawing":
        return PlanarDrawing(
            tuple((v, (int(p[0]), int(p[1]))) for v, p in data["positions"]),
            tuple(tuple(e) for e in data["edges"]),
        )
    if kind == "realization":
        return LinearRealization(data["d"], [(fs(J), [parse_rational(c) for c in p]) for J, p in data["points"]])
    if kind == "collapse":
        return CollapseSequence(data["d"], tuple(CollapseStep(fs(F), fs(J)) for F, J in data["steps"]))
    if kind == "non-clique":
        return NonClique(fs(data["face"]))
    if kind == "induced-cycle":
        return InducedCycle(tuple(data["cycle"]))
    if kind == "asteroidal-triple":
        return AsteroidalTriple(tuple(data["triple"]), tuple(tuple(p) for p in data["paths"]))
    if kind == "asteroidal-map":
        return AsteroidalMap1(
            tuple(fs(F) for F in data["faces"]),
            tuple(tuple(fs(G) for G in p) for p in data["paths"]),
        )
    if kind == "symmetric-cycle":
        return SymmetricCycle(tuple((fs(a), fs(b)) for a, b in data["nodes"]))
    if kind == "kuratowski":
        return KuratowskiSubgraph(data["kind"], tuple(data["branches"]), tuple(tuple(p) for p in data["paths"]))
    if kind == "s0":
        col = data["coloring"]
        comp = data["component"]
        return S0Result(
            None if col is None else tuple(((fs(a), fs(b)), s) for a, b, s in col),
            None if comp is None else (fs(comp[0]), fs(comp[1])),
        )
    raise ComplexError(f"unknown certificate type {kind!r}")


def dumps(data: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def round_trip(obj: Any) -> Any:
    return from_json(json.loads(dumps(to_json(obj))))
