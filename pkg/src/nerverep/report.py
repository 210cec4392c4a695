"""Per-dimension summary of everything the toolkit can say about a complex."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from .collapse import STATE_GUARD, CollapseOutcome, Mode, is_d_collapsible
from .complex import LerayWitness, SimplicialComplex, dual, leray_witness
from .configspace import MatousekStatus, lift_asteroidal, matousek_status
from .errors import SizeGuardExceeded
from .geometry import LinearRealization, is_faithful, moment_curve_realization, realizes
from .representability import (
    build_asteroidal_map,
    decide_1_representable,
    decide_2_representable_cograph,
)


@dataclass(frozen=True)
class Verdict:
    """``value`` is ``None`` for unknown; ``basis`` says how it was reached."""

    value: bool | None
    basis: str
    certificates: tuple[tuple[str, Any], ...] = ()

    def certificate(self, name: str):
        return dict(self.certificates).get(name)


UNKNOWN = Verdict(None, "unknown")


@dataclass(frozen=True)
class DimensionReport:
    d: int
    representable: Verdict
    matousek: MatousekStatus
    collapsible: CollapseOutcome | None
    leray: bool | None
    leray_witness: LerayWitness | None = None


@dataclass(frozen=True)
class Report:
    complex: SimplicialComplex
    dual_dim: int
    bound: int
    bound_realization: LinearRealization | None
    rows: tuple[DimensionReport, ...]

    def row(self, d: int) -> DimensionReport:
        return self.rows[d - 1]


def _direct_representability(K: SimplicialComplex, d: int, dual_dim: int) -> Verdict:
    if d == 1:
        one = decide_1_representable(K)
        if one.representable:
            if one.certificate_pending:
                return Verdict(True, "interval conditions (certificate pending)")
            return Verdict(True, "intervals", (("intervals", one.intervals),))
        amap = build_asteroidal_map(K, one.obstruction)
        certs = (
            ("obstruction", one.obstruction),
            ("asteroidal_map", amap),
            ("symmetric_cycle", lift_asteroidal(K, amap)),
        )
        return Verdict(False, "asteroidal obstruction", certs)
    if d == 2 and dual_dim == 1:
        two = decide_2_representable_cograph(K)
        if two.representable:
            return Verdict(True, "planar dual", (("realization", two.realization), ("drawing", two.drawing)))
        return Verdict(False, "nonplanar dual", (("kuratowski", two.obstruction),))
    R = moment_curve_realization(K, d)
    if is_faithful(K, R) and realizes(K, R):
        return Verdict(True, "moment curve", (("realization", R),))
    return UNKNOWN


def report(K: SimplicialComplex, d_max: int, guard: int = STATE_GUARD) -> Report:
    """Verdicts for ``d = 1..d_max``.

    Known implications fill gaps: representable in ``d`` implies every
    larger ``d``; representable implies Matousek, collapsible and Leray, so a
    failure of any of those rules representability out.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    dual_dim = dual(K).complex.dim if not K.is_empty() else -1
    bound = max(2 * dual_dim + 1, 1)
    bound_R = moment_curve_realization(K, bound) if not K.is_empty() else None
    if bound_R is not None and not (is_faithful(K, bound_R) and realizes(K, bound_R)):
        bound_R = None

    rows = []
    for d in range(1, d_max + 1):
        try:
            rep = _direct_representability(K, d, dual_dim)
        except SizeGuardExceeded:
            rep = UNKNOWN
        try:
            mat = matousek_status(K, d)
        except SizeGuardExceeded:
            mat = MatousekStatus(d, None)
        coll = is_d_collapsible(K, d, Mode.EXHAUSTIVE, guard)
        try:
            wit = leray_witness(K, d)
            ler = wit is None
        except SizeGuardExceeded:
            wit, ler = None, None
        rows.append(DimensionReport(d, rep, mat, coll, ler, wit))

    rows = _fill(rows)
    return Report(K, dual_dim, bound, bound_R, tuple(rows))


def _fill(rows: list[DimensionReport]) -> list[DimensionReport]:
    out = list(rows)
    for i, r in enumerate(out):
        rep = r.representable
        if rep.value is None:
            if r.matousek.holds is False:
                rep = Verdict(False, "not Matousek")
            elif r.collapsible is not None and r.collapsible.collapsible is False and r.collapsible.authoritative:
                rep = Verdict(False, "not collapsible")
            elif r.leray is False:
                rep = Verdict(False, "not Leray")
        mat = r.matousek
        if mat.holds is None and rep.value:
            mat = MatousekStatus(r.d, True, rep.certificate("realization"), "representable")
        out[i] = replace(r, representable=rep, matousek=mat)
    # yes propagates upward, no propagates downward
    for i in range(1, len(out)):
        if out[i].representable.value is None and out[i - 1].representable.value:
            out[i] = replace(out[i], representable=Verdict(True, f"representable in dimension {out[i - 1].d}"))
        if out[i].matousek.holds is None and out[i - 1].matousek.holds:
            out[i] = replace(out[i], matousek=MatousekStatus(out[i].d, True, None, f"Matousek in dimension {out[i - 1].d}"))
    for i in range(len(out) - 2, -1, -1):
        if out[i].representable.value is None and out[i + 1].representable.value is False:
            out[i] = replace(out[i], representable=Verdict(False, f"not representable in dimension {out[i + 1].d}"))
        if out[i].matousek.holds is None and out[i + 1].matousek.holds is False:
            out[i] = replace(
                out[i], matousek=MatousekStatus(out[i].d, False, None, f"not Matousek in dimension {out[i + 1].d}")
            )
    return out
