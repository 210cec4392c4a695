"""Command-line interface.

Exit codes: 0 for any decided verdict (including negative ones), 2 for bad
input, 3 when a size guard stops a computation, 4 when a certificate fails
its own verification.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable

from . import collapse as col
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    dual,
    face_key,
    leray_witness,
    minimal_nonfaces,
    skeleton,
)
from .configspace import (
    check_cograph_identity,
    config_space,
    deleted_product,
    dual_classify,
    find_symmetric_cycle,
    s0_colorable,
    vkf_instance,
)
from .errors import ComplexError, SizeGuardExceeded, VerificationFailed
from .fixtures import NAMES, load
from .geometry import (
    faithfulness_violation,
    moment_curve_realization,
    realizes,
)
from .report import Report, report
from .representability import (
    ARRANGEMENT_GUARD,
    AsteroidalTriple,
    InducedCycle,
    NonClique,
    decide_1_representable,
    decide_2_representable_cograph,
)
from .serialize import SCHEMA, dumps, format_complex, format_realization, parse_complex, parse_realization, to_json
from .svg import drawing_svg, intervals_svg, node_graph_svg, write_svg

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_VERIFY = 0, 2, 3, 4


class Output:
    """Collects text lines and a JSON payload; prints one of them at the end."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict[str, Any] = {"schema": SCHEMA, "command": command}

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def put(self, key: str, value: Any) -> None:
        self.data[key] = value

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dumps(self.data)
        return "\n".join(self.lines) + "\n" if self.lines else ""


def _braces(F) -> str:
    return "{" + ",".join(face_key(F)) + "}"


def _complex_lines(K: SimplicialComplex) -> list[str]:
    return format_complex(K).splitlines()


def _obstruction_text(obs) -> str:
    if isinstance(obs, NonClique):
        return f"NON_CLIQUE{_braces(obs.face)}"
    if isinstance(obs, InducedCycle):
        return f"CYCLE({','.join(obs.cycle)})"
    if isinstance(obs, AsteroidalTriple):
        paths = "; ".join("-".join(p) for p in obs.paths)
        return f"AT({','.join(obs.triple)}) paths {paths}"
    return repr(obs)


# -- commands -------------------------------------------------------------


def cmd_facets(K, args, out):
    out.put("complex", to_json(K))
    for ln in _complex_lines(K):
        out.say(ln)


def cmd_dual(K, args, out):
    D = dual(K)
    out.put("dual", to_json(D.complex))
    out.put("facet_of", {lab: list(face_key(J)) for lab, J in sorted(D.facet_of.items())})
    for ln in _complex_lines(D.complex):
        out.say(ln)


def cmd_sd(K, args, out):
    S = barycentric_subdivision(K, args.guard or 2_000_000)
    out.put("subdivision", to_json(S))
    for ln in _complex_lines(S):
        out.say(ln)


def cmd_skeleton(K, args, out):
    S = skeleton(K, args.k)
    out.put("skeleton", to_json(S))
    for ln in _complex_lines(S):
        out.say(ln)


def cmd_nonfaces(K, args, out):
    mn = minimal_nonfaces(K)
    out.put("minimal_nonfaces", [list(face_key(I)) for I in mn])
    for I in mn:
        out.say(" ".join(face_key(I)))


def cmd_leray(K, args, out):
    wit = leray_witness(K, args.d, args.guard or 16)
    out.put("d", args.d)
    if wit is None:
        out.put("verdict", "LERAY")
        out.say(f"verdict: {args.d}-LERAY")
    else:
        out.put("verdict", "NOT_LERAY")
        out.put("witness", {"vertices": list(face_key(wit.vertices)), "dim": wit.dim})
        out.say(f"verdict: NOT_{args.d}-LERAY")
        out.say(f"witness: induced on {_braces(wit.vertices)} has homology in dimension {wit.dim}")


def cmd_collapse(K, args, out):
    res = col.is_d_collapsible(K, args.d, args.mode, args.guard or col.STATE_GUARD)
    out.put("d", args.d)
    out.put("mode", args.mode)
    out.put("states", res.states)
    if res.collapsible is None:
        raise SizeGuardExceeded(f"collapse search exceeded {res.states - 1} states")
    if res.collapsible:
        if not col.verify_collapse(K, res.sequence):
            raise VerificationFailed("collapse sequence does not replay")
        out.put("verdict", "COLLAPSIBLE")
        out.put("certificate", to_json(res.sequence))
        out.say(f"verdict: {args.d}-COLLAPSIBLE")
        for s in res.sequence.steps:
            out.say(f"  collapse {_braces(s.free_face)} in {_braces(s.unique_facet)}")
    else:
        out.put("verdict", "NOT_COLLAPSIBLE")
        out.put("authoritative", res.authoritative)
        tag = "" if res.authoritative else " (heuristic)"
        out.say(f"verdict: NOT_{args.d}-COLLAPSIBLE{tag}")


def cmd_decide1(K, args, out):
    v = decide_1_representable(K, args.guard or ARRANGEMENT_GUARD)
    if v.representable:
        out.put("verdict", "1_REPRESENTABLE")
        out.say("verdict: 1_REPRESENTABLE")
        if v.certificate_pending:
            out.put("certificate_pending", True)
            out.say("certificate: pending (arrangement search bound reached)")
        else:
            out.put("certificate", to_json(v.intervals))
            for name, lo, hi in v.intervals.intervals:
                out.say(f"  {name}: [{lo}, {hi}]")
            if args.svg:
                write_svg(intervals_svg(v.intervals), args.svg)
    else:
        out.put("verdict", "NOT_1_REPRESENTABLE")
        out.put("certificate", to_json(v.obstruction))
        out.say("verdict: NOT_1_REPRESENTABLE")
        out.say(f"certificate: {_obstruction_text(v.obstruction)}")


def cmd_decide2(K, args, out):
    v = decide_2_representable_cograph(K)
    if not v.applicable:
        out.put("verdict", "NOT_APPLICABLE")
        out.say("verdict: NOT_APPLICABLE (the dual is not a graph)")
        return
    if v.representable:
        out.put("verdict", "2_REPRESENTABLE")
        out.put("certificate", to_json(v.realization))
        out.put("drawing", to_json(v.drawing))
        out.say("verdict: 2_REPRESENTABLE")
        out.say(format_realization(v.realization).rstrip("\n"))
        if args.svg:
            write_svg(drawing_svg(v.drawing), args.svg)
    else:
        k = v.obstruction
        out.put("verdict", "NOT_2_REPRESENTABLE")
        out.put("certificate", to_json(k))
        out.say("verdict: NOT_2_REPRESENTABLE")
        out.say(f"certificate: {k.kind} subdivision on branches {', '.join(k.branches)}")


def cmd_represent(K, args, out):
    d = args.d
    two = decide_2_representable_cograph(K) if d == 2 and not args.moment_curve else None
    if two is not None and two.representable:
        R, ok = two.realization, True
        out.put("route", "planar dual")
    else:
        R = moment_curve_realization(K, d)
        ok = faithfulness_violation(K, R) is None and realizes(K, R)
        out.put("route", "moment curve")
    out.put("realization", to_json(R))
    out.put("verdict", "VERIFIED" if ok else "NOT_FAITHFUL")
    out.say(format_realization(R).rstrip("\n"))
    out.say("VERIFIED" if ok else "NOT_FAITHFUL")


def cmd_verify_faithful(K, args, out):
    with open(args.realization, encoding="utf-8") as f:
        R = parse_realization(f.read())
    bad = faithfulness_violation(K, R)
    if bad is None:
        nerve_ok = realizes(K, R)
        out.put("verdict", "FAITHFUL")
        out.put("nerve_equal", nerve_ok)
        out.say("verdict: FAITHFUL")
        out.say(f"nerve equals complex: {'yes' if nerve_ok else 'no'}")
    else:
        out.put("verdict", "VIOLATION")
        out.put("nonface", list(face_key(bad)))
        out.say(f"verdict: VIOLATION {_braces(bad)}")


def cmd_config_space(K, args, out):
    if args.deleted_product:
        Z = deleted_product(K)
    else:
        Z = config_space(K)
    cells = Z.maximal_cells
    out.put("kind", Z.kind)
    out.put("vertex_pairs", len(Z.vertex_pairs))
    out.put("maximal_cells", [[list(face_key(a)), list(face_key(b))] for a, b in cells])
    out.say(f"kind: {Z.kind}")
    out.say(f"vertex pairs: {len(Z.vertex_pairs)}")
    out.say(f"maximal cells: {len(cells)}")
    for a, b in cells:
        out.say(f"  {_braces(a)} x {_braces(b)}")
    if not args.deleted_product:
        chk = check_cograph_identity(K)
        state = "NOT_APPLICABLE" if not chk.applicable else ("EQUAL" if chk.equal else "DIFFERENT")
        out.put("cograph_identity", state)
        out.say(f"co-graph identity: {state}")
        if chk.applicable and not chk.equal:
            raise VerificationFailed("configuration space differs from the deleted product of the dual")
    if args.svg:
        write_svg(node_graph_svg(Z, args.seed), args.svg)


def cmd_s0(K, args, out):
    Z = config_space(K)
    res = s0_colorable(Z)
    out.put("certificate", to_json(res))
    if res.colorable:
        out.put("verdict", "COLORABLE")
        out.say("verdict: COLORABLE (index at most 0; 1-Matousek)")
    else:
        out.put("verdict", "SWAP_INVARIANT_COMPONENT")
        a, b = res.component
        out.say("verdict: SWAP_INVARIANT_COMPONENT (not 1-Matousek)")
        out.say(f"component of {_braces(a)} x {_braces(b)}")


def cmd_symmetric_cycle(K, args, out):
    Z = config_space(K)
    cyc = find_symmetric_cycle(Z)
    if cyc is None:
        out.put("verdict", "NONE")
        out.say("verdict: NONE")
        return
    out.put("verdict", "FOUND")
    out.put("certificate", to_json(cyc))
    out.say(f"verdict: FOUND (length {len(cyc.nodes)})")
    for a, b in cyc.nodes:
        out.say(f"  {_braces(a)} x {_braces(b)}")


def cmd_dual_classify(K, args, out):
    dc = dual_classify(K)
    out.put("complex", to_json(dc.complex))
    out.put("iso", {v: list(face_key(J)) for v, J in dc.iso})
    for ln in _complex_lines(dc.complex):
        out.say(ln)


def cmd_vkf(_, args, out):
    K = vkf_instance(args.d)
    out.put("d", args.d)
    out.put("complex", to_json(K))
    for ln in _complex_lines(K):
        out.say(ln)


def _report_json(R: Report) -> dict:
    rows = []
    for r in R.rows:
        row = {
            "d": r.d,
            "representable": r.representable.value,
            "basis": r.representable.basis,
            "certificates": {name: to_json(c) for name, c in r.representable.certificates},
            "matousek": r.matousek.holds,
            "matousek_basis": r.matousek.source,
            "collapsible": None if r.collapsible is None else r.collapsible.collapsible,
            "leray": r.leray,
        }
        if r.matousek.certificate is not None:
            row["matousek_certificate"] = to_json(r.matousek.certificate)
        if r.collapsible is not None and r.collapsible.sequence is not None:
            row["collapse_sequence"] = to_json(r.collapsible.sequence)
        rows.append(row)
    return {
        "dual_dim": R.dual_dim,
        "bound": R.bound,
        "bound_realization": None if R.bound_realization is None else to_json(R.bound_realization),
        "rows": rows,
    }


def _yn(v) -> str:
    return {True: "yes", False: "no", None: "unknown"}[v]


def cmd_report(K, args, out):
    R = report(K, args.dmax, args.guard or col.STATE_GUARD)
    out.put("report", _report_json(R))
    out.say(f"dual dimension: {R.dual_dim}")
    verified = "verified" if R.bound_realization is not None else "NOT verified"
    out.say(f"always representable in dimension {R.bound} (moment curve, {verified})")
    for r in R.rows:
        c = r.collapsible.collapsible if r.collapsible is not None else None
        out.say(
            f"d={r.d}: representable {_yn(r.representable.value)} ({r.representable.basis}); "
            f"Matousek {_yn(r.matousek.holds)} ({r.matousek.source}); "
            f"collapsible {_yn(c)}; Leray {_yn(r.leray)}"
        )


def cmd_render(K, args, out):
    if not args.svg:
        raise ComplexError("render needs --svg FILE")
    what = args.object
    if what == "auto":
        one = decide_1_representable(K)
        if one.representable and one.intervals is not None:
            what = "intervals"
        elif decide_2_representable_cograph(K).representable:
            what = "drawing"
        else:
            what = "node-graph"
    if what == "intervals":
        one = decide_1_representable(K)
        if one.intervals is None:
            raise ComplexError("complex has no interval representation")
        text = intervals_svg(one.intervals)
    elif what == "drawing":
        two = decide_2_representable_cograph(K)
        if two.drawing is None:
            raise ComplexError("the dual has no planar drawing")
        text = drawing_svg(two.drawing)
    else:
        text = node_graph_svg(config_space(K), args.seed)
    write_svg(text, args.svg)
    out.put("object", what)
    out.put("path", args.svg)
    out.say(f"wrote {what} to {args.svg}")


COMMANDS: dict[str, Callable] = {
    "facets": cmd_facets,
    "dual": cmd_dual,
    "sd": cmd_sd,
    "skeleton": cmd_skeleton,
    "nonfaces": cmd_nonfaces,
    "leray": cmd_leray,
    "collapse": cmd_collapse,
    "decide1": cmd_decide1,
    "decide2-cograph": cmd_decide2,
    "represent": cmd_represent,
    "verify-faithful": cmd_verify_faithful,
    "config-space": cmd_config_space,
    "s0": cmd_s0,
    "symmetric-cycle": cmd_symmetric_cycle,
    "dual-classify": cmd_dual_classify,
    "vkf": cmd_vkf,
    "report": cmd_report,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--guard", type=int, default=None, help="override the size guard of the command")
    common.add_argument("--seed", type=int, default=0, help="seed for layout choices in SVG output")
    common.add_argument("--svg", metavar="FILE", help="also write an SVG picture")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", help="complex file (one facet per line)")
    source.add_argument("--fixture", choices=NAMES, help="use a bundled complex instead of a file")

    p = argparse.ArgumentParser(prog="nerverep", description="Representability of simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        parents = [common] if name == "vkf" else [common, source]
        sp = sub.add_parser(name, parents=parents)
        if name == "skeleton":
            sp.add_argument("--k", type=int, required=True)
        if name in ("leray", "collapse", "represent", "vkf"):
            sp.add_argument("--d", type=int, required=True)
        if name == "collapse":
            sp.add_argument("--mode", choices=[m.value for m in col.Mode], default="exhaustive")
        if name == "represent":
            sp.add_argument("--moment-curve", action="store_true")
        if name == "verify-faithful":
            sp.add_argument("--realization", required=True, metavar="FILE")
        if name == "config-space":
            sp.add_argument("--deleted-product", action="store_true")
        if name == "report":
            sp.add_argument("--dmax", type=int, required=True)
        if name == "render":
            sp.add_argument("--object", choices=("auto", "intervals", "drawing", "node-graph"), default="auto")
    return p


def _read_complex(args) -> SimplicialComplex:
    if args.fixture:
        return load(args.fixture)
    if not args.input:
        raise ComplexError("give a complex file or --fixture NAME")
    with open(args.input, encoding="utf-8") as f:
        return parse_complex(f.read())


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    out = Output(args.command)
    try:
        K = None if args.command == "vkf" else _read_complex(args)
        COMMANDS[args.command](K, args, out)
    except SizeGuardExceeded as e:
        print(f"guard exceeded: {e}", file=stderr)
        return EXIT_GUARD
    except VerificationFailed as e:
        print(f"verification failed: {e}", file=stderr)
        return EXIT_VERIFY
    except (ComplexError, OSError, ValueError, KeyError) as e:
        print(f"input error: {e}", file=stderr)
        return EXIT_INPUT
    stdout.write(out.render(args.format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
