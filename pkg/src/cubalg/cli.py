"""Command-line surface tying the engines into reproducible runs.

Verbs: curve {invariants, fgl, nseries, hasse, landweber}, cover fiber,
cech, descent, tmf-mu, hopf {synthesize, cobar, h0, kucp2},
steenrod {conjugate, coproduct, verify, primitives}, chart render.

Every command with an identical configuration produces byte-identical
output (canonical JSON/TSV/SVG, no timestamps); the exit status is
nonzero exactly when an engine invariant or golden comparison fails.
Relative output paths resolve against $CUBALG_OUTPUT_DIR.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import chart as chartmod
from . import emit
from .cobar import cobar_cohomology, extended_comodule
from .covers import (cech_weighted_projective, cover_fiber,
                     descent_assemble, tmf_mu_page)
from .curves import WeierstrassCurve, invariants, universal_curve_ring
from .fgl import fgl_from_curve, hasse_coefficients
from .hopf import builtin_algebroid, invariants_h0, ku_cp2_involution
from .regseq import landweber_report
from . import steenrod as st

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_ERROR = 2


def parse_curve(text: str, prime: Optional[int] = None) -> WeierstrassCurve:
    """Comma list for (a1, a2, a3, a4, a6); entries are integers or the
    symbolic names a1..a6 (in any slot)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise ValueError("--curve wants 5 entries a1,a2,a3,a4,a6")
    ring = universal_curve_ring(prime)
    coeffs = []
    for p in parts:
        if p.lstrip("+-").isdigit():
            coeffs.append(ring.const(int(p)))
        elif p in ring.names:
            coeffs.append(ring.gen(p))
        else:
            raise ValueError("bad curve entry %r" % p)
    return WeierstrassCurve(*coeffs)


def parse_range(text: str) -> List[int]:
    """"a..b" (inclusive) or a comma list."""
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",") if p.strip() != ""]


def _finish(args, obj, rows=None, columns=None) -> int:
    """Serialize and write/print; returns the exit code."""
    if args.format == "tsv":
        if rows is None:
            raise ValueError("this verb has no tabular form; use json")
        text = emit.tsv_text(rows, columns)
    else:
        text = emit.json_text(obj)
    if args.output:
        emit.atomic_write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verb handlers


def cmd_curve_invariants(args) -> int:
    curve = parse_curve(args.curve, args.prime)
    inv = invariants(curve)
    obj = {k: (v.text() if hasattr(v, "text") else v)
           for k, v in inv.items()}
    rows = [{"name": k, "value": obj[k]} for k in sorted(obj)]
    code = _finish(args, obj, rows, ["name", "value"])
    return code if inv["c4_c6_delta_identity"] else EXIT_INVARIANT


def cmd_curve_fgl(args) -> int:
    curve = parse_curve(args.curve, args.prime)
    f = fgl_from_curve(curve, args.order)
    checks = f.check()
    obj = {"order": args.order, "sum_series": f.sum_series.text(),
           "inverse_series": f.inverse_series.text(), "checks": checks}
    code = _finish(args, obj)
    return code if all(checks.values()) else EXIT_INVARIANT


def cmd_curve_nseries(args) -> int:
    curve = parse_curve(args.curve, args.prime)
    f = fgl_from_curve(curve, args.order)
    series = f.n_series(args.n)
    coeffs = {("z^%d" % k): series.coefficient("z", k).text()
              for k in range(1, args.order + 1)}
    obj = {"n": args.n, "order": args.order, "series": series.text(),
           "coefficients": coeffs}
    rows = [{"power": k, "coefficient": coeffs["z^%d" % k]}
            for k in range(1, args.order + 1)]
    return _finish(args, obj, rows, ["power", "coefficient"])


def cmd_curve_hasse(args) -> int:
    curve = parse_curve(args.curve)
    p = args.prime or 2
    vs = hasse_coefficients(curve, p, args.imax)
    obj = {"prime": p,
           "v": {("v%d" % i): vs[i].text() for i in range(len(vs))}}
    rows = [{"i": i, "v_i": vs[i].text()} for i in range(len(vs))]
    return _finish(args, obj, rows, ["i", "v_i"])


def cmd_curve_landweber(args) -> int:
    curve = parse_curve(args.curve)
    p = args.prime or 2
    rep = landweber_report(curve, p, args.cutoff)
    reg = rep["regularity"]
    obj = {"prime": p, "v": rep["v"],
           "regular_through_cutoff": reg.regular_through_cutoff,
           "certified": reg.certified,
           "quotient_total_rank": reg.quotient_total_rank,
           "c4_power_in_ideal": rep["c4_power_in_ideal"],
           "delta_power_in_ideal": rep["delta_power_in_ideal"]}
    code = _finish(args, obj)
    return code if reg.regular_through_cutoff else EXIT_INVARIANT


def cmd_cover_fiber(args) -> int:
    p = args.prime or 2
    if args.cusp:
        coeffs = (0, 0, 0, 0, 0)
    else:
        coeffs = tuple(int(c) for c in args.curve.split(","))
    fib = cover_fiber(coeffs, p, args.field)
    obj = {"prime": p, "field": fib.field, "rank": fib.rank,
           "variables": list(fib.var_names),
           "weights": list(fib.var_weights),
           "basis": fib.basis_text()}
    rows = [{"monomial": m} for m in fib.basis_text()]
    return _finish(args, obj, rows, ["monomial"])


def cmd_cech(args) -> int:
    w = tuple(int(x) for x in args.weights.split(","))
    twists = parse_range(args.twists)
    page = cech_weighted_projective(w, twists)
    obj = {"weights": list(w),
           "h0": {str(j): page.h0[j] for j in twists},
           "h1": {str(j): page.h1[j] for j in twists}}
    rows = [{"twist": j, "h0_rank": page.h0_ranks[j],
             "h1_rank": page.h1_ranks[j]} for j in twists]
    return _finish(args, obj, rows, ["twist", "h0_rank", "h1_rank"])


def cmd_descent(args) -> int:
    w = tuple(int(x) for x in args.weights.split(","))
    degrees = parse_range(args.degrees)
    jlo = min(min(degrees) // 2 - 1, 0)
    jhi = max(degrees) // 2 + 1
    page = cech_weighted_projective(w, range(jlo, jhi + 1))
    table = descent_assemble(page, degrees)
    obj = {"weights": list(w),
           "pi": {str(d): {"rank": table[d]["rank"],
                           "generators": ["%s:%s" % g
                                          for g in table[d]["generators"]]}
                  for d in degrees}}
    rows = [{"degree": d, "rank": table[d]["rank"],
             "generators": ["%s:%s" % g for g in table[d]["generators"]]}
            for d in degrees]
    return _finish(args, obj, rows, ["degree", "rank", "generators"])


def cmd_tmf_mu(args) -> int:
    window = parse_range(args.window)
    out = tmf_mu_page((min(window), max(window)), args.cutoff,
                      prime=args.prime or 2,
                      specialize_p13=args.specialize,
                      validate_h0=args.validate)
    obj = {"window": list(out["window"]), "prime": out["prime"],
           "h0": {str(w): r for w, r in out["h0"].items()},
           "h1": {str(w): r for w, r in out["h1"].items()},
           "h1_meaning": out["h1_meaning"]}
    if "h1_generators" in out:
        obj["h1_generators"] = {str(w): g for w, g in
                                out["h1_generators"].items()}
    if "h0_validated" in out:
        obj["h0_validated"] = out["h0_validated"]
    return _finish(args, obj)


def cmd_hopf_synthesize(args) -> int:
    H = builtin_algebroid(args.algebroid)
    checks = H.verify()
    obj = {"algebroid": H.name,
           "gamma": {n: w for n, w in zip(H.gamma_names, H.gamma_weights)},
           "eta_R": {n: H.eta_r[n].text() for n in H.A.names
                     if n in H.eta_r},
           "delta": {n: H.delta[n].text() for n in H.gamma_names},
           "chi": {n: H.chi_gamma[n].text() for n in H.gamma_names},
           "axioms": checks, "notes": H.notes}
    code = _finish(args, obj)
    return code if all(checks.values()) else EXIT_INVARIANT


def cmd_hopf_cobar(args) -> int:
    H = builtin_algebroid(args.algebroid)
    twists = parse_range(args.twists)
    comodule = None
    if args.extended is not None:
        comodule = extended_comodule(H, args.extended)
    ch = cobar_cohomology(H, twists, args.smax, prime=args.fp,
                          p_local=args.p_local, comodule=comodule)
    obj = emit.chart_to_obj(ch)
    rows = [{"s": c["s"], "t": c["t"], "rank": c["rank"],
             "torsion": c["torsion"]} for c in obj["cells"]]
    return _finish(args, obj, rows, ["s", "t", "rank", "torsion"])


def cmd_hopf_h0(args) -> int:
    H = builtin_algebroid(args.algebroid)
    twists = parse_range(args.twists)
    inv = invariants_h0(H, twists)
    obj = {str(j): [p.text() for p in inv[j]] for j in twists}
    rows = [{"twist": j, "rank": len(inv[j]),
             "generators": [p.text() for p in inv[j]]} for j in twists]
    return _finish(args, obj, rows, ["twist", "rank", "generators"])


def cmd_hopf_kucp2(args) -> int:
    out = ku_cp2_involution()
    code = _finish(args, out)
    return code if out["is_swap"] else EXIT_INVARIANT


def cmd_steenrod_conjugate(args) -> int:
    ring = st.xi_ring(args.cutoff)
    if args.k > len(ring.names):
        raise ValueError("xi%d exceeds cutoff %d" % (args.k, args.cutoff))
    img = st.conjugate(ring.gen("xi%d" % args.k))
    obj = {"element": "xi%d" % args.k, "conjugate": img.text(),
           "degree": (1 << args.k) - 1}
    return _finish(args, obj)


def cmd_steenrod_coproduct(args) -> int:
    ring = st.xi_ring(args.cutoff)
    if args.k > len(ring.names):
        raise ValueError("xi%d exceeds cutoff %d" % (args.k, args.cutoff))
    img = st.coproduct(ring.gen("xi%d" % args.k), args.cutoff)
    obj = {"element": "xi%d" % args.k, "coproduct": img.text()}
    return _finish(args, obj)


def cmd_steenrod_verify(args) -> int:
    cutoff = args.cutoff
    bp2 = st.bp_n_homology(2, cutoff, check_closure=False)
    tmf = st.tmf_spec(cutoff)
    ku = st.bp_n_homology(1, cutoff, check_closure=False)
    ko = st.ko_spec(cutoff)
    results = {
        "antipode_identity_k6": st.antipode_identity_holds(6),
        "tmf_closed": st.comodule_closure_check(tmf, cutoff)["closed"],
        "bp2_closed": st.comodule_closure_check(bp2, cutoff)["closed"],
        "ku_over_ko_free": st.freeness_rank_check(
            ku, ko, [0, 2], cutoff)["free"],
        "bp2_over_tmf_free": st.freeness_rank_check(
            bp2, tmf, [0, 2, 4, 6, 6, 8, 10, 12], cutoff)["free"],
        "ko_generator_forced": st.uniqueness_probe(
            "ko")["forced_generator"] == "xi1^4",
        "tmf_generator_forced": st.uniqueness_probe(
            "tmf")["forced_generator"] == "xi1^8",
    }
    obj = {"cutoff": cutoff, "checks": results,
           "ok": all(results.values())}
    rows = [{"check": k, "ok": v} for k, v in sorted(results.items())]
    code = _finish(args, obj, rows, ["check", "ok"])
    return code if obj["ok"] else EXIT_INVARIANT


def cmd_steenrod_primitives(args) -> int:
    window = parse_range(args.window)
    spec = None
    if args.quotient == "squares":
        spec = st.make_spec("C", [(1, 2)], args.cutoff, conjugated=False)
    elif args.quotient:
        raise ValueError("unknown quotient %r" % args.quotient)
    pr = st.primitives(window, args.cutoff, quotient_by=spec)
    obj = {str(d): pr[d] for d in window}
    rows = [{"degree": d, "primitives": pr[d]} for d in window if pr[d]]
    return _finish(args, obj, rows, ["degree", "primitives"])


def cmd_chart_render(args) -> int:
    with open(emit.resolve_path(args.input)) as fh:
        obj = json.load(fh)
    ch = emit.chart_from_obj(obj)
    x_range = tuple(parse_range(args.x_range)[i] for i in (0, -1)) \
        if args.x_range else None
    s_range = tuple(parse_range(args.s_range)[i] for i in (0, -1)) \
        if args.s_range else None
    render = chartmod.render_window_for(ch, x_range, s_range)
    render.title = args.title
    for arrow in args.arrow or []:
        render.arrows.append(tuple(int(x) for x in arrow.split(",")))
    text = chartmod.chart_svg(render)
    if args.output:
        emit.atomic_write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _common(p, cutoff=None):
    p.add_argument("--format", choices=("json", "tsv", "svg"),
                   default="json")
    p.add_argument("--output", default=None,
                   help="output path (relative to $CUBALG_OUTPUT_DIR)")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized property suites")
    if cutoff is not None:
        p.add_argument("--cutoff", type=int, default=cutoff)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cubalg",
        description="exact computational algebra for elliptic cohomology")
    sub = top.add_subparsers(dest="verb", required=True)

    curve = sub.add_parser("curve").add_subparsers(dest="sub", required=True)
    p = curve.add_parser("invariants")
    p.add_argument("--curve", default="a1,a2,a3,a4,a6")
    _common(p)
    p.set_defaults(func=cmd_curve_invariants)
    p = curve.add_parser("fgl")
    p.add_argument("--curve", default="a1,a2,a3,a4,a6")
    p.add_argument("--order", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_curve_fgl)
    p = curve.add_parser("nseries")
    p.add_argument("--curve", default="a1,a2,a3,a4,a6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_curve_nseries)
    p = curve.add_parser("hasse")
    p.add_argument("--curve", default="a1,a2,a3,a4,a6")
    p.add_argument("--imax", type=int, default=2)
    _common(p)
    p.set_defaults(func=cmd_curve_hasse)
    p = curve.add_parser("landweber")
    p.add_argument("--curve", default="a1,a2,a3,a4,a6")
    _common(p, cutoff=48)
    p.set_defaults(func=cmd_curve_landweber)

    cover = sub.add_parser("cover").add_subparsers(dest="sub", required=True)
    p = cover.add_parser("fiber")
    p.add_argument("--cusp", action="store_true")
    p.add_argument("--curve", default="0,0,0,0,0",
                   help="integer coefficients a1,a2,a3,a4,a6")
    p.add_argument("--field", default=None, help='"Q" or "F<q>"')
    _common(p)
    p.set_defaults(func=cmd_cover_fiber)

    p = sub.add_parser("cech")
    p.add_argument("--weights", default="1,3")
    p.add_argument("--twists", default="-6..6")
    _common(p)
    p.set_defaults(func=cmd_cech)

    p = sub.add_parser("descent")
    p.add_argument("--weights", default="1,3")
    p.add_argument("--degrees", default="0..12")
    _common(p)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("tmf-mu")
    p.add_argument("--window", default="-70..12")
    p.add_argument("--specialize", action="store_true",
                   help="two-variable specialization (exact graded ranks)")
    p.add_argument("--validate", action="store_true",
                   help="certify H0 via the (c4, delta) regular sequence")
    _common(p, cutoff=8)
    p.set_defaults(func=cmd_tmf_mu)

    hopf = sub.add_parser("hopf").add_subparsers(dest="sub", required=True)
    p = hopf.add_parser("synthesize")
    p.add_argument("--algebroid", default="weierstrass",
                   choices=("weierstrass", "mqd", "z2_group"))
    _common(p)
    p.set_defaults(func=cmd_hopf_synthesize)
    p = hopf.add_parser("cobar")
    p.add_argument("--algebroid", default="weierstrass",
                   choices=("weierstrass", "mqd", "z2_group"))
    p.add_argument("--twists", default="0..4")
    p.add_argument("--smax", type=int, default=3)
    p.add_argument("--fp", type=int, default=None,
                   help="compute over F_p instead of Z")
    p.add_argument("--p-local", dest="p_local", type=int, default=None,
                   help="strip torsion prime to p")
    p.add_argument("--extended", type=int, default=None,
                   help="use Gamma itself (truncated at this weight) as "
                        "the comodule")
    _common(p)
    p.set_defaults(func=cmd_hopf_cobar)
    p = hopf.add_parser("h0")
    p.add_argument("--algebroid", default="weierstrass",
                   choices=("weierstrass", "mqd", "z2_group"))
    p.add_argument("--twists", default="0..12")
    _common(p)
    p.set_defaults(func=cmd_hopf_h0)
    p = hopf.add_parser("kucp2")
    _common(p)
    p.set_defaults(func=cmd_hopf_kucp2)

    steen = sub.add_parser("steenrod").add_subparsers(dest="sub",
                                                      required=True)
    p = steen.add_parser("conjugate")
    p.add_argument("--k", type=int, required=True)
    _common(p, cutoff=64)
    p.set_defaults(func=cmd_steenrod_conjugate)
    p = steen.add_parser("coproduct")
    p.add_argument("--k", type=int, required=True)
    _common(p, cutoff=64)
    p.set_defaults(func=cmd_steenrod_coproduct)
    p = steen.add_parser("verify")
    _common(p, cutoff=64)
    p.set_defaults(func=cmd_steenrod_verify)
    p = steen.add_parser("primitives")
    p.add_argument("--window", default="1..16")
    p.add_argument("--quotient", default=None,
                   help='"squares" for the quotient by Z/2[xi_i^2]')
    _common(p, cutoff=16)
    p.set_defaults(func=cmd_steenrod_primitives)

    chartp = sub.add_parser("chart").add_subparsers(dest="sub",
                                                    required=True)
    p = chartp.add_parser("render")
    p.add_argument("--input", required=True, help="chart JSON path")
    p.add_argument("--x-range", dest="x_range", default=None)
    p.add_argument("--s-range", dest="s_range", default=None)
    p.add_argument("--title", default="")
    p.add_argument("--arrow", action="append", default=None,
                   help="differential arrow s1,t1,s2,t2 (repeatable)")
    _common(p)
    p.set_defaults(func=cmd_chart_render)

    return top


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, NotImplementedError, RuntimeError,
            AssertionError, OSError) as exc:
        sys.stderr.write("cubalg: error: %s\n" % exc)
        return EXIT_ERROR


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
