"""
Command line front end.

    crossratio geometry | group | tables | fan | ledger | chow |
               riemann-roch | chern | gram | verify

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .checks import FAIL, FLAGGED, PASS, REGISTRY, closure, ordered_ids, plain, run


def _dump(obj) -> str:
    return json.dumps(plain(obj), ensure_ascii=False, indent=1)


def _emit(args, data, text_lines):
    if getattr(args, "format", "text") == "json":
        print(_dump(data))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------------------
# subcommands

def cmd_geometry(args) -> int:
    from . import fgeom
    ps = fgeom.enumerate_points()
    data, lines = {}, []
    for cls, name in fgeom.CLASS_NAMES.items():
        pts = ps.by_class(cls)
        prof = fgeom.perp_profile(pts[0])
        data[name] = {"q": cls, "count": len(pts), "points": pts,
                      "perp_profile": {fgeom.CLASS_NAMES[k]: v for k, v in sorted(prof.items())}}
        lines.append("# %s (q = %d): %d points" % (name, cls, len(pts)))
        lines += ["%3d  %s" % (i, fgeom.fmt(p)) for i, p in enumerate(pts)]
    lines.append("# perpendicular points (rows: class of p; columns: cusp tritangent boundary)")
    for name in fgeom.CLASS_NAMES.values():
        pr = data[name]["perp_profile"]
        lines.append("%-10s %4d %4d %4d" % (name, pr["cusp"], pr["tritangent"], pr["boundary"]))
    _emit(args, data, lines)
    return 0


def cmd_group(args) -> int:
    from . import fgeom
    from . import orthgroup as og
    show_all = not (args.order or args.orbits or args.pair_orbits or args.incidence_ranks)
    g = og.weyl_image()
    data = {"generators": len(g.generators), "closure_layers": g.layers}
    lines = ["generators: %d reflections" % len(g.generators),
             "closure layers: %s" % ", ".join(map(str, g.layers))]
    cls = {name: c for c, name in fgeom.CLASS_NAMES.items()}
    if args.order or show_all:
        full = og.full_orthogonal_group()
        data["order"], data["order_with_minus_identity"] = g.order, full.order
        lines += ["order: %d" % g.order, "order with -I: %d" % full.order]
    if args.orbits or show_all:
        data["orbits"] = {n: sorted(len(o) for o in og.orbits(g, c)) for n, c in cls.items()}
        lines += ["orbits on %s: %s" % (n, v) for n, v in data["orbits"].items()]
    if args.pair_orbits or show_all:
        names = list(cls)
        po = {}
        for i, a in enumerate(names):
            for b in names[i:]:
                po["%s,%s" % (a, b)] = og.pair_orbit_count(g, cls[a], cls[b])
        data["pair_orbits"] = po
        lines += ["pair orbits %s: %d" % kv for kv in po.items()]
    if args.incidence_ranks or show_all:
        ir = {}
        for a, b in (("boundary", "cusp"), ("boundary", "tritangent"), ("cusp", "tritangent")):
            ir["%s,%s" % (a, b)] = og.incidence_rank(cls[a], cls[b])
        data["incidence_ranks"] = ir
        lines += ["incidence rank %s: %d" % kv for kv in ir.items()]
    _emit(args, data, lines)
    return 0


def cmd_tables(args) -> int:
    from . import tables
    if args.format == "json":
        print(tables.render_json(args.which))
    else:
        sys.stdout.write(tables.render_text(args.which))
    return 0


def cmd_fan(args) -> int:
    from . import roots, toricfan
    f = toricfan.build_weyl_fan()
    data, lines = {}, []
    everything = not (args.f_vector or args.chow_ranks or args.star or args.surface is not None
                      or args.character)
    if args.f_vector or everything:
        data["f_vector"] = toricfan.f_vector(f)
        lines.append("f-vector: %s" % (data["f_vector"],))
    if args.chow_ranks or everything:
        data["chow_ranks"] = toricfan.chow_ranks(f)
        lines.append("Chow ranks: %s" % (data["chow_ranks"],))
    if args.star:
        try:
            tau = roots.parse_d4(args.star)
            s = toricfan.star_fan(f, tau)
        except (ValueError, KeyError):
            raise _Usage("--star expects one of the 48 rays, e.g. eps1, e1+e3, (+-+-)")
        data["star"] = {"ray": roots.format_d4(tau), "rays": len(s.rays), "cones": len(s.cones),
                        "f_vector": toricfan.f_vector(s), "chow_ranks": toricfan.chow_ranks(s)}
        lines.append("star of %s: %d rays, %d cones, f-vector %s, Chow ranks %s" % (
            data["star"]["ray"], len(s.rays), len(s.cones), toricfan.f_vector(s), toricfan.chow_ranks(s)))
    if args.surface is not None:
        sf = toricfan.surface_fans()
        if not 0 <= args.surface < len(sf):
            raise _Usage("surface index must be in 0..%d" % (len(sf) - 1))
        (a, b), s = sf[args.surface]
        eq = "%s = %s = 1" % (a.character, b.character)
        data["surface"] = {"index": args.surface, "equation": eq, "roots": [a.root.label, b.root.label],
                           "rays": s.rays, "chow_ranks": toricfan.chow_ranks(s), "euler": toricfan.euler(s)}
        lines.append("surface %d: %s, roots %s %s, %d rays, Chow ranks %s, euler %d" % (
            args.surface, eq, a.root.label, b.root.label, len(s.rays), toricfan.chow_ranks(s),
            toricfan.euler(s)))
    if args.character:
        div = toricfan.character_divisor(f, args.character)
        nz = {roots.format_d4(t): n for t, n in sorted(div.items()) if n}
        data["character"] = {"name": args.character, "divisor": nz}
        lines.append("divisor of %s:" % args.character)
        lines += ["  %+d V(%s)" % (n, t) for t, n in nz.items()]
    _emit(args, data, lines)
    return 0


def cmd_ledger(args) -> int:
    from . import ledger
    res = ledger.run_naruki_pipeline()
    if args.format == "json":
        print(ledger.render_trace(res, "json"))
    elif args.trace:
        sys.stdout.write(ledger.render_trace(res, "markdown"))
    else:
        s = res.final
        print("final Chow ranks %s, euler %d" % (s.chow_ranks, s.euler))
    return 0


def cmd_chow(args) -> int:
    from . import chowrings
    try:
        val = chowrings.evaluate_expression(args.ring, args.eval)
    except (ValueError, KeyError, SyntaxError, TypeError) as e:
        raise _Usage(str(e))
    print(val)
    return 0


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise _Usage("--n-range expects A..B, got %r" % text)


def cmd_riemann_roch(args) -> int:
    from . import chowrings
    coeffs = chowrings.riemann_roch_coefficients()
    ns = _parse_range(args.n_range)
    data = {"coefficients_n4_to_n0": list(reversed(coeffs)),
            "values": {n: chowrings.riemann_roch(n) for n in ns}}
    lines = ["chi(O(nH)) = %s" % " + ".join("%s n^%d" % (c, k) for k, c in reversed(list(enumerate(coeffs))))]
    lines += ["%4d  %s" % (n, v) for n, v in data["values"].items()]
    _emit(args, data, lines)
    return 0


def cmd_chern(args) -> int:
    from . import chowrings
    nums = chowrings.chern_numbers()
    a, b, _ = chowrings.derive_c3()
    data = {"c1": str(chowrings.C1), "c2": str(chowrings.C2_STATED), "c3": str(chowrings.C3_STATED),
            "c4": chowrings.C4, "numbers": nums, "td4": chowrings.todd4(),
            "c4_from_todd": chowrings.c4_from_todd(),
            "c2_derived": str(chowrings.derive_c2()), "c3_derived": "%s B^3 + %s C^3" % (a, b)}
    lines = ["%s = %s" % (k, v) for k, v in data.items() if k != "numbers"]
    lines += ["%s = %s" % kv for kv in nums.items()]
    status = 0
    if args.verify:
        ok = (data["td4"] == 1 and data["c4_from_todd"] == chowrings.C4
              and chowrings.derive_c2() == chowrings.C2_STATED
              and (a, b) == (Fraction(13, 288), Fraction(181, 96)))
        data["verified"] = ok
        lines.append("verified: %s" % ok)
        status = 0 if ok else 1
    _emit(args, data, lines)
    return status


def cmd_gram(args) -> int:
    from . import gram
    data = {}
    m = None
    if args.which == "b2":
        data["rank"], m = gram.rank_b2_matrix()
    elif args.which == "full":
        data["rank"], data["rank_270"] = gram.rank_306()
        m = gram.gram_306()
    elif args.which == "cusp":
        data["rank"], m = gram.rank_cusp_classes()
    elif args.which == "relations":
        data["rank"] = gram.relation_space_rank()
    elif args.which == "decomposition":
        data.update(gram.a2_decomposition_report())
    if args.pairing_rank:
        data["pairing_rank"] = gram.pairing_rank()
        data["pairing_rank_note"] = "exploratory; 61 = rk A^1 would mean the pairing is non-degenerate"
    if args.dump_matrix:
        if m is None:
            raise _Usage("--dump-matrix needs --which b2, full or cusp")
        try:
            gram.dump_matrix(m, args.dump_matrix)
        except OSError as e:
            raise _IOError(str(e))
        data["dumped"] = args.dump_matrix
    _emit(args, data, ["%s: %s" % (k, plain(v)) for k, v in data.items()])
    return 0


# ---------------------------------------------------------------------------
# verify

def _fmt_value(x) -> str:
    return json.dumps(plain(x), ensure_ascii=False, separators=(",", ":"))


def cmd_verify(args) -> int:
    fmt = "json" if args.json else args.format
    if args.only:
        try:
            ids = closure(args.only)
        except KeyError:
            raise _Usage("unknown check id %r (see --list)" % args.only)
    else:
        ids = ordered_ids()
    if args.list:
        for i in ids:
            print(i)
        return 0
    if fmt == "markdown":
        print("| id | status | provenance | expected | computed |")
        print("|---|---|---|---|---|")
    reports = []
    for r in run(ids):
        reports.append(r)
        if fmt == "json":
            print(json.dumps(r.as_dict(), ensure_ascii=False), flush=True)
            continue
        if fmt == "markdown":
            print("| %s | %s | %s | `%s` | `%s` |" % (r.id, r.status, r.provenance,
                                                      _fmt_value(r.expected), _fmt_value(r.computed)))
            continue
        tag = {PASS: "PASS", FAIL: "FAIL", FLAGGED: "FLAG"}[r.status]
        print("%s  %-28s %s" % (tag, r.id, r.description), flush=True)
        if r.status != PASS or args.explain:
            print("      expected (%s): %s" % (r.provenance, _fmt_value(r.expected)))
            print("      computed: %s" % _fmt_value(r.computed))
        if r.error:
            print("      error: %s" % r.error)
        if args.explain:
            print("      reference: %s" % r.reference)
    counts = {s: sum(1 for r in reports if r.status == s) for s in (PASS, FAIL, FLAGGED)}
    flagged = [r.id for r in reports if r.status == FLAGGED]
    failed = [r.id for r in reports if r.status == FAIL]
    if fmt == "json":
        print(json.dumps({"summary": {"checks": len(reports), "pass": counts[PASS], "fail": counts[FAIL],
                                      "flagged": counts[FLAGGED], "flagged_ids": flagged,
                                      "failed_ids": failed}}))
    else:
        print()
        print("%d checks: %d pass, %d fail, %d flagged discrepancies"
              % (len(reports), counts[PASS], counts[FAIL], counts[FLAGGED]))
        for i in flagged:
            print("  flagged: %s -- %s" % (i, REGISTRY[i].description))
        for i in failed:
            print("  FAILED: %s" % i)
    return 1 if counts[FAIL] else 0


# ---------------------------------------------------------------------------

class _Usage(Exception):
    pass


class _IOError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossratio", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default=choices[0])

    s = sub.add_parser("geometry", help="points of P(F_3^5) by class and perpendicularity profile")
    fmt(s)
    s.set_defaults(func=cmd_geometry)

    s = sub.add_parser("group", help="the reflection group and its orbits")
    for flag in ("--order", "--orbits", "--pair-orbits", "--incidence-ranks"):
        s.add_argument(flag, action="store_true")
    fmt(s)
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("tables", help="regenerate the reference tables")
    s.add_argument("--which", choices=("bd", "td", "cd", "lambda"), required=True)
    fmt(s)
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("fan", help="the D4 Weyl fan, star fans, surfaces, character divisors")
    s.add_argument("--f-vector", action="store_true")
    s.add_argument("--chow-ranks", action="store_true")
    s.add_argument("--star", metavar="RAY", help="e.g. eps1, e1+e3, (+-+-)")
    s.add_argument("--surface", metavar="INDEX", type=int)
    s.add_argument("--character", metavar="NAME", help="e.g. lambda, mu^2rho, λνρ")
    fmt(s)
    s.set_defaults(func=cmd_fan)

    s = sub.add_parser("ledger", help="Chow rank bookkeeping through the blow ups")
    s.add_argument("--trace", action="store_true")
    fmt(s, ("markdown", "json"))
    s.set_defaults(func=cmd_ledger)

    s = sub.add_parser("chow", help="evaluate an expression in one of the small rings")
    s.add_argument("--ring", required=True, help="INV, INVB0, V, CUSP, Q")
    s.add_argument("--eval", required=True, metavar="EXPR")
    s.set_defaults(func=cmd_chow)

    s = sub.add_parser("riemann-roch", help="chi(O(nH)) for a range of n")
    s.add_argument("--n-range", default="0..5", metavar="A..B")
    fmt(s)
    s.set_defaults(func=cmd_riemann_roch)

    s = sub.add_parser("chern", help="Chern numbers and the Todd identity")
    s.add_argument("--verify", action="store_true")
    fmt(s)
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("gram", help="Gram ranks in codimension two")
    s.add_argument("--which", choices=("b2", "full", "cusp", "relations", "decomposition"), default="b2")
    s.add_argument("--dump-matrix", metavar="PATH")
    s.add_argument("--pairing-rank", action="store_true", help="exploratory 76 x (degree-3) pairing rank")
    fmt(s)
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("verify", help="run all checks")
    fmt(s, ("text", "json", "markdown"))
    s.add_argument("--json", action="store_true", help="same as --format json")
    s.add_argument("--only", metavar="ID", help="run one check and its dependencies")
    s.add_argument("--explain", action="store_true", help="print expected values and references")
    s.add_argument("--list", action="store_true", help="list check ids")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        return args.func(args)
    except _Usage as e:
        print("crossratio: error: %s" % e, file=sys.stderr)
        return 2
    except (_IOError, OSError) as e:
        print("crossratio: I/O error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
