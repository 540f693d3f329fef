"""
Registry of verification checks run by ``crossratio verify``.

Each check has an id "<area>.<name>", a one-line description, the expected
value with a provenance tag, and a function computing the value:

  STATED   value quoted from the literature on the cross ratio variety
  DERIVED  value obtained here by an independent computation
  TRIVIAL  format or consistency contract

Checks marked ``flag`` encode two known inconsistencies in the quoted
values; a mismatch there is reported as "flagged-discrepancy" and does not
fail the run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

STATED, DERIVED, TRIVIAL = "STATED", "DERIVED", "TRIVIAL"
PASS, FAIL, FLAGGED = "pass", "fail", "flagged-discrepancy"
AREAS = ("geometry", "group", "fan", "ledger", "chow", "gram", "tables")


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    provenance: str
    expected: Any
    compute: Callable[[], Any]
    reference: str
    deps: tuple = ()
    flag: bool = False


@dataclass
class Report:
    id: str
    description: str
    expected: Any
    computed: Any
    provenance: str
    status: str
    ms: int
    reference: str = ""
    error: str = ""

    def as_dict(self, with_ms: bool = True) -> dict:
        d = {"id": self.id, "description": self.description,
             "expected": plain(self.expected), "computed": plain(self.computed),
             "provenance": self.provenance, "status": self.status}
        if with_ms:
            d["ms"] = self.ms
        if self.error:
            d["error"] = self.error
        return d


def plain(x):
    """JSON-friendly form: Fractions as strings, tuples as lists, sorted dict keys."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [plain(y) for y in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "item"):
        return x.item()
    return str(x)


REGISTRY: dict[str, Check] = {}


def check(id, description, expected, provenance, reference, deps=(), flag=False):
    def deco(fn):
        if id in REGISTRY:
            raise ValueError("duplicate check id %s" % id)
        REGISTRY[id] = Check(id, description, provenance, expected, fn, reference, tuple(deps), flag)
        return fn
    return deco


# ---------------------------------------------------------------------------
# geometry

@check("geometry.sizes", "sizes of N_0, N_1, N_-1", (40, 45, 36), STATED,
       "definition of the three q-classes of points of P(F_3^5)")
def _():
    from . import fgeom
    p = fgeom.enumerate_points()
    return len(p.cusps), len(p.tritangents), len(p.boundary)


def _profiles(cls):
    from . import fgeom
    out = set()
    for p in fgeom.enumerate_points().by_class(cls):
        out.add(tuple(sorted(fgeom.perp_profile(p).items())))
    return [dict(x) for x in sorted(out)]


@check("geometry.profile_boundary", "perpendicular points of a boundary point (by class 0, 1, -1)",
       [{-1: 15, 0: 10, 1: 15}], STATED, "incidence rules for boundary points", ["geometry.sizes"])
def _():
    from . import fgeom
    return _profiles(fgeom.BOUNDARY)


@check("geometry.profile_tritangent", "perpendicular points of a tritangent point",
       [{-1: 12, 0: 16, 1: 12}], DERIVED, "incidence rules; 16 cusps on a tritangent divisor",
       ["geometry.sizes"])
def _():
    from . import fgeom
    return _profiles(fgeom.TRITANGENT)


@check("geometry.profile_cusp", "perpendicular points of a cusp point",
       [{-1: 9, 0: 12, 1: 18}], DERIVED, "nine boundary divisors meet each cusp divisor",
       ["geometry.sizes"])
def _():
    from . import fgeom
    return _profiles(fgeom.CUSP)


# ---------------------------------------------------------------------------
# group

@check("group.order", "order of the group generated by the 36 reflections", 51840, STATED,
       "W(E6) acting on F_3^5", ["geometry.sizes"])
def _():
    from .orthgroup import weyl_image
    return weyl_image().order


@check("group.order_full", "order with -I adjoined", 103680, STATED,
       "O(F_3^5, q) = W(E6) x {+-1}", ["group.order"])
def _():
    from .orthgroup import full_orthogonal_group
    return full_orthogonal_group().order


@check("group.transitive", "orbit sizes on N_0, N_1, N_-1", {"cusp": [40], "tritangent": [45], "boundary": [36]},
       STATED, "W(E6) permutes each class of divisors transitively", ["group.order"])
def _():
    from . import fgeom
    from .orthgroup import orbits, weyl_image
    g = weyl_image()
    return {name: sorted(len(o) for o in orbits(g, cls)) for cls, name in fgeom.CLASS_NAMES.items()}


@check("group.minus_reflections", "-s_v in the reflection group with order 2 for v in N_1; -I not in it",
       {"-s_v in W": 45, "order 2": 45, "-I in W": False}, DERIVED,
       "tritangent involutions", ["group.order"])
def _():
    from . import fgeom
    from .orthgroup import MINUS_IDENTITY, IDENTITY, reflection, weyl_image
    g = weyl_image()
    inside = order2 = 0
    for v in fgeom.enumerate_points().tritangents:
        m = -reflection(v)
        inside += m in g
        order2 += (m * m) == IDENTITY and m != IDENTITY
    return {"-s_v in W": inside, "order 2": order2, "-I in W": MINUS_IDENTITY in g}


_PAIRS = (("boundary", "boundary"), ("cusp", "cusp"), ("tritangent", "tritangent"),
          ("boundary", "cusp"), ("boundary", "tritangent"), ("cusp", "tritangent"))
_CLS = {"cusp": 0, "tritangent": 1, "boundary": -1}


@check("group.pair_orbits", "number of orbits on pairs of points", {
    "boundary,boundary": 3, "cusp,cusp": 3, "tritangent,tritangent": 3,
    "boundary,cusp": 2, "boundary,tritangent": 2, "cusp,tritangent": 2},
    STATED, "orbit counts used in the decomposition of the divisor spans", ["group.order"])
def _():
    from .orthgroup import pair_orbit_count, weyl_image
    g = weyl_image()
    return {"%s,%s" % p: pair_orbit_count(g, _CLS[p[0]], _CLS[p[1]]) for p in _PAIRS}


@check("group.burnside", "Burnside counts equal the union-find orbit counts", True, DERIVED,
       "permutation character inner products", ["group.pair_orbits"])
def _():
    from .orthgroup import burnside_pair_count, pair_orbit_count, weyl_image
    g = weyl_image()
    return all(burnside_pair_count(g, _CLS[a], _CLS[b]) == pair_orbit_count(g, _CLS[a], _CLS[b])
               for a, b in _PAIRS)


@check("group.tritangent_pairs", "orbit sizes on ordered pairs of distinct tritangents",
       [45 * 12, 45 * 32], STATED, "perpendicular and non-perpendicular tritangent pairs",
       ["group.order"])
def _():
    from .orthgroup import distinct_pair_orbits, weyl_image
    return distinct_pair_orbits(weyl_image(), 1)


# permutation modules: N_-1 = 1+15+20, N_0 = 1+15+24, N_1 = 1+20+24
_CONSTITUENTS = {"boundary": (1, 15, 20), "cusp": (1, 15, 24), "tritangent": (1, 20, 24)}


def _allowed_ranks(a, b):
    from itertools import combinations
    common = sorted(set(_CONSTITUENTS[a]) & set(_CONSTITUENTS[b]))
    return sorted({sum(s) for k in range(len(common) + 1) for s in combinations(common, k)})


@check("group.incidence_ranks", "ranks of the perpendicularity incidence matrices",
       {"boundary,cusp": 16, "boundary,tritangent": 21, "cusp,tritangent": 25}, DERIVED,
       "incidence maps between permutation modules", ["geometry.sizes"])
def _():
    from .orthgroup import incidence_rank
    out = {}
    for a, b in (("boundary", "cusp"), ("boundary", "tritangent"), ("cusp", "tritangent")):
        r = incidence_rank(_CLS[a], _CLS[b])
        if r not in _allowed_ranks(a, b):
            raise AssertionError("rank %d of %s x %s not a sum of common constituents" % (r, a, b))
        out["%s,%s" % (a, b)] = r
    return out


# ---------------------------------------------------------------------------
# fan

@check("fan.rays_cones", "rays, maximal cones, unimodularity of the Weyl fan",
       {"rays": 48, "cones": 192, "unimodular": True}, STATED, "the D4 Weyl chamber fan")
def _():
    from . import toricfan
    f = toricfan.build_weyl_fan()
    return {"rays": len(f.rays), "cones": len(f.cones), "unimodular": all(f.is_unimodular(c) for c in f.cones)}


@check("fan.f_vector", "f-vector of the Weyl fan", (1, 48, 240, 384, 192), DERIVED,
       "counting faces of the chambers", ["fan.rays_cones"])
def _():
    from . import toricfan
    return toricfan.f_vector(toricfan.build_weyl_fan())


@check("fan.chow_ranks", "Chow ranks of the toric variety, and their sum", ((1, 44, 102, 44, 1), 192),
       STATED, "ranks of A^i of the toric variety", ["fan.f_vector"])
def _():
    from . import toricfan
    r = toricfan.chow_ranks(toricfan.build_weyl_fan())
    return r, sum(r)


@check("fan.complete", "random lattice vectors lying in exactly one chamber (failures)", 0, DERIVED,
       "completeness of the fan", ["fan.rays_cones"])
def _():
    from . import toricfan
    return toricfan.random_completeness_check(toricfan.build_weyl_fan(), samples=300, seed=1)


@check("fan.star_long", "star fan of a long ray: rays, cones, antipodal ray pairs",
       {"rays": 6, "cones": 8, "antipodal pairs": 3}, STATED,
       "V(tau) = (P^1)^3 for tau in R", ["fan.rays_cones"])
def _():
    from . import toricfan
    s = toricfan.star_fan(toricfan.build_weyl_fan(), (2, 0, 2, 0))
    rays = set(s.rays)
    return {"rays": len(s.rays), "cones": len(s.cones),
            "antipodal pairs": sum(1 for r in rays if tuple(-x for x in r) in rays) // 2}


@check("fan.star_eps1", "star fan of eps1: rays and rk A^1", {"rays": 14, "rk A1": 11}, STATED,
       "V(eps1), a boundary divisor of the toric variety", ["fan.rays_cones"])
def _():
    from . import toricfan
    s = toricfan.star_fan(toricfan.build_weyl_fan(), (2, 0, 0, 0))
    return {"rays": len(s.rays), "rk A1": toricfan.chow_ranks(s)[1]}


@check("fan.surfaces", "(rk A^1, euler) of the 16 surfaces S_i", {"count": 16, "values": [(4, 6)]},
       STATED, "closures of the 2-dimensional subtori", ["fan.rays_cones"])
def _():
    from . import toricfan
    vals = sorted({(toricfan.chow_ranks(sf)[1], toricfan.euler(sf)) for _, sf in toricfan.surface_fans()})
    return {"count": len(toricfan.surface_fans()), "values": vals}


# ---------------------------------------------------------------------------
# ledger

@check("ledger.milestones", "(rk A^1, rk A^2) after each blow up / contraction",
       [(44, 102), (45, 103), (57, 127), (73, 207), (61, 147)], STATED,
       "rank cascade T~ -> T' -> T'' -> T^ -> C", ["fan.chow_ranks", "fan.surfaces"])
def _():
    from . import ledger
    res = ledger.run_naruki_pipeline()
    return [st.state.chow_ranks[1:3] for st in res.trace]


@check("ledger.final", "Chow ranks and euler number of the cross ratio variety",
       {"ranks": (1, 61, 147, 61, 1), "euler": 271}, STATED, "Chow groups of the cross ratio variety",
       ["ledger.milestones"])
def _():
    from . import ledger
    s = ledger.run_naruki_pipeline().final
    return {"ranks": s.chow_ranks, "euler": s.euler}


@check("ledger.euler_c4", "euler from the ledger = stated c4 = c4 forced by td_4 = 1",
       (271, 271, 271), DERIVED, "top Chern class of the cross ratio variety", ["ledger.final"])
def _():
    from . import chowrings, ledger
    return (ledger.run_naruki_pipeline().final.euler, chowrings.C4, chowrings.c4_from_todd())


# ---------------------------------------------------------------------------
# invariant rings

@check("chow.quadruple_table", "B^4, B^3C, B^2C^2, BC^3, C^4", (-12528, 6480, -2160, 720, -240), STATED,
       "invariant quadruple intersection numbers")
def _():
    from . import chowrings
    return tuple(chowrings.quadruple_table().values())


@check("chow.mixed_forced", "B^kC^(4-k) = (-3)^k C^4 from BC = -3C^2 alone", (720, -2160, 6480), DERIVED,
       "relation BC = -3C^2", ["chow.quadruple_table"])
def _():
    from . import chowrings
    c4 = chowrings.quadruple_table()["C^4"]
    return tuple((-3) ** k * c4 for k in (1, 2, 3))


@check("chow.consistency", "quadruple numbers recomputed from B0 (x36) and from C0 (x40)", True, DERIVED,
       "restriction to a boundary and a cusp divisor", ["chow.quadruple_table"])
def _():
    from . import chowrings
    return chowrings.invariant_consistency()["ok"]


@check("chow.confluence", "every degree-4 word in B, C has one normal form under all rewrite orders",
       True, TRIVIAL, "rewrite system of the invariant ring")
def _():
    from itertools import product
    from . import chowrings
    return all(len(chowrings.rewrite_normal_forms(w)) == 1 for w in product("BC", repeat=4))


@check("chow.degree", "H^4 for H = (B+3C)/4", 27, STATED, "degree of the image in P^9",
       ["chow.quadruple_table"])
def _():
    from . import chowrings
    return chowrings.inv_eval4(chowrings.H_C ** 4)


@check("chow.rr_intermediates", "H^3c1, H^2(c1^2+c2), Hc1c2", {"H^3c1": 27, "H^2(c1^2+c2)": 81, "Hc1c2": 54},
       DERIVED, "Riemann-Roch for O(nH)", ["chow.quadruple_table"])
def _():
    from . import chowrings
    d = chowrings.rr_intermediates()
    return {k: d[k] for k in ("H^3c1", "H^2(c1^2+c2)", "Hc1c2")}


@check("chow.chern_numbers", "c1^4, c1^2c2, c2^2, c1c3",
       {"c1^4": -213, "c1^2c2": 54, "c2^2": 108, "c1c3": 238}, DERIVED,
       "Chern classes of the cross ratio variety", ["chow.quadruple_table"])
def _():
    from . import chowrings
    d = chowrings.chern_numbers()
    return {k: d[k] for k in ("c1^4", "c1^2c2", "c2^2", "c1c3")}


@check("chow.todd", "td_4", 1, STATED, "chi(O) = 1", ["chow.chern_numbers"])
def _():
    from . import chowrings
    return chowrings.todd4_check()


@check("chow.c2_derived", "c2 from restriction to B0 equals (B^2 - 9C^2)/8", True, DERIVED,
       "second Chern class", ["chow.b0_chern"])
def _():
    from . import chowrings
    return chowrings.derive_c2() == chowrings.C2_STATED


@check("chow.c3_derived", "c3 = a B^3 + b C^3 from restrictions to B0 and C0",
       (Fraction(13, 288), Fraction(181, 96)), STATED, "third Chern class", ["chow.b0_chern"])
def _():
    from . import chowrings
    a, b, _ = chowrings.derive_c3()
    return a, b


@check("chow.rr_coefficients", "coefficients of n^4 .. n^0 of chi(O(nH))",
       (Fraction(9, 8), Fraction(9, 4), Fraction(27, 8), Fraction(9, 4), 1), STATED,
       "Hilbert polynomial", ["chow.rr_intermediates", "chow.todd"])
def _():
    from . import chowrings
    return tuple(reversed(chowrings.riemann_roch_coefficients()))


@check("chow.rr_values", "chi(O(nH)) for n = 0, 1, 2", (1, 10, 55), DERIVED,
       "10 = number of coordinates of P^9", ["chow.rr_coefficients"])
def _():
    from . import chowrings
    return tuple(chowrings.riemann_roch(n) for n in (0, 1, 2))


@check("chow.b0_triples", "Bb^3, Bb^2Cb, BbCb^2, Cb^3 (ring and V oracle agree)", (-165, 180, -60, 20),
       STATED, "intersection numbers on a boundary divisor")
def _():
    from . import chowrings
    vals = chowrings.b0_triples()
    if any(r != o for r, o in vals.values()):
        raise AssertionError("ring and V oracle disagree: %s" % vals)
    return tuple(r for r, _ in vals.values())


@check("chow.intbv_signs", "printed Bb^3, BbCb^2 in the V computation vs the V oracle", (165, 60), STATED,
       "sign slips in the restriction-to-V computation", ["chow.b0_triples"], flag=True)
def _():
    from . import chowrings
    v = chowrings.b0_triples()
    return v["Bb^3"][1], v["BbCb^2"][1]


@check("chow.b0_adjunction", "K_B0 = (K_C + B0)|B0 and K_Q = (K_B0 + Q)|Q", (True, True), TRIVIAL,
       "adjunction on B0 and on Q = B0 n C0")
def _():
    from . import chowrings
    return chowrings.b0_adjunction(), chowrings.b0_chern_check()["K_Q adjunction"]


@check("chow.b0_chern", "c2(B0) = n Bb^2 + m Cb^2: (n, m), c1c2, c2(B0).Q, c2(Q) via Q^2 = -Delta",
       {"n": Fraction(4, 25), "m": Fraction(-36, 25), "c1c2": 24, "c2|Q": 0, "c2(Q)": 4, "Q^2": "- Delta"}, STATED,
       "Chern classes of a boundary divisor", ["chow.b0_triples"])
def _():
    from . import chowrings
    d = chowrings.b0_chern_check()
    return {"n": d["n"], "m": d["m"], "c1c2": d["c1c2"],
            "c2|Q": d["n"] * d["Bb^2.Q"] + d["m"] * d["Cb^2.Q"], "c2(Q)": d["c2|Q"], "Q^2": "%s Delta" % ("-" if d["Q^2"] == -chowrings.DELTA else d["Q^2"])}


@check("chow.b0_c3", "c3(B0) and the two blow-up euler counts", (34, 34, 34), STATED,
       "euler number of a boundary divisor", ["fan.star_eps1"])
def _():
    from . import chowrings
    d = chowrings.b0_chern_check()
    return d["c3"], d["c3 oracle (P^3 in 5 points, then 10 lines)"], d["c3 oracle (second description)"]


@check("chow.cusp_numbers", "intersection numbers on a cusp divisor", {
    "C0B1B2B3": 1, "C0Bi^2Bj": 0, "C0Bi^3": 0, "C0^2BiBj": -1, "C0^2Bi^2": 0,
    "C0^3Bi": 2, "C0^4": -6, "C^4": -240, "B.C0 = -3 C0^2": True}, STATED,
    "cusp divisors are (P^1)^3")
def _():
    from . import chowrings
    return chowrings.cusp_numbers()


@check("chow.symmetrization", "4T, E_v, K, H as combinations of B, C", {
    "4T": (25, 27), "E_v": (Fraction(1, 4), Fraction(-1, 4)),
    "K": (Fraction(-1, 4), Fraction(1, 4)), "H": (Fraction(1, 4), Fraction(3, 4))}, STATED,
    "symmetrized divisors of lambda, lambda - 1 and of a cross divisor", ["tables.lambda"])
def _():
    from . import tables
    r = tables.symmetrization_report()
    return {k: r[k] for k in ("4T", "E_v", "K", "H")}


@check("chow.tritangent_relations", "canonical classes agree, hyperplane restriction, rk A^1(T0)",
       (True, True, 29), STATED, "Chow group of a tritangent divisor")
def _():
    from . import chowrings
    d = chowrings.tritangent_relations()
    return d["canonical classes agree"], d["hyperplane restriction"], d["rk A1(T0)"]


@check("chow.t0_euler", "stated c3(T0) vs Betti sum and blow-up euler count", 92, STATED,
       "euler number of a tritangent divisor", ["chow.tritangent_relations"], flag=True)
def _():
    from . import chowrings
    d = chowrings.t0_euler_counts()
    if d["betti_sum"] != d["blowup"]:
        raise AssertionError("the two euler counts disagree: %s" % d)
    return d["betti_sum"]


# ---------------------------------------------------------------------------
# Gram ranks

@check("gram.local_numbers", "quadruple products: BBBB, B^2BB, B^2B^2, B^3B, B^4, CBBB, C^2BB, C^3B, C^4",
       (1, -1, 1, 1, -3, 1, -1, 2, -6), STATED, "local intersection numbers", ["geometry.sizes"])
def _():
    from . import gram, roots
    idx = roots.root_point_index()
    b = [gram.Bd(idx[x]) for x in ("h12", "h34", "h56", "h")]       # mutually orthogonal
    c = gram.Cd(0)
    tri = roots.cusp_triads()[0]
    cb = [gram.Bd(idx[sorted(r)[0]]) for r in tri.rows]
    q = gram.quad_product
    return (q(b), q([b[0], b[0], b[1], b[2]]), q([b[0], b[0], b[1], b[1]]), q([b[0]] * 3 + [b[1]]),
            q([b[0]] * 4), q([c] + cb), q([c, c, cb[0], cb[1]]), q([c] * 3 + [cb[0]]), q([c] * 4))


@check("gram.b2", "rank of (B_i^2 B_j^2)", 21, STATED, "Gram ranks in codimension two", ["gram.local_numbers"])
def _():
    from . import gram
    return gram.rank_b2_matrix()[0]


@check("gram.rank_306", "ranks of the Gram matrix of the 306 classes and of the 270 B_iB_j",
       (147, 146), STATED, "Gram ranks in codimension two", ["gram.local_numbers"])
def _():
    from . import gram
    return gram.rank_306()


@check("gram.rank_306_ledger", "Gram rank of the 306 classes = rk A^2 from the ledger", True, DERIVED,
       "consistency of Gram ranks and the rank ledger", ["gram.rank_306", "ledger.final"])
def _():
    from . import gram, ledger
    return gram.rank_306()[0] == ledger.run_naruki_pipeline().final.chow_ranks[2]


@check("gram.cusp", "rank of the 120 cusp-supported classes (first root, last root per A2)", (120, 120),
       STATED, "independent cusp-supported classes", ["gram.local_numbers"])
def _():
    from . import gram
    return gram.rank_cusp_classes("first")[0], gram.rank_cusp_classes("last")[0]


@check("gram.relations", "span of the W(E6)-orbit of the lambda relation (generators, full orbit)", (15, 15),
       STATED, "relations between boundary and cusp divisors", ["group.order"])
def _():
    from . import gram
    return gram.relation_space_rank(), gram.relation_space_rank_oracle()


@check("gram.decomposition", "rank increments: cusp classes, + B_i^2, + S_h translates; orthogonality",
       {"cusp": 120, "plus_B2": 21, "plus_S": 6, "total": 147, "cusp_perp_B2": True, "S_h+ terms": 60},
       STATED, "codimension-two classes by representation", ["gram.rank_306", "gram.cusp"])
def _():
    from . import gram
    r = gram.a2_decomposition_report()
    return {k: r[k] for k in ("cusp", "plus_B2", "plus_S", "total", "cusp_perp_B2", "S_h+ terms")}


@check("gram.invariant_sums", "B^4, B^3C, C^4 from summing local numbers over all divisors",
       (-12528, 6480, -240), DERIVED, "agreement of the local and invariant numbers",
       ["gram.local_numbers", "chow.quadruple_table"])
def _():
    from . import gram
    return gram.invariant_sum(4, 0), gram.invariant_sum(3, 1), gram.invariant_sum(0, 4)


@check("gram.w_invariance", "quad products invariant under 100 random group elements", True, DERIVED,
       "W(E6)-equivariance of the local numbers", ["group.order"])
def _():
    import numpy as np
    from . import fgeom, gram
    from .orthgroup import weyl_image
    g = weyl_image()
    ps = fgeom.enumerate_points()
    pb, pc = g.permutations(ps.boundary), g.permutations(ps.cusps)
    rng = random.Random(7)
    for _ in range(100):
        k = rng.randrange(g.order)
        ids = [gram.Bd(rng.randrange(36)) for _ in range(3)]
        ids.append(gram.Cd(rng.randrange(40)) if rng.random() < 0.5 else gram.Bd(rng.randrange(36)))
        img = [gram.Bd(int(pb[k][d.index])) if d.kind == gram.BOUNDARY else gram.Cd(int(pc[k][d.index]))
               for d in ids]
        if gram.quad_product(ids) != gram.quad_product(img):
            return False
    return True


# ---------------------------------------------------------------------------
# tables

def _table_check(which):
    from . import tables
    r = tables.compare_with_reference(which)
    if r["mismatches"]:
        raise AssertionError("mismatches: %s" % r["mismatches"][:5])
    return {"rows": r["rows"], "errata": len(r["errata"])}


@check("tables.bd", "boundary table (long, unit, half-sum rays) regenerated", {"rows": 36, "errata": 0},
       STATED, "root <-> F_3^5 <-> ray table", ["fan.rays_cones"])
def _():
    return _table_check("bd")


@check("tables.td", "45 tritangents with their N_1 points", {"rows": 45, "errata": 0}, STATED,
       "Schlafli labels of tritangent planes", ["geometry.sizes"])
def _():
    return _table_check("td")


@check("tables.cd_surfaces", "16 surfaces: equations, root pairs, triads, cusps (4 known errata)",
       {"rows": 16, "errata": 4}, STATED, "cusp table, surfaces", ["fan.surfaces"])
def _():
    return _table_check("cd_surfaces")


@check("tables.cd_long", "24 long rays with their triads and cusps", {"rows": 24, "errata": 0}, STATED,
       "cusp table, long rays", ["fan.rays_cones"])
def _():
    return _table_check("cd_long")


@check("tables.lambda", "divisor of lambda and lambda - 1", {
    "S_zero": ["h13", "h136", "h246", "h256", "h26", "h345"],
    "S_infinity": ["h12", "h126", "h245", "h346", "h356", "h36"],
    "triads": ("[13.45.26]", "[12.45.36]"), "v_perp_isotropic": 13,
    "R_zero_in_w_perp": True, "R_infinity_in_v_perp": True,
    "lambda_minus_one_surfaces": [["λ", "μνρ"], ["λ", "μρ"], ["λ", "νρ"], ["λ", "ρ"]]},
    STATED, "divisors of lambda and of lambda - 1", ["fan.surfaces"])
def _():
    from . import tables
    t = tables.lambda_table()
    return {"S_zero": sorted(x for _, x in t["S_zero"]), "S_infinity": sorted(x for _, x in t["S_infinity"]),
            "triads": (t["v"]["triad"], t["w"]["triad"]), "v_perp_isotropic": len(t["v_perp_isotropic"]),
            "R_zero_in_w_perp": t["R_zero_in_w_perp"], "R_infinity_in_v_perp": t["R_infinity_in_v_perp"],
            "lambda_minus_one_surfaces": sorted(sorted(e) for e in t["lambda_minus_one_surfaces"])}


# ---------------------------------------------------------------------------
# running

def ordered_ids() -> list[str]:
    """Dependency order by area (geometry -> ... -> tables), registration order within an area."""
    ids = list(REGISTRY)
    return sorted(ids, key=lambda i: (AREAS.index(i.split(".")[0]), ids.index(i)))


def closure(only: str) -> list[str]:
    if only not in REGISTRY:
        raise KeyError(only)
    need, todo = set(), [only]
    while todo:
        c = todo.pop()
        if c not in need:
            need.add(c)
            todo.extend(REGISTRY[c].deps)
    return [i for i in ordered_ids() if i in need]


def _equal(a, b) -> bool:
    return plain(a) == plain(b)


def run_check(c: Check) -> Report:
    t0 = time.perf_counter()
    err = ""
    try:
        val = c.compute()
        ok = _equal(val, c.expected)
    except Exception as e:                      # a crashing check is a failure, not an abort
        val, ok, err = None, False, "%s: %s" % (type(e).__name__, e)
    ms = int(round(1000 * (time.perf_counter() - t0)))
    if ok:
        status = PASS
    elif c.flag and not err:
        status = FLAGGED
    else:
        status = FAIL
    return Report(c.id, c.description, c.expected, val, c.provenance, status, ms, c.reference, err)


def run(ids=None):
    for i in ids or ordered_ids():
        yield run_check(REGISTRY[i])
