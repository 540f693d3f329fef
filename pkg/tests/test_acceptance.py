"""
The thirteen acceptance criteria.

Each criterion is a bundle of registered verification checks plus, where it
helps, a few direct assertions.  Results are collected in
``conftest.ACCEPTANCE_RESULTS`` and printed as one PASS/FAIL line per
criterion at the end of the pytest run.  The file can also be run directly:

    python tests/test_acceptance.py
"""

from __future__ import annotations

import sys
from functools import lru_cache

import pytest

from crossratio import checks
from crossratio.checks import FLAGGED, PASS

try:
    from conftest import ACCEPTANCE_RESULTS
except ImportError:                             # pragma: no cover - running outside pytest
    ACCEPTANCE_RESULTS = {}


def _extra_symmetrization():
    from crossratio import tables
    r = tables.symmetrization_report()
    return all(r[k] == v for k, v in r["expected"].items()) and r["cross divisor cusps"] == 24


def _extra_gram_decomposition():
    from crossratio import gram
    r = gram.a2_decomposition_report()
    return r["cusp"] + r["plus_B2"] + r["plus_S"] == r["total"] == 147 and r["cusp_perp_B2"]


# number -> (title, check ids that must pass, check ids that must be flagged, extra assertion)
CRITERIA = {
    1: ("point sets and perpendicular profiles",
        ["geometry.sizes", "geometry.profile_boundary", "geometry.profile_tritangent", "geometry.profile_cusp"],
        [], None),
    2: ("reflection group order, -I, transitivity, -s_v",
        ["group.order", "group.order_full", "group.transitive", "group.minus_reflections"], [], None),
    3: ("pair orbits, tritangent pairs, incidence ranks",
        ["group.pair_orbits", "group.burnside", "group.tritangent_pairs", "group.incidence_ranks"], [], None),
    4: ("Weyl fan, Chow ranks, star fans, surface fans",
        ["fan.rays_cones", "fan.f_vector", "fan.chow_ranks", "fan.complete", "fan.star_long",
         "fan.star_eps1", "fan.surfaces"], [], None),
    5: ("blow-up / contraction ledger",
        ["ledger.milestones", "ledger.final", "ledger.euler_c4"], [], None),
    6: ("invariant ring, degree, Todd, Riemann-Roch",
        ["chow.quadruple_table", "chow.mixed_forced", "chow.consistency", "chow.confluence", "chow.degree",
         "chow.rr_intermediates", "chow.chern_numbers", "chow.todd", "chow.rr_coefficients",
         "chow.rr_values"], [], None),
    7: ("B0 ring, adjunction, Chern system, c3(B0)",
        ["chow.b0_triples", "chow.b0_adjunction", "chow.b0_chern", "chow.b0_c3"], [], None),
    8: ("cusp ring", ["chow.cusp_numbers"], [], None),
    9: ("Gram ranks and A2 decomposition",
        ["gram.local_numbers", "gram.b2", "gram.rank_306", "gram.rank_306_ledger", "gram.cusp",
         "gram.relations", "gram.decomposition"], [], _extra_gram_decomposition),
    10: ("tables regenerated (modulo the documented errata)",
         ["tables.bd", "tables.td", "tables.cd_surfaces", "tables.cd_long"], [], None),
    11: ("symmetrization identities", ["chow.symmetrization"], [], _extra_symmetrization),
    12: ("tritangent relations", ["chow.tritangent_relations"], [], None),
    13: ("flagged discrepancies reported, run not failed", [], ["chow.intbv_signs", "chow.t0_euler"], None),
}


@lru_cache(maxsize=None)
def _report(cid: str):
    return checks.run_check(checks.REGISTRY[cid])


def evaluate(n: int) -> tuple[bool, list[str]]:
    _, must_pass, must_flag, extra = CRITERIA[n]
    problems = []
    for cid in must_pass:
        r = _report(cid)
        if r.status != PASS:
            problems.append("%s: %s (expected %r, computed %r %s)"
                            % (cid, r.status, r.expected, r.computed, r.error))
    for cid in must_flag:
        r = _report(cid)
        if r.status != FLAGGED:
            problems.append("%s: %s, expected a flagged discrepancy" % (cid, r.status))
    if extra is not None and not extra():
        problems.append("%s returned False" % extra.__name__)
    return not problems, problems


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, problems = evaluate(n)
    ACCEPTANCE_RESULTS[n] = (CRITERIA[n][0], "PASS" if ok else "FAIL")
    print("criterion %2d  %s  %s" % (n, "PASS" if ok else "FAIL", CRITERIA[n][0]))
    assert ok, "\n".join(problems)


def test_criterion_13_does_not_fail_full_run():
    # flagged checks have to survive a full verify run with exit status 0
    from crossratio.cli import main
    assert main(["verify", "--only", "chow.intbv_signs"]) == 0
    assert main(["verify", "--only", "chow.t0_euler"]) == 0


if __name__ == "__main__":
    bad = 0
    for n in sorted(CRITERIA):
        ok, problems = evaluate(n)
        bad += not ok
        print("criterion %2d  %s  %s" % (n, "PASS" if ok else "FAIL", CRITERIA[n][0]))
        for p in problems:
            print("    " + p)
    sys.exit(1 if bad else 0)
