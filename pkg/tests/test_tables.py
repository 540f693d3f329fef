import json

import pytest

from crossratio import tables

EXPECTED_ERRATA = {
    "bd": [], "td": [], "cd_long": [],
    "cd_surfaces": [(3, 3), (10, 2), (11, 2), (12, 2)],
}


@pytest.mark.parametrize("which", sorted(EXPECTED_ERRATA))
def test_against_printed(which):
    r = tables.compare_with_reference(which)
    assert r["ok"], r["mismatches"]
    assert [(row, f) for row, f, _ in r["errata"]] == EXPECTED_ERRATA[which]


def test_sizes():
    bd = tables.bd_table()
    assert len(bd["long"]) == 12 and len(bd["unit"]) == 8
    assert sum(len(v) for v in bd.values()) == 36
    assert len(tables.td_table()) == 45
    cd = tables.cd_table()
    assert len(cd["surfaces"]) == 16 and len(cd["long"]) == 24


def test_every_cusp_appears_once():
    cd = tables.cd_table()
    cusps = [tuple(r[3]) for r in cd["surfaces"]] + [tuple(r[2]) for r in cd["long"]]
    assert len(set(cusps)) == 40


@pytest.mark.parametrize("which", ["bd", "td", "cd", "lambda"])
def test_rendering_deterministic(which):
    a = tables.render_text(which)
    assert a == tables.render_text(which)
    json.loads(tables.render_json(which))


def test_lambda():
    t = tables.lambda_table()
    assert t["v"]["triad"] == "[13.45.26]" and t["w"]["triad"] == "[12.45.36]"
    assert len(t["S_zero"]) == len(t["S_infinity"]) == 6
    assert len(t["v_perp_isotropic"]) == 13
    assert t["R_zero_in_w_perp"] and t["R_infinity_in_v_perp"]
    assert len(t["lambda_minus_one_surfaces"]) == 4


def test_symmetrization():
    r = tables.symmetrization_report()
    for k, v in r["expected"].items():
        assert r[k] == v
    assert r["cross divisor cusps"] == 24
    assert r["(lambda-1) zeros"] == {"boundary": 1, "cusp": 4, "tritangent": 1}
