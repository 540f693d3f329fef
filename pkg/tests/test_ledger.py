import json

import pytest
from hypothesis import given, strategies as st

from crossratio import ledger
from crossratio.ledger import CenterData, VarietyState


def test_pipeline():
    res = ledger.run_naruki_pipeline()
    assert [s.name for s in res.trace] == ["T~", "T'", "T''", "T^", "C"]
    assert [s.state.chow_ranks for s in res.trace] == [
        (1, 44, 102, 44, 1), (1, 45, 103, 45, 1), (1, 57, 127, 57, 1),
        (1, 73, 207, 73, 1), (1, 61, 147, 61, 1)]
    assert [s.state.euler for s in res.trace] == [192, 195, 243, 355, 271]


def test_surface_center():
    c = ledger.surface_center()
    assert c.chow_ranks == (1, 5, 1) and c.euler == 7 and c.count == 16


def test_render():
    res = ledger.run_naruki_pipeline()
    md = ledger.render_trace(res)
    assert md.splitlines()[0].startswith("| stage")
    assert "(1, 61, 147, 61, 1)" in md
    assert json.loads(ledger.render_trace(res, "json"))[-1]["euler"] == 271


def test_center_validation():
    with pytest.raises(ValueError):
        CenterData("curve", 1, (1, 1), 0)
    with pytest.raises(ValueError):
        CenterData("surface", 1, (1, 4, 1), 7)
    with pytest.raises(ValueError):
        CenterData("blob", 1, (1,), 1)


def test_blow_up_point_in_threefold():
    s = VarietyState((1, 1, 1, 1), 4, dim=3)
    t = ledger.blow_up(s, CenterData("point", 1, (1,), 1))
    assert t.chow_ranks == (1, 2, 2, 1) and t.euler == 6


surfaces = st.tuples(st.just(1), st.integers(0, 30), st.just(1))
states = st.integers(0, 60).flatmap(
    lambda a: st.integers(0, 200).map(lambda b: VarietyState((1, a, b, a, 1), 2 + 2 * a + b)))


@given(states, st.sampled_from(["point", "curve", "surface"]), st.integers(1, 20), surfaces)
def test_blow_up_preserves_poincare_duality(s, kind, n, sr):
    ranks = {"point": (1,), "curve": (1, 1), "surface": sr}[kind]
    c = CenterData(kind, n, ranks, sum(ranks))
    t = ledger.blow_up(s, c)
    assert t.check() == []
    back = ledger.contract(t, c) if kind == "surface" else None
    if kind == "surface":
        # a codimension-2 blow up adds A^{k-1}(Z): exactly what contract removes
        assert back == s


@given(states)
def test_check_detects_asymmetry(s):
    bad = VarietyState((1, s.chow_ranks[1] + 1, s.chow_ranks[2], s.chow_ranks[3], 1), s.euler + 1)
    assert "ranks are not symmetric" in bad.check()
