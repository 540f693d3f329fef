from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossratio import gram, roots
from crossratio.gram import Bd, Cd, DivisorId, quad_product


@pytest.fixture(scope="module")
def ortho():
    idx = roots.root_point_index()
    return [Bd(idx[x]) for x in ("h12", "h34", "h56", "h")]


def test_local_numbers(ortho):
    b0, b1, b2, b3 = ortho
    assert quad_product(ortho) == 1
    assert quad_product([b0, b0, b1, b2]) == -1
    assert quad_product([b0, b0, b1, b1]) == 1
    assert quad_product([b0, b0, b0, b1]) == 1
    assert quad_product([b0] * 4) == -3


def test_cusp_numbers():
    idx = roots.root_point_index()
    t = roots.cusp_triads()[0]
    b = [Bd(idx[r[0]]) for r in t.rows]
    c = Cd(0)
    assert quad_product([c] + b) == 1
    assert quad_product([c, c, b[0], b[1]]) == -1
    assert quad_product([c, c, c, b[0]]) == 2
    assert quad_product([c] * 4) == -6
    assert quad_product([c, c, b[0], b[0]]) == 0
    assert quad_product([c, b[0], b[0], b[1]]) == 0
    assert quad_product([c, Cd(1), b[0], b[1]]) == 0


def test_non_perpendicular_vanish():
    idx = roots.root_point_index()
    assert quad_product([Bd(idx["h12"]), Bd(idx["h23"]), Bd(idx["h45"]), Bd(idx["h45"])]) == 0


def test_errors():
    with pytest.raises(ValueError):
        quad_product([Bd(0)] * 3)
    with pytest.raises(ValueError):
        quad_product([DivisorId("T", 0)] + [Bd(0)] * 3)
    with pytest.raises(ValueError):
        Bd(36)


ids = st.one_of(st.integers(0, 35).map(Bd), st.integers(0, 39).map(Cd))


@settings(max_examples=200, deadline=None)
@given(st.lists(ids, min_size=4, max_size=4))
def test_symmetric(m):
    v = quad_product(m)
    assert all(quad_product(list(p)) == v for p in permutations(m))


def test_w_invariance(weyl, points):
    pb, pc = weyl.permutations(points.boundary), weyl.permutations(points.cusps)
    rng = np.random.default_rng(11)
    for _ in range(100):
        k = int(rng.integers(weyl.order))
        m = [Bd(int(i)) for i in rng.integers(36, size=3)] + [Cd(int(rng.integers(40)))]
        img = [Bd(int(pb[k][d.index])) if d.kind == "B" else Cd(int(pc[k][d.index])) for d in m]
        assert quad_product(m) == quad_product(img)


def test_b2():
    r, m = gram.rank_b2_matrix()
    assert r == 21
    assert (np.diag(m) == -3).all()
    assert ((m == 1).sum(axis=1) == 15).all()


def test_rank_306():
    g = gram.gram_306()
    assert g.shape == (306, 306) and (g == g.T).all()
    assert gram.rank_306() == (147, 146)


def test_cusp_classes():
    r, g = gram.rank_cusp_classes()
    assert r == 120
    blk = g[:3, :3].tolist()
    assert blk == [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]
    assert (g[:3, 3:] == 0).all()
    assert gram.rank_cusp_classes("last")[0] == 120


def test_relations():
    assert gram.relation_space_rank() == 15
    assert gram.relation_space_rank_oracle() == 15
    assert gram.relation_space_rank([0] * 76) == 0


def test_decomposition():
    r = gram.a2_decomposition_report()
    assert (r["cusp"], r["plus_B2"], r["plus_S"], r["total"]) == (120, 21, 6, 147)
    assert r["cusp_perp_B2"]
    assert r["S_h+ terms"] == r["S_h- terms"] == 60


def test_invariant_sums():
    assert gram.invariant_sum(4, 0) == -12528
    assert gram.invariant_sum(0, 4) == -240
    assert gram.invariant_sum(1, 3) == 720
