import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossratio import fgeom
from crossratio import orthgroup as og


def test_orders(weyl):
    assert weyl.order == 51840
    assert weyl.layers == (1, 36, 510, 3600, 13089, 22284, 12320)
    assert og.full_orthogonal_group().order == 103680


def test_all_elements_preserve_q(weyl):
    assert og.preserves_q_exhaustive(weyl)


def test_reflection_example():
    s = og.reflection((1, 1, 1, 1, 1))
    assert s((1, 0, 0, 0, 0)) == (0, -1, -1, -1, -1)
    assert s * s == og.IDENTITY


def test_isotropic_reflection_rejected():
    with pytest.raises(ValueError):
        og.reflection((1, 1, 1, 0, 0))


def test_non_isometry_rejected():
    with pytest.raises(ValueError):
        og.OrthMatrix.from_array(np.diag([1, 1, 1, 1, 0]))


def test_minus_reflections(weyl, points):
    assert og.MINUS_IDENTITY not in weyl
    for v in points.tritangents:
        m = -og.reflection(v)
        assert m in weyl and m * m == og.IDENTITY
    for v in points.boundary:
        assert og.reflection(v) in weyl


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-1, 1), min_size=25, max_size=25))
def test_pack_roundtrip(entries):
    m = np.array(entries).reshape(5, 5)
    assert (og.unpack(og.pack(m)) == m).all()


def test_transitive(weyl):
    for cls, n in ((0, 40), (1, 45), (-1, 36)):
        assert [len(o) for o in og.orbits(weyl, cls)] == [n]


@pytest.mark.parametrize("a,b,n", [(-1, -1, 3), (-1, 0, 2), (1, 1, 3), (0, 1, 2), (0, 0, 3), (-1, 1, 2)])
def test_pair_orbits(weyl, a, b, n):
    assert og.pair_orbit_count(weyl, a, b) == n
    assert og.burnside_pair_count(weyl, a, b) == n


def test_tritangent_pairs(weyl):
    assert og.distinct_pair_orbits(weyl, 1) == [45 * 12, 45 * 32]


def test_incidence_ranks():
    assert og.incidence_rank(-1, 0) == 16
    assert og.incidence_rank(-1, 1) == 21
    assert og.incidence_rank(0, 1) == 25


def test_permutations_are_actions(weyl, points):
    perms = weyl.permutations(points.cusps)
    assert perms.shape == (51840, 40)
    assert all(sorted(p) == list(range(40)) for p in perms[:200])
