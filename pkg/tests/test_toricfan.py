import pytest
from hypothesis import given, settings, strategies as st

from crossratio import toricfan
from crossratio.roots import CharacterMonomial


def test_weyl_fan(fan):
    assert len(fan.rays) == 48 and len(fan.cones) == 192
    assert all(fan.is_unimodular(c) for c in fan.cones)
    assert toricfan.f_vector(fan) == (1, 48, 240, 384, 192)
    assert toricfan.chow_ranks(fan) == (1, 44, 102, 44, 1)
    assert toricfan.euler(fan) == 192


def test_weyl_group_d4():
    assert len(toricfan.weyl_group_d4()) == 192


def test_completeness_sampling(fan):
    assert toricfan.random_completeness_check(fan, samples=200, seed=3) == 0


def test_star_of_long_ray(fan):
    s = toricfan.star_fan(fan, (2, 0, 2, 0))
    assert toricfan.f_vector(s) == (1, 6, 12, 8)
    assert toricfan.chow_ranks(s) == (1, 3, 3, 1)
    rays = set(s.rays)
    assert all(tuple(-x for x in r) in rays for r in rays)


def test_star_of_eps1(fan):
    s = toricfan.star_fan(fan, (2, 0, 0, 0))
    assert len(s.rays) == 14
    assert toricfan.chow_ranks(s) == (1, 11, 11, 1)
    assert toricfan.euler(s) == 24


def test_surfaces():
    sf = toricfan.surface_fans()
    assert len(sf) == 16
    for _, s in sf:
        assert toricfan.f_vector(s) == (1, 6, 6)
        assert toricfan.chow_ranks(s) == (1, 4, 1)


def test_product_p1():
    f = toricfan.product_p1_fan(3)
    assert toricfan.f_vector(f) == (1, 6, 12, 8)
    assert toricfan.chow_ranks(f) == (1, 3, 3, 1)


def test_character_divisor(fan):
    d = toricfan.character_divisor(fan, "λ")
    assert d[(2, -2, 0, 0)] == 2
    assert sum(d.values()) == 0
    assert all(d[tuple(-x for x in t)] == -n for t, n in d.items())


def test_basis_roundtrip():
    for t in ((2, 0, 0, 0), (1, -1, 1, -1), (2, 2, 0, 0), (0, 0, -2, 2)):
        assert toricfan.from_basis(toricfan.to_basis(t)) == t


def test_plane_saturation():
    plane = toricfan.plane_from_characters(CharacterMonomial.parse("ν"), CharacterMonomial.parse("ρ"))
    assert len(plane) == 2 and toricfan.is_saturated(plane)


mat = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=3)


@settings(max_examples=50, deadline=None)
@given(mat)
def test_kernel_basis(a):
    for k in toricfan.kernel_basis(a):
        assert toricfan.matvec(a, k) == tuple([0] * len(a))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4).filter(any))
def test_primitive(v):
    from math import gcd
    p = toricfan.primitive(v)
    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1
