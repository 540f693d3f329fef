from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from crossratio import fgeom, roots
from crossratio.roots import CharacterMonomial


def test_positive_roots():
    pr = roots.positive_roots()
    assert len(pr) == 36
    assert all(roots.dot(r.vector, r.vector) == -2 for r in pr)
    assert all(roots.dot(r.vector, roots.K_CLASS) == 0 for r in pr)


def test_simple_expansion():
    assert roots.simple_expansion(roots.root("h12").vector) == (1, 0, 0, 0, 0, 0)
    for r in roots.positive_roots():
        c = roots.simple_expansion(r.vector)
        assert all(x >= 0 for x in c)


def test_pi_is_bijection_onto_boundary(points):
    images = {roots.pi_map(r) for r in roots.positive_roots()}
    assert images == set(points.boundary)


def test_orthogonal_roots_map_to_perpendicular_points():
    for a, b in combinations(roots.positive_roots(), 2):
        if roots.dot(a.vector, b.vector) == 0:
            assert fgeom.perpendicular(roots.pi_map(a), roots.pi_map(b))
        else:
            assert not fgeom.perpendicular(roots.pi_map(a), roots.pi_map(b))


def test_reflection_is_equivariant():
    """pi(s_a(b)) = s_{pi a}(pi b)."""
    from crossratio.orthgroup import reflection
    for a in roots.positive_roots()[:6]:
        s = reflection(roots.pi_map(a))
        for b in roots.positive_roots():
            assert fgeom.normalize(s(roots.pi_map(b))) == roots.pi_map(roots.reflect(a, b))


@given(st.tuples(*[st.integers(-3, 3)] * 4))
def test_character_roundtrip(e):
    m = CharacterMonomial(e)
    assert CharacterMonomial.parse(str(m)) == m
    assert CharacterMonomial.from_vector(m.vector()) == m


def test_character_parse_forms():
    assert CharacterMonomial.parse("lambda*mu*rho^2") == CharacterMonomial.parse("λμρ²")
    with pytest.raises(ValueError):
        CharacterMonomial.parse("x")


def test_d4_format_roundtrip():
    for p in roots.short_vectors() + roots.long_vectors():
        assert roots.parse_d4(roots.format_d4(p.doubled)) == p.doubled
    assert roots.parse_d4("eps1") == (2, 0, 0, 0)
    assert roots.parse_d4("(+-+-)") == (1, -1, 1, -1)


def test_ray_roots():
    rr = roots.root_of_ray()
    assert len(rr) == 48
    assert rr[(1, -1, 1, -1)][0].label == "h246"
    # 24 short rays give each of the 12 ... and shared chambers give orthogonal roots
    labels = {rr[p.doubled][0].label for p in roots.short_vectors()}
    assert len(labels) == 24


def test_half_rays_orthogonal_to_unit_neighbours():
    rr = roots.root_of_ray()
    for p in roots.short_vectors():
        t = p.doubled
        if all(abs(x) == 1 for x in t):
            r = rr[t][0]
            for i, x in enumerate(t):
                u = [0] * 4
                u[i] = 2 * x
                assert roots.dot(r.vector, rr[tuple(u)][0].vector) == 0


def test_tritangents():
    ts = roots.tritangent_labels()
    assert len(ts) == 45
    assert len({t.label for t in ts}) == 45
    assert roots.tritangent_by_label("(56)").point == (0, 0, 0, 0, 1)


def test_cusp_triads(points):
    ts = roots.cusp_triads()
    assert len(ts) == 40
    for t in ts:
        assert len(t.rows) == 3 and all(len(r) == 3 for r in t.rows)
        assert len(set(t.roots)) == 9
        for a, b in combinations(t.rows, 2):
            assert all(roots.dot(roots.root(x).vector, roots.root(y).vector) == 0 for x in a for y in b)
    assert roots.triad((1, -1, 1, 0, 0)).label == "[13.45.26]"


def test_lambda_seed():
    seed = roots.lambda_divisor_on_cusps()
    assert len(seed) == 76
    assert sum(seed[:36]) == 0
    assert sum(1 for x in seed[:36] if x == 1) == sum(1 for x in seed[:36] if x == -1)


def test_symmetrize():
    s = roots.symmetrize([("boundary", 9), ("cusp", -10)])
    assert (s.b, s.c) == (roots.Fraction(1, 4), roots.Fraction(-1, 4))
    with pytest.raises(ValueError):
        roots.symmetrize([("line", 1)])
