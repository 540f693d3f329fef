from hypothesis import given, strategies as st

from crossratio import fgeom

vec5 = st.tuples(*[st.integers(-1, 1)] * 5).filter(any)


def test_sizes(points):
    assert (len(points.cusps), len(points.tritangents), len(points.boundary)) == (40, 45, 36)
    assert len(points.all()) == 121


def test_profiles(points):
    for p in points.boundary:
        assert fgeom.perp_profile(p) == {fgeom.CUSP: 10, fgeom.TRITANGENT: 15, fgeom.BOUNDARY: 15}
    for p in points.tritangents:
        assert fgeom.perp_profile(p)[fgeom.CUSP] == 16
    for p in points.cusps:
        assert fgeom.perp_profile(p)[fgeom.BOUNDARY] == 9


def test_examples():
    assert fgeom.q((1, 1, 1, 1, 1)) == -1
    assert fgeom.q((1, 1, 1, 0, 0)) == 0
    assert fgeom.normalize((0, -1, 1, 0, 1)) == (0, 1, -1, 0, -1)
    assert fgeom.fmt((0, 0, 1, -1, -1)) == "(0,0,1,-1,-1)"
    assert fgeom.locate((1, -1, 1, 0, 0)) == (fgeom.CUSP, fgeom.enumerate_points().cusps.index((1, -1, 1, 0, 0)))


@given(vec5)
def test_normalize_is_projective(v):
    n = fgeom.normalize(v)
    assert n == fgeom.normalize(fgeom.neg(v))
    assert next(x for x in n if x) == 1
    assert fgeom.q(n) == fgeom.q(v)


@given(vec5, vec5)
def test_bilinear_symmetric(a, b):
    assert fgeom.bilinear(a, b) == fgeom.bilinear(b, a)
    assert fgeom.perpendicular(a, b) == fgeom.perpendicular(b, a)


def test_points_sorted_and_distinct(points):
    for cls in (points.cusps, points.tritangents, points.boundary):
        assert list(cls) == sorted(set(cls))
