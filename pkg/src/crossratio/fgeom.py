"""
The orthogonal geometry (F_3^5, q) with q(x) = sum x_i^2.

Vectors are 5-tuples of balanced residues {-1, 0, 1}.  Projective points are
normalized so the first nonzero coordinate is +1.  Points are indexed by their
position in the lexicographically sorted list of each class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

DIM = 5

CUSP, TRITANGENT, BOUNDARY = 0, 1, -1
CLASS_NAMES = {CUSP: "cusp", TRITANGENT: "tritangent", BOUNDARY: "boundary"}


def bal(x: int) -> int:
    """Balanced residue mod 3."""
    return (x + 1) % 3 - 1


def vec(xs) -> tuple:
    v = tuple(bal(int(x)) for x in xs)
    if len(v) != DIM:
        raise ValueError("expected %d coordinates, got %d" % (DIM, len(v)))
    return v


def bilinear(x, y) -> int:
    return bal(sum(a * b for a, b in zip(x, y)))


def q(x) -> int:
    return bilinear(x, x)


def neg(x) -> tuple:
    return tuple(-a for a in x)


def add(x, y) -> tuple:
    return tuple(bal(a + b) for a, b in zip(x, y))


def scale(c: int, x) -> tuple:
    return tuple(bal(c * a) for a in x)


def normalize(x) -> tuple:
    x = tuple(bal(a) for a in x)
    for a in x:
        if a:
            return x if a == 1 else neg(x)
    raise ValueError("zero vector has no projective point")


def perpendicular(x, y) -> bool:
    return bilinear(x, y) == 0


def nonzero_vectors() -> list[tuple]:
    return [v for v in product((-1, 0, 1), repeat=DIM) if any(v)]


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    rep: tuple
    qclass: int

    @classmethod
    def of(cls, x) -> "ProjectivePoint":
        r = normalize(x)
        return cls(r, q(r))

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.rep) + ")"


@dataclass(frozen=True)
class PointSets:
    cusps: tuple        # N_0
    tritangents: tuple  # N_1
    boundary: tuple     # N_-1

    def by_class(self, c: int) -> tuple:
        return {CUSP: self.cusps, TRITANGENT: self.tritangents, BOUNDARY: self.boundary}[c]

    def all(self) -> tuple:
        return tuple(sorted(self.cusps + self.tritangents + self.boundary))


@lru_cache(maxsize=None)
def enumerate_points() -> PointSets:
    pts = sorted({normalize(v) for v in nonzero_vectors()})
    sets = {CUSP: [], TRITANGENT: [], BOUNDARY: []}
    for p in pts:
        sets[q(p)].append(p)
    return PointSets(tuple(sets[CUSP]), tuple(sets[TRITANGENT]), tuple(sets[BOUNDARY]))


@lru_cache(maxsize=None)
def point_index() -> dict:
    """Map normalized rep -> (class, index within class)."""
    ps = enumerate_points()
    out = {}
    for c in (CUSP, TRITANGENT, BOUNDARY):
        for i, p in enumerate(ps.by_class(c)):
            out[p] = (c, i)
    return out


def locate(x) -> tuple:
    return point_index()[normalize(x)]


def perp_profile(p) -> dict:
    """Counts of N_0, N_1, N_-1 points perpendicular to p, p itself excluded."""
    p = normalize(p)
    ps = enumerate_points()
    out = {}
    for c in (CUSP, TRITANGENT, BOUNDARY):
        out[c] = sum(1 for z in ps.by_class(c) if z != p and perpendicular(z, p))
    return out


def perp_points(p, cls: int) -> list[tuple]:
    p = normalize(p)
    return [z for z in enumerate_points().by_class(cls) if perpendicular(z, p)]


def fmt(v) -> str:
    return "(" + ",".join(str(a) for a in v) + ")"
