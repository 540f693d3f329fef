"""
The orthogonal group O(F_3^5, q) and its reflection subgroup.

Elements are 5x5 integer matrices with entries in {-1, 0, 1} acting on column
vectors; each has a packed base-3 key (25 trits) so a group is just a sorted
int64 array of keys.  Closure is breadth first, one batched numpy product of
all generators against the frontier per layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import fgeom
from .exactmath import rank as exact_rank

_POW = 3 ** np.arange(25, dtype=np.int64)


def _bal(a: np.ndarray) -> np.ndarray:
    return (a + 1) % 3 - 1


def pack(m: np.ndarray) -> np.ndarray | int:
    """Base-3 key(s) of matrix/matrices with balanced entries."""
    flat = (np.asarray(m) % 3).reshape(-1, 25).astype(np.int64)
    keys = flat @ _POW
    return int(keys[0]) if np.asarray(m).ndim == 2 else keys


def unpack(key: int) -> np.ndarray:
    digits = [(key // 3 ** k) % 3 for k in range(25)]
    return _bal(np.array(digits, dtype=np.int64)).reshape(5, 5)


_ALL_VECTORS = np.array(fgeom.nonzero_vectors(), dtype=np.int64).T   # 5 x 242
_Q_ALL = _bal((_ALL_VECTORS ** 2).sum(axis=0))


@dataclass(frozen=True)
class OrthMatrix:
    entries: tuple   # 5 rows of 5 balanced residues

    def __post_init__(self):
        m = self.array
        if len(self.entries) != 5 or any(len(r) != 5 for r in self.entries):
            raise ValueError("expected a 5x5 matrix")
        if not np.array_equal(_bal((_bal(m @ _ALL_VECTORS) ** 2).sum(axis=0)), _Q_ALL):
            raise ValueError("matrix does not preserve q")

    @classmethod
    def from_array(cls, a) -> "OrthMatrix":
        a = _bal(np.asarray(a, dtype=np.int64))
        return cls(tuple(tuple(int(x) for x in r) for r in a))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @property
    def key(self) -> int:
        return pack(self.array)

    def __call__(self, x) -> tuple:
        return tuple(int(y) for y in _bal(self.array @ np.asarray(x, dtype=np.int64)))

    def __mul__(self, other: "OrthMatrix") -> "OrthMatrix":
        return OrthMatrix.from_array(self.array @ other.array)

    def __neg__(self):
        return OrthMatrix.from_array(-self.array)


IDENTITY = OrthMatrix.from_array(np.eye(5, dtype=np.int64))
MINUS_IDENTITY = -IDENTITY


def reflection(v) -> OrthMatrix:
    """s_v(x) = x + q(v) b(x, v) v."""
    v = fgeom.vec(v)
    qv = fgeom.q(v)
    if qv == 0:
        raise ValueError("cannot reflect in the isotropic vector %s" % (v,))
    vv = np.array(v, dtype=np.int64)
    return OrthMatrix.from_array(np.eye(5, dtype=np.int64) + qv * np.outer(vv, vv))


@dataclass
class GroupSet:
    generators: tuple
    keys: np.ndarray            # sorted packed keys
    layers: tuple = ()          # BFS layer sizes
    _matrices: np.ndarray | None = field(default=None, repr=False)
    _perm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.keys)

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        k = g.key if isinstance(g, OrthMatrix) else int(g)
        i = np.searchsorted(self.keys, k)
        return bool(i < len(self.keys) and self.keys[i] == k)

    @property
    def matrices(self) -> np.ndarray:
        if self._matrices is None:
            digits = (self.keys[:, None] // _POW[None, :]) % 3
            self._matrices = _bal(digits).reshape(-1, 5, 5)
        return self._matrices

    def permutations(self, points) -> np.ndarray:
        """(order x n) array: row g gives the index of g(p_i) in points."""
        points = tuple(tuple(p) for p in points)
        if points not in self._perm_cache:
            self._perm_cache[points] = _act(self.matrices, points)
        return self._perm_cache[points]

    def generator_permutations(self, points) -> np.ndarray:
        mats = np.array([g.array for g in self.generators], dtype=np.int64).reshape(-1, 5, 5)
        return _act(mats, tuple(tuple(p) for p in points))


def _point_keys(vecs: np.ndarray) -> np.ndarray:
    """Normalize vectors (... x 5) projectively and return base-3 keys."""
    v = _bal(vecs)
    nz = v != 0
    first = np.argmax(nz, axis=-1)
    lead = np.take_along_axis(v, first[..., None], axis=-1)
    v = v * lead          # lead is +-1, so this makes it +1
    return ((v % 3) * (3 ** np.arange(5, dtype=np.int64))).sum(axis=-1)


def _act(mats: np.ndarray, points: tuple) -> np.ndarray:
    pts = np.array(points, dtype=np.int64)               # n x 5
    table = np.full(243, -1, dtype=np.int64)
    table[_point_keys(pts)] = np.arange(len(points))
    out = np.empty((len(mats), len(points)), dtype=np.int64)
    step = 8192
    for s in range(0, len(mats), step):
        img = np.einsum("gij,nj->gni", mats[s:s + step], pts)
        out[s:s + step] = table[_point_keys(img)]
    if (out < 0).any():
        raise ValueError("group does not stabilize the point set")
    return out


def generate(gens) -> GroupSet:
    """Breadth-first closure of the generators (identity included)."""
    gens = tuple(gens)
    gmats = np.array([g.array for g in gens], dtype=np.int64).reshape(-1, 5, 5)
    frontier = np.eye(5, dtype=np.int64)[None]
    seen = np.array([pack(frontier[0])], dtype=np.int64)
    layers = [1]
    while len(frontier) and len(gmats):
        prod = _bal(np.einsum("aij,njk->anik", gmats, frontier)).reshape(-1, 5, 5)
        keys = pack(prod)
        keys, first = np.unique(keys, return_index=True)
        fresh = ~np.isin(keys, seen, assume_unique=True)
        frontier = prod[first[fresh]]
        seen = np.union1d(seen, keys[fresh])
        if len(frontier):
            layers.append(len(frontier))
    return GroupSet(gens, seen, tuple(layers))


@lru_cache(maxsize=None)
def weyl_image() -> GroupSet:
    """Group generated by the 36 reflections s_v, v in N_-1 (the image of W(E6))."""
    return generate([reflection(v) for v in fgeom.enumerate_points().boundary])


@lru_cache(maxsize=None)
def full_orthogonal_group() -> GroupSet:
    return generate([reflection(v) for v in fgeom.enumerate_points().boundary] + [MINUS_IDENTITY])


def preserves_q_exhaustive(g: GroupSet) -> bool:
    """Check q(Mx) = q(x) for all elements and all 242 nonzero vectors."""
    mats = g.matrices
    for s in range(0, len(mats), 4096):
        img = _bal(np.einsum("gij,jn->gin", mats[s:s + 4096], _ALL_VECTORS))
        qq = _bal((img ** 2).sum(axis=1))
        if not (qq == _Q_ALL[None, :]).all():
            return False
    return True


# ---------------------------------------------------------------------------
# orbits

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def classes(self) -> list[list[int]]:
        out = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


def _as_points(s):
    if isinstance(s, int):
        return fgeom.enumerate_points().by_class(s)
    return tuple(tuple(p) for p in s)


def orbits(g: GroupSet, points) -> list[list[int]]:
    pts = _as_points(points)
    uf = _UnionFind(len(pts))
    for perm in g.generator_permutations(pts):
        for i, j in enumerate(perm):
            uf.union(i, int(j))
    return uf.classes()


def pair_orbits(g: GroupSet, a, b) -> list[list[tuple]]:
    """Orbits on A x B by union-find over the generator actions."""
    pa, pb = _as_points(a), _as_points(b)
    na, nb = len(pa), len(pb)
    uf = _UnionFind(na * nb)
    for perm_a, perm_b in zip(g.generator_permutations(pa), g.generator_permutations(pb)):
        for i in range(na):
            ia = int(perm_a[i])
            for j in range(nb):
                uf.union(i * nb + j, ia * nb + int(perm_b[j]))
    return [[divmod(c, nb) for c in cls] for cls in uf.classes()]


def pair_orbit_count(g: GroupSet, a, b) -> int:
    return len(pair_orbits(g, a, b))


def burnside_pair_count(g: GroupSet, a, b) -> int:
    """Oracle: <chi_A, chi_B> = |G|^-1 sum_g fix_A(g) fix_B(g)."""
    pa, pb = _as_points(a), _as_points(b)
    fa = (g.permutations(pa) == np.arange(len(pa))[None, :]).sum(axis=1)
    fb = (g.permutations(pb) == np.arange(len(pb))[None, :]).sum(axis=1)
    tot = int((fa * fb).sum())
    if tot % g.order:
        raise ArithmeticError("Burnside sum not divisible by the group order")
    return tot // g.order


def incidence_matrix(a, b) -> list[list[int]]:
    pa, pb = _as_points(a), _as_points(b)
    return [[int(fgeom.perpendicular(x, y)) for y in pb] for x in pa]


def incidence_rank(a, b) -> int:
    return exact_rank(incidence_matrix(a, b))


def distinct_pair_orbits(g: GroupSet, points) -> list[int]:
    """Sizes of the orbits on ordered pairs of distinct points."""
    pts = _as_points(points)
    return sorted(len(c) for c in pair_orbits(g, pts, pts) if c[0][0] != c[0][1])
