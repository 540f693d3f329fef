"""
Smooth complete fans: the fan of D4 Weyl chambers in N and the fans derived
from it (stars V(tau), closures of 2-dim subtori).

A fan is kept in integer coordinates with respect to a Z-basis of its lattice.
For the Weyl fan the basis is eps1, eps2, eps3, (eps1+eps2+eps3+eps4)/2 and
the rays also carry their doubled D4 coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, gcd
import random

from . import roots
from .roots import CharacterMonomial, D4Point


# ---------------------------------------------------------------------------
# integer linear algebra helpers

def det(m) -> int:
    """Exact determinant of a small square integer/rational matrix (Laplace-free Gauss)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    assert d.denominator == 1
    return int(d)


def hermite_rows(m):
    """
    Unimodular row reduction: returns (H, L) with L @ m = H, L in GL_n(Z)
    and H in row echelon form.  m is a list of n integer rows.
    """
    h = [list(r) for r in m]
    n = len(h)
    cols = len(h[0]) if h else 0
    L = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(cols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if h[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[p] = h[p], h[r]
            L[r], L[p] = L[p], L[r]
            done = True
            for i in range(r + 1, n):
                if h[i][c]:
                    f = h[i][c] // h[r][c]
                    h[i] = [x - f * y for x, y in zip(h[i], h[r])]
                    L[i] = [x - f * y for x, y in zip(L[i], L[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if any(h[i][c] for i in range(r, n)):
            r += 1
    return h, L


def kernel_basis(a) -> list[tuple]:
    """Z-basis of {x in Z^n : a x = 0} (a given as k rows of length n)."""
    n = len(a[0])
    at = [[a[i][j] for i in range(len(a))] for j in range(n)]
    h, L = hermite_rows(at)
    return [tuple(L[i]) for i in range(n) if not any(h[i])]


def quotient_map(tau) -> list[tuple]:
    """Rows of an integer matrix Z^n -> Z^{n-1} with kernel Z tau (tau primitive)."""
    h, L = hermite_rows([[x] for x in tau])
    if abs(h[0][0]) != 1:
        raise ValueError("%s is not primitive" % (tau,))
    return [tuple(row) for row in L[1:]]


def primitive(v) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def matvec(rows, v) -> tuple:
    return tuple(sum(a * b for a, b in zip(r, v)) for r in rows)


# ---------------------------------------------------------------------------
# N in the fixed basis

def to_basis(doubled) -> tuple:
    """Doubled D4 coordinates -> coordinates in (eps1, eps2, eps3, half-sum)."""
    x1, x2, x3, x4 = doubled
    if len({x % 2 for x in doubled}) != 1:
        raise ValueError("%s is not in the weight lattice" % (doubled,))
    d = x4
    return ((x1 - d) // 2, (x2 - d) // 2, (x3 - d) // 2, d)


def from_basis(c) -> tuple:
    a1, a2, a3, d = c
    return (2 * a1 + d, 2 * a2 + d, 2 * a3 + d, d)


def character_in_basis(m: CharacterMonomial) -> tuple:
    """The dual coordinates of m with respect to the basis of N."""
    v = m.vector()
    return (v[0], v[1], v[2], sum(v) // 2)


# ---------------------------------------------------------------------------
# fans

@dataclass
class Fan:
    rank: int
    rays: tuple           # integer coordinates in a Z-basis
    cones: tuple          # maximal cones: sorted tuples of ray indices
    labels: tuple = ()    # optional per-ray labels (doubled coords for the Weyl fan)
    _faces: dict = field(default_factory=dict, repr=False)

    def faces(self, k: int) -> frozenset:
        """All cones of dimension k (simplicial fan: subsets of maximal cones)."""
        if k not in self._faces:
            s = set()
            for c in self.cones:
                s.update(combinations(c, k))
            self._faces[k] = frozenset(s)
        return self._faces[k]

    def ray_index(self, r) -> int:
        if self.labels and tuple(r) in self.labels:
            return self.labels.index(tuple(r))
        return self.rays.index(tuple(r))

    def cone_matrix(self, c) -> list:
        return [self.rays[i] for i in c]

    def is_unimodular(self, c) -> bool:
        return abs(det(self.cone_matrix(c))) == 1

    def containing(self, x) -> list:
        """Maximal cones containing the vector x (rational coordinates)."""
        out = []
        for c in self.cones:
            coef = _solve_in_cone(self.cone_matrix(c), x)
            if coef is not None and all(t >= 0 for t in coef):
                out.append(c)
        return out


def _solve_in_cone(gens, x):
    from .exactmath import solve_linear
    n = len(gens)
    a = [[gens[j][i] for j in range(n)] for i in range(n)]
    try:
        return solve_linear(a, x)
    except ZeroDivisionError:
        return None


CHAMBER_RAYS = ((2, 0, 0, 0), (2, 2, 0, 0), (1, 1, 1, -1), (1, 1, 1, 1))


@lru_cache(maxsize=None)
def weyl_group_d4() -> tuple:
    """The 192 signed permutations with an even number of sign changes."""
    out = []
    for p in permutations(range(4)):
        for s in product((1, -1), repeat=4):
            if s.count(-1) % 2 == 0:
                out.append((p, s))
    return tuple(out)


def act(g, doubled) -> tuple:
    p, s = g
    return tuple(s[i] * doubled[p[i]] for i in range(4))


@lru_cache(maxsize=None)
def build_weyl_fan() -> Fan:
    chambers = set()
    for g in weyl_group_d4():
        chambers.add(frozenset(act(g, r) for r in CHAMBER_RAYS))
    ray_set = sorted({r for c in chambers for r in c})
    expected = sorted(p.doubled for p in roots.short_vectors() + roots.long_vectors())
    if ray_set != expected:
        raise ValueError("ray orbit is not S u R")
    idx = {r: i for i, r in enumerate(ray_set)}
    cones = tuple(sorted(tuple(sorted(idx[r] for r in c)) for c in chambers))
    fan = Fan(4, tuple(to_basis(r) for r in ray_set), cones, tuple(ray_set))
    bad = [c for c in cones if not fan.is_unimodular(c)]
    if bad:
        raise ValueError("non-unimodular chambers: %s" % bad[:3])
    return fan


def f_vector(f: Fan) -> tuple:
    return tuple(len(f.faces(k)) for k in range(f.rank + 1))


def chow_ranks(f: Fan) -> tuple:
    """Betti numbers b_{2k} of the smooth complete toric variety of f."""
    n = f.rank
    d = f_vector(f)
    b = []
    for k in range(n + 1):
        b.append(sum((-1) ** (i - k) * comb(i, k) * d[n - i] for i in range(k, n + 1)))
    if n >= 1 and b[1] != d[1] - n:
        raise ValueError("rank A^1 = %d but #rays - n = %d" % (b[1], d[1] - n))
    return tuple(b)


def euler(f: Fan) -> int:
    return len(f.cones)


def star_fan(f: Fan, tau) -> Fan:
    """Fan of V(tau) in N / Z tau.  tau: ray index or ray label/coordinates."""
    t = tau if isinstance(tau, int) else f.ray_index(tau)
    q = quotient_map(f.rays[t])
    star = [c for c in f.cones if t in c]
    new_rays = sorted({i for c in star for i in c if i != t})
    images = {i: matvec(q, f.rays[i]) for i in new_rays}
    ray_list = sorted(set(images.values()))
    if len(ray_list) != len(new_rays):
        raise ValueError("two rays of the star have the same image")
    pos = {r: k for k, r in enumerate(ray_list)}
    cones = tuple(sorted(tuple(sorted(pos[images[i]] for i in c if i != t)) for c in star))
    labels = ()
    if f.labels:
        inv = {images[i]: f.labels[i] for i in new_rays}
        labels = tuple(inv[r] for r in ray_list)
    out = Fan(f.rank - 1, tuple(ray_list), cones, labels)
    bad = [c for c in cones if not out.is_unimodular(c)]
    if bad:
        raise ValueError("star fan is not smooth")
    return out


def plane_from_characters(*ms) -> list[tuple]:
    """Z-basis (fan coordinates) of the common kernel of characters m in N."""
    rows = [character_in_basis(m if isinstance(m, CharacterMonomial) else CharacterMonomial.parse(m))
            for m in ms]
    return kernel_basis(rows)


def is_saturated(gens) -> bool:
    """Does the lattice spanned by gens equal its rational span intersected with Z^n?"""
    k = len(gens)
    n = len(gens[0])
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, det([[v[c] for c in cols] for v in gens]))
    return g == 1


def _coords_in_plane(gens, x):
    """Coordinates of x in the basis gens of a plane (None if x not in the plane)."""
    n = len(x)
    k = len(gens)
    for rows in combinations(range(n), k):
        sub = [[gens[j][i] for j in range(k)] for i in rows]
        if det(sub):
            from .exactmath import solve_linear
            c = solve_linear(sub, [x[i] for i in rows])
            back = [sum(c[j] * gens[j][i] for j in range(k)) for i in range(n)]
            return c if back == list(x) else None
    raise ValueError("degenerate plane")


def subtorus_closure_fan(f: Fan, plane) -> Fan:
    """
    Fan of the closure of the subtorus with cocharacter lattice `plane`
    (a list of fan-coordinate generators) in the toric variety of f: the
    cones sigma ∩ plane for maximal sigma, in coordinates of the plane.
    """
    gens = [tuple(v) for v in plane]
    if not is_saturated(gens):
        raise ValueError("plane is not saturated in N")
    k = len(gens)
    # rays of the restriction: u in the relative interior of a face F with
    # dim(span F ∩ plane) = 1
    cand = set()
    for d in range(1, f.rank + 1):
        for face in f.faces(d):
            m = [list(f.rays[i]) for i in face] + [[-x for x in g] for g in gens]
            # a in ker: sum a_i r_i = sum b_j g_j
            kb = kernel_basis([[row[c] for row in m] for c in range(f.rank)])
            if len(kb) != 1:
                continue
            a = kb[0][:len(face)]
            if all(x > 0 for x in a) or all(x < 0 for x in a):
                b = kb[0][len(face):]
                if all(x < 0 for x in a):
                    b = tuple(-x for x in b)
                cand.add(primitive(b))
    ray_list = sorted(cand)
    # 2-dim (or k-dim) cones: candidates inside each chamber
    cones = set()
    for c in f.cones:
        inside = []
        for i, u in enumerate(ray_list):
            x = [sum(u[j] * gens[j][t] for j in range(k)) for t in range(f.rank)]
            coef = _solve_in_cone(f.cone_matrix(c), x)
            if all(t >= 0 for t in coef):
                inside.append(i)
        if len(inside) == k:
            cones.add(tuple(inside))
        elif len(inside) > k:
            raise ValueError("intersections do not form a simplicial fan")
    out = Fan(k, tuple(ray_list), tuple(sorted(cones)))
    if k == 2:
        _check_complete_2d(out)
    return out


def _check_complete_2d(f: Fan):
    """Each ray must lie in exactly two 2-cones, and the cones must not overlap."""
    from collections import Counter
    cnt = Counter(i for c in f.cones for i in c)
    if any(cnt[i] != 2 for i in range(len(f.rays))):
        raise ValueError("restricted fan is not complete")
    for c in f.cones:
        if det(f.cone_matrix(c)) == 0:
            raise ValueError("degenerate 2-cone")


def surface_planes() -> list[tuple]:
    """
    The 16 surfaces S_i as (pair of A2 simple roots in D4, plane generators).
    The A2's are the pairs (alpha, beta) of positive long roots of D4 whose
    sum is a root.
    """
    longs = [r for r in roots.d4_tables()["long"]]
    out = []
    for a, b in combinations(longs, 2):
        s = tuple(x + y for x, y in zip(a.character.vector(), b.character.vector()))
        if sum(x * x for x in s) == 2:
            out.append(((a, b), plane_from_characters(a.character, b.character)))
    return out


@lru_cache(maxsize=None)
def surface_fans() -> tuple:
    """(A2 pair, fan of the closure of the subtorus) for the 16 surfaces."""
    f = build_weyl_fan()
    return tuple((pair, subtorus_closure_fan(f, plane)) for pair, plane in surface_planes())


def character_divisor(f: Fan, m) -> dict:
    """ray label (doubled coords) -> <m, tau>."""
    if not isinstance(m, CharacterMonomial):
        m = CharacterMonomial.parse(m)
    mb = character_in_basis(m)
    out = {}
    for i, r in enumerate(f.rays):
        lab = f.labels[i] if f.labels else r
        out[lab] = sum(a * b for a, b in zip(mb, r))
    return out


def random_completeness_check(f: Fan, samples: int = 10000, seed: int = 0) -> int:
    """
    Number of random lattice vectors not in exactly one maximal cone
    (a random rational vector is a random lattice vector up to scaling).
    """
    rng = random.Random(seed)
    # the cone matrices are unimodular, so their inverses are integral
    inv = []
    for c in f.cones:
        gens = f.cone_matrix(c)
        a = [[gens[j][i] for j in range(f.rank)] for i in range(f.rank)]
        m = _inverse(a)
        if any(x.denominator != 1 for row in m for x in row):
            raise ValueError("cone %s is not unimodular" % (c,))
        inv.append([[int(x) for x in row] for row in m])
    bad = 0
    for _ in range(samples):
        x = [rng.randint(-10 ** 9, 10 ** 9) for _ in range(f.rank)]
        hits = 0
        for m in inv:
            if all(sum(a * b for a, b in zip(row, x)) >= 0 for row in m):
                hits += 1
        bad += hits != 1
    return bad


def _inverse(a):
    from .exactmath import solve_linear
    n = len(a)
    cols = [solve_linear(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def product_p1_fan(n: int) -> Fan:
    """Fan of (P^1)^n (test fixture)."""
    rays = []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            rays.append(tuple(v))
    rays.sort()
    cones = []
    for signs in product((1, -1), repeat=n):
        c = []
        for i, s in enumerate(signs):
            v = [0] * n
            v[i] = s
            c.append(rays.index(tuple(v)))
        cones.append(tuple(sorted(c)))
    return Fan(n, tuple(rays), tuple(sorted(cones)))
