"""
Quadruple intersection numbers of boundary and cusp divisors, and the exact
rank computations in codimension two.

Boundary divisors B_i are indexed by N_-1, cusp divisors C_j by N_0 (sorted
as in fgeom).  Two distinct divisors meet iff their points are perpendicular,
two distinct cusp divisors never meet.  The nonzero local numbers are

    B0B1B2B3 = 1, B0^2B1B2 = -1, B0^2B1^2 = 1, B0^3B1 = 1, B0^4 = -3,
    CB1B2B3 = 1, C^2B1B2 = -1, C^3B = 2, C^4 = -6

(CB^3 = CB^2B' = C^2B^2 = 0).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial

import numpy as np

from . import fgeom, roots
from .exactmath import RowSpace, rank as exact_rank

BOUNDARY, CUSP, TRITANGENT = "B", "C", "T"


@dataclass(frozen=True, order=True)
class DivisorId:
    kind: str
    index: int

    def __post_init__(self):
        n = {BOUNDARY: 36, CUSP: 40, TRITANGENT: 45}.get(self.kind)
        if n is None or not 0 <= self.index < n:
            raise ValueError("invalid divisor id %s%d" % (self.kind, self.index))

    @property
    def point(self) -> tuple:
        ps = fgeom.enumerate_points()
        return {BOUNDARY: ps.boundary, CUSP: ps.cusps, TRITANGENT: ps.tritangents}[self.kind][self.index]

    def __str__(self):
        return "%s%d" % (self.kind, self.index)


def Bd(i: int) -> DivisorId:
    return DivisorId(BOUNDARY, i)


def Cd(j: int) -> DivisorId:
    return DivisorId(CUSP, j)


def monomial(*ids) -> tuple:
    """Canonical (sorted) form of a divisor monomial."""
    return tuple(sorted(ids))


_PURE_B = {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -3}
# (cusp multiplicity, sorted boundary multiplicities) -> value
_WITH_C = {(1, (1, 1, 1)): 1, (2, (1, 1)): -1, (3, (1,)): 2, (4, ()): -6,
           (2, (2,)): 0, (1, (2, 1)): 0, (1, (3,)): 0}


@lru_cache(maxsize=None)
def _perp_table() -> np.ndarray:
    """76 x 76 0/1 matrix: boundary 0..35 then cusps 36..75."""
    ps = fgeom.enumerate_points()
    pts = np.array(ps.boundary + ps.cusps, dtype=np.int64)
    g = pts @ pts.T
    return (g % 3 == 0)


def _slot(d: DivisorId) -> int:
    return d.index if d.kind == BOUNDARY else 36 + d.index


def quad_product(m) -> int:
    m = list(m)
    if len(m) != 4:
        raise ValueError("quadruple products need exactly four factors")
    if any(d.kind == TRITANGENT for d in m):
        raise ValueError("no intersection data for tritangent divisors")
    cnt = Counter(m)
    ids = list(cnt)
    cusps = [d for d in ids if d.kind == CUSP]
    if len(cusps) > 1:
        return 0
    perp = _perp_table()
    for a, b in combinations(ids, 2):
        if not perp[_slot(a), _slot(b)]:
            return 0
    if not cusps:
        return _PURE_B[tuple(sorted(cnt.values(), reverse=True))]
    c = cusps[0]
    bm = tuple(sorted((v for d, v in cnt.items() if d != c), reverse=True))
    return _WITH_C[(cnt[c], bm)]


# ---------------------------------------------------------------------------
# classes of codimension two as integer combinations of degree-2 monomials

def pairs_270() -> list[tuple]:
    """(i, j), i < j, boundary points perpendicular."""
    perp = _perp_table()
    return [(i, j) for i, j in combinations(range(36), 2) if perp[i, j]]


@lru_cache(maxsize=None)
def w_basis() -> tuple:
    """The 306 monomials B_iB_j (i<j perpendicular) then B_i^2."""
    return tuple([(Bd(i), Bd(j)) for i, j in pairs_270()] + [(Bd(i), Bd(i)) for i in range(36)])


def _gram(rows, cols) -> np.ndarray:
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for a, x in enumerate(rows):
        for b, y in enumerate(cols):
            out[a, b] = quad_product(x + y)
    return out


@lru_cache(maxsize=None)
def gram_306() -> np.ndarray:
    w = w_basis()
    n = len(w)
    g = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            g[a, b] = g[b, a] = quad_product(w[a] + w[b])
    return g


def rank_b2_matrix() -> tuple:
    """(rank, matrix) of (B_i^2 B_j^2)."""
    sq = [(Bd(i), Bd(i)) for i in range(36)]
    m = _gram(sq, sq)
    return exact_rank(m.tolist()), m


@lru_cache(maxsize=None)
def rank_306() -> tuple:
    g = gram_306()
    return exact_rank(g.tolist()), exact_rank(g[:270, :270].tolist())


def cusp_class_monomials(which: str = "first") -> list[tuple]:
    """B_i C_j, three per cusp: one root from each A2 row of its triad."""
    idx = roots.root_point_index()
    out = []
    for j, t in enumerate(roots.cusp_triads()):
        for row in t.rows:
            lab = sorted(row, key=lambda x: (len(x), x))
            pick = lab[0] if which == "first" else lab[-1]
            out.append((Bd(idx[pick]), Cd(j)))
    return out


def rank_cusp_classes(which: str = "first") -> tuple:
    mons = cusp_class_monomials(which)
    g = _gram(mons, mons)
    return exact_rank(g.tolist()), g


# ---------------------------------------------------------------------------
# S_h and its W(E6) translates

def s_h_terms() -> tuple:
    """(plus, minus) lists of root-label pairs for S_h = S_h^+ - S_h^-."""
    plus, minus = [], []
    for i, j in combinations(range(1, 7), 2):
        rest = [k for k in range(1, 7) if k not in (i, j)]
        for k in rest:
            plus.append(("h%d%d" % (i, j), roots.root("h%d%d%d" % tuple(sorted((i, j, k)))).label))
        for klm in combinations(rest, 3):
            minus.append(("h%d%d" % (i, j), "h%d%d%d" % klm))
    return plus, minus


def s_h_vector() -> np.ndarray:
    """S_h in coordinates of the 306 W-basis monomials."""
    idx = roots.root_point_index()
    pos = {frozenset((a.index, b.index)): k for k, (a, b) in enumerate(w_basis()) if a != b}
    v = np.zeros(len(w_basis()), dtype=np.int64)
    plus, minus = s_h_terms()
    for sign, terms in ((1, plus), (-1, minus)):
        for x, y in terms:
            key = frozenset((idx[x], idx[y]))
            if key not in pos:
                raise AssertionError("%s, %s do not meet" % (x, y))
            v[pos[key]] += sign
    return v


def s_vectors() -> np.ndarray:
    """Distinct W(E6)-translates of S_h (as rows in W-basis coordinates)."""
    from .orthgroup import weyl_image
    g = weyl_image()
    perms = g.permutations(fgeom.enumerate_points().boundary)
    s = s_h_vector()
    support = np.nonzero(s)[0]
    w = w_basis()
    pos = {}
    for k, (a, b) in enumerate(w):
        pos[(a.index, b.index)] = k
        pos[(b.index, a.index)] = k
    pa = np.array([w[k][0].index for k in support])
    pb = np.array([w[k][1].index for k in support])
    lookup = np.full((36, 36), -1, dtype=np.int64)
    for (i, j), k in pos.items():
        lookup[i, j] = k
    seen = {}
    for p in perms:
        slots = lookup[p[pa], p[pb]]
        key = tuple(sorted(zip(slots.tolist(), s[support].tolist())))
        seen.setdefault(key, None)
    out = np.zeros((len(seen), len(w)), dtype=np.int64)
    for r, key in enumerate(sorted(seen)):
        for k, val in key:
            out[r, k] = val
    return out


def a2_decomposition_report() -> dict:
    cm = cusp_class_monomials()
    w = w_basis()
    g_cc = _gram(cm, cm)
    g_cw = _gram(cm, list(w))                     # 120 x 306
    gw = gram_306()
    sq = np.zeros((36, len(w)), dtype=np.int64)
    for i in range(36):
        sq[i, 270 + i] = 1
    sv = s_vectors()

    def block(x_rows):
        # Gram of [cusp classes; W-combinations x_rows]
        top = np.hstack([g_cc, g_cw @ x_rows.T])
        bot = np.hstack([x_rows @ g_cw.T, x_rows @ gw @ x_rows.T])
        return np.vstack([top, bot])

    r_c = exact_rank(g_cc.tolist())
    r_cb = exact_rank(block(sq).tolist())
    r_cbs = exact_rank(block(np.vstack([sq, sv])).tolist())
    cross = g_cw @ sq.T
    plus, minus = s_h_terms()
    return {"cusp": r_c, "plus_B2": r_cb - r_c, "plus_S": r_cbs - r_cb, "total": r_cbs,
            "cusp_perp_B2": bool((cross == 0).all()),
            "S_h+ terms": len(plus), "S_h- terms": len(minus),
            "S translates": len(sv)}


# ---------------------------------------------------------------------------
# relations between boundary and cusp divisors

def relation_seed() -> tuple:
    return roots.lambda_divisor_on_cusps()


def _label_permutations(gens: bool = True) -> np.ndarray:
    from .orthgroup import weyl_image
    g = weyl_image()
    ps = fgeom.enumerate_points()
    if gens:
        pb = g.generator_permutations(ps.boundary)
        pc = g.generator_permutations(ps.cusps)
    else:
        pb = g.permutations(ps.boundary)
        pc = g.permutations(ps.cusps)
    return np.hstack([pb, pc + 36])


def _apply(perm: np.ndarray, v) -> list[int]:
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[int(perm[i])] = x
    return out


def relation_space_rank(seed=None) -> int:
    """Dimension of the span of the W(E6)-orbit of the seed (closure under generators)."""
    seed = list(relation_seed() if seed is None else seed)
    perms = _label_permutations()
    space = RowSpace(76)
    todo = []
    if space.add(seed):
        todo.append(seed)
    while todo:
        v = todo.pop()
        for p in perms:
            w = _apply(p, v)
            if space.add(w):
                todo.append(w)
    return len(space)


def relation_space_rank_oracle(seed=None) -> int:
    """Same via the full orbit under all group elements and one Bareiss rank."""
    seed = np.array(relation_seed() if seed is None else seed, dtype=np.int64)
    perms = _label_permutations(gens=False)
    imgs = np.zeros((len(perms), 76), dtype=np.int64)
    rows = np.arange(len(perms))[:, None]
    imgs[rows, perms] = seed[None, :]
    uniq = np.unique(imgs, axis=0)
    return exact_rank(uniq.tolist())


def relation_vectors_are_relations(seed=None) -> bool:
    """The seed pairs to zero with every quadruple-complement B_iB_jB_k, C B B."""
    seed = list(relation_seed() if seed is None else seed)
    ids = [Bd(i) for i in range(36)] + [Cd(j) for j in range(40)]
    support = [(ids[k], c) for k, c in enumerate(seed) if c]
    for m in degree3_monomials():
        if sum(c * quad_product((d,) + m) for d, c in support):
            return False
    return True


# ---------------------------------------------------------------------------
# checks against the invariant ring

def invariant_sum(nb: int, nc: int) -> int:
    """
    Sum of quad_product over the expansion of B^nb C^nc, B = sum B_i,
    C = sum C_j (nb + nc = 4).
    """
    total = 0
    for bs in combinations_with_replacement(range(36), nb):
        cb = Counter(bs)
        mult_b = factorial(nb)
        for v in cb.values():
            mult_b //= factorial(v)
        for cs in combinations_with_replacement(range(40), nc):
            cc = Counter(cs)
            if len(cc) > 1:
                continue
            mult_c = 1
            total += mult_b * mult_c * quad_product([Bd(i) for i in bs] + [Cd(j) for j in cs])
    return total


@lru_cache(maxsize=None)
def degree3_monomials() -> tuple:
    """Degree-3 monomials in boundary/cusp divisors that can have a nonzero pairing."""
    perp = _perp_table()
    ids = [Bd(i) for i in range(36)] + [Cd(j) for j in range(40)]
    out = []
    for combo in combinations_with_replacement(range(76), 3):
        distinct = sorted(set(combo))
        if sum(1 for x in distinct if x >= 36) > 1:
            continue
        if all(perp[a, b] for a, b in combinations(distinct, 2)):
            out.append(tuple(ids[x] for x in combo))
    return tuple(out)


def pairing_rank() -> int:
    """Rank of the 76 x (degree-3 monomial) pairing matrix (exploratory)."""
    ids = [Bd(i) for i in range(36)] + [Cd(j) for j in range(40)]
    mons = degree3_monomials()
    cols = []
    for m in mons:
        col = [quad_product((d,) + m) for d in ids]
        if any(col):
            cols.append(col)
    uniq = sorted(set(map(tuple, cols)))
    return exact_rank([list(c) for c in uniq])


def dump_matrix(m, path: str):
    np.savetxt(path, np.asarray(m, dtype=np.int64), fmt="%d", delimiter=",")
