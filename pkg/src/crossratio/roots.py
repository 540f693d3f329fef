"""
E6 and D4 root data with the h-labels used for boundary divisors.

E6 lives in the lattice Z l + Z e1 + ... + Z e6 with form diag(1, -1, ..., -1).
Positive roots are h_ij = e_i - e_j, h_ijk = l - e_i - e_j - e_k and
h = 2l - e1 - ... - e6.  The projection to F_3^5 is fixed on the simple roots
h12, h123, h23, h34, h45, h56 and extended linearly.

D4 enters twice: the character lattice M (root lattice, roots e_i +- e_j) is
embedded in the E6 root lattice by lambda -> h23, rho -> h34, nu -> h45,
mu -> h123, and the cocharacter lattice N (weight lattice) holds the fan rays
S (short) and R (long).  Points of N are stored doubled.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import fgeom
from .exactmath import solve_linear

# ---------------------------------------------------------------------------
# E6 in the Picard lattice model

RANK7 = 7
K_CLASS = (-3, 1, 1, 1, 1, 1, 1)


def dot(a, b) -> int:
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


@dataclass(frozen=True)
class E6Root:
    label: str      # 'h12', 'h123' or 'h'
    vector: tuple   # 7 integers

    @property
    def indices(self) -> tuple:
        return tuple(int(c) for c in self.label[1:])

    def __neg__(self):
        return E6Root("-" + self.label, tuple(-x for x in self.vector))

    def __str__(self):
        return self.label


def h2(i: int, j: int) -> E6Root:
    v = [0] * RANK7
    v[i], v[j] = 1, -1
    return E6Root("h%d%d" % (i, j), tuple(v))


def h3(i: int, j: int, k: int) -> E6Root:
    v = [0] * RANK7
    v[0] = 1
    v[i] = v[j] = v[k] = -1
    return E6Root("h%d%d%d" % tuple(sorted((i, j, k))), tuple(v))


H_ROOT = E6Root("h", (2, -1, -1, -1, -1, -1, -1))


@lru_cache(maxsize=None)
def positive_roots() -> tuple:
    """The 36 positive roots: 15 h_ij, 20 h_ijk, then h."""
    out = [h2(i, j) for i, j in combinations(range(1, 7), 2)]
    out += [h3(i, j, k) for i, j, k in combinations(range(1, 7), 3)]
    out.append(H_ROOT)
    return tuple(out)


@lru_cache(maxsize=None)
def root_by_label() -> dict:
    return {r.label: r for r in positive_roots()}


def root(label: str) -> E6Root:
    """Look up a positive root; index order inside the label is irrelevant."""
    if label == "h":
        return H_ROOT
    digits = sorted(int(c) for c in label.lstrip("h"))
    return root_by_label()["h" + "".join(map(str, digits))]


SIMPLE_LABELS = ("h12", "h123", "h23", "h34", "h45", "h56")

# images of the simple roots in F_3^5
SIMPLE_IMAGES = {
    "h12": (1, -1, 0, 0, 0),
    "h23": (0, 1, -1, 0, 0),
    "h34": (0, 0, 1, -1, 0),
    "h45": (0, 0, 0, 1, -1),
    "h123": (0, 0, 0, 1, 1),
    "h56": (1, 1, 1, 1, -1),
}


@lru_cache(maxsize=None)
def _simple_gram() -> tuple:
    s = [root(x).vector for x in SIMPLE_LABELS]
    return tuple(tuple(dot(a, b) for b in s) for a in s)


def simple_expansion(vector) -> tuple:
    """Integer coefficients of a root-lattice vector in the simple basis."""
    s = [root(x).vector for x in SIMPLE_LABELS]
    rhs = [dot(vector, b) for b in s]
    coeffs = solve_linear(_simple_gram(), rhs)
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("vector %s is not in the root lattice" % (vector,))
    coeffs = tuple(int(c) for c in coeffs)
    back = tuple(sum(c * b[k] for c, b in zip(coeffs, s)) for k in range(RANK7))
    if back != tuple(vector):
        raise ValueError("vector %s is not in the span of the roots" % (vector,))
    return coeffs


def pi_linear(vector) -> tuple:
    """Linear projection Q(E6) -> F_3^5 (not normalized)."""
    coeffs = simple_expansion(vector)
    out = [0] * fgeom.DIM
    for c, lab in zip(coeffs, SIMPLE_LABELS):
        for k, x in enumerate(SIMPLE_IMAGES[lab]):
            out[k] += c * x
    return tuple(fgeom.bal(x) for x in out)


def pi_map(r) -> tuple:
    """Projective image of a root (or root-lattice vector) in P(F_3^5)."""
    v = r.vector if isinstance(r, E6Root) else r
    return fgeom.normalize(pi_linear(v))


@lru_cache(maxsize=None)
def boundary_roots() -> tuple:
    """Positive roots ordered like the sorted list N_-1: i-th entry <-> i-th point."""
    ps = fgeom.enumerate_points().boundary
    by_point = {pi_map(r): r for r in positive_roots()}
    return tuple(by_point[p] for p in ps)


@lru_cache(maxsize=None)
def root_point_index() -> dict:
    """label -> index in N_-1"""
    return {r.label: i for i, r in enumerate(boundary_roots())}


def reflect(alpha, beta) -> tuple:
    """s_alpha(beta) in the lattice (alpha a root, alpha.alpha = -2)."""
    a = alpha.vector if isinstance(alpha, E6Root) else alpha
    b = beta.vector if isinstance(beta, E6Root) else beta
    c = dot(a, b)
    return tuple(y + c * x for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# D4: characters and cocharacters

CHARACTER_NAMES = ("λ", "μ", "ν", "ρ")   # print order
# character -> vector in the e-basis of M
CHARACTER_BASIS = {
    "λ": (1, -1, 0, 0),
    "ρ": (0, 1, -1, 0),
    "ν": (0, 0, 1, -1),
    "μ": (0, 0, 1, 1),
}
CHARACTER_ROOT = {"λ": "h23", "ρ": "h34", "ν": "h45", "μ": "h123"}
ASCII_NAMES = {"λ": "lambda", "μ": "mu", "ν": "nu", "ρ": "rho"}

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


@dataclass(frozen=True)
class CharacterMonomial:
    """lambda^a mu^b nu^c rho^d, an element of M written multiplicatively."""
    exponents: tuple  # (λ, μ, ν, ρ)

    @classmethod
    def from_vector(cls, m) -> "CharacterMonomial":
        """Write m (e-basis of M) in the basis λ, ρ, ν, μ."""
        m1, m2, m3, m4 = m
        lam = m1
        rho = m1 + m2
        # m3 = -rho + nu + mu, m4 = -nu + mu
        s = m3 + m4 + rho
        if s % 2:
            raise ValueError("%s is not in the root lattice of D4" % (m,))
        mu = s // 2
        nu = mu - m4
        return cls((lam, mu, nu, rho))

    @classmethod
    def parse(cls, name: str) -> "CharacterMonomial":
        """Parse 'lambda*mu*rho^2', 'λμρ²' style or '1'."""
        exps = dict.fromkeys(CHARACTER_NAMES, 0)
        s = name.strip()
        if s in ("", "1", "trivial"):
            return cls((0, 0, 0, 0))
        for k, v in ASCII_NAMES.items():
            s = s.replace(v, k)
        s = s.replace("*", "").replace(" ", "")
        sup = {c: d for c, d in zip("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")}
        i = 0
        while i < len(s):
            ch = s[i]
            if ch not in exps:
                raise ValueError("unknown character symbol %r in %r" % (ch, name))
            i += 1
            num = ""
            if i < len(s) and s[i] == "^":
                i += 1
                while i < len(s) and (s[i].isdigit() or s[i] == "-"):
                    num += s[i]
                    i += 1
            else:
                while i < len(s) and s[i] in sup:
                    num += sup[s[i]]
                    i += 1
            exps[ch] += int(num) if num else 1
        return cls(tuple(exps[c] for c in CHARACTER_NAMES))

    def vector(self) -> tuple:
        out = [0, 0, 0, 0]
        for name, e in zip(CHARACTER_NAMES, self.exponents):
            for k, x in enumerate(CHARACTER_BASIS[name]):
                out[k] += e * x
        return tuple(out)

    def e6_vector(self) -> tuple:
        out = [0] * RANK7
        for name, e in zip(CHARACTER_NAMES, self.exponents):
            for k, x in enumerate(root(CHARACTER_ROOT[name]).vector):
                out[k] += e * x
        return tuple(out)

    def pair(self, doubled) -> int:
        """<m, tau> for tau given in doubled coordinates."""
        s = sum(a * b for a, b in zip(self.vector(), doubled))
        if s % 2:
            raise ValueError("pairing is not integral")
        return s // 2

    def __str__(self):
        if not any(self.exponents):
            return "1"
        out = ""
        for name, e in zip(CHARACTER_NAMES, self.exponents):
            if e == 1:
                out += name
            elif e:
                out += name + str(e).translate(_SUP)
        return out


SHORT, LONG = "S", "R"


@dataclass(frozen=True, order=True)
class D4Point:
    doubled: tuple   # 2*tau
    kind: str        # 'S' or 'R'

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __neg__(self):
        return D4Point(tuple(-x for x in self.doubled), self.kind)

    def inner(self, other) -> Fraction:
        o = other.doubled if isinstance(other, D4Point) else other
        return Fraction(sum(a * b for a, b in zip(self.doubled, o)), 4)

    def __str__(self):
        return format_d4(self.doubled)


def format_d4(doubled) -> str:
    """Names in the style of the tables: ε1, -ε2, ε1+ε3, (+-+-)."""
    if all(x % 2 for x in doubled):
        return "(" + "".join("+" if x > 0 else "-" for x in doubled) + ")"
    terms = []
    for i, x in enumerate(doubled):
        if x == 0:
            continue
        c = x // 2
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append((sign, "%sε%d" % (mag, i + 1)))
    s = "".join(sg + t for sg, t in terms)
    return s[1:] if s.startswith("+") else s


def parse_d4(text: str) -> tuple:
    """Inverse of format_d4 (also accepts 'eps' or 'e' for ε); returns doubled coords."""
    t = text.strip().replace("eps", "ε").replace("e", "ε").replace(" ", "")
    if t.startswith("(") and t.endswith(")") and set(t[1:-1]) <= set("+-") and len(t) == 6:
        return tuple(1 if c == "+" else -1 for c in t[1:-1])
    out = [0, 0, 0, 0]
    i = 0
    sign = 1
    while i < len(t):
        ch = t[i]
        if ch in "+-":
            sign = 1 if ch == "+" else -1
            i += 1
            continue
        num = ""
        while i < len(t) and t[i].isdigit():
            num += t[i]
            i += 1
        if i >= len(t) or t[i] != "ε":
            raise ValueError("cannot parse %r" % text)
        i += 1
        if i >= len(t) or t[i] not in "1234":
            raise ValueError("cannot parse %r" % text)
        k = int(t[i]) - 1
        i += 1
        out[k] += 2 * sign * (int(num) if num else 1)
        sign = 1
    return tuple(out)


@lru_cache(maxsize=None)
def short_vectors() -> tuple:
    """S: +-eps_i and (+-1,+-1,+-1,+-1)/2, doubled."""
    out = []
    for i in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = 2 * s
            out.append(D4Point(tuple(v), SHORT))
    for signs in product((1, -1), repeat=4):
        out.append(D4Point(signs, SHORT))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def long_vectors() -> tuple:
    """R: +-eps_i +- eps_j, doubled."""
    out = []
    for i, j in combinations(range(4), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [0, 0, 0, 0]
            v[i], v[j] = 2 * si, 2 * sj
            out.append(D4Point(tuple(v), LONG))
    return tuple(sorted(out))


def cocharacter_of_root(vector) -> tuple:
    """
    The element tau of N (doubled) with <m, tau> = -(iota(m) . alpha) for all
    m in M.  Positive E6 roots go to S (off D4) or to R (on D4).
    """
    vals = {}
    for name in CHARACTER_NAMES:
        vals[name] = -dot(root(CHARACTER_ROOT[name]).vector, vector)
    a, b, c, d = vals["λ"], vals["ρ"], vals["ν"], vals["μ"]
    # t1 - t2 = a, t2 - t3 = b, t3 - t4 = c, t3 + t4 = d; doubled:
    t3 = c + d
    t4 = d - c
    t2 = 2 * b + t3
    t1 = 2 * a + t2
    return (t1, t2, t3, t4)


@lru_cache(maxsize=None)
def root_of_ray() -> dict:
    """
    doubled tau -> (E6Root, sign) for all 48 rays.

    Long rays and the unit rays +-eps_i are matched through the character
    pairing (cocharacter_of_root).  A half-sum ray tau gets the unique positive
    root orthogonal to the roots of the four unit rays in its cones, i.e. of
    sign(tau_i) eps_i.  (Linear extension to the half-sum rays is *not* the
    right thing: on the eight rays with an even number of minus signs it gives
    the root of -tau, and then rays sharing a cone stop being orthogonal.)
    """
    long = {p.doubled for p in long_vectors()}
    out = {}
    for r in positive_roots():
        tau = cocharacter_of_root(r.vector)
        if tau in long:
            out[tau] = (r, 1)
            out[tuple(-x for x in tau)] = (r, -1)
        elif not all(x % 2 for x in tau):
            out[tau] = (r, 1)
    used = {r.label for r, _ in out.values()}
    rest = [r for r in positive_roots() if r.label not in used]
    for signs in product((1, -1), repeat=4):
        adj = [out[tuple(2 * signs[i] if k == i else 0 for k in range(4))][0]
               for i in range(4)]
        cand = [r for r in rest if all(dot(r.vector, a.vector) == 0 for a in adj)]
        if len(cand) != 1:
            raise AssertionError("half-sum ray %s: %d candidate roots" % (signs, len(cand)))
        out[signs] = (cand[0], 1)
    if len({r.label for r, _ in out.values()}) != 36:
        raise AssertionError("ray/root correspondence is not a bijection")
    return out


def linear_root_of_ray(doubled) -> E6Root:
    """The positive root whose linear cocharacter is tau (oracle / comparison)."""
    for r in positive_roots():
        if cocharacter_of_root(r.vector) == tuple(doubled):
            return r
    raise KeyError(doubled)


# ---------------------------------------------------------------------------
# reference tables

def table_order_key(v) -> tuple:
    """Row order of the tables for F_3^5 vectors (unit vectors first, high index first)."""
    nz = [i for i, x in enumerate(v) if x]
    if len(nz) == 1:
        return (0, -nz[0])
    zeros = tuple(i for i, x in enumerate(v) if x == 0)
    return (1, zeros, tuple(0 if v[i] == 1 else 1 for i in nz))


# ordering of +-e_i +- e_j in the D4 tables
_PAIR_ORDER = ((2, 3), (1, 3), (1, 2), (0, 3), (0, 2), (0, 1))


@dataclass(frozen=True)
class D4TableRow:
    tau: tuple                # doubled
    kind: str
    character: CharacterMonomial | None
    root: E6Root
    vector: tuple

    def cells(self) -> list[str]:
        if self.kind == LONG:
            name = format_d4(self.tau).replace("ε", "e")
            return [name, str(self.character), self.root.label, fgeom.fmt(self.vector)]
        return [format_d4(self.tau), self.root.label, fgeom.fmt(self.vector)]


def d4_row(tau) -> D4TableRow:
    tau = tuple(tau)
    r, sign = root_of_ray()[tau]
    kind = LONG if tau in {p.doubled for p in long_vectors()} else SHORT
    ch = None
    if kind == LONG:
        m = tuple(x // 2 for x in tau)
        ch = CharacterMonomial.from_vector(m)
        if ch.e6_vector() != tuple(sign * x for x in r.vector):
            raise AssertionError("embedding of M disagrees with the cocharacter map")
        if sign < 0:
            r = -r
    return D4TableRow(tau, kind, ch, r, pi_map(r.vector))


def d4_tables() -> dict:
    """
    The four boundary tables: positive long roots (as characters), +-eps_i,
    and the two halves of the half-sum vectors.
    """
    long_rows = []
    for i, j in _PAIR_ORDER:
        for sj in (1, -1):
            v = [0, 0, 0, 0]
            v[i], v[j] = 2, 2 * sj
            long_rows.append(d4_row(v))
    unit_rows = []
    for i in (3, 2, 1, 0):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = 2 * s
            unit_rows.append(d4_row(v))
    half = [d4_row(tuple(-s for s in signs))
            for signs in product((1, -1), repeat=4)]
    return {"long": long_rows, "unit": unit_rows,
            "half_minus": half[:8], "half_plus": half[8:]}


@lru_cache(maxsize=None)
def all_d4_rows() -> tuple:
    return tuple(d4_row(p.doubled) for p in short_vectors() + long_vectors())


# ---------------------------------------------------------------------------
# 27 lines and tritangents

def line_a(i: int) -> tuple:
    """a_i: the conic class 2l - sum e + e_i (matches (16) <-> (1,0,0,0,0))."""
    v = [2] + [-1] * 6
    v[i] = 0
    return tuple(v)


def line_b(j: int) -> tuple:
    v = [0] * RANK7
    v[j] = 1
    return tuple(v)


def line_c(i: int, j: int) -> tuple:
    v = [0] * RANK7
    v[0] = 1
    v[i] = v[j] = -1
    return tuple(v)


@dataclass(frozen=True)
class Tritangent:
    label: str          # '(ij)' or '(ij.kl.mn)'
    lines: tuple        # three line classes
    d4: tuple           # the 12 positive roots orthogonal to the lines
    point: tuple        # normalized vector in N_1


def schlafli_labels() -> list[tuple]:
    """(label, lines) for the 45 tritangent planes."""
    out = []
    for i, j in product(range(1, 7), repeat=2):
        if i != j:
            out.append(("(%d%d)" % (i, j), (line_a(i), line_b(j), line_c(i, j))))
    seen = set()
    for p in _matchings((1, 2, 3, 4, 5, 6)):
        key = tuple(sorted(p))
        if key in seen:
            continue
        seen.add(key)
        lab = "(" + ".".join("%d%d" % ab for ab in key) + ")"
        out.append((lab, tuple(line_c(a, b) for a, b in key)))
    return out


def _matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for k in range(1, len(items)):
        b = items[k]
        rest = items[1:k] + items[k + 1:]
        for m in _matchings(rest):
            yield [(a, b)] + m


@lru_cache(maxsize=None)
def tritangent_labels() -> tuple:
    """The 45 tritangents, each with the N_1 point perpendicular to its D4."""
    minus_k = tuple(-x for x in K_CLASS)
    out = []
    for lab, lines in schlafli_labels():
        total = tuple(sum(L[k] for L in lines) for k in range(RANK7))
        if total != minus_k:
            raise AssertionError("lines of %s do not add up to -K" % lab)
        d4 = tuple(r for r in positive_roots() if all(dot(r.vector, L) == 0 for L in lines))
        if len(d4) != 12:
            raise AssertionError("%s: %d orthogonal positive roots" % (lab, len(d4)))
        images = [pi_map(r) for r in d4]
        cand = [p for p in fgeom.enumerate_points().tritangents
                if all(fgeom.perpendicular(p, x) for x in images)]
        if len(cand) != 1:
            raise AssertionError("%s: %d candidate points" % (lab, len(cand)))
        out.append(Tritangent(lab, lines, d4, cand[0]))
    points = [t.point for t in out]
    if len(set(points)) != 45:
        raise AssertionError("tritangent map is not a bijection onto N_1")
    return tuple(sorted(out, key=lambda t: table_order_key(t.point)))


def tritangent_by_label(label: str) -> Tritangent:
    for t in tritangent_labels():
        if t.label == label:
            return t
    raise KeyError(label)


# ---------------------------------------------------------------------------
# cusp triads

@dataclass(frozen=True)
class CuspTriad:
    point: tuple     # v in N_0
    rows: tuple      # three A2 triples of positive roots (labels)
    label: str

    @property
    def roots(self) -> tuple:
        return tuple(x for row in self.rows for x in row)


def _a2_components(labels) -> list[list[str]]:
    left = list(labels)
    comps = []
    while left:
        seed = left[0]
        comp = [seed] + [x for x in left[1:] if dot(root(seed).vector, root(x).vector) != 0]
        for x in comp:
            left.remove(x)
        comps.append(comp)
    return comps


def triad(v) -> CuspTriad:
    v = fgeom.normalize(v)
    if fgeom.q(v) != 0:
        raise ValueError("%s is not isotropic" % (v,))
    nine = [r.label for r in positive_roots() if fgeom.perpendicular(pi_map(r), v)]
    comps = _a2_components(nine)
    ok = len(nine) == 9 and len(comps) == 3 and all(len(c) == 3 for c in comps)
    if ok:
        for a, b in combinations(range(3), 2):
            ok &= all(dot(root(x).vector, root(y).vector) == 0
                      for x in comps[a] for y in comps[b])
        for c in comps:
            ok &= all(dot(root(x).vector, root(y).vector) != 0 for x, y in combinations(c, 2))
    if not ok:
        raise ValueError("roots perpendicular to %s do not split as 3+3+3" % (v,))
    rows, label = _triad_label(comps)
    return CuspTriad(v, rows, label)


def _triad_label(comps):
    if any("h" in c for c in comps):
        # [ijk.lmn]: rows h_ij h_jk h_ik / h_lm h_mn h_ln / h h_ijk h_lmn
        triples = []
        for c in comps:
            if "h" in c:
                continue
            idx = sorted({i for x in c for i in root(x).indices})
            triples.append(tuple(idx))
        triples.sort(key=lambda t: (1 not in t, t))
        (i, j, k), (l, m, n) = triples
        rows = (("h%d%d" % (i, j), "h%d%d" % (j, k), "h%d%d" % (i, k)),
                ("h%d%d" % (l, m), "h%d%d" % (m, n), "h%d%d" % (l, n)),
                ("h", "h%d%d%d" % (i, j, k), "h%d%d%d" % (l, m, n)))
        return rows, "[%d%d%d.%d%d%d]" % (i, j, k, l, m, n)
    # [ij.kl.mn]: row of h_ij holds h_ikl, h_jkl; follow the cycle ij -> kl -> mn
    nxt = {}
    for c in comps:
        pair = [x for x in c if len(x) == 3]
        if len(pair) != 1:
            raise ValueError("unexpected A2 %s" % c)
        ij = root(pair[0]).indices
        other = set(root([x for x in c if x != pair[0]][0]).indices) - set(ij)
        nxt[ij] = tuple(sorted(other))
    last = next(p for p in nxt if 6 in p)
    first = nxt[last]
    seq = (first, nxt[first], last)
    rows = []
    for a, b in zip(seq, seq[1:] + seq[:1]):
        (i, j), (k, l) = a, b
        rows.append(("h%d%d" % (i, j), "h" + "".join(map(str, sorted((i, k, l)))),
                     "h" + "".join(map(str, sorted((j, k, l))))))
    return tuple(rows), "[" + ".".join("%d%d" % p for p in seq) + "]"


@lru_cache(maxsize=None)
def cusp_triads() -> tuple:
    """Triads for all 40 cusps, in the order of the sorted N_0 list."""
    return tuple(triad(v) for v in fgeom.enumerate_points().cusps)


def triad_of(v) -> CuspTriad:
    return cusp_triads()[fgeom.locate(v)[1]]


# ---------------------------------------------------------------------------
# divisors of lambda and of lambda - 1, symmetrization

def divisor_of_lambda() -> dict:
    """tau (doubled) -> n_tau = (eps1 - eps2, tau) over all 48 rays."""
    lam = CharacterMonomial.parse("λ")
    return {p.doubled: lam.pair(p.doubled) for p in short_vectors() + long_vectors()}


def boundary_set(v) -> list[int]:
    """B_v: indices in N_-1 of the nine roots of the triad of v."""
    return sorted(fgeom.locate(pi_map(root(x)))[1] for x in triad_of(v).roots)


def cusp_perp_set(v) -> list[int]:
    """C_{v perp}: indices in N_0 of the 13 isotropic lines in v-perp (v included)."""
    return [i for i, z in enumerate(fgeom.enumerate_points().cusps)
            if fgeom.perpendicular(z, v)]


def e_class(v) -> tuple:
    """E_v = B_v - C_{v perp} + 3 D_v as (boundary vector[36], cusp vector[40])."""
    b = [0] * 36
    c = [0] * 40
    for i in boundary_set(v):
        b[i] += 1
    for i in cusp_perp_set(v):
        c[i] -= 1
    c[fgeom.locate(v)[1]] += 3
    return tuple(b), tuple(c)


def lambda_divisor_on_cusps() -> tuple:
    """
    (lambda) = E_v - E_w with D_v = V(eps1-eps2), D_w = V(-eps1+eps2), as a
    76-vector (36 boundary slots, then 40 cusp slots).
    """
    v, w = (1, -1, 1, 0, 0), (1, 1, -1, 0, 0)
    bv, cv = e_class(v)
    bw, cw = e_class(w)
    return tuple(x - y for x, y in zip(bv + cv, bw + cw))


@dataclass(frozen=True)
class SymmetrizedClass:
    """Coefficients of (B^, C^, T^)."""
    b: Fraction
    c: Fraction
    t: Fraction = Fraction(0)

    def __add__(self, o):
        return SymmetrizedClass(self.b + o.b, self.c + o.c, self.t + o.t)

    def __sub__(self, o):
        return SymmetrizedClass(self.b - o.b, self.c - o.c, self.t - o.t)

    def scaled(self, k) -> "SymmetrizedClass":
        k = Fraction(k)
        return SymmetrizedClass(self.b * k, self.c * k, self.t * k)

    def eliminate_t(self) -> "SymmetrizedClass":
        """Use 4 T^ = 25 B^ + 27 C^."""
        return SymmetrizedClass(self.b + self.t * Fraction(25, 4),
                                self.c + self.t * Fraction(27, 4))

    def equivalent(self, o) -> bool:
        x, y = self.eliminate_t(), o.eliminate_t()
        return x.b == y.b and x.c == y.c

    def __str__(self):
        parts = []
        for coef, name in ((self.b, "B"), (self.c, "C"), (self.t, "T")):
            if coef:
                parts.append("%s %s" % (coef, name))
        return " + ".join(parts) if parts else "0"


ORBIT_SIZES = {"boundary": 36, "cusp": 40, "tritangent": 45}


def symmetrize(d) -> SymmetrizedClass:
    """
    d: mapping or iterable of (kind, multiplicity) pairs, kind in
    boundary/cusp/tritangent (labels are irrelevant after averaging).
    """
    items = d.items() if isinstance(d, dict) else d
    tot = Counter()
    for kind, mult in items:
        if kind not in ORBIT_SIZES:
            raise ValueError("unknown divisor kind %r" % kind)
        tot[kind] += mult
    return SymmetrizedClass(Fraction(tot["boundary"], 36), Fraction(tot["cusp"], 40),
                            Fraction(tot["tritangent"], 45))
