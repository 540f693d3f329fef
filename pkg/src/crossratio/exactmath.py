"""
Exact arithmetic kernel.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator,
zero is 0/1).  Matrices are immutable row-major tuples; rank is computed by
fraction-free Bareiss elimination on an integer copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

BigRational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, Fraction or int

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                "entry count %d != %d x %d" % (len(self.entries), self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), cols, flat)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        cols = [tuple(self.entries[i * self.cols + j] for i in range(self.rows))
                for j in range(self.cols)]
        return ExactMatrix.from_rows(cols, self.rows)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.rows
        e = self.entries
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i))

    def rank(self) -> int:
        return rank(self)


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank preserving)."""
    out = []
    for r in m.to_rows():
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den == 1:
            out.append([_bigint(int(x)) for x in r])
        else:
            out.append([_bigint(int(x * den)) for x in r])
    return out


def bareiss(rows: list[list[int]], trace: list | None = None) -> int:
    """
    In-place fraction-free elimination of an integer matrix; returns the rank.

    Pivot rule: leftmost unresolved column, first row (from the current pivot
    row down) with a nonzero entry.  If ``trace`` is given the successive
    pivots are appended to it.
    """
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        p = None
        for i in range(r, m):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        piv = pr[c]
        if trace is not None:
            trace.append(piv)
        tail = pr[c + 1:]
        for i in range(r + 1, m):
            ri = rows[i]
            f = ri[c]
            if f:
                rows[i] = ri[:c + 1] + [(piv * a - f * b) // prev
                                        for a, b in zip(ri[c + 1:], tail)]
            elif prev != piv:
                # exact: every entry below the pivot row is divisible by prev
                rows[i] = ri[:c + 1] + [(piv * a) // prev for a in ri[c + 1:]]
            rows[i][c] = 0
        prev = piv
        r += 1
    return r


def rank(m: ExactMatrix | Sequence[Sequence]) -> int:
    """Rank over Q.  Accepts an ExactMatrix or a list of rows."""
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix.from_rows(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    return bareiss(_integer_rows(m))


def polynomial_eval(coeffs: Iterable, n) -> Fraction:
    """sum(coeffs[k] * n**k), Horner form, exact."""
    acc = Fraction(0)
    n = as_rational(n)
    for c in reversed(list(coeffs)):
        acc = acc * n + as_rational(c)
    return acc


def solve_linear(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system over Q by Gauss-Jordan with Fractions."""
    n = len(a)
    aug = [[as_rational(x) for x in row] + [as_rational(y)] for row, y in zip(a, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n] for row in aug]


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return [x // g for x in v]


class RowSpace:
    """
    Incrementally maintained row echelon basis over Q (integer rows, reduced
    to primitive form).  Used when a span is grown vector by vector.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, list[int]] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Sequence[int]) -> list[int]:
        v = list(v)
        for c in sorted(self.pivots):
            if v[c]:
                b = self.pivots[c]
                f, g = v[c], b[c]
                v = [g * x - f * y for x, y in zip(v, b)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Add v to the span; return True if the rank went up."""
        v = _primitive(self.reduce(v))
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        # keep other basis rows reduced at the new pivot column
        for c, b in self.pivots.items():
            if b[lead]:
                f, h = b[lead], v[lead]
                self.pivots[c] = _primitive([h * x - f * y for x, y in zip(b, v)])
        self.pivots[lead] = v
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))
