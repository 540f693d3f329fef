import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from crossratio.exactmath import ExactMatrix, RowSpace, bareiss, polynomial_eval, rank, solve_linear

RR = (1, Fraction(9, 4), Fraction(27, 8), Fraction(9, 4), Fraction(9, 8))


def test_rank_examples():
    assert rank([[-3]]) == 1
    assert rank([[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]) == 3
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0


def test_rank_of_rationals():
    m = ExactMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(m) == 1


def test_polynomial_eval():
    assert polynomial_eval(RR, 0) == 1
    assert polynomial_eval(RR, 1) == 10
    assert polynomial_eval(RR, 2) == 55


def test_solve_linear():
    assert solve_linear([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_bareiss_pivots_are_integers():
    trace = []
    rows = [[random.Random(k).randint(-9, 9) for k in range(i * 7, i * 7 + 7)] for i in range(7)]
    bareiss([r[:] for r in rows], trace)
    assert all(int(x) == x for x in trace)


def test_rowspace():
    s = RowSpace(3)
    assert s.add([1, 2, 3])
    assert not s.add([2, 4, 6])
    assert s.add([0, 1, 0])
    assert len(s) == 2


small = st.integers(-5, 5)
matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_shuffles_and_transpose(m, rnd):
    r = rank(m)
    assert r == rank([list(col) for col in zip(*m)])
    rows = m[:]
    rnd.shuffle(rows)
    perm = list(range(len(m[0])))
    rnd.shuffle(perm)
    assert rank([[row[j] for j in perm] for row in rows]) == r


@settings(max_examples=40, deadline=None)
@given(matrices, matrices)
def test_block_diagonal_rank(a, b):
    ca, cb = len(a[0]), len(b[0])
    blk = [row + [0] * cb for row in a] + [[0] * ca + row for row in b]
    assert rank(blk) == rank(a) + rank(b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=6), st.integers(-6, 6))
def test_polynomial_eval_horner(coeffs, n):
    assert polynomial_eval(coeffs, n) == sum(c * Fraction(n) ** k for k, c in enumerate(coeffs))
