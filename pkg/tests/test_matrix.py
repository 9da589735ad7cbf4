from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homalg.errors import ShapeMismatch
from homalg.field import QQ, Field
from homalg.matrix import ExactMatrix, compose, quotient_reps, span_basis

F5 = Field.prime(5)


def M(field, rows):
    return ExactMatrix.from_rows(field, rows)


def test_reduce_identity():
    rank, ker, img, piv = ExactMatrix.identity(QQ, 3).reduce()
    assert rank == 3
    assert ker.cols == 0
    assert piv == [0, 1, 2]


def test_reduce_zero_over_f5():
    rank, ker, img, piv = ExactMatrix.zeros(F5, 2, 2).reduce()
    assert rank == 0
    assert ker.cols == 2
    assert img.cols == 0


def test_reduce_rank_one():
    # Hand Gaussian elimination: [[1,2],[2,4]] -> [[1,2],[0,0]], kernel (2,-1)^T.
    m = M(QQ, [[1, 2], [2, 4]])
    rank, ker, img, piv = m.reduce()
    assert rank == 1
    assert ker.cols == 1
    v = ker.col(0)
    s = Fraction(2) / v[0]
    assert (s * v[0], s * v[1]) == (Fraction(2), Fraction(-1))
    assert m.mul(ker).is_zero()


def test_solve_identity():
    b = M(QQ, [[3], [7]])
    assert ExactMatrix.identity(QQ, 2).solve(b) == b


def test_solve_zero_matrix_inconsistent():
    assert ExactMatrix.zeros(QQ, 2, 2).solve(M(QQ, [[1], [0]])) is None


def test_solve_back_substitution():
    # [[1,1],[0,1]] x = (3,1)^T  =>  x = (2,1)^T by back substitution.
    x = M(QQ, [[1, 1], [0, 1]]).solve(M(QQ, [[3], [1]]))
    assert x == M(QQ, [[2], [1]])


def test_solve_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        M(QQ, [[1, 0]]).solve(M(QQ, [[1], [2]]))


def test_compose_identity_neutral():
    m = M(QQ, [[1, 2], [3, 4]])
    assert compose(ExactMatrix.identity(QQ, 2), m) == m
    assert compose(m, ExactMatrix.identity(QQ, 2)) == m


def test_compose_zero():
    m = M(QQ, [[1, 2], [3, 4]])
    assert compose(m, ExactMatrix.zeros(QQ, 2, 3)).is_zero()


def test_nilpotent_square():
    n = M(QQ, [[0, 1], [0, 0]])
    assert compose(n, n).is_zero()


def test_empty_matrices_are_legal():
    m = ExactMatrix.zeros(QQ, 0, 3)
    rank, ker, img, piv = m.reduce()
    assert rank == 0 and ker.cols == 3
    n = ExactMatrix.zeros(QQ, 3, 0)
    assert n.rank() == 0
    assert compose(m.transpose(), m).rows == 3


mat55 = st.lists(st.integers(min_value=0, max_value=4), min_size=25, max_size=25)


@settings(max_examples=60, deadline=None)
@given(mat55)
def test_f5_rank_against_kernel_count_oracle(ents):
    # Independent oracle: |ker| = 5^(n - rank), found by enumerating all 5^5
    # vectors and testing m @ v = 0 directly.
    m = ExactMatrix(F5, 5, 5, ents)
    count = 0
    for code in range(5**5):
        v = []
        c = code
        for _ in range(5):
            v.append(c % 5)
            c //= 5
        if all(sum(m.get(i, j) * v[j] for j in range(5)) % 5 == 0 for i in range(5)):
            count += 1
    nullity = 0
    while count > 1:
        count //= 5
        nullity += 1
    assert m.rank() == 5 - nullity
    assert m.kernel_basis().cols == nullity


@settings(max_examples=60, deadline=None)
@given(mat55)
def test_f5_rank_nullity_and_kernel_annihilated(ents):
    m = ExactMatrix(F5, 5, 5, ents)
    rank, ker, img, piv = m.reduce()
    assert rank + ker.cols == m.cols
    assert m.mul(ker).is_zero()
    assert img.rank() == rank


@settings(max_examples=40, deadline=None)
@given(mat55, st.lists(st.integers(min_value=0, max_value=4), min_size=5, max_size=5))
def test_f5_solve_roundtrip(ents, bvec):
    m = ExactMatrix(F5, 5, 5, ents)
    b = ExactMatrix.from_cols(F5, [bvec], nrows=5)
    x = m.solve(b)
    if x is not None:
        assert m.mul(x) == b
    else:
        # b outside the image: ranks certify it
        assert m.hstack(b).rank() == m.rank() + 1


def test_span_and_quotient_reps():
    sub = [(Fraction(1), Fraction(0), Fraction(0))]
    big = [(Fraction(1), Fraction(1), Fraction(0)),
           (Fraction(2), Fraction(2), Fraction(0)),
           (Fraction(0), Fraction(0), Fraction(1))]
    reps = quotient_reps(QQ, sub, big, 3)
    assert reps == [big[0], big[2]]
    assert len(span_basis(QQ, big, 3)) == 2


def test_json_roundtrip():
    m = M(QQ, [[Fraction(1, 2), 3], [0, Fraction(-7, 3)]])
    j = m.to_json()
    assert j["entries"][0] == "1/2"
    assert ExactMatrix.from_json(QQ, j) == m
    n = M(F5, [[3, 4], [1, 0]])
    assert ExactMatrix.from_json(F5, n.to_json()) == n
