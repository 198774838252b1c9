from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp6boundary.linalg import (
    RationalMatrix,
    cokernel_complement,
    image_dim,
    kernel_basis,
    matmul,
    rank,
    rref,
    transpose,
)


def M(rows, **kw):
    return RationalMatrix.from_rows(rows, **kw)


def _det(a):
    if len(a) == 1:
        return a[0][0]
    return sum((-1) ** j * a[0][j] * _det([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a)))


def _minor_rank(m):
    """Largest k with a nonzero k x k minor (independent of elimination)."""
    rows = [list(r) for r in m.rows]
    for k in range(min(m.nrows, m.ncols), 0, -1):
        for ri in combinations(range(m.nrows), k):
            for ci in combinations(range(m.ncols), k):
                if _det([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


def test_q0_example():
    m = M([[1, -1, 0], [1, 0, -1], [0, 1, -1]])
    assert rank(m) == 2
    (v,) = kernel_basis(m)
    assert v == [1, 1, 1]


def test_zero_map():
    assert rank(RationalMatrix.zeros(3, 1)) == 0
    assert image_dim(RationalMatrix.zeros(3, 1)) == 0


def test_q6_example():
    m = M([[1, 1, 0], [1, 0, 1], [0, -1, 1]])
    assert rank(m) == 2 and len(kernel_basis(m)) == 1


def test_exact_fractions():
    m = M([[3, 1], [1, Fraction(1, 3)]])
    assert rank(m) == 1
    (v,) = kernel_basis(m)
    assert v == [Fraction(-1, 3), 1]


def test_labels_validated():
    with pytest.raises(ValueError):
        M([[1, 2]], row_labels=["a", "b"])
    with pytest.raises(ValueError):
        M([[1, 2], [3]])


def test_matmul_and_transpose():
    a = M([[1, 2], [3, 4]], row_labels=["x", "y"], col_labels=["u", "v"])
    t = transpose(a)
    assert t.rows == ((1, 3), (2, 4)) and t.row_labels == ("u", "v")
    assert matmul(a, M([[1], [1]])).rows == ((3,), (7,))
    with pytest.raises(ValueError):
        matmul(a, M([[1, 2, 3]]))


def test_cokernel_complement():
    m = M([[1], [1], [0]])
    assert cokernel_complement(m) == [0, 2]
    assert cokernel_complement(RationalMatrix.zeros(2, 0)) == [0, 1]


small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return M(rows)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_properties(m):
    r = rank(m)
    assert r == rank(transpose(m)) == _minor_rank(m)
    ker = kernel_basis(m)
    assert r + len(ker) == m.ncols
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m.rows)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r1, piv = rref(m)
    r2, piv2 = rref(M(r1))
    assert r1 == r2 and piv == piv2


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_cokernel_complement_spans(m):
    idx = cokernel_complement(m)
    cols = [list(c) for c in transpose(m).rows]
    for i in idx:
        cols.append([1 if k == i else 0 for k in range(m.nrows)])
    assert len(idx) == m.nrows - rank(m)
    assert rank(M(cols)) == m.nrows
