"""Exact linear algebra over Q for the small differentials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major matrix with optional row and column labels."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int
    row_labels: tuple[str, ...] = field(default=())
    col_labels: tuple[str, ...] = field(default=())

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None,
                  row_labels: Sequence[str] = (), col_labels: Sequence[str] = ()) -> "RationalMatrix":
        rs = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rs[0]) if rs else len(col_labels)
        if any(len(r) != ncols for r in rs):
            raise ValueError("ragged matrix")
        if row_labels and len(row_labels) != len(rs):
            raise ValueError("row label count mismatch")
        if col_labels and len(col_labels) != ncols:
            raise ValueError("column label count mismatch")
        return cls(rs, ncols, tuple(row_labels), tuple(col_labels))

    @classmethod
    def zeros(cls, nrows: int, ncols: int, row_labels=(), col_labels=()) -> "RationalMatrix":
        return cls.from_rows([[0] * ncols for _ in range(nrows)], ncols, row_labels, col_labels)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def to_lists(self) -> list[list]:
        return [[int(x) if x.denominator == 1 else str(x) for x in r] for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)


def transpose(m: RationalMatrix) -> RationalMatrix:
    cols = [[m.rows[i][j] for i in range(m.nrows)] for j in range(m.ncols)]
    return RationalMatrix.from_rows(cols, m.nrows, m.col_labels, m.row_labels)


def matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
    rows = [
        [sum((a.rows[i][k] * b.rows[k][j] for k in range(a.ncols)), Fraction(0)) for j in range(b.ncols)]
        for i in range(a.nrows)
    ]
    return RationalMatrix.from_rows(rows, b.ncols, a.row_labels, b.col_labels)


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RationalMatrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}, one vector per free column."""
    a, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(v)
    return basis


def image_dim(m: RationalMatrix) -> int:
    return rank(m)


def cokernel_complement(m: RationalMatrix) -> list[int]:
    """Row indices of standard basis vectors completing the column space.

    The vectors e_i for the returned i, together with the columns of m,
    span the target; they are chosen greedily in index order.
    """
    cols = [list(c) for c in transpose(m).rows]
    current = rank(RationalMatrix.from_rows(cols, m.nrows)) if cols else 0
    chosen = []
    for i in range(m.nrows):
        e = [Fraction(0)] * m.nrows
        e[i] = Fraction(1)
        trial = cols + [e]
        r = rank(RationalMatrix.from_rows(trial, m.nrows))
        if r > current:
            cols, current = trial, r
            chosen.append(i)
    return chosen
