"""Exact linear algebra over the rationals: rank, kernel, image dimension."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class QMatrix:
    """Dense rational matrix, entries row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "QMatrix":
        data = [tuple(Fraction(x) for x in r) for r in rows]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), ncols, tuple(x for r in data for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length must equal column count")
        vv = [Fraction(x) for x in v]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append(sum((r[j] * vv[j] for j in range(self.cols) if vv[j]), _ZERO))
        return tuple(out)

    def matmul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions must agree")
        ocols = [other.col(j) for j in range(other.cols)]
        flat: list[Fraction] = []
        for i in range(self.rows):
            r = self.row(i)
            support = [k for k in range(self.cols) if r[k]]
            for j in range(other.cols):
                c = ocols[j]
                flat.append(sum((r[k] * c[k] for k in support if c[k]), _ZERO))
        return QMatrix(self.rows, other.cols, tuple(flat))

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def _rref(m: QMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivots are the first nonzero in column order."""
    a = m.to_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, m.rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c]
        if inv != 1:
            a[r] = [x / inv for x in a[r]]
        prow = a[r]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: QMatrix) -> int:
    return len(_rref(m)[1])


def image_dim(m: QMatrix) -> int:
    return rank(m)


def kernel_basis(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Kernel basis, one vector per free column, in increasing column order.

    Each vector has entry 1 at its free column and the negated reduced
    coefficients at the pivot columns, so the output is deterministic.
    """
    a, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            if a[r][f]:
                v[p] = -a[r][f]
        basis.append(tuple(v))
    return basis


def kernel_dim(m: QMatrix) -> int:
    return m.cols - rank(m)
