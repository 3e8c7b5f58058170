"""Exact integer/rational matrices and the elimination algorithms built on them.

Entries are stored as :class:`fractions.Fraction`; a matrix whose entries all
have denominator 1 is treated as an integer matrix.  Nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix with exact rational entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Number]]):
        data = tuple(tuple(_to_fraction(x) for x in row) for row in rows)
        if data and len({len(r) for r in data}) != 1:
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", data)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Number]) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> "Matrix":
        return cls(zip(*columns)) if columns else cls([])

    # -- shape / access ------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i)
        )

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.rows]

    # -- arithmetic ----------------------------------------------------------

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else self

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.rows
        return Matrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
                       for row in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Number) -> "Matrix":
        return Matrix([[c * a for a in row] for row in self.rows])

    def __str__(self) -> str:
        return format_matrix(self)


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = [[Fraction(0)] * m for _ in range(n)]
    r = c = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            out[r + i][c:c + b.ncols] = row
        r += b.nrows
        c += b.ncols
    return Matrix(out)


# ---------------------------------------------------------------------------
# scalar helpers


def permutation_sign(i: int, j: int, k: int, l: int) -> int:
    """Sign of the permutation 1234 -> ijkl, or 0 if an index repeats."""
    idx = (i, j, k, l)
    for x in idx:
        if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= 4:
            raise ValueError(f"index {x!r} not in 1..4")
    if len(set(idx)) < 4:
        return 0
    inversions = sum(1 for a in range(4) for b in range(a + 1, 4) if idx[a] > idx[b])
    return -1 if inversions % 2 else 1


# ---------------------------------------------------------------------------
# determinants


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _gauss_det(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def determinant(m: Matrix) -> Fraction:
    """Exact determinant; Bareiss fraction-free elimination for integer input."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    if m.is_integral():
        return Fraction(_bareiss(m.to_int_rows()))
    return _gauss_det([list(r) for r in m.rows])


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals."""
    if not m.is_square:
        raise ValueError("inverse of non-square matrix")
    n = m.nrows
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix([row[n:] for row in a])


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with U, V unimodular and D in Smith form."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def elementary_divisors(self) -> list[int]:
        return [int(d) for d in self.D.diagonal_entries()]


def smith_normal_form(m: Matrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen by minimal nonzero absolute value among the remaining
    submatrix, then the pivot row and column are cleared by division with
    remainder.  Entries of the remaining block not divisible by the pivot are
    folded into the pivot row and the step is repeated.
    """
    a = m.to_int_rows()
    nr, nc = m.shape
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in a:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(nr, nc)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    dirty |= a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(Matrix(U), Matrix(a), Matrix(V))


# ---------------------------------------------------------------------------
# congruence diagonalization and signature


def congruence_diagonalize(g: Matrix) -> tuple[Matrix, Matrix]:
    """Return ``(P, D)`` with ``P.T @ G @ P == D`` diagonal and P invertible.

    A zero pivot with nonzero off-diagonal entry is repaired by adding row and
    column j into position k, which makes the new pivot ``2 * G[k, j]``.
    """
    if not g.is_symmetric():
        raise ValueError("congruence diagonalization needs a symmetric matrix")
    n = g.nrows
    a = [list(r) for r in g.rows]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def col_op(dst, src, c):  # a <- E^T a E, P <- P E, E = I + c e_src e_dst^T
        for row in a:
            row[dst] += c * row[src]
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        for row in P:
            row[dst] += c * row[src]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                col_op(k, j, Fraction(1))
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                col_op(i, k, -a[i][k] / pivot)
    return Matrix(P), Matrix(a)


def signature(g: Matrix) -> tuple[int, int, int]:
    """Inertia ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix."""
    _, d = congruence_diagonalize(g)
    diag = d.diagonal_entries()
    return (sum(1 for x in diag if x > 0),
            sum(1 for x in diag if x < 0),
            sum(1 for x in diag if x == 0))


# ---------------------------------------------------------------------------
# text format


class MatrixFormatError(ValueError):
    pass


def _format_entry(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_matrix(m: Matrix) -> str:
    lines = [f"{m.nrows} {m.ncols}"]
    lines += [" ".join(_format_entry(x) for x in row) for row in m.rows]
    return "\n".join(lines)


def _parse_entry(tok: str) -> Fraction:
    num, sep, den = tok.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise MatrixFormatError(f"bad matrix entry {tok!r}") from None
    if sep and (d <= 0 or den.strip().startswith(("+", "-"))):
        raise MatrixFormatError(f"bad denominator in {tok!r}")
    return Fraction(n, d)


def parse_matrix(text: str) -> Matrix:
    """Parse the ``<rows> <cols>`` header followed by whitespace-separated rows."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixFormatError(f"bad header {lines[0]!r}, expected '<rows> <cols>'")
    nr, nc = map(int, header)
    body = lines[1:]
    if len(body) != nr:
        raise MatrixFormatError(f"expected {nr} rows, found {len(body)}")
    rows = []
    for ln in body:
        toks = ln.split()
        if len(toks) != nc:
            raise MatrixFormatError(f"expected {nc} entries in row {ln!r}")
        rows.append([_parse_entry(t) for t in toks])
    if nr == 0 or nc == 0:
        raise MatrixFormatError("empty matrix")
    return Matrix(rows)
