"""Small exact matrices over any of the project's rings.

Entries may be `LaurentPolynomial`, `QA`, or `Fraction`; the only
requirements are +, -, * and (for determinants over a polynomial ring)
`exact_div`.  Everything here is tiny (24x24 at most), so the code favors
clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .rings import LaurentPolynomial, RingError


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise RingError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise RingError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, one, zero) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise RingError("matrix shape mismatch")
            cols = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    acc = row[0] * col[0]
                    for x, y in zip(row[1:], col[1:]):
                        acc = acc + x * y
                    out_row.append(acc)
                out.append(out_row)
            return Matrix(out)
        return Matrix([[x * other for x in r] for r in self.rows])

    def __rmul__(self, scalar):
        return Matrix([[scalar * x for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def _same_shape(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise RingError("matrix shape mismatch")

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows])

    def trace(self):
        if self.nrows != self.ncols:
            raise RingError("trace of a non-square matrix")
        acc = self.rows[0][0]
        for i in range(1, self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        for row in self.rows:
            for x in row:
                zero = (x == 0) if isinstance(x, Fraction) else x.is_zero()
                if not zero:
                    return False
        return True

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"


def det_fraction(m: Matrix) -> Fraction:
    """Determinant over Q by Gaussian elimination with exact fractions."""
    n = m.nrows
    if n != m.ncols:
        raise RingError("determinant of a non-square matrix")
    a = [[Fraction(x) for x in row] for row in m.rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] * inv
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def det_bareiss(m: Matrix) -> LaurentPolynomial:
    """Fraction-free determinant over a Laurent polynomial ring.

    Bareiss' algorithm: all divisions are exact in an integral domain,
    which `LaurentPolynomial.exact_div` verifies as it goes.
    """
    n = m.nrows
    if n != m.ncols:
        raise RingError("determinant of a non-square matrix")
    sample = m.rows[0][0]
    if not isinstance(sample, LaurentPolynomial):
        raise RingError("det_bareiss expects LaurentPolynomial entries")
    variables = sample.variables
    a = [list(row) for row in m.rows]
    one = LaurentPolynomial.one(variables)
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if pivot is None:
                return LaurentPolynomial.zero(variables)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def invert_unit_det(m: Matrix, det_inverse) -> Matrix:
    """Inverse via the adjugate, for matrices whose determinant is a unit.

    `det_inverse` is the precomputed inverse of det(m) in the entry ring
    (for the representation matrices used here the determinant is a
    monomial, hence invertible as a Laurent polynomial).
    """
    n = m.nrows
    if n != m.ncols:
        raise RingError("inverse of a non-square matrix")
    if n == 1:
        return Matrix([[det_inverse]])
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = _minor(m, j, i)  # note the transpose: adjugate
            d = _det_small(minor)
            if (i + j) % 2:
                d = -d
            row.append(d * det_inverse)
        cof.append(row)
    return Matrix(cof)


def _minor(m: Matrix, drop_row: int, drop_col: int) -> Matrix:
    rows = [
        [x for j, x in enumerate(row) if j != drop_col]
        for i, row in enumerate(m.rows)
        if i != drop_row
    ]
    return Matrix(rows)


def _det_small(m: Matrix):
    """Cofactor-expansion determinant for n <= 3 (used for adjugates)."""
    n = m.nrows
    r = m.rows
    if n == 1:
        return r[0][0]
    if n == 2:
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]
    if n == 3:
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )
    raise RingError("_det_small only handles n <= 3")
