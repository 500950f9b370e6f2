"""Alexander determinants via the reduced Burau representation.

For a braid b on n strands, det(rho(b) - I) equals, up to a unit +-t^k,
Delta(t) (1 + t + ... + t^(n-1)) where Delta is the Alexander polynomial
of the closure.  The quotient by (1 - t^n)/(1 - t) is carried out by exact
polynomial division *before* any evaluation, so t = -1 (where 1 - t^n
vanishes for n even) is safe; the link determinant is then |Delta(-1)|.

This pipeline shares no code with the skein evaluator, which is what makes
the identity  t^K = a^(#L-1) det^2  at a^2 = y = 1, x = 2a a genuine
cross-check between two independent computations.
"""

from __future__ import annotations

from fractions import Fraction

from .braids import BraidWord
from .linalg import Matrix, det_bareiss, invert_unit_det
from .rings import LaurentPolynomial, RingError

T = ("t",)


def _tp(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.parse(text, T)


def reduced_burau_generator(i: int, n: int) -> Matrix:
    """Image of s_i in the reduced Burau representation of B_n ((n-1) x (n-1))."""
    if not (1 <= i <= n - 1):
        raise RingError("generator index out of range")
    size = n - 1
    zero, one = LaurentPolynomial.zero(T), LaurentPolynomial.one(T)
    rows = [[one if r == c else zero for c in range(size)] for r in range(size)]
    t = _tp("t")
    minus_t = _tp("-t")
    r = i - 1  # row/col of the generator's own basis vector
    rows[r][r] = minus_t
    if r > 0:
        rows[r - 1][r] = t
    if r + 1 < size:
        rows[r + 1][r] = one
    return Matrix(rows)


def burau_matrix(w: BraidWord) -> Matrix:
    n = w.strands
    if n < 2:
        raise RingError("reduced Burau needs at least 2 strands")
    size = n - 1
    zero, one = LaurentPolynomial.zero(T), LaurentPolynomial.one(T)
    acc = Matrix.identity(size, one, zero)
    gens: dict[int, Matrix] = {}
    for letter in w.letters:
        i = abs(letter)
        if i not in gens:
            gens[i] = reduced_burau_generator(i, n)
        m = gens[i]
        if letter < 0:
            det = _tp("-t") if size == 1 else None
            if det is None:
                det = det_bareiss(m)
            if len(det.terms) != 1:
                raise RingError("Burau determinant should be a monomial")
            m = invert_unit_det(m, det.monomial_inverse()) if size <= 3 else _invert(m, det)
        acc = acc * m
    return acc


def _invert(m: Matrix, det: LaurentPolynomial) -> Matrix:
    """Inverse for sizes beyond the adjugate helper: solve columns exactly."""
    size = m.nrows
    zero, one = LaurentPolynomial.zero(T), LaurentPolynomial.one(T)
    # Gauss-Jordan with exact division; pivots of Burau generators are
    # monomials so the divisions stay exact.
    a = [list(row) + [one if r == c else zero for c in range(size)]
         for r, row in enumerate(m.rows)]
    for col in range(size):
        pivot = next((r for r in range(col, size)
                      if not a[r][col].is_zero() and len(a[r][col].terms) == 1), None)
        if pivot is None:
            pivot = next(r for r in range(col, size) if not a[r][col].is_zero())
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col].monomial_inverse() if len(a[col][col].terms) == 1 else None
        if inv is None:
            raise RingError("non-monomial pivot; use the adjugate path")
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return Matrix([row[size:] for row in a])


def alexander_polynomial_normalized(w: BraidWord) -> LaurentPolynomial:
    """Delta(t) up to a unit +-t^k, via det(Burau - I) (1-t)/(1-t^n)."""
    n = w.strands
    if n == 1:
        return LaurentPolynomial.one(T)
    m = burau_matrix(w)
    size = n - 1
    zero, one = LaurentPolynomial.zero(T), LaurentPolynomial.one(T)
    ident = Matrix.identity(size, one, zero)
    d = det_bareiss(m - ident)
    numerator = d * (one - _tp("t"))
    denominator = one - _tp("t") ** n
    if numerator.is_zero():
        return numerator
    return numerator.exact_div(denominator)


def alexander_determinant(w: BraidWord) -> int:
    """|Delta(-1)|, the determinant of the closure of w."""
    delta = alexander_polynomial_normalized(w)
    value = delta.evaluate({"t": Fraction(-1)})
    if value.denominator != 1:
        raise RingError("Alexander determinant should be an integer")
    return abs(int(value))
