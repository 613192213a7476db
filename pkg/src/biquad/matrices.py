"""Small exact rational matrices: determinants and characteristic polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionOutOfRange, NonSquare
from .exact import to_rational
from .polynomial import Polynomial

MAX_DIM = 12


class Matrix:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(to_rational(v) for v in row) for row in rows)
        n = len(rows)
        if not 1 <= n <= MAX_DIM:
            raise DimensionOutOfRange(f"matrix dimension {n} outside 1..{MAX_DIM}")
        if any(len(r) != n for r in rows):
            raise NonSquare(f"expected a {n}x{n} matrix")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        cols = list(zip(*other._rows))
        return Matrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows])

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def scale(self, c) -> Matrix:
        c = to_rational(c)
        return Matrix([[c * a for a in r] for r in self._rows])

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.n)), Fraction(0))

    def is_symmetric(self) -> bool:
        return all(self._rows[i][j] == self._rows[j][i] for i in range(self.n) for j in range(i))

    def __str__(self):
        return "; ".join(", ".join(str(v) for v in row) for row in self._rows)

    def __repr__(self):
        return f"Matrix({str(self)!r})"


def path_adjacency(n: int) -> Matrix:
    """Adjacency matrix of the path graph on ``n`` vertices (ones beside the diagonal)."""
    if not isinstance(n, int) or not 1 <= n <= MAX_DIM:
        raise DimensionOutOfRange(f"dimension {n!r} outside 1..{MAX_DIM}")
    return Matrix([[int(abs(i - j) == 1) for j in range(n)] for i in range(n)])


def det(m: Matrix) -> Fraction:
    """Determinant by Bareiss elimination with row swaps on zero pivots."""
    a = [list(r) for r in m.rows]
    n = m.n
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def charpoly(m: Matrix) -> Polynomial:
    """Monic ``det(x*I - M)`` via the Faddeev-LeVerrier recursion.

    With ``N_0 = 0`` and ``c_n = 1``::

        N_k = M @ N_{k-1} + c_{n-k+1} I
        c_{n-k} = -trace(M @ N_k) / k
    """
    n = m.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(n)
    acc = Matrix([[0] * n for _ in range(n)])
    for k in range(1, n + 1):
        acc = m @ acc + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ acc).trace() / k
    return Polynomial(coeffs)
