"""Exact rational matrices: determinants, inverses, characteristic polynomials.

All arithmetic uses `fractions.Fraction`; no operation in this module carries
a numerical tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import DisconnectedGraphError, Graph

#: Matrices above this dimension are rejected; exact elimination is cubic with
#: big coefficients, so fail loudly instead of hanging.
DIM_LIMIT = 512


class SingularMatrixError(ValueError):
    pass


class SizeLimitError(ValueError):
    pass


def _check_dim(k: int) -> None:
    if k > DIM_LIMIT:
        raise SizeLimitError(f"matrix dimension {k} exceeds limit {DIM_LIMIT}")


class RatMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        self.data = tuple(tuple(Fraction(x) for x in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[1] * cols for _ in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.data[i][j]

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.data))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        )

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([[c * x for x in row] for row in self.data])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _same_shape(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.data))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.is_square and self.data == self.transpose().data

    def delete(self, rowset: Iterable[int], colset: Iterable[int]) -> "RatMatrix":
        """Submatrix with the given rows and columns removed."""
        rs, cs = set(rowset), set(colset)
        if any(not 0 <= i < self.rows for i in rs):
            raise ValueError(f"row index out of range in {sorted(rs)}")
        if any(not 0 <= j < self.cols for j in cs):
            raise ValueError(f"column index out of range in {sorted(cs)}")
        keep_c = [j for j in range(self.cols) if j not in cs]
        return RatMatrix(
            [
                [self.data[i][j] for j in keep_c]
                for i in range(self.rows)
                if i not in rs
            ]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.data]


class RatPolynomial:
    """Univariate polynomial with exact rational coefficients, low-to-high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPolynomial(
            [c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)]
        )

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "RatPolynomial") -> "RatPolynomial":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPolynomial(out)

    def scale(self, c) -> "RatPolynomial":
        c = Fraction(c)
        return RatPolynomial([c * x for x in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPolynomial({list(self.coeffs)})"

    @classmethod
    def one(cls) -> "RatPolynomial":
        return cls([1])

    @classmethod
    def linear(cls, root) -> "RatPolynomial":
        """The factor (root - x)."""
        return cls([root, -1])


def det(m: RatMatrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination.

    The matrix is scaled to integers by the common denominator first, so all
    intermediate values are integers of controlled size.
    """
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    _check_dim(n)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in m.data:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    a = [[int(x * den) for x in row] for row in m.data]
    sign = 1
    prev = 1
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
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)


def inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting."""
    if not m.is_square:
        raise ValueError("inverse requires a square matrix")
    n = m.rows
    _check_dim(n)
    a = [list(row) for row in m.data]
    b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        b[col] = [x / p for x in b[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                b[i] = [x - f * y for x, y in zip(b[i], b[col])]
    return RatMatrix(b)


def char_poly(m: RatMatrix) -> RatPolynomial:
    """det(m - xI) as an exact polynomial, via Faddeev-LeVerrier.

    Degree equals the dimension; the leading coefficient is (-1)^dim.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.rows
    _check_dim(n)
    if n == 0:
        return RatPolynomial.one()
    if all(x.denominator == 1 for row in m.data for x in row):
        return _char_poly_int([[x.numerator for x in row] for row in m.data])
    # Coefficients of det(xI - m) = x^n + c[n-1]x^{n-1} + ... + c[0].
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    mat = RatMatrix.identity(n)
    for k in range(1, n + 1):
        mat = m @ mat
        ck = -mat.trace() / k
        c[n - k] = ck
        if k < n:
            mat = mat + RatMatrix.identity(n).scale(ck)
    # det(m - xI) = (-1)^n det(xI - m).
    sign = 1 if n % 2 == 0 else -1
    return RatPolynomial([sign * x for x in c])


def _char_poly_int(a: list[list[int]]) -> RatPolynomial:
    # For integer matrices every Faddeev-LeVerrier intermediate is an integer
    # (the trace is divisible by k), so plain int arithmetic is much faster
    # than Fraction.
    n = len(a)
    c = [0] * (n + 1)
    c[n] = 1
    mat = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        mat = [
            [sum(a[i][l] * mat[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(mat[i][i] for i in range(n))
        assert tr % k == 0
        ck = -tr // k
        c[n - k] = ck
        if k < n:
            for i in range(n):
                mat[i][i] += ck
    sign = 1 if n % 2 == 0 else -1
    return RatPolynomial([sign * x for x in c])


def laplacian(g: Graph) -> RatMatrix:
    degs = g.degrees()
    return RatMatrix(
        [
            [
                degs[i] if i == j else (-1 if g.has_edge(i, j) else 0)
                for j in range(g.n)
            ]
            for i in range(g.n)
        ]
    )


def laplacian_pinv(g: Graph) -> RatMatrix:
    """Moore-Penrose inverse of the Laplacian, exactly, as (L+J)^{-1} - J/n^2.

    Only defined for connected graphs; L+J is then nonsingular.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("Laplacian pseudoinverse needs a connected graph")
    n = g.n
    lap = laplacian(g)
    inv = inverse(lap + RatMatrix.ones(n))
    return inv - RatMatrix.ones(n).scale(Fraction(1, n * n))


def rank_one_plus_diag_det(
    a: Sequence, b: Sequence, c: Sequence
) -> Fraction:
    """det(a b' + diag(c)) = c_1...c_n (1 + sum a_i b_i / c_i), all c_i nonzero."""
    if not (len(a) == len(b) == len(c)):
        raise ValueError("vectors must have equal length")
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    if any(x == 0 for x in c):
        raise ValueError("all diagonal entries must be nonzero")
    prod = Fraction(1)
    for x in c:
        prod *= x
    return prod * (1 + sum(ai * bi / ci for ai, bi, ci in zip(a, b, c)))
