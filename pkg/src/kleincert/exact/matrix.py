"""Exact dense matrices over any of the kernel's scalar types.

Works generically for gmpy2 rationals, cyclotomic numbers, finite
field elements and (for determinants) sparse polynomials.  Matrices
are immutable; the entry tuple doubles as a canonical dictionary key.
"""

from __future__ import annotations

from gmpy2 import mpq

from .cyclotomic import Cyc

__all__ = ["Mat", "one_like", "zero_like", "inv_scalar", "conj_scalar"]


def one_like(x):
    if isinstance(x, (int, mpq)):
        return mpq(1)
    return x.field.one()


def zero_like(x):
    if isinstance(x, (int, mpq)):
        return mpq(0)
    return x.field.zero()


def inv_scalar(x):
    if isinstance(x, (int, mpq)):
        return 1 / mpq(x)
    return x.inverse()


def conj_scalar(x):
    if isinstance(x, Cyc):
        return x.conjugate()
    return x


class Mat:
    """An n x m matrix with entries of one exact scalar type."""

    __slots__ = ("rows", "n", "m", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        self.m = len(self.rows[0]) if self.rows else 0
        self._hash = None

    @staticmethod
    def identity(n, sample):
        one, zero = one_like(sample), zero_like(sample)
        return Mat([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, Mat):
            assert self.m == other.n, "matrix dimension mismatch"
            cols = list(zip(*other.rows))
            return Mat(
                [
                    [_dot(row, col) for col in cols]
                    for row in self.rows
                ]
            )
        return NotImplemented

    def apply(self, vec):
        """Matrix-vector product."""
        assert self.m == len(vec)
        return tuple(_dot(row, vec) for row in self.rows)

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Mat([[c * a for a in r] for r in self.rows])

    def __pow__(self, k: int):
        assert self.n == self.m
        if k < 0:
            return self.inverse() ** (-k)
        result = Mat.identity(self.n, self.rows[0][0])
        base = self
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    def transpose(self):
        return Mat(list(zip(*self.rows)))

    def conj_transpose(self):
        return Mat([[conj_scalar(a) for a in r] for r in zip(*self.rows)])

    def map(self, fn):
        return Mat([[fn(a) for a in r] for r in self.rows])

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.n):
            t = t + self.rows[i][i]
        return t

    # -- determinants ----------------------------------------------------

    def det(self):
        """Exact determinant.

        Entries over a field use fraction-free cofactor expansion for
        n <= 4 as well (the sizes used here never warrant elimination,
        and cofactor expansion also covers polynomial entries).
        """
        assert self.n == self.m, "determinant of non-square matrix"
        return _det_cofactor(self.rows)

    def charpoly(self):
        """Coefficients (c0, ..., c_{n-1}, 1) of det(x*I - A), n <= 3."""
        assert self.n == self.m <= 3
        one = one_like(self.rows[0][0])
        if self.n == 1:
            return (-self.rows[0][0], one)
        if self.n == 2:
            return (self.det(), -self.trace(), one)
        t1 = self.trace()
        t2 = (self * self).trace()
        c2 = -t1
        c1 = (t1 * t1 - t2) * mpq(1, 2)
        c0 = -self.det()
        return (c0, c1, c2, one)

    def adjugate(self):
        """Adjugate (transposed cofactor matrix), n = 3, division-free."""
        assert self.n == self.m == 3
        r = self.rows
        cof = [
            [
                r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        return Mat(cof).transpose()

    def inverse(self):
        assert self.n == self.m == 3, "inverse implemented for 3x3"
        d = self.det()
        return self.adjugate().map(lambda a: a * inv_scalar(d))

    def kernel(self):
        """Basis of the right kernel, by Gaussian elimination over a field."""
        n, m = self.n, self.m
        rows = [list(r) for r in self.rows]
        pivots = []
        rank = 0
        for col in range(m):
            pivot = None
            for i in range(rank, n):
                if rows[i][col]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = inv_scalar(rows[rank][col])
            rows[rank] = [a * inv for a in rows[rank]]
            for i in range(n):
                if i != rank and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
            pivots.append(col)
            rank += 1
        one = one_like(self.rows[0][0])
        zero = zero_like(self.rows[0][0])
        basis = []
        free = [c for c in range(m) if c not in pivots]
        for fc in free:
            v = [zero] * m
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][fc]
            basis.append(tuple(v))
        return basis

    # -- identity and hashing ---------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return "Mat(" + "; ".join(", ".join(repr(a) for a in r) for r in self.rows) + ")"


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = None
    for j in range(n):
        a = rows[0][j]
        if hasattr(a, "is_zero") and a.is_zero():
            continue
        if isinstance(a, (int, mpq)) and not a:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * _det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        acc = zero_like(rows[0][0])
    return acc
