"""Sparse multivariate polynomials over an exact coefficient domain.

Terms are stored as a dict from exponent tuples to nonzero
coefficients (gmpy2 rationals or cyclotomic numbers).  Supports ring
arithmetic, partial derivatives, linear changes of variables by an
exact matrix, and substitution of polynomials for variables.
"""

from __future__ import annotations

from gmpy2 import mpq

from .cyclotomic import Cyc

__all__ = ["MultiPoly"]


def _is_zero_coeff(c) -> bool:
    return not c


class MultiPoly:
    """A polynomial in `nvars` variables with exact sparse terms."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms:
            self.terms = {e: c for e, c in terms.items() if not _is_zero_coeff(c)}
        else:
            self.terms = {}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def monomial(nvars: int, exponents, coeff=mpq(1)) -> "MultiPoly":
        return MultiPoly(nvars, {tuple(exponents): coeff})

    @staticmethod
    def variable(nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return MultiPoly(nvars, {tuple(e): mpq(1)})

    @staticmethod
    def constant(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: c})

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other):
        assert self.nvars == other.nvars
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if _is_zero_coeff(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            assert self.nvars == other.nvars
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = c1 * c2
                    if e in out:
                        s = out[e] + c
                        if _is_zero_coeff(s):
                            del out[e]
                        else:
                            out[e] = s
                    elif not _is_zero_coeff(c):
                        out[e] = c
            return MultiPoly(self.nvars, out)
        # scalar
        if _is_zero_coeff(other):
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        assert k >= 0
        result = MultiPoly.constant(self.nvars, mpq(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    # -- calculus and structure --------------------------------------------

    def diff(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MultiPoly(self.nvars, out)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights) -> int:
        if not self.terms:
            return -1
        return max(sum(w * x for w, x in zip(weights, e)) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exponents):
        return self.terms.get(tuple(exponents), mpq(0))

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def rational_coeffs(self) -> "MultiPoly":
        """Convert cyclotomic coefficients to rationals; fails if any is not."""

        def conv(c):
            if isinstance(c, Cyc):
                return c.rational()
            return mpq(c)

        return self.map_coeffs(conv)

    # -- substitution --------------------------------------------------------

    def substitute_matrix(self, mat) -> "MultiPoly":
        """The composition p(M x): substitute x_i -> sum_j M[i][j] x_j."""
        assert mat.n == mat.m == self.nvars, "dimension mismatch in substitution"
        images = []
        for i in range(self.nvars):
            images.append(
                MultiPoly(
                    self.nvars,
                    {
                        tuple(1 if k == j else 0 for k in range(self.nvars)): mat.rows[i][j]
                        for j in range(self.nvars)
                        if not _is_zero_coeff(mat.rows[i][j])
                    },
                )
            )
        return self.substitute_polys(images)

    def substitute_polys(self, images) -> "MultiPoly":
        """Substitute images[i] for variable i, with power memoization."""
        assert len(images) == self.nvars
        powers: dict = {}

        def power(i, k):
            if k == 0:
                return None
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        acc = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                pw = power(i, k)
                if pw is None:
                    continue
                term = pw if term is None else term * pw
            if term is None:
                term = MultiPoly.constant(self.nvars, mpq(1))
            acc = acc + term * c
        return acc

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def sorted_terms(self):
        """Terms in reverse-lexicographic exponent order (deterministic)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
