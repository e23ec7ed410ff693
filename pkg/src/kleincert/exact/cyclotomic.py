"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[z]/(Phi_N(z)), where Phi_N is the N-th cyclotomic polynomial.  The
basis representation is canonical, so equality and hashing are
structural.  Coefficients are exact rationals (gmpy2.mpq).

All values are immutable after construction.
"""

from __future__ import annotations

from gmpy2 import mpq

__all__ = ["CycField", "Cyc", "cyc_field", "zeta", "gauss_sum_i7"]


def _poly_divexact(num: list, den: list) -> list:
    """Exact division of integer polynomial lists (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[i + k] -= q * d
    assert all(c == 0 for c in num)
    return out


def _cyclotomic_coeffs(n: int, cache: dict) -> list:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n in cache:
        return cache[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, _cyclotomic_coeffs(d, cache))
    cache[n] = poly
    return poly


_PHI_CACHE: dict = {}
_FIELDS: dict = {}


def cyc_field(N: int) -> "CycField":
    """The field Q(zeta_N); instances are cached per conductor."""
    if N < 1:
        raise ValueError(f"conductor must be >= 1, got {N}")
    if N not in _FIELDS:
        _FIELDS[N] = CycField(N)
    return _FIELDS[N]


class CycField:
    """Q(zeta_N) with precomputed Phi_N reduction tables."""

    def __init__(self, N: int):
        self.N = N
        phi_poly = _cyclotomic_coeffs(N, _PHI_CACHE)
        self.degree = len(phi_poly) - 1
        d = self.degree
        # z^d = -(phi_poly[0] + ... + phi_poly[d-1] z^(d-1)), since Phi_N is monic
        top = [mpq(-c) for c in phi_poly[:d]]
        # power_table[k] = coefficient vector of z^k mod Phi_N, for 0 <= k < max(2d-1, N+1)
        table = []
        cur = [mpq(0)] * d
        if d > 0:
            cur[0] = mpq(1)
        for k in range(max(2 * d - 1, N + 1)):
            table.append(tuple(cur))
            nxt = [mpq(0)] + cur[: d - 1]
            lead = cur[d - 1]
            if lead:
                nxt = [a + lead * b for a, b in zip(nxt, top)]
            cur = nxt
        self.power_table = table
        self._zero = Cyc(self, (mpq(0),) * d)
        self._one = Cyc(self, table[0])

    def zero(self) -> "Cyc":
        return self._zero

    def one(self) -> "Cyc":
        return self._one

    def from_rational(self, q) -> "Cyc":
        c = [mpq(0)] * self.degree
        c[0] = mpq(q)
        return Cyc(self, tuple(c))

    def zeta(self, k: int = 1) -> "Cyc":
        """zeta_N^k, reduced."""
        return Cyc(self, self.power_table[k % self.N])

    def make(self, coeffs) -> "Cyc":
        """Sum of coeffs[j] * zeta_N^j, reduced modulo Phi_N.

        This is the canonical constructor: it accepts up to N
        coefficients over the powers of zeta_N and is idempotent on
        already-reduced input.
        """
        coeffs = list(coeffs)
        if len(coeffs) > self.N:
            raise ValueError(f"coefficient list longer than conductor {self.N}")
        acc = [mpq(0)] * self.degree
        for j, c in enumerate(coeffs):
            if not c:
                continue
            q = mpq(c)
            for i, t in enumerate(self.power_table[j]):
                if t:
                    acc[i] += q * t
        return Cyc(self, tuple(acc))

    def embed(self, x: "Cyc") -> "Cyc":
        """Image of x (in a subfield Q(zeta_m), m | N) in this field."""
        if x.field is self:
            return x
        m = x.field.N
        if self.N % m != 0:
            raise ValueError(f"Q(zeta_{m}) does not embed in Q(zeta_{self.N})")
        step = self.N // m
        acc = [mpq(0)] * self.degree
        for j, c in enumerate(x.c):
            if not c:
                continue
            for i, t in enumerate(self.power_table[(j * step) % self.N]):
                if t:
                    acc[i] += c * t
        return Cyc(self, tuple(acc))

    def __repr__(self):
        return f"CycField({self.N})"


class Cyc:
    """An element of Q(zeta_N) in the Phi_N-reduced power basis."""

    __slots__ = ("field", "c", "_hash")

    def __init__(self, field: CycField, coeffs: tuple):
        self.field = field
        self.c = coeffs
        self._hash = None

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, mpq)):
            if not other:
                return self.field._zero
            q = mpq(other)
            return Cyc(self.field, tuple(a * q for a in self.c))
        if not isinstance(other, Cyc):
            return NotImplemented
        if other.field is not self.field:
            raise ValueError("cyclotomic conductor mismatch")
        d = self.field.degree
        acc = [mpq(0)] * (2 * d - 1)
        nz_other = [(j, b) for j, b in enumerate(other.c) if b]
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in nz_other:
                acc[i + j] += a * b
        table = self.field.power_table
        out = acc[:d]
        for k in range(d, 2 * d - 1):
            ck = acc[k]
            if ck:
                row = table[k]
                for i in range(d):
                    if row[i]:
                        out[i] += ck * row[i]
        return Cyc(self.field, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, mpq)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field._one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        d = self.field.degree
        phi = [mpq(c) for c in _cyclotomic_coeffs(self.field.N, _PHI_CACHE)]
        # invariant: s * self == r (mod Phi_N)
        r0, s0 = phi, [mpq(0)]
        r1, s1 = [mpq(x) for x in self.c], [mpq(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if not r1:
                raise ZeroDivisionError("inverse of zero cyclotomic number")
            if len(r1) == 1:
                break
            # divide r0 by r1
            quo = [mpq(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            inv_lead = 1 / r1[-1]
            for k in range(len(quo) - 1, -1, -1):
                q = rem[len(r1) - 1 + k] * inv_lead
                quo[k] = q
                if q:
                    for i, c in enumerate(r1):
                        rem[i + k] -= q * c
            while rem and not rem[-1]:
                rem.pop()
            # s_next = s0 - quo * s1
            prod = [mpq(0)] * (len(quo) + len(s1) - 1)
            for i, a in enumerate(quo):
                if a:
                    for j, b in enumerate(s1):
                        prod[i + j] += a * b
            s_next = [mpq(0)] * max(len(s0), len(prod))
            for i, a in enumerate(s0):
                s_next[i] += a
            for i, a in enumerate(prod):
                s_next[i] -= a
            r0, s0, r1, s1 = r1, s1, rem, s_next
        unit = r1[0]
        out = [mpq(0)] * d
        for i, a in enumerate(s1[:d]):
            out[i] = a / unit
        return Cyc(self.field, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, mpq)):
            return self * (1 / mpq(other))
        if isinstance(other, Cyc):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- field automorphisms --------------------------------------------

    def conjugate(self) -> "Cyc":
        """Complex conjugation, the automorphism zeta -> zeta^(N-1)."""
        return self.galois(self.field.N - 1)

    def galois(self, k: int) -> "Cyc":
        """The automorphism zeta -> zeta^k (k coprime to N)."""
        field = self.field
        acc = [mpq(0)] * field.degree
        for j, c in enumerate(self.c):
            if not c:
                continue
            for i, t in enumerate(field.power_table[(j * k) % field.N]):
                if t:
                    acc[i] += c * t
        return Cyc(field, tuple(acc))

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            return self.is_rational() and self.c[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.field is other.field and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.c[0])
            else:
                self._hash = hash((self.field.N, self.c))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field is not self.field:
                raise ValueError("cyclotomic conductor mismatch")
            return other
        if isinstance(other, (int, mpq)):
            return self.field.from_rational(other)
        return NotImplemented

    def to_str(self) -> str:
        """Serialization '[N; c0, c1, ...]' with reduced rational coefficients."""
        return f"[{self.field.N}; " + ", ".join(str(c) for c in self.c) + "]"

    def __repr__(self):
        return self.to_str()


def zeta(N: int, k: int = 1) -> Cyc:
    return cyc_field(N).zeta(k)


def gauss_sum_i7(field: CycField) -> Cyc:
    """The element i*sqrt(7) = z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6.

    The field must have conductor divisible by 7.  The square of the
    returned value is -7.
    """
    N = field.N
    if N % 7 != 0:
        raise ValueError("need 7 | N for i*sqrt(7)")
    s = N // 7
    g = field.zero()
    for k in (1, 2, 4):
        g = g + field.zeta(s * k)
    for k in (3, 5, 6):
        g = g - field.zeta(s * k)
    return g
