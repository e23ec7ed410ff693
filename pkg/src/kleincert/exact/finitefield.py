"""Finite fields F_p and F_{p^2} with an explicitly stated modulus.

Only prime fields and quadratic extensions are needed.  A quadratic
extension is presented as F_p[u] / (u^2 - s*u - t); the modulus is part
of every element's identity, so values from differently-presented
fields never mix silently.
"""

from __future__ import annotations

__all__ = ["FiniteField", "FFElem"]


class FiniteField:
    """F_p (degree 1) or F_p[u]/(u^2 - s u - t) (degree 2)."""

    def __init__(self, p: int, modulus: tuple | None = None):
        if p < 2 or any(p % k == 0 for k in range(2, p)):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        if modulus is None:
            self.r = 1
            self.modulus = None
        else:
            s, t = int(modulus[0]) % p, int(modulus[1]) % p
            # u^2 = s*u + t must be irreducible: no root x with x^2 - s x - t = 0
            for x in range(p):
                if (x * x - s * x - t) % p == 0:
                    raise ValueError(f"u^2 = {s}u + {t} is reducible over F_{p}")
            self.r = 2
            self.modulus = (s, t)
        self.order = p**self.r

    def elem(self, a: int, b: int = 0) -> "FFElem":
        if b and self.r == 1:
            raise ValueError("prime field has no u component")
        return FFElem(self, a % self.p, b % self.p)

    def zero(self) -> "FFElem":
        return FFElem(self, 0, 0)

    def one(self) -> "FFElem":
        return FFElem(self, 1, 0)

    def u(self) -> "FFElem":
        if self.r != 2:
            raise ValueError("prime field has no generator u")
        return FFElem(self, 0, 1)

    def elements(self):
        if self.r == 1:
            return [FFElem(self, a, 0) for a in range(self.p)]
        return [FFElem(self, a, b) for b in range(self.p) for a in range(self.p)]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        s, t = self.modulus
        return f"GF({self.p}^2, u^2={s}u+{t})"


class FFElem:
    """Element a + b*u of a FiniteField."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: FiniteField, a: int, b: int):
        self.field = field
        self.a = a
        self.b = b

    def _check(self, other):
        if not isinstance(other, FFElem):
            if isinstance(other, int):
                return FFElem(self.field, other % self.field.p, 0)
            return None
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, (self.a + other.a) % p, (self.b + other.b) % p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, (self.a - other.a) % p, (self.b - other.b) % p)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, (-self.a) % p, (-self.b) % p)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        if self.field.r == 1:
            return FFElem(self.field, (self.a * other.a) % p, 0)
        s, t = self.field.modulus
        # (a1 + b1 u)(a2 + b2 u) with u^2 = s u + t
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        hi = b1 * b2
        return FFElem(self.field, (a1 * a2 + hi * t) % p, (a1 * b2 + b1 * a2 + hi * s) % p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # The multiplicative group has order q - 1
        return self ** (self.field.order - 2)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.field.p
        return (
            isinstance(other, FFElem)
            and self.field == other.field
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.a, self.b))

    def __repr__(self):
        if self.field.r == 1 or self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}u" if self.b != 1 else "u"
        return f"{self.a}+{self.b}u" if self.b != 1 else f"{self.a}+u"
