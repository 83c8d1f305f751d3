"""Exact arithmetic in the cyclotomic field Q(ζ_n).

Elements are tuples of Fractions in the power basis 1, ζ, ..., ζ^{φ(n)-1},
reduced modulo the n-th cyclotomic polynomial.  No floating point anywhere.
"""
from __future__ import annotations

import functools
from fractions import Fraction

from .errors import NonUnit


def _poly_divmod_int(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # b monic, coefficients low degree first
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], a
    quot = [0] * (len(a) - db)
    for top in range(len(a) - 1, db - 1, -1):
        c = a[top]
        if c:
            quot[top - db] = c
            for j in range(db + 1):
                a[top - db + j] -= c * b[j]
    rem = a[:db] or [0]
    return quot, rem


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Φ_n with integer coefficients, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for k in range(1, n):
        if n % k == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(k)))
            assert not any(rem)
    return tuple(num)


class CyclotomicField:
    def __init__(self, n: int):
        self.n = n
        self.phi = tuple(cyclotomic_polynomial(n))
        self.degree = len(self.phi) - 1
        self.zero = CycElem(self, (Fraction(0),) * self.degree)
        self.one = self.from_rational(1)

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def from_rational(self, r) -> "CycElem":
        return CycElem(self, (Fraction(r),) + (Fraction(0),) * (self.degree - 1))

    def from_poly(self, coeffs) -> "CycElem":
        """Reduce an arbitrary-length coefficient list modulo Φ_n."""
        c = [Fraction(x) for x in coeffs]
        db = self.degree
        for top in range(len(c) - 1, db - 1, -1):
            v = c[top]
            if v:
                for j in range(db + 1):
                    c[top - db + j] -= v * self.phi[j]
        c = (c + [Fraction(0)] * db)[:db]
        return CycElem(self, tuple(c))

    @property
    def zeta(self) -> "CycElem":
        return self.from_poly([0, 1])

    def roots_of_unity(self) -> list["CycElem"]:
        z = self.zeta
        return [z ** k for k in range(self.n)]

    # ring protocol
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a) -> bool:
        return not any(a.c)

    def fmt(self, a) -> str:
        return str(a)


class CycElem:
    __slots__ = ("field", "c")

    def __init__(self, field: CyclotomicField, c: tuple):
        self.field = field
        self.c = c

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            if other.field.n != self.field.n:
                raise ValueError("mixing cyclotomic fields")
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        other = self._coerce(other)
        return CycElem(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CycElem(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycElem(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        other = self._coerce(other)
        prod = [Fraction(0)] * (2 * len(self.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        prod[i + j] += a * b
        return self.field.from_poly(prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.field.n == other.field.n and self.c == other.c

    def __hash__(self):
        return hash((self.field.n, self.c))

    def __bool__(self):
        return any(self.c)

    def inverse(self) -> "CycElem":
        # solve (multiplication by self) y = 1 by exact Gauss-Jordan
        if not self:
            raise NonUnit("0 is not invertible")
        F, D = self.field, self.field.degree
        basis = [F.from_poly([0] * k + [1]) for k in range(D)]
        cols = [(self * b).c for b in basis]
        rows = [[cols[j][i] for j in range(D)] + [Fraction(int(i == 0))] for i in range(D)]
        for col in range(D):
            piv = next(r for r in range(col, D) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][col]
            rows[col] = [x / pv for x in rows[col]]
            for r in range(D):
                if r != col and rows[r][col] != 0:
                    fac = rows[r][col]
                    rows[r] = [x - fac * y for x, y in zip(rows[r], rows[col])]
        return CycElem(F, tuple(rows[i][D] for i in range(D)))

    def __str__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                terms.append(f"{a}{'*' + mono if mono else ''}")
        return " + ".join(terms) or "0"

    __repr__ = __str__


@functools.lru_cache(maxsize=None)
def make_cyclotomic(n: int) -> CyclotomicField:
    return CyclotomicField(n)
