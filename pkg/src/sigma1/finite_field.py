"""Finite fields F_{p^m} with integer-coded elements.

An element is the integer ``sum c_i p^i`` of its coordinates in the power
basis of a fixed primitive polynomial, so 0 and 1 are the integers 0 and 1 and
the generator is ``p`` (the class of x).  Multiplication goes through
log/antilog tables.
"""
from __future__ import annotations

import functools

from .base_rings import ResidueRing, primitive_polynomial
from .errors import NonUnit


class FiniteField:
    def __init__(self, p: int, m: int):
        self.p, self.m = p, m
        self.order = p ** m
        self.poly = primitive_polynomial(p, m)
        Q = self.order
        self.exp = [0] * (2 * (Q - 1))
        self.log = [None] * Q
        cur = [1] + [0] * (m - 1)
        for k in range(Q - 1):
            code = self._encode(cur)
            self.exp[k] = code
            self.log[code] = k
            cur = self._times_x(cur)
        for k in range(Q - 1, 2 * (Q - 1)):
            self.exp[k] = self.exp[k - (Q - 1)]
        self.zero, self.one = 0, 1
        self.generator = self.exp[1] if Q > 2 else 1
        self._add = None
        if Q <= 729:
            self._add = [[self._add_digits(a, b) for b in range(Q)] for a in range(Q)]
        self._neg = [self._encode([(-c) % p for c in self._decode(a)]) for a in range(Q)]

    def __repr__(self):
        return f"FiniteField({self.p}^{self.m})"

    def _encode(self, coeffs) -> int:
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def _decode(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    def _times_x(self, c: list[int]) -> list[int]:
        top = c[-1]
        out = [0] + c[:-1]
        if top:
            out = [(v - top * g) % self.p for v, g in zip(out, self.poly)]
        return out

    def _add_digits(self, a: int, b: int) -> int:
        p, out, w = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    # ring protocol
    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise NonUnit("0 is not invertible")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise NonUnit("0 is not invertible")
            return 1 if k == 0 else 0
        return self.exp[(self.log[a] * k) % (self.order - 1)]

    def is_zero(self, a: int) -> bool:
        return a == 0

    def fmt(self, a: int) -> str:
        if a < self.p or self.m == 1:
            return str(a)
        return f"g^{self.log[a]}"

    def from_int(self, c: int) -> int:
        """Image of the integer c (i.e. c mod p)."""
        return c % self.p

    def elements(self) -> range:
        return range(self.order)

    def roots_of_unity(self, n: int) -> list[int]:
        """All n-th roots of unity, n dividing p^m - 1, as a sorted list."""
        Q1 = self.order - 1
        if Q1 % n:
            raise ValueError(f"{n} does not divide {Q1}")
        step = Q1 // n
        return sorted(self.exp[k * step] for k in range(n))

    def subfield(self, q: int) -> list[int]:
        return sorted(a for a in self.elements() if self.pow(a, q) == a)

    def embedding(self, F: ResidueRing) -> dict:
        """A field embedding of a residue field F_{p^f} into this field.

        F is given in its own power basis x^j mod g; we send x to the
        smallest root of g here.  Returned as a dict RingElem -> int.
        """
        if F.n != 1 or F.p != self.p or self.m % F.f:
            raise ValueError(f"cannot embed {F.describe()} into {self}")
        g = F.g
        if F.f == 1:
            root = 0  # unused
        else:
            root = next(r for r in self.elements() if self._eval(g, r) == 0)
        out = {}
        for a in F.elements():
            val = 0
            for j, c in enumerate(a.c):
                if c:
                    val = self.add(val, self.mul(self.from_int(c), self.pow(root, j)))
            out[a] = val
        return out

    def _eval(self, coeffs, x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.from_int(c))
        return acc


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FiniteField:
    return FiniteField(p, m)
