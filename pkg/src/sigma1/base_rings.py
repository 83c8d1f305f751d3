"""Exact arithmetic in the finite local rings O_K/ϖ^n.

Three concrete models are supported, all sharing one representation:

* ``Z/p^n``                      -- K = Q_p (f = 1, e = 1)
* ``Z/p^n[x]/(g)``  (Galois ring) -- K unramified of degree f (e = 1)
* ``F_q[π]/(π^n)``                -- K totally ramified with e >= n

An element is a coefficient vector over Z/p^k of length m*f, where the entry
at ``i*f + j`` is the coefficient of ``π^i x^j``.  For e = 1 we have m = 1 and
k = n; for e >= n we have k = 1 and m = n.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidParameters, NonUnit, UnsupportedRing


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for k in range(2, math.isqrt(n) + 1):
        if n % k == 0:
            return False
    return True


@dataclass(frozen=True)
class Params:
    """Arithmetic data (p, f, e, d) and the derived q, N and Ntilde."""

    p: int
    f: int = 1
    e: int = 1
    d: int = 1

    def __post_init__(self):
        for name in ("p", "f", "e", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidParameters(f"{name} must be a positive integer, got {v!r}")
        if not is_prime(self.p):
            raise InvalidParameters(f"p = {self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def N(self) -> int:
        return self.q ** (self.d + 1) - 1

    @property
    def Ntilde(self) -> int:
        return self.N // (self.q - 1)

    def ring(self, n: int) -> "ResidueRing":
        return make_ring(self.p, self.f, self.e, n)

    @property
    def residue_field(self) -> "ResidueRing":
        return make_ring(self.p, self.f, 1, 1)


# -- polynomials over F_p, used to pick the defining polynomial -----------------

def _polymulmod(a: Sequence[int], b: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    # g monic of degree len(g) - 1, a and b reduced
    deg = len(g) - 1
    prod = [0] * (2 * deg - 1) if deg else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for top in range(len(prod) - 1, deg - 1, -1):
        c = prod[top]
        if c:
            for j in range(deg + 1):
                prod[top - deg + j] = (prod[top - deg + j] - c * g[j]) % p
    return prod[:deg]


@functools.lru_cache(maxsize=None)
def primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree m over F_p.

    Coefficients are returned low degree first, leading 1 included.  The
    search order is lexicographic on the integer ``sum c_i p^i`` of the lower
    coefficients, so for (2, 2) this gives x^2 + x + 1.
    """
    if m == 1:
        # x - r with r a primitive root mod p (r = 1 when p = 2)
        for r in range(1, p):
            if all(pow(r, (p - 1) // ell, p) != 1 for ell in _prime_factors(p - 1)):
                return ((-r) % p, 1)
    order = p ** m - 1
    for code in range(p ** m):
        low = [(code // p ** i) % p for i in range(m)]
        if low[0] == 0:
            continue
        g = tuple(low + [1])
        x = [0] * m
        x[1] = 1
        cur = list(x)
        one = [1] + [0] * (m - 1)
        k = 1
        while cur != one and k <= order:
            cur = _polymulmod(cur, x, g, p)
            k += 1
        if k == order and cur == one:
            return g
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# -- residue rings ------------------------------------------------------------------

class ResidueRing:
    """The ring O_K/ϖ^n for K with invariants (p, f, e)."""

    def __init__(self, p: int, f: int, e: int, n: int):
        Params(p, f, e, 1)  # validates p, f, e
        if not isinstance(n, int) or n < 1:
            raise InvalidParameters(f"level must be a positive integer, got {n!r}")
        if 1 < e < n:
            raise UnsupportedRing(
                f"O_K/ϖ^{n} with ramification index e={e} (1 < e < n) is not modeled")
        self.p, self.f, self.e, self.n = p, f, e, n
        if e == 1:
            self.k, self.m = n, 1
        else:
            self.k, self.m = 1, n
        self.modulus = p ** self.k
        self.q = p ** f
        self.g = primitive_polynomial(p, f)
        if e == 1 and f == 1:
            self.model = "Z/p^n"
        elif e == 1:
            self.model = "galois"
        else:
            self.model = "truncated"
        self.size = self.q ** n
        # x^(f+j) mod g, for j < f - 1
        self._xpow = []
        for j in range(f - 1):
            v = [0] * (2 * f - 1)
            v[f + j] = 1
            for top in range(2 * f - 2, f - 1, -1):
                c = v[top]
                if c:
                    for t in range(f + 1):
                        v[top - f + t] -= c * self.g[t]
            self._xpow.append(tuple(c % self.modulus for c in v[:f]))
        self.zero = self._elem((0,) * (self.m * f))
        self.one = self._elem((1,) + (0,) * (self.m * f - 1))

    def __repr__(self):
        return f"ResidueRing(p={self.p}, f={self.f}, e={self.e}, n={self.n})"

    def describe(self) -> str:
        if self.model == "Z/p^n":
            return f"Z/{self.modulus}"
        if self.model == "galois":
            return f"Z/{self.modulus}[x]/({_fmt_poly(self.g, 'x')})"
        base = f"F_{self.q}" if self.f == 1 else f"F_{self.p}[x]/({_fmt_poly(self.g, 'x')})"
        return f"{base}[π]/(π^{self.n})"

    # construction helpers
    def _elem(self, coeffs: tuple[int, ...]) -> "RingElem":
        return RingElem(self, coeffs)

    def __call__(self, value) -> "RingElem":
        if isinstance(value, RingElem):
            if value.ring is not self:
                raise ValueError(f"element of {value.ring} is not in {self}")
            return value
        if isinstance(value, int):
            if self.m == 1:
                return self._elem((value % self.modulus,) + (0,) * (self.f - 1))
            return self._elem((value % self.p,) + (0,) * (self.m * self.f - 1))
        coeffs = tuple(int(c) % self.modulus for c in value)
        if len(coeffs) != self.m * self.f:
            raise ValueError(f"expected {self.m * self.f} coefficients, got {len(coeffs)}")
        return self._elem(coeffs)

    @property
    def uniformizer(self) -> "RingElem":
        if self.m == 1:
            return self(self.p)
        c = [0] * (self.m * self.f)
        c[self.f] = 1
        return self._elem(tuple(c))

    # raw coefficient arithmetic
    def _block_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        f, M = self.f, self.modulus
        if f == 1:
            return [a[0] * b[0] % M]
        prod = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = prod[:f]
        for j in range(f - 1):
            c = prod[f + j]
            if c:
                for t, r in enumerate(self._xpow[j]):
                    out[t] += c * r
        return [c % M for c in out]

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        f, m, M = self.f, self.m, self.modulus
        if m == 1:
            return tuple(self._block_mul(a, b))
        out = [0] * (m * f)
        for i in range(m):
            ai = a[i * f:(i + 1) * f]
            if not any(ai):
                continue
            for j in range(m - i):
                bj = b[j * f:(j + 1) * f]
                if not any(bj):
                    continue
                blk = self._block_mul(ai, bj)
                base = (i + j) * f
                for t in range(f):
                    out[base + t] = (out[base + t] + blk[t]) % M
        return tuple(out)

    # ring protocol shared with FiniteField / CyclotomicField
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
        return a.to_string()

    # structure
    def elements(self) -> list["RingElem"]:
        return _elements(self)

    def units(self) -> list["RingElem"]:
        return [x for x in self.elements() if x.is_unit()]

    def nonunits(self) -> list["RingElem"]:
        return [x for x in self.elements() if not x.is_unit()]

    @property
    def residue_field(self) -> "ResidueRing":
        return make_ring(self.p, self.f, 1, 1)

    def reduce(self, x: "RingElem", level: int | None = None) -> "RingElem":
        """Image of x in O_K/ϖ^level (default: the residue field)."""
        level = 1 if level is None else level
        if level > self.n or level < 1:
            raise ValueError(f"cannot reduce level {self.n} to level {level}")
        target = make_ring(self.p, self.f, self.e, level) if level > 1 else self.residue_field
        if self.m == 1:
            mod = self.p ** level
            return target._elem(tuple(c % mod for c in x.c))
        # truncated model: drop π^i for i >= level; residue field has m = 1
        return target._elem(tuple(c % target.modulus for c in x.c[:target.m * self.f]))

    def lift(self, x: "RingElem") -> "RingElem":
        """Coefficient-embedding lift of x from a lower level into this ring."""
        if x.ring.p != self.p or x.ring.f != self.f or x.ring.n > self.n:
            raise ValueError(f"cannot lift from {x.ring} to {self}")
        c = list(x.c) + [0] * (self.m * self.f - len(x.c))
        return self._elem(tuple(v % self.modulus for v in c))

    def divide_by_uniformizer(self, x: "RingElem") -> "RingElem":
        """The y at level n - 1 with x = ϖ y (x must lie in the maximal ideal)."""
        if x.is_unit():
            raise NonUnit(f"{x} is not divisible by the uniformizer")
        if self.n == 1:
            raise ValueError("no level 0 ring")
        target = make_ring(self.p, self.f, self.e, self.n - 1)
        if self.m == 1:
            return target._elem(tuple(c // self.p for c in x.c))
        return target._elem(tuple(x.c[self.f:]))

    def teichmuller_lift(self, a: "RingElem") -> "RingElem":
        """Multiplicative lift of a residue-field element.

        For the e = 1 models this is the Teichmüller representative; for
        F_q[π]/π^n it is the constant a, which is also multiplicative.
        """
        if a.ring is not self.residue_field:
            a = self.residue_field(a.c if isinstance(a, RingElem) else a)
        y = self.lift(a)
        return y ** (self.q ** (self.k - 1)) if self.k > 1 else y

    def residue_elements(self) -> list["RingElem"]:
        return self.residue_field.elements()


@functools.lru_cache(maxsize=None)
def make_ring(p: int, f: int, e: int, n: int) -> ResidueRing:
    """Cached ring descriptor; equal arguments give the identical object."""
    if e > 1 and n == 1:
        # O_K/ϖ is the residue field whatever e is
        return make_ring(p, f, 1, 1)
    return ResidueRing(p, f, e, n)


@functools.lru_cache(maxsize=None)
def _elements(ring: ResidueRing) -> list["RingElem"]:
    return [ring._elem(c) for c in itertools.product(range(ring.modulus), repeat=ring.m * ring.f)]


def _fmt_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


class RingElem:
    __slots__ = ("ring", "c")

    def __init__(self, ring: ResidueRing, c: tuple[int, ...]):
        self.ring = ring
        self.c = c

    def _check(self, other) -> "RingElem":
        if isinstance(other, int):
            return self.ring(other)
        if other.ring is not self.ring:
            raise ValueError(f"mixing {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        M = self.ring.modulus
        return RingElem(self.ring, tuple((a + b) % M for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        M = self.ring.modulus
        return RingElem(self.ring, tuple((a - b) % M for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        M = self.ring.modulus
        return RingElem(self.ring, tuple(-a % M for a in self.c))

    def __mul__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.ring._mul(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring is other.ring and self.c == other.c

    def __hash__(self):
        return hash((id(self.ring), self.c))

    def __lt__(self, other):
        return self.c < other.c

    def __bool__(self):
        return any(self.c)

    def is_unit(self) -> bool:
        return any(c % self.ring.p for c in self.c[:self.ring.f])

    def residue(self) -> "RingElem":
        return self.ring.reduce(self, 1)

    def inverse(self) -> "RingElem":
        if not self.is_unit():
            raise NonUnit(f"{self.to_string()} is not a unit of {self.ring.describe()}")
        F = self.ring.residue_field
        r = self.residue()
        rinv = next(y for y in F.units() if (r * y) == F.one)
        y = self.ring.lift(rinv)
        two = self.ring(2)
        for _ in range(max(1, self.ring.n).bit_length() + 1):
            y = y * (two - self * y)
        assert self * y == self.ring.one
        return y

    def to_int(self) -> int:
        """Integer code sum c_i M^i, handy as a label for residue-field elements."""
        M = self.ring.modulus
        return sum(c * M ** i for i, c in enumerate(self.c))

    def to_string(self) -> str:
        if len(self.c) == 1:
            return str(self.c[0])
        return "[" + ",".join(str(c) for c in self.c) + "]"

    def __repr__(self):
        return self.to_string()


def residue_from_int(ring: ResidueRing, code: int) -> RingElem:
    """Inverse of RingElem.to_int."""
    M = ring.modulus
    return ring._elem(tuple((code // M ** i) % M for i in range(ring.m * ring.f)))
