"""Exponent vectors on H_n: invertible functions and μ_N-torsor classes.

An invertible function on the Drinfeld space, modulo 1-units and roots of
unity, is recorded by its exponent at each hyperplane class of some level n
(a vector of total degree zero) together with a power of ϖ.  A Kummer class
is the same data read modulo N.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .base_rings import Params
from .errors import LevelMismatch, ModulusMismatch, NotDegreeZero
from .hyperplanes import (HyperplaneClass, enumerate_hyperplanes, gl_act,
                          hyperplane_index, reduce_class)


class DivisorVector:
    """Coefficient map H_n -> Z (modulus 0) or Z/m, of total degree zero.

    Coefficients are kept as exact integers aligned with
    ``enumerate_hyperplanes(params, level)``; reduction mod m only happens
    when comparing.
    """

    __slots__ = ("params", "level", "modulus", "coeffs")

    def __init__(self, params: Params, level: int, modulus: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        size = len(enumerate_hyperplanes(params, level))
        if len(coeffs) != size:
            raise ValueError(f"expected {size} coefficients at level {level}, got {len(coeffs)}")
        if modulus < 0:
            raise ValueError("modulus must be non-negative")
        total = sum(coeffs)
        if (total != 0) if modulus == 0 else (total % modulus):
            raise NotDegreeZero(f"total degree {total} is not zero"
                                + (f" mod {modulus}" if modulus else ""))
        self.params, self.level, self.modulus, self.coeffs = params, level, modulus, coeffs

    @classmethod
    def zero(cls, params, level, modulus=0):
        return cls(params, level, modulus, (0,) * len(enumerate_hyperplanes(params, level)))

    @classmethod
    def constant(cls, params, level, modulus, c):
        return cls(params, level, modulus, (c,) * len(enumerate_hyperplanes(params, level)))

    @classmethod
    def from_map(cls, params, level, modulus, values: dict):
        idx = hyperplane_index(params, level)
        coeffs = [0] * len(idx)
        for H, c in values.items():
            coeffs[idx[H]] += c
        return cls(params, level, modulus, coeffs)

    @classmethod
    def delta(cls, params, level, H, H0):
        """δ_H - δ_{H0}, the divisor of l_H / l_{H0}."""
        return cls.from_map(params, level, 0, {H: 1, H0: -1} if H != H0 else {})

    @property
    def hyperplanes(self) -> list[HyperplaneClass]:
        return enumerate_hyperplanes(self.params, self.level)

    def coefficient(self, H) -> int:
        return self.coeffs[hyperplane_index(self.params, self.level)[H]]

    def items(self):
        return zip(self.hyperplanes, self.coeffs)

    def degree(self) -> int:
        return sum(self.coeffs)

    def reduced(self) -> tuple[int, ...]:
        m = self.modulus
        return tuple(c % m for c in self.coeffs) if m else self.coeffs

    def _check(self, other: "DivisorVector"):
        if self.level != other.level or self.params != other.params:
            raise LevelMismatch(f"levels {self.level} and {other.level} differ")
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"moduli {self.modulus} and {other.modulus} differ")

    # group law, written multiplicatively like the functions it models
    def __mul__(self, other: "DivisorVector") -> "DivisorVector":
        self._check(other)
        return DivisorVector(self.params, self.level, self.modulus,
                             (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int) -> "DivisorVector":
        return DivisorVector(self.params, self.level, self.modulus, (k * c for c in self.coeffs))

    def inverse(self) -> "DivisorVector":
        return self ** -1

    def is_identity(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        if not isinstance(other, DivisorVector):
            return NotImplemented
        self._check(other)
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.level, self.modulus, self.reduced()))

    def with_modulus(self, m: int) -> "DivisorVector":
        if self.modulus and (m == 0 or self.modulus % m):
            raise ModulusMismatch(f"cannot read a mod-{self.modulus} vector mod {m}")
        return DivisorVector(self.params, self.level, m, self.coeffs)

    def act(self, g) -> "DivisorVector":
        """Translate by g: the coefficient at g·H becomes the old one at H."""
        idx = hyperplane_index(self.params, self.level)
        out = [0] * len(self.coeffs)
        for H, c in zip(self.hyperplanes, self.coeffs):
            out[idx[gl_act(g, H)]] = c
        return DivisorVector(self.params, self.level, self.modulus, out)

    def to_json(self) -> dict:
        return {"level": self.level, "modulus": self.modulus,
                "coefficients": [[H.to_json(), c] for H, c in zip(self.hyperplanes, self.reduced())]}

    def __repr__(self):
        return f"DivisorVector(level={self.level}, mod={self.modulus}, {list(self.reduced())})"


@dataclass(frozen=True)
class KummerClass:
    """(ϖ-exponent, divisor vector); modulus 0 means an integral unit."""

    pi_exponent: int
    divisor: DivisorVector

    @property
    def modulus(self) -> int:
        return self.divisor.modulus

    @property
    def level(self) -> int:
        return self.divisor.level

    @property
    def params(self) -> Params:
        return self.divisor.params

    def _pi(self) -> int:
        m = self.modulus
        return self.pi_exponent % m if m else self.pi_exponent

    def __mul__(self, other: "KummerClass") -> "KummerClass":
        return KummerClass(self.pi_exponent + other.pi_exponent, self.divisor * other.divisor)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int) -> "KummerClass":
        return KummerClass(k * self.pi_exponent, self.divisor ** k)

    def inverse(self) -> "KummerClass":
        return self ** -1

    def is_identity(self) -> bool:
        return self._pi() == 0 and self.divisor.is_identity()

    def __eq__(self, other):
        if not isinstance(other, KummerClass):
            return NotImplemented
        return self._pi() == other._pi() and self.divisor == other.divisor

    def __hash__(self):
        return hash((self._pi(), self.divisor))

    def with_modulus(self, m: int) -> "KummerClass":
        return KummerClass(self.pi_exponent, self.divisor.with_modulus(m))

    def act(self, g) -> "KummerClass":
        return KummerClass(self.pi_exponent, self.divisor.act(g))

    def to_json(self) -> dict:
        out = self.divisor.to_json()
        out["pi_exponent"] = self._pi()
        return out


def identity_class(params: Params, level: int, modulus: int) -> KummerClass:
    return KummerClass(0, DivisorVector.zero(params, level, modulus))


def canonical_generator(params: Params, n: int) -> DivisorVector:
    """q^{n-1} at every class of H_n, read mod Ntilde."""
    return DivisorVector.constant(params, n, params.Ntilde, params.q ** (n - 1))


def pushforward(v: DivisorVector) -> DivisorVector:
    """Sum the coefficients of v over each fibre of H_{n+1} -> H_n."""
    if v.level < 2:
        raise LevelMismatch("nothing below level 1")
    idx = hyperplane_index(v.params, v.level - 1)
    out = [0] * len(idx)
    for H, c in zip(v.hyperplanes, v.coeffs):
        out[idx[reduce_class(H)]] += c
    return DivisorVector(v.params, v.level - 1, v.modulus, out)


def kummer_class_sigma1(params: Params, n: int) -> KummerClass:
    """Class of the first covering restricted to the level-n region.

    ϖ^1 times the (q-1)-th power of the canonical unit at level n+1, mod N.
    """
    coeff = (params.q - 1) * params.q ** n
    return KummerClass(1, DivisorVector.constant(params, n + 1, params.N, coeff))


@dataclass
class InvariantReport:
    solutions: list[tuple[int, ...]]
    generator: tuple[int, ...]
    generated: list[tuple[int, ...]]
    ok: bool

    def to_json(self) -> dict:
        return {"count": len(self.solutions), "generator": list(self.generator),
                "solutions": [list(s) for s in self.solutions], "ok": self.ok}


def invariant_class_enumeration(params: Params, n_max: int) -> InvariantReport:
    """All constant sequences (α_1..α_{n_max}) mod N compatible with the tower.

    Conditions: α_n = q^d α_{n+1} (pushforward) and |H_n| α_n = 0 (degree
    zero).  The solution set must be the cyclic group generated by
    α_n = (q-1) q^{n-1}.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    N, q, d = params.N, params.q, params.d
    sizes = [params.Ntilde * q ** ((n - 1) * d) for n in range(1, n_max + 1)]
    sols = []
    for alpha in itertools.product(range(N), repeat=n_max):
        if any((a * s) % N for a, s in zip(alpha, sizes)):
            continue
        if any((alpha[n] - q ** d * alpha[n + 1]) % N for n in range(n_max - 1)):
            continue
        sols.append(alpha)
    gen = tuple(((q - 1) * q ** (n - 1)) % N for n in range(1, n_max + 1))
    generated = sorted({tuple((k * g) % N for g in gen) for k in range(N)})
    return InvariantReport(sols, gen, generated, sols == generated)


def is_invariant(cls, group_elements) -> bool:
    """True iff every g permutes H_n preserving the coefficients."""
    v = cls.divisor if isinstance(cls, KummerClass) else cls
    for g in group_elements:
        if g[0][0].ring.n != v.level or len(g) != v.params.d + 1:
            raise LevelMismatch(f"matrix at level {g[0][0].ring.n}, class at level {v.level}")
        if v.act(g) != v:
            return False
    return True


def pi0(cls: KummerClass, field: str = "C") -> int:
    """Number of geometric connected components of the Kummer cover."""
    g = cls.modulus or 0
    for c in cls.divisor.coeffs:
        g = math.gcd(g, c)
    if field == "C":
        return g
    if field in ("Kbreve", "K"):
        return math.gcd(g, cls.pi_exponent)
    raise ValueError(f"unknown scalar field {field!r}")


def normalize_to_base(v: DivisorVector, H0: HyperplaneClass) -> dict:
    """Write v as sum_H c_H (δ_H - δ_{H0}); returns {H: c_H} for H != H0."""
    return {H: c for H, c in v.items() if H != H0 and (c % v.modulus if v.modulus else c)}
