"""The special-fibre cover ring  F[X_0..X_{d-1}, 1/P, t]/(t^Ñ - P).

Here F = F_{q^{d+1}}, the l_H run over the hyperplanes of P^d(F_q) other
than the one at infinity (a = (0, ..., 0, 1)), written in the affine chart
as l_H = a_0 X_0 + ... + a_{d-1} X_{d-1} + a_d, and P is their product.

An element is stored as its Ñ components f_0..f_{Ñ-1} (coefficients of
t^0..t^{Ñ-1}); each component is a BaseFraction num / prod l_H^{e_H}.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction

from .base_rings import Params
from .errors import ZeroElement
from .finite_field import FiniteField, make_field
from .hyperplanes import enumerate_hyperplanes
from .polynomials import Poly


class CoverRing:
    def __init__(self, params: Params):
        self.params = params
        self.d = params.d
        self.Nt = params.Ntilde
        self.field: FiniteField = make_field(params.p, params.f * (params.d + 1))
        emb = self.field.embedding(params.residue_field)
        self.hyperplanes = []
        self.lins = []
        F = self.field
        d = self.d
        for H in enumerate_hyperplanes(params, 1):
            a = [emb[x] for x in H.vector]
            if not any(a[:d]):
                continue  # the hyperplane at infinity
            self.hyperplanes.append(H)
            self.lins.append(Poly.linear(F, a))
        self.P = functools.reduce(lambda x, y: x * y, self.lins, Poly.one(F, d))
        self.nlins = len(self.lins)
        self.probes = [self._points_on(lin) for lin in self.lins]

    def _points_on(self, lin: Poly, count: int = 3) -> list:
        """A few F-points of the affine hyperplane lin = 0."""
        F, d = self.field, self.d
        coeff = [lin.terms.get(tuple(int(i == j) for i in range(d)), F.zero) for j in range(d)]
        c = lin.constant_term()
        k = next(j for j in range(d) if coeff[j])
        inv = F.inv(coeff[k])
        pts = []
        for s in range(count):
            x = [(s * d + j + 1) % F.order for j in range(d)]
            acc = c
            for j in range(d):
                if j != k:
                    acc = F.add(acc, F.mul(coeff[j], x[j]))
            x[k] = F.neg(F.mul(acc, inv))
            pts.append(x)
        return pts

    def divides(self, h: int, num: Poly):
        """num / l_h if exact, else None; a nonzero value on l_h = 0 rules it out fast."""
        if any(not self.field.is_zero(num.evaluate(x)) for x in self.probes[h]):
            return None
        return num.divmod_exact(self.lins[h])

    def __repr__(self):
        return f"CoverRing(q={self.params.q}, d={self.d}, Ntilde={self.Nt}, F=F_{self.field.order})"

    # construction
    def base(self, num: Poly, den=None) -> "BaseFraction":
        den = tuple(den) if den is not None else (0,) * self.nlins
        return BaseFraction(self, num, den).reduce()

    def base_zero(self):
        return self.base(Poly.zero(self.field, self.d))

    def base_one(self):
        return self.base(Poly.one(self.field, self.d))

    def const(self, c: int) -> "CoverElement":
        return self.element({0: self.base(Poly.const(self.field, self.d, c))})

    def var(self, j: int) -> "CoverElement":
        return self.element({0: self.base(Poly.var(self.field, self.d, j))})

    def lin(self, h: int, power: int = 1) -> "CoverElement":
        """l_H^power for the h-th finite hyperplane (power may be negative)."""
        if power >= 0:
            return self.element({0: self.base(self.lins[h] ** power)})
        den = [0] * self.nlins
        den[h] = -power
        return self.element({0: self.base(Poly.one(self.field, self.d), den)})

    @property
    def t(self) -> "CoverElement":
        return self.element({1 % self.Nt: self.base_one()}) if self.Nt > 1 else \
            self.element({0: self.base(self.P)})

    def element(self, comps: dict) -> "CoverElement":
        out = [self.base_zero() for _ in range(self.Nt)]
        for i, f in comps.items():
            out[i] = f
        return CoverElement(self, tuple(out))

    def from_base(self, f: "BaseFraction") -> "CoverElement":
        return self.element({0: f})

    def one(self) -> "CoverElement":
        return self.const(1)

    def zero(self) -> "CoverElement":
        return self.element({})


@functools.lru_cache(maxsize=None)
def make_cover_ring(params: Params) -> CoverRing:
    return CoverRing(params)


class BaseFraction:
    """num / prod_H l_H^{den[H]} with num not divisible by l_H when den[H] > 0."""

    __slots__ = ("R", "num", "den")

    def __init__(self, R: CoverRing, num: Poly, den: tuple[int, ...]):
        self.R, self.num, self.den = R, num, tuple(den)

    def reduce(self) -> "BaseFraction":
        if self.num.is_zero():
            return BaseFraction(self.R, self.num, (0,) * self.R.nlins)
        num, den = self.num, list(self.den)
        for h, e in enumerate(den):
            while e > 0:
                q = self.R.divides(h, num)
                if q is None:
                    break
                num, e = q, e - 1
            den[h] = e
        return BaseFraction(self.R, num, tuple(den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        return isinstance(other, BaseFraction) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _scale_num(self, extra: list[int]) -> Poly:
        num = self.num
        for h, k in enumerate(extra):
            if k:
                num = num * self.R.lins[h] ** k
        return num

    def __add__(self, other: "BaseFraction") -> "BaseFraction":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        den = [max(a, b) for a, b in zip(self.den, other.den)]
        n1 = self._scale_num([m - a for m, a in zip(den, self.den)])
        n2 = other._scale_num([m - b for m, b in zip(den, other.den)])
        return BaseFraction(self.R, n1 + n2, tuple(den)).reduce()

    def __neg__(self):
        return BaseFraction(self.R, -self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "BaseFraction") -> "BaseFraction":
        if self.is_zero() or other.is_zero():
            return self.R.base_zero()
        return BaseFraction(self.R, self.num * other.num,
                            tuple(a + b for a, b in zip(self.den, other.den))).reduce()

    def times_P(self, k: int = 1) -> "BaseFraction":
        if self.is_zero():
            return self
        den = list(self.den)
        num = self.num
        for h in range(len(den)):
            take = min(den[h], k)
            den[h] -= take
            if k - take:
                num = num * self.R.lins[h] ** (k - take)
        return BaseFraction(self.R, num, tuple(den)).reduce()

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a base fraction")
        out = self.R.base_one()
        for _ in range(k):
            out = out * self
        return out

    def order_at(self, h: int) -> int:
        if self.is_zero():
            raise ZeroElement("order of zero")
        k, num = 0, self.num
        while (nxt := self.R.divides(h, num)) is not None:
            k, num = k + 1, nxt
        return k - self.den[h]

    def v_inf(self) -> int:
        if self.is_zero():
            raise ZeroElement("order of zero")
        return -self.num.degree() + sum(self.den)

    def to_string(self) -> str:
        num = self.num.to_string()
        dens = [f"l{h}^{e}" if e > 1 else f"l{h}" for h, e in enumerate(self.den) if e]
        return num if not dens else f"({num})/({'*'.join(dens)})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": list(self.den)}


def _sum_fractions(R: CoverRing, items) -> BaseFraction:
    """Sum of num / prod l_H^den where den entries may be negative."""
    if not items:
        return R.base_zero()
    den = [max(0, *col) for col in zip(*(d for _, d in items))]
    total = Poly.zero(R.field, R.d)
    for num, d in items:
        for h, (m, e) in enumerate(zip(den, d)):
            if m - e:
                num = num * R.lins[h] ** (m - e)
        total = total + num
    return BaseFraction(R, total, tuple(den)).reduce()


class CoverElement:
    __slots__ = ("R", "comps")

    def __init__(self, R: CoverRing, comps: tuple):
        self.R, self.comps = R, tuple(comps)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.comps)

    def __eq__(self, other):
        return isinstance(other, CoverElement) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __add__(self, other):
        return CoverElement(self.R, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return CoverElement(self.R, tuple(-a for a in self.comps))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "CoverElement") -> "CoverElement":
        R, Nt = self.R, self.R.Nt
        slots = [[] for _ in range(Nt)]
        for i, f in enumerate(self.comps):
            if f.is_zero():
                continue
            for j, g in enumerate(other.comps):
                if g.is_zero():
                    continue
                num = f.num * g.num
                den = [a + b for a, b in zip(f.den, g.den)]
                if i + j >= Nt:
                    # t^Ñ = P = prod l_H: cancel one power of every l_H
                    den = [e - 1 for e in den]
                slots[(i + j) % Nt].append((num, den))
        # sum over a common denominator, reduce once per slot
        return CoverElement(R, tuple(_sum_fractions(R, items) for items in slots))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = self.R.one(), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def support(self) -> list[int]:
        return [i for i, f in enumerate(self.comps) if not f.is_zero()]

    def is_base(self) -> bool:
        return all(f.is_zero() for f in self.comps[1:])

    def galois(self, zeta: int) -> "CoverElement":
        """The automorphism t -> ζ t, ζ in μ_Ñ."""
        F = self.R.field
        out = []
        for i, f in enumerate(self.comps):
            c = F.pow(zeta, i)
            out.append(BaseFraction(self.R, f.num.scale(c), f.den))
        return CoverElement(self.R, tuple(out))

    def to_json(self):
        return [f.to_json() for f in self.comps]

    def __repr__(self):
        parts = [f"({f.to_string()})*t^{i}" if i else f"({f.to_string()})"
                 for i, f in enumerate(self.comps) if not f.is_zero()]
        return " + ".join(parts) or "0"


# -- norm ----------------------------------------------------------------------------

def bareiss_det(M: list[list[Poly]]) -> Poly:
    """Fraction-free determinant with row pivoting (sparsest pivot first)."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    A = [list(row) for row in M]
    ring, nv = A[0][0].ring, A[0][0].nvars
    sign = 1
    prev = Poly.one(ring, nv)
    for k in range(n - 1):
        candidates = [r for r in range(k, n) if not A[r][k].is_zero()]
        if not candidates:
            return Poly.zero(ring, nv)
        piv = min(candidates, key=lambda r: (len(A[r][k]), r))
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev) if not num.is_zero() else num
            A[i][k] = Poly.zero(ring, nv)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return -det if sign < 0 else det


def multiplication_matrix(f: CoverElement, nums: list[Poly]) -> list[list[Poly]]:
    """Matrix of multiplication by sum nums[i] t^i on the basis 1, t, ..., t^{Ñ-1}."""
    R = f.R
    Nt = R.Nt
    zero = Poly.zero(R.field, R.d)
    M = [[zero] * Nt for _ in range(Nt)]
    for j in range(Nt):
        for i, g in enumerate(nums):
            if g.is_zero():
                continue
            row = (i + j) % Nt
            M[row][j] = M[row][j] + (g * R.P if i + j >= Nt else g)
    return M


def norm(f: CoverElement) -> BaseFraction:
    """Nrm(f) as the determinant of multiplication by f."""
    R = f.R
    den = [max(c.den[h] for c in f.comps) for h in range(R.nlins)]
    nums = [c._scale_num([m - a for m, a in zip(den, c.den)]) if not c.is_zero()
            else c.num for c in f.comps]
    D = bareiss_det(multiplication_matrix(f, nums))
    return BaseFraction(R, D, tuple(R.Nt * e for e in den)).reduce()


def conjugate_product_norm(f: CoverElement) -> CoverElement:
    """prod over ζ in μ_Ñ(F) of f(ζ t); lands in the base."""
    R = f.R
    out = R.one()
    for z in R.field.roots_of_unity(R.Nt):
        out = out * f.galois(z)
    return out


# -- valuations ----------------------------------------------------------------------

def v_H(f: CoverElement, h: int) -> Fraction:
    if f.is_zero():
        raise ZeroElement("v_H of zero")
    Nt = f.R.Nt
    return min(Fraction(i, Nt) + c.order_at(h) for i, c in enumerate(f.comps) if not c.is_zero())


def v_inf(f: CoverElement) -> Fraction:
    if f.is_zero():
        raise ZeroElement("v_inf of zero")
    Nt = f.R.Nt
    return min(Fraction(i * (1 - Nt), Nt) + c.v_inf()
               for i, c in enumerate(f.comps) if not c.is_zero())


def minimum_is_unique(values: list[Fraction]) -> bool:
    m = min(values)
    return values.count(m) == 1


def component_values_H(f: CoverElement, h: int) -> list[Fraction]:
    Nt = f.R.Nt
    return [Fraction(i, Nt) + c.order_at(h) for i, c in enumerate(f.comps) if not c.is_zero()]


def component_values_inf(f: CoverElement) -> list[Fraction]:
    Nt = f.R.Nt
    return [Fraction(i * (1 - Nt), Nt) + c.v_inf() for i, c in enumerate(f.comps) if not c.is_zero()]


# -- random elements ---------------------------------------------------------------

def random_poly(R: CoverRing, rng: random.Random, max_deg: int = 2, max_terms: int = 3) -> Poly:
    F = R.field
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = [0] * R.d
            for _ in range(rng.randint(0, max_deg)):
                e[rng.randrange(R.d)] += 1
            terms[tuple(e)] = rng.randrange(1, F.order)
        p = Poly(F, R.d, terms)
        if not p.is_zero():
            return p


def random_element(R: CoverRing, rng: random.Random, density: float = 0.5,
                   max_den: int = 1) -> CoverElement:
    while True:
        comps = {}
        for i in range(R.Nt):
            if rng.random() < density:
                den = [rng.randint(0, max_den) for _ in range(R.nlins)]
                comps[i] = R.base(random_poly(R, rng), den)
        f = R.element(comps)
        if not f.is_zero():
            return f


def random_monomial_unit(R: CoverRing, rng: random.Random, nontrivial: bool = True,
                         max_power: int = 2, max_factors: int | None = None) -> CoverElement:
    """c * t^i * prod l_H^{k_H}, with (i, k) not all zero when nontrivial."""
    F = R.field
    nf = R.nlins if max_factors is None else max_factors
    while True:
        i = rng.randrange(R.Nt)
        ks = [0] * R.nlins
        for h in rng.sample(range(R.nlins), nf):
            ks[h] = rng.randint(-max_power, max_power)
        if not nontrivial or i or any(ks):
            break
    c = rng.randrange(1, F.order)
    den = [max(0, -k) for k in ks]
    num = Poly.const(F, R.d, c)
    for h, k in enumerate(ks):
        if k > 0:
            num = num * R.lins[h] ** k
    return R.element({i: R.base(num, den)})


def random_binomial(R: CoverRing, rng: random.Random) -> CoverElement:
    """a + b t^i with a, b of degree at most one; cheap to take norms of."""
    i = rng.randrange(1, R.Nt)
    return R.element({0: R.base(random_poly(R, rng, 1, 2)), i: R.base(random_poly(R, rng, 1, 1))})


# -- the lemma report -------------------------------------------------------------

@dataclass
class NormLemmaReport:
    norm_t_ok: bool
    roots_norm_one: bool
    nonconstant_units_norm_not_one: bool
    valuation_scaling_ok: bool
    det_equals_conjugates: bool | None
    samples: int

    @property
    def ok(self) -> bool:
        return (self.norm_t_ok and self.roots_norm_one and self.nonconstant_units_norm_not_one
                and self.valuation_scaling_ok and self.det_equals_conjugates is not False)

    def to_json(self) -> dict:
        return {"ok": self.ok, "norm_t": self.norm_t_ok, "roots_of_unity_norm_one": self.roots_norm_one,
                "nonconstant_units_norm_not_one": self.nonconstant_units_norm_not_one,
                "valuation_scaling": self.valuation_scaling_ok,
                "det_equals_conjugate_product": self.det_equals_conjugates,
                "samples": self.samples}


def expected_norm_t(R: CoverRing) -> BaseFraction:
    sign = -1 if (R.Nt - 1) % 2 else 1
    P = R.P if sign > 0 else -R.P
    return R.base(P)


def check_norm_one_is_root_of_unity(params: Params, samples: int = 20, seed: int = 0,
                                    cross_check: bool | None = None) -> NormLemmaReport:
    """Replay the norm-one lemma on seeded samples.

    Determinants over F[X_0..X_{d-1}] grow quickly with Ñ, so for Ñ > 5 the
    samples are kept small: monomial units with a single l_H^{±1} and
    binomials a + b t^i.
    """
    R = make_cover_ring(params)
    rng = random.Random(seed)
    one = R.base_one()
    small = R.Nt > 5
    norm_t_ok = norm(R.t) == expected_norm_t(R)
    roots_ok = all(norm(R.const(z)) == one for z in R.field.roots_of_unity(R.Nt))
    if small:
        units = [random_monomial_unit(R, rng, max_power=1, max_factors=1) for _ in range(samples)]
    else:
        units = [random_monomial_unit(R, rng) for _ in range(samples)]
    units_ok = all(norm(u) != one for u in units)
    scaling_ok = True
    for _ in range(samples):
        f = random_binomial(R, rng) if small else random_element(R, rng, density=0.4)
        nf = norm(f)
        h = rng.randrange(R.nlins)
        if nf.order_at(h) != R.Nt * v_H(f, h) or nf.v_inf() != R.Nt * v_inf(f):
            scaling_ok = False
    if cross_check is None:
        cross_check = R.Nt <= 5
    det_conj = None
    if cross_check:
        det_conj = True
        for _ in range(max(1, samples // 4)):
            f = random_element(R, rng, density=0.6)
            cp = conjugate_product_norm(f)
            if not cp.is_base() or cp.comps[0] != norm(f):
                det_conj = False
    return NormLemmaReport(norm_t_ok, roots_ok, units_ok, scaling_ok, det_conj, samples)
