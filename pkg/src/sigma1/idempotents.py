"""Lagrange idempotents on μ_{q-1} and canonical forms of invertible functions.

Over C the cover has q-1 geometric components, cut out by the idempotents
L_a(t_0) with t_0 = t^Ñ/u.  An invertible function is written uniquely as
sum_a t^{j_a} v_a L_a(t_0) with 0 <= j_a < Ñ and v_a a unit of the base.

Units of the base are modelled as integral KummerClass values (ϖ-exponent,
exponent vector on H_1); roots of unity are dropped throughout.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .base_rings import Params
from .cyclotomic import CycElem, make_cyclotomic
from .divisors import DivisorVector, KummerClass
from .errors import NotAUnit
from .hyperplanes import enumerate_hyperplanes
from .polynomials import Poly


# -- Lagrange polynomials ---------------------------------------------------------

@dataclass(frozen=True)
class LagrangePoly:
    q: int
    index: int  # a = ζ^index
    poly: Poly  # univariate over Q(ζ_{q-1})

    @property
    def a(self) -> CycElem:
        return make_cyclotomic(self.q - 1).zeta ** self.index

    def __call__(self, x: CycElem) -> CycElem:
        return self.poly.evaluate([x])

    def coefficients(self) -> list[CycElem]:
        F = self.poly.ring
        deg = max((e[0] for e in self.poly.terms), default=0)
        return [self.poly.terms.get((k,), F.zero) for k in range(deg + 1)]

    def to_json(self) -> dict:
        return {"q": self.q, "a": f"z^{self.index}",
                "coefficients": [str(c) for c in self.coefficients()]}


def mu(q: int) -> list[CycElem]:
    """μ_{q-1} as ζ^0, ..., ζ^{q-2} in Q(ζ_{q-1})."""
    return make_cyclotomic(q - 1).roots_of_unity()


@functools.lru_cache(maxsize=None)
def lagrange(q: int, index: int) -> LagrangePoly:
    """The interpolant of degree q-2: 1 at a = ζ^index, 0 at the other roots."""
    F = make_cyclotomic(q - 1)
    roots = mu(q)
    a = roots[index % (q - 1)]
    X = Poly.var(F, 1, 0)
    out = Poly.one(F, 1)
    for b in roots:
        if b != a:
            out = (X - Poly.const(F, 1, b)) * Poly.const(F, 1, (a - b).inverse()) * out
    return LagrangePoly(q, index % (q - 1), out)


def lagrange_closed_form(q: int, index: int) -> Poly:
    """(1/(q-1)) sum_{k=0}^{q-2} (X/a)^k, an independent formula for L_a."""
    F = make_cyclotomic(q - 1)
    a_inv = (F.zeta ** index).inverse()
    c = Fraction(1, q - 1)
    return Poly(F, 1, {(k,): (a_inv ** k) * c for k in range(q - 1)})


def reduce_mod_cyclic(p: Poly, n: int) -> Poly:
    """Image of a univariate polynomial in K[X]/(X^n - 1)."""
    out = Poly.zero(p.ring, 1)
    for (e,), c in p.terms.items():
        out = out + Poly(p.ring, 1, {(e % n,): c})
    return out


@dataclass
class IdempotentReport:
    q: int
    interpolation: bool
    orthogonal: bool
    sum_is_one: bool
    closed_form: bool

    @property
    def ok(self) -> bool:
        return self.interpolation and self.orthogonal and self.sum_is_one and self.closed_form

    def to_json(self) -> dict:
        return {"q": self.q, "ok": self.ok, "interpolation": self.interpolation,
                "orthogonal_idempotents": self.orthogonal, "sum_is_one": self.sum_is_one,
                "matches_closed_form": self.closed_form}


def idempotent_report(q: int) -> IdempotentReport:
    n = q - 1
    F = make_cyclotomic(n)
    roots = mu(q)
    Ls = [lagrange(q, k) for k in range(n)]
    interp = all(L(b) == (F.one if k == m else F.zero)
                 for k, L in enumerate(Ls) for m, b in enumerate(roots))
    orth = True
    for k, m in itertools.product(range(n), repeat=2):
        prod = reduce_mod_cyclic(Ls[k].poly * Ls[m].poly, n)
        want = reduce_mod_cyclic(Ls[k].poly, n) if k == m else Poly.zero(F, 1)
        orth = orth and prod == want
    total = Poly.zero(F, 1)
    for L in Ls:
        total = total + L.poly
    sum_ok = reduce_mod_cyclic(total, n) == Poly.one(F, 1)
    closed = all(Ls[k].poly == lagrange_closed_form(q, k) for k in range(n))
    return IdempotentReport(q, interp, orth, sum_ok, closed)


def idempotent_check(q: int) -> bool:
    return idempotent_report(q).ok


# -- canonical forms -------------------------------------------------------------

def base_point(params: Params):
    """H_0: the first class of H_1 in enumeration order (a display choice)."""
    return enumerate_hyperplanes(params, 1)[0]


@functools.lru_cache(maxsize=None)
def base_unit(params: Params) -> KummerClass:
    """u = prod_{H != H_0} l_H / l_{H_0}: exponent 1 off H_0, 1 - Ñ at H_0."""
    Hs = enumerate_hyperplanes(params, 1)
    H0 = base_point(params)
    coeffs = [1 - len(Hs) if H == H0 else 1 for H in Hs]
    return KummerClass(0, DivisorVector(params, 1, 0, coeffs))


def unit_one(params: Params) -> KummerClass:
    return KummerClass(0, DivisorVector.zero(params, 1, 0))


def _check_unit(v) -> KummerClass:
    if v is None:
        raise NotAUnit("component is zero")
    if not isinstance(v, KummerClass) or v.modulus != 0 or v.level != 1:
        raise NotAUnit(f"{v!r} is not an integral unit model at level 1")
    return v


class ComponentFunction:
    """(j_a, v_a) for each a in μ_{q-1}, meaning sum_a t^{j_a} v_a L_a(t_0)."""

    __slots__ = ("params", "comps")

    def __init__(self, params: Params, comps):
        comps = tuple(comps)
        if len(comps) != params.q - 1:
            raise NotAUnit(f"expected {params.q - 1} components, got {len(comps)}")
        Nt = params.Ntilde
        out = []
        for c in comps:
            if c is None:
                raise NotAUnit("a component vanishes")
            j, v = c
            if not 0 <= j < Nt:
                raise ValueError(f"j = {j} outside 0..{Nt - 1}")
            out.append((j, _check_unit(v)))
        self.params = params
        self.comps = tuple(out)

    @classmethod
    def identity(cls, params):
        return cls(params, [(0, unit_one(params))] * (params.q - 1))

    @classmethod
    def t(cls, params):
        return cls(params, [(1 % params.Ntilde, unit_one(params))] * (params.q - 1))

    @classmethod
    def u(cls, params):
        return cls(params, [(0, base_unit(params))] * (params.q - 1))

    @classmethod
    def constant(cls, params, v: KummerClass):
        return cls(params, [(0, v)] * (params.q - 1))

    def __mul__(self, other: "ComponentFunction") -> "ComponentFunction":
        Nt = self.params.Ntilde
        u = base_unit(self.params)
        out = []
        for (j, v), (k, w) in zip(self.comps, other.comps):
            s = j + k
            # t^Ñ = u t_0 and t_0 = a on this component; a is dropped
            out.append((s % Nt, v * w * u ** (s // Nt)))
        return ComponentFunction(self.params, out)

    def inverse(self) -> "ComponentFunction":
        Nt = self.params.Ntilde
        u = base_unit(self.params)
        out = []
        for j, v in self.comps:
            out.append((0, v.inverse()) if j == 0 else (Nt - j, v.inverse() / u))
        return ComponentFunction(self.params, out)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int) -> "ComponentFunction":
        base = self if k >= 0 else self.inverse()
        out = ComponentFunction.identity(self.params)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, ComponentFunction) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def is_identity(self) -> bool:
        return self == ComponentFunction.identity(self.params)

    def to_json(self) -> list:
        return [[str(a), str(j), v.to_json()] for a, (j, v) in enumerate(self.comps)]

    def __repr__(self):
        return "ComponentFunction(" + ", ".join(
            f"a{a}: t^{j}*{list(v.divisor.coeffs)}ϖ^{v.pi_exponent}"
            for a, (j, v) in enumerate(self.comps)) + ")"


def decompose(params: Params, candidate: dict) -> ComponentFunction:
    """Canonical form of sum_a t^{k_a} v_a L_a(t_0) for arbitrary integers k_a.

    ``candidate`` maps a-index -> (k_a, v_a); a missing index or v_a = None
    means the function vanishes on that component.
    """
    Nt = params.Ntilde
    u = base_unit(params)
    out = []
    for a in range(params.q - 1):
        c = candidate.get(a)
        if c is None or c[1] is None:
            raise NotAUnit(f"component {a} is zero")
        k, v = c
        v = _check_unit(v)
        out.append((k % Nt, v * u ** (k // Nt)))
    return ComponentFunction(params, out)


# -- the expanded model: an independent oracle ------------------------------------

def expand(cf: ComponentFunction) -> tuple:
    """Per component: (ϖ-exponent, rational divisor of t^j v).

    div(t) = div(u)/Ñ because t^N = u^{q-1}; this ignores the carry rule
    completely, so it can be used to check mul/inv/decompose.
    """
    Nt = cf.params.Ntilde
    du = base_unit(cf.params).divisor.coeffs
    out = []
    for j, v in cf.comps:
        div = tuple(Fraction(j * a, Nt) + b for a, b in zip(du, v.divisor.coeffs))
        out.append((v.pi_exponent, div))
    return tuple(out)


def from_expanded(params: Params, data: tuple) -> ComponentFunction:
    """Recover (j, v) from the expanded model: j is read off the fractional part."""
    Nt = params.Ntilde
    du = base_unit(params).divisor.coeffs
    # u has exponent 1 at every class but H_0
    ref = next(i for i, a in enumerate(du) if a == 1)
    out = []
    for pi, div in data:
        frac = div[ref] - (div[ref].numerator // div[ref].denominator)
        j = frac * Nt
        if j.denominator != 1:
            raise NotAUnit("exponents are not in (1/Ñ)Z")
        j = int(j)
        coeffs = [c - Fraction(j * a, Nt) for a, c in zip(du, div)]
        if any(c.denominator != 1 for c in coeffs):
            raise NotAUnit("not of the form t^j v")
        out.append((j, KummerClass(pi, DivisorVector(params, 1, 0, [int(c) for c in coeffs]))))
    return ComponentFunction(params, out)


def expanded_product(x: tuple, y: tuple) -> tuple:
    return tuple((p1 + p2, tuple(a + b for a, b in zip(d1, d2))) for (p1, d1), (p2, d2) in zip(x, y))


@dataclass
class CanonicalFormReport:
    q: int
    d: int
    pairs: int
    carry_ok: bool
    mul_matches_oracle: bool
    inverse_ok: bool
    identity_ok: bool
    associativity_ok: bool
    commutativity_ok: bool
    round_trip_ok: bool
    injective_ok: bool

    @property
    def ok(self) -> bool:
        return all([self.carry_ok, self.mul_matches_oracle, self.inverse_ok, self.identity_ok,
                    self.associativity_ok, self.commutativity_ok, self.round_trip_ok,
                    self.injective_ok])

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["ok"] = self.ok
        return out


def small_units(params: Params) -> list[KummerClass]:
    """A few base units: 1, u, ϖ, δ_H - δ_{H_0} for two H, and a mixture."""
    Hs = enumerate_hyperplanes(params, 1)
    H0 = Hs[0]
    one = unit_one(params)
    deltas = [KummerClass(0, DivisorVector.delta(params, 1, H, H0)) for H in Hs[1:3]]
    pi = KummerClass(1, DivisorVector.zero(params, 1, 0))
    return [one, base_unit(params), pi] + deltas + [deltas[0] ** 2 * pi.inverse()]


def canonical_form_report(params: Params) -> CanonicalFormReport:
    """Exhaust j-pairs (and triples for associativity) component by component."""
    Nt = params.Ntilde
    ncomp = params.q - 1
    units = small_units(params)
    u = base_unit(params)
    one = unit_one(params)
    ident = ComponentFunction.identity(params)

    def mk(js, vs):
        return ComponentFunction(params, list(zip(js, vs)))

    # the carry rule: t^Ñ = u t_0, so t^Ñ has canonical form (0, u) everywhere
    carry = ComponentFunction.t(params) ** Nt == ComponentFunction.u(params)
    t0_power = (ComponentFunction.t(params) ** params.N
                * ComponentFunction.constant(params, u ** -(params.q - 1)))
    carry = carry and t0_power.is_identity()

    mul_ok = inv_ok = id_ok = comm_ok = rt_ok = True
    pairs = 0
    vs_list = [units[(k) % len(units)] for k in range(ncomp)]
    ws_list = [units[(k + 2) % len(units)] for k in range(ncomp)]
    for j1, j2 in itertools.product(range(Nt), repeat=2):
        x = mk([(j1 + k) % Nt for k in range(ncomp)], vs_list)
        y = mk([(j2 + 2 * k) % Nt for k in range(ncomp)], ws_list)
        xy = x * y
        pairs += 1
        mul_ok = mul_ok and expand(xy) == expanded_product(expand(x), expand(y)) \
            and xy == decompose(params, {a: (jx + jy, v * w) for a, ((jx, v), (jy, w))
                                         in enumerate(zip(x.comps, y.comps))})
        comm_ok = comm_ok and xy == y * x
        inv_ok = inv_ok and (x * x.inverse()).is_identity()
        id_ok = id_ok and x * ident == x
        rt_ok = rt_ok and from_expanded(params, expand(x)) == x
    assoc = True
    for j1, j2, j3 in itertools.product(range(Nt), repeat=3):
        a = mk([j1] * ncomp, [units[1]] * ncomp)
        b = mk([j2] * ncomp, [units[3]] * ncomp)
        c = mk([j3] * ncomp, [one] * ncomp)
        assoc = assoc and (a * b) * c == a * (b * c)
    seen = {}
    injective = True
    for j in range(Nt):
        for v in units:
            key = expand(mk([j] * ncomp, [v] * ncomp))
            if key in seen:
                injective = False
            seen[key] = (j, v)
    return CanonicalFormReport(params.q, params.d, pairs, carry, mul_ok, inv_ok, id_ok,
                               assoc, comm_ok, rt_ok, injective)
