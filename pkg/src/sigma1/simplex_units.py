"""Formal units on the tube over the maximal simplex.

A unit is tracked as ϖ^k times a product of the coordinates x_0..x_d and the
polynomials P_a (a in R_i), modulo 1-units and roots of unity.  Symbols are

    ("x", j)             the coordinate x_j
    ("P", i, digits)     P_a for a in R_i, digits as in building.Representative

The relation x_0 x_1 ... x_d = ϖ is built into equality: x_d is eliminated
before comparing.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .base_rings import Params, residue_from_int
from .building import SimplexPresentation, p_label
from .divisors import DivisorVector
from .errors import NotMaximal
from .hyperplanes import canonicalize, enumerate_hyperplanes


def _is_trivial(s) -> bool:
    # P_a for a = e_i is the constant 1
    return s[0] == "P" and all(c == (j == s[1]) for j, c in enumerate(s[2]))


def _symbol_key(s):
    return (0, s[1]) if s[0] == "x" else (1, s[1], s[2])


class SymbolUnit:
    __slots__ = ("d", "pi", "exps", "_canon")

    def __init__(self, d: int, pi: int = 0, exps: dict | None = None):
        self.d = d
        self.pi = int(pi)
        self.exps = {s: int(e) for s, e in (exps or {}).items() if e}
        self._canon = None

    @classmethod
    def one(cls, d):
        return cls(d)

    @classmethod
    def x(cls, j, d):
        return cls(d, 0, {("x", j % (d + 1)): 1})

    @classmethod
    def pi_power(cls, k, d):
        return cls(d, k)

    @classmethod
    def symbol(cls, s, d, k=1):
        return cls(d, 0, {s: k})

    def __mul__(self, other: "SymbolUnit") -> "SymbolUnit":
        out = dict(self.exps)
        for s, e in other.exps.items():
            out[s] = out.get(s, 0) + e
        return SymbolUnit(self.d, self.pi + other.pi, out)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int) -> "SymbolUnit":
        return SymbolUnit(self.d, k * self.pi, {s: k * e for s, e in self.exps.items()})

    def inverse(self) -> "SymbolUnit":
        return self ** -1

    def canonical(self) -> tuple[int, tuple]:
        """(ϖ-exponent, sorted exponents) after substituting x_d = ϖ/(x_0...x_{d-1})."""
        if self._canon is None:
            d = self.d
            exps = dict(self.exps)
            pi = self.pi
            e = exps.pop(("x", d), 0)
            if e:
                pi += e
                for j in range(d):
                    exps[("x", j)] = exps.get(("x", j), 0) - e
            items = tuple(sorted(((s, v) for s, v in exps.items() if v and not _is_trivial(s)),
                                 key=lambda t: _symbol_key(t[0])))
            self._canon = (pi, items)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, SymbolUnit):
            return NotImplemented
        return self.d == other.d and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def is_identity(self) -> bool:
        pi, items = self.canonical()
        return pi == 0 and not items

    def exponent(self, s) -> int:
        """Exponent of s in the canonical form (x_d never appears there)."""
        return dict(self.canonical()[1]).get(s, 0)

    def pi_exponent(self) -> int:
        return self.canonical()[0]

    def residues(self, N: int) -> tuple[int, dict]:
        pi, items = self.canonical()
        return pi % N, {s: e % N for s, e in items if e % N}

    def congruent(self, other: "SymbolUnit", N: int) -> bool:
        pi, res = (self / other).residues(N)
        return pi == 0 and not res

    def is_nth_power(self, N: int) -> bool:
        pi, res = self.residues(N)
        return pi == 0 and not res

    def root(self, N: int) -> "SymbolUnit":
        """The exact N-th root, assuming is_nth_power(N)."""
        pi, items = self.canonical()
        assert pi % N == 0 and all(e % N == 0 for _, e in items)
        return SymbolUnit(self.d, pi // N, {s: e // N for s, e in items})

    def symbols(self) -> set:
        return set(self.exps)

    def label(self, s) -> str:
        if s[0] == "x":
            return f"x{s[1]}"
        return p_label(s[1], s[2], s[1] + 1)

    def to_json(self, N: int | None = None) -> dict:
        pi, items = self.canonical()
        out = {"pi_exponent": str(pi),
               "exponents": {self.label(s): str(e) for s, e in items}}
        if N:
            rpi, res = self.residues(N)
            out["residues_mod_N"] = {"modulus": str(N), "pi_exponent": str(rpi),
                                     "exponents": {self.label(s): str(e) for s, e in
                                                   sorted(res.items(), key=lambda t: _symbol_key(t[0]))}}
        return out

    def __repr__(self):
        pi, items = self.canonical()
        parts = ([f"ϖ^{pi}"] if pi else []) + [f"{self.label(s)}^{e}" for s, e in items]
        return " ".join(parts) or "1"


@dataclass(frozen=True)
class RaynaudDatum:
    units: tuple

    def __post_init__(self):
        object.__setattr__(self, "units", tuple(self.units))
        if len(self.units) != self.units[0].d + 1:
            raise ValueError(f"a datum needs {self.units[0].d + 1} units, got {len(self.units)}")

    @property
    def d(self) -> int:
        return self.units[0].d

    def __getitem__(self, i):
        return self.units[i % len(self.units)]

    def __len__(self):
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def __mul__(self, other: "RaynaudDatum") -> "RaynaudDatum":
        return RaynaudDatum(tuple(a * b for a, b in zip(self.units, other.units)))

    def __truediv__(self, other: "RaynaudDatum") -> "RaynaudDatum":
        return RaynaudDatum(tuple(a / b for a, b in zip(self.units, other.units)))

    def __eq__(self, other):
        return isinstance(other, RaynaudDatum) and self.units == other.units

    def __hash__(self):
        return hash(self.units)

    def to_json(self, N=None):
        return [u.to_json(N) for u in self.units]


def identity_datum(d: int) -> RaynaudDatum:
    return RaynaudDatum(tuple(SymbolUnit.one(d) for _ in range(d + 1)))


def _require_maximal(pres: SimplexPresentation):
    if not pres.stype.is_maximal:
        raise NotMaximal(f"type {pres.stype.type_vector} is not maximal")


def p_product(pres: SimplexPresentation, i: int, k: int = 1) -> SymbolUnit:
    """prod_{a in R_i} P_a^k, index taken mod d+1."""
    d = pres.d
    Ri = pres.R[i % (d + 1)]
    return SymbolUnit(d, 0, {a.symbol: k for a in Ri})


def ui_family(pres: SimplexPresentation) -> RaynaudDatum:
    """u_i = prod_{R_{d-1-i}} P / prod_{R_{d-i}} P (indices mod d+1)."""
    _require_maximal(pres)
    d = pres.d
    return RaynaudDatum(tuple(p_product(pres, d - 1 - i) / p_product(pres, d - i)
                              for i in range(d + 1)))


def V(datum: RaynaudDatum, q: int) -> SymbolUnit:
    """v_0 v_d^q v_{d-1}^{q^2} ... v_1^{q^d}."""
    d = datum.d
    out = datum[0]
    for i in range(1, d + 1):
        out = out * datum[i] ** (q ** (d + 1 - i))
    return out


def x_twist(d: int, q: int) -> SymbolUnit:
    """x_0^{q-1} x_1^{q^2-1} ... x_{d-1}^{q^d-1}."""
    return SymbolUnit(d, 0, {("x", j): q ** (j + 1) - 1 for j in range(d)})


def Vtilde(datum: RaynaudDatum, q: int) -> SymbolUnit:
    return x_twist(datum.d, q) * V(datum, q)


def twist(datum: RaynaudDatum, w: RaynaudDatum, q: int) -> RaynaudDatum:
    """v'_i = v_i w_i^q / w_{i+1}."""
    d = datum.d
    return RaynaudDatum(tuple(datum[i] * w[i] ** q / w[i + 1] for i in range(d + 1)))


def solve_witness(d1: RaynaudDatum, d2: RaynaudDatum, q: int) -> RaynaudDatum | None:
    """w with d2 = twist(d1, w), or None when the data are inequivalent."""
    d = d1.d
    N = q ** (d + 1) - 1
    delta = d2 / d1
    Vd = V(delta, q)
    if not Vd.is_nth_power(N):
        return None
    w = [None] * (d + 1)
    w[1 % (d + 1)] = Vd.root(N)
    for i in range(1, d + 1):
        w[(i + 1) % (d + 1)] = w[i] ** q / delta[i]
    w = RaynaudDatum(tuple(w))
    # the remaining equation delta_0 = w_0^q / w_1 must close the loop
    if twist(d1, w, q) != d2:
        return None
    return w


def equivalent(d1: RaynaudDatum, d2: RaynaudDatum, q: int) -> bool:
    return solve_witness(d1, d2, q) is not None


# -- the generic fibre class -----------------------------------------------------

def generic_fiber_parametrization(pres: SimplexPresentation):
    """Yield (b, c_digits, vector) for the bijection ⨿_i R_i × F^i -> P^d(O/ϖ^2)."""
    _require_maximal(pres)
    params = pres.params
    ring = params.ring(2)
    F = ring.residue_field
    pi = ring.uniformizer
    codes = sorted(a.to_int() for a in F.elements())
    for Ri in pres.R:
        for b in Ri:
            i = b.index
            for c in itertools.product(codes, repeat=i):
                vec = list(b.vector)
                for j, code in enumerate(c):
                    vec[j] = vec[j] + pi * ring.teichmuller_lift(residue_from_int(F, code))
                yield b, c, tuple(vec)


def check_bijection(pres: SimplexPresentation) -> bool:
    params = pres.params
    ring = params.ring(2)
    images = [canonicalize(v, ring) for _, _, v in generic_fiber_parametrization(pres)]
    return sorted(images) == enumerate_hyperplanes(params, 2)


def max_unit_index(vector) -> int:
    return max(j for j, x in enumerate(vector) if x.is_unit())


def genericfiber_class(pres: SimplexPresentation) -> SymbolUnit:
    """ϖ times prod_a ((x_{i(a)}...x_{d-1}) P_b)^{q(q-1)} over P^d(O/ϖ^2)."""
    d, q = pres.d, pres.params.q
    k = q * (q - 1)
    exps: dict = {}
    for b, _, vec in generic_fiber_parametrization(pres):
        i = max_unit_index(vec)
        assert i == b.index
        for j in range(i, d):
            exps[("x", j)] = exps.get(("x", j), 0) + k
        exps[b.symbol] = exps.get(b.symbol, 0) + k
    return SymbolUnit(d, 1, exps)


@dataclass
class LemmaReport:
    ok: bool
    N: int
    aggregated: SymbolUnit
    target: SymbolUnit
    x_exponents: dict
    x_expected: dict
    difference_residues: dict

    def to_json(self) -> dict:
        return {"ok": self.ok, "N": str(self.N),
                "aggregated": self.aggregated.to_json(self.N),
                "target": self.target.to_json(self.N),
                "x_exponents": {f"x{j}": str(v) for j, v in self.x_exponents.items()},
                "x_expected_mod_N": {f"x{j}": str(v) for j, v in self.x_expected.items()},
                "difference_residues": {k: str(v) for k, v in self.difference_residues.items()}}


def lemeqsigsig_report(pres: SimplexPresentation) -> LemmaReport:
    _require_maximal(pres)
    params = pres.params
    d, q, N = pres.d, params.q, params.N
    agg = genericfiber_class(pres)
    target = SymbolUnit.pi_power(1, d) * Vtilde(ui_family(pres), q)
    xs = {j: agg.exponent(("x", j)) for j in range(d)}
    expected = {j: (q ** (j + 1) - 1) % N for j in range(d)}
    diff_pi, diff = (agg / target).residues(N)
    residues = {agg.label(s): e for s, e in diff.items()}
    if diff_pi:
        residues["pi"] = diff_pi
    ok = (not residues) and all(xs[j] % N == expected[j] for j in range(d))
    return LemmaReport(ok, N, agg, target, xs, expected, residues)


def verify_lemeqsigsig(pres: SimplexPresentation) -> bool:
    return lemeqsigsig_report(pres).ok


# -- restriction to the vertex ------------------------------------------------------

def restrict_to_vertex(s: SymbolUnit, params: Params) -> tuple[int, DivisorVector]:
    """Divisor on H_1 and ϖ-exponent of a symbol unit, viewed near the vertex."""
    d = params.d
    F = params.residue_field
    idx_classes = enumerate_hyperplanes(params, 1)

    def e(j):
        v = [F.zero] * (d + 1)
        v[j % (d + 1)] = F.one
        return canonicalize(v, F)

    coeffs: dict = {}

    def bump(H, c):
        coeffs[H] = coeffs.get(H, 0) + c

    pi = s.pi
    for sym, k in s.exps.items():
        if sym[0] == "x":
            j = sym[1]
            bump(e(j), k)
            bump(e(j + 1), -k)
            if j == d:
                pi += k
        else:
            _, i, digits = sym
            abar = [residue_from_int(F, c) if j <= i else F.zero for j, c in enumerate(digits)]
            bump(canonicalize(abar, F), k)
            bump(e(i), -k)
    assert all(H in set(idx_classes) for H in coeffs)
    return pi, DivisorVector.from_map(params, 1, 0, coeffs)


def vertex_class_target(params: Params) -> tuple[int, DivisorVector]:
    """ϖ^1 and (q-1) at every class of H_1, read mod N."""
    return 1, DivisorVector.constant(params, 1, params.N, params.q - 1)


def vertex_consistency(pres: SimplexPresentation) -> dict:
    params = pres.params
    N = params.N
    unit = SymbolUnit.pi_power(1, pres.d) * Vtilde(ui_family(pres), params.q)
    pi, vec = restrict_to_vertex(unit, params)
    tpi, target = vertex_class_target(params)
    got = vec.with_modulus(N)
    ok = (pi - tpi) % N == 0 and got == target
    return {"ok": ok, "pi_exponent": pi % N, "restricted": got, "target": target}


# -- the global section -------------------------------------------------------------

def global_section_unit(datum: RaynaudDatum) -> SymbolUnit:
    d = datum.d
    out = SymbolUnit.one(d)
    for i in range(d + 1):
        out = out * datum[i] * SymbolUnit.x(d - i, d)
    return out


def verify_global_section(pres: SimplexPresentation, datum: RaynaudDatum | None = None) -> bool:
    """prod_i u_i x_{d-i} = ϖ, so that Z^q = ϖ Z for Z = y_0 ... y_d."""
    datum = ui_family(pres) if datum is None else datum
    return global_section_unit(datum) == SymbolUnit.pi_power(1, pres.d)


def product_is_one(datum: RaynaudDatum) -> bool:
    out = SymbolUnit.one(datum.d)
    for u in datum:
        out = out * u
    return out.is_identity()


# -- random data for the equivalence tests ------------------------------------------

def all_symbols(pres: SimplexPresentation) -> list:
    d = pres.d
    return [("x", j) for j in range(d + 1)] + [a.symbol for a in pres.representatives()
                                               if not _is_trivial(a.symbol)]


def random_unit(pres: SimplexPresentation, rng: random.Random, spread: int = 3,
                size: int = 4) -> SymbolUnit:
    syms = all_symbols(pres)
    exps = {}
    for s in rng.sample(syms, min(size, len(syms))):
        exps[s] = rng.randint(-spread, spread)
    return SymbolUnit(pres.d, rng.randint(-spread, spread), exps)


def random_datum(pres: SimplexPresentation, rng: random.Random) -> RaynaudDatum:
    return RaynaudDatum(tuple(random_unit(pres, rng) for _ in range(pres.d + 1)))


def random_perturbation(pres: SimplexPresentation, datum: RaynaudDatum,
                        rng: random.Random) -> RaynaudDatum:
    """Multiply one v_i by a single symbol (or ϖ) to a power in [1, N-1]."""
    N = pres.params.N
    syms = all_symbols(pres) + ["pi"]
    s = rng.choice(syms)
    k = rng.randint(1, N - 1)
    bump = SymbolUnit.pi_power(k, pres.d) if s == "pi" else SymbolUnit.symbol(s, pres.d, k)
    i = rng.randrange(pres.d + 1)
    units = list(datum.units)
    units[i] = units[i] * bump
    return RaynaudDatum(tuple(units))
