"""Hyperplanes mod ϖ^n: the finite sets P^d(O_K/ϖ^n) and the GL action.

A hyperplane is stored through the coefficient vector a of its linear form
l_a(z) = a_0 z_0 + ... + a_d z_d, normalised so that the first unit entry
is 1.
"""
from __future__ import annotations

import functools
import itertools
import random

from .base_rings import Params, RingElem, ResidueRing
from .errors import LevelMismatch, NotUnimodular, SingularMatrix


class HyperplaneClass:
    """A point of P^d(O_K/ϖ^n), i.e. a unimodular vector up to units."""

    __slots__ = ("ring", "vector", "_key")

    def __init__(self, ring: ResidueRing, vector: tuple[RingElem, ...]):
        self.ring = ring
        self.vector = tuple(vector)
        self._key = tuple(x.c for x in self.vector)

    @property
    def level(self) -> int:
        return self.ring.n

    @property
    def d(self) -> int:
        return len(self.vector) - 1

    @property
    def lead(self) -> int:
        return next(i for i, x in enumerate(self.vector) if x.is_unit())

    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, HyperplaneClass):
            return NotImplemented
        return self.ring is other.ring and self._key == other._key

    def __hash__(self):
        return hash((id(self.ring), self._key))

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        return "[" + ",".join(x.to_string() for x in self.vector) + "]"

    def to_json(self) -> list[str]:
        return [x.to_string() for x in self.vector]


def canonicalize(vector, ring: ResidueRing | None = None) -> HyperplaneClass:
    """Scale a unimodular vector so its first unit entry becomes 1."""
    vector = list(vector)
    if ring is None:
        ring = vector[0].ring
    vector = [ring(x) for x in vector]
    for x in vector:
        if x.is_unit():
            s = x.inverse()
            return HyperplaneClass(ring, tuple(s * y for y in vector))
    raise NotUnimodular(f"{[x.to_string() for x in vector]} has no unit entry")


def hyperplane_count(params: Params, n: int) -> int:
    return params.Ntilde * params.q ** ((n - 1) * params.d)


@functools.lru_cache(maxsize=None)
def _enumerate(p, f, e, d, n) -> tuple[HyperplaneClass, ...]:
    ring = Params(p, f, e, d).ring(n)
    elems = ring.elements()
    nonunits = [x for x in elems if not x.is_unit()]
    out = []
    for lead in range(d + 1):
        for before in itertools.product(nonunits, repeat=lead):
            for after in itertools.product(elems, repeat=d - lead):
                out.append(HyperplaneClass(ring, before + (ring.one,) + after))
    out.sort()
    return tuple(out)


def enumerate_hyperplanes(params: Params, n: int) -> list[HyperplaneClass]:
    """Sorted list of all classes in P^d(O_K/ϖ^n)."""
    return list(_enumerate(params.p, params.f, params.e, params.d, n))


@functools.lru_cache(maxsize=None)
def _index(p, f, e, d, n) -> dict:
    return {H: i for i, H in enumerate(_enumerate(p, f, e, d, n))}


def hyperplane_index(params: Params, n: int) -> dict:
    """Map class -> position in enumerate_hyperplanes(params, n)."""
    return _index(params.p, params.f, params.e, params.d, n)


def reduce_class(H: HyperplaneClass, level: int | None = None) -> HyperplaneClass:
    level = H.level - 1 if level is None else level
    if not 1 <= level <= H.level:
        raise LevelMismatch(f"cannot reduce a level-{H.level} class to level {level}")
    if level == H.level:
        return H
    ring = H.ring
    target = ring.reduce(ring.one, level).ring
    return HyperplaneClass(target, tuple(ring.reduce(x, level) for x in H.vector))


def fibers(H: HyperplaneClass, params: Params) -> list[HyperplaneClass]:
    """All level-(n+1) classes reducing to H; there are q^d of them."""
    n = H.level
    up = params.ring(n + 1)
    F = up.residue_field
    pin = up.uniformizer ** n
    kernel = [pin * up.teichmuller_lift(c) for c in F.elements()]
    lead = H.lead
    choices = []
    for i, x in enumerate(H.vector):
        base = up.lift(x)
        choices.append([base] if i == lead else [base + k for k in kernel])
    return sorted(HyperplaneClass(up, v) for v in itertools.product(*choices))


# -- matrices over R_n ----------------------------------------------------------

def identity_matrix(ring: ResidueRing, size: int):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(size)) for i in range(size))


def mat_mul(a, b):
    ring = a[0][0].ring
    size = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(size)), ring.zero)
                       for j in range(size)) for i in range(size))


def mat_vec(a, v):
    ring = a[0][0].ring
    return tuple(sum((a[i][k] * v[k] for k in range(len(v))), ring.zero) for i in range(len(a)))


def transpose(a):
    return tuple(zip(*a))


def det(a) -> RingElem:
    ring = a[0][0].ring
    size = len(a)
    total = ring.zero
    for perm in itertools.permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ring.one
        for i in range(size):
            term = term * a[i][perm[i]]
        total = total + term if sign > 0 else total - term
    return total


def mat_inv(a):
    """Inverse over a local ring by Gauss-Jordan with unit pivots."""
    ring = a[0][0].ring
    size = len(a)
    rows = [list(a[i]) + [ring.one if i == j else ring.zero for j in range(size)]
            for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col].is_unit()), None)
        if piv is None:
            raise SingularMatrix("determinant is not a unit")
        rows[col], rows[piv] = rows[piv], rows[col]
        s = rows[col][col].inverse()
        rows[col] = [s * x for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                fac = rows[r][col]
                rows[r] = [x - fac * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[size:]) for row in rows)


def reduce_matrix(g, level: int):
    ring = g[0][0].ring
    return tuple(tuple(ring.reduce(x, level) for x in row) for row in g)


def gl_act(g, H: HyperplaneClass) -> HyperplaneClass:
    """Image of the hyperplane ker(l_a) under z -> g z, i.e. a -> (g^-1)^T a."""
    if g[0][0].ring is not H.ring:
        raise LevelMismatch("matrix and hyperplane live at different levels")
    if not det(g).is_unit():
        raise SingularMatrix("determinant is not a unit")
    return canonicalize(mat_vec(transpose(mat_inv(g)), H.vector), H.ring)


def random_gl(params: Params, n: int, seed: int):
    """A matrix of GL_{d+1}(O_K/ϖ^n), deterministic in the seed."""
    rng = random.Random(seed)
    ring = params.ring(n)
    elems = ring.elements()
    size = params.d + 1
    while True:
        g = tuple(tuple(rng.choice(elems) for _ in range(size)) for _ in range(size))
        if det(g).is_unit():
            return g


def permutation_matrix(ring: ResidueRing, perm):
    size = len(perm)
    return tuple(tuple(ring.one if perm[j] == i else ring.zero for j in range(size))
                 for i in range(size))
