"""Standard simplices of the building of PGL_{d+1}(K) and their tubes.

For a simplex of type (e_0, ..., e_k) with adapted basis f_0, ..., f_d the
coordinates are

    X_j     = z_j / z_{d_b}          (j in block b, j != d_b)
    X_{d_b} = z_{d_b} / z_{d_{b+1}}  (b < k)
    X_d     = ϖ z_d / z_{d_0}

so that prod_b X_{d_b} = ϖ.  For a representative a of M_i \\ M_{i-1} the
function <z, a>/z_{d_i} is a polynomial P_a in these coordinates.  For the
maximal simplex (all e_i = 1) this is X_j = z_j/z_{j+1}, X_d = ϖ z_d/z_0.

Representative vectors are stored over O_K/ϖ^2, which is where the factor ϖ
in front of the later coordinates becomes visible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .base_rings import Params, RingElem, residue_from_int
from .errors import InvalidType, NotMaximal
from .hyperplanes import canonicalize, enumerate_hyperplanes
from .polynomials import Poly

PRECISION = 2


@dataclass(frozen=True)
class SimplexType:
    type_vector: tuple[int, ...]

    def __post_init__(self):
        tv = tuple(self.type_vector)
        object.__setattr__(self, "type_vector", tv)
        if not tv or any(not isinstance(x, int) or x < 1 for x in tv):
            raise InvalidType(f"type vector {tv} must consist of positive integers")

    @property
    def k(self) -> int:
        return len(self.type_vector) - 1

    @property
    def d(self) -> int:
        return sum(self.type_vector) - 1

    @property
    def d_indices(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.type_vector, initial=-1))[1:]

    def block_of(self, j: int) -> int:
        return next(b for b, dj in enumerate(self.d_indices) if j <= dj)

    def block(self, b: int) -> range:
        start = self.d_indices[b - 1] + 1 if b else 0
        return range(start, self.d_indices[b] + 1)

    @property
    def is_vertex(self) -> bool:
        return self.k == 0

    @property
    def is_maximal(self) -> bool:
        return all(x == 1 for x in self.type_vector)


@dataclass(frozen=True)
class Representative:
    """An element a of R_i: vector over O_K/ϖ^2 plus its residue digits.

    ``digits[j]`` is the residue code of ã_j; for coordinates after block i
    the actual entry is ϖ·ã_j.
    """

    index: int
    vector: tuple[RingElem, ...]
    digits: tuple[int, ...]
    scaled_from: int  # first coordinate carrying the factor ϖ

    @property
    def symbol(self) -> tuple:
        return ("P", self.index, self.digits)

    @property
    def label(self) -> str:
        return p_label(self.index, self.digits, self.scaled_from)


def p_label(index: int, digits, scaled_from: int) -> str:
    parts = [("w" if j >= scaled_from else "") + str(c) for j, c in enumerate(digits)]
    return f"P{index}[{','.join(parts)}]"


@dataclass
class SimplexPresentation:
    params: Params
    stype: SimplexType
    R: list[list[Representative]]
    P: dict = field(default_factory=dict)  # symbol -> Poly over O_K/ϖ^2

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def variables(self) -> list[str]:
        return [f"X{j}" for j in range(self.d + 1)]

    @property
    def relation_indices(self) -> tuple[int, ...]:
        return self.stype.d_indices

    def relation_text(self) -> str:
        return "*".join(f"X{j}" for j in self.relation_indices) + " = ϖ"

    def representatives(self):
        for Ri in self.R:
            yield from Ri

    def to_json(self) -> dict:
        return {
            "type": list(self.stype.type_vector),
            "d_indices": list(self.stype.d_indices),
            "variables": self.variables,
            "relation": self.relation_text(),
            "R": [[{"label": a.label, "vector": [x.to_string() for x in a.vector],
                    "P": self.P[a.symbol].to_string(self.variables)} for a in Ri]
                  for Ri in self.R],
            "R_sizes": [len(Ri) for Ri in self.R],
        }

    def to_text(self) -> str:
        lines = [f"type {self.stype.type_vector}, d_i = {self.stype.d_indices}",
                 f"relation: {self.relation_text()}"]
        for i, Ri in enumerate(self.R):
            lines.append(f"R_{i} ({len(Ri)} elements):")
            for a in Ri:
                lines.append(f"  {a.label}: P = {self.P[a.symbol].to_string(self.variables)}")
        return "\n".join(lines)


def representative_count(params: Params, stype: SimplexType, i: int) -> int:
    """|R_i| = q^{d+1-e_i} (q^{e_i} - 1)/(q - 1)."""
    q, e_i = params.q, stype.type_vector[i]
    return q ** (params.d + 1 - e_i) * (q ** e_i - 1) // (q - 1)


def _representatives(params: Params, stype: SimplexType, i: int) -> list[Representative]:
    ring = params.ring(PRECISION)
    F = ring.residue_field
    pi = ring.uniformizer
    teich = {a.to_int(): ring.teichmuller_lift(a) for a in F.elements()}
    codes = sorted(teich)
    blk = stype.block(i)
    before, after = blk.start, params.d - blk.stop + 1
    # nonzero vectors of F^{e_i} normalised at their first nonzero entry
    block_vecs = [v for v in itertools.product(codes, repeat=len(blk))
                  if any(v) and v[next(t for t, c in enumerate(v) if c)] == 1]
    out = []
    for pre in itertools.product(codes, repeat=before):
        for mid in block_vecs:
            for post in itertools.product(codes, repeat=after):
                digits = pre + mid + post
                vec = tuple(teich[c] for c in pre + mid) + tuple(pi * teich[c] for c in post)
                out.append(Representative(i, vec, digits, blk.stop))
    return out


def _p_polynomial(params: Params, stype: SimplexType, a: Representative) -> Poly:
    ring = params.ring(PRECISION)
    teich = {x.to_int(): ring.teichmuller_lift(x) for x in ring.residue_field.elements()}
    nv = params.d + 1
    dind = stype.d_indices
    k = stype.k
    i = a.index
    terms: dict = {}
    for j, code in enumerate(a.digits):
        if not code:
            continue
        b = stype.block_of(j)
        e = [0] * nv
        if j != dind[b]:
            e[j] += 1
        if b <= i:
            ms = range(b, i)
        else:
            ms = [m for m in range(k + 1) if not i <= m <= b - 1]
        for m in ms:
            e[dind[m]] += 1
        e = tuple(e)
        terms[e] = teich[code] + terms[e] if e in terms else teich[code]
    return Poly(ring, nv, terms)


def standard_simplex(params: Params, type_vector) -> SimplexPresentation:
    stype = SimplexType(tuple(type_vector))
    if stype.d != params.d:
        raise InvalidType(f"type {stype.type_vector} sums to {stype.d + 1}, expected {params.d + 1}")
    R = [_representatives(params, stype, i) for i in range(stype.k + 1)]
    pres = SimplexPresentation(params, stype, R)
    for a in pres.representatives():
        pres.P[a.symbol] = _p_polynomial(params, stype, a)
    return pres


def vertex(params: Params) -> SimplexPresentation:
    return standard_simplex(params, (params.d + 1,))


def maximal_simplex(params: Params) -> SimplexPresentation:
    return standard_simplex(params, (1,) * (params.d + 1))


def vertex_polynomial(pres: SimplexPresentation) -> Poly:
    """prod_{a in R_0} P_a at the vertex, in the variables X_0..X_{d-1}."""
    if not pres.stype.is_vertex:
        raise InvalidType("not a vertex")
    d = pres.d
    ring = pres.params.ring(PRECISION)
    acc = Poly.one(ring, d)
    for a in pres.R[0]:
        P = pres.P[a.symbol]
        acc = acc * Poly(ring, d, {e[:d]: c for e, c in P.terms.items()})
    return acc


def vertex_reps_match_h1(pres: SimplexPresentation) -> bool:
    """R_0 at the vertex reduces bijectively onto H_1."""
    params = pres.params
    F = params.residue_field
    reduced = sorted(canonicalize([x.ring.reduce(x, 1) for x in a.vector], F) for a in pres.R[0])
    return reduced == enumerate_hyperplanes(params, 1)


def maximal_p_closed_form(pres: SimplexPresentation, a: Representative) -> Poly:
    """1 + sum_k ã_{i-k} x_{i-1} ... x_{i-k} with cyclic indices."""
    ring = pres.params.ring(PRECISION)
    d = pres.d
    i = a.index
    out = Poly.one(ring, d + 1)
    for k in range(1, d + 1):
        j = (i - k) % (d + 1)
        code = a.digits[j]
        if not code:
            continue
        e = [0] * (d + 1)
        for m in range(1, k + 1):
            e[(i - m) % (d + 1)] += 1
        lift = ring.teichmuller_lift(residue_from_int(ring.residue_field, code))
        out = out + Poly(ring, d + 1, {tuple(e): lift})
    return out


def evaluate_ratio(pres: SimplexPresentation, a: Representative, z) -> RingElem | None:
    """<z, a>/z_{d_i} computed directly, for checking P_a numerically.

    ``z`` is a point over some ring where z_{d_i} is a unit; returns None
    otherwise.
    """
    i = a.index
    zi = z[pres.stype.d_indices[i]]
    if not zi.is_unit():
        return None
    return sum((x * y for x, y in zip(a.vector, z)), zi.ring.zero) * zi.inverse()


def xpid_presentation(pres: SimplexPresentation) -> dict:
    """Generators and relations y_i^q = u_i x_{d-i} y_{i+1} of the torsion cover."""
    if not pres.stype.is_maximal:
        raise NotMaximal(f"type {pres.stype.type_vector} is not maximal")
    from .simplex_units import ui_family, Vtilde, SymbolUnit

    d, q = pres.d, pres.params.q
    u = ui_family(pres)
    relations = []
    for i in range(d + 1):
        rhs = u[i] * SymbolUnit.x(d - i, d)
        relations.append({"lhs": f"y{i}^{q}", "i": i, "next": (i + 1) % (d + 1),
                          "unit": u[i], "x_index": d - i,
                          "text": f"y{i}^{q} = u{i}*x{d - i}*y{(i + 1) % (d + 1)}",
                          "rhs_unit": rhs})
    coef, exponent = composite_relation(pres, u)
    expected = SymbolUnit.pi_power(1, d) * Vtilde(u, q)
    return {
        "generators": [f"y{i}" for i in range(d + 1)],
        "relations": relations,
        "composite": {"text": f"y1^{q ** (d + 1)} = ϖ*Vtilde(u)*y1",
                      "exponent": exponent, "coefficient": coef,
                      "matches_pi_Vtilde": coef == expected},
    }


def composite_relation(pres: SimplexPresentation, u) -> tuple:
    """Eliminate y_2, ..., y_d, y_0 from the relations, starting at y_1.

    Returns (c, e) with y_1^e = c * y_1 after substitution; c is a SymbolUnit.
    """
    from .simplex_units import SymbolUnit

    d, q = pres.d, pres.params.q
    coef, power, idx = SymbolUnit.one(d), 1, 1 % (d + 1)
    # invariant: y_1^power = coef * y_idx
    for _ in range(d + 1):
        coef = coef ** q * u[idx] * SymbolUnit.x(d - idx, d)
        power *= q
        idx = (idx + 1) % (d + 1)
    return coef, power
