"""The acceptance suite, shared by the CLI and the test-suite.

Each criterion returns a Criterion with a boolean and a small JSON-ready
detail dict.  Grid points are (p, f, d) with e = 1.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .base_rings import Params
from .building import maximal_simplex
from .cover_algebra import (component_values_H, component_values_inf,
                            conjugate_product_norm, expected_norm_t, make_cover_ring,
                            minimum_is_unique, norm, random_element, v_H, v_inf)
from .divisors import (DivisorVector, canonical_generator, invariant_class_enumeration,
                       is_invariant, kummer_class_sigma1, pi0, pushforward)
from .hyperplanes import enumerate_hyperplanes, hyperplane_count, random_gl
from .idempotents import canonical_form_report, idempotent_check
from .simplex_units import (equivalent, lemeqsigsig_report, product_is_one,
                            random_datum, random_perturbation, solve_witness, twist,
                            ui_family, verify_global_section, vertex_consistency)

GRID = ((2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 2))
LEMMA_GRID = ((2, 1, 1), (3, 1, 1), (2, 1, 2), (3, 1, 2))
CROSS_CHECK_GRID = ((2, 1, 1), (3, 1, 1))


def grid_params(points=GRID):
    return [Params(p, f, 1, d) for p, f, d in points]


def _tag(P: Params) -> str:
    return f"q={P.q},d={P.d}"


@dataclass
class Criterion:
    number: int
    title: str
    ok: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] criterion {self.number}: {self.title}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "details": self.details}


def _levels(P: Params):
    return (1, 2, 3) if P.d == 1 else (1, 2)


def criterion_1(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        for n in _levels(P):
            formula = P.Ntilde * P.q ** ((n - 1) * P.d)
            got = len(enumerate_hyperplanes(P, n))
            good = got == formula == hyperplane_count(P, n)
            ok = ok and good
            details[f"{_tag(P)},n={n}"] = [got, formula]
    return Criterion(1, "cardinality of H_n", ok, details)


def criterion_2(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        q, d, N, Nt = P.q, P.d, P.N, P.Ntilde
        for n in _levels(P)[:-1]:
            # oracle: a fibre has q^d points, so q^{n+d} must agree with q^{n-1}
            oracle = (q ** (n + d) - q ** (n - 1)) % N == 0
            top = canonical_generator(P, n + 1)
            mod_nt = pushforward(top) == canonical_generator(P, n)
            top_n = DivisorVector.constant(P, n + 1, N, (q - 1) * q ** n)
            low_n = DivisorVector.constant(P, n, N, (q - 1) * q ** (n - 1))
            mod_n = pushforward(top_n) == low_n
            good = oracle and mod_nt and mod_n
            ok = ok and good
            details[f"{_tag(P)},n={n}"] = {"mod_Ntilde": mod_nt, "q-1_powers_mod_N": mod_n,
                                           "integer_oracle": oracle}
    return Criterion(2, "pushforward compatibility of the canonical generators", ok, details)


def criterion_3(seed=0, count=100, n_max=2) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        cls = kummer_class_sigma1(P, 1)
        gs = [random_gl(P, cls.level, seed * 100003 + k) for k in range(count)]
        inv = is_invariant(cls, gs)
        rep = invariant_class_enumeration(P, n_max)
        ok = ok and inv and rep.ok
        details[_tag(P)] = {"invariant": inv, "solutions": len(rep.solutions),
                            "generator": list(rep.generator), "unique": rep.ok}
    return Criterion(3, "invariance and uniqueness of the class", ok, details)


def criterion_4(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        for n in (1, 2):
            cls = kummer_class_sigma1(P, n)
            c, k = pi0(cls, "C"), pi0(cls, "Kbreve")
            good = c == P.q - 1 and k == 1
            ok = ok and good
            details[f"{_tag(P)},n={n}"] = {"C": c, "Kbreve": k}
    return Criterion(4, "connected components", ok, details)


def criterion_5(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        pres = maximal_simplex(P)
        prod = product_is_one(ui_family(pres))
        glob = verify_global_section(pres)
        ok = ok and prod and glob
        details[_tag(P)] = {"product_is_one": prod, "global_section": glob}
    return Criterion(5, "product of the u_i and the global section", ok, details)


def criterion_6(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params(LEMMA_GRID):
        rep = lemeqsigsig_report(maximal_simplex(P))
        ok = ok and rep.ok
        details[_tag(P)] = {"ok": rep.ok,
                            "x_exponents_mod_N": {f"x{j}": v % P.N for j, v in rep.x_exponents.items()},
                            "expected": {f"x{j}": v for j, v in rep.x_expected.items()}}
    return Criterion(6, "generic fibre class congruence", ok, details)


def criterion_7(seed=0) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        res = vertex_consistency(maximal_simplex(P))
        ok = ok and res["ok"]
        details[_tag(P)] = {"ok": res["ok"], "pi_exponent": res["pi_exponent"]}
    return Criterion(7, "restriction to the vertex", ok, details)


def criterion_8(seed=0, count=200) -> Criterion:
    details, ok = {}, True
    for P in grid_params():
        pres = maximal_simplex(P)
        rng = random.Random(seed)
        twists = perturbed = 0
        for _ in range(count):
            d1, w = random_datum(pres, rng), random_datum(pres, rng)
            d2 = twist(d1, w, P.q)
            wit = solve_witness(d1, d2, P.q)
            if wit is not None and twist(d1, wit, P.q) == d2:
                twists += 1
        for _ in range(count):
            d1 = random_datum(pres, rng)
            if not equivalent(d1, random_perturbation(pres, d1, rng), P.q):
                perturbed += 1
        good = twists == count and perturbed == count
        ok = ok and good
        details[_tag(P)] = {"twists_equivalent": twists, "perturbations_inequivalent": perturbed}
    return Criterion(8, "equivalence decision", ok, details)


def _valuation_checks(P: Params, count: int, rng: random.Random) -> dict:
    R = make_cover_ring(P)
    mult_h = mult_inf = unique = 0
    for _ in range(count):
        f = random_element(R, rng, density=0.4)
        g = random_element(R, rng, density=0.4)
        fg = f * g
        h = rng.randrange(R.nlins)
        if fg.is_zero():
            continue
        if v_H(fg, h) == v_H(f, h) + v_H(g, h):
            mult_h += 1
        if v_inf(fg) == v_inf(f) + v_inf(g):
            mult_inf += 1
        if minimum_is_unique(component_values_H(f, h)) and minimum_is_unique(component_values_inf(f)):
            unique += 1
    return {"v_H_multiplicative": mult_h, "v_inf_multiplicative": mult_inf,
            "unique_minimum": unique}


def criterion_9(seed=0, count=500) -> Criterion:
    details, ok = {}, True
    cross = {Params(p, f, 1, d) for p, f, d in CROSS_CHECK_GRID}
    for P in grid_params():
        R = make_cover_ring(P)
        rng = random.Random(seed)
        entry = {"norm_t": norm(R.t) == expected_norm_t(R)}
        if P in cross:
            agree = 0
            for _ in range(10):
                f = random_element(R, rng, density=0.6)
                cp = conjugate_product_norm(f)
                agree += cp.is_base() and cp.comps[0] == norm(f)
            entry["det_equals_conjugate_product"] = agree == 10
        vals = _valuation_checks(P, count, rng)
        entry.update(vals)
        good = all(v is True or v == count for v in entry.values())
        ok = ok and good
        details[_tag(P)] = entry
    return Criterion(9, "norm and valuations on the cover ring", ok, details)


def criterion_10(seed=0) -> Criterion:
    idem = {q: idempotent_check(q) for q in (2, 3, 4, 5)}
    rep = canonical_form_report(Params(3, 1, 1, 1))
    ok = all(idem.values()) and rep.ok
    return Criterion(10, "idempotents and canonical forms", ok,
                     {"idempotents": {str(q): v for q, v in idem.items()},
                      "canonical_forms": rep.to_json()})


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10}


def run_criterion(number: int, seed: int = 0) -> Criterion:
    start = time.perf_counter()
    res = CRITERIA[number](seed=seed)
    res.seconds = time.perf_counter() - start
    return res


def run_acceptance(seed: int = 0, numbers=None) -> list[Criterion]:
    return [run_criterion(k, seed) for k in (numbers or sorted(CRITERIA))]


def acceptance_ok(results) -> bool:
    return all(r.ok for r in results)
