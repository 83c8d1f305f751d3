import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sigma1.base_rings import Params
from sigma1.cyclotomic import make_cyclotomic
from sigma1.divisors import DivisorVector, KummerClass
from sigma1.errors import NotAUnit
from sigma1.hyperplanes import enumerate_hyperplanes
from sigma1.idempotents import (ComponentFunction, base_unit, canonical_form_report,
                                decompose, expand, expanded_product, from_expanded,
                                idempotent_check, idempotent_report, lagrange,
                                lagrange_closed_form, reduce_mod_cyclic, small_units,
                                unit_one)
from sigma1.polynomials import Poly


def test_lagrange_q3():
    K = make_cyclotomic(2)
    half = K.from_rational(Fraction(1, 2))
    L_plus, L_minus = lagrange(3, 0), lagrange(3, 1)
    assert L_plus.coefficients() == [half, half]
    assert L_minus.coefficients() == [half, -half]
    assert L_minus.a == -K.one


def test_lagrange_q2_is_one():
    assert lagrange(2, 0).poly == Poly.one(make_cyclotomic(1), 1)


def test_q3_square_reduces_to_itself():
    L = lagrange(3, 0).poly
    assert reduce_mod_cyclic(L * L, 2) == L


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_idempotents(q):
    rep = idempotent_report(q)
    assert rep.ok, rep.to_json()


def test_not_monic():
    # degree q-2 but leading coefficient 1/(q-1) up to a root of unity
    L = lagrange(5, 0)
    assert L.coefficients()[-1] == make_cyclotomic(4).from_rational(Fraction(1, 4))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_closed_form_oracle(q):
    for k in range(q - 1):
        assert lagrange(q, k).poly == lagrange_closed_form(q, k)


P31 = Params(3, 1, 1, 1)


def test_worked_examples():
    P = P31
    t, u = ComponentFunction.t(P), ComponentFunction.u(P)
    one = unit_one(P)
    assert t.comps == ((1, one), (1, one))
    assert u.comps == ((0, base_unit(P)), (0, base_unit(P)))
    assert t ** P.Ntilde == u
    assert (t ** 3 * t ** 2).comps == ((1, base_unit(P)),) * 2
    assert (t ** P.N * ComponentFunction.constant(P, base_unit(P) ** -(P.q - 1))).is_identity()


def test_base_unit_shape(params):
    u = base_unit(params)
    coeffs = u.divisor.coeffs
    assert coeffs[0] == 1 - params.Ntilde and set(coeffs[1:]) == {1}
    assert u.pi_exponent == 0 and u.modulus == 0


def test_decompose_examples():
    P = P31
    one, u = unit_one(P), base_unit(P)
    assert decompose(P, {0: (1, one), 1: (1, one)}) == ComponentFunction.t(P)
    assert decompose(P, {0: (0, u), 1: (0, u)}) == ComponentFunction.u(P)
    assert decompose(P, {0: (4, one), 1: (4, one)}) == ComponentFunction.u(P)
    assert decompose(P, {0: (-1, one), 1: (0, one)}).comps[0] == (3, u.inverse())


def test_not_a_unit():
    P = P31
    with pytest.raises(NotAUnit):
        decompose(P, {0: (1, unit_one(P))})
    with pytest.raises(NotAUnit):
        decompose(P, {0: (1, unit_one(P)), 1: (0, None)})
    with pytest.raises(NotAUnit):
        ComponentFunction(P, [(0, unit_one(P)), None])
    mod_n = KummerClass(0, DivisorVector.zero(P, 1, P.N))
    with pytest.raises(NotAUnit):
        ComponentFunction(P, [(0, mod_n), (0, mod_n)])
    with pytest.raises(ValueError):
        ComponentFunction(P, [(4, unit_one(P)), (0, unit_one(P))])


def test_canonical_form_report(params):
    rep = canonical_form_report(params)
    assert rep.ok, rep.to_json()
    assert rep.pairs == params.Ntilde ** 2


def _random_cf(P, rng):
    units = small_units(P)
    comps = []
    for _ in range(P.q - 1):
        v = unit_one(P)
        for _ in range(3):
            v = v * rng.choice(units) ** rng.randint(-2, 2)
        comps.append((rng.randrange(P.Ntilde), v))
    return ComponentFunction(P, comps)


@pytest.mark.parametrize("P", [P31, Params(2, 2, 1, 1), Params(3, 1, 1, 2)], ids=str)
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 9))
def test_group_laws(P, seed):
    rng = random.Random(seed)
    x, y, z = (_random_cf(P, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert (x * x.inverse()).is_identity()
    assert x / y * y == x
    assert expand(x * y) == expanded_product(expand(x), expand(y))
    assert from_expanded(P, expand(x)) == x
    assert x ** 3 == x * x * x and x ** -2 == (x * x).inverse()


def test_injective_by_exhaustion():
    P = P31
    seen = set()
    for j in range(P.Ntilde):
        for v in small_units(P):
            key = expand(ComponentFunction(P, [(j, v)] * (P.q - 1)))
            assert key not in seen
            seen.add(key)


def test_json_shape():
    cf = ComponentFunction.t(P31)
    js = cf.to_json()
    assert [row[:2] for row in js] == [["0", "1"], ["1", "1"]]
    assert lagrange(3, 1).to_json()["a"] == "z^1"
