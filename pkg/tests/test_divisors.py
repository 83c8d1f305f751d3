import random

import pytest
from hypothesis import given, settings, strategies as st

from sigma1.base_rings import Params
from sigma1.divisors import (DivisorVector, KummerClass, canonical_generator,
                             identity_class, invariant_class_enumeration, is_invariant,
                             kummer_class_sigma1, normalize_to_base, pi0, pushforward)
from sigma1.errors import LevelMismatch, ModulusMismatch, NotDegreeZero
from sigma1.hyperplanes import enumerate_hyperplanes, random_gl


def test_degree_zero_enforced():
    P = Params(2, 1, 1, 1)
    with pytest.raises(NotDegreeZero):
        DivisorVector(P, 1, 0, [1, 0, 0])
    # fine mod 3: 3 classes times 1
    assert not DivisorVector.constant(P, 1, 3, 1).is_identity()
    assert DivisorVector.constant(P, 1, 3, 3).is_identity()
    with pytest.raises(ValueError):
        DivisorVector(P, 1, 0, [1, -1])


def test_mismatches():
    P = Params(2, 1, 1, 1)
    a = DivisorVector.zero(P, 1, 3)
    with pytest.raises(ModulusMismatch):
        a * DivisorVector.zero(P, 1, 0)
    with pytest.raises(LevelMismatch):
        a * DivisorVector.zero(P, 2, 3)
    with pytest.raises(LevelMismatch):
        pushforward(a)
    with pytest.raises(ModulusMismatch):
        a.with_modulus(2)


def _random_vector(P, level, rng, modulus=0):
    n = len(enumerate_hyperplanes(P, level))
    c = [rng.randint(-5, 5) for _ in range(n - 1)]
    return DivisorVector(P, level, modulus, c + [-sum(c)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_group_laws(seed):
    P = Params(3, 1, 1, 1)
    rng = random.Random(seed)
    a, b, c = (_random_vector(P, 2, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a / a).is_identity()
    assert pushforward(a * b) == pushforward(a) * pushforward(b)


def test_pushforward_of_generators(params):
    q, N = params.q, params.N
    for n in (1,):
        assert pushforward(canonical_generator(params, n + 1)) == canonical_generator(params, n)
        top = kummer_class_sigma1(params, n + 1).divisor
        assert pushforward(top) == kummer_class_sigma1(params, n).divisor
    # the same identity over the integers: q^d points per fibre
    assert (q ** (1 + params.d) - 1) % N == 0


def test_class_is_invariant(small_params):
    cls = kummer_class_sigma1(small_params, 1)
    gs = [random_gl(small_params, 2, s) for s in range(20)]
    assert is_invariant(cls, gs)


def test_noninvariant_detected():
    P = Params(3, 1, 1, 1)
    Hs = enumerate_hyperplanes(P, 1)
    v = DivisorVector.delta(P, 1, Hs[1], Hs[0])
    gs = [random_gl(P, 1, s) for s in range(30)]
    assert not is_invariant(v, gs)
    with pytest.raises(LevelMismatch):
        is_invariant(kummer_class_sigma1(P, 1), gs)


def test_invariant_enumeration(small_params):
    rep = invariant_class_enumeration(small_params, 2)
    assert rep.ok
    # generated by (q-1, (q-1)q), of order Ñ mod N
    assert len(rep.solutions) == small_params.Ntilde


def test_invariant_enumeration_q3_d1():
    rep = invariant_class_enumeration(Params(3, 1, 1, 1), 2)
    assert rep.generator == (2, 6)
    assert rep.solutions == rep.generated
    with pytest.raises(ValueError):
        invariant_class_enumeration(Params(3, 1, 1, 1), 0)


def test_pi0(params):
    cls = kummer_class_sigma1(params, 1)
    assert pi0(cls, "C") == params.q - 1
    assert pi0(cls, "Kbreve") == 1
    with pytest.raises(ValueError):
        pi0(cls, "R")


def test_pi0_of_trivial_class():
    P = Params(3, 1, 1, 1)
    assert pi0(identity_class(P, 1, P.N), "C") == P.N


def test_kummer_class_arithmetic():
    P = Params(2, 1, 1, 2)
    cls = kummer_class_sigma1(P, 1)
    assert (cls ** P.N).is_identity()
    assert cls * cls.inverse() == identity_class(P, 2, P.N)
    assert cls.with_modulus(1).is_identity()


def test_normalize_to_base():
    P = Params(2, 1, 1, 1)
    Hs = enumerate_hyperplanes(P, 1)
    v = DivisorVector.delta(P, 1, Hs[2], Hs[0]) ** 2
    assert normalize_to_base(v, Hs[0]) == {Hs[2]: 2}
