import pytest
from hypothesis import given, settings, strategies as st

from sigma1.base_rings import (Params, is_prime, make_ring, primitive_polynomial,
                               residue_from_int)
from sigma1.cyclotomic import cyclotomic_polynomial, make_cyclotomic
from sigma1.errors import InvalidParameters, NonUnit, UnsupportedRing
from sigma1.finite_field import make_field

RINGS = [(2, 1, 1, 2), (3, 1, 1, 2), (2, 2, 1, 2), (3, 1, 2, 2), (2, 1, 1, 3), (2, 1, 3, 2)]


def test_params_derived():
    P = Params(3, 1, 1, 2)
    assert (P.q, P.N, P.Ntilde) == (3, 26, 13)
    P = Params(2, 2, 1, 1)
    assert (P.q, P.N, P.Ntilde) == (4, 15, 5)


@pytest.mark.parametrize("bad", [dict(p=4), dict(p=2, f=0), dict(p=3, d=0), dict(p=2, e=-1)])
def test_params_rejects(bad):
    with pytest.raises(InvalidParameters):
        Params(**bad)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_primitive_polynomials():
    assert primitive_polynomial(2, 2) == (1, 1, 1)
    assert primitive_polynomial(2, 3) in {(1, 1, 0, 1), (1, 0, 1, 1)}
    F = make_field(3, 3)
    assert len(set(F.exp[:26])) == 26


def test_ring_models():
    R = make_ring(2, 1, 1, 2)
    assert R.model == "Z/p^n" and R.size == 4
    R = make_ring(2, 2, 1, 2)
    assert R.model == "galois" and R.size == 16
    x = R((0, 1))
    assert x * x + x + R.one == R.zero
    R = make_ring(3, 1, 2, 2)
    assert R.model == "truncated" and R.size == 9
    assert R.uniformizer ** 2 == R.zero and R.uniformizer != R.zero


def test_level_one_is_residue_field():
    assert make_ring(3, 1, 2, 1) is make_ring(3, 1, 1, 1)


def test_unsupported_ramification():
    with pytest.raises(UnsupportedRing):
        make_ring(2, 1, 2, 3)


def test_teichmuller_in_z9():
    R = make_ring(3, 1, 1, 2)
    F = R.residue_field
    assert R.teichmuller_lift(F(2)).to_int() == 8
    assert R.teichmuller_lift(F(1)) == R.one


@pytest.mark.parametrize("ring_args", RINGS)
def test_unit_counts(ring_args):
    R = make_ring(*ring_args)
    q = ring_args[0] ** ring_args[1]
    assert len(R.units()) == R.size - R.size // q
    for u in R.units():
        assert u * u.inverse() == R.one


@pytest.mark.parametrize("ring_args", RINGS)
def test_teichmuller_is_multiplicative_fixed_point(ring_args):
    R = make_ring(*ring_args)
    q = R.q
    lifts = [R.teichmuller_lift(a) for a in R.residue_field.elements()]
    for t in lifts:
        assert t ** q == t
    for s in lifts:
        for t in lifts:
            assert (s * t) in lifts


@pytest.mark.parametrize("ring_args", RINGS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ring_axioms(ring_args, data):
    R = make_ring(*ring_args)
    pick = st.integers(0, R.size - 1).map(lambda c: residue_from_int(R, c))
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == R.zero
    # reduction is a ring map
    red = lambda x: R.reduce(x, 1)
    assert red(a * b + c) == red(a) * red(b) + red(c)
    assert a.is_unit() == red(a).is_unit()


@pytest.mark.parametrize("ring_args", [(2, 1, 1, 2), (3, 1, 2, 2), (2, 2, 1, 2)])
def test_divide_by_uniformizer(ring_args):
    R = make_ring(*ring_args)
    pi = R.uniformizer
    for x in R.nonunits():
        y = R.divide_by_uniformizer(x)
        assert pi * R.lift(y) == x
    with pytest.raises(NonUnit):
        R.divide_by_uniformizer(R.one)


def test_to_int_round_trip():
    R = make_ring(2, 2, 1, 2)
    assert sorted(x.to_int() for x in R.elements()) == list(range(R.size))
    for code in range(R.size):
        assert residue_from_int(R, code).to_int() == code


@pytest.mark.parametrize("pm", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 6)])
def test_finite_field(pm):
    F = make_field(*pm)
    Q = F.order
    g = F.generator
    assert F.pow(g, Q - 1) == F.one
    assert len({F.pow(g, k) for k in range(Q - 1)}) == Q - 1
    for a in range(1, min(Q, 50)):
        assert F.mul(a, F.inv(a)) == F.one
        assert F.add(a, F.neg(a)) == F.zero


@pytest.mark.parametrize("p,f,m", [(2, 1, 2), (2, 2, 4), (3, 1, 3), (2, 1, 3)])
def test_embedding_is_a_field_map(p, f, m):
    F = make_field(p, m)
    k = make_ring(p, f, 1, 1)
    emb = F.embedding(k)
    assert len(set(emb.values())) == k.size
    for a in k.elements():
        for b in k.elements():
            assert emb[a * b] == F.mul(emb[a], emb[b])
            assert emb[a + b] == F.add(emb[a], emb[b])


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_cyclotomic_field(n):
    K = make_cyclotomic(n)
    z = K.zeta
    assert z ** n == K.one
    roots = K.roots_of_unity()
    assert len(set(roots)) == n
    total = K.zero
    for r in roots:
        total = total + r
        assert r * r.inverse() == K.one
    assert total == (K.one if n == 1 else K.zero)
