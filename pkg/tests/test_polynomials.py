import pytest
from hypothesis import given, settings, strategies as st

from sigma1.finite_field import make_field
from sigma1.polynomials import Poly

F = make_field(3, 2)


def polys(nvars=2, max_terms=4, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, st.integers(1, F.order - 1), max_size=max_terms).map(
        lambda t: Poly(F, nvars, t))


@settings(max_examples=80, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == Poly.zero(F, 2)


@settings(max_examples=80, deadline=None)
@given(polys(), polys())
def test_exact_division_round_trip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=50, deadline=None)
@given(polys(), st.integers(0, 3))
def test_order_at_linear_form(a, k):
    lin = Poly.linear(F, [1, 2, 1])
    if a.is_zero():
        return
    base = a.order_at(lin)
    assert (a * lin ** k).order_at(lin) == base + k


def test_inexact_division():
    x = Poly.var(F, 2, 0)
    y = Poly.var(F, 2, 1)
    assert (x * x + y).divmod_exact(x) is None
    with pytest.raises(ArithmeticError):
        (x + 1).exact_div(y)
    with pytest.raises(ZeroDivisionError):
        x.divmod_exact(Poly.zero(F, 2))


def test_evaluate_and_print():
    x = Poly.var(F, 2, 0)
    y = Poly.var(F, 2, 1)
    p = x ** 2 + y + 1
    assert p.evaluate([1, 1]) == F.add(F.add(1, 1), 1)
    assert p.to_string(["X", "Y"]) == "X^2 + Y + 1"
    assert p.degree() == 2
    assert Poly.linear(F, [1, 0, 2]).to_string() == "X0 + 2"
