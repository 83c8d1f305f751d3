import random

import pytest

from sigma1.base_rings import Params
from sigma1.building import (SimplexType, evaluate_ratio, maximal_p_closed_form,
                             maximal_simplex, representative_count, standard_simplex,
                             vertex, vertex_polynomial, vertex_reps_match_h1,
                             xpid_presentation)
from sigma1.errors import InvalidType, NotMaximal
from sigma1.polynomials import Poly


def test_simplex_type():
    st = SimplexType((1, 2))
    assert st.d == 2 and st.k == 1 and st.d_indices == (0, 2)
    assert list(st.block(1)) == [1, 2]
    assert SimplexType((3,)).is_vertex and SimplexType((1, 1, 1)).is_maximal
    with pytest.raises(InvalidType):
        SimplexType((0, 2))


def test_type_must_match_dimension():
    with pytest.raises(InvalidType):
        standard_simplex(Params(2, 1, 1, 2), (1, 1))


def test_representative_counts(params):
    d = params.d
    for tv in [(d + 1,), (1,) * (d + 1), (1, d)]:
        pres = standard_simplex(params, tv)
        for i, Ri in enumerate(pres.R):
            assert len(Ri) == representative_count(params, pres.stype, i)
    # at the vertex R_0 is a copy of H_1
    assert len(vertex(params).R[0]) == params.Ntilde


def test_maximal_relation_text():
    pres = maximal_simplex(Params(2, 1, 1, 2))
    assert pres.relation_text() == "X0*X1*X2 = ϖ"
    assert [len(Ri) for Ri in pres.R] == [4, 4, 4]


def test_maximal_closed_form(params):
    pres = maximal_simplex(params)
    for a in pres.representatives():
        assert pres.P[a.symbol] == maximal_p_closed_form(pres, a)


def test_vertex_representatives(params):
    assert vertex_reps_match_h1(vertex(params))


def test_vertex_polynomial_q2():
    pres = vertex(Params(2, 1, 1, 1))
    P = vertex_polynomial(pres)
    assert P.to_string(["X0"]) == "X0^2 + X0"


@pytest.mark.parametrize("pfd", [(2, 1, 1), (3, 1, 1), (2, 2, 1)])
def test_vertex_polynomial_is_x_q_minus_x_mod_pi(pfd):
    p, f, d = pfd
    P = Params(p, f, 1, d)
    poly = vertex_polynomial(vertex(P))
    R = P.ring(2)
    F = R.residue_field
    red = Poly(F, 1, {e: R.reduce(c, 1) for e, c in poly.terms.items()})
    X = Poly.var(F, 1, 0)
    assert red == X ** P.q - X


def _coords(pres, z):
    """The coordinates X_j of the point z (all z_j units)."""
    d = pres.d
    ring = z[0].ring
    X = [z[j] * z[j + 1].inverse() for j in range(d)]
    X.append(ring.uniformizer * z[d] * z[0].inverse())
    return X


def test_p_polynomials_evaluate_to_ratios(params):
    pres = maximal_simplex(params)
    R = params.ring(2)
    units = R.units()
    rng = random.Random(1)
    for _ in range(10):
        z = [rng.choice(units) for _ in range(params.d + 1)]
        X = _coords(pres, z)
        for a in pres.representatives():
            assert pres.P[a.symbol].evaluate(X) == evaluate_ratio(pres, a, z)


def test_xpid_composite(params):
    out = xpid_presentation(maximal_simplex(params))
    assert out["composite"]["exponent"] == params.q ** (params.d + 1)
    assert out["composite"]["matches_pi_Vtilde"]
    assert len(out["relations"]) == params.d + 1


def test_xpid_needs_maximal():
    with pytest.raises(NotMaximal):
        xpid_presentation(vertex(Params(2, 1, 1, 1)))


def test_presentation_json():
    pres = maximal_simplex(Params(3, 1, 1, 1))
    js = pres.to_json()
    assert js["R_sizes"] == [3, 3]
    assert "relation" in js and "R_0" in pres.to_text()


def test_maximal_p_have_constant_term_one(params):
    pres = maximal_simplex(params)
    one = params.ring(2).one
    assert all(pres.P[a.symbol].constant_term() == one for a in pres.representatives())
