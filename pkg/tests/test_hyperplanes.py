import itertools

import pytest

from sigma1.base_rings import Params, make_ring
from sigma1.errors import LevelMismatch, NotUnimodular, SingularMatrix
from sigma1.hyperplanes import (canonicalize, det, enumerate_hyperplanes, fibers, gl_act,
                                hyperplane_count, identity_matrix, mat_inv, mat_mul,
                                permutation_matrix, random_gl, reduce_class, reduce_matrix)


def test_small_counts():
    P = Params(2, 1, 1, 1)
    assert [len(enumerate_hyperplanes(P, n)) for n in (1, 2, 3)] == [3, 6, 12]
    P = Params(3, 1, 1, 2)
    assert [len(enumerate_hyperplanes(P, n)) for n in (1, 2)] == [13, 117]


def test_level_two_listing():
    P = Params(2, 1, 1, 1)
    listed = [[x.to_int() for x in H.vector] for H in enumerate_hyperplanes(P, 2)]
    assert listed == [[0, 1], [1, 0], [1, 1], [1, 2], [1, 3], [2, 1]]


def test_counts_match_formula(params):
    for n in (1, 2):
        Hs = enumerate_hyperplanes(params, n)
        assert len(Hs) == len(set(Hs)) == hyperplane_count(params, n)


def test_canonical_form(small_params):
    R = small_params.ring(2)
    for H in enumerate_hyperplanes(small_params, 2):
        assert H.vector[H.lead] == R.one
        assert all(not x.is_unit() for x in H.vector[:H.lead])
        for u in R.units()[:5]:
            assert canonicalize([u * x for x in H.vector]) == H


def test_not_unimodular():
    R = make_ring(2, 1, 1, 2)
    with pytest.raises(NotUnimodular):
        canonicalize([R(2), R(0)])


def test_fibers_partition(small_params):
    P = small_params
    H2 = enumerate_hyperplanes(P, 2)
    seen = []
    for H in enumerate_hyperplanes(P, 1):
        fib = fibers(H, P)
        assert len(fib) == P.q ** P.d
        assert all(reduce_class(G) == H for G in fib)
        seen += fib
    assert sorted(seen) == H2


def test_reduce_level_errors():
    P = Params(2, 1, 1, 1)
    H = enumerate_hyperplanes(P, 1)[0]
    with pytest.raises(LevelMismatch):
        reduce_class(H)


def test_gl_action_is_a_group_action(small_params):
    P = small_params
    Hs = enumerate_hyperplanes(P, 2)
    for seed in range(5):
        g, h = random_gl(P, 2, seed), random_gl(P, 2, seed + 100)
        gh = mat_mul(g, h)
        images = [gl_act(g, H) for H in Hs]
        assert sorted(images) == Hs
        for H in Hs[:10]:
            assert gl_act(gh, H) == gl_act(g, gl_act(h, H))


def test_gl_action_commutes_with_reduction(small_params):
    P = small_params
    g = random_gl(P, 2, 7)
    g1 = reduce_matrix(g, 1)
    for H in enumerate_hyperplanes(P, 2):
        assert reduce_class(gl_act(g, H)) == gl_act(g1, reduce_class(H))


def test_matrix_inverse_and_det():
    P = Params(3, 1, 1, 2)
    R = P.ring(2)
    for seed in range(10):
        g = random_gl(P, 2, seed)
        assert mat_mul(g, mat_inv(g)) == identity_matrix(R, 3)
        assert det(g).is_unit()
    assert random_gl(P, 2, 3) == random_gl(P, 2, 3)


def test_singular_matrix_rejected():
    R = make_ring(2, 1, 1, 1)
    g = ((R.one, R.one), (R.one, R.one))
    H = enumerate_hyperplanes(Params(2, 1, 1, 1), 1)[0]
    with pytest.raises(SingularMatrix):
        gl_act(g, H)


def test_permutations_permute_coordinates():
    P = Params(2, 1, 1, 2)
    R = P.ring(1)
    for perm in itertools.permutations(range(3)):
        g = permutation_matrix(R, perm)
        images = sorted(gl_act(g, H) for H in enumerate_hyperplanes(P, 1))
        assert images == enumerate_hyperplanes(P, 1)
