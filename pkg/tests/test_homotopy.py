import random
from itertools import permutations, product

import pytest

from dendro import exactmat as em
from dendro import fixtures as F
from dendro.algebra import DendriformAlgebra, associated_associative, check_dendriform, induced_dendriform
from dendro.errors import InputError
from dendro.homotopy import (GradedSpace, a_infinity_sum, check_a_infinity, check_dend_infinity,
                             check_involutive_a_infinity, check_involutive_dend_infinity,
                             from_dendriform, induced_dend_infinity, koszul_reversal_sign,
                             orientation_sign, rb_a_infinity_check, transport_family)
from oracles import koszul_sign_by_transpositions


def graded_dual_numbers():
    """(K[x]/x^2) (x) Lambda(eps), d eps = 1: basis 1, x (degree 0), eps, x eps (degree 1)."""
    V = GradedSpace((0, 0, 1, 1))
    m1 = em.zeros((4, 4))
    m1[2, 0] = m1[3, 1] = em.ONE
    m2 = em.zeros((4, 4, 4))
    for p, q, l, m in product(range(2), repeat=4):
        if p + q < 2 and l + m < 2:
            m2[p + 2 * l, q + 2 * m, p + q + 2 * (l + m)] = em.ONE
    R = em.zeros((4, 4))
    R[1, 0] = R[3, 2] = em.ONE
    return V, {1: m1, 2: m2}, R


def test_koszul_sign_matches_transposition_oracle():
    rng = random.Random(0)
    for _ in range(200):
        k = rng.randint(1, 6)
        degs = [rng.randint(-2, 3) for _ in range(k)]
        assert koszul_reversal_sign(degs) == koszul_sign_by_transpositions(degs, list(range(k))[::-1])
    for perm in permutations(range(3)):
        assert koszul_sign_by_transpositions([1, 1, 1], list(perm)) in (1, -1)


def test_orientation_sign_values():
    assert [orientation_sign(k) for k in range(1, 6)] == [1, 1, -1, -1, 1]


def test_degree_zero_agrees_with_dendriform_checker():
    L = em.zeros((1, 1, 1))
    L[0, 0, 0] = em.ONE
    for D in (F.dual_numbers(), F.cubic(), F.one_dim(), F.broken(), DendriformAlgebra(L, L)):
        rep_d = check_dendriform(D)
        rep_h = check_dend_infinity(*from_dendriform(D))
        assert bool(rep_d) == bool(rep_h)
        if not rep_d:
            axiom = int(rep_d.check.split("axiom ")[1][0])
            assert rep_h.where["n"] == 3 and rep_h.where["r"] == axiom
            assert rep_h.where["inputs"] == [rep_d.where[x] for x in "ijk"]


def test_slice_sum_is_associated_product():
    D = F.cubic()
    V, fam = from_dendriform(D)
    S = a_infinity_sum(fam)
    assert (S[2] == associated_associative(D)).all()
    assert check_a_infinity(V, S)


def test_dg_example_and_failures():
    W = GradedSpace((0, 1))
    mu1 = em.zeros((2, 2))
    mu1[1, 0] = em.ONE
    m21 = em.zeros((2, 2, 2))
    m21[0, 0, 0] = m21[0, 1, 1] = m21[1, 0, 1] = em.ONE
    fam = {(1, 1): mu1, (2, 1): m21}
    assert check_dend_infinity(W, fam)
    assert check_a_infinity(W, a_infinity_sum(fam))
    U = GradedSpace((0, -1, -2))
    b1 = em.zeros((3, 3))
    b1[0, 1] = b1[1, 2] = em.ONE
    rep = check_dend_infinity(U, {(1, 1): b1})
    assert not rep and rep.where["n"] == 1


def test_inhomogeneous_map_rejected():
    U = GradedSpace((0, 0))
    b1 = em.zeros((2, 2))
    b1[0, 1] = em.ONE
    with pytest.raises(InputError):
        check_dend_infinity(U, {(1, 1): b1})


def test_involutive_sign_at_arity_three():
    T = GradedSpace((0, 1))

    def fam(c):
        out = {}
        for r in (1, 2, 3):
            m = em.zeros((2,) * 4)
            m[0, 0, 0, 1] = em.scalar(c[r - 1])
            out[(3, r)] = m
        return out
    assert check_involutive_dend_infinity(T, fam((1, 0, -1)), em.identity(2))
    rep = check_involutive_dend_infinity(T, fam((1, 0, 1)), em.identity(2))
    assert not rep and rep.where["k"] == 3


def test_graded_rota_baxter_example():
    V, A, R = graded_dual_numbers()
    S = em.identity(4)
    assert check_a_infinity(V, A) and check_involutive_a_infinity(V, A, S)
    assert rb_a_infinity_check(V, A, R, S=S)
    ind = induced_dend_infinity(V, A, R, S=S)
    assert check_involutive_dend_infinity(V, ind, S)
    assert check_a_infinity(V, a_infinity_sum(ind))


def test_zero_operator_keeps_only_arity_one():
    V, A, _ = graded_dual_numbers()
    ind = induced_dend_infinity(V, A, em.zeros((4, 4)))
    assert (ind[(1, 1)] == A[1]).all()
    for key, mu in ind.items():
        if key[0] >= 2:
            assert em.is_zero(mu)


def test_degree_zero_reproduces_induced_dendriform():
    A = F.truncated_poly(3)
    R = F.left_mult(A, 2)
    D = induced_dendriform(A, R)
    V = GradedSpace((0, 0, 0))
    ind = induced_dend_infinity(V, {2: A}, R, K=3)
    assert (ind[(2, 1)] == D.left).all() and (ind[(2, 2)] == D.right).all()


def test_transport_keeps_identities():
    V, A, R = graded_dual_numbers()
    P = em.identity(4)
    P[0, 1] = em.scalar(2)
    P[2, 3] = em.scalar(-1)
    assert check_a_infinity(V, transport_family(V, A, P))
    bad = em.identity(4)
    bad[0, 2] = em.ONE  # mixes degrees
    with pytest.raises(InputError):
        transport_family(V, A, bad)
