import random
from itertools import product

import numpy
import pytest

from dendro import exactmat as em
from dendro import fixtures as F
from dendro.algebra import OrientedGroup, Representation, check_dendriform
from dendro.cohomology import (cohomologous, is_two_cocycle, two_coboundary_from,
                               two_cocycle_basis)
from dendro.errors import InputError
from dendro.extdef import (TruncatedDeformation, build_extension, check_deformation,
                           check_equivalence_order1, check_extension,
                           deformation_from_cocycle, extensions_equivalent, extract_cocycle,
                           first_order_class, induced_representation,
                           infinitesimally_equivalent, is_coboundary_pair,
                           trivial_deformation)


def zeros_pair(D, M):
    G = len(D.group)
    return em.zeros((G, D.dim, M.dim)), em.zeros((2, D.dim, D.dim, M.dim))


@pytest.mark.parametrize("name", ["zero1", "dual", "cubic"])
def test_split_extension(name):
    D = F.get(name)
    M = Representation.regular(D)
    E = build_extension(D, M, *zeros_pair(D, M))
    assert check_extension(E)
    ind = induced_representation(E)
    for attr in ("left_prec", "left_succ", "right_prec", "right_succ"):
        assert (getattr(ind, attr) == getattr(M, attr)).all()
    a, b = extract_cocycle(E)
    assert em.is_zero(a) and em.is_zero(b)


@pytest.mark.parametrize("name", ["zero1", "zero2", "dual"])
def test_round_trip_and_section_shift(name):
    D = F.get(name)
    M = Representation.regular(D)
    rng = random.Random(5)
    for alpha, beta in two_cocycle_basis(D, M):
        E = build_extension(D, M, alpha, beta)
        assert check_extension(E)
        a, b = extract_cocycle(E)
        assert (a == alpha).all() and (b == beta).all()
        gamma = em.array([[rng.randint(-2, 2) for _ in range(M.dim)] for _ in range(D.dim)])
        ca, cb = two_coboundary_from(D, M, gamma)
        a2, b2 = extract_cocycle(E, E.section + numpy.dot(E.inj, gamma.T))
        assert (a2 == alpha + ca).all() and (b2 == beta + cb).all()


def test_non_cocycle_rejected():
    D = F.zero(1)
    alpha, beta = zeros_pair(D, Representation.regular(D))
    alpha[1, 0, 0] = em.ONE  # alpha(g^2) = g alpha(g) + alpha(g) fails for g of order 2
    assert not is_two_cocycle(D, None, alpha, beta)
    with pytest.raises(InputError):
        build_extension(D, None, alpha, beta)


def test_equivalence_both_directions_zero1():
    D = F.zero(1)
    M = Representation.regular(D)
    Z = two_cocycle_basis(D, M)
    assert Z
    for c1, c2 in product(Z, repeat=2):
        E1, E2 = build_extension(D, M, *c1), build_extension(D, M, *c2)
        eq = extensions_equivalent(E1, E2)
        assert (eq is not None) == (cohomologous(D, M, c1, c2) is not None)
        if eq is not None:
            phi = eq["phi"]
            assert (numpy.dot(phi, E1.inj) == E2.inj).all()
            assert (numpy.dot(E2.proj, phi) == E1.proj).all()


def test_coboundary_detection():
    D = F.dual_numbers()
    gamma = em.array([[1, 0], [2, -1]])
    alpha, beta = two_coboundary_from(D, None, gamma)
    g = is_coboundary_pair(D, None, alpha, beta)
    assert g is not None
    a2, b2 = two_coboundary_from(D, None, g)
    assert (a2 == alpha).all() and (b2 == beta).all()


# -- deformations ----------------------------------------------------------------

def test_trivial_deformation():
    D = F.dual_numbers()
    df = trivial_deformation(D, 2)
    assert check_deformation(df)
    a, b, rep = first_order_class(df)
    assert rep and em.is_zero(a) and em.is_zero(b)


def test_any_first_order_on_zero_algebra_trivial_group():
    D = F.zero(2).replace(group=OrientedGroup.trivial(), actions=(em.identity(2),))
    rng = random.Random(1)
    for _ in range(5):
        L1 = em.array([rng.randint(-2, 2) for _ in range(8)], (2, 2, 2))
        R1 = em.array([rng.randint(-2, 2) for _ in range(8)], (2, 2, 2))
        df = TruncatedDeformation(D, (D.left, L1), (D.right, R1), (D.actions, (em.zeros((2, 2)),)))
        assert check_deformation(df, 1)


def test_broken_phi_named():
    D = F.zero(1)
    df = trivial_deformation(D, 1)
    phi1 = (em.zeros((1, 1)), em.identity(1))
    bad = TruncatedDeformation(D, df.left, df.right, (df.phi[0], phi1))
    rep = check_deformation(bad)
    assert not rep and "(ii)" in rep.check
    assert rep.where == {"n": 1, "g": "g", "h": "g", "a": 0}


def test_order_zero_mismatch_rejected():
    D = F.zero(1)
    df = trivial_deformation(D, 1)
    with pytest.raises(InputError):
        check_deformation(TruncatedDeformation(D, (df.left[0] + 1, df.left[1]), df.right, df.phi))


@pytest.mark.parametrize("name", ["zero1", "dual"])
def test_deformation_classes(name):
    D = F.get(name)
    Z = two_cocycle_basis(D)
    dfs = [deformation_from_cocycle(D, a, b) for a, b in Z]
    for (a, b), df in zip(Z, dfs):
        assert check_deformation(df, 1)
        a2, b2, rep = first_order_class(df, 1)
        assert rep and (a2 == a).all() and (b2 == b).all()
    for (c1, d1), (c2, d2) in product(list(zip(Z, dfs)), repeat=2):
        psi = infinitesimally_equivalent(d1, d2)
        assert (psi is not None) == (cohomologous(D, None, c2, c1) is not None)
        if psi is not None:
            assert check_equivalence_order1(d1, d2, psi)


def test_equivalent_deformations_differ_by_coboundary():
    D = F.dual_numbers()
    (a, b), = two_cocycle_basis(D)[:1]
    gamma = em.array([[0, 1], [1, 0]])
    ca, cb = two_coboundary_from(D, None, gamma)
    d1 = deformation_from_cocycle(D, a, b)
    d2 = deformation_from_cocycle(D, a + ca, b + cb)
    psi = infinitesimally_equivalent(d1, d2)
    assert psi is not None
    assert check_equivalence_order1(d1, d2, psi)
    assert check_dendriform(D)
