"""
A small catalog of algebras used by the tests and the ``fixture`` command,
plus seeded random instances obtained by change of basis.

Every fixture is built from an associative algebra and a Rota-Baxter
operator (or is a zero/one-dimensional example), and is validated at
construction.
"""

import random

import numpy

from . import exactmat as em
from .algebra import (DendriformAlgebra, OrientedGroup, Representation,
                      induced_dendriform, induced_tridendriform, rb_from_cybe,
                      transport, transport_representation, zero_algebra)
from .errors import InputError


def truncated_poly(n):
    """K[x]/(x^n) in the basis 1, x, .., x^(n-1)."""
    A = em.zeros((n, n, n))
    for i in range(n):
        for j in range(n - i):
            A[i, j, i + j] = em.ONE
    return A


def left_mult(A, k):
    """The matrix of a -> e_k a."""
    return numpy.asarray(A[k], dtype=object).T.copy()


def matrix_algebra_2():
    """M_2(K) in the basis E11, E12, E21, E22."""
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    A = em.zeros((4, 4, 4))
    for p, (i, j) in enumerate(idx):
        for q, (k, l) in enumerate(idx):
            if j == k:
                A[p, q, idx.index((i, l))] = em.ONE
    return A


def _diag(*xs):
    a = em.zeros((len(xs), len(xs)))
    for i, x in enumerate(xs):
        a[i, i] = em.scalar(x)
    return a


def zero(d=1, group="z2"):
    """Zero products, * = id, and Z/2 (generator oriented -1) acting trivially."""
    kw = {"involution": em.identity(d)}
    if group == "z2":
        kw["group"] = OrientedGroup.cyclic(2, -1)
        kw["actions"] = (em.identity(d), em.identity(d))
    return zero_algebra(d, basis=tuple("e%d" % (i + 1) for i in range(d)), **kw)


def dual_numbers():
    """K[x]/(x^2), R = left multiplication by x: 1<1 = 1>1 = x; * = id; Z/2 by id."""
    A = truncated_poly(2)
    R = left_mult(A, 1)
    G = OrientedGroup.cyclic(2, -1)
    D = induced_dendriform(A, R, G, (em.identity(2), em.identity(2)), basis=("1", "x"))
    return D.replace(involution=em.identity(2))


def cubic():
    """K[x]/(x^3), R = multiplication by x^2, * : x -> -x, Z/2 acting by *."""
    A = truncated_poly(3)
    R = left_mult(A, 2)
    S = _diag(1, -1, 1)
    G = OrientedGroup.cyclic(2, -1)
    D = induced_dendriform(A, R, G, (em.identity(3), S), basis=("1", "x", "x2"))
    return D.replace(involution=S)


def cubic_z4():
    """The cubic fixture with Z/4 (generator oriented -1) acting through *."""
    D = cubic()
    S = D.involution
    G = OrientedGroup.cyclic(4, -1)
    return D.replace(group=G, actions=(em.identity(3), S, em.identity(3), S))


def cubic_klein():
    """The cubic fixture with Klein four acting by {id, *, id, *} (a: eps -1, b: eps +1)."""
    D = cubic()
    S = D.involution
    G = OrientedGroup.klein(-1, 1)
    return D.replace(group=G, actions=(em.identity(3), S, em.identity(3), S))


def matrix2():
    """
    M_2(K) with R(a) = a21 E12 (from the CYBE solution E12 (x) E12),
    a* = J a^T J (J the exchange matrix) and the Klein four group acting by
    {id, *, conj by diag(1,-1), both}.
    """
    A = matrix_algebra_2()
    r = em.zeros((4, 4))
    r[1, 1] = em.ONE
    R = rb_from_cybe(A, r).matrix
    # a* = J a^T J sends E11<->E22 and fixes E12, E21.
    S = em.zeros((4, 4))
    for src, dst in ((0, 3), (1, 1), (2, 2), (3, 0)):
        S[dst, src] = em.ONE
    C = _diag(1, -1, -1, 1)
    G = OrientedGroup.klein(-1, 1)
    acts = (em.identity(4), S, C, numpy.dot(S, C))
    D = induced_dendriform(A, R, G, acts, basis=("E11", "E12", "E21", "E22"))
    return D.replace(involution=S)


def one_dim():
    """e < e = e, e > e = 0 (no involution is possible here)."""
    L = em.zeros((1, 1, 1))
    L[0, 0, 0] = em.ONE
    return DendriformAlgebra(L, em.zeros((1, 1, 1)), basis=("e",))


def broken():
    """The dual-number fixture with 1<x perturbed, violating axiom 1."""
    D = dual_numbers()
    L = D.left.copy()
    L[0, 1, 1] += em.ONE
    return DendriformAlgebra(L, D.right, basis=D.basis)


def split_tri(weight=1):
    """K x K with R = -weight * (projection to the first factor): tridendriform."""
    A = em.zeros((2, 2, 2))
    A[0, 0, 0] = A[1, 1, 1] = em.ONE
    R = _diag(-em.scalar(weight), 0)
    G = OrientedGroup.cyclic(2, -1)
    T = induced_tridendriform(A, R, weight, G, (em.identity(2), em.identity(2)), basis=("p1", "p2"))
    return T.replace(involution=em.identity(2))


def rota_baxter_cases():
    """(name, associative constants, R, weight, group, actions) for every fixture operator."""
    G = OrientedGroup.cyclic(2, -1)
    I2, I3 = em.identity(2), em.identity(3)
    P2 = truncated_poly(2)
    P3 = truncated_poly(3)
    M = matrix_algebra_2()
    S = matrix2().actions
    r = em.zeros((4, 4))
    r[1, 1] = em.ONE
    K2 = em.zeros((2, 2, 2))
    K2[0, 0, 0] = K2[1, 1, 1] = em.ONE
    return [
        ("dual numbers, R = x.", P2, left_mult(P2, 1), 0, G, (I2, I2)),
        ("K[x]/x^3, R = x^2.", P3, left_mult(P3, 2), 0, G, (I3, _diag(1, -1, 1))),
        ("M2, CYBE E12 (x) E12", M, rb_from_cybe(M, r).matrix, 0, OrientedGroup.klein(-1, 1), S),
        ("K x K, R = -proj1", K2, _diag(-1, 0), 1, G, (I2, I2)),
        ("dual numbers, R = -id", P2, _diag(-1, -1), 1, G, (I2, I2)),
        ("K[x]/x^3, R = -2 id", P3, _diag(-2, -2, -2), 2, G, (I3, _diag(1, -1, 1))),
    ]


CATALOG = {
    "zero1": lambda: zero(1),
    "zero2": lambda: zero(2),
    "dual": dual_numbers,
    "cubic": cubic,
    "cubic_z4": cubic_z4,
    "cubic_klein": cubic_klein,
    "matrix2": matrix2,
    "one_dim": one_dim,
    "broken": broken,
    "split_tri": split_tri,
}


def get(name):
    try:
        return CATALOG[name]()
    except KeyError:
        raise InputError("unknown fixture %r (choose from %s)" % (name, ", ".join(sorted(CATALOG))))


# -- random instances ----------------------------------------------------------

def random_invertible(d, rng, lo=-2, hi=2):
    """A random invertible integer matrix (unit lower times unit upper triangular, permuted)."""
    L, U = em.identity(d), em.identity(d)
    for i in range(d):
        for j in range(d):
            if i > j:
                L[i, j] = em.scalar(rng.randint(lo, hi))
            elif i < j:
                U[i, j] = em.scalar(rng.randint(lo, hi))
    perm = list(range(d))
    rng.shuffle(perm)
    P = em.zeros((d, d))
    for i, p in enumerate(perm):
        P[i, p] = em.ONE
    return numpy.dot(P, numpy.dot(L, U))


SMALL = ("zero1", "zero2", "dual", "cubic", "cubic_z4", "cubic_klein")


def random_instance(seed, names=SMALL, max_module=3):
    """
    (D, M) from a seeded choice of fixture, change of basis, and module: the
    regular module or a zero module of random dimension with the trivial or
    sign-twisted action.
    """
    rng = random.Random(seed)
    D = get(names[rng.randrange(len(names))])
    D = transport(D, random_invertible(D.dim, rng)).replace(basis=D.basis)
    kind = rng.choice(("regular", "regular", "zero"))
    if kind == "regular":
        M = Representation.regular(D)
        if rng.random() < 0.5:
            Q = random_invertible(D.dim, rng)
            M = transport_representation(M, em.identity(D.dim), Q)
    else:
        m = rng.randint(1, max_module)
        acts = None
        if D.group is not None:
            twist = rng.random() < 0.5
            acts = tuple(em.identity(m) * (D.group.eps(g) if twist else 1) for g in D.group)
        M = Representation.zero(D.dim, m, involution=em.identity(m), actions=acts)
    return D, M

