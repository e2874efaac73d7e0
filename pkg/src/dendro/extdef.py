"""
Abelian extensions of oriented dendriform algebras built from degree-2
cocycles (alpha, beta), cocycles read back off an extension, equivalence of
extensions, and truncated formal deformations.

An extension is stored concretely: the total algebra B lives on a space of
dimension m + d with its own structure constants and action matrices, and
i (m+d x m), p (d x m+d), s (m+d x d) are matrices.  Extensions produced by
build_extension use coordinates (M first, then D) and the section
s(a) = (0, a).

Sign convention for reading a cocycle off an extension (see extract_cocycle):

    alpha(g; a)  = g s(g^-1 a) - s(a)
    beta^l(a, b) = s(a) < s(b) - s(a < b)
    beta^r(a, b) = s(a) > s(b) - s(a > b)

which makes extract_cocycle(build_extension(alpha, beta)) = (alpha, beta).
"""

from dataclasses import dataclass
from itertools import product as iproduct

import numpy

from . import exactmat as em
from .algebra import (DendriformAlgebra, Report, Representation, check_dendriform,
                      check_oriented_action, compose_left, compose_right, first_mismatch,
                      passed, pushforward)
from .cohomology import (_module, cohomologous, dend_shape, is_two_cocycle,
                         two_coboundary_from)
from .errors import InputError


@dataclass(frozen=True, eq=False)
class Extension:
    base: DendriformAlgebra
    module: Representation
    total: DendriformAlgebra
    inj: numpy.ndarray
    proj: numpy.ndarray
    section: numpy.ndarray


def _blocks(E):
    return E.module.dim, E.base.dim


def build_extension(D, M, alpha, beta):
    """B = M + D with g(m, a) = (gm + alpha(g; ga), ga) and the beta-twisted products."""
    M = _module(D, M)
    rep = is_two_cocycle(D, M, alpha, beta)
    if not rep:
        raise InputError("not a 2-cocycle: %s" % rep)
    alpha = numpy.asarray(alpha, dtype=object)
    beta = numpy.asarray(beta, dtype=object)
    m, d = M.dim, D.dim
    N = m + d
    prods = []
    for k, (base, lact, ract) in enumerate(((D.left, M.left_prec, M.right_prec),
                                            (D.right, M.left_succ, M.right_succ))):
        T = em.zeros((N, N, N))
        T[:m, m:, :m] = ract          # m o b
        T[m:, :m, :m] = lact          # a o n
        T[m:, m:, :m] = beta[k]       # beta(a, b)
        T[m:, m:, m:] = base          # a o b
        prods.append(T)
    acts = []
    for g in D.group:
        A, Bg = D.actions[g], M.actions[g]
        X = em.zeros((N, N))
        X[:m, :m] = Bg
        X[m:, m:] = A
        # column j of the off-diagonal block: alpha(g; g e_j)
        X[:m, m:] = numpy.dot(alpha[g].T, A)
        acts.append(X)
    names = tuple("m:" + str(i + 1) for i in range(m)) + tuple("d:" + b for b in D.basis)
    B = DendriformAlgebra(prods[0], prods[1], basis=names, group=D.group, actions=tuple(acts))
    inj = em.zeros((N, m))
    inj[:m, :m] = em.identity(m)
    proj = em.zeros((d, N))
    proj[:, m:] = em.identity(d)
    sec = em.zeros((N, d))
    sec[m:, :] = em.identity(d)
    E = Extension(D, M, B, inj, proj, sec)
    rep = check_extension(E)
    if not rep:
        raise AssertionError("constructed extension fails: %s" % rep)
    return E


def _is_morphism(src, dst, F, name, group_too=True):
    """F: src -> dst (matrix dst.dim x src.dim) preserves <, > (and the actions)."""
    for which in ("left", "right"):
        S, T = getattr(src, which), getattr(dst, which)
        lhs = numpy.einsum("lk,ijk->ijl", F, S)
        rhs = pushforward(T, F)
        rep = first_mismatch(lhs, rhs, ("i", "j"), "%s preserves %s" % (name, which))
        if not rep:
            return rep
    if group_too:
        for g in src.group:
            if not (numpy.dot(F, src.actions[g]) == numpy.dot(dst.actions[g], F)).all():
                return Report(False, "%s is G-equivariant" % name, {"g": src.group.elements[g]})
    return passed(name)


def check_extension(E):
    """B oriented dendriform; i, p equivariant morphisms; p s = id; im i = ker p; induced module."""
    B, D, M = E.total, E.base, E.module
    m, d = _blocks(E)
    for rep in (check_dendriform(B), check_oriented_action(B)):
        if not rep:
            return rep
    if not (numpy.dot(E.proj, E.section) == em.identity(d)).all():
        return Report(False, "p s = id")
    if not em.is_zero(numpy.dot(E.proj, E.inj)) or em.rank(E.inj) != m or em.rank(E.proj) != d:
        return Report(False, "exactness: im i = ker p")
    zeroM = DendriformAlgebra(em.zeros((m, m, m)), em.zeros((m, m, m)),
                              group=D.group, actions=M.actions)
    for rep in (_is_morphism(zeroM, B, E.inj, "i"), _is_morphism(B, D, E.proj, "p")):
        if not rep:
            return rep
    # induced representation: a < m = s(a) < i(m), etc., read back through i
    ind = induced_representation(E)
    for name in ("left_prec", "left_succ", "right_prec", "right_succ"):
        rep = first_mismatch(getattr(ind, name), getattr(M, name), ("x", "y"),
                             "induced representation (%s)" % name)
        if not rep:
            return rep
    return passed("extension")


def _to_module(E, v):
    """Coordinates in M of a vector of B lying in the image of i."""
    x = em.solve(em.Matrix.from_array(E.inj), list(v))
    if x is None:
        raise InputError("vector is not in the image of i")
    return x


def induced_representation(E):
    B = E.total
    m, d = _blocks(E)
    S, I = E.section, E.inj
    arrs = {}
    for name, T, left in (("left_prec", B.left, True), ("left_succ", B.right, True),
                          ("right_prec", B.left, False), ("right_succ", B.right, False)):
        out = em.zeros((d, m, m) if left else (m, d, m))
        for a, k in iproduct(range(d), range(m)):
            if left:
                v = numpy.einsum("i,j,ijk->k", S[:, a], I[:, k], T)
                out[a, k] = _to_module(E, v)
            else:
                v = numpy.einsum("i,j,ijk->k", I[:, k], S[:, a], T)
                out[k, a] = _to_module(E, v)
        arrs[name] = out
    return Representation(arrs["left_prec"], arrs["left_succ"], arrs["right_prec"],
                          arrs["right_succ"], actions=E.module.actions)


def extract_cocycle(E, section=None):
    """
    (alpha, beta) from an extension and a section of p (default: the stored
    one), with alpha(g; a) = g s(g^-1 a) - s(a) and beta^l = s(a)<s(b) - s(a<b).
    """
    B, D = E.total, E.base
    m, d = _blocks(E)
    S = E.section if section is None else numpy.asarray(section, dtype=object)
    if S.shape != (m + d, d) or not (numpy.dot(E.proj, S) == em.identity(d)).all():
        raise InputError("the given map is not a section of p")
    G = D.group
    alpha = em.zeros((len(G), d, m))
    for g in G:
        diff = numpy.dot(numpy.dot(B.actions[g], S), D.actions[G.inv(g)]) - S
        for a in range(d):
            alpha[g, a] = _to_module(E, diff[:, a])
    beta = em.zeros(dend_shape(2, d, m))
    for r, (TB, TD) in enumerate(((B.left, D.left), (B.right, D.right))):
        prod_s = pushforward(TB, S)                       # s(a) o s(b)
        s_prod = numpy.einsum("lk,ijk->ijl", S, TD)       # s(a o b)
        diff = prod_s - s_prod
        for a, b in iproduct(range(d), repeat=2):
            beta[r, a, b] = _to_module(E, diff[a, b])
    rep = is_two_cocycle(D, E.module, alpha, beta)
    if not rep:
        raise AssertionError("extracted pair is not a cocycle: %s" % rep)
    return alpha, beta


def extensions_equivalent(E1, E2):
    """
    gamma and phi: B1 -> B2 with phi i1 = i2, p2 phi = p1, or None.  In the
    coordinates of build_extension phi(m, a) = (m + gamma(a), a).
    """
    D, M = E1.base, E1.module
    if E2.base is not D and not (E2.base.left == D.left).all():
        raise InputError("extensions of different algebras")
    c1, c2 = extract_cocycle(E1), extract_cocycle(E2)
    gamma = cohomologous(D, M, c1, c2)
    if gamma is None:
        return None
    # phi(s1(a)) = s2(a) + i2 gamma(a), phi(i1 m) = i2 m
    src = numpy.concatenate([E1.inj, E1.section], axis=1)
    dst = numpy.concatenate([E2.inj, E2.section + numpy.dot(E2.inj, gamma.T)], axis=1)
    phi = numpy.dot(dst, em.inverse(src))
    rep = _is_morphism(E1.total, E2.total, phi, "phi")
    if not rep:
        raise AssertionError("equivalence map fails: %s" % rep)
    assert (numpy.dot(phi, E1.inj) == E2.inj).all()
    assert (numpy.dot(E2.proj, phi) == E1.proj).all()
    return {"gamma": gamma, "phi": phi}


# -- deformations ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TruncatedDeformation:
    """
    left[k], right[k]: d x d x d constants of <_k, >_k; phi[k][g]: d x d
    matrix of phi_k(g; -), for 0 <= k <= order.
    """
    base: DendriformAlgebra
    left: tuple
    right: tuple
    phi: tuple

    @property
    def order(self):
        return len(self.left) - 1


def trivial_deformation(D, order=2):
    d, G = D.dim, len(D.group)
    z = em.zeros((d, d, d))
    zp = tuple(em.zeros((d, d)) for _ in range(G))
    return TruncatedDeformation(D, (D.left,) + (z,) * order, (D.right,) + (z,) * order,
                                (D.actions,) + (zp,) * order)


def _check_order_zero(df):
    D = df.base
    if D.group is None:
        raise InputError("deformations are of oriented algebras: the base needs a group action")
    N = df.order
    if len(df.right) != N + 1 or len(df.phi) != N + 1:
        raise InputError("left, right and phi must all run over orders 0..%d" % N)
    if not ((df.left[0] == D.left).all() and (df.right[0] == D.right).all()
            and all((numpy.asarray(a) == b).all() for a, b in zip(df.phi[0], D.actions))):
        raise InputError("order-0 data differs from the base structure")


def check_deformation(df, upto=None):
    """Conditions (i)-(iv) for every order n <= upto (default: the truncation order)."""
    _check_order_zero(df)
    D = df.base
    G = D.group
    N = df.order if upto is None else upto
    L = [numpy.asarray(x, dtype=object) for x in df.left]
    R = [numpy.asarray(x, dtype=object) for x in df.right]
    P = [[numpy.asarray(a, dtype=object) for a in ph] for ph in df.phi]
    names = ("i", "j", "k")
    for n in range(N + 1):
        pairs = [(i, n - i) for i in range(n + 1)]
        sums = {
            "(i) axiom 1": (sum(compose_left(L[i], L[j]) for i, j in pairs),
                            sum(compose_right(L[i], L[j] + R[j]) for i, j in pairs)),
            "(i) axiom 2": (sum(compose_left(R[i], L[j]) for i, j in pairs),
                            sum(compose_right(R[i], L[j]) for i, j in pairs)),
            "(i) axiom 3": (sum(compose_left(L[i] + R[i], R[j]) for i, j in pairs),
                            sum(compose_right(R[i], R[j]) for i, j in pairs)),
        }
        for name, (lhs, rhs) in sums.items():
            rep = first_mismatch(lhs, rhs, names, "deformation %s" % name, {"n": n})
            if not rep:
                return rep
        for g, h in iproduct(G, repeat=2):
            lhs = P[n][G.mul(g, h)]
            rhs = sum(numpy.dot(P[i][g], P[j][h]) for i, j in pairs)
            # columns are images of basis vectors: report the first differing one
            rep = first_mismatch(lhs.T, rhs.T, ("a",),
                                 "deformation (ii): phi_n(gh) = sum phi_i(g) phi_j(h)",
                                 {"n": n, "g": G.elements[g], "h": G.elements[h]})
            if not rep:
                return rep
        triples = [(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)]
        for g in G:
            plus = G.eps(g) == 1
            for label, own, other in (("(iii)", L, R), ("(iv)", R, L)):
                lhs = sum(numpy.einsum("lk,ijk->ijl", P[i][g], own[j]) for i, j in pairs)
                if plus:
                    rhs = sum(pushforward(own[i], P[j][g], P[k][g]) for i, j, k in triples)
                else:
                    rhs = sum(pushforward(other[i], P[k][g], P[j][g]).transpose(1, 0, 2)
                              for i, j, k in triples)
                rep = first_mismatch(lhs, rhs, ("i", "j"), "deformation %s" % label,
                                     {"n": n, "g": G.elements[g]})
                if not rep:
                    return rep
    return passed("deformation up to order %d" % N)


def first_order_class(df, n=None):
    """
    (xi_n, pi_n) with xi_n(g; a) = phi_n(g; g^-1 a), pi_n([1]) = <_n,
    pi_n([2]) = >_n, for n = 1 or (n=None) the first order with nonzero data.
    Returns (alpha, beta, report) with alpha[g, a, l], beta[r, a, b, l].
    """
    _check_order_zero(df)
    D = df.base
    G = D.group
    if n is None:
        n = 1
        for k in range(1, df.order + 1):
            if (not em.is_zero(df.left[k]) or not em.is_zero(df.right[k])
                    or any(not em.is_zero(x) for x in df.phi[k])):
                n = k
                break
    if not 1 <= n <= df.order:
        raise InputError("order %d outside 1..%d" % (n, df.order))
    alpha = numpy.array([numpy.dot(numpy.asarray(df.phi[n][g], dtype=object),
                                   D.actions[G.inv(g)]).T for g in G], dtype=object)
    beta = numpy.array([df.left[n], df.right[n]], dtype=object)
    return alpha, beta, is_two_cocycle(D, None, alpha, beta)


def deformation_from_cocycle(D, alpha, beta):
    """Order-1 deformation <_1 = beta^l, >_1 = beta^r, phi_1(g; a) = alpha(g; ga)."""
    G = D.group
    alpha = numpy.asarray(alpha, dtype=object)
    beta = numpy.asarray(beta, dtype=object)
    phi1 = tuple(numpy.dot(alpha[g].T, D.actions[g]) for g in G)
    return TruncatedDeformation(D, (D.left, beta[0]), (D.right, beta[1]), (D.actions, phi1))


def infinitesimally_equivalent(df1, df2):
    """
    Psi_1 with (xi', pi') - (xi, pi) = coboundary of Psi_1 (df2 primed), i.e.
    pi_1' - pi_1 = delta Psi_1 and phi_1'(g; a) - phi_1(g; a) = g Psi_1(a) - Psi_1(ga);
    None when the first-order classes differ.  Psi is returned as the d x d
    matrix acting on columns.
    """
    D = df1.base
    a1, b1, _ = first_order_class(df1, 1)
    a2, b2, _ = first_order_class(df2, 1)
    gamma = cohomologous(D, None, (a2, b2), (a1, b1))
    if gamma is None:
        return None
    psi = gamma.T
    rep = check_equivalence_order1(df1, df2, psi)
    if not rep:
        raise AssertionError("solved Psi_1 fails the equivalence conditions: %s" % rep)
    return psi


def check_equivalence_order1(df1, df2, psi):
    """The order-1 equivalence identities for Psi_t = id + t Psi_1 from df2 to df1."""
    D = df1.base
    G = D.group
    psi = numpy.asarray(psi, dtype=object)
    I = em.identity(D.dim)
    for which in ("left", "right"):
        T0, T1 = getattr(D, which), getattr(df1, which)[1]
        T1p = getattr(df2, which)[1]
        lhs = numpy.einsum("lk,ijk->ijl", psi, T0) + T1p
        rhs = pushforward(T0, psi, I) + T1 + pushforward(T0, I, psi)
        rep = first_mismatch(lhs, rhs, ("i", "j"), "equivalence (i) %s" % which)
        if not rep:
            return rep
    for g in G:
        lhs = numpy.dot(psi, D.actions[g]) + df2.phi[1][g]
        rhs = df1.phi[1][g] + numpy.dot(D.actions[g], psi)
        if not (lhs == rhs).all():
            return Report(False, "equivalence (ii)", {"g": G.elements[g]}, lhs.tolist(), rhs.tolist())
    return passed("order-1 equivalence")


def is_coboundary_pair(D, M, alpha, beta):
    """Some gamma with (alpha, beta) = two_coboundary_from(gamma), or None."""
    M = _module(D, M)
    zero = (em.zeros(numpy.shape(alpha)), em.zeros(numpy.shape(beta)))
    gamma = cohomologous(D, M, (alpha, beta), zero)
    if gamma is not None:
        a, b = two_coboundary_from(D, M, gamma)
        assert (a == alpha).all() and (b == beta).all()
    return gamma
