"""
Truncated Dend-infinity and A-infinity identities on finite graded spaces.

A graded space is a basis with one integer degree per vector.  A map of
arity k is a dense array of shape (d,)*k + (d,): ``mu[a1, .., ak, b]`` is the
coefficient of e_b in mu(e_a1, .., e_ak).  A Dend-infinity family is a dict
{(k, r): array} (r = 1..k), an A-infinity family a dict {k: array}; missing
entries are zero.  Every map of arity k must have degree k - 2.

The identity checked at arity n (and slot [r] in the sliced case) is

    sum_{i+j=n+1} sum_{l=1..j} (-1)^(l(i+1) + i(|a_1|+..+|a_{l-1}|))
        mu_{j, R0[r]}(a_1, .., a_{l-1}, mu_{i, R_l[r]}(a_l, .., a_{l+i-1}), ..) = 0

with R0 = r0(j, i, l, .) and R_l = ri(j, i, l, .).  The unsliced version
drops the slot labels.  The involutive condition is

    mu_{k,[r]}(a_1..a_k)* = (-1)^theta (-1)^((k-1)(k-2)/2) mu_{k,[k-r+1]}(a_k*, .., a_1*)

with theta = sum_{i<j} |a_i||a_j|.
"""

from dataclasses import dataclass
from itertools import product as iproduct
from string import ascii_letters

import numpy

from . import exactmat as em
from .algebra import Report, passed
from .combinatorics import r0, ri
from .errors import InputError


@dataclass(frozen=True)
class GradedSpace:
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))

    @classmethod
    def from_dims(cls, dims):
        """dims: {degree: dimension}; basis ordered by increasing degree."""
        return cls(tuple(deg for deg in sorted(dims) for _ in range(dims[deg])))

    @property
    def dim(self):
        return len(self.degrees)

    def parity(self):
        return numpy.array([x % 2 for x in self.degrees], dtype=int)

    def dims(self):
        out = {}
        for x in self.degrees:
            out[x] = out.get(x, 0) + 1
        return out


def orientation_sign(k):
    return -1 if ((k - 1) * (k - 2) // 2) % 2 else 1


def koszul_reversal_sign(degs):
    """(-1)^theta, theta = sum_{i<j} |a_i||a_j|: the sign of reversing a1..ak."""
    t = 0
    for i in range(len(degs)):
        for j in range(i + 1, len(degs)):
            t += degs[i] * degs[j]
    return -1 if t % 2 else 1


# -- families ----------------------------------------------------------------

def _arity(key):
    return key[0] if isinstance(key, tuple) else key


def check_homogeneous(V, family):
    """Raise InputError unless every nonzero entry has the degree k - 2."""
    d = V.dim
    for key, mu in family.items():
        k = _arity(key)
        if isinstance(key, tuple) and not 1 <= key[1] <= k:
            raise InputError("slot %s out of range for arity %d" % (key[1], k))
        mu = numpy.asarray(mu, dtype=object)
        if mu.shape != (d,) * (k + 1):
            raise InputError("map %s must have shape %s, got %s" % (key, (d,) * (k + 1), mu.shape))
        for idx in zip(*numpy.nonzero(mu != 0)):
            ins, out = idx[:-1], idx[-1]
            want = sum(V.degrees[a] for a in ins) + k - 2
            if V.degrees[out] != want:
                raise InputError("map %s is not of degree %d: inputs %s land in degree %d"
                                 % (key, k - 2, tuple(int(a) for a in ins), V.degrees[out]))


def _check_linear(V, S, what):
    S = numpy.asarray(S, dtype=object)
    if S.shape != (V.dim, V.dim):
        raise InputError("%s must be %dx%d" % (what, V.dim, V.dim))
    for a, b in zip(*numpy.nonzero(S != 0)):
        if V.degrees[a] != V.degrees[b]:
            raise InputError("%s is not of degree 0" % what)
    return S


def _get(V, family, key):
    mu = family.get(key)
    if mu is None:
        return em.zeros((V.dim,) * (_arity(key) + 1))
    return numpy.asarray(mu, dtype=object)


def _compose(V, outer, inner, lam, i, j):
    """
    (-1)^(i(|a_1|+..+|a_{lam-1}|)) outer(a_1.., inner(a_lam..), ..) as an
    array of arity n = i + j - 1.
    """
    n = i + j - 1
    letters = ascii_letters
    a = letters[:n]
    c, out = letters[n], letters[n + 1]
    inner_idx = a[lam - 1:lam - 1 + i] + c
    outer_idx = a[:lam - 1] + c + a[lam - 1 + i:] + out
    T = numpy.einsum("%s,%s->%s" % (inner_idx, outer_idx, a + out), inner, outer)
    if i % 2 and lam > 1:
        par = V.parity()
        tot = numpy.zeros((V.dim,) * (lam - 1), dtype=int)
        for ax in range(lam - 1):
            shape = [1] * (lam - 1)
            shape[ax] = V.dim
            tot = tot + par.reshape(shape)
        sign = numpy.where(tot % 2 == 1, -1, 1).reshape(tot.shape + (1,) * (n - lam + 2))
        T = T * sign
    return T


def _first_nonzero(res):
    nz = numpy.argwhere(res != 0)
    return None if len(nz) == 0 else tuple(int(x) for x in nz[0])


def dend_infinity_residual(V, family, n, r):
    """The left-hand side of the arity-n, slot-[r] identity as an array."""
    res = em.zeros((V.dim,) * (n + 1))
    for i in range(1, n + 1):
        j = n + 1 - i
        for lam in range(1, j + 1):
            outer = _get(V, family, (j, r0(j, i, lam, r)))
            inner = em.zeros((V.dim,) * (i + 1))
            for s, coef in ri(j, i, lam, r).items():
                inner = inner + _get(V, family, (i, s)) * coef
            if not outer.any() or not inner.any():
                continue
            sign = -1 if (lam * (i + 1)) % 2 else 1
            res = res + _compose(V, outer, inner, lam, i, j) * sign
    return res


def a_infinity_residual(V, family, n):
    res = em.zeros((V.dim,) * (n + 1))
    for i in range(1, n + 1):
        j = n + 1 - i
        for lam in range(1, j + 1):
            outer, inner = _get(V, family, j), _get(V, family, i)
            if not outer.any() or not inner.any():
                continue
            sign = -1 if (lam * (i + 1)) % 2 else 1
            res = res + _compose(V, outer, inner, lam, i, j) * sign
    return res


def _residual_report(name, res, extra):
    loc = _first_nonzero(res)
    if loc is None:
        return None
    where = dict(extra)
    where["inputs"] = list(loc[:-1])
    vec = res[loc[:-1]]
    return Report(False, name, where, list(vec), [em.ZERO] * len(vec))


def check_dend_infinity(V, family, K=3):
    """The Dend-infinity identities for every n <= K and [r] in C_n."""
    check_homogeneous(V, family)
    for n in range(1, K + 1):
        for r in range(1, n + 1):
            rep = _residual_report("Dend-infinity identity n=%d [r]=%d" % (n, r),
                                   dend_infinity_residual(V, family, n, r), {"n": n, "r": r})
            if rep is not None:
                return rep
    return passed("Dend-infinity identities up to arity %d" % K)


def check_a_infinity(V, family, K=3):
    check_homogeneous(V, family)
    for n in range(1, K + 1):
        rep = _residual_report("A-infinity identity n=%d" % n,
                               a_infinity_residual(V, family, n), {"n": n})
        if rep is not None:
            return rep
    return passed("A-infinity identities up to arity %d" % K)


def _reversed_star(V, mu, S, k):
    """(a_1..a_k) -> (-1)^theta mu(a_k*, .., a_1*) as an arity-k array."""
    letters = ascii_letters
    a, b = letters[:k], letters[k:2 * k]
    out = letters[2 * k]
    spec = ",".join("%s%s" % (b[p], a[p]) for p in range(k))
    T = numpy.einsum("%s,%s->%s" % (spec, b + out, a + out), *([S] * k), mu)
    T = T.transpose(tuple(range(k - 1, -1, -1)) + (k,))
    for idx in iproduct(range(V.dim), repeat=k):
        if koszul_reversal_sign([V.degrees[x] for x in idx]) == -1:
            T[idx] = -T[idx]
    return T


def _star_output(mu, S, k):
    letters = ascii_letters
    a, out, o2 = letters[:k], letters[k], letters[k + 1]
    return numpy.einsum("%s,%s->%s" % (a + out, o2 + out, a + o2), mu, S)


def check_involutive_dend_infinity(V, family, S, K=3):
    """Dend-infinity identities plus the involutive condition for k <= K."""
    S = _check_linear(V, S, "involution")
    if not (numpy.dot(S, S) == em.identity(V.dim)).all():
        return Report(False, "involution squares to the identity")
    rep = check_dend_infinity(V, family, K)
    if not rep:
        return rep
    for k in range(1, K + 1):
        sgn = orientation_sign(k)
        for r in range(1, k + 1):
            lhs = _star_output(_get(V, family, (k, r)), S, k)
            rhs = _reversed_star(V, _get(V, family, (k, k - r + 1)), S, k) * sgn
            rep = _residual_report("involutive Dend-infinity condition k=%d [r]=%d" % (k, r),
                                   lhs - rhs, {"k": k, "r": r})
            if rep is not None:
                return rep
    return passed("involutive Dend-infinity algebra up to arity %d" % K)


def check_involutive_a_infinity(V, family, S, K=3):
    S = _check_linear(V, S, "involution")
    if not (numpy.dot(S, S) == em.identity(V.dim)).all():
        return Report(False, "involution squares to the identity")
    rep = check_a_infinity(V, family, K)
    if not rep:
        return rep
    for k in range(1, K + 1):
        mu = _get(V, family, k)
        diff = _star_output(mu, S, k) - _reversed_star(V, mu, S, k) * orientation_sign(k)
        rep = _residual_report("involutive A-infinity condition k=%d" % k, diff, {"k": k})
        if rep is not None:
            return rep
    return passed("involutive A-infinity algebra up to arity %d" % K)


def a_infinity_sum(family):
    """mu_k = mu_{k,[1]} + .. + mu_{k,[k]}."""
    out = {}
    for (k, r), mu in sorted(family.items()):
        mu = numpy.asarray(mu, dtype=object)
        out[k] = out[k] + mu if k in out else mu.copy()
    return out


# -- Rota-Baxter operators ----------------------------------------------------

def _with_inputs(mu, mats, k):
    """mu(M_1 a_1, .., M_k a_k); M_p None means the identity."""
    letters = ascii_letters
    a, b, out = letters[:k], letters[k:2 * k], letters[2 * k]
    ops, specs, src = [], [], ""
    for p in range(k):
        if mats[p] is None:
            src += a[p]
        else:
            src += b[p]
            ops.append(mats[p])
            specs.append(b[p] + a[p])
    specs.append(src + out)
    ops.append(mu)
    return numpy.einsum("%s->%s" % (",".join(specs), a + out), *ops)


def rb_a_infinity_check(V, family, R, K=3, S=None):
    """
    mu_k(R a_1, .., R a_k) = R(sum_i mu_k(R a_1, .., a_i, .., R a_k)) for
    k <= K, with R of degree 0 (and R(a*) = R(a)* when S is given).
    """
    R = _check_linear(V, R, "Rota-Baxter operator")
    check_homogeneous(V, family)
    if S is not None:
        S = _check_linear(V, S, "involution")
        if not (numpy.dot(R, S) == numpy.dot(S, R)).all():
            return Report(False, "R(a*) = R(a)*")
    for k in range(1, K + 1):
        mu = _get(V, family, k)
        lhs = _with_inputs(mu, [R] * k, k)
        inner = em.zeros(mu.shape)
        for i in range(k):
            inner = inner + _with_inputs(mu, [None if p == i else R for p in range(k)], k)
        rhs = _star_output(inner, R, k)
        rep = _residual_report("Rota-Baxter identity on mu_%d" % k, lhs - rhs, {"k": k})
        if rep is not None:
            return rep
    return passed("Rota-Baxter operator up to arity %d" % K)


def induced_dend_infinity(V, family, R, K=3, S=None):
    """mu_{k,[r]}(a..) = mu_k(R a_1, .., a_r, .., R a_k), verified."""
    rep = rb_a_infinity_check(V, family, R, K, S)
    if not rep:
        raise InputError("not a Rota-Baxter operator: %s" % rep)
    R = numpy.asarray(R, dtype=object)
    out = {}
    for k in range(1, K + 1):
        mu = _get(V, family, k)
        for r in range(1, k + 1):
            out[(k, r)] = _with_inputs(mu, [None if p == r - 1 else R for p in range(k)], k)
    rep = check_dend_infinity(V, out, K) if S is None else check_involutive_dend_infinity(V, out, S, K)
    if not rep:
        raise AssertionError("induced family fails: %s" % rep)
    return out


# -- conversions ---------------------------------------------------------------

def from_dendriform(D):
    """A dendriform algebra as a Dend-infinity family concentrated in degree 0."""
    return GradedSpace((0,) * D.dim), {(2, 1): D.left, (2, 2): D.right}


def transport_family(V, family, P):
    """The family in the basis given by the (degree-preserving) columns of P."""
    P = _check_linear(V, P, "change of basis")
    Q = em.inverse(P)
    out = {}
    for key, mu in family.items():
        k = _arity(key)
        out[key] = _star_output(_with_inputs(numpy.asarray(mu, dtype=object), [P] * k, k), Q, k)
    return out
