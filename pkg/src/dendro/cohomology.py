"""
Cochain complexes of dendriform algebras and their exact cohomology.

Layouts (all object arrays of Fractions, 0-based basis indices):

* dendriform n-cochain  f[r-1, a_1, ..., a_n, l]   shape (n, d, ..., d, m)
* Hochschild n-cochain  f[a_1, ..., a_n, l]        shape (d, ..., d, m)
* group n-cochain       f[g_1, ..., g_n, l]        shape (|G|, ..., |G|, m)
* bicochain at (i, j)   f[g_1, ..., g_i, r-1, a_1, ..., a_j, l]

Internally every coboundary works on a *batch*: an extra leading axis, so a
whole basis of cochains is pushed through a differential with one einsum per
term.  Differential matrices are never multiplied together; ranks are taken
of the stacked images.

A total cochain of degree n is the concatenation (i = 0, 1, ..., n - 1) of
its flattened (i, n - i) components.
"""

import functools
import os
from itertools import product as iproduct

import numpy

from . import exactmat as em
from .algebra import Report, passed, Representation
from .combinatorics import r0, ri
from .errors import InputError

_LETTERS = "acdefhijmnoqrstuvwxyzACDEFGHIJKLMNOPQRSTUVWXYZ"


def _args(n, start=0):
    if start + n > len(_LETTERS):
        raise InputError("degree %d is too large" % n)
    return _LETTERS[start:start + n]


def orientation_sign(n):
    """(-1)^((n-1)(n-2)/2); equals -1 at n = 0."""
    return -1 if ((n - 1) * (n - 2) // 2) % 2 else 1


def _module(D, M):
    if M is None:
        M = Representation.regular(D)
    if M.algebra_dim != D.dim:
        raise InputError("representation is over a %d-dimensional algebra, D has dimension %d"
                         % (M.algebra_dim, D.dim))
    return M


def _check_batch(f, shape, what):
    f = numpy.asarray(f, dtype=object)
    if f.shape[1:] != tuple(shape):
        raise InputError("%s must have shape %s, got %s" % (what, tuple(shape), f.shape[1:]))
    return f


def _one(f):
    return numpy.asarray(f, dtype=object)[None]


def _zeros(shape, like):
    """Zeros of the same scalar kind (Fraction or Python int) as ``like``."""
    like = numpy.asarray(like)
    if like.size and type(like.flat[0]) is int:
        return numpy.zeros(shape, dtype=object)
    return em.zeros(shape)


# -- integer fast path ---------------------------------------------------------
#
# Object arrays of Python ints go through exactly the same einsum code as
# arrays of Fractions, but each scalar operation is far cheaper.  When every
# structure constant, involution and action matrix is integral, a batch of
# cochains is scaled by its common denominator, pushed through the integer
# copies, and the result divided back.


class _IntAlgebra:
    def __init__(self, D, conv):
        self.dim, self.group = D.dim, D.group
        self.left, self.right = conv(D.left), conv(D.right)
        self.involution = None if D.involution is None else conv(D.involution)
        self.actions = None if D.actions is None else tuple(conv(a) for a in D.actions)


class _IntModule:
    def __init__(self, M, conv):
        self.dim, self.algebra_dim = M.dim, M.algebra_dim
        self.left_prec, self.left_succ = conv(M.left_prec), conv(M.left_succ)
        self.right_prec, self.right_succ = conv(M.right_prec), conv(M.right_succ)
        self.involution = None if M.involution is None else conv(M.involution)
        self.actions = None if M.actions is None else tuple(conv(a) for a in M.actions)

    def left_star(self):
        return self.left_prec + self.left_succ

    def right_star(self):
        return self.right_prec + self.right_succ


class _NotIntegral(Exception):
    pass


def _conv(a):
    out = em.to_integers(a)
    if out is None:
        raise _NotIntegral
    return out


def integer_data(D, M):
    """Integer copies (D', M') of the structure, or None if something is not integral."""
    try:
        return _IntAlgebra(D, _conv), _IntModule(M, _conv)
    except _NotIntegral:
        return None


def _run_integral(fn, data, X):
    """fn(D', M', X') / scale on the integer copies, X' = scale * X."""
    scale = em.common_denominator(X)
    Y = fn(data[0], data[1], em.to_integers(X, scale))
    return em.from_integers(Y, scale)


def _integral_fast_path(pos):
    """
    Decorator for batch maps fn(D, M, ..., f, ...) with the cochain batch
    at argument position pos: run on integer copies when possible.
    """
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(D, M, *args, **kw):
            args = list(args)
            if isinstance(D, _IntAlgebra):
                return fn(D, M, *args, **kw)
            M = _module(D, M)
            data = integer_data(D, M)
            if data is None:
                return fn(D, M, *args, **kw)

            def run(D2, M2, X):
                return fn(D2, M2, *(args[:pos - 2] + [X] + args[pos - 1:]), **kw)
            return _run_integral(run, data, numpy.asarray(args[pos - 2], dtype=object))
        return wrapper
    return deco


def dend_shape(n, d, m):
    return (n,) + (d,) * n + (m,)


def hoch_shape(n, d, m):
    return (d,) * n + (m,)


# -- the dendriform coboundary -----------------------------------------------

def _pi(D, coeffs):
    """pi_D at a formal sum over C_2: [1] -> <, [2] -> >."""
    out = _zeros(D.left.shape, D.left)
    for s, c in coeffs.items():
        assert c.denominator == 1
        out = out + (D.left if s == 1 else D.right) * int(c)
    return out


@_integral_fast_path(2)
def dend_coboundary_batch(D, M, f, n):
    """delta_dend on a batch f of shape (B, n, d^n, m)."""
    M = _module(D, M)
    d, m = D.dim, M.dim
    f = _check_batch(f, dend_shape(n, d, m), "dendriform %d-cochain" % n)
    B = f.shape[0]
    out = _zeros((B,) + dend_shape(n + 1, d, m), f)
    a = _args(n + 1)
    ein = numpy.einsum
    total = f.sum(axis=1)  # the formal sum [1] + ... + [n]
    # theta_1(R_0(2;1,n)[r]; a_1, f(R_2(2;1,n)[r]; a_2, ...))
    head = "b%sk,%skl->b%sl" % (a[1:], a[0], a)
    for r in range(1, n + 2):
        assert r0(2, n, 2, r) == (1 if r == 1 else 2)
        if r == 1:
            out[:, 0] += ein(head, total, M.left_prec)
        else:
            out[:, r - 1] += ein(head, f[:, r - 2], M.left_succ)
    # sum_i (-1)^i f(R_0(n;1,..,2,..,1)[r]; ..., pi_D(R_i(...)[r]; a_i, a_i+1), ...)
    for i in range(1, n + 1):
        sub = "b%sp%sl,%s%sp->b%sl" % (a[:i - 1], a[i + 1:], a[i - 1], a[i], a)
        sign = -1 if i % 2 else 1
        for r in range(1, n + 2):
            s = r0(n, 2, i, r)
            out[:, r - 1] += ein(sub, f[:, s - 1], _pi(D, ri(n, 2, i, r))) * sign
    # (-1)^(n+1) theta_2(R_0(2;n,1)[r]; f(R_1(2;n,1)[r]; a_1..a_n), a_n+1)
    tail = "b%sk,k%sl->b%sl" % (a[:n], a[n], a)
    sign = -1 if (n + 1) % 2 else 1
    for r in range(1, n + 2):
        if r <= n:
            out[:, r - 1] += ein(tail, f[:, r - 1], M.right_prec) * sign
        else:
            out[:, n] += ein(tail, total, M.right_succ) * sign
    return out


def dend_coboundary(D, M, f):
    """delta_dend of a single n-cochain f (n read off the leading axis)."""
    f = numpy.asarray(f, dtype=object)
    return dend_coboundary_batch(D, M, _one(f), f.shape[0])[0]


# -- Hochschild coboundary ---------------------------------------------------

@_integral_fast_path(2)
def hoch_coboundary_batch(D, M, f, n):
    """Bar differential of the associated associative algebra, n >= 0."""
    M = _module(D, M)
    d, m = D.dim, M.dim
    f = _check_batch(f, hoch_shape(n, d, m), "Hochschild %d-cochain" % n)
    star = D.left + D.right
    a = _args(n + 1)
    ein = numpy.einsum
    out = ein("b%sk,%skl->b%sl" % (a[1:], a[0], a), f, M.left_star())
    for i in range(1, n + 1):
        sub = "b%sp%sl,%s%sp->b%sl" % (a[:i - 1], a[i + 1:], a[i - 1], a[i], a)
        out = out + ein(sub, f, star) * (-1 if i % 2 else 1)
    tail = ein("b%sk,k%sl->b%sl" % (a[:n], a[n], a), f, M.right_star())
    return out + tail * (-1 if (n + 1) % 2 else 1)


def hoch_coboundary(D, M, f):
    f = numpy.asarray(f, dtype=object)
    return hoch_coboundary_batch(D, M, _one(f), f.ndim - 1)[0]


def s_map(f):
    """S_n: f -> f_[1] + ... + f_[n] (dendriform to Hochschild cochains)."""
    return numpy.asarray(f, dtype=object).sum(axis=0)


def s_map_batch(f):
    return numpy.asarray(f, dtype=object).sum(axis=1)


# -- group cohomology --------------------------------------------------------

def grp_coboundary_batch(group, act, f, n):
    """
    (delta f)(g_1..g_n+1) = g_1 f(g_2..) + sum (-1)^i f(.., g_i g_i+1, ..)
    + (-1)^(n+1) f(g_1..g_n), for f of shape (B, |G|^n, *V).  ``act(g, x)``
    applies g to a batch x of shape (B', *V).
    """
    f = numpy.asarray(f, dtype=object)
    G = len(group)
    if f.shape[1:1 + n] != (G,) * n:
        raise InputError("group %d-cochain has shape %s" % (n, f.shape))
    B = f.shape[0]
    vshape = f.shape[1 + n:]
    out = _zeros((B,) + (G,) * (n + 1) + vshape, f)
    flat = f.reshape((B * G ** n,) + vshape)
    for g1 in group:
        out[:, g1] += act(g1, flat).reshape(f.shape)
    for gs in iproduct(range(G), repeat=n + 1):
        acc = out[(slice(None),) + gs]
        for i in range(1, n + 1):
            merged = gs[:i - 1] + (group.mul(gs[i - 1], gs[i]),) + gs[i + 1:]
            acc += f[(slice(None),) + merged] * (-1 if i % 2 else 1)
        acc += f[(slice(None),) + gs[:n]] * (-1 if (n + 1) % 2 else 1)
        out[(slice(None),) + gs] = acc
    return out


def module_action(mats):
    """act(g, x) for a batch of vectors x (last axis) and matrices mats."""
    def act(g, x):
        return numpy.tensordot(x, mats[g], axes=([-1], [1]))
    return act


def grp_coboundary(group, mats, f):
    """Group coboundary with coefficients in the G-module given by mats."""
    f = numpy.asarray(f, dtype=object)
    n = f.ndim - 1
    return grp_coboundary_batch(group, module_action(mats), _one(f), n)[0]


# -- actions on cochains and the involution T_n -------------------------------

def _transform(f, n, in_mat, out_mat, reverse, slots):
    """
    Batch f with (slots and) n argument axes: optionally reverse the order of
    the arguments (and [r] -> [n-r+1]), then feed the inputs through in_mat
    and the output through out_mat.
    """
    first = 2 if slots else 1
    if reverse:
        if slots:
            f = f[:, ::-1]
        perm = list(range(first)) + [first + n - 1 - t for t in range(n)] + [first + n]
        f = f.transpose(perm)
    for t in range(n):
        ax = first + t
        f = numpy.moveaxis(numpy.tensordot(f, in_mat, axes=([ax], [0])), -1, ax)
    return numpy.tensordot(f, out_mat, axes=([-1], [1]))


def _need_actions(D, M):
    if D.group is None or M.actions is None:
        raise InputError("an oriented action on both D and M is required")


@_integral_fast_path(3)
def cochain_action_batch(D, M, g, f, n, hoch=False):
    """(g f) on a batch of dendriform (or Hochschild) n-cochains."""
    M = _module(D, M)
    _need_actions(D, M)
    G = D.group
    gi = G.inv(g)
    plus = G.eps(g) == 1
    out = _transform(f, n, D.actions[gi], M.actions[g], not plus, not hoch)
    if not plus and orientation_sign(n) == -1:
        out = -out
    return out


def cochain_g_action(D, M, g, f, hoch=False):
    f = numpy.asarray(f, dtype=object)
    n = f.ndim - 1 if hoch else f.shape[0]
    return cochain_action_batch(D, M, g, _one(f), n, hoch)[0]


@_integral_fast_path(2)
def t_operator_batch(D, M, f, n, hoch=False):
    """(T_n f)([r]; a) = (-1)^((n-1)(n-2)/2) f([n-r+1]; a_n*, ..., a_1*)*."""
    M = _module(D, M)
    if D.involution is None or M.involution is None:
        raise InputError("involutions on D and M are required")
    out = _transform(f, n, D.involution, M.involution, True, not hoch)
    return -out if orientation_sign(n) == -1 else out


def t_operator(D, M, f, hoch=False):
    f = numpy.asarray(f, dtype=object)
    n = f.ndim - 1 if hoch else f.shape[0]
    return t_operator_batch(D, M, _one(f), n, hoch)[0]


def _identity_batch(shape):
    N = int(numpy.prod(shape)) if shape else 1
    return em.identity(N).reshape((N,) + tuple(shape))


def involutive_subspace(D, M, n, sign=1, hoch=False):
    """
    Basis (rows, in cochain layout) of the sign-eigenspace of T_n: iC^n for
    sign = +1 and i_C^n for sign = -1.  T_n squares to the identity, so the
    eigenspace is spanned by the vectors e + sign T_n(e).
    """
    M = _module(D, M)
    shape = hoch_shape(n, D.dim, M.dim) if hoch else dend_shape(n, D.dim, M.dim)
    E = _identity_batch(shape)
    T = t_operator_batch(D, M, E, n, hoch)
    N = E.shape[0]
    P = E.reshape(N, -1) + T.reshape(N, -1) * sign
    basis = em.row_basis(P)
    return basis.reshape((basis.shape[0],) + shape)


# -- bicomplex ---------------------------------------------------------------

@_integral_fast_path(2)
def horizontal_coboundary_batch(D, M, f, i, j, hoch=False):
    """delta applied pointwise in the group arguments: (i, j) -> (i, j + 1)."""
    M = _module(D, M)
    G = 1 if D.group is None else len(D.group)
    B = f.shape[0]
    inner = f.reshape((B * G ** i,) + f.shape[1 + i:])
    if hoch:
        out = hoch_coboundary_batch(D, M, inner, j)
    else:
        out = dend_coboundary_batch(D, M, inner, j)
    return out.reshape((B,) + (G,) * i + out.shape[1:])


@_integral_fast_path(2)
def vertical_coboundary_batch(D, M, f, i, j, hoch=False):
    """Group differential whose leading term is the cochain action: (i, j) -> (i + 1, j)."""
    M = _module(D, M)
    _need_actions(D, M)

    def act(g, x):
        return cochain_action_batch(D, M, g, x, j, hoch)
    return grp_coboundary_batch(D.group, act, f, i)


def horizontal_coboundary(D, M, f, i, hoch=False):
    f = numpy.asarray(f, dtype=object)
    j = f.ndim - 1 - i if hoch else f.shape[i]
    return horizontal_coboundary_batch(D, M, _one(f), i, j, hoch)[0]


def vertical_coboundary(D, M, f, i, hoch=False):
    f = numpy.asarray(f, dtype=object)
    j = f.ndim - 1 - i if hoch else f.shape[i]
    return vertical_coboundary_batch(D, M, _one(f), i, j, hoch)[0]


def bi_shape(i, j, G, d, m, hoch=False):
    return (G,) * i + (hoch_shape(j, d, m) if hoch else dend_shape(j, d, m))


def total_components(n):
    """Bidegrees (i, j) with i + j = n, i >= 0, j >= 1, in storage order."""
    return [(i, n - i) for i in range(n)]


def total_dim(D, M, n, hoch=False):
    M = _module(D, M)
    G = len(D.group)
    return sum(int(numpy.prod(bi_shape(i, j, G, D.dim, M.dim, hoch)))
               for i, j in total_components(n))


def split_total(D, M, x, n, hoch=False):
    """Cut a batch of flat total cochains (B, N) into bidegree components."""
    M = _module(D, M)
    G = len(D.group)
    B = x.shape[0]
    out, pos = [], 0
    for i, j in total_components(n):
        shape = bi_shape(i, j, G, D.dim, M.dim, hoch)
        size = int(numpy.prod(shape))
        out.append(x[:, pos:pos + size].reshape((B,) + shape))
        pos += size
    if pos != x.shape[1]:
        raise InputError("total %d-cochain has %d coordinates, expected %d" % (n, x.shape[1], pos))
    return out


def join_total(parts):
    B = parts[0].shape[0]
    return numpy.concatenate([p.reshape(B, -1) for p in parts], axis=1)


@_integral_fast_path(2)
def total_coboundary_batch(D, M, x, n, hoch=False):
    """d(c) = d_v(c) + (-1)^i d_h(c) on every (i, j) component."""
    M = _module(D, M)
    _need_actions(D, M)
    G = len(D.group)
    parts = split_total(D, M, x, n, hoch)
    B = x.shape[0]
    outs = [_zeros((B,) + bi_shape(i, j, G, D.dim, M.dim, hoch), x)
            for i, j in total_components(n + 1)]
    for (i, j), c in zip(total_components(n), parts):
        # (i, j) -> (i + 1, j) sits at index i + 1; (i, j + 1) at index i
        outs[i + 1] = outs[i + 1] + vertical_coboundary_batch(D, M, c, i, j, hoch)
        h = horizontal_coboundary_batch(D, M, c, i, j, hoch)
        outs[i] = outs[i] + (-h if i % 2 else h)
    return join_total(outs)


def total_coboundary(D, M, x, n, hoch=False):
    return total_coboundary_batch(D, M, numpy.asarray(x, dtype=object)[None], n, hoch)[0]


# -- complexes and cohomology ------------------------------------------------

THEORIES = ("dend", "inv", "skew", "hoch", "inv_hoch", "grp", "oriented_dend", "oriented_hoch")
_ALIASES = {"oriented": "oriented_dend", "ihoch": "inv_hoch"}


class Complex:
    """
    One of the cochain complexes, exposing dim(n), a basis of the cochain
    space at degree n (None means the standard basis) and apply(n, X) that
    maps a batch of flat cochains to degree n + 1.
    """

    def __init__(self, theory, D, M=None):
        theory = _ALIASES.get(theory, theory)
        if theory not in THEORIES:
            raise InputError("unknown theory %r (choose from %s)" % (theory, ", ".join(THEORIES)))
        self.theory = theory
        self.D = D
        self.M = _module(D, M)
        if theory in ("inv", "skew", "inv_hoch"):
            if D.involution is None or self.M.involution is None:
                raise InputError("theory %s needs involutions on the algebra and the module" % theory)
        if theory in ("grp", "oriented_dend", "oriented_hoch"):
            _need_actions(D, self.M)
        self.lo = 0 if theory in ("hoch", "inv_hoch", "grp") else 1
        self._int = integer_data(D, self.M)

    def _check(self, n):
        if n < self.lo:
            raise InputError("degree %d is below the start %d of the %s complex"
                             % (n, self.lo, self.theory))

    def shape(self, n):
        d, m = self.D.dim, self.M.dim
        if self.theory in ("dend", "inv", "skew"):
            return dend_shape(n, d, m)
        if self.theory in ("hoch", "inv_hoch"):
            return hoch_shape(n, d, m)
        if self.theory == "grp":
            return (len(self.D.group),) * n + (m,)
        return (total_dim(self.D, self.M, n, self.theory == "oriented_hoch"),)

    def dim_ambient(self, n):
        return int(numpy.prod(self.shape(n)))

    def basis(self, n):
        self._check(n)
        if self.theory == "inv":
            return involutive_subspace(self.D, self.M, n, 1)
        if self.theory == "skew":
            return involutive_subspace(self.D, self.M, n, -1)
        if self.theory == "inv_hoch":
            return involutive_subspace(self.D, self.M, n, 1, hoch=True)
        return None

    def apply(self, n, X):
        """X: (B, dim_ambient(n)) -> (B, dim_ambient(n + 1))."""
        self._check(n)
        D, M, t = self.D, self.M, self.theory
        B = X.shape[0]
        X = numpy.asarray(X, dtype=object)
        shape = (B,) + self.shape(n)

        def run(D, M, X):
            if t in ("oriented_dend", "oriented_hoch"):
                return total_coboundary_batch(D, M, X, n, t == "oriented_hoch")
            Xs = X.reshape(shape)
            if t in ("dend", "inv", "skew"):
                Y = dend_coboundary_batch(D, M, Xs, n)
            elif t in ("hoch", "inv_hoch"):
                Y = hoch_coboundary_batch(D, M, Xs, n)
            else:
                Y = grp_coboundary_batch(D.group, module_action(M.actions), Xs, n)
            return Y.reshape(B, -1)
        if self._int is not None:
            return _run_integral(run, self._int, X)
        return run(D, M, X)

    def cochains(self, n):
        """Rows spanning the cochain space at degree n."""
        b = self.basis(n)
        if b is None:
            return em.identity(self.dim_ambient(n))
        return b.reshape(b.shape[0], self.dim_ambient(n))


def _workers():
    try:
        return max(1, int(os.environ.get("DENDRO_THREADS", "1")))
    except ValueError:
        raise InputError("DENDRO_THREADS must be an integer")


def _degree_data(cx, n):
    """(cochain rows, their images, rank of the images)."""
    C = cx.cochains(n)
    if C.shape[0] == 0:
        return C, em.zeros((0, cx.dim_ambient(n + 1))), 0
    Y = cx.apply(n, C)
    return C, Y, em.rank(Y)


def _pmap(fn, items):
    workers = min(_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


class _DegreeJob:
    def __init__(self, cx):
        self.cx = cx

    def __call__(self, n):
        return _degree_data(self.cx, n)


def cohomology(theory, D, M=None, degrees=(1, 2, 3), witnesses=False):
    """
    Records {degree, dim_C, dim_Z, dim_B, dim_H} for each requested degree,
    computed from exact ranks; with witnesses=True each record also carries
    cocycles (rows in the ambient layout) whose classes form a basis of H.
    """
    cx = theory if isinstance(theory, Complex) else Complex(theory, D, M)
    degrees = sorted(set(int(n) for n in degrees))
    for n in degrees:
        cx._check(n)
    need = sorted(set(degrees) | {n - 1 for n in degrees if n - 1 >= cx.lo})
    data = dict(zip(need, _pmap(_DegreeJob(cx), need)))
    out = []
    for n in degrees:
        C, Y, rk = data[n]
        dim_C = C.shape[0]
        dim_B = data[n - 1][2] if n - 1 >= cx.lo else 0
        rec = {"degree": n, "dim_C": dim_C, "dim_Z": dim_C - rk, "dim_B": dim_B,
               "dim_H": dim_C - rk - dim_B}
        if witnesses:
            prev = data[n - 1][1] if n - 1 >= cx.lo else em.zeros((0, C.shape[1]))
            rec["witnesses"] = _witnesses(C, Y, prev)
            assert len(rec["witnesses"]) == rec["dim_H"]
        out.append(rec)
    return out


def cohomology_dim(theory, D, M=None, n=1):
    return cohomology(theory, D, M, [n])[0]["dim_H"]


def _witnesses(C, Y, prev_images):
    """Cocycles extending a basis of the coboundaries to one of the cocycles."""
    if C.shape[0] == 0:
        return []
    if Y.shape[1] == 0:
        coeffs = [list(row) for row in em.identity(C.shape[0])]
    else:
        coeffs = em.kernel_basis(em.Matrix.from_array(Y.T))
    span = [list(v) for v in prev_images if any(x != 0 for x in v)]
    base = em.rank(em.array(span)) if span else 0
    chosen = []
    for c in coeffs:
        z = numpy.dot(em.array(c), C)
        trial = span + [list(z)]
        r = em.rank(em.array(trial))
        if r > base:
            span, base = trial, r
            chosen.append(z)
    return chosen


def differential_matrix(theory, D, M, n):
    """Matrix of the degree-n differential (columns = standard cochain basis)."""
    cx = Complex(theory, D, M)
    E = em.identity(cx.dim_ambient(n))
    return em.Matrix.from_array(cx.apply(n, E).T)


# -- degree-2 cocycles of the oriented theory ---------------------------------

def _alpha_bi(alpha):
    """alpha[g, a, l] -> bicochain layout at (1, 1): [g, 0, a, l]."""
    return alpha[:, None]


def two_cochain_total(D, M, alpha, beta):
    """Flat total 2-cochain with beta at (0, 2) and alpha at (1, 1)."""
    return join_total([beta[None], _alpha_bi(alpha)[None]])[0]


def two_cochain_split(D, M, x):
    beta, alpha = split_total(D, M, numpy.asarray(x, dtype=object)[None], 2)
    return alpha[0][:, 0], beta[0]


def _check_pair(D, M, alpha, beta):
    G = len(D.group)
    alpha = numpy.asarray(alpha, dtype=object)
    beta = numpy.asarray(beta, dtype=object)
    if alpha.shape != (G, D.dim, M.dim):
        raise InputError("alpha must have shape %s, got %s" % ((G, D.dim, M.dim), alpha.shape))
    if beta.shape != dend_shape(2, D.dim, M.dim):
        raise InputError("beta must have shape %s, got %s" % (dend_shape(2, D.dim, M.dim), beta.shape))
    return alpha, beta


def two_cocycle_conditions(D, M, alpha, beta):
    """
    The three conditions on (alpha, beta), evaluated directly from their
    displayed forms.  Returns the first failing Report or a pass.
    """
    M = _module(D, M)
    _need_actions(D, M)
    alpha, beta = _check_pair(D, M, alpha, beta)
    G = D.group
    A, Bm = D.actions, M.actions
    ein = numpy.einsum
    # alpha(gh; a) = g alpha(h; g^-1 a) + alpha(g; a)
    for g, h in iproduct(G, repeat=2):
        gi = G.inv(g)
        lhs = alpha[G.mul(g, h)]
        rhs = ein("pa,pk,lk->al", A[gi], alpha[h], Bm[g]) + alpha[g]
        for a in range(D.dim):
            if (lhs[a] != rhs[a]).any():
                return Report(False, "alpha(gh; a) = g alpha(h; g^-1 a) + alpha(g; a)",
                              {"g": G.elements[g], "h": G.elements[h], "a": a},
                              list(lhs[a]), list(rhs[a]))
    # theta_1([r]; a, alpha(g; b)) - alpha(g; pi([r]; a, b)) + theta_2([r]; alpha(g; a), b)
    #   = (g beta)([r]; a, b) - beta([r]; a, b)
    for g in G:
        al = alpha[g]
        gbeta = cochain_g_action(D, M, g, beta)
        for r, (th1, pi, th2) in enumerate(((M.left_prec, D.left, M.right_prec),
                                            (M.left_succ, D.right, M.right_succ))):
            lhs = (ein("bk,akl->abl", al, th1) - ein("abp,pl->abl", pi, al)
                   + ein("ak,kbl->abl", al, th2))
            rhs = gbeta[r] - beta[r]
            for a, b in iproduct(range(D.dim), repeat=2):
                if (lhs[a, b] != rhs[a, b]).any():
                    return Report(False, "d_h alpha = d_v beta (%s)" % ("left", "right")[r],
                                  {"g": G.elements[g], "r": r + 1, "a": a, "b": b},
                                  list(lhs[a, b]), list(rhs[a, b]))
    db = dend_coboundary(D, M, beta)
    for idx in iproduct(*[range(k) for k in db.shape[:-1]]):
        if (db[idx] != 0).any():
            return Report(False, "delta_dend beta = 0",
                          {"r": idx[0] + 1, "args": list(idx[1:])}, list(db[idx]),
                          [0] * M.dim)
    return passed("2-cocycle")


def is_two_cocycle(D, M, alpha, beta):
    """Direct conditions, cross-checked against the total differential."""
    M = _module(D, M)
    rep = two_cocycle_conditions(D, M, alpha, beta)
    x = two_cochain_total(D, M, *_check_pair(D, M, alpha, beta))
    in_kernel = em.is_zero(total_coboundary(D, M, x, 2))
    if bool(rep) != in_kernel:
        raise AssertionError("cocycle conditions disagree with the total differential")
    return rep


def two_coboundary_from(D, M, gamma):
    """
    (alpha, beta) with alpha(g; a) = g gamma(g^-1 a) - gamma(a) and
    beta = delta_dend(gamma), gamma[a, l] the matrix of gamma: D -> M.
    """
    M = _module(D, M)
    _need_actions(D, M)
    gamma = numpy.asarray(gamma, dtype=object)
    if gamma.shape != (D.dim, M.dim):
        raise InputError("gamma must have shape %s, got %s" % ((D.dim, M.dim), gamma.shape))
    G = D.group
    alpha = numpy.array([numpy.einsum("pa,pk,lk->al", D.actions[G.inv(g)], gamma, M.actions[g]) - gamma
                         for g in G], dtype=object)
    beta = dend_coboundary(D, M, gamma[None])
    return alpha, beta


def cohomologous(D, M, pair1, pair2):
    """Some gamma with pair1 - pair2 = two_coboundary_from(gamma), or None."""
    M = _module(D, M)
    x = (two_cochain_total(D, M, *_check_pair(D, M, *pair1))
         - two_cochain_total(D, M, *_check_pair(D, M, *pair2)))
    E = em.identity(D.dim * M.dim)
    cols = total_coboundary_batch(D, M, E, 1)
    sol = em.solve(em.Matrix.from_array(cols.T), list(x))
    if sol is None:
        return None
    return em.array(sol).reshape(D.dim, M.dim)


def two_cocycle_basis(D, M=None):
    """A basis of the oriented 2-cocycles, as (alpha, beta) pairs."""
    M = _module(D, M)
    cx = Complex("oriented_dend", D, M)
    Y = cx.apply(2, em.identity(cx.dim_ambient(2)))
    return [two_cochain_split(D, M, em.array(v))
            for v in em.kernel_basis(em.Matrix.from_array(Y.T))]
