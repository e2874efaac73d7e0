"""
Finite-dimensional dendriform and tridendriform algebras given by structure
constants, together with involutions, oriented group actions,
representations, and the structures derived from them (associative,
pre-Lie, Lie, Rota-Baxter).

Conventions used throughout the package:

* a bilinear product is an object array ``T`` of shape (d, d, d) with
  ``e_i . e_j = sum_k T[i, j, k] e_k``;
* a linear map is a square matrix acting on column vectors, so
  ``g(e_j) = sum_i A[i, j] e_i``;
* representation actions are arrays ``left_prec[i, k, l]`` (coefficient of
  m_l in e_i < m_k) and ``right_prec[k, i, l]`` (coefficient of m_l in
  m_k < e_i), and likewise for >.

Checkers never raise on a mathematical violation; they return a Report
describing the first one found, scanning identities in the order they are
listed and basis tuples lexicographically.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy

from . import exactmat as em
from .errors import InputError


# -- reports -----------------------------------------------------------------

@dataclass
class Report:
    ok: bool
    check: str = ""
    where: dict = field(default_factory=dict)
    lhs: object = None
    rhs: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "PASS %s" % self.check
        loc = ", ".join("%s=%s" % kv for kv in self.where.items())
        s = "FAIL %s" % self.check
        if loc:
            s += " at " + loc
        if self.lhs is not None:
            s += ": lhs=%s rhs=%s" % (_fmt(self.lhs), _fmt(self.rhs))
        if self.detail:
            s += " (%s)" % self.detail
        return s

    def to_dict(self):
        out = {"ok": self.ok, "check": self.check}
        if not self.ok:
            out["where"] = {k: _jsonable(v) for k, v in self.where.items()}
            if self.lhs is not None:
                out["lhs"] = _fmt(self.lhs)
                out["rhs"] = _fmt(self.rhs)
            if self.detail:
                out["detail"] = self.detail
        return out


def passed(check):
    return Report(True, check)


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, numpy.integer):
        return int(v)
    return v


def _fmt(v):
    if isinstance(v, numpy.ndarray):
        v = v.tolist()
    if isinstance(v, (list, tuple)):
        return [_fmt(x) for x in v]
    try:
        return em.format_scalar(v)
    except TypeError:
        return str(v)


def first_mismatch(lhs, rhs, names, check, extra=None):
    """
    Compare two arrays whose trailing axis is a vector of coordinates; report
    the lexicographically first index (over the leading axes) where they
    differ.
    """
    assert lhs.shape == rhs.shape, (lhs.shape, rhs.shape)
    lead = lhs.shape[:-1]
    diff = lhs != rhs
    if not diff.any():
        return passed(check)
    for idx in iproduct(*[range(k) for k in lead]):
        if diff[idx].any():
            where = dict(extra or {})
            where.update(zip(names, idx))
            return Report(False, check, where, list(lhs[idx]), list(rhs[idx]))
    raise AssertionError("unreachable")


# -- small tensor helpers ----------------------------------------------------

def bil(T, x, y):
    """The product of two coordinate vectors under structure constants T."""
    return numpy.einsum("i,j,ijk->k", x, y, T)


def pushforward(T, A, B=None, C=None):
    """
    T'[i, j, k] = T(A e_i, B e_j) expressed in the coordinates of the output,
    optionally followed by C on the output.
    """
    B = A if B is None else B
    out = numpy.einsum("pi,qj,pqk->ijk", A, B, T)
    if C is not None:
        out = numpy.einsum("lk,ijk->ijl", C, out)
    return out


def compose_left(T, U):
    """(a T b) U c  as a 4-index array [a, b, c, out]."""
    return numpy.einsum("ijp,pkl->ijkl", T, U)


def compose_right(T, U):
    """a T (b U c)  as a 4-index array [a, b, c, out]."""
    return numpy.einsum("jkp,ipl->ijkl", U, T)


def _check_square(a, n, what):
    a = numpy.asarray(a, dtype=object)
    if a.shape != (n, n):
        raise InputError("%s must be %dx%d, got %s" % (what, n, n, a.shape))
    return a


def _check_cube(T, d, what):
    T = numpy.asarray(T, dtype=object)
    if T.shape != (d, d, d):
        raise InputError("%s must have shape %s, got %s" % (what, (d, d, d), T.shape))
    return T


# -- groups ------------------------------------------------------------------

class OrientedGroup:
    """
    A finite group given by its multiplication table on element indices,
    together with an orientation eps: G -> {+1, -1}.  Construction checks the
    group axioms exhaustively and that eps is a homomorphism.
    """

    def __init__(self, elements, table, epsilon, identity=None):
        self.elements = tuple(str(e) for e in elements)
        n = len(self.elements)
        if n == 0:
            raise InputError("a group needs at least one element")
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError("multiplication table must be %dx%d" % (n, n))
        if any(not 0 <= x < n for row in self.table for x in row):
            raise InputError("multiplication table has out-of-range entries")
        self.epsilon = tuple(int(e) for e in epsilon)
        if len(self.epsilon) != n or any(e not in (1, -1) for e in self.epsilon):
            raise InputError("orientation must assign +1 or -1 to every element")
        if identity is None:
            ids = [e for e in range(n)
                   if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
            if not ids:
                raise InputError("multiplication table has no identity element")
            identity = ids[0]
        self.identity = int(identity)
        t = self.table
        for g in range(n):
            if t[self.identity][g] != g or t[g][self.identity] != g:
                raise InputError("element %s is not the identity" % self.elements[self.identity])
        for g, h, k in iproduct(range(n), repeat=3):
            if t[t[g][h]][k] != t[g][t[h][k]]:
                raise InputError("table is not associative at (%s, %s, %s)"
                                 % (self.elements[g], self.elements[h], self.elements[k]))
        self._inv = []
        for g in range(n):
            inv = [h for h in range(n) if t[g][h] == self.identity]
            if len(inv) != 1 or t[inv[0]][g] != self.identity:
                raise InputError("element %s has no two-sided inverse" % self.elements[g])
            self._inv.append(inv[0])
        for g, h in iproduct(range(n), repeat=2):
            if self.epsilon[t[g][h]] != self.epsilon[g] * self.epsilon[h]:
                raise InputError("orientation is not a homomorphism at (%s, %s)"
                                 % (self.elements[g], self.elements[h]))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(range(len(self.elements)))

    def __repr__(self):
        return "OrientedGroup(%s, eps=%s)" % (list(self.elements), list(self.epsilon))

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self._inv[g]

    def eps(self, g):
        return self.epsilon[g]

    def index(self, name):
        try:
            return self.elements.index(str(name))
        except ValueError:
            raise InputError("unknown group element %r" % (name,))

    @classmethod
    def trivial(cls):
        return cls(["e"], [[0]], [1])

    @classmethod
    def cyclic(cls, n, eps_generator=1):
        """Z/n with the generator oriented by eps_generator (n even if -1)."""
        if eps_generator == -1 and n % 2:
            raise InputError("Z/%d has no orientation sending the generator to -1" % n)
        names = ["e"] + ["g%d" % k if k > 1 else "g" for k in range(1, n)]
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        eps = [eps_generator ** k for k in range(n)]
        return cls(names, table, eps, identity=0)

    @classmethod
    def klein(cls, eps_a=-1, eps_b=1):
        """Z/2 x Z/2 = {e, a, b, ab} with the given orientations of a and b."""
        names = ["e", "a", "b", "ab"]
        bits = [(0, 0), (1, 0), (0, 1), (1, 1)]
        table = [[bits.index(((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)) for y in bits] for x in bits]
        eps = [eps_a ** x[0] * eps_b ** x[1] for x in bits]
        return cls(names, table, eps, identity=0)


def check_group_action(group, mats, what="action"):
    """Identity acts trivially and A_g A_h = A_{gh}."""
    n = mats[0].shape[0]
    I = em.identity(n)
    if not (numpy.asarray(mats[group.identity]) == I).all():
        return Report(False, "%s: identity acts trivially" % what,
                      {"g": group.elements[group.identity]})
    for g, h in iproduct(group, repeat=2):
        lhs = numpy.dot(mats[g], mats[h])
        rhs = mats[group.mul(g, h)]
        if not (lhs == rhs).all():
            return Report(False, "%s: A_g A_h = A_gh" % what,
                          {"g": group.elements[g], "h": group.elements[h]})
    return passed("%s: group action laws" % what)


# -- algebras ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DendriformAlgebra:
    """
    Structure constants for < (left) and > (right), with an optional
    involution matrix and an optional oriented group action (one matrix per
    group element, in element order).
    """
    left: numpy.ndarray
    right: numpy.ndarray
    basis: tuple = None
    involution: numpy.ndarray = None
    group: OrientedGroup = None
    actions: tuple = None

    def __post_init__(self):
        left = numpy.asarray(self.left, dtype=object)
        if left.ndim != 3 or len(set(left.shape)) != 1:
            raise InputError("structure constants must be a d x d x d array, got %s" % (left.shape,))
        d = left.shape[0]
        object.__setattr__(self, "left", _check_cube(left, d, "left"))
        object.__setattr__(self, "right", _check_cube(self.right, d, "right"))
        basis = self.basis
        if basis is None:
            basis = tuple("e%d" % (i + 1) for i in range(d))
        basis = tuple(str(b) for b in basis)
        if len(basis) != d:
            raise InputError("basis has %d names for dimension %d" % (len(basis), d))
        object.__setattr__(self, "basis", basis)
        if self.involution is not None:
            object.__setattr__(self, "involution", _check_square(self.involution, d, "involution"))
        if (self.group is None) != (self.actions is None):
            raise InputError("group and actions must be given together")
        if self.group is not None:
            acts = tuple(_check_square(a, d, "action matrix") for a in self.actions)
            if len(acts) != len(self.group):
                raise InputError("need one action matrix per group element")
            object.__setattr__(self, "actions", acts)

    @property
    def dim(self):
        return self.left.shape[0]

    def products(self):
        """Named products, in checker order."""
        return {"prec": self.left, "succ": self.right}

    def prec(self, x, y):
        return bil(self.left, x, y)

    def succ(self, x, y):
        return bil(self.right, x, y)

    def replace(self, **kw):
        from dataclasses import replace
        return replace(self, **kw)

    def act(self, g, x):
        return numpy.dot(self.actions[g], x)


@dataclass(frozen=True, eq=False)
class TridendriformAlgebra(DendriformAlgebra):
    dot: numpy.ndarray = None

    def __post_init__(self):
        super().__post_init__()
        if self.dot is None:
            raise InputError("a tridendriform algebra needs the dot product")
        object.__setattr__(self, "dot", _check_cube(self.dot, self.dim, "dot"))

    def products(self):
        return {"prec": self.left, "succ": self.right, "dot": self.dot}


def zero_algebra(d, **kw):
    return DendriformAlgebra(em.zeros((d, d, d)), em.zeros((d, d, d)), **kw)


@dataclass(frozen=True, eq=False)
class Representation:
    """
    Action arrays of D on M: left_prec[i, k, l] is the coefficient of m_l in
    e_i < m_k; right_prec[k, i, l] that of m_l in m_k < e_i (similarly for >).
    Optional involution and group action matrices live on M.
    """
    left_prec: numpy.ndarray
    left_succ: numpy.ndarray
    right_prec: numpy.ndarray
    right_succ: numpy.ndarray
    involution: numpy.ndarray = None
    actions: tuple = None

    def __post_init__(self):
        lp = numpy.asarray(self.left_prec, dtype=object)
        if lp.ndim != 3:
            raise InputError("representation arrays must be 3-dimensional")
        d, m = lp.shape[0], lp.shape[1]
        for name, shape in (("left_prec", (d, m, m)), ("left_succ", (d, m, m)),
                            ("right_prec", (m, d, m)), ("right_succ", (m, d, m))):
            a = numpy.asarray(getattr(self, name), dtype=object)
            if a.shape != shape:
                raise InputError("%s must have shape %s, got %s" % (name, shape, a.shape))
            object.__setattr__(self, name, a)
        if self.involution is not None:
            object.__setattr__(self, "involution", _check_square(self.involution, m, "module involution"))
        if self.actions is not None:
            object.__setattr__(self, "actions",
                               tuple(_check_square(a, m, "module action") for a in self.actions))

    @property
    def dim(self):
        return self.left_prec.shape[1]

    @property
    def algebra_dim(self):
        return self.left_prec.shape[0]

    @classmethod
    def regular(cls, D):
        """D as a representation of itself, with D's involution and action."""
        return cls(D.left, D.right, D.left, D.right,
                   involution=D.involution, actions=D.actions)

    @classmethod
    def zero(cls, d, m, involution=None, actions=None):
        return cls(em.zeros((d, m, m)), em.zeros((d, m, m)),
                   em.zeros((m, d, m)), em.zeros((m, d, m)),
                   involution=involution, actions=actions)

    def left_star(self):
        """Bimodule left action of the associated associative algebra."""
        return self.left_prec + self.left_succ

    def right_star(self):
        return self.right_prec + self.right_succ

    def replace(self, **kw):
        from dataclasses import replace
        return replace(self, **kw)


# -- dendriform / tridendriform axioms ---------------------------------------

def check_dendriform(D):
    """The three dendriform axioms on every basis triple."""
    if not isinstance(D, DendriformAlgebra):
        raise InputError("expected a DendriformAlgebra")
    L, Rt = D.left, D.right
    S = L + Rt
    names = ("i", "j", "k")
    axioms = [
        ("dendriform axiom 1: (a<b)<c = a<(b<c + b>c)", compose_left(L, L), compose_right(L, S)),
        ("dendriform axiom 2: (a>b)<c = a>(b<c)", compose_left(Rt, L), compose_right(Rt, L)),
        ("dendriform axiom 3: (a<b + a>b)>c = a>(b>c)", compose_left(S, Rt), compose_right(Rt, Rt)),
    ]
    for name, lhs, rhs in axioms:
        rep = first_mismatch(lhs, rhs, names, name)
        if not rep:
            return rep
    return passed("dendriform axioms")


def check_tridendriform(D):
    """The seven tridendriform identities on every basis triple."""
    if not isinstance(D, TridendriformAlgebra):
        raise InputError("expected a TridendriformAlgebra")
    L, Rt, P = D.left, D.right, D.dot
    S = L + Rt + P
    names = ("i", "j", "k")
    ids = [
        ("tridendriform 1: (a<b)<c = a<(b<c + b>c + b.c)", compose_left(L, L), compose_right(L, S)),
        ("tridendriform 2: (a>b)<c = a>(b<c)", compose_left(Rt, L), compose_right(Rt, L)),
        ("tridendriform 3: (a<b + a>b + a.b)>c = a>(b>c)", compose_left(S, Rt), compose_right(Rt, Rt)),
        ("tridendriform 4: (a>b).c = a>(b.c)", compose_left(Rt, P), compose_right(Rt, P)),
        ("tridendriform 5: (a<b).c = a.(b>c)", compose_left(L, P), compose_right(P, Rt)),
        ("tridendriform 6: (a.b)<c = a.(b<c)", compose_left(P, L), compose_right(P, L)),
        ("tridendriform 7: (a.b).c = a.(b.c)", compose_left(P, P), compose_right(P, P)),
    ]
    for name, lhs, rhs in ids:
        rep = first_mismatch(lhs, rhs, names, name)
        if not rep:
            return rep
    return passed("tridendriform identities")


def check_associative(A, name="associativity"):
    A = numpy.asarray(A, dtype=object)
    return first_mismatch(compose_left(A, A), compose_right(A, A), ("i", "j", "k"), name)


def associated_associative(D):
    """a * b = a < b + a > b (+ a . b for tridendriform algebras)."""
    A = D.left + D.right
    if isinstance(D, TridendriformAlgebra):
        A = A + D.dot
    rep = check_associative(A)
    if not rep:
        raise AssertionError("sum product is not associative: %s" % rep)
    return A


# -- pre-Lie and Lie ---------------------------------------------------------

def check_pre_lie(P):
    """(a.b).c - a.(b.c) is symmetric in a, b."""
    assoc = compose_left(P, P) - compose_right(P, P)
    return first_mismatch(assoc, assoc.transpose(1, 0, 2, 3), ("i", "j", "k"),
                          "pre-Lie identity")


def check_lie(B):
    rep = first_mismatch(B, -B.transpose(1, 0, 2), ("i", "j"), "antisymmetry")
    if not rep:
        return rep
    # [[a,b],c] + [[b,c],a] + [[c,a],b]
    t = compose_left(B, B)
    jac = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    return first_mismatch(jac, em.zeros(jac.shape), ("i", "j", "k"), "Jacobi identity")


def check_oriented_product(T, group, actions, name):
    """g(a.b) = ga.gb for eps(g) = +1 and gb.ga for eps(g) = -1."""
    for g in group:
        A = actions[g]
        lhs = numpy.einsum("kl,ijl->ijk", A, T)
        if group.eps(g) == 1:
            rhs = pushforward(T, A)
        else:
            rhs = pushforward(T, A).transpose(1, 0, 2)
        rep = first_mismatch(lhs, rhs, ("i", "j"), "oriented %s" % name,
                             {"g": group.elements[g]})
        if not rep:
            return rep
    return passed("oriented %s" % name)


def pre_lie_of(D):
    """a <> b = a > b - b < a, with the pre-Lie (and oriented) checks."""
    P = D.right - D.left.transpose(1, 0, 2)
    rep = check_pre_lie(P)
    if rep and D.group is not None:
        rep = check_oriented_product(P, D.group, D.actions, "pre-Lie")
    return P, rep


def lie_of(D):
    """[a, b] = a <> b - b <> a, with the Lie (and oriented) checks."""
    P = D.right - D.left.transpose(1, 0, 2)
    B = P - P.transpose(1, 0, 2)
    rep = check_lie(B)
    if rep and D.group is not None:
        rep = check_oriented_product(B, D.group, D.actions, "Lie")
    return B, rep


# -- involutions and orientations --------------------------------------------

def check_involution(D, S=None):
    """S^2 = id, (a<b)* = b*>a*, and the consequence (a>b)* = b*<a*."""
    S = D.involution if S is None else _check_square(S, D.dim, "involution")
    if S is None:
        raise InputError("no involution given")
    if not (numpy.dot(S, S) == em.identity(D.dim)).all():
        return Report(False, "involution squares to the identity")
    lhs = numpy.einsum("kl,ijl->ijk", S, D.left)
    rhs = pushforward(D.right, S).transpose(1, 0, 2)
    rep = first_mismatch(lhs, rhs, ("i", "j"), "(a<b)* = b*>a*")
    if not rep:
        return rep
    lhs = numpy.einsum("kl,ijl->ijk", S, D.right)
    rhs = pushforward(D.left, S).transpose(1, 0, 2)
    rep = first_mismatch(lhs, rhs, ("i", "j"), "(a>b)* = b*<a*")
    if not rep:
        return rep
    if isinstance(D, TridendriformAlgebra):
        lhs = numpy.einsum("kl,ijl->ijk", S, D.dot)
        rhs = pushforward(D.dot, S).transpose(1, 0, 2)
        rep = first_mismatch(lhs, rhs, ("i", "j"), "(a.b)* = b*.a*")
        if not rep:
            return rep
    return passed("involution")


_SWAP = {"prec": "succ", "succ": "prec", "dot": "dot"}
_SYM = {"prec": "<", "succ": ">", "dot": "."}


def check_oriented_action(D):
    """Group action laws plus the eps-dependent compatibility with < and >."""
    if D.group is None:
        raise InputError("algebra carries no group action")
    G = D.group
    rep = check_group_action(G, D.actions)
    if not rep:
        return rep
    prods = D.products()
    for g in G:
        A = D.actions[g]
        for name, T in prods.items():
            lhs = numpy.einsum("kl,ijl->ijk", A, T)
            if G.eps(g) == 1:
                rhs = pushforward(T, A)
                case = "g(a%sb) = ga%sgb" % (_SYM[name], _SYM[name])
            else:
                rhs = pushforward(prods[_SWAP[name]], A).transpose(1, 0, 2)
                case = "g(a%sb) = gb%sga" % (_SYM[name], _SYM[_SWAP[name]])
            rep = first_mismatch(lhs, rhs, ("i", "j"), "oriented action: " + case,
                                 {"g": G.elements[g]})
            if not rep:
                return rep
    return passed("oriented action")


def check_representation(D, M):
    """The nine representation identities (one of a, b, c replaced by m)."""
    if M.algebra_dim != D.dim:
        raise InputError("representation is over a %d-dimensional algebra, D has dimension %d"
                         % (M.algebra_dim, D.dim))
    L, Rt = D.left, D.right
    S = L + Rt
    lp, ls, rp, rs = M.left_prec, M.left_succ, M.right_prec, M.right_succ
    lS, rS = lp + ls, rp + rs
    e = numpy.einsum
    checks = [
        # m in the last slot: (a o b) o' m = a o'' (b o''' m)
        ("(a<b)<m = a<(b<m + b>m)", e("ijp,pkl->ijkl", L, lp), e("jkp,ipl->ijkl", lS, lp)),
        ("(a>b)<m = a>(b<m)", e("ijp,pkl->ijkl", Rt, lp), e("jkp,ipl->ijkl", lp, ls)),
        ("(a<b + a>b)>m = a>(b>m)", e("ijp,pkl->ijkl", S, ls), e("jkp,ipl->ijkl", ls, ls)),
        # m in the middle slot
        ("(a<m)<c = a<(m<c + m>c)", e("ijp,pkl->ijkl", lp, rp), e("jkp,ipl->ijkl", rS, lp)),
        ("(a>m)<c = a>(m<c)", e("ijp,pkl->ijkl", ls, rp), e("jkp,ipl->ijkl", rp, ls)),
        ("(a<m + a>m)>c = a>(m>c)", e("ijp,pkl->ijkl", lS, rs), e("jkp,ipl->ijkl", rs, ls)),
        # m in the first slot
        ("(m<b)<c = m<(b<c + b>c)", e("ijp,pkl->ijkl", rp, rp), e("jkp,ipl->ijkl", S, rp)),
        ("(m>b)<c = m>(b<c)", e("ijp,pkl->ijkl", rs, rp), e("jkp,ipl->ijkl", L, rs)),
        ("(m<b + m>b)>c = m>(b>c)", e("ijp,pkl->ijkl", rS, rs), e("jkp,ipl->ijkl", Rt, rs)),
    ]
    for name, lhs, rhs in checks:
        rep = first_mismatch(lhs, rhs, ("x", "y", "z"), "representation: " + name)
        if not rep:
            return rep
    return passed("representation identities")


def check_involutive_representation(D, M):
    """(a<m)* = m*>a*, (a>m)* = m*<a*, and the mirrored pair for m<a, m>a."""
    S, T = D.involution, M.involution
    if S is None or T is None:
        raise InputError("involutive representation needs involutions on D and M")
    if not (numpy.dot(T, T) == em.identity(M.dim)).all():
        return Report(False, "module involution squares to the identity")
    e = numpy.einsum
    checks = [
        ("(a<m)* = m*>a*", e("lp,ikp->ikl", T, M.left_prec), e("pk,qi,pql->ikl", T, S, M.right_succ)),
        ("(a>m)* = m*<a*", e("lp,ikp->ikl", T, M.left_succ), e("pk,qi,pql->ikl", T, S, M.right_prec)),
        ("(m<a)* = a*>m*", e("lp,kip->kil", T, M.right_prec), e("pi,qk,pql->kil", S, T, M.left_succ)),
        ("(m>a)* = a*<m*", e("lp,kip->kil", T, M.right_succ), e("pi,qk,pql->kil", S, T, M.left_prec)),
    ]
    for name, lhs, rhs in checks:
        rep = first_mismatch(lhs, rhs, ("x", "y"), "involutive representation: " + name)
        if not rep:
            return rep
    return passed("involutive representation")


def check_oriented_representation(D, M):
    """The eight eps-dependent compatibilities between G, D and M."""
    if D.group is None or M.actions is None:
        raise InputError("oriented representation needs group actions on D and M")
    G = D.group
    rep = check_group_action(G, M.actions, "module action")
    if not rep:
        return rep
    e = numpy.einsum
    for g in G:
        A, B = D.actions[g], M.actions[g]
        plus = G.eps(g) == 1
        if plus:
            cases = [
                ("g(a<m) = ga<gm", e("lp,ikp->ikl", B, M.left_prec), e("pi,qk,pql->ikl", A, B, M.left_prec)),
                ("g(a>m) = ga>gm", e("lp,ikp->ikl", B, M.left_succ), e("pi,qk,pql->ikl", A, B, M.left_succ)),
                ("g(m<a) = gm<ga", e("lp,kip->kil", B, M.right_prec), e("pk,qi,pql->kil", B, A, M.right_prec)),
                ("g(m>a) = gm>ga", e("lp,kip->kil", B, M.right_succ), e("pk,qi,pql->kil", B, A, M.right_succ)),
            ]
        else:
            cases = [
                ("g(a<m) = gm>ga", e("lp,ikp->ikl", B, M.left_prec), e("pk,qi,pql->ikl", B, A, M.right_succ)),
                ("g(a>m) = gm<ga", e("lp,ikp->ikl", B, M.left_succ), e("pk,qi,pql->ikl", B, A, M.right_prec)),
                ("g(m<a) = ga>gm", e("lp,kip->kil", B, M.right_prec), e("pi,qk,pql->kil", A, B, M.left_succ)),
                ("g(m>a) = ga<gm", e("lp,kip->kil", B, M.right_succ), e("pi,qk,pql->kil", A, B, M.left_prec)),
            ]
        for name, lhs, rhs in cases:
            rep = first_mismatch(lhs, rhs, ("x", "y"), "oriented representation: " + name,
                                 {"g": G.elements[g]})
            if not rep:
                return rep
    return passed("oriented representation")


def validate(D, M=None):
    """Every checker that applies to (D, M); returns the list of reports."""
    reports = []
    if isinstance(D, TridendriformAlgebra):
        reports.append(check_tridendriform(D))
    else:
        reports.append(check_dendriform(D))
    if D.involution is not None:
        reports.append(check_involution(D))
    if D.group is not None:
        reports.append(check_oriented_action(D))
    if M is not None and not isinstance(D, TridendriformAlgebra):
        reports.append(check_representation(D, M))
        if D.involution is not None and M.involution is not None:
            reports.append(check_involutive_representation(D, M))
        if D.group is not None and M.actions is not None:
            reports.append(check_oriented_representation(D, M))
    return reports


# -- Rota-Baxter operators ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class RotaBaxterOperator:
    matrix: numpy.ndarray
    weight: object = 0


def check_rota_baxter(A, R, weight=0, group=None, actions=None):
    """R(a)R(b) = R(R(a)b + aR(b) + weight ab), plus equivariance if acted on."""
    A = numpy.asarray(A, dtype=object)
    d = A.shape[0]
    R = _check_square(R, d, "Rota-Baxter operator")
    lam = em.scalar(weight)
    lhs = pushforward(A, R)
    inner = (numpy.einsum("pi,pjk->ijk", R, A) + numpy.einsum("qj,iqk->ijk", R, A)
             + A * lam)
    rhs = numpy.einsum("lk,ijk->ijl", R, inner)
    rep = first_mismatch(lhs, rhs, ("i", "j"), "Rota-Baxter identity (weight %s)" % em.format_scalar(lam))
    if not rep:
        return rep
    if group is not None:
        for g in group:
            lhs = numpy.dot(R, actions[g])
            rhs = numpy.dot(actions[g], R)
            if not (lhs == rhs).all():
                return Report(False, "Rota-Baxter equivariance R(ga) = g R(a)",
                              {"g": group.elements[g]}, lhs.tolist(), rhs.tolist())
    return passed("Rota-Baxter operator")


def check_oriented_associative(A, group, actions):
    rep = check_associative(A)
    if not rep:
        return rep
    rep = check_group_action(group, actions)
    if not rep:
        return rep
    return check_oriented_product(numpy.asarray(A, dtype=object), group, actions, "associative")


def induced_tridendriform(A, R, weight, group=None, actions=None, basis=None):
    """a < b = aR(b), a > b = R(a)b, a . b = weight ab."""
    A = numpy.asarray(A, dtype=object)
    rep = check_rota_baxter(A, R, weight, group, actions)
    if not rep:
        raise InputError("not a Rota-Baxter operator: %s" % rep)
    R = numpy.asarray(R, dtype=object)
    left = numpy.einsum("qj,iqk->ijk", R, A)
    right = numpy.einsum("pi,pjk->ijk", R, A)
    T = TridendriformAlgebra(left, right, basis=basis, group=group, actions=actions,
                             dot=A * em.scalar(weight))
    rep = check_tridendriform(T)
    if not rep:
        raise AssertionError("induced structure fails: %s" % rep)
    if group is not None:
        rep = check_oriented_action(T)
        if not rep:
            raise AssertionError("induced structure is not oriented: %s" % rep)
    return T


def induced_dendriform(A, R, group=None, actions=None, basis=None):
    """Weight-zero case: a < b = aR(b), a > b = R(a)b."""
    A = numpy.asarray(A, dtype=object)
    rep = check_rota_baxter(A, R, 0, group, actions)
    if not rep:
        raise InputError("not a weight-0 Rota-Baxter operator: %s" % rep)
    R = numpy.asarray(R, dtype=object)
    D = DendriformAlgebra(numpy.einsum("qj,iqk->ijk", R, A),
                          numpy.einsum("pi,pjk->ijk", R, A),
                          basis=basis, group=group, actions=actions)
    rep = check_dendriform(D)
    if not rep:
        raise AssertionError("induced structure fails: %s" % rep)
    if group is not None:
        rep = check_oriented_action(D)
        if not rep:
            raise AssertionError("induced structure is not oriented: %s" % rep)
    return D


def cybe_tensor(A, r):
    """r13 r12 - r12 r23 + r23 r13 as a 3-index coefficient array."""
    e = numpy.einsum
    t1 = e("iz,ky,ikx->xyz", r, r, A)
    t2 = e("xj,kz,jky->xyz", r, r, A)
    t3 = e("yj,xl,jlz->xyz", r, r, A)
    return t1 - t2 + t3


def rb_from_cybe(A, r, group=None, actions=None):
    """
    R(a) = sum r_(1) a r_(2) for a solution r of the associative CYBE.
    Equivariance is asserted only when r is symmetric and G-invariant.
    """
    A = numpy.asarray(A, dtype=object)
    d = A.shape[0]
    r = _check_square(r, d, "r")
    c = cybe_tensor(A, r)
    for idx in iproduct(range(d), repeat=3):
        if c[idx] != 0:
            raise InputError("r does not solve the associative CYBE: component %s is %s"
                             % (idx, em.format_scalar(c[idx])))
    R = numpy.einsum("ij,iap,pjk->ka", r, A, A)
    op = RotaBaxterOperator(R, 0)
    rep = check_rota_baxter(A, R, 0)
    if not rep:
        raise AssertionError("CYBE operator fails the Rota-Baxter identity: %s" % rep)
    if group is not None and (r == r.T).all() and all(
            (numpy.dot(numpy.dot(actions[g], r), actions[g].T) == r).all() for g in group):
        rep = check_rota_baxter(A, R, 0, group, actions)
        if not rep:
            raise AssertionError("symmetric invariant r gave a non-equivariant operator: %s" % rep)
    return op


# -- change of basis ---------------------------------------------------------

def transport(D, P):
    """
    The same algebra written in the basis given by the columns of P.
    Involution and action matrices are conjugated accordingly.
    """
    P = _check_square(P, D.dim, "change of basis")
    Q = em.inverse(P)
    kw = {}
    if D.involution is not None:
        kw["involution"] = numpy.dot(numpy.dot(Q, D.involution), P)
    if D.group is not None:
        kw["actions"] = tuple(numpy.dot(numpy.dot(Q, A), P) for A in D.actions)
        kw["group"] = D.group
    if isinstance(D, TridendriformAlgebra):
        kw["dot"] = pushforward(D.dot, P, C=Q)
        return TridendriformAlgebra(pushforward(D.left, P, C=Q), pushforward(D.right, P, C=Q), **kw)
    return DendriformAlgebra(pushforward(D.left, P, C=Q), pushforward(D.right, P, C=Q), **kw)


def transport_representation(M, P, Q):
    """M rewritten for D in basis P (columns) and M in basis Q (columns)."""
    Qi = em.inverse(Q)
    e = numpy.einsum
    kw = {}
    if M.involution is not None:
        kw["involution"] = numpy.dot(numpy.dot(Qi, M.involution), Q)
    if M.actions is not None:
        kw["actions"] = tuple(numpy.dot(numpy.dot(Qi, B), Q) for B in M.actions)
    return Representation(
        e("pi,qk,pqr,lr->ikl", P, Q, M.left_prec, Qi),
        e("pi,qk,pqr,lr->ikl", P, Q, M.left_succ, Qi),
        e("pk,qi,pqr,lr->kil", Q, P, M.right_prec, Qi),
        e("pk,qi,pqr,lr->kil", Q, P, M.right_succ, Qi),
        **kw)
