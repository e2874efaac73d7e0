"""
Finite windows of three free-type algebras:

* the free dendriform algebra Dend(V) on planar binary trees, with the
  oriented action (mirror the tree and reverse the word when eps(g) = -1);
* the MAX dendriform algebra on non-empty words over an ordered alphabet;
* the non-unital tensor algebra T(V) with concatenation and the oriented
  action, together with the extension of a G-equivariant map V -> A.

Elements are dictionaries {basis key: Fraction}.  A product whose degree
exceeds the window bound is reported as truncated (``None``) and is left out
of every identity check instead of being treated as zero.
"""

from functools import lru_cache
from itertools import product as iproduct

import numpy

from . import exactmat as em
from .algebra import Report, check_group_action, passed, _check_cube
from .combinatorics import LEAF, catalan, enumerate_trees, mirror, tree_to_str
from .errors import InputError


# -- formal linear combinations ----------------------------------------------

def _add(acc, key, c):
    v = acc.get(key, em.ZERO) + c
    if v == 0:
        acc.pop(key, None)
    else:
        acc[key] = v


def lin_add(*xs):
    out = {}
    for x in xs:
        for k, c in x.items():
            _add(out, k, c)
    return out


def lin_scale(x, c):
    c = em.scalar(c)
    return {} if c == 0 else {k: v * c for k, v in x.items()}


def _sorted(x):
    return dict(sorted(x.items()))


# -- trees -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_prec(t, w):
    if w == LEAF:
        return ((t, em.ONE),)
    if t == LEAF:
        return ()
    t1, t2 = t
    out = {}
    for s, c in _tree_prec(t2, w) + _tree_succ(t2, w):
        _add(out, (t1, s), c)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _tree_succ(t, w):
    if t == LEAF:
        return ((w, em.ONE),)
    if w == LEAF:
        return ()
    w1, w2 = w
    out = {}
    for s, c in _tree_prec(t, w1) + _tree_succ(t, w1):
        _add(out, (s, w2), c)
    return tuple(sorted(out.items()))


def tree_products(t, w):
    """(t < w, t > w) as formal sums of trees, by the grafting recursion."""
    if t == LEAF and w == LEAF:
        raise InputError("the products of two leaves are not defined")
    return dict(_tree_prec(t, w)), dict(_tree_succ(t, w))


# -- free dendriform algebra --------------------------------------------------

class FreeDendriform:
    """
    Dend(V) in degrees 1..N for V with basis v_1..v_k.  Basis keys are
    (tree, word) with word a tuple of generator indices of length deg(tree).
    ``actions`` (one k x k matrix per element of ``group``) act on V.
    """

    def __init__(self, generators, max_degree, group=None, actions=None):
        if generators < 1 or max_degree < 1:
            raise InputError("need at least one generator and max_degree >= 1")
        self.k = generators
        self.N = max_degree
        self.group = group
        self.actions = None
        if group is not None:
            if actions is None:
                raise InputError("group given without actions on V")
            acts = tuple(numpy.asarray(a, dtype=object) for a in actions)
            if len(acts) != len(group) or any(a.shape != (self.k, self.k) for a in acts):
                raise InputError("need one %dx%d matrix per group element" % (self.k, self.k))
            rep = check_group_action(group, acts, "action on V")
            if not rep:
                raise InputError(str(rep))
            self.actions = acts

    def basis(self, n):
        """Degree-n basis keys in a fixed order (trees, then words)."""
        return [(t, w) for t in enumerate_trees(n)
                for w in iproduct(range(self.k), repeat=n)]

    def dims(self):
        return [len(self.basis(n)) for n in range(1, self.N + 1)]

    def product(self, x, y, which):
        """x < y or x > y; None when the result would leave the window."""
        out = {}
        for (t, u), a in x.items():
            for (s, v), b in y.items():
                if len(u) + len(v) > self.N:
                    return None
                prec, succ = tree_products(t, s)
                for r, c in (prec if which == "prec" else succ).items():
                    _add(out, (r, u + v), a * b * c)
        return _sorted(out)

    def prec(self, x, y):
        return self.product(x, y, "prec")

    def succ(self, x, y):
        return self.product(x, y, "succ")

    def act(self, g, x):
        """(t; gv_1..gv_n) for eps(g) = +1, (t^T; gv_n..gv_1) for eps(g) = -1."""
        flip = self.group.eps(g) == -1
        out = {}
        for (t, w), c in x.items():
            tt = mirror(t) if flip else t
            for img, coef in _act_word(self.actions[g], w, flip, self.k):
                _add(out, (tt, img), c * coef)
        return _sorted(out)

    def _triples(self):
        for n1 in range(1, self.N + 1):
            for n2 in range(1, self.N - n1 + 1):
                for n3 in range(1, self.N - n1 - n2 + 1):
                    for a in self.basis(n1):
                        for b in self.basis(n2):
                            for c in self.basis(n3):
                                yield a, b, c

    def _pairs(self):
        for n1 in range(1, self.N + 1):
            for n2 in range(1, self.N - n1 + 1):
                for a in self.basis(n1):
                    for b in self.basis(n2):
                        yield a, b

    def check_dendriform(self):
        return window_dendriform(self, self._triples(), self.key_str)

    def check_oriented(self):
        if self.group is None:
            raise InputError("no group action on V")
        return window_oriented(self, self._pairs(), self.key_str)

    @staticmethod
    def key_str(key):
        t, w = key
        return "%s;%s" % (tree_to_str(t), " ".join("v%d" % (i + 1) for i in w))

    def table(self):
        """Multiplication table of in-window basis pairs, JSON-ready."""
        rows = []
        for a, b in self._pairs():
            x, y = {a: em.ONE}, {b: em.ONE}
            rows.append({"a": self.key_str(a), "b": self.key_str(b),
                         "prec": _fmt_elt(self.prec(x, y), self.key_str),
                         "succ": _fmt_elt(self.succ(x, y), self.key_str)})
        return rows


def catalan_dims(generators, max_degree):
    """The expected window dimensions Cat(n) k^n."""
    return [catalan(n) * generators ** n for n in range(1, max_degree + 1)]


def _fmt_elt(x, key_str):
    if x is None:
        return None
    return [[key_str(k), em.format_scalar(c)] for k, c in x.items()]


def _act_word(A, word, flip, k):
    """Expand g(v_w1 .. v_wn) (letters reversed if flip) as (word, coefficient) pairs."""
    letters = word[::-1] if flip else word
    for img in iproduct(range(k), repeat=len(word)):
        coef = em.ONE
        for src, dst in zip(letters, img):
            coef = coef * A[dst, src]
            if coef == 0:
                break
        if coef != 0:
            yield img, coef


# -- generic window checks ----------------------------------------------------

def window_dendriform(alg, triples, key_str):
    """The three dendriform axioms on the given basis triples."""
    for a, b, c in triples:
        x, y, z = {a: em.ONE}, {b: em.ONE}, {c: em.ONE}
        xy_p, xy_s = alg.prec(x, y), alg.succ(x, y)
        yz_p, yz_s = alg.prec(y, z), alg.succ(y, z)
        if None in (xy_p, xy_s, yz_p, yz_s):
            continue
        cases = [
            ("dendriform axiom 1: (a<b)<c = a<(b<c + b>c)",
             alg.prec(xy_p, z), alg.prec(x, lin_add(yz_p, yz_s))),
            ("dendriform axiom 2: (a>b)<c = a>(b<c)",
             alg.prec(xy_s, z), alg.succ(x, yz_p)),
            ("dendriform axiom 3: (a<b + a>b)>c = a>(b>c)",
             alg.succ(lin_add(xy_p, xy_s), z), alg.succ(x, yz_s)),
        ]
        for name, lhs, rhs in cases:
            if lhs is None or rhs is None:
                continue
            if lhs != rhs:
                return Report(False, name,
                              {"a": key_str(a), "b": key_str(b), "c": key_str(c)},
                              _fmt_elt(lhs, key_str), _fmt_elt(rhs, key_str))
    return passed("dendriform axioms (window)")


def window_oriented(alg, pairs, key_str):
    """g(a<b) = ga<gb, g(a>b) = ga>gb (eps = +1); gb>ga, gb<ga (eps = -1)."""
    G = alg.group
    pairs = list(pairs)
    for g in G:
        flip = G.eps(g) == -1
        for a, b in pairs:
            x, y = {a: em.ONE}, {b: em.ONE}
            gx, gy = alg.act(g, x), alg.act(g, y)
            for which, sym in (("prec", "<"), ("succ", ">")):
                prod = alg.product(x, y, which)
                if prod is None:
                    continue
                lhs = alg.act(g, prod)
                if flip:
                    other = "succ" if which == "prec" else "prec"
                    rhs = alg.product(gy, gx, other)
                    name = "g(a%sb) = gb%sga" % (sym, ">" if which == "prec" else "<")
                else:
                    rhs = alg.product(gx, gy, which)
                    name = "g(a%sb) = ga%sgb" % (sym, sym)
                if lhs != rhs:
                    return Report(False, "oriented action: " + name,
                                  {"g": G.elements[g], "a": key_str(a), "b": key_str(b)},
                                  _fmt_elt(lhs, key_str), _fmt_elt(rhs, key_str))
    return passed("oriented action (window)")


# -- MAX dendriform algebra ---------------------------------------------------

def max_products(a, b, order=None):
    """
    (a < b, a > b) for words a, b (tuples of letters).  Letters compare by
    their position in ``order`` (default: their natural order).
    """
    if not a or not b:
        raise InputError("MAX products are defined on non-empty words")
    rank = (lambda x: x) if order is None else order.index
    ab = tuple(a) + tuple(b)
    if max(map(rank, a)) >= max(map(rank, b)):
        return ab, None
    return None, ab


class MaxAlgebra:
    """
    K X^. restricted to words of length <= L over the ordered alphabet
    ``letters`` (listed in increasing order).  ``perms[g]`` lists the image of
    every letter under g.
    """

    def __init__(self, letters, max_length, group=None, perms=None):
        letters = tuple(str(x) for x in letters)
        if not letters or len(set(letters)) != len(letters):
            raise InputError("the alphabet must be non-empty with distinct letters")
        if max_length < 1:
            raise InputError("max_length must be >= 1")
        self.letters = letters
        self.L = max_length
        self.group = group
        self.perms = None
        if group is not None:
            if perms is None or len(perms) != len(group):
                raise InputError("need one letter permutation per group element")
            self.perms = tuple(tuple(str(y) for y in p) for p in perms)
            self._validate_action()

    def _validate_action(self):
        G, X = self.group, self.letters
        pos = {x: i for i, x in enumerate(X)}
        maps = []
        for g in G:
            p = self.perms[g]
            if sorted(p) != sorted(X):
                raise InputError("image of %s is not a permutation of the alphabet" % G.elements[g])
            maps.append(dict(zip(X, p)))
        for g, h in iproduct(G, G):
            gh = G.mul(g, h)
            for x in X:
                if maps[g][maps[h][x]] != maps[gh][x]:
                    raise InputError("letter action is not a group action at g=%s, h=%s"
                                     % (G.elements[g], G.elements[h]))
        for g in G:
            e = G.eps(g)
            for x, y in iproduct(X, X):
                if pos[x] < pos[y]:
                    gx, gy = pos[maps[g][x]], pos[maps[g][y]]
                    if (e == 1 and not gx < gy) or (e == -1 and not gx > gy):
                        raise InputError(
                            "%s (eps %+d) is not order-%s on %s < %s"
                            % (G.elements[g], e, "preserving" if e == 1 else "reversing", x, y))
        self._maps = maps

    def basis(self, n):
        return list(iproduct(self.letters, repeat=n))

    def all_words(self):
        return [w for n in range(1, self.L + 1) for w in self.basis(n)]

    def product(self, x, y, which):
        out = {}
        for a, s in x.items():
            for b, t in y.items():
                if len(a) + len(b) > self.L:
                    return None
                prec, succ = max_products(a, b, self.letters)
                w = prec if which == "prec" else succ
                if w is not None:
                    _add(out, w, s * t)
        return _sorted(out)

    def prec(self, x, y):
        return self.product(x, y, "prec")

    def succ(self, x, y):
        return self.product(x, y, "succ")

    def act_word(self, g, word):
        """Letterwise image, reversed when eps(g) = -1."""
        img = tuple(self._maps[g][x] for x in word)
        return img[::-1] if self.group.eps(g) == -1 else img

    def act(self, g, x):
        out = {}
        for w, c in x.items():
            _add(out, self.act_word(g, w), c)
        return _sorted(out)

    @staticmethod
    def key_str(w):
        return "".join(w)

    def _triples(self):
        words = self.all_words()
        for a in words:
            for b in words:
                for c in words:
                    if len(a) + len(b) + len(c) <= self.L:
                        yield a, b, c

    def _pairs(self):
        words = self.all_words()
        for a in words:
            for b in words:
                if len(a) + len(b) <= self.L:
                    yield a, b

    def check_dendriform(self):
        return window_dendriform(self, self._triples(), self.key_str)

    def check_sum(self):
        """a < b + a > b equals the concatenation ab on every in-window pair."""
        for a, b in self._pairs():
            s = lin_add(self.prec({a: em.ONE}, {b: em.ONE}), self.succ({a: em.ONE}, {b: em.ONE}))
            if s != {a + b: em.ONE}:
                return Report(False, "a<b + a>b = ab", {"a": "".join(a), "b": "".join(b)})
        return passed("a<b + a>b = ab (window)")

    def check_oriented(self):
        if self.group is None:
            raise InputError("no group action on the alphabet")
        return window_oriented(self, self._pairs(), self.key_str)

    def table(self):
        rows = []
        for a, b in self._pairs():
            p, s = max_products(a, b, self.letters)
            rows.append({"a": "".join(a), "b": "".join(b),
                         "prec": "".join(p) if p else 0, "succ": "".join(s) if s else 0})
        return rows


# -- oriented tensor algebra --------------------------------------------------

class TensorAlgebra:
    """
    T(V) in degrees 1..N (no unit) with concatenation, and the action
    g(v_1..v_n) = gv_1..gv_n (eps = +1) or gv_n..gv_1 (eps = -1).
    """

    def __init__(self, generators, max_degree, group=None, actions=None):
        self.dend = FreeDendriform(generators, max_degree, group, actions)
        self.k, self.N = generators, max_degree
        self.group, self.actions = group, self.dend.actions
        self.words = [w for n in range(1, max_degree + 1)
                      for w in iproduct(range(generators), repeat=n)]
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def dim(self):
        return len(self.words)

    def product(self, x, y, which="mul"):
        out = {}
        for u, a in x.items():
            for v, b in y.items():
                if len(u) + len(v) > self.N:
                    return None
                _add(out, u + v, a * b)
        return _sorted(out)

    def act(self, g, x):
        flip = self.group.eps(g) == -1
        out = {}
        for w, c in x.items():
            for img, coef in _act_word(self.actions[g], w, flip, self.k):
                _add(out, img, c * coef)
        return _sorted(out)

    @staticmethod
    def key_str(w):
        return "".join("v%d" % (i + 1) for i in w) or "1"

    def check_oriented_associative(self):
        for u in self.words:
            for v in self.words:
                for w in self.words:
                    if len(u) + len(v) + len(w) > self.N:
                        continue
                    x, y, z = {u: em.ONE}, {v: em.ONE}, {w: em.ONE}
                    if self.product(self.product(x, y), z) != self.product(x, self.product(y, z)):
                        return Report(False, "associativity (window)",
                                      {"a": self.key_str(u), "b": self.key_str(v), "c": self.key_str(w)})
        if self.group is None:
            return passed("associativity (window)")
        G = self.group
        for g in G:
            for u in self.words:
                for v in self.words:
                    if len(u) + len(v) > self.N:
                        continue
                    x, y = {u: em.ONE}, {v: em.ONE}
                    lhs = self.act(g, self.product(x, y))
                    gx, gy = self.act(g, x), self.act(g, y)
                    rhs = self.product(gy, gx) if G.eps(g) == -1 else self.product(gx, gy)
                    if lhs != rhs:
                        return Report(False, "oriented associative action (window)",
                                      {"g": G.elements[g], "a": self.key_str(u), "b": self.key_str(v)},
                                      _fmt_elt(lhs, self.key_str), _fmt_elt(rhs, self.key_str))
        return passed("oriented associative algebra (window)")

    def extend_map(self, f, A, actions=None):
        """
        The multiplicative extension F(v_1..v_n) = f(v_1)...f(v_n) of
        f: V -> A (f is a dim A x k matrix, A structure constants).  Returns
        (F as a dim A x dim T matrix, report on multiplicativity and
        equivariance over the window).
        """
        A = numpy.asarray(A, dtype=object)
        d = A.shape[0]
        A = _check_cube(A, d, "target product")
        f = numpy.asarray(f, dtype=object)
        if f.shape != (d, self.k):
            raise InputError("f must be a %dx%d matrix" % (d, self.k))
        if self.group is not None:
            if actions is None or len(actions) != len(self.group):
                raise InputError("target needs one action matrix per group element")
            actions = tuple(numpy.asarray(a, dtype=object) for a in actions)
            for g in self.group:
                if not (numpy.dot(actions[g], f) == numpy.dot(f, self.actions[g])).all():
                    raise InputError("f is not G-equivariant at g=%s" % self.group.elements[g])
        F = em.zeros((d, self.dim))
        for j, w in enumerate(self.words):
            v = f[:, w[0]]
            for letter in w[1:]:
                v = numpy.einsum("i,j,ijk->k", v, f[:, letter], A)
            F[:, j] = v
        return F, self._check_extension(F, A, actions)

    def _vec(self, x):
        v = em.zeros(self.dim)
        for w, c in x.items():
            v[self.index[w]] = c
        return v

    def _check_extension(self, F, A, actions):
        for u in self.words:
            for v in self.words:
                if len(u) + len(v) > self.N:
                    continue
                lhs = F[:, self.index[u + v]]
                rhs = numpy.einsum("i,j,ijk->k", F[:, self.index[u]], F[:, self.index[v]], A)
                if not (lhs == rhs).all():
                    return Report(False, "F(xy) = F(x)F(y)",
                                  {"a": self.key_str(u), "b": self.key_str(v)}, list(lhs), list(rhs))
        if self.group is not None:
            for g in self.group:
                for j, w in enumerate(self.words):
                    lhs = numpy.dot(F, self._vec(self.act(g, {w: em.ONE})))
                    rhs = numpy.dot(actions[g], F[:, j])
                    if not (lhs == rhs).all():
                        return Report(False, "F(gx) = gF(x)",
                                      {"g": self.group.elements[g], "a": self.key_str(w)},
                                      list(lhs), list(rhs))
        return passed("multiplicative equivariant extension (window)")
