"""
Independent reference implementations used by the tests.

Everything here is written with plain loops and dictionaries, without the
package's einsum code, so that agreement is evidence rather than tautology.
"""

from fractions import Fraction
from itertools import permutations, product

import numpy
import sympy


# -- the reindexing maps, transcribed case by case -----------------------------

def r0_literal(m, n, i, r):
    if r <= i - 1:
        return r
    if i <= r <= i + n - 1:
        return i
    return r - n + 1


def ri_literal(m, n, i, r):
    if r <= i - 1 or r >= i + n:
        return {s: 1 for s in range(1, n + 1)}
    return {r - (i - 1): 1}


# -- the MAX model: [r] of arity n keeps a word iff its strict maximum sits in slot r

def max_operation(r, words):
    """n-ary operation [r] on words of distinct letters: concatenation or None."""
    tops = [max(w) for w in words]
    best = max(tops)
    if tops.count(best) != 1 or tops.index(best) != r - 1:
        return None
    return sum(words, ())


def max_composition(m, n, i, r, words, r0, ri):
    """Evaluate the outer [r0] at slot i on the inner formal sum ri, on single letters."""
    inner = words[i - 1:i - 1 + n]
    acc = {}
    for s, c in ri(m, n, i, r).items():
        w = max_operation(s, inner)
        if w is not None:
            acc[w] = acc.get(w, 0) + c
    out = {}
    for w, c in acc.items():
        outer = words[:i - 1] + [w] + words[i - 1 + n:]
        v = max_operation(r0(m, n, i, r), outer)
        if v is not None:
            out[v] = out.get(v, 0) + c
    return out


def check_maps_against_max(m, n, i, r0, ri):
    """r0/ri realise the composition of MAX operations, for every input ordering."""
    N = m + n - 1
    for perm in permutations(range(1, N + 1)):
        words = [(x,) for x in perm]
        for r in range(1, N + 1):
            got = max_composition(m, n, i, r, words, r0, ri)
            direct = max_operation(r, words)
            want = {} if direct is None else {direct: 1}
            if got != want:
                return (perm, r, got, want)
    return None


# -- the dendriform coboundary, one coefficient at a time -------------------------

def _theta(M, side, which, a, v):
    """Action of basis element a on vector v (left: a . v, right: v . a)."""
    m = len(v)
    out = [Fraction(0)] * m
    if side == "left":
        T = M.left_prec if which == 1 else M.left_succ
        for k in range(m):
            if v[k]:
                for l in range(m):
                    out[l] += T[a, k, l] * v[k]
    else:
        T = M.right_prec if which == 1 else M.right_succ
        for k in range(m):
            if v[k]:
                for l in range(m):
                    out[l] += T[k, a, l] * v[k]
    return out


def _f_on(f, slots, args, module_dim):
    """f(formal sum of slots; args) where args are vectors over the basis of D."""
    out = [Fraction(0)] * module_dim
    for s, c in slots.items():
        for idx in product(*[range(len(x)) for x in args]):
            coeff = Fraction(c)
            for x, k in zip(args, idx):
                coeff *= x[k]
            if coeff:
                vec = f[(s - 1,) + idx]
                for l in range(module_dim):
                    out[l] += coeff * vec[l]
    return out


def _basis_vec(d, a):
    v = [Fraction(0)] * d
    v[a] = Fraction(1)
    return v


def delta_dend_loops(D, M, f):
    """(delta f)([r]; a_1..a_{n+1}) straight from the three-part formula."""
    f = numpy.asarray(f, dtype=object)
    n = f.shape[0]
    d, m = D.dim, M.dim
    out = numpy.empty((n + 1,) + (d,) * (n + 1) + (m,), dtype=object)
    for r in range(1, n + 2):
        for args in product(range(d), repeat=n + 1):
            total = [Fraction(0)] * m
            # head: theta_1(R0(2;1,n)[r]; a_1, f(R2(2;1,n)[r]; a_2..))
            inner = _f_on(f, ri_literal(2, n, 2, r),
                          [_basis_vec(d, a) for a in args[1:]], m)
            head = _theta(M, "left", r0_literal(2, n, 2, r), args[0], inner)
            total = [x + y for x, y in zip(total, head)]
            # middle terms
            for i in range(1, n + 1):
                pis = ri_literal(n, 2, i, r)
                prod_vec = [Fraction(0)] * d
                for s, c in pis.items():
                    T = D.left if s == 1 else D.right
                    for k in range(d):
                        prod_vec[k] += c * T[args[i - 1], args[i], k]
                vecs = ([_basis_vec(d, a) for a in args[:i - 1]] + [prod_vec]
                        + [_basis_vec(d, a) for a in args[i + 1:]])
                term = _f_on(f, {r0_literal(n, 2, i, r): 1}, vecs, m)
                sign = -1 if i % 2 else 1
                total = [x + sign * y for x, y in zip(total, term)]
            # tail: (-1)^(n+1) theta_2(R0(2;n,1)[r]; f(R1(2;n,1)[r]; a_1..a_n), a_{n+1})
            inner = _f_on(f, ri_literal(2, n, 1, r), [_basis_vec(d, a) for a in args[:n]], m)
            tail = _theta(M, "right", r0_literal(2, n, 1, r), args[n], inner)
            sign = -1 if (n + 1) % 2 else 1
            total = [x + sign * y for x, y in zip(total, tail)]
            for l in range(m):
                out[(r - 1,) + args + (l,)] = total[l]
    return out


# -- the action of G on cochains ------------------------------------------------

def cochain_action_loops(D, M, g, f):
    """(g f)([r]; a) = g f([r]; g^-1 a) or, for eps(g) = -1, the reversed signed form."""
    f = numpy.asarray(f, dtype=object)
    n = f.shape[0]
    d, m = D.dim, M.dim
    G = D.group
    Ainv = D.actions[G.inv(g)]
    Bg = M.actions[g]
    sign = 1
    if G.eps(g) == -1 and ((n - 1) * (n - 2) // 2) % 2:
        sign = -1
    out = numpy.empty(f.shape, dtype=object)
    for r in range(1, n + 1):
        for args in product(range(d), repeat=n):
            vecs = [[Ainv[k, a] for k in range(d)] for a in args]
            if G.eps(g) == 1:
                slot = r
            else:
                slot = n - r + 1
                vecs = vecs[::-1]
            val = _f_on(f, {slot: 1}, vecs, m)
            for l in range(m):
                out[(r - 1,) + args + (l,)] = sign * sum(Bg[l, k] * val[k] for k in range(m))
    return out


# -- Koszul signs by adjacent transpositions ---------------------------------------

def koszul_sign_by_transpositions(degs, target):
    """
    Sign picked up moving graded symbols (listed with degrees) into the order
    `target` (a permutation of positions), one adjacent swap at a time.
    """
    order = list(range(len(degs)))
    pos_goal = {p: k for k, p in enumerate(target)}
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(order) - 1):
            x, y = order[k], order[k + 1]
            if pos_goal[x] > pos_goal[y]:
                order[k], order[k + 1] = y, x
                if degs[x] % 2 and degs[y] % 2:
                    sign = -sign
                changed = True
    return sign


# -- trees and ranks --------------------------------------------------------------

def count_binary_trees(n):
    """Number of planar binary trees with n internal vertices, by brute recursion."""
    if n == 0:
        return 1
    return sum(count_binary_trees(k) * count_binary_trees(n - 1 - k) for k in range(n))


def sympy_rank(rows):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction)
                          else sympy.Rational(x) for x in r] for r in rows]).rank()


def in_row_span(rows, v):
    """v lies in the span of rows (rank test with sympy)."""
    base = sympy_rank(rows)
    return sympy_rank(list(rows) + [list(v)]) == base
