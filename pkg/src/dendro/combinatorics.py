"""
Index sets C_n = {[1], ..., [n]}, the reindexing maps R_0 / R_i used by the
dendriform partial compositions, the involutions on C_n and on nonempty
subsets P_n, and planar binary trees.

Everything is 1-based, as [r] in C_n.  A planar binary tree is either the
leaf LEAF = () or a pair (left, right) obtained by grafting.
"""

from functools import lru_cache

from .errors import InputError
from .exactmat import ONE


def _check(m, n, i, r):
    if m < 1 or n < 1:
        raise InputError("arities must be >= 1, got m=%d n=%d" % (m, n))
    if not 1 <= i <= m:
        raise InputError("insertion place %d outside 1..%d" % (i, m))
    if not 1 <= r <= m + n - 1:
        raise InputError("[%d] is not in C_%d" % (r, m + n - 1))


def r0(m, n, i, r):
    """R_0(m; 1,..,n,..,1)[r] with n in the i-th place: C_{m+n-1} -> C_m."""
    _check(m, n, i, r)
    if r <= i - 1:
        return r
    if r <= i + n - 1:
        return i
    return r - n + 1


def ri(m, n, i, r):
    """
    R_i(m; 1,..,n,..,1)[r]: C_{m+n-1} -> K[C_n], as a dict {s: coefficient}.
    Outside the inserted block every [s] of C_n appears with coefficient 1.
    """
    _check(m, n, i, r)
    if i <= r <= i + n - 1:
        return {r - (i - 1): ONE}
    return {s: ONE for s in range(1, n + 1)}


def star_index(n, r):
    """The involution [r] -> [n - r + 1] on C_n."""
    if not 1 <= r <= n:
        raise InputError("[%d] is not in C_%d" % (r, n))
    return n - r + 1


def star_subset(n, S):
    """Complement of S in {1..n}, except that the full set is fixed."""
    S = frozenset(S)
    full = frozenset(range(1, n + 1))
    if not S or not S <= full:
        raise InputError("%s is not a nonempty subset of 1..%d" % (sorted(S), n))
    if S == full:
        return S
    return full - S


def subsets(n):
    """P_n in a fixed order (by size, then lexicographic)."""
    from itertools import combinations
    out = []
    for k in range(1, n + 1):
        out.extend(frozenset(c) for c in combinations(range(1, n + 1), k))
    return out


# -- planar binary trees ------------------------------------------------------

LEAF = ()


def graft(left, right):
    return (left, right)


def is_leaf(t):
    return t == LEAF


@lru_cache(maxsize=None)
def degree(t):
    """Number of internal vertices."""
    if t == LEAF:
        return 0
    return degree(t[0]) + degree(t[1]) + 1


@lru_cache(maxsize=None)
def mirror(t):
    if t == LEAF:
        return LEAF
    return (mirror(t[1]), mirror(t[0]))


@lru_cache(maxsize=None)
def _trees(n):
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(n):
    """All planar binary trees with n internal vertices (n + 1 leaves)."""
    if n < 0:
        raise InputError("negative degree")
    return list(_trees(n))


def catalan(n):
    """Catalan numbers by the convolution recursion."""
    c = [1]
    for k in range(1, n + 1):
        c.append(sum(c[j] * c[k - 1 - j] for j in range(k)))
    return c[n]


def tree_to_str(t):
    if t == LEAF:
        return "|"
    return "(%s,%s)" % (tree_to_str(t[0]), tree_to_str(t[1]))


def tree_from_str(s):
    s = s.replace(" ", "")
    pos = 0

    def parse():
        nonlocal pos
        if s.startswith("|", pos):
            pos += 1
            return LEAF
        if not s.startswith("(", pos):
            raise ValueError("bad tree string %r at %d" % (s, pos))
        pos += 1
        left = parse()
        if not s.startswith(",", pos):
            raise ValueError("bad tree string %r at %d" % (s, pos))
        pos += 1
        right = parse()
        if not s.startswith(")", pos):
            raise ValueError("bad tree string %r at %d" % (s, pos))
        pos += 1
        return (left, right)

    t = parse()
    if pos != len(s):
        raise ValueError("trailing characters in tree string %r" % s)
    return t
