"""
JSON formats.  Rationals are written as integers or "p/q" strings and read
from either.

Algebra::

    {"basis": ["e1", "e2"],
     "left":  {"i,j": [[k, "p/q"], ...]},     # e_i < e_j = sum c e_k (0-based)
     "right": {...}, "dot": {...},            # dot only for tridendriform
     "involution": [[...]],                   # matrix, columns = images
     "group": {"elements": [...], "table": [[names]], "epsilon": [+-1],
               "actions": {"g": matrix}}}

Module (representation of an algebra of dimension d)::

    {"dim": m, "left_prec": {"i,k": [[l, c]]}, "left_succ": ...,
     "right_prec": {"k,i": [[l, c]]}, "right_succ": ...,
     "involution": matrix, "actions": {"g": matrix}}

Cochains are nested lists of rationals in the array layout of the cohomology
module; a 2-cochain pair is {"alpha": ..., "beta": ...}.  Graded families are
{"degrees": [...], "maps": {"k,r": {"a1,..,ak": [[b, c]]}}} (for A-infinity
families the key is just "k").  Unlisted entries are zero.
"""

import json

import numpy

from . import exactmat as em
from .algebra import (DendriformAlgebra, OrientedGroup, Representation,
                      TridendriformAlgebra)
from .errors import InputError


def rat(x):
    """A JSON number or "p/q" string as a Fraction."""
    if isinstance(x, float):
        raise InputError("floating-point value %r; write rationals as \"p/q\"" % x)
    try:
        return em.scalar(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError("not a rational number: %r" % (x,))


def fmt(x):
    x = em.scalar(x)
    return x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def dump(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=1, sort_keys=False)


def load_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror))
    except json.JSONDecodeError as e:
        raise InputError("%s is not valid JSON: %s" % (path, e))


# -- arrays --------------------------------------------------------------------

def array_to_json(a):
    a = numpy.asarray(a, dtype=object)
    if a.ndim == 0:
        return fmt(a[()])
    return [array_to_json(x) for x in a]


def array_from_json(data, shape=None):
    try:
        a = numpy.array(data, dtype=object)
    except ValueError:
        raise InputError("ragged array")
    flat = a.reshape(-1)
    for i in range(flat.size):
        flat[i] = rat(flat[i])
    if shape is not None and a.shape != tuple(shape):
        raise InputError("array has shape %s, expected %s" % (a.shape, tuple(shape)))
    return a


def _matrix(data, n, what):
    if not isinstance(data, list):
        raise InputError("%s must be a matrix" % what)
    return array_from_json(data, (n, n))


def _sparse_to_json(T):
    out = {}
    for idx in numpy.ndindex(*T.shape[:-1]):
        entries = [[int(k), fmt(c)] for k, c in enumerate(T[idx]) if c != 0]
        if entries:
            out[",".join(str(i) for i in idx)] = entries
    return out


def _sparse_from_json(data, shape, what):
    T = em.zeros(shape)
    if data is None:
        return T
    if not isinstance(data, dict):
        raise InputError("%s must be an object keyed by \"i,j\"" % what)
    for key, entries in data.items():
        try:
            idx = tuple(int(x) for x in str(key).split(","))
        except ValueError:
            raise InputError("%s: bad key %r" % (what, key))
        if len(idx) != len(shape) - 1 or any(not 0 <= i < s for i, s in zip(idx, shape)):
            raise InputError("%s: key %r out of range" % (what, key))
        for item in entries:
            if not isinstance(item, list) or len(item) != 2:
                raise InputError("%s: entries must be [index, coefficient] pairs" % what)
            k = int(item[0])
            if not 0 <= k < shape[-1]:
                raise InputError("%s: output index %d out of range" % (what, k))
            T[idx + (k,)] += rat(item[1])
    return T


# -- groups --------------------------------------------------------------------

def group_to_json(G, actions):
    return {"elements": list(G.elements),
            "table": [[G.elements[G.mul(g, h)] for h in G] for g in G],
            "epsilon": list(G.epsilon),
            "actions": {G.elements[g]: array_to_json(actions[g]) for g in G}}


def group_from_json(data, n):
    """(OrientedGroup, action matrices on a space of dimension n)."""
    try:
        names = [str(x) for x in data["elements"]]
        table = [[names.index(str(x)) for x in row] for row in data["table"]]
        eps = data["epsilon"]
        if isinstance(eps, dict):
            eps = [eps[x] for x in names]
        G = OrientedGroup(names, table, eps)
        acts = data.get("actions")
    except (KeyError, TypeError, ValueError) as e:
        raise InputError("malformed group: %s" % e)
    return G, _actions_from_json(G, acts, n)


def _actions_from_json(G, acts, n):
    if acts is None:
        raise InputError("group given without action matrices")
    if isinstance(acts, dict):
        missing = [x for x in G.elements if x not in acts]
        if missing:
            raise InputError("no action matrix for %s" % ", ".join(missing))
        acts = [acts[x] for x in G.elements]
    if len(acts) != len(G):
        raise InputError("need one action matrix per group element")
    return tuple(_matrix(a, n, "action matrix") for a in acts)


# -- algebras and modules ------------------------------------------------------

def algebra_to_json(D):
    d = D.dim
    out = {"basis": list(D.basis), "left": _sparse_to_json(D.left),
           "right": _sparse_to_json(D.right)}
    if isinstance(D, TridendriformAlgebra):
        out["dot"] = _sparse_to_json(D.dot)
    if D.involution is not None:
        out["involution"] = array_to_json(D.involution)
    if D.group is not None:
        out["group"] = group_to_json(D.group, D.actions)
    assert len(out["basis"]) == d
    return out


def algebra_from_json(data):
    if not isinstance(data, dict) or "basis" not in data:
        raise InputError("an algebra needs a \"basis\" list")
    basis = data["basis"]
    if not isinstance(basis, list) or not basis:
        raise InputError("\"basis\" must be a non-empty list")
    d = len(basis)
    kw = {"basis": tuple(str(b) for b in basis)}
    left = _sparse_from_json(data.get("left"), (d, d, d), "left")
    right = _sparse_from_json(data.get("right"), (d, d, d), "right")
    if data.get("involution") is not None:
        kw["involution"] = _matrix(data["involution"], d, "involution")
    if data.get("group") is not None:
        kw["group"], kw["actions"] = group_from_json(data["group"], d)
    if data.get("dot") is not None:
        return TridendriformAlgebra(left, right, dot=_sparse_from_json(data["dot"], (d, d, d), "dot"), **kw)
    return DendriformAlgebra(left, right, **kw)


def module_to_json(M, group=None):
    out = {"dim": M.dim}
    for name in ("left_prec", "left_succ", "right_prec", "right_succ"):
        out[name] = _sparse_to_json(getattr(M, name))
    if M.involution is not None:
        out["involution"] = array_to_json(M.involution)
    if M.actions is not None:
        names = group.elements if group is not None else [str(i) for i in range(len(M.actions))]
        out["actions"] = {names[g]: array_to_json(a) for g, a in enumerate(M.actions)}
    return out


def module_from_json(data, D):
    if not isinstance(data, dict) or "dim" not in data:
        raise InputError("a module needs \"dim\"")
    d, m = D.dim, int(data["dim"])
    kw = {}
    if data.get("involution") is not None:
        kw["involution"] = _matrix(data["involution"], m, "module involution")
    if data.get("actions") is not None:
        if D.group is None:
            raise InputError("module carries actions but the algebra has no group")
        kw["actions"] = _actions_from_json(D.group, data["actions"], m)
    return Representation(_sparse_from_json(data.get("left_prec"), (d, m, m), "left_prec"),
                          _sparse_from_json(data.get("left_succ"), (d, m, m), "left_succ"),
                          _sparse_from_json(data.get("right_prec"), (m, d, m), "right_prec"),
                          _sparse_from_json(data.get("right_succ"), (m, d, m), "right_succ"),
                          **kw)


# -- cochains, extensions, deformations ----------------------------------------

def pair_to_json(alpha, beta):
    return {"alpha": array_to_json(alpha), "beta": array_to_json(beta)}


def pair_from_json(data, D, M):
    if not isinstance(data, dict) or "alpha" not in data or "beta" not in data:
        raise InputError("a 2-cochain needs \"alpha\" and \"beta\"")
    d, m, G = D.dim, M.dim, len(D.group)
    return (array_from_json(data["alpha"], (G, d, m)),
            array_from_json(data["beta"], (2, d, d, m)))


def extension_to_json(E):
    return {"algebra": algebra_to_json(E.total), "base": algebra_to_json(E.base),
            "module": module_to_json(E.module, E.base.group),
            "inj": array_to_json(E.inj), "proj": array_to_json(E.proj),
            "section": array_to_json(E.section)}


def deformation_to_json(df):
    G = df.base.group
    return {"order": df.order,
            "left": [_sparse_to_json(x) for x in df.left],
            "right": [_sparse_to_json(x) for x in df.right],
            "phi": [{G.elements[g]: array_to_json(p[g]) for g in G} for p in df.phi]}


def deformation_from_json(data, D):
    from .extdef import TruncatedDeformation
    try:
        N = int(data["order"])
        left, right, phi = data["left"], data["right"], data["phi"]
    except (KeyError, TypeError, ValueError):
        raise InputError("a deformation needs \"order\", \"left\", \"right\" and \"phi\"")
    if not (len(left) == len(right) == len(phi) == N + 1):
        raise InputError("deformation lists must have order + 1 entries")
    d = D.dim
    return TruncatedDeformation(
        D,
        tuple(_sparse_from_json(x, (d, d, d), "left") for x in left),
        tuple(_sparse_from_json(x, (d, d, d), "right") for x in right),
        tuple(_actions_from_json(D.group, p, d) for p in phi))


# -- graded families -----------------------------------------------------------

def family_to_json(V, family):
    maps = {}
    for key in sorted(family, key=lambda k: k if isinstance(k, tuple) else (k,)):
        name = "%d,%d" % key if isinstance(key, tuple) else "%d" % key
        maps[name] = _sparse_to_json(numpy.asarray(family[key], dtype=object))
    return {"degrees": list(V.degrees), "maps": maps}


def family_from_json(data):
    from .homotopy import GradedSpace
    try:
        V = GradedSpace(data["degrees"])
        raw = data["maps"]
    except (KeyError, TypeError, ValueError):
        raise InputError("a graded family needs \"degrees\" and \"maps\"")
    d = V.dim
    family = {}
    for name, body in raw.items():
        parts = [int(x) for x in str(name).split(",")]
        k = parts[0]
        if k < 1 or len(parts) > 2:
            raise InputError("bad map key %r" % name)
        key = tuple(parts) if len(parts) == 2 else k
        family[key] = _sparse_from_json(body, (d,) * (k + 1), "map %s" % name)
    kinds = {isinstance(k, tuple) for k in family}
    if len(kinds) > 1:
        raise InputError("mixes sliced (k,r) and unsliced (k) maps")
    return V, family

