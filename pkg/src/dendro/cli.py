"""
Command-line front end.

Exit codes: 0 = every check passed, 1 = a mathematical violation was found,
2 = malformed input.  Output is deterministic (no timestamps, fixed order).
"""

import argparse
import sys

from . import exactmat as em
from . import io
from .algebra import Representation, validate
from .errors import InputError

PASS, FAIL, BAD = 0, 1, 2


# -- helpers -------------------------------------------------------------------

def _load_algebra(path):
    return io.algebra_from_json(io.load_file(path))


def _load_pair(args, D, M, path):
    return io.pair_from_json(io.load_file(path), D, M)


def _setup(args):
    D = _load_algebra(args.algebra)
    M = io.module_from_json(io.load_file(args.module), D) if args.module else Representation.regular(D)
    return D, M


def _table(rows, cols):
    """Aligned text table of dicts."""
    cells = [[str(c) for c in cols]] + [[_cell(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]


def _cell(v):
    if isinstance(v, list):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    return str(v)


def _emit(args, payload, lines):
    if args.format == "json":
        print(io.dump(payload))
    else:
        for line in lines:
            print(line)


def _reports(args, reports, extra=None):
    ok = all(reports)
    payload = dict(extra or {})
    payload["ok"] = ok
    payload["reports"] = [r.to_dict() for r in reports]
    _emit(args, payload, [str(r) for r in reports])
    return PASS if ok else FAIL


def _common(p, module=True):
    p.add_argument("--format", choices=("text", "json"), default="text")
    if module:
        p.add_argument("--module", help="representation JSON (default: the regular module)")


# -- commands ------------------------------------------------------------------

def cmd_validate(args):
    D, M = _load_algebra(args.algebra), None
    if args.module:
        M = io.module_from_json(io.load_file(args.module), D)
    return _reports(args, validate(D, M))


def cmd_cohomology(args):
    from .cohomology import Complex, cohomology
    D, M = _setup(args)
    cx = Complex(args.theory, D, M)
    lo = cx.lo if args.min_degree is None else args.min_degree
    recs = cohomology(cx, D, M, range(lo, args.max_degree + 1), witnesses=args.witnesses)
    for r in recs:
        if "witnesses" in r:
            r["witnesses"] = [io.array_to_json(w) for w in r["witnesses"]]
    lines = ["theory %s" % cx.theory] + _table(recs, ("degree", "dim_C", "dim_Z", "dim_B", "dim_H"))
    if args.witnesses:
        for r in recs:
            for w in r["witnesses"]:
                lines.append("H^%d witness %s" % (r["degree"], _cell(w)))
    _emit(args, {"theory": cx.theory, "degrees": recs}, lines)
    return PASS


def cmd_split(args):
    from .cohomology import cohomology
    D, M = _setup(args)
    degs = range(1, args.max_degree + 1)
    res = {t: [r["dim_H"] for r in cohomology(t, D, M, degs)] for t in ("dend", "inv", "skew")}
    rows = [{"degree": n, "dend": res["dend"][k], "inv": res["inv"][k], "skew": res["skew"][k],
             "ok": res["dend"][k] == res["inv"][k] + res["skew"][k]} for k, n in enumerate(degs)]
    ok = all(r["ok"] for r in rows)
    _emit(args, {"ok": ok, "degrees": rows},
          _table(rows, ("degree", "dend", "inv", "skew", "ok")) + ["PASS" if ok else "FAIL"])
    return PASS if ok else FAIL


def smap_reports(D, M, max_degree):
    """S is a chain map; it sends involutive (and G-twisted) cochains to their Hochschild analogues."""
    from .algebra import Report, passed
    from .cohomology import (_identity_batch, cochain_action_batch, dend_coboundary_batch,
                             dend_shape, hoch_coboundary_batch, involutive_subspace,
                             s_map_batch, t_operator_batch)
    out = []
    for n in range(1, max_degree + 1):
        E = _identity_batch(dend_shape(n, D.dim, M.dim))
        lhs = hoch_coboundary_batch(D, M, s_map_batch(E), n)
        rhs = s_map_batch(dend_coboundary_batch(D, M, E, n))
        out.append(passed("d_Hoch S_%d = S_%d d_dend" % (n, n + 1)) if (lhs == rhs).all()
                   else Report(False, "d_Hoch S_%d = S_%d d_dend" % (n, n + 1), {"n": n}))
        if D.involution is not None and M.involution is not None:
            for sign in (1, -1):
                B = involutive_subspace(D, M, n, sign)
                S = s_map_batch(B)
                ok = (t_operator_batch(D, M, S, n, hoch=True) == S * sign).all()
                name = "S_%d maps the %s-eigenspace of T into its Hochschild analogue" % (n, "+" if sign == 1 else "-")
                out.append(passed(name) if ok else Report(False, name, {"n": n}))
        if D.group is not None and M.actions is not None:
            for g in D.group:
                a = s_map_batch(cochain_action_batch(D, M, g, E, n))
                b = cochain_action_batch(D, M, g, s_map_batch(E), n, hoch=True)
                name = "S_%d(g f) = g S_%d(f)" % (n, n)
                if not (a == b).all():
                    out.append(Report(False, name, {"n": n, "g": D.group.elements[g]}))
                    break
            else:
                out.append(passed(name))
    return out


def cmd_smap(args):
    D, M = _setup(args)
    return _reports(args, smap_reports(D, M, args.max_degree))


def cmd_cocycle(args):
    from .cohomology import is_two_cocycle, two_coboundary_from
    from .extdef import is_coboundary_pair
    D, M = _setup(args)
    if args.gamma:
        gamma = io.array_from_json(io.load_file(args.gamma), (D.dim, M.dim))
        alpha, beta = two_coboundary_from(D, M, gamma)
        rep = is_two_cocycle(D, M, alpha, beta)
        _emit(args, {"ok": bool(rep), "cochain": io.pair_to_json(alpha, beta)},
              [str(rep), io.dump(io.pair_to_json(alpha, beta))])
        return PASS if rep else FAIL
    alpha, beta = _load_pair(args, D, M, args.cochain)
    rep = is_two_cocycle(D, M, alpha, beta)
    extra = {}
    lines = [str(rep)]
    if rep:
        gamma = is_coboundary_pair(D, M, alpha, beta)
        extra["coboundary"] = gamma is not None
        lines.append("coboundary: %s" % ("yes" if gamma is not None else "no"))
        if gamma is not None:
            extra["gamma"] = io.array_to_json(gamma)
    return _reports_with(args, rep, extra, lines)


def _reports_with(args, rep, extra, lines):
    payload = {"ok": bool(rep), "report": rep.to_dict()}
    payload.update(extra)
    _emit(args, payload, lines)
    return PASS if rep else FAIL


def _pair_or_zero(args, D, M, path):
    if path:
        return _load_pair(args, D, M, path)
    return em.zeros((len(D.group), D.dim, M.dim)), em.zeros((2, D.dim, D.dim, M.dim))


def cmd_extend(args):
    from .extdef import build_extension, check_extension
    D, M = _setup(args)
    if D.group is None:
        raise InputError("extensions need an oriented group action")
    alpha, beta = _pair_or_zero(args, D, M, args.cochain)
    E = build_extension(D, M, alpha, beta)
    rep = check_extension(E)
    payload = {"ok": bool(rep), "report": rep.to_dict(), "extension": io.extension_to_json(E)}
    _emit(args, payload, [str(rep), io.dump(io.extension_to_json(E))])
    return PASS if rep else FAIL


def cmd_equiv(args):
    from .extdef import build_extension, extensions_equivalent
    D, M = _setup(args)
    E1 = build_extension(D, M, *_load_pair(args, D, M, args.cochain))
    E2 = build_extension(D, M, *_pair_or_zero(args, D, M, args.other))
    res = extensions_equivalent(E1, E2)
    if res is None:
        _emit(args, {"equivalent": False}, ["inequivalent"])
    else:
        payload = {"equivalent": True, "gamma": io.array_to_json(res["gamma"]),
                   "phi": io.array_to_json(res["phi"])}
        _emit(args, payload, ["equivalent", "gamma %s" % _cell(payload["gamma"]),
                              "phi %s" % _cell(payload["phi"])])
    return PASS


def cmd_deform(args):
    from .extdef import check_deformation, first_order_class, trivial_deformation
    D = _load_algebra(args.algebra)
    if D.group is None:
        raise InputError("deformations need an oriented group action")
    if args.deformation:
        df = io.deformation_from_json(io.load_file(args.deformation), D)
    else:
        df = trivial_deformation(D, args.order)
    upto = min(args.order, df.order)
    rep = check_deformation(df, upto)
    payload = {"ok": bool(rep), "report": rep.to_dict()}
    lines = [str(rep)]
    if rep and df.order >= 1:
        alpha, beta, crep = first_order_class(df, 1)
        zero = em.is_zero(alpha) and em.is_zero(beta)
        payload["class"] = {"cocycle": bool(crep), "zero": zero,
                            "xi": io.array_to_json(alpha), "pi": io.array_to_json(beta)}
        lines.append("first-order class: %s (%s)" % ("(0,0)" if zero else "nonzero", crep))
        rep = crep
    _emit(args, payload, lines)
    return PASS if rep else FAIL


def _eps_group(eps):
    from .algebra import OrientedGroup
    return OrientedGroup.cyclic(2, eps)


def cmd_free(args):
    from .free import FreeDendriform, catalan_dims
    k, N = args.generators, args.max_degree
    G = _eps_group(args.eps) if args.eps else None
    acts = None
    if G is not None:
        gen = em.identity(k) * (-1 if args.sign else 1)
        acts = (em.identity(k), gen)
    F = FreeDendriform(k, N, G, acts)
    dims = F.dims()
    reports = [F.check_dendriform()]
    if G is not None:
        reports.append(F.check_oriented())
    ok = all(reports) and dims == catalan_dims(k, N)
    payload = {"ok": ok, "dims": dims, "reports": [r.to_dict() for r in reports]}
    lines = ["degree dims %s" % " ".join(str(x) for x in dims)] + [str(r) for r in reports]
    if args.table:
        payload["table"] = F.table()
        for row in payload["table"]:
            lines.append("%s  <  %s = %s ;  > = %s" % (row["a"], row["b"], _cell(row["prec"]), _cell(row["succ"])))
    _emit(args, payload, lines)
    return PASS if ok else FAIL


def cmd_maxalg(args):
    from .free import MaxAlgebra
    G, perms = None, None
    if args.eps:
        G = _eps_group(args.eps)
        letters = list(args.alphabet)
        image = letters[::-1] if args.eps == -1 else letters
        perms = [letters, image]
    A = MaxAlgebra(list(args.alphabet), args.length, G, perms)
    reports = [A.check_dendriform(), A.check_sum()]
    if G is not None:
        reports.append(A.check_oriented())
    extra = {"table": A.table()} if args.table else {}
    code = _reports(args, reports, extra)
    if args.table and args.format == "text":
        for row in extra["table"]:
            print("%s < %s = %s ; %s > %s = %s" % (row["a"], row["b"], row["prec"], row["a"], row["b"], row["succ"]))
    return code


def cmd_tensor(args):
    from .free import TensorAlgebra
    k, N = args.generators, args.max_degree
    G = _eps_group(args.eps) if args.eps else None
    acts = (em.identity(k), em.identity(k) * (-1 if args.sign else 1)) if G is not None else None
    T = TensorAlgebra(k, N, G, acts)
    return _reports(args, [T.check_oriented_associative()], {"dim": T.dim})


def cmd_homotopy(args):
    from .homotopy import (a_infinity_sum, check_a_infinity, check_dend_infinity,
                           check_involutive_a_infinity, check_involutive_dend_infinity)
    data = io.load_file(args.family)
    V, fam = io.family_from_json(data)
    S = None
    if data.get("involution") is not None:
        S = io.array_from_json(data["involution"], (V.dim, V.dim))
    sliced = all(isinstance(k, tuple) for k in fam)
    K = args.arity
    if sliced:
        rep = check_dend_infinity(V, fam, K) if S is None else check_involutive_dend_infinity(V, fam, S, K)
        reports = [rep]
        summed = a_infinity_sum(fam)
        reports.append(check_a_infinity(V, summed, K) if S is None
                       else check_involutive_a_infinity(V, summed, S, K))
    else:
        reports = [check_a_infinity(V, fam, K) if S is None else check_involutive_a_infinity(V, fam, S, K)]
    return _reports(args, reports)


def cmd_fixture(args):
    from . import fixtures
    print(io.dump(io.algebra_to_json(fixtures.get(args.name))))
    return PASS


# -- parser ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="dendro", description="Exact computations with oriented dendriform algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="run every applicable checker")
    s.add_argument("algebra")
    _common(s)
    s.set_defaults(func=cmd_validate)

    from .cohomology import THEORIES
    s = sub.add_parser("cohomology", help="dimensions of a cohomology theory")
    s.add_argument("algebra")
    s.add_argument("--theory", default="dend", choices=THEORIES + ("oriented", "ihoch"))
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--min-degree", type=int)
    s.add_argument("--witnesses", action="store_true")
    _common(s)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("split", help="compare dim H_dend with dim iH + dim i_H")
    s.add_argument("algebra")
    s.add_argument("--max-degree", type=int, default=3)
    _common(s)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("smap", help="check the comparison map S to Hochschild cochains")
    s.add_argument("algebra")
    s.add_argument("--max-degree", type=int, default=3)
    _common(s)
    s.set_defaults(func=cmd_smap)

    s = sub.add_parser("cocycle", help="test an oriented 2-cochain, or build one from gamma")
    s.add_argument("algebra")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--cochain", help="JSON {alpha, beta}")
    g.add_argument("--gamma", help="JSON matrix gamma[a][l]; prints its coboundary")
    _common(s)
    s.set_defaults(func=cmd_cocycle)

    s = sub.add_parser("extend", help="build the extension of a 2-cocycle (default: zero)")
    s.add_argument("algebra")
    s.add_argument("--cochain")
    _common(s)
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("equiv", help="decide whether two cocycles give equivalent extensions")
    s.add_argument("algebra")
    s.add_argument("--cochain", required=True)
    s.add_argument("--other", help="second cocycle (default: zero)")
    _common(s)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("deform", help="check a truncated deformation (default: the trivial one)")
    s.add_argument("algebra")
    s.add_argument("--deformation")
    s.add_argument("--order", type=int, default=1)
    _common(s, module=False)
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("free", help="free dendriform algebra window")
    s.add_argument("--generators", type=int, default=1)
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--eps", type=int, choices=(1, -1), help="add Z/2 with this orientation")
    s.add_argument("--sign", action="store_true", help="generator of Z/2 acts on V by -1")
    s.add_argument("--table", action="store_true")
    _common(s, module=False)
    s.set_defaults(func=cmd_free)

    s = sub.add_parser("maxalg", help="MAX dendriform algebra window")
    s.add_argument("--alphabet", default="12", help="letters in increasing order")
    s.add_argument("--length", type=int, default=3)
    s.add_argument("--eps", type=int, choices=(1, -1),
                   help="add Z/2: -1 acts by the order-reversing involution, +1 trivially")
    s.add_argument("--table", action="store_true")
    _common(s, module=False)
    s.set_defaults(func=cmd_maxalg)

    s = sub.add_parser("tensor", help="truncated oriented tensor algebra")
    s.add_argument("--generators", type=int, default=1)
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--eps", type=int, choices=(1, -1))
    s.add_argument("--sign", action="store_true")
    _common(s, module=False)
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("homotopy", help="check a graded Dend-infinity or A-infinity family")
    s.add_argument("family")
    s.add_argument("--arity", type=int, default=3)
    _common(s, module=False)
    s.set_defaults(func=cmd_homotopy)

    s = sub.add_parser("fixture", help="print a catalog algebra as JSON")
    s.add_argument("name")
    s.set_defaults(func=cmd_fixture, format="json")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return BAD


if __name__ == "__main__":
    sys.exit(main())
