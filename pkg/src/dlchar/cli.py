"""Command-line interface.

Subcommands mirror the library layout: `weyl` (relative Weyl groups),
`unipotent` (the census), `rootdata` (order polynomials and the lattice
machinery), `dl` (the rank-1 tables and their verification).  Output is
deterministic; JSON payloads carry a versioned "schema" key.  Exit codes:
0 success, 1 a verification failure (the failing identity is printed), 2
usage errors (argparse's own convention).

Parabolic subsets J are given as comma-separated node indices in Bourbaki
numbering, 1-based (e.g. --J 2,3,4,5 for D4 inside E6); the empty string is
the empty set.  The Weyl enumeration cap honours DLCHAR_WEYL_CAP.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import unipotent as unip
from . import rootdata as rd
from .dltables import (
    get_table,
    lemma_app3_check,
    luconj_check,
    projector_report,
    restriction_suite,
    semisimple_and_depth,
    sl2_table,
    gl2_table,
    verify_dl_identities,
)
from .dltables.degrees import degree_data
from .weyl import CartanType, relative_weyl_type

SCHEMA = "dlchar/1"


def _parse_j(text, rank):
    if text is None or text.strip() == "":
        return []
    try:
        nodes = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse J subset {text!r}") from None
    if any(not 1 <= x <= rank for x in nodes):
        raise ValueError(f"J indices must be 1..{rank} (Bourbaki numbering)")
    return [x - 1 for x in nodes]


# ------------------------------------------------------------------ weyl ----

def cmd_weyl_relative(args):
    ctype = CartanType.parse(args.type)
    J = _parse_j(args.J, ctype.rank)
    types = relative_weyl_type(ctype, J)
    text = "x".join(str(t) for t in types) if types else "1"
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "type": str(ctype),
                          "J": [j + 1 for j in sorted(J)],
                          "relative": [str(t) for t in types]},
                         sort_keys=True))
    else:
        print(text)
    return 0


# -------------------------------------------------------------- unipotent ----

def cmd_unipotent_census(args):
    ctype = CartanType.parse(args.type)
    series = unip.series_breakdown(ctype)
    total = sum(s.total for s in series)
    rows = [{
        "J": [j + 1 for j in s.J],
        "relative": [str(t) for t in s.relative_type],
        "cuspidals": s.cuspidals,
        "irr_count": s.irr_count,
    } for s in series]
    if args.format == "csv":
        print("J;relative;cuspidals;irr_count")
        for r in rows:
            print(f"{','.join(map(str, r['J']))};{'x'.join(r['relative'])};"
                  f"{r['cuspidals']};{r['irr_count']}")
        print(f"total;;{total};")
    else:
        print(json.dumps({"schema": SCHEMA, "type": str(ctype),
                          "total": total, "series": rows}, sort_keys=True))
    return 0


# --------------------------------------------------------------- rootdata ----

def cmd_rootdata_orders(args):
    from .qpoly import Q
    datum = rd.builtin_datum(args.group)
    order = rd.group_order_poly(datum)
    tori = {k: str(rd.torus_order_poly(datum, k)) for k in datum.weyl_keys()}
    steinberg = rd.steinberg_identity_check(datum)
    t1 = rd.t1_factorization_check(datum)
    val_n = order.valuation(Q) == datum.N
    if args.format == "pretty":
        print(f"|G| = {order}")
        for k, t in tori.items():
            print(f"|T_w| for w = {k}: {t}")
        print(f"steinberg identity: {'ok' if steinberg else 'FAILED'}")
        print(f"split torus factorization: {'ok' if t1 else 'FAILED'}")
        print(f"q-valuation equals N={datum.N}: {'ok' if val_n else 'FAILED'}")
    else:
        print(json.dumps({
            "schema": SCHEMA, "group": datum.name,
            "order_poly": order.to_json(),
            "torus_polys": {k: rd.torus_order_poly(datum, k).to_json()
                            for k in datum.weyl_keys()},
            "steinberg_identity": steinberg,
            "t1_factorization": t1,
            "valuation_equals_N": val_n,
        }, sort_keys=True))
    return 0 if steinberg and t1 and val_n else 1


def cmd_rootdata_zset(args):
    datum = rd.builtin_datum(args.group)
    lam = tuple(int(x) for x in args.lam.split(","))
    if len(lam) != datum.rank:
        print(f"error: --lambda needs {datum.rank} comma-separated integers",
              file=sys.stderr)
        return 2
    z = rd.compute_Z(datum, lam, args.n, args.q)
    entries = [{"w": k, "lambda_w": list(v)} for k, v in z]
    if args.format == "pretty":
        for e in entries:
            print(f"w = {e['w']:8s} lambda_w = {tuple(e['lambda_w'])}")
        print(f"|Z| = {len(entries)} of |W| = {datum.order()}")
    else:
        print(json.dumps({"schema": SCHEMA, "group": datum.name,
                          "lambda": list(lam), "n": args.n, "q": args.q,
                          "Z": entries}, sort_keys=True))
    return 0


# --------------------------------------------------------------------- dl ----

def cmd_dl_table(args):
    table = get_table(args.group, args.q)
    if args.format == "pretty":
        width = max(len(l) for l in table.char_labels) + 2
        head = " " * width + "  ".join(f"{l:>10s}" for l in table.class_labels)
        print(head)
        print(" " * width + "  ".join(f"{s:>10d}" for s in table.class_sizes))
        for lbl, row in zip(table.char_labels, table.values):
            cells = "  ".join(f"{str(v):>10s}" for v in row)
            print(f"{lbl:<{width}s}{cells}")
    elif args.format == "csv":
        print("character;" + ";".join(table.class_labels))
        print("size;" + ";".join(str(s) for s in table.class_sizes))
        for lbl, row in zip(table.char_labels, table.values):
            print(f"{lbl};" + ";".join(str(v) for v in row))
    else:
        print(json.dumps({
            "schema": SCHEMA, "group": table.group, "q": table.q,
            "classes": table.class_labels,
            "sizes": table.class_sizes,
            "characters": table.char_labels,
            "values": [[v.to_json() for v in row] for row in table.values],
        }, sort_keys=True))
    return 0


_DL_CHECKS = ("identities", "uniform-all", "lemma", "degrees", "restriction")


def cmd_dl_verify(args):
    checks = list(_DL_CHECKS) if args.all or not args.check else [args.check]
    if args.check and args.check not in _DL_CHECKS:
        print(f"error: unknown check {args.check!r}; choose from "
              f"{', '.join(_DL_CHECKS)}", file=sys.stderr)
        return 2
    table = get_table(args.group, args.q)
    try:
        for check in checks:
            if check == "identities":
                verify_dl_identities(table)
            elif check == "uniform-all":
                projector_report(table)
                luconj_check(table)
            elif check == "lemma":
                if table.group == "SL2":
                    s0s = ["I", "-I"]
                    if table.q >= 5:
                        s0s.append("a1")
                else:
                    s0s = ["a0", "a1", "c0,1"]
                for s0 in s0s:
                    lemma_app3_check(table, s0)
            elif check == "degrees":
                degree_data(table)
                semisimple_and_depth(table)
            elif check == "restriction":
                restriction_suite(sl2_table(args.q), gl2_table(args.q))
            print(f"{table.group}(q={table.q}) {check}: ok")
    except AssertionError as exc:
        print(f"FAILED: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- selfcheck ----

def cmd_selfcheck(args):
    """Run the property suites: Gauss sums, class counts, fixed points."""
    from .cyclotomic import gauss_sum
    from .weyl import (CartanType, ElementStore, class_count_bruteforce,
                       compose, relative_generators)
    failures = []

    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        g = gauss_sum(p)
        if g * g != (-1) ** ((p - 1) // 2) * p:
            failures.append(f"gauss sum square at p={p}")
    print(f"gauss-sum squares for primes <= 31: "
          f"{'ok' if not failures else 'FAILED'}")

    types = (["A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "F4"]
             if args.quick else
             ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
              "B5", "B6", "D4", "D5", "D6", "G2", "F4", "E6"])
    for name in types:
        ct = CartanType.parse(name)
        formula = ct.class_count()
        brute = class_count_bruteforce(ct)
        status = "ok" if formula == brute else "FAILED"
        if formula != brute:
            failures.append(f"class count {name}")
        print(f"class count {name}: formula {formula}, brute force {brute}: "
              f"{status}")

    for name in ("2A3", "2A5", "3D4", "2E6"):
        ct = CartanType.parse(name)
        store = ElementStore(ct.untwisted)
        sigma = store.root_system.sigma_perm(ct)
        fixed = {tuple(store.perms[i])
                 for i in store.sigma_fixed_indices(sigma)}
        gens = relative_generators(ct, [], store.root_system)
        seen = {tuple(store.root_system.identity)}
        frontier = [store.root_system.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    img = compose(w, g)
                    if tuple(img) not in seen:
                        seen.add(tuple(img))
                        nxt.append(img)
            frontier = nxt
        status = "ok" if seen == fixed else "FAILED"
        if seen != fixed:
            failures.append(f"fixed points {name}")
        print(f"relative generators of {name} generate the {len(fixed)} "
              f"twist-fixed elements: {status}")

    if failures:
        print(f"FAILED: {', '.join(failures)}", file=sys.stderr)
        return 1
    return 0


# ------------------------------------------------------------------ parser ----

def build_parser():
    p = argparse.ArgumentParser(
        prog="dlchar",
        description="Exact character-theoretic computations for finite "
                    "groups of Lie type.")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weyl", help="Weyl group operations")
    wsub = w.add_subparsers(dest="sub", required=True)
    wr = wsub.add_parser("relative", help="relative Weyl group of a subset")
    wr.add_argument("--type", required=True)
    wr.add_argument("--J", default="")
    wr.add_argument("--format", choices=("text", "json"), default="text")
    wr.set_defaults(func=cmd_weyl_relative)

    u = sub.add_parser("unipotent", help="unipotent character census")
    usub = u.add_subparsers(dest="sub", required=True)
    uc = usub.add_parser("census", help="count labels per series")
    uc.add_argument("--type", required=True)
    uc.add_argument("--format", choices=("json", "csv"), default="json")
    uc.set_defaults(func=cmd_unipotent_census)

    r = sub.add_parser("rootdata", help="order polynomials and lattices")
    rsub = r.add_subparsers(dest="sub", required=True)
    ro = rsub.add_parser("orders", help="order polynomials and identities")
    ro.add_argument("--group", required=True)
    ro.add_argument("--format", choices=("json", "pretty"), default="json")
    ro.set_defaults(func=cmd_rootdata_orders)
    rz = rsub.add_parser("zset", help="the coset Z with witnesses")
    rz.add_argument("--group", required=True)
    rz.add_argument("--n", type=int, required=True)
    rz.add_argument("--q", type=int, required=True)
    rz.add_argument("--lambda", dest="lam", required=True,
                    help="comma-separated lattice vector")
    rz.add_argument("--format", choices=("json", "pretty"), default="json")
    rz.set_defaults(func=cmd_rootdata_zset)

    d = sub.add_parser("dl", help="rank-1 character tables")
    dsub = d.add_subparsers(dest="sub", required=True)
    dt = dsub.add_parser("table", help="print a generic table at q")
    dt.add_argument("--group", required=True)
    dt.add_argument("--q", type=int, required=True)
    dt.add_argument("--format", choices=("json", "csv", "pretty"),
                    default="json")
    dt.set_defaults(func=cmd_dl_table)
    dv = dsub.add_parser("verify", help="run identity checks")
    dv.add_argument("--group", required=True)
    dv.add_argument("--q", type=int, required=True)
    dv.add_argument("--all", action="store_true")
    dv.add_argument("--check", default=None)
    dv.set_defaults(func=cmd_dl_verify)

    sc = sub.add_parser("selfcheck",
                        help="property suites: Gauss sums, class counts, "
                             "twist fixed points")
    sc.add_argument("--quick", action="store_true",
                    help="restrict class counts to small groups")
    sc.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
