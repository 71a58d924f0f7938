"""Command-line interface.

Verbs: splitting, table, zeta, compare, gassmann, demo.  Exit codes:
0 success (comparison verdicts are data, not errors), 2 usage error,
3 data or validation error, 4 failed demo assertion.
"""

from __future__ import annotations

import argparse
import sys

from .demos import DEMOS, run_demo
from .errors import GossliftError
from .extension import parse_extension_file, splitting_type
from .gassmann import (PermGroup, builtin_group, cayley_komatsu,
                       gassmann_by_cycle_type, gassmann_check,
                       parse_group_file, parse_perm, subgroups_of_order)
from .textforms import parse_monic
from .witt import FieldOps, LaurentOps, lifted_goss_eval, witt_text
from .zeta import (compare_zeta, dirichlet_table, dump_table, goss_eval,
                   weil_series)


def _cmd_splitting(args):
    ext = parse_extension_file(args.ext)
    prime = parse_monic(ext.field, args.prime)
    st = splitting_type(ext, prime)
    print(f"{prime} in {ext.name}: {st}")
    return 0


def _cmd_table(args):
    ext = parse_extension_file(args.ext)
    table = dirichlet_table(ext, args.max_degree)
    if args.dump:
        dump_table(table, args.dump)
        print(f"wrote {len(table.entries)} entries to {args.dump}")
    else:
        print(dump_table(table), end="")
    return 0


def _cmd_zeta(args):
    ext = parse_extension_file(args.ext)
    table = dirichlet_table(ext, args.max_degree)
    if args.kind == "weil":
        print(weil_series(table))
    elif args.kind == "goss":
        print(goss_eval(table, args.s, args.prec))
    else:
        value = lifted_goss_eval(table, args.s, args.prec, args.witt_len)
        ops = (FieldOps(table.field) if args.s == 0
               else LaurentOps(table.field, args.prec))
        print(witt_text(ops, value))
    return 0


def _cmd_compare(args):
    ext_a = parse_extension_file(args.cfg_a)
    ext_b = parse_extension_file(args.cfg_b)
    table_a = dirichlet_table(ext_a, args.max_degree)
    table_b = dirichlet_table(ext_b, args.max_degree)
    verdict = compare_zeta(table_a, table_b, args.kind)
    print(verdict.text())
    return 0


def _psl27_report():
    G = builtin_group("psl27")
    reps = subgroups_of_order(G, 24)
    if len(reps) != 2:
        raise GossliftError(
            f"expected 2 classes of order-24 subgroups, found {len(reps)}")
    return gassmann_check(G, reps[0], reps[1])


def _klein4_report():
    G = builtin_group("klein4")
    h1 = PermGroup(4, [parse_perm("(1 2)", 4)], name="H1")
    h2 = PermGroup(4, [parse_perm("(3 4)", 4)], name="H2")
    return gassmann_check(G, h1, h2)


def _komatsu_text():
    ab, heis = cayley_komatsu(3)
    ok, stats_ab, _ = gassmann_by_cycle_type(ab, heis)
    lines = [
        f"group {ab.name} and {heis.name} as regular subgroups of Sym(27)",
        f"cycle types: identity x1, 3^9 x{stats_ab[(3,) * 9]} in both",
        f"GASSMANN: {'yes' if ok else 'no'}",
        f"CONJUGATE: {'no' if ab.is_abelian() != heis.is_abelian() else '?'}",
    ]
    return "\n".join(lines)


def _cmd_gassmann(args):
    if args.builtin:
        if args.builtin == "komatsu3":
            print(_komatsu_text())
        elif args.builtin == "psl27":
            print(_psl27_report().text())
        elif args.builtin == "klein4":
            print(_klein4_report().text())
        else:
            raise GossliftError(f"unknown builtin scenario {args.builtin!r}")
        return 0
    if not (args.group and args.h1 and args.h2):
        raise GossliftError(
            "gassmann needs --builtin NAME, or --group, --h1 and --h2 files")
    G = parse_group_file(args.group)
    h1 = parse_group_file(args.h1, n=G.n)
    h2 = parse_group_file(args.h2, n=G.n)
    print(gassmann_check(G, h1, h2).text())
    return 0


def _cmd_demo(args):
    report = run_demo(args.name)
    print(report.text())
    return 0 if report.ok else 4


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gosslift",
        description="splitting types, ideal-count tables, and zeta "
                    "functions for extensions of F_q(T)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("splitting", help="splitting type of one prime")
    p.add_argument("--ext", required=True, metavar="FILE")
    p.add_argument("--prime", required=True, metavar="P")
    p.set_defaults(func=_cmd_splitting)

    p = sub.add_parser("table", help="ideal-count table B(n)")
    p.add_argument("--ext", required=True, metavar="FILE")
    p.add_argument("--max-degree", type=int, default=6, metavar="D")
    p.add_argument("--dump", metavar="PATH")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("zeta", help="weil, goss, or lifted zeta values")
    p.add_argument("--kind", required=True,
                   choices=("weil", "goss", "lifted"))
    p.add_argument("--ext", required=True, metavar="FILE")
    p.add_argument("--max-degree", type=int, default=6, metavar="D")
    p.add_argument("--s", type=int, default=1, metavar="J")
    p.add_argument("--prec", type=int, default=12, metavar="M")
    p.add_argument("--witt-len", type=int, default=2, metavar="N")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("compare", help="compare two extensions' zeta data")
    p.add_argument("--kind", required=True,
                   choices=("weil", "goss", "lifted"))
    p.add_argument("cfg_a", metavar="A.cfg")
    p.add_argument("cfg_b", metavar="B.cfg")
    p.add_argument("--max-degree", type=int, default=6, metavar="D")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("gassmann", help="Gassmann equivalence reports")
    p.add_argument("--builtin", choices=("psl27", "klein4", "komatsu3"))
    p.add_argument("--group", metavar="FILE")
    p.add_argument("--h1", metavar="FILE")
    p.add_argument("--h2", metavar="FILE")
    p.set_defaults(func=_cmd_gassmann)

    p = sub.add_parser("demo", help="run a scripted scenario")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=_cmd_demo)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GossliftError as exc:
        print(f"error[{exc.tag}]: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
