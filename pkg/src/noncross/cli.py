"""Command-line front end.

Subcommands mirror the library: enumerate, kreweras, compose, power, root,
shuffle, admissible, bijection, moebius, cumulants, moments, simplicial,
and verify.  Partitions are read either as literals (`4: 1 4 | 2 3`) or as
JSON objects (`{"n": 4, "blocks": [[1, 4], [2, 3]]}`); every subcommand
takes `--json` for machine-readable output carrying the same data as the
text form.  Exit status: 0 on success, 1 when a verification check fails,
2 on usage or parse errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import NoncrossError, ParseError
from .incidence import (
    cumulants_from_moments,
    divisibility_coalgebra,
    moebius,
    moments_from_cumulants,
    ncp_interval_coalgebra,
)
from .errors import NotAdmissibleError
from .kreweras import (
    complete_tuple,
    completing_to_tuple,
    compose_many,
    ensure_admissible_tuple,
    ensure_complete_tuple,
    kpreserving_to_tuple,
    kreweras,
    multichain_to_tuple,
    relative_kreweras,
    tuple_to_completing,
    tuple_to_kpreserving,
    tuple_to_multichain,
)
from .lattice import Interval, enumerate_ncp, iter_ncp
from .partition import NoncrossingPartition, one, zero
from .shuffle import is_admissible_tuple, power, root, shuffle_many
from .simplicial import (
    bar_of_integers,
    bar_of_ncp,
    check_iso,
    check_simplicial_identities,
    check_two_segal,
    check_ulf,
    dec_map,
    integer_decalage_comparison,
    lower_decalage,
    ncp_decalage_comparison,
    nerve_of_divisibility,
    nerve_of_ncp,
)
from .verify import DEFAULT_SEED, SUITES, run_verify


def _parse_partition(text):
    text = text.strip()
    if text.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON partition: {exc.msg}", offset=exc.pos) from None
        return NoncrossingPartition.from_json(payload)
    return NoncrossingPartition.parse(text)


def _part_json(p):
    if p is None:
        return None
    return {"n": p.n, "blocks": [list(blk) for blk in p.blocks]}


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def _rat_json(q):
    return {"numerator": q.numerator, "denominator": q.denominator}


def _emit(args, text, payload):
    print(json.dumps(payload) if args.json else text)


def _emit_partition(args, p):
    _emit(args, "undefined" if p is None else str(p), _part_json(p))


# --------------------------------------------------------------------------
# Subcommand handlers


def _cmd_enumerate(args):
    if args.count:
        total = sum(1 for _ in iter_ncp(args.n))
        _emit(args, str(total), {"n": args.n, "count": total})
        return 0
    parts = enumerate_ncp(args.n)
    if args.json:
        print(
            json.dumps(
                {"n": args.n, "count": len(parts), "partitions": [_part_json(p)["blocks"] for p in parts]}
            )
        )
    else:
        for p in parts:
            print(p)
    return 0


def _cmd_kreweras(args):
    a = _parse_partition(args.partition)
    if args.relative is not None:
        out = relative_kreweras(a, _parse_partition(args.relative))
    else:
        out = kreweras(a)
    _emit_partition(args, out)
    return 0


def _cmd_compose(args):
    parts = tuple(_parse_partition(t) for t in args.partitions)
    try:
        out = compose_many(parts) if len(parts) > 1 else parts[0]
    except NotAdmissibleError:
        out = None
    _emit_partition(args, out)
    return 0


def _cmd_power(args):
    _emit_partition(args, power(_parse_partition(args.partition), args.k))
    return 0


def _cmd_root(args):
    _emit_partition(args, root(_parse_partition(args.partition), args.k))
    return 0


def _cmd_shuffle(args):
    parts = [_parse_partition(t) for t in args.partitions]
    _emit_partition(args, shuffle_many(parts, args.period))
    return 0


def _cmd_admissible(args):
    parts = [_parse_partition(t) for t in args.partitions]
    ok = is_admissible_tuple(parts, args.period)
    _emit(args, "true" if ok else "false", ok)
    return 0


_PICTURES = ("tuple", "kpreserving", "multichain", "complete", "completing")


def _cmd_bijection(args):
    inputs = [_parse_partition(t) for t in args.partitions]

    if args.src == "tuple":
        parts = ensure_admissible_tuple(tuple(inputs))
    elif args.src == "multichain":
        parts = multichain_to_tuple(tuple(inputs))
    elif args.src == "complete":
        parts = ensure_complete_tuple(tuple(inputs))[:-1]
    elif args.src == "kpreserving":
        if len(inputs) != 1:
            raise ParseError("--from kpreserving takes exactly one partition")
        if args.parts is None:
            raise ParseError("--from kpreserving requires --parts")
        parts = kpreserving_to_tuple(inputs[0], args.parts)
    else:
        if len(inputs) != 1:
            raise ParseError("--from completing takes exactly one partition")
        if args.parts is None:
            raise ParseError("--from completing requires --parts")
        parts = completing_to_tuple(inputs[0], args.parts + 1)

    if args.dst == "tuple":
        out = list(parts)
    elif args.dst == "multichain":
        out = list(tuple_to_multichain(parts))
    elif args.dst == "complete":
        out = list(complete_tuple(parts))
    elif args.dst == "kpreserving":
        out = [tuple_to_kpreserving(parts)]
    else:
        out = [tuple_to_completing(parts)]

    if args.json:
        print(json.dumps([_part_json(p) for p in out]))
    else:
        for p in out:
            print(p)
    return 0


def _cmd_moebius(args):
    if args.lattice == "ncp":
        mu = moebius(ncp_interval_coalgebra(args.n))
        if args.all:
            rows = [(iv, mu(iv)) for iv in mu.coalgebra.basis]
            if args.json:
                print(
                    json.dumps(
                        [
                            {
                                "lower": _part_json(iv.lower),
                                "upper": _part_json(iv.upper),
                                "value": _rat_json(v),
                            }
                            for iv, v in rows
                        ]
                    )
                )
            else:
                for iv, v in rows:
                    print(f"{iv} -> {v}")
        else:
            v = mu(Interval(zero(args.n), one(args.n)))
            _emit(args, str(v), _rat_json(v))
        return 0
    mu = moebius(divisibility_coalgebra(args.bound))
    rows = [(m, mu((1, m))) for m in range(1, args.bound + 1)]
    if args.json:
        print(json.dumps([{"m": m, "value": _rat_json(v)} for m, v in rows]))
    else:
        for m, v in rows:
            print(f"{m} -> {v}")
    return 0


def _cmd_cumulants(args):
    out = cumulants_from_moments([_rational(t) for t in args.from_moments])
    if args.json:
        print(json.dumps([_rat_json(q) for q in out]))
    else:
        for q in out:
            print(q)
    return 0


def _cmd_moments(args):
    out = moments_from_cumulants([_rational(t) for t in args.from_cumulants])
    if args.json:
        print(json.dumps([_rat_json(q) for q in out]))
    else:
        for q in out:
            print(q)
    return 0


def _cmd_simplicial(args):
    if args.instance == "ncp":
        bar = bar_of_ncp(args.n, args.depth + 1)
        nerve = nerve_of_ncp(args.n, args.depth)
        comparison = ncp_decalage_comparison(args.n, args.depth)
    else:
        bar = bar_of_integers(args.bound, args.depth + 1)
        nerve = nerve_of_divisibility(args.bound, args.depth)
        comparison = integer_decalage_comparison(args.bound, args.depth)

    checks = []
    if args.check in ("identities", "all"):
        checks += [
            check_simplicial_identities(bar),
            check_simplicial_identities(nerve),
            check_simplicial_identities(lower_decalage(bar)),
        ]
    if args.check in ("two-segal", "all"):
        checks.append(check_two_segal(bar.truncate(3)))
    if args.check in ("ulf", "all"):
        checks.append(check_ulf(dec_map(bar.truncate(3))))
    if args.check in ("decalage", "all"):
        checks.append(check_iso(comparison))

    if args.json:
        print(json.dumps([c.to_json() for c in checks]))
    else:
        for c in checks:
            print(c.line())
    return 0 if all(c.passed for c in checks) else 1


def _cmd_verify(args):
    if args.list:
        for name in SUITES:
            print(name)
        return 0
    names = args.suites or None
    overrides = {
        "n": args.n,
        "k": args.k,
        "bound": args.bound,
        "depth": args.depth,
        "trials": args.trials,
        "seed": args.seed,
        "lattice": args.lattice,
    }
    try:
        reports = run_verify(names, **overrides)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.line())
        failed = sum(1 for r in reports if not r.passed)
        checked = sum(r.checked for r in reports)
        print(f"{len(reports)} laws, {checked} instances checked, {failed} failed")
    return 0 if all(r.passed for r in reports) else 1


# --------------------------------------------------------------------------
# Parser


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="noncross",
        description="Arithmetic of noncrossing partitions: lattice operations, "
        "shuffles, complements, incidence coalgebras, and their verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("enumerate", parents=[common], help="list NCP(n) in lexicographic order")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true", help="print only the number of partitions")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("kreweras", parents=[common], help="Kreweras complement (optionally relative)")
    p.add_argument("partition")
    p.add_argument("--relative", metavar="UPPER", help="complement inside this coarser partition")
    p.set_defaults(fn=_cmd_kreweras)

    p = sub.add_parser("compose", parents=[common], help="partial composition product")
    p.add_argument("partitions", nargs="+")
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("power", parents=[common], help="k-fold power")
    p.add_argument("partition")
    p.add_argument("k", type=int)
    p.set_defaults(fn=_cmd_power)

    p = sub.add_parser("root", parents=[common], help="k-th root, when it exists")
    p.add_argument("partition")
    p.add_argument("k", type=int)
    p.set_defaults(fn=_cmd_root)

    p = sub.add_parser("shuffle", parents=[common], help="perfect shuffle over a period")
    p.add_argument("--period", type=int, required=True, metavar="N")
    p.add_argument("partitions", nargs="+")
    p.set_defaults(fn=_cmd_shuffle)

    p = sub.add_parser("admissible", parents=[common], help="is the shuffle noncrossing?")
    p.add_argument("--period", type=int, required=True, metavar="N")
    p.add_argument("partitions", nargs="+")
    p.set_defaults(fn=_cmd_admissible)

    p = sub.add_parser(
        "bijection",
        parents=[common],
        help="convert between the five equivalent pictures of admissible tuples",
    )
    p.add_argument("--from", dest="src", choices=_PICTURES, required=True)
    p.add_argument("--to", dest="dst", choices=_PICTURES, required=True)
    p.add_argument("--parts", type=int, help="tuple length (needed to read kpreserving/completing)")
    p.add_argument("partitions", nargs="+")
    p.set_defaults(fn=_cmd_bijection)

    p = sub.add_parser("moebius", parents=[common], help="Moebius function values")
    p.add_argument("--lattice", choices=("ncp", "integers"), default="ncp")
    p.add_argument("--n", type=int, default=4, help="partition size (ncp lattice)")
    p.add_argument("--bound", type=int, default=30, help="largest integer (integer lattice)")
    p.add_argument("--all", action="store_true", help="print every interval, not just the full one")
    p.set_defaults(fn=_cmd_moebius)

    p = sub.add_parser("cumulants", parents=[common], help="free cumulants from moments")
    p.add_argument("from_moments", nargs="+", metavar="MOMENT")
    p.set_defaults(fn=_cmd_cumulants)

    p = sub.add_parser("moments", parents=[common], help="moments from free cumulants")
    p.add_argument("from_cumulants", nargs="+", metavar="CUMULANT")
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("simplicial", parents=[common], help="simplicial checks on bar and nerve")
    p.add_argument("--instance", choices=("ncp", "integers"), default="ncp")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument(
        "--check",
        choices=("identities", "two-segal", "ulf", "decalage", "all"),
        default="all",
    )
    p.set_defaults(fn=_cmd_simplicial)

    p = sub.add_parser("verify", parents=[common], help="run the law suites")
    p.add_argument("suites", nargs="*", metavar="SUITE", help="suite names (default: all)")
    p.add_argument("--list", action="store_true", help="list available suites")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--lattice", choices=("ncp", "integers"))
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NoncrossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
