"""Command line front end.

Subcommands: ``gen`` writes edge-list files for the built-in families,
``exact`` runs the branch-and-bound oracle, ``bounds`` reports certified
upper and lower bounds, ``construct`` builds a certified ordering,
``verify`` re-measures an ordering against a claim, and ``bench`` prints
desk-scale tables for the known exact families.

Exit codes: 0 success, 1 verification failure, 2 parse or parameter error,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import generators
from .errors import BudgetExceededError, CmsError, FormatError
from .fileformats import (
    certificate_payload,
    dump_report,
    format_edge_list,
    format_ordering,
    fraction_str,
    load_report,
    make_report,
    parse_edge_list,
    parse_fraction,
    parse_ordering_pairs,
    resolve_ordering,
)
from .graphs import matching_number
from .oracle import (
    cms_upper_bound_fractional,
    exact_cms,
    fractional_chromatic_index,
)
from .orderings import cms_of_ordering, make_ordering
from .sequencer import (
    general_lower_bound_ordering,
    regular_certificate,
    two_regular_certificate,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_graph(path: str):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    try:
        if fam == "cycle":
            g = generators.cycle(int(p[0]))
        elif fam == "complete":
            g = generators.complete(int(p[0]))
        elif fam == "two-regular":
            g = generators.two_regular([int(x) for x in p])
        elif fam == "matching":
            g = generators.matching_graph(int(p[0]))
        elif fam == "bk":
            g = generators.b_graph(int(p[0]))
        elif fam == "bk-prime":
            g = generators.b_prime_graph(int(p[0]))
        elif fam == "bk-regular":
            g = generators.bk_containing_regular(int(p[0]), int(p[1]), seed=args.seed)
        elif fam == "random-regular":
            if args.seed is None:
                print("random-regular requires --seed", file=sys.stderr)
                return EXIT_USAGE
            g = generators.random_regular(int(p[0]), int(p[1]), args.seed)
        else:
            print(f"unknown family {fam!r}", file=sys.stderr)
            return EXIT_USAGE
    except (CmsError, ValueError, IndexError) as exc:
        print(f"gen failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(args.output, format_edge_list(g))
    return EXIT_OK


def _cmd_exact(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (CmsError, OSError) as exc:
        print(f"cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = exact_cms(g, node_budget=args.budget)
    except BudgetExceededError as exc:
        result = {
            "cms": None,
            "interval": [exc.lo, exc.hi],
            "witness": [list(g.endpoints(e)) for e in exc.ordering.seq]
            if exc.ordering is not None
            else None,
        }
        report = make_report("exact", g, {"budget": args.budget}, result)
        _write(args.output, dump_report(report))
        print(f"budget exceeded; certified interval [{exc.lo}, {exc.hi}]", file=sys.stderr)
        return EXIT_BUDGET
    result = {
        "cms": res.value,
        "interval": [res.value, res.value],
        "nodes": res.nodes,
        "witness": [list(g.endpoints(e)) for e in res.ordering.seq],
    }
    report = make_report("exact", g, {"budget": args.budget}, result)
    _write(args.output, dump_report(report))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (CmsError, OSError) as exc:
        print(f"cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cf = fractional_chromatic_index(g, cap=args.cap)
        upper = cms_upper_bound_fractional(g, cap=args.cap)
    except CmsError as exc:
        print(f"bounds failed: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    lower_cert = general_lower_bound_ordering(g)
    result = {
        "fractional_chromatic_index": fraction_str(cf),
        "upper_bound_from_fractional": fraction_str(upper),
        "matching_number": matching_number(g),
        "lower_bound_constructed": lower_cert.claimed_bound,
        "lower_bound_verified": lower_cert.verified,
    }
    report = make_report("bounds", g, {"cap": args.cap}, result)
    _write(args.output, dump_report(report))
    return EXIT_OK


def _cmd_construct(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (CmsError, OSError) as exc:
        print(f"cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.method == "two-regular":
            cert = two_regular_certificate(g)
        elif args.method == "general":
            cert = general_lower_bound_ordering(g)
        elif args.method == "explicit":
            cert = regular_certificate(g, method="explicit", x=args.x)
        elif args.method == "randomized":
            if args.seed is None:
                print("randomized method requires --seed", file=sys.stderr)
                return EXIT_USAGE
            alpha = parse_fraction(args.alpha) if args.alpha else Fraction(1, 7)
            cert = regular_certificate(
                g, method="randomized", alpha=alpha, seed=args.seed
            )
        else:
            print(f"unknown method {args.method!r}", file=sys.stderr)
            return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"construction exceeded its budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CmsError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = {"method": args.method}
    if args.seed is not None:
        params["seed"] = args.seed
    report = make_report("construct", g, params, certificate_payload(cert))
    _write(args.output, dump_report(report))
    if args.ordering_out:
        _write(args.ordering_out, format_ordering(cert.ordering))
    return EXIT_OK if cert.verified else EXIT_VERIFY


def _cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (CmsError, OSError) as exc:
        print(f"cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE

    claim = args.claim
    pairs = None
    if args.report:
        try:
            with open(args.report) as fh:
                report = load_report(fh.read())
            payload = report["result"]
            pairs = [(int(u), int(v)) for u, v in payload["ordering"]]
            if claim is None:
                claim = payload["claimed_bound"]
        except (FormatError, OSError, KeyError, TypeError, ValueError) as exc:
            print(f"cannot read report: {exc}", file=sys.stderr)
            return EXIT_USAGE
    elif args.ordering:
        try:
            with open(args.ordering) as fh:
                pairs = parse_ordering_pairs(fh.read())
        except (FormatError, OSError) as exc:
            print(f"cannot read ordering: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        print("verify needs an ordering file or --report", file=sys.stderr)
        return EXIT_USAGE

    edge_seq = resolve_ordering(pairs, g)
    if edge_seq is None:
        print("INVALID: ordering names a pair that is not a graph edge", file=sys.stderr)
        return EXIT_VERIFY
    if len(edge_seq) != g.m or len(set(edge_seq)) != g.m:
        print(
            f"INVALID: ordering names {len(set(edge_seq))} distinct edges, graph has {g.m}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    measured = cms_of_ordering(make_ordering(g, edge_seq))
    result = {"measured_cms": measured, "claim": claim}
    report = make_report("verify", g, {}, result)
    _write(args.output, dump_report(report))
    if claim is not None and measured < claim:
        print(f"FAIL: measured cms {measured} below claim {claim}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _bench_rows(suite: str):
    from .oracle import cms_upper_bound_subgraph  # local: keeps startup light

    rows = []
    if suite == "cycles":
        for n in range(3, 13):
            g = generators.cycle(n)
            got = exact_cms(g).value
            rows.append((f"C_{n}", got, (n - 1) // 2))
    elif suite == "two-regular":
        for n in range(6, 11):
            best = None
            for parts in _partitions_min3(n):
                got = exact_cms(generators.two_regular(parts)).value
                best = got if best is None else min(best, got)
            rows.append((f"min over 2-regular, n={n}", best, n // 3))
    elif suite == "class1-two-regular":
        for n in range(4, 13, 2):
            g = generators.cycle(n)
            got = exact_cms(g).value
            rows.append((f"C_{n}", got, (n - 2) // 2))
    elif suite == "extremal":
        for k in range(2, 11):
            g = generators.b_graph(k)
            expect = k * (k + 1) // 2 if k % 2 == 0 else (k * k + 2 * k - 1) // 2
            rows.append((f"|E(B_{k})|", g.m, expect))
        b3 = generators.b_graph(3)
        rows.append(("cms(B_3)", exact_cms(b3).value, 1))
        _, bound = cms_upper_bound_subgraph(15, b3, exact_cms(b3).value)
        rows.append(("bound for the joined pair", float(bound), 15 / 4))
    else:
        raise CmsError(f"unknown suite {suite!r}")
    return rows


def _partitions_min3(n: int, smallest: int = 3):
    if n == 0:
        yield []
        return
    for part in range(smallest, n + 1):
        if n - part not in (1, 2):
            for rest in _partitions_min3(n - part, part):
                yield [part] + rest


def _cmd_bench(args) -> int:
    try:
        rows = _bench_rows(args.suite)
    except CmsError as exc:
        print(f"bench failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    width = max(len(r[0]) for r in rows) + 2
    ok = True
    print(f"{'instance':<{width}}{'value':>8}{'expected':>10}  status")
    for name, got, expect in rows:
        good = got == expect
        ok &= good
        print(f"{name:<{width}}{got!s:>8}{expect!s:>10}  {'ok' if good else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmseq",
        description="cyclic matching sequenceability: generators, oracle, constructions",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="write an edge-list file for a graph family")
    p.add_argument("family", choices=[
        "cycle", "complete", "two-regular", "matching", "bk", "bk-prime",
        "bk-regular", "random-regular",
    ])
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("exact", help="exact cms by branch and bound")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=30_000_000, help="search node budget")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bounds", help="certified upper/lower bounds")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=20, help="matching enumeration cap")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="build a certified ordering")
    p.add_argument("graph")
    p.add_argument(
        "--method",
        choices=["two-regular", "general", "explicit", "randomized"],
        required=True,
    )
    p.add_argument("--alpha", default=None, help="sampling rate, e.g. 1/7")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--x", type=int, default=None, help="override the layer size x")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--ordering-out", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="re-measure an ordering against a claim")
    p.add_argument("graph")
    p.add_argument("ordering", nargs="?", default=None)
    p.add_argument("--report", default=None, help="verify the ordering in a report")
    p.add_argument("--claim", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="desk-scale tables for the exact families")
    p.add_argument(
        "suite",
        choices=["cycles", "two-regular", "class1-two-regular", "extremal"],
    )
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
