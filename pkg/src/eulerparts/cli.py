"""Command-line interface.

Subcommands: ``enumerate``, ``stats``, ``map``, ``series``, ``verify`` and
``table``.  Exit codes: 0 on success, 1 when a verification fails, 2 for
usage errors (including inputs outside a map's domain).  All output is
deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .bijections import (BijectionTrace, DomainError, binary_inverse_trace,
                         binary_map, pairing_inverse_trace, pairing_map,
                         sylvester_distinct_to_odd, sylvester_odd_to_distinct)
from .enumeration import (UNBOUNDED, bounded_partitions, count_by_statistic,
                          parse_bounds, parse_filter)
from .partition import Partition
from .series import (WEIGHTS, Series, binary_gf, boulet_product,
                     enumerated_series, half_cells_product, pairing_gf,
                     partition_gf, restricted_boulet_product,
                     row_totals_product)
from .verify import REGISTRY

STATS = {"la": Partition.alt_sum, "lo": Partition.odd_count}


def _stat_fn(name: str):
    return STATS[name]


def _bounds_arg(args):
    return parse_bounds(args.bounds) if args.bounds else None


def _filter_arg(args):
    return parse_filter(args.filter) if args.filter else None


def _csv_out(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


# -- enumerate ----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    parts = list(bounded_partitions(args.n, _bounds_arg(args), _filter_arg(args)))
    if args.count:
        _emit(str(len(parts)))
        return 0
    if args.format == "json":
        _emit(_json([list(p.parts) for p in parts]))
    elif args.format == "csv":
        _emit(_csv_out(["parts"], [[" ".join(map(str, p.parts))] for p in parts]))
    else:
        for p in parts:
            _emit(str(p))
    return 0


# -- stats ---------------------------------------------------------------------

def cmd_stats(args) -> int:
    hist = count_by_statistic(args.n, _stat_fn(args.stat),
                              _bounds_arg(args), _filter_arg(args))
    total = sum(hist.values())
    if args.format == "json":
        _emit(_json({"n": args.n, "stat": args.stat,
                     "counts": {str(k): v for k, v in hist.items()},
                     "total": total}))
    elif args.format == "csv":
        _emit(_csv_out([args.stat, "count"], [[k, v] for k, v in hist.items()]))
    else:
        for k, v in hist.items():
            _emit("%d: %d" % (k, v))
        _emit("total: %d" % total)
    return 0


# -- map -------------------------------------------------------------------------

def _parse_m(text: str):
    if text == "inf":
        return UNBOUNDED
    return int(text)


def cmd_map(args) -> int:
    p = Partition.parse(args.partition)
    m = _parse_m(args.m)
    trace: BijectionTrace | None = None
    if args.name == "sylvester":
        if args.direction == "fwd":
            image = sylvester_odd_to_distinct(p)
            lines = [("τ", p), ("λ", image)]
        else:
            image = sylvester_distinct_to_odd(p)
            lines = [("λ", p), ("τ", image)]
    else:
        forward = pairing_map if args.name == "pairing" else binary_map
        backward = pairing_inverse_trace if args.name == "pairing" else binary_inverse_trace
        if args.direction == "fwd":
            image, trace = forward(p, m)
            first, last = "α", "β"
        else:
            image, trace = backward(p, m)
            first, last = "β", "α"
        lines = [(first, p), ("λ", trace.lambda_part), ("μ", trace.mu_part),
                 ("τ", trace.tau_part), ("ν", trace.nu_part), (last, image)]
    if args.format == "json":
        _emit(_json({"map": args.name, "direction": args.direction,
                     "stages": [{"label": lab, "parts": list(q.parts)}
                                for lab, q in lines]}))
    elif args.format == "csv":
        _emit(_csv_out(["stage", "parts"],
                       [[lab, " ".join(map(str, q.parts))] for lab, q in lines]))
    else:
        for lab, q in lines:
            _emit("%s: %s" % (lab, q))
    return 0


# -- series ------------------------------------------------------------------------

def _build_series(args) -> Series:
    name = args.name
    if name == "partition-gf":
        return partition_gf(args.N)
    if name == "pairing-gf":
        return pairing_gf(int(args.m), args.N)
    if name == "binary-gf":
        return binary_gf(int(args.m), args.N)
    if name == "boulet":
        return boulet_product(args.N)
    if name == "restricted-boulet":
        if not args.bounds:
            raise ValueError("restricted-boulet needs --bounds")
        return restricted_boulet_product(args.i, args.k, parse_bounds(args.bounds), args.N)
    if name == "rows":
        if not args.bounds:
            raise ValueError("rows needs --bounds")
        return row_totals_product(parse_bounds(args.bounds), args.N)
    if name == "halves":
        if not args.bounds:
            raise ValueError("halves needs --bounds")
        return half_cells_product(parse_bounds(args.bounds), args.N)
    if name == "enumerated":
        weight = WEIGHTS[args.weight]
        return enumerated_series(args.N, weight, _bounds_arg(args), _filter_arg(args))
    raise ValueError("unknown series %r" % name)


def cmd_series(args) -> int:
    series = _build_series(args)
    items = series.items()
    if args.format == "json":
        _emit(_json({"vars": list(series.names), "trunc": series.trunc,
                     "terms": [[list(e), c] for e, c in items]}))
    elif args.format == "csv":
        _emit(_csv_out(list(series.names) + ["coeff"],
                       [list(e) + [c] for e, c in items]))
    else:
        for exps, coeff in items:
            mono = "*".join("%s^%d" % (n, e)
                            for n, e in zip(series.names, exps) if e) or "1"
            _emit("%s\t%d" % (mono, coeff))
    return 0


# -- verify -------------------------------------------------------------------------

def _verify_runs(args) -> list[tuple[str, dict]]:
    """(theorem id, kwargs) pairs to execute, honouring explicit flags."""
    given: dict[str, object] = {}
    if args.max_n is not None:
        given["max_n"] = args.max_n
    if args.trunc is not None:
        given["trunc"] = args.trunc
    if args.cutoff is not None:
        given["cutoff"] = args.cutoff
    if args.i is not None:
        given["i"] = args.i
    if args.k is not None:
        given["k"] = args.k
    if args.bounds is not None:
        given["bounds"] = args.bounds
    if args.a is not None:
        given["bounds_a"] = args.a
    if args.b is not None:
        given["bounds_b"] = args.b
    if args.m is not None:
        given["ms"] = tuple(int(x) for x in args.m.split(","))
    if args.phi is not None:
        given["phi_specs"] = tuple(args.phi.split(","))

    names = list(REGISTRY) if args.theorem == "all" else [args.theorem]
    for name in names:
        if name not in REGISTRY:
            raise ValueError("unknown theorem id %r (known: %s)"
                             % (name, ", ".join(REGISTRY)))
    runs = []
    for name in names:
        entry = REGISTRY[name]
        relevant = {kw: v for kw, v in given.items() if kw in entry.flags}
        if args.theorem != "all":
            extra = set(given) - set(relevant)
            if extra:
                raise ValueError("flags %s do not apply to %r"
                                 % (sorted(extra), name))
        if not relevant:
            runs.extend((name, dict(r)) for r in entry.default_runs)
        elif args.theorem == "all":
            for base in entry.default_runs:
                run = dict(base)
                run.update(relevant)
                runs.append((name, run))
        else:
            # explicit flags define a single run; for multi-config checks the
            # remaining parameters fall back to the runner's own defaults
            run = dict(entry.default_runs[0]) if len(entry.default_runs) == 1 else {}
            run.update(relevant)
            runs.append((name, run))
    return runs


def cmd_verify(args) -> int:
    runs = _verify_runs(args)
    jobs = max(1, args.jobs)

    def execute(item):
        name, kwargs = item
        return REGISTRY[name].runner(**kwargs)

    if jobs == 1 or len(runs) == 1:
        reports = [execute(r) for r in runs]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(execute, runs))

    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        _emit(_json(payload[0] if len(payload) == 1 else payload))
    elif args.format == "csv":
        _emit(_csv_out(["theorem", "params", "status", "elapsed_ms"],
                       [[r.theorem, _json(r.params), r.status, r.elapsed_ms]
                        for r in reports]))
    else:
        for r in reports:
            _emit(r.summary())
    return 0 if all(r.ok() for r in reports) else 1


# -- table ---------------------------------------------------------------------------

def cmd_table(args) -> int:
    stat = _stat_fn(args.stat)
    rows: dict[int, list[Partition]] = {}
    for p in bounded_partitions(args.n, _bounds_arg(args), _filter_arg(args)):
        rows.setdefault(stat(p), []).append(p)
    ordered = {k: sorted(v) for k, v in sorted(rows.items())}
    counts = {k: len(v) for k, v in ordered.items()}
    total = sum(counts.values())
    if args.format == "json":
        _emit(_json({"n": args.n, "stat": args.stat,
                     "rows": {str(k): [p.exponent_form() for p in v]
                              for k, v in ordered.items()},
                     "counts": {str(k): v for k, v in counts.items()},
                     "total": total}))
    elif args.format == "csv":
        flat = [[k, p.exponent_form()] for k, v in ordered.items() for p in v]
        _emit(_csv_out([args.stat, "partition"], flat))
    else:
        for k, v in ordered.items():
            _emit("%d: %s" % (k, " ".join(p.exponent_form() for p in v)))
        _emit("counts: {%s}" % ", ".join("%d: %d" % kv for kv in counts.items()))
        _emit("total: %d" % total)
    return 0


# -- parser ---------------------------------------------------------------------------

def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerparts",
        description="Partitions under multiplicity caps: enumeration, "
                    "bijections, generating functions and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list partitions under caps and filters")
    p.add_argument("n", type=int)
    p.add_argument("--bounds", help="bound DSL, e.g. all:3 or phi:2*i+1")
    p.add_argument("--filter", help="filter DSL, e.g. mod:2,res:1,even-length")
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="histogram of a statistic over partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--stat", choices=sorted(STATS), required=True,
                   help="la = alternating sum, lo = number of odd parts")
    p.add_argument("--bounds")
    p.add_argument("--filter")
    _add_format(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", help="apply a bijection, printing every stage")
    p.add_argument("name", choices=("sylvester", "pairing", "binary"))
    p.add_argument("direction", choices=("fwd", "inv"))
    p.add_argument("partition", help='e.g. "7,2,1" or "2^5,4^4" ("" for empty)')
    p.add_argument("-m", default="inf", help="cap parameter (integer or inf)")
    _add_format(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("series", help="dump a truncated series")
    p.add_argument("name", choices=("partition-gf", "pairing-gf", "binary-gf",
                                    "boulet", "restricted-boulet", "rows",
                                    "halves", "enumerated"))
    p.add_argument("-N", type=int, default=12, help="truncation degree")
    p.add_argument("-m", default="0")
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--bounds")
    p.add_argument("--filter")
    p.add_argument("--weight", choices=sorted(WEIGHTS), default="abcd")
    _add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="check an identity over a finite grid")
    p.add_argument("theorem",
                   help="one of: %s, or 'all'" % ", ".join(REGISTRY))
    p.add_argument("--max-n", dest="max_n", type=int)
    p.add_argument("--trunc", type=int)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--m", help="comma-separated cap parameters, e.g. 0,1,2")
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--bounds", help="bound DSL for the product checks")
    p.add_argument("--a", help="bound DSL, left side of the equivalence check")
    p.add_argument("--b", help="bound DSL, right side of the equivalence check")
    p.add_argument("--phi", help="comma-separated cap expressions, e.g. 1,i")
    p.add_argument("--jobs", type=int, default=1, help="parallel runs")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="partitions of n grouped by a statistic")
    p.add_argument("n", type=int)
    p.add_argument("--stat", choices=sorted(STATS), required=True)
    p.add_argument("--bounds")
    p.add_argument("--filter")
    _add_format(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
