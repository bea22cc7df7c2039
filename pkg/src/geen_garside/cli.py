"""
Command-line front end tying the modules together.

Machine-readable output goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 logical "false" answers (equal, matsumoto), 2 usage errors,
3 caps exceeded, 4 theorem-violation reports.  Identical invocations produce
byte-identical output; `freeze` writes a regression file of canonical JSON
lines and fails on any drift when rerun against an existing file.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .core import (
    CapExceededError,
    Generator,
    GroupElement,
    GroupParams,
    atoms,
    format_word,
    parse_word,
)
from .interval import (
    TheoremViolationError,
    atom_lcm_table,
    balanced_max_length,
    cached_interval,
    verify_lattice,
)
from .garside import (
    cached_garside,
    embedding_lcm_check,
    emit_presentation,
    is_isomorphic_to_CP,
    matsumoto_check,
    t_cycle_components,
)
from .homology import chain_condition_holds, differential, enumerate_cells, homology_group
from .words import cayley_length_table, length, reduced_expression

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_VIOLATION = 4


@dataclass(frozen=True)
class RunConfig:
    """One grid point plus the knobs shared by all subcommands."""

    e: int
    n: int
    k: int | None = None
    group_cap: int = 10**6
    rewrite_cap: int = 10**5
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.group_cap <= 0 or self.rewrite_cap <= 0:
            raise ValueError("caps must be positive")
        if self.fmt not in ("json", "dot", "text"):
            raise ValueError(f"unknown output format {self.fmt!r}")


@dataclass(frozen=True)
class RegressionRecord:
    key: str
    value: object
    version: str = __version__

    def line(self) -> str:
        return json.dumps(
            {"key": self.key, "value": self.value, "version": self.version},
            sort_keys=True,
            separators=(",", ":"),
        )


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _element(args, params: GroupParams) -> GroupElement:
    w = GroupElement.from_json(args.element)
    if w.e != params.e or w.n != params.n:
        raise ValueError("element parameters disagree with --e/--n")
    return w


def _add_params(parser, with_k: bool):
    parser.add_argument("--e", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    if with_k:
        parser.add_argument("--k", type=int, required=True)


def _interval_dot(interval) -> str:
    lines = ["digraph interval {", "  rankdir=BT;"]
    for i, w in enumerate(interval.members):
        word = format_word(reduced_expression(w)) or "1"
        lines.append(f'  n{i} [label="{word}"];')
    for b in range(len(interval)):
        for a in interval.covers(b, "left"):
            lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _interval_json(interval) -> str:
    import base64

    def rows(table):
        width = (len(interval) + 7) // 8
        return [
            base64.b64encode(mask.to_bytes(width, "little")).decode("ascii")
            for mask in table
        ]

    data = {
        "e": interval.e,
        "n": interval.n,
        "k": interval.k,
        "members": [json.loads(w.to_json()) for w in interval.members],
        "left_divides": rows(interval.div_left),
        "right_divides": rows(interval.div_right),
    }
    return _canonical(data)


def _presentation_dot(params: GroupParams) -> str:
    """Kite diagram: the t-cycle with dashed k-step edges, s-chain below."""
    e, n, k = params.e, params.n, params.k
    lines = ["graph presentation {", "  layout=circo;"]
    for i in range(e):
        lines.append(f'  t{i} [label="t{i}"];')
    for j in range(3, n + 1):
        lines.append(f'  s{j} [label="s{j}"];')
    seen = set()
    for i in range(e):
        edge = frozenset((i, (i - k) % e))
        if len(edge) == 2 and edge not in seen:
            seen.add(edge)
            a, b = sorted(edge)
            lines.append(f"  t{a} -- t{b} [style=dashed];")
    for i in range(e):
        if n >= 3:
            lines.append(f"  t{i} -- s3;")
    for j in range(3, n):
        lines.append(f"  s{j} -- s{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_reduce(args) -> int:
    params = GroupParams(args.e, args.n)
    w = _element(args, params)
    print(format_word(reduced_expression(w)))
    return EXIT_OK


def _cmd_length(args) -> int:
    params = GroupParams(args.e, args.n)
    print(length(_element(args, params)))
    return EXIT_OK


def _cmd_bfs_length(args) -> int:
    params = GroupParams(args.e, args.n)
    table = cayley_length_table(params)
    if args.element is not None:
        print(table[_element(args, params)])
        return EXIT_OK
    lines = sorted(
        (w.to_json(), dist) for w, dist in table.items()
    )
    for text, dist in lines:
        print(_canonical({"element": json.loads(text), "length": dist}))
    return EXIT_OK


def _cmd_interval(args) -> int:
    interval = cached_interval(args.e, args.n, args.k)
    summary = {
        "e": args.e,
        "n": args.n,
        "k": args.k,
        "members": len(interval),
        "atoms": len(atoms(interval.params)),
        "delta_length": interval.lengths[interval.delta_ordinal],
    }
    if args.verify_lattice:
        report = verify_lattice(interval)
        summary["lattice"] = {
            "meet_left": report.meet_left,
            "join_left": report.join_left,
            "meet_right": report.meet_right,
            "join_right": report.join_right,
        }
        if not report.all_ok:
            print(_canonical(summary))
            print(f"lattice violation: {report.counterexample}", file=sys.stderr)
            return EXIT_VIOLATION
    if args.export:
        kind, path = args.export
        text = _interval_dot(interval) if kind == "dot" else _interval_json(interval)
        with open(path, "w") as handle:
            handle.write(text)
        summary["exported"] = kind
    print(_canonical(summary))
    return EXIT_OK


def _cmd_nf(args) -> int:
    g = cached_garside(args.e, args.n, args.k)
    nf = g.normal_form(args.word)
    data = {
        "delta_power": nf.delta_power,
        "factors": [
            json.loads(g.interval.element(f).to_json()) for f in nf.factors
        ],
    }
    print(_canonical(data))
    return EXIT_OK


def _cmd_equal(args) -> int:
    g = cached_garside(args.e, args.n, args.k)
    equal = g.words_equal(args.w1, args.w2)
    print("true" if equal else "false")
    return EXIT_OK if equal else EXIT_FALSE


def _cmd_presentation(args) -> int:
    params = GroupParams(args.e, args.n, args.k)
    pres = emit_presentation(params)
    data = {
        "generators": [str(x) for x in pres.generators],
        "relations": [
            [format_word(lhs), format_word(rhs)] for lhs, rhs in pres.relations
        ],
        "t_cycle_components": t_cycle_components(args.e, args.k),
        "isomorphic_to_cp": is_isomorphic_to_CP(args.e, args.k, args.n)[0],
    }
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(_presentation_dot(params))
    print(_canonical(data))
    return EXIT_OK


def _cmd_homology(args) -> int:
    g = cached_garside(args.e, args.n, args.k)
    group = homology_group(g, args.order, method=args.method)
    if args.dump_matrices:
        dump = {
            "d2": differential(g, 2, args.method),
            "d3": differential(g, 3, args.method),
            "cells1": [format_word(c) for c in enumerate_cells(g, 1)],
            "cells2": [format_word(c) for c in enumerate_cells(g, 2)],
            "cells3": [format_word(c) for c in enumerate_cells(g, 3)],
        }
        with open(args.dump_matrices, "w") as handle:
            handle.write(_canonical(dump))
    print(_canonical(group.to_json_dict()))
    return EXIT_OK


def _verify_suite(args) -> list[str]:
    failures = []
    interval = cached_interval(args.e, args.n, args.k)
    suites = (
        ["lattice", "lcm", "balanced", "garside", "homology"]
        if args.suite == "all"
        else [args.suite]
    )
    for suite in suites:
        if suite == "lattice":
            report = verify_lattice(interval)
            if not report.all_ok:
                failures.append(f"lattice: {report.counterexample}")
        elif suite == "lcm":
            atom_lcm_table(interval)
        elif suite == "balanced":
            balanced_max_length(GroupParams(args.e, args.n))
        elif suite == "garside":
            g = cached_garside(args.e, args.n, args.k)
            if not g.is_left_greedy(g.normal_form("t0 t1 t0^-1")):
                failures.append("garside: normal form not left-greedy")
            for lhs, rhs in emit_presentation(g.params).relations:
                if not g.words_equal([(x, 1) for x in lhs], [(x, 1) for x in rhs]):
                    failures.append(f"garside: relation {lhs} = {rhs} broken")
            if not embedding_lcm_check(g) and args.n >= 3:
                failures.append("garside: embedding lcm compatibility failed")
        elif suite == "homology":
            g = cached_garside(args.e, args.n, args.k)
            d2 = differential(g, 2, "closed")
            d3 = differential(g, 3, "closed")
            if not chain_condition_holds(d2, d3):
                failures.append("homology: d2*d3 != 0")
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return failures


def _cmd_verify(args) -> int:
    try:
        failures = _verify_suite(args)
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if failures:
        for failure in failures:
            print(failure, file=sys.stderr)
        return EXIT_VIOLATION
    print(_canonical({"suite": args.suite, "ok": True}))
    return EXIT_OK


def default_grid(
    group_cap: int = 10**5, pair_cap: int = 10**7
) -> list[RunConfig]:
    """e in 2..6, n in 2..4, all k, capped by |G| and |D_k|^2."""
    grid = []
    for e in range(2, 7):
        for n in range(2, 5):
            params = GroupParams(e, n)
            if params.order() > group_cap:
                continue
            for k in range(1, e):
                grid.append(RunConfig(e, n, k, group_cap=group_cap))
    return grid


def regression_records(config: RunConfig) -> list[RegressionRecord]:
    e, n, k = config.e, config.n, config.k
    interval = cached_interval(e, n, k)
    tag = f"e={e} n={n} k={k}"
    records = [
        RegressionRecord(f"interval-cardinality {tag}", len(interval)),
        RegressionRecord(
            f"max-length-census e={e} n={n}", (e - 1) ** (n - 1)
        ),
        RegressionRecord(
            f"t-cycle-components e={e} k={k}", t_cycle_components(e, k)
        ),
    ]
    if n >= 3:
        g = cached_garside(e, n, k)
        records.append(
            RegressionRecord(
                f"homology-h1 {tag}", homology_group(g, 1).to_json_dict()
            )
        )
        records.append(
            RegressionRecord(
                f"homology-h2 {tag}", homology_group(g, 2).to_json_dict()
            )
        )
    return records


def freeze_regressions(grid: list[RunConfig], path: str) -> list[RegressionRecord]:
    """Write (or check against) a canonical JSONL regression file."""
    records: list[RegressionRecord] = []
    for config in grid:
        records.extend(regression_records(config))
    lines = [record.line() for record in records]
    try:
        with open(path) as handle:
            existing = handle.read().splitlines()
    except FileNotFoundError:
        with open(path, "w") as handle:
            handle.write("\n".join(lines) + ("\n" if lines else ""))
        return records
    if existing != lines:
        for old, new in zip(existing, lines):
            if old != new:
                raise TheoremViolationError(
                    f"regression drift:\n  frozen: {old}\n  now:    {new}"
                )
        raise TheoremViolationError(
            f"regression drift: {len(existing)} frozen lines vs {len(lines)} now"
        )
    return records


def _cmd_freeze(args) -> int:
    grid = default_grid()
    if args.e is not None:
        grid = [c for c in grid if c.e == args.e]
    if args.n is not None:
        grid = [c for c in grid if c.n == args.n]
    records = freeze_regressions(grid, args.out)
    print(_canonical({"records": len(records), "path": args.out}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geen-garside",
        description="Interval Garside structures on the reflection groups G(e,e,n)",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="minimal word of a group element")
    _add_params(p, with_k=False)
    p.add_argument("--element", required=True, help="element as JSON")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("length", help="length of a group element")
    _add_params(p, with_k=False)
    p.add_argument("--element", required=True)
    p.set_defaults(func=_cmd_length)

    # regression-freezing oracle; deliberately undocumented
    p = sub.add_parser("bfs-length")
    _add_params(p, with_k=False)
    p.add_argument("--element")
    p.set_defaults(func=_cmd_bfs_length)

    p = sub.add_parser("interval", help="build and export an interval")
    _add_params(p, with_k=True)
    p.add_argument("--verify-lattice", action="store_true")
    p.add_argument(
        "--export",
        nargs=2,
        metavar=("FORMAT", "PATH"),
        help="FORMAT is dot or json",
    )
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("nf", help="Garside normal form of a signed word")
    _add_params(p, with_k=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("equal", help="word problem: are two words equal?")
    _add_params(p, with_k=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser("presentation", help="defining relations and diagram")
    _add_params(p, with_k=True)
    p.add_argument("--dot", help="write a DOT diagram to this path")
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("homology", help="integral homology H_1 or H_2")
    _add_params(p, with_k=True)
    p.add_argument("--order", type=int, choices=(1, 2), required=True)
    p.add_argument(
        "--method", choices=("closed", "generic", "both"), default="closed"
    )
    p.add_argument("--dump-matrices", metavar="PATH")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_params(p, with_k=True)
    p.add_argument(
        "--suite",
        choices=("lattice", "lcm", "balanced", "garside", "homology", "all"),
        default="all",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("freeze", help="freeze or check regression values")
    p.add_argument("--out", required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_freeze)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
