"""Command-line front end: every analysis as a deterministic report emitter.

Each subcommand builds one normalized report (params, columns, typed rows,
notes), which renders to an aligned table, RFC-4180 CSV, or JSON with a
versioned schema key.  The same bytes come out for the same arguments;
reports can also be written to a file and accompanied by a chart.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import dataclasses
import io
import json
import os
import sys

from .cyclotomic import RootSpec
from .dpalgebra import Truncation, component_basis
from .errors import InvariantViolationError
from .linalg import Subspace
from .qarith import (
    dim_by_alternating_sum,
    dim_by_gaussian,
    lusztig_factor,
    q_binomial,
    q_binomial_by_product,
)
from . import derham, loewy
from .uqaction import component_space, socle_oracle

SCHEMA = "qdiv-report/1"


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Validated shared parameters of one CLI invocation."""

    n: int
    ell: int
    root: str
    m: int
    s: int | None

    def spec(self) -> RootSpec:
        return RootSpec(ell=self.ell, order=self.root)

    def trunc(self) -> Truncation:
        return Truncation(n=self.n, m=self.m)


def _max_workers(n_jobs: int) -> int:
    raw = os.environ.get("QDIV_THREADS")
    if raw is None:
        return 1
    if not raw.isdigit() or int(raw) < 1:
        raise ValueError(f"QDIV_THREADS must be a positive integer, got {raw!r}")
    return max(1, min(int(raw), n_jobs))


def _parallel_map(fn, items: list):
    """Apply fn over items, assembling results in input order."""
    items = list(items)
    workers = _max_workers(len(items))
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _tuple_str(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _degree_list(config: RunConfig, top: int) -> list[int]:
    if config.s is not None:
        if not 0 <= config.s <= top:
            raise ValueError(f"--s {config.s} outside 0..{top}")
        return [config.s]
    return list(range(0, top + 1))


def _params(config: RunConfig, **extra) -> dict:
    out = {"n": config.n, "ell": config.ell, "root": config.root, "m": config.m}
    if config.s is not None:
        out["s"] = config.s
    out.update(extra)
    return out


# -- commands ---------------------------------------------------------------


def cmd_qbinom(config: RunConfig, args) -> dict:
    spec = config.spec()
    m_arg, r_arg = args.top, args.bottom
    by_recursion = q_binomial(m_arg, r_arg, spec)
    by_product = q_binomial_by_product(m_arg, r_arg, spec)
    by_blocks = lusztig_factor(m_arg, r_arg, spec)
    agree = by_recursion == by_product == by_blocks
    return {
        "schema": SCHEMA,
        "command": "qbinom",
        "params": {"ell": config.ell, "root": config.root},
        "columns": ["top", "bottom", "value", "by_product", "by_block_factors", "agree"],
        "rows": [
            [
                m_arg,
                r_arg,
                by_recursion.render(),
                by_product.render(),
                by_blocks.render(),
                agree,
            ]
        ],
        "notes": {},
    }


def cmd_dims(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("dims needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)
    cap = trunc.cap(spec)

    def one(s: int):
        by_poly = dim_by_gaussian(config.n, cap + 1, s)
        by_sum = dim_by_alternating_sum(config.n, cap + 1, s)
        enumerated = len(component_basis(s, trunc, spec))
        return [s, by_poly, by_sum, enumerated, by_poly == by_sum == enumerated]

    rows = _parallel_map(one, _degree_list(config, top))
    return {
        "schema": SCHEMA,
        "command": "dims",
        "params": _params(config),
        "columns": ["s", "dim", "by_alternating_sum", "enumerated", "agree"],
        "rows": rows,
        "notes": {"top_degree": top},
    }


def cmd_edeg(config: RunConfig, args) -> dict:
    if config.m < 2:
        raise ValueError("edeg needs a truncation order m >= 2")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)

    def one(s: int):
        exact = loewy.e_bounds(s, trunc, spec)
        brute = loewy.e_bounds_bruteforce(s, trunc, spec)
        cf = loewy.e_bounds_closed_form(s, trunc, spec)
        agree = exact == brute and cf.e_min == exact[0] and cf.e_lo <= exact[1] <= cf.e_hi
        return [s, exact[0], exact[1], cf.case, cf.e_lo, cf.e_hi, agree]

    rows = _parallel_map(one, _degree_list(config, top))
    return {
        "schema": SCHEMA,
        "command": "edeg",
        "params": _params(config),
        "columns": [
            "s",
            "e_min",
            "e_max",
            "closed_form_case",
            "closed_form_lo",
            "closed_form_hi",
            "agree",
        ],
        "rows": rows,
        "notes": {},
    }


def cmd_socle(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("socle needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)

    def one(s: int):
        comp = component_space(s, trunc, spec)
        indices = loewy.socle_basis(s, trunc, spec)
        gens = loewy.socle_generators(s, trunc, spec)
        e_min, _ = loewy.e_bounds_bruteforce(s, trunc, spec)
        span = Subspace.from_vectors(
            spec.field,
            comp.dim,
            ({comp.index_of[alpha]: spec.one} for alpha in indices),
        )
        agrees = span == socle_oracle(comp)
        return [
            s,
            e_min,
            comp.dim,
            len(indices),
            " ".join(_tuple_str(g) for g in gens),
            agrees,
        ]

    rows = _parallel_map(one, _degree_list(config, top))
    return {
        "schema": SCHEMA,
        "command": "socle",
        "params": _params(config),
        "columns": ["s", "e_min", "dim", "socle_dim", "generators", "oracle_agrees"],
        "rows": rows,
        "notes": {},
    }


def cmd_loewy(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("loewy needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)

    def one(s: int):
        report = loewy.loewy_filtration(s, trunc, spec)
        out = []
        for info, cum in zip(report.layers, report.cumulative_dims):
            out.append(
                [
                    s,
                    info.index,
                    info.energy,
                    info.layer_degree,
                    info.multiplicity,
                    info.simple_dim,
                    info.monomial_count,
                    cum,
                    " ".join(_tuple_str(g) for g in info.generators),
                ]
            )
        return out

    rows = [row for group in _parallel_map(one, _degree_list(config, top)) for row in group]
    return {
        "schema": SCHEMA,
        "command": "loewy",
        "params": _params(config),
        "columns": [
            "s",
            "layer",
            "energy",
            "layer_degree",
            "multiplicity",
            "simple_dim",
            "layer_dim",
            "cumulative_dim",
            "generators",
        ],
        "rows": rows,
        "notes": {},
    }


def cmd_rigidity(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("rigidity needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)

    def one(s: int):
        rep = loewy.rigidity_check(s, trunc, spec)
        return [
            s,
            rep.loewy_length,
            " ".join(str(d) for d in rep.filtration_dims),
            " ".join(str(d) for d in rep.socle_dims),
            " ".join(str(d) for d in rep.radical_dims),
            rep.socle_matches,
            rep.radical_matches,
            rep.ok,
        ]

    rows = _parallel_map(one, _degree_list(config, top))
    return {
        "schema": SCHEMA,
        "command": "rigidity",
        "params": _params(config),
        "columns": [
            "s",
            "loewy_length",
            "filtration_dims",
            "socle_dims",
            "radical_dims",
            "socle_matches",
            "radical_matches",
            "ok",
        ],
        "rows": rows,
        "notes": {"all_ok": all(row[-1] for row in rows)},
    }


def cmd_cohomology(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("cohomology needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    if args.action:
        act = derham.action_on_cohomology(trunc, spec)
        rows = [
            [
                len(term[1]),
                derham.form_term_str(term),
                " ".join(eigs),
            ]
            for term, eigs in act.k_eigenvalues
        ]
        return {
            "schema": SCHEMA,
            "command": "cohomology",
            "params": _params(config, mode="action"),
            "columns": ["s", "representative", "k_eigenvalues"],
            "rows": rows,
            "notes": {
                "raising_lowering_trivial": act.raising_lowering_trivial,
                "has_negative_eigenvalue": act.has_negative_eigenvalue,
            },
        }
    report = derham.cohomology(trunc, spec)
    rows = [
        [
            deg.s,
            deg.dim,
            deg.expected,
            deg.ok,
            " ".join(derham.form_term_str(t) for t in deg.representatives),
        ]
        for deg in report.degrees
    ]
    return {
        "schema": SCHEMA,
        "command": "cohomology",
        "params": _params(config),
        "columns": ["s", "dim", "expected", "ok", "representatives"],
        "rows": rows,
        "notes": {"all_ok": report.ok},
    }


def cmd_identity(config: RunConfig, args) -> dict:
    if config.m < 1:
        raise ValueError("identity needs a truncation order m >= 1")
    spec = config.spec()
    trunc = config.trunc()
    top = trunc.total_degree(spec)

    def one(s: int):
        rep = loewy.identity_check(s, trunc, spec)
        terms = " + ".join(f"{mult}*{simple}" for _, mult, simple in rep.terms)
        return [s, rep.total_dim, rep.layer_sum, terms, rep.ok]

    rows = _parallel_map(one, _degree_list(config, top))
    return {
        "schema": SCHEMA,
        "command": "identity",
        "params": _params(config),
        "columns": ["s", "dim", "layer_sum", "terms", "ok"],
        "rows": rows,
        "notes": {"all_ok": all(row[-1] for row in rows)},
    }


def cmd_exactness(config: RunConfig, args) -> dict:
    spec = config.spec()
    if args.budget < 0:
        raise ValueError("budget must be nonnegative")
    report = derham.untruncated_exactness(config.n, spec, args.budget)
    rows = [[total, count, True] for total, count in report.per_total]
    return {
        "schema": SCHEMA,
        "command": "exactness",
        "params": {
            "n": config.n,
            "ell": config.ell,
            "root": config.root,
            "budget": args.budget,
        },
        "columns": ["total_weight", "weights_checked", "exact"],
        "rows": rows,
        "notes": {
            "weights_checked": report.weights_checked,
            "constants_dim": report.constants_dim,
            "ok": report.ok,
        },
    }


# -- rendering --------------------------------------------------------------


def _cell_str(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_table(report: dict) -> str:
    lines = [f"command: {report['command']} ({report['schema']})"]
    params = report["params"]
    lines.append("params: " + " ".join(f"{k}={params[k]}" for k in sorted(params)))
    columns = report["columns"]
    rows = [[_cell_str(v) for v in row] for row in report["rows"]]
    widths = [len(c) for c in columns]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    aligns = []
    for j in range(len(columns)):
        numeric = all(isinstance(row[j], (int, bool)) for row in report["rows"])
        aligns.append(numeric and bool(report["rows"]))
    header = "  ".join(c.ljust(widths[j]) for j, c in enumerate(columns))
    lines.append(header.rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        cells = [
            cell.rjust(widths[j]) if aligns[j] else cell.ljust(widths[j])
            for j, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    notes = report["notes"]
    for key in sorted(notes):
        lines.append(f"note: {key}={_cell_str(notes[key])}")
    return "\n".join(lines) + "\n"


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(report["columns"])
    for row in report["rows"]:
        writer.writerow([_cell_str(v) for v in row])
    return buf.getvalue()


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


_FORMATS = {"table": render_table, "csv": render_csv, "json": render_json}

_COMMANDS = {
    "qbinom": cmd_qbinom,
    "dims": cmd_dims,
    "edeg": cmd_edeg,
    "socle": cmd_socle,
    "loewy": cmd_loewy,
    "rigidity": cmd_rigidity,
    "cohomology": cmd_cohomology,
    "identity": cmd_identity,
    "exactness": cmd_exactness,
}


# -- argument handling ------------------------------------------------------


def _shared_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("shared options")
    group.add_argument("--n", type=int, default=argparse.SUPPRESS, help="rank (default 3)")
    group.add_argument(
        "--ell", type=int, default=argparse.SUPPRESS, help="characteristic of q (default 3)"
    )
    group.add_argument(
        "--root",
        choices=("odd", "even"),
        default=argparse.SUPPRESS,
        help="root order: odd (N = ell) or even (N = 2*ell); default odd",
    )
    group.add_argument(
        "--m",
        type=int,
        default=argparse.SUPPRESS,
        help="truncation order (0 = untruncated where applicable; default 1)",
    )
    group.add_argument(
        "--s", type=int, default=argparse.SUPPRESS, help="restrict to one degree"
    )
    group.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default=argparse.SUPPRESS,
        help="output format (default table)",
    )
    group.add_argument(
        "--out", default=argparse.SUPPRESS, help="write the report to this file"
    )
    group.add_argument(
        "--figure",
        default=argparse.SUPPRESS,
        help="also render a chart to this file (report commands)",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_options()
    parser = argparse.ArgumentParser(
        prog="qdiv",
        description="exact reports on quantum divided power algebra components",
        parents=[shared],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", parents=[shared], help="one q-binomial, three ways")
    p.add_argument("top", type=int)
    p.add_argument("bottom", type=int)

    sub.add_parser("dims", parents=[shared], help="component dimensions, three ways")
    sub.add_parser("edeg", parents=[shared], help="energy bounds per degree")
    sub.add_parser("socle", parents=[shared], help="socle spans against the oracle")
    sub.add_parser("loewy", parents=[shared], help="energy filtration layers")
    sub.add_parser("rigidity", parents=[shared], help="socle and radical series")
    p = sub.add_parser("cohomology", parents=[shared], help="de Rham cohomology")
    p.add_argument(
        "--action",
        action="store_true",
        help="report the generator action on the classes instead of dimensions",
    )
    sub.add_parser("identity", parents=[shared], help="dimension identity per degree")
    p = sub.add_parser("exactness", parents=[shared], help="untruncated acyclicity")
    p.add_argument("budget", type=int, help="largest total weight to check")
    return parser


_DEFAULTS = {
    "n": 3,
    "ell": 3,
    "root": "odd",
    "m": 1,
    "s": None,
    "format": "table",
    "out": None,
    "figure": None,
}


def _config_from(args: argparse.Namespace) -> RunConfig:
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.n < 2:
        raise ValueError("need a rank n >= 2")
    if args.m < 0:
        raise ValueError("truncation order m must be nonnegative")
    return RunConfig(n=args.n, ell=args.ell, root=args.root, m=args.m, s=args.s)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        report = _COMMANDS[args.command](config, args)
        text = _FORMATS[args.format](report)
        if args.figure is not None:
            from . import figures

            figures.render_figure(report, args.figure)
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
