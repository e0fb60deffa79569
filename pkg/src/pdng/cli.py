"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 input error (malformed graph6 in
strict mode, missing catalog), 3 theorem violation or failed reconstruction.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import TextIO

from . import __version__
from .enumeration import canonical_graph, enumerate_all
from .g6 import Graph6Error, LineError, Record, emit_graph6, parse_graph6, read_stream
from .generators import generate, parse_family
from .harness import ordered_map
from .ng import PARAMS, Hyp, NGReport, ng_report, parse_criterion
from .reconstruct import MissingCatalog, Target, reconstruct
from .solvers import SOLVERS
from .graph import complement, components
from .structure import structure

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# configuration ----------------------------------------------------------------


@dataclass
class RunConfig:
    command: str
    params: tuple[str, ...] = ("gp",)
    filters: frozenset[Hyp] = frozenset()
    find: str | None = None
    fmt: str = "jsonl"
    jobs: int = 1
    strict: bool = False
    strict_padding: bool = True
    output: str | None = None


def _split(text: str | None) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()] if text else []


def parse_params(text: str | None, default: Iterable[str] = ("gp",)) -> tuple[str, ...]:
    items = _split(text) or list(default)
    bad = [p for p in items if p not in PARAMS]
    if bad:
        raise UsageError(f"unknown parameter(s) {bad}; choose from {', '.join(PARAMS)}")
    return tuple(p for p in PARAMS if p in items)


def parse_filters(text: str | None) -> frozenset[Hyp]:
    out = set()
    for name in _split(text):
        try:
            out.add(Hyp(name.lower().replace("_", "-")))
        except ValueError:
            names = ", ".join(h.value for h in Hyp)
            raise UsageError(f"unknown filter {name!r}; choose from {names}") from None
    return frozenset(out)


# inputs -----------------------------------------------------------------------


def iter_inputs(args: argparse.Namespace, strict_padding: bool) -> Iterator[Record | LineError]:
    if args.graph6:
        for i, text in enumerate(args.graph6, 1):
            try:
                yield Record(i, parse_graph6(text, strict=strict_padding), text)
            except Graph6Error as exc:
                raise InputError(f"--graph6 {text!r}: {exc}") from None
    elif args.family:
        for i, text in enumerate(args.family, 1):
            try:
                g = generate(parse_family(text))
            except ValueError as exc:
                raise UsageError(f"--family {text!r}: {exc}") from None
            yield Record(i, g, text)
    elif args.enumerate is not None:
        try:
            graphs = enumerate_all(args.enumerate)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for i, g in enumerate(graphs, 1):
            yield Record(i, g, emit_graph6(g))
    elif args.file:
        try:
            yield from read_stream(args.file, strict_padding)
        except OSError as exc:
            raise InputError(str(exc)) from None
    else:
        raise UsageError("no input: give one of --graph6, --file, --enumerate, --family")


def checked_records(items: Iterable[Record | LineError], strict: bool, log: TextIO) -> Iterator[Record | LineError]:
    """Pass records through; report bad lines, aborting on the first in strict mode."""
    for item in items:
        if isinstance(item, LineError):
            if strict:
                raise InputError(str(item))
            print(f"warning: skipped {item}", file=log)
        yield item


# workers (top level so they pickle) -----------------------------------------


def _compute_task(job):
    item, params = job
    if isinstance(item, LineError):
        return item
    g = item.graph
    row: dict = {"n": g.n, "graph6": emit_graph6(g)}
    for p in params:
        res = SOLVERS[p](g)
        row[p] = res.value
        row[f"{p}_witness"] = res.witness_list
    row["metrics"] = structure(g).as_dict()
    return row


def _ng_task(job):
    item, params = job
    if isinstance(item, LineError):
        return item
    return ng_report(item.graph, params)


def _fast_task(job):
    """Sum for graphs where both sides have all components of order >= 3, else None."""
    from .solvers import gamma_p

    item, _ = job
    if isinstance(item, LineError):
        return item
    g = item.graph
    gbar = complement(g)
    if min(c.bit_count() for c in components(g)) < 3 or min(c.bit_count() for c in components(gbar)) < 3:
        return (g.n, emit_graph6(g), None, None)
    return (g.n, emit_graph6(g), gamma_p(g).value, gamma_p(gbar).value)


def _mapped(task, items, params, jobs):
    return ordered_map(task, ((item, params) for item in items), jobs=jobs)


# output -----------------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


NG_CSV_FIELDS = ["n", "graph6", "p", "p_bar", "sum", "prod", "g", "g_bar", "z", "z_bar", "flags", "violations"]


def ng_csv_row(r: NGReport) -> dict:
    d = r.as_dict()
    return {
        **{k: d.get(k, "") for k in NG_CSV_FIELDS[:10]},
        "flags": ";".join(d["flags"]),
        "violations": ";".join(c.theorem_id for c in r.violations()),
    }


def _compute_csv_row(row: dict, params) -> dict:
    out = {"n": row["n"], "graph6": row["graph6"]}
    for p in params:
        out[p] = row[p]
        out[f"{p}_witness"] = " ".join(map(str, row[f"{p}_witness"]))
    for k, v in row["metrics"].items():
        out[k] = " ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v)
    return out


# summaries --------------------------------------------------------------------

SUMMARY_CLASSES: list[tuple[str, frozenset[Hyp]]] = [("all graphs", frozenset())] + [
    (h.value, frozenset({h}))
    for h in (
        Hyp.ALL_COMPONENTS_GE3,
        Hyp.BOTH_CONNECTED,
        Hyp.DIAM_BOTH_2,
        Hyp.NO_ISOLATED_EITHER,
        Hyp.HAS_SMALL_COMPONENTS,
        Hyp.CUBIC_NO_K33_COMPONENT,
        Hyp.TREE_NOT_SMALL_STAR,
        Hyp.PLANAR_G,
    )
]


@dataclass
class _Range:
    lo: int | None = None
    hi: int | None = None
    attainers: list[str] = field(default_factory=list)
    min_attainers: list[str] = field(default_factory=list)

    def add(self, v: int, g6: str) -> None:
        # keep the first few graphs attaining each extreme, in input order
        if self.lo is None or v < self.lo:
            self.lo, self.min_attainers = v, []
        if v == self.lo and len(self.min_attainers) < 5:
            self.min_attainers.append(g6)
        if self.hi is None or v > self.hi:
            self.hi, self.attainers = v, []
        if v == self.hi and len(self.attainers) < 5:
            self.attainers.append(g6)

    def text(self) -> str:
        return "-" if self.lo is None else f"{self.lo}..{self.hi}"


class NGSummary:
    """Counts per check and observed ranges per (order, restriction class)."""

    def __init__(self) -> None:
        self.graphs = 0
        self.errors = 0
        self.checks: dict[str, Counter] = defaultdict(Counter)
        self.ranges: dict[tuple[int, str, str], _Range] = defaultdict(_Range)
        self.violations: list[tuple[str, str, object, object]] = []
        self.counts: Counter = Counter()

    def add(self, r: NGReport) -> None:
        self.graphs += 1
        g6 = r.graph6
        for c in r.checks:
            cnt = self.checks[c.theorem_id]
            cnt["applicable"] += c.hypothesis_ok
            cnt["held"] += c.hypothesis_ok and c.holds
            if c.hypothesis_ok and not c.holds:
                cnt["violated"] += 1
                self.violations.append((g6, c.theorem_id, c.bound, c.observed))
        for name, need in SUMMARY_CLASSES:
            if need <= r.flags:
                self.counts[r.n, name] += 1
                self.ranges[r.n, name, "gp_sum"].add(r.sum_p, g6)
                self.ranges[r.n, name, "gp_prod"].add(r.prod_p, g6)
                if r.g is not None:
                    self.ranges[r.n, name, "g_sum"].add(r.g + r.g_bar, g6)
                if r.z is not None:
                    self.ranges[r.n, name, "z_sum"].add(r.z + r.z_bar, g6)

    def as_dict(self) -> dict:
        classes = defaultdict(dict)
        for (n, name, key), rng in sorted(self.ranges.items()):
            entry = classes[f"{n}:{name}"]
            entry["count"] = self.counts[n, name]
            entry[key] = {
                "min": rng.lo,
                "max": rng.hi,
                "min_attainers": rng.min_attainers,
                "max_attainers": rng.attainers,
            }
        return {
            "graphs": self.graphs,
            "parse_errors": self.errors,
            "violations": len(self.violations),
            "checks": {k: dict(v) for k, v in sorted(self.checks.items(), key=_check_order)},
            "classes": classes,
        }

    def render(self) -> str:
        out = io.StringIO()
        out.write(f"graphs: {self.graphs}   parse errors: {self.errors}   violations: {len(self.violations)}\n\n")
        keys = sorted({k for (_, _, k) in self.ranges})
        header = ["n", "class", "count"] + [f"{k} min..max" for k in keys]
        rows = []
        for n, name in sorted({(n, c) for (n, c, _) in self.ranges}, key=lambda t: (t[0], _class_rank(t[1]))):
            rows.append([str(n), name, str(self.counts[n, name])] + [self.ranges[n, name, k].text() for k in keys])
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        for r in [header] + rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths, strict=True)).rstrip() + "\n")
        out.write("\ncheck                              applicable      held  violated\n")
        for cid, cnt in sorted(self.checks.items(), key=_check_order):
            out.write(f"{cid:<32} {cnt['applicable']:>12} {cnt['held']:>9} {cnt['violated']:>9}\n")
        for g6, cid, bound, observed in self.violations[:20]:
            out.write(f"VIOLATION {g6} {cid}: observed {observed}, bound {bound}\n")
        return out.getvalue()


def _check_order(item):
    cid = item[0]
    head, _, tail = cid.partition(".")
    return int(head), tail


def _class_rank(name: str) -> int:
    return [c for c, _ in SUMMARY_CLASSES].index(name)



# commands ---------------------------------------------------------------------


def _open_output(path: str | None) -> TextIO:
    return open(path, "w", encoding="ascii", newline="") if path else sys.stdout


def cmd_compute(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    items = checked_records(iter_inputs(args, cfg.strict_padding), cfg.strict, log)
    writer = None
    stats: dict[str, _Range] = defaultdict(_Range)
    for row in _mapped(_compute_task, items, cfg.params, cfg.jobs):
        if isinstance(row, LineError):
            continue
        if cfg.fmt == "jsonl":
            out.write(_dump(row) + "\n")
        elif cfg.fmt == "csv":
            flat = _compute_csv_row(row, cfg.params)
            if writer is None:
                writer = csv.DictWriter(out, fieldnames=list(flat), lineterminator="\n")
                writer.writeheader()
            writer.writerow(flat)
        else:
            for p in cfg.params:
                stats[p].add(row[p], row["graph6"])
            stats["n"].add(row["n"], row["graph6"])
    if cfg.fmt == "summary":
        for key, rng in stats.items():
            out.write(f"{key}: {rng.text()}  max attained by {' '.join(rng.attainers)}\n")
    return EXIT_OK


def _ng_stream(args, cfg: RunConfig, log: TextIO, summary: NGSummary) -> Iterator[NGReport]:
    items = checked_records(iter_inputs(args, cfg.strict_padding), cfg.strict, log)
    crit = parse_criterion(cfg.find, cfg.filters) if cfg.find else None
    for r in _mapped(_ng_task, items, cfg.params, cfg.jobs):
        if isinstance(r, LineError):
            summary.errors += 1
            continue
        summary.add(r)
        if crit is not None:
            if crit(r):
                yield r
        elif cfg.filters <= r.flags:
            yield r


def _report_violations(summary: NGSummary, log: TextIO) -> int:
    for g6, cid, bound, observed in summary.violations:
        print(f"RED ALERT: {g6} violates {cid}: observed {observed}, bound {bound}", file=log)
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_ngcheck(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    summary = NGSummary()
    writer = None
    matched = 0
    for r in _ng_stream(args, cfg, log, summary):
        matched += 1
        if cfg.fmt == "jsonl":
            out.write(r.to_json() + "\n")
        elif cfg.fmt == "csv":
            if writer is None:
                writer = csv.DictWriter(out, fieldnames=NG_CSV_FIELDS, lineterminator="\n")
                writer.writeheader()
            writer.writerow(ng_csv_row(r))
    if cfg.fmt == "summary":
        out.write(summary.render())
        out.write(f"\nmatched: {matched}\n")
    else:
        print(f"scanned {summary.graphs} graph(s), matched {matched}, violations {len(summary.violations)}", file=log)
    return _report_violations(summary, log)


def cmd_sweep(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    if args.fast:
        return _sweep_fast(args, cfg, out, log)
    summary = NGSummary()
    for _ in _ng_stream(args, cfg, log, summary):
        pass
    d = summary.as_dict()
    verdict = {
        "verdict": "violation" if summary.violations else "ok",
        "graphs": summary.graphs,
        "parse_errors": summary.errors,
        "violations": [
            {"graph6": g6, "id": cid, "bound": str(b), "observed": o} for g6, cid, b, o in summary.violations
        ],
        "sum_by_class": {
            k: {
                "count": v["count"],
                "min_sum": v["gp_sum"]["min"],
                "max_sum": v["gp_sum"]["max"],
                "min_sum_attainers": v["gp_sum"]["min_attainers"],
                "max_sum_attainers": v["gp_sum"]["max_attainers"],
            }
            for k, v in d["classes"].items()
            if "gp_sum" in v
        },
    }
    if cfg.fmt == "summary":
        out.write(summary.render())
    else:
        out.write(_dump(verdict) + "\n")
    return _report_violations(summary, log)



def _sweep_fast(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    """Max sum over graphs whose both sides have all components of order >= 3; no checks."""
    items = checked_records(iter_inputs(args, cfg.strict_padding), cfg.strict, log)
    per_n: dict[int, _Range] = defaultdict(_Range)
    counts: Counter = Counter()
    scanned = errors = 0
    for res in _mapped(_fast_task, items, (), cfg.jobs):
        if isinstance(res, LineError):
            errors += 1
            continue
        scanned += 1
        n, g6, p, pb = res
        if p is None:
            continue
        counts[n] += 1
        per_n[n].add(p + pb, g6)
    verdict = {
        "graphs": scanned,
        "parse_errors": errors,
        "all_components_ge3": {
            str(n): {"count": counts[n], "max_sum": rng.hi, "bound": n // 3 + 2, "max_sum_attainers": rng.attainers}
            for n, rng in sorted(per_n.items())
        },
    }
    if cfg.fmt == "summary":
        for n, rng in sorted(per_n.items()):
            out.write(f"n={n}: {counts[n]} graphs with all components >= 3 on both sides, "
                      f"sum range {rng.text()}, bound {n // 3 + 2}\n")
    else:
        out.write(_dump(verdict) + "\n")
    return EXIT_OK


def cmd_reconstruct(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    try:
        rec = reconstruct(args.target, args.file)
    except MissingCatalog as exc:
        raise InputError(str(exc)) from None
    except (OSError, Graph6Error) as exc:
        raise InputError(str(exc)) from None
    if cfg.fmt == "summary":
        out.write(f"{rec.target.value}: scanned {rec.scanned}, found {len(rec.matches)}\n")
        for m in rec.matches:
            out.write("  " + " ".join(f"{k}={v}" for k, v in m.as_dict().items()) + "\n")
    elif cfg.fmt == "csv":
        rows = [m.as_dict() for m in rec.matches]
        fields = list(dict.fromkeys(k for r in rows for k in r)) or ["graph6", "certificate"]
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        for m in rec.matches:
            out.write(_dump(m.as_dict()) + "\n")
    for problem in rec.problems:
        print(f"{rec.target.value}: {problem}", file=log)
    return EXIT_OK if rec.ok else EXIT_VIOLATION


def cmd_generate(args, cfg: RunConfig, out: TextIO, log: TextIO) -> int:
    for item in checked_records(iter_inputs(args, cfg.strict_padding), cfg.strict, log):
        if isinstance(item, LineError):
            continue
        g = canonical_graph(item.graph) if args.canonical else item.graph
        out.write(emit_graph6(g) + "\n")
    return EXIT_OK


# parser -----------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", action="append", metavar="LINE", help="graph6 literal (repeatable)")
    src.add_argument("--file", metavar="PATH", help="graph6 file, .gz file, or - for stdin")
    src.add_argument("--enumerate", type=int, metavar="N", help="all graphs of order N (N <= 8)")
    src.add_argument("--family", action="append", metavar="SPEC", help="family spec such as necklace:3 (repeatable)")
    p.add_argument("--strict", action="store_true", help="abort with exit 2 on the first malformed line")
    p.add_argument("--lenient-padding", action="store_true", help="accept nonzero graph6 padding bits")


def _add_common(p: argparse.ArgumentParser, formats=("jsonl", "csv", "summary")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--output", metavar="PATH", help="write results here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes (output order is fixed)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdng", description="Power domination and Nordhaus-Gaddum bound checking.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="gamma_P / gamma / Z with witnesses and structural metrics")
    _add_input(p)
    _add_common(p)
    p.add_argument("--params", metavar="LIST", help="comma list from gp,g,z (default gp)")

    p = sub.add_parser("ngcheck", help="Nordhaus-Gaddum reports and bound checks")
    _add_input(p)
    _add_common(p)
    p.add_argument("--params", metavar="LIST", help="comma list from gp,g,z (default gp)")
    p.add_argument("--filter", metavar="NAMES", help="only report graphs with all these hypothesis flags")
    p.add_argument("--find", metavar="KEY=VAL", help="extremal criterion, e.g. sum=4 or sum=bound10")

    p = sub.add_parser("sweep", help="verify every check over a whole catalog")
    _add_input(p)
    _add_common(p, ("jsonl", "summary"))
    p.add_argument("--params", metavar="LIST", help="comma list from gp,g,z (default gp)")
    p.add_argument("--filter", metavar="NAMES", help="restrict the reported statistics")
    p.add_argument("--fast", action="store_true", help="only the max sum over graphs with all components >= 3")

    p = sub.add_parser("reconstruct", help="search catalogs for graphs known only by their properties")
    p.add_argument("target", choices=[t.value for t in Target])
    p.add_argument("--file", metavar="PATH", help="catalog to search instead of the default")
    _add_common(p)

    p = sub.add_parser("generate", help="emit graph6 lines")
    _add_input(p)
    p.add_argument("--canonical", action="store_true", help="emit canonical labellings")
    p.add_argument("--output", metavar="PATH")
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "ngcheck": cmd_ngcheck,
    "sweep": cmd_sweep,
    "reconstruct": cmd_reconstruct,
    "generate": cmd_generate,
}


def make_config(args: argparse.Namespace) -> RunConfig:
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return RunConfig(
        command=args.command,
        params=parse_params(getattr(args, "params", None)),
        filters=parse_filters(getattr(args, "filter", None)),
        find=getattr(args, "find", None),
        fmt=getattr(args, "format", "jsonl"),
        jobs=jobs,
        strict=getattr(args, "strict", False),
        strict_padding=not getattr(args, "lenient_padding", False),
        output=getattr(args, "output", None),
    )


def main(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    log = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        if cfg.find:
            parse_criterion(cfg.find)  # validate before reading input
        out = stdout if (stdout is not None and not cfg.output) else _open_output(cfg.output)
        try:
            return COMMANDS[args.command](args, cfg, out, log)
        finally:
            if out not in (sys.stdout, stdout):
                out.close()
    except UsageError as exc:
        print(f"pdng: error: {exc}", file=log)
        return EXIT_USAGE
    except ValueError as exc:
        if isinstance(exc, Graph6Error):
            print(f"pdng: input error: {exc}", file=log)
            return EXIT_INPUT
        print(f"pdng: error: {exc}", file=log)
        return EXIT_USAGE
    except InputError as exc:
        print(f"pdng: input error: {exc}", file=log)
        return EXIT_INPUT
    except OSError as exc:
        print(f"pdng: input error: {exc}", file=log)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())
