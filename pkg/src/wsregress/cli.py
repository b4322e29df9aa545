"""``wsregress`` command line.

Exit status: 0 on success, 1 on a usage error, 2 when the analysis fails
(bad WSDL, broken suite, unknown operation, ...).
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

import click

from . import __version__
from .callgraph import affected_operations, infer_callgraph, load_callgraph
from .codeanalysis import CodeUnit, UnitChangeSet, diff_units, load_units_dir, separate_units
from .effort import gather_counts, line_ratio_effort, operation_ratio_effort, z_interpretations
from .effort import LineRatioInputs, OperationRatioInputs
from .errors import SelectionError, SuiteError, WsregressError, XmlSyntaxError
from .graph import View, render_graph
from .rrts import build_rrts_report, plan_from_subset, prtws_reduce_report
from .subset import (
    SubsetSpec,
    build,
    combined_spec,
    difference_spec,
    parameter_spec,
    reduce_spec,
    unit_spec,
)
from .suite import Dialect, PrimaryParameterScenario, TestSuite, parse_suite, scenario_cases, serialize_suite
from .wsdl import WsdlDocument, load_wsdl
from .wsdldiff import diff_wsdl

log = logging.getLogger("wsregress")

DIALECT_ENV = "WSREGRESS_DIALECT"

_path = click.Path(dir_okay=False, path_type=Path)
_in_file = click.Path(exists=True, dir_okay=False, path_type=Path)
_in_dir = click.Path(exists=True, file_okay=False, path_type=Path)


# --------------------------------------------------------------------------
# helpers


def _split(values: Sequence[str]) -> list[str]:
    """Flatten repeated and comma-separated option values."""
    out = []
    for v in values:
        out.extend(p.strip() for p in v.split(",") if p.strip())
    return list(dict.fromkeys(out))


def _to_file(path: Path | None) -> bool:
    return path is not None and str(path) != "-"


def _write(path: Path | None, text: str, force: bool) -> None:
    if not _to_file(path):
        click.echo(text, nl=not text.endswith("\n"))
        return
    if path.exists() and not force:
        raise click.UsageError(f"{path} exists; pass --force to overwrite")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _emit_report(path: Path | None, data: dict, pretty: bool, force: bool, echo: bool) -> None:
    text = json.dumps(data, indent=2 if pretty else None) + "\n"
    if _to_file(path):
        _write(path, text, force)
    elif echo or path is not None:
        click.echo(text, nl=False)


def _load_suite(path: Path, dialect: str | None) -> TestSuite:
    try:
        return parse_suite(path.read_bytes(), dialect)
    except (SuiteError, XmlSyntaxError) as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _units(src: Path | None, units_dir: Path | None) -> dict[str, CodeUnit] | None:
    if src is not None and units_dir is not None:
        raise click.UsageError("give either a source tree or a units directory, not both")
    if src is not None:
        return separate_units(src)
    if units_dir is not None:
        return load_units_dir(units_dir)
    return None


def _unit_changes(old_src, new_src, old_units, new_units) -> UnitChangeSet:
    old = _units(old_src, old_units)
    new = _units(new_src, new_units)
    if old is None or new is None:
        raise click.UsageError("need old and new code: --old-src/--new-src or --old-units/--new-units")
    return diff_units(old, new)


def _interactive() -> bool:
    return sys.stdin.isatty() and sys.stdout.isatty()


def _prompt_list(what: str, choices: Sequence[str]) -> list[str]:
    for i, c in enumerate(choices, 1):
        click.echo(f"  {i}. {c}", err=True)
    answer = click.prompt(f"{what} (numbers or names, comma separated)", err=True)
    picked = []
    for token in _split([answer]):
        if token.isdigit() and 1 <= int(token) <= len(choices):
            picked.append(choices[int(token) - 1])
        else:
            picked.append(token)
    return picked


def _save_subset(spec: SubsetSpec, out: Path | None, report: Path | None, pretty: bool, force: bool, extra: dict | None = None):
    doc, text = build(spec)
    data = json.loads(spec.provenance_json())
    if extra:
        data.update(extra)
    _write(out, text, force)
    _emit_report(report, data, pretty, force, echo=_to_file(out))
    return doc


common_out = [
    click.option("--out", "out", type=_path, help="Output file; - or omitted means standard output."),
    click.option("--report", type=_path, help="JSON report file."),
    click.option("--pretty", is_flag=True, help="Indent JSON reports."),
    click.option("--force", is_flag=True, help="Overwrite existing output files."),
]


def with_outputs(fn: Callable) -> Callable:
    for opt in reversed(common_out):
        fn = opt(fn)
    return fn


def code_options(fn: Callable) -> Callable:
    for opt in reversed([
        click.option("--old-src", type=_in_dir, help="Old source tree."),
        click.option("--new-src", type=_in_dir, help="New source tree."),
        click.option("--old-units", type=_in_dir, help="Old pre-separated units (one file per unit)."),
        click.option("--new-units", type=_in_dir, help="New pre-separated units."),
    ]):
        fn = opt(fn)
    return fn


# --------------------------------------------------------------------------
# commands


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True, help="More logging on standard error.")
@click.version_option(__version__, prog_name="wsregress")
def cli(verbose: int) -> None:
    """Select and reduce regression tests for SOAP web services."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr, force=True)


@cli.command("diff-wsdl")
@click.option("--old", "old_path", type=_in_file, required=True)
@click.option("--new", "new_path", type=_in_file, required=True)
@with_outputs
def diff_wsdl_cmd(old_path, new_path, out, report, pretty, force):
    """Difference WSDL: inserted and I/O-modified operations."""
    old, new = load_wsdl(old_path), load_wsdl(new_path)
    changes = diff_wsdl(old, new)
    for note in changes.informational:
        log.info("not an operation change: %s", note)
    for op in sorted(changes.deleted):
        log.warning("operation %s was deleted", op)
    _save_subset(difference_spec(old, new, changes), out, report, pretty, force, {"changes": changes.to_json()})


@cli.command("unit-wsdl")
@click.option("--new", "new_path", type=_in_file, required=True, help="New WSDL.")
@code_options
@with_outputs
def unit_wsdl_cmd(new_path, old_src, new_src, old_units, new_units, out, report, pretty, force):
    """Unit WSDL: operations whose own code changed."""
    new = load_wsdl(new_path)
    units = _unit_changes(old_src, new_src, old_units, new_units)
    _save_subset(unit_spec(new, units), out, report, pretty, force, {"units": units.to_json()})


@cli.command("reduce-wsdl")
@click.option("--wsdl", "wsdl_path", type=_in_file, required=True)
@click.option("--ops", multiple=True, help="Operations to keep (repeat or comma separate).")
@with_outputs
def reduce_wsdl_cmd(wsdl_path, ops, out, report, pretty, force):
    """Reduce WSDL: operations picked by hand."""
    doc = load_wsdl(wsdl_path)
    selected = _split(ops)
    if not selected:
        if not _interactive():
            raise click.UsageError("--ops is required when not attached to a terminal")
        selected = _prompt_list("operations to keep", doc.operation_names)
    _save_subset(reduce_spec(doc, selected), out, report, pretty, force)


@cli.command("combine-wsdl")
@click.option("--base", "base_path", type=_in_file, required=True, help="New WSDL the parts were cut from.")
@click.option("--part", "parts", type=_in_file, multiple=True, help="Subset WSDL to merge (repeatable).")
@click.option("--old", "old_path", type=_in_file, help="Old WSDL; adds the difference subset.")
@click.option("--ops", multiple=True, help="Also add these hand-picked operations.")
@code_options
@with_outputs
def combine_wsdl_cmd(base_path, parts, old_path, ops, old_src, new_src, old_units, new_units, out, report, pretty, force):
    """Combined WSDL: deduplicated union of subsets.

    Parts can be given as files, or computed on the fly from --old (difference),
    the code options (unit) and --ops (reduce), in that order.
    """
    base = load_wsdl(base_path)
    pieces: list = []
    if old_path is not None:
        pieces.append(difference_spec(load_wsdl(old_path), base))
    if any(p is not None for p in (old_src, new_src, old_units, new_units)):
        pieces.append(unit_spec(base, _unit_changes(old_src, new_src, old_units, new_units)))
    if ops:
        pieces.append(reduce_spec(base, _split(ops)))
    pieces.extend(load_wsdl(p) for p in parts)
    if not pieces:
        raise click.UsageError("nothing to combine: give --part files or --old/code/--ops inputs")
    _save_subset(combined_spec(base, pieces), out, report, pretty, force)


@cli.command("param-wsdl")
@click.option("--new", "new_path", type=_in_file, required=True, help="New WSDL.")
@click.option("--callgraph", "cg_path", type=_in_file, help="Call graph file; inferred from the new code if omitted.")
@code_options
@with_outputs
def param_wsdl_cmd(new_path, cg_path, old_src, new_src, old_units, new_units, out, report, pretty, force):
    """Parameter WSDL: operations reaching changed code through calls."""
    new = load_wsdl(new_path)
    units = _unit_changes(old_src, new_src, old_units, new_units)
    if cg_path is not None:
        graph = load_callgraph(cg_path.read_text(encoding="utf-8"))
    else:
        graph = infer_callgraph(_units(new_src, new_units) or {}, new.operation_names)
        log.info("inferred call graph with %d edges", len(graph.edges))
    changed = units.changed | units.added
    affected = affected_operations(graph, changed)
    spec = parameter_spec(new, affected, changed)
    _save_subset(spec, out, report, pretty, force, {"units": units.to_json()})


def _dialect_option(fn):
    return click.option(
        "--dialect",
        type=click.Choice([d.value for d in Dialect]),
        envvar=DIALECT_ENV,
        help=f"Suite dialect (default: ${DIALECT_ENV}, else sniffed).",
    )(fn)


@cli.command("rrts")
@click.option("--subset", "subset_path", type=_in_file, required=True, help="Subset WSDL driving the selection.")
@click.option("--suite", "suite_path", type=_in_file, required=True, help="Old test suite.")
@click.option("--old-wsdl", type=_in_file, help="Old WSDL; tells inserted operations apart.")
@click.option("--new-wsdl", type=_in_file, help="Full new WSDL (default: the subset).")
@_dialect_option
@with_outputs
def rrts_cmd(subset_path, suite_path, old_wsdl, new_wsdl, dialect, out, report, pretty, force):
    """Reduced regression test suite for a subset WSDL."""
    subset = load_wsdl(subset_path)
    new = load_wsdl(new_wsdl) if new_wsdl else subset
    old = load_wsdl(old_wsdl) if old_wsdl else None
    suite = _load_suite(suite_path, dialect)
    plan = plan_from_subset(subset, suite, old, new)
    reduced, rep = build_rrts_report(suite, plan, new)
    text = serialize_suite(reduced)
    # self-check: what we write must load again with the same cases
    again = parse_suite(text, reduced.dialect)
    if again.case_names != reduced.case_names:  # pragma: no cover
        raise SuiteError("reduced suite does not re-parse to the same cases")
    if not reduced.cases:
        log.warning("no test case needs to run; writing an empty suite")
    _write(out, text, force)
    _emit_report(report, rep.to_json(), pretty, force, echo=_to_file(out))


def _primary(values: Sequence[str]) -> tuple[list[str], dict[str, str]]:
    names, fixed = [], {}
    for item in _split(values):
        name, eq, value = item.partition("=")
        names.append(name)
        if eq:
            fixed[name] = value
    return names, fixed


@cli.command("prtws")
@click.option("--suite", "suite_path", type=_in_file, required=True)
@click.option("--op", "operation", required=True, help="Operation whose cases are reduced.")
@click.option("--primary", multiple=True, help="Primary parameter, optionally NAME=VALUE (repeatable).")
@click.option("--case", "cases", multiple=True, help="Cases to keep (default: every case of --op).")
@click.option("--steps", multiple=True, help="Step names to keep in each kept case.")
@click.option("--step-index", "indices", multiple=True, help="1-based step positions to keep instead of names.")
@click.option("--wsdl", "wsdl_path", type=_in_file, help="WSDL used to bind steps to operations.")
@_dialect_option
@with_outputs
def prtws_cmd(suite_path, operation, primary, cases, steps, indices, wsdl_path, dialect, out, report, pretty, force):
    """Keep chosen steps of one operation's test cases."""
    suite = _load_suite(suite_path, dialect)
    wsdl = load_wsdl(wsdl_path) if wsdl_path else None
    names, fixed = _primary(primary)
    if not names:
        raise click.UsageError("--primary is required")
    scenario = PrimaryParameterScenario(operation, tuple(names), fixed)
    targets = scenario_cases(suite, scenario, wsdl)
    if not targets:
        raise SelectionError(f"no test case exercises operation {operation!r}")
    chosen = _split(cases) or [c.name for c in targets]
    if steps and indices:
        raise click.UsageError("give --steps or --step-index, not both")
    selection: dict[str, list[str]] = {}
    for name in chosen:
        case = suite.case(name)
        if indices:
            pos = [int(i) for i in _split(indices) if i.isdigit()]
            bad = [i for i in pos if not 1 <= i <= len(case.steps)]
            if bad or len(pos) != len(_split(indices)):
                raise SelectionError(f"test case {name!r} has {len(case.steps)} steps; bad --step-index")
            selection[name] = [case.step_names[i - 1] for i in pos]
        elif steps:
            selection[name] = _split(steps)
        elif _interactive():
            click.echo(f"steps of {name}:", err=True)
            selection[name] = _prompt_list("steps to keep", case.step_names)
        else:
            raise click.UsageError("--steps or --step-index is required when not attached to a terminal")
    reduced, rep = prtws_reduce_report(suite, scenario, selection, wsdl)
    _write(out, serialize_suite(reduced), force)
    _emit_report(report, rep.to_json(), pretty, force, echo=_to_file(out))


def _numbers(text: str, n: int, what: str) -> list[float]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != n:
        raise click.UsageError(f"{what} needs {n} comma-separated numbers")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise click.UsageError(f"{what}: not a number in {text!r}") from None


@cli.command("metrics")
@click.option("--old", "old_path", type=_in_file, help="Old WSDL.")
@click.option("--new", "new_path", type=_in_file, help="New WSDL.")
@click.option("--subset", "subset_path", type=_in_file, help="Subset WSDL (Z).")
@code_options
@click.option("--lines", "lines", help="Explicit L1,L2,X1,X2,Y1,Y2 for the line ratio.")
@click.option("--counts", "counts", help="Explicit X,Y,Z for the operation ratio.")
@click.option("--report", type=_path, help="JSON report file.")
@click.option("--pretty", is_flag=True, help="Indent the JSON report.")
@click.option("--force", is_flag=True)
def metrics_cmd(old_path, new_path, subset_path, old_src, new_src, old_units, new_units, lines, counts, report, pretty, force):
    """Effort-reduction estimates; prints a table, writes JSON with --report."""
    line_in: LineRatioInputs | None = None
    op_in: OperationRatioInputs | None = None
    notes: dict = {}
    if old_path or new_path or subset_path:
        if not (old_path and new_path and subset_path):
            raise click.UsageError("--old, --new and --subset go together")
        old, new, sub = load_wsdl(old_path), load_wsdl(new_path), load_wsdl(subset_path)
        line_in, op_in = gather_counts(old, new, sub, _units(old_src, old_units), _units(new_src, new_units))
        notes["z"] = z_interpretations(sub, diff_wsdl(old, new).io_modified)
    if lines:
        L1, L2, X1, X2, Y1, Y2 = _numbers(lines, 6, "--lines")
        line_in = LineRatioInputs(int(L1), int(L2), X1, X2, Y1, Y2)
    if counts:
        X, Y, Z = _numbers(counts, 3, "--counts")
        op_in = OperationRatioInputs(int(X), int(Y), int(Z))
    if line_in is None and op_in is None:
        raise click.UsageError("give WSDL inputs (--old/--new/--subset) or explicit --lines/--counts")
    data: dict = {}
    tables = []
    if line_in is not None:
        r = line_ratio_effort(line_in)
        data["line_ratio"] = r.to_json()
        tables.append(r.table())
    if op_in is not None:
        r = operation_ratio_effort(op_in)
        data["operation_ratio"] = r.to_json()
        tables.append(r.table())
    if notes:
        data["notes"] = notes
        zs = notes["z"]
        if zs["subset_operations"] != zs["io_modified_only"]:
            tables.append(
                f"note: Z is {zs['subset_operations']} counting every subset operation, "
                f"{zs['io_modified_only']} counting only modified ones"
            )
    click.echo("\n\n".join(tables))
    if report is not None:
        _emit_report(report, data, pretty, force, echo=False)


@cli.command("graph")
@click.option("--wsdl", "wsdl_path", type=_in_file, required=True)
@click.option("--view", type=click.Choice([v.value for v in View]), default=View.ABSTRACT.value, show_default=True)
@click.option("--out", "out", type=_path)
@click.option("--force", is_flag=True)
def graph_cmd(wsdl_path, view, out, force):
    """Graphviz DOT rendering of a WSDL."""
    _write(out, render_graph(load_wsdl(wsdl_path), view), force)


# --------------------------------------------------------------------------
# entry point


def run(argv: Sequence[str] | None = None) -> int:
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="wsregress", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (WsregressError, ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


def main() -> None:  # pragma: no cover
    sys.exit(run())
