"""CLI entrypoints for obatalab."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from dataclasses import replace
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from dotenv import load_dotenv

from obatalab.catalog import (
    GroupSpec,
    connection_for,
    structure_for,
)
from obatalab.configuration import (
    DEFAULT_CONFIG_PATH,
    ObataSettings,
    apply_environment,
    build_obata_settings,
)
from obatalab.constants import FAMILIES, HOLONOMY_METHODS
from obatalab.exceptions import (
    DimensionCapError,
    IncompatibleMetricError,
    ObataLabError,
)
from obatalab.geometry.lee import (
    is_closed,
    lee_form,
    obata_one_form,
    obata_ricci,
    verify_one_form_independence,
    verify_ricci_is_d_eta,
)
from obatalab.geometry.metric import (
    InvariantMetric,
    extend_killing_metric,
    verify_hyperhermitian,
)
from obatalab.geometry.semidirect import (
    semidirect_hkt,
    standard_sp1_representation,
)
from obatalab.geometry.twisted_cy import (
    check_twisted_cy,
    hyperhermitian_data,
    verify_twisted_cy,
)
from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.joyce.hypercomplex import ParameterMatrix
from obatalab.logging import detach_file_logger, setup_file_logger
from obatalab.obata.connection import connection_form, dual_labels
from obatalab.obata.holonomy import holonomy_algebra
from obatalab.obata.subspaces import (
    find_parallel_subspaces,
    is_block_lower_triangular,
    verify_reduction_consistency,
)
from obatalab.reporting import ReportRenderer, RunReport
from obatalab.rootsys.tables import table1
from obatalab.runtime import RunSession
from obatalab.sweep import ParameterCurve, parse_t_values, sweep_holonomy
from obatalab.verification import context_for, run_lemma_suite

LOGGER = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, ObataSettings], RunReport]

# Known filtration values, keyed by family, n and the parameter matrix.
_PUBLISHED_FILTRATIONS: Dict[Tuple[str, int, str], Tuple[int, ...]] = {
    ("sp", 2, "1,0;0,1"): (7, 11),
    ("su", 5, "0,1;1,0"): (52, 138, 144),
    # GroupSpec.parse("hopf") always sets n = 2 (the SU(2) factor)
    ("hopf", 2, "1"): (0,),
}


def _shared_options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--config",
        type=str,
        default=argparse.SUPPRESS,
        help=(
            "Path to a YAML config. If omitted, uses "
            "configs/default_config.yaml when present."
        ),
    )
    shared.add_argument(
        "--run-root",
        type=str,
        default=argparse.SUPPRESS,
        help="Directory where run artifacts (RunSession) are written.",
    )
    return shared


def _group_options() -> argparse.ArgumentParser:
    group = argparse.ArgumentParser(add_help=False)
    group.add_argument(
        "--family",
        type=str,
        required=True,
        choices=FAMILIES,
        help="Group family of the classification list, or hopf.",
    )
    group.add_argument(
        "--n",
        type=int,
        help="n for SU(n), SO(n), Sp(n); 6, 7 or 8 for the E series.",
    )
    group.add_argument(
        "--torus",
        type=int,
        help="Torus dimension; checked against 2m - r when given.",
    )
    group.add_argument(
        "--A",
        dest="A",
        type=str,
        help='Parameter matrix as rational rows, e.g. "0,1;1,0".',
    )
    group.add_argument(
        "--json",
        type=str,
        help="Also write the JSON report to this path.",
    )
    return group


def _holonomy_options() -> argparse.ArgumentParser:
    holonomy = argparse.ArgumentParser(add_help=False)
    holonomy.add_argument(
        "--method",
        type=str,
        choices=HOLONOMY_METHODS,
        help="Holonomy closure method (default from config).",
    )
    holonomy.add_argument(
        "--max-depth",
        type=int,
        help="Override the maximal number of covariant derivatives.",
    )
    holonomy.add_argument(
        "--dim-cap",
        type=int,
        help="Refuse holonomy above this ambient dimension.",
    )
    holonomy.add_argument(
        "--workers",
        type=int,
        help="Thread workers for candidate generation (0 = default).",
    )
    return holonomy


def _build_parser() -> argparse.ArgumentParser:
    shared = _shared_options()
    group = _group_options()
    holonomy = _holonomy_options()
    parser = argparse.ArgumentParser(
        prog="obata",
        description=(
            "Joyce hypercomplex structures, the Obata connection and its "
            "holonomy, in exact arithmetic."
        ),
        parents=[shared],
    )
    parser.add_argument(
        "--list-runs",
        action="store_true",
        help="List existing run directories under --run-root and exit.",
    )
    parser.add_argument(
        "--show-run",
        type=str,
        help="Show metadata for a given run_id (requires --run-root).",
    )
    parser.add_argument(
        "--no-record",
        action="store_true",
        help="Do not create a run directory for this invocation.",
    )
    commands = parser.add_subparsers(dest="command")

    decompose = commands.add_parser(
        "decompose",
        parents=[shared, group],
        help="Joyce decomposition and layer table of one group.",
    )
    decompose.add_argument(
        "--diagram-only",
        action="store_true",
        help="Use the combinatorial reduction on the Dynkin diagram.",
    )
    decompose.add_argument(
        "--realize",
        action="store_true",
        help="Build structure constants and run the lemma checks.",
    )
    decompose.add_argument(
        "--emit-basis",
        action="store_true",
        help="Include the adapted basis and frame in the JSON report.",
    )

    table = commands.add_parser(
        "table1",
        parents=[shared],
        help="Trivial f_j summands for every family up to a rank.",
    )
    table.add_argument("--max-rank", type=int, help="Largest rank listed.")
    table.add_argument(
        "--json", type=str, help="Also write the JSON report to this path."
    )

    hol = commands.add_parser(
        "holonomy",
        parents=[shared, group, holonomy],
        help="Holonomy algebra of the Obata connection.",
    )
    hol.add_argument(
        "--realize",
        action="store_true",
        help="Accepted for symmetry with decompose; holonomy always "
        "realizes.",
    )
    hol.add_argument(
        "--emit-basis",
        action="store_true",
        help="Include the holonomy basis matrices in the JSON report.",
    )
    hol.add_argument(
        "--emit-theta",
        action="store_true",
        help="Include the connection 1-form matrix in the JSON report.",
    )
    hol.add_argument(
        "--lie-closure",
        action="store_true",
        help="Also check that the final span is closed under brackets.",
    )

    sweep = commands.add_parser(
        "sweep",
        parents=[shared, group, holonomy],
        help="Holonomy along a curve A_t of parameter matrices.",
    )
    sweep.add_argument(
        "--curve",
        type=str,
        required=True,
        help='Matrix of rational functions of t, e.g. "t,1-t;1+t,-t".',
    )
    sweep.add_argument(
        "--t",
        type=str,
        default="0,1",
        help='Comma separated rational t values (default "0,1").',
    )
    sweep.add_argument(
        "--csv", type=str, help="Also write the sweep table as CSV."
    )

    geometry = commands.add_parser(
        "geometry",
        parents=[shared, group],
        help="Obata 1-form, Ricci, Lee form and twisted Calabi-Yau checks.",
    )
    geometry.add_argument(
        "--twisted-cy",
        action="store_true",
        help="Check HKT, strong HKT, dPsi = theta ^ Psi and dtheta = 0.",
    )
    geometry.add_argument(
        "--psi-cap",
        type=int,
        help="Largest quaternionic dimension for the volume form.",
    )
    geometry.add_argument(
        "--semidirect",
        type=int,
        default=0,
        metavar="R",
        help="Extend by H^R and repeat the checks on the product.",
    )
    geometry.add_argument(
        "--rho",
        type=str,
        choices=("trivial", "standard"),
        default="trivial",
        help="Action on H^R: zero, or sp(1) through the first layer.",
    )
    return parser


def _load_config(config_path: Path) -> dict:
    if not config_path.exists():
        raise FileNotFoundError(f"Config file '{config_path}' not found.")
    return yaml.safe_load(config_path.read_text()) or {}


def _resolve_settings(args: argparse.Namespace) -> ObataSettings:
    explicit = getattr(args, "config", None)
    config_path = Path(explicit) if explicit else DEFAULT_CONFIG_PATH
    if explicit or config_path.exists():
        config_data = _load_config(config_path)
    else:
        config_data = {}
    settings = build_obata_settings(
        config_data, config_root=config_path.resolve().parent
    )
    settings = apply_environment(settings)
    return _apply_cli_overrides(args, settings)


def _apply_cli_overrides(
    args: argparse.Namespace, settings: ObataSettings
) -> ObataSettings:
    holonomy = settings.holonomy
    for name in ("method", "max_depth", "dim_cap", "workers"):
        value = getattr(args, name, None)
        if value is not None:
            holonomy = replace(holonomy, **{name: value})
    geometry = settings.geometry
    if getattr(args, "psi_cap", None):
        geometry = replace(geometry, psi_cap=args.psi_cap)
    table = settings.table1
    if getattr(args, "max_rank", None) is not None:
        table = replace(table, max_rank=args.max_rank)
    runtime = settings.runtime
    run_root = getattr(args, "run_root", None)
    if run_root:
        runtime = replace(runtime, run_root=Path(run_root))
    return replace(
        settings,
        holonomy=holonomy,
        geometry=geometry,
        table1=table,
        runtime=runtime,
    )


def _list_runs(run_root: Path) -> int:
    if not run_root.exists():
        print("No runs yet.", file=sys.stderr)
        return 0
    runs = sorted(path for path in run_root.iterdir() if path.is_dir())
    if not runs:
        print("No runs yet.", file=sys.stderr)
        return 0
    for run_dir in runs:
        session_file = run_dir / "session.json"
        summary = {"run_id": run_dir.name}
        if session_file.exists():
            try:
                summary.update(json.loads(session_file.read_text()))
            except Exception:
                pass
        print(json.dumps(summary, indent=2))
    return 0


def _show_run(run_root: Path, run_id: str) -> int:
    run_dir = run_root / run_id
    if not run_dir.exists():
        print(f"Run {run_id} not found under {run_root}", file=sys.stderr)
        return 1
    session_file = run_dir / "session.json"
    events = run_dir / "events.jsonl"
    reports_dir = run_dir / "reports"
    if session_file.exists():
        print(session_file.read_text())
    if events.exists():
        print("=== events ===")
        print(events.read_text())
    if reports_dir.exists():
        print("=== reports ===")
        for report_file in sorted(reports_dir.glob("*.json")):
            print(report_file.read_text())
    return 0


def _group_spec(args: argparse.Namespace) -> GroupSpec:
    return GroupSpec.parse(args.family, args.n, args.torus)


def _matrix_text(parameters: ParameterMatrix) -> str:
    return ";".join(",".join(row) for row in parameters.to_json())


def _published_filtration(
    spec: GroupSpec, parameters: ParameterMatrix
) -> Optional[Sequence[int]]:
    key = (spec.family, spec.n, _matrix_text(parameters))
    return _PUBLISHED_FILTRATIONS.get(key)


def _cmd_decompose(
    args: argparse.Namespace, settings: ObataSettings
) -> RunReport:
    spec = _group_spec(args)
    row = spec.table_row()
    diagram_only = args.diagram_only or (
        spec.diagram_only_default and not args.realize
    )
    report = RunReport(
        "decompose",
        inputs={"group": spec.to_json(), "diagram_only": diagram_only},
    )
    report.results.update(
        {
            "group": spec.to_json(),
            "path": "diagram" if diagram_only else "realized",
            "decomposition": row.decomposition.to_json(),
            "wolf_hdim": row.wolf_hdim,
            "expected_trivial_f": row.expected_trivial,
        }
    )
    report.check("table1_row", row.matches)
    if diagram_only:
        return report

    ctx = context_for(spec, args.A)
    realized = ctx.decomposition
    report.inputs["A"] = _matrix_text(ctx.triple.parameters)
    report.results["realized"] = {
        "label": realized.label,
        "dim": realized.dim,
        "m": realized.m,
        "b_dim": realized.b_dim,
        "f_hdims": realized.f_hdims,
        "frame_labels": realized.frame_labels(),
    }
    report.check(
        "realized_matches_diagram",
        sorted(realized.f_hdims) == sorted(row.decomposition.f_hdims)
        and realized.b_dim == row.decomposition.b_dim,
    )
    suite = run_lemma_suite(ctx)
    report.results["lemmas"] = suite.to_json()
    for name, result in suite.results.items():
        report.check(name, result.passed)
    if args.emit_basis:
        report.results["adapted_basis"] = realized.adapted_basis.to_json()
        report.results["frame"] = ctx.triple.frame.to_json()
    return report


def _cmd_table1(
    args: argparse.Namespace, settings: ObataSettings
) -> RunReport:
    max_rank = settings.table1.max_rank
    if max_rank < 2:
        raise ValueError("table1 needs --max-rank of at least 2")
    report = RunReport("table1", inputs={"max_rank": max_rank})
    rows = table1(max_rank)
    report.results["rows"] = [row.to_json() for row in rows]
    report.results["matched"] = sum(1 for row in rows if row.matches)
    report.check("table1", all(row.matches for row in rows))
    for row in rows:
        if not row.matches:
            report.note(f"{row.group} disagrees with the closed forms")
    return report


def _ensure_within_cap(spec: GroupSpec, dim_cap: int) -> None:
    """Ambient dimension from the diagram, before any realization."""

    dim = spec.table_row().decomposition.algebra_dim + spec.ell
    if dim > dim_cap:
        raise DimensionCapError(
            f"{spec.label} has dimension {dim}, above the holonomy cap "
            f"{dim_cap}; raise --dim-cap or OBATA_DIM_CAP"
        )


def _holonomy_inputs(
    spec: GroupSpec, settings: ObataSettings
) -> Dict[str, object]:
    return {
        "group": spec.to_json(),
        "method": settings.holonomy.method,
        "max_depth": settings.holonomy.max_depth,
        "dim_cap": settings.holonomy.dim_cap,
    }


def _cmd_holonomy(
    args: argparse.Namespace, settings: ObataSettings
) -> RunReport:
    spec = _group_spec(args)
    hs = settings.holonomy
    _ensure_within_cap(spec, hs.dim_cap)
    connection = connection_for(spec, args.A)
    parameters = connection.triple.parameters  # type: ignore[union-attr]
    report = RunReport("holonomy", inputs=_holonomy_inputs(spec, settings))
    report.inputs["A"] = _matrix_text(parameters)
    result = holonomy_algebra(
        connection,
        hs.method,
        hs.max_depth,
        workers=hs.active_workers,
        dim_cap=hs.dim_cap,
        check_lie_closure=args.lie_closure,
    )
    subspaces = find_parallel_subspaces(connection)
    report.results.update(
        {
            "group": spec.to_json(),
            "holonomy": result.to_json(
                _published_filtration(spec, parameters)
            ),
            "trace_check": result.trace_check(),
            "parallel": [s.to_json() for s in subspaces.proper_parallel],
            "subspaces": subspaces.to_json(),
            "block_lower_triangular": is_block_lower_triangular(
                parameters.entries
            ),
        }
    )
    report.check("stabilized", result.stabilized)
    if not result.stabilized:
        report.note(
            f"filtration did not stabilize within depth {hs.max_depth}"
        )
    for subspace in subspaces.proper_parallel:
        report.check(
            f"reduction_{subspace.label}",
            verify_reduction_consistency(result, subspace).passed,
        )
    if result.lie_closed is not None:
        report.check("lie_closed", result.lie_closed)
    if args.emit_theta:
        report.results["connection_form"] = {
            "labels": dual_labels(connection.algebra.labels),
            "matrix": connection_form(connection),
        }
    if args.emit_basis:
        report.results["basis"] = [m.to_json() for m in result.matrices()]
    return report


def _cmd_sweep(
    args: argparse.Namespace, settings: ObataSettings
) -> RunReport:
    spec = _group_spec(args)
    hs = settings.holonomy
    _ensure_within_cap(spec, hs.dim_cap)
    curve = ParameterCurve.parse(args.curve)
    t_values = parse_t_values(args.t)
    report = RunReport("sweep", inputs=_holonomy_inputs(spec, settings))
    report.inputs.update({"curve": curve.text, "t": args.t})
    result = sweep_holonomy(
        spec,
        curve,
        t_values,
        method=hs.method,
        max_depth=hs.max_depth,
        workers=hs.active_workers,
        dim_cap=hs.dim_cap,
    )
    report.results["group"] = spec.to_json()
    report.results.update(result.to_json())
    for row in result.rows:
        if row.skipped:
            report.note(f"t={row.t} skipped: {row.reason}")
    report.check("stabilized", result.stabilized)
    if args.csv:
        result.write_csv(Path(args.csv))
    return report


def _killing_metric(
    report: RunReport, d: JoyceDecomposition, parameters: ParameterMatrix
) -> Optional[InvariantMetric]:
    try:
        return extend_killing_metric(d, parameters=parameters)
    except IncompatibleMetricError as exc:
        report.note(str(exc))
        return None


def _cmd_geometry(
    args: argparse.Namespace, settings: ObataSettings
) -> RunReport:
    spec = _group_spec(args)
    triple = structure_for(spec, args.A)
    d = triple.decomposition
    algebra = triple.algebra
    report = RunReport(
        "geometry",
        inputs={
            "group": spec.to_json(),
            "A": _matrix_text(triple.parameters),
            "twisted_cy": args.twisted_cy,
            "psi_cap": settings.geometry.psi_cap,
            "semidirect": args.semidirect,
            "rho": args.rho,
        },
    )
    eta = obata_one_form(None, triple)
    ricci = obata_ricci(None, triple)
    independence = verify_one_form_independence(None, triple)
    ricci_check = verify_ricci_is_d_eta(None, triple)
    dtheta_zero = is_closed(algebra, eta)
    results = report.results
    results.update(
        {
            "group": spec.to_json(),
            "b_dim": d.b_dim,
            "eta": eta.to_json(),
            "ricci": ricci.to_json(),
            "eta_independent": independence.passed,
            "ricci_is_d_eta": ricci_check.passed,
            "ricci_zero": ricci.is_zero(),
            "dtheta_zero": dtheta_zero,
            "twisted_cy": None,
            "lee_matches_eta": None,
        }
    )
    report.check("eta_independence", independence.passed)
    report.check("ricci_is_d_eta", ricci_check.passed)
    report.check("lee_closed_iff_b_zero", dtheta_zero == (d.b_dim == 0))

    metric = _killing_metric(report, d, triple.parameters)
    results["metric_compatible"] = metric is not None
    if metric is not None:
        results["metric"] = metric.to_json()
        report.check(
            "hyperhermitian", verify_hyperhermitian(triple, metric).passed
        )
        lee = lee_form(d, metric)
        results["lee"] = lee.to_json()
        results["lee_matches_eta"] = lee == eta
        report.check("lee_equals_eta", lee == eta)

    psi_cap = settings.geometry.psi_cap
    if args.twisted_cy:
        verdict = verify_twisted_cy(d, metric, triple, psi_cap=psi_cap)
        results["twisted_cy"] = verdict.to_json()
        report.check("twisted_cy", verdict.passed)

    if args.semidirect:
        if metric is None:
            raise IncompatibleMetricError(
                "The semidirect extension needs a compatible Killing "
                "extension metric"
            )
        rho = (
            standard_sp1_representation(args.semidirect)
            if args.rho == "standard"
            else None
        )
        extension = semidirect_hkt(
            hyperhermitian_data(d, metric, triple), rho, args.semidirect
        )
        payload = extension.to_json()
        if args.twisted_cy:
            verdict = check_twisted_cy(extension.data, psi_cap=psi_cap)
            payload["twisted_cy"] = verdict.to_json()
            report.check("semidirect_twisted_cy", verdict.passed)
        results["semidirect"] = payload
    return report


COMMANDS: Dict[str, Tuple[Command, str]] = {
    "decompose": (_cmd_decompose, "decompose.j2"),
    "table1": (_cmd_table1, "table1.j2"),
    "holonomy": (_cmd_holonomy, "holonomy.j2"),
    "sweep": (_cmd_sweep, "sweep.j2"),
    "geometry": (_cmd_geometry, "geometry.j2"),
}


def _emit(
    report: RunReport,
    template: str,
    settings: ObataSettings,
    json_path: Optional[str],
) -> None:
    renderer = ReportRenderer(extra_dirs=settings.runtime.report_templates)
    text = renderer.render(
        template, inputs=report.inputs, results=report.results
    )
    print(text, end="")
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    if json_path:
        report.write(Path(json_path))


def _run(
    args: argparse.Namespace,
    settings: ObataSettings,
    session: Optional[RunSession],
) -> int:
    handler, template = COMMANDS[args.command]
    report = handler(args, settings).finish()
    _emit(report, template, settings, getattr(args, "json", None))
    if session is not None:
        session.write_report(args.command, report.to_json())
        session.log_event(
            "report",
            {
                "command": args.command,
                "passed": report.passed,
                "failed": sorted(
                    name for name, ok in report.checks.items() if not ok
                ),
            },
        )
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        load_dotenv()
    except Exception:
        pass

    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=logging.INFO, format="%(levelname)s %(name)s: %(message)s"
        )

    try:
        settings = _resolve_settings(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"Configuration error: {exc}", file=sys.stderr)
        return 2
    run_root = settings.runtime.run_root
    if args.list_runs:
        return _list_runs(run_root)
    if args.show_run:
        return _show_run(run_root, args.show_run)
    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    session: Optional[RunSession] = None
    if settings.runtime.enabled and not args.no_record:
        run_root.mkdir(parents=True, exist_ok=True)
        session = RunSession(
            run_root,
            settings.runtime.run_id,
            resume=settings.runtime.resume,
        )
        setup_file_logger(session.log_file)
        session.write_metadata("settings", settings.to_json())
        session.log_event("command", {"argv": list(argv or sys.argv[1:])})
    try:
        return _run(args, settings, session)
    except (ObataLabError, ValueError) as exc:
        LOGGER.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        if session is not None:
            session.log_event(
                "error", {"command": args.command, "message": str(exc)}
            )
        return 2
    finally:
        if session is not None:
            detach_file_logger(session.log_file)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
