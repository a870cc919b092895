"""Command-line front end.

Subcommands::

    toolkit fit-ringdown --fsr-hz 7.410e9 traces/*.csv
    toolkit reproduce-paper [--out report.csv]
    toolkit budget --scenario paper_yb.scenario --target cooling

Exit codes: 0 success, 1 acceptance failure, 2 input error. The
environment variable TOOLKIT_SEED overrides the scenario seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from . import reports
from .errors import SchemaError, ToolkitError
from .quantities import UncertainQuantity
from .ringdown import finesse, fit_ringdown, fsr_from_length, load_trace_csv, pool_linewidths
from .scenario import load_scenario, parse_scenario

EXIT_OK = 0
EXIT_ACCEPTANCE = 1
EXIT_INPUT = 2


def _seed_override() -> int | None:
    raw = os.environ.get("TOOLKIT_SEED")
    if not raw:
        return None
    try:
        return int(raw, 10)
    except ValueError:
        raise SchemaError(f"TOOLKIT_SEED must be an integer, got {raw!r}") from None


def _cmd_fit_ringdown(args) -> int:
    if (args.fsr_hz is None) == (args.length_m is None):
        print("fit-ringdown: provide exactly one of --fsr-hz or --length-m", file=sys.stderr)
        return EXIT_INPUT
    fsr_value = args.fsr_hz if args.fsr_hz is not None else fsr_from_length(args.length_m)
    fsr = UncertainQuantity(fsr_value, args.fsr_sigma_hz, "Hz")

    fits = []
    csv_lines = ["trace,linewidth_hz,sigma_hz,v0"]
    for path in args.traces:
        try:
            fit = fit_ringdown(load_trace_csv(path))
        except (ToolkitError, OSError) as exc:
            print(f"fit-ringdown: {path}: {exc}", file=sys.stderr)
            continue
        fits.append(fit)
        csv_lines.append(
            f"{path},{fit.linewidth.value!r},{fit.linewidth.sigma!r},{fit.v0.value!r}"
        )
    if not fits:
        print("fit-ringdown: no trace could be fitted", file=sys.stderr)
        return EXIT_INPUT

    pooled = pool_linewidths(fits)
    cavity_finesse = finesse(pooled, fsr)
    print("\n".join(csv_lines))
    print(f"# pooled_linewidth_hz = {pooled.value!r} +/- {pooled.sigma!r}")
    print(f"# fsr_hz = {fsr.value!r} +/- {fsr.sigma!r}")
    print(f"# finesse = {cavity_finesse.value!r} +/- {cavity_finesse.sigma!r}")
    if args.out:
        Path(args.out).write_text("\n".join(csv_lines) + "\n", encoding="utf-8")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    scn = reports.bundled_scenario()
    rows = reports.build_report(scn, seed=_seed_override())
    sys.stdout.write(reports.render_text(rows))
    if args.out:
        Path(args.out).write_text(reports.render_csv(rows), encoding="utf-8")
    return EXIT_ACCEPTANCE if reports.report_exit_code(rows) else EXIT_OK


def _load_scenario_arg(spec: str):
    path = Path(spec)
    if path.exists():
        return load_scenario(path)
    # fall back to the bundled scenarios, so the stock file works by name
    bundled = resources.files("cavitycharge").joinpath(f"data/{spec}")
    if "/" not in spec and bundled.is_file():
        return parse_scenario(bundled.read_text(encoding="utf-8"))
    raise FileNotFoundError(f"scenario file not found: {spec}")


def _cmd_budget(args) -> int:
    scn = _load_scenario_arg(args.scenario)
    rows, sweep_header, sweep = reports.budget_report(
        scn,
        args.target,
        intensity_floor=args.intensity_floor,
        modulation_limit=args.modulation_limit,
        displacement_m=args.displacement_m,
        tau_pi_s=args.tau_pi_s,
        target_infidelity=args.infidelity,
    )
    print(f"# budget target: {args.target} (scenario {scn.name!r})")
    print("quantity,value,unit")
    for name, value, unit in rows:
        print(f"{name},{float(value)!r},{unit}")
    out = args.out or f"budget_{args.target}.csv"
    lines = [sweep_header] + [f"{float(x)!r},{float(y)!r}" for x, y in sweep]
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"# sweep written to {out} ({len(sweep)} points)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toolkit",
        description="Cavity loss metrology and stray-charge budget toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit-ringdown", help="fit decay traces and report finesse")
    p_fit.add_argument("traces", nargs="+", help="two-column CSV traces (t_seconds,v_volts)")
    p_fit.add_argument("--fsr-hz", type=float, default=None, help="measured free spectral range")
    p_fit.add_argument("--fsr-sigma-hz", type=float, default=0.0, help="FSR one-sigma uncertainty")
    p_fit.add_argument("--length-m", type=float, default=None, help="cavity length (FSR = c/2d)")
    p_fit.add_argument("--out", default=None, help="write the per-trace CSV here")
    p_fit.set_defaults(func=_cmd_fit_ringdown)

    p_rep = sub.add_parser(
        "reproduce-paper",
        help="recompute all bundled reference values and report MATCH status",
    )
    p_rep.add_argument("--out", default=None, help="write the report CSV here")
    p_rep.set_defaults(func=_cmd_reproduce)

    p_bud = sub.add_parser("budget", help="stray-charge budget for one target")
    p_bud.add_argument("--scenario", required=True,
                       help="scenario file path (bare names fall back to the "
                            "bundled scenarios, e.g. paper_yb.scenario)")
    p_bud.add_argument("--target", required=True, choices=reports.BUDGET_TARGETS)
    p_bud.add_argument("--intensity-floor", type=float, default=0.5,
                       help="carrier-intensity floor for the cooling target")
    p_bud.add_argument("--modulation-limit", type=float, default=0.2,
                       help="k*x_um cap for the lamb-dicke target")
    p_bud.add_argument("--displacement-m", type=float, default=None,
                       help="displacement goal for the coupling target "
                            "(default: cavity wavelength / 8)")
    p_bud.add_argument("--tau-pi-s", type=float, default=5e-6,
                       help="decoherence-time goal for rydberg-coherence")
    p_bud.add_argument("--infidelity", type=float, default=0.01,
                       help="infidelity goal for rydberg-gate")
    p_bud.add_argument("--out", default=None, help="sweep CSV path")
    p_bud.set_defaults(func=_cmd_budget)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ToolkitError, OSError) as exc:
        print(f"toolkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
