"""Command-line front end emitting matrices, response sweeps and figure datasets.

All tabular output is CSV (header row, 17 significant digits, UTF-8,
newline-terminated rows) so the data can be replotted with any external
tool.  Exit statuses: 0 success, 1 domain error (singular cavity or
stationary working point), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .cavity import CavityConfig, cascade_matrix, closed_form_matrix, verify_unitarity
from .errors import CavityError, InvalidConfigError
from .response import (
    measured_half_width,
    response_closed,
    response_fractions,
    squared_denominator,
)
from .sensitivity import (
    POLE_MASK_EPS,
    response_derivative,
    sensitivity_report,
)

#: Upper bound for reflectivity sweeps; stays clear of the singular rho = 1 limit.
RHO_SWEEP_MAX = 0.999

FIG34_PHI_STEPS = 2001


@dataclass(frozen=True)
class SweepSpec:
    """A single-variable parameter sweep.

    ``variable`` is swept from ``start`` to ``stop`` in ``steps`` evenly
    spaced points while the other parameters stay fixed.
    """

    variable: str  # "rho" or "phi"
    start: float
    stop: float
    steps: int
    n: int
    fixed: float  # the non-swept one of rho / total phase

    def __post_init__(self) -> None:
        if self.variable not in ("rho", "phi"):
            raise InvalidConfigError(f"sweep variable must be rho or phi, got {self.variable!r}")
        if self.steps < 2:
            raise InvalidConfigError(f"sweep needs at least 2 steps, got {self.steps}")
        if not self.start < self.stop:
            raise InvalidConfigError("sweep start must be smaller than stop")
        if self.variable == "rho" and not (0.0 <= self.start and self.stop < 1.0):
            raise InvalidConfigError("swept reflectivity must stay inside [0, 1)")
        if self.variable == "phi" and not (0.0 <= self.start and self.stop <= 2.0 * math.pi):
            raise InvalidConfigError("swept phase must stay inside [0, 2 pi]")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_csv(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(row) + "\n")


def _parse_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> CavityConfig:
    if args.phases is not None:
        try:
            phases = tuple(float(p) for p in args.phases.split(","))
        except ValueError:
            parser.error(f"could not parse --phases {args.phases!r}")
        return CavityConfig(n=args.n, rho=args.rho, phases=phases)
    total = args.total_phase if args.total_phase is not None else 0.0
    return CavityConfig.uniform(args.n, args.rho, total)


def cmd_matrix(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    config = _parse_config(args, parser)
    closed = closed_form_matrix(config)
    cascade = cascade_matrix(config)
    header = ["row"]
    for j in range(1, config.n + 1):
        header += [f"re_{j}", f"im_{j}"]
    rows = []
    for k in range(config.n):
        row = [str(k + 1)]
        for j in range(config.n):
            entry = closed.entries[k, j]
            row += [_fmt(entry.real), _fmt(entry.imag)]
        rows.append(row)
    _write_csv(out, header, rows)
    deviation = float(np.abs(closed.entries - cascade.entries).max())
    out.write(f"max_construction_deviation,{_fmt(deviation)}\n")
    out.write(f"unitarity_residual,{_fmt(verify_unitarity(closed))}\n")
    return 0


def cmd_response(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    config = _parse_config(args, parser)
    profile = response_closed(config)
    header = ["n", "rho", "phi"] + [f"f{k}" for k in range(1, config.n + 1)] + ["a_squared"]
    row = [str(profile.n), _fmt(profile.rho), _fmt(profile.total_phase)]
    row += [_fmt(f) for f in profile.f]
    row.append(_fmt(profile.a_squared))
    _write_csv(out, header, [row])
    return 0


def cmd_sensitivity(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    if not 0.0 < args.rho < 1.0:
        parser.error(f"sensitivity requires 0 < rho < 1, got {args.rho}")
    report = sensitivity_report(args.n, args.rho, alpha_abs=args.alpha)
    header = ["n", "rho", "alpha", "phi_star"]
    header += [f"dphi{k}" for k in range(1, args.n + 1)]
    header.append("overall")
    row = [str(report.n), _fmt(report.rho), _fmt(report.alpha_abs), _fmt(report.working_point)]
    row += [_fmt(d / report.alpha_abs) for d in report.per_port]
    row.append(_fmt(report.overall / report.alpha_abs))
    _write_csv(out, header, [row])
    return 0


def cmd_fig3(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    """Four-port responses versus reflectivity for several total phases."""
    n = 4
    rhos = np.linspace(0.0, RHO_SWEEP_MAX, 200)
    phis = [0.0, math.pi / 20, math.pi / 10, math.pi / 5, math.pi / 2, math.pi]
    rows = []
    f1_curves = []
    for phi in phis:
        f = response_fractions(n, rhos, phi)
        f1_curves.append(f[:, 0])
        for i, rho in enumerate(rhos):
            total = f[i].sum()
            if abs(total - 1.0) > 1e-12:
                raise CavityError(f"sum rule violated at rho={rho}, phi={phi}: {total}")
            rows.append([_fmt(rho), _fmt(phi)] + [_fmt(x) for x in f[i]])
    # Larger total phase lifts the back-reflection curve everywhere.
    for lower, upper in zip(f1_curves, f1_curves[1:]):
        if np.any(upper - lower < -1e-12):
            raise CavityError("f1 curves are not ordered with increasing total phase")
    _write_csv(out, ["rho", "phi", "f1", "f2", "f3", "f4"], rows)
    return 0


def cmd_fig4(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    """First- and last-port responses versus phase; dips sharpen as n shrinks."""
    rho = 0.99
    phis = np.linspace(0.0, 2.0 * math.pi, FIG34_PHI_STEPS)
    rows = []
    widths = []
    for n in (2, 3, 4, 5):
        f = response_fractions(n, rho, phis)
        for i, phi in enumerate(phis):
            rows.append([str(n), _fmt(phi), _fmt(f[i, 0]), _fmt(f[i, n - 1])])
        widths.append(measured_half_width(n, rho))
    if not all(a < b for a, b in zip(widths, widths[1:])):
        raise CavityError(f"half-widths are not increasing with n: {widths}")
    _write_csv(out, ["n", "phi", "f1", "fn"], rows)
    return 0


def cmd_fig5(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    """Rescaled aggregate sensitivity versus phase for n = 2..5 at rho = 0.99."""
    rho = 0.99
    phis = np.linspace(0.0, 2.0 * math.pi, FIG34_PHI_STEPS)
    rows = []
    minima = []
    for n in (2, 3, 4, 5):
        derivative = response_derivative(n, rho, phis, 1)
        fractions = response_fractions(n, rho, phis)[:, 0]
        y = np.full(phis.shape, np.nan)
        ok = np.abs(derivative) >= POLE_MASK_EPS
        y[ok] = np.sqrt(fractions[ok]) / np.abs(derivative[ok]) / math.sqrt(n)
        for i, phi in enumerate(phis):
            rows.append([str(n), _fmt(phi), _fmt(y[i]) if ok[i] else ""])
        minima.append(float(np.nanmin(y)))
    if not all(a < b for a, b in zip(minima, minima[1:])):
        raise CavityError(f"sensitivity curves are not ordered bottom-to-top in n: {minima}")
    _write_csv(out, ["n", "phi", "y"], rows)
    return 0


def cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> int:
    if args.variable == "rho":
        if args.phases is not None:
            fixed = sum(float(p) for p in args.phases.split(","))
        else:
            fixed = args.total_phase if args.total_phase is not None else 0.0
    else:
        fixed = args.rho
    try:
        spec = SweepSpec(
            variable=args.variable,
            start=args.start,
            stop=args.stop,
            steps=args.steps,
            n=args.n,
            fixed=fixed,
        )
    except InvalidConfigError as exc:
        parser.error(str(exc))
    n = spec.n
    header = [spec.variable] + [f"f{k}" for k in range(1, n + 1)] + ["a_squared"]
    rows = []
    for value in spec.grid():
        rho, phi = (value, spec.fixed) if spec.variable == "rho" else (spec.fixed, value)
        f = response_fractions(n, rho, phi)
        rows.append([_fmt(value)] + [_fmt(x) for x in f] + [_fmt(squared_denominator(n, rho, phi))])
    _write_csv(out, header, rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringcavity",
        description="n-port ring cavity: scattering matrices, responses, sensitivities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=4, help="number of ports (>= 2)")
    common.add_argument("--rho", type=float, default=0.99, help="mirror reflectivity in [0, 1]")
    group = common.add_mutually_exclusive_group()
    group.add_argument("--phases", type=str, default=None, help="comma list of the n internal phases")
    group.add_argument(
        "--total-phase",
        type=float,
        default=None,
        help="total internal phase, split evenly over the n arms",
    )
    common.add_argument("--alpha", type=float, default=1.0, help="input coherent amplitude |alpha|")
    common.add_argument("--out", type=str, default=None, help="output file (default: stdout)")

    sub.add_parser("matrix", parents=[common], help="print both matrix constructions")
    sub.add_parser("response", parents=[common], help="print the response fractions")
    sub.add_parser("sensitivity", parents=[common], help="optimal working point and sensitivities")
    sub.add_parser("fig3", parents=[common], help="4-port responses vs reflectivity (CSV)")
    sub.add_parser("fig4", parents=[common], help="responses vs phase, n = 2..5, rho = 0.99 (CSV)")
    sub.add_parser("fig5", parents=[common], help="rescaled sensitivity vs phase, n = 2..5 (CSV)")

    sweep = sub.add_parser("sweep", parents=[common], help="generic single-variable sweep (CSV)")
    sweep.add_argument("--variable", choices=("rho", "phi"), required=True)
    sweep.add_argument("--start", type=float, required=True)
    sweep.add_argument("--stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    return parser


_COMMANDS = {
    "matrix": cmd_matrix,
    "response": cmd_response,
    "sensitivity": cmd_sensitivity,
    "fig3": cmd_fig3,
    "fig4": cmd_fig4,
    "fig5": cmd_fig5,
    "sweep": cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = _COMMANDS[args.command]
    try:
        if args.out is None:
            return command(args, parser, sys.stdout)
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            return command(args, parser, stream)
    except InvalidConfigError as exc:
        parser.exit(2, f"{parser.prog}: usage error: {exc}\n")
    except CavityError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
