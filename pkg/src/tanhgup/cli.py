"""Command line front end.

    tanhgup bounds    --algebra tanh --beta 0.01 --delta 0.01
    tanhgup spectrum  --v0 30 --beta 0.01 --delta 0.01 --linear
    tanhgup figure    -o outdir
    tanhgup oracle    pt|linear|commutator|heisenberg [--L 20 --N 4001]

Every subcommand accepts ``--config FILE`` (key=value lines, flags win),
``--format csv|json`` and ``-o PATH``.

Exit codes: 0 success, 1 usage error, 2 inconsistent algebra,
3 numerical or I/O failure, 4 verification tolerance violated.
"""

from __future__ import annotations

import argparse
import math
import os
import pathlib
import sys
from datetime import datetime, timezone

from . import __version__
from .bounds import (
    QuarticAlgebra,
    TanhAlgebra,
    check_consistency,
    quartic_window,
    tanh_sharp_momentum_window,
    tanh_window,
)
from .chain import linear_spectrum, match_initial_params, spectrum
from .errors import ConvergenceFailure, InconsistentAlgebra, NoRealWindow
from .grid import Grid, GridState
from .oracle import (
    commutator_residual,
    hlin_expectation_check,
    nmax_divergence_sweep,
    solve_reference,
    verify_heisenberg,
)
from .report import FIGURE_COLUMNS, ResultDocument, Table, plot_script

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2
EXIT_NUMERIC = 3
EXIT_TOLERANCE = 4

# defaults of the V0 = 30 experiment
DEFAULT_V0 = 30.0
DEFAULT_BETA = 0.01
DEFAULT_DELTA = 0.01

PT_TOL = 5e-3
COMMUTATOR_RATIO = (0.2, 0.32)
ORACLE_GRIDS = {
    "pt": (20.0, 4001),
    "linear": (12.0, 2401),
    "commutator": (15.0, 3001),
    "heisenberg": (15.0, 3001),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> float:
    v = float(text)
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text!r}")
    return v


def _positive(text: str) -> float:
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _odd_int(text: str) -> int:
    v = int(text)
    if v < 3 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected an odd integer >= 3, got {text!r}")
    return v


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key=value file; flags override it")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")
    common.add_argument(
        "--stamp", action="store_true", help="record a UTC timestamp in JSON metadata"
    )

    parser = _Parser(prog="tanhgup", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", parents=[common], help="uncertainty windows of an algebra")
    b.add_argument("--algebra", choices=("tanh", "quartic"), default="tanh")
    b.add_argument("--alpha", type=_positive, default=1.0)
    b.add_argument("--beta", type=_positive, default=DEFAULT_BETA)
    b.add_argument("--delta", type=_nonneg, default=DEFAULT_DELTA)
    b.add_argument("--criterion", choices=("relaxed", "sharp"), default="relaxed")

    s = sub.add_parser("spectrum", parents=[common], help="exact deformed Poschl-Teller spectrum")
    s.add_argument("--v0", type=_positive, default=DEFAULT_V0)
    s.add_argument("--beta", type=_nonneg, default=DEFAULT_BETA)
    s.add_argument("--delta", type=_nonneg, default=DEFAULT_DELTA)
    s.add_argument("--linear", action="store_true", help="add the first-order column")

    f = sub.add_parser("figure", parents=[common], help="write figure.csv and a plot script")
    f.add_argument("--v0", type=_positive, default=DEFAULT_V0)
    f.add_argument("--beta", type=_nonneg, default=DEFAULT_BETA)
    f.add_argument("--delta", type=_nonneg, default=DEFAULT_DELTA)

    o = sub.add_parser("oracle", parents=[common], help="finite-difference cross-checks")
    o.add_argument("check", choices=tuple(ORACLE_GRIDS))
    o.add_argument("--v0", type=_positive, default=DEFAULT_V0)
    o.add_argument("--xi0", type=_positive, help="override matched xi0")
    o.add_argument("--eta0", type=_positive, help="override matched eta0")
    o.add_argument("--alpha", type=_positive, default=1.0)
    o.add_argument("--beta", type=_nonneg, default=DEFAULT_BETA)
    o.add_argument("--delta", type=_nonneg, default=DEFAULT_DELTA)
    o.add_argument("--L", dest="L", type=_positive, help="grid half-width")
    o.add_argument("--N", dest="N", type=_odd_int, help="grid points (odd)")
    o.add_argument("--sigma", type=_positive, default=1.0, help="Gaussian amplitude width")
    return parser


def read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = (t.strip() for t in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def _config_defaults(subparser: argparse.ArgumentParser, config: dict[str, str]) -> dict:
    actions = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, text in config.items():
        action = actions.get(key)
        if action is None or key in ("config", "help"):
            raise UsageError(f"unknown config key {key!r}")
        if isinstance(action, argparse._StoreTrueAction):
            defaults[key] = text.lower() in ("1", "true", "yes", "on")
            continue
        try:
            value = action.type(text) if action.type else text
        except (argparse.ArgumentTypeError, ValueError) as exc:
            raise UsageError(f"config key {key!r}: {exc}") from exc
        if action.choices is not None and value not in action.choices:
            raise UsageError(f"config key {key!r}: {value!r} not in {list(action.choices)}")
        defaults[key] = value
    return defaults


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = build_parser()
    pre = _Parser(add_help=False)
    pre.add_argument("--config")
    known, _rest = pre.parse_known_args(argv)
    if known.config:
        args = parser.parse_args(argv)
        try:
            config = read_config(known.config)
        except OSError as exc:
            raise UsageError(f"cannot read config {known.config}: {exc}") from exc
        subparsers = next(
            a for a in parser._actions if isinstance(a, argparse._SubParsersAction)
        )
        subparser = subparsers.choices[args.command]
        subparser.set_defaults(**_config_defaults(subparser, config))
    return parser.parse_args(argv)


def _parameters(args: argparse.Namespace) -> dict:
    skip = {"config", "format", "output", "stamp", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _emit(args, table: Table, payload: dict) -> None:
    if args.format == "json":
        stamp = datetime.now(timezone.utc).isoformat() if args.stamp else None
        text = ResultDocument(args.command, _parameters(args), payload, stamp).to_json()
    else:
        text = table.to_csv()
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_bounds(args) -> int:
    if args.algebra == "quartic":
        alg = QuarticAlgebra(args.alpha, args.beta)
        if args.criterion == "sharp":
            raise UsageError("--criterion sharp applies to the tanh algebra only")
    else:
        alg = TanhAlgebra(args.alpha, args.beta, args.delta)
    report = check_consistency(alg, "relaxed")
    if not report.consistent:
        print(
            f"inconsistent algebra: {args.algebra} parameters exceed the consistency bound "
            f"(margin {report.margin:g}); no state satisfies its uncertainty relation",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    window = tanh_window(alg) if args.algebra == "tanh" else quartic_window(alg)
    values = window.as_dict()
    values.pop("algebra")
    row = {"algebra": args.algebra, "consistent": report.consistent, "margin": report.margin}
    row.update(values)
    if args.criterion == "sharp":
        sharp = check_consistency(alg, "sharp")
        row["sharp_consistent"] = sharp.consistent
        try:
            lo, hi = tanh_sharp_momentum_window(alg)
        except NoRealWindow:
            lo = hi = None
        row["sharp_dp_min"], row["sharp_dp_max"] = lo, hi
    table = Table(tuple(row))
    table.add(*row.values())
    _emit(args, table, {"consistency": report.__dict__, "window": row})
    return EXIT_OK


def cmd_spectrum(args) -> int:
    res = spectrum(args.v0, args.beta, args.delta)
    cols = ("n", "e_chain", "e_physical") + (("e_linear",) if args.linear else ())
    table = Table(cols)
    lin = linear_spectrum(res.xi0, res.eta0, args.beta, args.delta, res.n_max)
    for lv in res.levels:
        extra = (lin[lv.n],) if args.linear else ()
        table.add(lv.n, lv.e_chain, lv.e_physical, *extra)
    payload = {
        "xi0": res.xi0,
        "eta0": res.eta0,
        "constant_shift": res.constant_shift,
        "n_max": res.n_max,
        "levels": table.as_records(),
    }
    _emit(args, table, payload)
    return EXIT_OK


def figure_table(v0: float, beta: float, delta: float) -> Table:
    und = spectrum(v0, 0.0, 0.0)
    def_ = spectrum(v0, beta, delta)
    table = Table(FIGURE_COLUMNS)
    for n in range(min(len(und.levels), len(def_.levels))):
        table.add(n, und.levels[n].e_physical, def_.levels[n].e_physical)
    return table


def cmd_figure(args) -> int:
    table = figure_table(args.v0, args.beta, args.delta)
    outdir = pathlib.Path(args.output or ".")
    title = f"V0={args.v0:g}, beta={args.beta:g}, delta={args.delta:g}"
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "figure.csv").write_text(table.to_csv())
        (outdir / "plot_figure.py").write_text(plot_script(title))
        if args.format == "json":
            doc = ResultDocument("figure", _parameters(args), {"levels": table.as_records()})
            (outdir / "figure.json").write_text(doc.to_json())
    except OSError as exc:
        print(f"cannot write figure output to {outdir}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print(os.fspath(outdir / "figure.csv"))
    return EXIT_OK


def _oracle_params(args) -> tuple[float, float]:
    xi0, eta0 = match_initial_params(args.v0, 0.0, 0.0)
    return (args.xi0 or xi0), (args.eta0 or eta0)


def cmd_oracle(args) -> int:
    half, points = ORACLE_GRIDS[args.check]
    grid = Grid(args.L or half, args.N or points)
    args.L, args.N = grid.half_width, grid.points
    return _ORACLES[args.check](args, grid)


def _oracle_pt(args, grid) -> int:
    xi0, eta0 = _oracle_params(args)
    table = Table(("n", "e_grid", "e_exact", "abs_error"))
    worst = 0.0
    for n, (w, _state) in enumerate(solve_reference(xi0, eta0, grid)):
        e_grid = w - eta0**2
        exact = -((eta0 - n * xi0) ** 2)
        worst = max(worst, abs(e_grid - exact))
        table.add(n, e_grid, exact, abs(e_grid - exact))
    _emit(args, table, {"levels": table.as_records(), "max_abs_error": worst, "tolerance": PT_TOL})
    return EXIT_OK if worst <= PT_TOL else EXIT_TOLERANCE


def _oracle_linear(args, grid) -> int:
    xi0, eta0 = _oracle_params(args)
    rows = hlin_expectation_check(xi0, eta0, args.beta, args.delta, grid)
    sweep = nmax_divergence_sweep(xi0, eta0, args.beta, args.delta, spacing=grid.spacing)
    table = Table(("n", "expectation", "first_order", "abs_diff", "tolerance", "status"))
    ok = True
    for r in rows:
        if r.is_n_max:
            status = "n_max-divergent" if sweep.diverges else "n_max"
        else:
            status = "ok" if r.within else "fail"
            ok = ok and r.within
        table.add(r.n, r.expectation, r.first_order, r.abs_diff, r.tolerance, status)
    payload = {
        "rows": table.as_records(),
        "n_max_sweep": {
            "n": sweep.n,
            "half_widths": sweep.half_widths,
            "expectations": sweep.expectations,
            "weighted_kinetic": sweep.weighted_kinetic,
            "expectation_increasing": sweep.expectation_increasing,
            "expectation_spread": sweep.expectation_spread,
            "weighted_kinetic_spread": sweep.kinetic_spread,
            "diverges": sweep.diverges,
        },
    }
    _emit(args, table, payload)
    return EXIT_OK if ok else EXIT_TOLERANCE


def _oracle_commutator(args, grid) -> int:
    state = GridState.gaussian(grid, args.sigma)
    table = Table(("beta", "delta", "residual"))
    res = {}
    for scale in (0.0, 1.0, 0.5):
        b, d = args.beta * scale, args.delta * scale
        res[scale] = commutator_residual(args.alpha, b, d, grid, state)
        table.add(b, d, res[scale])
    ratio = res[0.5] / res[1.0] if res[1.0] else float("nan")
    lo, hi = COMMUTATOR_RATIO
    passed = lo <= ratio <= hi
    print(f"residual ratio r(beta/2, delta/2) / r(beta, delta) = {ratio:.6g}", file=sys.stderr)
    _emit(args, table, {"rows": table.as_records(), "ratio": ratio, "ratio_window": [lo, hi]})
    return EXIT_OK if passed else EXIT_TOLERANCE


def _oracle_heisenberg(args, grid) -> int:
    alg = TanhAlgebra(args.alpha, args.beta, args.delta)
    rep = verify_heisenberg(GridState.gaussian(grid, args.sigma), alg, grid)
    table = Table(tuple(rep.__dict__))
    table.add(*rep.__dict__.values())
    _emit(args, table, rep.__dict__)
    return EXIT_OK if (rep.satisfied and rep.dtanh_bounded) else EXIT_TOLERANCE


_ORACLES = {
    "pt": _oracle_pt,
    "linear": _oracle_linear,
    "commutator": _oracle_commutator,
    "heisenberg": _oracle_heisenberg,
}

_COMMANDS = {
    "bounds": cmd_bounds,
    "spectrum": cmd_spectrum,
    "figure": cmd_figure,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InconsistentAlgebra as exc:
        print(f"inconsistent algebra: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceFailure, FloatingPointError, OSError) as exc:
        print(f"numerical or I/O failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
