"""Command-line front end: single-point evaluation, CSV sweeps, resonance
listings, and figure-reproduction presets.

Exit codes: 0 success (including data-level physics errors, which render as
ERR:<code> cells), 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from pathlib import Path

from .core import PhysicsContext
from .errors import QscatError, UnsupportedOperationError
from .potentials import Delta, Eckart, Hulthen, PotentialSpec, Rectangular
from .exact import eckart_reflection_paper
from .resonance import Kind, ResonanceListing, analytic_resonances, numeric_resonances
from .sweep import (
    METHOD_ORDER,
    SweepSpec,
    evaluate_methods,
    map_sweep_variable,
    run_sweep,
)

_USAGE_EXIT = 2
_IO_EXIT = 3

_MIN_SIG_DIGITS = 12


# ---------------------------------------------------------------------------
# number / table rendering

def format_number(x: float) -> str:
    """Shortest round-trip decimal, padded to at least 12 significant digits."""
    x = float(x)
    if not math.isfinite(x):
        return "ERR:nonfinite"
    if x == 0.0:
        return "0"
    s = repr(x)
    mantissa, _, exponent = s.partition("e")
    sign = ""
    if mantissa[0] in "+-":
        sign, mantissa = mantissa[0], mantissa[1:]
    sig = len(mantissa.replace(".", "").lstrip("0"))
    if sig < _MIN_SIG_DIGITS:
        if "." not in mantissa:
            mantissa += "."
        mantissa += "0" * (_MIN_SIG_DIGITS - sig)
    out = sign + mantissa
    if exponent:
        out += "e" + exponent
    return out


def _method_columns(methods: frozenset[str]) -> list[str]:
    cols = []
    for m in METHOD_ORDER:
        if m not in methods:
            continue
        if m == "exact":
            cols += ["exact_T", "exact_R", "exact_defect"]
        elif m == "wkb":
            cols += ["wkb_T"]
        else:
            cols += ["bound_T"]
    if "exact" in methods and "bound" in methods:
        cols.append("bound_gap")
    return cols


def _row_cells(row, methods: frozenset[str]) -> list[str]:
    cells = [format_number(row.variable_value)]
    for m in METHOD_ORDER:
        if m not in methods:
            continue
        res = row.results.get(m)
        if res is None or res.error is not None:
            code = res.error if res is not None else "na"
            n = 3 if m == "exact" else 1
            cells += [f"ERR:{code}"] * n
            continue
        if m == "exact":
            cells += [
                format_number(res.transmission),
                format_number(res.reflection),
                format_number(res.defect),
            ]
        else:
            cells.append(format_number(res.transmission))
    if "exact" in methods and "bound" in methods:
        cells.append(format_number(row.bound_gap) if row.bound_gap is not None else "ERR:na")
    return cells


def render_sweep_csv(rows, methods: frozenset[str]) -> str:
    """Deterministic LF-terminated CSV for a list of sweep rows."""
    lines = [",".join(["var"] + _method_columns(methods))]
    for row in rows:
        lines.append(",".join(_row_cells(row, methods)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shared flags

_POTENTIAL_CHOICES = ("delta", "rect", "eckart", "hulthen")


def _add_context_args(parser):
    parser.add_argument("--hbar", type=float, default=1.0, help="value of hbar (default 1)")
    parser.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")


def _add_potential_args(parser):
    parser.add_argument(
        "--potential", required=True, choices=_POTENTIAL_CHOICES, help="potential family"
    )
    parser.add_argument("--alpha", type=float, help="delta strength (energy*length)")
    parser.add_argument("--v0", type=float, help="barrier height / well depth")
    parser.add_argument("--a", type=float, help="length scale (rect/eckart) or rate (hulthen)")
    parser.add_argument("--q", type=float, help="hulthen screening parameter in (0,1)")
    parser.add_argument("--v-minus-inf", type=float, default=0.0, help="eckart V at x=-inf")
    parser.add_argument("--v-plus-inf", type=float, default=0.0, help="eckart V at x=+inf")
    _add_context_args(parser)


def _build_potential(args) -> PotentialSpec:
    def need(name):
        value = getattr(args, name.replace("-", "_"))
        if value is None:
            raise QscatError(f"--{name} is required for --potential {args.potential}")
        return value

    if args.potential == "delta":
        return Delta(alpha=need("alpha"))
    if args.potential == "rect":
        return Rectangular(v0=need("v0"), a=need("a"))
    if args.potential == "eckart":
        return Eckart(
            v_minus_inf=args.v_minus_inf,
            v_plus_inf=args.v_plus_inf,
            v0=need("v0"),
            a=need("a"),
        )
    return Hulthen(v0=need("v0"), a=need("a"), q=need("q"))


def _build_ctx(args) -> PhysicsContext:
    return PhysicsContext(hbar=args.hbar, mass=args.mass)


def _expand_spec_files(argv: list[str]) -> list[str]:
    """Replace each '--spec FILE' with the flag tokens read from FILE.

    The file holds one 'key=value' pair per line (mirroring flag names, no
    leading dashes); blank lines and '#' comments are skipped, and boolean
    switches take true/false values.  Tokens are inserted in place, so flags
    given after --spec override the file.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--spec":
            if i + 1 >= len(argv):
                raise QscatError("--spec needs a file path")
            for line in Path(argv[i + 1]).read_text().splitlines():
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise QscatError(f"bad line in spec file (want key=value): {line!r}")
                key, value = key.strip(), value.strip()
                if value.lower() in ("true", "false"):
                    if value.lower() == "true":
                        out.append(f"--{key}")
                else:
                    out += [f"--{key}", value]
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


# ---------------------------------------------------------------------------
# eval / wkb / bound

class _EvalRow:
    def __init__(self, value, results, bound_gap):
        self.variable_value = value
        self.results = results
        self.bound_gap = bound_gap


def _cmd_eval(args, forced_method: str | None = None) -> int:
    try:
        potential = _build_potential(args)
        ctx = _build_ctx(args)
    except QscatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    methods = frozenset([forced_method]) if forced_method else frozenset(args.method)
    results, bound_gap = evaluate_methods(potential, args.energy, methods, ctx)
    header = ["energy"] + _method_columns(methods)
    row = _EvalRow(args.energy, results, bound_gap)
    cells = _row_cells(row, methods)
    if getattr(args, "r_convention", None) and isinstance(potential, Eckart):
        header.append(f"exact_R_{args.r_convention}")
        try:
            r_alt = eckart_reflection_paper(potential, args.energy, ctx, args.r_convention)
            cells.append(format_number(r_alt))
        except QscatError as exc:
            cells.append(f"ERR:{exc.code}")
    print(",".join(header))
    print(",".join(cells))
    return 0


# ---------------------------------------------------------------------------
# sweep

def _cmd_sweep(args) -> int:
    try:
        potential = _build_potential(args)
        ctx = _build_ctx(args)
        fixed = {} if args.energy is None else {"energy": args.energy}
        spec = SweepSpec(
            potential=potential,
            variable=args.var,
            lo=args.lo,
            hi=args.hi,
            points=args.points,
            methods=frozenset(args.methods.split(",")),
            ctx=ctx,
            fixed=fixed,
            log_spaced=args.log_spaced,
        )
    except QscatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    text = render_sweep_csv(run_sweep(spec), spec.methods)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        Path(args.out).write_text(text, newline="")
    except OSError as exc:
        print(f"error writing {args.out}: {exc}", file=sys.stderr)
        return _IO_EXIT
    return 0


# ---------------------------------------------------------------------------
# resonances

def _resonance_table(listing_or_reports) -> str:
    if isinstance(listing_or_reports, ResonanceListing):
        reports = listing_or_reports.reports
        reason = listing_or_reports.reason
    else:
        reports = listing_or_reports
        reason = None
    lines = ["kind,location,value,source,label,boundary"]
    for r in reports:
        lines.append(
            ",".join(
                [
                    r.kind.value,
                    format_number(r.location),
                    format_number(r.value),
                    r.source.value,
                    r.label,
                    "1" if r.at_boundary else "0",
                ]
            )
        )
    text = "\n".join(lines) + "\n"
    if reason:
        text += f"# {reason}\n"
    return text


def _cmd_resonances(args) -> int:
    try:
        potential = _build_potential(args)
        ctx = _build_ctx(args)
    except QscatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    kind = Kind(args.kind)
    if args.numeric:
        if args.lo is None or args.hi is None:
            print("error: --numeric requires --lo and --hi", file=sys.stderr)
            return _USAGE_EXIT
        fixed = {} if args.energy is None else {"energy": args.energy}
        try:
            curve = _probability_curve(potential, args.var, kind, ctx, fixed)
            reports = numeric_resonances(
                curve, (args.lo, args.hi), args.grid_n, args.refine_tol, kind
            )
        except QscatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return _USAGE_EXIT
        sys.stdout.write(_resonance_table(reports))
        return 0
    try:
        listing = analytic_resonances(potential, args.var, args.n, ctx, kind, args.energy)
    except UnsupportedOperationError as exc:
        print(f"error: {exc} (try --numeric)", file=sys.stderr)
        return _USAGE_EXIT
    except QscatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    sys.stdout.write(_resonance_table(listing))
    return 0


def _probability_curve(potential, var, kind: Kind, ctx, fixed):
    """Exact T or R as a function of one sweep variable."""

    def curve(x: float) -> float:
        p, energy = map_sweep_variable(potential, var, x, ctx, fixed)
        results, _ = evaluate_methods(p, energy, frozenset({"exact"}), ctx)
        res = results["exact"]
        if res.error is not None:
            raise QscatError(f"exact evaluation failed at {var}={x!r}: {res.error}")
        return res.transmission if kind is Kind.TRANSMISSION else res.reflection

    return curve


# ---------------------------------------------------------------------------
# figure presets

_NATURAL = PhysicsContext()


def _figure_panels(name: str) -> list[tuple[str, SweepSpec]]:
    exact = frozenset({"exact"})
    panels: list[tuple[str, SweepSpec]] = []
    if name == "fig1":
        for letter, k0 in zip("abcde", (1.0, 2.0, 10.0, 100.0, 1000.0)):
            spec = SweepSpec(
                Delta(alpha=k0), "k", lo=0.02 * k0, hi=10.0 * k0, points=500, methods=exact
            )
            panels.append((f"fig1{letter}", spec))
    elif name == "fig3":
        for letter, k0 in zip("abcde", (1.0, 2.0, 10.0, 100.0, 1000.0)):
            spec = SweepSpec(
                Rectangular(v0=0.5 * k0**2, a=1.0),
                "q",
                lo=0.0025,
                hi=10.0,
                points=4000,
                methods=exact,
            )
            panels.append((f"fig3{letter}", spec))
    elif name == "fig3a":
        for letter, a in zip("abcd", (1.0, 2.0, 10.0, 100.0)):
            hi = 10.0 / a
            spec = SweepSpec(
                Rectangular(v0=0.5, a=a), "q", lo=hi / 4000.0, hi=hi, points=4000, methods=exact
            )
            panels.append((f"fig3a{letter}", spec))
    elif name == "fig4":
        spec = SweepSpec(
            Rectangular(v0=1.0, a=1.0),
            "E",
            lo=1.02,
            hi=20.0,
            points=500,
            methods=frozenset({"exact", "bound"}),
        )
        panels.append(("fig4", spec))
    elif name == "fig5":
        for letter, v0 in zip("abcd", (1.0, 10.0, 50.0, 100.0)):
            spec = SweepSpec(
                Rectangular(v0=v0, a=1.0),
                "E",
                lo=0.005 * v0,
                hi=0.995 * v0,
                points=200,
                methods=frozenset({"exact", "wkb"}),
            )
            panels.append((f"fig5{letter}", spec))
    elif name == "fig7":
        # k-inf = 1, k+inf = 2 at E = 2 with V-inf = 1.5, V+inf = 0 (m = hbar = 1)
        for letter, a in zip("ab", (1.0, 2.0)):
            spec = SweepSpec(
                Eckart(v_minus_inf=1.5, v_plus_inf=0.0, v0=0.0, a=a),
                "V0",
                lo=-10.5,
                hi=2.0,
                points=501,
                methods=exact,
                fixed={"energy": 2.0},
            )
            panels.append((f"fig7{letter}", spec))
    elif name == "fig10":
        for letter, a in zip("ab", (0.5, 1.0)):
            spec = SweepSpec(
                Hulthen(v0=1.0, a=a, q=0.9), "E", lo=1.09, hi=10.0, points=100, methods=exact
            )
            panels.append((f"fig10{letter}", spec))
    elif name == "fig11":
        for letter, v0 in zip("abcd", (1.0, 2.0, 10.0, 50.0)):
            spec = SweepSpec(
                Hulthen(v0=v0, a=0.5, q=0.9),
                "E",
                lo=0.02,
                hi=1.0,
                points=200,
                methods=frozenset({"wkb"}),
            )
            panels.append((f"fig11{letter}", spec))
    return panels


FIGURE_PRESETS = ("fig1", "fig3", "fig3a", "fig4", "fig5", "fig7", "fig10", "fig11")


def _spec_manifest(spec: SweepSpec) -> dict:
    return {
        "potential": {"kind": type(spec.potential).__name__.lower(), **asdict(spec.potential)},
        "variable": spec.variable,
        "lo": spec.lo,
        "hi": spec.hi,
        "points": spec.points,
        "methods": sorted(spec.methods),
        "hbar": spec.ctx.hbar,
        "mass": spec.ctx.mass,
        "fixed": dict(spec.fixed),
        "log_spaced": spec.log_spaced,
    }


def _cmd_figure(args) -> int:
    if args.preset not in FIGURE_PRESETS:
        print(
            f"error: unknown preset {args.preset!r}; available: {', '.join(FIGURE_PRESETS)}",
            file=sys.stderr,
        )
        return _USAGE_EXIT
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error creating {out_dir}: {exc}", file=sys.stderr)
        return _IO_EXIT
    manifest = {}
    try:
        for panel, spec in _figure_panels(args.preset):
            text = render_sweep_csv(run_sweep(spec), spec.methods)
            (out_dir / f"{panel}.csv").write_text(text, newline="")
            manifest[f"{panel}.csv"] = _spec_manifest(spec)
        (out_dir / f"{args.preset}_manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", newline=""
        )
    except OSError as exc:
        print(f"error writing into {out_dir}: {exc}", file=sys.stderr)
        return _IO_EXIT
    return 0


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qscat",
        description="Transmission/reflection for four canonical 1D quantum potentials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="single-point T/R evaluation")
    _add_potential_args(p_eval)
    p_eval.add_argument("--energy", type=float, required=True)
    p_eval.add_argument(
        "--method",
        action="append",
        choices=METHOD_ORDER,
        help="repeatable; defaults to exact",
    )
    p_eval.add_argument(
        "--r-convention",
        choices=("paper", "asymptotic"),
        help="append the literature Eckart reflection value under this convention",
    )

    for alias, method in (("wkb", "wkb"), ("bound", "bound")):
        p_alias = sub.add_parser(alias, help=f"eval with the {method} method preselected")
        _add_potential_args(p_alias)
        p_alias.add_argument("--energy", type=float, required=True)

    p_sweep = sub.add_parser("sweep", help="grid sweep to CSV")
    _add_potential_args(p_sweep)
    p_sweep.add_argument("--var", required=True, choices=("k", "q", "E", "V0"))
    p_sweep.add_argument("--lo", type=float, required=True)
    p_sweep.add_argument("--hi", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--methods", default="exact", help="comma list of exact,wkb,bound")
    p_sweep.add_argument("--energy", type=float, help="fixed energy (V0 sweeps)")
    p_sweep.add_argument("--log-spaced", action="store_true")
    p_sweep.add_argument("--out", help="output CSV path (stdout when omitted)")

    p_res = sub.add_parser("resonances", help="analytic or numeric resonance listing")
    _add_potential_args(p_res)
    p_res.add_argument("--var", required=True, choices=("k", "q", "E", "V0"))
    p_res.add_argument("--kind", default="transmission", choices=("transmission", "reflection"))
    p_res.add_argument("--n", type=int, default=3, help="number of analytic resonances")
    p_res.add_argument("--energy", type=float, help="fixed energy where needed")
    p_res.add_argument("--numeric", action="store_true", help="grid scan + refinement")
    p_res.add_argument("--lo", type=float)
    p_res.add_argument("--hi", type=float)
    p_res.add_argument("--grid-n", type=int, default=256)
    p_res.add_argument("--refine-tol", type=float, default=1e-8)

    p_fig = sub.add_parser("figure", help="figure-reproduction presets")
    p_fig.add_argument("preset", help=f"one of {', '.join(FIGURE_PRESETS)}")
    p_fig.add_argument("--out", required=True, help="output directory")

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _expand_spec_files(argv)
    except (QscatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        if args.method is None:
            args.method = ["exact"]
        return _cmd_eval(args)
    if args.command == "wkb":
        return _cmd_eval(args, forced_method="wkb")
    if args.command == "bound":
        return _cmd_eval(args, forced_method="bound")
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "resonances":
        return _cmd_resonances(args)
    return _cmd_figure(args)


if __name__ == "__main__":
    sys.exit(main())
