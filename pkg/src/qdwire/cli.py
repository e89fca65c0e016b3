"""Command-line front end: single-point evaluations, sweeps, optimization
runs and canned figure-data grids with companion gnuplot scripts.

CSV outputs start with a provenance line ``# unit=<convention>
version=<version>`` followed by a header row naming every column; floats
carry 12 significant digits.  Files are written in one shot after the full
sweep finishes, so a failed run leaves no partial file.  Diagnostics
(degenerate-ground warnings, errors) go to stderr, data to stdout or the
requested file.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .model import ModelParams
from .negativity import (logarithmic_negativity, negativity_pure_analytic,
                         pure_state_intermediates)
from .optimize import SearchConfig, default_config, maximize_negativity, sweep
from .states import ground_state, reduce_over_majorana, reduce_thermal
from .thermal import (thermal_concurrence, thermal_qmi, thermal_qmi_closed_form,
                      thermal_weights, quantum_mutual_information,
                      wootters_concurrence)

_UNIT_EPS_M = {"omega": 2.0, "eps-m": 1.0}


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (float, np.floating)):
        return format(x, ".12g")
    return str(x)


def _unit_tag(unit: str) -> str:
    return {"omega": "omega=1", "eps-m": "eps_m=1"}[unit]


def rows_to_csv(rows, unit: str, columns=None) -> str:
    """Render sweep rows as the artifact CSV format."""
    base = ["eps_m", "eps1", "eps2", "lam1", "lam2", "temperature"]
    if columns is None:
        measures = [m for m in ("negativity", "concurrence", "qmi")
                    if rows and getattr(rows[0], m) is not None]
        columns = base + measures + ["tie_rule", "degenerate"]
        if rows and rows[0].boundary_hit is not None:
            columns.append("boundary_hit")
    lines = [f"# unit={_unit_tag(unit)} version={__version__}",
             ",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(getattr(row, c)) for c in columns))
    return "\n".join(lines) + "\n"


def parse_csv(text: str):
    """Parse an artifact CSV back into (meta, header, rows-of-strings)."""
    lines = text.strip().splitlines()
    meta = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    header = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return meta, header, rows


def _params_from_args(args) -> ModelParams:
    eps_m = args.eps_m if args.eps_m is not None else _UNIT_EPS_M[args.unit]
    return ModelParams(eps_m, args.eps1, args.eps2, args.lam1, args.lam2,
                       getattr(args, "temp", 0.0) or 0.0)


def _add_param_flags(sub, with_temp=False):
    sub.add_argument("--eps-m", type=float, default=None,
                     help="overlap energy (default set by --unit)")
    sub.add_argument("--eps1", type=float, default=0.0)
    sub.add_argument("--eps2", type=float, default=0.0)
    sub.add_argument("--lam1", type=float, default=0.0)
    sub.add_argument("--lam2", type=float, default=0.0)
    if with_temp:
        sub.add_argument("--temp", type=float, default=0.0)


def _add_special_flags(sub):
    sub.add_argument("--special-set", action="store_true",
                     help="use the symmetric point eps1=eps2=0, "
                          "lam1=-lam2=sqrt(2)*lam")
    sub.add_argument("--omega", type=float, default=None)
    sub.add_argument("--lam", type=float, default=None)


def _is_special(args) -> bool:
    return args.special_set or args.omega is not None or args.lam is not None


def _require_special(args):
    if args.omega is None or args.lam is None:
        raise ValueError("--special-set needs --omega and --lam")
    if args.temp is None or args.temp <= 0:
        raise ValueError("thermal measures need --temp > 0")


def cmd_negativity(args) -> int:
    p = _params_from_args(args)
    w = ground_state(p, tie_rule=args.tie_rule)
    if w.degenerate:
        print(f"warning: degenerate ground state, tie rule {args.tie_rule} applied",
              file=sys.stderr)
    rho = reduce_over_majorana(w)
    value = logarithmic_negativity(rho)
    print(f"unit = {_unit_tag(args.unit)}")
    print(f"params: eps_m={_fmt(p.eps_m)} eps1={_fmt(p.eps1)} eps2={_fmt(p.eps2)} "
          f"lam1={_fmt(p.lam1)} lam2={_fmt(p.lam2)}")
    print(f"ground sector = {w.sector}, energy = {_fmt(w.energy)}, "
          f"degenerate = {w.degenerate}")
    inter = pure_state_intermediates(w)
    print(f"analytic eigenvalues r = ({_fmt(inter.r1)}, {_fmt(inter.r2)}, "
          f"{_fmt(inter.r3)}, {_fmt(inter.r4)})")
    print(f"analytic negativity = {_fmt(negativity_pure_analytic(w))}")
    print(f"negativity = {_fmt(value)}")
    return 0


def cmd_concurrence(args) -> int:
    if _is_special(args):
        _require_special(args)
        w = thermal_weights(args.omega, args.lam, args.temp)
        value = thermal_concurrence(args.omega, args.lam, args.temp)
        print(f"bell weights / Z: Phi+={_fmt(w.Phi_plus / w.Z)} "
              f"Phi-={_fmt(w.Phi_minus / w.Z)} Psi+={_fmt(w.Psi_plus / w.Z)} "
              f"Psi-={_fmt(w.Psi_minus / w.Z)}")
        print(f"concurrence = {_fmt(value)}")
    else:
        if not args.temp or args.temp <= 0:
            raise ValueError("concurrence needs --temp > 0")
        p = _params_from_args(args)
        value = wootters_concurrence(reduce_thermal(p))
        print(f"concurrence = {_fmt(value)}")
    return 0


def cmd_qmi(args) -> int:
    if _is_special(args):
        _require_special(args)
        value = thermal_qmi(args.omega, args.lam, args.temp)
        closed = thermal_qmi_closed_form(args.omega, args.lam, args.temp)
        print(f"qmi closed form (sorted-weight marginals) = {_fmt(closed)}")
        print(f"qmi = {_fmt(value)}")
    else:
        if not args.temp or args.temp <= 0:
            raise ValueError("qmi needs --temp > 0")
        p = _params_from_args(args)
        value = quantum_mutual_information(reduce_thermal(p))
        print(f"qmi = {_fmt(value)}")
    return 0


def _search_config(args, eps_m, mode) -> SearchConfig:
    cfg = default_config(eps_m, mode=mode, tie_rule=args.tie_rule)
    updates = {}
    if args.domain is not None:
        updates["lambda_domain"] = tuple(args.domain)
    if args.coarse is not None:
        updates["coarse_points"] = args.coarse
    if args.refine_tol is not None:
        updates["refine_tolerance"] = args.refine_tol
    if updates:
        cfg = SearchConfig(**{**cfg.__dict__, **updates})
    return cfg


def cmd_optimize(args) -> int:
    eps_m = args.eps_m if args.eps_m is not None else _UNIT_EPS_M[args.unit]
    cfg = _search_config(args, eps_m, args.mode)
    res = maximize_negativity(args.eps1, args.eps2, eps_m, cfg)
    payload = {
        "unit": _unit_tag(args.unit),
        "version": __version__,
        "eps_m": res.eps_m, "eps1": res.eps1, "eps2": res.eps2,
        "lam_opt": list(res.lam_opt),
        "n_max": res.n_max,
        "boundary_hit": res.boundary_hit,
        "evaluations": res.evaluations,
        "degenerate_seen": res.degenerate_seen,
        "config": {
            "lambda_domain": list(cfg.lambda_domain),
            "coarse_points": cfg.coarse_points,
            "refine_tolerance": cfg.refine_tolerance,
            "mode": cfg.mode,
            "tie_rule": cfg.tie_rule,
        },
    }
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _parse_axis(spec: str):
    name, _, rest = spec.partition("=")
    if not rest:
        raise ValueError(f"bad axis spec {spec!r}; use name=lo:hi:n[:log] "
                         "or name=v1,v2,...")
    if ":" in rest:
        parts = rest.split(":")
        if len(parts) == 3:
            lo, hi, n = parts
            values = np.linspace(float(lo), float(hi), int(n))
        elif len(parts) == 4 and parts[3] == "log":
            lo, hi, n = parts[:3]
            values = np.geomspace(float(lo), float(hi), int(n))
        else:
            raise ValueError(f"bad axis spec {spec!r}")
    else:
        values = np.array([float(v) for v in rest.split(",")])
    return name, values


def cmd_sweep(args) -> int:
    axes = [_parse_axis(spec) for spec in args.axis]
    fixed = {}
    for spec in args.fixed or []:
        name, _, value = spec.partition("=")
        if not value:
            raise ValueError(f"bad fixed spec {spec!r}; use name=value")
        fixed[name] = float(value)
    fixed.setdefault("eps_m", _UNIT_EPS_M[args.unit])
    rows = sweep("custom", axes, fixed=fixed, tie_rule=args.tie_rule,
                 measures=tuple(args.measure))
    text = rows_to_csv(rows, args.unit)
    if args.out:
        Path(args.out).write_text(text)
        if args.emit_plot_script:
            gp = Path(args.out).with_suffix(".gp")
            gp.write_text(_generic_gnuplot(Path(args.out).name, args.measure[0]))
    else:
        sys.stdout.write(text)
    return 0


def _generic_gnuplot(csv_name: str, measure: str) -> str:
    return (f"# gnuplot script for {csv_name}\n"
            "set datafile separator comma\n"
            "set datafile commentschars '#'\n"
            f"set ylabel '{measure}'\n"
            f"plot '{csv_name}' skip 2 using 0:(column('{measure}')) "
            "with lines title ''\n")


_FIG_GNUPLOT = {
    "fig2": """# optimal couplings and maximal negativity over the dot-energy plane
set datafile separator comma
set datafile commentschars '#'
set view map
set size square
set xlabel 'eps1'
set ylabel 'eps2'
set term pngcairo size 1500,500
set output 'fig2.png'
set multiplot layout 1,3
set title 'lam1 opt'
splot 'fig2.csv' skip 2 using 2:3:4 with points pt 5 ps 1 palette notitle
set title 'lam2 opt'
splot 'fig2.csv' skip 2 using 2:3:5 with points pt 5 ps 1 palette notitle
set title 'N max'
splot 'fig2.csv' skip 2 using 2:3:7 with points pt 5 ps 1 palette notitle
unset multiplot
""",
    "fig2sup": """# negativity at fixed symmetric coupling over the dot-energy plane
set datafile separator comma
set datafile commentschars '#'
set view map
set size square
set xlabel 'eps1'
set ylabel 'eps2'
set term pngcairo size 1500,500
set output 'fig2sup.png'
splot 'fig2sup.csv' skip 2 using 2:3:7 with points pt 5 ps 1 palette notitle
""",
    "fig4": """# negativity versus symmetric coupling for several dot energies
set datafile separator comma
set datafile commentschars '#'
set xlabel 'lambda'
set ylabel 'negativity'
set logscale x
set term pngcairo size 800,600
set output 'fig4.png'
plot 'fig4.csv' skip 2 using 4:($2==0.005?$7:1/0) with lines title 'eps=0.005', \\
     'fig4.csv' skip 2 using 4:($2==0.05?$7:1/0) with lines title 'eps=0.05', \\
     'fig4.csv' skip 2 using 4:($2==0.25?$7:1/0) with lines title 'eps=0.25'
""",
    "fig5": """# negativity versus dot energy; mutual information over (lambda, omega)
set datafile separator comma
set datafile commentschars '#'
set term pngcairo size 1500,500
set output 'fig5.png'
set multiplot layout 1,3
set xlabel 'eps'
set ylabel 'negativity'
plot 'fig5_negativity.csv' skip 2 using 2:($4==0.2?$7:1/0) with lines title 'lam=0.2', \\
     'fig5_negativity.csv' skip 2 using 2:($4==0.5?$7:1/0) with lines title 'lam=0.5', \\
     'fig5_negativity.csv' skip 2 using 2:($4==1?$7:1/0) with lines title 'lam=1'
set view map
set xlabel 'lambda'
set ylabel 'omega'
set title 'QMI, T=1'
splot 'fig5_qmi_T1.csv' skip 2 using ($4/sqrt(2)):($1/2):7 with points pt 5 palette notitle
set title 'QMI, T=10'
splot 'fig5_qmi_T10.csv' skip 2 using ($4/sqrt(2)):($1/2):7 with points pt 5 palette notitle
unset multiplot
""",
}


def _reproduce_rows(target: str, args):
    """Canned grids behind each figure reproduction."""
    n = args.grid_points
    cfg_kw = {}
    if args.coarse is not None:
        cfg_kw["coarse_points"] = args.coarse
    if args.refine_tol is not None:
        cfg_kw["refine_tolerance"] = args.refine_tol

    if target == "fig2":
        eps_m = _UNIT_EPS_M[args.unit]
        cfg = default_config(eps_m, mode="independent",
                             tie_rule=args.tie_rule, **cfg_kw)
        eps = np.linspace(0.0, 2.0, n or 41)
        rows = sweep("fig2", [("eps1", eps), ("eps2", eps)],
                     fixed={"eps_m": eps_m}, cfg=cfg)
        return {"fig2.csv": rows}
    if target == "fig2sup":
        eps = np.linspace(0.0, 2.0, n or 41)
        rows = sweep("fig2sup", [("lam", [0.25, 0.5, 1.0]),
                                 ("eps1", eps), ("eps2", eps)],
                     fixed={"eps_m": 2.0}, tie_rule=args.tie_rule)
        return {"fig2sup.csv": rows}
    if target == "fig4":
        lam = np.geomspace(0.01, 3.0, n or 300)
        rows = sweep("fig4", [("eps", [0.005, 0.05, 0.25]), ("lam", lam)],
                     fixed={"eps_m": 2.0}, tie_rule=args.tie_rule)
        return {"fig4.csv": rows}
    if target == "fig5":
        eps = np.linspace(0.0, 3.0, n or 200)
        neg = sweep("fig5-negativity", [("lam", [0.2, 0.5, 1.0]), ("eps", eps)],
                    fixed={"eps_m": 2.0}, tie_rule=args.tie_rule)
        m = n or 50
        qmi1 = sweep("fig5-qmi", [("lam", np.linspace(3.0, 8.0, m)),
                                  ("omega", np.linspace(0.3, 3.0, m))],
                     fixed={"temperature": 1.0})
        qmi10 = sweep("fig5-qmi", [("lam", np.linspace(30.0, 80.0, m)),
                                   ("omega", np.linspace(3.0, 30.0, m))],
                      fixed={"temperature": 10.0})
        return {"fig5_negativity.csv": neg, "fig5_qmi_T1.csv": qmi1,
                "fig5_qmi_T10.csv": qmi10}
    raise ValueError(f"unknown reproduce target {target!r}")


def cmd_reproduce(args) -> int:
    unit = args.unit if args.target == "fig2" else "omega"
    outputs = _reproduce_rows(args.target, args)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    texts = {name: rows_to_csv(rows, unit) for name, rows in outputs.items()}
    for name, text in texts.items():  # all rendering done; now write
        (outdir / name).write_text(text)
        print(f"wrote {outdir / name}", file=sys.stderr)
    script = outdir / f"{args.target}.gp"
    script.write_text(_FIG_GNUPLOT[args.target])
    print(f"wrote {script}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdwire",
        description="Entanglement measures for two quantum dots coupled "
                    "through a Majorana nanowire.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    common = {"--unit": dict(choices=("omega", "eps-m"), default="omega",
                             help="unit convention when --eps-m is not given"),
              "--tie-rule": dict(choices=("even-first", "odd-first"),
                                 default="even-first")}

    p_neg = subs.add_parser("negativity", help="ground-state negativity at one point")
    _add_param_flags(p_neg)
    for flag, kw in common.items():
        p_neg.add_argument(flag, **kw)
    p_neg.set_defaults(func=cmd_negativity)

    for name, func, hlp in (("concurrence", cmd_concurrence,
                             "thermal concurrence at one point"),
                            ("qmi", cmd_qmi,
                             "quantum mutual information at one point")):
        sp = subs.add_parser(name, help=hlp)
        _add_param_flags(sp, with_temp=True)
        _add_special_flags(sp)
        for flag, kw in common.items():
            sp.add_argument(flag, **kw)
        sp.set_defaults(func=func)

    p_opt = subs.add_parser("optimize", help="maximize negativity over couplings")
    p_opt.add_argument("--eps1", type=float, required=True)
    p_opt.add_argument("--eps2", type=float, required=True)
    p_opt.add_argument("--eps-m", type=float, default=None)
    p_opt.add_argument("--mode", choices=("symmetric", "independent"),
                       default="symmetric")
    p_opt.add_argument("--domain", type=float, nargs=2, default=None,
                       metavar=("LO", "HI"))
    p_opt.add_argument("--coarse", type=int, default=None)
    p_opt.add_argument("--refine-tol", type=float, default=None)
    p_opt.add_argument("--out", default=None)
    for flag, kw in common.items():
        p_opt.add_argument(flag, **kw)
    p_opt.set_defaults(func=cmd_optimize)

    p_sweep = subs.add_parser("sweep", help="custom grid sweep to CSV")
    p_sweep.add_argument("--axis", action="append", required=True,
                         metavar="NAME=LO:HI:N[:log]")
    p_sweep.add_argument("--fixed", action="append", metavar="NAME=VALUE")
    p_sweep.add_argument("--measure", action="append",
                         choices=("negativity", "concurrence", "qmi"))
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--emit-plot-script", action="store_true")
    for flag, kw in common.items():
        p_sweep.add_argument(flag, **kw)
    p_sweep.set_defaults(func=cmd_sweep)

    p_rep = subs.add_parser("reproduce", help="canned figure-data grids")
    p_rep.add_argument("target", choices=("fig2", "fig2sup", "fig4", "fig5"))
    p_rep.add_argument("--out", default="reproduce_out")
    p_rep.add_argument("--grid-points", type=int, default=None,
                       help="override the canned grid resolution")
    p_rep.add_argument("--coarse", type=int, default=None)
    p_rep.add_argument("--refine-tol", type=float, default=None)
    for flag, kw in common.items():
        p_rep.add_argument(flag, **{**kw, "default": kw.get("default")
                                    if flag != "--unit" else "eps-m"})
    p_rep.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and not args.measure:
        args.measure = ["negativity"]
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"qdwire: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
