"""Deterministic coupling optimization and grid sweeps.

The optimizer maximizes the ground-state logarithmic negativity over the
couplings at fixed dot energies: a coarse log-spaced grid scan picks the
basin, then golden-section search (symmetric mode, lam1 = lam2) or
Nelder-Mead (independent mode) refines it until the bracket or simplex
diameter drops below the configured tolerance.  Everything is
deterministic for a given configuration; results are re-verified by
evaluating the objective once more at the reported optimum.

Sweeps evaluate a measure on the Cartesian product of the given axes and
return rows in lexicographic axis order.  Points are independent, so a
sweep may evaluate them on a thread pool (capped by the ME_THREADS
environment variable); the row order never depends on scheduling.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.optimize import minimize

from .model import ModelParams
from .negativity import logarithmic_negativity
from .states import ground_state, reduce_over_majorana, reduce_thermal
from .thermal import thermal_qmi, wootters_concurrence, quantum_mutual_information

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SearchConfig:
    """Search settings; the domain is in the same energy unit as the params."""

    lambda_domain: tuple[float, float]
    coarse_points: int = 25
    refine_tolerance: float = 1e-6
    mode: str = "symmetric"  # "symmetric" (lam1 = lam2) | "independent"
    tie_rule: str = "even-first"
    max_refine_evals: int = 2000

    def __post_init__(self):
        lo, hi = self.lambda_domain
        if not (0.0 < lo < hi):
            raise ValueError(
                f"lambda domain must satisfy 0 < lo < hi, got {self.lambda_domain}")
        if self.coarse_points < 2:
            raise ValueError("coarse_points must be at least 2")
        if self.refine_tolerance <= 0:
            raise ValueError("refine_tolerance must be positive")
        if self.mode not in ("symmetric", "independent"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.tie_rule not in ("even-first", "odd-first"):
            raise ValueError(f"unknown tie_rule {self.tie_rule!r}")


def default_config(eps_m: float, mode: str = "symmetric", **overrides) -> SearchConfig:
    """Default domain [1e-3, 5] in units of omega = eps_m/2."""
    omega = 0.5 * eps_m
    return SearchConfig(lambda_domain=(1e-3 * omega, 5.0 * omega), mode=mode,
                        **overrides)


@dataclass(frozen=True)
class OptimizationResult:
    eps_m: float
    eps1: float
    eps2: float
    lam_opt: tuple[float, float]
    n_max: float
    boundary_hit: bool
    evaluations: int
    degenerate_seen: bool
    config: SearchConfig


class _Objective:
    """Ground-state negativity at given couplings, with bookkeeping."""

    def __init__(self, eps1, eps2, eps_m, tie_rule):
        self.eps1 = eps1
        self.eps2 = eps2
        self.eps_m = eps_m
        self.tie_rule = tie_rule
        self.evaluations = 0
        self.degenerate_seen = False

    def __call__(self, lam1: float, lam2: float) -> float:
        self.evaluations += 1
        p = ModelParams(self.eps_m, self.eps1, self.eps2, lam1, lam2)
        w = ground_state(p, tie_rule=self.tie_rule)
        if w.degenerate:
            self.degenerate_seen = True
        return logarithmic_negativity(reduce_over_majorana(w))


def _golden_section_max(f, lo, hi, tol):
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def maximize_negativity(eps1: float, eps2: float, eps_m: float = 2.0,
                        cfg: SearchConfig | None = None) -> OptimizationResult:
    """Couplings maximizing the ground-state negativity at fixed energies.

    boundary_hit is set when the reported optimum lies within the refine
    tolerance of a domain edge.  Degenerate ground states along the way are
    flagged (the tie rule decides the sector) and never abort the search.
    """
    if cfg is None:
        cfg = default_config(eps_m)
    lo, hi = cfg.lambda_domain
    obj = _Objective(eps1, eps2, eps_m, cfg.tie_rule)
    grid = np.geomspace(lo, hi, cfg.coarse_points)

    if cfg.mode == "symmetric":
        vals = [obj(l, l) for l in grid]
        k = int(np.argmax(vals))
        a = grid[k - 1] if k > 0 else lo
        b = grid[k + 1] if k + 1 < len(grid) else hi
        x = _golden_section_max(lambda l: obj(l, l), a, b, cfg.refine_tolerance)
        lam_opt = (x, x)
    else:
        vals = np.array([[obj(l1, l2) for l2 in grid] for l1 in grid])
        i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
        start = np.array([grid[i], grid[j]])
        step = 0.05 * (hi - lo)
        simplex = [start.copy()]
        for axis in range(2):
            v = start.copy()
            v[axis] += step if v[axis] + step <= hi else -step
            simplex.append(v)
        res = minimize(lambda x: -obj(x[0], x[1]), start, method="Nelder-Mead",
                       bounds=[(lo, hi), (lo, hi)],
                       options={"xatol": cfg.refine_tolerance, "fatol": np.inf,
                                "maxfev": cfg.max_refine_evals,
                                "initial_simplex": np.array(simplex)})
        lam_opt = (float(res.x[0]), float(res.x[1]))

    n_max = obj(*lam_opt)  # re-verified value at the reported optimum
    tol = cfg.refine_tolerance
    boundary_hit = any(x - lo < tol or hi - x < tol for x in lam_opt)
    return OptimizationResult(eps_m, eps1, eps2, lam_opt, n_max, boundary_hit,
                              obj.evaluations, obj.degenerate_seen, cfg)


@dataclass(frozen=True)
class SweepRow:
    """One grid point: the full parameter set plus the computed measures."""

    eps_m: float
    eps1: float
    eps2: float
    lam1: float
    lam2: float
    temperature: float
    negativity: float | None = None
    concurrence: float | None = None
    qmi: float | None = None
    tie_rule: str = "even-first"
    degenerate: bool = False
    boundary_hit: bool | None = None


#: Expected axis names per sweep kind, in lexicographic evaluation order.
SWEEP_AXES = {
    "fig2": ("eps1", "eps2"),
    "fig2sup": ("lam", "eps1", "eps2"),
    "fig4": ("eps", "lam"),
    "fig5-negativity": ("lam", "eps"),
    "fig5-qmi": ("lam", "omega"),
}

_CUSTOM_AXES = ("eps_m", "eps1", "eps2", "lam1", "lam2", "temperature")


def _validate_axes(axes):
    if not axes:
        raise ValueError("sweep needs at least one axis")
    for name, values in axes:
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            raise ValueError(f"axis {name!r} is empty")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"axis {name!r} contains non-finite values")
        if values.size > 1 and not np.all(np.diff(values) > 0):
            raise ValueError(f"axis {name!r} must be strictly increasing")


def _resolve_workers(workers):
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("ME_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _map_points(fn, points, workers):
    if workers <= 1 or len(points) < 2:
        return [fn(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points))  # map preserves submission order


def sweep(kind: str, axes, *, fixed=None, cfg: SearchConfig | None = None,
          tie_rule: str = "even-first", measures=("negativity",),
          workers: int | None = None) -> list[SweepRow]:
    """Evaluate a measure over the Cartesian product of the axes.

    axes is an ordered list of (name, values) pairs; rows come back in
    lexicographic order of the axis values (first axis slowest).  The
    expected names per kind are in SWEEP_AXES; kind "custom" accepts any
    subset of the ModelParams fields as axes, with the remaining fields
    supplied through ``fixed``.

    fixed supplies scalars the kind needs beyond its axes (fig2/fig2sup/
    fig4/fig5-negativity: eps_m, default 2.0; fig5-qmi: temperature).
    """
    fixed = dict(fixed or {})
    axes = [(name, np.asarray(vals, dtype=float)) for name, vals in axes]
    _validate_axes(axes)
    names = tuple(name for name, _ in axes)

    if kind in SWEEP_AXES:
        if names != SWEEP_AXES[kind]:
            raise ValueError(
                f"kind {kind!r} expects axes {SWEEP_AXES[kind]}, got {names}")
    elif kind == "custom":
        unknown = set(names) - set(_CUSTOM_AXES)
        if unknown:
            raise ValueError(f"unknown custom axes {sorted(unknown)}")
        bad = set(measures) - {"negativity", "concurrence", "qmi"}
        if bad:
            raise ValueError(f"unknown measures {sorted(bad)}")
    else:
        raise ValueError(f"unknown sweep kind {kind!r}")

    eps_m = float(fixed.get("eps_m", 2.0))
    temperature = float(fixed.get("temperature", 0.0))
    points = list(product(*(vals for _, vals in axes)))

    if kind == "fig2":
        run_cfg = cfg if cfg is not None else default_config(eps_m, mode="independent")

        def eval_point(pt):
            e1, e2 = pt
            r = maximize_negativity(e1, e2, eps_m, run_cfg)
            return SweepRow(eps_m, e1, e2, r.lam_opt[0], r.lam_opt[1], 0.0,
                            negativity=r.n_max, tie_rule=run_cfg.tie_rule,
                            degenerate=r.degenerate_seen,
                            boundary_hit=r.boundary_hit)

    elif kind in ("fig2sup", "fig4", "fig5-negativity"):

        def eval_point(pt):
            if kind == "fig2sup":
                lam, e1, e2 = pt
            elif kind == "fig4":
                e1, lam = pt
                e2 = e1
            else:  # fig5-negativity
                lam, e1 = pt
                e2 = e1
            p = ModelParams(eps_m, e1, e2, lam, lam)
            w = ground_state(p, tie_rule=tie_rule)
            n = logarithmic_negativity(reduce_over_majorana(w))
            return SweepRow(eps_m, e1, e2, lam, lam, 0.0, negativity=n,
                            tie_rule=tie_rule, degenerate=w.degenerate)

    elif kind == "fig5-qmi":
        if temperature <= 0:
            raise ValueError("fig5-qmi needs fixed={'temperature': T > 0}")

        def eval_point(pt):
            lam, omega = pt
            p = ModelParams.special_set(omega, lam, temperature)
            return SweepRow(p.eps_m, 0.0, 0.0, p.lam1, p.lam2, temperature,
                            qmi=thermal_qmi(omega, lam, temperature),
                            tie_rule=tie_rule)

    else:  # custom

        defaults = {"eps_m": eps_m, "temperature": temperature}

        def eval_point(pt):
            values = dict(zip(names, pt))
            kwargs = {k: values.get(k, float(fixed.get(k, defaults.get(k, 0.0))))
                      for k in _CUSTOM_AXES}
            p = ModelParams(**kwargs)
            row = {}
            degenerate = False
            if "negativity" in measures:
                w = ground_state(p, tie_rule=tie_rule)
                degenerate = w.degenerate
                row["negativity"] = logarithmic_negativity(reduce_over_majorana(w))
            if "concurrence" in measures or "qmi" in measures:
                rho = reduce_thermal(p)
                if "concurrence" in measures:
                    row["concurrence"] = wootters_concurrence(rho)
                if "qmi" in measures:
                    row["qmi"] = quantum_mutual_information(rho)
            return SweepRow(p.eps_m, p.eps1, p.eps2, p.lam1, p.lam2,
                            p.temperature, tie_rule=tie_rule,
                            degenerate=degenerate, **row)

    return _map_points(eval_point, points, _resolve_workers(workers))
