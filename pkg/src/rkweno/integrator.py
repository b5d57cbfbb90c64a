"""Method-of-lines time stepping with per-stage boundary fills.

Each step advances the Shu-Osher recurrence; stage combinations pick
the upwind operator where the coefficient is positive and the downwind
operator where it is negative.  Ghost values are rebuilt for every
stage from the boundary driver, never reused across stages.
"""

import math
from dataclasses import dataclass, field as dfield
from typing import Optional, Tuple

import numpy as np

from .boundary import BoundaryDriver, BoundaryMethod
from .errors import BlowupError
from .fluxops import global_alpha, semidiscrete_downwind, semidiscrete_upwind
from .grid import FieldArray
from .reconstruction import ReconstructionConfig
from .tableaux import RKTableau

__all__ = ["StepConfig", "RunStats", "rk_step", "integrate"]


@dataclass(frozen=True)
class StepConfig:
    """Time-step rule and stopping time.

    Exactly one of ``cfl`` (dt = cfl dx / alpha) and ``dt_power``
    (dt = c dx**p, given as (p, c)) must be set.
    """

    t_final: float
    cfl: float = None
    dt_power: Tuple[float, float] = None
    boundary_method: BoundaryMethod = dfield(default_factory=BoundaryMethod)
    max_steps: int = 2_000_000

    def __post_init__(self):
        if (self.cfl is None) == (self.dt_power is None):
            raise ValueError("set exactly one of cfl and dt_power")
        if self.cfl is not None and not self.cfl > 0:
            raise ValueError(f"cfl must be positive, got {self.cfl}")

    def dt(self, dx: float, alpha: float) -> float:
        if self.cfl is not None:
            return self.cfl * dx / alpha
        p, c = self.dt_power
        return c * dx**p

    def rule_label(self) -> str:
        if self.cfl is not None:
            return "cfl"
        p, c = self.dt_power
        return f"dx^{p:g}*{c:g}"


@dataclass
class RunStats:
    steps: int = 0
    t_final: float = 0.0
    alphas: list = dfield(default_factory=list)
    component_min: np.ndarray = None
    component_max: np.ndarray = None
    blowup: bool = False

    def update_extrema(self, interior: np.ndarray):
        lo = interior.min(axis=1)
        hi = interior.max(axis=1)
        if self.component_min is None:
            self.component_min, self.component_max = lo, hi
        else:
            self.component_min = np.minimum(self.component_min, lo)
            self.component_max = np.maximum(self.component_max, hi)


def _check_finite(interior: np.ndarray, t: float, step: int):
    if not np.isfinite(interior).all():
        bad = np.argwhere(~np.isfinite(interior))
        comp, j = bad[0]
        raise BlowupError(
            f"non-finite value in component {comp} at interior index {j} "
            f"(t={t:.6g}, step {step})",
            t=t,
            step=step,
            location=(int(comp), int(j)),
        )


def rk_step(
    field: FieldArray,
    problem,
    tableau: RKTableau,
    t_n: float,
    dt: float,
    recon: ReconstructionConfig,
    driver: BoundaryDriver,
    alpha: float = None,
) -> FieldArray:
    """One full RK cycle; returns the end-of-step field (ghosts unfilled).

    The splitting scale alpha is frozen at t_n for all stages.  Stage
    fields keep their ghost fills alive for the whole step because later
    stages re-consume earlier operator evaluations.
    """
    if alpha is None:
        alpha = global_alpha(field, problem)
    grid = field.grid
    s = tableau.stages

    driver.fill(field, 0, t_n, dt)
    stage_fields = [field]
    op_cache = {}

    def op(k: int, sign: int) -> np.ndarray:
        key = (k, sign)
        if key not in op_cache:
            fn = semidiscrete_upwind if sign > 0 else semidiscrete_downwind
            op_cache[key] = fn(stage_fields[k], problem, alpha, recon)
        return op_cache[key]

    for i in range(1, s + 1):
        acc = np.zeros_like(field.interior)
        for k in range(i):
            a = tableau.alpha[i - 1, k]
            b = tableau.beta[i - 1, k]
            if a != 0.0:
                acc += a * stage_fields[k].interior
            if b > 0.0:
                acc += (dt * b) * op(k, +1)
            elif b < 0.0:
                acc += (dt * b) * op(k, -1)
        new = FieldArray(grid, field.m_components)
        new.interior = acc
        if i < s:
            driver.fill(new, i, t_n, dt)
        stage_fields.append(new)
    return stage_fields[-1]


def integrate(
    field: FieldArray,
    problem,
    tableau: RKTableau,
    cfg: StepConfig,
    recon: ReconstructionConfig = None,
    driver: BoundaryDriver = None,
    t0: float = 0.0,
):
    """March to cfg.t_final; the last step is clamped to land exactly.

    Returns (final field, RunStats).  Non-finite values abort with
    blowup diagnostics; callers running stability sweeps catch them.
    """
    recon = recon or ReconstructionConfig()
    if driver is None:
        driver = BoundaryDriver(
            problem,
            tableau,
            method=cfg.boundary_method,
            reconstruction_order=recon.order,
        )
    if cfg.t_final <= t0:
        raise ValueError(f"t_final={cfg.t_final} must exceed t0={t0}")

    f = field.copy()
    stats = RunStats()
    stats.update_extrema(f.interior)
    t = t0
    dx = f.grid.dx
    while True:
        remaining = cfg.t_final - t
        if remaining <= 1e-14 * max(1.0, abs(cfg.t_final)):
            break
        if stats.steps >= cfg.max_steps:
            raise RuntimeError(f"exceeded max_steps={cfg.max_steps} before t_final")
        alpha = global_alpha(f, problem)
        dt = min(cfg.dt(dx, alpha), remaining)
        f = rk_step(f, problem, tableau, t, dt, recon, driver, alpha=alpha)
        t = cfg.t_final if dt == remaining else t + dt
        stats.steps += 1
        stats.alphas.append(alpha)
        _check_finite(f.interior, t, stats.steps)
        stats.update_extrema(f.interior)
    stats.t_final = t
    return f, stats
