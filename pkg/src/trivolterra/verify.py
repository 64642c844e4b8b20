"""Grid-refinement experiments for the semigroup law and related identities."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import special

from .discretize import (
    Grid,
    apply,
    build_J,
    build_R,
    build_V,
    compose,
    GridFn,
)
from .specfun import (
    DEFAULT_BUDGET,
    EULER_GAMMA,
    KernelParams,
    QuadratureBudget,
    eval_E,
    eval_E_primitive,
)

DEFAULT_SWEEP = (64, 128, 256, 512)
DECAY_FACTOR = 1.4


@dataclass
class ConvergenceRecord:
    """Residuals along a refinement sweep, with a pass/fail verdict.

    For grid sweeps (``label == "n"``) each doubling must shrink the residual
    by ``factor``; for parameter sweeps the residual must strictly decrease.
    """

    sweep: list
    residuals: list[float]
    label: str = "n"
    factor: float = DECAY_FACTOR
    name: str = ""
    order: float = field(init=False)
    log_order: float = field(init=False)
    verdict: bool = field(init=False)

    def __post_init__(self) -> None:
        r = np.asarray(self.residuals, dtype=float)
        if np.any(r < 0):
            raise ValueError("residuals must be non-negative")
        self.order = math.nan
        self.log_order = math.nan
        if self.label == "n" and len(r) >= 2 and np.all(r > 0):
            n = np.asarray(self.sweep, dtype=float)
            self.order = float(-np.polyfit(np.log(n), np.log(r), 1)[0])
            # r ~ c |ln h|^(-p): the natural law for logarithmic kernels
            self.log_order = float(-np.polyfit(np.log(np.log(2.0 * n)), np.log(r), 1)[0])
        ratios = r[:-1] / np.maximum(r[1:], np.finfo(float).tiny)
        self.verdict = bool(len(r) >= 2 and np.all(r > 0) and np.all(ratios >= self.factor))

    @property
    def ratios(self) -> list[float]:
        r = np.asarray(self.residuals)
        return list(r[:-1] / r[1:])

    def rows(self) -> list[dict]:
        return [{self.label: s, "residual": float(r)} for s, r in zip(self.sweep, self.residuals)]


def _fro(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))


def check_semigroup_V(
    alpha: complex,
    beta: complex,
    C: complex = EULER_GAMMA,
    omega: float = 0.5,
    n_sweep: Sequence[int] = DEFAULT_SWEEP,
    budget: QuadratureBudget = DEFAULT_BUDGET,
) -> ConvergenceRecord:
    """Relative Frobenius defect of ``V_alpha V_beta - V_{alpha+beta}`` per grid."""
    res = []
    for n in n_sweep:
        g = Grid(omega, n)
        va = build_V(g, KernelParams(alpha, C, omega), budget)
        vb = build_V(g, KernelParams(beta, C, omega), budget)
        vab = build_V(g, KernelParams(complex(alpha) + complex(beta), C, omega), budget)
        res.append(_fro(compose(va, vb).matrix, vab.matrix))
    return ConvergenceRecord(list(n_sweep), res, name=f"semigroup V alpha={alpha} beta={beta}")


def check_semigroup_J(
    alpha: complex,
    beta: complex,
    omega: float = 0.5,
    n_sweep: Sequence[int] = DEFAULT_SWEEP,
) -> tuple[ConvergenceRecord, ConvergenceRecord]:
    """Operator defect of ``J^alpha J^beta - J^{alpha+beta}`` and the Beta-integral identity.

    The second record compares ``J^alpha`` applied to samples of ``y^(beta-1)``
    with ``Gamma(beta)/Gamma(alpha+beta) x^(alpha+beta-1)`` in the grid L2 norm.
    """
    alpha, beta = complex(alpha), complex(beta)
    op_res, fn_res = [], []
    coef = complex(special.gamma(beta) / special.gamma(alpha + beta))
    for n in n_sweep:
        g = Grid(omega, n)
        ja, jb, jab = build_J(g, alpha), build_J(g, beta), build_J(g, alpha + beta)
        op_res.append(_fro(compose(ja, jb).matrix, jab.matrix))
        x = g.nodes
        got = ja.matrix @ (x ** (beta - 1))
        want = coef * x ** (alpha + beta - 1)
        fn_res.append(float(np.linalg.norm(got - want) / np.linalg.norm(want)))
    return (
        ConvergenceRecord(list(n_sweep), op_res, name=f"semigroup J alpha={alpha} beta={beta}"),
        ConvergenceRecord(list(n_sweep), fn_res, name=f"beta integral alpha={alpha} beta={beta}"),
    )


def check_left_inverse_R(
    phi: Callable[[np.ndarray], np.ndarray],
    C: complex = EULER_GAMMA,
    omega: float = 0.5,
    n_sweep: Sequence[int] = DEFAULT_SWEEP,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    factor: float = DECAY_FACTOR,
) -> ConvergenceRecord:
    """``||R V_1 phi - phi|| / ||phi||``; the identity needs ``C = -Gamma'(1)``."""
    res = []
    for n in n_sweep:
        g = Grid(omega, n)
        f = g.sample(phi)
        v1 = build_V(g, KernelParams(1.0, C, omega), budget)
        out = apply(build_R(g), apply(v1, f))
        res.append(float(np.linalg.norm(out.values - f.values) / np.linalg.norm(f.values)))
    return ConvergenceRecord(list(n_sweep), res, factor=factor, name=f"R V_1 phi, C={C}")


def sample_E_family(grid: Grid, m: complex, C: complex = EULER_GAMMA, budget=DEFAULT_BUDGET) -> np.ndarray:
    """Samples of ``E_m(x) / Gamma(m)`` at the grid nodes."""
    params = KernelParams(m, C, grid.omega)
    gm = complex(special.gamma(m))
    return np.array([eval_E(params, x, budget) for x in grid.nodes]) / gm


def cell_average_E_family(grid: Grid, m: complex, C: complex = EULER_GAMMA, budget=DEFAULT_BUDGET) -> np.ndarray:
    """Cell averages of ``E_m / Gamma(m)`` from differences of the primitive."""
    params = KernelParams(m, C, grid.omega)
    edges = np.arange(grid.n + 1) * grid.h
    prim = np.array([eval_E_primitive(params, e, budget) for e in edges])
    return np.diff(prim) / grid.h / complex(special.gamma(m))


@dataclass
class StrongLimitReport:
    """``V_beta f_m`` against ``f_m`` and against ``E_{m+beta}/Gamma(m+beta)`` over a beta sweep."""

    betas: list[float]
    ms: list
    identity_deviation: dict
    eigen_relation_residual: dict
    records: dict

    @property
    def verdict(self) -> bool:
        return all(rec.verdict for rec in self.records.values())


def check_strong_identity_limit(
    beta_sweep: Sequence[float] = (0.5, 0.1, 0.02),
    ms: Sequence = (1, 2, 3),
    C: complex = EULER_GAMMA,
    omega: float = 0.5,
    n: int = 256,
    budget: QuadratureBudget = DEFAULT_BUDGET,
) -> StrongLimitReport:
    """Discrete form of ``V_beta -> I`` on the ``E_m`` family.

    ``f_m`` enters through its cell averages (it is not square integrable at
    the origin, so midpoint samples would let the first cell dominate every
    norm); outputs are compared at the nodes in the norm weighted by ``x``,
    which is finite for every ``E_m``.
    """
    g = Grid(omega, n)
    x = g.nodes
    weight = x  # |f_m(x)|^2 x^2 ~ 1/|ln x|^(2m+2) is integrable
    ident, eig, records = {}, {}, {}
    for m in ms:
        f_avg = cell_average_E_family(g, m, C, budget)
        f_pt = sample_E_family(g, m, C, budget)
        devs = []
        for b in beta_sweep:
            vb = build_V(g, KernelParams(b, C, omega), budget)
            out = vb.matrix @ f_avg
            nf = np.linalg.norm(weight * f_pt)
            devs.append(float(np.linalg.norm(weight * (out - f_pt)) / nf))
            target = sample_E_family(g, complex(m) + b, C, budget)
            eig[(m, b)] = float(np.linalg.norm(weight * (out - target)) / np.linalg.norm(weight * target))
        ident[m] = devs
        records[m] = ConvergenceRecord(list(beta_sweep), devs, label="beta", factor=1.0 + 1e-12, name=f"V_beta f_{m} -> f_{m}")
    return StrongLimitReport(list(beta_sweep), list(ms), ident, eig, records)


def check_eigen_relation(
    m: complex,
    beta: complex,
    C: complex = EULER_GAMMA,
    omega: float = 0.5,
    n_sweep: Sequence[int] = DEFAULT_SWEEP,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    factor: float = DECAY_FACTOR,
) -> ConvergenceRecord:
    """``V_beta (E_m/Gamma(m)) = E_{m+beta}/Gamma(m+beta)`` on refining grids (x-weighted L2)."""
    res = []
    for n in n_sweep:
        g = Grid(omega, n)
        x = g.nodes
        vb = build_V(g, KernelParams(beta, C, omega), budget)
        out = vb.matrix @ cell_average_E_family(g, m, C, budget)
        target = sample_E_family(g, complex(m) + complex(beta), C, budget)
        res.append(float(np.linalg.norm(x * (out - target)) / np.linalg.norm(x * target)))
    return ConvergenceRecord(list(n_sweep), res, factor=factor, name=f"eigen relation m={m} beta={beta}")
