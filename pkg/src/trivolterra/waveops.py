"""Renormalized wave-operator trajectories for the Friedrichs models.

``D(t) = exp(iAt) exp(-iQt) w0(t)`` is applied to test functions and compared
with the predicted limit: ``V_alpha^{-1}`` for the logarithmic model and
``exp(i alpha pi / 2) (J^alpha)^{-1}`` for the power model.  ``A`` always
comes from the kernel formula; conjugation is used only for cross-checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import linalg, special

from .discretize import Grid, TriOp, build_J, invert_triangular
from .errors import DomainError, ResolutionError
from .friedrichs import FriedrichsOp, build_A, build_B, similarity_V
from .specfun import DEFAULT_BUDGET, EULER_GAMMA, KernelParams, eval_E

MODEL_A = "A"
MODEL_B = "B"

LOG = "log"
POWER = "power"
NONE = "none"

RESOLUTION_LIMIT = math.pi / 4


class ExponentialOverflowError(ArithmeticError):
    pass


def matrix_exponential(op: TriOp | FriedrichsOp | np.ndarray, t: float) -> np.ndarray:
    """``exp(i t M)`` by scaling and squaring with a degree-13 Pade approximant (``scipy.linalg.expm``)."""
    m = op.matrix if hasattr(op, "matrix") else np.asarray(op)
    if not np.all(np.isfinite(m)) or not math.isfinite(t):
        raise ExponentialOverflowError("non-finite input to the matrix exponential")
    scaled = np.linalg.norm(m, 1) * abs(t)
    if scaled > 0.5 * 2.0**60:
        raise ExponentialOverflowError(f"||M|| t = {scaled:.3g} needs more than 60 squarings")
    out = linalg.expm(1j * t * np.asarray(m, dtype=complex))
    if not np.all(np.isfinite(out)):
        raise ExponentialOverflowError("matrix exponential overflowed")
    return out


def conjugation_exponential(similarity: TriOp, grid: Grid, t: float) -> np.ndarray:
    """``W^{-1} exp(iQt) W``: the closed-form propagator of ``W^{-1} Q W``."""
    w = similarity.matrix
    return linalg.solve_triangular(w, np.exp(1j * t * grid.nodes)[:, None] * w, lower=True)


def w0(family: str, alpha: complex, t: float, sign: int = 1) -> complex:
    """Scalar renormalization: ``(ln t)^(sign*alpha)``, ``t^(sign*alpha)`` or ``1``.

    ``sign = +1`` is the choice under which ``D(t)`` converges with the
    propagator convention used here (``exp(iAt) exp(-iQt)``); ``sign = -1``
    gives the opposite exponent.
    """
    if t <= 1.0:
        raise DomainError("w0 needs t > 1")
    a = sign * complex(alpha)
    if family == LOG:
        return cmath.exp(a * math.log(math.log(t)))
    if family == POWER:
        return cmath.exp(a * math.log(t))
    if family == NONE:
        return 1.0 + 0j
    raise DomainError(f"unknown w0 family {family!r}")


@dataclass
class W0Report:
    family: str
    alpha: complex
    defects: dict  # tau -> list over t of |w0(t+tau)^{-1} w0(t) - 1|
    moduli: list
    t_values: list
    commutes_with_Q: bool = True

    @property
    def verdict(self) -> bool:
        dec = all(np.all(np.diff(d) < 0) for d in self.defects.values())
        unit = all(abs(m - 1.0) <= 1e-15 for m in self.moduli)
        return dec and unit and self.commutes_with_Q


def w0_check(family: str, alpha: complex, t_values: Sequence[float], taus: Sequence[float], sign: int = 1) -> W0Report:
    """Asymptotic invariance ``w0(t+tau)^{-1} w0(t) -> 1`` and ``|w0| = 1`` for imaginary ``alpha``."""
    defects = {}
    for tau in taus:
        defects[tau] = [abs(w0(family, alpha, t, sign) / w0(family, alpha, t + tau, sign) - 1.0) for t in t_values]
    moduli = [abs(w0(family, alpha, t, sign)) for t in t_values]
    return W0Report(family, complex(alpha), defects, moduli, list(t_values))


def smooth_bump(x: np.ndarray, omega: float) -> np.ndarray:
    """``exp(-1/(x(omega-x)))`` rescaled to peak 1; vanishes to all orders at both ends."""
    inner = x * (omega - x)
    with np.errstate(divide="ignore", over="ignore"):
        out = np.exp(4.0 / omega**2 - 1.0 / inner)
    return np.where(inner > 0, out, 0.0)


def parabola(x: np.ndarray, omega: float) -> np.ndarray:
    return x * (omega - x)


def truncated_E1(x: np.ndarray, omega: float, cutoff: float | None = None) -> np.ndarray:
    """``E_1(x)/Gamma(1)`` cut to zero below ``cutoff`` (default ``omega/16``) to stay in L2."""
    cutoff = omega / 16 if cutoff is None else cutoff
    params = KernelParams(1.0, EULER_GAMMA, omega)
    return np.array([eval_E(params, xi).real if xi >= cutoff else 0.0 for xi in x])


TEST_FUNCTIONS: dict[str, Callable[[np.ndarray, float], np.ndarray]] = {
    "bump": smooth_bump,
    "parabola": parabola,
    "e1_truncated": truncated_E1,
}


@dataclass(frozen=True)
class WaveConfig:
    model: str
    alpha: complex
    grid: Grid
    t_values: tuple
    renorm: str = LOG
    sign: int = 1
    direction: int = 1
    tests: tuple = ("bump", "parabola", "e1_truncated")

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "t_values", tuple(float(t) for t in self.t_values))
        if self.model not in (MODEL_A, MODEL_B):
            raise DomainError(f"model must be A or B, got {self.model!r}")
        if self.alpha.real != 0 or self.alpha == 0:
            raise DomainError("alpha must be purely imaginary and non-zero")
        if self.renorm not in (LOG, POWER, NONE):
            raise DomainError(f"unknown renormalization {self.renorm!r}")
        if self.direction not in (1, -1):
            raise DomainError("direction must be +1 or -1")
        if min(self.t_values) <= 1.0:
            raise DomainError("all t must exceed 1")
        t_max = max(self.t_values)
        if self.grid.h * t_max > RESOLUTION_LIMIT:
            raise ResolutionError(
                f"h * t_max = {self.grid.h * t_max:.3g} exceeds pi/4; refine the grid or shorten t"
            )
        for name in self.tests:
            if name not in TEST_FUNCTIONS:
                raise DomainError(f"unknown test function {name!r}")


@dataclass
class WaveRunReport:
    config: WaveConfig
    residuals: dict  # test name -> list over t
    phase_fitted: dict  # same, after removing the best constant unimodular factor
    renorm_defects: list  # |w0(t+1)^{-1} w0(t) - 1| over t

    @property
    def verdicts(self) -> dict:
        return {name: bool(np.all(np.diff(r) <= 0)) for name, r in self.residuals.items()}

    @property
    def verdict(self) -> bool:
        return all(self.verdicts.values())

    def rows(self) -> list[dict]:
        out = []
        for i, t in enumerate(self.config.t_values):
            row = {"t": t}
            for name in self.residuals:
                row[f"residual_{name}"] = self.residuals[name][i]
                row[f"phase_fitted_{name}"] = self.phase_fitted[name][i]
            out.append(row)
        return out


def build_model(model: str, alpha: complex, grid: Grid, budget=DEFAULT_BUDGET) -> FriedrichsOp:
    return build_A(alpha, grid, budget) if model == MODEL_A else build_B(alpha, grid)


def predicted_limit(model: str, alpha: complex, grid: Grid, direction: int = 1, budget=DEFAULT_BUDGET) -> TriOp:
    """``V_alpha^{-1}`` or ``exp(+-i alpha pi/2) (J^alpha)^{-1}``, built independently of the model matrix."""
    if model == MODEL_A:
        return invert_triangular(similarity_V(alpha, grid, budget))
    inv = invert_triangular(build_J(grid, alpha))
    phase = cmath.exp(direction * 1j * complex(alpha) * math.pi / 2)
    return TriOp(grid, phase * inv.matrix, inv.spec, "custom")


def wave_limit_run(config: WaveConfig, budget=DEFAULT_BUDGET) -> WaveRunReport:
    """Residual ``||D(t) f - W_pred f|| / ||f||`` along ``config.t_values`` for each test function."""
    grid, x = config.grid, config.grid.nodes
    op = build_model(config.model, config.alpha, grid, budget)
    pred = predicted_limit(config.model, config.alpha, grid, config.direction, budget).matrix
    funcs = {name: np.asarray(TEST_FUNCTIONS[name](x, grid.omega), dtype=complex) for name in config.tests}
    targets = {name: pred @ f for name, f in funcs.items()}
    res = {name: [] for name in funcs}
    fitted = {name: [] for name in funcs}
    defects = []
    for t in config.t_values:
        st = config.direction * t
        scalar = w0(config.renorm, config.alpha, t, config.sign)
        prop = matrix_exponential(op, st)
        for name, f in funcs.items():
            d = prop @ (np.exp(-1j * st * x) * scalar * f)
            target = targets[name]
            nf = np.linalg.norm(f)
            res[name].append(float(np.linalg.norm(d - target) / nf))
            ip = np.vdot(target, d)
            c = ip / abs(ip) if ip != 0 else 1.0
            fitted[name].append(float(np.linalg.norm(d - c * target) / nf))
        defects.append(abs(scalar / w0(config.renorm, config.alpha, t + 1.0, config.sign) - 1.0))
    return WaveRunReport(config, res, fitted, defects)


@dataclass
class IntertwiningReport:
    s_values: list
    defects: list
    construction: str


def intertwining_check(
    model: str,
    alpha: complex,
    grid: Grid,
    s_values: Sequence[float],
    construction: str = "kernel",
    budget=DEFAULT_BUDGET,
) -> IntertwiningReport:
    """``||W exp(iQs) - exp(iAs) W||_F / ||W||_F`` with ``W`` the predicted wave operator."""
    from .friedrichs import conjugate_A, conjugate_B

    if construction == "kernel":
        op = build_model(model, alpha, grid, budget)
    else:
        op = conjugate_A(alpha, grid, budget) if model == MODEL_A else conjugate_B(alpha, grid)
    w = predicted_limit(model, alpha, grid, 1, budget).matrix
    nw = np.linalg.norm(w)
    defects = []
    for s in s_values:
        if s == 0:
            defects.append(0.0)
            continue
        lhs = w * np.exp(1j * s * grid.nodes)[None, :]
        rhs = matrix_exponential(op, s) @ w
        defects.append(float(np.linalg.norm(lhs - rhs) / nw))
    return IntertwiningReport(list(s_values), defects, construction)
