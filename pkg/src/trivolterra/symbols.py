r"""Fourier symbols of the logarithmic and fractional convolution kernels.

For a kernel ``k`` on ``(0, omega)`` the symbols are

.. math::

    \tilde s(\lambda) = \int_0^\omega e^{it\lambda} k(t)\,dt, \qquad
    \tilde s_1(\lambda) = \int_0^\omega e^{it\lambda} k(t)\,(1 - t/\omega)\,dt,

with ``k(t) = |ln t|^{-beta}`` (log kernel) or ``k(t) = t^alpha / Gamma(alpha+1)``
(primitive of the fractional kernel).  Two independent evaluators are
provided: real-axis quadrature after ``t = exp(-w)`` with panels that
resolve the local oscillation, and a rotated contour that runs up the
imaginary axis (where the exponential decays) and back along the circle
``|t| = omega``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import special

from ._quadrature import panel_nodes
from .errors import BranchError, BudgetExhaustedError, DomainError, ResolutionError
from .specfun import DEFAULT_BUDGET, QuadratureBudget

PLAIN = "plain"
WEIGHTED = "weighted"
FRACTIONAL = "fractional"
VARIANTS = (PLAIN, WEIGHTED, FRACTIONAL)

LAMBDA_DIRECT_MAX = 1e4
CONTOUR_MIN = 1e3


@dataclass(frozen=True)
class SymbolQuery:
    """One symbol evaluation: exponent, interval, frequency and variant.

    For the fractional variant ``beta`` holds the order ``alpha`` of ``J^alpha``.
    """

    beta: complex
    omega: float
    lam: float
    variant: str = PLAIN

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "lam", float(self.lam))
        if not 0.0 < self.omega < 1.0:
            raise DomainError(f"omega must lie in (0, 1), got {self.omega}")
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}")
        if self.variant != FRACTIONAL and self.beta.real < 0:
            raise DomainError("log-kernel symbols need Re(beta) >= 0")


def _kernel(q: SymbolQuery) -> Callable[[np.ndarray], np.ndarray]:
    """Kernel times weight, analytic in the closed quarter disk ``|t| <= omega``."""
    beta, omega = q.beta, q.omega
    if q.variant == FRACTIONAL:
        scale = complex(special.gamma(beta + 1))

        def k(t):
            return np.power(t, beta) / scale * (1.0 - t / omega)

        return k

    weighted = q.variant == WEIGHTED

    def k(t):
        mlog = -np.log(t)
        if np.any(mlog.real <= 0):
            raise BranchError("-ln t left the right half plane")
        val = np.power(mlog, -beta)
        return val * (1.0 - t / omega) if weighted else val

    return k


def _kernel_of_w(q: SymbolQuery) -> Callable[[np.ndarray], np.ndarray]:
    """Kernel times weight as a function of ``w = -ln t`` on the real axis."""
    beta, omega = q.beta, q.omega
    if q.variant == FRACTIONAL:
        scale = complex(special.gamma(beta + 1))
        return lambda w: np.exp(-beta * w) / scale * (1.0 - np.exp(-w) / omega)
    if q.variant == WEIGHTED:
        return lambda w: np.power(w, -beta) * (1.0 - np.exp(-w) / omega)
    return lambda w: np.power(w.astype(complex), -beta)


def _direct_edges(lam: float, w0: float, w1: float, refine: int) -> np.ndarray:
    # local frequency in w is |lam| e^{-w}; panels no wider than pi/4 of a period
    edges = [w0]
    w = w0
    a = abs(lam)
    while w < w1:
        step = 0.5 if a == 0 else min(0.5, (math.pi / 4) / (a * math.exp(-w)))
        w = min(w + step / refine, w1)
        edges.append(w)
    return np.asarray(edges)


def symbol_direct(q: SymbolQuery, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """Symbol by quadrature along the real ``t`` axis (``|lambda| <= 1e4``)."""
    if abs(q.lam) > LAMBDA_DIRECT_MAX:
        raise BudgetExhaustedError(
            f"|lambda|={abs(q.lam):g} exceeds the direct-quadrature limit {LAMBDA_DIRECT_MAX:g}"
        )
    if q.variant != FRACTIONAL and q.beta == 0:
        return _closed_form_beta0(q)
    kw = _kernel_of_w(q)
    lam = q.lam
    w0 = -math.log(q.omega)
    w1 = math.log(1.0 / budget.abs_tol) + 20.0

    def estimate(refine: int) -> complex:
        nodes, weights = panel_nodes(_direct_edges(lam, w0, w1, refine))
        t = np.exp(-nodes)
        return complex(np.sum(weights * t * np.exp(1j * lam * t) * kw(nodes)))

    coarse = estimate(1)
    fine = estimate(2)
    if abs(fine - coarse) > max(budget.abs_tol * 1e-2, budget.rel_tol * abs(fine)) * 10:
        raise BudgetExhaustedError(f"direct symbol unresolved at lambda={lam}")
    return fine


def _closed_form_beta0(q: SymbolQuery) -> complex:
    lam, omega = q.lam, q.omega
    if lam == 0:
        return omega if q.variant == PLAIN else omega / 2
    e = cmath.exp(1j * lam * omega)
    plain = (e - 1) / (1j * lam)
    if q.variant == PLAIN:
        return plain
    # int_0^omega e^{i lam t} t dt
    first = (omega * e) / (1j * lam) + (e - 1) / lam**2
    return plain - first / omega


def _arc_edges(lam_omega: float, refine: int) -> np.ndarray:
    cut = min(math.pi / 2, 70.0 / lam_omega) if lam_omega > 0 else math.pi / 2
    width = min(0.05, 1.0 / max(lam_omega, 1e-300)) / refine
    m = max(4, int(math.ceil(cut / width)))
    return np.linspace(0.0, cut, m + 1)


def _ray_edges(lam_omega: float, refine: int) -> np.ndarray:
    v_top = min(math.log(lam_omega), math.log(80.0))
    v_bot = -45.0
    m = max(8, int(math.ceil((v_top - v_bot) / 0.5))) * refine
    return np.linspace(v_bot, v_top, m + 1)


def contour_pieces(q: SymbolQuery, refine: int = 1) -> tuple[complex, complex]:
    """Ray integral ``int_0^{i sigma omega}`` and arc integral for ``sigma = sign(lambda)``.

    The symbol is ``ray - arc``.
    """
    lam, omega = q.lam, q.omega
    if lam == 0:
        raise DomainError("the contour method needs lambda != 0")
    sigma = 1.0 if lam > 0 else -1.0
    a = abs(lam)
    k = _kernel(q)

    nodes, weights = panel_nodes(_ray_edges(a * omega, refine))
    u = np.exp(nodes)
    t = 1j * sigma * u / a
    ray = (1j * sigma / a) * np.sum(weights * u * np.exp(-u) * k(t))

    nodes, weights = panel_nodes(_arc_edges(a * omega, refine))
    e = np.exp(1j * sigma * nodes)
    t = omega * e
    arc = np.sum(weights * np.exp(1j * lam * t) * k(t) * 1j * sigma * t)
    return complex(ray), complex(arc)


def symbol_contour(q: SymbolQuery, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """Symbol by Cauchy's theorem on the quarter disk of radius ``omega``."""
    ray, arc = contour_pieces(q, 1)
    ray2, arc2 = contour_pieces(q, 2)
    coarse, fine = ray - arc, ray2 - arc2
    if abs(fine - coarse) > max(budget.abs_tol * 1e-2, budget.rel_tol * abs(fine)) * 10:
        raise BudgetExhaustedError(f"contour symbol unresolved at lambda={q.lam}")
    return fine


def symbol(q: SymbolQuery, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """Dispatch: contour for ``|lambda| > 1e3``, real-axis quadrature otherwise."""
    if abs(q.lam) > CONTOUR_MIN:
        return symbol_contour(q, budget)
    return symbol_direct(q, budget)


def symbol_plain(beta: complex, omega: float, lam: float, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    return symbol(SymbolQuery(beta, omega, lam, PLAIN), budget)


def symbol_weighted(beta: complex, omega: float, lam: float, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """``s~_1(lambda)`` of the log kernel, weight ``1 - t/omega``."""
    return symbol(SymbolQuery(beta, omega, lam, WEIGHTED), budget)


def symbol_fractional(alpha: complex, omega: float, lam: float, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """``-i lam s~_1(lam)`` for ``J^alpha`` with ``Re alpha = 0``, ``alpha != 0``.

    ``s~_1`` is taken against the bounded primitive ``t^alpha / Gamma(alpha+1)``
    of the kernel, so no non-integrable ``t^(alpha-1)`` appears.
    """
    alpha = complex(alpha)
    if alpha.real != 0 or alpha == 0:
        raise DomainError("symbol_fractional needs a non-zero purely imaginary alpha")
    s1 = symbol(SymbolQuery(alpha, omega, lam, FRACTIONAL), budget)
    return -1j * lam * s1


def fractional_prediction(alpha: complex, lam: float) -> complex:
    """Leading term ``|lam|^(-alpha) exp(+-i alpha pi/2)`` with the sign of ``lam``."""
    alpha = complex(alpha)
    sign = 1.0 if lam > 0 else -1.0
    return abs(lam) ** (-alpha) * cmath.exp(sign * 1j * alpha * math.pi / 2)


def log_prediction(beta: complex, omega: float, lam: float, variant: str) -> complex:
    """Leading asymptotics of ``-i lam s~`` (plain) or ``-i lam s~_1`` (weighted)."""
    lead = complex(math.log(abs(lam))) ** (-complex(beta))
    if variant == PLAIN:
        return lead - cmath.exp(1j * lam * omega) * complex(-math.log(omega)) ** (-complex(beta))
    return lead


def default_lambda_sweep(k_min: int = 2, k_max: int = 13) -> np.ndarray:
    """``lambda = +-10^(k/2)``, ``k = k_min..k_max``."""
    pos = 10.0 ** (np.arange(k_min, k_max + 1) / 2.0)
    return np.concatenate([pos, -pos])


@dataclass
class AsymptoticsReport:
    """Sweep of computed ``-i lam s~`` against its predicted leading term."""

    beta: complex
    omega: float
    variant: str
    lam: np.ndarray
    value: np.ndarray
    predicted: np.ndarray
    ratio: np.ndarray = field(init=False)
    converging: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.variant == PLAIN:
            # compare the non-boundary part with its leading term
            boundary = np.exp(1j * self.lam * self.omega) * complex(-math.log(self.omega)) ** (-self.beta)
            lead = self.predicted + boundary
            self.ratio = (self.value + boundary) / lead
        else:
            self.ratio = self.value / self.predicted
        self.converging = self._trend(self.lam > 0) and self._trend(self.lam < 0)

    def _trend(self, mask: np.ndarray) -> bool:
        dev = np.abs(self.ratio[mask] - 1)
        order = np.argsort(np.abs(self.lam[mask]))
        dev = dev[order]
        if dev.size < 4:
            return True
        # low frequencies carry oscillating corrections; ask for a monotone upper half
        tail = dev[dev.size // 2 :]
        return bool(np.all(np.diff(tail) <= 1e-12))

    def rows(self) -> list[dict]:
        return [
            {
                "lambda": float(l),
                "re": float(v.real),
                "im": float(v.imag),
                "predicted_re": float(p.real),
                "predicted_im": float(p.imag),
                "ratio_re": float(r.real),
                "ratio_im": float(r.imag),
            }
            for l, v, p, r in zip(self.lam, self.value, self.predicted, self.ratio)
        ]


def symbol_asymptotics(
    beta: complex,
    omega: float,
    variant: str = WEIGHTED,
    lambdas: np.ndarray | None = None,
    budget: QuadratureBudget = DEFAULT_BUDGET,
) -> AsymptoticsReport:
    """Evaluate ``-i lam s~`` over a frequency sweep and compare with the leading term."""
    lam = default_lambda_sweep() if lambdas is None else np.asarray(lambdas, dtype=float)
    beta = complex(beta)
    values, preds = [], []
    for l in lam:
        if variant == FRACTIONAL:
            values.append(symbol_fractional(beta, omega, l, budget))
            preds.append(fractional_prediction(beta, l))
        else:
            s = symbol(SymbolQuery(beta, omega, l, variant), budget)
            values.append(-1j * l * s)
            preds.append(log_prediction(beta, omega, l, variant))
    return AsymptoticsReport(beta, omega, variant, lam, np.array(values), np.array(preds))


def symbol_action_residual(op, lam: float, budget: QuadratureBudget = DEFAULT_BUDGET) -> float:
    """``||op e^{-ix lam} - m(lam) e^{-ix lam}|| / ||e^{-ix lam}||`` on the op's grid.

    The multiplier ``m`` is ``-i lam s~_1(lam)`` of the log kernel for ``S``
    operators, the same for ``J`` with the fractional kernel, and the weighted
    symbol of the bounded kernel itself for ``T``.
    """
    from .discretize import Family

    grid = op.grid
    if grid.h * abs(lam) > math.pi / 4:
        raise ResolutionError(f"h*lambda={grid.h * abs(lam):.3f} exceeds pi/4")
    family = op.spec.family
    beta = complex(op.spec.beta) if op.spec.beta is not None else None
    if lam == 0:
        f = np.ones(grid.n, dtype=complex)
        return float(np.linalg.norm(op.matrix @ f) / np.linalg.norm(f))
    if family is Family.LOG_POWER_DERIV:
        mult = -1j * lam * symbol_weighted(beta, grid.omega, lam, budget)
    elif family is Family.FRAC_POWER:
        q = SymbolQuery(beta, grid.omega, lam, FRACTIONAL)
        mult = -1j * lam * symbol(q, budget)
    elif family is Family.LOG_POWER_PLAIN:
        mult = symbol_weighted(beta, grid.omega, lam, budget)
    else:
        raise DomainError(f"no symbol available for family {family}")
    f = np.exp(-1j * grid.nodes * lam)
    r = op.matrix @ f - mult * f
    return float(np.linalg.norm(r) / np.linalg.norm(f))
