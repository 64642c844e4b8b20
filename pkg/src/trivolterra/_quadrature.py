"""Composite Gauss-Legendre machinery used by the kernel and symbol evaluators."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import BudgetExhaustedError

GL_ORDER = 20


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def panel_nodes(edges: np.ndarray, order: int = GL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """Flattened nodes and weights of a composite Gauss-Legendre rule on ``edges``."""
    x, w = _gauss_legendre(order)
    a = edges[:-1, None]
    b = edges[1:, None]
    half = 0.5 * (b - a)
    nodes = (0.5 * (a + b) + half * x).ravel()
    weights = (half * w).ravel()
    return nodes, weights


def composite(
    func: Callable[[np.ndarray], np.ndarray], edges: np.ndarray, order: int = GL_ORDER
) -> complex:
    nodes, weights = panel_nodes(edges, order)
    return complex(np.sum(weights * func(nodes)))


def refine_until(
    estimate: Callable[[int], complex],
    start: int,
    abs_tol: float,
    rel_tol: float,
    max_panels: int,
) -> tuple[complex, float]:
    """Double the panel count until two successive estimates agree.

    ``estimate(m)`` must return the quadrature value with ``m`` panels.  The
    returned error is the difference between the last two estimates, which is
    a (pessimistic) bound for the finer one.
    """
    m = start
    coarse = estimate(m)
    while True:
        m *= 2
        fine = estimate(m)
        err = abs(fine - coarse)
        if err <= max(abs_tol, rel_tol * abs(fine)):
            return fine, err
        if 2 * m > max_panels:
            raise BudgetExhaustedError(
                f"quadrature did not converge with {m} panels "
                f"(last change {err:.3e}, value {fine:.6e})"
            )
        coarse = fine


def power_weighted_integral(
    p: complex,
    g: Callable[[np.ndarray], np.ndarray],
    g0: complex,
    scale: float,
    s_max: float,
    abs_tol: float,
    rel_tol: float,
    max_panels: int,
) -> tuple[complex, float]:
    r"""Integrate :math:`\int_0^\infty s^{p-1} g(s)\,ds` for smooth ``g`` with ``g(0) = g0``.

    The range is split at ``s0 = min(1, 1/scale)``.  The head uses the
    subtraction :math:`g0\,s_0^p/p + \int_0^{s_0} s^{p-1}(g-g0)\,ds`, which is
    also the analytic continuation of the integral to ``Re p > -1`` (``p != 0``);
    it is evaluated after ``s = s0 e^{-w}``.  The body is integrated in
    ``v = ln s`` up to ``s_max``, beyond which ``g`` is assumed negligible.
    """
    p = complex(p)
    if p == 0:
        raise ValueError("exponent p must be non-zero")
    s0 = min(1.0, 1.0 / scale)
    w_max = (np.log(1.0 / abs_tol) + 10.0) / (p.real + 1.0)

    def head(m: int) -> complex:
        def f(w):
            s = s0 * np.exp(-w)
            return s**p * (g(s) - g0)

        return composite(f, np.linspace(0.0, w_max, m + 1)) + g0 * s0**p / p

    def body(m: int) -> complex:
        if s_max <= s0:
            return 0.0

        def f(v):
            s = np.exp(v)
            return s**p * g(s)

        return composite(f, np.linspace(np.log(s0), np.log(s_max), m + 1))

    h_val, h_err = refine_until(head, 4, abs_tol / 2, rel_tol, max_panels)
    b_val, b_err = refine_until(body, 8, abs_tol / 2, rel_tol, max_panels)
    return h_val + b_val, h_err + b_err
