"""Triangular Friedrichs models: multiplication by ``x`` plus a Volterra perturbation.

Each model can be built two ways.  The *kernel* construction discretizes the
closed-form kernel directly; the *conjugation* construction forms
``W^{-1} Q W`` from the discretized similarity ``W`` (``V_alpha`` or
``J^alpha``).  Agreement of the two as ``n`` grows is the discrete face of
the similarity to the self-adjoint operator ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

from .discretize import (
    Family,
    Grid,
    KernelSpec,
    TriOp,
    build_J,
    build_Q,
    build_V,
    compose,
    invert_triangular,
    toeplitz_from_primitive,
)
from .errors import DomainError, SingularDiagonalError
from .specfun import (
    DEFAULT_BUDGET,
    EULER_GAMMA,
    KernelParams,
    QuadratureBudget,
    eval_E_moment_primitive,
    eval_E_primitive,
)

KERNEL = "kernel-formula"
CONJUGATION = "conjugation"


@dataclass(frozen=True, eq=False)
class FriedrichsOp:
    """A Friedrichs-model operator ``Q + K`` on a grid.

    ``integral`` is the lower-triangular matrix of the perturbation (``None``
    for the conjugation construction, where the split is not available).
    """

    base: TriOp
    alpha: complex
    beta: complex | None
    construction: str
    integral: np.ndarray | None = None

    @property
    def grid(self) -> Grid:
        return self.base.grid

    @property
    def matrix(self) -> np.ndarray:
        return self.base.matrix

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.base.matrix)


def _require_imaginary(alpha: complex) -> complex:
    alpha = complex(alpha)
    if alpha.real != 0:
        raise DomainError(f"alpha must be purely imaginary, got {alpha}")
    return alpha


def build_A_two_param(
    alpha: complex,
    beta: complex,
    grid: Grid,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    C: complex = EULER_GAMMA,
) -> FriedrichsOp:
    """``A_{alpha,beta} = V_beta Q V_alpha`` from its closed-form kernel.

    The kernel is ``E_g(x-u) u / Gamma(g) + alpha (x-u) E_g(x-u) / Gamma(g+1)``
    with ``g = alpha + beta``.  Writing ``u = x_i - v`` splits each cell
    integral into the primitive ``F_g`` and the first-moment primitive ``H_g``:
    ``M = diag(x) T_F / Gamma(g) + T_H (alpha/Gamma(g+1) - 1/Gamma(g))``.
    """
    alpha, beta = complex(alpha), complex(beta)
    if alpha.real <= 0 or beta.real <= 0:
        raise DomainError("two-parameter model needs Re(alpha), Re(beta) > 0")
    g = alpha + beta
    params = KernelParams(g, C, grid.omega)
    t_f = toeplitz_from_primitive(grid, lambda v: eval_E_primitive(params, v, budget))
    t_h = toeplitz_from_primitive(grid, lambda v: eval_E_moment_primitive(params, v, budget))
    gam_g = complex(special.gamma(g))
    gam_g1 = complex(special.gamma(g + 1))
    m = grid.nodes[:, None] * t_f / gam_g + t_h * (alpha / gam_g1 - 1.0 / gam_g)
    base = TriOp(grid, m, KernelSpec(Family.CUSTOM, g, C, ("A2", alpha, beta)), "A2")
    return FriedrichsOp(base, alpha, beta, KERNEL, integral=m)


def two_param_terms(alpha, beta, grid, budget=DEFAULT_BUDGET, C=EULER_GAMMA):
    """The ``u``-weighted and ``(x-u)``-weighted pieces of the two-parameter kernel, separately."""
    alpha, beta = complex(alpha), complex(beta)
    g = alpha + beta
    params = KernelParams(g, C, grid.omega)
    t_f = toeplitz_from_primitive(grid, lambda v: eval_E_primitive(params, v, budget))
    t_h = toeplitz_from_primitive(grid, lambda v: eval_E_moment_primitive(params, v, budget))
    first = (grid.nodes[:, None] * t_f - t_h) / complex(special.gamma(g))
    second = alpha * t_h / complex(special.gamma(g + 1))
    return first, second


def compose_two_param(alpha, beta, grid, budget=DEFAULT_BUDGET, C=EULER_GAMMA) -> TriOp:
    """``V_beta Q V_alpha`` as a product of discretized factors."""
    v_a = build_V(grid, KernelParams(alpha, C, grid.omega), budget)
    v_b = build_V(grid, KernelParams(beta, C, grid.omega), budget)
    return compose(v_b, compose(build_Q(grid), v_a))


def build_A(
    alpha: complex,
    grid: Grid,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    C: complex = EULER_GAMMA,
) -> FriedrichsOp:
    """``A_alpha f = x f + alpha int_0^x (x-y) E_0(x-y) f(y) dy`` from the kernel formula."""
    alpha = _require_imaginary(alpha)
    q = build_Q(grid).matrix
    if alpha == 0:
        return FriedrichsOp(TriOp(grid, q, KernelSpec(Family.MULTIPLICATION), "A"), alpha, None, KERNEL, np.zeros_like(q))
    params = KernelParams(0j, C, grid.omega)
    k = alpha * toeplitz_from_primitive(grid, lambda v: eval_E_moment_primitive(params, v, budget))
    base = TriOp(grid, q + k, KernelSpec(Family.CUSTOM, alpha, C, ("A",)), "A")
    return FriedrichsOp(base, alpha, None, KERNEL, integral=k)


def build_B(alpha: complex, grid: Grid) -> FriedrichsOp:
    """``B_alpha f = x f + alpha int_0^x f(y) dy`` by product integration of the unit kernel."""
    alpha = _require_imaginary(alpha)
    q = build_Q(grid).matrix
    k = alpha * toeplitz_from_primitive(grid, lambda v: v)
    base = TriOp(grid, q + k, KernelSpec(Family.CUSTOM, alpha, None, ("B",)), "B")
    return FriedrichsOp(base, alpha, None, KERNEL, integral=k)


def similarity_V(alpha: complex, grid: Grid, budget=DEFAULT_BUDGET, C=EULER_GAMMA) -> TriOp:
    """``V_alpha`` at ``Re alpha = 0`` through the continued primitive; diagonal asserted non-zero."""
    v = build_V(grid, KernelParams(_require_imaginary(alpha), C, grid.omega), budget)
    if np.any(np.diag(v.matrix) == 0):
        raise SingularDiagonalError("V_alpha diagonal vanished")
    return v


def conjugate_A(alpha: complex, grid: Grid, budget=DEFAULT_BUDGET, C=EULER_GAMMA) -> FriedrichsOp:
    """``V_alpha^{-1} Q V_alpha``."""
    v = similarity_V(alpha, grid, budget, C)
    m = compose(invert_triangular(v), compose(build_Q(grid), v))
    return FriedrichsOp(TriOp(grid, m.matrix, m.spec, "A"), complex(alpha), None, CONJUGATION)


def conjugate_B(alpha: complex, grid: Grid) -> FriedrichsOp:
    """``(J^alpha)^{-1} Q J^alpha``."""
    j = build_J(grid, _require_imaginary(alpha))
    m = compose(invert_triangular(j), compose(build_Q(grid), j))
    return FriedrichsOp(TriOp(grid, m.matrix, m.spec, "B"), complex(alpha), None, CONJUGATION)


def hausdorff(a: np.ndarray, b: np.ndarray) -> float:
    """Hausdorff distance between two finite point sets in the complex plane."""
    d = np.abs(np.asarray(a)[:, None] - np.asarray(b)[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def spectrum_distance(op: FriedrichsOp) -> float:
    """Hausdorff distance between the computed eigenvalues and the grid nodes."""
    return hausdorff(op.eigenvalues(), op.grid.nodes)


def relative_frobenius(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))
