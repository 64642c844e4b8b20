"""Dense lower-triangular realizations of the operators on a uniform midpoint grid.

Every convolution-type operator ``f -> int_0^x k(x - t) f(t) dt`` is
discretized by product integration: ``f`` is taken piecewise constant on
the cells ``[(j-1)h, jh]`` and the kernel is integrated exactly over each
cell through its primitive ``P``.  Collocating at the midpoints
``x_i = (i - 1/2)h`` gives the Toeplitz entries

    M[i, j] = P((i - j + 1/2) h) - P((i - j - 1/2) h)   (j < i)
    M[i, i] = P(h/2) - P(0)

so only ``n`` primitive evaluations are needed per operator, and the kernel
is never evaluated at its singularity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import integrate, linalg, special

from .errors import DomainError, GridMismatchError, SingularDiagonalError
from .specfun import (
    DEFAULT_BUDGET,
    KernelParams,
    QuadratureBudget,
    eval_E_primitive,
)


@dataclass(frozen=True)
class Grid:
    """Uniform midpoint grid on ``(0, omega)`` with ``n`` cells."""

    omega: float
    n: int

    def __post_init__(self) -> None:
        if not 0.0 < self.omega < 1.0:
            raise DomainError(f"omega must lie in (0, 1), got {self.omega}")
        if self.n < 2:
            raise DomainError(f"need at least two cells, got n={self.n}")

    @property
    def h(self) -> float:
        return self.omega / self.n

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(self.n) + 0.5) * self.h

    def sample(self, f: Callable[[np.ndarray], np.ndarray]) -> "GridFn":
        return GridFn(self, np.asarray(f(self.nodes), dtype=complex))


@dataclass(frozen=True, eq=False)
class GridFn:
    """Samples ``f(x_i)`` of a function on a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise GridMismatchError(
                f"expected {self.grid.n} samples, got shape {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def norm(self) -> float:
        """Discrete L2(0, omega) norm."""
        return float(np.linalg.norm(self.values) * math.sqrt(self.grid.h))


class Family(enum.Enum):
    LOG_SEMIGROUP = "log-semigroup"
    FRAC_POWER = "frac-power"
    LOG_POWER_DERIV = "log-power-deriv"
    LOG_POWER_PLAIN = "log-power-plain"
    PLAIN_LOG = "plain-log"
    MULTIPLICATION = "multiplication"
    CUSTOM = "custom"


@dataclass(frozen=True)
class KernelSpec:
    """Provenance tag: which kernel family built an operator, with its parameters."""

    family: Family
    beta: complex | None = None
    C: complex | None = None
    extra: tuple = ()

    def as_dict(self) -> dict:
        def enc(z):
            if z is None:
                return None
            z = complex(z)
            return [z.real, z.imag]

        return {"family": self.family.value, "beta": enc(self.beta), "C": enc(self.C)}


# Kinds whose matrices are lower triangular by construction.
TRIANGULAR_KINDS = frozenset({"V", "J", "S", "T", "R", "Q", "A", "A2", "B", "K"})


@dataclass(frozen=True, eq=False)
class TriOp:
    """Dense matrix of an operator on a grid, tagged with its provenance."""

    grid: Grid
    matrix: np.ndarray
    spec: KernelSpec = field(default_factory=lambda: KernelSpec(Family.CUSTOM))
    kind: str = "custom"

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        n = self.grid.n
        if m.shape != (n, n):
            raise GridMismatchError(f"matrix shape {m.shape} does not match n={n}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if self.kind in TRIANGULAR_KINDS and np.any(np.triu(m, 1) != 0):
            raise AssertionError(f"operator of kind {self.kind} has entries above the diagonal")

    @property
    def n(self) -> int:
        return self.grid.n

    def __matmul__(self, other):
        if isinstance(other, TriOp):
            return compose(self, other)
        if isinstance(other, GridFn):
            return apply(self, other)
        return NotImplemented

    def is_lower_triangular(self) -> bool:
        return not np.any(np.triu(self.matrix, 1) != 0)


def _check_same_grid(a: Grid, b: Grid) -> None:
    if a != b:
        raise GridMismatchError(f"grids differ: {a} vs {b}")


def toeplitz_from_primitive(grid: Grid, primitive: Callable[[float], complex]) -> np.ndarray:
    """Lower-triangular Toeplitz product-integration matrix from a kernel primitive.

    ``primitive(0)`` is never called; it is taken to be zero.
    """
    h = grid.h
    values = np.array([primitive((k + 0.5) * h) for k in range(grid.n)], dtype=complex)
    col = np.empty(grid.n, dtype=complex)
    col[0] = values[0]
    col[1:] = np.diff(values)
    return linalg.toeplitz(col, np.zeros(grid.n, dtype=complex))


def build_V(grid: Grid, params: KernelParams, budget: QuadratureBudget = DEFAULT_BUDGET) -> TriOp:
    """Semigroup operator ``V_beta``; ``Re beta = 0`` uses the continued primitive."""
    beta = params.beta
    if beta.real < 0 or beta == 0:
        raise DomainError("V_beta needs Re(beta) >= 0, beta != 0")
    if abs(params.omega - grid.omega) > 1e-15:
        raise GridMismatchError("params.omega differs from grid.omega")
    g = complex(special.gamma(beta))
    col = _cached_V_column(grid, params, budget) / g
    m = linalg.toeplitz(col, np.zeros(grid.n, dtype=complex))
    if col[0] == 0:
        raise SingularDiagonalError("V_beta has a vanishing diagonal entry")
    return TriOp(grid, m, KernelSpec(Family.LOG_SEMIGROUP, beta, params.C), "V")


@lru_cache(maxsize=64)
def _cached_V_column(grid: Grid, params: KernelParams, budget: QuadratureBudget) -> np.ndarray:
    h = grid.h
    values = np.array(
        [eval_E_primitive(params, (k + 0.5) * h, budget) for k in range(grid.n)]
    )
    col = np.empty(grid.n, dtype=complex)
    col[0] = values[0]
    col[1:] = np.diff(values)
    col.setflags(write=False)
    return col


def _power(u: float, beta: complex) -> complex:
    # 0**beta is read as 0 for every admissible beta, including Re beta = 0.
    return 0j if u == 0.0 else complex(u) ** beta


def build_J(grid: Grid, beta: complex) -> TriOp:
    """Riemann-Liouville integral ``J^beta`` from the exact primitive ``u^beta / Gamma(beta+1)``."""
    beta = complex(beta)
    if beta == 0:
        raise DomainError("J^beta is not defined by this formula at beta = 0")
    if beta.real < 0:
        raise DomainError("J^beta needs Re(beta) >= 0; use invert_triangular for negative orders")
    scale = complex(special.gamma(beta + 1))
    m = toeplitz_from_primitive(grid, lambda u: _power(u, beta) / scale)
    return TriOp(grid, m, KernelSpec(Family.FRAC_POWER, beta), "J")


def log_power(u: float, beta: complex) -> complex:
    """``|ln u|^(-beta)`` on ``(0, 1)``; zero at ``u = 0``."""
    if u == 0.0:
        return 0j
    return complex(-math.log(u)) ** (-beta)


def build_S(grid: Grid, beta: complex) -> TriOp:
    """``S_beta f = d/dx int_0^x f(t) |ln(x-t)|^(-beta) dt`` with the exact primitive ``|ln u|^(-beta)``."""
    beta = complex(beta)
    if beta.real < 0:
        raise DomainError("S_beta needs Re(beta) >= 0")
    m = toeplitz_from_primitive(grid, lambda u: log_power(u, beta))
    return TriOp(grid, m, KernelSpec(Family.LOG_POWER_DERIV, beta), "S")


@lru_cache(maxsize=None)
def log_power_primitive(x: float, beta: float) -> float:
    """``R(x) = int_0^x |ln u|^(-beta) du`` by adaptive quadrature (bounded integrand)."""
    if x <= 0.0:
        return 0.0
    # u = exp(-w): R(x) = int_{|ln x|}^inf w^(-beta) e^(-w) dw
    L = -math.log(x)
    val, _ = integrate.quad(lambda w: w ** (-beta) * math.exp(-w), L, np.inf, epsabs=1e-15, epsrel=1e-13, limit=200)
    return val


def build_T(grid: Grid, beta: float) -> TriOp:
    """``T_beta f = int_0^x f(t) |ln(x-t)|^(-beta) dt`` (bounded kernel)."""
    beta = float(beta)
    if beta <= 0:
        raise DomainError("T_beta needs beta > 0")
    m = toeplitz_from_primitive(grid, lambda u: log_power_primitive(u, beta))
    return TriOp(grid, m, KernelSpec(Family.LOG_POWER_PLAIN, beta), "T")


def _neg_log_primitive(u: float) -> float:
    return 0.0 if u == 0.0 else -(u * math.log(u) - u)


def backward_difference(grid: Grid) -> np.ndarray:
    """Causal derivative at the nodes: second-order backward stencil, first-order in row 2, zero in row 1."""
    n, h = grid.n, grid.h
    d = np.zeros((n, n))
    d[1, 1], d[1, 0] = 1.0 / h, -1.0 / h
    idx = np.arange(2, n)
    d[idx, idx] = 1.5 / h
    d[idx, idx - 1] = -2.0 / h
    d[idx, idx - 2] = 0.5 / h
    return d


def build_R(grid: Grid) -> TriOp:
    """``R f = -int_0^x f'(t) ln(x - t) dt``: log-kernel product integration after a causal derivative."""
    k = toeplitz_from_primitive(grid, _neg_log_primitive)
    m = k @ backward_difference(grid)
    return TriOp(grid, m, KernelSpec(Family.PLAIN_LOG), "R")


def build_Q(grid: Grid) -> TriOp:
    """Multiplication by ``x``."""
    return TriOp(grid, np.diag(grid.nodes), KernelSpec(Family.MULTIPLICATION), "Q")


def identity(grid: Grid) -> TriOp:
    return TriOp(grid, np.eye(grid.n), KernelSpec(Family.CUSTOM), "custom")


def compose(a: TriOp, b: TriOp) -> TriOp:
    """Operator product ``a b``."""
    _check_same_grid(a.grid, b.grid)
    return TriOp(a.grid, a.matrix @ b.matrix, KernelSpec(Family.CUSTOM), "custom")


def apply(a: TriOp, f: GridFn) -> GridFn:
    _check_same_grid(a.grid, f.grid)
    return GridFn(a.grid, a.matrix @ f.values)


def invert_triangular(a: TriOp) -> TriOp:
    """Inverse of a lower-triangular operator by forward substitution."""
    if not a.is_lower_triangular():
        raise ValueError("invert_triangular needs a lower-triangular operator")
    diag = np.diag(a.matrix)
    if np.any(diag == 0):
        raise SingularDiagonalError("zero on the diagonal")
    inv = linalg.solve_triangular(a.matrix, np.eye(a.n, dtype=complex), lower=True)
    return TriOp(a.grid, inv, KernelSpec(Family.CUSTOM), "custom")


def adjoint(a: TriOp) -> TriOp:
    return TriOp(a.grid, a.matrix.conj().T, a.spec, "custom")
