"""Singular-value and spectrum probes for the discretized operators.

Spectra of non-normal discretizations need not converge to the continuum
spectrum, so the circle probe reports a trend and is a heuristic only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import integrate, linalg

from .discretize import Grid, GridFn, TriOp, build_S, build_T, build_V, log_power
from .errors import DomainError
from .specfun import DEFAULT_BUDGET, EULER_GAMMA, KernelParams, QuadratureBudget
from .symbols import symbol_weighted

HEURISTIC_NOTE = "heuristic: discrete spectra of non-normal operators may pollute; trend only"


@dataclass
class SpectralReport:
    """Outcome of a probe: singular values (descending), summaries and verdicts."""

    n: int | list
    singular_values: np.ndarray | None = None
    partial_sums: np.ndarray | None = None
    frobenius: float | list | None = None
    verdicts: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    note: str = ""

    @property
    def verdict(self) -> bool:
        return all(self.verdicts.values())


def singular_values(op: TriOp | np.ndarray) -> np.ndarray:
    """Singular values in decreasing order."""
    m = op.matrix if isinstance(op, TriOp) else np.asarray(op)
    return linalg.svdvals(m)


def svd_reconstruction_error(op: TriOp) -> float:
    """``||M - U diag(s) W*||_F / ||M||_F``."""
    u, s, wh = linalg.svd(op.matrix)
    return float(np.linalg.norm(op.matrix - (u * s) @ wh) / np.linalg.norm(op.matrix))


def hs_norm_squared(beta: float, omega: float) -> float:
    """Continuum Hilbert-Schmidt norm squared of ``T_beta``: ``int_0^omega (omega-u)|ln u|^(-2 beta) du``."""
    val, _ = integrate.quad(lambda u: (omega - u) * (-math.log(u)) ** (-2 * beta), 0.0, omega, limit=200)
    return val


def diagonal_terms(beta: float, omega: float, ms: np.ndarray, orthonormal: bool, budget=DEFAULT_BUDGET) -> np.ndarray:
    """``|(T_beta phi_m, phi_m)|`` for plain exponentials ``e^{ixm/omega}`` or the orthonormal ``e^{2 pi i x m/omega}/sqrt(omega)``.

    Both reduce to ``omega * s1(-lam)`` with the weighted symbol ``s1``
    (divided by ``omega`` in the orthonormal case).
    """
    scale = 2 * math.pi if orthonormal else 1.0
    vals = np.array([symbol_weighted(beta, omega, -scale * m / omega, budget) for m in ms])
    return np.abs(vals) if orthonormal else omega * np.abs(vals)


def hs_trace_probe(
    beta: float,
    omega: float = 0.5,
    n_sweep: Sequence[int] = (128, 256, 512),
    M_values: Sequence[int] = (100, 1000, 10000),
    budget: QuadratureBudget = DEFAULT_BUDGET,
) -> SpectralReport:
    """Hilbert-Schmidt versus trace-class diagnostics for ``T_beta``.

    Frobenius norms must settle (within 5% between the last two sizes),
    singular-value sums must keep growing (at least 10% between the last two
    sizes) and the diagonal sums over exponentials must increase with ``M``.
    """
    if beta <= 0:
        raise DomainError("beta must be positive")
    fro, trace, svals = [], [], None
    for n in n_sweep:
        s = singular_values(build_T(Grid(omega, n), beta))
        fro.append(float(np.sqrt(np.sum(s**2))))
        trace.append(float(np.sum(s)))
        svals = s
    ms = np.arange(1, max(M_values) + 1)
    terms = diagonal_terms(beta, omega, ms, orthonormal=False, budget=budget)
    terms_on = diagonal_terms(beta, omega, ms, orthonormal=True, budget=budget)
    diag_sums = [float(terms[:M].sum()) for M in M_values]
    diag_sums_on = [float(terms_on[:M].sum()) for M in M_values]

    gaps = np.abs(np.diff(fro))
    verdicts = {
        "frobenius_stable": abs(fro[-1] - fro[-2]) / fro[-2] <= 0.05,
        "trace_growing": (trace[-1] - trace[-2]) / trace[-2] >= 0.10,
        "diagonal_sums_increasing": bool(np.all(np.diff(diag_sums) > 0)),
    }
    data = {
        "n_sweep": list(n_sweep),
        "frobenius_gap_ratios": list(gaps[:-1] / gaps[1:]) if len(gaps) > 1 else [],
        "trace_sums": trace,
        "M_values": list(M_values),
        "diagonal_sums": diag_sums,
        "diagonal_sums_orthonormal": diag_sums_on,
        "hs_norm_continuum": math.sqrt(hs_norm_squared(beta, omega)),
    }
    if beta > 1:
        data["warning"] = "beta > 1: the diagonal-sum divergence is untested"
    return SpectralReport(
        n=list(n_sweep),
        singular_values=svals,
        partial_sums=np.cumsum(svals),
        frobenius=fro,
        verdicts=verdicts,
        data=data,
    )


def numerical_range_distance(m: np.ndarray, z: complex, n_angles: int = 64) -> float:
    """Lower bound on ``dist(z, W(M))`` from supporting half-planes of the numerical range."""
    best = 0.0
    for th in np.linspace(0, 2 * np.pi, n_angles, endpoint=False):
        rot = np.exp(-1j * th) * m
        herm = 0.5 * (rot + rot.conj().T)
        support = linalg.eigvalsh(herm)[-1]
        best = max(best, float((np.exp(-1j * th) * z).real - support))
    return best


def _circle_operator(kind: str, beta: complex, grid: Grid, C: complex) -> TriOp:
    if kind == "S":
        return build_S(grid, beta)
    if kind == "V":
        return build_V(grid, KernelParams(beta, C, grid.omega))
    raise DomainError(f"unit-circle probe supports S and V, not {kind}")


def unit_circle_probe(
    beta: complex,
    z: complex = 1.0,
    kind: str = "S",
    omega: float = 0.5,
    n_sweep: Sequence[int] = (128, 256, 512, 1024),
    C: complex = EULER_GAMMA,
    threshold: float = 0.2,
) -> SpectralReport:
    """Smallest singular value of ``op - z I`` along a grid sweep.

    On the unit circle the verdict asks for a non-increasing sequence ending
    below ``threshold``.  Off the circle the report also carries the
    numerical-range lower bound, which ``sigma_min`` can never undercut.
    """
    beta = complex(beta)
    if beta.real != 0:
        raise DomainError("the circle probe is for purely imaginary beta")
    smin, bounds = [], []
    for n in n_sweep:
        m = _circle_operator(kind, beta, Grid(omega, n), C).matrix
        shifted = m - z * np.eye(n)
        smin.append(float(linalg.svdvals(shifted)[-1]))
        bounds.append(numerical_range_distance(m, z))
    on_circle = abs(abs(z) - 1.0) < 1e-12
    verdicts = {"sigma_min_above_range_bound": all(s >= b - 1e-10 for s, b in zip(smin, bounds))}
    if on_circle:
        verdicts["consistent_with_spectrum"] = bool(
            np.all(np.diff(smin) <= 1e-12) and smin[-1] < threshold
        )
    return SpectralReport(
        n=list(n_sweep),
        verdicts=verdicts,
        data={"sigma_min": smin, "range_bound": bounds, "z": [complex(z).real, complex(z).imag], "op": kind},
        note=HEURISTIC_NOTE,
    )


def leading_zeros(values: np.ndarray) -> int:
    nz = np.flatnonzero(values)
    return len(values) if nz.size == 0 else int(nz[0])


def krylov_dimension(m: np.ndarray, f: np.ndarray, tol: float = 1e-10) -> int:
    """Dimension of ``span{f, Mf, M^2 f, ...}`` by Arnoldi with re-orthogonalization.

    Breakdown is declared when the new direction falls below ``tol * ||M||_2``.
    """
    if not np.any(f):
        return 0
    n = len(f)
    scale = max(np.linalg.norm(m, 2), 1.0)
    q = np.zeros((n, n), dtype=complex)
    q[:, 0] = f / np.linalg.norm(f)
    for j in range(1, n):
        w = m @ q[:, j - 1]
        for _ in range(2):
            w = w - q[:, :j] @ (q[:, :j].conj().T @ w)
        nw = np.linalg.norm(w)
        if nw <= tol * scale:
            return j
        q[:, j] = w / nw
    return n


def krylov_svd_rank(m: np.ndarray, f: np.ndarray, tol: float = 1e-10) -> int:
    """Numerical rank of the raw Krylov matrix ``[f, Mf, ..., M^{n-1} f]`` (columns normalized)."""
    n = len(f)
    cols = np.empty((n, n), dtype=complex)
    v = np.asarray(f, dtype=complex)
    for j in range(n):
        nv = np.linalg.norm(v)
        cols[:, j] = v / nv if nv else v
        v = m @ cols[:, j]
    s = linalg.svdvals(cols)
    return int(np.sum(s > tol * s[0])) if s[0] > 0 else 0


def krylov_completeness_probe(
    beta: float,
    f: GridFn,
    C: complex = EULER_GAMMA,
    tol: float = 1e-10,
) -> SpectralReport:
    """Cyclic subspace of ``V_beta`` generated by ``f``; completeness in ``H_kh`` means dimension ``n - k``."""
    grid = f.grid
    if grid.n > 64:
        raise DomainError("Krylov probe is limited to n <= 64")
    if not 0 < float(np.real(beta)) <= 1 or complex(beta).imag != 0:
        raise DomainError("beta must be real in (0, 1]")
    m = build_V(grid, KernelParams(beta, C, grid.omega)).matrix
    vals = np.asarray(f.values)
    k = leading_zeros(vals)
    dim = krylov_dimension(m, vals, tol)
    expected = 0 if k == grid.n else grid.n - k
    return SpectralReport(
        n=grid.n,
        verdicts={"rank_matches": dim == expected},
        data={"dimension": dim, "expected": expected, "leading_zeros": k, "svd_rank": krylov_svd_rank(m, vals, tol)},
    )


def invariant_subspace_check(op: TriOp | np.ndarray) -> bool:
    """Exact zeros above the diagonal, and every ``H_k`` (``k`` leading zeros) mapped into itself."""
    m = op.matrix if isinstance(op, TriOp) else np.asarray(op)
    if np.any(np.triu(m, 1) != 0):
        return False
    n = m.shape[0]
    probe = np.arange(1, n + 1, dtype=float)
    for k in (1, n // 4, n // 2, n - 1):
        v = probe.copy()
        v[:k] = 0.0
        if np.any((m @ v)[:k] != 0):
            return False
    return True


def resolvable_circle_point(beta: complex, lam: float) -> complex:
    """Unit-circle point ``(ln|lam|)^(-beta)`` reached by the high-frequency symbol at ``lam``.

    For ``Re beta = 0`` the symbol phase drifts like ``-Im(beta) ln ln|lam|``,
    so a point such as ``z = 1`` is only approached at astronomically large
    frequencies; this gives circle points that a grid can actually see.
    """
    z = complex(math.log(abs(lam))) ** (-complex(beta))
    return z if lam > 0 else z.conjugate()
