r"""Special functions behind the logarithmic semigroup kernel.

The central object is

.. math::

    E_\beta(x) = \int_0^\infty \frac{e^{-Cs}\, s^{\beta-1} x^{s-1}}{\Gamma(s)}\,ds,
    \qquad 0 < x \le \omega < 1,

together with its primitive, its moment primitives and the ``beta = 0``
member :math:`E_0`.  All of them reduce to integrals of the form
:math:`\int_0^\infty s^{p-1} g(s)\,ds` with ``g`` smooth at the origin because
``1/Gamma(s) = s / Gamma(1 + s)`` supplies one power of ``s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from ._quadrature import power_weighted_integral
from .errors import DomainError, GammaPoleError

EULER_GAMMA = float(np.euler_gamma)

# Above this the factor 1/Gamma(s) is below 1e-300 and the integrand vanishes.
_S_CEILING = 170.0


@dataclass(frozen=True)
class KernelParams:
    """Parameters ``beta``, ``C`` of the kernel and the interval length ``omega``."""

    beta: complex
    C: complex = EULER_GAMMA
    omega: float = 0.5

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "C", complex(self.C))
        object.__setattr__(self, "omega", float(self.omega))
        if not 0.0 < self.omega < 1.0:
            raise DomainError(f"omega must lie in (0, 1), got {self.omega}")
        if self.C.real - math.log(self.omega) <= 0.0:
            raise DomainError(
                "Re(C) - ln(omega) must be positive for the s-integral to converge; "
                f"got C={self.C}, omega={self.omega}"
            )

    def with_beta(self, beta: complex) -> "KernelParams":
        return KernelParams(beta, self.C, self.omega)


@dataclass(frozen=True)
class QuadratureBudget:
    """Tolerances for the adaptive s-quadrature.

    ``tail_cut`` overrides the truncation point of the s-integral; by default
    it is ``(ln(1/abs_tol) + 10) / (Re C + |ln x|)`` which bounds the neglected
    tail by the geometric factor ``exp(-(Re C + |ln x|) tail_cut)``.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_panels: int = 4096
    tail_cut: float | None = None

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_panels < 16:
            raise ValueError("max_panels must be at least 16")

    def s_max(self, decay: float) -> float:
        if self.tail_cut is not None:
            return self.tail_cut
        return min((math.log(1.0 / self.abs_tol) + 10.0) / decay, _S_CEILING)


DEFAULT_BUDGET = QuadratureBudget()


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def gamma(z: complex) -> complex:
    """Euler's gamma function for complex argument."""
    z = complex(z)
    if _is_pole(z):
        raise GammaPoleError(f"Gamma has a pole at {z.real:g}")
    return complex(special.gamma(z))


def reciprocal_gamma(s):
    """``1/Gamma(s)``, entire; computed as ``s / Gamma(1 + s)`` near the origin.

    Accepts scalars or arrays; the small-``|s|`` branch never divides by a
    large Gamma value, so ``reciprocal_gamma(1e-8)`` keeps full accuracy.
    """
    s = np.asarray(s)
    near = np.abs(s) < 0.5
    out = np.where(near, s * special.rgamma(1.0 + s), special.rgamma(s))
    return out[()] if out.ndim == 0 else out


def _check_x(params: KernelParams, x: float, allow_zero: bool) -> float:
    x = float(x)
    lo_ok = x >= 0.0 if allow_zero else x > 0.0
    if not lo_ok or x > params.omega:
        interval = "[0, omega]" if allow_zero else "(0, omega]"
        raise DomainError(f"x={x} outside {interval} with omega={params.omega}")
    return x


def _kernel_integral(
    p: complex, C: complex, log_x: float, shift: float, moment: int, budget: QuadratureBudget
) -> tuple[complex, float]:
    r"""Evaluate :math:`\int_0^\infty s^{p-1} e^{-Cs} x^{s+shift} / (\Gamma(1+s)(s+moment)^{[moment>0]})\,ds`.

    ``log_x`` is ``ln x``; working with the logarithm keeps ``x**(s-1)`` from
    overflowing for tiny ``x``.
    """
    L = -log_x
    decay = C.real + L

    def g(s):
        val = special.rgamma(1.0 + s) * np.exp(-C * s + (s + shift) * log_x)
        if moment:
            val = val / (s + moment)
        return val

    g0 = math.exp(shift * log_x) / (moment if moment else 1)
    return power_weighted_integral(
        p,
        g,
        g0,
        scale=1.0 + L + abs(C),
        s_max=budget.s_max(decay),
        abs_tol=budget.abs_tol,
        rel_tol=budget.rel_tol,
        max_panels=budget.max_panels,
    )


def eval_E(
    params: KernelParams,
    x: float,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    return_error: bool = False,
):
    """Kernel value ``E_beta(x)`` for ``0 < x <= omega``, ``Re beta > 0``."""
    if params.beta.real <= 0:
        raise DomainError("E_beta needs Re(beta) > 0")
    x = _check_x(params, x, allow_zero=False)
    val, err = _kernel_integral(params.beta + 1, params.C, math.log(x), -1.0, 0, budget)
    return (val, err) if return_error else val


def eval_xE(params: KernelParams, log_x: float, budget: QuadratureBudget = DEFAULT_BUDGET) -> complex:
    """``x * E_beta(x)`` given ``ln x``; usable far below the double-precision range of x."""
    val, _ = _kernel_integral(params.beta + 1, params.C, log_x, 0.0, 0, budget)
    return val


def eval_E_primitive(
    params: KernelParams,
    x: float,
    budget: QuadratureBudget = DEFAULT_BUDGET,
    return_error: bool = False,
):
    r"""Primitive :math:`F_\beta(x) = \int_0^x E_\beta(u)\,du`.

    Swapping the order of integration gives the single integral
    :math:`\int_0^\infty e^{-Cs} s^{\beta-2} x^s / \Gamma(s)\,ds`.  For
    ``Re beta = 0`` (``beta != 0``) the same formula is read as its analytic
    continuation; ``F(0)`` is then defined as ``0`` by convention.
    """
    beta = params.beta
    if beta.real < 0 or beta == 0:
        raise DomainError("the primitive needs Re(beta) >= 0 and beta != 0")
    x = _check_x(params, x, allow_zero=True)
    if x == 0.0:
        return (0j, 0.0) if return_error else 0j
    val, err = _kernel_integral(beta, params.C, math.log(x), 0.0, 0, budget)
    return (val, err) if return_error else val


def eval_E_moment_primitive(
    params: KernelParams, x: float, budget: QuadratureBudget = DEFAULT_BUDGET
) -> complex:
    r""":math:`\int_0^x u\,E_\beta(u)\,du`; ``beta = 0`` is allowed and gives the primitive of ``u E_0(u)``."""
    beta = params.beta
    if beta.real < 0:
        raise DomainError("moment primitive needs Re(beta) >= 0")
    x = _check_x(params, x, allow_zero=True)
    if x == 0.0:
        return 0j
    val, _ = _kernel_integral(beta + 1, params.C, math.log(x), 1.0, 1, budget)
    return val


def eval_E0(C: complex, x: float, budget: QuadratureBudget = DEFAULT_BUDGET, omega: float = 0.5) -> complex:
    r""":math:`E_0(x) = \int_0^\infty e^{-Cs} s^{-1} x^{s-1}/\Gamma(s)\,ds`.

    The ``1/s`` is absorbed by ``1/Gamma(s) = s/Gamma(1+s)`` so the integrand
    is regular at the origin with limit ``1/x``.
    """
    params = KernelParams(1.0, C, omega)
    x = _check_x(params, x, allow_zero=False)
    val, _ = _kernel_integral(1.0, params.C, math.log(x), -1.0, 0, budget)
    return val


def asymptotic_E(params: KernelParams, x: float) -> complex:
    """Leading small-x term ``Gamma(beta+1) / (x |ln x|^(beta+1))``."""
    if not 0.0 < x < 1.0:
        raise DomainError("asymptotic form needs 0 < x < 1")
    L = -math.log(x)
    return complex(special.gamma(params.beta + 1)) / (x * L ** (params.beta + 1))


def norm_bound_m(params: KernelParams, budget: QuadratureBudget = DEFAULT_BUDGET) -> float:
    r"""Bound :math:`m(\beta) = \int_0^\omega |E_\beta(x)/\Gamma(\beta)|\,dx`.

    For real ``beta`` and ``C`` the kernel is positive and ``m`` is the
    primitive at ``omega``.  Otherwise ``|x E(x)|`` is integrated over
    ``L = -ln x`` and the part beyond ``L_max`` is taken from the leading
    asymptotic ``|Gamma(beta+1)| L^{-Re beta - 1}``.
    """
    beta = params.beta
    if beta.real <= 0:
        raise DomainError("m(beta) needs Re(beta) > 0")
    g_beta = abs(special.gamma(beta))
    if beta.imag == 0 and params.C.imag == 0:
        return abs(eval_E_primitive(params, params.omega, budget)) / g_beta

    L0 = -math.log(params.omega)
    L_max = 1e6

    def integrand(z):
        L = math.exp(z)
        return abs(eval_xE(params, -L, budget)) * L

    body, _ = integrate.quad(integrand, math.log(L0), math.log(L_max), limit=400, epsrel=1e-9)
    a = beta.real
    tail = abs(special.gamma(beta + 1)) * L_max ** (-a) / a
    return (body + tail) / g_beta
