import math

import numpy as np
import pytest
from scipy import integrate

from trivolterra.errors import DomainError, GammaPoleError
from trivolterra.specfun import (
    EULER_GAMMA,
    KernelParams,
    QuadratureBudget,
    asymptotic_E,
    eval_E,
    eval_E0,
    eval_E_moment_primitive,
    eval_E_primitive,
    eval_xE,
    gamma,
    norm_bound_m,
    reciprocal_gamma,
)

# Reference values below were computed once with mpmath at 30 digits
# (direct s-quadrature of the defining integrals) and frozen.
GAMMA_1PI = 0.498015668118356042713691117462 - 0.154949828301810685124955130484j
E1_C0_HALF = 1.82860175096263613420941569207
E0_C0_HALF = 2.26892347745998425801399868875
E0_G_HALF = 1.51764897768211924722061982137
E_HALF_G_QUARTER = 1.27987870853478378114188750631
E_1PI_G_TENTH = 0.75399890161532420076210775315 - 0.570720217042293808921579119777j
# int_{1e-12}^{0.5} E_1 du (mpmath) plus the series tail sum_k c_k (k-1)!/(L+C)^k
F1_G_HALF_SPLIT = 0.722707062745678622908104256577 + 0.0361174260953842191050390031046


def test_gamma_values():
    assert gamma(1) == pytest.approx(1.0, rel=1e-15)
    assert gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert abs(gamma(1 + 1j) - GAMMA_1PI) <= 1e-12 * abs(GAMMA_1PI)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(GammaPoleError):
        gamma(z)


def test_gamma_matches_mpmath_on_disk():
    mp = pytest.importorskip("mpmath")
    rng = np.random.default_rng(3)
    for _ in range(40):
        z = complex(rng.uniform(-20, 20), rng.uniform(-10, 10))
        want = complex(mp.gamma(z))
        assert abs(gamma(z) - want) <= 1e-12 * abs(want)


def test_reciprocal_gamma_near_zero():
    assert reciprocal_gamma(0.0) == 0.0
    assert reciprocal_gamma(1.0) == pytest.approx(1.0)
    assert reciprocal_gamma(1e-8) == pytest.approx(1e-8, rel=1e-6)


def test_eval_E_against_frozen_oracles():
    assert eval_E(KernelParams(1, 0.0, 0.5), 0.5).real == pytest.approx(E1_C0_HALF, rel=1e-9)
    assert eval_E(KernelParams(0.5), 0.25).real == pytest.approx(E_HALF_G_QUARTER, rel=1e-9)
    assert abs(eval_E(KernelParams(1 + 1j), 0.1) - E_1PI_G_TENTH) < 1e-9


def test_eval_E_dense_trapezoid():
    # independent brute force in numpy on [1e-6, 200]
    s = np.linspace(1e-6, 200, 2_000_001)
    from scipy.special import rgamma

    y = rgamma(s) * 0.5 ** (s - 1)
    assert eval_E(KernelParams(1, 0.0, 0.5), 0.5).real == pytest.approx(np.trapezoid(y, s), abs=1e-8)


def test_eval_E_asymptotics_small_x():
    x = 1e-10
    p = KernelParams(1.0)
    assert abs(eval_E(p, x) / asymptotic_E(p, x) - 1) <= 2 / abs(math.log(x))
    x = 1e-14
    v = eval_E(KernelParams(0.5), x) * x * abs(math.log(x)) ** 1.5 / gamma(1.5)
    assert abs(v - 1) <= 0.05


def test_asymptotic_E_closed_form():
    p = KernelParams(1.0)
    assert asymptotic_E(p, math.exp(-10)).real == pytest.approx(math.exp(10) / 100)


def test_domain_errors():
    p = KernelParams(1.0)
    for x in (0.0, -0.1, 0.6):
        with pytest.raises(DomainError):
            eval_E(p, x)
    with pytest.raises(DomainError):
        KernelParams(1.0, omega=1.5)
    with pytest.raises(DomainError):
        KernelParams(1.0, C=-2.0, omega=0.5)
    with pytest.raises(DomainError):
        eval_E(KernelParams(-0.5), 0.1)


def test_primitive_zero_and_split_oracle():
    p = KernelParams(1.0)
    assert eval_E_primitive(p, 0.0) == 0
    assert eval_E_primitive(p, 0.5).real == pytest.approx(F1_G_HALF_SPLIT, abs=1e-9)


def test_primitive_monotone_real_parameters():
    p = KernelParams(0.7)
    xs = np.linspace(0.01, 0.5, 15)
    vals = [eval_E_primitive(p, x).real for x in xs]
    assert np.all(np.diff(vals) > 0)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1 + 1j])
def test_primitive_derivative_matches_kernel(beta):
    p = KernelParams(beta)
    for x in np.linspace(0.05, 0.45, 5):
        d = 1e-5
        fd = (eval_E_primitive(p, x + d) - eval_E_primitive(p, x - d)) / (2 * d)
        e = eval_E(p, x)
        assert abs(fd - e) <= 1e-4 * abs(e)


def test_moment_primitive_against_quadrature():
    p = KernelParams(0.8)
    want, _ = integrate.quad(lambda u: u * eval_E(p, u).real, 0, 0.3, limit=200)
    assert eval_E_moment_primitive(p, 0.3).real == pytest.approx(want, rel=1e-7)


def test_E0_values_and_asymptotics():
    assert eval_E0(0.0, 0.5).real == pytest.approx(E0_C0_HALF, rel=1e-9)
    assert eval_E0(EULER_GAMMA, 0.5).real == pytest.approx(E0_G_HALF, rel=1e-9)
    x = 1e-12
    assert abs(x * eval_E0(EULER_GAMMA, x) * abs(math.log(x)) - 1) <= 0.1


def test_xE_far_below_double_range():
    # x = e^{-2000} underflows but x E(x) ~ Gamma(2)/L^2 does not
    L = 2000.0
    v = eval_xE(KernelParams(1.0), -L)
    assert abs(v * L**2 - 1) < 5 / L


def test_norm_bound():
    m1 = norm_bound_m(KernelParams(1.0))
    assert 0 < m1 < np.inf
    assert m1 >= abs(eval_E_primitive(KernelParams(1.0), 0.5))
    mc = norm_bound_m(KernelParams(1 + 1j))
    assert mc >= abs(eval_E_primitive(KernelParams(1 + 1j), 0.5) / gamma(1 + 1j))


def test_budget_validation():
    with pytest.raises(ValueError):
        QuadratureBudget(abs_tol=0)
    assert QuadratureBudget(tail_cut=12.0).s_max(1.0) == 12.0
