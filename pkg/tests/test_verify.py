import math

import numpy as np
import pytest

from trivolterra.discretize import Grid, build_V, compose, identity
from trivolterra.specfun import KernelParams
from trivolterra.verify import (
    ConvergenceRecord,
    check_eigen_relation,
    check_left_inverse_R,
    check_semigroup_J,
    check_strong_identity_limit,
)

SMALL = (32, 64, 128)


def test_record_verdict_rule():
    assert ConvergenceRecord([1, 2, 4], [1.0, 0.5, 0.25]).verdict
    assert not ConvergenceRecord([1, 2, 4], [1.0, 0.8, 0.5]).verdict
    rec = ConvergenceRecord([64, 128], [1.0, 0.5])
    assert rec.order == pytest.approx(1.0)
    with pytest.raises(ValueError):
        ConvergenceRecord([1, 2], [1.0, -1.0])


def test_compose_with_identity_exact():
    g = Grid(0.5, 16)
    v = build_V(g, KernelParams(0.5))
    assert np.array_equal(compose(v, identity(g)).matrix, v.matrix)


def test_associativity_and_commutativity():
    g = Grid(0.5, 64)
    a, b, c = (build_V(g, KernelParams(x)) for x in (0.3, 0.5, 1 + 1j))
    left = compose(a, compose(b, c)).matrix
    right = compose(compose(a, b), c).matrix
    assert np.linalg.norm(left - right) <= 1e-12 * np.linalg.norm(left)
    # Toeplitz lower-triangular matrices commute exactly
    assert np.allclose(compose(a, b).matrix, compose(b, a).matrix, atol=1e-14)


def test_semigroup_J_unit_orders_exact():
    op, fn = check_semigroup_J(1.0, 1.0, n_sweep=SMALL)
    assert max(fn.residuals) < 1e-12 or fn.verdict


def test_semigroup_J_half_orders():
    op, fn = check_semigroup_J(0.5, 0.5, n_sweep=(64, 128, 256, 512))
    assert op.verdict
    # J^{1/2} y^{-1/2} = pi^{1/2}... constant Gamma(1/2)^2/Gamma(1) x^0 / Gamma(1/2)
    assert all(r1 > r2 for r1, r2 in zip(fn.residuals, fn.residuals[1:]))


def test_semigroup_J_beta_integral_smooth():
    _, fn = check_semigroup_J(1.5, 2.0, n_sweep=SMALL)
    assert fn.verdict
    assert fn.residuals[-1] < 1e-2


def test_left_inverse_constant_and_negative_control():
    rec = check_left_inverse_R(lambda x: np.ones_like(x), n_sweep=SMALL)
    assert rec.residuals[0] > rec.residuals[-1]
    bad = check_left_inverse_R(lambda x: x, C=0.0, n_sweep=SMALL)
    assert min(bad.residuals) > 1e-2 and not bad.verdict


def test_eigen_relation_m1_beta1():
    rec = check_eigen_relation(1, 1.0, n_sweep=(64, 128, 256), factor=1.2)
    assert rec.verdict
    h = 0.5 / 256
    assert rec.residuals[-1] < 2 * h * abs(math.log(h))


def test_strong_limit():
    rep = check_strong_identity_limit(n=128)
    assert rep.verdict
    assert rep.identity_deviation[1][2] < rep.identity_deviation[1][1]


def test_strong_limit_zero_function():
    g = Grid(0.5, 32)
    for b in (0.5, 0.1, 0.02):
        assert not np.any(build_V(g, KernelParams(b)).matrix @ np.zeros(32))
