import cmath
import math

import numpy as np
import pytest

from trivolterra.discretize import Grid, build_S, build_T
from trivolterra.errors import ResolutionError
from trivolterra.symbols import (
    FRACTIONAL,
    PLAIN,
    WEIGHTED,
    SymbolQuery,
    contour_pieces,
    default_lambda_sweep,
    fractional_prediction,
    symbol,
    symbol_action_residual,
    symbol_asymptotics,
    symbol_contour,
    symbol_direct,
    symbol_fractional,
    symbol_plain,
    symbol_weighted,
)
from trivolterra.discretize import log_power_primitive

# mpmath, 30 digits, oscillatory quadrature on 200 sub-intervals
S_PLAIN_B1_L100 = -0.00398960764009045569183698173748 - 0.0121897888124415536246322825668j
S_WEIGHTED_B1_L100 = -0.000848535889461850006704956233129 + 0.00190204714202982588105329535113j


def test_frozen_values_beta1_lambda100():
    assert abs(symbol_plain(1, 0.5, 100) - S_PLAIN_B1_L100) < 1e-11
    assert abs(symbol_weighted(1, 0.5, 100) - S_WEIGHTED_B1_L100) < 1e-11


def test_closed_forms():
    lam = 37.0
    want = (cmath.exp(0.5j * lam) - 1) / (1j * lam)
    assert abs(symbol_direct(SymbolQuery(0, 0.5, lam, PLAIN)) - want) < 1e-12
    assert symbol_weighted(0, 0.5, 0).real == pytest.approx(0.25)
    assert symbol_plain(0.5, 0.5, 0).real == pytest.approx(log_power_primitive(0.5, 0.5), rel=1e-10)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1j, 0.5 + 0.5j])
@pytest.mark.parametrize("lam", [10.0, -300.0, 2e3, -1e4])
@pytest.mark.parametrize("variant", [PLAIN, WEIGHTED])
def test_direct_and_contour_agree(beta, lam, variant):
    q = SymbolQuery(beta, 0.5, lam, variant)
    d, c = symbol_direct(q), symbol_contour(q)
    assert abs(d - c) <= 1e-7 * abs(d)


def test_conjugate_symmetry_real_beta():
    a = symbol_weighted(0.7, 0.5, 250.0)
    b = symbol_weighted(0.7, 0.5, -250.0)
    assert abs(a - b.conjugate()) < 1e-12


def test_ray_piece_leading_term():
    lam = 1e6
    ray, _ = contour_pieces(SymbolQuery(1.0, 0.5, lam, PLAIN))
    lead = 1j / lam * math.log(lam) ** -1
    assert abs(ray / lead - 1) < 0.15


def test_plain_vs_weighted_boundary_term():
    lam, beta, om = 1e5, 0.5, 0.5
    lhs = -1j * lam * symbol_weighted(beta, om, lam)
    rhs = -1j * lam * symbol_plain(beta, om, lam) + cmath.exp(1j * lam * om) * (-math.log(om)) ** -beta
    assert abs(lhs - rhs) < 0.05


def test_bounded_symbol():
    for beta in (0.0, 0.5, 1j):
        lams = default_lambda_sweep(2, 12)
        vals = np.array([abs(-1j * l * symbol_plain(beta, 0.5, l)) for l in lams])
        assert vals.max() < 5.0
        # the explicit constant holds once ln|lambda| dominates the branch shift pi/2
        big = np.abs(lams) >= 1e3
        assert vals[big].max() < (-math.log(0.5)) ** -complex(beta).real + 1.5


def test_asymptotics_report_trend():
    rep = symbol_asymptotics(0.5, 0.5, WEIGHTED)
    assert rep.converging
    assert len(rep.rows()) == len(default_lambda_sweep())


def test_fractional_phase_and_branches():
    alpha = 0.5j
    for lam in (1e4, -1e4):
        r = symbol_fractional(alpha, 0.5, lam) / fractional_prediction(alpha, lam)
        assert abs(r - 1) < 0.01


def test_action_residual_decreases():
    g = Grid(0.5, 4096)
    s = build_S(g, 0.5)
    res = [symbol_action_residual(s, lam) for lam in (50.0, 200.0, 800.0)]
    assert res[0] > res[1] > res[2]
    with pytest.raises(ResolutionError):
        symbol_action_residual(build_S(Grid(0.5, 64), 0.5), 800.0)
