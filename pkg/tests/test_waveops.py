import cmath
import math

import numpy as np
import pytest

from trivolterra.discretize import Grid, build_J, build_Q
from trivolterra.errors import DomainError, ResolutionError
from trivolterra.friedrichs import build_A, conjugate_A, conjugate_B, similarity_V
from trivolterra.waveops import (
    LOG,
    NONE,
    POWER,
    WaveConfig,
    conjugation_exponential,
    intertwining_check,
    matrix_exponential,
    smooth_bump,
    w0,
    w0_check,
    wave_limit_run,
)


def test_exponential_of_diagonal_and_zero():
    g = Grid(0.5, 16)
    q = build_Q(g)
    assert np.allclose(matrix_exponential(q, 3.0), np.diag(np.exp(3j * g.nodes)), atol=1e-14)
    a = build_A(0.5j, g)
    assert np.allclose(matrix_exponential(a, 0.0), np.eye(16))


def test_exponential_conjugation_oracle():
    g = Grid(0.5, 256)
    e = matrix_exponential(conjugate_B(0.5j, g), 10.0)
    o = conjugation_exponential(build_J(g, 0.5j), g, 10.0)
    assert np.linalg.norm(e - o) <= 1e-8 * np.linalg.norm(e)
    g = Grid(0.5, 64)
    e = matrix_exponential(conjugate_A(0.5j, g), 10.0)
    o = conjugation_exponential(similarity_V(0.5j, g), g, 10.0)
    assert np.linalg.norm(e - o) <= 1e-9 * np.linalg.norm(e)


def test_group_law_and_boundedness():
    a = build_A(0.5j, Grid(0.5, 128))
    e7 = matrix_exponential(a, 7.0)
    assert np.linalg.norm(e7 - matrix_exponential(a, 3.0) @ matrix_exponential(a, 4.0)) <= 1e-8 * np.linalg.norm(e7)
    norms = [np.linalg.norm(matrix_exponential(a, t), 2) for t in (1, 10, 50, 200)]
    assert max(norms) < 2.0


def test_unitarity():
    g = Grid(0.5, 64)
    f = smooth_bump(g.nodes, 0.5)
    assert np.linalg.norm(np.exp(-1j * 37.0 * g.nodes) * f) == pytest.approx(np.linalg.norm(f), rel=1e-15)
    for fam in (LOG, POWER):
        for t in (1.5, 10.0, 1e3, 1e6):
            assert abs(abs(w0(fam, 0.5j, t)) - 1.0) <= 1e-15


def test_w0_checks():
    rep = w0_check(LOG, 1j, [10, 100, 1e3, 1e4], [1.0])
    assert rep.verdict
    rep = w0_check(POWER, 1j, [10, 100, 1e3], [1.0])
    assert rep.verdict
    assert rep.defects[1.0][-1] == pytest.approx(1e-3, rel=0.01)
    with pytest.raises(DomainError):
        w0(LOG, 1j, 1.0)


def test_config_validation():
    g = Grid(0.5, 64)
    with pytest.raises(ResolutionError):
        WaveConfig("B", 0.5j, g, (10, 1000))
    with pytest.raises(DomainError):
        WaveConfig("B", 0.5, g, (10,))
    with pytest.raises(DomainError):
        WaveConfig("C", 0.5j, g, (10,))


def test_intertwining():
    rep = intertwining_check("A", 0.5j, Grid(0.5, 128), [0.0, 5.0], construction="conjugation")
    assert rep.defects[0] == 0.0
    assert rep.defects[1] <= 1e-8
    d = [intertwining_check("A", 0.5j, Grid(0.5, n), [5.0]).defects[0] for n in (128, 256, 512)]
    assert d[0] > d[1] > d[2]


def test_wave_model_B_small():
    cfg = WaveConfig("B", 0.5j, Grid(0.5, 256), (10.0, 50.0, 150.0), POWER, tests=("bump", "parabola"))
    rep = wave_limit_run(cfg)
    assert rep.verdict
    assert len(rep.rows()) == 3


def test_wave_negative_direction_uses_other_phase():
    cfg = WaveConfig("B", 0.5j, Grid(0.5, 256), (10.0, 50.0, 150.0), POWER, direction=-1, tests=("parabola",))
    rep = wave_limit_run(cfg)
    assert rep.verdict
