import math

import numpy as np
import pytest

from trivolterra.discretize import Grid, GridFn, TriOp, build_J, build_Q, build_S, build_T, build_V, identity
from trivolterra.friedrichs import build_A
from trivolterra.specfun import KernelParams
from trivolterra.spectral import (
    diagonal_terms,
    hs_norm_squared,
    invariant_subspace_check,
    krylov_completeness_probe,
    krylov_dimension,
    numerical_range_distance,
    resolvable_circle_point,
    singular_values,
    svd_reconstruction_error,
    unit_circle_probe,
)
from trivolterra.symbols import symbol_weighted

# mpmath 2-D quadrature of |ln(x-t)|^{-1} over 0 < t < x < 0.5
HS2_HALF = 0.0706734650834208830585078858462


def test_singular_values_trivial():
    g = Grid(0.5, 4)
    assert np.allclose(singular_values(identity(g)), 1.0)
    assert np.allclose(singular_values(build_Q(g)), np.sort(g.nodes)[::-1])


def test_svd_reconstruction():
    for op in (build_T(Grid(0.5, 64), 0.5), build_V(Grid(0.5, 64), KernelParams(0.5))):
        assert svd_reconstruction_error(op) <= 1e-10


def test_hs_norm_oracle():
    assert hs_norm_squared(0.5, 0.5) == pytest.approx(HS2_HALF, rel=1e-9)
    fro = np.linalg.norm(build_T(Grid(0.5, 256), 0.5).matrix)
    assert fro**2 == pytest.approx(HS2_HALF, rel=0.01)


def test_frobenius_gaps_shrink():
    fro = [np.linalg.norm(build_T(Grid(0.5, n), 0.5).matrix) for n in (64, 128, 256, 512)]
    gaps = np.abs(np.diff(fro))
    assert np.all(gaps[:-1] / gaps[1:] >= 1.5)


def test_diagonal_term_reduction_matches_matrix():
    # (T phi, phi) on a fine grid against omega * s1(-m/omega)
    g = Grid(0.5, 2048)
    t = build_T(g, 0.5).matrix
    m = 7
    phi = np.exp(1j * g.nodes * m / g.omega)
    direct = np.vdot(phi, t @ phi) * g.h
    assert abs(direct) == pytest.approx(diagonal_terms(0.5, 0.5, np.array([m]), False)[0], rel=1e-3)


def test_diagonal_terms_decay_like_log():
    m = 10_000
    val = diagonal_terms(0.5, 0.5, np.array([m]), False)[0]
    lam = m / 0.5
    assert val == pytest.approx(0.5 * math.log(lam) ** -0.5 / lam, rel=0.15)


def test_numerical_range_bound_off_circle():
    rep = unit_circle_probe(1j, 2.0, "S", n_sweep=(64, 128))
    assert rep.verdicts["sigma_min_above_range_bound"]
    assert min(rep.data["range_bound"]) > 0.5


def test_circle_probe_is_flagged_heuristic():
    rep = unit_circle_probe(1j, 1.0, "S", n_sweep=(64, 128))
    assert "heuristic" in rep.note
    assert "consistent_with_spectrum" in rep.verdicts


@pytest.mark.parametrize("kind", ["S", "V"])
def test_resolvable_circle_point_is_approached(kind):
    z = resolvable_circle_point(1j, 3000.0)
    assert abs(abs(z) - 1) < 1e-15
    rep = unit_circle_probe(1j, z, kind, n_sweep=(128, 256, 512))
    assert rep.verdicts["consistent_with_spectrum"]


@pytest.mark.parametrize("k", [0, 16, 32, 64])
def test_krylov_dimension(k):
    g = Grid(0.5, 64)
    v = np.zeros(64)
    v[k:] = 1.0 + np.arange(64 - k)
    rep = krylov_completeness_probe(0.5, GridFn(g, v))
    assert rep.data["dimension"] == (64 - k)
    assert rep.verdict


def test_krylov_first_basis_vector():
    g = Grid(0.5, 32)
    e1 = np.zeros(32)
    e1[0] = 1
    assert krylov_dimension(build_V(g, KernelParams(1.0)).matrix, e1) == 32


def test_invariant_subspace():
    g = Grid(0.5, 32)
    for op in (build_V(g, KernelParams(0.5)), build_J(g, 0.5), build_S(g, 0.5), build_T(g, 0.5), build_A(0.5j, g).base):
        assert invariant_subspace_check(op)
    bad = np.array(build_T(g, 0.5).matrix)
    bad[3, 10] = 1e-300
    assert not invariant_subspace_check(bad)
