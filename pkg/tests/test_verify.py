"""Independent oracles: FD eigenvalues, quadrature orthogonality, brute force."""

import math

import numpy as np
import pytest

from polyspec import (
    BoundaryCondition,
    FdConfig,
    InvalidArgumentError,
    OracleInsufficientError,
    Polydisc,
    bessel_j,
    brute_force_spectrum,
    enumerate_modes,
    fd_convergence_report,
    fd_radial_eigs,
    mode_descriptor,
    quad_inner_product,
    radial_basis_gram,
    sufficient_bounds,
)

LAM01_SQ = 5.783185962946785
LAM11_SQ = 14.681970642123893
DIAG_01 = 0.134757061970958  # oracle: J_1(lambda_{0,1})^2 / 2


def test_fd_dirichlet_ground_state():
    vals = fd_radial_eigs(FdConfig(4000, 1.0, 0, BoundaryCondition.DIRICHLET), 1)
    assert vals[0] == pytest.approx(LAM01_SQ, rel=5e-3)
    assert vals[0] == pytest.approx(LAM01_SQ, rel=1e-6)  # h^2 error is far smaller


def test_fd_robin_zero_mode_present_for_nonnegative_order():
    vals = fd_radial_eigs(FdConfig(2000, 1.0, 0, BoundaryCondition.DBAR_NEUMANN), 2)
    assert abs(vals[0]) < 1e-6
    assert vals[1] == pytest.approx(LAM11_SQ, rel=1e-4)


def test_fd_robin_no_zero_mode_for_negative_order():
    vals = fd_radial_eigs(FdConfig(2000, 1.0, -1, BoundaryCondition.DBAR_NEUMANN), 1)
    assert vals[0] == pytest.approx(LAM01_SQ, rel=1e-4)
    assert vals[0] > 1.0


def test_fd_validation():
    with pytest.raises(InvalidArgumentError):
        FdConfig(32, 1.0, 0, BoundaryCondition.DIRICHLET)
    with pytest.raises(InvalidArgumentError):
        fd_radial_eigs(FdConfig(100, 1.0, 0, BoundaryCondition.DIRICHLET), 11)


def test_fd_convergence_report(cache):
    rep = fd_convergence_report(
        1, BoundaryCondition.DBAR_NEUMANN, 1.0, 2, cache, grid_sizes=(500, 1000, 2000)
    )
    assert rep["zero_mode_expected"]
    assert all(abs(v) < 1e-3 * rep["eigenvalues"][0]["exact"] for v in rep["zero_mode"].values())
    for e in rep["eigenvalues"]:
        assert all(abs(s - 2.0) < 0.3 for s in e["slopes"])
        assert e["richardson_rel_error"] < 1e-6


def test_quad_orthogonality(cache):
    assert abs(quad_inner_product(0, 1, 2, cache)) < 1e-10
    assert abs(quad_inner_product(2, 1, 3, cache)) < 1e-10
    diag = quad_inner_product(0, 1, 1, cache)
    lam = cache.zero(0, 1)
    closed = 0.5 * bessel_j(1, lam) ** 2
    assert abs(diag - closed) < 1e-10
    assert closed == pytest.approx(DIAG_01, abs=1e-12)
    with pytest.raises(InvalidArgumentError):
        quad_inner_product(-1, 1, 1, cache)
    with pytest.raises(InvalidArgumentError):
        quad_inner_product(0, 1, 1, cache, nodes=64)


def test_radial_basis_gram_block_orthogonal(cache):
    for m in (0, 1, 2):
        g = radial_basis_gram(m, 12, cache)
        d = np.sqrt(np.diag(g))
        off = g - np.diag(np.diag(g))
        assert np.max(np.abs(off)) < 1e-9
        assert np.min(d) > 0.0
        # nonsingular with comfortable margin once normalized
        normalized = g / np.outer(d, d)
        assert np.min(np.linalg.eigvalsh(normalized)) > 0.99


def _as_pairs(modes):
    return sorted((m.value, mode_descriptor(m)) for m in modes)


@pytest.mark.parametrize("radii", [(1.0, 1.0), (1.0, math.sqrt(2.0))])
def test_brute_force_matches_enumeration(cache, radii):
    P = Polydisc(radii)
    lam_max = 10.0
    ours = _as_pairs(enumerate_modes(P, 1, lam_max, cache))
    m_bound, j_bound = sufficient_bounds(P, lam_max, cache)
    oracle = sorted(brute_force_spectrum(P, 1, lam_max, m_bound, j_bound, cache))
    assert len(ours) == len(oracle)
    for (v1, d1), (v2, d2) in zip(ours, oracle):
        assert abs(v1 - v2) < 1e-10
        assert d1 == d2


def test_brute_force_below_bottom_empty(cache):
    P = Polydisc((1.0, 1.0))
    assert brute_force_spectrum(P, 1, 1.0, 6, 3, cache) == []
    assert enumerate_modes(P, 1, 1.0, cache) == []


def test_brute_force_three_variables(cache):
    P = Polydisc((1.0, 2.0, 3.0))
    lam_max = 4.0
    for q in (1, 2):
        ours = _as_pairs(enumerate_modes(P, q, lam_max, cache))
        m_bound, j_bound = sufficient_bounds(P, lam_max, cache)
        oracle = sorted(brute_force_spectrum(P, q, lam_max, m_bound, j_bound, cache))
        assert ours == oracle


def test_brute_force_rejects_insufficient_bounds(cache):
    P = Polydisc((1.0, 1.0))
    with pytest.raises(OracleInsufficientError):
        brute_force_spectrum(P, 1, 10.0, 1, 4, cache)
    with pytest.raises(OracleInsufficientError):
        brute_force_spectrum(P, 1, 10.0, 8, 1, cache)
    with pytest.raises(InvalidArgumentError):
        brute_force_spectrum(Polydisc((1.0, 1.0, 1.0, 1.0)), 1, 2.0, 8, 4, cache)


def test_sufficient_bounds_are_sufficient(cache):
    P = Polydisc((1.0, 2.0))
    m_bound, j_bound = sufficient_bounds(P, 8.0, cache)
    budget = 32.0
    a_max = max(P.radii)
    assert (cache.zero(m_bound + 1, 1) / a_max) ** 2 > budget
    assert (cache.zero(0, j_bound + 1) / a_max) ** 2 > budget
