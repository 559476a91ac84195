"""Tests for antipodal states and the boundary-to-boundary pairing."""

from math import sqrt

import numpy as np
import pytest

from blochstrata import (
    DomainError,
    StateKind,
    antipodal_family,
    antipodal_state,
    antipode_of_boundary,
    boundary_state,
    build_basis,
    directional_matrix_of_boundary,
    expand,
    max_antipodal_length,
    maximally_mixed,
    spectrum,
    state_along,
    stratum_radius,
)


def test_zero_length_is_maximally_mixed():
    b = build_basis(3)
    n = np.zeros(8)
    n[0] = 1.0
    np.testing.assert_allclose(antipodal_state(b, n, 0.0), maximally_mixed(3), atol=1e-15)


def test_qubit_antipode_of_pure_state():
    b = build_basis(2)
    rho = antipodal_state(b, np.array([0.0, 0.0, 1.0]), sqrt(0.5))
    np.testing.assert_allclose(rho, np.diag([0.0, 1.0]), atol=1e-15)


def test_antipode_plus_state_is_twice_center():
    b = build_basis(3)
    rng = np.random.default_rng(21)
    v = rng.standard_normal(8)
    v /= np.linalg.norm(v)
    for r in (0.1, 0.3):
        total = antipodal_state(b, v, r) + state_along(b, v, r)
        np.testing.assert_allclose(total, 2 * maximally_mixed(3), atol=1e-14)


def test_max_antipodal_length_values():
    assert max_antipodal_length(3, 2) == pytest.approx(sqrt(2.0 / 3.0), abs=1e-15)
    assert max_antipodal_length(3, 1) == pytest.approx(sqrt(1.0 / 6.0), abs=1e-15)
    assert max_antipodal_length(2, 1) == pytest.approx(sqrt(0.5), abs=1e-15)
    with pytest.raises(DomainError):
        max_antipodal_length(3, 3)
    with pytest.raises(DomainError):
        max_antipodal_length(3, 0)


@pytest.mark.parametrize("dim", range(2, 9))
def test_max_antipodal_length_equals_opposite_stratum_radius(dim):
    # the cap opposite R(q) has q zero eigenvalues, so it sits on the
    # sphere indexed by q, not by N - q
    for q in range(1, dim):
        assert max_antipodal_length(dim, q) == stratum_radius(dim, q)


def test_antipode_n3_q2():
    rep = antipode_of_boundary(3, 2)
    np.testing.assert_allclose(rep.antipodal_cap, np.diag([0.0, 0.0, 1.0]), atol=1e-14)
    assert rep.matches_complement
    np.testing.assert_allclose(rep.direction_state, np.diag([0.5, 0.5, 0.0]), atol=1e-15)


def test_antipode_n4_q1():
    rep = antipode_of_boundary(4, 1)
    third = 1.0 / 3.0
    np.testing.assert_allclose(
        spectrum(rep.antipodal_cap).values, [third, third, third, 0.0], atol=1e-14
    )
    assert rep.matches_complement


def test_qubit_antipode_is_self_dual():
    rep = antipode_of_boundary(2, 1)
    np.testing.assert_allclose(rep.antipodal_cap, np.diag([0.0, 1.0]), atol=1e-15)
    assert rep.matches_complement


@pytest.mark.parametrize("dim", range(2, 9))
def test_antipodean_pairing_and_involution(dim):
    for q in range(1, dim):
        rep = antipode_of_boundary(dim, q)
        assert rep.matches_complement
        assert spectrum(rep.antipodal_cap).zero_count == q
        # applying the construction to R(N-q) lands back on R(q) spectrally
        back = antipode_of_boundary(dim, dim - q)
        np.testing.assert_allclose(
            spectrum(back.antipodal_cap).values,
            spectrum(boundary_state(dim, q)).values,
            atol=1e-12,
        )


def test_family_classification_sweep():
    rho, cls = antipodal_family(3, 2, 0.0)
    np.testing.assert_allclose(rho, maximally_mixed(3), atol=1e-15)
    assert cls.kind is StateKind.POSITIVE_INTERIOR

    top = max_antipodal_length(3, 2)
    rho, cls = antipodal_family(3, 2, top)
    np.testing.assert_allclose(rho, np.diag([0.0, 0.0, 1.0]), atol=1e-14)
    assert cls.kind is StateKind.BOUNDARY and cls.zero_count == 2

    _, cls = antipodal_family(3, 2, top + 0.01)
    assert cls.kind is StateKind.NONPOSITIVE


@pytest.mark.parametrize("dim,q", [(3, 1), (3, 2), (4, 2), (5, 3)])
def test_family_matches_basis_route(dim, q):
    # the diagonal formula and the basis-multiplication route must agree
    b = build_basis(dim)
    t = directional_matrix_of_boundary(dim, q)
    n = expand(b, t)
    for r in (0.05, 0.2, max_antipodal_length(dim, q)):
        direct, _ = antipodal_family(dim, q, r)
        via_basis = antipodal_state(b, n, r)
        np.testing.assert_allclose(direct, via_basis, atol=1e-13)


@pytest.mark.parametrize("dim,q", [(3, 1), (4, 3), (6, 2)])
def test_family_strictly_positive_inside(dim, q):
    top = max_antipodal_length(dim, q)
    for r in np.linspace(0.0, top - 1e-6, 25):
        _, cls = antipodal_family(dim, q, float(r))
        assert cls.kind is StateKind.POSITIVE_INTERIOR


def test_family_rejects_bad_arguments():
    with pytest.raises(DomainError):
        antipodal_family(3, 0, 0.1)
    with pytest.raises(DomainError):
        antipodal_family(3, 2, -0.1)
