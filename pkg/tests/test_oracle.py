"""Brute-force differential-element oracle and its agreement with quadrature."""

from __future__ import annotations

import math

import pytest

from wiretwist import (
    GridSpec,
    SectionGeometry,
    WireRing,
    oracle_torque,
    stiffness_circular,
    torque_full,
)
from conftest import REF_E, REF_R, REF_Z

PI = math.pi


class TestGridSpec:
    def test_defaults(self):
        grid = GridSpec()
        assert grid.n_rho == 400 and grid.n_theta == 400

    @pytest.mark.parametrize("n_rho, n_theta", [(7, 100), (100, 7), (0, 0)])
    def test_minimum_resolution(self, n_rho, n_theta):
        with pytest.raises(ValueError):
            GridSpec(n_rho, n_theta)


class TestOracleTorque:
    def test_zero_angle_rejected(self, circular_ring):
        with pytest.raises(ValueError):
            oracle_torque(circular_ring, 0.0)

    def test_circular_matches_closed_form(self, circular_ring):
        """800x800 grid at alpha = 1e-3: within 0.1% of the closed form."""
        t = oracle_torque(circular_ring, 1e-3, GridSpec(800, 800))
        k8 = stiffness_circular(circular_ring)
        assert abs(t / 1e-3 - k8) / k8 < 1e-3

    @pytest.mark.parametrize("alpha", [1e-3, -1e-3, 0.1, -0.1])
    @pytest.mark.parametrize("kind", ["circular", "real"])
    def test_matches_quadrature(self, alpha, kind, circular_ring, real_ring):
        ring = circular_ring if kind == "circular" else real_ring
        t_oracle = oracle_torque(ring, alpha, GridSpec(400, 400))
        t_quad = torque_full(ring, alpha)
        assert abs(t_oracle - t_quad) / abs(t_quad) < 1e-3

    def test_positive_virtual_work(self, real_ring):
        """Summed work is a sum of squares: T/alpha >= 0 for either sign."""
        for alpha in (0.3, 0.05, -0.05, -0.3):
            assert oracle_torque(real_ring, alpha, GridSpec(64, 64)) / alpha >= 0.0

    def test_self_convergence(self, real_ring):
        """Doubling the grid moves the result by less than 0.05%."""
        coarse = oracle_torque(real_ring, 1e-3, GridSpec(400, 400))
        fine = oracle_torque(real_ring, 1e-3, GridSpec(800, 800))
        assert abs(fine - coarse) / abs(fine) < 5e-4

    def test_quadratic_error_decay_circular(self, circular_ring):
        """Circular section: midpoint-grid error vs quadrature drops ~4x per
        grid doubling (O(1/n^2))."""
        t_ref = torque_full(circular_ring, 1e-3)
        errors = [
            abs(oracle_torque(circular_ring, 1e-3, GridSpec(n, n)) - t_ref)
            for n in (100, 200, 400)
        ]
        for coarse, fine in zip(errors, errors[1:]):
            assert 3.0 < coarse / fine < 5.0

    def test_tiny_section_torque_vanishes(self):
        """Torque scales as r^4: a near-zero-measure section carries none."""
        ring = WireRing(REF_R, REF_Z, REF_E, SectionGeometry.circular(1e-3))
        assert abs(oracle_torque(ring, 0.01, GridSpec(32, 32))) < 1e-9

    def test_deterministic(self, real_ring):
        a = oracle_torque(real_ring, 0.01, GridSpec(300, 300))
        b = oracle_torque(real_ring, 0.01, GridSpec(300, 300))
        assert a == b

    def test_bite_reduces_torque(self, circular_ring, real_ring):
        """Removing material cannot stiffen the wire."""
        t_full = oracle_torque(circular_ring, 0.01, GridSpec(256, 256))
        t_bitten = oracle_torque(real_ring, 0.01, GridSpec(256, 256))
        assert t_bitten < t_full
