from __future__ import annotations

import numpy as np
import pytest

from app.algebra.multivector import basis_vector, inner_vectors, outer, residual
from app.algebra.rotor import exp_bivector, sandwich
from app.algebra.signature import Signature, make_algebra
from app.photon.checks import ROTATION_CHANGE_MIN, check_invariance, rotation_counterexample
from app.photon.little import (
    LittleAlgebraError,
    canonical_wavevector,
    complex_angle,
    construct_little_algebra,
    dual_translation,
    little_generators,
    minkowski_layout,
    spatial_vector,
    translation_rotor,
)
from app.photon.sampling import Sampler


class TestLightconeAlgebra:
    def test_shift_along_e0(self, photon_2d, lightcone):
        s = basis_vector(lightcone, 1)
        moved = sandwich(translation_rotor(photon_2d, 1, 0.5), s)
        assert residual(moved, s - photon_2d.e0.scale(0.5)) <= 1e-15
        assert residual(outer(moved, photon_2d.k), outer(s, photon_2d.k)) <= 1e-15

    def test_checks_pass(self, photon_2d, lightcone):
        entries = check_invariance(photon_2d, basis_vector(lightcone, 1).scale(1.5), 0.75)
        assert [e.anchor for e in entries] == ["invariance"] * 3
        assert all(e.passed for e in entries)

    def test_zero_angle(self, photon_2d, lightcone):
        s = basis_vector(lightcone, 1)
        assert sandwich(translation_rotor(photon_2d, 1, 0.0), s) == s

    def test_no_rotation_counterexample(self, photon_2d, lightcone):
        with pytest.raises(LittleAlgebraError):
            rotation_counterexample(photon_2d, basis_vector(lightcone, 1))


class TestSpacetimeAlgebra:
    def test_complex_shift(self, photon, sta):
        s = spatial_vector(photon, [0.5, 2.0])
        theta = complex_angle(sta, 1.5, -0.25)
        moved = sandwich(translation_rotor(photon, 2, theta), s)
        # s' = s - (alpha s2 + beta s1) e0
        expected = s - photon.e0.scale(1.5 * 2.0 - 0.25 * 0.5)
        assert residual(moved, expected) <= 1e-15

    def test_checks_pass_with_complex_angle(self, photon, sta):
        entries = check_invariance(photon, spatial_vector(photon, [1.0, -1.0]), complex_angle(sta, 0.3, 0.7))
        assert all(e.passed for e in entries)

    def test_rejects_non_spatial(self, photon, gammas):
        with pytest.raises(LittleAlgebraError):
            check_invariance(photon, gammas[0] + gammas[1], 1.0)
        with pytest.raises(LittleAlgebraError):
            check_invariance(photon, gammas[3], 1.0)

    def test_rotation_moves_sk(self, photon):
        s = spatial_vector(photon, [1.0, 1.0])
        keeps, fixes, moves = rotation_counterexample(photon, s, alpha=1.0)
        assert keeps.passed
        assert fixes.passed
        assert moves.passed
        assert moves.detail.startswith("change=")
        assert float(moves.detail.split("=")[1]) > ROTATION_CHANGE_MIN

    def test_half_radian_rotation(self, photon):
        s = spatial_vector(photon, [0.3, -1.2])
        rotor = exp_bivector(little_generators(photon).rotation(1, 2), -0.5)
        rotated = sandwich(rotor, s)
        assert abs(inner_vectors(rotated, photon.k)) <= 1e-15
        assert residual(outer(rotated, photon.k), outer(s, photon.k)) > ROTATION_CHANGE_MIN

    def test_mostly_plus(self):
        algebra = make_algebra(Signature(3, 1))
        la = construct_little_algebra(algebra, canonical_wavevector(algebra))
        s = spatial_vector(la, [1.0, 2.0])
        entries = check_invariance(la, s, complex_angle(algebra, 0.5, 0.5))
        assert all(e.passed for e in entries)
        assert entries[0].label.startswith("L s ~L = s + ")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_random_configurations(n):
    algebra = make_algebra(Signature(1, n))
    layout = minkowski_layout(algebra.signature)
    sampler = Sampler(np.random.default_rng(1000 + n))
    for _ in range(200):
        la = construct_little_algebra(algebra, sampler.lightlike(algebra, layout))
        i = la.n - 1
        complex_like = dual_translation(la, i) is not None
        theta = sampler.theta(la, complex_like, bound=10.0)
        entries = check_invariance(la, sampler.spatial(la), theta, i)
        assert all(e.passed for e in entries), [e for e in entries if not e.passed]
