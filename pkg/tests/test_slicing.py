from __future__ import annotations

import numpy as np
import pytest

from app.algebra.multivector import Multivector, basis_vector, outer
from app.algebra.rotor import sandwich
from app.algebra.signature import Signature, make_algebra
from app.photon.little import complex_angle, construct_little_algebra, minkowski_layout, translation_rotor
from app.photon.sampling import Sampler
from app.view.slicing import (
    Primitive,
    RelativeViewScene,
    SliceError,
    light_circle,
    lightcone_contact,
    locus_distance,
    point_on,
    same_locus,
    slice_primitive,
)


class TestBasis:
    def test_spatial_generators_are_coordinate_planes(self, sta):
        for i in (1, 2, 3):
            prim = slice_primitive(basis_vector(sta, i), 1.0, label=f"e{i}")
            assert prim.kind == "plane"
            assert prim.point == (0.0, 0.0, 0.0)
            normal = np.zeros(3)
            normal[i - 1] = 1.0
            assert np.abs(np.asarray(prim.directions) @ normal).max() <= 1e-12

    def test_timelike_generator_is_at_infinity(self, sta):
        prim = slice_primitive(basis_vector(sta, 0), 1.0, label="e0")
        assert not prim.in_view
        assert prim.kind == "plane"
        assert prim.distance == float("inf")

    def test_spatial_pseudoscalar_is_the_origin(self, sta):
        prim = slice_primitive(Multivector.blade(sta, 0b1110), 2.0)
        assert prim.kind == "point"
        assert prim.point == (0.0, 0.0, 0.0)


class TestLightcone:
    def test_k_line_is_tangent(self, lightcone):
        k = basis_vector(lightcone, 0) + basis_vector(lightcone, 2)
        for t in (1.0, 2.5):
            prim = slice_primitive(k, t)
            assert prim.kind == "line"
            assert abs(prim.distance - t) <= 1e-10
            assert point_on(prim, np.array([0.0, t])) <= 1e-10

    def test_s_line_meets_k_line_on_circle(self, lightcone):
        k = basis_vector(lightcone, 0) + basis_vector(lightcone, 2)
        s = basis_vector(lightcone, 1)
        contact = np.array([0.0, 1.0])
        assert point_on(slice_primitive(s, 1.0), contact) <= 1e-10
        assert point_on(slice_primitive(k, 1.0), contact) <= 1e-10
        assert point_on(light_circle(2, 1.0), contact) <= 1e-10

    def test_directions_have_fixed_sign(self, lightcone):
        k = basis_vector(lightcone, 0) + basis_vector(lightcone, 2)
        assert slice_primitive(k, 1.0).directions[0] == pytest.approx((1.0, 0.0), abs=1e-12)
        assert slice_primitive(basis_vector(lightcone, 1).scale(-2.0), 1.0).directions[0] == pytest.approx((0.0, 1.0), abs=1e-12)

    def test_origin_trivector_is_at_infinity(self, lightcone):
        assert not slice_primitive(Multivector.blade(lightcone, 0b111), 1.0).in_view

    def test_random_tangency_and_incidence(self, lightcone):
        layout = minkowski_layout(lightcone.signature)
        sampler = Sampler(np.random.default_rng(5))
        for _ in range(100):
            k = sampler.lightlike(lightcone, layout).scale(float(sampler.uniform(bound=1.0)) + 1.5)
            la = construct_little_algebra(lightcone, k)
            t = float(sampler.uniform(bound=1.0)) + 1.5
            k_line = slice_primitive(k, t)
            assert abs(k_line.distance - t) <= 1e-10

            # any s with s.k = 0 passes through the tangent point
            s = la.from_frame([float(sampler.uniform()), float(sampler.uniform()) + 3.0])
            s_line = slice_primitive(s, t)
            contact = t * np.array([la.e0[1 << g] for g in layout.spatial])
            assert point_on(k_line, contact) <= 1e-10
            assert point_on(s_line, contact) <= 1e-10
            assert abs(np.linalg.norm(contact) - t) <= 1e-10

    def test_contact_entries(self, photon_2d, photon):
        for la in (photon_2d, photon):
            entries = lightcone_contact(la, 1.0)
            assert len(entries) == la.n
            assert all(e.passed for e in entries)


class TestLocusInvariance:
    @pytest.mark.parametrize("theta", [0.5, -2.0])
    def test_sk_unchanged_in_spacetime(self, photon, sta, theta):
        s = photon.frame[2]
        moved = sandwich(translation_rotor(photon, 2, complex_angle(sta, theta, 0.5)), s)
        before = slice_primitive(outer(s, photon.k), 1.0)
        after = slice_primitive(outer(moved, photon.k), 1.0)
        assert before.kind == "line"
        assert same_locus(before, after)
        # s itself does move
        assert not same_locus(slice_primitive(s, 1.0), slice_primitive(moved, 1.0))

    def test_sk_unchanged_in_lightcone(self, photon_2d):
        s = photon_2d.frame[1]
        moved = sandwich(translation_rotor(photon_2d, 1, 1.25), s)
        before = slice_primitive(outer(s, photon_2d.k), 1.0)
        after = slice_primitive(outer(moved, photon_2d.k), 1.0)
        assert before.kind == "point"
        assert same_locus(before, after)

    def test_orientation_is_ignored(self, photon):
        sk = outer(photon.frame[1], photon.k)
        assert same_locus(slice_primitive(sk, 1.0), slice_primitive(-sk.scale(3.0), 1.0))


class TestErrors:
    def test_only_low_dimensions(self):
        algebra = make_algebra(Signature(1, 4))
        with pytest.raises(SliceError):
            slice_primitive(basis_vector(algebra, 1), 1.0)

    def test_mixed_grades(self, gammas):
        with pytest.raises(SliceError):
            slice_primitive(gammas[1] + gammas[1] * gammas[2], 1.0)

    def test_zero(self, sta):
        with pytest.raises(SliceError):
            slice_primitive(Multivector(sta), 1.0)

    def test_non_blade(self, sta):
        with pytest.raises(SliceError):
            slice_primitive(Multivector(sta, {0b0011: 1.0, 0b1100: 1.0}), 1.0)


class TestScene:
    def test_dimension(self):
        with pytest.raises(SliceError):
            RelativeViewScene(4, 1.0)

    def test_coordinates_match_dimension(self):
        with pytest.raises(SliceError):
            RelativeViewScene(2, 1.0, (Primitive(kind="point", label="p", point=(0.0, 0.0, 0.0)),))

    def test_with_primitive_keeps_order(self):
        scene = RelativeViewScene(2, 1.0).with_primitive(light_circle(2, 1.0)).with_primitive(
            Primitive(kind="point", label="p", point=(1.0, 0.0))
        )
        assert [p.label for p in scene.primitives] == ["light-circle", "p"]

    def test_locus_distance_kinds(self):
        assert locus_distance(light_circle(2, 1.0), Primitive(kind="point", label="", point=(0.0, 0.0))) == float("inf")
        assert same_locus(light_circle(2, -1.0), light_circle(2, 1.0))
