from __future__ import annotations

import pytest
from hypothesis import given, settings

from app.algebra.errors import AlgebraMismatchError, GradeError
from app.algebra.multivector import (
    Multivector,
    basis_vector,
    commutator,
    geometric_product,
    grade_select,
    inner_vectors,
    left_matrix,
    outer,
    pseudoscalar,
    pseudoscalar_square_sign,
    reverse,
    right_mul_pseudoscalar,
)
from app.algebra.oracle import multiply_symbols, product_oracle_check
from app.algebra.signature import Signature, make_algebra
from tests.strategies import algebra_and_multivectors, signatures


def blade(algebra, *indices, coef=1.0):
    return Multivector.blade(algebra, sum(1 << i for i in indices), coef)


class TestGeometricProduct:
    def test_gamma0_squares_to_one(self, sta, gammas):
        assert geometric_product(gammas[0], gammas[0]) == Multivector.scalar(sta, 1.0)

    def test_spatial_generators_square_to_minus_one(self, sta, gammas):
        for g in gammas[1:]:
            assert geometric_product(g, g) == Multivector.scalar(sta, -1.0)

    def test_anticommute(self, sta, gammas):
        assert gammas[1] * gammas[2] == blade(sta, 1, 2)
        assert gammas[2] * gammas[1] == -blade(sta, 1, 2)

    def test_metric_relation(self, sta, gammas):
        for mu in range(4):
            for nu in range(4):
                anti = gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu]
                expected = 2.0 * sta.squares[mu] if mu == nu else 0.0
                assert anti == Multivector.scalar(sta, expected)

    def test_nilpotent_generator_annihilates(self):
        algebra = make_algebra(Signature(0, 0, 1))
        e0 = basis_vector(algebra, 0)
        assert (e0 * e0).is_zero()

    def test_mismatched_algebras(self, sta, lightcone):
        with pytest.raises(AlgebraMismatchError):
            geometric_product(basis_vector(sta, 0), basis_vector(lightcone, 0))

    def test_scalars_mix_in(self, sta, gammas):
        x = 2 * gammas[1] + 1
        assert x[0] == 1.0
        assert x[0b10] == 2.0
        assert (x - 1)[0] == 0.0

    @settings(max_examples=60, deadline=None)
    @given(algebra_and_multivectors())
    def test_associative(self, case):
        _, a, b, c = case
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=60, deadline=None)
    @given(algebra_and_multivectors())
    def test_distributive(self, case):
        _, a, b, c = case
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=30, deadline=None)
    @given(algebra_and_multivectors(count=2, max_dims=4))
    def test_left_matrix_acts_like_product(self, case):
        _, a, b = case
        assert (left_matrix(a) @ b.to_dense()).tolist() == (a * b).to_dense().tolist()


class TestOracle:
    @pytest.mark.parametrize("signature", [Signature(1, 3), Signature(1, 2), Signature(0, 2, 1), Signature(3, 1)])
    def test_sign_table_matches_transposition_oracle(self, signature):
        mismatches, pairs = product_oracle_check(make_algebra(signature))
        assert pairs == 4 ** signature.dims
        assert mismatches == 0

    def test_multiply_symbols(self):
        # e2 e1 e0 = -e012 in any signature
        assert multiply_symbols((2,), (1, 0), (1, -1, -1)) == ((0, 1, 2), -1)
        assert multiply_symbols((0,), (0,), (0,)) == ((), 0)

    @settings(max_examples=40, deadline=None)
    @given(signatures(max_dims=4))
    def test_oracle_on_random_signatures(self, signature):
        assert product_oracle_check(make_algebra(signature))[0] == 0


class TestDerivedProducts:
    def test_inner_of_orthogonal_generators(self, gammas):
        assert inner_vectors(gammas[1], gammas[2]) == 0.0

    def test_inner_needs_vectors(self, gammas):
        with pytest.raises(GradeError):
            inner_vectors(gammas[1] * gammas[2], gammas[1])

    def test_self_wedge_vanishes(self, gammas):
        assert outer(gammas[0], gammas[0]).is_zero()

    def test_wedge_of_generators(self, sta, gammas):
        assert (gammas[0] ^ gammas[1]) == blade(sta, 0, 1)
        assert (gammas[1] ^ gammas[0]) == -blade(sta, 0, 1)

    def test_rotation_commutator(self, sta):
        # gamma12 x gamma23 = gamma31 = -gamma13
        assert commutator(blade(sta, 1, 2), blade(sta, 2, 3)) == -blade(sta, 1, 3)

    def test_self_commutator(self, sta):
        assert commutator(blade(sta, 1, 2), blade(sta, 1, 2)).is_zero()

    def test_reverse_bivector(self, sta):
        assert reverse(blade(sta, 1, 2)) == -blade(sta, 1, 2)
        assert ~blade(sta, 0, 1, 2) == -blade(sta, 0, 1, 2)
        assert ~blade(sta, 0, 1, 2, 3) == blade(sta, 0, 1, 2, 3)

    def test_grade_select(self, sta, gammas):
        x = 3 + gammas[1] + gammas[1] * gammas[2]
        assert grade_select(x, 1) == gammas[1]
        assert grade_select(x, 0) == Multivector.scalar(sta, 3.0)
        with pytest.raises(GradeError):
            grade_select(x, 5)

    def test_pseudoscalar_squares_to_minus_one(self, sta):
        ps = pseudoscalar(sta)
        assert ps * ps == Multivector.scalar(sta, -1.0)
        assert pseudoscalar_square_sign(sta) == -1

    @settings(max_examples=40, deadline=None)
    @given(signatures(max_dims=6))
    def test_pseudoscalar_sign_formula(self, signature):
        algebra = make_algebra(signature)
        ps = pseudoscalar(algebra)
        assert (ps * ps).scalar_part() == pseudoscalar_square_sign(algebra)

    def test_duality_of_translations(self, sta):
        # N2 I = N1 with N1 = gamma10 - gamma31, N2 = gamma20 + gamma23
        n1 = blade(sta, 0, 1, coef=-1.0) + blade(sta, 1, 3)
        n2 = blade(sta, 0, 2, coef=-1.0) + blade(sta, 2, 3)
        assert right_mul_pseudoscalar(n2) == n1

    def test_vector_times_pseudoscalar_anticommutes(self, sta, gammas):
        ps = pseudoscalar(sta)
        for g in gammas:
            assert g * ps == -(ps * g)

    def test_pseudoscalar_parity_on_every_blade(self, sta):
        ps = pseudoscalar(sta)
        for mask in range(sta.size):
            b = Multivector.blade(sta, mask)
            sign = 1.0 if mask.bit_count() % 2 == 0 else -1.0
            assert b * ps == (ps * b).scale(sign), bin(mask)
