from __future__ import annotations

import numpy as np
import pytest

from app.algebra.errors import SignatureError
from app.algebra.multivector import Multivector, basis_vector, geometric_product
from app.algebra.signature import (
    MAX_GENERATORS,
    TABLE_MAX_DIMS,
    Signature,
    blade_from_indices,
    blade_indices,
    make_algebra,
    reorder_sign,
)


class TestSignature:
    def test_str(self):
        assert str(Signature(1, 3)) == "G(1,3)"
        assert str(Signature(0, 2, 1)) == "G(0,2,1)"

    def test_squares_order(self):
        assert Signature(1, 2, 1).squares() == (1, -1, -1, 0)

    def test_rejects_negative_counts(self):
        with pytest.raises(SignatureError):
            Signature(-1, 3)

    def test_rejects_empty(self):
        with pytest.raises(SignatureError):
            Signature(0, 0, 0)


class TestMakeAlgebra:
    def test_sta_has_16_blades(self):
        algebra = make_algebra(Signature(1, 3, 0))
        assert algebra.size == 16
        assert algebra.squares == (1, -1, -1, -1)

    def test_lightcone_algebra_has_8_blades(self):
        assert make_algebra(Signature(1, 2, 0)).size == 8

    def test_smallest_degenerate_algebra(self):
        algebra = make_algebra(Signature(0, 0, 1))
        assert algebra.size == 2
        e0 = basis_vector(algebra, 0)
        assert geometric_product(e0, e0).is_zero()

    def test_cached_handle(self):
        assert make_algebra(Signature(1, 3)) is make_algebra(Signature(1, 3))

    def test_too_many_generators(self):
        with pytest.raises(SignatureError):
            make_algebra(Signature(MAX_GENERATORS + 1, 0))

    def test_sign_table_only_for_small_algebras(self):
        algebra = make_algebra(Signature(TABLE_MAX_DIMS + 1, 0))
        with pytest.raises(SignatureError):
            algebra.sign_table()
        # the bit-arithmetic path still multiplies
        e1 = basis_vector(algebra, 1)
        assert geometric_product(e1, e1) == Multivector.scalar(algebra, 1.0)

    def test_large_algebra_agrees_with_table_path(self):
        # the first five generators of both algebras square alike
        small = make_algebra(Signature(2, 3))
        large = make_algebra(Signature(2, 3 + TABLE_MAX_DIMS))
        for a in range(small.size):
            for b in range(small.size):
                assert small.blade_sign(a, b) == large.blade_sign(a, b)


class TestBlades:
    def test_indices_round_trip(self):
        assert blade_indices(0b1011) == (0, 1, 3)
        assert blade_from_indices((0, 1, 3)) == 0b1011

    def test_from_indices_needs_ascending(self):
        with pytest.raises(SignatureError):
            blade_from_indices((2, 1))

    def test_reorder_sign(self):
        # e1 * e0 = -e01
        assert reorder_sign(0b10, 0b01) == -1
        assert reorder_sign(0b01, 0b10) == 1

    def test_blades_canonical_order(self):
        algebra = make_algebra(Signature(1, 2))
        assert algebra.blades() == [0, 1, 2, 4, 3, 5, 6, 7]
        assert algebra.blades(2) == [3, 5, 6]

    def test_sign_table_matches_blade_sign(self):
        algebra = make_algebra(Signature(1, 3, 1))
        table = algebra.sign_table()
        assert table.dtype == np.int8
        assert table[0b10, 0b01] == -1
        assert table[0b10000, 0b10000] == 0
