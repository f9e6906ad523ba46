from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from numbers import Real
from types import MappingProxyType

import numpy as np

from app.algebra.errors import AlgebraError, AlgebraMismatchError, GradeError
from app.algebra.signature import Algebra, Blade, blade_indices, blade_sort_key


class Multivector:
    """Immutable sparse multivector: blade mask -> real coefficient, zeros absent."""

    __slots__ = ("algebra", "_terms")

    # numpy scalars defer to the reflected operators instead of broadcasting.
    __array_ufunc__ = None

    def __init__(self, algebra: Algebra, terms: Mapping[Blade, float] | None = None) -> None:
        clean: dict[Blade, float] = {}
        for key, coef in (terms or {}).items():
            mask = int(key)
            if not algebra.valid_blade(mask):
                raise AlgebraError(f"Blade {mask:#b} is not part of {algebra.signature}")
            value = float(coef)
            if value != 0.0:
                clean[mask] = value
        self.algebra = algebra
        self._terms = MappingProxyType(clean)

    # ----------------------------
    # Construction helpers
    # ----------------------------
    @classmethod
    def scalar(cls, algebra: Algebra, value: float) -> Multivector:
        return cls(algebra, {0: value})

    @classmethod
    def blade(cls, algebra: Algebra, mask: Blade, coef: float = 1.0) -> Multivector:
        return cls(algebra, {mask: coef})

    @classmethod
    def vector(cls, algebra: Algebra, coefficients: Iterable[float]) -> Multivector:
        coefs = list(coefficients)
        if len(coefs) != algebra.dims:
            raise GradeError(f"Expected {algebra.dims} vector coefficients, got {len(coefs)}")
        return cls(algebra, {1 << i: c for i, c in enumerate(coefs)})

    # ----------------------------
    # Inspection
    # ----------------------------
    @property
    def terms(self) -> Mapping[Blade, float]:
        return self._terms

    def __getitem__(self, mask: Blade) -> float:
        return self._terms.get(mask, 0.0)

    def items(self) -> list[tuple[Blade, float]]:
        """Terms in canonical blade order."""
        return sorted(self._terms.items(), key=lambda kv: blade_sort_key(kv[0]))

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self, grade: int) -> bool:
        return all(m.bit_count() == grade for m in self._terms)

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self._terms)

    def scalar_part(self) -> float:
        return self._terms.get(0, 0.0)

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.algebra.size)
        for mask, coef in self._terms.items():
            out[mask] = coef
        return out

    def vector_coefficients(self) -> list[float]:
        if not self.is_homogeneous(1):
            raise GradeError("Vector coefficients requested from a non-vector")
        return [self[1 << i] for i in range(self.algebra.dims)]

    # ----------------------------
    # Arithmetic
    # ----------------------------
    def _coerce(self, other: object) -> Multivector | None:
        if isinstance(other, Multivector):
            _same_algebra(self, other)
            return other
        if isinstance(other, Real):
            return Multivector.scalar(self.algebra, float(other))
        return None

    def __add__(self, other: object) -> Multivector:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mask, coef in rhs._terms.items():
            out[mask] = out.get(mask, 0.0) + coef
        return Multivector(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> Multivector:
        return Multivector(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> Multivector:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Multivector:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Multivector:
        if isinstance(other, Real):
            return self.scale(float(other))
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other: object) -> Multivector:
        if isinstance(other, Real):
            return self.scale(float(other))
        return NotImplemented

    def __truediv__(self, other: object) -> Multivector:
        if isinstance(other, Real):
            return self.scale(1.0 / float(other))
        return NotImplemented

    def __xor__(self, other: Multivector) -> Multivector:
        return outer(self, other)

    def __invert__(self) -> Multivector:
        return reverse(self)

    def scale(self, factor: float) -> Multivector:
        return Multivector(self.algebra, {m: c * factor for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra == other.algebra and dict(self._terms) == dict(other._terms)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        from app.algebra.text import format_multivector

        return f"Multivector({self.algebra.signature}, {format_multivector(self)!r})"


def _same_algebra(a: Multivector, b: Multivector) -> Algebra:
    if a.algebra != b.algebra:
        raise AlgebraMismatchError(f"Cannot combine {a.algebra.signature} with {b.algebra.signature}")
    return a.algebra


def basis_vector(algebra: Algebra, index: int) -> Multivector:
    if not 0 <= index < algebra.dims:
        raise AlgebraError(f"Generator index {index} is out of range for {algebra.signature}")
    return Multivector.blade(algebra, 1 << index)


def residual(a: Multivector, b: Multivector) -> float:
    """Largest absolute coefficient of a - b."""
    return (a - b).max_abs()


# ----------------------------
# Products
# ----------------------------
def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    algebra = _same_algebra(a, b)
    out: dict[Blade, float] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign = algebra.blade_sign(ma, mb)
            if sign == 0:
                continue
            m = ma ^ mb
            out[m] = out.get(m, 0.0) + sign * ca * cb
    return Multivector(algebra, out)


def outer(a: Multivector, b: Multivector) -> Multivector:
    """Wedge: the grade-(r+s) part of products of grade-r and grade-s parts."""
    algebra = _same_algebra(a, b)
    out: dict[Blade, float] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            m = ma | mb
            # Disjoint blades: only the reordering sign applies.
            out[m] = out.get(m, 0.0) + algebra.blade_sign(ma, mb) * ca * cb
    return Multivector(algebra, out)


def inner_vectors(a: Multivector, b: Multivector) -> float:
    """Symmetric vector dot: scalar part of (ab + ba)/2."""
    algebra = _same_algebra(a, b)
    if not (a.is_homogeneous(1) and b.is_homogeneous(1)):
        raise GradeError("inner_vectors needs two grade-1 arguments")
    total = 0.0
    for mask, ca in a.terms.items():
        cb = b[mask]
        if cb:
            total += algebra.blade_sign(mask, mask) * ca * cb
    return total


def commutator(a: Multivector, b: Multivector) -> Multivector:
    """a x b = (ab - ba)/2"""
    return (geometric_product(a, b) - geometric_product(b, a)).scale(0.5)


# ----------------------------
# Grade structure and duality
# ----------------------------
def grade_select(a: Multivector, grade: int) -> Multivector:
    if not 0 <= grade <= a.algebra.dims:
        raise GradeError(f"Grade {grade} is out of range for {a.algebra.signature}")
    return Multivector(a.algebra, {m: c for m, c in a.terms.items() if m.bit_count() == grade})


def reverse_sign(grade: int) -> int:
    return -1 if (grade * (grade - 1) // 2) % 2 else 1


def reverse(a: Multivector) -> Multivector:
    return Multivector(a.algebra, {m: reverse_sign(m.bit_count()) * c for m, c in a.terms.items()})


def pseudoscalar(algebra: Algebra) -> Multivector:
    return Multivector.blade(algebra, algebra.pseudoscalar_mask)


def right_mul_pseudoscalar(a: Multivector) -> Multivector:
    return geometric_product(a, pseudoscalar(a.algebra))


def pseudoscalar_square_sign(algebra: Algebra) -> int:
    """(-1)^(d(d-1)/2) times the product of all generator squares."""
    d = algebra.dims
    return reverse_sign(d) * math.prod(algebra.squares)


def left_matrix(a: Multivector) -> np.ndarray:
    """Dense matrix L with L @ x.to_dense() == (a * x).to_dense()."""
    algebra = a.algebra
    table = algebra.sign_table()
    cols = np.arange(algebra.size)
    out = np.zeros((algebra.size, algebra.size))
    for mask, coef in a.terms.items():
        out[cols ^ mask, cols] += table[mask] * coef
    return out


def describe_blade(mask: Blade) -> str:
    idx = blade_indices(mask)
    if not idx:
        return "1"
    if all(i < 10 for i in idx):
        return "e" + "".join(str(i) for i in idx)
    return "e{" + ",".join(str(i) for i in idx) + "}"
