from __future__ import annotations

from dataclasses import dataclass

from app.algebra.errors import GradeError
from app.algebra.multivector import Multivector, basis_vector, geometric_product, pseudoscalar, pseudoscalar_square_sign
from app.algebra.signature import Algebra
from app.photon.little import minkowski_layout


@dataclass(frozen=True, eq=False)
class SplitResult:
    observer: int
    coefficients: tuple[float, ...]
    even_element: Multivector

    def recompose(self) -> Multivector:
        algebra = self.even_element.algebra
        return geometric_product(self.even_element, basis_vector(algebra, self.observer))


def _observer(algebra: Algebra, observer: int | None) -> tuple[int, Multivector]:
    layout = minkowski_layout(algebra.signature)
    index = layout.timelike if observer is None else observer
    if index != layout.timelike:
        raise GradeError(f"Observer must be the timelike generator {layout.timelike}, got {index}")
    gamma = basis_vector(algebra, index)
    inverse = gamma.scale(1.0 / algebra.squares[index])
    return index, inverse


def _read(even: Multivector, basis: list[Multivector]) -> tuple[float, ...]:
    """Coefficients of even on basis elements that are each a single signed blade."""
    out = []
    for b in basis:
        (mask, sign), = b.terms.items()
        out.append(even[mask] / sign)
    return tuple(out)


def spacetime_split_vector(v: Multivector, observer: int | None = None) -> SplitResult:
    """v = (v0 + sum_j v_j g_j g0) g0."""
    if not v.is_homogeneous(1):
        raise GradeError("Vector split needs a grade-1 argument")
    algebra = v.algebra
    index, inverse = _observer(algebra, observer)
    even = geometric_product(v, inverse)
    gamma = basis_vector(algebra, index)
    spatial = [j for j in range(algebra.dims) if j != index]
    basis = [Multivector.scalar(algebra, 1.0)] + [geometric_product(basis_vector(algebra, j), gamma) for j in spatial]
    return SplitResult(index, _read(even, basis), even)


def trivector_split_basis(algebra: Algebra, observer: int | None = None) -> list[Multivector]:
    """[I^-1, -g_j I_s for each spatial j]; in G(1,3) that is [I^-1, g23, g31, g12]."""
    index, _ = _observer(algebra, observer)
    spatial = [j for j in range(algebra.dims) if j != index]
    ps = pseudoscalar(algebra)
    basis = [ps.scale(pseudoscalar_square_sign(algebra))]
    spatial_ps = Multivector.blade(algebra, sum(1 << j for j in spatial))
    for j in spatial:
        basis.append(-geometric_product(basis_vector(algebra, j), spatial_ps))
    return basis


def spacetime_split_trivector(t: Multivector, observer: int | None = None) -> SplitResult:
    """T = (T0 I^-1 + sum_j T_j B_j) g0 over the basis of trivector_split_basis."""
    algebra = t.algebra
    if algebra.dims < 3 or not t.is_homogeneous(algebra.dims - 1):
        raise GradeError(f"Trivector split needs a grade-{algebra.dims - 1} argument")
    index, inverse = _observer(algebra, observer)
    even = geometric_product(t, inverse)
    return SplitResult(index, _read(even, trivector_split_basis(algebra, index)), even)
