from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from app.algebra.errors import AlgebraError
from app.algebra.multivector import Multivector, geometric_product, left_matrix
from app.algebra.signature import blade_indices

GRAM_DIAGONAL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StructureTable:
    """c[i, j, k]: coefficient of basis k in basis_i * basis_j."""

    labels: tuple[str, ...]
    coefficients: np.ndarray
    closure_residual: float

    @property
    def size(self) -> int:
        return len(self.labels)

    def max_difference(self, other: StructureTable) -> float:
        if self.coefficients.shape != other.coefficients.shape:
            raise AlgebraError(
                f"Structure tables differ in size: {self.size} vs {other.size} basis elements"
            )
        return float(np.abs(self.coefficients - other.coefficients).max())


def blade_products(vectors: list[Multivector]) -> tuple[list[Multivector], list[str]]:
    """Products of the given vectors over every index subset, in ascending index order.

    Subset masks enumerate in natural integer order; labels use 'w' for the
    abstract basis so they are not mistaken for parent blades.
    """
    if not vectors:
        raise AlgebraError("Cannot build a blade basis from an empty frame")
    algebra = vectors[0].algebra
    one = Multivector.scalar(algebra, 1.0)
    basis: list[Multivector] = []
    labels: list[str] = []
    for mask in range(1 << len(vectors)):
        idx = blade_indices(mask)
        basis.append(reduce(geometric_product, (vectors[i] for i in idx), one))
        labels.append("w" + "".join(str(i) for i in idx) if idx else "1")
    return basis, labels


def structure_constants(basis: list[Multivector], labels: list[str]) -> StructureTable:
    dense = np.column_stack([b.to_dense() for b in basis])
    gram = dense.T @ dense
    diag = np.diag(gram)
    off_diagonal = np.abs(gram - np.diag(diag)).max()

    if off_diagonal <= GRAM_DIAGONAL_TOL and np.all(diag > 0):
        # Orthogonal columns: project directly, exact for integer-valued frames.
        def solve(products: np.ndarray) -> np.ndarray:
            return (dense.T @ products) / diag[:, np.newaxis]
    else:
        def solve(products: np.ndarray) -> np.ndarray:
            return np.linalg.lstsq(dense, products, rcond=None)[0]

    m = len(basis)
    coefficients = np.zeros((m, m, m))
    closure = 0.0
    for i, left in enumerate(basis):
        products = left_matrix(left) @ dense
        solved = solve(products)
        closure = max(closure, float(np.abs(dense @ solved - products).max()))
        coefficients[i] = solved.T
    return StructureTable(tuple(labels), coefficients, closure)
