from __future__ import annotations

import numpy as np

from app.algebra.multivector import Multivector, pseudoscalar
from app.algebra.signature import Algebra
from app.photon.little import LittleAlgebra, MinkowskiLayout, complex_angle, spatial_vector

COEFFICIENT_RANGE = 2.0


def trial_generators(seed: int, trials: int) -> list[np.random.Generator]:
    """One independent stream per trial so trial i never depends on trial count."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


class Sampler:
    """Random configurations: coefficients uniform in [-2, 2]."""

    def __init__(self, rng: np.random.Generator) -> None:
        self._rng = rng

    def uniform(self, size: int | None = None, bound: float = COEFFICIENT_RANGE) -> np.ndarray | float:
        return self._rng.uniform(-bound, bound, size)

    def lightlike(self, algebra: Algebra, layout: MinkowskiLayout) -> Multivector:
        """Timelike generator plus a random unit spatial direction."""
        direction = self._rng.normal(size=len(layout.spatial))
        norm = float(np.linalg.norm(direction))
        while norm < 1e-6:
            direction = self._rng.normal(size=len(layout.spatial))
            norm = float(np.linalg.norm(direction))
        direction = direction / norm
        terms = {1 << layout.timelike: 1.0}
        terms.update({1 << g: float(x) for g, x in zip(layout.spatial, direction)})
        return Multivector(algebra, terms)

    def spatial(self, la: LittleAlgebra) -> Multivector:
        return spatial_vector(la, [float(c) for c in self.uniform(la.n - 1)])

    def theta(self, la: LittleAlgebra, complex_like: bool, bound: float = COEFFICIENT_RANGE) -> Multivector:
        alpha = float(self.uniform(bound=bound))
        beta = float(self.uniform(bound=bound)) if complex_like else 0.0
        return complex_angle(la.parent, alpha, beta)

    def vector(self, algebra: Algebra) -> Multivector:
        return Multivector.vector(algebra, [float(c) for c in self.uniform(algebra.dims)])

    def gauge_potential(self, la: LittleAlgebra) -> Multivector:
        """z = a + bI with a and b orthogonal to k."""
        a = la.from_frame([float(c) for c in self.uniform(la.n)])
        b = la.from_frame([float(c) for c in self.uniform(la.n)])
        return a + b * pseudoscalar(la.parent)

    def potential(self, algebra: Algebra) -> Multivector:
        """z = a + bI with unconstrained a and b."""
        return self.vector(algebra) + self.vector(algebra) * pseudoscalar(algebra)
