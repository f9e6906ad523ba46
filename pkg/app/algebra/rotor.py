from __future__ import annotations

import math
from dataclasses import dataclass

from app.algebra.errors import ConvergenceError, GradeError, RotorNormError
from app.algebra.multivector import Multivector, geometric_product, reverse

ROTOR_NORM_TOL = 1e-9
SCALAR_SQUARE_TOL = 1e-12
SERIES_TERM_TOL = 1e-14
SERIES_MAX_TERMS = 64


def rotor_norm_residual(value: Multivector) -> float:
    """Largest coefficient of value * reverse(value) - 1."""
    return (geometric_product(value, reverse(value)) - 1.0).max_abs()


@dataclass(frozen=True, eq=False)
class Rotor:
    value: Multivector

    def __post_init__(self) -> None:
        if not self.value.is_even():
            raise RotorNormError("Rotor must be an even multivector")
        norm = rotor_norm_residual(self.value)
        # cosh^2 - sinh^2 cancels; the error grows with the coefficient size.
        scale = max(1.0, sum(c * c for c in self.value.terms.values()))
        if norm > ROTOR_NORM_TOL * scale:
            raise RotorNormError(f"Rotor norm deviates from 1 by {norm:.3e}")

    @classmethod
    def identity(cls, algebra) -> Rotor:
        return cls(Multivector.scalar(algebra, 1.0))

    @property
    def algebra(self):
        return self.value.algebra

    def reversed(self) -> Multivector:
        return reverse(self.value)

    def __mul__(self, other: Rotor) -> Rotor:
        return Rotor(geometric_product(self.value, other.value))


def _scalar_square(x: Multivector) -> float | None:
    """Return x*x when it is a scalar (to tolerance), otherwise None."""
    sq = geometric_product(x, x)
    scalar = sq.scalar_part()
    rest = (sq - scalar).max_abs()
    if rest <= SCALAR_SQUARE_TOL * max(1.0, abs(scalar)):
        return scalar
    return None


def _exp_series(x: Multivector) -> Multivector:
    total = Multivector.scalar(x.algebra, 1.0)
    term = total
    for n in range(1, SERIES_MAX_TERMS + 1):
        term = geometric_product(term, x).scale(1.0 / n)
        total = total + term
        if term.max_abs() < SERIES_TERM_TOL:
            return total
    raise ConvergenceError(f"Exponential series did not converge within {SERIES_MAX_TERMS} terms")


def exp_bivector(bivector: Multivector, scale: float) -> Rotor:
    """exp(scale * bivector), closed form when the square is a scalar."""
    if not bivector.is_homogeneous(2):
        raise GradeError("exp_bivector needs a pure grade-2 argument")
    x = bivector.scale(scale)
    if x.is_zero():
        return Rotor.identity(bivector.algebra)

    sq = _scalar_square(x)
    if sq is None:
        return Rotor(_exp_series(x))
    if abs(sq) <= SCALAR_SQUARE_TOL:
        # Nilpotent: the series stops after the linear term.
        return Rotor(x + 1.0)
    lam = math.sqrt(abs(sq))
    if sq < 0:
        return Rotor(x.scale(math.sin(lam) / lam) + math.cos(lam))
    return Rotor(x.scale(math.sinh(lam) / lam) + math.cosh(lam))


def sandwich(rotor: Rotor, x: Multivector) -> Multivector:
    """rotor * x * reverse(rotor)"""
    return geometric_product(geometric_product(rotor.value, x), rotor.reversed())
