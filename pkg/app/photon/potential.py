from __future__ import annotations

from app.algebra.errors import GradeError, SignatureError
from app.algebra.multivector import (
    Multivector,
    basis_vector,
    geometric_product,
    grade_select,
    inner_vectors,
    pseudoscalar,
    pseudoscalar_square_sign,
    residual,
)
from app.algebra.rotor import Rotor, sandwich
from app.algebra.signature import Algebra
from app.photon.little import (
    LittleAlgebra,
    canonical_wavevector,
    complex_angle,
    translation_rotor,
    translation_weights,
)
from app.photon.lorentz import STA
from app.suite.report import DEFAULT_TOL, Entry

GAUGE_TOL = 1e-12


def split_potential(z: Multivector) -> tuple[Multivector, Multivector]:
    """z = a + bI -> (a, b), both vectors."""
    algebra = z.algebra
    d = algebra.dims
    if d < 3:
        raise GradeError(f"Vector and dual-vector grades coincide in {algebra.signature}")
    if z.grades() - {1, d - 1}:
        raise GradeError(f"A potential holds grades 1 and {d - 1} only, got {sorted(z.grades())}")
    a = grade_select(z, 1)
    dual = grade_select(z, d - 1)
    # I^-1 = I / I^2 and I^2 = +-1
    b = geometric_product(dual, pseudoscalar(algebra)).scale(pseudoscalar_square_sign(algebra))
    return a, b


def gauge_residual(z: Multivector, k: Multivector | None = None) -> float:
    a, b = split_potential(z)
    k = canonical_wavevector(z.algebra) if k is None else k
    return max(abs(inner_vectors(a, k)), abs(inner_vectors(b, k)))


def gauge_check(z: Multivector, k: Multivector | None = None, tol: float = GAUGE_TOL) -> bool:
    """a.k = 0 and b.k = 0; for k = gamma0 + gamma3 that is a0 = a3 and b0 = b3."""
    return gauge_residual(z, k) <= tol


def transform_potential(rotor: Rotor, z: Multivector) -> Multivector:
    split_potential(z)
    return sandwich(rotor, z)


def _closed_form_vector(la: LittleAlgebra, weights: list[float], v: Multivector) -> Multivector:
    coefs, _ = la.frame_coefficients(v)
    shift = la.spatial_square * sum(t * c for t, c in zip(weights, coefs[1:]))
    return la.from_frame([coefs[0] + shift, *coefs[1:]])


def potential_closed_form(la: LittleAlgebra, i: int, theta: Multivector | float, z: Multivector) -> Multivector:
    """Translated potential read off the frame: only the e0 coefficient moves.

    Components of a and b off the frame (which exist when the gauge condition
    fails) are dropped, so the result then disagrees with the sandwich.
    """
    a, b = split_potential(z)
    weights = translation_weights(la, i, theta)
    moved_a = _closed_form_vector(la, weights, a)
    moved_b = _closed_form_vector(la, weights, b)
    return moved_a + geometric_product(moved_b, pseudoscalar(la.parent))


def sta_closed_form(alpha: float, beta: float, a: list[float], b: list[float], algebra: Algebra) -> Multivector:
    """(g0+g3)(a0-a a2-b a1 + (b0-a b2-b b1)I) + g1(a1+b1 I) + g2(a2+b2 I) in G(1,3)."""
    if algebra.signature != STA:
        raise SignatureError(f"The explicit potential formula lives in {STA}")
    g = [basis_vector(algebra, i) for i in range(4)]
    head = complex_angle(
        algebra,
        a[0] - alpha * a[2] - beta * a[1],
        b[0] - alpha * b[2] - beta * b[1],
    )
    return (
        geometric_product(g[0] + g[3], head)
        + geometric_product(g[1], complex_angle(algebra, a[1], b[1]))
        + geometric_product(g[2], complex_angle(algebra, a[2], b[2]))
    )


def gauge_closed_form_check(
    la: LittleAlgebra,
    z: Multivector,
    theta: Multivector | float,
    direction: int | None = None,
    tol: float = DEFAULT_TOL,
) -> Entry:
    return Entry.measure("L z ~L = closed form (gauge holds)", "gauge", closed_form_residual(la, z, theta, direction), tol)


def closed_form_residual(la: LittleAlgebra, z: Multivector, theta: Multivector | float, direction: int | None = None) -> float:
    """Distance between the sandwich and the closed form; large when the gauge fails."""
    i = la.n - 1 if direction is None else direction
    got = transform_potential(translation_rotor(la, i, theta), z)
    return residual(got, potential_closed_form(la, i, theta, z))
