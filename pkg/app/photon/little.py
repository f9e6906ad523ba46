from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from app.algebra.errors import AlgebraError, GradeError
from app.algebra.multivector import (
    Multivector,
    commutator,
    geometric_product,
    grade_select,
    inner_vectors,
    pseudoscalar,
)
from app.algebra.rotor import Rotor
from app.algebra.signature import Algebra, Signature, make_algebra
from app.algebra.tables import blade_products

LIGHTLIKE_TOL = 1e-12
ORTHOGONAL_TOL = 1e-12
DEGENERACY_TOL = 1e-9


class LittleAlgebraError(AlgebraError):
    pass


class NotLightlikeError(LittleAlgebraError):
    pass


@dataclass(frozen=True)
class MinkowskiLayout:
    """Which generator is timelike and what the spacelike generators square to."""

    timelike: int
    spatial: tuple[int, ...]
    spatial_square: int

    @property
    def mostly_minus(self) -> bool:
        return self.spatial_square == -1


def minkowski_layout(signature: Signature) -> MinkowskiLayout:
    if signature.r != 0:
        raise LittleAlgebraError(f"{signature} is degenerate; a Minkowski parent has no nilpotent generators")
    if signature.p == 1 and signature.q >= 1:
        return MinkowskiLayout(0, tuple(range(1, signature.dims)), -1)
    if signature.q == 1 and signature.p >= 1:
        return MinkowskiLayout(signature.p, tuple(range(signature.p)), 1)
    raise LittleAlgebraError(f"{signature} is not Minkowski: need exactly one unipotent or one anti-unipotent generator")


@dataclass(frozen=True, eq=False)
class LittleAlgebra:
    """W(k): a lightlike k with a completed frame [e0 ~ k, e1, ..., e_{n-1}] in G(1,n)."""

    parent: Algebra
    layout: MinkowskiLayout
    k: Multivector
    frame: tuple[Multivector, ...]

    @property
    def n(self) -> int:
        return len(self.frame)

    @property
    def e0(self) -> Multivector:
        return self.frame[0]

    @property
    def spatial_square(self) -> int:
        return self.layout.spatial_square

    def embed(self, mask: int) -> Multivector:
        """Parent multivector for the abstract W-blade with the given index mask."""
        return self.embedding[0][mask]

    @cached_property
    def embedding(self) -> tuple[list[Multivector], list[str]]:
        return blade_products(list(self.frame))

    def frame_dot(self, i: int, j: int) -> float:
        """Frame metric by construction: e0 null, e0 orthogonal to all, e_i.e_j = s*delta."""
        if i == 0 or j == 0:
            return 0.0
        return float(self.spatial_square) if i == j else 0.0

    def frame_coefficients(self, v: Multivector) -> tuple[list[float], float]:
        """Coefficients of v on [e0, e1, ...] plus the size of its off-frame remainder.

        The e0 coefficient is read from the timelike component after the spatial
        frame parts are removed; e0 has timelike coefficient 1.
        """
        if not v.is_homogeneous(1):
            raise GradeError("Frame coefficients need a vector")
        s = self.spatial_square
        spatial = [inner_vectors(v, e) * s for e in self.frame[1:]]
        rest = v
        for c, e in zip(spatial, self.frame[1:]):
            rest = rest - e.scale(c)
        c0 = rest[1 << self.layout.timelike]
        remainder = (rest - self.e0.scale(c0)).max_abs()
        return [c0, *spatial], remainder

    def from_frame(self, coefficients: list[float]) -> Multivector:
        out = Multivector(self.parent)
        for c, e in zip(coefficients, self.frame):
            out = out + e.scale(c)
        return out


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    rotations: tuple[Multivector, ...]
    rotation_planes: tuple[tuple[int, int], ...]
    translations: tuple[Multivector, ...]

    def rotation(self, i: int, j: int) -> Multivector:
        return self.rotations[self.rotation_planes.index((i, j))]

    def translation(self, i: int) -> Multivector:
        """N_i for frame index i >= 1."""
        if not 1 <= i <= len(self.translations):
            raise LittleAlgebraError(f"Translation index {i} is out of range 1..{len(self.translations)}")
        return self.translations[i - 1]


def _euclidean_norm2(v: Multivector) -> float:
    return sum(c * c for c in v.terms.values())


def construct_little_algebra(parent: Signature | Algebra, k: Multivector) -> LittleAlgebra:
    algebra = parent if isinstance(parent, Algebra) else make_algebra(parent)
    layout = minkowski_layout(algebra.signature)
    if k.algebra != algebra:
        raise LittleAlgebraError(f"k lives in {k.algebra.signature}, parent is {algebra.signature}")
    if not k.is_homogeneous(1):
        raise GradeError("k must be a vector")
    if k.is_zero():
        raise NotLightlikeError("k is zero")
    norm2 = _euclidean_norm2(k)
    kk = inner_vectors(k, k)
    if abs(kk) > LIGHTLIKE_TOL * norm2:
        raise NotLightlikeError(f"k is not lightlike: k.k = {kk!r}")

    t = k[1 << layout.timelike]
    e0 = k.scale(1.0 / t)
    direction = np.array([e0[1 << i] for i in layout.spatial])

    # Consume the spatial generator most parallel to k first (lowest index on ties),
    # then orthonormalise the rest against k's spatial direction.
    magnitudes = [abs(x) for x in direction]
    skip = magnitudes.index(max(magnitudes))
    accepted = [direction]
    frame = [e0]
    for pos, gen in enumerate(layout.spatial):
        if pos == skip:
            continue
        v = np.zeros(len(layout.spatial))
        v[pos] = 1.0
        for b in accepted:
            dot = float(v @ b)
            if dot != 0.0:
                v = v - dot * b
        norm = float(np.sqrt(v @ v))
        if norm < DEGENERACY_TOL:
            raise LittleAlgebraError(f"Frame completion degenerated at generator {gen}")
        if norm != 1.0:
            v = v / norm
        accepted.append(v)
        coefs = {1 << g: float(x) for g, x in zip(layout.spatial, v)}
        frame.append(Multivector(algebra, coefs))

    return LittleAlgebra(parent=algebra, layout=layout, k=k, frame=tuple(frame))


def little_generators(la: LittleAlgebra) -> GeneratorSet:
    # On the orthogonal frame e_i.e_j is only float noise.
    translations = tuple(grade_select(geometric_product(e, la.e0), 2) for e in la.frame[1:])
    planes: list[tuple[int, int]] = []
    rotations: list[Multivector] = []
    for i in range(1, la.n):
        for j in range(i + 1, la.n):
            planes.append((i, j))
            rotations.append(grade_select(geometric_product(la.frame[i], la.frame[j]), 2))
    return GeneratorSet(tuple(rotations), tuple(planes), translations)


def split_angle(theta: Multivector | float, algebra: Algebra) -> tuple[float, float]:
    """(alpha, beta) of theta = alpha + beta*I; anything else is rejected."""
    if not isinstance(theta, Multivector):
        return float(theta), 0.0
    extra = set(theta.terms) - {0, algebra.pseudoscalar_mask}
    if extra:
        raise GradeError("theta may only hold scalar and pseudoscalar terms")
    return theta.scalar_part(), theta[algebra.pseudoscalar_mask]


def complex_angle(algebra: Algebra, alpha: float, beta: float = 0.0) -> Multivector:
    return Multivector(algebra, {0: alpha, algebra.pseudoscalar_mask: beta})


def dual_translation(la: LittleAlgebra, i: int) -> list[float] | None:
    """Coefficients d with N_i I = sum_j d_j N_j, or None when N_i I leaves that span."""
    gens = little_generators(la)
    dual = geometric_product(gens.translation(i), pseudoscalar(la.parent))
    if not dual.is_homogeneous(2) or dual.is_zero():
        return None
    basis = np.column_stack([t.to_dense() for t in gens.translations])
    target = dual.to_dense()
    coefs = np.linalg.lstsq(basis, target, rcond=None)[0]
    if np.abs(basis @ coefs - target).max() > ORTHOGONAL_TOL:
        return None
    return [float(c) for c in coefs]


def translation_rotor(la: LittleAlgebra, i: int, theta: Multivector | float) -> Rotor:
    """Lambda = 1 - theta N_i / 2, the closed form of exp(-theta N_i / 2)."""
    alpha, beta = split_angle(theta, la.parent)
    n_i = little_generators(la).translation(i)
    if beta != 0.0:
        if dual_translation(la, i) is None:
            raise LittleAlgebraError(f"N_{i} I leaves the translation span in {la.parent.signature}; theta must be real")
        ps = pseudoscalar(la.parent)
        if not commutator(ps, n_i).is_zero():
            raise LittleAlgebraError(f"The pseudoscalar of {la.parent.signature} does not commute with N_{i}")
    theta_mv = complex_angle(la.parent, alpha, beta)
    value = geometric_product(theta_mv, n_i).scale(-0.5) + 1.0
    return Rotor(value)


def canonical_bivector(s: Multivector, k: Multivector) -> Multivector:
    """sk, which equals s^k when s.k = 0."""
    if not (s.is_homogeneous(1) and k.is_homogeneous(1)):
        raise GradeError("canonical_bivector needs two vectors")
    scale = max(1.0, np.sqrt(_euclidean_norm2(s) * _euclidean_norm2(k)))
    sk = inner_vectors(s, k)
    if abs(sk) > ORTHOGONAL_TOL * scale:
        raise LittleAlgebraError(f"s is not orthogonal to k: s.k = {sk!r}")
    return geometric_product(s, k)


def spatial_vector(la: LittleAlgebra, coefficients: list[float]) -> Multivector:
    """s = sum_m c_m e_m over the spatial frame (c has n-1 entries)."""
    if len(coefficients) != la.n - 1:
        raise LittleAlgebraError(f"Expected {la.n - 1} spatial coefficients, got {len(coefficients)}")
    return la.from_frame([0.0, *coefficients])


def translation_weights(la: LittleAlgebra, i: int, theta: Multivector | float) -> list[float]:
    """t_j with theta N_i = sum_j t_j N_j."""
    alpha, beta = split_angle(theta, la.parent)
    weights = [0.0] * (la.n - 1)
    weights[i - 1] += alpha
    if beta != 0.0:
        dual = dual_translation(la, i)
        if dual is None:
            raise LittleAlgebraError(f"N_{i} I leaves the translation span in {la.parent.signature}")
        for j, d in enumerate(dual):
            weights[j] += beta * d
    return weights


def canonical_wavevector(algebra: Algebra) -> Multivector:
    """Timelike generator plus the last spacelike one (gamma0 + gamma3 in G(1,3))."""
    layout = minkowski_layout(algebra.signature)
    return Multivector(algebra, {1 << layout.timelike: 1.0, 1 << layout.spatial[-1]: 1.0})
