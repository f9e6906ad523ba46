"""Relative view: intersect origin-incident subspaces of G(1,n) with a time slice.

A grade-1 element x stands for the hyperplane {p : p.x = 0}; a blade of grade g
stands for the intersection of the hyperplanes of its factors, i.e. the
metric-orthogonal complement of its span. Cutting that subspace with the
affine slice {p^t = slice_time} leaves a point, line or plane in relative
space, or nothing (the element is seen at infinity).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from app.algebra.errors import AlgebraError
from app.algebra.multivector import Multivector, basis_vector, outer
from app.photon.little import LittleAlgebra, minkowski_layout
from app.suite.report import DEFAULT_TOL, Entry

log = logging.getLogger(__name__)

NULL_RTOL = 1e-10
LOCUS_TOL = 1e-10
KINDS = ("point", "line", "plane")


class SliceError(AlgebraError):
    pass


@dataclass(frozen=True)
class Primitive:
    kind: str
    label: str
    point: tuple[float, ...] = ()
    directions: tuple[tuple[float, ...], ...] = ()
    radius: float = 0.0
    style: str = "solid"
    in_view: bool = True

    @property
    def distance(self) -> float:
        """Distance of the closest point to the relative origin."""
        if not self.in_view:
            return float("inf")
        return float(np.linalg.norm(self.point))


@dataclass(frozen=True)
class RelativeViewScene:
    dimension: int
    slice_time: float
    primitives: tuple[Primitive, ...] = field(default_factory=tuple)
    title: str = ""

    def __post_init__(self) -> None:
        if self.dimension not in (2, 3):
            raise SliceError(f"Relative space must be 2D or 3D, got {self.dimension}")
        for p in self.primitives:
            if p.in_view and len(p.point) != self.dimension:
                raise SliceError(f"Primitive {p.label!r} has coordinates outside {self.dimension}D relative space")

    def with_primitive(self, primitive: Primitive) -> RelativeViewScene:
        return RelativeViewScene(self.dimension, self.slice_time, (*self.primitives, primitive), self.title)


def _null_space(a: np.ndarray) -> np.ndarray:
    """Orthonormal columns spanning {v : a v = 0}."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols)
    _, sv, vt = np.linalg.svd(a)
    scale = max(1.0, float(sv.max()) if sv.size else 0.0)
    rank = int(np.sum(sv > NULL_RTOL * scale))
    return vt[rank:].T.copy()


def blade_span(x: Multivector) -> np.ndarray:
    """Columns spanning {v : v ^ x = 0}, the subspace a blade stands for."""
    algebra = x.algebra
    wedges = np.column_stack([outer(basis_vector(algebra, i), x).to_dense() for i in range(algebra.dims)])
    return _null_space(wedges)


def _clean(values: np.ndarray) -> tuple[float, ...]:
    # -0.0 and float noise would leak into deterministic output
    return tuple(0.0 if abs(v) < 1e-15 else float(v) for v in values)


def _oriented(direction: np.ndarray) -> np.ndarray:
    """Sign-flip so the first non-negligible component is positive."""
    for v in direction:
        if abs(v) >= 1e-15:
            return direction if v > 0 else -direction
    return direction


def _orthonormal(columns: np.ndarray) -> np.ndarray:
    if columns.shape[1] == 0:
        return columns
    q, _ = np.linalg.qr(columns)
    return q


def slice_primitive(x: Multivector, slice_time: float, label: str = "", style: str = "solid") -> Primitive:
    algebra = x.algebra
    layout = minkowski_layout(algebra.signature)
    n = algebra.dims - 1
    if n not in (2, 3):
        raise SliceError(f"Relative views are drawn for G(1,2) and G(1,3), got {algebra.signature}")
    grades = x.grades()
    if len(grades) != 1 or x.is_zero():
        raise SliceError("Only non-zero homogeneous elements can be sliced")
    (grade,) = grades
    if not 1 <= grade <= algebra.dims:
        raise SliceError(f"Grade {grade} has no relative view")

    remaining = algebra.dims - grade - 1
    kind = KINDS[remaining] if remaining >= 0 else "point"
    hidden = Primitive(kind=kind, label=label, style=style, in_view=False)

    span = blade_span(x)
    if span.shape[1] != grade:
        raise SliceError(f"{label or 'element'} is not a blade: its span has dimension {span.shape[1]}, grade {grade}")
    metric = np.asarray(algebra.squares, dtype=float)
    subspace = _null_space((span * metric[:, np.newaxis]).T)
    if subspace.shape[1] == 0:
        return hidden

    t = layout.timelike
    rel = list(layout.spatial)
    row = subspace[t]
    row_norm = float(row @ row)
    if row_norm <= NULL_RTOL:
        log.debug("Slice misses %s: subspace lies in the slice direction", label or "element")
        return hidden

    coef = row * (slice_time / row_norm)
    base = (subspace @ coef)[rel]
    directions = (subspace @ _null_space(row[np.newaxis, :]))[rel]
    directions = _orthonormal(directions)
    # Move the anchor to the point closest to the relative origin.
    if directions.shape[1]:
        base = base - directions @ (directions.T @ base)
    return Primitive(
        kind=KINDS[directions.shape[1]],
        label=label,
        point=_clean(base),
        directions=tuple(_clean(_oriented(d)) for d in directions.T),
        style=style,
    )


def light_circle(dimension: int, slice_time: float, label: str = "light-circle") -> Primitive:
    """The lightcone cut at slice_time: circle (2D) or sphere outline (3D) of radius |slice_time|."""
    return Primitive(kind="circle", label=label, point=(0.0,) * dimension, radius=abs(float(slice_time)), style="dashed")


def same_locus(a: Primitive, b: Primitive, tol: float = LOCUS_TOL) -> bool:
    """Equal as point sets, ignoring labels, style and orientation."""
    return locus_distance(a, b) <= tol


def locus_distance(a: Primitive, b: Primitive) -> float:
    if a.in_view != b.in_view or a.kind != b.kind:
        return float("inf")
    if not a.in_view:
        return 0.0
    pa, pb = np.asarray(a.point), np.asarray(b.point)
    if a.kind == "circle":
        return max(float(np.abs(pa - pb).max()), abs(a.radius - b.radius))
    da = np.asarray(a.directions).reshape(len(a.directions), len(a.point)).T
    db = np.asarray(b.directions).reshape(len(b.directions), len(b.point)).T
    proj_a = da @ da.T
    proj_b = db @ db.T
    return max(float(np.abs(pa - pb).max()), float(np.abs(proj_a - proj_b).max()) if da.size else 0.0)


def lightcone_contact(la: LittleAlgebra, slice_time: float = 1.0, tol: float = DEFAULT_TOL) -> list[Entry]:
    """k and every worldline e_i ^ e0 touch the light-circle (or light-sphere)."""
    entries = [
        Entry.measure(
            "slice of k touches the lightcone",
            "lightcone-contact",
            abs(slice_primitive(la.k, slice_time).distance - abs(slice_time)),
            tol,
        )
    ]
    for i, e in enumerate(la.frame[1:], start=1):
        prim = slice_primitive(outer(e, la.e0), slice_time)
        entries.append(
            Entry.measure(
                f"slice of e{i}^e0 touches the lightcone",
                "lightcone-contact",
                abs(prim.distance - abs(slice_time)),
                tol,
            )
        )
    return entries


def point_on(primitive: Primitive, point: np.ndarray) -> float:
    """Distance from a relative-space point to the primitive's point set."""
    if not primitive.in_view:
        return float("inf")
    offset = np.asarray(point, dtype=float) - np.asarray(primitive.point)
    if primitive.kind == "circle":
        return abs(float(np.linalg.norm(offset)) - primitive.radius)
    for d in primitive.directions:
        dv = np.asarray(d)
        offset = offset - dv * float(dv @ offset)
    return float(np.linalg.norm(offset))
