from __future__ import annotations

import logging
from collections.abc import Callable

from app.algebra.multivector import basis_vector, outer
from app.algebra.rotor import exp_bivector, sandwich
from app.algebra.signature import Signature, make_algebra
from app.photon.little import construct_little_algebra, little_generators, translation_rotor
from app.view.slicing import RelativeViewScene, SliceError, light_circle, slice_primitive

log = logging.getLogger(__name__)

LIGHTCONE_ALGEBRA = Signature(1, 2, 0)
SPACETIME_ALGEBRA = Signature(1, 3, 0)


def basis_scene(slice_time: float = 1.0) -> RelativeViewScene:
    """Basis vectors of G(1,3) as mirrors: e1, e2, e3 are the relative coordinate planes, e0 is at infinity."""
    algebra = make_algebra(SPACETIME_ALGEBRA)
    scene = RelativeViewScene(3, slice_time, title="relative view of the basis")
    scene = scene.with_primitive(light_circle(3, slice_time, "light-sphere"))
    for i in (1, 2, 3):
        scene = scene.with_primitive(slice_primitive(basis_vector(algebra, i), slice_time, label=f"e{i}"))
    return scene.with_primitive(slice_primitive(basis_vector(algebra, 0), slice_time, label="e0"))


def lightcone_scene(slice_time: float = 1.0) -> RelativeViewScene:
    """k = e0 + e2 and s = e1 in G(1,2): the k-line is tangent to the light-circle, the s-line meets it there."""
    algebra = make_algebra(LIGHTCONE_ALGEBRA)
    k = basis_vector(algebra, 0) + basis_vector(algebra, 2)
    s = basis_vector(algebra, 1)
    return RelativeViewScene(
        2,
        slice_time,
        (
            light_circle(2, slice_time),
            slice_primitive(k, slice_time, label="k"),
            slice_primitive(s, slice_time, label="s"),
        ),
        title="lightlike k in the lightcone algebra",
    )


def invariance_scene(slice_time: float = 1.0, theta: float = 1.0, alpha: float = 1.0) -> RelativeViewScene:
    """s, its translated image s', its rotated image s'' and the unchanged worldline sk in G(1,3)."""
    algebra = make_algebra(SPACETIME_ALGEBRA)
    k = basis_vector(algebra, 0) + basis_vector(algebra, 3)
    la = construct_little_algebra(algebra, k)
    # N2 shifts s along e0 only through its e2 component
    s = la.frame[2]
    translated = sandwich(translation_rotor(la, 2, theta), s)
    rotated = sandwich(exp_bivector(little_generators(la).rotation(1, 2), -alpha / 2), s)
    return RelativeViewScene(
        3,
        slice_time,
        (
            slice_primitive(s, slice_time, label="s"),
            slice_primitive(translated, slice_time, label="s'", style="dashed"),
            slice_primitive(rotated, slice_time, label="s''", style="dashed"),
            slice_primitive(outer(s, k), slice_time, label="sk"),
        ),
        title="translations fix the worldline sk",
    )


FIGURES: dict[str, Callable[[float], RelativeViewScene]] = {
    "basis": basis_scene,
    "lightcone": lightcone_scene,
    "invariance": invariance_scene,
}


def build_scene(name: str, slice_time: float = 1.0) -> RelativeViewScene:
    try:
        factory = FIGURES[name]
    except KeyError:
        raise SliceError(f"Unknown figure {name!r}; choose one of {', '.join(FIGURES)}") from None
    log.info("Building figure %s at t=%g", name, slice_time)
    return factory(slice_time)
