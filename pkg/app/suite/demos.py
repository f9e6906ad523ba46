from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from app.algebra.multivector import Multivector, basis_vector, commutator, geometric_product, outer, pseudoscalar, residual
from app.algebra.rotor import exp_bivector, sandwich
from app.algebra.signature import make_algebra
from app.algebra.text import format_multivector
from app.photon.little import complex_angle, construct_little_algebra, little_generators, spatial_vector, translation_rotor
from app.photon.lorentz import STA, lorentz_table_check
from app.photon.potential import gauge_check, sta_closed_form, transform_potential

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DemoRow:
    label: str
    closed_form: str
    computed: str
    residual: float


@dataclass(frozen=True)
class DemoResult:
    name: str
    inputs: tuple[tuple[str, str], ...]
    rows: tuple[DemoRow, ...]
    notes: tuple[str, ...] = field(default_factory=tuple)

    def worst_residual(self) -> float:
        return max((r.residual for r in self.rows), default=0.0)


@dataclass(frozen=True)
class DemoParams:
    alpha: float = 1.0
    beta: float = 0.0
    theta: float | None = None
    a: tuple[float, ...] = (1.0, 0.5, 0.25, 1.0)
    b: tuple[float, ...] = (0.0, 0.0, 0.0, 0.0)


def _row(label: str, expected: Multivector, got: Multivector) -> DemoRow:
    return DemoRow(label, format_multivector(expected), format_multivector(got), residual(got, expected))


def _photon_algebra():
    algebra = make_algebra(STA)
    k = basis_vector(algebra, 0) + basis_vector(algebra, 3)
    return algebra, construct_little_algebra(algebra, k)


def demo_commutators(params: DemoParams) -> DemoResult:
    algebra, la = _photon_algebra()
    gens = little_generators(la)
    j3, n1, n2 = gens.rotation(1, 2), gens.translation(1), gens.translation(2)
    rows = [DemoRow(e.label, "", "", e.residual) for e in lorentz_table_check(algebra)]
    rows += [
        _row("N1 x N2 = 0", Multivector(algebra), commutator(n1, n2)),
        _row("J3 x N1 = N2", n2, commutator(j3, n1)),
        _row("J3 x N2 = -N1", -n1, commutator(j3, n2)),
    ]
    inputs = (
        ("J3", format_multivector(j3)),
        ("N1", format_multivector(n1)),
        ("N2", format_multivector(n2)),
    )
    return DemoResult("commutators", inputs, tuple(rows))


def demo_rotor(params: DemoParams) -> DemoResult:
    algebra, la = _photon_algebra()
    alpha = params.alpha if params.theta is None else params.theta
    theta = complex_angle(algebra, alpha, params.beta)
    n2 = little_generators(la).translation(2)
    theta_n2 = geometric_product(theta, n2)
    closed = translation_rotor(la, 2, theta).value
    series = exp_bivector(theta_n2, -0.5).value
    rows = (
        _row("(theta N2)^2 = 0", Multivector(algebra), geometric_product(theta_n2, theta_n2)),
        _row("exp(-theta N2/2) = 1 - theta N2/2", closed, series),
    )
    return DemoResult("rotor", (("theta", format_multivector(theta)), ("N2", format_multivector(n2))), rows)


def demo_gauge(params: DemoParams) -> DemoResult:
    algebra, la = _photon_algebra()
    if len(params.a) != 4 or len(params.b) != 4:
        raise ValueError("a and b take four comma-separated coefficients")
    ps = pseudoscalar(algebra)
    a = Multivector.vector(algebra, params.a)
    b = Multivector.vector(algebra, params.b)
    z = a + geometric_product(b, ps)
    theta = complex_angle(algebra, params.alpha, params.beta)
    got = transform_potential(translation_rotor(la, 2, theta), z)
    expected = sta_closed_form(params.alpha, params.beta, list(params.a), list(params.b), algebra)
    notes = () if gauge_check(z) else ("gauge condition a0 = a3, b0 = b3 fails: the closed form does not apply",)
    inputs = (
        ("alpha", f"{params.alpha:g}"),
        ("beta", f"{params.beta:g}"),
        ("z", format_multivector(z)),
    )
    return DemoResult("gauge", inputs, (_row("L z ~L", expected, got),), notes)


def demo_invariance(params: DemoParams) -> DemoResult:
    algebra, la = _photon_algebra()
    alpha = params.alpha if params.theta is None else params.theta
    theta = complex_angle(algebra, alpha, params.beta)
    s = spatial_vector(la, [1.0, 1.0])
    k = la.k
    moved = sandwich(translation_rotor(la, 2, theta), s)
    # s' = s - (alpha s2 + beta s1) e0 with s1 = s2 = 1
    expected = s - la.e0.scale(alpha + params.beta)
    rotated = sandwich(exp_bivector(little_generators(la).rotation(1, 2), -alpha / 2), s)
    rows = (
        _row("L s ~L", expected, moved),
        _row("L k ~L", k, sandwich(translation_rotor(la, 2, theta), k)),
        _row("(L s ~L)^k", outer(s, k), outer(moved, k)),
    )
    notes = (
        f"rotation by {alpha:g} in the e1e2 plane moves s^k by {residual(outer(rotated, k), outer(s, k)):.6g}",
    )
    inputs = (("theta", format_multivector(theta)), ("s", format_multivector(s)), ("k", format_multivector(k)))
    return DemoResult("invariance", inputs, rows, notes)


def demo_fold(params: DemoParams) -> DemoResult:
    algebra, la = _photon_algebra()
    gens = little_generators(la)
    j3, n1, n2 = gens.rotation(1, 2), gens.translation(1), gens.translation(2)
    ps = pseudoscalar(algebra)
    base = commutator(j3, n2)
    rows = (
        _row("N2 I = N1", n1, geometric_product(n2, ps)),
        _row("J3 x (N2(1+I)) = J3 x N2 + I(J3 x N2)", base + geometric_product(ps, base), commutator(j3, geometric_product(n2, ps + 1.0))),
    )
    return DemoResult("fold", (("J3", format_multivector(j3)), ("N2", format_multivector(n2))), rows)


DEMOS: dict[str, Callable[[DemoParams], DemoResult]] = {
    "commutators": demo_commutators,
    "rotor": demo_rotor,
    "gauge": demo_gauge,
    "invariance": demo_invariance,
    "fold": demo_fold,
}


def run_demo(name: str, params: DemoParams) -> DemoResult:
    try:
        demo = DEMOS[name]
    except KeyError:
        raise ValueError(f"Unknown demo {name!r}; choose one of {', '.join(DEMOS)}") from None
    log.info("Running demo %s", name)
    return demo(params)
