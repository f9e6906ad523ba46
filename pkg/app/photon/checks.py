from __future__ import annotations

import logging
from dataclasses import dataclass

from app.algebra.multivector import (
    Multivector,
    basis_vector,
    commutator,
    geometric_product,
    inner_vectors,
    outer,
    pseudoscalar,
    residual,
)
from app.algebra.rotor import exp_bivector, sandwich
from app.algebra.signature import TABLE_MAX_DIMS, Signature, make_algebra
from app.algebra.tables import StructureTable, blade_products, structure_constants
from app.photon.little import (
    LittleAlgebra,
    LittleAlgebraError,
    complex_angle,
    little_generators,
    split_angle,
    translation_rotor,
    translation_weights,
)
from app.suite.report import DEFAULT_TOL, Entry

log = logging.getLogger(__name__)

ROTATION_CHANGE_MIN = 1e-3

# ----------------------------
# Frame and generator names
# ----------------------------
Pair = tuple[int, int]


def _pair_name(p: int, q: int) -> tuple[str, int]:
    """Generator name and sign for e_p ^ e_q with p < q."""
    if p == 0:
        return f"N{q}", -1
    sep = "," if max(p, q) >= 10 else ""
    return f"J{p}{sep}{q}", 1


def _format_terms(terms: dict[Pair, float]) -> str:
    parts: list[str] = []
    for (p, q), coef in sorted(terms.items()):
        if coef == 0:
            continue
        name, sign = _pair_name(p, q)
        value = coef * sign
        magnitude = "" if abs(value) == 1 else f"{abs(value):g}*"
        parts.append(f"{'-' if value < 0 else '+'}{magnitude}{name}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def _wedge_terms(la: LittleAlgebra, x: Pair, y: Pair) -> dict[Pair, float]:
    """(a^b) x (c^d) = (b.c) a^d - (a.c) b^d - (b.d) a^c + (a.d) b^c over frame indices."""
    a, b = x
    c, d = y
    dot = la.frame_dot
    out: dict[Pair, float] = {}
    for coef, (p, q) in (
        (dot(b, c), (a, d)),
        (-dot(a, c), (b, d)),
        (-dot(b, d), (a, c)),
        (dot(a, d), (b, c)),
    ):
        if coef == 0 or p == q:
            continue
        key, sign = ((p, q), 1.0) if p < q else ((q, p), -1.0)
        out[key] = out.get(key, 0.0) + sign * coef
    return {k: v for k, v in out.items() if v != 0}


def _terms_to_multivector(la: LittleAlgebra, terms: dict[Pair, float]) -> Multivector:
    out = Multivector(la.parent)
    for (p, q), coef in terms.items():
        out = out + outer(la.frame[p], la.frame[q]).scale(coef)
    return out


# ----------------------------
# Little algebra identities
# ----------------------------
def frame_metric_check(la: LittleAlgebra, tol: float = DEFAULT_TOL) -> Entry:
    worst = 0.0
    for mu, a in enumerate(la.frame):
        for nu, b in enumerate(la.frame):
            worst = max(worst, abs(inner_vectors(a, b) - la.frame_dot(mu, nu)))
    delta = "-delta" if la.layout.mostly_minus else "+delta"
    return Entry.measure(f"frame metric e0.e0 = 0, e0.ei = 0, ei.ej = {delta}", "frame-metric", worst, tol)


def verify_commutation(la: LittleAlgebra, tol: float = DEFAULT_TOL) -> list[Entry]:
    """Brackets of the little group: translations commute, rotations close and act on translations."""
    gens = little_generators(la)
    entries: list[Entry] = []

    for i in range(1, la.n):
        for j in range(i + 1, la.n):
            got = commutator(gens.translation(i), gens.translation(j))
            entries.append(Entry.measure(f"N{i} x N{j} = 0", "little-group", got.max_abs(), tol))

    for plane, rot in zip(gens.rotation_planes, gens.rotations):
        rname, _ = _pair_name(*plane)
        for m in range(1, la.n):
            terms = _wedge_terms(la, plane, (m, 0))
            expected = _terms_to_multivector(la, terms)
            got = commutator(rot, gens.translation(m))
            label = f"{rname} x N{m} = {_format_terms(terms)}"
            entries.append(Entry.measure(label, "little-group", residual(got, expected), tol))

    for idx, (pa, ra) in enumerate(zip(gens.rotation_planes, gens.rotations)):
        for pb, rb in zip(gens.rotation_planes[idx + 1 :], gens.rotations[idx + 1 :]):
            terms = _wedge_terms(la, pa, pb)
            expected = _terms_to_multivector(la, terms)
            got = commutator(ra, rb)
            label = f"{_pair_name(*pa)[0]} x {_pair_name(*pb)[0]} = {_format_terms(terms)}"
            entries.append(Entry.measure(label, "little-group", residual(got, expected), tol))

    # Folding translations into one complex-like generator: I commutes with
    # every bivector, so J x (N (1 + I)) = J x N + I (J x N).
    ps = pseudoscalar(la.parent)
    one_plus_i = ps + 1.0
    for plane, rot in zip(gens.rotation_planes, gens.rotations):
        rname, _ = _pair_name(*plane)
        for m in range(1, la.n):
            n_m = gens.translation(m)
            lhs = commutator(rot, geometric_product(n_m, one_plus_i))
            base = commutator(rot, n_m)
            rhs = base + geometric_product(ps, base)
            label = f"{rname} x (N{m}(1+I)) = {rname} x N{m} + I({rname} x N{m})"
            entries.append(Entry.measure(label, "folded-bracket", residual(lhs, rhs), tol))
    return entries


def rotor_closed_form_check(la: LittleAlgebra, i: int, theta: Multivector | float, tol: float = DEFAULT_TOL) -> list[Entry]:
    """exp(-theta N_i / 2) truncates to 1 - theta N_i / 2 because (theta N_i)^2 = 0."""
    alpha, beta = split_angle(theta, la.parent)
    theta_n = geometric_product(complex_angle(la.parent, alpha, beta), little_generators(la).translation(i))
    square = geometric_product(theta_n, theta_n)
    closed = translation_rotor(la, i, theta)
    series = exp_bivector(theta_n, -0.5)
    return [
        Entry.measure(f"(theta N{i})^2 = 0", "rotor-closed-form", square.max_abs(), tol),
        Entry.measure(f"exp(-theta N{i}/2) = 1 - theta N{i}/2", "rotor-closed-form", residual(series.value, closed.value), tol),
    ]


def check_invariance(
    la: LittleAlgebra,
    s: Multivector,
    theta: Multivector | float,
    direction: int | None = None,
    tol: float = DEFAULT_TOL,
) -> list[Entry]:
    """Translation rotors fix k and s^k while shifting s along e0."""
    i = la.n - 1 if direction is None else direction
    coefs, remainder = la.frame_coefficients(s)
    if remainder > tol or abs(coefs[0]) > tol:
        raise LittleAlgebraError("s must lie in the span of the spatial frame vectors")

    weights = translation_weights(la, i, theta)
    shift = la.spatial_square * sum(t * c for t, c in zip(weights, coefs[1:]))
    rotor = translation_rotor(la, i, theta)
    moved = sandwich(rotor, s)
    expected = s + la.e0.scale(shift)

    k = la.k
    return [
        Entry.measure(f"L s ~L = s {'+' if la.spatial_square > 0 else '-'} (t.s) e0", "invariance", residual(moved, expected), tol),
        Entry.measure("L k ~L = k", "invariance", residual(sandwich(rotor, k), k), tol),
        Entry.measure("(L s ~L)^k = s^k", "invariance", residual(outer(moved, k), outer(s, k)), tol),
    ]


def rotation_counterexample(
    la: LittleAlgebra,
    s: Multivector,
    alpha: float = 1.0,
    plane: Pair = (1, 2),
    tol: float = DEFAULT_TOL,
) -> list[Entry]:
    """A frame rotation keeps s orthogonal to k but moves s^k.

    The last entry reports the shortfall of the change below ROTATION_CHANGE_MIN,
    so it passes (residual 0) exactly when s^k visibly changed.
    """
    if la.n < 3:
        raise LittleAlgebraError(f"{la.parent.signature} has no frame rotations")
    gens = little_generators(la)
    rotor = exp_bivector(gens.rotation(*plane), -alpha / 2)
    rotated = sandwich(rotor, s)
    k = la.k
    change = residual(outer(rotated, k), outer(s, k))
    name, _ = _pair_name(*plane)
    moves = Entry.shortfall(
        f"exp({name}) moves s^k by more than {ROTATION_CHANGE_MIN:g}",
        "rotation-counterexample",
        ROTATION_CHANGE_MIN - change,
        detail=f"change={change:.6g}",
    )
    return [
        Entry.measure(f"exp({name}) keeps s.k = 0", "rotation-counterexample", abs(inner_vectors(rotated, k)), tol),
        Entry.measure(f"exp({name}) fixes k", "rotation-counterexample", residual(sandwich(rotor, k), k), tol),
        moves,
    ]


# ----------------------------
# Cayley tables
# ----------------------------
def reference_signature(la: LittleAlgebra) -> Signature:
    if la.layout.mostly_minus:
        return Signature(0, la.n - 1, 1)
    return Signature(la.n - 1, 0, 1)


def cayley_table(la: LittleAlgebra) -> StructureTable:
    if la.parent.dims > TABLE_MAX_DIMS:
        raise LittleAlgebraError(f"Cayley tables need at most {TABLE_MAX_DIMS} parent generators")
    basis, labels = la.embedding
    return structure_constants(basis, labels)


def reference_table(la: LittleAlgebra) -> StructureTable:
    """Table of the degenerate reference algebra with e0 mapped to its nilpotent generator."""
    ref = make_algebra(reference_signature(la))
    vectors = [basis_vector(ref, la.n - 1)] + [basis_vector(ref, i - 1) for i in range(1, la.n)]
    basis, labels = blade_products(vectors)
    return structure_constants(basis, labels)


@dataclass(frozen=True)
class IsomorphismResult:
    reference: Signature
    entries: tuple[Entry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def isomorphism_check(la: LittleAlgebra, tol: float = DEFAULT_TOL) -> IsomorphismResult:
    ref = reference_signature(la)
    table = cayley_table(la)
    expected = reference_table(la)
    diff = table.max_difference(expected)
    log.debug("Cayley table compared: %s vs %s, max difference %.3e", la.parent.signature, ref, diff)
    entries = (
        Entry.measure("W(k) products close on frame blades", "isomorphism", table.closure_residual, tol),
        Entry.measure(f"W(k) table = {ref} table", "isomorphism", diff, tol),
    )
    return IsomorphismResult(ref, entries)
