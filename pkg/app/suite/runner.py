from __future__ import annotations

import logging
from collections.abc import Callable

from app.algebra.errors import AlgebraError
from app.algebra.oracle import product_oracle_check
from app.algebra.signature import Signature, make_algebra
from app.photon.checks import (
    check_invariance,
    frame_metric_check,
    isomorphism_check,
    rotation_counterexample,
    rotor_closed_form_check,
    verify_commutation,
)
from app.photon.little import (
    LittleAlgebra,
    canonical_wavevector,
    construct_little_algebra,
    dual_translation,
    minkowski_layout,
)
from app.photon.lorentz import STA, lorentz_table_check
from app.photon.potential import closed_form_residual, gauge_closed_form_check
from app.photon.sampling import Sampler, trial_generators
from app.suite.report import Entry, Report, merge_entries
from app.view.slicing import lightcone_contact

log = logging.getLogger(__name__)

MIN_DIM = 2
MAX_DIM = 6
ROTOR_THETA_BOUND = 10.0
GAUGE_VIOLATION_MIN = 1e-6
GAUGE_VIOLATION_SHARE = 0.95


class VerificationRun:
    """Collects entries; a check that raises becomes a failing entry instead of aborting the run."""

    def __init__(self, tol: float) -> None:
        self.tol = tol
        self.entries: list[Entry] = []

    def run(self, label: str, anchor: str, check: Callable[[], list[Entry] | Entry]) -> None:
        try:
            result = check()
        except AlgebraError as exc:
            log.warning("Check failed with error: %s: %s", label, exc)
            self.entries.append(Entry.failure(label, anchor, f"{type(exc).__name__}: {exc}"))
            return
        self.entries.extend(result if isinstance(result, list) else [result])

    def add(self, entry: Entry) -> None:
        self.entries.append(entry)


def _canonical_checks(run: VerificationRun, dim: int) -> None:
    parent = Signature(1, dim, 0)
    algebra = make_algebra(parent)

    def oracle() -> Entry:
        mismatches, pairs = product_oracle_check(algebra)
        log.info("Product oracle: %d of %d blade pairs differ in %s", mismatches, pairs, parent)
        return Entry.measure(f"{parent} blade products match transposition oracle", "product-oracle", mismatches, run.tol)

    run.run(f"{parent} blade products match transposition oracle", "product-oracle", oracle)
    run.run("Lorentz brackets", "lorentz-brackets", lambda: lorentz_table_check(make_algebra(STA), run.tol))

    la = construct_little_algebra(algebra, canonical_wavevector(algebra))
    _little_algebra_checks(run, la, prefix="canonical ")
    if dim in (2, 3):
        run.run("lightcone contact", "lightcone-contact", lambda: lightcone_contact(la, 1.0, run.tol))

    plus = Signature(dim, 1, 0)
    run.run(
        f"{plus} little algebra",
        "isomorphism",
        lambda: list(isomorphism_check(construct_little_algebra(plus, canonical_wavevector(make_algebra(plus))), run.tol).entries),
    )


def _little_algebra_checks(run: VerificationRun, la: LittleAlgebra, prefix: str = "") -> None:
    run.run(f"{prefix}frame metric", "frame-metric", lambda: frame_metric_check(la, run.tol))
    run.run(f"{prefix}little-group brackets", "little-group", lambda: verify_commutation(la, run.tol))
    run.run(f"{prefix}Cayley table", "isomorphism", lambda: list(isomorphism_check(la, run.tol).entries))


def _trial(run: VerificationRun, dim: int, sampler: Sampler) -> bool | None:
    """One random configuration; returns whether the gauge-violating potential was detected."""
    parent = Signature(1, dim, 0)
    algebra = make_algebra(parent)
    k = sampler.lightlike(algebra, minkowski_layout(parent))
    try:
        la = construct_little_algebra(algebra, k)
    except AlgebraError as exc:
        run.add(Entry.failure("random lightlike k builds a little algebra", "frame-metric", str(exc)))
        return None

    _little_algebra_checks(run, la)

    direction = la.n - 1
    complex_like = dual_translation(la, direction) is not None
    s = sampler.spatial(la)
    theta = sampler.theta(la, complex_like)
    run.run("translation invariance", "invariance", lambda: check_invariance(la, s, theta, direction, run.tol))

    big_theta = sampler.theta(la, complex_like, bound=ROTOR_THETA_BOUND)
    run.run("rotor closed form", "rotor-closed-form", lambda: rotor_closed_form_check(la, direction, big_theta, run.tol))

    if la.n >= 3:
        run.run("rotation counterexample", "rotation-counterexample", lambda: rotation_counterexample(la, s, 1.0, (1, 2), run.tol))

    z = sampler.gauge_potential(la)
    run.run("gauge closed form", "gauge", lambda: gauge_closed_form_check(la, z, theta, direction, run.tol))

    violating = sampler.potential(algebra)
    try:
        return closed_form_residual(la, violating, theta, direction) > GAUGE_VIOLATION_MIN
    except AlgebraError as exc:
        log.warning("Gauge violation probe failed: %s", exc)
        return None


def run_verify(dim: int, seed: int, trials: int, tol: float) -> Report:
    if not MIN_DIM <= dim <= MAX_DIM:
        raise ValueError(f"dim must be in {MIN_DIM}..{MAX_DIM}, got {dim}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    log.info("Verification suite started: dim=%d seed=%d trials=%d tol=%g", dim, seed, trials, tol)

    run = VerificationRun(tol)
    _canonical_checks(run, dim)

    detected = 0
    for index, rng in enumerate(trial_generators(seed, trials)):
        outcome = _trial(run, dim, Sampler(rng))
        detected += bool(outcome)
        log.debug("Trial %d done", index)

    share = detected / trials
    run.add(
        Entry.shortfall(
            f"gauge violations move the result by > {GAUGE_VIOLATION_MIN:g} in >= {GAUGE_VIOLATION_SHARE:.0%} of trials",
            "gauge",
            GAUGE_VIOLATION_SHARE - share,
            detail=f"detected={detected}/{trials}",
        )
    )

    entries = merge_entries(run.entries, tol)
    report = Report(suite="verify", tolerance=tol, seed=seed, trials=trials, dim=dim, entries=tuple(entries))
    for entry in report.failures():
        log.warning("Identity failed: %s (residual %.3e)", entry.label, entry.residual)
    log.info("Verification suite finished: %d passed, %d failed", report.passed_count, report.failed_count)
    return report
