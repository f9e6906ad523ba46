from __future__ import annotations

from itertools import combinations

from app.algebra.errors import SignatureError
from app.algebra.multivector import Multivector, commutator, geometric_product, pseudoscalar, residual
from app.algebra.signature import Algebra, Signature
from app.suite.report import DEFAULT_TOL, Entry

STA = Signature(1, 3, 0)
ANCHOR = "lorentz-brackets"


def levi_civita(a: int, b: int, c: int) -> int:
    """Sign of the permutation (a, b, c) of (1, 2, 3); 0 on repeats."""
    if len({a, b, c}) < 3:
        return 0
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def _bivector(algebra: Algebra, i: int, j: int) -> Multivector:
    """gamma_i gamma_j for i != j, in whatever index order is asked for."""
    gi = Multivector.blade(algebra, 1 << i)
    gj = Multivector.blade(algebra, 1 << j)
    return geometric_product(gi, gj)


def lorentz_generators(algebra: Algebra) -> dict[str, list[Multivector]]:
    """Rotations J_l = gamma_jk (cyclic) and boosts K_j = gamma_j0 of G(1,3)."""
    if algebra.signature != STA:
        raise SignatureError(f"Lorentz generators are defined for {STA}, got {algebra.signature}")
    rotations = [_bivector(algebra, 2, 3), _bivector(algebra, 3, 1), _bivector(algebra, 1, 2)]
    boosts = [_bivector(algebra, j, 0) for j in (1, 2, 3)]
    return {"J": rotations, "K": boosts}


def _combination(terms: dict[str, int]) -> str:
    parts = [f"{'-' if c < 0 else '+'}{name}" for name, c in terms.items() if c]
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def lorentz_table_check(algebra: Algebra, tol: float = DEFAULT_TOL) -> list[Entry]:
    """All 15 brackets of {J1,J2,J3,K1,K2,K3} plus the pseudoscalar dualities.

    J_a x J_b = e_abc J_c, J_a x K_b = e_abc K_c, K_a x K_b = -e_abc J_c.
    Since K_c I = -J_c the last one also reads K_a x K_b = e_abc K_c I.
    """
    gens = lorentz_generators(algebra)
    ps = pseudoscalar(algebra)
    named: list[tuple[str, str, int, Multivector]] = []
    for kind in ("J", "K"):
        for idx, mv in enumerate(gens[kind], start=1):
            named.append((f"{kind}{idx}", kind, idx, mv))

    entries: list[Entry] = []
    for (na, ka, a, x), (nb, kb, b, y) in combinations(named, 2):
        if ka == "J" and kb == "J":
            target, sign = "J", 1
        elif ka == "K" and kb == "K":
            target, sign = "J", -1
        else:
            # J always precedes K in the enumeration
            target, sign = "K", 1
        coefs = {f"{target}{c}": sign * levi_civita(a, b, c) for c in (1, 2, 3)}
        expected = Multivector(algebra)
        for c in (1, 2, 3):
            if coefs[f"{target}{c}"]:
                expected = expected + gens[target][c - 1].scale(coefs[f"{target}{c}"])
        got = commutator(x, y)
        entries.append(Entry.measure(f"{na} x {nb} = {_combination(coefs)}", ANCHOR, residual(got, expected), tol))

        if ka == "K" and kb == "K":
            dual = Multivector(algebra)
            for c in (1, 2, 3):
                dual = dual + geometric_product(gens["K"][c - 1], ps).scale(levi_civita(a, b, c))
            label = f"{na} x {nb} = {_combination({f'K{c}': levi_civita(a, b, c) for c in (1, 2, 3)})} I"
            entries.append(Entry.measure(label, ANCHOR, residual(got, dual), tol))

    for j in (1, 2, 3):
        jj, kk = gens["J"][j - 1], gens["K"][j - 1]
        entries.append(Entry.measure(f"J{j} I = K{j}", ANCHOR, residual(geometric_product(jj, ps), kk), tol))
        entries.append(Entry.measure(f"K{j} I = -J{j}", ANCHOR, residual(geometric_product(kk, ps), -jj), tol))
    return entries
