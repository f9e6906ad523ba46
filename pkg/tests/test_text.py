from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.algebra.errors import ParseError
from app.algebra.multivector import Multivector, basis_vector
from app.algebra.signature import Signature, make_algebra
from app.algebra.text import format_coefficient, format_multivector, parse_multivector, tokenize
from tests.strategies import multivectors

STA = make_algebra(Signature(1, 3))
WIDE = make_algebra(Signature(1, 11))


def test_lightlike_vector(gammas):
    assert parse_multivector("1*e0 + 1*e3", STA) == gammas[0] + gammas[3]


def test_zero():
    zero = parse_multivector("0", STA)
    assert zero.is_zero()
    assert dict(zero.terms) == {}


def test_single_bivector_term():
    assert parse_multivector("2.5*e13", STA) == Multivector.blade(STA, 0b1010, 2.5)


def test_whitespace_and_bare_blades():
    assert parse_multivector("  -e1+e2 -3 ", STA) == basis_vector(STA, 2) - basis_vector(STA, 1) - 3


def test_exponent_is_not_a_blade():
    assert parse_multivector("2e3", STA) == Multivector.scalar(STA, 2000.0)
    assert parse_multivector("2e-3*e3", STA) == Multivector.blade(STA, 0b1000, 0.002)


def test_braced_blades():
    x = parse_multivector("e{3,10} - 0.5*e{11}", WIDE)
    assert x[(1 << 3) | (1 << 10)] == 1.0
    assert x[1 << 11] == -0.5
    assert format_multivector(x) == "-0.5*e{11} + 1*e{3,10}"


def test_repeated_terms_add():
    assert parse_multivector("e1 + 2*e1", STA) == basis_vector(STA, 1).scale(3.0)


@pytest.mark.parametrize(
    "text",
    [
        "e10",  # descending
        "e11",  # duplicate index
        "e4",  # not a generator of G(1,3)
        "1.2.3",
        "1 +",
        "* e1",
        "e1 e2",
        "",
        "x",
        "e{1,a}",
        "1e400*e1",  # overflows to inf
        "1e308*e1 + 1e308*e1",
    ],
)
def test_rejects(text):
    with pytest.raises(ParseError):
        parse_multivector(text, STA)


def test_tokenize_positions():
    tokens = tokenize("1*e0 - e3")
    assert [(t.kind, t.text, t.pos) for t in tokens] == [
        ("number", "1", 0),
        ("op", "*", 1),
        ("blade", "e0", 2),
        ("op", "-", 5),
        ("blade", "e3", 7),
    ]


def test_format_canonical_order(gammas):
    x = gammas[1] * gammas[2] - 0.5 * gammas[3] + 2
    assert format_multivector(x) == "2 - 0.5*e3 + 1*e12"


def test_format_zero():
    assert format_multivector(Multivector(STA)) == "0"


def test_format_rejects_non_finite():
    with pytest.raises(ParseError):
        format_coefficient(float("inf"))


@settings(max_examples=150, deadline=None)
@given(multivectors(STA, st.floats(allow_nan=False, allow_infinity=False, width=64), max_terms=8))
def test_round_trip_sta(x):
    assert parse_multivector(format_multivector(x), STA) == x


@settings(max_examples=50, deadline=None)
@given(multivectors(WIDE, st.floats(min_value=-1e6, max_value=1e6, allow_nan=False), max_terms=5))
def test_round_trip_wide(x):
    assert parse_multivector(format_multivector(x), WIDE) == x
