from __future__ import annotations

import math
import re
from dataclasses import dataclass

from app.algebra.errors import ParseError
from app.algebra.multivector import Multivector, describe_blade
from app.algebra.signature import Algebra, Blade

# Grammar (whitespace-insensitive):
#   expr  := [sign] term (sign term)*
#   term  := number ['*' blade] | blade
#   blade := 'e' digits            ascending single-digit indices, e.g. e0123
#          | 'e{' int (',' int)* '}'   for indices >= 10, e.g. e{3,10}
# A number directly followed by 'e<digits>' is read as an exponent ("2e3" == 2000).
_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<blade>e(?:\{[^}]*\}|\d+))
  | (?P<op>[+\-*])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"Unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


def _parse_blade(token: Token, algebra: Algebra) -> Blade:
    body = token.text[1:]
    if body.startswith("{"):
        parts = body[1:-1].split(",")
        try:
            indices = [int(p.strip()) for p in parts]
        except ValueError:
            raise ParseError(f"Malformed blade {token.text!r} at position {token.pos}") from None
    else:
        indices = [int(ch) for ch in body]

    if len(set(indices)) != len(indices):
        raise ParseError(f"Duplicate index in blade {token.text!r}")
    if indices != sorted(indices):
        raise ParseError(f"Blade {token.text!r} must list indices in ascending order")
    mask = 0
    for i in indices:
        if not 0 <= i < algebra.dims:
            raise ParseError(f"Index {i} in {token.text!r} is not a generator of {algebra.signature}")
        mask |= 1 << i
    return mask


def parse_multivector(text: str, algebra: Algebra) -> Multivector:
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("Empty multivector text")

    terms: dict[Blade, float] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1.0
        tok = tokens[i]
        if tok.kind == "op" and tok.text in "+-":
            sign = -1.0 if tok.text == "-" else 1.0
            i += 1
        elif not first:
            raise ParseError(f"Expected '+' or '-' at position {tok.pos}, got {tok.text!r}")
        if i >= len(tokens):
            raise ParseError("Expression ends after a sign")

        tok = tokens[i]
        if tok.kind == "number":
            coef = float(tok.text)
            if not math.isfinite(coef):
                raise ParseError(f"Number out of range at position {tok.pos}: {tok.text!r}")
            mask = 0
            i += 1
            if i < len(tokens) and tokens[i].kind == "op" and tokens[i].text == "*":
                i += 1
                if i >= len(tokens) or tokens[i].kind != "blade":
                    raise ParseError(f"Expected a blade after '*' at position {tokens[i - 1].pos}")
                mask = _parse_blade(tokens[i], algebra)
                i += 1
        elif tok.kind == "blade":
            coef = 1.0
            mask = _parse_blade(tok, algebra)
            i += 1
        else:
            raise ParseError(f"Expected a number or blade at position {tok.pos}, got {tok.text!r}")

        terms[mask] = terms.get(mask, 0.0) + sign * coef
        if not math.isfinite(terms[mask]):
            raise ParseError(f"Coefficient of {describe_blade(mask)} overflows")
        first = False

    return Multivector(algebra, terms)


def format_coefficient(value: float) -> str:
    if not math.isfinite(value):
        raise ParseError(f"Cannot format non-finite coefficient {value!r}")
    if value.is_integer() and abs(value) < 2**53:
        return str(int(value))
    # repr is the shortest text that reads back to the same double.
    return repr(value)


def format_multivector(mv: Multivector) -> str:
    items = mv.items()
    if not items:
        return "0"
    parts: list[str] = []
    for n, (mask, coef) in enumerate(items):
        magnitude = format_coefficient(abs(coef))
        term = magnitude if mask == 0 else f"{magnitude}*{describe_blade(mask)}"
        if n == 0:
            parts.append(f"-{term}" if coef < 0 else term)
        else:
            parts.append(f" - {term}" if coef < 0 else f" + {term}")
    return "".join(parts)
