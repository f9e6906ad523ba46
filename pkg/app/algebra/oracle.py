"""Brute-force blade product by adjacent transpositions.

Kept deliberately independent of the bit-mask sign table in `signature.py`:
the verification suite compares the two on every blade pair.
"""
from __future__ import annotations

from app.algebra.signature import Algebra, blade_indices


def multiply_symbols(a: tuple[int, ...], b: tuple[int, ...], squares: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Multiply two generator words, returning (sorted word, sign).

    Bubble sort the concatenation; every swap of distinct neighbours flips the
    sign and every adjacent equal pair contracts to its generator square.
    """
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] == word[i + 1]:
                square = squares[word[i]]
                if square == 0:
                    return (), 0
                sign *= square
                del word[i : i + 2]
                changed = True
            elif word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return tuple(word), sign


def product_oracle_check(algebra: Algebra) -> tuple[int, int]:
    """Compare every blade pair against the sign table; returns (mismatches, pairs)."""
    mismatches = 0
    pairs = 0
    for a in range(algebra.size):
        word_a = blade_indices(a)
        for b in range(algebra.size):
            word, sign = multiply_symbols(word_a, blade_indices(b), algebra.squares)
            expected_mask = sum(1 << i for i in word)
            got_sign = algebra.blade_sign(a, b)
            if got_sign != sign or (sign != 0 and (a ^ b) != expected_mask):
                mismatches += 1
            pairs += 1
    return mismatches, pairs
