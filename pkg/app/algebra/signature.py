from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from app.algebra.errors import SignatureError

# Blades are bit masks over generator indices: bit i set <=> generator i present.
# Canonical orientation is ascending index order.
Blade = int

MAX_GENERATORS = 16

# Dense sign tables are (2^d)^2 int8 entries; above this the blade product
# falls back to bit arithmetic per pair.
TABLE_MAX_DIMS = 10


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    r: int = 0

    def __post_init__(self) -> None:
        if min(self.p, self.q, self.r) < 0:
            raise SignatureError(f"Signature counts must be non-negative: {self}")
        if self.p + self.q + self.r < 1:
            raise SignatureError("Signature needs at least one generator")

    @property
    def dims(self) -> int:
        return self.p + self.q + self.r

    def squares(self) -> tuple[int, ...]:
        """Generator squares in index order: unipotent, anti-unipotent, nilpotent."""
        return (1,) * self.p + (-1,) * self.q + (0,) * self.r

    def __str__(self) -> str:
        if self.r:
            return f"G({self.p},{self.q},{self.r})"
        return f"G({self.p},{self.q})"


def blade_indices(mask: Blade) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_from_indices(indices: tuple[int, ...] | list[int]) -> Blade:
    mask = 0
    last = -1
    for i in indices:
        if i <= last:
            raise SignatureError(f"Blade indices must be strictly ascending: {tuple(indices)}")
        mask |= 1 << i
        last = i
    return mask


def blade_sort_key(mask: Blade) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), blade_indices(mask)


def reorder_sign(a: Blade, b: Blade) -> int:
    """Parity of the transpositions that sort the concatenation of a and b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def _build_sign_table(squares: tuple[int, ...]) -> np.ndarray:
    dims = len(squares)
    masks = np.arange(1 << dims, dtype=np.uint16)
    bits = (1 << np.arange(dims)).astype(np.uint16)

    # swaps[a, b] = sum over generators k in a of the generators of b below k
    a_has = ((masks[:, np.newaxis] & bits) != 0).astype(np.int32)
    below = np.bitwise_count(masks[:, np.newaxis] & (bits - 1)).astype(np.int32)
    swaps = a_has @ below.T
    reorder = np.where(swaps & 1, -1, 1).astype(np.int8)

    common = masks[:, np.newaxis] & masks
    metric = np.where(
        (common[..., np.newaxis] & bits) != 0,
        np.asarray(squares, dtype=np.int8),
        np.int8(1),
    ).prod(axis=-1, dtype=np.int8)
    return reorder * metric


class Algebra:
    """Handle for G(p,q,r): generator squares plus the blade product table."""

    def __init__(self, signature: Signature) -> None:
        if signature.dims > MAX_GENERATORS:
            raise SignatureError(
                f"{signature} has {signature.dims} generators; at most {MAX_GENERATORS} are supported"
            )
        self.signature = signature
        self.dims = signature.dims
        self.size = 1 << self.dims
        self.squares = signature.squares()
        self.pseudoscalar_mask: Blade = self.size - 1

        self._sign_array: np.ndarray | None = None
        self._signs: list[list[int]] | None = None
        if self.dims <= TABLE_MAX_DIMS:
            self._sign_array = _build_sign_table(self.squares)
            self._signs = self._sign_array.tolist()

    def __repr__(self) -> str:
        return f"Algebra({self.signature})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def blade_sign(self, a: Blade, b: Blade) -> int:
        """Sign of the blade product a*b in {-1, 0, +1}; 0 means annihilated."""
        if self._signs is not None:
            return self._signs[a][b]
        sign = reorder_sign(a, b)
        common = a & b
        i = 0
        while common:
            if common & 1:
                sign *= self.squares[i]
                if sign == 0:
                    return 0
            common >>= 1
            i += 1
        return sign

    def sign_table(self) -> np.ndarray:
        if self._sign_array is None:
            raise SignatureError(
                f"Dense sign table is only built for at most {TABLE_MAX_DIMS} generators, {self} has {self.dims}"
            )
        return self._sign_array

    def valid_blade(self, mask: Blade) -> bool:
        return 0 <= mask < self.size

    def blades(self, grade: int | None = None) -> list[Blade]:
        """All blades (or those of one grade) in canonical order."""
        masks = range(self.size)
        if grade is not None:
            masks = [m for m in masks if m.bit_count() == grade]
        return sorted(masks, key=blade_sort_key)


@lru_cache(maxsize=None)
def make_algebra(signature: Signature) -> Algebra:
    return Algebra(signature)
