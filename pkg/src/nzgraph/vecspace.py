"""Nonzero vectors of an n-dimensional space over a q-letter alphabet.

Coefficients are never multiplied or added, only tested for zero, so the
field size ``q`` is treated as a plain alphabet size and any ``q >= 2`` is
accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .errors import CapExceededError

DEFAULT_VERTEX_CAP = 65535
_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class SpaceParams:
    n: int
    q: int
    vertex_cap: int = DEFAULT_VERTEX_CAP

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n!r}")
        if not isinstance(self.q, int) or self.q < 2:
            raise ValueError(f"field size q must be >= 2, got {self.q!r}")
        if self.order > self.vertex_cap:
            raise CapExceededError(
                f"q^n - 1 = {self.order} exceeds vertex cap {self.vertex_cap}"
            )

    @property
    def order(self) -> int:
        return self.q**self.n - 1


class VectorLabel(NamedTuple):
    """A nonzero vector; ``digits[i]`` is the coefficient of basis vector i+1."""

    index: int
    digits: tuple[int, ...]
    support: int
    weight: int

    def text(self, q: int) -> str:
        """Digit string with the first basis coefficient leftmost, e.g. ``"110"``."""
        return format_digits(self.digits, q)


def format_digits(digits, q: int) -> str:
    if q <= len(_DIGIT_CHARS):
        return "".join(_DIGIT_CHARS[d] for d in digits)
    return ".".join(str(d) for d in digits)


def label_for(index: int, n: int, q: int) -> VectorLabel:
    """Decode a canonical index (base-q value, digit 0 least significant)."""
    if not 1 <= index < q**n:
        raise ValueError(f"index {index} outside [1, {q**n - 1}]")
    digits = []
    support = 0
    x = index
    for i in range(n):
        x, d = divmod(x, q)
        digits.append(d)
        if d:
            support |= 1 << i
    return VectorLabel(index, tuple(digits), support, support.bit_count())


def label_from_digits(digits, q: int) -> VectorLabel:
    index = 0
    for d in reversed(digits):
        if not 0 <= d < q:
            raise ValueError(f"digit {d} outside [0, {q - 1}]")
        index = index * q + d
    return label_for(index, len(digits), q)


def enumerate_vertices(params: SpaceParams) -> list[VectorLabel]:
    """All q^n - 1 nonzero vectors in ascending index order."""
    n, q = params.n, params.q
    out = []
    # odometer over digits; cheaper than repeated divmod for large q
    digits = [0] * n
    support = 0
    for index in range(1, q**n):
        i = 0
        while True:
            d = digits[i] + 1
            if d == q:
                digits[i] = 0
                support &= ~(1 << i)
                i += 1
                continue
            digits[i] = d
            support |= 1 << i
            break
        out.append(VectorLabel(index, tuple(digits), support, support.bit_count()))
    return out


def class_of(label: VectorLabel) -> int:
    """Number of nonzero coefficients, i.e. which class T_i the vector is in."""
    return label.weight


def twin_key(label: VectorLabel) -> int:
    """Support mask; vectors sharing it have identical neighbourhoods when q >= 3."""
    return label.support


def class_size(n: int, q: int, i: int) -> int:
    return comb(n, i) * (q - 1) ** i
