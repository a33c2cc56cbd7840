"""Symbolic growth descriptors for integer exponent sequences.

These record *how* a sequence of support exponents grows, not just its
values, so that divergence of first differences can be decided without a
truncation: a polynomial of degree >= 2 in d with positive leading
coefficient has first differences tending to infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ScaledBinomial:
    """d -> scale * C(d + shift, shift): integer valued, degree ``shift``
    as a polynomial in d, leading coefficient scale / shift!."""

    scale: int
    shift: int

    def __post_init__(self):
        if not isinstance(self.scale, int) or self.scale == 0:
            raise ValueError(f"scale must be a nonzero int, got {self.scale!r}")
        if not isinstance(self.shift, int) or self.shift < 0:
            raise ValueError(f"shift must be a nonnegative int, got {self.shift!r}")

    def __call__(self, d: int) -> int:
        return self.scale * math.comb(d + self.shift, self.shift)

    @property
    def degree(self) -> int:
        return self.shift

    @property
    def leading_positive(self) -> bool:
        return self.scale > 0

    def scaled(self, factor: int) -> "ScaledBinomial":
        return ScaledBinomial(self.scale * factor, self.shift)

    def describe(self) -> str:
        prefix = "" if self.scale == 1 else f"{self.scale}*"
        return f"{prefix}C(d+{self.shift}, d)"


@dataclass(frozen=True)
class PolynomialGrowth:
    """Explicit polynomial in d with exact rational coefficients, low degree
    first; must evaluate to integers on the degrees where it is used."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            raise ValueError("the zero polynomial is not a growth descriptor")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, d: int) -> int:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * d + c
        if total.denominator != 1:
            raise ValueError(f"descriptor is not integer valued at d={d}: {total}")
        return int(total)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_positive(self) -> bool:
        return self.coeffs[-1] > 0

    def describe(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                parts.append(str(c))
            elif power == 1:
                parts.append(f"{c}*d")
            else:
                parts.append(f"{c}*d^{power}")
        return " + ".join(parts)


GrowthFn = ScaledBinomial | PolynomialGrowth


def unbounded_differences(fn: GrowthFn) -> bool:
    """True when the first differences of ``fn`` provably tend to infinity:
    degree >= 2 in d with a positive leading coefficient."""
    return fn.degree >= 2 and fn.leading_positive


def growth_to_json(fn: GrowthFn) -> dict:
    if isinstance(fn, ScaledBinomial):
        return {"form": "scaled-binomial", "scale": fn.scale, "shift": fn.shift}
    if isinstance(fn, PolynomialGrowth):
        return {"form": "polynomial", "coeffs": [str(c) for c in fn.coeffs]}
    raise TypeError(f"unknown growth descriptor {fn!r}")


def growth_from_json(data: dict) -> GrowthFn:
    form = data.get("form")
    if form == "scaled-binomial":
        return ScaledBinomial(int(data["scale"]), int(data["shift"]))
    if form == "polynomial":
        return PolynomialGrowth(tuple(Fraction(c) for c in data["coeffs"]))
    raise ValueError(f"unknown growth descriptor form {form!r}")
