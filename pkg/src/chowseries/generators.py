"""Constructors for the concrete series families.

* ``divisor_chow_series(n)``: degree-d effective divisors on projective
  n-space form a projective space of dimension C(d+n, d) - 1, so the
  coefficient at t^d is the geometric sum with C(d+n, d) terms.
* ``euler_chow_series(n)``: the same family with each coefficient replaced
  by its Euler characteristic, i.e. the plain count C(d+n, n).
* ``zero_cycle_series(betti)``: degree-d effective zero cycles on a space
  with even cohomology only, via the symmetric-product product formula
  sum_d PP(Sym^d X) t^d = prod_j (1 - s^(2j) t)^(-b_(2j)).

Each generator object is a pure function degree -> coefficient and carries
enough symbolic structure (exponent growth, known denominators) for the
rationality engine to reason beyond any fixed truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ChowSeriesError
from .growth import GrowthFn, ScaledBinomial, growth_from_json, growth_to_json
from .laurent import LaurentPoly, geometric_sum, s_power
from .series import GradedPolynomial, GradedSeries


def _degree(lam) -> int:
    return lam[0] if isinstance(lam, tuple) else lam


@dataclass(frozen=True)
class DivisorChowFamily:
    """The divisor family on projective n-space.

    ``exponent_fn(d) = C(d+n, d)`` is the term count of the coefficient at
    t^d (one more than the dimension of the parameter space of degree-d
    divisors); it is strictly increasing in d for n >= 1.
    """

    n: int
    exponent_fn: ScaledBinomial

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n!r}")

    @classmethod
    def for_dimension(cls, n: int) -> "DivisorChowFamily":
        return cls(n, ScaledBinomial(1, n))

    @property
    def gap_exponent_fn(self) -> ScaledBinomial:
        """d -> 2 * C(d+n, d): the s-support points left after clearing the
        geometric factor (1 - s^2)."""
        return self.exponent_fn.scaled(2)


@dataclass(frozen=True)
class GeometricSumCoefficients:
    """Generator with coefficient geometric_sum(exponent_fn(d)) at t^d."""

    exponent_fn: GrowthFn

    def __call__(self, lam) -> LaurentPoly:
        return geometric_sum(self.exponent_fn(_degree(lam)))

    def meta(self) -> dict:
        return {"kind": "geometric-sum", "exponent": growth_to_json(self.exponent_fn)}


@dataclass(frozen=True)
class EulerCountCoefficients:
    """Generator with the Euler characteristic of the geometric-sum family:
    constant-in-s coefficients exponent_fn(d)."""

    exponent_fn: GrowthFn

    def __call__(self, lam) -> LaurentPoly:
        return LaurentPoly.term(geometric_sum(self.exponent_fn(_degree(lam))).eval_minus_one())

    def meta(self) -> dict:
        return {"kind": "euler-count", "exponent": growth_to_json(self.exponent_fn)}


@dataclass(frozen=True)
class GapRowCoefficients:
    """Generator for a cleared geometric family: coefficient 1 - s^(F(d))
    at t^d, so the nonzero s-rows are exactly {0} plus the image of F."""

    support_fn: GrowthFn

    def __call__(self, lam) -> LaurentPoly:
        return LaurentPoly.term(1) - s_power(self.support_fn(_degree(lam)))

    def meta(self) -> dict:
        return {"kind": "gap-rows", "exponent": growth_to_json(self.support_fn)}


@dataclass(frozen=True)
class BettiProfile:
    """Even Betti numbers (b_0, b_2, ..., b_2m) of a space whose odd
    cohomology vanishes."""

    even: tuple[int, ...]

    def __post_init__(self):
        even = tuple(int(b) for b in self.even)
        if not even:
            raise ValueError("a Betti profile needs at least b_0")
        if any(b < 0 for b in even):
            raise ValueError(f"Betti numbers must be nonnegative: {even}")
        if even[0] < 1:
            raise ValueError(f"b_0 must be >= 1, got {even[0]}")
        object.__setattr__(self, "even", even)

    @classmethod
    def from_full(cls, betti) -> "BettiProfile":
        """Build from a full Betti vector (b_0, b_1, b_2, ...); any nonzero
        odd entry is a domain error, since signs for odd cohomology are out
        of scope for the product formula used here."""
        betti = tuple(int(b) for b in betti)
        for i in range(1, len(betti), 2):
            if betti[i]:
                raise ValueError(f"odd Betti number b_{i}={betti[i]} must be zero")
        return cls(betti[0::2])

    @classmethod
    def projective_space(cls, m: int) -> "BettiProfile":
        return cls((1,) * (m + 1))


@dataclass(frozen=True)
class SymmetricProductCoefficients:
    """Generator for the symmetric-product series of an even-cohomology
    space: the expansion of prod_j (1 - s^(2j) t)^(-b_(2j))."""

    profile: BettiProfile

    def denominator(self) -> GradedPolynomial:
        poly = GradedPolynomial.unit(1)
        for j, b in enumerate(self.profile.even):
            factor = GradedPolynomial(1, {(0,): 1, (1,): -s_power(2 * j)})
            poly = poly * factor**b
        return poly

    def rational_witness(self) -> tuple[GradedPolynomial, GradedPolynomial]:
        """The defining identity: denominator * series = 1."""
        return self.denominator(), GradedPolynomial.unit(1)

    def __call__(self, lam) -> LaurentPoly:
        d = _degree(lam)
        return self.denominator().invert((d,)).coefficient(d)

    def meta(self) -> dict:
        return {"kind": "symmetric-product", "betti_even": list(self.profile.even)}


def divisor_chow_series(n: int, max_d: int) -> GradedSeries:
    """Rank-1 series of effective divisor classes on projective n-space:
    the coefficient at t^d is the Poincare polynomial of projective
    (C(d+n, d) - 1)-space, exact for 0 <= d <= max_d."""
    family = DivisorChowFamily.for_dimension(n)
    generator = GeometricSumCoefficients(family.exponent_fn)
    return GradedSeries.from_generator(1, (max_d,), generator)


def euler_chow_series(n: int, max_d: int) -> GradedSeries:
    """The Euler specialization of ``divisor_chow_series``: constant-in-s
    coefficient C(d+n, n) at t^d."""
    family = DivisorChowFamily.for_dimension(n)
    generator = EulerCountCoefficients(family.exponent_fn)
    return GradedSeries.from_generator(1, (max_d,), generator)


def zero_cycle_series(profile: BettiProfile, max_d: int) -> GradedSeries:
    """Symmetric-product series for an even-cohomology Betti profile,
    expanded exactly to t^max_d."""
    generator = SymmetricProductCoefficients(profile)
    expanded = generator.denominator().invert((max_d,))
    return GradedSeries(1, (max_d,), dict(expanded.entries()), generator=generator)


def gap_exponent_fn(n: int) -> ScaledBinomial:
    """d -> 2 * C(d+n, d) for the divisor family on projective n-space."""
    return DivisorChowFamily.for_dimension(n).gap_exponent_fn


def generator_from_meta(meta) -> object | None:
    """Rebuild a structured generator from its serialized form; unknown or
    malformed metadata yields None rather than an error."""
    if not isinstance(meta, dict):
        return None
    kind = meta.get("kind")
    try:
        if kind == "geometric-sum":
            return GeometricSumCoefficients(growth_from_json(meta["exponent"]))
        if kind == "euler-count":
            return EulerCountCoefficients(growth_from_json(meta["exponent"]))
        if kind == "gap-rows":
            return GapRowCoefficients(growth_from_json(meta["exponent"]))
        if kind == "symmetric-product":
            return SymmetricProductCoefficients(BettiProfile(tuple(meta["betti_even"])))
    except (KeyError, ValueError, TypeError):
        return None
    return None


def generator_meta(generator) -> dict | None:
    fn = getattr(generator, "meta", None)
    if fn is None:
        return None
    meta = fn()
    if not isinstance(meta, dict):
        raise ChowSeriesError(f"generator meta() must return a dict, got {meta!r}")
    return meta
