"""Virtual motive classes recorded by their cohomology shadow.

A class is stored as its virtual Poincare polynomial: the Laurent
polynomial whose coefficient at s^i is the (virtual) dimension of the
i-th homology, with any Tate twist already folded into the exponents.
Direct sum becomes polynomial addition, tensor product becomes polynomial
multiplication (Kunneth), and evaluation at s = -1 recovers the Euler
characteristic, a ring homomorphism to the integers.

Negative coefficients are allowed throughout: differences of classes are
first-class citizens, and no positivity is enforced.

Twist convention, fixed once and used consistently: a presentation with
twist k denotes the class base_pp * s^(-2k), i.e. raising the twist by one
shifts homological degrees down by two.  Presentations related by
(base_pp, twist) -> (base_pp * s^(2k), twist + k) normalize to the same
class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, Scalar, geometric_sum


@dataclass(frozen=True)
class MotiveClass:
    """An element of the class ring, represented by its virtual Poincare
    polynomial ``pp``.

    The zero polynomial is the class of the empty scheme; the constant 1 is
    the point class, which is the tensor unit.
    """

    pp: LaurentPoly

    def __post_init__(self):
        if not isinstance(self.pp, LaurentPoly):
            raise TypeError("pp must be a LaurentPoly")

    @classmethod
    def zero(cls) -> "MotiveClass":
        return cls(LaurentPoly())

    @classmethod
    def point(cls) -> "MotiveClass":
        return cls(LaurentPoly.term(1))

    @classmethod
    def projective_space(cls, m: int) -> "MotiveClass":
        """The class of projective m-space: 1 + s^2 + ... + s^(2m)."""
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"projective space dimension must be >= 0, got {m!r}")
        return cls(geometric_sum(m + 1))

    @property
    def is_zero(self) -> bool:
        return not self.pp

    def __add__(self, other: "MotiveClass") -> "MotiveClass":
        """Direct sum of classes."""
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return MotiveClass(self.pp + other.pp)

    def __neg__(self) -> "MotiveClass":
        return MotiveClass(-self.pp)

    def __sub__(self, other: "MotiveClass") -> "MotiveClass":
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return MotiveClass(self.pp - other.pp)

    def __mul__(self, other: "MotiveClass") -> "MotiveClass":
        """Tensor product of classes (Kunneth on Poincare polynomials)."""
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return MotiveClass(self.pp * other.pp)

    def euler(self) -> Scalar:
        """Euler characteristic: exact evaluation of pp at s = -1."""
        return self.pp.eval_minus_one()

    def __str__(self) -> str:
        return str(self.pp)


@dataclass(frozen=True)
class TwistedPresentation:
    """A class given by a base polynomial together with an integer twist.

    ``normalize`` folds the twist into the exponents; two presentations
    that differ by the move (base_pp * s^(2k), twist + k) are presentations
    of the same class.
    """

    base_pp: LaurentPoly
    twist: int

    def normalize(self) -> MotiveClass:
        return MotiveClass(self.base_pp.shift(-2 * self.twist))

    def retwisted(self, k: int) -> "TwistedPresentation":
        """The equivalent presentation with twist raised by k."""
        return TwistedPresentation(self.base_pp.shift(2 * k), self.twist + k)
