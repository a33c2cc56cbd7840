"""Exact arithmetic for Laurent polynomials in one variable.

A Laurent polynomial is a finite map from integer exponents (either sign)
to nonzero coefficients.  The polynomial c_a*s^a + ... + c_b*s^b is stored
as {a: c_a, ..., b: c_b}; the empty map is the zero polynomial.  Zero
coefficients are pruned on construction, so equal polynomials are
structurally equal.

Coefficients are Python ints (arbitrary precision) or fractions.Fraction
where an inversion forces denominators; arithmetic never touches floating
point.  Fractions with denominator 1 collapse back to ints.  Instances are
immutable after construction: every operation returns a fresh polynomial,
and values can be shared freely between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotInvertibleError

Scalar = int | Fraction


def _canonical(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _check_scalar(value) -> Scalar:
    if isinstance(value, (int, Fraction)):
        return _canonical(value)
    raise TypeError(f"coefficients must be exact (int or Fraction), got {type(value).__name__}")


class LaurentPoly:
    """Sparse Laurent polynomial with exact integer or rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data: dict[int, Scalar] = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for exp, c in items:
                if not isinstance(exp, int):
                    raise TypeError(f"exponents must be ints, got {exp!r}")
                c = _check_scalar(c)
                acc = _canonical(data.get(exp, 0) + c)
                if acc:
                    data[exp] = acc
                elif exp in data:
                    del data[exp]
        self._coeffs = data

    @classmethod
    def term(cls, coeff, exponent: int = 0) -> "LaurentPoly":
        """The single-term polynomial coeff * s^exponent."""
        return cls({exponent: coeff})

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls(list(pairs))

    def to_pairs(self) -> tuple[tuple[int, Scalar], ...]:
        """Sorted (exponent, coefficient) pairs; the canonical flat form."""
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> Scalar:
        return self._coeffs.get(exponent, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def num_terms(self) -> int:
        return len(self._coeffs)

    @property
    def min_degree(self):
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_degree(self):
        return max(self._coeffs) if self._coeffs else None

    @property
    def is_one(self) -> bool:
        return self._coeffs == {0: 1}

    @property
    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    @property
    def is_constant(self) -> bool:
        """True when the polynomial is a scalar (support contained in {0})."""
        return not self._coeffs or set(self._coeffs) == {0}

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == (LaurentPoly.term(other))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_pairs())

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.term(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc = _canonical(data.get(e, 0) + c)
            if acc:
                data[e] = acc
            elif e in data:
                del data[e]
        out = LaurentPoly()
        out._coeffs = data
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.term(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data: dict[int, Scalar] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc = _canonical(data.get(e, 0) + c1 * c2)
                if acc:
                    data[e] = acc
                elif e in data:
                    del data[e]
        out = LaurentPoly()
        out._coeffs = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers; invert units explicitly")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by s^k (shift all exponents by k)."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def eval_minus_one(self) -> Scalar:
        """Exact evaluation at s = -1 (the Euler specialization)."""
        total: Scalar = 0
        for e, c in self._coeffs.items():
            total += -c if e % 2 else c
        return _canonical(total)

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact evaluation at a nonzero rational x (x = 0 allowed when no
        negative exponents are present)."""
        x = _check_scalar(x)
        if x == 0:
            if self.min_degree is not None and self.min_degree < 0:
                raise ValueError("cannot evaluate negative exponents at 0")
            return _canonical(self._coeffs.get(0, 0))
        xq = Fraction(x)
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * xq**e
        return _canonical(total)

    def invert_monomial(self) -> "LaurentPoly":
        """Inverse of a unit c*s^k; raises NotInvertibleError otherwise."""
        if len(self._coeffs) != 1:
            raise NotInvertibleError(
                f"not a unit in the Laurent ring (support {self.support})"
            )
        ((e, c),) = self._coeffs.items()
        return LaurentPoly({-e: Fraction(1, 1) / c})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.to_pairs():
            if e == 0:
                body = str(abs(c) if isinstance(c, int) else abs(c))
            else:
                var = "s" if e == 1 else f"s^{e}"
                mag = abs(c)
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.to_pairs())!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.term(1)
S = LaurentPoly.term(1, 1)


def s_power(k: int) -> LaurentPoly:
    """The monomial s^k."""
    return LaurentPoly.term(1, k)


def geometric_sum(count: int) -> LaurentPoly:
    """1 + s^2 + s^4 + ... + s^(2*(count-1)): the Poincare polynomial of
    projective (count-1)-space, with exactly `count` terms.

    Satisfies (1 - s^2) * geometric_sum(count) = 1 - s^(2*count).
    """
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"geometric_sum needs a positive term count, got {count!r}")
    return LaurentPoly({2 * i: 1 for i in range(count)})


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient C(a, b) for nonnegative ints; 0 when b > a."""
    return math.comb(a, b)
