"""Graded formal power series over NN^r with Laurent-polynomial coefficients.

Degrees are tuples of r nonnegative integers; componentwise addition is the
monoid operation.  Two kinds of objects live here:

* ``GradedPolynomial``: finite support, exact everywhere.
* ``GradedSeries``: exact coefficients stored for every degree inside a
  rectangular truncation box (missing keys inside the box mean a zero
  coefficient), optionally backed by a generator -- a pure function
  degree -> coefficient -- which extends the series beyond the box.

Multiplication is the convolution product
    (f * g)(lam) = sum over mu1 + mu2 = lam of f(mu1) * g(mu2),
a finite sum because every degree in NN^r has finitely many decompositions.
Truncation is a hard box bound: each operation returns the largest box on
which its result is exact (the componentwise minimum of the operand boxes),
never a silently wrong tail.

Inversion works in the rationalized coefficient ring: a polynomial is
invertible exactly when its degree-zero coefficient is a unit of the
Laurent ring, i.e. a single power of s with a nonzero rational scalar.
Inverse coefficients may be genuinely rational; they are reported as exact
fractions.

The environment variable CHOWSERIES_MAX_TERMS (default 10**6) caps the
total number of Laurent-polynomial terms a single series materialization
will produce.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

from .errors import (
    InsufficientTruncationError,
    NotInvertibleError,
    RankMismatchError,
    TermBudgetError,
)
from .laurent import ZERO, LaurentPoly

ExponentVector = tuple[int, ...]

_DEFAULT_TERM_CAP = 10**6


def term_cap() -> int:
    """Current coefficient-term budget, read from CHOWSERIES_MAX_TERMS."""
    raw = os.environ.get("CHOWSERIES_MAX_TERMS")
    if raw is None:
        return _DEFAULT_TERM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise TermBudgetError(f"CHOWSERIES_MAX_TERMS is not an integer: {raw!r}")
    if cap < 1:
        raise TermBudgetError(f"CHOWSERIES_MAX_TERMS must be positive, got {cap}")
    return cap


def _check_budget(total_terms: int):
    cap = term_cap()
    if total_terms > cap:
        raise TermBudgetError(
            f"computation would materialize {total_terms} coefficient terms, "
            f"exceeding CHOWSERIES_MAX_TERMS={cap}"
        )


def as_vector(lam, rank: int) -> ExponentVector:
    """Coerce a degree to a validated tuple; bare ints are rank-1 sugar."""
    if isinstance(lam, int):
        if rank != 1:
            raise RankMismatchError(f"bare int degree {lam} only valid at rank 1, not rank {rank}")
        lam = (lam,)
    else:
        lam = tuple(lam)
    if len(lam) != rank:
        raise RankMismatchError(f"degree {lam} has rank {len(lam)}, expected {rank}")
    for x in lam:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"degree components must be nonnegative ints, got {lam}")
    return lam


def vec_add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x - y for x, y in zip(a, b))

def vec_min(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(min(x, y) for x, y in zip(a, b))

def vec_leq(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def iter_box(bound: ExponentVector):
    """All degrees inside the box [0, bound], in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bound))


def _graded_box(bound: ExponentVector):
    return sorted(iter_box(bound), key=lambda v: (sum(v), v))


def _as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.term(value)
    raise TypeError(f"coefficients must be LaurentPoly or exact scalars, got {type(value).__name__}")


def _coeff_map(rank: int, coefficients) -> dict[ExponentVector, LaurentPoly]:
    data: dict[ExponentVector, LaurentPoly] = {}
    if coefficients:
        items = coefficients.items() if hasattr(coefficients, "items") else coefficients
        for lam, value in items:
            vec = as_vector(lam, rank)
            poly = _as_poly(value)
            acc = data.get(vec, ZERO) + poly
            if acc:
                data[vec] = acc
            elif vec in data:
                del data[vec]
    return data


class GradedPolynomial:
    """Finitely supported map degree -> LaurentPoly; exact everywhere."""

    __slots__ = ("rank", "_coeffs")

    def __init__(self, rank: int, coefficients=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive int, got {rank!r}")
        self.rank = rank
        self._coeffs = _coeff_map(rank, coefficients)

    @classmethod
    def zero(cls, rank: int) -> "GradedPolynomial":
        return cls(rank)

    @classmethod
    def unit(cls, rank: int) -> "GradedPolynomial":
        """The convolution identity: coefficient 1 at degree 0."""
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, rank: int, lam, coeff=1) -> "GradedPolynomial":
        return cls(rank, {as_vector(lam, rank): coeff})

    @property
    def support(self) -> tuple[ExponentVector, ...]:
        return tuple(sorted(self._coeffs))

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, lam) -> LaurentPoly:
        return self._coeffs.get(as_vector(lam, self.rank), ZERO)

    @property
    def constant_term(self) -> LaurentPoly:
        return self._coeffs.get((0,) * self.rank, ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_invertible(self) -> bool:
        """Invertible in the rationalized series ring: the degree-zero
        coefficient must be a nonzero scalar multiple of a single power
        of s."""
        return self.constant_term.is_monomial

    @property
    def max_degrees(self) -> ExponentVector:
        """Componentwise maximum over the support; all zeros when empty."""
        if not self._coeffs:
            return (0,) * self.rank
        return tuple(max(v[i] for v in self._coeffs) for i in range(self.rank))

    def s_degree_bounds(self):
        """(min, max) s-exponent over all coefficients, or None when zero."""
        exps = [e for p in self._coeffs.values() for e in p.support]
        if not exps:
            return None
        return min(exps), max(exps)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.rank == other.rank and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.rank, tuple(sorted((v, p.to_pairs()) for v, p in self._coeffs.items()))))

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial(self.rank, {v: -p for v, p in self._coeffs.items()})

    def __add__(self, other) -> "GradedPolynomial":
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        data = dict(self._coeffs)
        for v, p in other._coeffs.items():
            acc = data.get(v, ZERO) + p
            if acc:
                data[v] = acc
            elif v in data:
                del data[v]
        out = GradedPolynomial(self.rank)
        out._coeffs = data
        return out

    def __sub__(self, other) -> "GradedPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return other.__mul__(self)
        if isinstance(other, (int, Fraction, LaurentPoly)):
            scalar = _as_poly(other)
            return GradedPolynomial(self.rank, {v: p * scalar for v, p in self._coeffs.items()})
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        data: dict[ExponentVector, LaurentPoly] = {}
        for v1, p1 in self._coeffs.items():
            for v2, p2 in other._coeffs.items():
                v = vec_add(v1, v2)
                acc = data.get(v, ZERO) + p1 * p2
                if acc:
                    data[v] = acc
                elif v in data:
                    del data[v]
        out = GradedPolynomial(self.rank)
        out._coeffs = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = GradedPolynomial.unit(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def invert(self, truncation) -> "GradedSeries":
        """Multiplicative inverse as a series, exact up to ``truncation``.

        Requires an invertible degree-zero coefficient; the recursion
        g(lam) = -f(0)^(-1) * sum over 0 < mu <= lam of f(mu) * g(lam - mu)
        runs over the rationalized coefficient ring, so inverse
        coefficients may carry exact fractions.
        """
        box = as_vector(truncation, self.rank)
        table = _inverse_table(self, box)
        series = GradedSeries(self.rank, box, table, generator=_InverseGenerator(self))
        return series

    def as_series(self, truncation) -> "GradedSeries":
        box = as_vector(truncation, self.rank)
        data = {v: p for v, p in self._coeffs.items() if vec_leq(v, box)}
        return GradedSeries(self.rank, box, data, generator=self.coefficient)

    def __repr__(self) -> str:
        return f"<GradedPolynomial rank={self.rank} terms={len(self._coeffs)}>"


def t_polynomial(coefficients) -> GradedPolynomial:
    """Rank-1 polynomial from a map degree -> coefficient."""
    return GradedPolynomial(1, coefficients)


def _inverse_table(poly: GradedPolynomial, box: ExponentVector):
    if not poly.is_invertible:
        raise NotInvertibleError(
            "degree-zero coefficient is not a unit of the Laurent ring: "
            f"{poly.constant_term!r}"
        )
    rank = poly.rank
    zero_vec = (0,) * rank
    c0_inv = poly.constant_term.invert_monomial()
    higher = [(v, p) for v, p in poly._coeffs.items() if v != zero_vec]
    table: dict[ExponentVector, LaurentPoly] = {}
    total = 0
    for lam in _graded_box(box):
        if lam == zero_vec:
            value = c0_inv
        else:
            acc = ZERO
            for mu, p in higher:
                if vec_leq(mu, lam):
                    acc = acc + p * table.get(vec_sub(lam, mu), ZERO)
            value = -(c0_inv * acc)
        if value:
            table[lam] = value
            total += value.num_terms
            _check_budget(total)
    return table


class _InverseGenerator:
    """Pure extension of a polynomial inverse: recomputes the recursion up
    to the requested degree on every call."""

    def __init__(self, poly: GradedPolynomial):
        self._poly = poly

    def __call__(self, lam):
        lam = as_vector(lam, self._poly.rank)
        return _inverse_table(self._poly, lam).get(lam, ZERO)


class GradedSeries:
    """Truncation-aware series: exact coefficients on a box, optional
    generator for extension beyond it."""

    __slots__ = ("rank", "truncation", "_coeffs", "generator")

    def __init__(self, rank: int, truncation, coefficients=None, generator=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive int, got {rank!r}")
        self.rank = rank
        self.truncation = as_vector(truncation, rank)
        data = _coeff_map(rank, coefficients)
        for vec in data:
            if not vec_leq(vec, self.truncation):
                raise ValueError(f"coefficient at {vec} lies outside truncation {self.truncation}")
        self._coeffs = data
        self.generator = generator
        _check_budget(sum(p.num_terms for p in data.values()))

    @classmethod
    def from_generator(cls, rank: int, truncation, generator) -> "GradedSeries":
        box = as_vector(truncation, rank)
        data = {}
        total = 0
        for lam in iter_box(box):
            poly = _as_poly(generator(lam))
            if poly:
                data[lam] = poly
                total += poly.num_terms
                _check_budget(total)
        return cls(rank, box, data, generator=generator)

    @classmethod
    def unit(cls, rank: int, truncation) -> "GradedSeries":
        """The convolution identity on the given box."""
        series = GradedPolynomial.unit(rank).as_series(truncation)
        return series

    def coefficient(self, lam) -> LaurentPoly:
        """Exact coefficient at ``lam``.  Inside the truncation box this is
        the stored value (zero when absent); outside, the generator is
        consulted, and without one the request is an error rather than a
        guess."""
        vec = as_vector(lam, self.rank)
        if vec_leq(vec, self.truncation):
            return self._coeffs.get(vec, ZERO)
        if self.generator is not None:
            return _as_poly(self.generator(vec))
        raise InsufficientTruncationError(
            f"degree {vec} is beyond truncation {self.truncation} and no generator is attached"
        )

    def entries(self):
        """Sorted (degree, coefficient) pairs over the nonzero coefficients."""
        return sorted(self._coeffs.items())

    @property
    def support(self) -> tuple[ExponentVector, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant_in_s(self) -> bool:
        return all(p.is_constant for p in self._coeffs.values())

    @property
    def total_terms(self) -> int:
        return sum(p.num_terms for p in self._coeffs.values())

    def __eq__(self, other) -> bool:
        """Structural equality of rank, truncation and coefficients; the
        generator is deliberately ignored."""
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.truncation == other.truncation
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.rank, self.truncation, tuple(sorted((v, p.to_pairs()) for v, p in self._coeffs.items()))))

    def __neg__(self) -> "GradedSeries":
        gen = self.generator
        neg_gen = (lambda lam: -_as_poly(gen(lam))) if gen is not None else None
        return GradedSeries(self.rank, self.truncation, {v: -p for v, p in self._coeffs.items()}, generator=neg_gen)

    def __add__(self, other) -> "GradedSeries":
        if isinstance(other, GradedPolynomial):
            other = other.as_series(self.truncation)
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        box = vec_min(self.truncation, other.truncation)
        data: dict[ExponentVector, LaurentPoly] = {}
        for source in (self._coeffs, other._coeffs):
            for v, p in source.items():
                if not vec_leq(v, box):
                    continue
                acc = data.get(v, ZERO) + p
                if acc:
                    data[v] = acc
                elif v in data:
                    del data[v]
        gen = None
        if self.generator is not None and other.generator is not None:
            gen = _sum_generator(self, other)
        return GradedSeries(self.rank, box, data, generator=gen)

    def __sub__(self, other) -> "GradedSeries":
        return self + (-other)

    def __mul__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            scalar = _as_poly(other)
            gen = self.generator
            scaled_gen = (lambda lam: _as_poly(gen(lam)) * scalar) if gen is not None else None
            return GradedSeries(
                self.rank,
                self.truncation,
                {v: p * scalar for v, p in self._coeffs.items()},
                generator=scaled_gen,
            )
        if isinstance(other, GradedPolynomial):
            if other.rank != self.rank:
                raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
            box = self.truncation
            data = _convolve_maps(other._coeffs, self._coeffs, box)
            gen = _poly_conv_generator(other, self) if self.generator is not None else None
            return GradedSeries(self.rank, box, data, generator=gen)
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        box = vec_min(self.truncation, other.truncation)
        data = _convolve_maps(self._coeffs, other._coeffs, box)
        gen = None
        if self.generator is not None and other.generator is not None:
            gen = _conv_generator(self, other)
        return GradedSeries(self.rank, box, data, generator=gen)

    __rmul__ = __mul__

    def restrict(self, truncation) -> "GradedSeries":
        box = as_vector(truncation, self.rank)
        if not vec_leq(box, self.truncation):
            raise ValueError(f"restriction box {box} exceeds current truncation {self.truncation}")
        data = {v: p for v, p in self._coeffs.items() if vec_leq(v, box)}
        return GradedSeries(self.rank, box, data, generator=self.generator)

    def extend(self, truncation) -> "GradedSeries":
        """A larger-box copy, with new coefficients from the generator.
        Cached coefficients are carried over untouched."""
        box = as_vector(truncation, self.rank)
        if not vec_leq(self.truncation, box):
            raise ValueError(f"extension box {box} does not dominate {self.truncation}")
        if self.generator is None:
            raise InsufficientTruncationError("cannot extend a series without a generator")
        data = dict(self._coeffs)
        total = sum(p.num_terms for p in data.values())
        for lam in iter_box(box):
            if vec_leq(lam, self.truncation):
                continue
            poly = _as_poly(self.generator(lam))
            if poly:
                data[lam] = poly
                total += poly.num_terms
                _check_budget(total)
        return GradedSeries(self.rank, box, data, generator=self.generator)

    def __repr__(self) -> str:
        return (
            f"<GradedSeries rank={self.rank} truncation={self.truncation} "
            f"entries={len(self._coeffs)}>"
        )


def _convolve_maps(a, b, box):
    data: dict[ExponentVector, LaurentPoly] = {}
    total = 0
    for v1, p1 in a.items():
        for v2, p2 in b.items():
            v = vec_add(v1, v2)
            if not vec_leq(v, box):
                continue
            acc = data.get(v, ZERO) + p1 * p2
            if acc:
                data[v] = acc
            elif v in data:
                del data[v]
    total = sum(p.num_terms for p in data.values())
    _check_budget(total)
    return data


def _sum_generator(f: GradedSeries, g: GradedSeries):
    return lambda lam: f.coefficient(lam) + g.coefficient(lam)


def _conv_generator(f: GradedSeries, g: GradedSeries):
    def gen(lam):
        acc = ZERO
        for mu in iter_box(lam):
            a = f.coefficient(mu)
            if a:
                acc = acc + a * g.coefficient(vec_sub(lam, mu))
        return acc

    return gen


def _poly_conv_generator(poly: GradedPolynomial, series: GradedSeries):
    def gen(lam):
        acc = ZERO
        for mu, p in poly._coeffs.items():
            if vec_leq(mu, lam):
                acc = acc + p * series.coefficient(vec_sub(lam, mu))
        return acc

    return gen


def witness_check(f: GradedPolynomial, phi: GradedSeries, g: GradedPolynomial) -> bool:
    """Decide whether f * phi = g holds on the checkable box.

    True iff the convolution f * phi agrees with g at every degree within
    phi's truncation.  The truncation must cover the support of both f and
    g; otherwise the data cannot settle the question and an
    InsufficientTruncationError is raised (deliberately distinct from
    returning False).
    """
    if not (f.rank == phi.rank == g.rank):
        raise RankMismatchError(
            f"rank mismatch: f={f.rank}, series={phi.rank}, g={g.rank}"
        )
    box = phi.truncation
    for vec in f.support + g.support:
        if not vec_leq(vec, box):
            raise InsufficientTruncationError(
                f"truncation {box} does not cover witness support point {vec}"
            )
    product = phi * f
    return product._coeffs == g._coeffs
