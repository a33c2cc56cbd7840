"""Seeded randomized self-checks, exposed to the CLI.

Each check returns (name, ok, detail).  All randomness flows through one
``random.Random(seed)`` so a failing run is reproducible from its seed.
"""

from __future__ import annotations

import random

from .generators import (
    BettiProfile,
    divisor_chow_series,
    euler_chow_series,
    gap_exponent_fn,
    zero_cycle_series,
)
from .laurent import LaurentPoly, binomial, geometric_sum, s_power
from .motives import MotiveClass, TwistedPresentation
from .rationality import clear_geometric_factor, refute_denominator
from .series import GradedPolynomial, GradedSeries, t_polynomial, witness_check


def random_laurent(rng: random.Random, max_terms: int = 8, exp_range=(-6, 10), coeff_range=(-9, 9)) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(*exp_range)] = rng.randint(*coeff_range)
    return LaurentPoly(terms)


def random_graded_series(rng: random.Random, rank: int | None = None) -> GradedSeries:
    rank = rank or rng.choice((1, 2))
    if rank == 1:
        truncation = (rng.randint(3, 8),)
    else:
        truncation = (rng.randint(1, 3), rng.randint(1, 3))
    coeffs = {}
    import itertools

    points = list(itertools.product(*(range(b + 1) for b in truncation)))
    for lam in rng.sample(points, k=min(len(points), rng.randint(1, 6))):
        poly = random_laurent(rng, max_terms=4, exp_range=(0, 6), coeff_range=(-5, 5))
        if poly:
            coeffs[lam] = poly
    return GradedSeries(rank, truncation, coeffs)


def random_denominator(rng: random.Random, max_s: int = 6, max_t: int = 6, coeff_bound: int = 5) -> GradedPolynomial:
    """Random rank-1 candidate denominator with nonnegative s-exponents up
    to max_s, t-degree up to max_t, coefficients in [-bound, bound], and a
    unit constant term."""
    coeffs = {0: s_power(rng.randint(0, max_s)) * rng.choice((1, -1))}
    for d in range(1, max_t + 1):
        poly = LaurentPoly(
            {
                rng.randint(0, max_s): rng.randint(-coeff_bound, coeff_bound)
                for _ in range(rng.randint(0, 3))
            }
        )
        if poly:
            coeffs[d] = poly
    return t_polynomial(coeffs)


def check_laurent_ring_axioms(rng: random.Random, samples: int = 200):
    for _ in range(samples):
        a, b, c = (random_laurent(rng) for _ in range(3))
        if (a + b) + c != a + (b + c):
            return False, "associativity of addition failed"
        if a * b != b * a:
            return False, "commutativity of multiplication failed"
        if a * (b + c) != a * b + a * c:
            return False, "distributivity failed"
        if (a * b) * c != a * (b * c):
            return False, "associativity of multiplication failed"
    return True, f"{samples} random triples"


def check_geometric_telescoping(limit: int = 200):
    one_minus_s2 = LaurentPoly({0: 1, 2: -1})
    for n in range(1, limit + 1):
        if geometric_sum(n) * one_minus_s2 != LaurentPoly({0: 1, 2 * n: -1}):
            return False, f"telescoping identity failed at {n}"
    return True, f"term counts 1..{limit}"


def check_euler_evaluation_homomorphism(rng: random.Random, samples: int = 200):
    for _ in range(samples):
        a, b = random_laurent(rng), random_laurent(rng)
        if (a * b).eval_minus_one() != a.eval_minus_one() * b.eval_minus_one():
            return False, "multiplicativity failed"
        if (a + b).eval_minus_one() != a.eval_minus_one() + b.eval_minus_one():
            return False, "additivity failed"
    return True, f"{samples} random pairs"


def check_pascal_identity(limit: int = 60):
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            if binomial(a, b) != binomial(a - 1, b - 1) + binomial(a - 1, b):
                return False, f"Pascal identity failed at ({a}, {b})"
    return True, f"all (a, b) up to {limit}"


def check_motive_laws(rng: random.Random, samples: int = 100):
    unit = MotiveClass.point()
    for _ in range(samples):
        a = MotiveClass(random_laurent(rng))
        b = MotiveClass(random_laurent(rng))
        if a * unit != a:
            return False, "tensor unit law failed"
        if (a * b).euler() != a.euler() * b.euler():
            return False, "Euler multiplicativity failed"
        if (a + b).euler() != a.euler() + b.euler():
            return False, "Euler additivity failed"
        k = rng.randint(-3, 3)
        pres = TwistedPresentation(a.pp, rng.randint(-3, 3))
        if pres.retwisted(k).normalize() != pres.normalize():
            return False, "twist-move invariance failed"
    return True, f"{samples} random classes"


def check_series_ring_axioms(rng: random.Random, samples: int = 100):
    for _ in range(samples):
        rank = rng.choice((1, 2))
        f, g, h = (random_graded_series(rng, rank) for _ in range(3))
        if (f * g) * h != f * (g * h):
            return False, "convolution associativity failed"
        if f * g != g * f:
            return False, "convolution commutativity failed"
        lhs = f * (g + h)
        if lhs != f * g + f * h:
            return False, "distributivity failed"
        delta = GradedSeries.unit(rank, f.truncation)
        if f * delta != f:
            return False, "unit series neutrality failed"
    return True, f"{samples} random triples"


def check_invert_roundtrip(rng: random.Random, samples: int = 50):
    for _ in range(samples):
        rank = rng.choice((1, 2))
        truncation = (rng.randint(3, 6),) if rank == 1 else (rng.randint(1, 3), rng.randint(1, 3))
        coeffs = {(0,) * rank: s_power(rng.randint(-2, 2)) * rng.choice((1, -1, 2))}
        import itertools

        for lam in itertools.product(*(range(b + 1) for b in truncation)):
            if lam == (0,) * rank:
                continue
            if rng.random() < 0.5:
                poly = random_laurent(rng, max_terms=3, exp_range=(-2, 4), coeff_range=(-3, 3))
                if poly:
                    coeffs[lam] = poly
        f = GradedPolynomial(rank, coeffs)
        inverse = f.invert(truncation)
        if inverse * f != GradedSeries.unit(rank, truncation):
            return False, "f * invert(f) is not the unit series"
    return True, f"{samples} random invertible polynomials"


def check_witness_closure(rng: random.Random, samples: int = 30):
    for _ in range(samples):
        truncation = (rng.randint(8, 12),)
        f = random_denominator(rng, max_s=3, max_t=3, coeff_bound=3)
        g = t_polynomial(
            {
                d: random_laurent(rng, max_terms=3, exp_range=(0, 4), coeff_range=(-4, 4))
                for d in range(rng.randint(1, 3))
            }
        )
        phi = f.invert(truncation) * g
        if not witness_check(f, phi, g):
            return False, "witness_check rejected invert(f) * g"
    return True, f"{samples} constructed rational series"


def check_generator_coherence(rng: random.Random, samples: int = 20):
    for _ in range(samples):
        n = rng.randint(1, 3)
        small = divisor_chow_series(n, 5)
        large = small.extend((9,))
        for d in range(6):
            if large.coefficient(d) != small.coefficient(d):
                return False, f"extension changed cached coefficient at d={d}"
    return True, f"{samples} extensions"


def check_divisor_witness_n1():
    phi = divisor_chow_series(1, 30)
    f = t_polynomial({0: 1, 1: -1}) * t_polynomial({0: 1, 1: -s_power(2)})
    g = GradedPolynomial.unit(1)
    ok = witness_check(f, phi, g)
    return ok, "f = (1-t)(1-s^2 t), g = 1, truncation 30"


def check_euler_witnesses(max_n: int = 4):
    for n in range(1, max_n + 1):
        phi = euler_chow_series(n, 30)
        f = t_polynomial({0: 1, 1: -1}) ** (n + 1)
        if not witness_check(f, phi, GradedPolynomial.unit(1)):
            return False, f"(1-t)^{n + 1} failed at n={n}"
    return True, f"(1-t)^(n+1) witnesses for n <= {max_n}"


def check_zero_cycle_cross(max_d: int = 25):
    sym = zero_cycle_series(BettiProfile((1, 1)), max_d)
    div = divisor_chow_series(1, max_d)
    ok = dict(sym.entries()) == dict(div.entries())
    return ok, f"symmetric-product vs divisor family, truncation {max_d}"


def check_gap_identity(max_n: int = 6, max_d: int = 30):
    for n in range(1, max_n + 1):
        fn = gap_exponent_fn(n)
        for d in range(max_d + 1):
            if fn(d + 1) - fn(d) != 2 * binomial(d + n, n - 1):
                return False, f"difference identity failed at n={n}, d={d}"
        if n >= 2:
            diffs = [fn(d + 1) - fn(d) for d in range(max_d + 1)]
            if any(b <= a for a, b in zip(diffs, diffs[1:])):
                return False, f"differences not strictly increasing at n={n}"
    return True, f"n <= {max_n}, d <= {max_d}"


def check_falsifier_soundness(rng: random.Random, n: int = 2, samples: int = 200, max_d: int = 30):
    phi = divisor_chow_series(n, max_d)
    cleared = clear_geometric_factor(phi)
    for i in range(samples):
        f = random_denominator(rng)
        if not refute_denominator(f, cleared):
            return False, f"denominator #{i} was not refuted (n={n})"
    return True, f"{samples} random denominators refuted (n={n})"


def run_selftest(seed: int = 0, falsifier_samples: int = 200):
    """Run every check with one seeded RNG; returns [(name, ok, detail)]."""
    rng = random.Random(seed)
    checks = [
        ("laurent-ring-axioms", lambda: check_laurent_ring_axioms(rng)),
        ("geometric-telescoping", check_geometric_telescoping),
        ("euler-evaluation-homomorphism", lambda: check_euler_evaluation_homomorphism(rng)),
        ("pascal-identity", check_pascal_identity),
        ("motive-laws", lambda: check_motive_laws(rng)),
        ("series-ring-axioms", lambda: check_series_ring_axioms(rng)),
        ("invert-roundtrip", lambda: check_invert_roundtrip(rng)),
        ("witness-closure", lambda: check_witness_closure(rng)),
        ("generator-coherence", lambda: check_generator_coherence(rng)),
        ("divisor-witness-n1", check_divisor_witness_n1),
        ("euler-witnesses", check_euler_witnesses),
        ("zero-cycle-cross-check", check_zero_cycle_cross),
        ("gap-identity", check_gap_identity),
        ("falsifier-soundness-n2", lambda: check_falsifier_soundness(rng, 2, falsifier_samples)),
        ("falsifier-soundness-n3", lambda: check_falsifier_soundness(rng, 3, falsifier_samples)),
    ]
    results = []
    for name, fn in checks:
        ok, detail = fn()
        results.append((name, ok, detail))
    return results
