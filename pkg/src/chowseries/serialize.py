"""JSON forms for series, polynomials and verdicts.

Series schema::

    {"rank": r,
     "truncation": [b_1, ..., b_r],
     "entries": [{"lambda": [ints], "coeff": [[exp, "coeff-string"], ...]}, ...],
     "meta": {...}}            # optional generator structure

Coefficient strings are decimal ("-12") or exact rationals ("5/3"), so
arbitrary precision survives the round trip.  Entries are sorted by degree
and coefficient pairs by exponent; ``dumps`` is deterministic, making JSON
output byte-identical across runs.  Polynomials use the same shape without
the truncation.  The optional ``meta`` field describes a structured
generator (see ``generators.generator_from_meta``); it is trusted on load.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import ChowSeriesError
from .generators import generator_from_meta, generator_meta
from .laurent import LaurentPoly
from .rationality import Verdict
from .series import GradedPolynomial, GradedSeries


def _scalar_to_str(value) -> str:
    return str(value)


def _scalar_from_str(text: str):
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value


def coeff_to_pairs(poly: LaurentPoly) -> list:
    return [[e, _scalar_to_str(c)] for e, c in poly.to_pairs()]


def coeff_from_pairs(pairs) -> LaurentPoly:
    return LaurentPoly([(int(e), _scalar_from_str(c)) for e, c in pairs])


def _entries_to_json(entries) -> list:
    return [{"lambda": list(lam), "coeff": coeff_to_pairs(poly)} for lam, poly in entries]


def _entries_from_json(entries) -> dict:
    data = {}
    for entry in entries:
        lam = tuple(int(x) for x in entry["lambda"])
        data[lam] = coeff_from_pairs(entry["coeff"])
    return data


def series_to_dict(series: GradedSeries) -> dict:
    out = {
        "rank": series.rank,
        "truncation": list(series.truncation),
        "entries": _entries_to_json(series.entries()),
    }
    meta = generator_meta(series.generator) if series.generator is not None else None
    if meta is not None:
        out["meta"] = meta
    return out


def series_from_dict(data: dict) -> GradedSeries:
    try:
        rank = int(data["rank"])
        truncation = tuple(int(x) for x in data["truncation"])
        coeffs = _entries_from_json(data["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ChowSeriesError(f"malformed series JSON: {exc}") from exc
    generator = generator_from_meta(data.get("meta"))
    return GradedSeries(rank, truncation, coeffs, generator=generator)


def poly_to_dict(poly: GradedPolynomial) -> dict:
    return {"rank": poly.rank, "entries": _entries_to_json(poly.items())}


def poly_from_dict(data: dict) -> GradedPolynomial:
    try:
        rank = int(data["rank"])
        coeffs = _entries_from_json(data["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ChowSeriesError(f"malformed polynomial JSON: {exc}") from exc
    return GradedPolynomial(rank, coeffs)


def verdict_to_dict(verdict: Verdict) -> dict:
    cert = verdict.certificate
    witness = verdict.witness
    evidence: dict = {"kind": "none"}
    if cert is not None:
        evidence = {
            "kind": cert.growth.kind.value,
            "description": cert.growth.describe(),
        }
        if cert.growth.descriptor is not None:
            from .growth import growth_to_json

            evidence["descriptor"] = growth_to_json(cert.growth.descriptor)
        if cert.growth.observed_range is not None:
            evidence["observed_support_range"] = list(cert.growth.observed_range)
    out = {
        "verdict": verdict.kind.value,
        "support_points": list(cert.support) if cert else None,
        "gaps": list(cert.gaps) if cert else None,
        "gaps_inclusive": list(cert.gaps_inclusive) if cert else None,
        "witness": None,
        "evidence": evidence,
    }
    if witness is not None:
        out["witness"] = {
            "f": poly_to_dict(witness.denominator),
            "g": poly_to_dict(witness.numerator),
            "checked_truncation": list(witness.checked_truncation),
        }
    if verdict.reason is not None:
        out["reason"] = verdict.reason
    if verdict.diagnostic is not None:
        out["diagnostic"] = verdict.diagnostic
    if verdict.truncation_limited:
        out["truncation_limited"] = True
    return out


def dumps(obj: dict) -> str:
    """Deterministic JSON text: sorted keys, fixed separators, newline."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
