"""Exact height values over Q and the section-based height engine.

An ExactHeight is a finite formal sum of rational multiples of log p over
primes p; its real value is sum(c_p * log p).  Storing the coefficients
exactly lets independently derived height formulas be compared with zero
tolerance.  There is no floating point anywhere in this module except in
the convenience method value().

The engine height_from_sections evaluates the height of a point against a
line bundle whose n-th power is generically generated by sections with
known (rational, nonzero) pullback values x_i:

    sum over primes p of ceil(-min_i ord_p(x_i) / n) * log p
    +  (1/n) * log max_i |x_i|,

where the archimedean term is expanded exactly through the prime
factorization of the maximizing value.  The normalization carries no
ceiling at the archimedean place, which makes the closed forms
log max_i |M_i|^{1/a_i} (weighted projective) and log |N|^{1/n} (n-th
power classes) hold exactly rather than up to a bounded function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .arith import factor

__all__ = ["ExactHeight", "HeightBreakdown", "height_from_sections", "combine"]

Rational = Union[int, Fraction]


class ExactHeight:
    """Finite map prime -> rational coefficient; value = sum c_p * log p."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(p)] = c
        self._terms = clean

    @staticmethod
    def zero() -> "ExactHeight":
        return ExactHeight()

    @staticmethod
    def log_abs(x: Rational, scale: Rational = 1) -> "ExactHeight":
        """scale * log|x| expanded through the factorization of x (x != 0)."""
        x = Fraction(x)
        if x == 0:
            raise ValueError("log_abs of 0")
        scale = Fraction(scale)
        terms: dict[int, Fraction] = {}
        if scale != 0:
            for p, e in factor(x.numerator).factors:
                terms[p] = terms.get(p, Fraction(0)) + scale * e
            for p, e in factor(x.denominator).factors:
                terms[p] = terms.get(p, Fraction(0)) - scale * e
        return ExactHeight(terms)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, p: int) -> Fraction:
        return self._terms.get(p, Fraction(0))

    def value(self) -> float:
        return sum(float(c) * math.log(p) for p, c in self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "ExactHeight") -> "ExactHeight":
        terms = dict(self._terms)
        for p, c in other._terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return ExactHeight(terms)

    def __sub__(self, other: "ExactHeight") -> "ExactHeight":
        return self + (-other)

    def __neg__(self) -> "ExactHeight":
        return ExactHeight({p: -c for p, c in self._terms.items()})

    def __mul__(self, r: Rational) -> "ExactHeight":
        r = Fraction(r)
        return ExactHeight({p: c * r for p, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactHeight):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{p}: {c}" for p, c in sorted(self._terms.items()))
        return f"ExactHeight({{{inner}}})"

    def to_json(self) -> dict:
        return {
            "terms": [
                [p, c.numerator, c.denominator]
                for p, c in sorted(self._terms.items())
            ],
            "value": self.value(),
        }

    @staticmethod
    def from_json(obj: dict) -> "ExactHeight":
        return ExactHeight(
            {int(p): Fraction(int(n), int(d)) for p, n, d in obj["terms"]}
        )


@dataclass(frozen=True)
class HeightBreakdown:
    """Stable height plus per-prime local discrepancies; total is their sum."""

    stable: ExactHeight
    discrepancies: dict[int, ExactHeight] = field(default_factory=dict)
    total: ExactHeight = field(default_factory=ExactHeight)

    def to_json(self) -> dict:
        return {
            "stable": self.stable.to_json(),
            "discrepancies": [
                [p, h.to_json()] for p, h in sorted(self.discrepancies.items())
            ],
            "total": self.total.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "HeightBreakdown":
        return HeightBreakdown(
            stable=ExactHeight.from_json(obj["stable"]),
            discrepancies={
                int(p): ExactHeight.from_json(h) for p, h in obj["discrepancies"]
            },
            total=ExactHeight.from_json(obj["total"]),
        )


def combine(
    stable: ExactHeight, discrepancies: Mapping[int, ExactHeight]
) -> HeightBreakdown:
    """Assemble a breakdown; total = stable + sum of discrepancies, exactly.

    Local discrepancies are nonnegative by construction everywhere they
    arise; a negative coefficient here indicates a caller bug.
    """
    clean = {int(p): d for p, d in discrepancies.items() if not d.is_zero()}
    total = stable
    for p, d in clean.items():
        if any(c < 0 for c in d.terms.values()):
            raise ValueError(f"negative discrepancy coefficient at prime {p}")
        total = total + d
    return HeightBreakdown(stable=stable, discrepancies=clean, total=total)


def _ord_map(x: Fraction) -> dict[int, int]:
    ords: dict[int, int] = {}
    for p, e in factor(x.numerator).factors:
        ords[p] = e
    for p, e in factor(x.denominator).factors:
        ords[p] = ords.get(p, 0) - e
    return ords


def height_from_sections(n: int, values: Iterable[Rational]) -> ExactHeight:
    """Height of a point from pullbacks of generating sections of L^n.

    values are the nonzero rational section values under one fixed
    trivialization; the result is invariant under multiplying all of them
    by lambda^n for any rational lambda != 0.
    """
    vals = [Fraction(v) for v in values]
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not vals:
        raise ValueError("need at least one section value")
    if any(v == 0 for v in vals):
        raise ValueError("section values must be nonzero")

    ord_maps = [_ord_map(v) for v in vals]
    primes = set().union(*ord_maps)
    terms: dict[int, Fraction] = {}
    for p in primes:
        m = min(om.get(p, 0) for om in ord_maps)
        c = -(m // n)  # ceil(-m/n)
        if c:
            terms[p] = Fraction(c)

    vmax = max(abs(v) for v in vals)
    arch = ExactHeight.log_abs(vmax, Fraction(1, n))
    return ExactHeight(terms) + arch
