"""Heights on rooted projective lines over Q (footballs and generalizations).

A rooted line is P^1 with a finite set of rational points (zero loci of
primitive integer linear forms u*X + v*Y, pairwise non-proportional) given
stacky orders m_i >= 2.  A divisor d*[generic] + sum n_i/m_i [root_i] has
its height at a generic rational point (a : b), gcd(a, b) = 1, computed as

    stable part   deg(D) * log max(|a|, |b|)
    discrepancy   sum over roots i and primes p of
                  fracplus(k * n_i / m_i) * log p,   k = ord_p L_i(a, b),

with fracplus(q) = ceil(q) - q in [0, 1).  Points supported at a root are
classes of Q*/(Q*)^{m_i} and are delegated to the classifying heights.

The expected deformation dimension (edd) is the reduced discriminant minus
the height against the dual of the tangent divisor; on inputs where no
prime divides two distinct root values it coincides exactly with the
tangential height.  The reduced discriminant counts each prime once, even
when several roots are simultaneously stacky over it, so inputs with such
shared primes can be detected with colliding_primes before relying on the
identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .adelic import ExactHeight, HeightBreakdown, combine
from .arith import factor, power_free_part
from .classifying import PowerClass, bmun_height

__all__ = [
    "RootedLine",
    "StackDivisor",
    "StackyPointError",
    "generic_height",
    "type1_height",
    "northcott",
    "tangent_divisor",
    "tangential_height",
    "rdisc",
    "edd",
    "colliding_primes",
]


class StackyPointError(ValueError):
    """Raised when a generic-point operation receives a stacky point."""


@dataclass(frozen=True)
class RootedLine:
    """Roots as ((u, v), order) pairs: the form u*X + v*Y with order m >= 2."""

    roots: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        for (u, v), m in self.roots:
            if (u, v) == (0, 0):
                raise ValueError("zero form")
            if math.gcd(u, v) != 1:
                raise ValueError(f"form {(u, v)} is not primitive")
            if m < 2:
                raise ValueError("root orders must be >= 2")
        for i, ((u1, v1), _) in enumerate(self.roots):
            for (u2, v2), _ in self.roots[i + 1 :]:
                if u1 * v2 - u2 * v1 == 0:
                    raise ValueError("root forms must be pairwise non-proportional")

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.roots)

    def values_at(self, point: tuple[int, int]) -> list[int]:
        a, b = point
        return [u * a + v * b for (u, v), _ in self.roots]


def football(a: int, b: int) -> RootedLine:
    """P^1 rooted at 0 (order a) and infinity (order b)."""
    return RootedLine((((1, 0), a), ((0, 1), b)))


@dataclass(frozen=True)
class StackDivisor:
    """d * [generic point] + sum_i (n_i / m_i) * [root_i]."""

    generic: int
    stacky: tuple[int, ...] = ()

    def degree(self, line: RootedLine) -> Fraction:
        if len(self.stacky) != len(line.roots):
            raise ValueError("stacky coefficients misaligned with roots")
        return Fraction(self.generic) + sum(
            (Fraction(n, m) for n, m in zip(self.stacky, line.orders)),
            Fraction(0),
        )

    def __neg__(self) -> "StackDivisor":
        return StackDivisor(-self.generic, tuple(-n for n in self.stacky))


def _normalize_point(point: Sequence[int]) -> tuple[int, int]:
    a, b = int(point[0]), int(point[1])
    if a == 0 and b == 0:
        raise ValueError("(0, 0) is not a point of P^1")
    g = math.gcd(a, b)
    return a // g, b // g


def _fracplus(q: Fraction) -> Fraction:
    return math.ceil(q) - q


def generic_height(
    line: RootedLine, divisor: StackDivisor, point: Sequence[int]
) -> HeightBreakdown:
    """Height breakdown at a generic point (a : b) avoiding all roots."""
    a, b = _normalize_point(point)
    values = line.values_at((a, b))
    if any(v == 0 for v in values):
        i = values.index(0)
        raise StackyPointError(
            f"point ({a}:{b}) is supported at root {i}; use type1_height"
        )
    deg = divisor.degree(line)
    stable = ExactHeight.log_abs(max(abs(a), abs(b)), deg)

    disc_terms: dict[int, Fraction] = {}
    for v, n, m in zip(values, divisor.stacky, line.orders):
        for p, k in factor(abs(v)).factors:
            fp = _fracplus(Fraction(k * n, m))
            if fp:
                disc_terms[p] = disc_terms.get(p, Fraction(0)) + fp
    discrepancies = {p: ExactHeight({p: c}) for p, c in disc_terms.items()}
    return combine(stable, discrepancies)


def type1_height(
    line: RootedLine, i: int, c: PowerClass, divisor: StackDivisor
) -> ExactHeight:
    """Height of a point supported at root i, as a class of Q*/(Q*)^{m_i}.

    Only the coefficient of root i matters; it acts through its residue
    modulo the root order, and a multiple of the order gives height 0 (the
    Northcott failure mode for non-coprime divisor coefficients).
    """
    if not 0 <= i < len(line.roots):
        raise ValueError("root index out of range")
    m = line.orders[i]
    if c.n != m:
        raise ValueError(f"class modulus {c.n} does not match root order {m}")
    if len(divisor.stacky) != len(line.roots):
        raise ValueError("stacky coefficients misaligned with roots")
    j = divisor.stacky[i] % m
    if j == 0:
        return ExactHeight.zero()
    return bmun_height(c, j)


def northcott(a: int, b: int, divisor: StackDivisor) -> bool:
    """Whether d[P] + n[0] + m[inf] on the (a, b)-football is Northcott.

    Requires gcd(a, b) = 1; holds iff the degree is positive and each
    stacky coefficient is coprime to its root order.
    """
    if math.gcd(a, b) != 1:
        raise ValueError("root orders a, b must be coprime")
    line = football(a, b)
    if len(divisor.stacky) != 2:
        raise ValueError("divisor must carry coefficients for both roots")
    n, m = divisor.stacky
    return (
        divisor.degree(line) > 0
        and math.gcd(n, a) == 1
        and math.gcd(m, b) == 1
    )


def tangent_divisor(line: RootedLine) -> StackDivisor:
    """2[P] - sum_i ((m_i - 1)/m_i) [root_i]; degree 2 - r + sum 1/m_i."""
    return StackDivisor(2, tuple(-(m - 1) for m in line.orders))


def tangential_height(line: RootedLine, point: Sequence[int]) -> ExactHeight:
    """Closed form for the height against the tangent divisor:

    sum_i (1/m_i) log PFP_{m_i}(L_i(a, b)) + deg(T) * log max(|a|, |b|),

    with PFP_m the m-power-free complement.  Exactly equal to
    generic_height(line, tangent_divisor(line), point).total.
    """
    a, b = _normalize_point(point)
    values = line.values_at((a, b))
    if any(v == 0 for v in values):
        raise StackyPointError("tangential height needs a non-stacky point")
    deg = tangent_divisor(line).degree(line)
    out = ExactHeight.log_abs(max(abs(a), abs(b)), deg)
    for v, m in zip(values, line.orders):
        out = out + ExactHeight.log_abs(power_free_part(v, m), Fraction(1, m))
    return out


def rdisc(line: RootedLine, point: Sequence[int]) -> ExactHeight:
    """Reduced discriminant: sum of log p over stacky primes of the point.

    A prime is stacky when some root value has positive p-adic valuation
    not divisible by the root order; each such prime is counted once even
    if several roots are stacky over it.
    """
    a, b = _normalize_point(point)
    values = line.values_at((a, b))
    if any(v == 0 for v in values):
        raise StackyPointError("reduced discriminant needs a non-stacky point")
    primes: set[int] = set()
    for v, m in zip(values, line.orders):
        for p, k in factor(abs(v)).factors:
            if k % m != 0:
                primes.add(p)
    return ExactHeight({p: Fraction(1) for p in primes})


def edd(line: RootedLine, point: Sequence[int]) -> ExactHeight:
    """Expected deformation dimension: rdisc minus the dual-tangent height."""
    neg_tangent = -tangent_divisor(line)
    h_dual = generic_height(line, neg_tangent, point).total
    return -h_dual + rdisc(line, point)


def colliding_primes(line: RootedLine, point: Sequence[int]) -> set[int]:
    """Primes dividing two distinct root values at the point.

    On inputs where this is nonempty, edd and tangential_height may differ
    (the reduced discriminant counts each prime once).
    """
    a, b = _normalize_point(point)
    seen: dict[int, int] = {}
    out: set[int] = set()
    for idx, v in enumerate(line.values_at((a, b))):
        if v == 0:
            continue
        for p, _ in factor(abs(v)).factors:
            if p in seen and seen[p] != idx:
                out.add(p)
            else:
                seen[p] = idx
    return out
