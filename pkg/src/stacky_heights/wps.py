"""Heights on weighted projective stacks P(a_0, ..., a_k) over Q.

A rational point is an integer tuple (M_0 : ... : M_k) up to the scaling
(M_i) -> (lambda^{a_i} M_i).  In minimal form (no prime p with p^{a_i}
dividing M_i for every i) the height against the tautological bundle is
exactly log max_i |M_i|^{1/a_i}; the general case is delegated to the
section engine, which also handles twists of the tautological bundle.

Moduli interpretations: Weierstrass coefficients (A, B) of an elliptic
curve live in P(4, 6); odd hyperelliptic models with a marked point at
infinity live in P(4, 6, ..., 4g+2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .adelic import ExactHeight, height_from_sections
from .arith import factor

__all__ = [
    "WeightedPoint",
    "minimal_form",
    "height_O1",
    "height_Oj",
    "elliptic_naive_height",
    "hyperelliptic_height",
]


@dataclass(frozen=True)
class WeightedPoint:
    """Integer coordinates with weights; not necessarily minimal."""

    weights: tuple[int, ...]
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.coords):
            raise ValueError("weights and coords must have equal length")
        if not self.weights:
            raise ValueError("need at least one coordinate")
        if any(a < 1 for a in self.weights):
            raise ValueError("weights must be >= 1")
        if all(m == 0 for m in self.coords):
            raise ValueError("coordinates must not all be zero")

    def is_minimal(self) -> bool:
        nz = [(m, a) for m, a in zip(self.coords, self.weights) if m != 0]
        g = math.gcd(*(abs(m) for m, _ in nz))
        if g <= 1:
            return True
        return not any(
            all(_ord(m, p) >= a for m, a in nz) for p, _ in factor(g).factors
        )


def _ord(n: int, p: int) -> int:
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def minimal_form(weights, coords) -> WeightedPoint:
    """Canonical minimal representative under positive rational scaling.

    Only positive lambda are used, so signs are preserved coordinate-wise;
    when every weight is odd the overall sign is additionally normalized by
    making the first nonzero coordinate positive (lambda = -1 flips all
    coordinates in that case).  Points that differ by lambda = -1 with some
    even weight are distinct representatives and must be deduplicated
    explicitly when enumerating.
    """
    pt = WeightedPoint(tuple(int(a) for a in weights), tuple(int(m) for m in coords))
    coords = list(pt.coords)
    nz = [(m, a) for m, a in zip(coords, pt.weights) if m != 0]
    g = math.gcd(*(abs(m) for m, _ in nz))
    if g > 1:
        for p, _ in factor(g).factors:
            k = min(_ord(m, p) // a for m, a in nz)
            if k > 0:
                for i, a in enumerate(pt.weights):
                    if coords[i]:
                        coords[i] //= p ** (a * k)
    if all(a % 2 == 1 for a in pt.weights):
        first = next(m for m in coords if m != 0)
        if first < 0:
            coords = [-m for m in coords]
    return WeightedPoint(pt.weights, tuple(coords))


def height_O1(pt: WeightedPoint) -> ExactHeight:
    """Height against the tautological bundle O(1)."""
    return height_Oj(pt, 1)


def height_Oj(pt: WeightedPoint, j: int) -> ExactHeight:
    """Height against O(j), computed through the section engine.

    With A = lcm(weights), the monomials M_i^{jA/a_i} are pullbacks of
    generating sections of the A-th power of O(j); mixed monomials never
    change the min valuation or the max absolute value, so the pure powers
    suffice.  Heights against O(j) are not j times the O(1) height.
    """
    if j < 1:
        raise ValueError("j must be a positive integer")
    pt = minimal_form(pt.weights, pt.coords)
    A = math.lcm(*pt.weights)
    values = [
        m ** (j * A // a) for m, a in zip(pt.coords, pt.weights) if m != 0
    ]
    return height_from_sections(A, values)


def elliptic_naive_height(A: int, B: int) -> ExactHeight:
    """Naive height of y^2 = x^3 + Ax + B as the point (A : B) of P(4, 6)."""
    if 4 * A**3 + 27 * B**2 == 0:
        raise ValueError("singular curve: 4A^3 + 27B^2 = 0")
    return height_O1(minimal_form((4, 6), (A, B)))


def hyperelliptic_height(coeffs) -> ExactHeight:
    """Height of y^2 = x^(2g+1) + a_2 x^(2g-1) + ... + a_{2g+1}.

    coeffs lists (a_2, ..., a_{2g+1}); the model is the point with weights
    (4, 6, ..., 4g+2).  No smoothness check is performed.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) < 2:
        raise ValueError("need at least two coefficients (genus >= 1)")
    weights = tuple(2 * i for i in range(2, len(coeffs) + 2))
    return height_O1(minimal_form(weights, coeffs))
