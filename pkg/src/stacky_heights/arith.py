"""Exact integer arithmetic: factorization, valuations, power-free parts.

Everything here is deterministic and exact except mahler_measure_quadratic,
which returns a float with relative error well below 1e-12.

Factorization strategy: full trial division for small inputs, otherwise a
small-prime strip followed by Brent-cycle Pollard rho with deterministic
Miller-Rabin primality testing.  This comfortably covers 128-bit operands,
which is far beyond anything the counting harness produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "FactoredInt",
    "factor",
    "is_prime",
    "ord_p",
    "power_free_part",
    "power_free_reduce",
    "squarefree_part",
    "fundamental_discriminant",
    "mahler_measure_quadratic",
    "mahler_measure_lt",
]

# Inputs below this are factored by trial division alone.
_TRIAL_LIMIT = 10**6

def _small_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i in range(2, bound + 1) if sieve[i]]

_PRIMES_1K = _small_primes(1000)

# Witnesses making Miller-Rabin deterministic for n < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic below 3.3e24; fixed extra witnesses above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_BOUND:
        witnesses = _MR_WITNESSES + tuple(41 + 2 * k for k in range(30))
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    # Deterministic parameter schedule; n is composite so this terminates.
    c = 1
    while True:
        x = y = 2
        d = 1
        q = 1
        m = 128
        r = 1
        while d == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and d == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                d = math.gcd(q, n)
                k += m
            r <<= 1
        if d == n:
            # Backtrack one step at a time.
            d = 1
            while d == 1:
                ys = (ys * ys + c) % n
                d = math.gcd(abs(x - ys), n)
        if d != n:
            return d
        c += 1


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=1 << 16)
def _factor_abs(n: int) -> tuple[tuple[int, int], ...]:
    """Factorization of n >= 1 as a sorted tuple of (prime, exponent)."""
    out: dict[int, int] = {}
    for p in _PRIMES_1K:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < _TRIAL_LIMIT or is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class FactoredInt:
    """A nonzero integer as sign * product(p^e), primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            prev = p

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def __int__(self) -> int:
        return self.value()

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def factor(n: int) -> FactoredInt:
    """Factor a nonzero integer; deterministic."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return FactoredInt(1 if n > 0 else -1, _factor_abs(abs(n)))


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer n at a prime p."""
    if n == 0:
        raise ValueError("ord_p(0, p) is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def power_free_part(n: int, m: int) -> int:
    """Smallest positive k such that |n| * k is a perfect m-th power.

    The result is m-power-free; m >= 2.  Signs are ignored: the value depends
    on |n| only, so this can be applied to (possibly negative) values of
    linear forms.
    """
    if n == 0:
        raise ValueError("power_free_part of 0 is undefined")
    if m < 2:
        raise ValueError("m must be >= 2")
    out = 1
    for p, e in factor(abs(n)).factors:
        r = (-e) % m
        if r:
            out *= p**r
    return out


def power_free_reduce(n: int, m: int) -> tuple[int, int]:
    """Write n = M * k^m with |M| m-power-free and sign(M) = sign(n)."""
    if n == 0:
        raise ValueError("power_free_reduce of 0 is undefined")
    if m < 2:
        raise ValueError("m must be >= 2")
    k = 1
    for p, e in factor(abs(n)).factors:
        if e >= m:
            k *= p ** (e // m)
    return n // k**m, k


def squarefree_part(n: int) -> int:
    """Squarefree part of |n| (power_free_part with m = 2)."""
    return power_free_part(n, 2)


def fundamental_discriminant(d: int) -> int:
    """Discriminant of the quadratic field attached to a squarefree d != 0, 1.

    Returns d when d = 1 mod 4, else 4d.
    """
    if d in (0, 1):
        raise ValueError("d must not be 0 or 1")
    if any(e > 1 for _, e in factor(d).factors):
        raise ValueError(f"{d} is not squarefree")
    return d if d % 4 == 1 else 4 * d


def _mahler_squared(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Exact data (q, r, s) with 4 * M(ax^2+bx+c)^2 = q + r*sqrt(s), s >= 0.

    Case analysis on the roots: if both lie in the closed unit disk the
    measure is |a|; if both lie outside the open disk it is |c|; otherwise
    it is (|b| + sqrt(disc)) / 2 for real roots.  Complex pairs have
    |root|^2 = c/a, giving max(|a|, |c|).
    """
    if a == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = b * b - 4 * a * c
    A, B, C = abs(a), abs(b), abs(c)
    if disc < 0:
        m = max(A, C)
        return 4 * m * m, 0, 0
    # both roots in closed unit disk <=> |b| + sqrt(disc) <= 2|a|
    if B <= 2 * A and disc <= (2 * A - B) ** 2:
        return 4 * A * A, 0, 0
    # both roots outside open unit disk <=> |b| + sqrt(disc) <= 2|c|
    if B <= 2 * C and disc <= (2 * C - B) ** 2:
        return 4 * C * C, 0, 0
    # M = (|b| + sqrt(disc)) / 2, so 4 M^2 = b^2 + disc + 2|b| sqrt(disc)
    return B * B + disc, 2 * B, disc


def mahler_measure_quadratic(a: int, b: int, c: int) -> float:
    """Mahler measure |a| * max(1,|root1|) * max(1,|root2|) of ax^2+bx+c."""
    q, r, s = _mahler_squared(a, b, c)
    return math.sqrt(q + r * math.sqrt(s)) / 2.0


def mahler_measure_lt(a: int, b: int, c: int, bound: Fraction) -> bool:
    """Exact test M(ax^2+bx+c) < bound, for rational bound > 0."""
    q, r, s = _mahler_squared(a, b, c)
    bound = Fraction(bound)
    t = 4 * bound * bound
    if r == 0:
        return q < t
    # q + r*sqrt(s) < 4 bound^2  <=>  r sqrt(s) < t - q, both sides checked
    rhs = t - q
    if rhs <= 0:
        return False
    return r * r * s * rhs.denominator**2 < rhs.numerator**2
