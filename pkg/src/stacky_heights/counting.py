"""Counting and search kernels for the height families, plus exponent fits.

All counts and searches are exact: bounds arrive as rationals (floats are
taken at their exact binary value), get converted to integer thresholds,
and every comparison on the hot paths is integer arithmetic.  Results are
deterministic and independent of the thread count; parallelism only splits
work across segments whose partial results are exact integers summed in a
fixed order.

The heavy enumeration (pairs with three squarefree-part constraints) runs
on segmented numpy sieves that extract prime exponents per window; segment
size follows SEGMENT_SIZE.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .arith import factor

__all__ = [
    "CountReport",
    "sieve_power_free_parts",
    "count_bmun",
    "count_quadratic_fields",
    "count_football222",
    "count_rooted3_at_0",
    "count_quadratic_points",
    "vojta_search_444",
    "vojta_search_ap5",
    "fit_exponents",
]

Real = Union[int, float, Fraction]

SEGMENT_SIZE = 1 << 24

# Shared tables for forked pool workers, keyed per call site.
_POOL_STATE: dict = {}


def _run_parallel(fn, tasks: Sequence, threads: int) -> list:
    """Map fn over tasks; results always come back in task order."""
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


def _strict_floor(x: Fraction) -> int:
    """Largest integer strictly below x (t < x <=> t <= this, t integer)."""
    return (x.numerator - 1) // x.denominator


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def _primes_upto(bound: int) -> np.ndarray:
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def _isqrt_vec(z: np.ndarray) -> np.ndarray:
    """Exact elementwise floor sqrt for nonnegative int64 below 2^52."""
    r = np.sqrt(z.astype(np.float64)).astype(np.int64)
    r = np.where((r + 1) * (r + 1) <= z, r + 1, r)
    r = np.where(r * r > z, r - 1, r)
    return r


# ----------------------------------------------------------------------
# power-free-part sieves


def _power_free_window(lo: int, hi: int, m: int, primes) -> np.ndarray:
    """Phi_m(k) for k in [lo, hi); primes must cover isqrt(hi - 1)."""
    rem = np.arange(lo, hi, dtype=np.int64)
    res = np.ones(hi - lo, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p * p >= hi:
            break
        start = ((lo + p - 1) // p) * p
        if start >= hi:
            continue
        idx = np.arange(start - lo, hi - lo, p, dtype=np.int64)
        sub = rem[idx] // p
        e = np.ones(len(idx), dtype=np.int64)
        cur = np.arange(len(idx))
        while True:
            cur = cur[sub[cur] % p == 0]
            if len(cur) == 0:
                break
            sub[cur] //= p
            e[cur] += 1
        rem[idx] = sub
        res[idx] *= np.power(p, (-e) % m)
    left = rem > 1
    res[left] *= rem[left] ** (m - 1)
    return res


def sieve_power_free_parts(
    limit: int, m: int, segment_size: int = SEGMENT_SIZE
) -> np.ndarray:
    """Array A with A[k] = power_free_part(k, m) for 1 <= k <= limit.

    A[0] is 0.  Work proceeds in fixed-size segments so the temporaries
    stay bounded; the output array itself is limit * 8 bytes.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    if limit > 1 and (m - 1) * math.log2(limit) >= 63:
        raise ValueError("power-free parts would overflow 64-bit integers")
    out = np.zeros(limit + 1, dtype=np.int64)
    primes = _primes_upto(math.isqrt(limit))
    for lo in range(1, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        out[lo:hi] = _power_free_window(lo, hi, m, primes)
    return out


# ----------------------------------------------------------------------
# power classes and quadratic fields


def _mobius_upto(limit: int) -> np.ndarray:
    mu = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        mu[1] = 1
    primes: list[int] = []
    is_comp = np.zeros(limit + 1, dtype=bool)
    for i in range(2, limit + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def _count_power_free_upto(X: int, m: int) -> int:
    """Number of m-power-free integers in [1, X], by Moebius inversion."""
    if X < 1:
        return 0
    root = _iroot(X, m)
    mu = _mobius_upto(root)
    return int(sum(int(mu[d]) * (X // d**m) for d in range(1, root + 1)))


def count_bmun(n: int, B: Real) -> int:
    """Classes of Q*/(Q*)^n of height at most log B.

    These are the n-power-free representatives N with |N| <= B^n; both
    signs occur for even n, positive representatives only for odd n.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    B = Fraction(B)
    if B < 1:
        return 0
    X = _floor(B**n)
    c = _count_power_free_upto(X, n)
    return 2 * c if n % 2 == 0 else c


def _squarefree_flags(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[0] = False
    for p in range(2, math.isqrt(limit) + 1):
        p2 = p * p
        flags[p2::p2] = False
    return flags


def count_quadratic_fields(X: Real) -> int:
    """Quadratic fields with |discriminant| <= X.

    Counts squarefree d not in {0, 1}, with |d| <= X when d = 1 mod 4 and
    4|d| <= X otherwise.
    """
    X = _floor(Fraction(X))
    if X < 3:
        return 0
    flags = _squarefree_flags(X)
    small = flags[: X // 4 + 1]
    # positive d: d = 1 mod 4 measured by |d|, the rest by 4|d|
    total = int(flags[1::4].sum()) - 1  # exclude d = 1
    total += int(small[2::4].sum()) + int(small[3::4].sum())
    # negative d = -e: the discriminant is -e when e = 3 mod 4, else -4e
    total += int(flags[3::4].sum())
    total += int(small[1::4].sum()) + int(small[2::4].sum())
    return total


# ----------------------------------------------------------------------
# single stacky root of order 3 at 0: Phi_3(a) * max(a, b)^4 bounded


def _distinct_primes(n: int) -> list[int]:
    return [p for p, _ in factor(n).factors] if n > 1 else []


def _coprime_upto(bound: int, prime_list: Sequence[int]) -> int:
    """#{1 <= k <= bound : k coprime to all listed primes}."""
    if bound <= 0:
        return 0
    total = 0
    for mask in range(1 << len(prime_list)):
        d = 1
        bits = 0
        for i, p in enumerate(prime_list):
            if mask >> i & 1:
                d *= p
                bits += 1
        total += (bound // d) if bits % 2 == 0 else -(bound // d)
    return total


def count_rooted3_at_0(B: Real) -> int:
    """Pairs of coprime a, b >= 1 with Phi_3(a) * max(a, b)^4 < B^3."""
    B = Fraction(B)
    if B <= 0:
        return 0
    T = _strict_floor(B**3)
    if T < 1:
        return 0
    R = _iroot(T, 4)
    if R < 1:
        return 0
    phi3 = sieve_power_free_parts(R, 3)
    total = 0
    for a in range(1, R + 1):
        f = int(phi3[a])
        ps = _distinct_primes(a)
        if f * a**4 <= T:
            # all 1 <= b <= a coprime to a; counts (1, 1) once via a = 1
            total += _coprime_upto(a, ps)
        cap = _iroot(T // f, 4)
        if cap > a:
            total += _coprime_upto(cap, ps) - _coprime_upto(a, ps)
    return total


# ----------------------------------------------------------------------
# (2,2,2)-rooted line at 0, -1, infinity:
# sqf(a) sqf(b) sqf(a+b) max(a, b) < B^2 over coprime a, b >= 1.
#
# Writing a = s x^2, b = t y^2 with s = sqf(a), t = sqf(b), the constraint
# (with sqf(a+b) >= 1) forces s*t*max(s x^2, t y^2) <= T, which bounds the
# candidates.  Candidates are grouped by v = a + b into segments, a
# segmented sieve supplies sqf(v), and the final test runs in int64: the
# product is formed as ((s*t) * max(a, b)) * sqf(v), whose first factor is
# at most T by construction, so nothing overflows.

_F222_CHUNK = 4_000_000


def _f222_rows(T: int):
    """Row table (a, t, st, ymax) over coprime squarefree (s, t) and x."""
    smax = math.isqrt(T)
    sqfree = np.nonzero(_squarefree_flags(smax))[0].tolist()
    a_parts, t_parts, st_parts, ymax_parts = [], [], [], []
    for s in sqfree:
        if s * s > T:
            break
        tcap = min(T // (s * s), math.isqrt(T // s))
        for t in sqfree:
            if t > tcap:
                break
            if s * t * t > T or math.gcd(s, t) != 1:
                continue
            xmax = math.isqrt(T // (s * s * t))
            ymax = math.isqrt(T // (s * t * t))
            if xmax < 1 or ymax < 1:
                continue
            x = np.arange(1, xmax + 1, dtype=np.int64)
            a_parts.append(s * x * x)
            t_parts.append(np.full(xmax, t, dtype=np.int64))
            st_parts.append(np.full(xmax, s * t, dtype=np.int64))
            ymax_parts.append(np.full(xmax, ymax, dtype=np.int64))
    if not a_parts:
        z = np.zeros(0, dtype=np.int64)
        return z, z.copy(), z.copy(), z.copy()
    return tuple(np.concatenate(p) for p in (a_parts, t_parts, st_parts, ymax_parts))


def _f222_segment_count(seg_index: int) -> int:
    state = _POOL_STATE["f222"]
    T = state["T"]
    rows_a, rows_t, rows_st, rows_ymax = state["rows"]
    lo = 2 + seg_index * state["segment_size"]
    hi = min(lo + state["segment_size"], 2 * T + 1)
    if lo >= hi:
        return 0
    seg_sqf = _power_free_window(lo, hi, 2, state["primes"])

    # y-window of each row whose v = a + t y^2 lands in [lo, hi)
    zlo = np.maximum(lo - rows_a, 1)
    zlo = (zlo + rows_t - 1) // rows_t
    ylo = np.maximum(_isqrt_vec(zlo - 1) + 1, 1)  # ceil sqrt, at least 1
    zhi = (hi - 1 - rows_a) // rows_t
    yhi = np.where(zhi >= 1, _isqrt_vec(np.maximum(zhi, 0)), 0)
    yhi = np.minimum(yhi, rows_ymax)
    counts = np.maximum(yhi - ylo + 1, 0)
    live = np.nonzero(counts)[0]
    if len(live) == 0:
        return 0

    c_live = counts[live]
    cum = np.cumsum(c_live)
    total = 0
    start = 0
    while start < len(live):
        base = int(cum[start - 1]) if start > 0 else 0
        end = int(np.searchsorted(cum, base + _F222_CHUNK, side="right"))
        end = min(max(end, start + 1), len(live))
        rows = live[start:end]
        reps = counts[rows]
        idx = np.repeat(np.arange(len(rows)), reps)
        offsets = np.arange(len(idx)) - np.repeat(
            np.concatenate(([0], np.cumsum(reps)))[:-1], reps
        )
        y = ylo[rows][idx] + offsets
        a = rows_a[rows][idx]
        t = rows_t[rows][idx]
        st = rows_st[rows][idx]
        b = t * y * y
        v = a + b
        u = seg_sqf[v - lo]
        lhs = (st * np.maximum(a, b)) * u
        ok = (lhs <= T) & (np.gcd(a, b) == 1)
        total += int(np.count_nonzero(ok))
        start = end
    return total


def count_football222(B: Real, threads: int = 1) -> int:
    """Coprime pairs a, b >= 1 with sqf(a) sqf(b) sqf(a+b) max(a,b) < B^2."""
    B = Fraction(B)
    if B <= 0:
        return 0
    T = _strict_floor(B * B)
    if T < 2:
        return 0
    seg_size = min(SEGMENT_SIZE, 2 * T)
    _POOL_STATE["f222"] = {
        "T": T,
        "rows": _f222_rows(T),
        "primes": _primes_upto(math.isqrt(2 * T)),
        "segment_size": seg_size,
    }
    try:
        n_segments = (2 * T - 1 + seg_size - 1) // seg_size
        parts = _run_parallel(_f222_segment_count, range(n_segments), threads)
    finally:
        _POOL_STATE.pop("f222", None)
    return sum(parts)


# ----------------------------------------------------------------------
# quadratic points (degree-2 points of the line by Mahler measure)


def count_quadratic_points(B: Real) -> int:
    """Degree-2 points of the line with multiplicative height below B.

    Equals twice the number of primitive irreducible integer quadratics
    with positive leading coefficient and Mahler measure strictly below
    B^2 (each form carries a conjugate pair of points).
    """
    B = Fraction(B)
    if B <= 0:
        return 0
    X = B * B  # Mahler measure bound
    if X.denominator > 1000:
        raise ValueError("the bound B^2 must have denominator at most 1000")
    T2 = _strict_floor(X)  # integer measures m pass iff m <= T2
    if T2 < 1:
        return 0
    num, den = X.numerator, X.denominator
    # M >= max(|a|, |c|) and M >= |b|/2 bound the coefficient box
    amax = T2
    cmax = T2
    bmax = 2 * T2 + 1
    b = np.arange(-bmax, bmax + 1, dtype=np.int64)[:, None]
    c = np.arange(-cmax, cmax + 1, dtype=np.int64)[None, :]
    absb = np.abs(b)
    absc = np.abs(c)
    total = 0
    for a in range(1, amax + 1):
        disc = b * b - 4 * a * c
        nonneg = disc >= 0
        root = np.zeros_like(disc)
        root[nonneg] = _isqrt_vec(disc[nonneg])
        irreducible = ~nonneg | (root * root != disc)
        primitive = np.gcd(np.gcd(np.int64(a), b), c) == 1

        both_in = nonneg & (absb <= 2 * a) & (disc <= (2 * a - absb) ** 2)
        both_out = nonneg & (absb <= 2 * absc) & (disc <= (2 * absc - absb) ** 2)
        int_case = ~nonneg | both_in | both_out
        m_int = np.where(
            ~nonneg, np.maximum(np.int64(a), absc), np.where(both_in, np.int64(a), absc)
        )
        ok_int = int_case & (m_int <= T2)
        # irrational case: M = (|b| + sqrt(disc)) / 2 < X, scaled by 2 den
        w = 2 * num - den * absb
        ok_irr = ~int_case & (w > 0) & (den * den * disc < w * w)
        total += int(np.count_nonzero((ok_int | ok_irr) & irreducible & primitive))
    return 2 * total


# ----------------------------------------------------------------------
# stacky Vojta searches


def _delta_fraction(delta) -> Fraction:
    """Exact exponent parameter; floats are read as their decimal literal."""
    d = Fraction(str(delta)) if isinstance(delta, float) else Fraction(delta)
    if not 0 < d < 1:
        raise ValueError("delta must lie strictly between 0 and 1")
    return d


def _pow_lt(value: int, base: int, expo: Fraction) -> bool:
    """Exact test value < base**expo for positive integers."""
    return value ** expo.denominator < base**expo.numerator


def _vojta444_block(block: tuple[int, int]) -> list[tuple[int, int]]:
    state = _POOL_STATE["v444"]
    phi4 = state["phi4"]
    a_cand = state["a_cand"]
    expo = state["expo"]
    fexpo = float(expo)
    out: list[tuple[int, int]] = []
    lo, hi = block
    for b in state["b_cand"][lo:hi].tolist():
        a = a_cand[a_cand <= b]
        a = a[np.gcd(a, np.int64(b)) == 1]
        if len(a) == 0:
            continue
        # factors reach ~8e15, so the triple product needs float64 headroom;
        # anything near the threshold is re-tested in exact integers
        prod = phi4[a].astype(np.float64) * float(phi4[b]) * phi4[a + b]
        thr = float(b) ** fexpo
        for i in np.nonzero(prod < thr * (1 + 1e-9))[0].tolist():
            ai = int(a[i])
            exact = int(phi4[ai]) * int(phi4[b]) * int(phi4[ai + b])
            if _pow_lt(exact, b, expo):
                out.append((ai, b))
    return out


def vojta_search_444(cutoff: int, delta, threads: int = 1) -> list[tuple[int, int]]:
    """Coprime pairs 1 <= a <= b <= cutoff with
    Phi_4(a) Phi_4(b) Phi_4(a+b) < max(a, b)^(1 - delta), sorted."""
    if cutoff < 1:
        return []
    expo = 1 - _delta_fraction(delta)
    fexpo = float(expo)
    phi4 = sieve_power_free_parts(2 * cutoff, 4)
    n = np.arange(1, cutoff + 1, dtype=np.int64)
    # each factor must individually beat the bound it contributes to
    b_cand = n[phi4[1 : cutoff + 1] < n.astype(np.float64) ** fexpo * (1 + 1e-9)]
    a_cand = n[phi4[1 : cutoff + 1] < float(cutoff) ** fexpo * (1 + 1e-9)]
    _POOL_STATE["v444"] = {
        "phi4": phi4,
        "a_cand": a_cand,
        "b_cand": b_cand,
        "expo": expo,
    }
    try:
        nblocks = max(1, min(threads, len(b_cand)))
        bounds = np.linspace(0, len(b_cand), nblocks + 1).astype(int)
        blocks = list(zip(bounds[:-1], bounds[1:]))
        parts = _run_parallel(_vojta444_block, blocks, threads)
    finally:
        _POOL_STATE.pop("v444", None)
    return sorted(p for part in parts for p in part)


def _spf_upto(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            sl = spf[i * i :: i]
            sl[sl == 0] = i
            spf[i * i :: i] = sl
    rest = np.nonzero(spf[2:] == 0)[0] + 2
    spf[rest] = rest
    return spf


def _sqf_of_product(terms: Iterable[int], spf: np.ndarray) -> int:
    parity: dict[int, int] = {}
    for t in terms:
        while t > 1:
            p = int(spf[t])
            e = 0
            while t % p == 0:
                t //= p
                e += 1
            parity[p] = parity.get(p, 0) ^ (e & 1)
    out = 1
    for p, odd in parity.items():
        if odd:
            out *= p
    return out


def _radical_upto(limit: int) -> np.ndarray:
    rad = np.ones(limit + 1, dtype=np.int64)
    for p in _primes_upto(limit).tolist():
        rad[p::p] *= p
    return rad


def _vojta_ap5_block(block: tuple[int, int]) -> list[tuple[int, ...]]:
    state = _POOL_STATE["ap5"]
    cutoff = state["cutoff"]
    sqf6 = state["sqf6"]
    rad6 = state["rad6"]
    spf = state["spf"]
    expo = state["expo"]
    fexpo = float(expo)
    # primes shared between AP terms divide 6 or gcd(a, step), so the
    # {2,3,gcd}-stripped squarefree parts multiply into sqf(product):
    # tau_i >= sqf6(a_i) / rad6(gcd) gives an exact pairwise prefilter.
    thr_pair = int(float(cutoff) ** fexpo * (1 + 1e-9)) + 1
    out: list[tuple[int, ...]] = []
    lo, hi = block
    for step in range(lo, hi):
        n_a = cutoff - 4 * step
        if n_a < 1:
            break
        a = np.arange(1, n_a + 1, dtype=np.int64)
        # gcd(a, step) is periodic in a; tile one period
        base = np.gcd(np.arange(1, step + 1, dtype=np.int64), np.int64(step))
        rg = rad6[np.tile(base, n_a // step + 1)[:n_a]]
        u0 = sqf6[a]
        u1 = sqf6[a + step]
        cand = np.nonzero(u0 * u1 < thr_pair * rg * rg)[0]
        if len(cand) == 0:
            continue
        ac = a[cand]
        rc = rg[cand]
        taus = []
        for i in range(5):
            ui = sqf6[ac + i * step]
            taus.append(ui // np.gcd(ui, rc))
        prod = taus[0].astype(np.float64)
        for i in range(1, 5):
            prod = prod * taus[i]
        top = (ac + 4 * step).astype(np.float64)
        keep = np.nonzero(prod < top**fexpo * (1 + 1e-9))[0]
        for i in keep.tolist():
            a1 = int(ac[i])
            terms = tuple(a1 + k * step for k in range(5))
            s = _sqf_of_product(terms, spf)
            thr = float(terms[-1]) ** fexpo
            if s < thr * (1 - 1e-9) or (
                s < thr * (1 + 1e-9) and _pow_lt(s, terms[-1], expo)
            ):
                out.append(terms)
    return out


def vojta_search_ap5(
    cutoff: int, delta, threads: int = 1
) -> list[tuple[int, int, int, int, int]]:
    """Five-term APs a, a+d, ..., a+4d (a, d >= 1, last term <= cutoff) with
    sqf(product of the five terms) < (a + 4d)^(1 - delta), sorted."""
    if cutoff < 5:
        return []
    expo = 1 - _delta_fraction(delta)
    dmax = (cutoff - 1) // 4
    sqf = sieve_power_free_parts(cutoff, 2)
    sqf6 = sqf // np.gcd(sqf, np.int64(6))
    rad = _radical_upto(cutoff)
    rad6 = rad // np.gcd(rad, np.int64(6))
    _POOL_STATE["ap5"] = {
        "cutoff": cutoff,
        "sqf6": sqf6,
        "rad6": rad6,
        "spf": _spf_upto(cutoff),
        "expo": expo,
    }
    try:
        nblocks = max(1, min(threads, dmax))
        bounds = np.linspace(1, dmax + 1, nblocks + 1).astype(int)
        blocks = list(zip(bounds[:-1], bounds[1:]))
        parts = _run_parallel(_vojta_ap5_block, blocks, threads)
    finally:
        _POOL_STATE.pop("ap5", None)
    return sorted(p for part in parts for p in part)


# ----------------------------------------------------------------------
# reports and exponent fits


@dataclass
class CountReport:
    """Samples (B, N(B)) of a counting function with an optional fitted
    growth model log N = a log B + b log log B + c."""

    family: str
    params: dict = field(default_factory=dict)
    samples: list[tuple[float, int]] = field(default_factory=list)
    fit: Optional[tuple[float, float, float]] = None

    def __post_init__(self):
        bs = [float(b) for b, _ in self.samples]
        if any(x >= y for x, y in zip(bs, bs[1:])):
            raise ValueError("sample bounds must be strictly increasing")
        ns = [n for _, n in self.samples]
        if any(n < 0 for n in ns):
            raise ValueError("counts must be nonnegative")
        if any(x > y for x, y in zip(ns, ns[1:])):
            raise ValueError("counts must be nondecreasing")

    def to_json(self) -> dict:
        return {
            "schema": "stacky-heights/1",
            "family": self.family,
            "params": self.params,
            "samples": [[float(b), int(n)] for b, n in self.samples],
            "fit": list(self.fit) if self.fit else None,
        }

    @staticmethod
    def from_json(obj: dict) -> "CountReport":
        fit = obj.get("fit")
        return CountReport(
            family=obj["family"],
            params=obj.get("params", {}),
            samples=[(float(b), int(n)) for b, n in obj["samples"]],
            fit=tuple(fit) if fit else None,
        )

    def to_csv(self) -> str:
        lines = ["B,count"]
        lines += [f"{float(b):.6f},{n}" for b, n in self.samples]
        return "\n".join(lines) + "\n"

    def to_plot(self) -> str:
        return "".join(f"{float(b):.6f} {n}\n" for b, n in self.samples)


def fit_exponents(
    report: Union[CountReport, Sequence[tuple[Real, int]]],
) -> tuple[float, float, float]:
    """Least squares for log N = a log B + b log log B + c.

    Uses the samples with B >= e^2 and N >= 1; at least four are required.
    """
    samples = report.samples if isinstance(report, CountReport) else list(report)
    pts = [
        (float(b), int(n)) for b, n in samples if float(b) >= math.e**2 and int(n) >= 1
    ]
    if len(pts) < 4:
        raise ValueError("need at least 4 samples with B >= e^2 and N >= 1")
    bs = np.array([b for b, _ in pts])
    ns = np.array([n for _, n in pts], dtype=np.float64)
    logb = np.log(bs)
    design = np.column_stack([logb, np.log(logb), np.ones_like(logb)])
    coef, *_ = np.linalg.lstsq(design, np.log(ns), rcond=None)
    return float(coef[0]), float(coef[1]), float(coef[2])
