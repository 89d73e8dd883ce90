"""Deterministic rational arithmetic helpers.

All quantities that are irrational in exact terms (base-2 logarithms of
non-powers-of-two, square roots of non-squares) are evaluated by fixed-point
integer algorithms, so every platform computes bit-identical values.  Powers
of two and perfect squares come out exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

# Fractional bits kept by log2_fraction / sqrt_fraction results.
LOG2_BITS = 128
# Working mantissa precision; the surplus over LOG2_BITS absorbs the
# truncation error accumulated across the bit-extraction loop.
_WORK_BITS = 192


def ceil_log2(n: int) -> int:
    """Exact ceil(log2(n)) for n >= 1."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def floor_log2(n: int) -> int:
    """Exact floor(log2(n)) for n >= 1."""
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def log2_fraction(x: Fraction | int, frac_bits: int = LOG2_BITS) -> Fraction:
    """Base-2 logarithm of a positive rational as a fixed-point Fraction.

    Returns floor-ish(log2(x) * 2**frac_bits) / 2**frac_bits computed by
    repeated squaring of an integer mantissa.  Exact whenever x is a power
    of two (including e.g. 1/8); otherwise correct to well under 2**-64.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"log2_fraction needs x > 0, got {x}")
    p, q = x.numerator, x.denominator
    # Integer exponent e with 2**e <= x < 2**(e+1).
    e = p.bit_length() - q.bit_length()
    if _cmp_pow2(p, q, e) < 0:
        e -= 1
    elif _cmp_pow2(p, q, e + 1) >= 0:
        e += 1
    # Mantissa m = x / 2**e in [1, 2), scaled by 2**_WORK_BITS.
    shift = _WORK_BITS - e
    m = (p << shift) // q if shift >= 0 else p // (q << -shift)
    one = 1 << _WORK_BITS
    frac = 0
    for _ in range(frac_bits):
        m = (m * m) >> _WORK_BITS
        frac <<= 1
        if m >= (one << 1):
            m >>= 1
            frac |= 1
    return Fraction((e << frac_bits) + frac, 1 << frac_bits)


def _cmp_pow2(p: int, q: int, e: int) -> int:
    """Sign of p/q - 2**e."""
    lhs, rhs = (p, q << e) if e >= 0 else (p << -e, q)
    return (lhs > rhs) - (lhs < rhs)


def sqrt_fraction(x: Fraction, frac_bits: int = LOG2_BITS) -> Fraction:
    """Floor square root of a non-negative rational at 2**-frac_bits resolution.

    Exact whenever x is the square of a dyadic rational (in particular any
    perfect-square integer).
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"sqrt_fraction needs x >= 0, got {x}")
    scaled = (x.numerator << (2 * frac_bits)) // x.denominator
    return Fraction(isqrt(scaled), 1 << frac_bits)


def ceil_root(m: int, c: int) -> int:
    """Smallest b >= 0 with b**c >= m (integer c-th root, rounded up)."""
    if c < 1:
        raise ValueError(f"ceil_root needs c >= 1, got {c}")
    if m <= 0:
        return 0
    if m == 1:
        return 1
    b = max(1, int(round(m ** (1.0 / c))) - 2)
    while b**c < m:
        b += 1
    return b


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


# Above this the exact big-integer comparison n**(n*n) gets expensive and the
# fixed-point bound takes over.
_EXACT_BUDGET_LIMIT = 512


def edges_within_budget(edge_count: int, n: int) -> bool:
    """Whether edge_count <= n**2 * log2(n).

    Exact for n a power of two and for n <= 512 (big-integer comparison
    2**edge_count <= n**(n**2)); beyond that, decided against the 128-bit
    fixed-point logarithm, permissive by less than 2**-64 relative.
    """
    if n < 2:
        raise ValueError(f"edge budget needs n >= 2, got {n}")
    if edge_count <= n * n:
        return True  # log2(n) >= 1
    if n & (n - 1) == 0:
        return edge_count <= n * n * floor_log2(n)
    if edge_count > n * n * n.bit_length():
        return False  # log2(n) < bit_length(n)
    if n <= _EXACT_BUDGET_LIMIT:
        return (1 << edge_count) <= n ** (n * n)
    bound = n * n * (log2_fraction(n) + Fraction(1, 1 << 64))
    return Fraction(edge_count) <= bound
