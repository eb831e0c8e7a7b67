"""Exact binomial coefficients in the two conventions used throughout.

``binom`` is the counting binomial: zero outside ``0 <= b <= a``.
``gbinom`` is the generalized binomial, a polynomial in the top argument,
so ``gbinom(-1, 1) == -1``.  Closed-form alpha counts use the former,
the binomial identities and the double-star beta formulas the latter.

Everything here is Python ``int``; no floating point is involved.
"""
from __future__ import annotations

import os
from functools import lru_cache
from math import comb, factorial

DEFAULT_CACHE_ROWS = 4096


def binom(a: int, b: int) -> int:
    """C(a, b) with zero truncation for ``b < 0`` or ``b > a``."""
    if a < 0:
        raise ValueError(f"binom requires a nonnegative top, got a={a}; use gbinom")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def gbinom(a: int, b: int) -> int:
    """Generalized C(a, b) = a(a-1)...(a-b+1) / b!, zero for ``b < 0``."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    num = 1
    for i in range(b):
        num *= a - i
    # b! always divides a product of b consecutive integers
    return num // factorial(b)


def _row_cache_size() -> int:
    raw = os.environ.get("HDEPTH_CACHE_ROWS")
    if not raw:
        return DEFAULT_CACHE_ROWS
    try:
        size = int(raw)
    except ValueError:
        return DEFAULT_CACHE_ROWS
    return max(size, 0)


@lru_cache(maxsize=_row_cache_size())
def _pascal_row(a: int) -> tuple[int, ...]:
    row = [1] * (a + 1)
    for k in range(1, a // 2 + 1):
        row[k] = row[a - k] = row[k - 1] * (a - k + 1) // k
    return tuple(row)


def binom_row(a: int) -> tuple[int, ...]:
    """Pascal row ``(C(a,0), ..., C(a,a))``; cached and immutable."""
    if a < 0:
        raise ValueError(f"binom_row requires a >= 0, got {a}")
    return _pascal_row(a)


def ceil_div(a: int, b: int) -> int:
    """Integer ceiling of a / b for positive b."""
    if b <= 0:
        raise ValueError("ceil_div needs a positive divisor")
    return -((-a) // b)
