"""Exact big-integer arithmetic and high-precision logarithms.

Everything downstream (gains, bounds, search) is built on two guarantees
made here: integer operations are exact at any size, and natural logs of
positive integers carry 64 correctly-rounded significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN, localcontext

# Working precision for every logarithm and every derived ratio.  Display
# rounding is 6 significant digits; 64 working digits keep all comparison
# tolerances (down to 1e-45 relative) trivially safe.
LN_PRECISION = 64

CTX = Context(prec=LN_PRECISION, rounding=ROUND_HALF_EVEN)

_ZERO = Decimal(0)

# ln values are reused heavily across gain and bound computations for the
# same arguments; the cache is idempotent (pure function of the key).
_ln_cache: dict[int, Decimal] = {}


@dataclass(frozen=True, slots=True)
class BigLog:
    """Natural logarithm of a positive integer.

    value is correctly rounded at ``precision_digits`` significant decimal
    digits; relative error is at most 10**(1 - precision_digits).
    """

    value: Decimal
    precision_digits: int


def gcd3(a: int, b: int, c: int) -> int:
    """Greatest common divisor of three nonnegative integers.

    gcd3(0, 0, 0) = 0 by convention.
    """
    for v in (a, b, c):
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError("gcd3 expects integers")
        if v < 0:
            raise ValueError("gcd3 expects nonnegative integers")
    return math.gcd(a, b, c)


def ipow(base: int, exp: int) -> int:
    """Exact base**exp for nonnegative integer base and exponent.

    0**0 is rejected as undefined input.
    """
    if not isinstance(base, int) or isinstance(base, bool):
        raise TypeError("ipow expects an integer base")
    if not isinstance(exp, int) or isinstance(exp, bool):
        raise TypeError("ipow expects an integer exponent")
    if base < 0:
        raise ValueError("ipow expects a nonnegative base")
    if exp < 0:
        raise ValueError("ipow expects a nonnegative exponent")
    if base == 0 and exp == 0:
        raise ValueError("0**0 is undefined")
    return base ** exp


def nth_root_floor(v: int, n: int) -> int:
    """Largest r with r**n <= v, exact for any size of v.

    Floating point is never consulted; the seed comes from the bit length
    and integer Newton iteration finishes on the exact floor condition.
    """
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError("nth_root_floor expects an integer")
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("nth_root_floor expects an integer root index")
    if n < 1:
        raise ValueError("root index must be >= 1")
    if v < 0:
        raise ValueError("nth_root_floor expects a nonnegative integer")
    if v == 0:
        return 0
    if n == 1:
        return v
    if n == 2:
        return math.isqrt(v)
    if v.bit_length() <= n:
        # 1**n <= v < 2**n
        return 1
    # Seed strictly above the true root: 2**ceil(bits/n) >= 2**(bits/n) > root.
    r = 1 << -(-v.bit_length() // n)
    while True:
        s = ((n - 1) * r + v // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    # Newton with integer division can land one step off; settle exactly.
    while r ** n > v:
        r -= 1
    while (r + 1) ** n <= v:
        r += 1
    return r


def ln_cached(v: int) -> Decimal:
    """ln(v) as a Decimal with LN_PRECISION significant digits, memoized."""
    cached = _ln_cache.get(v)
    if cached is not None:
        return cached
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError("ln expects an integer")
    if v < 1:
        raise ValueError("ln is defined here for integers >= 1 only")
    if v == 1:
        result = _ZERO
    else:
        # Decimal converts any int exactly, so ln() is correctly rounded at
        # context precision regardless of the integer's size.
        with localcontext(CTX):
            result = Decimal(v).ln()
    _ln_cache[v] = result
    return result


def ln_big(v: int) -> BigLog:
    """Natural log of a positive integer at full working precision."""
    return BigLog(value=ln_cached(v), precision_digits=LN_PRECISION)


def clear_ln_cache() -> None:
    """Drop memoized logarithms (memory control for very large sweeps)."""
    _ln_cache.clear()


def round_sig(value: Decimal, digits: int = 6) -> Decimal:
    """Round to ``digits`` significant decimal digits, round-half-even.

    Used only for display; full-precision values are kept internally.
    """
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if value.is_zero():
        return _ZERO
    with localcontext(CTX):
        quantum = Decimal(1).scaleb(value.adjusted() - digits + 1)
        return value.quantize(quantum, rounding=ROUND_HALF_EVEN)
