"""Integer factorization and radicals.

The pipeline is trial division by small primes, then deterministic
Miller-Rabin certificates, then Brent-cycle Pollard rho under an iteration
budget.  A blown budget is always a reported error carrying the partial
result, never a silently incomplete radical: a wrong radical would corrupt
every gain value computed from it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

DEFAULT_FACTOR_BUDGET = 10 ** 8
BUDGET_ENV_VAR = "GAINLAB_FACTOR_BUDGET"

# Trial division handles every prime factor below this limit, so any
# remaining cofactor below its square is itself prime.
_TRIAL_LIMIT = 10 ** 4

# Witnesses proving primality for every integer below 3.3 * 10**24
# (first thirteen primes).  Larger candidates get an extended fixed list;
# no value this package produces comes near that range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_WITNESSES = (
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
)


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)


@dataclass(frozen=True, slots=True)
class Factorization:
    """Prime factorization as ((prime, exponent), ...), ascending by prime.

    When complete is True the product of prime**exponent equals the
    factored value exactly; when False the listed factors divide it but a
    composite cofactor remains unfactored.
    """

    factors: tuple[tuple[int, int], ...]
    complete: bool

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


class FactorBudgetExceeded(RuntimeError):
    """Factorization ran out of rho iterations.

    Carries the original value, the partial factorization found so far
    (complete = False), and the unfactored composite cofactor.
    """

    def __init__(self, value: int, partial: Factorization, cofactor: int):
        super().__init__(
            f"factorization budget exceeded for {value}: "
            f"composite cofactor {cofactor} remains"
        )
        self.value = value
        self.partial = partial
        self.cofactor = cofactor


class _BudgetSpent(Exception):
    """Internal signal: rho iteration allowance is gone."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, total: int):
        self.left = total

    def spend(self, amount: int) -> None:
        self.left -= amount
        if self.left < 0:
            raise _BudgetSpent


# Complete factorizations are memoized per value; the fill is idempotent
# (pure function of the key), so concurrent duplicate fills are harmless.
_cache: dict[int, Factorization] = {}


def clear_cache() -> None:
    """Forget memoized factorizations (used by tests and long sweeps)."""
    _cache.clear()


def is_prime(n: int) -> bool:
    """Miller-Rabin primality certificate, deterministic below 3.3e24."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("is_prime expects an integer")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_BELOW:
        witnesses = _MR_WITNESSES + _MR_EXTRA_WITNESSES
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, budget: _Budget) -> int:
    """One nontrivial factor of odd composite n, Brent's cycle variant.

    The polynomial constant steps deterministically 1, 2, 3, ... so results
    are reproducible.  Every polynomial evaluation spends one budget unit.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            budget.spend(r)
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(128, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += steps
            r *= 2
        if g != n:
            return g
        # The gcd batch overshot; replay one step at a time.
        g = 1
        while g == 1:
            budget.spend(1)
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # cycle degenerated for this constant; try the next


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_FACTOR_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be nonnegative")
    return value


def factorize(v: int, budget: int | None = None, memoize: bool = True) -> Factorization:
    """Complete prime factorization of v >= 1 within the iteration budget.

    budget bounds the total rho iterations for this call; None reads the
    GAINLAB_FACTOR_BUDGET environment variable, defaulting to 10**8.
    Raises FactorBudgetExceeded with the partial result if it runs out.
    """
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError("factorize expects an integer")
    if v < 1:
        raise ValueError("factorize expects an integer >= 1")
    if memoize:
        cached = _cache.get(v)
        if cached is not None:
            return cached

    counts: dict[int, int] = {}
    rem = v
    for p in _SMALL_PRIMES:
        if p * p > rem:
            break
        if rem % p == 0:
            e = 1
            rem //= p
            while rem % p == 0:
                rem //= p
                e += 1
            counts[p] = e
    if rem > 1:
        if rem < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # No prime factor below its square root exists, so rem is prime.
            counts[rem] = counts.get(rem, 0) + 1
        else:
            tracker = _Budget(_resolve_budget(budget))
            stack = [rem]
            while stack:
                t = stack.pop()
                if is_prime(t):
                    counts[t] = counts.get(t, 0) + 1
                    continue
                try:
                    d = _brent_rho(t, tracker)
                except _BudgetSpent:
                    cofactor = t
                    for other in stack:
                        cofactor *= other
                    partial = Factorization(tuple(sorted(counts.items())), False)
                    raise FactorBudgetExceeded(v, partial, cofactor) from None
                stack.append(d)
                stack.append(t // d)

    result = Factorization(tuple(sorted(counts.items())), True)
    if memoize:
        _cache[v] = result
    return result


def radical(v: int, budget: int | None = None, memoize: bool = True) -> int:
    """Product of the distinct primes dividing v; radical(1) = 1."""
    f = factorize(v, budget=budget, memoize=memoize)
    out = 1
    for p, _ in f.factors:
        out *= p
    return out


def is_squarefree(v: int, budget: int | None = None) -> bool:
    """True iff no prime divides v twice, i.e. radical(v) = v."""
    f = factorize(v, budget=budget)
    return all(e == 1 for _, e in f.factors)


def radical_of_product(components: tuple[int, ...] | list[int], budget: int | None = None) -> int:
    """Radical of the product of the components.

    Components are factored individually and their prime sets merged, so
    the product itself is never factored and components are free to share
    primes.  Raises FactorBudgetExceeded if any component blows the budget.
    """
    primes: set[int] = set()
    for c in components:
        primes.update(factorize(c, budget=budget).primes())
    out = 1
    for p in primes:
        out *= p
    return out
