"""Factorization pipeline: correctness, radicals, budget discipline."""

import math

import pytest
import sympy
from hypothesis import given, strategies as st

from gainlab.factor import (
    BUDGET_ENV_VAR,
    FactorBudgetExceeded,
    Factorization,
    clear_cache,
    factorize,
    is_prime,
    is_squarefree,
    radical,
    radical_of_product,
)

# Two 13-digit primes whose product defeats trial division and forces the
# rho stage (verified prime by an independent oracle in the fixture test).
HARD_P = 1000000000039
HARD_Q = 1000000000061


def test_hard_semiprime_fixture_is_sound():
    assert sympy.isprime(HARD_P) and sympy.isprime(HARD_Q)


class TestFactorize:
    def test_square_of_eleven(self):
        assert factorize(121).factors == ((11, 2),)
        assert factorize(121).complete

    def test_one_is_empty_and_complete(self):
        f = factorize(1)
        assert f.factors == ()
        assert f.complete
        assert f.product() == 1

    def test_small_composite(self):
        assert factorize(84).factors == ((2, 2), (3, 1), (7, 1))

    def test_rejects_zero_and_negative(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-6)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            factorize(6.0)
        with pytest.raises(TypeError):
            factorize(True)

    def test_large_prime_certificate(self):
        # Cofactor far above the trial range must be certified, not assumed.
        p = 192152758208292083
        f = factorize(p)
        assert f.factors == ((p, 1),)

    def test_semiprime_needs_rho(self):
        clear_cache()
        f = factorize(HARD_P * HARD_Q)
        assert f.factors == ((HARD_P, 1), (HARD_Q, 1))

    @given(st.integers(min_value=1, max_value=10 ** 18))
    def test_reconstruction_and_certificates(self, v):
        f = factorize(v)
        assert f.complete
        assert f.product() == v
        primes = f.primes()
        assert list(primes) == sorted(primes)
        assert len(set(primes)) == len(primes)
        for p, e in f.factors:
            assert e >= 1
            assert is_prime(p)

    @given(st.integers(min_value=1, max_value=10 ** 9))
    def test_agrees_with_oracle_factorint(self, v):
        assert dict(factorize(v).factors) == sympy.factorint(v)


class TestIsPrime:
    def test_known_primes(self):
        for p in (2, 3, 5, 97, 10 ** 9 + 7, HARD_P, 192152758208292083):
            assert is_prime(p)

    def test_known_composites(self):
        # 561 is a Carmichael number; 3215031751 is a strong pseudoprime
        # to bases 2, 3, 5 and 7 simultaneously.
        for c in (0, 1, 4, 561, 3215031751, HARD_P * HARD_Q):
            assert not is_prime(c)


class TestRadical:
    def test_product_of_case_study_parameters(self):
        assert radical(25 * 128 * 3087 * 23 * 121) == 53130

    def test_one(self):
        assert radical(1) == 1

    def test_small(self):
        assert radical(84) == 42

    @given(st.integers(min_value=1, max_value=10 ** 15))
    def test_divides_and_idempotent(self, v):
        r = radical(v)
        assert v % r == 0
        assert radical(r) == r

    @given(
        st.integers(min_value=1, max_value=10 ** 7),
        st.integers(min_value=1, max_value=10 ** 7),
    )
    def test_multiplicative_on_coprime_parts(self, a, b):
        if math.gcd(a, b) == 1:
            assert radical(a * b) == radical(a) * radical(b)

    def test_sweep_against_sieve_oracle_below_one_million(self):
        # Independent oracle: smallest-prime-factor sieve, no shared code.
        limit = 10 ** 6
        spf = list(range(limit + 1))
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == p:
                for m in range(p * p, limit + 1, p):
                    if spf[m] == m:
                        spf[m] = p
        for v in range(1, limit + 1):
            expected = 1
            t = v
            while t > 1:
                p = spf[t]
                expected *= p
                while t % p == 0:
                    t //= p
            assert radical(v, memoize=False) == expected


class TestIsSquarefree:
    def test_examples(self):
        assert is_squarefree(42)
        assert not is_squarefree(121)
        # 45126 = 2 * 3^2 * 23 * 109.
        assert not is_squarefree(45126)

    @given(st.integers(min_value=1, max_value=10 ** 12))
    def test_equivalent_to_radical_fixpoint(self, v):
        assert is_squarefree(v) == (radical(v) == v)


class TestRadicalOfProduct:
    def test_shared_primes_collapse(self):
        # 9 and 3 share the prime 3; the union must count it once.
        assert radical_of_product((9, 3, 2)) == 6

    def test_matches_direct_radical(self):
        parts = (25, 128, 3087, 23, 121)
        v = math.prod(parts)
        assert radical_of_product(parts) == radical(v) == 53130


class TestBudget:
    def test_budget_exceeded_carries_partial_and_cofactor(self):
        clear_cache()
        n = HARD_P * HARD_Q * 4
        with pytest.raises(FactorBudgetExceeded) as exc:
            factorize(n, budget=10)
        err = exc.value
        assert err.value == n
        assert err.partial == Factorization(((2, 2),), False)
        assert err.cofactor == HARD_P * HARD_Q

    def test_radical_propagates(self):
        clear_cache()
        with pytest.raises(FactorBudgetExceeded):
            radical(HARD_P * HARD_Q, budget=10)

    def test_env_var_controls_default(self, monkeypatch):
        clear_cache()
        monkeypatch.setenv(BUDGET_ENV_VAR, "10")
        with pytest.raises(FactorBudgetExceeded):
            factorize(HARD_P * HARD_Q)
        monkeypatch.setenv(BUDGET_ENV_VAR, "100000000")
        assert factorize(HARD_P * HARD_Q).complete

    def test_env_var_rejects_garbage(self, monkeypatch):
        clear_cache()
        monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
        with pytest.raises(ValueError):
            factorize(HARD_P * HARD_Q)

    def test_memoized_success_needs_no_budget(self):
        clear_cache()
        assert factorize(HARD_P * HARD_Q).complete
        # A cached complete result is returned even under a zero budget.
        assert factorize(HARD_P * HARD_Q, budget=0).complete
