"""Numeric substrate: exact roots and powers, certified-precision logs.

Frozen reference values were computed with an independent high-precision
oracle (mpmath at 60 significant digits) and pasted here as strings.
"""

from decimal import Decimal, localcontext

import pytest
from hypothesis import given, strategies as st

from gainlab.bigmath import (
    BigLog,
    CTX,
    LN_PRECISION,
    gcd3,
    ipow,
    ln_big,
    nth_root_floor,
    round_sig,
)

# Independent oracle values (50 significant digits).
LN_84 = Decimal("4.4308167988433136153350622232820585704355755561251")
LN_53130 = Decimal("10.880497019444988915387285844825395060149763944811")

ABS_TOL = Decimal("1e-45")


class TestGcd3:
    def test_deweger_triple_is_coprime(self):
        # A*x = 3087*25, B*y = 23*128, k = 121.
        assert gcd3(77175, 2944, 121) == 1

    def test_gcd_with_zeros(self):
        assert gcd3(0, 0, 5) == 5
        assert gcd3(0, 0, 0) == 0

    def test_three_way_example(self):
        assert gcd3(12, 18, 30) == 6

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gcd3(-1, 2, 3)

    def test_rejects_non_integer(self):
        with pytest.raises(TypeError):
            gcd3(1.5, 2, 3)

    @given(
        st.integers(min_value=0, max_value=10 ** 12),
        st.integers(min_value=0, max_value=10 ** 12),
        st.integers(min_value=0, max_value=10 ** 12),
    )
    def test_divides_each_argument_and_permutes(self, a, b, c):
        g = gcd3(a, b, c)
        if g:
            assert a % g == 0 and b % g == 0 and c % g == 0
        else:
            assert a == b == c == 0
        assert g == gcd3(b, c, a) == gcd3(c, a, b) == gcd3(b, a, c)


class TestIpow:
    def test_reyssat_power(self):
        assert ipow(23, 5) == 6436343
        assert 109 * ipow(9, 5) + 2 == 6436343

    def test_exponent_one(self):
        assert ipow(7, 1) == 7

    def test_cube(self):
        assert ipow(128, 3) == 2097152

    def test_zero_base_positive_exponent(self):
        assert ipow(0, 5) == 0

    def test_exponent_zero(self):
        assert ipow(5, 0) == 1

    def test_rejects_zero_to_the_zero(self):
        with pytest.raises(ValueError):
            ipow(0, 0)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ipow(-2, 3)
        with pytest.raises(ValueError):
            ipow(2, -3)


class TestNthRootFloor:
    def test_exact_cube(self):
        assert nth_root_floor(8, 3) == 2

    def test_reyssat_fifth_root(self):
        assert nth_root_floor(6436343, 5) == 23

    def test_between_powers(self):
        # 2^4 = 16 <= 80 < 81 = 3^4.
        assert nth_root_floor(80, 4) == 2

    def test_edges(self):
        assert nth_root_floor(0, 7) == 0
        assert nth_root_floor(1, 7) == 1
        assert nth_root_floor(123456, 1) == 123456

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            nth_root_floor(10, 0)
        with pytest.raises(ValueError):
            nth_root_floor(-10, 2)

    @given(
        st.integers(min_value=0, max_value=10 ** 40),
        st.integers(min_value=1, max_value=64),
    )
    def test_floor_condition_exact(self, v, n):
        r = nth_root_floor(v, n)
        assert ipow(r, n) <= v
        assert ipow(r + 1, n) > v

    @given(st.integers(min_value=0, max_value=10 ** 30))
    def test_square_root_matches_isqrt(self, v):
        import math

        assert nth_root_floor(v, 2) == math.isqrt(v)


class TestLnBig:
    def test_ln_one_is_exactly_zero(self):
        assert ln_big(1).value == 0

    def test_against_oracle_values(self):
        assert abs(ln_big(84).value - LN_84) <= ABS_TOL
        assert abs(ln_big(53130).value - LN_53130) <= ABS_TOL

    def test_four_decimal_prints(self):
        assert str(round_sig(ln_big(53130).value, 6)) == "10.8805"
        assert str(round_sig(ln_big(84).value, 5)) == "4.4308"

    def test_precision_contract(self):
        log = ln_big(2)
        assert isinstance(log, BigLog)
        assert log.precision_digits == LN_PRECISION >= 50

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ln_big(0)
        with pytest.raises(ValueError):
            ln_big(-3)

    @given(
        st.integers(min_value=1, max_value=10 ** 30),
        st.integers(min_value=1, max_value=10 ** 30),
    )
    def test_additivity(self, a, b):
        # Sum under the package context: the ambient 28-digit default would
        # round away the precision this test is checking.
        with localcontext(CTX):
            lhs = ln_big(a * b).value
            rhs = ln_big(a).value + ln_big(b).value
            if a == b == 1:
                assert lhs == rhs == 0
            else:
                assert abs(lhs - rhs) <= Decimal("1e-45") * lhs

    @given(
        st.integers(min_value=1, max_value=10 ** 30),
        st.integers(min_value=1, max_value=10 ** 30),
    )
    def test_monotonicity(self, a, b):
        if a == b:
            assert ln_big(a).value == ln_big(b).value
        else:
            lo, hi = sorted((a, b))
            assert ln_big(lo).value < ln_big(hi).value


class TestRoundSig:
    def test_six_significant_digits(self):
        assert str(round_sig(Decimal("1.6299116841270481846"), 6)) == "1.62991"

    def test_half_even_tie(self):
        assert str(round_sig(Decimal("1.234565"), 6)) == "1.23456"
        assert str(round_sig(Decimal("1.234575"), 6)) == "1.23458"

    def test_zero(self):
        assert round_sig(Decimal(0), 6) == 0

    def test_small_magnitude(self):
        assert str(round_sig(Decimal("0.47901912075"), 6)) == "0.479019"

    def test_rejects_no_digits(self):
        with pytest.raises(ValueError):
            round_sig(Decimal(1), 0)
