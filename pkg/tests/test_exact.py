import random
from decimal import Decimal, getcontext
from fractions import Fraction as F

import pytest
from mpmath import mp

from xyyx.errors import NonIntegerValue, NonIntegralExponent, NonPositiveParameter
from xyyx.exact import (
    ONE,
    PrimePowerProduct,
    digit_count,
    factorize,
    is_prime,
    log10_interval,
)

PPP = PrimePowerProduct


def multiply_back(pairs):
    out = 1
    for p, e in pairs:
        out *= p**e
    return out


class TestFactorize:
    def test_one_gives_empty_product(self):
        assert factorize(1) == []

    def test_known_values(self):
        assert factorize(288) == [(2, 5), (3, 2)]
        assert factorize(157464) == [(2, 3), (3, 9)]
        assert factorize(30375) == [(3, 5), (5, 3)]

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveParameter):
            factorize(0)

    def test_multiply_back_dense_range(self):
        for m in range(1, 20001):
            pairs = factorize(m)
            assert multiply_back(pairs) == m
            assert [p for p, _ in pairs] == sorted({p for p, _ in pairs})

    def test_multiply_back_random_to_million(self):
        rng = random.Random(387)
        for _ in range(300):
            m = rng.randrange(1, 10**6 + 1)
            assert multiply_back(factorize(m)) == m

    def test_table_values(self):
        for m in (2304, 1728, 576, 17496, 104976, 52488, 72, 30375, 151875, 91125):
            pairs = factorize(m)
            assert multiply_back(pairs) == m
            assert all(is_prime(p) for p, _ in pairs)

    def test_large_semiprime_beyond_trial_division(self):
        n = 1000003 * 1000033
        assert factorize(n) == [(1000003, 1), (1000033, 1)]

    def test_prime_power_beyond_trial_division(self):
        n = 1000003**2
        assert factorize(n) == [(1000003, 2)]


class TestPrimePowerProduct:
    def test_validation(self):
        with pytest.raises(ValueError):
            PPP(((4, F(1)),))  # not prime
        with pytest.raises(ValueError):
            PPP(((3, F(1)), (2, F(1))))  # not ascending
        with pytest.raises(ValueError):
            PPP(((2, F(0)),))  # zero exponent

    def test_from_fraction_examples(self):
        assert PPP.from_fraction(F(1)) == ONE
        assert PPP.from_fraction(F(2, 3)) == PPP(((2, F(1)), (3, F(-1))))
        assert PPP.from_fraction(F(30375, 8)) == PPP(((2, F(-3)), (3, F(5)), (5, F(3))))
        with pytest.raises(NonPositiveParameter):
            PPP.from_fraction(F(-2, 3))
        with pytest.raises(NonPositiveParameter):
            PPP.from_fraction(F(0))

    def test_round_trip_random(self):
        rng = random.Random(99)
        for _ in range(200):
            q = F(rng.randrange(1, 5000), rng.randrange(1, 5000))
            assert PPP.from_fraction(q).to_fraction() == q

    def test_mul_examples(self):
        two = PPP(((2, F(1)),))
        assert two * two**-1 == ONE
        assert PPP(((2, F(1, 2)),)) * PPP(((2, F(1, 3)),)) == PPP(((2, F(5, 6)),))
        assert PPP(((2, F(5)), (3, F(2)))) * PPP(((2, F(3)),)) == PPP(((2, F(8)), (3, F(2))))

    def test_mul_homomorphism_random(self):
        rng = random.Random(7)
        for _ in range(120):
            q1 = F(rng.randrange(1, 400), rng.randrange(1, 400))
            q2 = F(rng.randrange(1, 400), rng.randrange(1, 400))
            assert PPP.from_fraction(q1 * q2) == PPP.from_fraction(q1) * PPP.from_fraction(q2)

    def test_pow_examples(self):
        sixteen = PPP.from_int(16)
        assert sixteen ** F(0) == ONE
        assert sixteen ** F(-1, 2) == PPP(((2, F(-2)),))
        assert (sixteen ** F(-1, 2)).to_fraction() == F(1, 4)
        u = PPP(((2, F(5)), (3, F(2))))
        assert u ** F(1, 3) == PPP(((2, F(5, 3)), (3, F(2, 3))))

    def test_pow_law_random(self):
        rng = random.Random(41)
        for _ in range(100):
            u = PPP.from_fraction(F(rng.randrange(1, 300), rng.randrange(1, 300)))
            r = F(rng.randrange(-6, 7), rng.randrange(1, 5))
            s = F(rng.randrange(-6, 7), rng.randrange(1, 5))
            assert (u**r) ** s == u ** (r * s)

    def test_to_fraction_requires_integral_exponents(self):
        with pytest.raises(NonIntegralExponent):
            PPP(((2, F(1, 2)),)).to_fraction()

    def test_str(self):
        assert str(ONE) == "1"
        assert str(PPP(((2, F(5)), (3, F(2))))) == "2^5 * 3^2"
        assert str(PPP(((2, F(-3)), (3, F(1, 2))))) == "2^(-3) * 3^(1/2)"


# 48*log10(2), computed independently with the decimal module at 60 digits
LOG10_2POW48 = "14.4494397918710973702594669467756652848731143101812099829005"


class TestLog10Interval:
    def test_empty_product_is_zero_width(self):
        enc = log10_interval(ONE, 128)
        assert 0 in enc
        with mp.workprec(160):
            assert mp.mpf(enc.delta.b) < mp.ldexp(1, -124)

    def test_ten_contains_exactly_one(self):
        ten = PPP.from_int(10)
        assert 1 in log10_interval(ten, 128)

    def test_power_of_two(self):
        enc = log10_interval(PPP(((2, F(48)),)), 256)
        getcontext().prec = 60
        target = Decimal(LOG10_2POW48)
        with mp.workprec(280):
            lo, hi = mp.mpf(enc.a), mp.mpf(enc.b)
            assert mp.mpf(str(target - Decimal("1e-55"))) < lo <= hi
            assert hi < mp.mpf(str(target + Decimal("1e-55")))

    def test_width_shrinks_with_precision(self):
        u = PPP.from_int(12345)
        with mp.workprec(600):
            w128 = mp.mpf(log10_interval(u, 128).delta.b)
            w512 = mp.mpf(log10_interval(u, 512).delta.b)
        assert w512 < w128

    def test_rejects_low_precision(self):
        with pytest.raises(ValueError):
            log10_interval(ONE, 32)


class TestDigitCount:
    def test_one(self):
        assert digit_count(ONE) == 1

    def test_2_pow_48(self):
        assert 2**48 == 281474976710656
        assert digit_count(PPP(((2, F(48)),))) == 15

    def test_small_integers_exhaustive(self):
        for n in list(range(1, 2000)) + [10**6 - 1, 10**6, 10**6 + 1]:
            assert digit_count(PPP.from_int(n)) == len(str(n)), n

    def test_random_integers_below_million(self):
        rng = random.Random(55)
        for _ in range(400):
            n = rng.randrange(1, 10**6)
            assert digit_count(PPP.from_int(n)) == len(str(n)), n

    def test_powers_of_two_up_to_512(self):
        for k in range(1, 513):
            assert digit_count(PPP(((2, F(k)),))) == len(str(2**k)), k

    def test_exact_powers_of_ten(self):
        # log10 is an exact integer: the enclosure always straddles it and the
        # big-integer fallback has to settle the count
        for k in (1, 5, 30):
            u = PPP(((2, F(k)), (5, F(k))))
            assert digit_count(u) == k + 1

    def test_rejects_non_integer_values(self):
        with pytest.raises(NonIntegerValue):
            digit_count(PPP(((2, F(-1)),)))
        with pytest.raises(NonIntegerValue):
            digit_count(PPP(((2, F(1, 2)),)))
