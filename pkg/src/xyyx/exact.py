"""Exact arithmetic foundation.

Positive reals of the form prod p^(e_p) with rational exponents e_p are kept
as explicit prime-exponent vectors, so equalities between huge powers (think
288^2304 * 2304^288) reduce to comparing small lists of fractions.  Rationals
are plain ``fractions.Fraction`` throughout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp

from .errors import NonIntegerValue, NonIntegralExponent, NonPositiveParameter

_TRIAL_LIMIT = 10**6

# Witness set is deterministic for n < 3.3 * 10^24 (far beyond anything the
# solution families produce); larger inputs get a fixed strong-probable test.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with a fixed witness set."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _brent_rho(n: int, rng: random.Random) -> int:
    """Find a nontrivial factor of an odd composite n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_hard(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n, random.Random(n))
    _factor_hard(d, out)
    _factor_hard(n // d, out)


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m >= 1 as (prime, exponent) pairs, primes ascending.

    Trial division up to 10^6, then Brent's rho for any remaining cofactor;
    m = 1 gives the empty list.
    """
    if m < 1:
        raise NonPositiveParameter(f"factorize requires m >= 1, got {m}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    f = 7
    while f * f <= m and f < _TRIAL_LIMIT:
        for p in (f, f + 4):  # 6k+1, 6k+5
            while m % p == 0:
                out[p] = out.get(p, 0) + 1
                m //= p
        f += 6
    if m > 1:
        if f * f > m:
            out[m] = out.get(m, 0) + 1
        else:
            _factor_hard(m, out)
    return sorted(out.items())


@dataclass(frozen=True)
class PrimePowerProduct:
    """A positive real as a finite product of primes with rational exponents.

    ``factors`` holds (prime, exponent) pairs with primes strictly ascending
    and no zero exponents; the empty tuple is the number 1.  Instances are
    immutable and equality is structural, so two equal values always compare
    equal regardless of how they were built.
    """

    factors: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError(f"primes must be strictly ascending, got {p} after {last}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if not isinstance(e, Fraction) or e == 0:
                raise ValueError(f"exponent of {p} must be a nonzero Fraction, got {e!r}")
            last = p

    @classmethod
    def _from_map(cls, exps: dict[int, Fraction]) -> "PrimePowerProduct":
        return cls(tuple((p, e) for p, e in sorted(exps.items()) if e != 0))

    @classmethod
    def from_int(cls, n: int) -> "PrimePowerProduct":
        if n < 1:
            raise NonPositiveParameter(f"value must be positive, got {n}")
        return cls._from_map({p: Fraction(e) for p, e in factorize(n)})

    @classmethod
    def from_fraction(cls, q: Fraction) -> "PrimePowerProduct":
        q = Fraction(q)
        if q <= 0:
            raise NonPositiveParameter(f"value must be positive, got {q}")
        exps = {p: Fraction(e) for p, e in factorize(q.numerator)}
        for p, e in factorize(q.denominator):
            exps[p] = exps.get(p, Fraction(0)) - e
        return cls._from_map(exps)

    def __mul__(self, other: "PrimePowerProduct") -> "PrimePowerProduct":
        exps = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, Fraction(0)) + e
        return PrimePowerProduct._from_map(exps)

    def __pow__(self, r) -> "PrimePowerProduct":
        r = Fraction(r)
        if r == 0:
            return ONE
        return PrimePowerProduct(tuple((p, e * r) for p, e in self.factors))

    @property
    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self.factors)

    def to_fraction(self) -> Fraction:
        """Exact rational value; requires all exponents integral."""
        num = den = 1
        for p, e in self.factors:
            if e.denominator != 1:
                raise NonIntegralExponent(f"{p}^({e}) has no rational value")
            if e > 0:
                num *= p ** int(e)
            else:
                den *= p ** int(-e)
        return Fraction(num, den)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for p, e in self.factors:
            if e == 1:
                parts.append(str(p))
            elif e.denominator == 1 and e > 0:
                parts.append(f"{p}^{e}")
            else:
                parts.append(f"{p}^({e})")
        return " * ".join(parts)


ONE = PrimePowerProduct()


def log10_interval(u: PrimePowerProduct, precision_bits: int = 256):
    """Rigorous enclosure of log10(u) as an mpmath interval.

    The returned interval is guaranteed to contain sum(e_p * log10(p)); its
    width shrinks as precision_bits grows.
    """
    if precision_bits < 64:
        raise ValueError(f"precision_bits must be >= 64, got {precision_bits}")
    old = iv.prec
    iv.prec = precision_bits
    try:
        total = iv.mpf(0)
        ln10 = iv.log(iv.mpf(10))
        for p, e in u.factors:
            coeff = iv.mpf(e.numerator) / iv.mpf(e.denominator)
            total += coeff * (iv.log(iv.mpf(p)) / ln10)
        return total
    finally:
        iv.prec = old


def digit_count(u: PrimePowerProduct) -> int:
    """Number of base-10 digits of an integer-valued product.

    Widens the log10 enclosure (256 up to 8192 bits) until it pins down
    floor(log10 u); if the enclosure still straddles a power of ten, settles
    it with one exact big-integer comparison.
    """
    for p, e in u.factors:
        if e.denominator != 1 or e < 0:
            raise NonIntegerValue(f"not an integer value: {p}^({e})")
    if not u.factors:
        return 1
    k = None
    bits = 256
    while bits <= 8192:
        enc = log10_interval(u, bits)
        with mp.workprec(bits + 8):
            lo = mp.floor(mp.mpf(enc.a))
            hi = mp.floor(mp.mpf(enc.b))
            if lo == hi:
                return int(lo) + 1
            k = int(hi)
        bits *= 2
    # log10(u) straddles the integer k at every precision tried; compare exactly
    n = 1
    for p, e in u.factors:
        n *= p ** int(e)
    return k + 1 if n >= 10**k else k
