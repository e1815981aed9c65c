"""Solution families of x^y = y^x and x^y y^x = v^w w^v, with exact verification.

Equality of positive reals built from prime powers is decided on exponent
vectors: x^y y^x = v^w w^v holds iff y*vec(x) + x*vec(y) = w*vec(v) + v*vec(w),
because logarithms of distinct primes are linearly independent over Q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mpmath import iv, mp

from .errors import DegenerateParameters, NonPositiveParameter, NonRationalTuple
from .exact import ONE, PrimePowerProduct


@dataclass(frozen=True)
class SolutionTuple:
    """One solution (x, y, v, w) of x^y y^x = v^w w^v with its provenance.

    provenance is one of "euler", "general", "family", "manual"; params holds
    the generating parameters (n, or a/b/c) when applicable.
    """

    x: PrimePowerProduct
    y: PrimePowerProduct
    v: PrimePowerProduct
    w: PrimePowerProduct
    provenance: str = "manual"
    params: tuple[Fraction, ...] = ()

    def values(self) -> tuple[PrimePowerProduct, PrimePowerProduct, PrimePowerProduct, PrimePowerProduct]:
        return (self.x, self.y, self.v, self.w)

    @property
    def is_rational(self) -> bool:
        return all(u.is_rational for u in self.values())

    def as_fractions(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        if not self.is_rational:
            raise NonRationalTuple(f"tuple has irrational members: {self}")
        return tuple(u.to_fraction() for u in self.values())

    def __str__(self) -> str:
        return "(%s, %s, %s, %s)" % self.values()


@dataclass(frozen=True)
class TrivialityVerdict:
    trivial: bool
    reason: str  # "multiset-equal" | "contains-one" | "none"


def euler_solution(n: int) -> tuple[Fraction, Fraction]:
    """The n-th rational solution of x^y = y^x: x = (1+1/n)^n, y = (1+1/n)^(n+1)."""
    if n < 1:
        raise NonPositiveParameter(f"n must be >= 1, got {n}")
    base = Fraction(n + 1, n)
    return base**n, base ** (n + 1)


def verify_power_equation(x: Fraction, y: Fraction) -> bool:
    """Exact check of x^y = y^x for positive rationals, via exponent vectors."""
    x, y = Fraction(x), Fraction(y)
    if x <= 0 or y <= 0:
        raise NonPositiveParameter(f"arguments must be positive, got ({x}, {y})")
    vx = PrimePowerProduct.from_fraction(x)
    vy = PrimePowerProduct.from_fraction(y)
    return vx**y == vy**x


def general_solution(a: Fraction, b: Fraction, c: Fraction) -> SolutionTuple:
    """Solution with y = a*x, v = b*x, w = c*x, where x = (b^c c^b / a)^(1/(a-b-c+1)).

    x may be irrational; it is returned as a prime-power product with rational
    exponents.  Requires a > 0, b > 0, c > 0 and a+1 != b+c.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 or a + 1 == b + c:
        raise DegenerateParameters(f"need a != 0 and a+1 != b+c, got a={a}, b={b}, c={c}")
    if b <= 0 or c <= 0:
        raise NonPositiveParameter(f"b and c must be positive, got b={b}, c={c}")
    if a < 0:
        raise NonPositiveParameter(f"scalar multiplier a must be positive, got a={a}")
    va = PrimePowerProduct.from_fraction(a)
    vb = PrimePowerProduct.from_fraction(b)
    vc = PrimePowerProduct.from_fraction(c)
    base = vb**c * vc**b * va**-1
    x = base ** (1 / (a - b - c + 1))
    return SolutionTuple(x, va * x, vb * x, vc * x, provenance="general", params=(a, b, c))


def rational_family(b: int, c: int) -> SolutionTuple:
    """The always-rational family a = b+c: x = b^c c^b/(b+c), y = b^c c^b, v = bx, w = cx."""
    if b < 1 or c < 1:
        raise NonPositiveParameter(f"b and c must be >= 1, got b={b}, c={c}")
    vb = PrimePowerProduct.from_int(b)
    vc = PrimePowerProduct.from_int(c)
    y = vb**c * vc**b
    x = y * PrimePowerProduct.from_int(b + c) ** -1
    return SolutionTuple(x, y, vb * x, vc * x, provenance="family", params=(Fraction(b), Fraction(c)))


def verify_product_equation(t: SolutionTuple) -> bool:
    """Exact check of x^y y^x = v^w w^v for a rational-valued tuple."""
    xq, yq, vq, wq = t.as_fractions()
    return (t.x**yq) * (t.y**xq) == (t.v**wq) * (t.w**vq)


def verify_fractions(x: Fraction, y: Fraction, v: Fraction, w: Fraction) -> bool:
    """Convenience wrapper: exact verification of four positive rationals."""
    vals = [Fraction(q) for q in (x, y, v, w)]
    if any(q <= 0 for q in vals):
        raise NonPositiveParameter(f"values must be positive, got {vals}")
    return verify_product_equation(manual_tuple(*vals))


def manual_tuple(x: Fraction, y: Fraction, v: Fraction, w: Fraction) -> SolutionTuple:
    f = PrimePowerProduct.from_fraction
    return SolutionTuple(f(x), f(y), f(v), f(w), provenance="manual")


class NumericVerdict(NamedTuple):
    ok: bool
    residual: object  # mpmath interval enclosing log(x^y y^x) - log(v^w w^v)


def _iv_log_value(u: PrimePowerProduct):
    total = iv.mpf(0)
    for p, e in u.factors:
        total += (iv.mpf(e.numerator) / iv.mpf(e.denominator)) * iv.log(iv.mpf(p))
    return total


def numeric_verify(t: SolutionTuple, precision_bits: int = 256) -> NumericVerdict:
    """Interval check of |log(x^y y^x) - log(v^w w^v)| at the given precision.

    True when the residual interval contains 0 and is narrower than
    2^(-precision_bits/2).  Works for irrational tuples, where the exact
    exponent-vector comparison does not apply.
    """
    if precision_bits < 64:
        raise ValueError(f"precision_bits must be >= 64, got {precision_bits}")
    old = iv.prec
    iv.prec = precision_bits
    try:
        logs = [_iv_log_value(u) for u in t.values()]
        vals = [iv.exp(lg) for lg in logs]
        lx, ly, lv, lw = logs
        x, y, v, w = vals
        residual = (y * lx + x * ly) - (w * lv + v * lw)
        with mp.workprec(precision_bits + 8):
            width = mp.mpf(residual.delta.b)
            ok = (0 in residual) and width < mp.ldexp(1, -(precision_bits // 2))
        return NumericVerdict(ok, residual)
    finally:
        iv.prec = old


def classify_triviality(t: SolutionTuple) -> TrivialityVerdict:
    """Two-rule triviality heuristic.

    Trivial with reason "multiset-equal" when {x,y} = {v,w} as multisets
    (the equation is symmetric in each pair), else trivial with reason
    "contains-one" when 1 appears among the four values, else nontrivial.
    Borderline cases like (1/2, 1/2, 1/2, 1) land on the trivial side here
    via the contains-one rule.
    """
    if Counter((t.x, t.y)) == Counter((t.v, t.w)):
        return TrivialityVerdict(True, "multiset-equal")
    if ONE in t.values():
        return TrivialityVerdict(True, "contains-one")
    return TrivialityVerdict(False, "none")


def search_integer_solutions(b_max: int, c_max: int) -> list[SolutionTuple]:
    """All-integer family tuples with 1 <= b <= b_max, 1 <= c <= c_max.

    The family value x = b^c c^b/(b+c) is integral iff (b+c) divides b^c c^b;
    the other three members are then integer multiples of x.  Results come in
    (b, c)-lexicographic order.
    """
    if b_max < 1 or c_max < 1:
        raise NonPositiveParameter(f"bounds must be >= 1, got ({b_max}, {c_max})")
    found = []
    for b in range(1, b_max + 1):
        for c in range(1, c_max + 1):
            if (b**c * c**b) % (b + c) == 0:
                found.append(rational_family(b, c))
    return found
