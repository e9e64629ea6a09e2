"""
Scalar plumbing: half-integers, Pochhammer symbols and terminating
hypergeometric series.

Two scalar backends are supported throughout the package: binary64
``float`` and exact ``fractions.Fraction``.  Parameters are always kept
as exact rationals; each factor ``a + k`` of a product is formed exactly
and only then converted to the accumulation backend, so parameters lying
within ``c/2`` of a negative integer do not lose digits to cancellation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[float, Fraction]
Number = Union[int, float, Fraction]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a formula."""


def as_fraction(value: Number | "HalfInteger") -> Fraction:
    if isinstance(value, HalfInteger):
        return value.to_fraction()
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"non-finite parameter {value!r}")
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def backend_cast(exact: bool):
    return Fraction if exact else float


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An integer or half-integer stored as twice its value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError("twice must be an int")

    @classmethod
    def of(cls, value: Union[int, Fraction, "HalfInteger", str]) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        f = as_fraction(value) * 2
        if f.denominator != 1:
            raise DomainError(f"{value} is not an integer or half-integer")
        return cls(int(f))

    @classmethod
    def parse(cls, text: str) -> "HalfInteger":
        """Parse ``"33/2"``, ``"16.5"`` or ``"7"`` without a float round trip."""
        try:
            f = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse {text!r} as a half-integer") from exc
        return cls.of(f)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2

    def __int__(self) -> int:
        if not self.is_integer:
            raise DomainError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        if isinstance(other, int):
            other = HalfInteger(2 * other)
        if not isinstance(other, HalfInteger):
            return NotImplemented
        return HalfInteger(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = HalfInteger(2 * other)
        if not isinstance(other, HalfInteger):
            return NotImplemented
        return HalfInteger(self.twice - other.twice)

    def __rsub__(self, other):
        if isinstance(other, int):
            return HalfInteger(2 * other - self.twice)
        return NotImplemented

    def __neg__(self):
        return HalfInteger(-self.twice)

    def __abs__(self):
        return HalfInteger(abs(self.twice))

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"

    def decimal(self) -> str:
        """Decimal text such as ``-16.5`` or ``3``."""
        if self.is_integer:
            return str(self.twice // 2)
        sign = "-" if self.twice < 0 else ""
        return f"{sign}{abs(self.twice) // 2}.5"


def half_integer_grid(j: HalfInteger) -> list[HalfInteger]:
    """The points -j, -j+1, ..., j."""
    return [HalfInteger(t) for t in range(-j.twice, j.twice + 1, 2)]


def pochhammer(a: Number, k: int):
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.

    The result has the type of ``a`` (int, Fraction or float).
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    result = a - a + 1  # unit of the same type
    for i in range(k):
        result *= a + i
    return result


def pochhammer_ratio_with_limit(a: Number, b: Number, k: int, *, exact: bool = True):
    """(a)_k / (b)_k, with the removable 0/0 of (2e)_k/(e)_k at e -> 0 filled in.

    A vanishing denominator factor is only accepted when it is matched by a
    vanishing numerator factor and ``a == 2b``; the limiting value of that
    factor pair is 2.
    """
    a, b = as_fraction(a), as_fraction(b)
    cast = backend_cast(exact)
    result = cast(1)
    for i in range(k):
        num, den = a + i, b + i
        if den == 0:
            if num != 0 or a != 2 * b:
                raise DomainError(f"zero denominator factor at index {i} in ({b})_{k}")
            result *= 2
        else:
            result *= cast(num) / cast(den)
    return result


def binomial(n: int, k: int, *, exact: bool = False):
    """Binomial coefficient by multiplicative recurrence (integer top only)."""
    if k < 0 or k > n:
        return Fraction(0) if exact else 0.0
    k = min(k, n - k)
    result = Fraction(1) if exact else 1.0
    for i in range(k):
        result = result * (n - i) / (i + 1)
    return result


def _nonpositive_int(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


def termination_degree(numerators: Iterable[Number]) -> int:
    """Smallest m >= 0 such that some numerator parameter equals -m."""
    degrees = [int(-f) for f in map(as_fraction, numerators) if _nonpositive_int(f)]
    if not degrees:
        raise DomainError("series does not terminate: no nonpositive integer numerator")
    return min(degrees)


@dataclass(frozen=True)
class HypSeries:
    """A terminating pFq(numerators; denominators; z) with validated parameters."""

    numerators: tuple
    denominators: tuple
    argument: Fraction
    degree: int

    @classmethod
    def build(cls, numerators: Sequence[Number], denominators: Sequence[Number],
              z: Number = 1) -> "HypSeries":
        a = tuple(as_fraction(v) for v in numerators)
        b = tuple(as_fraction(v) for v in denominators)
        degree = termination_degree(a)
        for bj in b:
            if _nonpositive_int(bj) and bj >= -(degree - 1):
                raise DomainError(
                    f"denominator parameter {bj} vanishes inside the summation range 0..{degree}")
        return cls(a, b, as_fraction(z), degree)

    def evaluate(self, *, exact: bool = False):
        if exact:
            return self._evaluate_exact()
        z = float(self.argument)
        term = 1.0
        total = term
        for k in range(self.degree):
            num = 1.0
            for ai in self.numerators:
                num *= float(ai + k)
            den = float(k + 1)
            for bj in self.denominators:
                den *= float(bj + k)
            term = term * num * z / den
            total += term
        return total

    def _evaluate_exact(self) -> Fraction:
        # integer numerators over one common denominator; one gcd per term
        params = self.numerators + self.denominators + (self.argument,)
        scale = math.lcm(*(f.denominator for f in params))
        a = [int(f * scale) for f in self.numerators]
        b = [int(f * scale) for f in self.denominators]
        zn, zd = int(self.argument * scale), scale
        extra = len(b) - len(a)
        t_num, t_den = 1, 1
        total = Fraction(1)
        for k in range(self.degree):
            ks = k * scale
            num = zn
            for ai in a:
                num *= ai + ks
            den = zd * (k + 1)
            for bj in b:
                den *= bj + ks
            if extra > 0:
                num *= scale ** extra
            elif extra < 0:
                den *= scale ** -extra
            t_num *= num
            t_den *= den
            if t_num == 0:
                break
            g = math.gcd(t_num, t_den)
            t_num //= g
            t_den //= g
            total += Fraction(t_num, t_den)
        return total


def hyp_terminating(numerators: Sequence[Number], denominators: Sequence[Number],
                    z: Number = 1, *, exact: bool = False):
    """Sum a terminating generalized hypergeometric series.

    Uses the forward term recurrence
    ``t_{k+1} = t_k * z * prod(a_i + k) / (prod(b_j + k) * (k + 1))``.

    >>> hyp_terminating([-1, 2], [4], 1, exact=True)
    Fraction(1, 2)
    """
    return HypSeries.build(numerators, denominators, z).evaluate(exact=exact)
