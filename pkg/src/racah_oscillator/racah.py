"""
Racah polynomials on the branch alpha + 1 = -N, their weights and squared
norms, orthonormal Racah functions, and symmetric Krawtchouk functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .numerics import (DomainError, Number, as_fraction, backend_cast, binomial,
                       hyp_terminating)


@dataclass(frozen=True)
class RacahParams:
    """Racah parameters (alpha, beta, gamma, delta) with alpha + 1 = -N.

    With ``check_window`` (the default) the constructor insists on
    gamma, delta > -1 and (beta > N + gamma or beta < -N - delta - 1), the
    region where weights and norms are positive.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    check_window: bool = True

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        n = -(self.alpha + 1)
        if n.denominator != 1 or n < 0:
            raise DomainError(f"alpha + 1 = {self.alpha + 1} is not a nonpositive integer")
        if self.check_window and not self.in_window():
            raise DomainError(f"parameters {self.as_tuple()} outside the positivity window")

    @property
    def N(self) -> int:
        return int(-(self.alpha + 1))

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def in_window(self, beta_slack: int = 1) -> bool:
        """Positivity window; ``beta_slack=0`` gives the wider beta < -N - delta bound."""
        a, b, g, d = self.as_tuple()
        if not (g > -1 and d > -1):
            return False
        return b > self.N + g or b < -self.N - d - beta_slack

    def lam(self, x: int) -> Fraction:
        """Grid point lambda(x) = x(x + gamma + delta + 1)."""
        return x * (x + self.gamma + self.delta + 1)


def _check_range(name: str, value: int, N: int):
    if not 0 <= value <= N:
        raise DomainError(f"{name}={value} outside 0..{N}")


def racah_eval(n: int, x: int, p: RacahParams, *, exact: bool = False):
    """R_n(lambda(x); alpha, beta, gamma, delta) as a terminating 4F3 at 1."""
    _check_range("n", n, p.N)
    _check_range("x", x, p.N)
    a, b, g, d = p.as_tuple()
    return hyp_terminating([-n, n + a + b + 1, -x, x + g + d + 1],
                           [a + 1, b + d + 1, g + 1], 1, exact=exact)


def _weight_step(i: int, p: RacahParams, cast):
    """Ratio w(i+1)/w(i)."""
    a, b, g, d = p.as_tuple()
    s = g + d + 1
    num = cast(1)
    for v in (a + 1, b + d + 1, g + 1, (s + 2) / 2):
        num *= cast(v + i)
    den = cast(1)
    for v in (-a + s, -b + g + 1, d + 1, 1):
        if v + i == 0:
            raise DomainError(f"weight denominator vanishes at step {i}")
        den *= cast(v + i)
    if s + i == 0 and s / 2 + i == 0:
        pair = cast(2)  # removable limit of (2e)_x/(e)_x
    elif s / 2 + i == 0:
        raise DomainError(f"weight denominator vanishes at step {i}")
    else:
        pair = cast(s + i) / cast(s / 2 + i)
    return num * pair / den


def weight(x: int, p: RacahParams, *, exact: bool = False):
    """Orthogonality weight w(x; alpha, beta, gamma, delta).

    Computed as a running product of per-step ratios.  The pair
    (gamma+delta+1)_x / ((gamma+delta+1)/2)_x is evaluated with its
    removable limit when gamma + delta + 1 = 0.
    """
    _check_range("x", x, p.N)
    cast = backend_cast(exact)
    result = cast(1)
    for i in range(x):
        result *= _weight_step(i, p, cast)
    return result


def _ratio(num_params, den_params, i, cast):
    num = cast(1)
    for v in num_params:
        num *= cast(v + i)
    den = cast(1)
    for v in den_params:
        if v + i == 0:
            raise DomainError(f"norm denominator vanishes at step {i}")
        den *= cast(v + i)
    return num / den


def _norm_prefactor(p: RacahParams, cast):
    a, b, g, d = p.as_tuple()
    result = cast(1)
    for i in range(p.N):
        result *= _ratio((-b, g + d + 2), (-b + g + 1, d + 1), i, cast)
    return result


def _norm_degree_part(n: int, p: RacahParams, cast):
    a, b, g, d = p.as_tuple()
    s = a + b + 2
    result = cast(1)
    for i in range(n):
        # (alpha+beta+2)_{2n} is split two factors per step
        pair = cast(s + 2 * i) * cast(s + 2 * i + 1)
        if pair == 0:
            raise DomainError("norm denominator vanishes")
        result *= _ratio((n + a + b + 1, a + b - g + 1, a - d + 1, b + 1, 1),
                         (a + 1, b + d + 1, g + 1), i, cast) / pair
    return result


def norm_h(n: int, p: RacahParams, *, exact: bool = False):
    """Squared norm h_n(alpha, beta, gamma, delta), N-dependent prefactor included."""
    _check_range("n", n, p.N)
    cast = backend_cast(exact)
    return _norm_prefactor(p, cast) * _norm_degree_part(n, p, cast)


def _orthonormal_value(w: Fraction, h: Fraction, r: Fraction) -> float:
    if w <= 0 or h <= 0:
        raise DomainError(f"nonpositive weight/norm (w={w}, h={h})")
    return math.sqrt(w / h) * float(r)


def racah_orthonormal(n: int, x: int, p: RacahParams) -> float:
    """sqrt(w(x)/h_n) R_n(lambda(x)) as a float.

    Weight, norm and polynomial value are formed exactly and rounded once;
    float 4F3 sums lose several digits to cancellation already for N ~ 10.
    """
    return _orthonormal_value(weight(x, p, exact=True), norm_h(n, p, exact=True),
                              racah_eval(n, x, p, exact=True))


@lru_cache(maxsize=256)
def racah_table(p: RacahParams) -> tuple:
    """Rows (R~_n(0), ..., R~_n(N)) for n = 0..N."""
    N = p.N
    w = [Fraction(1)]
    for i in range(N):
        w.append(w[-1] * _weight_step(i, p, Fraction))
    pre = _norm_prefactor(p, Fraction)
    h = [pre * _norm_degree_part(n, p, Fraction) for n in range(N + 1)]
    return tuple(tuple(_orthonormal_value(w[x], h[n], racah_eval(n, x, p, exact=True))
                       for x in range(N + 1))
                 for n in range(N + 1))


def krawtchouk_symmetric(n: int, x: int, Ncap: int, *, exact: bool = False):
    """K_n(x; 1/2, Ncap) = 2F1(-n, -x; -Ncap; 2)."""
    _check_range("n", n, Ncap)
    _check_range("x", x, Ncap)
    if n == 0 or x == 0:
        return Fraction(1) if exact else 1.0
    return hyp_terminating([-n, -x], [-Ncap], 2, exact=exact)


def krawtchouk_orthonormal(n: int, x: int, Ncap: int) -> float:
    """Orthonormal p = 1/2 Krawtchouk function.

    The polynomial value is summed exactly: the alternating float sum at
    argument 2 loses all accuracy by Ncap ~ 20.
    """
    scale = binomial(Ncap, x) * binomial(Ncap, n) * 2.0 ** (-Ncap)
    return math.sqrt(scale) * float(krawtchouk_symmetric(n, x, Ncap, exact=True))


def reduction_even(n: int, q: Number, j: Number, *, exact: bool = False):
    """Both sides of the even 3F2 -> 2F1 reduction at half-integer j, q.

    Returns (left, right) with left = 3F2(-q+1/2, q+1/2, -n; 1/2, -j+1/2; 1).
    """
    q, j = as_fraction(q), as_fraction(j)
    N = int(j - Fraction(1, 2))
    left = hyp_terminating([-q + Fraction(1, 2), q + Fraction(1, 2), -n],
                           [Fraction(1, 2), -j + Fraction(1, 2)], 1, exact=exact)
    top = int(2 * j)
    cast = backend_cast(exact)
    coeff = (-1) ** n * binomial(top, 2 * n, exact=True) / binomial(N, n, exact=True)
    right = cast(coeff) * krawtchouk_symmetric(2 * n, int(j + q), top, exact=exact)
    return left, right


def reduction_odd(n: int, q: Number, j: Number, *, exact: bool = False):
    """Both sides of the odd 3F2 -> 2F1 reduction at half-integer j, q."""
    q, j = as_fraction(q), as_fraction(j)
    N = int(j - Fraction(1, 2))
    left = hyp_terminating([-q + Fraction(1, 2), q + Fraction(1, 2), -n],
                           [Fraction(3, 2), -j + Fraction(1, 2)], 1, exact=exact)
    top = int(2 * j)
    cast = backend_cast(exact)
    coeff = -(-1) ** n / (2 * q) * binomial(top, 2 * n + 1, exact=True) / binomial(N, n, exact=True)
    right = cast(coeff) * krawtchouk_symmetric(2 * n + 1, int(j + q), top, exact=exact)
    return left, right
