"""
Two-diagonal matrices with known spectra and their Racah eigenvector matrices.

A two-diagonal matrix is symmetric tridiagonal with zero main diagonal.  It is
stored through the squares of its off-diagonal entries, which stay rational
whenever the parameters are rational; float entries are square roots of those.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .numerics import DomainError, Number, as_fraction
from .racah import RacahParams, racah_table

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TwoDiagonalMatrix:
    """Zero-diagonal symmetric tridiagonal matrix given by squared off-diagonals."""

    squares: tuple

    def __post_init__(self):
        sq = tuple(self.squares)
        object.__setattr__(self, "squares", sq)
        for k, s in enumerate(sq):
            if not s > 0:
                raise DomainError(f"off-diagonal entry {k} has nonpositive square {s}")

    @classmethod
    def from_entries(cls, entries: Sequence[float]) -> "TwoDiagonalMatrix":
        return cls(tuple(float(e) ** 2 for e in entries))

    @property
    def dim(self) -> int:
        return len(self.squares) + 1

    @property
    def offdiag(self) -> np.ndarray:
        return np.sqrt(np.array([float(s) for s in self.squares], dtype=float))

    def to_dense(self) -> np.ndarray:
        e = self.offdiag
        return np.diag(e, 1) + np.diag(e, -1)


def _two_sqrt_sq(num: Fraction, den: Fraction, k: int) -> Fraction:
    """Square of 2*sqrt(num/den), checking the radicand."""
    if den == 0:
        raise DomainError(f"entry {k}: zero denominator")
    rad = num / den
    if rad <= 0:
        raise DomainError(f"entry {k}: radicand {rad} is not positive; parameters outside window")
    return 4 * rad


def _check_gamma_delta(gamma, delta):
    if not (gamma > -1 and delta > -1):
        raise DomainError("need gamma, delta > -1")


def build_M_prop1(N: int, beta: Number, gamma: Number, delta: Number) -> TwoDiagonalMatrix:
    """(2N+2)-dimensional matrix of the even-dimensional Racah double."""
    b, g, d = map(as_fraction, (beta, gamma, delta))
    _check_gamma_delta(g, d)
    if not (b > N + g or b < -N - d - 1):
        raise DomainError(f"beta={b} outside window for N={N}, gamma={g}, delta={d}")
    squares = []
    for k in range(N + 1):
        if k == 0:
            # common factor (N - beta) cancelled
            squares.append(_two_sqrt_sq((g + 1) * (N + d + 1) * (b + 1), b + 1 - N, 0))
        else:
            squares.append(_two_sqrt_sq((N - b - k) * (g + 1 + k) * (N + d + 1 - k) * (k + b + 1),
                                        (N - b - 2 * k) * (2 * k - N + 1 + b), 2 * k))
        if k < N:
            squares.append(_two_sqrt_sq((g + N - b - k) * (k + 1) * (N - k) * (k + d + b + 2),
                                        (N - b - 2 * k - 2) * (2 * k - N + 1 + b), 2 * k + 1))
    return TwoDiagonalMatrix(tuple(squares))


def build_M_prop2(N: int, beta: Number, gamma: Number, delta: Number) -> TwoDiagonalMatrix:
    """(2N+1)-dimensional matrix of the odd-dimensional Racah double."""
    b, g, d = map(as_fraction, (beta, gamma, delta))
    _check_gamma_delta(g, d)
    if N < 1:
        raise DomainError("N must be >= 1")
    if not (b > N + g or b < -N - d):
        raise DomainError(f"beta={b} outside window for N={N}, gamma={g}, delta={d}")
    squares = []
    for k in range(N):
        if k == 0:
            # common factor (beta - N) cancelled against (N - beta)
            squares.append(_two_sqrt_sq((g + 1) * N * (b + d + 1), b + 1 - N, 0))
        else:
            squares.append(_two_sqrt_sq((g + k + 1) * (-N + b + k) * (N - k) * (k + d + b + 1),
                                        (N - b - 2 * k) * (N - b - 2 * k - 1), 2 * k))
        squares.append(_two_sqrt_sq((g + N - b - k) * (k + 1) * (k + b + 1) * (k - d - N),
                                    (N - b - 2 * k - 2) * (N - b - 2 * k - 1), 2 * k + 1))
    return TwoDiagonalMatrix(tuple(squares))


def build_M_racah_special(d: int, c: Number) -> TwoDiagonalMatrix:
    """(d+1)-dimensional matrix with spectrum -d, -d+2, ..., d for every c > 0.

    M_k^2 = (k+1)(d-k)(k-1+c)(k+d+c) / ((2k-1+c)(2k+1+c)), with the factor
    (c-1) cancelled at k = 0 so that M_0^2 = d(d+c)/(c+1).
    """
    c = as_fraction(c)
    if not c > 0:
        raise DomainError("c must be > 0")
    if d < 1:
        raise DomainError("d must be >= 1")
    squares = [Fraction(d) * (d + c) / (c + 1)]
    for k in range(1, d):
        squares.append((k + 1) * (d - k) * (k - 1 + c) * (k + d + c)
                       / ((2 * k - 1 + c) * (2 * k + 1 + c)))
    return TwoDiagonalMatrix(tuple(squares))


def su2_matrix(d: int) -> TwoDiagonalMatrix:
    """The c -> infinity limit: entries mu_k = sqrt((k+1)(d-k))."""
    return TwoDiagonalMatrix(tuple(Fraction((k + 1) * (d - k)) for k in range(d)))


def spectrum_exact(d: int) -> tuple:
    """The integers -d, -d+2, ..., d."""
    if d < 1:
        raise DomainError("d must be >= 1")
    return tuple(range(-d, d + 1, 2))


def spectrum_prop1(N: int, gamma: Number, delta: Number) -> np.ndarray:
    """Ascending eigenvalues (-e_N..-e_0, e_0..e_N), e_k = 2 sqrt((k+gamma+1)(k+delta+1))."""
    g, d = float(as_fraction(gamma)), float(as_fraction(delta))
    eps = [2 * math.sqrt((k + g + 1) * (k + d + 1)) for k in range(N + 1)]
    return np.array([-e for e in reversed(eps)] + eps)


def spectrum_prop2(N: int, gamma: Number, delta: Number) -> np.ndarray:
    """Ascending eigenvalues (-e_N..-e_1, 0, e_1..e_N), e_k = 2 sqrt(k(k+gamma+delta+1))."""
    s = float(as_fraction(gamma) + as_fraction(delta) + 1)
    eps = [2 * math.sqrt(k * (k + s)) for k in range(1, N + 1)]
    return np.array([-e for e in reversed(eps)] + [0.0] + eps)


def build_U_prop1(N: int, beta: Number, gamma: Number, delta: Number) -> np.ndarray:
    """Eigenvector matrix of ``build_M_prop1``; rows are levels, columns eigenvalues."""
    b, g, d = map(as_fraction, (beta, gamma, delta))
    alpha = -N - 1
    even = racah_table(RacahParams(alpha, b, g, d + 1))
    odd = racah_table(RacahParams(alpha, b + 1, g + 1, d))
    U = np.zeros((2 * N + 2, 2 * N + 2))
    r2 = math.sqrt(2.0)
    for n in range(N + 1):
        sign = (-1) ** n
        for x in range(N + 1):
            U[2 * n, N - x] = U[2 * n, N + x + 1] = sign * even[n][x] / r2
            U[2 * n + 1, N - x] = -sign * odd[n][x] / r2
            U[2 * n + 1, N + x + 1] = sign * odd[n][x] / r2
    return U


def build_U_prop2(N: int, beta: Number, gamma: Number, delta: Number) -> np.ndarray:
    """Eigenvector matrix of ``build_M_prop2``."""
    b, g, d = map(as_fraction, (beta, gamma, delta))
    even = racah_table(RacahParams(-N - 1, b, g, d, check_window=False))
    odd = racah_table(RacahParams(-N, b, g + 1, d + 1, check_window=False))
    U = np.zeros((2 * N + 1, 2 * N + 1))
    r2 = math.sqrt(2.0)
    for n in range(N + 1):
        sign = (-1) ** n
        U[2 * n, N] = sign * even[n][0]
        for x in range(1, N + 1):
            U[2 * n, N - x] = U[2 * n, N + x] = sign * even[n][x] / r2
    for n in range(N):
        sign = (-1) ** n
        for x in range(N):
            U[2 * n + 1, N - x - 1] = -sign * odd[n][x] / r2
            U[2 * n + 1, N + x + 1] = sign * odd[n][x] / r2
    return U


def build_U_halfinteger_j(N: int, c: Number) -> np.ndarray:
    """Eigenvectors for d = 2N + 1 (j = N + 1/2)."""
    c = as_fraction(c)
    if not c > 0:
        raise DomainError("c must be > 0")
    return build_U_prop1(N, N - HALF + c / 2, -HALF, -HALF)


def build_U_integer_j(j: int, c: Number) -> np.ndarray:
    """Eigenvectors for d = 2j (integer j >= 1)."""
    c = as_fraction(c)
    if not c > 0:
        raise DomainError("c must be > 0")
    return build_U_prop2(j, j - HALF + c / 2, -HALF, -HALF)


def build_U_racah_special(d: int, c: Number) -> np.ndarray:
    """Eigenvector matrix paired with ``build_M_racah_special(d, c)``."""
    if d < 1:
        raise DomainError("d must be >= 1")
    if d % 2:
        return build_U_halfinteger_j((d - 1) // 2, c)
    return build_U_integer_j(d // 2, c)


class DoubleResidual(NamedTuple):
    eigen: float
    orthogonality: float


def verify_double(M: TwoDiagonalMatrix, U: np.ndarray, D: Sequence[float]) -> DoubleResidual:
    """Return (max|MU - UD|, max|U^T U - I|)."""
    U = np.asarray(U, dtype=float)
    D = np.asarray(D, dtype=float)
    if U.shape != (M.dim, M.dim) or D.shape != (M.dim,):
        raise ValueError(f"shape mismatch: M is {M.dim}x{M.dim}, U {U.shape}, D {D.shape}")
    A = M.to_dense()
    eig = np.max(np.abs(A @ U - U * D[None, :]))
    orth = np.max(np.abs(U.T @ U - np.eye(M.dim)))
    return DoubleResidual(float(eig), float(orth))
