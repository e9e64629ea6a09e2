"""
Finite oscillator model deformed by a parameter c > 0.

In dimension 2j+1 the Hamiltonian is diag(1/2, 3/2, ..., 2j+1/2), the
position operator is M/2 with M = ``build_M_racah_special(2j, c)``, and the
momentum operator has the same off-diagonal magnitudes with entries
-i M_k/2 above and +i M_k/2 below the diagonal.  Position wavefunctions are
the entries Phi_n(q) = U[n, j+q] of the analytic eigenvector matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .doubles import TwoDiagonalMatrix, build_M_racah_special, build_U_racah_special
from .numerics import DomainError, HalfInteger, Number, as_fraction, half_integer_grid, hyp_terminating
from .racah import RacahParams, krawtchouk_orthonormal, norm_h, weight
from .spectral import eigenvalues_bisection

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class OscillatorModel:
    j: HalfInteger
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "j", HalfInteger.of(self.j))
        object.__setattr__(self, "c", as_fraction(self.c))
        if self.j.twice < 1:
            raise DomainError("j must be >= 1/2")
        if not self.c > 0:
            raise DomainError("c must be > 0")

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    @property
    def grid(self) -> list:
        return half_integer_grid(self.j)

    @cached_property
    def M(self) -> TwoDiagonalMatrix:
        return build_M_racah_special(self.j.twice, self.c)

    @cached_property
    def H(self) -> np.ndarray:
        return np.diag(np.arange(self.dim) + 0.5)

    @cached_property
    def Q(self) -> np.ndarray:
        return 0.5 * self.M.to_dense()

    @cached_property
    def P(self) -> np.ndarray:
        e = 0.5 * self.M.offdiag
        return 1j * (np.diag(e, -1) - np.diag(e, 1))

    @cached_property
    def U(self) -> np.ndarray:
        U = build_U_racah_special(self.j.twice, self.c)
        U.setflags(write=False)
        return U

    def column(self, q) -> int:
        q = HalfInteger.of(q)
        idx = (self.j + q).twice
        if idx % 2 or not 0 <= idx // 2 < self.dim:
            raise DomainError(f"q={q} is not on the grid -{self.j}..{self.j}")
        return idx // 2


def build_model(j, c: Number) -> OscillatorModel:
    return OscillatorModel(HalfInteger.of(j), as_fraction(c))


def commutator_with_H(model: OscillatorModel, X: np.ndarray) -> np.ndarray:
    """[H, X] using (h_a - h_b) X_ab; the level gaps are exact integers."""
    h = np.diag(model.H)
    return (h[:, None] - h[None, :]) * X


def hamilton_lie_residuals(model: OscillatorModel) -> tuple:
    """(max|[H,Q] + iP|, max|[H,P] - iQ|)."""
    r1 = np.max(np.abs(commutator_with_H(model, model.Q) + 1j * model.P))
    r2 = np.max(np.abs(commutator_with_H(model, model.P) - 1j * model.Q))
    return float(r1), float(r2)


def position_spectrum(model: OscillatorModel) -> list:
    """The exact position eigenvalues -j, ..., j."""
    return model.grid


def position_spectrum_oracle(model: OscillatorModel, tol: float = 1e-12) -> np.ndarray:
    return 0.5 * eigenvalues_bisection(model.M, tol)


def momentum_spectrum_oracle(model: OscillatorModel, tol: float = 1e-12) -> np.ndarray:
    # i/2 times a real antisymmetric tridiagonal is unitarily similar (by a
    # diagonal phase matrix) to the real symmetric one with |entries|
    mags = np.abs(np.diag(model.P, 1))
    return eigenvalues_bisection(TwoDiagonalMatrix.from_entries(mags), tol)


def position_eigenvector(model: OscillatorModel, q) -> np.ndarray:
    """|q) in the energy basis: column j+q of U."""
    return np.array(model.U[:, model.column(q)])


def _even_family(j: Fraction, c: Fraction) -> RacahParams:
    return RacahParams(-j - HALF, j - 1 + c / 2, -HALF, HALF)


@lru_cache(maxsize=64)
def _even_weights_norms(j: Fraction, c: Fraction) -> tuple:
    p = _even_family(j, c)
    w = tuple(weight(x, p, exact=True) for x in range(p.N + 1))
    h = tuple(norm_h(n, p, exact=True) for n in range(p.N + 1))
    return w, h


def W_factor(n: int, q, j, c) -> Fraction:
    """W(n, q; c, j) = w(|q|-1/2)/h_n for the even family, exactly."""
    q, j, c = (as_fraction(v) for v in (q, j, c))
    w, h = _even_weights_norms(j, c)
    x = int(abs(q) - HALF)
    if not 0 <= n < len(h) or not 0 <= x < len(w):
        raise DomainError(f"W({n}, {q}) is outside the grid for j={j}")
    return w[x] / h[n]


def odd_prefactor(n: int, j, c) -> Fraction:
    """(4n+c+1)(2n+c-1)(2n+1) / ((4n+c-1)(2n+c+2j)(j-n)), exact."""
    j, c = as_fraction(j), as_fraction(c)
    if n == 0:
        # (c-1)/(c-1) cancelled
        return (c + 1) / ((c + 2 * j) * j)
    return ((4 * n + c + 1) * (2 * n + c - 1) * (2 * n + 1)
            / ((4 * n + c - 1) * (2 * n + c + 2 * j) * (j - n)))


def wavefunction_closed(n: int, q, model: OscillatorModel) -> float:
    """Phi_n(q) from the explicit 4F3 expressions (half-integer j only)."""
    if model.j.is_integer:
        raise DomainError("closed-form wavefunctions are implemented for half-integer j only")
    if not 0 <= n < model.dim:
        raise DomainError(f"level n={n} outside 0..{model.dim - 1}")
    model.column(q)
    j, c, qf = model.j.to_fraction(), model.c, HalfInteger.of(q).to_fraction()
    m, odd = divmod(n, 2)
    sign = (-1) ** m
    W = W_factor(m, qf, j, c)
    if not odd:
        series = hyp_terminating([-qf + HALF, qf + HALF, -m, m + (c - 1) / 2],
                                 [HALF, j + (c + 1) / 2, -j + HALF], 1, exact=True)
        return sign * math.sqrt(W / 2) * float(series)
    series = hyp_terminating([-qf + HALF, qf + HALF, -m, m + (c + 1) / 2],
                             [Fraction(3, 2), j + (c + 1) / 2, -j + HALF], 1, exact=True)
    return sign * math.sqrt(odd_prefactor(m, j, c) * W) * float(qf * series)


@dataclass(frozen=True)
class WavefunctionTable:
    """Phi_n(q) for the requested levels (rows) over q = -j..j (columns)."""

    j: HalfInteger
    c: Fraction
    levels: tuple
    grid: tuple
    values: np.ndarray

    def row(self, n: int) -> np.ndarray:
        return self.values[self.levels.index(n)]

    def parity_residual(self) -> float:
        worst = 0.0
        for n, row in zip(self.levels, self.values):
            mirror = row[::-1]
            worst = max(worst, np.max(np.abs(row - mirror if n % 2 == 0 else row + mirror)))
        return float(worst)

    def row_orthonormality_residual(self) -> float:
        G = self.values @ self.values.T
        return float(np.max(np.abs(G - np.eye(len(self.levels)))))

    def completeness_residual(self) -> float:
        """max|sum_n Phi_n(q) Phi_n(q') - delta|; meaningful only for all levels."""
        G = self.values.T @ self.values
        return float(np.max(np.abs(G - np.eye(len(self.grid)))))


def wavefunction_table(model: OscillatorModel, levels: Sequence[int] | None = None,
                       parity_tol: float = 1e-10) -> WavefunctionTable:
    if levels is None:
        levels = range(model.dim)
    levels = tuple(int(n) for n in levels)
    for n in levels:
        if not 0 <= n < model.dim:
            raise DomainError(f"level n={n} outside 0..{model.dim - 1}")
    values = np.array(model.U[list(levels), :])
    table = WavefunctionTable(model.j, model.c, levels, tuple(model.grid), values)
    if table.parity_residual() > parity_tol:
        raise RuntimeError(f"parity violated: {table.parity_residual():.3g}")
    return table


def su2_limit_deviation(j, n: int, c: Number) -> float:
    """min over signs s of max_q |Phi_n(q) - s K~_n(j+q)| (Krawtchouk reference)."""
    model = build_model(j, c)
    d = model.j.twice
    phi = model.U[n]
    kraw = np.array([krawtchouk_orthonormal(n, x, d) for x in range(d + 1)])
    return float(min(np.max(np.abs(phi - kraw)), np.max(np.abs(phi + kraw))))


def ground_state_shape(model: OscillatorModel, tol: float = 1e-12) -> str:
    """'cup' if Phi_0 is larger at the edge than near the centre, 'cap' if smaller, else 'flat'."""
    phi0 = model.U[0]
    edge = phi0[-1]
    centre = phi0[model.dim // 2]
    if abs(edge - centre) <= tol:
        return "flat"
    return "cup" if edge > centre else "cap"
