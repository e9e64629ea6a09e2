"""
Independent eigen-oracle for two-diagonal matrices.

Sturm-sequence bisection for eigenvalues, shifted inverse iteration for
eigenvectors and the three-term recurrence for the characteristic
polynomial.  Nothing here touches the Racah machinery.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from .doubles import TwoDiagonalMatrix


class ConvergenceError(RuntimeError):
    pass


def charpoly_sequence(T: TwoDiagonalMatrix, lam) -> list:
    """Leading principal minors p_0..p_dim of det(lam I - T).

    Exact when ``lam`` and the stored squares are rational.
    """
    if isinstance(lam, float):
        squares = [float(s) for s in T.squares]
    else:
        squares = T.squares
    seq = [lam - lam + 1, lam]
    for s in squares:
        seq.append(lam * seq[-1] - s * seq[-2])
    return seq


def charpoly_eval(T: TwoDiagonalMatrix, lam):
    """det(lam I - T) via p_k = lam p_{k-1} - M_{k-2}^2 p_{k-2}."""
    if isinstance(lam, int):
        lam = Fraction(lam)
    return charpoly_sequence(T, lam)[-1]


def sturm_count(T: TwoDiagonalMatrix, x) -> np.ndarray:
    """Number of eigenvalues strictly below each probe in ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    squares = np.array([float(s) for s in T.squares])
    # small-pivot floor keeps s / q finite
    pivmin = np.finfo(float).tiny * max(1.0, float(squares.max(initial=0.0)))
    # pivots of the LDL^T factorisation of T - x I
    q = np.where(np.abs(x) < pivmin, pivmin, -x)
    count = (q < 0).astype(int)
    for s in squares:
        q = -x - s / q
        q = np.where(np.abs(q) < pivmin, pivmin, q)
        count += q < 0
    return count


def gershgorin_bound(T: TwoDiagonalMatrix) -> float:
    if T.dim == 1:
        return 1.0
    return 2.0 * float(np.max(T.offdiag))


def eigenvalues_bisection(T: TwoDiagonalMatrix, tol: float = 1e-12,
                          max_iter: int = 200) -> np.ndarray:
    """All eigenvalues in ascending order, each bracketed to width < tol."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    if T.dim == 1:
        return np.zeros(1)
    bound = gershgorin_bound(T)
    index = np.arange(T.dim)
    lo = np.full(T.dim, -bound)
    hi = np.full(T.dim, bound)
    for _ in range(max_iter):
        if np.max(hi - lo) < tol:
            break
        mid = 0.5 * (lo + hi)
        above = sturm_count(T, mid) > index
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return 0.5 * (lo + hi)


def fix_sign(v: np.ndarray, rtol: float = 1e-12) -> np.ndarray:
    """Flip v so that its first non-negligible component is positive."""
    big = np.abs(v) > rtol * np.max(np.abs(v))
    first = int(np.argmax(big))
    return -v if v[first] < 0 else v


def eigenvector_inverse_iteration(T: TwoDiagonalMatrix, lam: float,
                                  max_iter: int = 20) -> np.ndarray:
    """Unit eigenvector for the (simple) eigenvalue near ``lam``."""
    n = T.dim
    if n == 1:
        return np.ones(1)
    e = T.offdiag
    norm = float(np.max(np.abs(T.to_dense()).sum(axis=1)))
    target = 1e-10 * norm
    A = T.to_dense()
    # deterministic start vector with no special symmetry
    v = 1.0 + np.arange(n) / (3.0 * n)
    v /= np.linalg.norm(v)
    shift = lam + 4 * np.finfo(float).eps * max(norm, 1.0)
    ab = np.zeros((3, n))
    ab[0, 1:] = e
    ab[2, :-1] = e
    ab[1, :] = -shift
    for _ in range(max_iter):
        try:
            w = solve_banded((1, 1), ab, v)
        except (LinAlgError, ValueError):
            shift += 1e-13 * max(norm, 1.0)
            ab[1, :] = -shift
            continue
        v = w / np.linalg.norm(w)
        if np.max(np.abs(A @ v - lam * v)) <= target:
            return fix_sign(v)
    raise ConvergenceError(f"inverse iteration did not converge at lambda={lam}")


def eigen_decomposition(T: TwoDiagonalMatrix, tol: float = 1e-12):
    """(eigenvalues, eigenvectors as columns) from bisection + inverse iteration."""
    vals = eigenvalues_bisection(T, tol)
    vecs = np.column_stack([eigenvector_inverse_iteration(T, lam) for lam in vals])
    return vals, vecs


def orthogonality_residual(U) -> float:
    """max |U^T U - I|."""
    U = np.asarray(U, dtype=float)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValueError("U must be square")
    return float(np.max(np.abs(U.T @ U - np.eye(U.shape[0]))))
