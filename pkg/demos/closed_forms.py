"""
Two routes to the same wavefunction.

Phi_n(q) can be read off a column of the analytic eigenvector matrix U, or
evaluated from the explicit hypergeometric expressions for half-integer j.
Both are built here for j = 7/2 and compared; parity shows up along the way.
"""
from fractions import Fraction

import numpy as np

from racah_oscillator import build_model, wavefunction_closed

model = build_model(Fraction(7, 2), Fraction(1, 2))
closed = np.array([[wavefunction_closed(n, q, model) for q in model.grid]
                   for n in range(model.dim)])
print("q     " + " ".join(f"{str(q):>7}" for q in model.grid))
for n, row in enumerate(closed):
    print(f"n={n}   " + " ".join(f"{v:7.4f}" for v in row))
print(f"\nmax|closed - U| = {np.max(np.abs(closed - model.U)):.1e}")
even = np.max(np.abs(closed[0::2] - closed[0::2, ::-1]))
odd = np.max(np.abs(closed[1::2] + closed[1::2, ::-1]))
print(f"even rows symmetric to {even:.1e}, odd rows antisymmetric to {odd:.1e}")
