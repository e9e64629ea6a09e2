"""
The ground state Phi_0(q) changes character at c = 2.

Below 2 it rises towards the edges of the grid (a cup), above 2 it falls
(a cap), and at c = 2 it is exactly flat with value 1/sqrt(2j+1).  A coarse
text plot makes the shape visible without a plotting library.
"""
from fractions import Fraction

import numpy as np

from racah_oscillator.oscillator import build_model, ground_state_shape

j = Fraction(33, 2)
for c in ("1e-6", "0.5", "1.5", "2", "4", "8", "32"):
    model = build_model(j, Fraction(c))
    phi0 = model.U[0]
    bars = "".join(" .:-=+*#%@"[int(round(9 * v / phi0.max()))] for v in phi0)
    print(f"c = {c:>5}  {ground_state_shape(model):<4}  |{bars}|")

flat = build_model(j, 2).U[0]
print(f"\nat c = 2: max|Phi_0 - 1/sqrt(34)| = {np.max(np.abs(flat - 34 ** -0.5)):.1e}")
