"""
The two-diagonal matrix M(d, c) changes with c, but its spectrum does not.

For a few deformation parameters we print the first off-diagonal entries,
then the eigenvalues found by Sturm bisection, which always land on
-d, -d+2, ..., d.  The rational backend then certifies the claim exactly.
"""
from fractions import Fraction

import numpy as np

from racah_oscillator import build_M_racah_special, charpoly_eval, spectrum_exact
from racah_oscillator.spectral import eigenvalues_bisection

d = 7
print(f"d = {d}: exact spectrum {spectrum_exact(d)}\n")
for c in (Fraction(1, 1000000), Fraction(1, 2), Fraction(2), Fraction(32)):
    M = build_M_racah_special(d, c)
    vals = eigenvalues_bisection(M, 1e-12)
    dev = np.max(np.abs(vals - np.array(spectrum_exact(d))))
    entries = ", ".join(f"{v:.4f}" for v in M.offdiag[:4])
    print(f"c = {float(c):<8g} M_0..M_3 = {entries}  max|lambda - exact| = {dev:.1e}")

# exact arithmetic: det(lambda I - M) vanishes at every claimed eigenvalue
M = build_M_racah_special(d, Fraction(7, 3))
values = [str(charpoly_eval(M, lam)) for lam in spectrum_exact(d)]
print(f"\nc = 7/3, characteristic polynomial at the spectrum: {', '.join(values)}")
print(f"and one step outside it, at {d + 2}: {charpoly_eval(M, d + 2)}")
