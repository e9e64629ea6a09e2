"""
As c grows the deformed wavefunctions approach the su(2) ones, which are
symmetric Krawtchouk functions.  The distance shrinks roughly like 1/c.
"""
from fractions import Fraction

from racah_oscillator import su2_limit_deviation

j = Fraction(33, 2)
print("c          n=0        n=1        n=2")
for c in (8, 32, 1000, 10 ** 4, 10 ** 6):
    devs = [su2_limit_deviation(j, n, c) for n in range(3)]
    print(f"{c:<10} " + " ".join(f"{v:.3e}" for v in devs))
