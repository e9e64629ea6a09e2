"""Racah-polynomial two-diagonal matrices and the c-deformed finite oscillator."""
from .doubles import (TwoDiagonalMatrix, build_M_prop1, build_M_prop2, build_M_racah_special,
                      build_U_halfinteger_j, build_U_integer_j, build_U_prop1, build_U_prop2,
                      build_U_racah_special, spectrum_exact, verify_double)
from .numerics import DomainError, HalfInteger, hyp_terminating, pochhammer
from .oscillator import (OscillatorModel, build_model, su2_limit_deviation, wavefunction_closed,
                         wavefunction_table)
from .racah import RacahParams, norm_h, racah_eval, racah_orthonormal, weight
from .spectral import charpoly_eval, eigenvalues_bisection, eigenvector_inverse_iteration

__version__ = "0.1.0"
