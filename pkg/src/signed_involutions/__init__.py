"""Signed (p,q)-involutions, weighted Delannoy paths and their t-analogs.

Everything is exact: counts are Python integers, polynomial coefficients are
integers, and power-series coefficients are :class:`fractions.Fraction`.
"""

from .bijection import phi, psi
from .counting import (
    CountTable,
    alpha,
    c_involutions,
    delannoy,
    gamma_aux_checks,
    gamma_closed,
    gamma_recurrence,
    k_poly,
)
from .involutions import (
    SignedInvolution,
    enumerate_signed,
    enumerate_signed_k,
    inversions,
    length,
    orbit_dimension,
    validate,
)
from .kernels import BACKEND
from .paths import (
    DelannoyPath,
    GrassmannPath,
    Step,
    WeightedDelannoyPath,
    diagonal_count,
    enumerate_delannoy,
    enumerate_grassmann,
    enumerate_weighted,
    grassmann_below,
    grassmann_dimension,
    weight,
)
from .poly import Polynomial, first_violation, unimodal
from .polynomials import (
    a_poly,
    central_trinomial,
    d_derivative_identity,
    d_poly,
    e_poly,
    e_tilde_poly,
    q_int,
    root_of_unity_congruence,
)
from .series import (
    BiSeries,
    alpha_series,
    characteristic_check,
    closed_form_series,
    compose,
    initial_condition_checks,
    pde_residual,
)

__version__ = "0.1.0"
