"""Exact rational approximants to zeta_q(1) and zeta_q(2) for q = 1/p.

Thin python layer over the C++ core: multiple little q-Jacobi polynomials,
cyclotomic normalizers, rigorous rational-interval enclosures, and the
congruence certificates behind the linear-independence verification.
All scalars cross the boundary exactly (int / fractions.Fraction).
"""

from ._qzeta import (
    ApproximantRow,
    QContext,
    QJacobiPoly,
    RationalInterval,
    build_explicit,
    build_pochhammer,
    build_rodrigues,
    build_row,
    count_roots_in_unit_interval,
    cyclotomic_coeffs,
    d_eval,
    d_growth_exponent,
    d_is_common_multiple,
    default_depth,
    eval_at_power,
    extralemma_identity,
    gauss_binomial,
    irrationality_measure_constants,
    jonathan_congruence,
    leading_coefficient,
    legendre_divisor_check,
    log_modified_moment,
    log_moment,
    modified_moment,
    pi_squared,
    power_moment,
    q_derivative,
    q_numerator_at_power,
    qpochhammer,
    r_numerator_at_power,
    remainder_integral_check,
    residual_zeta1,
    residual_zeta2,
    step1_congruence,
    step3_nondivisibility,
    sweep_csv,
    verify_orthogonality,
    verify_report_json,
    zeta_q1,
    zeta_q2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
