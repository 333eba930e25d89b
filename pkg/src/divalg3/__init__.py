"""Degree-three cyclic division algebras with a second-kind involution.

Exact-arithmetic construction of D = L ⊕ Lz ⊕ Lz² over an imaginary
quadratic center, its unitary and special unitary groups, and desk-scale
mechanical verification of their structure: membership conditions, monomial
and eigenvector classifications, order discriminants, prime splitting,
S-integral scans, and exhaustive finite-field checks of the two local
anisotropy statements.
"""

from .algebra import (
    Algebra,
    AlgElem,
    Mat3,
    algebra_validate,
    definiteness_check,
    embed,
    involution_alpha,
    involution_beta,
    matrix_involution_ext,
    reduced_norm,
    reduced_trace,
    zero_divisor_scan,
)
from .arith import (
    MaximalOrderReport,
    OrderBasis,
    PrimeClass,
    SRing,
    classify_prime,
    denominator_admissible,
    disc_basis,
    discriminant_lambda,
    maximal_order_check,
    normal_basis,
    rho_fixed_su_scan,
    s_integral,
    s_monomial_scan,
    standard_basis,
)
from .numtower import (
    CubicElem,
    QuadElem,
    SubfieldError,
    Tower,
    TowerElem,
    TowerParams,
    ValidationReport,
    derive_action,
    galois,
    is_totally_positive,
    norm_E_F,
    norm_L_E,
    norm_L_M,
    norm_M_F,
    rho,
    tau,
    tower_validate,
    trace_L_E,
    zeta3,
)
from .unitary import (
    MonomialClass,
    UnitaryWitness,
    check_unitary,
    classify_monomial,
    eigenvector_check,
    eigenvector_scan,
    eigenvector_scan_su,
    element_order,
    hilbert90_element,
    hilbert90_su_condition,
    hilbert90_su_search,
    is_in_SU,
    is_in_U,
    m_points_classify,
    m_points_predicted,
    norm_overlap_scan,
    order_two_scan_su,
    su_monomial_norm_check,
)

__version__ = "0.1.0"
