"""Exact double affine Hecke algebra representations of higher rank
and their Macdonald polynomials."""

from .field import (
    Scalar,
    scalar_add,
    scalar_mul,
    scalar_inv,
    scalar_eq,
    shift_params,
    render_scalar,
    scalar_to_json,
    scalar_from_json,
)
from .laurent import (
    LaurentPoly,
    poly_add,
    poly_mul,
    poly_scalar_mul,
    swap_vars,
    xi,
    multidegree,
    is_positive,
    coefficient_of_group1,
    prepend_zero_rows,
    attach_group1,
    render_poly,
    poly_to_json,
    poly_from_json,
)
from .affine import (
    PI,
    act,
    act_gen,
    bruhat_less,
    coset_word,
    bar,
    omega_normalize,
    gamma_sigma,
)
from .rep import (
    RepContext,
    apply_T,
    apply_T_inv,
    apply_X,
    apply_X_inv,
    apply_pi,
    apply_pi_tilde,
    apply_Y,
    apply_theta,
    symmetrize_eps,
    apply_Delta_n,
    parse_operator_expr,
    apply_operator_expr,
    component_basis,
    matrix_of,
    verify_daha_relations,
)
from .nonsym import (
    MacdonaldRecord,
    E,
    weight_of,
    kappa,
    shift_factor,
    eigen_oracle_Y,
    eigen_oracle_theta,
    knop_sahi_check,
    verify_triangular,
)
from .symmetric import (
    SymMacdonaldRecord,
    is_orbit_index,
    enumerate_orbit_indices,
    delta_eigenvalue,
    P,
    verify_spectrum,
    paper_normalization,
)
from .stability import (
    StableIndex,
    StableFamily,
    iota,
    project,
    verify_quotient_relations,
    verify_P_stability,
    stable_family,
    remark_eigenvalue,
)

__version__ = "0.1.0"
