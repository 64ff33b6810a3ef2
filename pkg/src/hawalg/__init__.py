"""Exact construction and verification of the Heun-Askey-Wilson algebra in its q-difference realization."""

__version__ = "0.1.0"

from .arith import (  # noqa: E402
    LaurentPoly,
    Polynomial,
    RationalFunction,
    XPolynomial,
    laurent_to_x,
    rf_eval_shift,
    rf_reduce,
    x_to_laurent,
)
from .errors import DegenerateParametersError, HawError, InvalidInputError, NotInImageError  # noqa: E402
from .shiftop import ShiftOperator, op_apply, op_combine, op_compose, op_is_scalar, op_is_zero  # noqa: E402
from .relations import (  # noqa: E402
    Expr,
    FitResult,
    RelationTemplate,
    eval_template,
    fit_coefficients,
    verify_identity,
)
from .operators import (  # noqa: E402
    BasisFamily,
    ParameterSet,
    build_P_basis,
    build_W_algebraic,
    build_W_from_Q,
    build_X,
    build_Y,
    build_phi_basis,
    closed_form_sequences,
    heun_tridiagonal_coeffs,
)
from .structure import (  # noqa: E402
    AWConstants,
    HAWConstants,
    build_omega_AW,
    build_omega_HAW,
    jacobi_constraint_check,
)
from .appendix import appendixA_constants  # noqa: E402
from .presentation import presentation_constants  # noqa: E402
from .canonical import canonical_transform  # noqa: E402
from .raising import fit_degree_raising_family  # noqa: E402
from .suite import run_suite, sample_parameters  # noqa: E402
