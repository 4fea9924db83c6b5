"""Ratios of associated Gauss hypergeometric functions and their integral representations."""

from .continuation import Bank, CutPlanePoint, cut_modulus_squared, hyp2f1, hyp2f1_boundary, hyp2f1_ode_oracle
from .errors import (
    AmbiguityError,
    ConvergenceError,
    DegenerateError,
    FitError,
    HypRatioError,
    MultiplicityError,
    NumericalError,
    ParameterError,
    PoleError,
    SingularTermError,
    ZeroSearchError,
)
from .quadrature import DOUBLE_EXPONENTIAL, GAUSS_JACOBI, Density, QuadratureConfig, cauchy_transform
from .ratio_theory import (
    RealPolynomial,
    boundary_imag,
    coefficient_B,
    derive_indices,
    effective_weight,
    pr_fit_from_boundary,
    pr_polynomial,
    select_MN,
)
from .representation import (
    RationalFunction,
    Representation,
    build_representation,
    eval_representation,
    gauss_ratio_repr,
    product_r111_r001,
    product_stieltjes2,
    ratio_010,
    ratio_derivatives_fdb,
    ratio_direct,
    ratio_taylor_coeffs,
    schwarz_reconstruct,
)
from .special_core import DEFAULT_PRECISION, Params, Precision, Shift
from .zeros import locate_zeros, pole_free_condition, residue_at_pole, residue_gauss, runckel_count

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError",
    "Bank",
    "ConvergenceError",
    "CutPlanePoint",
    "DEFAULT_PRECISION",
    "DOUBLE_EXPONENTIAL",
    "DegenerateError",
    "Density",
    "FitError",
    "GAUSS_JACOBI",
    "HypRatioError",
    "MultiplicityError",
    "NumericalError",
    "ParameterError",
    "Params",
    "PoleError",
    "Precision",
    "QuadratureConfig",
    "RationalFunction",
    "RealPolynomial",
    "Representation",
    "Shift",
    "SingularTermError",
    "ZeroSearchError",
    "boundary_imag",
    "build_representation",
    "cauchy_transform",
    "coefficient_B",
    "cut_modulus_squared",
    "derive_indices",
    "effective_weight",
    "eval_representation",
    "gauss_ratio_repr",
    "hyp2f1",
    "hyp2f1_boundary",
    "hyp2f1_ode_oracle",
    "locate_zeros",
    "pole_free_condition",
    "pr_fit_from_boundary",
    "pr_polynomial",
    "product_r111_r001",
    "product_stieltjes2",
    "ratio_010",
    "ratio_derivatives_fdb",
    "ratio_direct",
    "ratio_taylor_coeffs",
    "residue_at_pole",
    "residue_gauss",
    "runckel_count",
    "schwarz_reconstruct",
    "select_MN",
]
