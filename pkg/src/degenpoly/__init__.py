"""Exact arithmetic for deformed special-number triangles, the
polynomial families built on them, and the operator calculus that
connects the families.

Everything computes over the rationals (optionally with a symbolic
indeterminate), so every identity the package claims can be, and is,
checked coefficient by coefficient; see the verifier module.
"""

from .algebra import (
    EgfSeries,
    PolyX,
    Triangle,
    binomial_series,
    from_lambda_falling_basis,
    series_comp_inverse,
    series_compose,
    series_mul,
    series_pow,
    to_lambda_falling_basis,
)
from .families import (
    bell_polynomial,
    degenerate_bernoulli,
    degenerate_bernoulli2,
    degenerate_dowling,
    degenerate_poly_bell,
    degenerate_polyexp_series,
    dobinski_eval,
    dobinski_trace,
    dowling_polynomial,
    fully_degenerate_bell,
    fully_degenerate_dowling,
    partial_degenerate_bell,
)
from .kernels import (
    classical_falling,
    degenerate_exp,
    lambda_falling,
    lambda_falling_eval,
    lambda_log_series,
)
from .rationals import Q, format_rational, is_rational, parse_rational
from .triangles import (
    count_partitions,
    degenerate_stirling1,
    degenerate_stirling2,
    degenerate_whitney2,
    enumerate_colored_partitions,
    r_whitney1,
    r_whitney2,
    set_partitions,
    stirling1,
    stirling2,
)
from .umbral import (
    ShefferPair,
    apply_lambda_diff_op,
    bell_pair,
    bernoulli2_pair,
    bernoulli_pair,
    combine_basis,
    connection_coefficients,
    dowling_pair,
    expand_in_basis,
    falling_pair,
    pair_functional,
    poly_bell_pair,
    rescaled_bell_pair,
    sheffer_generate,
)
from .verifier import (
    IDENTITY_DESCRIPTIONS,
    IdentityId,
    SuiteConfig,
    VerificationReport,
    default_lambda_samples,
    lambda_degree_bound,
    run_full_suite,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "EgfSeries",
    "IDENTITY_DESCRIPTIONS",
    "IdentityId",
    "PolyX",
    "Q",
    "ShefferPair",
    "SuiteConfig",
    "Triangle",
    "VerificationReport",
    "apply_lambda_diff_op",
    "bell_pair",
    "bell_polynomial",
    "bernoulli2_pair",
    "bernoulli_pair",
    "binomial_series",
    "classical_falling",
    "combine_basis",
    "connection_coefficients",
    "count_partitions",
    "default_lambda_samples",
    "degenerate_bernoulli",
    "degenerate_bernoulli2",
    "degenerate_dowling",
    "degenerate_exp",
    "degenerate_poly_bell",
    "degenerate_polyexp_series",
    "degenerate_stirling1",
    "degenerate_stirling2",
    "degenerate_whitney2",
    "dobinski_eval",
    "dobinski_trace",
    "dowling_pair",
    "dowling_polynomial",
    "enumerate_colored_partitions",
    "expand_in_basis",
    "falling_pair",
    "format_rational",
    "from_lambda_falling_basis",
    "fully_degenerate_bell",
    "fully_degenerate_dowling",
    "is_rational",
    "lambda_degree_bound",
    "lambda_falling",
    "lambda_falling_eval",
    "lambda_log_series",
    "pair_functional",
    "parse_rational",
    "partial_degenerate_bell",
    "poly_bell_pair",
    "r_whitney1",
    "r_whitney2",
    "rescaled_bell_pair",
    "run_full_suite",
    "series_comp_inverse",
    "series_compose",
    "series_mul",
    "series_pow",
    "set_partitions",
    "sheffer_generate",
    "stirling1",
    "stirling2",
    "to_lambda_falling_basis",
    "verify",
]
