"""Exact arithmetic for two-parameter poly-Euler, poly-Bernoulli and
poly-Cauchy polynomial families, plus a batch verifier for the identities
connecting them."""

from .exact import (
    Rational,
    XPoly,
    binomial,
    falling_factorial,
    rational_from_str,
    rational_to_str,
    rising_factorial,
)
from .egf import EgfSeries, compose
from .pqcalc import (
    PQParams,
    pq_derivative,
    pq_integer,
    pq_integral_01_monomial,
    pq_integral_01_poly,
)
from .sequences import (
    RationalFunction,
    bernoulli_order,
    euler_poly,
    frobenius_euler,
    li_pq_closed_form,
    li_pq_ordinary_coeffs,
    lif_pq_ordinary_coeffs,
    stirling1_unsigned,
    stirling2,
    weighted_stirling1,
    weighted_stirling2,
)
from .families import (
    FamilyRequest,
    ROUTE_GF,
    ROUTE_INTEGRAL,
    ROUTE_STIRLING,
    poly_bernoulli,
    poly_cauchy_1,
    poly_cauchy_2,
    poly_euler,
    poly_euler_number,
)
from .identities import (
    IdentityCheck,
    IdentityReport,
    SuiteConfig,
    CHECK_IDS,
    run_all,
    run_check,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "XPoly",
    "binomial",
    "falling_factorial",
    "rising_factorial",
    "rational_from_str",
    "rational_to_str",
    "EgfSeries",
    "compose",
    "PQParams",
    "pq_integer",
    "pq_derivative",
    "pq_integral_01_monomial",
    "pq_integral_01_poly",
    "RationalFunction",
    "stirling2",
    "stirling1_unsigned",
    "weighted_stirling1",
    "weighted_stirling2",
    "euler_poly",
    "bernoulli_order",
    "frobenius_euler",
    "li_pq_ordinary_coeffs",
    "lif_pq_ordinary_coeffs",
    "li_pq_closed_form",
    "FamilyRequest",
    "ROUTE_GF",
    "ROUTE_STIRLING",
    "ROUTE_INTEGRAL",
    "poly_euler",
    "poly_euler_number",
    "poly_bernoulli",
    "poly_cauchy_1",
    "poly_cauchy_2",
    "IdentityCheck",
    "IdentityReport",
    "SuiteConfig",
    "CHECK_IDS",
    "run_all",
    "run_check",
    "__version__",
]
