"""The two-parameter poly-Euler, poly-Bernoulli and poly-Cauchy families.

Each family value is an XPoly in x, exact for any integer k and any valid
parameter pair.  poly_euler has a single generating-function construction.
poly_bernoulli has two independent routes and each poly-Cauchy kind has
three; route agreement is a checked property, never an assumption, so the
routes deliberately share no intermediate results beyond the ingredient
sequences they cite.

Routes:
  gf                    coefficient extraction from the defining EGF
  stirling_closed_form  finite sums over weighted Stirling numbers
  integral_expansion    falling-factorial expansion under the iterated
                        deformed integral, poly-Cauchy only, needs k >= 1

All values are cached; callers may request the same (n, k, params) grid
repeatedly without recomputation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import sequences
from .egf import EgfSeries, compose
from .exact import XPoly, falling_factorial, rising_factorial
from .pqcalc import PQParams, pq_integer

ROUTE_GF = "gf"
ROUTE_STIRLING = "stirling_closed_form"
ROUTE_INTEGRAL = "integral_expansion"

FAMILY_POLY_EULER = "poly_euler"
FAMILY_POLY_BERNOULLI = "poly_bernoulli"
FAMILY_POLY_CAUCHY_1 = "poly_cauchy_1"
FAMILY_POLY_CAUCHY_2 = "poly_cauchy_2"

ROUTES_BY_FAMILY = {
    FAMILY_POLY_EULER: (ROUTE_GF,),
    FAMILY_POLY_BERNOULLI: (ROUTE_GF, ROUTE_STIRLING),
    FAMILY_POLY_CAUCHY_1: (ROUTE_GF, ROUTE_STIRLING, ROUTE_INTEGRAL),
    FAMILY_POLY_CAUCHY_2: (ROUTE_GF, ROUTE_STIRLING, ROUTE_INTEGRAL),
}


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")


# ---------------------------------------------------------------------------
# poly-Euler


@lru_cache(maxsize=None)
def euler_base_series(k: int, params: PQParams, order: int) -> EgfSeries:
    """EGF of 2 Li_k(1 - e^(-t)) / (1 + e^t), the x = 0 column."""
    outer = sequences.li_pq_ordinary_coeffs(k, params, order)
    li_part = compose(outer, sequences.one_minus_exp_neg_series(order))
    denom = EgfSeries([2] + [1] * order)  # e^t + 1
    return li_part.mul(denom.reciprocal()).scale(Fraction(2))


@lru_cache(maxsize=None)
def poly_euler(n: int, k: int, params: PQParams) -> XPoly:
    """Poly-Euler polynomial, Appell over the base series with e^(xt)."""
    _check_n(n)
    base = euler_base_series(k, params, n)
    return XPoly(
        [math.comb(n, j) * base.coeff(n - j) for j in range(n + 1)]
    )


def poly_euler_number(n: int, k: int, params: PQParams) -> Fraction:
    """The constant term, i.e. the poly-Euler number."""
    _check_n(n)
    return euler_base_series(k, params, n).coeff(n)


# ---------------------------------------------------------------------------
# poly-Bernoulli


@lru_cache(maxsize=None)
def bernoulli_base_series(k: int, params: PQParams, order: int) -> EgfSeries:
    """EGF of Li_k(1 - e^(-t)) / (1 - e^(-t)), the x = 0 column.

    The quotient has a removable singularity; dividing the ordinary series
    of Li_k by its argument is an index shift of the coefficients, so the
    composition below is already the full quotient.
    """
    shifted = sequences.li_pq_ordinary_coeffs(k, params, order + 1)[1:]
    return compose(shifted, sequences.one_minus_exp_neg_series(order))


@lru_cache(maxsize=None)
def bernoulli_via_gf(n: int, k: int, params: PQParams) -> XPoly:
    base = bernoulli_base_series(k, params, n)
    # e^(-xt) factor: coefficient of x^j carries (-1)^j
    return XPoly(
        [
            (-1) ** j * math.comb(n, j) * base.coeff(n - j)
            for j in range(n + 1)
        ]
    )


@lru_cache(maxsize=None)
def bernoulli_via_weighted_stirling(n: int, k: int, params: PQParams) -> XPoly:
    total = XPoly.zero()
    for m in range(n + 1):
        weight = (
            Fraction((-1) ** (n + m) * math.factorial(m))
            * pq_integer(m + 1, params) ** (-k)
        )
        total = total + weight * sequences.weighted_stirling2(n, m)
    return total


def poly_bernoulli(
    n: int, k: int, params: PQParams, route: str = ROUTE_GF
) -> XPoly:
    _check_n(n)
    if route == ROUTE_GF:
        return bernoulli_via_gf(n, k, params)
    if route == ROUTE_STIRLING:
        return bernoulli_via_weighted_stirling(n, k, params)
    raise ValueError(f"poly_bernoulli has no route {route!r}")


# ---------------------------------------------------------------------------
# poly-Cauchy, first kind


@lru_cache(maxsize=None)
def cauchy1_via_gf(n: int, k: int, params: PQParams) -> XPoly:
    """Coefficient n of Lif_k(ln(1+t)) (1+t)^(-x)."""
    _check_n(n)
    outer = sequences.lif_pq_ordinary_coeffs(k, params, n)
    lif_part = compose(outer, sequences.log1p_series(n))
    binom_part = EgfSeries(
        [(-1) ** j * rising_factorial(j) for j in range(n + 1)]
    )
    return lif_part.mul(binom_part).coeff(n)


@lru_cache(maxsize=None)
def cauchy1_via_weighted_stirling(n: int, k: int, params: PQParams) -> XPoly:
    _check_n(n)
    total = XPoly.zero()
    for m in range(n + 1):
        weight = Fraction((-1) ** (n - m)) * pq_integer(m + 1, params) ** (-k)
        total = total + weight * sequences.weighted_stirling1(n, m)
    return total


@lru_cache(maxsize=None)
def cauchy1_via_integral_expansion(n: int, k: int, params: PQParams) -> XPoly:
    """Expand (t_1...t_k - x)_n and integrate each monomial exactly."""
    _check_n(n)
    if k < 1:
        raise ValueError("integral_expansion route requires k >= 1")
    coeffs = []
    for l in range(n + 1):
        acc = Fraction(0)
        for m in range(l, n + 1):
            acc += (
                (-1) ** (n - m)
                * sequences.stirling1_unsigned(n, m)
                * math.comb(m, l)
                * pq_integer(m - l + 1, params) ** (-k)
            )
        coeffs.append((-1) ** l * acc)
    return XPoly(coeffs)


def poly_cauchy_1(
    n: int, k: int, params: PQParams, route: str = ROUTE_GF
) -> XPoly:
    _check_n(n)
    if route == ROUTE_GF:
        return cauchy1_via_gf(n, k, params)
    if route == ROUTE_STIRLING:
        return cauchy1_via_weighted_stirling(n, k, params)
    if route == ROUTE_INTEGRAL:
        return cauchy1_via_integral_expansion(n, k, params)
    raise ValueError(f"poly_cauchy_1 has no route {route!r}")


# ---------------------------------------------------------------------------
# poly-Cauchy, second kind


@lru_cache(maxsize=None)
def cauchy2_via_gf(n: int, k: int, params: PQParams) -> XPoly:
    """Coefficient n of (1+t)^x Lif_k(-ln(1+t))."""
    _check_n(n)
    outer = sequences.lif_pq_ordinary_coeffs(k, params, n)
    lif_part = compose(outer, sequences.log1p_series(n).scale(Fraction(-1)))
    binom_part = EgfSeries([falling_factorial(j) for j in range(n + 1)])
    return lif_part.mul(binom_part).coeff(n)


@lru_cache(maxsize=None)
def cauchy2_via_weighted_stirling(n: int, k: int, params: PQParams) -> XPoly:
    _check_n(n)
    minus_x = XPoly((0, -1))
    total = XPoly.zero()
    for m in range(n + 1):
        weight = pq_integer(m + 1, params) ** (-k)
        total = total + weight * sequences.weighted_stirling1(n, m)(minus_x)
    return Fraction((-1) ** n) * total


@lru_cache(maxsize=None)
def cauchy2_via_integral_expansion(n: int, k: int, params: PQParams) -> XPoly:
    """Expand (x - t_1...t_k)_n and integrate each monomial exactly."""
    _check_n(n)
    if k < 1:
        raise ValueError("integral_expansion route requires k >= 1")
    coeffs = []
    for l in range(n + 1):
        acc = Fraction(0)
        for m in range(l, n + 1):
            acc += (
                sequences.stirling1_unsigned(n, m)
                * math.comb(m, l)
                * pq_integer(m - l + 1, params) ** (-k)
            )
        coeffs.append((-1) ** (n + l) * acc)
    return XPoly(coeffs)


def poly_cauchy_2(
    n: int, k: int, params: PQParams, route: str = ROUTE_GF
) -> XPoly:
    _check_n(n)
    if route == ROUTE_GF:
        return cauchy2_via_gf(n, k, params)
    if route == ROUTE_STIRLING:
        return cauchy2_via_weighted_stirling(n, k, params)
    if route == ROUTE_INTEGRAL:
        return cauchy2_via_integral_expansion(n, k, params)
    raise ValueError(f"poly_cauchy_2 has no route {route!r}")


# ---------------------------------------------------------------------------
# request plumbing shared by the CLI and the verification suite

_COMPUTE = {
    FAMILY_POLY_EULER: lambda n, k, params, route: poly_euler(n, k, params),
    FAMILY_POLY_BERNOULLI: poly_bernoulli,
    FAMILY_POLY_CAUCHY_1: poly_cauchy_1,
    FAMILY_POLY_CAUCHY_2: poly_cauchy_2,
}


@dataclass(frozen=True)
class FamilyRequest:
    """One family evaluation, validated on construction."""

    family: str
    n: int
    k: int
    params: PQParams
    route: str = ROUTE_GF

    def __post_init__(self):
        if self.family not in ROUTES_BY_FAMILY:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        allowed = ROUTES_BY_FAMILY[self.family]
        if self.route not in allowed:
            raise ValueError(
                f"family {self.family} supports routes {allowed}, "
                f"not {self.route!r}"
            )
        if self.route == ROUTE_INTEGRAL and self.k < 1:
            raise ValueError("integral_expansion route requires k >= 1")

    def compute(self) -> XPoly:
        return _COMPUTE[self.family](self.n, self.k, self.params, self.route)
