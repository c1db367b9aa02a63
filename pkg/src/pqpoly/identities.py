"""Batch verification of the identity inventory as exact polynomial equality.

Each check owns a stable id, enumerates its parameter cells from a
SuiteConfig, and compares two independently computed sides per cell.  A
cell passes only on exact equality of canonical XPoly values; there is no
tolerance anywhere.  Identities carrying a free scalar y are verified at
n + 1 distinct rational y values per cell family, enough to pin down a
polynomial of degree n in y, so a full pass certifies the bivariate
identity.

Reports are deterministic: cells are generated in a fixed order, the check
list has a fixed order, and the first failing cell (if any) is captured
with both sides serialized.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import families, sequences
from .exact import XPoly, falling_factorial, rational_to_str, rising_factorial
from .pqcalc import PQParams, pq_integer

DEFAULT_PARAM_POINTS = (
    PQParams(Fraction(1, 2), Fraction(1, 3)),
    PQParams(Fraction(3, 4), Fraction(1, 5)),
    PQParams(Fraction(1), Fraction(2, 7)),
    PQParams(Fraction(1), Fraction(1)),
    PQParams(Fraction(2, 3), Fraction(2, 3)),
)

# cross relations pair two family evaluations per term; capped separately
CROSS_N_CAP = 8
APPELL_N_CAP = 12


@dataclass(frozen=True)
class SuiteConfig:
    """Grid the suite runs over.  Defaults match the acceptance runs."""

    n_max: int = 10
    k_values: tuple[int, ...] = (-2, -1, 0, 1, 2, 3)
    k_values_integral: tuple[int, ...] = (1, 2, 3)
    s_values: tuple[int, ...] = (1, 2, 3)
    u_values: tuple[Fraction, ...] = (Fraction(-1), Fraction(2), Fraction(1, 2))
    scale_values: tuple[int, ...] = (1, 2, 3)
    param_points: tuple[PQParams, ...] = DEFAULT_PARAM_POINTS


@dataclass
class IdentityReport:
    id: str
    cells_total: int
    cells_passed: int
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.cells_total == self.cells_passed and self.cells_total > 0

    @property
    def vacuous(self) -> bool:
        return self.cells_total == 0

    def to_json_obj(self) -> dict:
        obj = {
            "id": self.id,
            "cells_total": self.cells_total,
            "cells_passed": self.cells_passed,
        }
        if self.first_failure is not None:
            obj["first_failure"] = self.first_failure
        return obj


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    build_cells: Callable[[SuiteConfig], Iterable[dict]]
    evaluate: Callable[[dict], tuple]


def y_samples(n: int) -> list[Fraction]:
    """n + 1 distinct half-integer sample points."""
    return [Fraction(2 * j + 1, 2) for j in range(n + 1)]


def _as_poly(value) -> XPoly:
    return value if isinstance(value, XPoly) else XPoly.const(value)


def _serialize_cell(cell: dict) -> dict:
    out = {}
    for key, value in cell.items():
        if key == "params":
            out["p"], out["q"] = value.as_strings()
        elif isinstance(value, Fraction):
            out[key] = rational_to_str(value)
        else:
            out[key] = value
    return out


def run_check(check: IdentityCheck, config: SuiteConfig) -> IdentityReport:
    total = passed = 0
    first_failure = None
    for cell in check.build_cells(config):
        lhs, rhs = check.evaluate(cell)
        total += 1
        if lhs == rhs:
            passed += 1
        elif first_failure is None:
            first_failure = {
                "cell": _serialize_cell(cell),
                "lhs": _as_poly(lhs).to_strings(),
                "rhs": _as_poly(rhs).to_strings(),
            }
    return IdentityReport(check.id, total, passed, first_failure)


# ---------------------------------------------------------------------------
# cached scalar helpers shared by the evaluators


@lru_cache(maxsize=None)
def _euler_poly_at(n: int, point: Fraction, k: int, params: PQParams) -> Fraction:
    return families.poly_euler(n, k, params)(point)


@lru_cache(maxsize=None)
def _classical_euler_shifted(n: int, j: int) -> XPoly:
    """Classical E_n(x - j) as an XPoly in x."""
    return sequences.euler_poly(n)(XPoly((-j, 1)))


@lru_cache(maxsize=None)
def _ws1_neg_x(n: int, m: int) -> XPoly:
    return sequences.weighted_stirling1(n, m)(XPoly((0, -1)))


@lru_cache(maxsize=None)
def _ws2_neg_x(n: int, m: int) -> XPoly:
    return sequences.weighted_stirling2(n, m)(XPoly((0, -1)))


@lru_cache(maxsize=None)
def _inner_cauchy1(m: int, k: int, params: PQParams, y: Fraction) -> Fraction:
    # terms above l = m vanish with the weighted Stirling factor
    return sum(
        sequences.weighted_stirling2(m, l)(y)
        * families.poly_cauchy_1(l, k, params)(y)
        for l in range(m + 1)
    )


@lru_cache(maxsize=None)
def _inner_cauchy2(m: int, k: int, params: PQParams, y: Fraction) -> Fraction:
    return sum(
        sequences.weighted_stirling2(m, l)(-y)
        * families.poly_cauchy_2(l, k, params)(y)
        for l in range(m + 1)
    )


@lru_cache(maxsize=None)
def _inner_bernoulli(m: int, k: int, params: PQParams, y: Fraction) -> Fraction:
    return sum(
        sequences.weighted_stirling1(m, l)(y)
        * families.poly_bernoulli(l, k, params)(y)
        for l in range(m + 1)
    )


@lru_cache(maxsize=None)
def _euler_gf_over_poly_ring(n: int, k: int, params: PQParams) -> XPoly:
    """Coefficient n of the defining EGF with the e^(xt) factor kept
    polynomial, independent of the Appell expansion used by poly_euler."""
    base = families.euler_base_series(k, params, n)
    return base.mul(sequences.exp_x_series(n)).coeff(n)


# ---------------------------------------------------------------------------
# cell builders


def _nkp_cells(config: SuiteConfig, n_min: int = 0, n_cap: Optional[int] = None):
    top = config.n_max if n_cap is None else min(config.n_max, n_cap)
    for n in range(n_min, top + 1):
        for k in config.k_values:
            for params in config.param_points:
                yield {"n": n, "k": k, "params": params}


def _nkpy_cells(config: SuiteConfig, n_min: int = 0, n_cap: Optional[int] = None):
    for cell in _nkp_cells(config, n_min, n_cap):
        for y in y_samples(cell["n"]):
            yield dict(cell, y=y)


def _appell_iii_cells(config: SuiteConfig):
    for cell in _nkp_cells(config, 0, APPELL_N_CAP):
        for m in config.scale_values:
            yield dict(cell, m=m)


def _tid3_cells(config: SuiteConfig):
    for cell in _nkp_cells(config):
        for s in config.s_values:
            yield dict(cell, s=s)


def _tid4_cells(config: SuiteConfig):
    for cell in _nkp_cells(config):
        for s in config.s_values:
            for u in config.u_values:
                yield dict(cell, s=s, u=u)


def _orthogonality_cells(config: SuiteConfig):
    for n in range(config.n_max + 1):
        for m in range(n + 1):
            for direction in ("s2_then_s1", "s1_then_s2"):
                yield {"n": n, "m": m, "direction": direction}


# ---------------------------------------------------------------------------
# evaluators


def _eval_appell_i(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = _euler_gf_over_poly_ring(n, k, params)
    rhs = XPoly.zero()
    for i in range(n + 1):
        rhs = rhs + math.comb(n, i) * families.poly_euler_number(
            i, k, params
        ) * XPoly.monomial(n - i)
    return lhs, rhs


def _eval_appell_ii(cell):
    n, k, params, y = cell["n"], cell["k"], cell["params"], cell["y"]
    lhs = families.poly_euler(n, k, params)(XPoly((y, 1)))
    rhs = XPoly.zero()
    for i in range(n + 1):
        rhs = rhs + math.comb(n, i) * y ** (n - i) * families.poly_euler(
            i, k, params
        )
    return lhs, rhs


def _eval_appell_iii(cell):
    n, k, params, m = cell["n"], cell["k"], cell["params"], cell["m"]
    lhs = families.poly_euler(n, k, params)(XPoly((0, m)))
    rhs = XPoly.zero()
    for i in range(n + 1):
        rhs = rhs + (
            math.comb(n, i)
            * Fraction(m - 1) ** (n - i)
            * families.poly_euler(i, k, params)
            * XPoly.monomial(n - i)
        )
    return lhs, rhs


def _eval_appell_iv(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    e_n = families.poly_euler(n, k, params)
    lhs = e_n(XPoly((1, 1))) - e_n
    rhs = XPoly.zero()
    for i in range(n):
        rhs = rhs + math.comb(n, i) * families.poly_euler(i, k, params)
    return lhs, rhs


def _eucls_term(n: int, k: int, params: PQParams, l: int) -> XPoly:
    acc = XPoly.zero()
    for j in range(l + 2):
        acc = acc + (-1) ** j * math.comb(l + 1, j) * _classical_euler_shifted(n, j)
    return pq_integer(l + 1, params) ** (-k) * acc


def _eval_eucls(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = families.poly_euler(n, k, params)
    rhs = XPoly.zero()
    # terms with l >= n vanish: the inner alternating sum is an (l+1)-fold
    # finite difference of a degree-n polynomial
    for l in range(n):
        rhs = rhs + _eucls_term(n, k, params, l)
    return lhs, rhs


def eucls_tail_term(n: int, k: int, params: PQParams) -> XPoly:
    """First term beyond the truncation used by the eucls check."""
    return _eucls_term(n, k, params, n)


def _tid1_term(n: int, k: int, params: PQParams, l: int) -> XPoly:
    acc = Fraction(0)
    for i in range(n + 1):
        s2 = sequences.stirling2(i, l) if i >= l else 0
        if s2:
            acc += math.comb(n, i) * s2 * _euler_poly_at(
                n - i, Fraction(-l), k, params
            )
    return acc * rising_factorial(l)


def _eval_tid1(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = families.poly_euler(n, k, params)
    rhs = XPoly.zero()
    for l in range(n + 1):
        rhs = rhs + _tid1_term(n, k, params, l)
    return lhs, rhs


def tid1_tail_term(n: int, k: int, params: PQParams) -> XPoly:
    """Term l = n + 1, computed without shortcuts; every Stirling factor
    in it vanishes above the diagonal."""
    l = n + 1
    acc = Fraction(0)
    for i in range(n + 1):
        acc += math.comb(n, i) * sequences.stirling2(i, l) * _euler_poly_at(
            n - i, Fraction(-l), k, params
        )
    return acc * rising_factorial(l)


def _tid2_term(n: int, k: int, params: PQParams, l: int) -> XPoly:
    acc = Fraction(0)
    for i in range(n + 1):
        s2 = sequences.stirling2(i, l) if i >= l else 0
        if s2:
            acc += math.comb(n, i) * s2 * families.poly_euler_number(
                n - i, k, params
            )
    return acc * falling_factorial(l)


def _eval_tid2(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = families.poly_euler(n, k, params)
    rhs = XPoly.zero()
    for l in range(n + 1):
        rhs = rhs + _tid2_term(n, k, params, l)
    return lhs, rhs


def tid2_tail_term(n: int, k: int, params: PQParams) -> XPoly:
    l = n + 1
    acc = Fraction(0)
    for i in range(n + 1):
        acc += math.comb(n, i) * sequences.stirling2(i, l) * families.poly_euler_number(
            n - i, k, params
        )
    return acc * falling_factorial(l)


def _eval_tid3(cell):
    n, k, params, s = cell["n"], cell["k"], cell["params"], cell["s"]
    lhs = families.poly_euler(n, k, params)
    rhs = XPoly.zero()
    for l in range(n + 1):
        outer = math.comb(n, l) * sequences.stirling2(l + s, s)
        if outer == 0:
            continue
        inner = XPoly.zero()
        for i in range(n - l + 1):
            inner = inner + (
                Fraction(math.comb(n - l, i), math.comb(l + s, s))
                * families.poly_euler_number(n - l - i, k, params)
                * sequences.bernoulli_order(i, s)
            )
        rhs = rhs + outer * inner
    return lhs, rhs


def _eval_tid4(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    s, u = cell["s"], cell["u"]
    lhs = families.poly_euler(n, k, params)
    rhs = XPoly.zero()
    shift = Fraction(1) / (1 - u) ** s
    for l in range(n + 1):
        weights = Fraction(0)
        for i in range(s + 1):
            weights += (
                math.comb(s, i)
                * (-u) ** (s - i)
                * _euler_poly_at(n - l, Fraction(i), k, params)
            )
        rhs = rhs + (
            math.comb(n, l) * shift * weights
        ) * sequences.frobenius_euler(l, s, u)
    return lhs, rhs


def _eval_euler_bernoulli(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    e_n = families.poly_euler(n, k, params)
    lhs = e_n + e_n(XPoly((1, 1)))
    b_n = families.poly_bernoulli(n, k, params)
    rhs = 2 * b_n(XPoly((0, -1))) - 2 * b_n(XPoly((1, -1)))
    return lhs, rhs


def _eval_polyberrel1(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = families.poly_bernoulli(n, k, params, families.ROUTE_GF)
    rhs = families.poly_bernoulli(n, k, params, families.ROUTE_STIRLING)
    return lhs, rhs


def _eval_cauchy_routes(cell, compute):
    n, k, params = cell["n"], cell["k"], cell["params"]
    routes = [families.ROUTE_GF, families.ROUTE_STIRLING]
    if k >= 1:
        routes.append(families.ROUTE_INTEGRAL)
    reference = compute(n, k, params, routes[0])
    for route in routes[1:]:
        candidate = compute(n, k, params, route)
        if candidate != reference:
            return reference, candidate
    return reference, reference


def _eval_cauchy_routes_1(cell):
    return _eval_cauchy_routes(cell, families.poly_cauchy_1)


def _eval_cauchy_routes_2(cell):
    return _eval_cauchy_routes(cell, families.poly_cauchy_2)


def _eval_orthogonality(cell):
    n, m, direction = cell["n"], cell["m"], cell["direction"]
    acc = XPoly.zero()
    for l in range(m, n + 1):
        if direction == "s2_then_s1":
            term = (
                sequences.weighted_stirling2(n, l)
                * sequences.weighted_stirling1(l, m)
                * Fraction((-1) ** (n - l))
            )
        else:
            term = (
                sequences.weighted_stirling1(n, l)
                * sequences.weighted_stirling2(l, m)
                * Fraction((-1) ** (l - m))
            )
        acc = acc + term
    rhs = XPoly.one() if n == m else XPoly.zero()
    return acc, rhs


def _eval_invrel1(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = XPoly.zero()
    for m in range(n + 1):
        lhs = lhs + sequences.weighted_stirling1(n, m) * families.poly_bernoulli(
            m, k, params
        )
    rhs = XPoly.const(
        math.factorial(n) * pq_integer(n + 1, params) ** (-k)
    )
    return lhs, rhs


def _eval_invrel2(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = XPoly.zero()
    for m in range(n + 1):
        lhs = lhs + sequences.weighted_stirling2(n, m) * families.poly_cauchy_1(
            m, k, params
        )
    rhs = XPoly.const(pq_integer(n + 1, params) ** (-k))
    return lhs, rhs


def _eval_invrel3(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = XPoly.zero()
    for m in range(n + 1):
        lhs = lhs + _ws2_neg_x(n, m) * families.poly_cauchy_2(m, k, params)
    rhs = XPoly.const(
        Fraction((-1) ** n) * pq_integer(n + 1, params) ** (-k)
    )
    return lhs, rhs


def _eval_cross_b_from_c(cell):
    n, k, params, y = cell["n"], cell["k"], cell["params"], cell["y"]
    lhs = families.poly_bernoulli(n, k, params)
    rhs = XPoly.zero()
    for m in range(n + 1):
        weight = (
            Fraction((-1) ** (n - m))
            * math.factorial(m)
            * _inner_cauchy1(m, k, params, y)
        )
        rhs = rhs + weight * sequences.weighted_stirling2(n, m)
    return lhs, rhs


def _eval_cross_b_from_chat(cell):
    n, k, params, y = cell["n"], cell["k"], cell["params"], cell["y"]
    lhs = families.poly_bernoulli(n, k, params)
    rhs = XPoly.zero()
    for m in range(n + 1):
        weight = (
            Fraction((-1) ** n)
            * math.factorial(m)
            * _inner_cauchy2(m, k, params, y)
        )
        rhs = rhs + weight * sequences.weighted_stirling2(n, m)
    return lhs, rhs


def _eval_cross_c_from_b(cell):
    n, k, params, y = cell["n"], cell["k"], cell["params"], cell["y"]
    lhs = families.poly_cauchy_1(n, k, params)
    rhs = XPoly.zero()
    for m in range(n + 1):
        weight = Fraction((-1) ** (n - m), math.factorial(m)) * _inner_bernoulli(
            m, k, params, y
        )
        rhs = rhs + weight * sequences.weighted_stirling1(n, m)
    return lhs, rhs


def _eval_cross_chat_from_b(cell):
    n, k, params, y = cell["n"], cell["k"], cell["params"], cell["y"]
    lhs = families.poly_cauchy_2(n, k, params)
    rhs = XPoly.zero()
    for m in range(n + 1):
        weight = Fraction((-1) ** n, math.factorial(m)) * _inner_bernoulli(
            m, k, params, y
        )
        rhs = rhs + weight * _ws1_neg_x(n, m)
    return lhs, rhs


def _eval_vandermonde_1(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = Fraction((-1) ** n, math.factorial(n)) * families.poly_cauchy_1(
        n, k, params
    )
    rhs = XPoly.zero()
    for m in range(1, n + 1):
        rhs = rhs + Fraction(
            math.comb(n - 1, m - 1), math.factorial(m)
        ) * families.poly_cauchy_2(m, k, params)
    return lhs, rhs


def _eval_vandermonde_2(cell):
    n, k, params = cell["n"], cell["k"], cell["params"]
    lhs = Fraction((-1) ** n, math.factorial(n)) * families.poly_cauchy_2(
        n, k, params
    )
    rhs = XPoly.zero()
    for m in range(1, n + 1):
        rhs = rhs + Fraction(
            math.comb(n - 1, m - 1), math.factorial(m)
        ) * families.poly_cauchy_1(m, k, params)
    return lhs, rhs


# ---------------------------------------------------------------------------
# registry

CHECKS: tuple[IdentityCheck, ...] = (
    IdentityCheck(
        "appell_i", lambda c: _nkp_cells(c, 0, APPELL_N_CAP), _eval_appell_i
    ),
    IdentityCheck(
        "appell_ii", lambda c: _nkpy_cells(c, 0, APPELL_N_CAP), _eval_appell_ii
    ),
    IdentityCheck("appell_iii", _appell_iii_cells, _eval_appell_iii),
    IdentityCheck(
        "appell_iv", lambda c: _nkp_cells(c, 0, APPELL_N_CAP), _eval_appell_iv
    ),
    IdentityCheck("eucls", lambda c: _nkp_cells(c, 1), _eval_eucls),
    IdentityCheck("tid1", _nkp_cells, _eval_tid1),
    IdentityCheck("tid2", _nkp_cells, _eval_tid2),
    IdentityCheck("tid3", _tid3_cells, _eval_tid3),
    IdentityCheck("tid4", _tid4_cells, _eval_tid4),
    IdentityCheck(
        "euler_bernoulli", lambda c: _nkp_cells(c, 1), _eval_euler_bernoulli
    ),
    IdentityCheck("polyberrel1", lambda c: _nkp_cells(c, 1), _eval_polyberrel1),
    IdentityCheck("cauchy_routes_1", _nkp_cells, _eval_cauchy_routes_1),
    IdentityCheck("cauchy_routes_2", _nkp_cells, _eval_cauchy_routes_2),
    IdentityCheck("orthogonality", _orthogonality_cells, _eval_orthogonality),
    IdentityCheck("invrel1", _nkp_cells, _eval_invrel1),
    IdentityCheck("invrel2", _nkp_cells, _eval_invrel2),
    IdentityCheck("invrel3", _nkp_cells, _eval_invrel3),
    IdentityCheck(
        "cross_b_from_c",
        lambda c: _nkpy_cells(c, 0, CROSS_N_CAP),
        _eval_cross_b_from_c,
    ),
    IdentityCheck(
        "cross_b_from_chat",
        lambda c: _nkpy_cells(c, 0, CROSS_N_CAP),
        _eval_cross_b_from_chat,
    ),
    IdentityCheck(
        "cross_c_from_b",
        lambda c: _nkpy_cells(c, 0, CROSS_N_CAP),
        _eval_cross_c_from_b,
    ),
    IdentityCheck(
        "cross_chat_from_b",
        lambda c: _nkpy_cells(c, 0, CROSS_N_CAP),
        _eval_cross_chat_from_b,
    ),
    IdentityCheck("vandermonde_1", lambda c: _nkp_cells(c, 1), _eval_vandermonde_1),
    IdentityCheck("vandermonde_2", lambda c: _nkp_cells(c, 1), _eval_vandermonde_2),
)

CHECK_IDS: tuple[str, ...] = tuple(check.id for check in CHECKS)
_CHECKS_BY_ID = {check.id: check for check in CHECKS}


def run_all(
    config: SuiteConfig,
    only: Optional[Iterable[str]] = None,
    max_workers: int = 1,
) -> list[IdentityReport]:
    """Run the suite (or a subset) and return reports in registry order."""
    if only is None:
        selected = list(CHECKS)
    else:
        wanted = list(only)
        unknown = [i for i in wanted if i not in _CHECKS_BY_ID]
        if unknown:
            raise ValueError(f"unknown check ids: {', '.join(unknown)}")
        selected = [_CHECKS_BY_ID[i] for i in CHECK_IDS if i in set(wanted)]
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda ch: run_check(ch, config), selected))
    return [run_check(check, config) for check in selected]


def reports_to_json(reports: list[IdentityReport]) -> str:
    return json.dumps(
        {"reports": [r.to_json_obj() for r in reports]}, indent=2
    )
