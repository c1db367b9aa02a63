"""Independent reference computations for cross-checking the library.

Everything here is deliberately written against plain Fractions and
coefficient lists, with recurrences or brute-force enumeration instead of
generating functions, so a defect in the library's series engine cannot
hide inside its own oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations


def poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_eval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def falling_factorial_coeffs(n: int) -> list[Fraction]:
    result = [Fraction(1)]
    for j in range(n):
        result = poly_mul(result, [Fraction(-j), Fraction(1)])
    return result


def stirling2_rec(n: int, m: int) -> int:
    if n == 0 and m == 0:
        return 1
    if n == 0 or m == 0 or m > n:
        return 0
    return m * stirling2_rec(n - 1, m) + stirling2_rec(n - 1, m - 1)


def stirling1_unsigned_rec(n: int, m: int) -> int:
    if n == 0 and m == 0:
        return 1
    if n == 0 or m == 0 or m > n:
        return 0
    return (n - 1) * stirling1_unsigned_rec(n - 1, m) + stirling1_unsigned_rec(
        n - 1, m - 1
    )


def stirling2_enum(n: int, m: int) -> int:
    """Count partitions of an n-set into m blocks by direct enumeration."""

    def count(element: int, blocks: int) -> int:
        # restricted growth strings: element joins an existing block or
        # opens block number `blocks`
        if element == n:
            return 1 if blocks == m else 0
        total = blocks * count(element + 1, blocks)
        if blocks < m:
            total += count(element + 1, blocks + 1)
        return total

    if n == 0:
        return 1 if m == 0 else 0
    return count(1, 1) if m >= 1 else 0


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def stirling1_enum(n: int, m: int) -> int:
    """Count permutations of n elements with exactly m cycles."""
    if n == 0:
        return 1 if m == 0 else 0
    return sum(1 for p in permutations(range(n)) if cycle_count(p) == m)


def euler_polys_rec(n_max: int) -> list[list[Fraction]]:
    """Classical Euler polynomials from 2x^n = E_n(x) + sum binom E_i(x)."""
    polys: list[list[Fraction]] = []
    for n in range(n_max + 1):
        coeffs = [Fraction(0)] * n + [Fraction(1)]
        for i in range(n):
            for j, c in enumerate(polys[i]):
                coeffs[j] -= Fraction(math.comb(n, i), 2) * c
        polys.append(coeffs)
    return polys


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for i in range(n):
            acc += math.comb(n + 1, i) * values[i]
        values.append(-acc / (n + 1))
    return values


def cauchy_numbers(n_max: int) -> list[Fraction]:
    """c_n as the exact integral of the falling factorial over [0, 1]."""
    values = []
    for n in range(n_max + 1):
        coeffs = falling_factorial_coeffs(n)
        values.append(sum(c / (l + 1) for l, c in enumerate(coeffs)))
    return values


def alternating_count(n: int) -> int:
    """Permutations of 1..n rising first and then strictly alternating."""
    if n == 0:
        return 1
    count = 0
    for p in permutations(range(1, n + 1)):
        ok = True
        for i in range(n - 1):
            if i % 2 == 0:
                ok = p[i] < p[i + 1]
            else:
                ok = p[i] > p[i + 1]
            if not ok:
                break
        if ok:
            count += 1
    return count


def euler_numbers_sech(n_max: int) -> list[Fraction]:
    """EGF coefficients of 2/(e^t + e^(-t)) by direct series division."""
    # denominator EGF coefficients: 1, 0, 1, 0, ...
    a = [Fraction(1) if i % 2 == 0 else Fraction(0) for i in range(n_max + 1)]
    r = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            acc += math.comb(n, i) * a[i] * r[n - i]
        r.append(-acc)
    return r


def pq_integer_homogeneous(n: int, p: Fraction, q: Fraction) -> Fraction:
    return sum((p**i) * (q ** (n - 1 - i)) for i in range(n))
