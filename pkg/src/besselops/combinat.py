"""Exact combinatorial sequences: Stirling numbers of the second kind,
0-modified Stirling numbers of the first kind, Bernoulli numbers, binomials.

Tables are memoized module-wide; queries are pure and safe for concurrent
reads once built.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

__all__ = [
    "binomial",
    "stirling2",
    "stirling2_table",
    "mod_stirling1_0",
    "mod_stirling1_0_table",
    "bernoulli",
    "falling_factorial_sq",
]

binomial = math.comb

_S2_ROWS: List[List[int]] = [[1]]


def stirling2_table(n_max: int) -> List[List[int]]:
    """Rows 0..n_max of S(n, k): S(n,k) = S(n-1,k-1) + k*S(n-1,k)."""
    while len(_S2_ROWS) <= n_max:
        prev = _S2_ROWS[-1]
        n = len(_S2_ROWS)
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + (
                k * prev[k] if k < len(prev) else 0
            )
        _S2_ROWS.append(row)
    return [row[:] for row in _S2_ROWS[: n_max + 1]]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0
    stirling2_table(n)
    return _S2_ROWS[n][k]


def falling_factorial_sq(n: int):
    """The modified falling factorial [x]_n = prod_{s=0}^{n-1} (x - s^2),
    as integer coefficients ascending in x."""
    coeffs = [1]
    for s in range(n):
        root = s * s
        # multiply by (x - root)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * root
        coeffs = nxt
    return coeffs


_MS1_ROWS: List[List[int]] = [[1]]


def mod_stirling1_0_table(n_max: int) -> List[List[int]]:
    """Rows 0..n_max of the 0-modified Stirling numbers of the first kind."""
    while len(_MS1_ROWS) <= n_max:
        _MS1_ROWS.append(falling_factorial_sq(len(_MS1_ROWS)))
    return [row[:] for row in _MS1_ROWS[: n_max + 1]]


def mod_stirling1_0(n: int) -> List[int]:
    """Coefficients of [x]_n, i.e. s-hat_0(n, v) for v = 0..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    mod_stirling1_0_table(n)
    return _MS1_ROWS[n][:]


_BERNOULLI: List[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2, via
    sum_{k=0}^{n} binom(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = Fraction(0)
        for k in range(m):
            acc += binomial(m + 1, k) * _BERNOULLI[k]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]
