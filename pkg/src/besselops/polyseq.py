"""The polynomial sequence generated by the Bessel operator.

Builds p_n(x; a) four independent ways -- iterated raising operator,
the triangular coefficient recurrence, the scaled (tilde) triangular
recurrence, and the explicit closed formula -- plus the monic sequence
P_n and exact residual checks for the shift and differential relations.

Polynomials in x carry coefficients either in Fraction (fixed rational a)
or in RationalFunction (symbolic a); :class:`AlphaMode` selects the field.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

from .algebra import Polynomial, RationalFunction, pochhammer

__all__ = [
    "AlphaMode",
    "DegreeGuardError",
    "raise_operator",
    "pn_sequence",
    "cn_triangular",
    "ctilde_table",
    "cn_explicit",
    "explicit_row",
    "shift_alpha_check",
    "diff_rel_check",
    "monic_P",
    "monic_operator_residual",
    "monic_shift_residual",
    "alpha_degree",
]


class DegreeGuardError(ValueError):
    """Fixed alpha sits on a zero of (a + 1/2)_n, collapsing the degree."""


class AlphaMode:
    """Field selector: fixed rational alpha, or the symbolic parameter."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        if value is not None:
            value = Fraction(value)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, v):
        raise AttributeError("AlphaMode is immutable")

    @staticmethod
    def fixed(value) -> "AlphaMode":
        return AlphaMode(Fraction(value))

    @staticmethod
    def symbolic() -> "AlphaMode":
        return AlphaMode(None)

    @staticmethod
    def parse(spec: str) -> "AlphaMode":
        """'symbolic' or a rational literal like '7/3'."""
        if spec.strip().lower() == "symbolic":
            return AlphaMode(None)
        return AlphaMode(Fraction(spec))

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def alpha(self):
        """alpha as a field element."""
        if self.value is None:
            return RationalFunction.param()
        return self.value

    def one(self):
        return RationalFunction.const(1) if self.value is None else Fraction(1)

    def scalar(self, c):
        return RationalFunction.const(c) if self.value is None else Fraction(c)

    def guard(self, n_max: int) -> None:
        """Reject fixed alpha in {-1/2, -3/2, ...} within reach of n_max."""
        if self.value is None:
            return
        a = self.value
        for j in range(n_max):
            if a + Fraction(1, 2) + j == 0:
                raise DegreeGuardError(
                    f"alpha = {a} zeroes the factor (alpha + 1/2 + {j}); "
                    f"(alpha + 1/2)_n vanishes for every n >= {j + 1}"
                )

    def __eq__(self, other):
        return isinstance(other, AlphaMode) and self.value == other.value

    def __repr__(self):
        return "AlphaMode(symbolic)" if self.value is None else f"AlphaMode({self.value})"


def _raise(p: Polynomial, a) -> Polynomial:
    """x^2 p'' - x(2x - 1 - 2a) p' - ((2a+1)x - a^2) p."""
    d1 = p.derivative()
    d2 = d1.derivative()
    out = d2.mul_x(2)
    out = out + (-2) * d1.mul_x(2) + (1 + 2 * a) * d1.mul_x(1)
    out = out + (-(2 * a + 1)) * p.mul_x(1) + (a * a) * p
    return out


def raise_operator(p: Polynomial, mode: AlphaMode) -> Polynomial:
    """One application of the conjugated Bessel operator: p_n -> p_{n+1}."""
    return _raise(p, mode.alpha)


def _pn_sequence(n_max: int, a, one) -> List[Polynomial]:
    seq = [Polynomial((one,))]
    for _ in range(n_max):
        seq.append(_raise(seq[-1], a))
    return seq


def pn_sequence(n_max: int, mode: AlphaMode) -> List[Polynomial]:
    """p_0 .. p_{n_max} by iterating the raising operator."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    mode.guard(n_max)
    return _pn_sequence(n_max, mode.alpha, mode.one())


def cn_triangular(n_max: int, mode: AlphaMode) -> List[List]:
    """Coefficient rows c_{n, v}:
    c_{n+1, v} = (v + a)^2 c_{n, v} - (2v + 2a - 1) c_{n, v-1}."""
    a = mode.alpha
    one = mode.one()
    rows = [[one]]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for v in range(n + 2):
            c = 0
            if v <= n:
                c = (v + a) * (v + a) * prev[v]
            if v >= 1:
                c = c - (2 * v + 2 * a - 1) * prev[v - 1]
            row.append(c)
        rows.append(row)
    return rows


def ctilde_table(n_max: int, mode: AlphaMode) -> List[List]:
    """Scaled rows ct_{n, v} with c_{n, v} = (-2)^v (a + 1/2)_v ct_{n, v}:
    ct_{n+1, v} = ct_{n, v-1} + (v + a)^2 ct_{n, v}."""
    a = mode.alpha
    one = mode.one()
    rows = [[one]]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for v in range(n + 2):
            c = 0
            if v <= n:
                c = (v + a) * (v + a) * prev[v]
            if v >= 1:
                c = c + prev[v - 1]
            row.append(c)
        rows.append(row)
    return rows


def cn_explicit(n: int, v: int, mode: AlphaMode):
    """Closed form for ct_{n, v}:
    (2 / v!) sum_{u=0}^{v} binom(v,u) (-1)^{u+v} (a+u)^{2n+1} / (2a+u)_{v+1},
    the Gamma-function ratio rewritten as a Pochhammer reciprocal.
    """
    if not 0 <= v <= n:
        raise ValueError("need 0 <= v <= n")
    a = mode.alpha
    acc = mode.scalar(0)
    for u in range(v + 1):
        den = pochhammer(2 * a + u, v + 1)
        if not mode.is_symbolic and den == 0:
            raise DegreeGuardError(
                f"alpha = {mode.value} is a pole: (2a + {u})_{v + 1} vanishes"
            )
        sign = -1 if (u + v) % 2 else 1
        term = (sign * math.comb(v, u)) * (a + u) ** (2 * n + 1)
        if isinstance(term, (int, Fraction)):
            term = Fraction(term) / den
        else:
            term = term / den
        acc = acc + term
    return acc * Fraction(2, math.factorial(v))


def explicit_row(n: int, mode: AlphaMode) -> List:
    """Coefficients of p_n from the closed formula:
    c_{n, v} = (-2)^v (a + 1/2)_v * ct_{n, v}."""
    a = mode.alpha
    half = Fraction(1, 2)
    out = []
    for v in range(n + 1):
        scale = Fraction(-2) ** v * pochhammer(a + half, v)
        out.append(scale * cn_explicit(n, v, mode))
    return out


def shift_alpha_check(n: int, mode: AlphaMode) -> Tuple[bool, Polynomial]:
    """Residual of (2a+1) x p_n(x; a+1) = -p_{n+1}(x; a) + a^2 p_n(x; a)."""
    mode.guard(n + 1)
    a = mode.alpha
    one = mode.one()
    seq = _pn_sequence(n + 1, a, one)
    shifted = _pn_sequence(n, a + 1, one)
    lhs = ((2 * a + 1) * shifted[n]).mul_x(1)
    rhs = -seq[n + 1] + (a * a) * seq[n]
    res = lhs - rhs
    return (not res, res)


def diff_rel_check(n: int, mode: AlphaMode) -> Tuple[bool, Polynomial]:
    """Residual of
    (2a+1) p_n(x; a+1) = -x p_n''(x;a) + (2x-1-2a) p_n'(x;a) + (1+2a) p_n(x;a)."""
    mode.guard(n + 1)
    a = mode.alpha
    one = mode.one()
    p = _pn_sequence(n, a, one)[n]
    shifted = _pn_sequence(n, a + 1, one)[n]
    d1 = p.derivative()
    d2 = d1.derivative()
    rhs = -d2.mul_x(1) + 2 * d1.mul_x(1) + (-(1 + 2 * a)) * d1 + (1 + 2 * a) * p
    lhs = (2 * a + 1) * shifted
    res = lhs - rhs
    return (not res, res)


def leading_unit(n: int, mode: AlphaMode):
    """The leading coefficient (-2)^n (a + 1/2)_n of p_n."""
    return Fraction(-2) ** n * pochhammer(mode.alpha + Fraction(1, 2), n)


def monic_P(n_max: int, mode: AlphaMode) -> List[Polynomial]:
    """P_n = p_n / ((-2)^n (a + 1/2)_n), monic of degree n."""
    mode.guard(n_max)
    seq = pn_sequence(n_max, mode)
    out = []
    for n, p in enumerate(seq):
        lead = leading_unit(n, mode)
        if isinstance(lead, RationalFunction):
            out.append(p * lead.inverse())
        else:
            out.append(p * (Fraction(1) / lead))
    return out


def monic_operator_residual(n: int, mode: AlphaMode) -> Polynomial:
    """Residual of raise(P_n) = -(2n + 2a + 1) P_{n+1}."""
    a = mode.alpha
    P = monic_P(n + 1, mode)
    return _raise(P[n], a) + (2 * n + 2 * a + 1) * P[n + 1]


def monic_shift_residual(n: int, mode: AlphaMode) -> Polynomial:
    """Residual of x P_n(x; a+1) = P_{n+1}(x; a) + a^2/(2n+2a+1) P_n(x; a)."""
    mode.guard(n + 2)
    a = mode.alpha
    one = mode.one()
    P = monic_P(n + 1, mode)
    shifted_pn = _pn_sequence(n, a + 1, one)[n]
    lead = Fraction(-2) ** n * pochhammer(a + 1 + Fraction(1, 2), n)
    if isinstance(lead, RationalFunction):
        P_shift = shifted_pn * lead.inverse()
    else:
        P_shift = shifted_pn * (Fraction(1) / lead)
    coef = (a * a) * _inv_scalar(2 * n + 2 * a + 1)
    return P_shift.mul_x(1) - P[n + 1] - coef * P[n]


def _inv_scalar(c):
    if isinstance(c, RationalFunction):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def alpha_degree(n: int) -> int:
    """Degree in the parameter of p_n's coefficients (symbolic mode)."""
    rows = cn_triangular(n, AlphaMode.symbolic())
    deg = 0
    for c in rows[n]:
        if isinstance(c, RationalFunction) and c:
            if not c.is_polynomial:
                raise AssertionError("triangular coefficients must be polynomial in a")
            deg = max(deg, c.num.degree)
    return deg
