"""Exact arithmetic core: dense univariate polynomials over a field,
rational functions in a single parameter, and truncated power series.

The scalar field is either `fractions.Fraction` or :class:`RationalFunction`
(a reduced quotient of polynomials in the parameter, printed as ``a``).
All values are immutable after construction and all operations are pure,
so everything here is safe for concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Polynomial",
    "RationalFunction",
    "PowerSeries",
    "pochhammer",
    "poly_gcd",
    "rat_to_str",
    "rat_from_str",
    "ratfunc_to_obj",
    "ratfunc_from_obj",
    "scalar_to_obj",
    "scalar_from_obj",
]

Scalar = Union[int, Fraction, "RationalFunction"]


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction, RationalFunction))


class Polynomial:
    """Dense univariate polynomial, coefficients ascending by degree.

    The zero polynomial stores an empty coefficient tuple; otherwise the
    top coefficient is nonzero.  Coefficients may live in any field whose
    elements support arithmetic with each other and with int.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "Polynomial":
        return Polynomial((c,))

    @staticmethod
    def x(one: Scalar = 1) -> "Polynomial":
        """The monomial x, with 1 drawn from the requested field."""
        return Polynomial((one * 0, one))

    @staticmethod
    def from_roots(roots: Sequence[Scalar]) -> "Polynomial":
        p = Polynomial((1,))
        for r in roots:
            p = p * Polynomial((-r, 1))
        return p

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if _is_scalar(other):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if _is_scalar(other):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if _is_scalar(other):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial((other,)) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if _is_scalar(other):
            if not other:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_x(self, k: int = 1) -> "Polynomial":
        """Multiply by x**k."""
        if not self.coeffs or k == 0:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, v: Scalar) -> Scalar:
        """Evaluate by Horner's rule; returns int 0 for the zero polynomial."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divmod(self, other: "Polynomial"):
        """Field division with remainder."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(), self
        rem = list(self.coeffs)
        db = other.degree
        dq = self.degree - db
        quot = [0] * (dq + 1)
        inv_lead = _field_inv(other.leading)
        oc = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[db + k] * inv_lead
            quot[k] = c
            if c:
                for j, bj in enumerate(oc):
                    rem[k + j] = rem[k + j] - c * bj
        return Polynomial(quot), Polynomial(rem[:db])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "Polynomial":
        if not self:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading
        if lead == 1:
            return self
        inv = _field_inv(lead)
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if isinstance(c, RationalFunction) and any(t in cs for t in "+-/") and i > 0:
                cs = f"({cs})"
            parts.append(cs if i == 0 else (f"{cs}*x^{i}" if i > 1 else f"{cs}*x"))
        return " + ".join(parts)


def _field_inv(c: Scalar) -> Scalar:
    if isinstance(c, RationalFunction):
        return c.inverse()
    return Fraction(1, 1) / c


# -- polynomial gcd over the rationals ---------------------------------------


def _int_coeffs(p: Polynomial) -> list:
    """Clear denominators and strip content; returns primitive int coeffs."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_primitive(cs: list) -> list:
    g = 0
    for v in cs:
        g = math.gcd(g, v)
    if g > 1:
        cs = [v // g for v in cs]
    return cs


def _int_rem(a: list, b: list) -> list:
    """Remainder of integer polynomial a by b, scaled to stay integral."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while True:
        _int_trim(a)
        da = len(a) - 1
        if da < db:
            return a
        la = a[-1]
        g = math.gcd(la, lb)
        ma, mb = lb // g, la // g
        if ma != 1:
            a = [c * ma for c in a]
        shift = da - db
        for j, bj in enumerate(b):
            a[shift + j] -= mb * bj


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (Euclidean remainders, content-stripped)."""
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    a, b = _int_coeffs(p), _int_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_primitive(_int_trim(_int_rem(a, b)))
        a, b = b, r
    return Polynomial([Fraction(c) for c in a]).monic()


# -- rational functions --------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials in one parameter over the rationals.

    Canonical form: gcd(num, den) = 1, den monic, zero is 0/1.  A monic
    degree-zero denominator is exactly 1, so values with ``den == 1`` are
    plain polynomials in the parameter -- the common case in the coefficient
    recurrences, kept on fast paths below.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _canonical=False):
        if isinstance(num, (int, Fraction)):
            num = Polynomial((Fraction(num),))
        if den is None:
            den = _ONE_POLY
        elif isinstance(den, (int, Fraction)):
            den = Polynomial((Fraction(den),))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def param() -> "RationalFunction":
        """The generator: the parameter itself."""
        return RationalFunction(
            Polynomial((Fraction(0), Fraction(1))), _ONE_POLY, _canonical=True
        )

    @staticmethod
    def const(c) -> "RationalFunction":
        return RationalFunction(Polynomial((Fraction(c),)), _ONE_POLY, _canonical=True)

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def numerator(self) -> Polynomial:
        return self.num

    @property
    def denominator(self) -> Polynomial:
        return self.den

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_polynomial and other.is_polynomial:
            return RationalFunction(self.num + other.num, _ONE_POLY, _canonical=True)
        if self.is_polynomial:
            self, other = other, self
        if other.is_polynomial:
            # a/b + c: gcd(a + c*b, b) = gcd(a, b) = 1
            return RationalFunction(
                self.num + other.num * self.den, self.den, _canonical=True
            )
        b, d = self.den, other.den
        g = poly_gcd(b, d)
        if g.degree == 0:
            num = self.num * d + other.num * b
            if not num:
                return _RF_ZERO
            return RationalFunction(num, b * d, _canonical=True)
        bp = b.exact_div(g)
        dp = d.exact_div(g)
        t = self.num * dp + other.num * bp
        if not t:
            return _RF_ZERO
        g2 = poly_gcd(t, g)
        if g2.degree > 0:
            t = t.exact_div(g2)
            den = bp * d.exact_div(g2)
        else:
            den = bp * d
        return RationalFunction(t, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return _RF_ZERO
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if d2.degree > 0 and n1.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1 = n1.exact_div(g)
                d2 = d2.exact_div(g)
        if d1.degree > 0 and n2.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2 = n2.exact_div(g)
                d1 = d1.exact_div(g)
        return RationalFunction(n1 * n2, d1 * d2, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        lead = self.num.leading
        if lead == 1:
            return RationalFunction(self.den, self.num, _canonical=True)
        inv = Fraction(1) / lead
        return RationalFunction(self.den * inv, self.num * inv, _canonical=True)

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFunction.const(1)
        return RationalFunction(self.num**k, self.den**k, _canonical=True)

    # -- evaluation and export ---------------------------------------------------

    def __call__(self, a) -> Fraction:
        a = Fraction(a)
        dv = self.den(a)
        if not dv:
            raise ZeroDivisionError(f"denominator vanishes at {a}")
        nv = self.num(a)
        return Fraction(nv) / dv if nv else Fraction(0)

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self):
        ns = _poly_param_str(self.num)
        if self.is_polynomial:
            return ns
        return f"({ns})/({_poly_param_str(self.den)})"


def _poly_param_str(p: Polynomial) -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = "a" if i == 1 else f"a^{i}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


def _reduce(num: Polynomial, den: Polynomial):
    if not num:
        return Polynomial(), _ONE_POLY
    if den.degree == 0:
        inv = Fraction(1) / den.leading
        return (num if inv == 1 else num * inv), _ONE_POLY
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    lead = den.leading
    if lead != 1:
        inv = Fraction(1) / lead
        num = num * inv
        den = den * inv
    return num, den


def _coerce_rf(v):
    # Polynomial deliberately excluded: a Polynomial operand means "this
    # rational function is a coefficient of an x-polynomial", which must
    # dispatch to Polynomial's reflected operators instead.
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, (int, Fraction)):
        return RationalFunction.const(v)
    return NotImplemented


_ONE_POLY = Polynomial((Fraction(1),))
_RF_ZERO = RationalFunction(Polynomial(), _ONE_POLY, _canonical=True)


# -- pochhammer ---------------------------------------------------------------


def pochhammer(y: Scalar, n: int) -> Scalar:
    """Rising factorial (y)_n = y (y+1) ... (y+n-1); (y)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    out: Scalar = 1
    for t in range(n):
        out = out * (y + t)
    return out


# -- truncated power series ------------------------------------------------------


class PowerSeries:
    """Power series over the rationals, truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @staticmethod
    def exp_t(c, order: int) -> "PowerSeries":
        """Series of exp(c*t) through the given order."""
        c = Fraction(c)
        out = [Fraction(1)]
        for k in range(1, order + 1):
            out.append(out[-1] * c / k)
        return PowerSeries(out, order)

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("power series orders differ")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def exp(self) -> "PowerSeries":
        """exp of a series with zero constant term (g' = f' g recurrence)."""
        if self.coeffs[0]:
            raise ValueError("exp requires zero constant term")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += j * self.coeffs[j] * out[k - j]
            out[k] = s / k
        return PowerSeries(out, n)

    def inverse(self) -> "PowerSeries":
        if not self.coeffs[0]:
            raise ValueError("inverse requires invertible constant term")
        n = self.order
        c0 = self.coeffs[0]
        out = [1 / c0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += self.coeffs[j] * out[k - j]
            out[k] = -s / c0
        return PowerSeries(out, n)

    def __pow__(self, k: int) -> "PowerSeries":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = PowerSeries([Fraction(1)], self.order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


# -- serialization ----------------------------------------------------------------


def rat_to_str(c) -> str:
    """'p/q' form, 'p' when the denominator is one."""
    return str(Fraction(c))


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def ratfunc_to_obj(f: RationalFunction) -> dict:
    return {
        "num": [rat_to_str(c) for c in f.num.coeffs],
        "den": [rat_to_str(c) for c in f.den.coeffs],
    }


def ratfunc_from_obj(obj: dict) -> RationalFunction:
    num = Polynomial([Fraction(s) for s in obj["num"]])
    den = Polynomial([Fraction(s) for s in obj["den"]])
    return RationalFunction(num, den)


def scalar_to_obj(c):
    """JSON-friendly form of a field element: 'p/q' string or num/den dict."""
    if isinstance(c, RationalFunction):
        if c.is_polynomial and c.num.degree <= 0:
            return rat_to_str(c.num[0] if c.num else Fraction(0))
        return ratfunc_to_obj(c)
    return rat_to_str(c)


def scalar_from_obj(obj):
    if isinstance(obj, dict):
        return ratfunc_from_obj(obj)
    return Fraction(obj)
