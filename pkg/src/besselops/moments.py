"""Moment functional of the canonical dual element, Stieltjes
orthogonalization, Hankel determinants, and the dual-sequence checks.

Everything here is exact; the quadrature cross-checks of the same
quantities live in :mod:`besselops.numeric.integrals`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import Polynomial, RationalFunction, pochhammer
from .polyseq import AlphaMode, DegreeGuardError, _raise, monic_P

__all__ = [
    "moments",
    "apply_functional",
    "stieltjes_orthogonalize",
    "hankel_dets",
    "orthogonality_check",
    "non_orthogonality_of_P",
    "shift_functional_check",
    "moment_difference_probe",
    "dual_expand",
    "dual_equation_check",
]


def _moments_at(n_max: int, a, one) -> List:
    """(u_0)_n = (a)_n^2 / (2^n (a + 1/2)_n) for n = 0..n_max."""
    out = [one]
    num = one
    den = one
    half = Fraction(1, 2)
    for n in range(n_max):
        num = num * (a + n) * (a + n)
        den_factor = 2 * (a + half + n)
        if isinstance(den_factor, (int, Fraction)) and den_factor == 0:
            raise DegreeGuardError(
                f"moment pole: (a + 1/2 + {n}) vanishes at a = {a}"
            )
        den = den * den_factor
        if isinstance(den, RationalFunction):
            out.append(num * den.inverse())
        else:
            out.append(num / den)
    return out


def moments(n_max: int, mode: AlphaMode) -> List:
    """Exact moments (u_0)_0 .. (u_0)_{n_max}."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _moments_at(n_max, mode.alpha, mode.one())


def apply_functional(moms: Sequence, f: Polynomial):
    """< u, f > = sum_v f_v (u)_v; rejects degree overflow."""
    if f.degree >= len(moms):
        raise ValueError(
            f"functional knows moments to index {len(moms) - 1}, polynomial has degree {f.degree}"
        )
    acc = 0
    for c, m in zip(f.coeffs, moms):
        if c:
            acc = acc + c * m
    return acc if acc else moms[0] * 0


def stieltjes_orthogonalize(n_max: int, mode: AlphaMode):
    """Monic orthogonal polynomials Q_0..Q_{n_max} and their recurrence
    coefficients (betas 0..n_max-1, gammas 1..n_max-1) built directly from
    the exact moments:
    beta_n = <u, x Q_n^2> / <u, Q_n^2>, gamma_{n+1} = <u, Q_{n+1}^2> / <u, Q_n^2>.

    Symbolic mode runs a fraction-free variant over ZZ[a] (everything scaled
    by Hankel determinants of the denominator-cleared moments), which avoids
    per-operation rational-function reductions entirely; the quotients are
    reduced once at the end.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if mode.is_symbolic:
        return _stieltjes_symbolic(n_max)
    moms = moments(2 * n_max if n_max else 1, mode)
    one = mode.one()
    Q = [Polynomial((one,))]
    norms = [moms[0]]
    betas: List = []
    gammas: List = []
    for n in range(n_max):
        qsq = Q[n] * Q[n]
        num = apply_functional(moms, qsq.mul_x(1))
        beta = _div(num, norms[n])
        betas.append(beta)
        nxt = (Polynomial.x(one) - beta) * Q[n]
        if n >= 1:
            nxt = nxt - gammas[n - 1] * Q[n - 1]
        Q.append(nxt)
        norm = apply_functional(moms, nxt * nxt)
        if not norm:
            raise ZeroDivisionError(
                f"<u, Q_{n + 1}^2> = 0: the functional is not regular here"
            )
        if n + 1 <= n_max - 1:
            gammas.append(_div(norm, norms[n]))
        norms.append(norm)
    return Q, betas, gammas


# -- fraction-free symbolic engine ------------------------------------------
#
# Scaled moments mhat_k = (u)_k * D with D = 2^(2N) (a + 1/2)_(2N) lie in
# ZZ[a]:  mhat_k = (a)_k^2 * prod_{j<2N-k} (2a + 2k + 2j + 1).  With
# Dhat_n = D^(n+1) * Delta_n (Hankel determinants of mhat, also in ZZ[a])
# and q_n = Dhat_{n-1} Q_n in ZZ[a][x], the classical identities
#   <uhat, q_n^2> = Dhat_{n-1} Dhat_n,
#   q_{n+1} = ((x Dhat_{n-1} Dhat_n - b_n) q_n - Dhat_n^2 q_{n-1}) / Dhat_{n-1}^2,
#   beta_n = b_n / (Dhat_{n-1} Dhat_n),   b_n = <uhat, x q_n^2>,
#   gamma_n = Dhat_n Dhat_{n-2} / Dhat_{n-1}^2,
# keep every intermediate an integer polynomial and every division exact.


def _zmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zadd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _zneg(a: list) -> list:
    return [-c for c in a]


def _zexact_div(a: list, b: list) -> list:
    """Exact division in ZZ[a]; raises if any step is inexact."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return []
    db = len(b) - 1
    lb = b[-1]
    dq = len(a) - 1 - db
    if dq < 0:
        raise ValueError("inexact integer polynomial division")
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c, r = divmod(a[db + k], lb)
        if r:
            raise ValueError("inexact integer polynomial division")
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    if any(a[:db]):
        raise ValueError("inexact integer polynomial division")
    return quot


def _scaled_moments(n_moments: int, scale_n: int) -> List[list]:
    """mhat_k = (a)_k^2 * prod_{j<scale_n-k}(2a + 2k + 2j + 1), k <= n_moments,
    as integer coefficient lists (scale_n >= n_moments)."""
    out = []
    for k in range(n_moments + 1):
        p = [1]
        for j in range(k):
            p = _zmul(p, [j, 1])
        p = _zmul(p, p)
        for j in range(scale_n - k):
            p = _zmul(p, [2 * k + 2 * j + 1, 2])
        out.append(p)
    return out


def _zfunctional(mhat: List[list], poly_x: List[list]) -> list:
    """<uhat, f> for f given as x-coefficients in ZZ[a]."""
    acc: list = []
    for c, m in zip(poly_x, mhat):
        if c:
            acc = _zadd(acc, _zmul(c, m))
    return acc


def _zsquare_x(q: List[list]) -> List[list]:
    """Square an x-polynomial with ZZ[a] coefficients."""
    n = len(q)
    out: List[list] = [[] for _ in range(2 * n - 1)]
    for i in range(n):
        if not q[i]:
            continue
        sq = _zmul(q[i], q[i])
        out[2 * i] = _zadd(out[2 * i], sq)
        for j in range(i + 1, n):
            if q[j]:
                cross = _zmul(q[i], q[j])
                out[i + j] = _zadd(out[i + j], _zadd(cross, cross))
    return out


def _to_rf(zp: list) -> RationalFunction:
    return RationalFunction(Polynomial([Fraction(c) for c in zp]))


def _symbolic_engine(n_max: int):
    """Run the fraction-free recurrence; returns (q, dhat, b_list, mhat)."""
    mhat = _scaled_moments(2 * n_max if n_max else 1, 2 * n_max if n_max else 1)
    q: List[List[list]] = [[[1]]]
    dhat = [mhat[0]]  # Dhat_0 = mhat_0 = D
    dhat_prev = [1]  # Dhat_{-1}
    b_list: List[list] = []
    for n in range(n_max):
        qn = q[n]
        qsq = _zsquare_x(qn)
        b_n = _zfunctional(mhat, [[]] + qsq)
        b_list.append(b_n)
        dn_prev = dhat_prev if n == 0 else dhat[n - 1]
        dn = dhat[n]
        lead = _zmul(dn_prev, dn)
        nxt: List[list] = [[] for _ in range(n + 2)]
        for i, c in enumerate(qn):
            if c:
                nxt[i + 1] = _zmul(c, lead)
                nxt[i] = _zadd(nxt[i], _zneg(_zmul(c, b_n)))
        if n >= 1:
            dnsq = _zmul(dn, dn)
            for i, c in enumerate(q[n - 1]):
                if c:
                    nxt[i] = _zadd(nxt[i], _zneg(_zmul(c, dnsq)))
        div = _zmul(dn_prev, dn_prev)
        nxt = [_zexact_div(c, div) if c else [] for c in nxt]
        q.append(nxt)
        norm = _zfunctional(mhat, _zsquare_x(nxt))
        if not norm:
            raise ZeroDivisionError(f"<u, Q_{n + 1}^2> = 0: regularity failure")
        dhat.append(_zexact_div(norm, dn))
    return q, dhat, b_list, mhat


def _stieltjes_symbolic(n_max: int):
    q, dhat, b_list, _ = _symbolic_engine(n_max)
    dhat_prev = [1]
    betas = []
    gammas = []
    for n in range(n_max):
        dn_prev = dhat_prev if n == 0 else dhat[n - 1]
        betas.append(_to_rf(b_list[n]) / _to_rf(_zmul(dn_prev, dhat[n])))
        if 1 <= n <= n_max - 1:
            num = _zmul(dhat[n], dhat[n - 2] if n >= 2 else dhat_prev)
            den = _zmul(dhat[n - 1], dhat[n - 1])
            gammas.append(_to_rf(num) / _to_rf(den))
    Q = []
    for n, qn in enumerate(q):
        dn_prev = dhat_prev if n == 0 else dhat[n - 1]
        scale = _to_rf(dn_prev).inverse()
        Q.append(Polynomial([_to_rf(c) * scale if c else RationalFunction.const(0) for c in qn]))
    return Q, betas, gammas


def _div(a, b):
    if isinstance(b, RationalFunction):
        return a * b.inverse()
    return a / b


def hankel_dets(n_max: int, mode: AlphaMode) -> List:
    """Hankel determinants D_n = det[(u)_{i+j}], n = 0..n_max."""
    moms = moments(2 * n_max, mode)
    out = []
    for n in range(n_max + 1):
        mat = [[moms[i + j] for j in range(n + 1)] for i in range(n + 1)]
        out.append(_det(mat, mode.one()))
    return out


def _det(mat: List[List], one) -> object:
    """Exact determinant by field Gaussian elimination."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    det = one
    for k in range(n):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return one * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        det = det * piv
        for i in range(k + 1, n):
            if m[i][k]:
                factor = _div(m[i][k], piv)
                for j in range(k + 1, n):
                    m[i][j] = m[i][j] - factor * m[k][j]
    return det if sign == 1 else -det


def orthogonality_check(n_max: int, mode: AlphaMode) -> bool:
    """< u, Q_n Q_m > = 0 exactly for all n != m <= n_max, nonzero on the diagonal.

    In symbolic mode the pairings are evaluated on the determinant-scaled
    q_n = Dhat_{n-1} Q_n, which only rescales each inner product by a
    nonzero polynomial and keeps the whole check inside ZZ[a].
    """
    if mode.is_symbolic:
        q, _, _, mhat = _symbolic_engine(n_max)
        for n in range(n_max + 1):
            for m in range(n, n_max + 1):
                prod = _zmul_x(q[n], q[m])
                val = _zfunctional(mhat, prod)
                if (n == m) != bool(val):
                    return False
        return True
    Q, _, _ = stieltjes_orthogonalize(n_max, mode)
    moms = moments(2 * n_max, mode)
    for n in range(n_max + 1):
        for m in range(n, n_max + 1):
            val = apply_functional(moms, Q[n] * Q[m])
            if n == m and not val:
                return False
            if n != m and val:
                return False
    return True


def _zmul_x(p: List[list], q: List[list]) -> List[list]:
    """Product of x-polynomials with ZZ[a] coefficients."""
    out: List[list] = [[] for _ in range(len(p) + len(q) - 1)]
    for i, ci in enumerate(p):
        if not ci:
            continue
        for j, cj in enumerate(q):
            if cj:
                out[i + j] = _zadd(out[i + j], _zmul(ci, cj))
    return out


def non_orthogonality_of_P(mode: AlphaMode, search_to: int = 4) -> Tuple[int, int, object]:
    """A witness pair (n, m), n != m, with < u_0, P_n P_m > != 0."""
    P = monic_P(search_to, mode)
    moms = moments(2 * search_to, mode)
    for n in range(search_to + 1):
        for m in range(n + 1, search_to + 1):
            val = apply_functional(moms, P[n] * P[m])
            if val:
                return n, m, val
    raise AssertionError("no witness found; P would be orthogonal")


def shift_functional_check(n_max: int, mode: AlphaMode) -> bool:
    """(u_0(a))_{n+1} = a^2/(2a+1) (u_0(a+1))_n for n <= n_max, exactly."""
    a = mode.alpha
    one = mode.one()
    base = _moments_at(n_max + 1, a, one)
    shifted = _moments_at(n_max, a + 1, one)
    factor = _div(a * a, 2 * a + 1)
    return all(base[n + 1] == factor * shifted[n] for n in range(n_max + 1))


def moment_difference_probe(n_max: int, mode: AlphaMode) -> dict:
    """Evaluate both sign choices of the first-order moment difference
    equation against the closed-form moments:
    (2n + 2a + 1)(u)_{n+1} -+ (n + a)^2 (u)_n.

    The closed form satisfies the + sign; the - sign (as printed in the
    source lemma's proof) does not.  Report only, no fix applied.
    """
    a = mode.alpha
    moms = moments(n_max + 1, mode)
    plus_ok = True
    minus_ok = True
    minus_residual = None
    for n in range(n_max + 1):
        lhs = (2 * n + 2 * a + 1) * moms[n + 1]
        rhs = (n + a) * (n + a) * moms[n]
        if lhs != rhs:
            plus_ok = False
        if lhs != -rhs:
            minus_ok = False
            if minus_residual is None:
                minus_residual = lhs + rhs
    return {
        "plus_consistent": plus_ok,
        "minus_consistent": minus_ok,
        "minus_residual": minus_residual,
    }


def dual_expand(f: Polynomial, mode: AlphaMode) -> List:
    """Coordinates < u_n, f > of f in the monic basis P_n (exact triangular solve)."""
    deg = f.degree
    if deg < 0:
        return []
    P = monic_P(deg, mode)
    coords = [mode.scalar(0)] * (deg + 1)
    rem = f
    for k in range(deg, -1, -1):
        c = rem[k]
        if c:
            coords[k] = c
            rem = rem - c * P[k]
    if rem:
        raise AssertionError("triangular expansion left a residual")
    return coords


def dual_equation_check(k: int, n: int, mode: AlphaMode):
    """< u_{k+1}, L(P_n) > with L(f) = -x^2 f'' + x(2x-1-2a) f' + ((2a+1)x - a^2) f;
    equals (2n + 2a + 1) delta_{n,k}."""
    a = mode.alpha
    P = monic_P(n, mode)
    lp = -_raise(P[n], a)
    coords = dual_expand(lp, mode)
    value = coords[k + 1] if k + 1 < len(coords) else mode.scalar(0)
    expected = (2 * n + 2 * a + 1) if n == k else mode.scalar(0)
    return value, value == expected
