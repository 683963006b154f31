"""q-Pochhammer symbols, Gaussian polynomials and q-multinomials.

Finite quotients of Pochhammer products are computed as exact polynomial
divisions over the integers; a nonzero remainder raises ``ArithmeticError``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .series import TruncatedSeries

INF = math.inf

Poly = tuple[int, ...]  # univariate integer polynomial, lowest degree first


# univariate integer polynomials ------------------------------------------

def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[Poly, Poly]:
    """Long division over the integers; ``den`` must be monic up to sign."""
    den = _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if lead not in (1, -1):
        raise ArithmeticError("divisor must have leading coefficient +-1")
    rem = list(_poly_trim(num))
    quot = [0] * max(len(rem) - len(den) + 1, 0)
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        c = rem[-1] * lead
        quot[shift] = c
        for i, d in enumerate(den):
            rem[shift + i] -= c * d
        rem = list(_poly_trim(rem))
    return _poly_trim(quot), tuple(rem)


def poly_exact_div(num: Sequence[int], den: Sequence[int]) -> Poly:
    quot, rem = poly_divmod(num, den)
    if rem:
        raise ArithmeticError("polynomial division left a nonzero remainder")
    return quot


def _poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def q_factorial_poly(n: int) -> Poly:
    """(X;X)_n as a coefficient tuple."""
    p: Poly = (1,)
    for i in range(1, n + 1):
        factor = [0] * (i + 1)
        factor[0], factor[i] = 1, -1
        p = poly_mul(p, factor)
    return p


@lru_cache(maxsize=None)
def gaussian_poly(n: int, k: int) -> Poly:
    """Coefficients of the Gaussian binomial [n choose k] in X; () when not n >= k >= 0."""
    if not (n >= k >= 0):
        return ()
    den = poly_mul(q_factorial_poly(k), q_factorial_poly(n - k))
    return poly_exact_div(q_factorial_poly(n), den)


@lru_cache(maxsize=None)
def multinomial_poly(parts: tuple[int, ...]) -> Poly:
    if any(p < 0 for p in parts):
        return ()
    den: Poly = (1,)
    for p in parts:
        den = poly_mul(den, q_factorial_poly(p))
    return poly_exact_div(q_factorial_poly(sum(parts)), den)


def poly_to_series(p: Sequence[int], q: TruncatedSeries) -> TruncatedSeries:
    """Evaluate the polynomial at the monomial ``q``, truncated at ``q.order``."""
    if q.is_zero():
        # q itself lies beyond the truncation order: only the constant survives
        return q.ctx.one(q.order) * (p[0] if p else 0)
    _check_monomial(q)
    (qm,) = q.terms
    ctx, order = q.ctx, q.order
    step = ctx.degree(qm)
    out = {}
    for e, c in enumerate(p):
        if not c:
            continue
        if step * e > order:
            break
        out[tuple(x * e for x in qm)] = c
    return TruncatedSeries(ctx, order, out)


# series constructors --------------------------------------------------------

def _check_monomial(q: TruncatedSeries):
    if not q.is_monomial():
        raise ValueError(f"expected a single monomial with coefficient 1, got {q}")


def _check_count(n):
    if n != INF and (not isinstance(n, int) or n < 0):
        raise ValueError(f"Pochhammer length must be a nonnegative int or INF, got {n!r}")


def pochhammer(a: TruncatedSeries, q: TruncatedSeries, n=INF) -> TruncatedSeries:
    """(a;q)_n = prod_{i<n} (1 - a q^i); for n = INF every factor that survives truncation.

    ``a`` may be any series (the constant-term-free polynomials such as
    ``-a - a*b`` occur naturally); ``q`` must be a monomial.
    """
    _check_count(n)
    if q.is_zero():
        # the base lies beyond the truncation order: only the first factor survives
        return a.ctx.one(a.order) - a if n >= 1 else a.ctx.one(a.order)
    _check_monomial(q)
    ctx = a.ctx
    order = min(a.order, q.order)
    if n == INF and q.min_degree() == 0:
        raise ValueError("infinite product does not stabilize: q has weighted degree 0")
    result = ctx.one(order)
    x = a.truncate(order)
    i = 0
    while i < n:
        if x.is_zero():
            break
        if n == INF and x.constant_term():
            raise ValueError("infinite product does not stabilize: a has a constant term")
        result = result * (1 - x)
        x = x * q
        i += 1
    return result


def pochhammer_multi(args: Sequence[TruncatedSeries], q: TruncatedSeries, n=INF) -> TruncatedSeries:
    result = q.ctx.one(q.order)
    for a in args:
        result = result * pochhammer(a, q, n)
    return result


def geometric(x: TruncatedSeries) -> TruncatedSeries:
    """1/(1 - x) for a series without constant term."""
    if x.constant_term():
        raise ValueError("1/(1 - x) needs x without constant term")
    result = x.ctx.one(x.order)
    power = x
    while not power.is_zero():
        result = result + power
        power = power * x
    return result


def inverse_pochhammer(a: TruncatedSeries, q: TruncatedSeries, n=INF) -> TruncatedSeries:
    """1/(a;q)_n expanded as a product of geometric series."""
    _check_count(n)
    if a.constant_term():
        raise ValueError("1/(a;q)_n needs a without constant term")
    if q.is_zero():
        # the base lies beyond the truncation order: only the first factor survives
        return geometric(a) if n >= 1 else a.ctx.one(a.order)
    _check_monomial(q)
    if n == INF and q.min_degree() == 0:
        raise ValueError("infinite product does not stabilize: q has weighted degree 0")
    order = min(a.order, q.order)
    result = a.ctx.one(order)
    x = a.truncate(order)
    i = 0
    while i < n and not x.is_zero():
        result = result * geometric(x)
        x = x * q
        i += 1
    return result


def q_binomial(n: int, k: int, q: TruncatedSeries) -> TruncatedSeries:
    """Gaussian polynomial [n choose k] in the monomial q; zero unless n >= k >= 0."""
    return poly_to_series(gaussian_poly(n, k), q)


def q_multinomial(total: int, parts: Sequence[int], q: TruncatedSeries) -> TruncatedSeries:
    """(q;q)_total / prod (q;q)_{n_i}; zero if some part is negative."""
    parts = tuple(parts)
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    return poly_to_series(multinomial_poly(parts), q)
