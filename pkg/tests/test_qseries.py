import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from partition_lab.partitions import omega_context
from partition_lab.qseries import (INF, gaussian_poly, inverse_pochhammer, multinomial_poly,
                                   poly_divmod, poly_exact_div, pochhammer, q_binomial,
                                   q_multinomial)
from partition_lab.series import VariableContext


def _box_counts(n, k):
    """Coefficients of [n choose k] as counts of partitions in a k x (n-k) box."""
    counts = {}
    for parts in itertools.combinations_with_replacement(range(n - k + 1), k):
        counts[sum(parts)] = counts.get(sum(parts), 0) + 1
    return tuple(counts.get(i, 0) for i in range(k * (n - k) + 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_gaussian_matches_box_count(nk):
    n, k = nk
    assert gaussian_poly(n, k) == _box_counts(n, k)
    assert sum(gaussian_poly(n, k)) == comb(n, k)


def test_gaussian_outside_range_is_zero():
    assert gaussian_poly(3, 4) == () and gaussian_poly(2, -1) == ()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_multinomial_is_product_of_binomials(parts):
    expected = (1,)
    run = 0
    from partition_lab.qseries import poly_mul
    for p in parts:
        run += p
        expected = poly_mul(expected, gaussian_poly(run, p))
    assert multinomial_poly(tuple(parts)) == expected


def test_exact_division_rejects_remainder():
    assert poly_divmod((1, 0, 1), (1, 1)) == ((-1, 1), (2,))
    with pytest.raises(ArithmeticError):
        poly_exact_div((1, 0, 1), (1, 1))


def _qz(order):
    ctx = VariableContext.graded(["q", "z"])
    return ctx, ctx.var("q", order), ctx.var("z", order)


@pytest.mark.parametrize("N", range(9))
def test_finite_product_expansion(N):
    order = 40
    ctx, q, z = _qz(order)
    rhs = ctx.zero(order)
    for j in range(N + 1):
        rhs = rhs + (-1) ** j * q_binomial(N, j, q) * z ** j * q ** (j * (j - 1) // 2)
    assert pochhammer(z, q, N) == rhs


@pytest.mark.parametrize("N", range(1, 9))
def test_inverse_finite_product_expansion(N):
    order = 20
    ctx, q, z = _qz(order)
    rhs = ctx.zero(order)
    for j in range(order + 1):
        rhs = rhs + q_binomial(N + j - 1, j, q) * z ** j
    assert inverse_pochhammer(z, q, N) == rhs


@pytest.mark.parametrize("n", range(11))
def test_rogers_sum(n):
    order = 60
    ctx = VariableContext.graded(["q"])
    q = ctx.var("q", order)
    lhs = ctx.zero(order)
    for j in range(n + 1):
        lhs = lhs + q_binomial(n, j, q * q) * q ** j
    assert lhs == pochhammer(-q, q, n)


@pytest.mark.parametrize("N,L,mu", [(N, L, mu) for N in range(7) for L in range(7) for mu in (0, 1)
                                    if (N, mu) != (0, 0)])
def test_convolution(N, L, mu):
    order = 60
    ctx = VariableContext.graded(["q"])
    q = ctx.var("q", order)
    lhs = ctx.zero(order)
    for i in range(L + 1):
        j = L - i
        lhs = lhs + q_binomial(N + i, i, q * q) * q_binomial(N + mu - 1 + j, j, q * q) * q ** j
    assert lhs == q_binomial(2 * N + mu + L, L, q)


def test_euler_sum_equals_product():
    order = 20
    ctx = omega_context(3)
    letters = [ctx.var(x, order) for x in "abcdef"]
    a, b = letters[0], letters[1]
    R = letters[0]
    for x in letters[1:]:
        R = R * x
    x = a + a * b
    lhs = ctx.zero(order)
    for t in range(order + 1):
        lhs = lhs + x ** t * R ** (t * (t - 1) // 2) * inverse_pochhammer(R, R, t)
    assert lhs == pochhammer(-x, R)


def test_q_multinomial_requires_matching_total():
    q = VariableContext.graded(["q"]).var("q", 5)
    with pytest.raises(ValueError):
        q_multinomial(3, (1, 1), q)


def test_infinite_product_needs_positive_degree():
    ctx = VariableContext.graded(["q"], ["t"], 5)
    t = ctx.var("t", 5)
    with pytest.raises(ValueError):
        pochhammer(ctx.var("q", 5), t, INF)
    with pytest.raises(ValueError):
        inverse_pochhammer(ctx.one(5), ctx.var("q", 5))


def test_partition_generating_function():
    # independent oracle: Euler's pentagonal recurrence for p(n)
    order = 30
    p = [1] + [0] * order
    for n in range(1, order + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1] + (sign * p[n - g2] if g2 <= n else 0)
            k += 1
        p[n] = total
    q = VariableContext.graded(["q"]).var("q", order)
    gf = inverse_pochhammer(q, q)
    assert [gf.coefficient(q=n) for n in range(order + 1)] == p


def test_base_beyond_order_keeps_first_factor():
    ctx = VariableContext.graded(["q"], ["u"], 5)
    q, u = ctx.var("q", 4), ctx.var("u", 4)
    assert pochhammer(-u * q, q ** 6) == 1 + u * q
    assert inverse_pochhammer(q, q ** 9, 3) == 1 + q + q ** 2 + q ** 3 + q ** 4
    assert pochhammer(-u * q, q ** 6, 0) == 1
