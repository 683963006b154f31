"""Identities for 3-strict partitions: infinite and bounded largest part."""

from __future__ import annotations

from ..partitions import DS, E, S, PartitionClass, omega_context, omega_sum, statistics
from ..qseries import (Poly, inverse_pochhammer, multinomial_poly, poly_exact_div, poly_mul,
                       poly_to_series, pochhammer, pochhammer_multi)
from ..series import TruncatedSeries, VariableContext, substitute
from . import counting
from .core import binom2, compositions, enum_series, grid, register
from .general import MARKER_CAP, _counting, _check_m, _prod

# o1, o2, e1, e2: odd-/even-indexed parts = 1 or 2 mod 3
STAT_MARKERS = ("s", "t", "u", "v")


def _stats3(pi) -> dict[str, int]:
    st = statistics(pi, 3)
    return {"s": st.o(1), "t": st.o(2), "u": st.e(1), "v": st.e(2)}


def _omega3(order):
    ctx = omega_context(3)
    a, b, c, d, e, f = (ctx.var(x, order) for x in "abcdef")
    return ctx, a, b, c, d, e, f, a * b * c * d * e * f


@register("gfE3", "E^3 with the six-letter weight: 1/(R;R)", order=18)
def gf_E3():
    def rhs(order):
        ctx, a, b, c, d, e, f, R = _omega3(order)
        return inverse_pochhammer(R, R)
    return omega_context(3), lambda o: omega_sum(E(3), o, 3), rhs


@register("gf3id", "3-strict partitions: (-a-ab,-abcd-abcde;R)/(abc,R;R)", order=18)
def gf_3id():
    def rhs(order):
        ctx, a, b, c, d, e, f, R = _omega3(order)
        abc = a * b * c
        return _prod(pochhammer_multi([-a - a * b, -abc * d - abc * d * e], R),
                     inverse_pochhammer(abc, R), inverse_pochhammer(R, R))
    return omega_context(3), lambda o: omega_sum(S(3), o, 3), rhs


@register("gfBid", "distinct 3-strict partitions: (-a-ab,-abcd-abcde;R)/(abc;R)", order=18)
def gf_Bid():
    def rhs(order):
        ctx, a, b, c, d, e, f, R = _omega3(order)
        abc = a * b * c
        return (pochhammer_multi([-a - a * b, -abc * d - abc * d * e], R)
                * inverse_pochhammer(abc, R))
    return omega_context(3), lambda o: omega_sum(DS(3), o, 3), rhs


def _beva_context():
    return VariableContext.graded(["x", "y"], STAT_MARKERS, MARKER_CAP)


def _beva_lhs(ctx, max_part=None):
    cls = DS(3).bounded(max_part)

    def lhs(order):
        def rule(pi):
            st = statistics(pi, 3)
            return dict(_stats3(pi), x=st.odd_indexed_sum, y=st.even_indexed_sum)
        return enum_series(ctx, order, cls, rule)
    return lhs


@register("gfBevaid", "distinct 3-strict partitions by index-parity sums and residue counts",
          order=18)
def gf_Bevaid():
    ctx = _beva_context()

    def rhs(order):
        x, y, s, t, u, v = (ctx.var(n, order) for n in "xystuv")
        x3 = x ** 3
        base = x3 * y ** 3
        return (pochhammer_multi([-s * x - t * x * x, -u * x3 * y - v * x3 * y * y], base)
                * inverse_pochhammer(x3, base))
    return ctx, _beva_lhs(ctx), rhs


# four specializations: (zeroed markers, kept markers, numerator exponents)
SPECIALIZATIONS = {
    "sv0": (("s", "v"), ("t", "u"), (2, 4)),
    "tu0": (("t", "u"), ("s", "v"), (1, 5)),
    "tv0": (("t", "v"), ("s", "u"), (1, 4)),
    "su0": (("s", "u"), ("t", "v"), (2, 5)),
}


def _special_lhs(ctx, zeroed, kept, max_part=None):
    cls = DS(3).bounded(max_part)

    def lhs(order):
        def rule(pi):
            st = _stats3(pi)
            if any(st[z] for z in zeroed):
                return None
            return {"q": sum(pi), kept[0]: st[kept[0]], kept[1]: st[kept[1]]}
        return enum_series(ctx, order, cls, rule)
    return lhs


def _register_special(name):
    zeroed, kept, (e1, e2) = SPECIALIZATIONS[name]

    @register(f"gfBeva-{name}",
              f"distinct 3-strict partitions with {zeroed[0]}={zeroed[1]}=0 at x=y=q; "
              "form 1: quotient, form 2: product", grid(form=[1, 2]), order=30)
    def factory(form: int):
        ctx = VariableContext.graded(["q"], kept, MARKER_CAP)

        def rhs(order):
            q = ctx.var("q", order)
            m1, m2 = ctx.var(kept[0], order), ctx.var(kept[1], order)
            q6 = q ** 6
            if form == 1:
                return (pochhammer_multi([-m1 * q ** e1, -m2 * q ** e2], q6)
                        * inverse_pochhammer(q ** 3, q6))
            if form == 2:
                return pochhammer_multi([-m1 * q ** e1, -q ** 3, -m2 * q ** e2, -q6], q6)
            raise ValueError("form must be 1 (quotient) or 2 (product)")
        return ctx, _special_lhs(ctx, zeroed, kept), rhs


for _name in SPECIALIZATIONS:
    _register_special(_name)


@register("capparelli-refined", "A_m vs C_m refined: parts 2 and 1 mod 3 against "
          "3m-1 and 3m+1 mod 6", grid(m=[1, 2]), order=30, kind="counting")
def capparelli_refined(m: int):
    _check_m(m)
    return _counting("A", "C", True, m=m)


@register("d1-d2", "distinct parts avoiding -m mod 3: index-parity markers vs mod-6 markers",
          grid(m=[1, 2]), order=30, kind="counting")
def d1_d2(m: int):
    _check_m(m)
    return _counting("DI", "DII", True, m=m)


# bounded largest part -------------------------------------------------------------------

N3 = range(0, 5)


@register("gfE3b", "E^3 with largest part <= N: 1/(R;R)_(N//3)", grid(N=range(0, 9)), order=18)
def gf_E3b(N: int):
    def rhs(order):
        ctx, a, b, c, d, e, f, R = _omega3(order)
        return inverse_pochhammer(R, R, N // 3)
    return omega_context(3), lambda o: omega_sum(E(3).bounded(N), o, 3), rhs


def s3_bounded(N: int, mu: int, order: int) -> TruncatedSeries:
    """Closed form for the six-letter sum over 3-strict partitions with parts <= 3N + mu."""
    ctx, a, b, c, d, e, f, R = _omega3(order)
    abc = a * b * c
    if mu == 1:
        base = s3_bounded(N, 0, order)
        swap = {"a": {"d": 1}, "b": {"e": 1}, "c": {"f": 1},
                "d": {"a": 1}, "e": {"b": 1}, "f": {"c": 1}}
        return base + a * abc ** N * substitute(base, swap)
    if mu not in (0, 2):
        raise ValueError("mu must be 0, 1 or 2")
    shift = 1 if mu == 2 else 0
    total = ctx.zero(order)
    for t1, t2, t3, t4 in compositions(N, 4):
        term = _prod(R ** (binom2(t1 + shift) + binom2(t2)), (a + a * b) ** t1,
                     (abc * d + abc * d * e) ** t2, abc ** t3,
                     *(inverse_pochhammer(R, R, t) for t in (t1, t2, t3, t4)))
        total = total + term
    if mu == 2:
        total = (1 + a + a * b) * total
    return total


@register("S3-bounded", "3-strict partitions with parts <= 3N+mu, block-sum formula",
          grid(N=N3, mu=[0, 1, 2]), order=18)
def s3_bounded_case(N: int, mu: int):
    cls = S(3).bounded(3 * N + mu)
    return omega_context(3), lambda o: omega_sum(cls, o, 3), lambda o: s3_bounded(N, mu, o)


@register("DS3-bounded", "distinct 3-strict partitions with parts <= 3N+mu: (R;R)_N times S",
          grid(N=N3, mu=[0, 1, 2]), order=18)
def ds3_bounded_case(N: int, mu: int):
    cls = DS(3).bounded(3 * N + mu)

    def rhs(order):
        ctx, a, b, c, d, e, f, R = _omega3(order)
        return pochhammer(R, R, N) * s3_bounded(N, mu, order)
    return omega_context(3), lambda o: omega_sum(cls, o, 3), rhs


def beva_bounded(N: int, mu: int, order: int) -> TruncatedSeries:
    ctx = _beva_context()
    x, y, s, t, u, v = (ctx.var(n, order) for n in "xystuv")
    if mu == 1:
        base = beva_bounded(N, 0, order)
        swap = {"s": {"u": 1}, "t": {"v": 1}, "u": {"s": 1}, "v": {"t": 1},
                "x": {"y": 1}, "y": {"x": 1}}
        return base + s * x ** (3 * N + 1) * substitute(base, swap)
    if mu not in (0, 2):
        raise ValueError("mu must be 0, 1 or 2")
    x3 = x ** 3
    base = x3 * y ** 3
    first = s * x + t * x * x
    second = u * x3 * y + v * x3 * y * y
    shift = 1 if mu == 2 else 0
    total = ctx.zero(order)
    for i, j, k, l in compositions(N, 4):
        coeff = poly_to_series(multinomial_poly((i, j, k, l)), base)
        total = total + _prod(coeff, first ** i, second ** j, x3 ** k,
                              base ** (binom2(i + shift) + binom2(j)))
    if mu == 2:
        total = (1 + first) * total
    return total


@register("gfBeva-bounded", "distinct 3-strict partitions with parts <= 3N+mu by "
          "index-parity sums and residue counts", grid(N=N3, mu=[0, 1, 2]), order=18)
def gf_beva_bounded(N: int, mu: int):
    ctx = _beva_context()
    return ctx, _beva_lhs(ctx, 3 * N + mu), lambda o: beva_bounded(N, mu, o)


# the eight polynomial formulas at x = y = q ------------------------------------------------

def ds3_max_size(L: int) -> int:
    """Largest size of a distinct 3-strict partition with parts <= L."""
    total = sum(p for p in range(3, L + 1, 3))
    for start in range(1, L + 1, 3):
        total += min(start + 1, L)
    return total


def _p_order(N: int, mu: int, **_) -> int:
    return max(12, ds3_max_size(3 * N + mu))


def p_bounded(name: str, N: int, mu: int, order: int) -> TruncatedSeries:
    zeroed, kept, _ = SPECIALIZATIONS[name]
    ctx = VariableContext.graded(["q"], kept, MARKER_CAP)
    q = ctx.var("q", order)
    m1, m2 = ctx.var(kept[0], order), ctx.var(kept[1], order)
    q6 = q ** 6
    # first kept marker is t (alpha = 1) or s (alpha = 2); second is u (beta = 1) or v (beta = 2)
    alpha = 1 if kept[0] == "t" else 2
    beta = 1 if kept[1] == "u" else 2
    total = ctx.zero(order)
    for i, j, k, l in compositions(N, 4):
        coeff = poly_to_series(multinomial_poly((i, j, k, l)), q6)
        if mu in (0, 2):
            e = 3 * i * i + (3 * mu - alpha) * i + 3 * j * j + beta * j + 3 * k
            term = m1 ** i * m2 ** j * q ** e
        elif mu == 1:
            e = 3 * i * i - alpha * i + 3 * j * j + beta * j + 3 * k
            term = m1 ** i * m2 ** j
            if name == "tu0":
                term = term + m1 ** (j + 1) * m2 ** i * q ** (i - j + 3 * N + 1)
            elif name == "tv0":
                term = term + m1 ** (j + 1) * m2 ** i * q ** (3 * N + 1)
            term = term * q ** e
        else:
            raise ValueError("mu must be 0, 1 or 2")
        total = total + coeff * term
    if mu == 2:
        total = (1 + m1 * q ** (3 - alpha)) * total
    return total


def _register_p(name):
    zeroed, kept, _ = SPECIALIZATIONS[name]

    @register(f"P-bounded-{name}",
              f"P_(3N+mu) with {zeroed[0]}={zeroed[1]}=0: multinomial sums",
              grid(N=N3, mu=[0, 1, 2]), order=_p_order)
    def factory(N: int, mu: int):
        ctx = VariableContext.graded(["q"], kept, MARKER_CAP)
        return (ctx, _special_lhs(ctx, zeroed, kept, 3 * N + mu),
                lambda o: p_bounded(name, N, mu, o))


for _name in SPECIALIZATIONS:
    _register_p(_name)


def P_polynomial(N: int, mu: int, order: int, zero: tuple[str, ...] = ()) -> TruncatedSeries:
    """Enumerated P_(3N+mu)(s,t,u,v;q); markers listed in ``zero`` are set to 0."""
    kept = tuple(m for m in STAT_MARKERS if m not in zero)
    ctx = VariableContext.graded(["q"], kept, MARKER_CAP)

    def rule(pi):
        st = _stats3(pi)
        if any(st[z] for z in zero):
            return None
        return dict({m: st[m] for m in kept}, q=sum(pi))
    return enum_series(ctx, order, DS(3).bounded(3 * N + mu), rule)


# coefficient formulas ------------------------------------------------------------------

def _stretch(p: Poly, step: int) -> Poly:
    out = [0] * (step * (len(p) - 1) + 1) if p else []
    for e, c in enumerate(p):
        out[step * e] = c
    return tuple(out)


def F_poly(N: int, i: int, j: int) -> Poly:
    """[N; i, j, N-i-j]_(q^6) (-q^3;q^3)_(N-i-j) as a polynomial in q."""
    if i < 0 or j < 0 or i + j > N:
        return ()
    p = _stretch(multinomial_poly((i, j, N - i - j)), 6)
    for r in range(N - i - j):
        factor = [0] * (3 * (r + 1) + 1)
        factor[0] = factor[-1] = 1
        p = poly_mul(p, factor)
    return p


def G_poly(N: int, i: int, j: int) -> Poly:
    num_factor = [0] * (3 * (N + 1 + i - j) + 1)
    num_factor[0], num_factor[-1] = 1, -1
    den = [0] * (6 * (N + 1) + 1)
    den[0], den[-1] = 1, -1
    return poly_exact_div(poly_mul(num_factor, F_poly(N + 1, i, j)), den)


def omega_exp(m: int, i: int, j: int) -> int:
    return (3 * i - m) * i + (3 * j + m) * j


def pi_exp(m: int, i: int, j: int) -> int:
    return omega_exp(m, i, j) + (-1) ** m * i


# coeffN: (specialization, exponent, mu values using F; others use G)
COEFF = {
    1: ("sv0", lambda i, j: omega_exp(1, i, j), (0, 1)),
    2: ("tu0", lambda i, j: omega_exp(2, i, j), (0,)),
    3: ("tv0", lambda i, j: pi_exp(1, i, j), (0,)),
    4: ("su0", lambda i, j: pi_exp(2, i, j), (0, 1)),
}


@register("coeff", "marker coefficients of P_(3N+mu) through F_N and G_N, all i, j <= N",
          grid(which=[1, 2, 3, 4], N=N3, mu=[0, 1, 2]),
          order=lambda which, N, mu: _p_order(N, mu))
def coeff_case(which: int, N: int, mu: int):
    if which not in COEFF:
        raise ValueError("which must be 1..4")
    name, expo, f_mus = COEFF[which]
    zeroed, kept, _ = SPECIALIZATIONS[name]
    ctx = VariableContext.graded(["q"], kept, MARKER_CAP)
    full = _special_lhs(ctx, zeroed, kept, 3 * N + mu)

    def lhs(order):
        s = full(order)
        i0, j0 = ctx.index(kept[0]), ctx.index(kept[1])
        keep = {m: c for m, c in s.terms.items() if m[i0] <= N and m[j0] <= N}
        return TruncatedSeries(ctx, order, keep)

    def rhs(order):
        q = ctx.var("q", order)
        total = ctx.zero(order)
        for i in range(N + 1):
            for j in range(N + 1):
                poly = F_poly(N, i, j) if mu in f_mus else G_poly(N, i, j)
                if not poly:
                    continue
                mono = ctx.term(order, exps={kept[0]: i, kept[1]: j, "q": expo(i, j)})
                total = total + mono * poly_to_series(poly, q)
        return total
    return ctx, lhs, rhs


def _d_order(m: int, N: int) -> int:
    return max(12, sum(p for p in range(1, 3 * N + 1) if p % 3 != (-m) % 3))


@register("d1-d2-bounded", "bounded D^I vs D^II, parts <= 3N with the mod-6 caps",
          grid(m=[1, 2], N=N3), order=_d_order, kind="counting")
def d1_d2_bounded(m: int, N: int):
    _check_m(m)
    return _counting("DI", "DII", True, m=m, N=N)
