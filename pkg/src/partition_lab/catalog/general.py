"""Boulet-type product formulas, the general k-strict families and the counting identities."""

from __future__ import annotations

from ..partitions import (D, DS, E, P, PartitionClass, S, omega_context, omega_letters,
                          omega_sum, statistics)
from ..qseries import inverse_pochhammer, pochhammer, pochhammer_multi
from ..series import TruncatedSeries, VariableContext
from . import counting
from .core import enum_series, grid, register

MARKER_CAP = 1000  # markers count parts, so the weighted degree bounds them anyway


def _prod(*factors: TruncatedSeries) -> TruncatedSeries:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def _counting(name_l: str, name_r: str, refined: bool, **params):
    """Case builder comparing two literal families through q^n (s^i t^j) series."""
    ctx = VariableContext.graded(["q"], ["s", "t"] if refined else [], MARKER_CAP)

    def side(name):
        def build(order):
            terms = {}
            for n in range(order + 1):
                for pi in counting.members(name, n, **params):
                    exps = {"q": n}
                    if refined:
                        i, j = counting.marker_pair(name, pi, **params)
                        exps.update(s=i, t=j)
                    m = ctx.monomial(exps)
                    terms[m] = terms.get(m, 0) + 1
            return TruncatedSeries(ctx, order, terms)
        return build
    return ctx, side(name_l), side(name_r)


# Boulet's four-parameter formulas -----------------------------------------------------

def _abcd(order):
    ctx = omega_context(2)
    a, b, c, d = (ctx.var(x, order) for x in "abcd")
    return ctx, a, b, c, d, a * b * c * d


@register("boulet-phi", "all partitions, four-letter weight: (-a,-abc;Q)/(Q,ab,ac;Q)")
def boulet_phi():
    def rhs(order):
        ctx, a, b, c, d, Q = _abcd(order)
        return _prod(pochhammer_multi([-a, -a * b * c], Q), inverse_pochhammer(Q, Q),
                     inverse_pochhammer(a * b, Q), inverse_pochhammer(a * c, Q))
    return omega_context(2), lambda o: omega_sum(P(), o, 2), rhs


@register("boulet-psi", "distinct partitions, four-letter weight: (-a,-abc;Q)/(ab;Q)")
def boulet_psi():
    def rhs(order):
        ctx, a, b, c, d, Q = _abcd(order)
        return pochhammer_multi([-a, -a * b * c], Q) * inverse_pochhammer(a * b, Q)
    return omega_context(2), lambda o: omega_sum(D(), o, 2), rhs


@register("ss-bu-strict", "distinct partitions by index-parity sums and odd-part counts")
def ss_bu_strict():
    ctx = VariableContext.graded(["x", "y"], ["t", "z"], MARKER_CAP)

    def lhs(order):
        def rule(pi):
            st = statistics(pi)
            return {"x": st.odd_indexed_sum, "y": st.even_indexed_sum,
                    "t": st.odd_parts_odd_indexed, "z": st.odd_parts_even_indexed}
        return enum_series(ctx, order, D(), rule)

    def rhs(order):
        x, y, t, z = (ctx.var(v, order) for v in "xytz")
        base = x * x * y * y
        return pochhammer_multi([-x * t, -x * x * y * z], base) * inverse_pochhammer(x * x, base)
    return ctx, lhs, rhs


@register("bu-mod4", "distinct partitions by odd-part counts: (-qt,-q^3z,-q^2,-q^4;q^4)",
          order=24)
def bu_mod4():
    ctx = VariableContext.graded(["q"], ["t", "z"], MARKER_CAP)

    def lhs(order):
        def rule(pi):
            st = statistics(pi)
            return {"q": st.size, "t": st.odd_parts_odd_indexed, "z": st.odd_parts_even_indexed}
        return enum_series(ctx, order, D(), rule)

    def rhs(order):
        q, t, z = (ctx.var(v, order) for v in "qtz")
        q4 = q ** 4
        return pochhammer_multi([-q * t, -(q ** 3) * z, -q * q, -q4], q4)
    return ctx, lhs, rhs


# counting identities--------------------------------------------------------------------

@register("savage-sills", "distinct with even-indexed (variant 1) or odd-indexed (variant 2) "
          "parts even vs parts 1,5,6 / 2,3,7 mod 8", grid(variant=[1, 2]), order=40,
          kind="counting")
def savage_sills(variant: int):
    if variant == 1:
        return _counting("SS-even-indexed-even", "SS-parts-1-5-6-mod-8", False)
    if variant == 2:
        return _counting("SS-odd-indexed-even", "SS-parts-2-3-7-mod-8", False)
    raise ValueError("variant must be 1 or 2")


@register("odd-index-mod4", "distinct partitions: odd parts by index parity vs parts 1 and 3 mod 4",
          order=40, kind="counting")
def odd_index_mod4():
    return _counting("D-odd-by-index", "D-mod-4", True)


@register("capparelli-companion", "A_m(n) = C_m(n) from the literal gap and residue conditions",
          grid(m=[1, 2]), order=40, kind="counting")
def capparelli_companion(m: int):
    _check_m(m)
    return _counting("A", "C", False, m=m)


def _check_m(m):
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")


# general k ------------------------------------------------------------------------------

def _kvars(k: int, order: int):
    ctx = omega_context(k)
    letters = [ctx.var(x, order) for x in omega_letters(k)]
    a, b = letters[:k], letters[k:]
    z = _prod(*a)
    w = z * _prod(*b)
    x = ctx.zero(order)
    run = ctx.one(order)
    for i in range(k - 1):
        run = run * a[i]
        x = x + run
    yb = ctx.zero(order)
    run = ctx.one(order)
    for i in range(k - 1):
        run = run * b[i]
        yb = yb + run
    return ctx, x, z * yb, z, w


def _k_order(k: int) -> int:
    return max(12, 2 * k * k)


K_RANGE = [1, 2, 3, 4]


@register("gfEk", "E^k (multiples of k, even multiplicities): 1/(w;w)", grid(k=K_RANGE),
          order=_k_order)
def gf_Ek(k: int):
    def rhs(order):
        ctx, x, y, z, w = _kvars(k, order)
        return inverse_pochhammer(w, w)
    return omega_context(k), lambda o: omega_sum(E(k), o, k), rhs


@register("gfSk", "k-strict partitions: (-x,-y;w)/(z,w;w)", grid(k=K_RANGE), order=_k_order)
def gf_Sk(k: int):
    def rhs(order):
        ctx, x, y, z, w = _kvars(k, order)
        return _prod(pochhammer_multi([-x, -y], w), inverse_pochhammer(z, w),
                     inverse_pochhammer(w, w))
    return omega_context(k), lambda o: omega_sum(S(k), o, k), rhs


@register("gfDSk", "distinct k-strict partitions: (-x,-y;w)/(z;w)", grid(k=K_RANGE),
          order=_k_order)
def gf_DSk(k: int):
    def rhs(order):
        ctx, x, y, z, w = _kvars(k, order)
        return pochhammer_multi([-x, -y], w) * inverse_pochhammer(z, w)
    return omega_context(k), lambda o: omega_sum(DS(k), o, k), rhs


def dsk_eva_context(k: int) -> VariableContext:
    markers = [f"u{l}" for l in range(1, k)] + [f"v{l}" for l in range(1, k)]
    return VariableContext.graded(["x", "y"], markers, MARKER_CAP)


@register("gfDSkeva", "distinct k-strict partitions by index-parity sums and residue counts",
          grid(k=K_RANGE), order=_k_order)
def gf_DSk_eva(k: int):
    ctx = dsk_eva_context(k)

    def lhs(order):
        def rule(pi):
            st = statistics(pi, k)
            exps = {"x": st.odd_indexed_sum, "y": st.even_indexed_sum}
            for l in range(1, k):
                exps[f"u{l}"] = st.o(l)
                exps[f"v{l}"] = st.e(l)
            return exps
        return enum_series(ctx, order, DS(k), rule)

    def rhs(order):
        x, y = ctx.var("x", order), ctx.var("y", order)
        su = ctx.zero(order)
        sv = ctx.zero(order)
        for l in range(1, k):
            su = su + ctx.var(f"u{l}", order) * x ** l
            sv = sv + ctx.var(f"v{l}", order) * y ** l
        xk = x ** k
        base = xk * y ** k
        return pochhammer_multi([-su, -xk * sv], base) * inverse_pochhammer(xk, base)
    return ctx, lhs, rhs


AK_GRID = grid(k=[3, 4, 5, 6], m=[1, 2])


@register("ak-ck", "A^k_m vs C^k_m refined by the two residue-class counts", AK_GRID,
          order=30, kind="counting")
def ak_ck(k: int, m: int):
    _check_m(m)
    if k < 3:
        raise ValueError("k must be at least 3")
    return _counting("A", "C", True, k=k, m=m)


@register("ak-product", "A^k_m generating function: (-u q^(3-m),-q^k,-v q^(k+m),-q^(2k);q^(2k))",
          AK_GRID, order=30)
def ak_product(k: int, m: int):
    _check_m(m)
    ctx = VariableContext.graded(["q"], ["u", "v"], MARKER_CAP)
    cls = PartitionClass("DS", k, residues=(("odd", {k, 3 - m}), ("even", {k, m})))

    def lhs(order):
        def rule(pi):
            st = statistics(pi, k)
            return {"q": st.size, "u": st.o(3 - m), "v": st.e(m)}
        return enum_series(ctx, order, cls, rule)

    def rhs(order):
        q, u, v = (ctx.var(x, order) for x in "quv")
        return pochhammer_multi([-u * q ** (3 - m), -q ** k, -v * q ** (k + m), -q ** (2 * k)],
                                q ** (2 * k))
    return ctx, lhs, rhs
