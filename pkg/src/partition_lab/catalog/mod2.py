"""Identities for 2-strict, ordinary and distinct partitions with bounded parts and length.

Evaluations at (a, b, c, d) = (qs, q/s, qt, q/t) are realised by the
equivalent marker weight q^|pi| s^odd(pi_o) t^odd(pi_e), which keeps every
exponent nonnegative.
"""

from __future__ import annotations

from ..bijections import column_strip, jump_decompose
from ..partitions import D, E, P, S, PartitionClass, omega_context, omega_sum, statistics
from ..qseries import (inverse_pochhammer, pochhammer, pochhammer_multi, q_binomial)
from ..series import TruncatedSeries, VariableContext, extract_coefficient, substitute
from .core import binom2, compositions, enum_series, grid, register
from .general import MARKER_CAP, _prod

Z_CAP = 8


def _abcd(order):
    ctx = omega_context(2)
    a, b, c, d = (ctx.var(x, order) for x in "abcd")
    return ctx, a, b, c, d, a * b * c * d


def _bounded(kind_cls: PartitionClass, N, M=None) -> PartitionClass:
    return kind_cls.bounded(N, M)


@register("gfE2", "E^2 with the four-letter weight: 1/(Q;Q)")
def gf_E2():
    def rhs(order):
        ctx, a, b, c, d, Q = _abcd(order)
        return inverse_pochhammer(Q, Q)
    return omega_context(2), lambda o: omega_sum(E(2), o, 2), rhs


@register("gf2id", "2-strict partitions: (-a,-abc;Q)/(ab,Q;Q)")
def gf_2id():
    def rhs(order):
        ctx, a, b, c, d, Q = _abcd(order)
        return _prod(pochhammer_multi([-a, -a * b * c], Q), inverse_pochhammer(a * b, Q),
                     inverse_pochhammer(Q, Q))
    return omega_context(2), lambda o: omega_sum(S(2), o, 2), rhs


@register("gfE2b", "E^2 with largest part <= N: 1/(Q;Q)_(N//2)", grid(N=range(0, 9)))
def gf_E2b(N: int):
    def rhs(order):
        ctx, a, b, c, d, Q = _abcd(order)
        return inverse_pochhammer(Q, Q, N // 2)
    return omega_context(2), lambda o: omega_sum(E(2).bounded(N), o, 2), rhs


N2 = range(0, 6)
NU = [0, 1]


def s2_single(N: int, nu: int, order: int, form: int = 1) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    total = ctx.zero(order)
    for i in range(N + 1):
        core = _prod(pochhammer(-a, Q, N - i + nu), pochhammer(-c, Q, i), (a * b) ** i)
        if form == 1:
            core = core * inverse_pochhammer(Q, Q, N - i) * inverse_pochhammer(Q, Q, i)
        elif form == 2:
            core = core * q_binomial(N, i, Q)
        else:
            raise ValueError("form must be 1 or 2")
        total = total + core
    if form == 2:
        total = total * inverse_pochhammer(Q, Q, N)
    return total


@register("gfS2bid", "2-strict partitions with parts <= 2N+nu; form 1 quotient sum, "
          "form 2 Gaussian-binomial sum", grid(N=N2, nu=NU, form=[1, 2]))
def gf_S2bid(N: int, nu: int, form: int):
    cls = S(2).bounded(2 * N + nu)
    return omega_context(2), lambda o: omega_sum(cls, o, 2), lambda o: s2_single(N, nu, o, form)


def iz1(N: int, nu: int, order: int) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    total = ctx.zero(order)
    for i in range(N + 1):
        total = total + _prod(q_binomial(N, i, Q), pochhammer(-a, Q, N - i + nu),
                              pochhammer(-c, Q, i), (a * b) ** i)
    return total


def iz2(N: int, nu: int, order: int) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    total = ctx.zero(order)
    for i in range(N + 1):
        total = total + _prod(pochhammer(-a, Q, N - i + nu), pochhammer(-c, Q, i), (a * b) ** i,
                              inverse_pochhammer(Q, Q, N - i), inverse_pochhammer(Q, Q, i))
    return inverse_pochhammer(a * c, Q, N + nu) * total


def bu1(N: int, nu: int, order: int) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    total = ctx.zero(order)
    for i in range(N + 1):
        # (ac;Q)_(N+nu) / (ac;Q)_(i+nu) = (ac Q^(i+nu);Q)_(N-i)
        total = total + _prod(q_binomial(N, i, Q), pochhammer(-a, Q, i + nu),
                              pochhammer(-a * b * c, Q, i),
                              pochhammer(a * c * Q ** (i + nu), Q, N - i), (a * b) ** (N - i))
    return total


def bu2(N: int, nu: int, order: int) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    total = ctx.zero(order)
    for i in range(N + 1):
        total = total + _prod(pochhammer(-a, Q, i + nu), pochhammer(-a * b * c, Q, i),
                              (a * b) ** (N - i), inverse_pochhammer(Q, Q, i),
                              inverse_pochhammer(a * c, Q, i + nu),
                              inverse_pochhammer(Q, Q, N - i))
    return total


SINGLE = {"iz1": (iz1, D), "iz2": (iz2, P), "bu1": (bu1, D), "bu2": (bu2, P)}


def _register_single(name):
    fn, cls_factory = SINGLE[name]
    target = "distinct" if cls_factory is D else "ordinary"

    @register(name, f"{target} partitions with parts <= 2N+nu, four-letter weight",
              grid(N=N2, nu=NU))
    def factory(N: int, nu: int):
        cls = cls_factory().bounded(2 * N + nu)
        return omega_context(2), lambda o: omega_sum(cls, o, 2), lambda o: fn(N, nu, o)


for _name in SINGLE:
    _register_single(_name)


@register("iz-bu", "two expansions of one function: iz1 = bu1 (which=1), iz2 = bu2 (which=2)",
          grid(which=[1, 2], N=N2, nu=NU), order=16)
def iz_bu(which: int, N: int, nu: int):
    if which == 1:
        return omega_context(2), lambda o: iz1(N, nu, o), lambda o: bu1(N, nu, o)
    if which == 2:
        return omega_context(2), lambda o: iz2(N, nu, o), lambda o: bu2(N, nu, o)
    raise ValueError("which must be 1 or 2")


# doubly bounded ------------------------------------------------------------------------

NM = range(0, 7)


@register("conju", "conjugation: Phi_(N,M)(a,b,c,d) = Phi_(M,N)(a,c,b,d)", grid(N=NM, M=NM))
def conju(N: int, M: int):
    swap = {"b": {"c": 1}, "c": {"b": 1}}
    return (omega_context(2), lambda o: omega_sum(P().bounded(N, M), o, 2),
            lambda o: substitute(omega_sum(P().bounded(M, N), o, 2), swap))


def _gauss(n: int, k: int, base: TruncatedSeries) -> TruncatedSeries:
    """Gaussian binomial with [n, 0] = 1 for every n, including n = -1."""
    if k == 0:
        return base.ctx.one(base.order)
    return q_binomial(n, k, base)


def _s2_block_sum(N: int, M: int, nu: int, mu: int, order: int) -> TruncatedSeries:
    """The quadruple sum for 2-strict partitions with parts <= 2N+nu and length <= 2M+mu."""
    ctx, a, b, c, d, Q = _abcd(order)
    abc = a * b * c
    total = ctx.zero(order)
    for m1, m2, m3, m4 in compositions(N, 4):
        term = _prod(_gauss(M + mu - nu, m1, Q), a ** m1, Q ** binom2(m1 + nu),
                     _gauss(M + mu - 1 + m2, m2, Q), (a * b) ** m2,
                     q_binomial(M, m3, Q), abc ** m3, Q ** binom2(m3),
                     q_binomial(M + m4, m4, Q))
        total = total + term
    if nu:
        total = (1 + a) * total
    return total


@register("gfS2-doubly", "2-strict partitions with parts <= 2N+nu and at most 2M+mu parts",
          grid(N=NM, M=NM, nu=NU, mu=NU), where=lambda N, M, nu, mu: M + mu + (1 - nu) >= 1)
def gf_S2_doubly(N: int, M: int, nu: int, mu: int):
    cls = S(2).bounded(2 * N + nu, 2 * M + mu)
    return (omega_context(2), lambda o: omega_sum(cls, o, 2),
            lambda o: _s2_block_sum(N, M, nu, mu, o))


def phinm(N: int, M: int, nu: int, mu: int, order: int) -> TruncatedSeries:
    """Closed form for ordinary partitions with parts <= 2N+nu and length <= 2M+mu."""
    if N + nu < 1:
        raise ValueError("the expansion needs N + nu >= 1")
    ctx, a, b, c, d, Q = _abcd(order)
    ac = a * c
    total = ctx.zero(order)
    if mu == 0:
        total = ac ** M * q_binomial(N + M + nu - 1, M, Q)
    for k in range(M + mu):
        total = total + _prod(ac ** k, q_binomial(N + k + nu - 1, k, Q),
                              _s2_block_sum(N, M - k, nu, mu, order))
    return total


def phi_closed(N: int, M: int, order: int) -> TruncatedSeries:
    """Phi_(N,M) for full bounds via the closed form; N = 0 leaves only the empty partition."""
    if N == 0:
        return omega_context(2).one(order)
    return phinm(N // 2, M // 2, N % 2, M % 2, order)


def psi_closed(N: int, M: int, order: int) -> TruncatedSeries:
    ctx, a, b, c, d, Q = _abcd(order)
    ac = a * c
    total = ctx.zero(order)
    for m in range(M // 2 + 1):
        inner = ctx.zero(order)
        for k in range(m + 1):
            inner = inner + _prod(q_binomial(N // 2, k, Q), q_binomial((N + 1) // 2, m - k, Q),
                                  ac ** (m - k), Q ** (k * (k + 1 - m) + binom2(m)))
        total = total + (-1) ** m * inner * phi_closed(N, M - 2 * m, order)
    return total


@register("phinm", "ordinary partitions with parts <= 2N+nu and length <= 2M+mu",
          grid(N=NM, M=NM, nu=NU, mu=NU), where=lambda N, M, nu, mu: N + nu >= 1)
def phinm_case(N: int, M: int, nu: int, mu: int):
    cls = P().bounded(2 * N + nu, 2 * M + mu)
    return (omega_context(2), lambda o: omega_sum(cls, o, 2),
            lambda o: phinm(N, M, nu, mu, o))


@register("psinm", "distinct partitions with parts <= N and length <= M via Phi",
          grid(N=NM, M=NM))
def psinm_case(N: int, M: int):
    cls = D().bounded(N, M)
    return omega_context(2), lambda o: omega_sum(cls, o, 2), lambda o: psi_closed(N, M, o)


def phi_psi_bounded(N: int, M: int | None, which: str, method: str, order: int) -> TruncatedSeries:
    """One bounded generating function by the chosen expansion.

    ``which`` is ``"Phi"`` (ordinary), ``"Psi"`` (distinct) or ``"S2"`` (2-strict);
    ``M = None`` means no length bound.  ``iz``/``bu`` need ``M = None``,
    ``closed`` a finite ``M`` and ``blocks`` applies to ``S2`` only.
    """
    which = {"Φ": "Phi", "Ψ": "Psi"}.get(which, which)
    if which not in ("Phi", "Psi", "S2"):
        raise ValueError(f"which must be Phi, Psi or S2, got {which!r}")
    if method == "enumerate":
        base = {"Phi": P(), "Psi": D(), "S2": S(2)}[which]
        return omega_sum(base.bounded(N, M), order, 2)
    if method in ("iz", "bu"):
        if M is not None or which == "S2":
            raise ValueError(f"method {method} covers Phi/Psi with no length bound only")
        fn = {("iz", "Psi"): iz1, ("iz", "Phi"): iz2,
              ("bu", "Psi"): bu1, ("bu", "Phi"): bu2}[method, which]
        return fn(N // 2, N % 2, order)
    if method == "closed":
        if M is None or which == "S2":
            raise ValueError("method closed covers Phi/Psi with both bounds finite")
        return phi_closed(N, M, order) if which == "Phi" else psi_closed(N, M, order)
    if method == "blocks":
        if M is None or which != "S2":
            raise ValueError("method blocks covers S2 with both bounds finite")
        if M == 0:
            return omega_context(2).one(order)
        return _s2_block_sum(N // 2, M // 2, N % 2, M % 2, order)
    raise ValueError(f"unknown method {method!r}")


def _z_context():
    return VariableContext.graded("abcd", ["z"], Z_CAP)


def _length_series(ctx, order, cls):
    def rule(pi):
        w = dict(zip("abcd", _omega2(pi)))
        w["z"] = len(pi)
        return w
    return enum_series(ctx, order, cls, rule)


def _omega2(pi):
    from ..partitions import omega_weight
    return omega_weight(pi, 2)


def _by_length(ctx, order, cls_factory, N):
    """sum over M <= Z_CAP of z^M times the sum over cls bounded by (N, M)."""
    total = ctx.zero(order)
    for M in range(Z_CAP + 1):
        total = total + ctx.term(order, z=M) * enum_series(
            ctx, order, cls_factory().bounded(N, M), lambda pi: dict(zip("abcd", _omega2(pi))))
    return total


def _register_key(name, cls_factory):
    @register(name, "length generating function over 1 - z against the sum of bounded "
              "functions in z", grid(N=NM))
    def factory(N: int):
        from ..qseries import geometric
        ctx = _z_context()

        def lhs(order):
            return _length_series(ctx, order, cls_factory().bounded(N)) * geometric(
                ctx.var("z", order))
        return ctx, lhs, lambda o: _by_length(ctx, o, cls_factory, N)


_register_key("key1", P)
_register_key("key2", D)


@register("phipsi", "sum_M Phi_(N,M) z^M times (z^2 Q;Q)(z^2 ac;Q) = sum_M Psi_(N,M) z^M",
          grid(N=NM))
def phipsi(N: int):
    ctx = _z_context()

    def lhs(order):
        a, c, z = ctx.var("a", order), ctx.var("c", order), ctx.var("z", order)
        Q = _prod(*(ctx.var(x, order) for x in "abcd"))
        return _prod(_by_length(ctx, order, P, N), pochhammer(z * z * Q, Q, N // 2),
                     pochhammer(z * z * a * c, Q, (N + 1) // 2))
    return ctx, lhs, lambda o: _by_length(ctx, o, D, N)


# marker-weighted polynomials -----------------------------------------------------------

def _qst_context():
    return VariableContext.graded(["q"], ["s", "t"], MARKER_CAP)


def _qst_rule(pi):
    st = statistics(pi)
    return {"q": st.size, "s": st.odd_parts_odd_indexed, "t": st.odd_parts_even_indexed}


def phi_qst(N: int, M: int | None, order: int) -> TruncatedSeries:
    """Enumerated Phi_(N,M) at (qs, q/s, qt, q/t)."""
    return enum_series(_qst_context(), order, P().bounded(N, M), _qst_rule)


LEM = range(0, 4)


def _lem_order(N, M, nu, mu, **_):
    return max(12, (2 * N + nu) * (2 * M + mu))


@register("lem1", "[s^0 t^j] of Phi_(2N+nu,2M+mu)(qs,q/s,qt,q/t)",
          grid(N=LEM, M=LEM, nu=NU, mu=NU), order=_lem_order)
def lem1(N: int, M: int, nu: int, mu: int):
    ctx = _qst_context()

    def rhs(order):
        q = ctx.var("q", order)
        total = ctx.zero(order)
        for j in range(min(M, N) + 1):
            total = total + _prod(ctx.term(order, t=j, q=j * (2 * j + 1)),
                                  q_binomial(M, j, q ** 4),
                                  q_binomial(2 * M + N + mu - j, N - j, q * q))
        return total
    return (ctx, lambda o: extract_coefficient(phi_qst(2 * N + nu, 2 * M + mu, o), {"s": 0}),
            rhs)


@register("lem2", "[s^i t^0] of Phi_(2N+nu,2M+mu)(qs,q/s,qt,q/t)",
          grid(N=LEM, M=LEM, nu=NU, mu=NU), order=_lem_order)
def lem2(N: int, M: int, nu: int, mu: int):
    ctx = _qst_context()

    def rhs(order):
        q = ctx.var("q", order)
        q2, q4 = q * q, q ** 4
        total = ctx.zero(order)
        for i in range(N + nu + 1):
            total = total + _prod(ctx.term(order, s=i, q=i + 2 * (i + nu) * (i + nu - 1)),
                                  _gauss(M + mu - nu, i, q4),
                                  q_binomial(2 * M + mu + N - i, N - i, q2))
            if nu and i >= 1:
                total = total + _prod(ctx.term(order, s=i, q=i + 2 * (i + nu - 1) * (i + nu - 2)),
                                      q_binomial(M + mu - nu, i - 1, q4),
                                      q_binomial(2 * M + mu + N - i + 1, N - i + 1, q2))
        return total
    return (ctx, lambda o: extract_coefficient(phi_qst(2 * N + nu, 2 * M + mu, o), {"t": 0}),
            rhs)


IJ_MAX = 4


def plain_P(N: int, i: int, j: int, m: int, order: int) -> TruncatedSeries:
    """Partitions with largest part exactly N, i odd-indexed and j even-indexed odd parts,
    and at most m even parts, as a series in q."""
    ctx = VariableContext.graded(["q"])

    def rule(pi):
        st = statistics(pi)
        if not pi or pi[0] != N:
            return None
        if (st.odd_parts_odd_indexed, st.odd_parts_even_indexed) != (i, j):
            return None
        return {"q": st.size}
    return enum_series(ctx, order, P().bounded(N, m + i + j), rule)


def tilde_P(N: int, i: int, j: int, m: int, order: int) -> TruncatedSeries:
    """Distinct parts <= N with i odd-indexed and j even-indexed odd parts and m even parts."""
    ctx = VariableContext.graded(["q"])

    def rule(pi):
        st = statistics(pi)
        if (st.odd_parts_odd_indexed, st.odd_parts_even_indexed) != (i, j):
            return None
        if len(pi) - i - j != m:
            return None
        return {"q": st.size}
    return enum_series(ctx, order, D().bounded(N, m + i + j), rule)


def _marked(ctx, order, N_max_part, m, kind, exact_top, exact_even):
    """Series in q, s, t over the relevant class with i, j <= IJ_MAX."""
    if kind == "P":
        cls = P().bounded(N_max_part, m + 2 * IJ_MAX)
    else:
        cls = D().bounded(N_max_part, m + 2 * IJ_MAX)

    def rule(pi):
        r = _qst_rule(pi)
        if r["s"] > IJ_MAX or r["t"] > IJ_MAX:
            return None
        if exact_top and (not pi or pi[0] != N_max_part):
            return None
        evens = len(pi) - r["s"] - r["t"]
        if (exact_even and evens != m) or evens > m:
            return None
        return r
    return enum_series(ctx, order, cls, rule)


@register("key-formula", "largest part exactly N as a difference of Phi_N and Phi_(N-1), "
          "all i, j <= 4", grid(N=range(1, 6), m=range(0, 5)),
          order=lambda N, m: max(12, N * (m + 2 * IJ_MAX)))
def key_formula(N: int, m: int):
    ctx = _qst_context()

    def rhs(order):
        total = ctx.zero(order)
        for i in range(IJ_MAX + 1):
            for j in range(IJ_MAX + 1):
                L = m + i + j
                diff = phi_qst(N, L, order) - phi_qst(N - 1, L, order)
                total = total + extract_coefficient(diff, {"s": i, "t": j}) * ctx.term(
                    order, s=i, t=j)
        return total
    return ctx, lambda o: _marked(ctx, o, N, m, "P", True, False), rhs


def _qbin_sq(n, k, base):
    return q_binomial(n, k, base)


def _ceil_half(x):
    return -((-x) // 2)


def _cor_order(N, m, top):
    return max(12, top * (m + IJ_MAX))


def _register_cor(variant):
    top_of = {1: lambda N: 2 * N, 2: lambda N: 2 * N, 3: lambda N: 2 * N + 1}[variant]
    Ns = range(0, 6) if variant == 3 else range(1, 6)
    marker = "t" if variant == 1 else "s"
    other = "s" if variant == 1 else "t"

    @register(f"ana-final-bu-{variant}",
              "largest part exactly " + ("2N+1" if variant == 3 else "2N") + ", "
              + ("no odd-indexed" if variant == 1 else "no even-indexed") + " odd parts, "
              "at most m even parts; closed forms for all marker counts <= 4",
              grid(N=Ns, m=range(0, 5)), order=lambda N, m: _cor_order(N, m, top_of(N)))
    def factory(N: int, m: int):
        ctx = _qst_context()
        top = top_of(N)

        def lhs(order):
            s = _marked(ctx, order, top, m, "P", True, False)
            return extract_coefficient(s, {other: 0})

        def rhs(order):
            q = ctx.var("q", order)
            q2, q4 = q * q, q ** 4
            total = ctx.zero(order)
            for x in range(IJ_MAX + 1):
                if variant == 1:
                    e = 2 * N + x * (2 * x - 1)
                    body = _prod(q_binomial((m + x) // 2, x, q4), q_binomial(m + N - 1, N - x, q2))
                elif variant == 2:
                    e = 2 * N + x * (2 * x + 1)
                    body = _prod(q_binomial(_ceil_half(m + x) - 1, x, q4),
                                 q_binomial(m + N - 1, N - x, q2))
                else:
                    if x < 1:
                        continue
                    e = 2 * N + x * (2 * x - 3) + 2
                    body = _prod(q_binomial(_ceil_half(m + x) - 1, x - 1, q4),
                                 q_binomial(m + N, N - x + 1, q2))
                total = total + ctx.term(order, q=e, **{marker: x}) * body
            return total
        return ctx, lhs, rhs


for _v in (1, 2, 3):
    _register_cor(_v)


def _tilde_order(top):
    return max(12, top * (top + 1) // 2)


def final_bu(variant: int, N: int, nu: int, m: int, x: int, order: int) -> TruncatedSeries:
    """Closed form for the distinct-parts polynomial with marker count x (j or i)."""
    ctx = VariableContext.graded(["q"])
    q = ctx.var("q", order)
    q2, q4 = q * q, q ** 4
    sign = (-1) ** (m + x)
    if variant == 1:
        e = x * (x + 1) + m * (m + 1) - x * sign
        return ctx.term(order, q=e) * q_binomial((m + x) // 2, x, q4) * q_binomial(N + x, x + m, q2)
    if variant == 2:
        e = x * (x + 1) + m * (m + 1) + x * sign
        return (ctx.term(order, q=e) * q_binomial(_ceil_half(m + x), x, q4)
                * q_binomial(N + x, x + m, q2))
    if variant == 3:
        e1 = x * (x + 1) + m * (m + 1) + x * sign
        first = (ctx.term(order, q=e1) * q_binomial(_ceil_half(m + x), x, q4)
                 * q_binomial(N + x - 1, x + m, q2))
        e2 = x * (x + 1) + m * (m - 1) + x * sign + 2 * N
        if e2 < 0:
            return first
        second = (ctx.term(order, q=e2) * q_binomial((m + x - 1) // 2, x, q4)
                  * q_binomial(N + x - 1, x + m - 1, q2))
        return first + second
    raise ValueError("variant must be 1, 2 or 3")


def _register_final(variant):
    if variant == 1:
        points = grid(N=range(0, 6), nu=NU, m=range(0, 5))
    elif variant == 2:
        points = grid(N=range(0, 6), nu=[1], m=range(0, 5))
    else:
        points = grid(N=range(1, 6), nu=[0], m=range(0, 5))
    marker = "t" if variant == 1 else "s"
    other = "s" if variant == 1 else "t"

    @register(f"final-bu-{variant}",
              "distinct parts <= 2N+nu with exactly m even parts and "
              + ("no odd-indexed" if variant == 1 else "no even-indexed")
              + " odd parts; closed forms for all marker counts <= 4",
              points, order=lambda N, nu, m: _tilde_order(2 * N + nu))
    def factory(N: int, nu: int, m: int):
        if variant == 2 and nu != 1 or variant == 3 and nu != 0:
            raise ValueError(f"variant {variant} fixes nu = {1 if variant == 2 else 0}")
        ctx = _qst_context()

        def lhs(order):
            s = _marked(ctx, order, 2 * N + nu, m, "D", False, True)
            return extract_coefficient(s, {other: 0})

        def rhs(order):
            total = ctx.zero(order)
            q = ctx.var("q", order)
            for x in range(IJ_MAX + 1):
                poly = final_bu(variant, N, nu, m, x, order)
                for (e,), c in poly.terms.items():
                    total = total + ctx.term(order, c, q=e, **{marker: x})
            return total
        return ctx, lhs, rhs


for _v in (1, 2, 3):
    _register_final(_v)


def tilde_P_pipeline(N: int, nu: int, j: int, m: int) -> tuple[TruncatedSeries, list[str]]:
    """Recount the distinct-parts polynomial with no odd-indexed odd parts through
    column stripping and jump decomposition.

    Every counted partition is split into (base shape, jump record, stripped
    columns); the series of |base| + |jumps| + |stripped| is returned together
    with a list of violated expectations (empty on success).
    """
    top = 2 * N + nu
    order = _tilde_order(top)
    ctx = VariableContext.graded(["q"])
    terms: dict = {}
    problems: list[str] = []
    seen = set()
    base_expected = None
    for n in range(order + 1):
        for pi in tilde_members(top, 0, j, m, n):
            pi1, pi2 = column_strip(pi)
            base, tilde = jump_decompose(pi1, m, j)
            if base_expected is None:
                base_expected = base
            elif base != base_expected:
                problems.append(f"{pi}: base shape {base} differs from {base_expected}")
            key = (tilde, pi2)
            if key in seen:
                problems.append(f"{pi}: decomposition {key} is not unique")
            seen.add(key)
            # the jump record fills a j x (floor((m+j)/2) - j) box in units of 4,
            # the stripped columns a (j+m) x (N-m) box in units of 2
            if any(t % 4 or t > 4 * ((m + j) // 2 - j) for t in tilde) or len(tilde) > j:
                problems.append(f"{pi}: jump record {tilde} out of range")
            if any(p % 2 for p in pi2) or len(pi2) > m + j or (pi2 and pi2[0] > 2 * (N - m)):
                problems.append(f"{pi}: stripped columns {pi2} out of range")
            e = sum(base) + sum(tilde) + sum(pi2)
            if e != sum(pi):
                problems.append(f"{pi}: sizes do not add up")
            mono = ctx.monomial(q=e)
            terms[mono] = terms.get(mono, 0) + 1
    return TruncatedSeries(ctx, order, terms), problems


def tilde_members(top: int, i: int, j: int, m: int, n: int):
    from ..partitions import enumerate_partitions
    out = []
    for pi in enumerate_partitions(D().bounded(top, m + i + j), n):
        st = statistics(pi)
        if (st.odd_parts_odd_indexed, st.odd_parts_even_indexed) == (i, j) \
                and len(pi) - i - j == m:
            out.append(pi)
    return out
