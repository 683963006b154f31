"""Exact sparse multivariate power series truncated by weighted degree.

A :class:`VariableContext` fixes the variable alphabet.  Every variable has
a grade: size variables (``q``, ``x``, ``a`` ...) have grade 1 and marker
variables (``t``, ``z``, ``u_l`` ...) have grade 0 together with a finite
exponent cap.  A :class:`TruncatedSeries` keeps every term whose weighted
degree is at most its ``order`` and whose marker exponents respect the caps.

Monomials are plain exponent tuples aligned with ``VariableContext.names``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import add as _add
from operator import mul as _mul
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


class ContextMismatch(ValueError):
    """Raised when two series over different contexts are combined."""


@dataclass(frozen=True)
class VariableContext:
    names: tuple[str, ...]
    grades: tuple[int, ...]
    caps: tuple[int | None, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _capped: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "grades", tuple(self.grades))
        object.__setattr__(self, "caps", tuple(self.caps))
        if not (len(self.names) == len(self.grades) == len(self.caps)):
            raise ValueError("names, grades and caps must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name, grade, cap in zip(self.names, self.grades, self.caps):
            if grade < 0:
                raise ValueError(f"negative grade for {name}")
            if grade == 0 and cap is None:
                raise ValueError(f"grade-0 variable {name} needs a finite cap")
            if cap is not None and cap < 0:
                raise ValueError(f"negative cap for {name}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})
        capped = tuple((i, c) for i, c in enumerate(self.caps) if c is not None)
        object.__setattr__(self, "_capped", capped)

    @classmethod
    def graded(cls, size_vars: Iterable[str], markers: Iterable[str] = (),
               cap: int = 0) -> VariableContext:
        """Grade-1 size variables followed by grade-0 markers capped at ``cap``."""
        size_vars, markers = tuple(size_vars), tuple(markers)
        return cls(size_vars + markers,
                   (1,) * len(size_vars) + (0,) * len(markers),
                   (None,) * len(size_vars) + (cap,) * len(markers))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}; context has {self.names}") from None

    def monomial(self, exps: Mapping[str, int] | None = None, **kw: int) -> Monomial:
        vec = [0] * len(self.names)
        for name, e in {**(exps or {}), **kw}.items():
            if e < 0:
                raise ValueError(f"negative exponent for {name}")
            vec[self.index(name)] += e
        return tuple(vec)

    def exponents(self, m: Monomial) -> dict[str, int]:
        return {n: e for n, e in zip(self.names, m) if e}

    def degree(self, m: Monomial) -> int:
        return sum(map(_mul, m, self.grades))

    def within_caps(self, m: Monomial) -> bool:
        return all(m[i] <= c for i, c in self._capped)

    def sort_key(self, m: Monomial):
        # graded lex: weighted degree first, then earlier variables dominate
        return (self.degree(m), tuple(-e for e in m))

    def format_monomial(self, m: Monomial) -> str:
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, m) if e]
        return "*".join(factors) if factors else "1"

    # constructors -------------------------------------------------------

    def zero(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self, order)

    def one(self, order: int) -> TruncatedSeries:
        return self.term(order)

    def term(self, order: int, coeff: int = 1, exps: Mapping[str, int] | None = None,
             **kw: int) -> TruncatedSeries:
        return TruncatedSeries(self, order, {self.monomial(exps, **kw): coeff})

    def var(self, name: str, order: int) -> TruncatedSeries:
        return self.term(order, 1, {name: 1})


class TruncatedSeries:
    """Immutable truncated series with arbitrary-precision integer coefficients.

    Equality compares contexts and the coefficient maps after truncating both
    operands to the smaller order; ``S == 0`` and ``S == 1`` are allowed.
    """

    __slots__ = ("ctx", "order", "terms")

    def __init__(self, ctx: VariableContext, order: int,
                 terms: Mapping[Monomial, int] | None = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        kept = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != len(ctx.names):
                raise ValueError(f"monomial {m} does not match context {ctx.names}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if c and ctx.degree(m) <= order and ctx.within_caps(m):
                kept[m] = kept.get(m, 0) + int(c)
        self.ctx = ctx
        self.order = order
        self.terms = {m: c for m, c in kept.items() if c}

    @classmethod
    def _raw(cls, ctx, order, terms):
        s = cls.__new__(cls)
        s.ctx, s.order, s.terms = ctx, order, terms
        return s

    # helpers ------------------------------------------------------------

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx.names} vs {other.ctx.names}")
            return other
        if isinstance(other, int):
            zero = (0,) * len(self.ctx.names)
            return TruncatedSeries._raw(self.ctx, self.order, {zero: other} if other else {})
        return NotImplemented

    def truncate(self, order: int) -> TruncatedSeries:
        if order >= self.order:
            return self
        deg = self.ctx.degree
        return TruncatedSeries._raw(self.ctx, order,
                                    {m: c for m, c in self.terms.items() if deg(m) <= order})

    def coefficient(self, m: Monomial | Mapping[str, int] | None = None, **kw) -> int:
        if m is None or isinstance(m, Mapping):
            m = self.ctx.monomial(m, **kw)
        return self.terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(self.ctx.degree(m) for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.ctx.names), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: self.ctx.sort_key(mc[0]))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        deg = self.ctx.degree
        out = {m: c for m, c in self.terms.items() if deg(m) <= order}
        for m, c in other.terms.items():
            if deg(m) <= order:
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return TruncatedSeries._raw(self.ctx, order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(self.ctx, self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TruncatedSeries._raw(self.ctx, self.order, {})
            return TruncatedSeries._raw(self.ctx, self.order,
                                        {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        order = min(self.order, other.order)
        grades, capped = ctx.grades, ctx._capped
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        b_sorted = sorted(((sum(map(_mul, m, grades)), m, c) for m, c in b.items()),
                          key=lambda t: t[0])
        out: dict[Monomial, int] = {}
        get = out.get
        for ma, ca in a.items():
            budget = order - sum(map(_mul, ma, grades))
            if budget < 0:
                continue
            for db, mb, cb in b_sorted:
                if db > budget:
                    break
                m = tuple(map(_add, ma, mb))
                if capped and any(m[i] > c for i, c in capped):
                    continue
                out[m] = get(m, 0) + ca * cb
        return TruncatedSeries._raw(ctx, order, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.ctx.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.ctx != self.ctx:
            return False
        order = min(self.order, other.order)
        return self.truncate(order).terms == other.truncate(order).terms

    __hash__ = None

    # serialization ------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = self.ctx.format_monomial(m)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"exponents": self.ctx.exponents(m), "coeff": str(c)}
                for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, ctx: VariableContext, order: int, data: Iterable[Mapping]) -> TruncatedSeries:
        return cls(ctx, order, {ctx.monomial(t["exponents"]): int(t["coeff"]) for t in data})

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, {self.to_text()})"

    def __str__(self):
        return self.to_text()


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def extract_coefficient(s: TruncatedSeries, fixed: Mapping[str, int]) -> TruncatedSeries:
    """Collect the terms whose exponents match ``fixed``, then drop those variables."""
    idx = [(s.ctx.index(name), e) for name, e in fixed.items()]
    out = {}
    for m, c in s.terms.items():
        if all(m[i] == e for i, e in idx):
            m2 = list(m)
            for i, _ in idx:
                m2[i] = 0
            out[tuple(m2)] = c
    return TruncatedSeries._raw(s.ctx, s.order, out)


def substitute(s: TruncatedSeries, assignment: Mapping[str, Mapping[str, int]],
               new_ctx: VariableContext | None = None) -> TruncatedSeries:
    """Replace each variable by a monomial of ``new_ctx``.

    Variables missing from ``assignment`` map to the same-named variable of the
    new context.  An image whose weighted degree is below the grade of the
    variable it replaces would make the truncation unsound and is rejected.
    """
    new_ctx = new_ctx or s.ctx
    images = []
    for name, grade in zip(s.ctx.names, s.ctx.grades):
        img = new_ctx.monomial(assignment[name] if name in assignment else {name: 1})
        if new_ctx.degree(img) < grade:
            raise ValueError(f"image of {name} lowers the weighted degree; "
                             "truncation would be unsound")
        images.append(img)
    out: dict[Monomial, int] = {}
    zero = (0,) * len(new_ctx.names)
    for m, c in s.terms.items():
        vec = zero
        for e, img in zip(m, images):
            if e:
                vec = tuple(v + e * x for v, x in zip(vec, img))
        out[vec] = out.get(vec, 0) + c
    return TruncatedSeries(new_ctx, s.order, out)
