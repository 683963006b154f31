"""Identity cases, the registry that produces them, and the verifier."""

from __future__ import annotations

import inspect
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from ..partitions import Partition, PartitionClass, partitions_up_to
from ..series import Monomial, TruncatedSeries, VariableContext

Builder = Callable[[int], TruncatedSeries]


@dataclass(frozen=True)
class IdentityCase:
    """One registered identity at fixed parameters.

    ``lhs`` enumerates partitions; ``rhs`` expands the closed form.  Both take
    the truncation order and return series over ``context``.
    """

    id: str
    params: tuple[tuple[str, int], ...]
    context: VariableContext
    lhs: Builder = field(compare=False)
    rhs: Builder = field(compare=False)
    default_order: int = 12
    kind: str = "series"
    description: str = ""

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def key(self) -> str:
        if not self.params:
            return self.id
        return self.id + "[" + ",".join(f"{k}={v}" for k, v in self.params) + "]"


@dataclass(frozen=True)
class Discrepancy:
    monomial: dict[str, int]
    lhs_coeff: int
    rhs_coeff: int

    def to_json(self) -> dict:
        return {"monomial": self.monomial, "lhsCoeff": str(self.lhs_coeff),
                "rhsCoeff": str(self.rhs_coeff)}


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: dict[str, int]
    order: int
    status: str
    first_discrepancy: Discrepancy | None
    seconds: float

    @property
    def ok(self) -> bool:
        return self.status == "match"

    def to_json(self) -> dict:
        return {"id": self.id, "params": dict(self.params), "order": self.order,
                "status": self.status,
                "firstDiscrepancy": None if self.first_discrepancy is None
                else self.first_discrepancy.to_json(),
                "seconds": round(self.seconds, 6)}

    def summary(self) -> str:
        p = ",".join(f"{k}={v}" for k, v in self.params.items())
        label = f"{self.id}[{p}]" if p else self.id
        line = f"{label} order={self.order} {self.status}"
        if self.first_discrepancy is not None:
            d = self.first_discrepancy
            mono = "*".join(f"{k}^{v}" if v != 1 else k for k, v in d.monomial.items()) or "1"
            line += f" at {mono}: lhs={d.lhs_coeff} rhs={d.rhs_coeff}"
        return line


def build_lhs(case: IdentityCase, order: int | None = None) -> TruncatedSeries:
    return case.lhs(case.default_order if order is None else order)


def build_rhs(case: IdentityCase, order: int | None = None) -> TruncatedSeries:
    return case.rhs(case.default_order if order is None else order)


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries) -> Discrepancy | None:
    """Graded-lex least monomial where the two series differ, or None."""
    order = min(lhs.order, rhs.order)
    diff = (lhs.truncate(order) - rhs.truncate(order))
    if diff.is_zero():
        return None
    m, _ = diff.sorted_terms()[0]
    ctx = lhs.ctx
    exps = {k: v for k, v in ctx.exponents(m).items() if v}
    return Discrepancy(exps, lhs.coefficient(m), rhs.coefficient(m))


def verify(case: IdentityCase, order: int | None = None) -> VerificationReport:
    order = case.default_order if order is None else order
    start = time.perf_counter()
    disc = compare(build_lhs(case, order), build_rhs(case, order))
    elapsed = time.perf_counter() - start
    return VerificationReport(case.id, case.param_dict, order,
                              "match" if disc is None else "mismatch", disc, elapsed)


# registry ------------------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    id: str
    title: str
    grid: tuple[dict, ...]
    factory: Callable[..., tuple]
    default_order: int | Callable[..., int]
    kind: str

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(inspect.signature(self.factory).parameters)

    def case(self, **params) -> IdentityCase:
        names = self.param_names
        unknown = set(params) - set(names)
        if unknown:
            raise ValueError(f"{self.id} takes parameters {list(names)}, got {sorted(unknown)}")
        missing = [n for n in names if n not in params]
        if missing:
            base = next((g for g in self.grid if all(g[k] == v for k, v in params.items())),
                        self.grid[0] if self.grid else {})
            for n in missing:
                if n not in base:
                    raise ValueError(f"{self.id} needs parameter {n}")
                params[n] = base[n]
        ctx, lhs, rhs = self.factory(**params)
        order = self.default_order
        if callable(order):
            order = order(**params)
        ordered = tuple((n, params[n]) for n in names)
        return IdentityCase(self.id, ordered, ctx, lhs, rhs, order, self.kind, self.title)

    def cases(self) -> Iterator[IdentityCase]:
        for g in self.grid:
            yield self.case(**g)


REGISTRY: dict[str, Entry] = {}


def grid(**axes: Iterable[int]) -> list[dict]:
    """Cartesian product of parameter axes, in the order given."""
    out = [{}]
    for name, values in axes.items():
        out = [dict(d, **{name: v}) for d in out for v in values]
    return out


def register(id: str, title: str, grid: Iterable[Mapping] = ({},),
             order: int | Callable[..., int] = 12, kind: str = "series",
             where: Callable[..., bool] | None = None):
    """Register ``factory(**params) -> (context, lhs_builder, rhs_builder)``."""
    points = [dict(g) for g in grid]
    if where is not None:
        points = [g for g in points if where(**g)]

    def deco(factory):
        if id in REGISTRY:
            raise ValueError(f"duplicate identity id {id}")
        REGISTRY[id] = Entry(id, title, tuple(points), factory, order, kind)
        return factory
    return deco


def identity_ids() -> list[str]:
    return sorted(REGISTRY)


def get_entry(id: str) -> Entry:
    try:
        return REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity id {id!r}; known ids: {', '.join(identity_ids())}") \
            from None


def get_case(id: str, **params) -> IdentityCase:
    return get_entry(id).case(**{k: v for k, v in params.items() if v is not None})


def all_cases() -> list[IdentityCase]:
    return [c for id in identity_ids() for c in REGISTRY[id].cases()]


# enumeration helpers ----------------------------------------------------------------

def enum_series(ctx: VariableContext, order: int, cls: PartitionClass,
                rule: Callable[[Partition], Mapping[str, int] | None]) -> TruncatedSeries:
    """Sum over members of ``cls`` of the monomial ``rule(pi)``; None skips pi."""
    terms: dict[Monomial, int] = {}
    for pi in partitions_up_to(cls, order):
        exps = rule(pi)
        if exps is None:
            continue
        m = ctx.monomial(exps)
        terms[m] = terms.get(m, 0) + 1
    return TruncatedSeries(ctx, order, terms)


def binom2(n: int) -> int:
    return n * (n - 1) // 2


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
