"""Partitions, partition classes, statistics and the cyclic row labelling.

Partitions are plain tuples of weakly decreasing positive integers.  Parts
are indexed from 1, so ``pi[0]`` is the first odd-indexed part.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from string import ascii_lowercase
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .series import Monomial, TruncatedSeries, VariableContext

Partition = tuple[int, ...]

KINDS = ("P", "D", "S", "DS", "E", "custom")


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] < 1:
        raise ValueError(f"parts must be positive: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    return make_partition(int(x) for x in text.split(","))


def format_partition(pi: Partition) -> str:
    return ",".join(map(str, pi)) if pi else "()"


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(x >= y for x, y in zip(parts, parts[1:]))


def odd_indexed(pi: Partition) -> Partition:
    return pi[0::2]


def even_indexed(pi: Partition) -> Partition:
    return pi[1::2]


def is_distinct(pi: Partition) -> bool:
    return all(x > y for x, y in zip(pi, pi[1:]))


def is_k_strict(pi: Partition, k: int) -> bool:
    """At most one part, counted with multiplicity, in each block {mk+1, ..., mk+k-1}."""
    if k < 1:
        raise ValueError("k must be positive")
    seen = set()
    for p in pi:
        if p % k:
            block = p // k
            if block in seen:
                return False
            seen.add(block)
    return True


def residue(p: int, k: int) -> int:
    """Residue representative in {1, ..., k}; k stands for 0 mod k."""
    return (p - 1) % k + 1


def is_E(pi: Partition, k: int) -> bool:
    if any(p % k for p in pi):
        return False
    counts: dict[int, int] = {}
    for p in pi:
        counts[p] = counts.get(p, 0) + 1
    return all(c % 2 == 0 for c in counts.values())


@dataclass(frozen=True)
class PartitionClass:
    """A predicate bundle selecting partitions.

    ``residues`` holds ``(parity, allowed)`` pairs: parity ``"odd"`` or
    ``"even"`` refers to part indices, ``allowed`` to residues mod ``k`` in
    {1, ..., k}.  ``part_residues`` restricts every part to a residue set mod
    ``part_modulus`` (used for product-side classes such as parts = 1, 5, 6 mod 8).
    """

    kind: str = "P"
    k: int = 1
    max_part: int | None = None
    max_length: int | None = None
    residues: tuple[tuple[str, frozenset], ...] = ()
    part_modulus: int | None = None
    part_residues: frozenset | None = None
    predicate: Callable[[Partition], bool] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.kind == "custom" and self.predicate is None:
            raise ValueError("custom classes need a predicate")
        norm = tuple((par, frozenset(res)) for par, res in self.residues)
        for par, _ in norm:
            if par not in ("odd", "even"):
                raise ValueError(f"residue parity must be 'odd' or 'even', got {par!r}")
        object.__setattr__(self, "residues", norm)
        if self.part_residues is not None:
            object.__setattr__(self, "part_residues", frozenset(self.part_residues))

    @property
    def distinct(self) -> bool:
        return self.kind in ("D", "DS")

    def bounded(self, max_part: int | None = None, max_length: int | None = None) -> PartitionClass:
        return PartitionClass(self.kind, self.k, max_part, max_length, self.residues,
                              self.part_modulus, self.part_residues, self.predicate, self.name)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "k": self.k, "maxPart": self.max_part,
               "maxLength": self.max_length,
               "residues": [[par, sorted(res)] for par, res in self.residues]}
        if self.part_modulus is not None:
            out["partModulus"] = self.part_modulus
            out["partResidues"] = sorted(self.part_residues)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: Mapping | str) -> PartitionClass:
        if isinstance(data, str):
            data = json.loads(data)
        if data["kind"] == "custom":
            raise ValueError("custom predicate classes cannot be deserialized")
        return cls(kind=data["kind"], k=data.get("k", 1), max_part=data.get("maxPart"),
                   max_length=data.get("maxLength"),
                   residues=tuple((p, frozenset(r)) for p, r in data.get("residues", ())),
                   part_modulus=data.get("partModulus"),
                   part_residues=(frozenset(data["partResidues"])
                                  if "partResidues" in data else None),
                   name=data.get("name"))

    @classmethod
    def parse(cls, label: str) -> PartitionClass:
        """Parse short labels such as ``P``, ``D``, ``S3``, ``DS3``, ``E2``."""
        label = label.strip()
        for kind in ("DS", "S", "E", "D", "P"):
            if label.startswith(kind):
                rest = label[len(kind):]
                if kind in ("P", "D"):
                    if rest:
                        break
                    return cls(kind)
                if rest.isdigit() and int(rest) >= 1:
                    return cls(kind, int(rest))
                break
        raise ValueError(f"cannot parse partition class {label!r}; "
                         "expected P, D, S<k>, DS<k> or E<k>")


def P() -> PartitionClass:
    return PartitionClass("P")


def D() -> PartitionClass:
    return PartitionClass("D")


def S(k: int) -> PartitionClass:
    return PartitionClass("S", k)


def DS(k: int) -> PartitionClass:
    return PartitionClass("DS", k)


def E(k: int) -> PartitionClass:
    return PartitionClass("E", k)


def class_contains(c: PartitionClass, pi: Partition) -> bool:
    if not is_partition(pi):
        return False
    if c.max_part is not None and pi and pi[0] > c.max_part:
        return False
    if c.max_length is not None and len(pi) > c.max_length:
        return False
    if c.kind == "D" and not is_distinct(pi):
        return False
    if c.kind == "S" and not is_k_strict(pi, c.k):
        return False
    if c.kind == "DS" and not (is_distinct(pi) and is_k_strict(pi, c.k)):
        return False
    if c.kind == "E" and not is_E(pi, c.k):
        return False
    for parity, allowed in c.residues:
        rows = odd_indexed(pi) if parity == "odd" else even_indexed(pi)
        if any(residue(p, c.k) not in allowed for p in rows):
            return False
    if c.part_modulus is not None and any(p % c.part_modulus not in c.part_residues for p in pi):
        return False
    if c.predicate is not None and not c.predicate(pi):
        return False
    return True


def _raw_partitions(n: int, max_part: int, max_length: int | None, distinct: bool,
                    part_ok: Callable[[int], bool] | None) -> Iterator[Partition]:
    # descending lexicographic order
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    top = min(n, max_part)
    for first in range(top, 0, -1):
        if part_ok is not None and not part_ok(first):
            continue
        rest_max = first - 1 if distinct else first
        rest = n - first
        if distinct and rest > rest_max * (rest_max + 1) // 2:
            break
        if max_length is not None and rest > rest_max * (max_length - 1):
            break
        sub_len = None if max_length is None else max_length - 1
        for tail in _raw_partitions(rest, rest_max, sub_len, distinct, part_ok):
            yield (first,) + tail


def enumerate_partitions(c: PartitionClass, n: int) -> list[Partition]:
    """All partitions of ``n`` in the class, in descending lexicographic order."""
    if n < 0:
        return []
    return list(_enumerate_cached(c, n))


@lru_cache(maxsize=4096)
def _enumerate_cached(c: PartitionClass, n: int) -> tuple[Partition, ...]:
    max_part = n if c.max_part is None else min(n, c.max_part)
    part_ok = None
    if c.part_modulus is not None:
        mod, allowed = c.part_modulus, c.part_residues
        part_ok = lambda p: p % mod in allowed  # noqa: E731
    elif c.kind == "E":
        part_ok = lambda p: p % c.k == 0  # noqa: E731
    gen = _raw_partitions(n, max_part, c.max_length, c.distinct, part_ok)
    return tuple(pi for pi in gen if class_contains(c, pi))


def partitions_up_to(c: PartitionClass, order: int) -> Iterator[Partition]:
    for n in range(order + 1):
        yield from enumerate_partitions(c, n)


@dataclass(frozen=True)
class StatisticVector:
    size: int
    length: int
    odd_indexed_sum: int
    even_indexed_sum: int
    odd_parts_odd_indexed: int
    odd_parts_even_indexed: int
    residue_counts_odd: tuple[int, ...]
    residue_counts_even: tuple[int, ...]

    def o(self, l: int) -> int:
        return self.residue_counts_odd[l - 1]

    def e(self, l: int) -> int:
        return self.residue_counts_even[l - 1]


def statistics(pi: Partition, k: int = 2) -> StatisticVector:
    """Index-parity statistics; residue counts cover l = 1 .. k-1."""
    if k < 1:
        raise ValueError("k must be positive")
    po, pe = odd_indexed(pi), even_indexed(pi)
    ro = [0] * (k - 1)
    re = [0] * (k - 1)
    for p in po:
        if p % k:
            ro[p % k - 1] += 1
    for p in pe:
        if p % k:
            re[p % k - 1] += 1
    return StatisticVector(size=sum(pi), length=len(pi),
                           odd_indexed_sum=sum(po), even_indexed_sum=sum(pe),
                           odd_parts_odd_indexed=sum(p % 2 for p in po),
                           odd_parts_even_indexed=sum(p % 2 for p in pe),
                           residue_counts_odd=tuple(ro), residue_counts_even=tuple(re))


# cyclic labelling ------------------------------------------------------------

def omega_letters(k: int) -> tuple[str, ...]:
    """Label alphabet a_1..a_k, b_1..b_k.

    For k <= 3 the single letters used in the literature (a, b, c, d for k = 2;
    a, ..., f for k = 3) are used; otherwise ``a1..ak, b1..bk``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if 2 * k <= 6:
        return tuple(ascii_lowercase[:2 * k])
    return tuple(f"a{i}" for i in range(1, k + 1)) + tuple(f"b{i}" for i in range(1, k + 1))


def omega_context(k: int) -> VariableContext:
    return VariableContext.graded(omega_letters(k))


def row_weight(length: int, k: int, phase: int) -> Monomial:
    """Exponent vector of one row; phase 0 uses the a-letters, phase 1 the b-letters."""
    q, r = divmod(length, k)
    vec = [0] * (2 * k)
    for j in range(k):
        vec[phase * k + j] = q + (1 if j < r else 0)
    return tuple(vec)


def omega_weight(pi: Partition, k: int) -> Monomial:
    """Exponent vector of the cyclic labelling over ``omega_letters(k)``."""
    vec = [0] * (2 * k)
    for idx, p in enumerate(pi):
        for j, e in enumerate(row_weight(p, k, idx % 2)):
            vec[j] += e
    return tuple(vec)


def render_ferrers(pi: Partition, k: int) -> str:
    letters = omega_letters(k)
    rows = []
    for idx, p in enumerate(pi):
        alphabet = letters[(idx % 2) * k:(idx % 2) * k + k]
        rows.append(" ".join(alphabet[j % k] for j in range(p)))
    return "\n".join(rows)


# weighted sums ---------------------------------------------------------------

def weighted_sum(c: PartitionClass, weight: Callable[[Partition], Monomial],
                 ctx: VariableContext, order: int) -> TruncatedSeries:
    """Sum of ``weight(pi)`` over class members with |pi| <= order.

    ``weight`` must return a monomial of weighted degree exactly |pi|.
    """
    terms: dict[Monomial, int] = {}
    for pi in partitions_up_to(c, order):
        m = weight(pi)
        if ctx.degree(m) != sum(pi):
            raise ValueError(f"weight of {pi} has degree {ctx.degree(m)}, expected {sum(pi)}")
        terms[m] = terms.get(m, 0) + 1
    return TruncatedSeries(ctx, order, terms)


def omega_sum(c: PartitionClass, order: int, k: int | None = None) -> TruncatedSeries:
    k = c.k if k is None else k
    return weighted_sum(c, lambda pi: omega_weight(pi, k), omega_context(k), order)


def statistic_weight(ctx: VariableContext,
                     rule: Callable[[Partition], Mapping[str, int]]) -> Callable[[Partition], Monomial]:
    """Adapt a rule returning ``{var: exponent}`` into a monomial-valued weight."""
    return lambda pi: ctx.monomial(rule(pi))
