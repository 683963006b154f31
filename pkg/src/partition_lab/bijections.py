"""Weight-bookkeeping maps on partitions.

* ``psi_k`` splits a k-strict partition into a distinct k-strict part and a
  part with all multiplicities even (removing rows, swapping labels when the
  first removed copy sits in a b-row);
* ``vertical_blocks`` cuts the labelled diagram into width-k column blocks;
* ``conjugate``, ``column_strip`` and ``jump_decompose`` are the column-side
  maps used for the bounded mod-2 formulas.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import (Partition, is_distinct, is_E, is_k_strict, make_partition,
                         omega_weight, row_weight)
from .series import Monomial


@dataclass(frozen=True)
class LabelledPartition:
    """A partition whose rows carry explicit label phases (0: a-letters, 1: b-letters)."""

    parts: Partition
    k: int
    phases: tuple[int, ...]

    @classmethod
    def fresh(cls, pi: Partition, k: int) -> LabelledPartition:
        return cls(tuple(pi), k, tuple(i % 2 for i in range(len(pi))))

    def is_standard(self) -> bool:
        return self.phases == tuple(i % 2 for i in range(len(self.parts)))

    def weight(self) -> Monomial:
        vec = [0] * (2 * self.k)
        for p, ph in zip(self.parts, self.phases):
            for j, e in enumerate(row_weight(p, self.k, ph)):
                vec[j] += e
        return tuple(vec)


def psi_k_labelled(pi: Partition, k: int) -> tuple[LabelledPartition, LabelledPartition]:
    if not is_k_strict(pi, k):
        raise ValueError(f"{pi} is not {k}-strict")
    rows = [(p, i % 2) for i, p in enumerate(pi)]
    removed: list[tuple[int, int]] = []
    while True:
        counts = Counter(p for p, _ in rows)
        repeated = [v for v, c in counts.items() if c >= 2]
        if not repeated:
            break
        v = max(repeated)
        positions = [i for i, (p, _) in enumerate(rows) if p == v]
        take = positions[:2 * (len(positions) // 2)]
        swap = take[0] % 2 == 1  # 0-based odd position = even-indexed row
        removed.extend((p, ph ^ swap) for p, ph in (rows[i] for i in take))
        taken = set(take)
        rows = [r for i, r in enumerate(rows) if i not in taken]
    first = LabelledPartition(tuple(p for p, _ in rows), k, tuple(ph for _, ph in rows))
    second = LabelledPartition(tuple(p for p, _ in removed), k, tuple(ph for _, ph in removed))
    return first, second


def psi_k(pi: Partition, k: int) -> tuple[Partition, Partition]:
    """Split pi in S^k into (distinct k-strict part, even-multiplicity multiples of k)."""
    first, second = psi_k_labelled(pi, k)
    return first.parts, second.parts


def psi_k_inverse(pi1: Partition, pi2: Partition, k: int) -> Partition:
    if not (is_distinct(pi1) and is_k_strict(pi1, k)):
        raise ValueError(f"{pi1} is not in DS^{k}")
    if not is_E(pi2, k):
        raise ValueError(f"{pi2} is not in E^{k}")
    return make_partition(pi1 + pi2)


def psi_k_bounded(pi: Partition, k: int, N: int) -> tuple[Partition, Partition]:
    if pi and pi[0] > N:
        raise ValueError(f"largest part of {pi} exceeds {N}")
    return psi_k(pi, k)


# vertical blocks ---------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    block_type: str
    width: int
    height: int
    residue_column: int | None = None

    def weight(self) -> Monomial:
        """Block weight from its type: w^m x, w^m y, z w^m or w^(m+1)."""
        k = self.width
        if self.block_type in ("I", "III"):
            m = (self.height - 1) // 2
        else:
            m = (self.height - 2) // 2
        vec = [m] * (2 * k)
        if self.block_type == "I":
            for j in range(self.residue_column):
                vec[j] += 1
        elif self.block_type == "II":
            for j in range(k):
                vec[j] += 1
            for j in range(self.residue_column):
                vec[k + j] += 1
        elif self.block_type == "III":
            for j in range(k):
                vec[j] += 1
        else:
            vec = [m + 1] * (2 * k)
        return tuple(vec)


def conjugate(pi: Partition) -> Partition:
    if not pi:
        return ()
    return tuple(sum(1 for p in pi if p > c) for c in range(pi[0]))


def vertical_blocks(pi: Partition, k: int) -> list[Block]:
    cols = list(conjugate(pi))
    cols += [0] * (-len(cols) % k)
    blocks = []
    for g in range(0, len(cols), k):
        h = cols[g:g + k]
        top, bottom = h[0], h[-1]
        if top == bottom:
            blocks.append(Block("III" if top % 2 else "IV", k, top))
            continue
        ell = h.count(top)
        if top - bottom != 1 or h.count(bottom) != k - ell:
            raise ValueError(f"{pi} is not {k}-strict: columns {h} form no valid block")
        blocks.append(Block("I" if top % 2 else "II", k, top, ell))
    return blocks


def blocks_weight(blocks: list[Block], k: int) -> Monomial:
    vec = [0] * (2 * k)
    for b in blocks:
        for j, e in enumerate(b.weight()):
            vec[j] += e
    return tuple(vec)


# column operations for distinct partitions -----------------------------------

def column_strip(pi: Partition) -> tuple[Partition, Partition]:
    """Remove pairs of columns until every gap (the last part against 0 included) is 1 or 2.

    Returns ``(pi1, pi2)`` with ``pi[i] == pi1[i] + pi2[i]``; parity of each part is kept.
    """
    if not is_distinct(pi):
        raise ValueError(f"{pi} does not have distinct parts")
    ext = list(pi) + [0]
    reduced = [0] * len(pi)
    below = 0
    for i in range(len(pi) - 1, -1, -1):
        g = ext[i] - ext[i + 1]
        if g > 2:
            g = 2 if g % 2 == 0 else 1
        below += g
        reduced[i] = below
    pi1 = tuple(reduced)
    pi2 = tuple(p - r for p, r in zip(pi, pi1) if p - r)
    return pi1, pi2


def column_unstrip(pi1: Partition, pi2: Partition) -> Partition:
    if len(pi2) > len(pi1):
        raise ValueError("the stripped columns are longer than the partition")
    return tuple(a + (pi2[i] if i < len(pi2) else 0) for i, a in enumerate(pi1))


def _parity_of(m: int, j: int) -> str:
    return "even" if (m + j) % 2 == 0 else "odd"


def _compose_from_jumps(jumps: list[int], m: int, j: int, parity: str) -> Partition:
    # r-th odd part from the bottom sits above evens_below[r] even parts
    offset = 0 if parity == "even" else 1
    evens_below = [jumps[r] + r + offset for r in range(j)]
    if any(e > m for e in evens_below):
        raise ValueError("jumps move an odd part above every even part")
    parts = []
    r = 0
    for e in range(m + 1):
        while r < j and evens_below[r] == e:
            parts.append(2 * e + 1)
            r += 1
        if e < m:
            parts.append(2 * (e + 1))
    return tuple(sorted(parts, reverse=True))


def base_partition(m: int, j: int, parity: str = "even") -> Partition:
    """(2m, ..., 2j, 2j-1, ..., 2, 1) for even parity, (2m, ..., 2j+1, 2j, ..., 3, 2) for odd."""
    if not m >= j >= 0:
        raise ValueError(f"need m >= j >= 0, got m={m}, j={j}")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    return _compose_from_jumps([0] * j, m, j, parity)


def _check_gap_reduced(pi1: Partition, m: int, j: int):
    if not is_distinct(pi1):
        raise ValueError(f"{pi1} does not have distinct parts")
    ext = list(pi1) + [0]
    for a, b in zip(ext, ext[1:]):
        if a - b not in (1, 2) or (a - b == 1) != ((a + b) % 2 == 1):
            raise ValueError(f"{pi1} is not gap-reduced")
    odds = [i for i, p in enumerate(pi1) if p % 2]
    if len(odds) != j or len(pi1) - len(odds) != m:
        raise ValueError(f"{pi1} does not have {j} odd and {m} even parts")
    if any(i % 2 == 0 for i in odds):
        raise ValueError(f"{pi1} has an odd-indexed odd part")


def jump_decompose(pi1: Partition, m: int, j: int) -> tuple[Partition, Partition]:
    """Split a gap-reduced partition into its base shape and the recorded jumps.

    Every odd part of ``pi1`` sits 2s even parts higher than in the base shape;
    each such move contributes a part 4s to the returned ``tilde``.
    """
    _check_gap_reduced(pi1, m, j)
    parity = _parity_of(m, j)
    offset = 0 if parity == "even" else 1
    evens_below = [sum(1 for p in pi1 if p % 2 == 0 and p < v)
                   for v in sorted(p for p in pi1 if p % 2)]
    jumps = [e - r - offset for r, e in enumerate(evens_below)]
    if any(s < 0 or s % 2 for s in jumps):
        raise ValueError(f"{pi1} is not reachable from the base shape by even jumps")
    tilde = tuple(sorted((2 * s for s in jumps if s), reverse=True))
    return base_partition(m, j, parity), tilde


def jump_compose(tilde: Partition, m: int, j: int) -> Partition:
    if len(tilde) > j or any(t % 4 for t in tilde):
        raise ValueError(f"{tilde} is not a valid jump record for j={j}")
    jumps = sorted(t // 2 for t in tilde)
    jumps = [0] * (j - len(jumps)) + jumps
    return _compose_from_jumps(jumps, m, j, _parity_of(m, j))


def omega_preserved(pi: Partition, k: int) -> bool:
    """Weight law of psi_k checked through both the labelled and the standard labellings."""
    first, second = psi_k_labelled(pi, k)
    w = omega_weight(pi, k)
    prod = tuple(a + b for a, b in zip(first.weight(), second.weight()))
    std = tuple(a + b for a, b in zip(omega_weight(first.parts, k), omega_weight(second.parts, k)))
    return first.is_standard() and second.is_standard() and w == prod == std
