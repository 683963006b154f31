"""Partition families defined by their literal combinatorial conditions.

Each family enumerates its members of a given size and, when it is a refined
family, attaches a pair of marker counts ``(i, j)`` to every member.  These
feed the counting identities, which are checked by comparing two independent
enumerations rather than through generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from ..partitions import (Partition, PartitionClass, enumerate_partitions, is_distinct,
                          is_k_strict, residue)


def _distinct(n: int, max_part: int | None = None) -> list[Partition]:
    return enumerate_partitions(PartitionClass("D", max_part=max_part), n)


# Definition of A_m / C_m (mod 3 / mod 6) ------------------------------------

def satisfies_A(pi: Partition, m: int) -> bool:
    """Conditions i and ii read literally, with part indices starting at 1."""
    sign_m = -1 if m % 2 else 1
    for idx, p in enumerate(pi, 1):
        r = idx % 2
        if p % 3 == (3 - m + sign_m * r) % 3:
            return False
    bump = m // 2
    sign = 1 if (m - 1) % 2 == 0 else -1
    for idx in range(1, len(pi)):
        r = idx % 2
        if pi[idx - 1] - pi[idx] <= bump + sign * r:
            return False
    return True


def satisfies_A_condition_i(pi: Partition, m: int) -> bool:
    sign_m = -1 if m % 2 else 1
    return all(p % 3 != (3 - m + sign_m * (idx % 2)) % 3 for idx, p in enumerate(pi, 1))


def no_consecutive_3l1_3l2(pi: Partition) -> bool:
    """Distinct parts, and no 3l+2 directly followed by 3l+1."""
    if not is_distinct(pi):
        return False
    return not any(a % 3 == 2 and b == a - 1 for a, b in zip(pi, pi[1:]))


def satisfies_C(pi: Partition, m: int) -> bool:
    return is_distinct(pi) and all(p % 6 not in (m, 6 - m) for p in pi)


def satisfies_Ak(pi: Partition, k: int, m: int) -> bool:
    if not (is_distinct(pi) and is_k_strict(pi, k)):
        return False
    if any(residue(p, k) not in (k, 3 - m) for p in pi[0::2]):
        return False
    return all(residue(p, k) in (k, m) for p in pi[1::2])


def satisfies_Ck(pi: Partition, k: int, m: int) -> bool:
    allowed = {(3 - m) % (2 * k), k % (2 * k), (k + m) % (2 * k), 0}
    return is_distinct(pi) and all(p % (2 * k) in allowed for p in pi)


def satisfies_DI(pi: Partition, m: int, N: int | None = None) -> bool:
    if not is_distinct(pi) or any(p % 3 == (-m) % 3 for p in pi):
        return False
    return N is None or not pi or pi[0] <= 3 * N


def satisfies_DII(pi: Partition, m: int, N: int | None = None) -> bool:
    if not is_distinct(pi) or any(p % 3 == (-m) % 3 for p in pi):
        return False
    if N is None:
        return True
    i, j = markers_DII(pi, m)
    if any(p % 6 == m % 6 and p > 6 * N + m - 6 for p in pi):
        return False
    if any(p % 6 == (m + 3) % 6 and p > 6 * (N - i) + m - 3 for p in pi):
        return False
    return all(p <= 3 * (N - i - j) for p in pi if p % 3 == 0)


def markers_A(pi: Partition, m: int) -> tuple[int, int]:
    return sum(p % 3 == 2 for p in pi), sum(p % 3 == 1 for p in pi)


def markers_C(pi: Partition, m: int) -> tuple[int, int]:
    return (sum(p % 6 == (3 * m - 1) % 6 for p in pi),
            sum(p % 6 == (3 * m + 1) % 6 for p in pi))


def markers_Ak(pi: Partition, k: int, m: int) -> tuple[int, int]:
    return sum(p % k == 3 - m for p in pi), sum(p % k == m for p in pi)


def markers_Ck(pi: Partition, k: int, m: int) -> tuple[int, int]:
    return (sum(p % (2 * k) == (3 - m) % (2 * k) for p in pi),
            sum(p % (2 * k) == (k + m) % (2 * k) for p in pi))


def markers_DI(pi: Partition, m: int) -> tuple[int, int]:
    return (sum(p % 3 == m % 3 for p in pi[0::2]),
            sum(p % 3 == m % 3 for p in pi[1::2]))


def markers_DII(pi: Partition, m: int) -> tuple[int, int]:
    return sum(p % 6 == m % 6 for p in pi), sum(p % 6 == (m + 3) % 6 for p in pi)


def markers_odd_by_index(pi: Partition) -> tuple[int, int]:
    return sum(p % 2 for p in pi[0::2]), sum(p % 2 for p in pi[1::2])


def markers_mod4(pi: Partition) -> tuple[int, int]:
    return sum(p % 4 == 1 for p in pi), sum(p % 4 == 3 for p in pi)


# family registry ------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    description: str
    params: tuple[str, ...]
    members: Callable[..., list[Partition]]
    markers: Callable[..., tuple[int, int]] | None = None


def _fam_A(n, m, k=None, N=None):
    if k is None:
        return [pi for pi in _distinct(n) if satisfies_A(pi, m)]
    return [pi for pi in _distinct(n) if satisfies_Ak(pi, k, m)]


def _fam_C(n, m, k=None, N=None):
    if k is None:
        return [pi for pi in _distinct(n) if satisfies_C(pi, m)]
    return [pi for pi in _distinct(n) if satisfies_Ck(pi, k, m)]


def _mk_A(pi, m, k=None, N=None):
    return markers_A(pi, m) if k is None else markers_Ak(pi, k, m)


def _mk_C(pi, m, k=None, N=None):
    return markers_C(pi, m) if k is None else markers_Ck(pi, k, m)


FAMILIES: dict[str, Family] = {
    "A": Family("A", "distinct mod-3 gap family A_m (or A^k_m with k): i parts = 3-m, "
                "j parts = m (mod 3 or mod k)", ("m", "k"), _fam_A, _mk_A),
    "C": Family("C", "distinct parts avoiding +-m mod 6 (or the four classes mod 2k with k)",
                ("m", "k"), _fam_C, _mk_C),
    "DI": Family("DI", "distinct parts not = -m mod 3, markers by index parity "
                 "(parts <= 3N with N)", ("m", "N"),
                 lambda n, m, N=None, k=None: [pi for pi in _distinct(n, None if N is None else 3 * N)
                                               if satisfies_DI(pi, m, N)],
                 lambda pi, m, N=None, k=None: markers_DI(pi, m)),
    "DII": Family("DII", "distinct parts not = -m mod 3, markers mod 6 (bounded variant with N)",
                  ("m", "N"),
                  lambda n, m, N=None, k=None: [
                      pi for pi in _distinct(n, None if N is None else max(6 * N + m - 3, 0))
                      if satisfies_DII(pi, m, N)],
                  lambda pi, m, N=None, k=None: markers_DII(pi, m)),
    "SS-even-indexed-even": Family(
        "SS-even-indexed-even", "distinct parts, even-indexed parts even", (),
        lambda n: [pi for pi in _distinct(n) if all(p % 2 == 0 for p in pi[1::2])]),
    "SS-odd-indexed-even": Family(
        "SS-odd-indexed-even", "distinct parts, odd-indexed parts even", (),
        lambda n: [pi for pi in _distinct(n) if all(p % 2 == 0 for p in pi[0::2])]),
    "SS-parts-1-5-6-mod-8": Family(
        "SS-parts-1-5-6-mod-8", "parts = 1, 5, 6 (mod 8), repetition allowed", (),
        lambda n: enumerate_partitions(
            PartitionClass("P", part_modulus=8, part_residues={1, 5, 6}), n)),
    "SS-parts-2-3-7-mod-8": Family(
        "SS-parts-2-3-7-mod-8", "parts = 2, 3, 7 (mod 8), repetition allowed", (),
        lambda n: enumerate_partitions(
            PartitionClass("P", part_modulus=8, part_residues={2, 3, 7}), n)),
    "D-odd-by-index": Family(
        "D-odd-by-index", "distinct parts; i odd-indexed and j even-indexed odd parts", (),
        lambda n: _distinct(n), lambda pi: markers_odd_by_index(pi)),
    "D-mod-4": Family(
        "D-mod-4", "distinct parts; i parts = 1 and j parts = 3 (mod 4)", (),
        lambda n: _distinct(n), lambda pi: markers_mod4(pi)),
}


def _family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None


@lru_cache(maxsize=None)
def _members(name: str, n: int, params: tuple) -> tuple[Partition, ...]:
    return tuple(_family(name).members(n, **dict(params)))


def members(name: str, n: int, **params) -> list[Partition]:
    params = {k: v for k, v in params.items() if v is not None}
    return list(_members(name, n, tuple(sorted(params.items()))))


def marker_pair(name: str, pi: Partition, **params) -> tuple[int, int]:
    fam = _family(name)
    if fam.markers is None:
        raise ValueError(f"family {name} is not refined")
    params = {k: v for k, v in params.items() if v is not None}
    return fam.markers(pi, **params)


def count(name: str, n: int, **params) -> int:
    return len(members(name, n, **params))


def count_refined(name: str, n: int, i: int, j: int, **params) -> int:
    return sum(1 for pi in members(name, n, **params) if marker_pair(name, pi, **params) == (i, j))


def count_A_m(n: int, m: int) -> int:
    return count("A", n, m=m)


def count_C_m(n: int, m: int) -> int:
    return count("C", n, m=m)
