"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import time

from partition_lab.bijections import (column_strip, jump_decompose, omega_preserved, psi_k,
                                      psi_k_inverse)
from partition_lab.catalog import all_cases, compare, counting, verify
from partition_lab.catalog.mod2 import final_bu, iz1, iz2, bu1, bu2, tilde_P_pipeline
from partition_lab.cli import main
from partition_lab.partitions import S, enumerate_partitions, omega_weight
from partition_lab.qseries import inverse_pochhammer, pochhammer, q_binomial
from partition_lab.partitions import omega_context
from partition_lab.series import TruncatedSeries, VariableContext

from test_series import series as series_strategy


def test_c01_three_strict_of_ten(criterion, capsys):
    start = time.perf_counter()
    code = main(["enumerate", "--class", "S3", "--n", "10"])
    lines = capsys.readouterr().out.split()
    elapsed = time.perf_counter() - start
    listed = ["10", "9,1", "8,2", "7,3", "6,4", "6,3,1", "5,3,2", "4,3,3", "3,3,3,1"]
    ok = code == 0 and sorted(lines) == sorted(listed) and len(lines) == 9 and elapsed < 1
    criterion(1, "nine 3-strict partitions of 10", ok, f"{elapsed:.3f}s")


def test_c02_labelling_weights(criterion):
    pi = (10, 10, 7, 5, 2)
    ok = omega_weight(pi, 2) == (10, 9, 8, 7) and omega_weight(pi, 3) == (8, 6, 5, 6, 5, 4)
    criterion(2, "labelling weights of (10,10,7,5,2) for k = 2, 3", ok)


def test_c03_split_map(criterion):
    start = time.perf_counter()
    pi = (8, 6, 6, 5, 3, 3, 3, 1)
    first, second = psi_k(pi, 3)
    ok = (first, second) == ((8, 5, 3, 1), (6, 6, 3, 3))
    ok &= tuple(a + b for a, b in zip(omega_weight(first, 3), omega_weight(second, 3))) \
        == omega_weight(pi, 3)
    ok &= len(first) + len(second) == len(pi) and psi_k_inverse(first, second, 3) == pi
    failures, checked = 0, 0
    for k in (2, 3, 4):
        for n in range(17):
            for p in enumerate_partitions(S(k), n):
                checked += 1
                a, b = psi_k(p, k)
                if psi_k_inverse(a, b, k) != p or not omega_preserved(p, k):
                    failures += 1
    elapsed = time.perf_counter() - start
    criterion(3, "split map example and exhaustive roundtrip", ok and failures == 0 and elapsed < 60,
              f"{checked} partitions, {failures} failures, {elapsed:.2f}s")


def test_c04_companion_counts(criterion):
    start = time.perf_counter()
    bad = [(n, m) for m in (1, 2) for n in range(41)
           if counting.count_A_m(n, m) != counting.count_C_m(n, m)]
    elapsed = time.perf_counter() - start
    criterion(4, "A_m(n) = C_m(n) for n <= 40", not bad and elapsed < 60,
              f"{len(bad)} disagreements, {elapsed:.2f}s")


def test_c05_general_k(criterion):
    ok = (set(counting.members("A", 12, k=5, m=1)) == {(12,), (7, 5)}
          and set(counting.members("C", 12, k=5, m=1)) == {(12,), (10, 2)}
          and set(counting.members("A", 12, k=5, m=2)) == {(10, 2), (6, 5, 1)}
          and set(counting.members("C", 12, k=5, m=2)) == {(11, 1), (7, 5)})
    bad = []
    for k in range(3, 7):
        for m in (1, 2):
            for n in range(31):
                a = sorted(counting.marker_pair("A", p, k=k, m=m)
                           for p in counting.members("A", n, k=k, m=m))
                c = sorted(counting.marker_pair("C", p, k=k, m=m)
                           for p in counting.members("C", n, k=k, m=m))
                if a != c:
                    bad.append((k, m, n))
    criterion(5, "witness sets for k = 5 and refined counts for k <= 6, n <= 30",
              ok and not bad, f"{len(bad)} disagreements")


def test_c06_table(criterion):
    table = {
        (2, 0): ({(13, 3, 1), (10, 6, 1), (7, 6, 4)}, {(13, 3, 1), (9, 7, 1), (7, 6, 3, 1)}),
        (1, 1): ({(16, 1), (13, 4), (12, 4, 1), (10, 7), (10, 4, 3), (9, 7, 1), (7, 6, 3, 1)},
                 {(16, 1), (13, 4), (12, 4, 1), (10, 7), (10, 6, 1), (9, 4, 3, 1), (7, 6, 4)}),
        (0, 2): ({(9, 4, 3, 1)}, {(10, 4, 3)}),
    }
    counts = {(2, 0): 3, (1, 1): 7, (0, 2): 1}
    ok = True
    for ij, (first, second) in table.items():
        got1 = {p for p in counting.members("DI", 17, m=1) if counting.marker_pair("DI", p, m=1) == ij}
        got2 = {p for p in counting.members("DII", 17, m=1)
                if counting.marker_pair("DII", p, m=1) == ij}
        ok &= got1 == first and got2 == second and len(got1) == len(got2) == counts[ij]
    criterion(6, "index-parity table at n = 17", ok)


def test_c07_catalog(criterion):
    start = time.perf_counter()
    cases = all_cases()
    reports = [verify(c) for c in cases]
    bad = [r.summary() for r in reports if not r.ok]
    low = [r for r in reports if r.order < 12]
    elapsed = time.perf_counter() - start
    criterion(7, "every catalog instance matches at order >= 12",
              not bad and not low and elapsed < 300,
              f"{len(reports)} instances, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c08_two_expansions(criterion):
    from partition_lab.catalog import get_case
    ok = True
    for N in range(6):
        for nu in (0, 1):
            ok &= compare(iz1(N, nu, 16), bu1(N, nu, 16)) is None
            ok &= compare(iz2(N, nu, 16), bu2(N, nu, 16)) is None
    for N in range(7):
        ok &= verify(get_case("phipsi", N=N)).ok
    criterion(8, "iz1 = bu1, iz2 = bu2, and the Phi/Psi relation in z up to z^8", ok)


def test_c09_pipeline(criterion):
    pi = (20, 17, 16, 11, 10, 9, 6, 5, 4, 2)
    pi1, pi2 = column_strip(pi)
    base, tilde = jump_decompose(pi1, 6, 4)
    ok = (pi1 == (12, 11, 10, 9, 8, 7, 6, 5, 4, 2) and pi2 == (8, 6, 6, 2, 2, 2)
          and base == (12, 10, 8, 7, 6, 5, 4, 3, 2, 1) and tilde == (4, 4, 4, 4))
    bad = []
    for N in range(6):
        for nu in (0, 1):
            for m in range(5):
                for j in range(5):
                    s, problems = tilde_P_pipeline(N, nu, j, m)
                    if problems or s != final_bu(1, N, nu, m, j, s.order):
                        bad.append((N, nu, m, j))
    criterion(9, "strip and jump example; recount through the pipeline for N <= 5",
              ok and not bad, f"{len(bad)} disagreements")


def test_c10_series_engine(criterion):
    from hypothesis import given, settings

    from test_series import CTX, ORDER
    ring_checked = [0]

    @settings(max_examples=1000, deadline=None, database=None)
    @given(series_strategy(), series_strategy(), series_strategy())
    def ring(a, b, c):
        ring_checked[0] += 1
        assert (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        assert a * b == b * a and (a + b) + c == a + (b + c)
        assert a * CTX.one(ORDER) == a and (a - a).is_zero()
    ring()

    ok = True
    ctx = VariableContext.graded(["q", "z"])
    q, z = ctx.var("q", 40), ctx.var("z", 40)
    for N in range(9):
        rhs = ctx.zero(40)
        for j in range(N + 1):
            rhs = rhs + (-1) ** j * q_binomial(N, j, q) * z ** j * q ** (j * (j - 1) // 2)
        ok &= pochhammer(z, q, N) == rhs
    q, z = ctx.var("q", 20), ctx.var("z", 20)
    for N in range(1, 9):
        rhs = ctx.zero(20)
        for j in range(21):
            rhs = rhs + q_binomial(N + j - 1, j, q) * z ** j
        ok &= inverse_pochhammer(z, q, N) == rhs
    c1 = VariableContext.graded(["q"])
    q = c1.var("q", 60)
    for n in range(11):
        lhs = c1.zero(60)
        for j in range(n + 1):
            lhs = lhs + q_binomial(n, j, q * q) * q ** j
        ok &= lhs == pochhammer(-q, q, n)
    for N in range(7):
        for L in range(7):
            for mu in (0, 1):
                if (N, mu) == (0, 0):
                    continue
                lhs = c1.zero(60)
                for i in range(L + 1):
                    lhs = lhs + (q_binomial(N + i, i, q * q)
                                 * q_binomial(N + mu - 1 + L - i, L - i, q * q) * q ** (L - i))
                ok &= lhs == q_binomial(2 * N + mu + L, L, q)
    c3 = omega_context(3)
    letters = [c3.var(x, 20) for x in "abcdef"]
    R = letters[0]
    for x in letters[1:]:
        R = R * x
    x = letters[0] + letters[0] * letters[1]
    lhs = c3.zero(20)
    for t in range(21):
        lhs = lhs + x ** t * R ** (t * (t - 1) // 2) * inverse_pochhammer(R, R, t)
    ok &= lhs == pochhammer(-x, R)
    criterion(10, "series identities and ring axioms", ok and ring_checked[0] >= 1000,
              f"{ring_checked[0]} random triples")
