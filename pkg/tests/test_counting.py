import pytest

from partition_lab.catalog import counting
from partition_lab.partitions import D, enumerate_partitions
from partition_lab.qseries import pochhammer
from partition_lab.series import VariableContext


@pytest.mark.parametrize("m", [1, 2])
def test_gap_condition_equivalent_to_no_consecutive_pair(m):
    for n in range(31):
        for pi in enumerate_partitions(D(), n):
            if not counting.satisfies_A_condition_i(pi, m):
                continue
            assert counting.satisfies_A(pi, m) == counting.no_consecutive_3l1_3l2(pi), pi


@pytest.mark.parametrize("m", [1, 2])
def test_residue_family_matches_product(m):
    # independent oracle: prod over allowed n of (1 + q^n)
    order = 30
    ctx = VariableContext.graded(["q"])
    q = ctx.var("q", order)
    gf = ctx.one(order)
    for part in range(1, order + 1):
        if part % 6 not in (m, 6 - m):
            gf = gf * (1 + q ** part)
    assert [counting.count_C_m(n, m) for n in range(order + 1)] == \
        [gf.coefficient(q=n) for n in range(order + 1)]


def test_small_values_agree():
    for m in (1, 2):
        assert [counting.count_A_m(n, m) for n in range(20)] == \
            [counting.count_C_m(n, m) for n in range(20)]


def test_k5_witnesses():
    assert set(counting.members("A", 12, k=5, m=1)) == {(12,), (7, 5)}
    assert set(counting.members("C", 12, k=5, m=1)) == {(12,), (10, 2)}
    assert set(counting.members("A", 12, k=5, m=2)) == {(10, 2), (6, 5, 1)}
    assert set(counting.members("C", 12, k=5, m=2)) == {(11, 1), (7, 5)}


TABLE = {
    (2, 0): ({(13, 3, 1), (10, 6, 1), (7, 6, 4)}, {(13, 3, 1), (9, 7, 1), (7, 6, 3, 1)}),
    (1, 1): ({(16, 1), (13, 4), (12, 4, 1), (10, 7), (10, 4, 3), (9, 7, 1), (7, 6, 3, 1)},
             {(16, 1), (13, 4), (12, 4, 1), (10, 7), (10, 6, 1), (9, 4, 3, 1), (7, 6, 4)}),
    (0, 2): ({(9, 4, 3, 1)}, {(10, 4, 3)}),
}


@pytest.mark.parametrize("ij", sorted(TABLE))
def test_index_parity_table(ij):
    first, second = TABLE[ij]
    got1 = {pi for pi in counting.members("DI", 17, m=1)
            if counting.marker_pair("DI", pi, m=1) == ij}
    got2 = {pi for pi in counting.members("DII", 17, m=1)
            if counting.marker_pair("DII", pi, m=1) == ij}
    assert got1 == first and got2 == second


def test_refined_count_and_errors():
    assert counting.count_refined("DI", 17, 1, 1, m=1) == 7
    with pytest.raises(KeyError):
        counting.members("nope", 3)
    with pytest.raises(ValueError):
        counting.marker_pair("SS-even-indexed-even", (4,))
