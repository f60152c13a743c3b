import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freelie.exactalg import QTPoly, ResourceLimitError
from freelie.partition import partitions_of
from freelie.tableau import (
    StandardTableau,
    SuperTableau,
    comaj,
    comaj_neg_generating_poly,
    count_super_tableaux,
    descent_set,
    maj,
    maj_neg_generating_poly,
    negg,
    relative_comaj,
    relative_maj,
    super_comaj,
    super_descent_set,
    super_maj,
    syt_count,
    syt_enumerate,
)

EXAMPLE = StandardTableau([(1, 3, 4, 6), (2, 5), (7,)])


def test_standard_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau([(1, 2), (4,)])  # entries not 1..n
    with pytest.raises(ValueError):
        StandardTableau([(2, 1), (3,)])  # row not increasing
    with pytest.raises(ValueError):
        StandardTableau([(1, 4), (2, 3)])  # column not increasing
    with pytest.raises(ValueError):
        StandardTableau([(1,), (2, 3)])  # shape not a partition


def test_syt_counts_against_hook_formula():
    assert syt_count((1,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((4, 2, 1)) == 35
    for n in range(0, 11):
        for lam in partitions_of(n):
            assert len(syt_enumerate(lam)) == syt_count(lam)


def test_syt_enumerate_entries_valid():
    for lam in ((3, 2), (2, 2, 1)):
        tableaux = syt_enumerate(lam)
        assert len(set(t.rows for t in tableaux)) == len(tableaux)
        for t in tableaux:
            assert t.shape == lam


def test_descent_set_worked_example():
    assert descent_set(EXAMPLE) == {1, 4, 6}
    assert maj(EXAMPLE) == 11


def test_descent_set_extremes():
    row = StandardTableau([(1, 2, 3, 4)])
    assert descent_set(row) == frozenset()
    assert maj(row) == 0
    column = StandardTableau([(1,), (2,), (3,)])
    assert descent_set(column) == {1, 2}
    assert maj(column) == 3
    assert comaj(column) == 3


def test_super_descent_worked_example():
    st_ = SuperTableau(EXAMPLE, frozenset({2, 3, 7}))
    assert super_descent_set(st_) == {2, 3, 4}
    assert super_maj(st_) == 9
    assert negg(st_) == 3


def test_super_descent_reductions():
    st_ = SuperTableau(EXAMPLE, frozenset())
    assert super_descent_set(st_) == descent_set(EXAMPLE)
    assert super_maj(st_) == maj(EXAMPLE)

    two = SuperTableau(StandardTableau([(1, 2)]), frozenset({1}))
    assert super_descent_set(two) == {1}

    single = SuperTableau(StandardTableau([(1,)]), frozenset({1}))
    assert super_maj(single) == 0
    assert negg(single) == 1


def test_relative_maj_examples():
    assert relative_maj({1, 4, 6}, {2, 3, 7}, 7) == 9
    assert relative_maj({1, 4, 6}, set(), 7) == 11
    assert relative_maj(set(), {1, 2, 3}, 3) == 3
    assert relative_comaj({1, 2}, set(), 3) == 3


def test_super_descent_two_definitions_agree():
    # the filling-based rule and the relative-statistic rule are equivalent
    for n in range(1, 7):
        for lam in partitions_of(n):
            for t in syt_enumerate(lam):
                d = descent_set(t)
                for mask in range(1 << n):
                    s = frozenset(i for i in range(1, n + 1) if mask >> (i - 1) & 1)
                    st_ = SuperTableau(t, s)
                    direct = super_descent_set(st_)
                    assert sum(direct) == relative_maj(d, s, n)
                    assert sum(n - i for i in direct) == relative_comaj(d, s, n)
                    assert super_maj(st_) == sum(direct)
                    assert super_comaj(st_) == sum(n - i for i in direct)


def test_super_descent_no_bars_reduction_full_sweep():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for t in syt_enumerate(lam):
                assert super_descent_set(SuperTableau(t, frozenset())) == descent_set(t)


def test_generating_poly_single_cell():
    assert maj_neg_generating_poly((1,)) == QTPoly({(0, 0): 1, (0, 1): 1})


def test_generating_poly_row_two():
    expected = QTPoly({(0, 0): 1, (0, 1): 1, (1, 1): 1, (1, 2): 1})
    assert maj_neg_generating_poly((2,)) == expected


def test_generating_poly_column_two():
    # q + t + qt + t^2, derived by enumerating the four signed tableaux
    expected = QTPoly({(1, 0): 1, (0, 1): 1, (1, 1): 1, (0, 2): 1})
    assert maj_neg_generating_poly((1, 1)) == expected


def test_generating_poly_t_zero_slice_is_classical_maj():
    for n in range(1, 8):
        for lam in partitions_of(n):
            poly = maj_neg_generating_poly(lam)
            classical = QTPoly.zero()
            for t in syt_enumerate(lam):
                classical = classical + QTPoly.monomial(maj(t), 0)
            slice0 = QTPoly({(a, 0): c for (a, b), c in poly.items() if b == 0})
            assert slice0 == classical


def test_generating_poly_total_count():
    for n in range(1, 8):
        for lam in partitions_of(n):
            poly = maj_neg_generating_poly(lam)
            total = sum(c for _, c in poly.items())
            assert total == (1 << n) * syt_count(lam)


def test_maj_comaj_equidistribution():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert maj_neg_generating_poly(lam) == comaj_neg_generating_poly(lam)


def test_count_super_tableaux_examples():
    assert count_super_tableaux((2, 1), 3, 1, 0) == 1
    for n in range(1, 7):
        assert count_super_tableaux((n,), n, 0, 0) == 1


def test_count_super_tableaux_matches_generating_poly():
    for lam in ((2, 1), (3, 1), (2, 2)):
        n = sum(lam)
        poly = maj_neg_generating_poly(lam)
        for r in (2, 3, n):
            for s in range(r):
                for m in range(n + 1):
                    direct = count_super_tableaux(lam, r, s, m)
                    via_poly = sum(
                        int(c)
                        for (a, b), c in poly.items()
                        if b == m and a % r == s
                    )
                    assert direct == via_poly


def test_budget_errors():
    with pytest.raises(ResourceLimitError):
        maj_neg_generating_poly((3, 2, 1), budget=10)
    with pytest.raises(ResourceLimitError):
        count_super_tableaux((3, 2, 1), 6, 1, 3, budget=10)


def test_render_and_parse_tableaux():
    assert EXAMPLE.render() == "1,3,4,6/2,5/7"
    assert StandardTableau.parse("1,3,4,6/2,5/7") == EXAMPLE
    st_ = SuperTableau(EXAMPLE, frozenset({2, 3, 7}))
    assert st_.render() == "1,-3,4,6/-2,5/-7"
    parsed = SuperTableau.parse("1,-3,4,6/-2,5/-7")
    assert parsed.plus_part == EXAMPLE
    assert parsed.neg == {2, 3, 7}


@st.composite
def partition_strategy(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    remaining = n
    bound = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(bound, remaining)))
        parts.append(p)
        bound = p
        remaining -= p
    return tuple(parts)


@given(partition_strategy())
@settings(max_examples=40, deadline=None)
def test_super_tableau_count_property(lam):
    n = sum(lam)
    total = sum(
        count_super_tableaux(lam, 1, 0, m) for m in range(n + 1)
    )
    assert total == (1 << n) * syt_count(lam)
