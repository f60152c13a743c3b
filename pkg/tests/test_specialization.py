import random
from fractions import Fraction
from itertools import combinations

import pytest

from freelie.exactalg import MultiPoly, QTPoly, q_pochhammer, qpoly
from freelie.partition import partitions_of, z_lambda
from freelie.specialization import (
    SpecSeries,
    degree_two_checks,
    fundamental_qsym_truncated,
    half_if_even,
    hook_formula_check,
    hook_product,
    kw_check,
    kw_generating_function,
    omega_extract,
    omega_extract_roots,
    pi_lambda,
    pi_root_check,
    qps_check,
    qsym_principal_spec,
    qt_hook_consistency_check,
    s_ps_check,
    super_cauchy_check,
    super_power_sum_truncated,
    super_qsym_truncated,
    super_schur_truncated,
    sym1_check,
    sym2_check,
    sym3_check,
    symmetry_counts,
)
from freelie.superlie import super_brandt_char
from freelie.symfunc import SymFunc, expand_truncated, schur_expand
from freelie.tableau import count_super_tableaux, maj_neg_generating_poly


# -- quasisymmetric polynomials

def test_fundamental_qsym_degree_two():
    assert fundamental_qsym_truncated(2, set(), 2) == MultiPoly(
        2, 0, {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    )
    assert fundamental_qsym_truncated(2, {1}, 2) == MultiPoly(2, 0, {(1, 1): 1})


def test_schur_is_sum_of_fundamentals():
    from freelie.tableau import descent_set, syt_enumerate

    for n in range(1, 7):
        for lam in partitions_of(n):
            for N in range(1, 4):
                total = MultiPoly.zero(N, 0)
                for t in syt_enumerate(lam):
                    total = total + fundamental_qsym_truncated(n, descent_set(t), N)
                assert total == expand_truncated(SymFunc.term("s", lam), N)


def test_super_qsym_single_letter():
    assert super_qsym_truncated(1, set(), 1, 1) == MultiPoly(
        1, 1, {(1, 0): 1, (0, 1): 1}
    )


def test_super_qsym_degree_two():
    # enumeration over 1 < 1' with the equal-letter rules
    assert super_qsym_truncated(2, set(), 1, 1) == MultiPoly(
        1, 1, {(2, 0): 1, (1, 1): 1}
    )
    assert super_qsym_truncated(2, {1}, 1, 1) == MultiPoly(
        1, 1, {(1, 1): 1, (0, 2): 1}
    )


def test_super_schur_small():
    assert super_schur_truncated((1,), 2, 2) == MultiPoly(
        2, 2, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1}
    )
    assert super_schur_truncated((2,), 1, 1) == MultiPoly(1, 1, {(2, 0): 1, (1, 1): 1})
    assert super_schur_truncated((1, 1), 1, 1) == MultiPoly(1, 1, {(1, 1): 1, (0, 2): 1})


def test_super_schur_reduces_to_classical_when_no_bars():
    for n in range(1, 6):
        for lam in partitions_of(n):
            lhs = super_schur_truncated(lam, 2, 0)
            rhs = expand_truncated(SymFunc.term("s", lam), 2)
            assert lhs == MultiPoly(2, 0, dict(rhs.items()))


def test_super_power_sum_degree_one():
    # p~_(1) = p_1(x) + p_1(y)
    assert super_power_sum_truncated((1,), 1, 1) == MultiPoly(
        1, 1, {(1, 0): 1, (0, 1): 1}
    )
    # p~_(2) = p_2(x) - p_2(y)
    assert super_power_sum_truncated((2,), 1, 1) == MultiPoly(
        1, 1, {(2, 0): 1, (0, 2): -1}
    )


def test_super_cauchy_degree_one():
    rep = super_cauchy_check(1, 2, 2)
    assert rep.ok


def test_super_cauchy_sweep():
    for n in range(1, 6):
        assert super_cauchy_check(n, 2, 2).ok, n
    assert super_cauchy_check(3, 3, 2).ok
    assert super_cauchy_check(3, 1, 3).ok


# -- principal specializations

def test_qsym_principal_single_letter():
    series = qsym_principal_spec(1, set(), 6)
    for a in range(7):
        assert series.coefficient(a, 0) == 1
        assert series.coefficient(a, 1) == 1


def test_qsym_principal_t0_slice_is_classical():
    # dropping the barred letters recovers the one-alphabet specialization:
    # weakly increasing words with strict growth at D, weighted q^(sum(b)-n)
    def classical(n, d, cap):
        terms = {}

        def rec(pos, minimum, used):
            if pos == n:
                terms[(used, 0)] = terms.get((used, 0), Fraction(0)) + 1
                return
            v = minimum
            while used + (v - 1) * (n - pos) <= cap:
                rec(pos + 1, v + 1 if (pos + 1) in d else v, used + v - 1)
                v += 1

        rec(0, 1, 0)
        return SpecSeries(cap, terms)

    for n in range(1, 5):
        for mask in range(1 << (n - 1)):
            d = {i + 1 for i in range(n - 1) if mask >> i & 1}
            series = qsym_principal_spec(n, d, 8)
            slice0 = SpecSeries(
                8, {(a, 0): c for (a, b), c in series.items() if b == 0}
            )
            assert slice0 == classical(n, d, 8), (n, d)


def test_qps_identity_examples_and_sweep():
    assert qps_check(2, set(), 12).ok
    assert qps_check(2, {1}, 12).ok
    for n in range(1, 6):
        for mask in range(1 << (n - 1)):
            d = {i + 1 for i in range(n - 1) if mask >> i & 1}
            assert qps_check(n, d, 12).ok, (n, d)


# -- hook products

def test_hook_product_base_cases():
    assert hook_product((1,)) == QTPoly({(0, 0): 1, (0, 1): 1})
    one_plus_t = QTPoly({(0, 0): 1, (0, 1): 1})
    one_plus_qt = QTPoly({(0, 0): 1, (1, 1): 1})
    assert hook_product((2,)) == one_plus_t * one_plus_qt
    q_plus_t = QTPoly({(1, 0): 1, (0, 1): 1})
    assert hook_product((1, 1)) == one_plus_t * q_plus_t


def test_hook_formula_sweep():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert hook_formula_check(lam), lam


def test_hook_formula_specializations():
    from freelie.tableau import syt_count

    for n in range(1, 7):
        for lam in partitions_of(n):
            poly = hook_product(lam)
            # q = t = 1 counts all signed tableaux
            total = sum(c for _, c in poly.items())
            assert total == (1 << n) * syt_count(lam)


def test_s_ps_sweep():
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert s_ps_check(lam, 12), lam


def test_qt_hook_consistency_sweep():
    for n in range(1, 5):
        for lam in partitions_of(n):
            assert qt_hook_consistency_check(lam, 12), lam


# -- root-of-unity machinery

def test_pi_lambda_examples():
    assert pi_lambda((2,)) == qpoly([1, -1])
    assert pi_lambda((1, 1)) == qpoly([1, 1])
    for n in range(1, 7):
        expected = q_pochhammer(n - 1).t_slices()[0]
        assert pi_lambda((n,)) == expected


def test_pi_root_examples():
    assert pi_root_check((2,), 2)
    assert pi_root_check((1, 1), 2)
    assert pi_root_check((1, 1, 1), 1)
    with pytest.raises(ValueError):
        pi_root_check((2, 1), 2)


def test_pi_root_sweep():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for d in range(1, n + 1):
                if n % d == 0:
                    assert pi_root_check(lam, d), (lam, d)


def test_omega_extract_examples():
    f = SymFunc(
        "p",
        {(1,): QTPoly({(0, 0): 1, (1, 0): 2, (2, 0): 3, (3, 0): 4, (4, 0): 5})},
    )
    assert omega_extract(f, 3, 1) == SymFunc("p", {(1,): 7})
    assert omega_extract(f, 1, 0) == SymFunc("p", {(1,): 15})
    g = SymFunc("s", {(2,): QTPoly.monomial(3, 0)})
    assert omega_extract(g, 3, 0) == SymFunc("s", {(2,): 1})


def test_omega_residues_partition_the_total():
    rng = random.Random(7)
    for _ in range(20):
        coeff = QTPoly(
            {
                (rng.randint(0, 15), rng.randint(0, 3)): rng.randint(-5, 5)
                for _ in range(6)
            }
        )
        f = SymFunc("p", {(2, 1): coeff})
        r = rng.randint(1, 6)
        total = SymFunc.zero("p")
        for s in range(r):
            total = total + omega_extract(f, r, s)
        assert total == f.map_coefficients(lambda c: c.eval_q_one())


def test_omega_filter_equals_root_average():
    rng = random.Random(11)
    for _ in range(60):
        coeff = QTPoly(
            {
                (rng.randint(0, 20), rng.randint(0, 3)): Fraction(
                    rng.randint(-6, 6), rng.randint(1, 4)
                )
                for _ in range(5)
            }
        )
        f = SymFunc("p", {(rng.randint(1, 3),): coeff})
        r = rng.randint(1, 12)
        s = rng.randint(0, r)
        assert omega_extract(f, r, s) == omega_extract_roots(f, r, s)


# -- the multiplicity pipeline

def test_kw_generating_function_small():
    gf = kw_generating_function(1)
    assert gf == SymFunc("s", {(1,): QTPoly({(0, 0): 1, (0, 1): 1})})
    gf = kw_generating_function(2)
    assert gf.basis == "s"
    assert gf.coefficient((2,)) == hook_product((2,))
    assert gf.coefficient((1, 1)) == hook_product((1, 1))


def test_kw_classical_degree_three():
    # the degree-3 classical character is s_(2,1); tableau counts: the two
    # standard tableaux of (2,1) have maj 1 and 2, one of each residue
    rep = kw_check(3, 0)
    assert rep.ok
    filtered = omega_extract(kw_generating_function(3), 3, 1)
    assert filtered.coefficient((2, 1)).coefficient(0, 0) == 1
    assert filtered.coefficient((3,)).coefficient(0, 0) == 0
    assert filtered.coefficient((1, 1, 1)).coefficient(0, 0) == 0


def test_kw_sweep_mixed():
    for n, m in ((1, 1), (2, 1), (2, 2), (3, 2), (4, 0), (0, 3)):
        assert kw_check(n, m).ok, (n, m)


def test_kw_counts_match_schur_multiplicities():
    for n, m in ((2, 1), (3, 1), (2, 2)):
        total = n + m
        expansion = schur_expand(super_brandt_char(n, m)).coefficients
        for lam in partitions_of(total):
            mult = expansion.get(lam, QTPoly.zero()).constant_value()
            assert count_super_tableaux(lam, total, 1, m) == mult, (lam, n, m)


# -- counting symmetries

def test_half_if_even():
    assert half_if_even(0) == 0
    assert half_if_even(4) == 2
    assert half_if_even(3) == 0


def test_symmetry_counts_match_direct_enumeration():
    for lam in ((3, 2), (2, 2, 1)):
        n = sum(lam)
        counts = symmetry_counts(lam, n, 0)
        for s in range(n):
            assert counts[s] == count_super_tableaux(lam, n, s, 0)


def test_sym1_equal_gcd_residues():
    # all residues coprime to 5 are equidistributed for shapes of 5
    lam = (3, 2)
    counts = symmetry_counts(lam, 5, 0)
    assert len({counts[r] for r in (1, 2, 3, 4)}) == 1
    for lam in partitions_of(6):
        assert sym1_check(lam, 1, 5)  # gcd 1
        assert sym1_check(lam, 2, 4)  # gcd 2


def test_sym2_small_sweep():
    import math

    for total in range(2, 7):
        for m in range(total + 1):
            n = total - m
            shift = half_if_even(m)
            for lam in partitions_of(total):
                for r in range(1, total + 1):
                    for s in range(1, total + 1):
                        if math.gcd(r + shift, total) == math.gcd(s + shift, total):
                            assert sym2_check(lam, n, m, r, s), (lam, n, m, r, s)


def test_sym3_odd_pairs():
    for n, m in ((3, 1), (1, 3), (3, 3), (5, 1)):
        for lam in partitions_of(n + m):
            for r in range(n + m):
                assert sym3_check(lam, n, m, r), (lam, n, m, r)


# -- degree-two identities

def test_degree_two_expansions():
    rep = degree_two_checks(2)
    assert rep.ok
    # frozen expectations for d = 2
    from freelie.symfunc import h_pleth, to_p

    e2 = super_brandt_char(2, 0)
    h2 = super_brandt_char(0, 2)
    assert schur_expand(h_pleth(2, e2)).coefficients == {
        (2, 2): QTPoly.one(),
        (1, 1, 1, 1): QTPoly.one(),
    }
    assert schur_expand(h_pleth(2, h2)).coefficients == {
        (4,): QTPoly.one(),
        (2, 2): QTPoly.one(),
    }


def test_degree_two_convolution_base():
    from freelie.symfunc import e_pleth, multiply

    # d = 1: the exterior power of the (1,1) piece is p_1^2 = h_2 + e_2
    lhs = e_pleth(1, super_brandt_char(1, 1))
    assert lhs == SymFunc("p", {(1, 1): 1})
    for d in range(0, 4):
        assert degree_two_checks(d).ok, d
