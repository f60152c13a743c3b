from fractions import Fraction

import pytest

from freelie.exactalg import MultiPoly, QTPoly
from freelie.partition import conjugate, partitions_of, z_lambda
from freelie.symfunc import (
    BiSymFunc,
    ClassFunctionSn,
    SymFunc,
    bi_e_pleth,
    bi_expand_truncated,
    bi_h_pleth,
    bi_multiply,
    bi_plethysm_p,
    bi_schur_expand,
    diagonal,
    e_pleth,
    expand_truncated,
    frobenius_characteristic,
    h_pleth,
    mn_character,
    multiply,
    p_to_s,
    plethysm_p,
    s_to_p,
    schur_expand,
    sym_from_json,
    sym_to_json,
    to_p,
)


def p(*parts, coeff=1):
    return SymFunc.term("p", tuple(parts), coeff)


# -- characters

def test_mn_trivial_character():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1


def test_mn_sign_character():
    assert mn_character((1, 1), (2,)) == -1
    # sign character value is (-1)^(n - number of cycles)
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_mn_dimension():
    from freelie.tableau import syt_count

    assert mn_character((2, 1), (1, 1, 1)) == 2
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert mn_character(lam, (1,) * n) == syt_count(lam)


def test_mn_orthogonality():
    # first orthogonality of characters: independent consistency check
    for n in range(1, 7):
        for lam in partitions_of(n):
            for nu in partitions_of(n):
                total = sum(
                    Fraction(mn_character(lam, mu) * mn_character(nu, mu), z_lambda(mu))
                    for mu in partitions_of(n)
                )
                assert total == (1 if lam == nu else 0)


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (1, 1, 1))


# -- basis conversions

def test_p_to_s_square_of_p1():
    assert p_to_s(p(1, 1)) == SymFunc("s", {(2,): 1, (1, 1): 1})


def test_p_to_s_degree_three_lie_character():
    f = p(1, 1, 1, coeff=Fraction(1, 3)) + p(3, coeff=Fraction(-1, 3))
    assert p_to_s(f) == SymFunc("s", {(2, 1): 1})


def test_s_p_roundtrip():
    for n in range(1, 9):
        for lam in partitions_of(n):
            s = SymFunc.term("s", lam)
            assert p_to_s(s_to_p(s)) == s


def test_h_e_to_p():
    # h_2 = (p_11 + p_2)/2, e_2 = (p_11 - p_2)/2
    h2 = to_p(SymFunc.term("h", (2,)))
    e2 = to_p(SymFunc.term("e", (2,)))
    assert h2 == SymFunc("p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert e2 == SymFunc("p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})


def test_m_to_p_small():
    # m_(2) = p_2 and m_(1,1) = e_2
    assert to_p(SymFunc.term("m", (2,))) == p(2)
    assert to_p(SymFunc.term("m", (1, 1))) == SymFunc(
        "p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    )


def test_m_basis_reconstructs_power_sums():
    # p_n = sum over lambda of (coeff of monomial) m_lambda, inverted exactly
    for n in range(1, 6):
        for lam in partitions_of(n):
            m_lam = to_p(SymFunc.term("m", lam))
            poly = expand_truncated(m_lam, n)
            # monomial expansion of m_lambda has coefficient 1 at x^lambda
            exp = tuple(lam) + (0,) * (n - len(lam))
            assert poly.coefficient(exp) == 1


# -- products and Frobenius characteristic

def test_multiply_examples():
    assert multiply(p(2), p(1)) == p(2, 1)
    f = p(2, coeff=3) + p(1, 1)
    assert multiply(f, SymFunc.one("p")) == f


def test_h2_squared_schur_expansion():
    # h_2 * h_2 = s_4 + s_31 + s_22 (Kostka numbers for content (2,2))
    h2 = SymFunc.term("h", (2,))
    prod = p_to_s(multiply(h2, h2))
    assert prod == SymFunc("s", {(4,): 1, (3, 1): 1, (2, 2): 1})


def test_frobenius_characteristic_small():
    triv = ClassFunctionSn(2, {(2,): 1, (1, 1): 1})
    sign = ClassFunctionSn(2, {(2,): -1, (1, 1): 1})
    assert frobenius_characteristic(triv) == to_p(SymFunc.term("h", (2,)))
    assert frobenius_characteristic(sign) == to_p(SymFunc.term("e", (2,)))
    regular = ClassFunctionSn(3, {(1, 1, 1): 6, (2, 1): 0, (3,): 0})
    assert frobenius_characteristic(regular) == p(1, 1, 1)


def test_frobenius_of_irreducible_characters():
    for n in range(1, 8):
        for lam in partitions_of(n):
            chi = ClassFunctionSn(
                n, {mu: mn_character(lam, mu) for mu in partitions_of(n)}
            )
            assert frobenius_characteristic(chi) == s_to_p(SymFunc.term("s", lam))


def test_class_function_requires_all_types():
    with pytest.raises(ValueError):
        ClassFunctionSn(2, {(2,): 1})


# -- plethysm

def test_plethysm_p_examples():
    f = p(2, 1, coeff=QTPoly({(1, 1): 1}))
    assert plethysm_p(1, f) == f
    assert plethysm_p(2, p(1)) == p(2)
    e2 = to_p(SymFunc.term("e", (2,)))
    assert plethysm_p(2, e2) == SymFunc(
        "p", {(2, 2): Fraction(1, 2), (4,): Fraction(-1, 2)}
    )


def test_plethysm_substitutes_coefficients():
    f = p(1, coeff=QTPoly({(1, 2): 1}))
    assert plethysm_p(3, f) == SymFunc("p", {(3,): QTPoly({(3, 6): 1})})


def test_h_e_pleth_of_p1():
    for a in range(0, 9):
        assert h_pleth(a, p(1)) == to_p(SymFunc.term("h", (a,)) if a else SymFunc.one("h"))
        assert e_pleth(a, p(1)) == to_p(SymFunc.term("e", (a,)) if a else SymFunc.one("e"))


def test_h_pleth_degree_two_identities():
    e2 = to_p(SymFunc.term("e", (2,)))
    h2 = to_p(SymFunc.term("h", (2,)))
    assert p_to_s(h_pleth(2, e2)) == SymFunc("s", {(2, 2): 1, (1, 1, 1, 1): 1})
    assert p_to_s(h_pleth(2, h2)) == SymFunc("s", {(4,): 1, (2, 2): 1})
    assert h_pleth(0, e2) == SymFunc.one("p")


# -- expansion in finitely many variables

def _ssyt_monomials(lam, N):
    """Independent oracle: enumerate semistandard tableaux of the shape with
    entries <= N; rows weakly increase, columns strictly increase."""
    rows = []

    def fill(r, prev_row):
        if r == len(lam):
            yield tuple(rows)
            return
        width = lam[r]

        def fill_row(c, row):
            if c == width:
                rows.append(tuple(row))
                yield from fill(r + 1, tuple(row))
                rows.pop()
                return
            lo = row[c - 1] if c > 0 else 1
            if prev_row is not None and c < len(prev_row):
                lo = max(lo, prev_row[c] + 1)
            for v in range(lo, N + 1):
                yield from fill_row(c + 1, row + [v])

        yield from fill_row(0, [])

    counts = {}
    for filling in fill(0, None):
        exp = [0] * N
        for row in filling:
            for v in row:
                exp[v - 1] += 1
        key = tuple(exp)
        counts[key] = counts.get(key, 0) + 1
    return counts


def test_expand_truncated_examples():
    assert expand_truncated(p(2), 2) == MultiPoly(2, 0, {(2, 0): 1, (0, 2): 1})
    assert expand_truncated(SymFunc.term("s", (1, 1)), 1).is_zero
    s21 = expand_truncated(SymFunc.term("s", (2, 1)), 2)
    assert s21 == MultiPoly(2, 0, {(2, 1): 1, (1, 2): 1})


def test_expand_schur_matches_ssyt_oracle():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for N in range(1, 4):
                expected = MultiPoly(N, 0, _ssyt_monomials(lam, N))
                assert expand_truncated(SymFunc.term("s", lam), N) == expected


def test_expand_schur_zero_iff_too_few_variables():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for N in range(0, 5):
                poly = expand_truncated(SymFunc.term("s", lam), N)
                assert poly.is_zero == (len(lam) > N)


def test_expand_requires_constant_coefficients():
    f = p(1, coeff=QTPoly.q())
    with pytest.raises(ValueError):
        expand_truncated(f, 2)


# -- Schur expansion reporting

def test_schur_expand_examples():
    e2 = to_p(SymFunc.term("e", (2,)))
    result = schur_expand(e2)
    assert result.coefficients == {(1, 1): QTPoly.one()}
    assert result.is_nonneg_integral

    result = schur_expand(p(1, 1))
    assert result.coefficients == {(2,): QTPoly.one(), (1, 1): QTPoly.one()}

    negative = schur_expand(p(2))  # p_2 = s_2 - s_11 is not a character
    assert not negative.is_nonneg_integral


# -- two-alphabet functions

def test_bi_multiply_and_plethysm():
    x1 = BiSymFunc.term((1,), ())
    y1 = BiSymFunc.term((), (1,))
    prod = bi_multiply(x1, y1)
    assert prod == BiSymFunc.term((1,), (1,))
    assert bi_plethysm_p(2, prod) == BiSymFunc.term((2,), (2,))


def test_bi_h_pleth_example():
    both = BiSymFunc.term((1,), (1,))
    expected = BiSymFunc(
        {
            ((1, 1), (1, 1)): Fraction(1, 2),
            ((2,), (2,)): Fraction(1, 2),
        }
    )
    assert bi_h_pleth(2, both) == expected
    assert bi_e_pleth(1, both) == both


def test_diagonal():
    f = BiSymFunc({((1,), (1,)): 1})
    assert diagonal(f) == p(1, 1)
    assert diagonal(BiSymFunc.zero()) == SymFunc.zero("p")


def test_bi_expand_matches_diagonal_expand():
    # setting the y alphabet equal to the x alphabet: expand with M = N and
    # merge variables by adding exponents
    import random

    rng = random.Random(3)
    for _ in range(8):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            lam = tuple(sorted((rng.randint(1, 3) for _ in range(rng.randint(0, 2))), reverse=True))
            mu = tuple(sorted((rng.randint(1, 3) for _ in range(rng.randint(0, 2))), reverse=True))
            terms[(lam, mu)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        f = BiSymFunc(terms)
        N = rng.randint(1, 3)
        bi = bi_expand_truncated(f, N, N)
        merged = {}
        for exp, c in bi.items():
            key = tuple(exp[i] + exp[N + i] for i in range(N))
            merged[key] = merged.get(key, 0) + c
        direct = expand_truncated(diagonal(f), N)
        assert MultiPoly(N, 0, merged) == direct


def test_bi_schur_expand_of_p11():
    f = BiSymFunc({((1,), (1,)): 1})
    expansion = bi_schur_expand(f)
    assert expansion == {((1,), (1,)): QTPoly.one()}


# -- serialization

def test_sym_json_roundtrip():
    f = SymFunc("p", {(2, 1): QTPoly({(1, 0): Fraction(1, 2)}), (1,): 3})
    assert sym_from_json(sym_to_json(f)) == f
