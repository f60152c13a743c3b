"""Quasisymmetric and super quasisymmetric expansions, principal
specializations, the q,t-hook product, root-of-unity coefficient extraction,
and the identity checks that tie the tableau statistics to the Lie
superalgebra characters.

Infinite principal-specialization series are compared by truncation at a
configurable q-cap (default 12) with exact coefficients; every comparison is
made per fixed q-degree, so truncation loses nothing at the compared degrees.
The coefficient-residue extraction operator is implemented as exact exponent
filtering; the equivalent root-of-unity average is implemented separately on
top of cyclotomic arithmetic so the two can be checked against each other.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .exactalg import (
    CheckReport,
    CycloElem,
    MultiPoly,
    QPoly,
    QTPoly,
    cyclo_reduce,
    q_factorial,
    q_int,
    q_pochhammer,
    qpoly,
    qpoly_exact_div,
    qpoly_mul,
)
from .partition import (
    Partition,
    cells,
    check_partition,
    conjugate,
    format_partition,
    hook_length,
    partitions_of,
    z_lambda,
)
from .superlie import super_brandt_char
from .symfunc import (
    SymFunc,
    e_pleth,
    expand_truncated,
    h_pleth,
    multiply,
    schur_expand,
)
from .tableau import (
    DEFAULT_PAIR_BUDGET,
    comaj_neg_generating_poly,
    descent_set,
    maj_neg_generating_poly,
    relative_comaj,
    syt_enumerate,
)

DEFAULT_Q_CAP = 12


# ---------------------------------------------------------------------------
# truncated q,t-series


class SpecSeries:
    """Series in q and t truncated at a fixed maximal q-exponent.

    Terms map (q-exponent, t-exponent) to rationals; anything with q-exponent
    above the cap is dropped on every operation.  Two series are compared
    termwise, which is meaningful only at a shared cap; mixing caps raises.
    """

    __slots__ = ("q_cap", "_terms")

    def __init__(self, q_cap: int, terms: Mapping[tuple[int, int], Fraction] | None = None):
        if q_cap < 0:
            raise ValueError(f"q_cap must be >= 0, got {q_cap}")
        self.q_cap = q_cap
        canon: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent pair ({a}, {b})")
                if a > q_cap:
                    continue
                c = Fraction(c)
                if c != 0:
                    canon[(a, b)] = c
        self._terms = canon

    @classmethod
    def from_qtpoly(cls, p: QTPoly, q_cap: int) -> SpecSeries:
        return cls(q_cap, dict(p.items()))

    @classmethod
    def geometric(cls, k: int, q_cap: int) -> SpecSeries:
        """1/(1 - q^k) truncated: 1 + q^k + q^2k + ..."""
        if k < 1:
            raise ValueError(f"geometric requires k >= 1, got {k}")
        return cls(q_cap, {(j * k, 0): Fraction(1) for j in range(q_cap // k + 1)})

    @classmethod
    def inv_pochhammer(cls, n: int, q_cap: int) -> SpecSeries:
        """1/(q;q)_n truncated, as a product of geometric series."""
        out = cls(q_cap, {(0, 0): Fraction(1)})
        for k in range(1, n + 1):
            out = out * cls.geometric(k, q_cap)
        return out

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def _check(self, other: SpecSeries) -> None:
        if self.q_cap != other.q_cap:
            raise ValueError(f"q_cap mismatch: {self.q_cap} vs {other.q_cap}")

    def __add__(self, other: SpecSeries) -> SpecSeries:
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return SpecSeries(self.q_cap, terms)

    def __mul__(self, other: SpecSeries | QTPoly | int | Fraction) -> SpecSeries:
        if isinstance(other, QTPoly):
            other = SpecSeries.from_qtpoly(other, self.q_cap)
        elif isinstance(other, (int, Fraction)):
            return SpecSeries(self.q_cap, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                a = a1 + a2
                if a > self.q_cap:
                    continue
                k = (a, b1 + b2)
                s = out.get(k, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return SpecSeries(self.q_cap, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpecSeries):
            return NotImplemented
        return self.q_cap == other.q_cap and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.q_cap, frozenset(self._terms.items())))

    def first_difference(self, other: SpecSeries):
        """Smallest (q, t) exponent pair where the two series disagree, or None."""
        self._check(other)
        keys = sorted(set(self._terms) | set(other._terms))
        for k in keys:
            if self._terms.get(k, 0) != other._terms.get(k, 0):
                return k
        return None

    def __str__(self) -> str:
        return str(QTPoly(dict(self._terms))) + f" + O(q^{self.q_cap + 1})"

    def __repr__(self) -> str:
        return f"SpecSeries({self})"


# ---------------------------------------------------------------------------
# quasisymmetric expansions in finitely many variables


def _qsym_enumerate(n: int, d, letters, nx: int, ny: int) -> MultiPoly:
    """Sum of monomials over weakly increasing length-n sequences from the
    ordered signed alphabet, subject to: equal adjacent unbarred letters at
    position i force i not in D, equal adjacent barred letters force i in D.
    ``letters`` is the ordered list of (value, barred) pairs."""
    d = frozenset(d)
    terms: dict[tuple[int, ...], Fraction] = {}
    exp = [0] * (nx + ny)

    def rec(pos: int, min_idx: int) -> None:
        if pos == n:
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + 1
            return
        for idx in range(min_idx, len(letters)):
            value, barred = letters[idx]
            # idx == min_idx past position 0 means this letter repeats the
            # previous one, constraining position pos (1-based)
            if pos > 0 and idx == min_idx and barred != (pos in d):
                continue
            slot = nx + value - 1 if barred else value - 1
            exp[slot] += 1
            rec(pos + 1, idx)
            exp[slot] -= 1

    rec(0, 0)
    return MultiPoly(nx, ny, terms)


def fundamental_qsym_truncated(n: int, d, N: int) -> MultiPoly:
    """Fundamental quasisymmetric polynomial in x_1..x_N: weakly increasing
    words with strict growth forced at the positions in D."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    letters = [(v, False) for v in range(1, N + 1)]
    return _qsym_enumerate(n, d, letters, N, 0)


def super_qsym_truncated(n: int, d, N: int, M: int) -> MultiPoly:
    """Two-alphabet quasisymmetric polynomial over the ordered alphabet
    1 < 1' < 2 < 2' < ... truncated to N unbarred and M barred letters.
    Mixed adjacent pairs are strictly increasing in the alphabet order and
    hence never constrained."""
    if n < 1:
        raise ValueError("need n >= 1")
    letters = []
    for v in range(1, max(N, M) + 1):
        if v <= N:
            letters.append((v, False))
        if v <= M:
            letters.append((v, True))
    return _qsym_enumerate(n, d, letters, N, M)


def super_schur_truncated(lam: Partition, N: int, M: int) -> MultiPoly:
    """Two-alphabet Schur polynomial as the sum of super quasisymmetric
    polynomials over the descent sets of standard tableaux of the shape."""
    lam = check_partition(lam)
    n = sum(lam)
    out = MultiPoly.zero(N, M)
    for t in syt_enumerate(lam):
        out = out + super_qsym_truncated(n, descent_set(t), N, M)
    return out


def super_power_sum_truncated(lam: Partition, N: int, M: int) -> MultiPoly:
    """prod_j (p_{lam_j}(x) + (-1)^(lam_j + 1) p_{lam_j}(y)) in N + M variables."""
    lam = check_partition(lam)
    out = MultiPoly.const(N, M, 1)
    for part in lam:
        px = expand_truncated(SymFunc.term("p", (part,)), N, M, "x")
        py = expand_truncated(SymFunc.term("p", (part,)), N, M, "y")
        out = out * (px + py * Fraction((-1) ** (part + 1)))
    return out


def super_cauchy_check(n: int, N: int, M: int) -> CheckReport:
    """Check the two-alphabet Cauchy identity in degree n:
    sum_lam s_lam(x) stilde_lam = sum_lam p_lam(x) ptilde_lam / z_lam."""
    if n < 1:
        raise ValueError("need n >= 1")
    lhs = MultiPoly.zero(N, M)
    rhs = MultiPoly.zero(N, M)
    for lam in partitions_of(n):
        s_poly = expand_truncated(SymFunc.term("s", lam), N, M, "x")
        if not s_poly.is_zero:
            lhs = lhs + s_poly * super_schur_truncated(lam, N, M)
        p_poly = expand_truncated(SymFunc.term("p", lam), N, M, "x")
        rhs = rhs + (p_poly * super_power_sum_truncated(lam, N, M)) * Fraction(
            1, z_lambda(lam)
        )
    ok = lhs == rhs
    report = CheckReport("super-cauchy", {"n": n, "N": N, "M": M}, ok)
    if not ok:
        report.lhs, report.rhs = str(lhs), str(rhs)
        diff = lhs - rhs
        report.first_discrepancy = str(diff.items()[0]) if not diff.is_zero else None
    return report


# ---------------------------------------------------------------------------
# principal specializations


def qsym_principal_spec(n: int, d, q_cap: int) -> SpecSeries:
    """Principal specialization x_i = q^(i-1), y_i = t q^(i-1) of the
    two-alphabet quasisymmetric function, truncated at q_cap: enumerate the
    admissible words over the full signed alphabet whose total q-weight fits
    under the cap."""
    if n < 1:
        raise ValueError("need n >= 1")
    d = frozenset(d)
    terms: dict[tuple[int, int], Fraction] = {}

    def rec(pos: int, prev, used: int, bars: int) -> None:
        if pos == n:
            key = (used, bars)
            terms[key] = terms.get(key, Fraction(0)) + 1
            return
        remaining = n - pos
        v = prev[0] if prev is not None else 1
        while used + (v - 1) * remaining <= q_cap:
            for barred in (False, True):
                letter = (v, barred)
                if prev is not None:
                    if letter < prev:
                        continue
                    if letter == prev and barred != (pos in d):
                        continue
                rec(pos + 1, letter, used + v - 1, bars + barred)
            v += 1

    rec(0, None, 0, 0)
    return SpecSeries(q_cap, terms)


def _subset_comaj_poly(n: int, d) -> QTPoly:
    """sum over S subsets of [n] of q^comaj(D, S) t^|S|."""
    d = frozenset(d)
    counts: dict[tuple[int, int], int] = {}
    for size in range(n + 1):
        for chosen in combinations(range(1, n + 1), size):
            key = (relative_comaj(d, set(chosen), n), size)
            counts[key] = counts.get(key, 0) + 1
    return QTPoly(counts)


def qps_check(n: int, d, q_cap: int = DEFAULT_Q_CAP) -> CheckReport:
    """Check the principal-specialization formula for one descent set:
    the word enumeration equals (sum_S q^comaj(D,S) t^|S|) / (q;q)_n."""
    lhs = qsym_principal_spec(n, d, q_cap)
    rhs = SpecSeries.inv_pochhammer(n, q_cap) * _subset_comaj_poly(n, d)
    ok = lhs == rhs
    report = CheckReport(
        "qsym-principal-specialization",
        {"n": n, "D": sorted(d), "q_cap": q_cap},
        ok,
    )
    if not ok:
        report.lhs, report.rhs = str(lhs), str(rhs)
        report.first_discrepancy = str(lhs.first_difference(rhs))
    return report


# ---------------------------------------------------------------------------
# the q,t-hook product


def hook_product(lam: Partition) -> QTPoly:
    """[n]_q! * prod over cells (q^(row-1) + t q^(col-1)) / [hook]_q, as an
    exact polynomial; the division must leave no remainder."""
    lam = check_partition(lam)
    n = sum(lam)
    num = q_factorial(n)
    den = QTPoly.one()
    for r, c in cells(lam):
        num = num * (QTPoly.monomial(r - 1, 0) + QTPoly.monomial(c - 1, 1))
        den = den * q_int(hook_length(lam, r, c))
    return num.divide_exact_q(den.t_slices().get(0, qpoly([1])))


def hook_formula_check(lam: Partition, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """Generating polynomial of (maj, bar count) over signed tableaux equals
    the q,t-hook product."""
    return maj_neg_generating_poly(lam, budget) == hook_product(lam)


def s_ps_check(lam: Partition, q_cap: int = DEFAULT_Q_CAP) -> bool:
    """Two facts about the principal specialization of the two-alphabet Schur
    function: the comaj and maj sign-generating polynomials agree, and the
    specialized tableau expansion equals that polynomial over (q;q)_n."""
    lam = check_partition(lam)
    n = sum(lam)
    maj_poly = maj_neg_generating_poly(lam)
    if maj_poly != comaj_neg_generating_poly(lam):
        return False
    lhs = SpecSeries(q_cap, {})
    for t in syt_enumerate(lam):
        lhs = lhs + qsym_principal_spec(n, descent_set(t), q_cap)
    rhs = SpecSeries.inv_pochhammer(n, q_cap) * maj_poly
    return lhs == rhs


def qt_hook_consistency_check(lam: Partition, q_cap: int = DEFAULT_Q_CAP) -> bool:
    """(q;q)_n times the specialized tableau expansion equals the hook
    product, as truncated series."""
    lam = check_partition(lam)
    n = sum(lam)
    acc = SpecSeries(q_cap, {})
    for t in syt_enumerate(lam):
        acc = acc + qsym_principal_spec(n, descent_set(t), q_cap)
    lhs = acc * q_pochhammer(n)
    rhs = SpecSeries.from_qtpoly(hook_product(lam), q_cap)
    return lhs == rhs


# ---------------------------------------------------------------------------
# root-of-unity evaluations


def pi_lambda(lam: Partition) -> QPoly:
    """(q;q)_n / prod_i (1 - q^(lam_i)), an exact polynomial quotient."""
    lam = check_partition(lam)
    n = sum(lam)
    if n < 1:
        raise ValueError("need a nonempty partition")
    num = q_pochhammer(n).t_slices()[0]
    den = qpoly([1])
    for part in lam:
        den = qpoly_mul(den, qpoly([1] + [0] * (part - 1) + [-1]))
    return qpoly_exact_div(num, den)


def pi_root_check(lam: Partition, d: int) -> bool:
    """At a primitive d-th root of unity (d | n), the quotient vanishes unless
    the partition is rectangular with all parts d, where it equals z_lambda."""
    lam = check_partition(lam)
    n = sum(lam)
    if d < 1 or n % d != 0:
        raise ValueError(f"need d | n: d={d}, n={n}")
    expected = z_lambda(lam) if lam == (d,) * (n // d) else 0
    return cyclo_reduce(pi_lambda(lam), d) == CycloElem.from_rational(d, expected)


def omega_extract(f: SymFunc, r: int, s: int = 1) -> SymFunc:
    """Keep the coefficient monomials whose q-exponent is congruent to s mod
    r, then set q = 1 (exact exponent filtering)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return f.map_coefficients(lambda c: c.filter_q_residue(r, s).eval_q_one())


def omega_extract_roots(f: SymFunc, r: int, s: int = 1) -> SymFunc:
    """The same operator as a root-of-unity average, (1/r) sum over r-th
    roots zeta of zeta^(-s) f(q=zeta), computed with exact cyclotomic
    arithmetic; every averaged sum is asserted rational."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")

    def average(c: QTPoly) -> QTPoly:
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), v in c.items():
            total = CycloElem.from_rational(r, 0)
            for k in range(1, r + 1):
                total = total + CycloElem.root_power(r, k * (a - s))
            value = total.rational_value() * v / r
            if value != 0:
                key = (0, b)
                acc = out.get(key, Fraction(0)) + value
                if acc == 0:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return QTPoly(out)

    return f.map_coefficients(average)


# ---------------------------------------------------------------------------
# the multiplicity pipeline


def kw_generating_function(n_total: int, budget: int = DEFAULT_PAIR_BUDGET) -> SymFunc:
    """Schur-basis generating function whose coefficient at each shape of
    n_total is that shape's (maj, bar count) generating polynomial."""
    if n_total < 1:
        raise ValueError("need n_total >= 1")
    return SymFunc(
        "s",
        {lam: maj_neg_generating_poly(lam, budget) for lam in partitions_of(n_total)},
    )


def kw_check(n: int, m: int) -> CheckReport:
    """The tableau-counting description of Schur multiplicities: extracting
    q-exponents congruent to 1 mod n+m from the generating function and then
    the t^m coefficient must reproduce the Schur expansion of the bidegree
    character."""
    total = n + m
    filtered = omega_extract(kw_generating_function(total), total, 1)
    expansion = schur_expand(super_brandt_char(n, m))
    first = None
    for lam in partitions_of(total):
        lhs = filtered.coefficient(lam).coefficient(0, m)
        rhs_poly = expansion.coefficients.get(lam, QTPoly.zero())
        rhs = rhs_poly.constant_value()
        if lhs != rhs:
            first = {"partition": format_partition(lam), "lhs": str(lhs), "rhs": str(rhs)}
            break
    report = CheckReport("kw-multiplicity", {"n": n, "m": m}, first is None)
    if first is not None:
        report.first_discrepancy = first
    return report


# ---------------------------------------------------------------------------
# residue-class counting symmetries


def half_if_even(m: int) -> int:
    """m/2 for even m, 0 for odd m."""
    return m // 2 if m % 2 == 0 else 0


def symmetry_counts(
    lam: Partition, r_total: int, m: int, budget: int = DEFAULT_PAIR_BUDGET
) -> dict[int, int]:
    """For each residue s mod r_total, the number of signed standard tableaux
    of the shape with maj congruent to s and exactly m bars."""
    if r_total < 1:
        raise ValueError(f"r_total must be >= 1, got {r_total}")
    poly = maj_neg_generating_poly(lam, budget)
    counts = {s: 0 for s in range(r_total)}
    for (a, b), c in poly.items():
        if b == m:
            counts[a % r_total] += int(c)
    return counts


def sym1_check(lam: Partition, r: int, s: int) -> bool:
    """Residue-count equality over plain standard tableaux (no bars):
    interesting when gcd(r, n) = gcd(s, n)."""
    lam = check_partition(lam)
    n = sum(lam)
    counts = symmetry_counts(lam, n, 0)
    return counts[r % n] == counts[s % n]


def sym2_check(lam: Partition, n: int, m: int, r: int, s: int) -> bool:
    """Residue-count equality at fixed bar count m over shapes of n+m:
    interesting when gcd(r + m//2, n+m) = gcd(s + m//2, n+m), where m//2 is
    the even-half convention of :func:`half_if_even`."""
    total = n + m
    counts = symmetry_counts(lam, total, m)
    return counts[r % total] == counts[s % total]


def sym3_check(lam: Partition, n: int, m: int, r: int) -> bool:
    """For odd n and m, bar counts m and n are equidistributed within every
    maj residue class mod n+m."""
    total = n + m
    counts_m = symmetry_counts(lam, total, m)
    counts_n = symmetry_counts(lam, total, n)
    return counts_m[r % total] == counts_n[r % total]


# ---------------------------------------------------------------------------
# degree-two plethysms


def degree_two_checks(d: int) -> CheckReport:
    """Three closed-form facts about degree-two building blocks:

    (a) the d-th symmetric power of the antisymmetric square expands into
        Schur functions over shapes of 2d with all column lengths even;
    (b) the d-th symmetric power of the symmetric square expands over shapes
        with all parts even;
    (c) the d-th exterior power of the (1,1) bidegree character equals the
        convolution sum_k e_k[h_2] e_{d-k}[e_2].
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    anti = super_brandt_char(2, 0)  # (p_11 - p_2)/2
    symm = super_brandt_char(0, 2)  # (p_11 + p_2)/2

    got_a = schur_expand(h_pleth(d, anti)).coefficients
    want_a = {
        mu: QTPoly.one()
        for mu in partitions_of(2 * d)
        if all(col % 2 == 0 for col in conjugate(mu))
    }
    got_b = schur_expand(h_pleth(d, symm)).coefficients
    want_b = {
        mu: QTPoly.one()
        for mu in partitions_of(2 * d)
        if all(part % 2 == 0 for part in mu)
    }

    lhs_c = e_pleth(d, super_brandt_char(1, 1))
    rhs_c = SymFunc.zero("p")
    for k in range(d + 1):
        rhs_c = rhs_c + multiply(e_pleth(k, symm), e_pleth(d - k, anti))

    ok = got_a == want_a and got_b == want_b and lhs_c == rhs_c
    report = CheckReport("degree-two", {"d": d}, ok)
    if not ok:
        report.first_discrepancy = {
            "even-columns": got_a == want_a,
            "even-parts": got_b == want_b,
            "exterior-convolution": lhs_c == rhs_c,
        }
    return report
