"""Characters and dimensions of the bigraded pieces of the free Lie
superalgebra and of the higher super Lie modules built from them.

Conventions fixed here:

* The divisor set "d | gcd(n, m)" with one of n, m possibly zero means
  {d >= 1 : d divides n and d divides m}, so gcd(n, 0) = n; this is what
  ``math.gcd`` computes and it makes the m = 0 case reduce to the classical
  power-sum formula for free Lie algebra characters.
* p_d(-y) is normalized to (-1)^d p_d(y) at construction (see symfunc).
* Exterior powers of formal characters never vanish for large exponents: the
  formal ring corresponds to infinitely many variables.  Vanishing in a fixed
  finite dimension emerges on its own under truncated expansion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exactalg import (
    CheckReport,
    QTPoly,
    ResourceLimitError,
    SparseEchelon,
    binom,
    divisors,
    mobius,
)
from .symfunc import (
    BiSymFunc,
    SymFunc,
    bi_e_pleth,
    bi_h_pleth,
    bi_multiply,
    bi_schur_expand,
    diagonal,
)


class SupportMatrix:
    """Finite-support matrix of nonnegative multiplicities a_{i,j}, i, j >= 0,
    with a_{0,0} = 0; the index of one higher super Lie module.

    The bidegree is (sum of i * a_{i,j}, sum of j * a_{i,j}).
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        canon: dict[tuple[int, int], int] = {}
        for (i, j), a in dict(entries).items():
            i, j, a = int(i), int(j), int(a)
            if i < 0 or j < 0:
                raise ValueError(f"negative cell ({i}, {j})")
            if a < 0:
                raise ValueError(f"negative multiplicity at ({i}, {j})")
            if (i, j) == (0, 0) and a != 0:
                raise ValueError("cell (0, 0) must be empty")
            if a > 0:
                canon[(i, j)] = a
        self.entries = canon

    def bidegree(self) -> tuple[int, int]:
        n = sum(i * a for (i, _), a in self.entries.items())
        m = sum(j * a for (_, j), a in self.entries.items())
        return (n, m)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.entries.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, SupportMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def to_json(self) -> list[list[int]]:
        return [[i, j, a] for (i, j), a in self.items()]

    @classmethod
    def from_json(cls, data) -> SupportMatrix:
        return cls({(int(i), int(j)): int(a) for i, j, a in data})

    def __repr__(self) -> str:
        return f"SupportMatrix({self.to_json()})"


def _common_divisors(n: int, m: int) -> list[int]:
    return divisors(math.gcd(n, m))


def super_brandt_char(n: int, m: int) -> SymFunc:
    """One-alphabet character of the (n, m) bidegree piece:
    1/(n+m) * sum over d | gcd(n,m) of (-1)^(m + m/d) mu(d) C((n+m)/d, m/d) p_d^((n+m)/d).
    """
    if n < 0 or m < 0 or (n, m) == (0, 0):
        raise ValueError(f"bidegree must be nonzero and nonnegative: ({n}, {m})")
    total = n + m
    terms: dict[tuple[int, ...], Fraction] = {}
    for d in _common_divisors(n, m):
        sign = (-1) ** (m + m // d)
        c = Fraction(sign * mobius(d) * binom(total // d, m // d), total)
        if c != 0:
            terms[(d,) * (total // d)] = c
    return SymFunc("p", terms)


def super_bi_brandt_char(n: int, m: int) -> BiSymFunc:
    """Two-alphabet character of the (n, m) bidegree piece:
    1/(n+m) * sum over d | gcd(n,m) of (-1)^(m/d) mu(d) C((n+m)/d, m/d)
    p_d(x)^(n/d) p_d(-y)^(m/d), with p_d(-y) = (-1)^d p_d(y).
    """
    if n < 0 or m < 0 or (n, m) == (0, 0):
        raise ValueError(f"bidegree must be nonzero and nonnegative: ({n}, {m})")
    total = n + m
    terms: dict[tuple, Fraction] = {}
    for d in _common_divisors(n, m):
        # (-1)^(m/d) from the formula, (-1)^(d * m/d) from normalizing p_d(-y)
        sign = (-1) ** (m // d) * (-1) ** m
        c = Fraction(sign * mobius(d) * binom(total // d, m // d), total)
        if c != 0:
            terms[((d,) * (n // d), (d,) * (m // d))] = c
    return BiSymFunc(terms)


def super_witt_dim(n: int, m: int, N: int) -> int:
    """Dimension of the (n, m) piece when both generating spaces have dim N."""
    if n < 0 or m < 0 or n + m <= 0:
        raise ValueError(f"need n + m > 0: ({n}, {m})")
    if N < 0:
        raise ValueError(f"need N >= 0, got {N}")
    total = n + m
    acc = Fraction(0)
    for d in _common_divisors(n, m):
        sign = (-1) ** (m + m // d)
        acc += Fraction(sign * mobius(d) * binom(total // d, m // d) * N ** (total // d), total)
    if acc.denominator != 1:
        raise ArithmeticError(f"dimension formula gave non-integer {acc} at ({n}, {m}, {N})")
    return int(acc)


def petrogradsky_series(max_n: int, max_m: int) -> dict[tuple[int, int], BiSymFunc]:
    """Bigraded character series of the whole free Lie superalgebra, expanded
    independently of the closed per-bidegree formula.

    Expands -sum_d (mu(d)/d) ln(1 - (q^d p_d(x) - t^d p_d(-y))) via
    ln(1-u) = -sum_{s>=1} u^s / s, multiplying the series out with generic
    two-alphabet arithmetic and collecting the coefficient of q^n t^m for all
    n <= max_n, m <= max_m.  Only finitely many d and s contribute per
    bidegree.
    """
    if max_n < 0 or max_m < 0:
        raise ValueError("caps must be >= 0")
    bound = max_n + max_m

    def truncate(f: BiSymFunc) -> BiSymFunc:
        return f.map_coefficients(
            lambda c: QTPoly(
                {
                    (a, b): v
                    for (a, b), v in c.items()
                    if a <= max_n and b <= max_m
                }
            )
        )

    series = BiSymFunc.zero()
    for d in range(1, bound + 1):
        mu_d = mobius(d)
        if mu_d == 0:
            continue
        # u_d = q^d p_d(x) - t^d p_d(-y) = q^d p_d(x) + (-1)^(d+1) t^d p_d(y)
        u = BiSymFunc(
            {
                ((d,), ()): QTPoly.monomial(d, 0),
                ((), (d,)): QTPoly.monomial(0, d, (-1) ** (d + 1)),
            }
        )
        power = truncate(u)
        s = 1
        while d * s <= bound and not power.is_zero:
            series = series + power.scale(Fraction(mu_d, d * s))
            power = truncate(bi_multiply(power, u))
            s += 1

    out: dict[tuple[int, int], BiSymFunc] = {}
    for n in range(0, max_n + 1):
        for m in range(0, max_m + 1):
            if (n, m) == (0, 0):
                continue
            component = BiSymFunc(
                {
                    key: coeff.coefficient(n, m)
                    for key, coeff in series.terms.items()
                }
            )
            out[(n, m)] = component
    return out


def gamma_char(j: int, a: int, f: BiSymFunc) -> BiSymFunc:
    """Character of the a-th symmetric power of f when j is even, of the a-th
    exterior power when j is odd."""
    if j < 0 or a < 0:
        raise ValueError("j and a must be >= 0")
    return bi_h_pleth(a, f) if j % 2 == 0 else bi_e_pleth(a, f)


def super_lie_module_char(matrix: SupportMatrix) -> BiSymFunc:
    """Product over the support of Gamma_j^{a_{i,j}} applied to the (i, j)
    bidegree character."""
    out = BiSymFunc.one()
    for (i, j), a in matrix.items():
        out = bi_multiply(out, gamma_char(j, a, super_bi_brandt_char(i, j)))
    return out


def enumerate_bidegree_matrices(n: int, m: int) -> list[SupportMatrix]:
    """All support matrices of bidegree exactly (n, m), in the deterministic
    order given by lexicographic sorted support."""
    if n < 0 or m < 0 or n + m <= 0:
        raise ValueError(f"need n + m > 0: ({n}, {m})")
    cells = [
        (i, j)
        for i in range(n + 1)
        for j in range(m + 1)
        if (i, j) != (0, 0)
    ]

    results: list[SupportMatrix] = []
    chosen: dict[tuple[int, int], int] = {}

    def assign(idx: int, rem_n: int, rem_m: int) -> None:
        if idx == len(cells):
            if rem_n == 0 and rem_m == 0:
                results.append(SupportMatrix(dict(chosen)))
            return
        i, j = cells[idx]
        max_a_n = rem_n // i if i > 0 else None
        max_a_m = rem_m // j if j > 0 else None
        caps = [c for c in (max_a_n, max_a_m) if c is not None]
        max_a = min(caps)
        for a in range(max_a + 1):
            if a > 0:
                chosen[(i, j)] = a
            assign(idx + 1, rem_n - a * i, rem_m - a * j)
            chosen.pop((i, j), None)

    assign(0, n, m)
    results.sort(key=lambda mat: sorted(mat.entries.items()))
    return results


def thrall_sum_check(n: int, m: int) -> CheckReport:
    """Verify that higher super Lie module characters of bidegree (n, m) sum
    to the tensor-space character C(n+m, m) p_1(x)^n p_1(y)^m."""
    lhs = BiSymFunc.zero()
    for matrix in enumerate_bidegree_matrices(n, m):
        lhs = lhs + super_lie_module_char(matrix)
    rhs = BiSymFunc.term((1,) * n, (1,) * m, binom(n + m, m))
    ok = lhs == rhs
    report = CheckReport(
        check="thrall-sum",
        parameters={"n": n, "m": m},
        ok=ok,
    )
    if not ok:
        report.lhs = {
            f"({','.join(map(str, a))})|({','.join(map(str, b))})": str(c)
            for (a, b), c in bi_schur_expand(lhs).items()
        }
        report.rhs = {
            f"({','.join(map(str, a))})|({','.join(map(str, b))})": str(c)
            for (a, b), c in bi_schur_expand(rhs).items()
        }
        report.first_discrepancy = "sum of module characters != tensor character"
    return report


# ---------------------------------------------------------------------------
# brute-force oracle over actual bracketed tensors

_BRUTE_MAX_DEGREE = 6
_BRUTE_MAX_DIM = 3


@lru_cache(maxsize=None)
def _bracketing_trees(leaves: int):
    """All full binary trees with the given number of leaves.  A tree is
    either an int (leaf slot index, filled later) or a pair of trees."""
    if leaves == 1:
        return (0,)
    out = []
    for left in range(1, leaves):
        for lt in _bracketing_trees(left):
            for rt in _bracketing_trees(leaves - left):
                out.append((lt, _shift_leaves(rt, left)))
    return tuple(out)


def _shift_leaves(tree, offset: int):
    if isinstance(tree, int):
        return tree + offset
    return (_shift_leaves(tree[0], offset), _shift_leaves(tree[1], offset))


def _expand_bracketing(tree, word, parities) -> tuple[dict, int]:
    """Expand a bracketing of the word into the tensor space.

    Returns (tensor, parity): tensor maps basis words (tuples of generator
    ids) to coefficients, parity is the Z/2 degree of the whole expression.
    The super commutator is [A, B] = AB - (-1)^(|A||B|) BA.
    """
    if isinstance(tree, int):
        return {(word[tree],): Fraction(1)}, parities[word[tree]]
    left, lp = _expand_bracketing(tree[0], word, parities)
    right, rp = _expand_bracketing(tree[1], word, parities)
    sign = -((-1) ** (lp * rp))
    out: dict[tuple, Fraction] = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            key = wl + wr
            out[key] = out.get(key, Fraction(0)) + cl * cr
            key = wr + wl
            s = out.get(key, Fraction(0)) + sign * cl * cr
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out, (lp + rp) % 2


def brute_force_lie_dim(n: int, m: int, N: int, M: int) -> int:
    """Dimension of the span of all full bracketings of words with n even and
    m odd generators, inside the bidegree-(n, m) tensor space, by exact
    Gaussian elimination.  Deliberately independent of every formula here."""
    if n < 0 or m < 0 or n + m <= 0:
        raise ValueError(f"need n + m > 0: ({n}, {m})")
    if n + m > _BRUTE_MAX_DEGREE or N > _BRUTE_MAX_DIM or M > _BRUTE_MAX_DIM:
        raise ResourceLimitError(
            f"brute force capped at degree {_BRUTE_MAX_DEGREE} and dimension {_BRUTE_MAX_DIM}"
        )
    if N < 0 or M < 0:
        raise ValueError("dimensions must be >= 0")

    # generator ids: 0..N-1 even, N..N+M-1 odd
    parities = {g: 0 for g in range(N)}
    parities.update({N + g: 1 for g in range(M)})
    evens = list(range(N))
    odds = list(range(N, N + M))
    length = n + m

    from itertools import combinations, product

    echelon = SparseEchelon()
    trees = _bracketing_trees(length)
    for odd_positions in combinations(range(length), m):
        odd_set = set(odd_positions)
        slots = [odds if i in odd_set else evens for i in range(length)]
        for word in product(*slots):
            for tree in trees:
                tensor, _ = _expand_bracketing(tree, word, parities)
                if tensor:
                    echelon.add(tensor)
    return echelon.rank
