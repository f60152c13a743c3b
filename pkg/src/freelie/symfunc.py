"""Symmetric functions in one and two alphabets, over exact q,t-coefficients.

The internal canonical basis is the power sums: every formula this package
verifies is native to p, so s, h, e and m are conversion layers on top.  A
:class:`SymFunc` is a basis tag plus a finite map from index partitions to
:class:`~freelie.exactalg.QTPoly` coefficients; a :class:`BiSymFunc` indexes
p_lambda(x) * p_mu(y) monomials by pairs of partitions and is always read in
the power-sum sense.

Schur <-> power-sum conversion goes through the symmetric group character
table, computed by Murnaghan-Nakayama border-strip recursion and memoized in
a module-level cache (the only shared mutable state here: a single-writer,
multi-reader table of integers with deterministic values; the cli module can
persist it to disk).

The symbol p_d(-y) is never stored: it is normalized at construction via
p_d(-y) = (-1)^d p_d(y), so the two-alphabet term map stays a true basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .exactalg import MultiPoly, QTPoly, RatLike
from .partition import (
    Partition,
    check_partition,
    partitions_of,
    z_lambda,
)

BASES = ("p", "s", "h", "e", "m")


def _partition_sort_key(lam: Partition):
    # ascending degree, then reverse lexicographic within a degree
    return (sum(lam), tuple(-p for p in lam))


class SymFunc:
    """Basis-tagged sparse symmetric function with QTPoly coefficients.

    Terms need not share a degree; each index partition carries its own.
    Zero coefficients are never stored.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Partition, QTPoly | RatLike] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        canon: dict[Partition, QTPoly] = {}
        if terms:
            for lam, coeff in terms.items():
                lam = check_partition(lam)
                if not isinstance(coeff, QTPoly):
                    coeff = QTPoly.const(coeff)
                if not coeff.is_zero:
                    canon[lam] = coeff
        self.terms = canon

    @classmethod
    def zero(cls, basis: str = "p") -> SymFunc:
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "p") -> SymFunc:
        return cls(basis, {(): QTPoly.one()})

    @classmethod
    def term(cls, basis: str, lam, coeff: QTPoly | RatLike = 1) -> SymFunc:
        return cls(basis, {check_partition(lam): coeff})

    def items(self) -> list[tuple[Partition, QTPoly]]:
        return sorted(self.terms.items(), key=lambda kv: _partition_sort_key(kv[0]))

    def coefficient(self, lam) -> QTPoly:
        return self.terms.get(check_partition(lam), QTPoly.zero())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({sum(lam) for lam in self.terms})

    def _check(self, other: SymFunc) -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: SymFunc) -> SymFunc:
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            s = terms.get(lam, QTPoly.zero()) + c
            if s.is_zero:
                terms.pop(lam, None)
            else:
                terms[lam] = s
        return SymFunc(self.basis, terms)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def scale(self, factor: QTPoly | RatLike) -> SymFunc:
        if not isinstance(factor, QTPoly):
            factor = QTPoly.const(factor)
        return SymFunc(self.basis, {lam: c * factor for lam, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[QTPoly], QTPoly]) -> SymFunc:
        return SymFunc(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.items():
            name = f"{self.basis}_{{{','.join(str(p) for p in lam)}}}" if lam else "1"
            if c == QTPoly.one():
                parts.append(name)
            elif c.is_constant:
                parts.append(f"{c.constant_value()}*{name}" if lam else str(c.constant_value()))
            else:
                parts.append(f"({c})*{name}" if lam else f"({c})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SymFunc[{self.basis}]({self})"


@dataclass(frozen=True)
class ClassFunctionSn:
    """A class function on the symmetric group: one rational value per cycle type."""

    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        vals = {check_partition(mu): Fraction(v) for mu, v in self.values.items()}
        expected = set(partitions_of(self.n))
        if set(vals) != expected:
            missing = sorted(expected - set(vals))
            raise ValueError(f"class function must cover all cycle types; missing {missing}")
        object.__setattr__(self, "values", vals)


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)

_character_cache: dict[tuple[Partition, Partition], int] = {}


def mn_character(lam, mu) -> int:
    """Irreducible character chi^lam evaluated on cycle type mu (|lam| = |mu|),
    by border-strip removal on beta-sets, memoized."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(lam: Partition, mu: Partition) -> int:
    if not lam:
        return 1
    key = (lam, mu)
    cached = _character_cache.get(key)
    if cached is not None:
        return cached
    k = mu[0]
    rest = mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(c)
        new_beta.sort(reverse=True)
        new_lam = tuple(
            part
            for i, x in enumerate(new_beta)
            if (part := x - (ell - 1 - i)) > 0
        )
        total += (-1) ** height * _mn(new_lam, rest)
    _character_cache[key] = total
    return total


def character_rows(max_n: int) -> list[list]:
    """All (lam, mu, chi^lam(mu)) rows for degrees 1..max_n, in the canonical
    partition order (used by the on-disk cache)."""
    rows = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                rows.append([list(lam), list(mu), mn_character(lam, mu)])
    return rows


def load_character_rows(rows) -> None:
    """Seed the memo table from persisted (lam, mu, value) rows."""
    for lam, mu, value in rows:
        _character_cache[(tuple(lam), tuple(mu))] = int(value)


def clear_character_cache() -> None:
    _character_cache.clear()


# ---------------------------------------------------------------------------
# basis conversions


@lru_cache(maxsize=None)
def _h_single_to_p(k: int) -> SymFunc:
    # h_k = sum over mu of p_mu / z_mu
    return SymFunc("p", {mu: Fraction(1, z_lambda(mu)) for mu in partitions_of(k)})


@lru_cache(maxsize=None)
def _e_single_to_p(k: int) -> SymFunc:
    # e_k = sum over mu of (-1)^(k - len(mu)) p_mu / z_mu
    return SymFunc(
        "p",
        {
            mu: Fraction((-1) ** (k - len(mu)), z_lambda(mu))
            for mu in partitions_of(k)
        },
    )


@lru_cache(maxsize=None)
def _monomial_expansion_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix M with M[i][j] = coefficient of the monomial x^{nu_j} in p_{mu_i},
    both indexed by partitions_of(n)."""
    parts = partitions_of(n)
    rows = []
    for mu in parts:
        expansion = expand_truncated(SymFunc.term("p", mu), n)
        row = []
        for nu in parts:
            exp = tuple(nu) + (0,) * (n - len(nu))
            row.append(expansion.coefficient(exp))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _m_single_to_p(lam: Partition) -> SymFunc:
    # Solve sum_mu c_mu p_mu = m_lam against the monomial expansion matrix.
    n = sum(lam)
    parts = partitions_of(n)
    matrix = _monomial_expansion_matrix(n)
    transpose = [[matrix[i][j] for i in range(len(parts))] for j in range(len(parts))]
    from .exactalg import dense_solve

    rhs = [Fraction(1) if nu == lam else Fraction(0) for nu in parts]
    coeffs = dense_solve(transpose, rhs)
    return SymFunc("p", {mu: c for mu, c in zip(parts, coeffs) if c != 0})


def to_p(f: SymFunc) -> SymFunc:
    """Convert any supported basis to the power-sum basis."""
    if f.basis == "p":
        return f
    out = SymFunc.zero("p")
    for lam, coeff in f.terms.items():
        if f.basis == "s":
            piece = SymFunc(
                "p",
                {
                    mu: Fraction(mn_character(lam, mu), z_lambda(mu))
                    for mu in partitions_of(sum(lam))
                },
            )
        elif f.basis in ("h", "e"):
            single = _h_single_to_p if f.basis == "h" else _e_single_to_p
            piece = SymFunc.one("p")
            for part in lam:
                piece = multiply(piece, single(part))
        else:  # m
            piece = _m_single_to_p(lam)
        out = out + piece.scale(coeff)
    return out


def s_to_p(f: SymFunc) -> SymFunc:
    if f.basis != "s":
        raise ValueError(f"s_to_p expects the s basis, got {f.basis}")
    return to_p(f)


def p_to_s(f: SymFunc) -> SymFunc:
    """Exact change of basis via the character table; inverse of s_to_p."""
    if f.basis != "p":
        raise ValueError(f"p_to_s expects the p basis, got {f.basis}")
    out: dict[Partition, QTPoly] = {}
    for n in {sum(mu) for mu in f.terms}:
        slice_terms = {mu: c for mu, c in f.terms.items() if sum(mu) == n}
        for lam in partitions_of(n):
            coeff = QTPoly.zero()
            for mu, c in slice_terms.items():
                coeff = coeff + c * mn_character(lam, mu)
            if not coeff.is_zero:
                out[lam] = coeff
    return SymFunc("s", out)


# ---------------------------------------------------------------------------
# ring structure, Frobenius characteristic, plethysm


def _union_parts(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the p basis: p_lambda p_mu = p_{lambda union mu}, bilinearly.
    Other bases are converted first."""
    fp, gp = to_p(f), to_p(g)
    out: dict[Partition, QTPoly] = {}
    for lam, c1 in fp.terms.items():
        for mu, c2 in gp.terms.items():
            key = _union_parts(lam, mu)
            s = out.get(key, QTPoly.zero()) + c1 * c2
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
    return SymFunc("p", out)


def frobenius_characteristic(chi: ClassFunctionSn) -> SymFunc:
    """sum over cycle types mu of chi(mu)/z_mu * p_mu."""
    return SymFunc(
        "p", {mu: Fraction(v, 1) / z_lambda(mu) for mu, v in chi.values.items()}
    )


def plethysm_p(d: int, f: SymFunc) -> SymFunc:
    """Plethysm by p_d: each p_k becomes p_{dk} and coefficients map
    q -> q^d, t -> t^d (the standard lambda-ring convention on q,t)."""
    if d < 1:
        raise ValueError(f"plethysm_p requires d >= 1, got {d}")
    if f.basis != "p":
        raise ValueError(f"plethysm_p expects the p basis, got {f.basis}")
    return SymFunc(
        "p",
        {
            tuple(sorted((d * part for part in lam), reverse=True)): c.substitute_powers(d)
            for lam, c in f.terms.items()
        },
    )


def _pleth_by_partition(mu: Partition, f: SymFunc) -> SymFunc:
    piece = SymFunc.one("p")
    for part in mu:
        piece = multiply(piece, plethysm_p(part, f))
    return piece


def h_pleth(a: int, f: SymFunc) -> SymFunc:
    """h_a[f] = sum over mu |- a of z_mu^{-1} prod_j p_{mu_j}[f]."""
    if a < 0:
        raise ValueError(f"h_pleth requires a >= 0, got {a}")
    fp = to_p(f)
    out = SymFunc.zero("p")
    for mu in partitions_of(a):
        out = out + _pleth_by_partition(mu, fp).scale(Fraction(1, z_lambda(mu)))
    return out


def e_pleth(a: int, f: SymFunc) -> SymFunc:
    """e_a[f], like h_a[f] but with the sign (-1)^(a - length(mu))."""
    if a < 0:
        raise ValueError(f"e_pleth requires a >= 0, got {a}")
    fp = to_p(f)
    out = SymFunc.zero("p")
    for mu in partitions_of(a):
        sign = (-1) ** (a - len(mu))
        out = out + _pleth_by_partition(mu, fp).scale(Fraction(sign, z_lambda(mu)))
    return out


# ---------------------------------------------------------------------------
# expansion into finitely many variables


def _power_sum_poly(k: int, nx: int, ny: int, alphabet: str, cap: int | None) -> MultiPoly:
    terms: dict[tuple[int, ...], int] = {}
    count, offset = (nx, 0) if alphabet == "x" else (ny, nx)
    for i in range(count):
        exp = [0] * (nx + ny)
        exp[offset + i] = k
        terms[tuple(exp)] = 1
    return MultiPoly(nx, ny, terms, cap)


def expand_truncated(
    f: SymFunc, N: int, M: int = 0, alphabet: str = "x", cap: int | None = None
) -> MultiPoly:
    """Substitute p_k -> x_1^k + ... + x_N^k (finite-variable specialization).

    The result lives in the (N, M)-variable layout so it can be combined with
    two-alphabet expansions; by default M = 0.  Coefficients must be rational
    constants (no free q or t).
    """
    fp = to_p(f)
    out = MultiPoly.zero(N, M, cap)
    for lam, coeff in fp.terms.items():
        piece = MultiPoly.const(N, M, coeff.constant_value(), cap)
        for part in lam:
            piece = piece * _power_sum_poly(part, N, M, alphabet, cap)
        out = out + piece
    return out


# ---------------------------------------------------------------------------
# Schur expansion reporting


@dataclass(frozen=True)
class SchurExpansion:
    """Schur coefficients of a symmetric function, plus an integrality flag.

    ``is_nonneg_integral`` records whether every coefficient is a polynomial
    in q, t with nonnegative integer coefficients, as a character expansion
    must be; a False value flags a bug or a non-character input, it is not
    an error by itself.
    """

    coefficients: dict[Partition, QTPoly]
    is_nonneg_integral: bool

    def items(self):
        return sorted(self.coefficients.items(), key=lambda kv: _partition_sort_key(kv[0]))


def schur_expand(f: SymFunc) -> SchurExpansion:
    s = p_to_s(to_p(f))
    ok = all(
        c.denominator == 1 and c >= 0
        for coeff in s.terms.values()
        for _, c in coeff.items()
    )
    return SchurExpansion(dict(s.terms), ok)


# ---------------------------------------------------------------------------
# two-alphabet functions


class BiSymFunc:
    """Sparse two-alphabet function: finite map (lambda, mu) -> coefficient,
    indexing p_lambda(x) * p_mu(y)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Partition, Partition], QTPoly | RatLike] | None = None):
        canon: dict[tuple[Partition, Partition], QTPoly] = {}
        if terms:
            for (lam, mu), coeff in terms.items():
                key = (check_partition(lam), check_partition(mu))
                if not isinstance(coeff, QTPoly):
                    coeff = QTPoly.const(coeff)
                if not coeff.is_zero:
                    canon[key] = coeff
        self.terms = canon

    @classmethod
    def zero(cls) -> BiSymFunc:
        return cls()

    @classmethod
    def one(cls) -> BiSymFunc:
        return cls({((), ()): QTPoly.one()})

    @classmethod
    def term(cls, lam, mu, coeff: QTPoly | RatLike = 1) -> BiSymFunc:
        return cls({(check_partition(lam), check_partition(mu)): coeff})

    def items(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (_partition_sort_key(kv[0][0]), _partition_sort_key(kv[0][1])),
        )

    def coefficient(self, lam, mu) -> QTPoly:
        return self.terms.get((check_partition(lam), check_partition(mu)), QTPoly.zero())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: BiSymFunc) -> BiSymFunc:
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, QTPoly.zero()) + c
            if s.is_zero:
                terms.pop(key, None)
            else:
                terms[key] = s
        return BiSymFunc(terms)

    def __neg__(self) -> BiSymFunc:
        return BiSymFunc({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BiSymFunc) -> BiSymFunc:
        return self + (-other)

    def scale(self, factor: QTPoly | RatLike) -> BiSymFunc:
        if not isinstance(factor, QTPoly):
            factor = QTPoly.const(factor)
        return BiSymFunc({k: c * factor for k, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[QTPoly], QTPoly]) -> BiSymFunc:
        return BiSymFunc({k: fn(c) for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (lam, mu), c in self.items():
            factors = []
            if lam:
                factors.append(f"p_{{{','.join(map(str, lam))}}}(x)")
            if mu:
                factors.append(f"p_{{{','.join(map(str, mu))}}}(y)")
            name = "*".join(factors) if factors else "1"
            if c == QTPoly.one():
                parts.append(name)
            elif c.is_constant:
                parts.append(f"{c.constant_value()}*{name}")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BiSymFunc({self})"


def bi_multiply(f: BiSymFunc, g: BiSymFunc) -> BiSymFunc:
    out: dict[tuple[Partition, Partition], QTPoly] = {}
    for (l1, m1), c1 in f.terms.items():
        for (l2, m2), c2 in g.terms.items():
            key = (_union_parts(l1, l2), _union_parts(m1, m2))
            s = out.get(key, QTPoly.zero()) + c1 * c2
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
    return BiSymFunc(out)


def bi_plethysm_p(d: int, f: BiSymFunc) -> BiSymFunc:
    """p_d plethysm on both alphabets: (lambda, mu) -> (d*lambda, d*mu),
    q -> q^d, t -> t^d."""
    if d < 1:
        raise ValueError(f"bi_plethysm_p requires d >= 1, got {d}")
    return BiSymFunc(
        {
            (
                tuple(sorted((d * p for p in lam), reverse=True)),
                tuple(sorted((d * p for p in mu), reverse=True)),
            ): c.substitute_powers(d)
            for (lam, mu), c in f.terms.items()
        }
    )


def _bi_pleth_by_partition(mu: Partition, f: BiSymFunc) -> BiSymFunc:
    piece = BiSymFunc.one()
    for part in mu:
        piece = bi_multiply(piece, bi_plethysm_p(part, f))
    return piece


def bi_h_pleth(a: int, f: BiSymFunc) -> BiSymFunc:
    if a < 0:
        raise ValueError(f"bi_h_pleth requires a >= 0, got {a}")
    out = BiSymFunc.zero()
    for mu in partitions_of(a):
        out = out + _bi_pleth_by_partition(mu, f).scale(Fraction(1, z_lambda(mu)))
    return out


def bi_e_pleth(a: int, f: BiSymFunc) -> BiSymFunc:
    if a < 0:
        raise ValueError(f"bi_e_pleth requires a >= 0, got {a}")
    out = BiSymFunc.zero()
    for mu in partitions_of(a):
        sign = (-1) ** (a - len(mu))
        out = out + _bi_pleth_by_partition(mu, f).scale(Fraction(sign, z_lambda(mu)))
    return out


def diagonal(f: BiSymFunc) -> SymFunc:
    """Set the second alphabet equal to the first:
    p_lambda(x) p_mu(y) -> p_{lambda union mu}(x)."""
    out: dict[Partition, QTPoly] = {}
    for (lam, mu), c in f.terms.items():
        key = _union_parts(lam, mu)
        s = out.get(key, QTPoly.zero()) + c
        if s.is_zero:
            out.pop(key, None)
        else:
            out[key] = s
    return SymFunc("p", out)


def bi_expand_truncated(f: BiSymFunc, N: int, M: int, cap: int | None = None) -> MultiPoly:
    """Substitute p_k(x) -> sum_{i<=N} x_i^k and p_k(y) -> sum_{i<=M} y_i^k."""
    out = MultiPoly.zero(N, M, cap)
    for (lam, mu), coeff in f.terms.items():
        piece = MultiPoly.const(N, M, coeff.constant_value(), cap)
        for part in lam:
            piece = piece * _power_sum_poly(part, N, M, "x", cap)
        for part in mu:
            piece = piece * _power_sum_poly(part, N, M, "y", cap)
        out = out + piece
    return out


def bi_schur_expand(f: BiSymFunc) -> dict[tuple[Partition, Partition], QTPoly]:
    """Expansion in products s_alpha(x) s_beta(y), via the character table on
    each alphabet independently."""
    out: dict[tuple[Partition, Partition], QTPoly] = {}
    for (lam, mu), c in f.terms.items():
        for alpha in partitions_of(sum(lam)):
            chi_a = mn_character(alpha, lam)
            if chi_a == 0:
                continue
            for beta in partitions_of(sum(mu)):
                chi_b = mn_character(beta, mu)
                if chi_b == 0:
                    continue
                key = (alpha, beta)
                s = out.get(key, QTPoly.zero()) + c * (chi_a * chi_b)
                if s.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


# ---------------------------------------------------------------------------
# JSON serialization


def sym_to_json(f: SymFunc) -> dict:
    return {
        "basis": f.basis,
        "terms": [
            {"partition": list(lam), "coeff": coeff.to_json()} for lam, coeff in f.items()
        ],
    }


def sym_from_json(data: Mapping) -> SymFunc:
    return SymFunc(
        data["basis"],
        {
            tuple(entry["partition"]): QTPoly.from_json(entry["coeff"])
            for entry in data["terms"]
        },
    )
