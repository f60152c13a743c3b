"""Exact arithmetic substrate for all character computations.

Everything is exact: coefficients are ``fractions.Fraction`` throughout and no
floating point appears anywhere in the package.  This module provides

* sparse two-variable polynomials in q and t (:class:`QTPoly`),
* dense univariate q-polynomials as trimmed coefficient tuples (constant term
  first), with exact division,
* cyclotomic polynomials and the quotient rings Q[q]/(Phi_d(q))
  (:class:`CycloElem`), used for exact root-of-unity sums,
* truncated multivariate polynomials over two alphabets (:class:`MultiPoly`),
* q-series primitives [n]_q, [n]_q!, (q;q)_n and number-theoretic helpers,
* exact Gaussian elimination (rank, dense solve) over the rationals.

All values are immutable after construction and all operations are pure, so
they are safe to share between concurrent execution contexts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Rat = Fraction

RatLike = int | Fraction


class ResourceLimitError(Exception):
    """An enumeration or cap-limited operation was asked to exceed its budget."""


@dataclass
class CheckReport:
    """Outcome of one verification check, serializable to JSON.

    ``lhs``/``rhs`` carry printable renderings of the two computation routes;
    ``first_discrepancy`` is populated exactly when the check failed.
    """

    check: str
    parameters: dict
    ok: bool
    lhs: object = None
    rhs: object = None
    first_discrepancy: object = None

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "parameters": self.parameters,
            "status": self.status,
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.first_discrepancy is not None:
            out["first_discrepancy"] = self.first_discrepancy
        return out


class ExactDivisionError(ArithmeticError):
    """A division that is guaranteed exact left a nonzero remainder.

    Raising this signals an implementation bug, not bad input.
    """


# ---------------------------------------------------------------------------
# number-theoretic helpers


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(d: int) -> int:
    """Moebius function: 0 on non-squarefree d, else (-1)^(number of prime factors)."""
    if d < 1:
        raise ValueError(f"mobius requires d >= 1, got {d}")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def euler_phi(d: int) -> int:
    """Euler totient of d >= 1."""
    if d < 1:
        raise ValueError(f"euler_phi requires d >= 1, got {d}")
    result = d
    p = 2
    n = d
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


# ---------------------------------------------------------------------------
# dense univariate q-polynomials: tuple of Fractions, constant term first;
# the zero polynomial is the empty tuple.

QPoly = tuple[Fraction, ...]


def qpoly(coeffs: Iterable[RatLike]) -> QPoly:
    """Build a trimmed dense q-polynomial from a coefficient iterable."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    return qpoly(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return qpoly(out)


def qpoly_divmod(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    """Exact long division over Q; returns (quotient, remainder)."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lead
        quot[i - dd] = f
        for j, cd in enumerate(den):
            rem[i - dd + j] -= f * cd
    return qpoly(quot), qpoly(rem)


def qpoly_exact_div(num: QPoly, den: QPoly) -> QPoly:
    quot, rem = qpoly_divmod(num, den)
    if rem:
        raise ExactDivisionError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """The d-th cyclotomic polynomial Phi_d(q), with integer coefficients.

    Computed by exactly dividing q^d - 1 by the product of all Phi_e with
    e | d, e < d.
    """
    if d < 1:
        raise ValueError(f"cyclotomic_poly requires d >= 1, got {d}")
    num = qpoly([-1] + [0] * (d - 1) + [1])
    den: QPoly = qpoly([1])
    for e in divisors(d):
        if e < d:
            den = qpoly_mul(den, qpoly(cyclotomic_poly(e)))
    quot = qpoly_exact_div(num, den)
    if any(c.denominator != 1 for c in quot):
        raise ExactDivisionError(f"cyclotomic polynomial {d} not integral: {quot}")
    return tuple(int(c) for c in quot)


# ---------------------------------------------------------------------------
# sparse q,t-polynomials


class QTPoly:
    """Sparse polynomial in q and t with exact rational coefficients.

    Terms live in a map from exponent pairs (a, b) >= (0, 0), meaning
    q^a * t^b, to nonzero Fractions.  Zero coefficients are never stored, so
    structural equality of the term maps is semantic polynomial equality.
    Instances are immutable by convention: the term map is never mutated
    after construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], RatLike] | None = None):
        canon: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent pair ({a}, {b})")
                c = Fraction(c)
                if c != 0:
                    canon[(int(a), int(b))] = c
        self._terms = canon

    # -- constructors

    @classmethod
    def zero(cls) -> QTPoly:
        return cls()

    @classmethod
    def one(cls) -> QTPoly:
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: RatLike) -> QTPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: RatLike = 1) -> QTPoly:
        return cls({(a, b): c})

    @classmethod
    def q(cls) -> QTPoly:
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> QTPoly:
        return cls({(0, 1): 1})

    # -- inspection

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in the canonical order: by total degree, then q, then t exponent."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if q or t actually occurs."""
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((0, 0), Fraction(0))

    def q_degree(self) -> int:
        return max((a for a, _ in self._terms), default=0)

    def t_degree(self) -> int:
        return max((b for _, b in self._terms), default=0)

    # -- ring operations

    def __add__(self, other: QTPoly | RatLike) -> QTPoly:
        other = _coerce_qt(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return QTPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> QTPoly:
        return QTPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: QTPoly | RatLike) -> QTPoly:
        return self + (-_coerce_qt(other))

    def __rsub__(self, other: QTPoly | RatLike) -> QTPoly:
        return _coerce_qt(other) + (-self)

    def __mul__(self, other: QTPoly | RatLike) -> QTPoly:
        other = _coerce_qt(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QTPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QTPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- structural operations

    def substitute_powers(self, d: int) -> QTPoly:
        """q -> q^d, t -> t^d (the coefficient action of degree-d plethysm)."""
        if d < 1:
            raise ValueError(f"substitute_powers requires d >= 1, got {d}")
        return QTPoly({(a * d, b * d): c for (a, b), c in self._terms.items()})

    def filter_q_residue(self, r: int, s: int) -> QTPoly:
        """Keep only the monomials whose q-exponent is congruent to s mod r."""
        if r < 1:
            raise ValueError(f"modulus must be >= 1, got {r}")
        s %= r
        return QTPoly({k: c for k, c in self._terms.items() if k[0] % r == s})

    def eval_q_one(self) -> QTPoly:
        """Set q = 1, leaving a polynomial in t only."""
        out: dict[tuple[int, int], Fraction] = {}
        for (_, b), c in self._terms.items():
            k = (0, b)
            s = out.get(k, Fraction(0)) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return QTPoly(out)

    def eval_t(self, value: RatLike) -> QPoly:
        """Substitute a rational for t, leaving a dense q-polynomial."""
        value = Fraction(value)
        acc: dict[int, Fraction] = {}
        for (a, b), c in self._terms.items():
            acc[a] = acc.get(a, Fraction(0)) + c * value**b
        if not acc:
            return ()
        out = [Fraction(0)] * (max(acc) + 1)
        for a, c in acc.items():
            out[a] = c
        return qpoly(out)

    def t_slices(self) -> dict[int, QPoly]:
        """Group terms by t-exponent; each slice is a dense q-polynomial."""
        acc: dict[int, dict[int, Fraction]] = {}
        for (a, b), c in self._terms.items():
            acc.setdefault(b, {})[a] = c
        out: dict[int, QPoly] = {}
        for b, qs in acc.items():
            dense = [Fraction(0)] * (max(qs) + 1)
            for a, c in qs.items():
                dense[a] = c
            out[b] = qpoly(dense)
        return out

    @classmethod
    def from_t_slices(cls, slices: Mapping[int, QPoly]) -> QTPoly:
        terms: dict[tuple[int, int], Fraction] = {}
        for b, dense in slices.items():
            for a, c in enumerate(dense):
                if c != 0:
                    terms[(a, b)] = c
        return cls(terms)

    @classmethod
    def from_qpoly(cls, dense: QPoly) -> QTPoly:
        return cls({(a, 0): c for a, c in enumerate(dense) if c != 0})

    def divide_exact_q(self, den: QPoly) -> QTPoly:
        """Divide by a t-free polynomial, slice by t-degree; must be exact."""
        out: dict[int, QPoly] = {}
        for b, dense in self.t_slices().items():
            out[b] = qpoly_exact_div(dense, den)
        return QTPoly.from_t_slices(out)

    # -- rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = []
            if a == 1:
                factors.append("q")
            elif a > 1:
                factors.append(f"q^{a}")
            if b == 1:
                factors.append("t")
            elif b > 1:
                factors.append(f"t^{b}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QTPoly({self})"

    def to_json(self) -> list[list]:
        """Canonical JSON form: [[a, b, "num/den"], ...] in term order."""
        return [[a, b, str(c)] for (a, b), c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> QTPoly:
        return cls({(int(a), int(b)): Fraction(c) for a, b, c in data})


def _coerce_qt(value: QTPoly | RatLike) -> QTPoly:
    if isinstance(value, QTPoly):
        return value
    return QTPoly.const(value)


# ---------------------------------------------------------------------------
# q-series primitives


def q_int(n: int) -> QTPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError(f"q_int requires n >= 0, got {n}")
    return QTPoly({(a, 0): 1 for a in range(n)})


def q_factorial(n: int) -> QTPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError(f"q_factorial requires n >= 0, got {n}")
    result = QTPoly.one()
    for k in range(1, n + 1):
        result = result * q_int(k)
    return result


def q_pochhammer(n: int) -> QTPoly:
    """(q;q)_n = (1 - q)(1 - q^2) ... (1 - q^n)."""
    if n < 0:
        raise ValueError(f"q_pochhammer requires n >= 0, got {n}")
    result = QTPoly.one()
    for k in range(1, n + 1):
        result = result * (QTPoly.one() - QTPoly.monomial(k, 0))
    return result


# ---------------------------------------------------------------------------
# cyclotomic quotient rings


@dataclass(frozen=True)
class CycloElem:
    """Element of Q[q]/(Phi_d(q)): exact arithmetic with d-th roots of unity.

    The representative is a trimmed dense polynomial of degree < phi(d).
    Uniqueness of the reduced form means an element equals a rational
    constant exactly when its representative has degree 0.
    """

    modulus: int
    rep: QPoly

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if len(self.rep) > euler_phi(self.modulus):
            raise ValueError("representative not reduced")

    @classmethod
    def from_rational(cls, d: int, value: RatLike) -> CycloElem:
        return cyclo_reduce(qpoly([value]), d)

    @classmethod
    def root_power(cls, d: int, k: int) -> CycloElem:
        """omega_d^k for the chosen primitive d-th root omega_d (the class of q)."""
        return cyclo_reduce(qpoly([0] * (k % d) + [1]), d)

    def __add__(self, other: CycloElem) -> CycloElem:
        self._check(other)
        return cyclo_reduce(qpoly_add(self.rep, other.rep), self.modulus)

    def __mul__(self, other: CycloElem | RatLike) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            other = CycloElem.from_rational(self.modulus, other)
        self._check(other)
        return cyclo_reduce(qpoly_mul(self.rep, other.rep), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> CycloElem:
        return CycloElem(self.modulus, qpoly(-c for c in self.rep))

    def __sub__(self, other: CycloElem) -> CycloElem:
        return self + (-other)

    def _check(self, other: CycloElem) -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    @property
    def is_rational(self) -> bool:
        return len(self.rep) <= 1

    def rational_value(self) -> Fraction:
        """The value of a degree-0 element; raises if the root genuinely occurs."""
        if not self.is_rational:
            raise ValueError(f"not a rational element: {self}")
        return self.rep[0] if self.rep else Fraction(0)

    def __str__(self) -> str:
        if not self.rep:
            return "0"
        parts = []
        for a, c in enumerate(self.rep):
            if c == 0:
                continue
            if a == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append("w" if a == 1 else f"w^{a}")
            else:
                parts.append(f"{c}*w" if a == 1 else f"{c}*w^{a}")
        return " + ".join(parts).replace("+ -", "- ")


def cyclo_reduce(p: QPoly | Iterable[RatLike], d: int) -> CycloElem:
    """Reduce a q-polynomial modulo Phi_d(q), i.e. evaluate it at omega_d."""
    if d < 1:
        raise ValueError(f"cyclo_reduce requires d >= 1, got {d}")
    dense = qpoly(p)
    _, rem = qpoly_divmod(dense, qpoly(cyclotomic_poly(d)))
    return CycloElem(d, rem)


# ---------------------------------------------------------------------------
# truncated multivariate polynomials over two alphabets


class MultiPoly:
    """Sparse polynomial in x_1..x_N and y_1..y_M with rational coefficients.

    Exponent vectors have length N + M (x-block first).  An optional total
    degree cap drops higher terms silently on every operation; all series
    comparisons in this package are made per fixed degree, so a cap loses no
    information for them.  cap=None keeps everything.
    """

    __slots__ = ("nx", "ny", "cap", "_terms")

    def __init__(
        self,
        nx: int,
        ny: int = 0,
        terms: Mapping[tuple[int, ...], RatLike] | None = None,
        cap: int | None = None,
    ):
        if nx < 0 or ny < 0:
            raise ValueError("variable counts must be >= 0")
        self.nx = nx
        self.ny = ny
        self.cap = cap
        canon: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nx + ny:
                    raise ValueError(
                        f"exponent vector length {len(exp)} != {nx + ny}"
                    )
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                if cap is not None and sum(exp) > cap:
                    continue
                c = Fraction(c)
                if c != 0:
                    canon[exp] = c
        self._terms = canon

    @classmethod
    def zero(cls, nx: int, ny: int = 0, cap: int | None = None) -> MultiPoly:
        return cls(nx, ny, None, cap)

    @classmethod
    def const(cls, nx: int, ny: int, c: RatLike, cap: int | None = None) -> MultiPoly:
        return cls(nx, ny, {(0,) * (nx + ny): c}, cap)

    @classmethod
    def monomial(
        cls, nx: int, ny: int, exp: tuple[int, ...], c: RatLike = 1, cap: int | None = None
    ) -> MultiPoly:
        return cls(nx, ny, {exp: c}, cap)

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, exp: tuple[int, ...]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def _check(self, other: MultiPoly) -> None:
        if self.nx != other.nx or self.ny != other.ny:
            raise ValueError("variable layout mismatch")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return MultiPoly(self.nx, self.ny, terms, _merge_caps(self.cap, other.cap))

    def __neg__(self) -> MultiPoly:
        return MultiPoly(
            self.nx, self.ny, {k: -c for k, c in self._terms.items()}, self.cap
        )

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly | RatLike) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                self.nx,
                self.ny,
                {k: c * other for k, c in self._terms.items()},
                self.cap,
            )
        self._check(other)
        cap = _merge_caps(self.cap, other.cap)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if cap is not None and sum(exp) > cap:
                    continue
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return MultiPoly(self.nx, self.ny, out, cap)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.nx, self.ny, 1, self.cap)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.nx == other.nx and self.ny == other.ny and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nx, self.ny, frozenset(self._terms.items())))

    def eval_all_ones(self) -> Fraction:
        """Value with every variable set to 1 (the sum of all coefficients)."""
        return sum(self._terms.values(), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = [f"x{i + 1}" for i in range(self.nx)] + [
            f"y{i + 1}" for i in range(self.ny)
        ]
        parts = []
        for exp, c in self.items():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _merge_caps(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# ---------------------------------------------------------------------------
# exact linear algebra over the rationals


class SparseEchelon:
    """Incremental row reduction of sparse rational vectors; tracks the rank.

    Vectors are dicts column-index -> Fraction.  Single-context use only.
    """

    def __init__(self):
        self._pivots: dict[object, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, vector: Mapping) -> bool:
        """Reduce a vector against the basis; returns True if the rank grew."""
        row = {k: Fraction(v) for k, v in vector.items() if v != 0}
        while row:
            pivot = min(row)
            basis_row = self._pivots.get(pivot)
            if basis_row is None:
                scale = row[pivot]
                self._pivots[pivot] = {k: v / scale for k, v in row.items()}
                return True
            factor = row[pivot]
            for k, v in basis_row.items():
                s = row.get(k, Fraction(0)) - factor * v
                if s == 0:
                    row.pop(k, None)
                else:
                    row[k] = s
        return False


def dense_solve(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction]:
    """Solve a square nonsingular rational system by Gaussian elimination."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
