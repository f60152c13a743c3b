"""Command-line surface: compute characters, dimensions and tableau counts,
run the identity-verification suites, and manage the on-disk character table
cache.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error, 3 domain
error, 4 resource budget exceeded.

All output is deterministic for fixed flags: partitions, terms and report
rows are always emitted in the canonical orders, and timing information is
only included on request (``--timing``) so that repeated runs, warm or cold
cache, are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import cyclic, specialization, superlie, symfunc, tableau
from .exactalg import CheckReport, QTPoly, ResourceLimitError
from .partition import format_partition, parse_partition, partitions_of
from .specialization import DEFAULT_Q_CAP
from .symfunc import SymFunc

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4

CACHE_ENV_VAR = "SUPERLIE_CACHE_DIR"
CACHE_FILE_NAME = "character_table.json"
CACHE_FORMAT_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    """Envelope for one command invocation, serialized to JSON or text."""

    command: str
    parameters: dict
    status: str
    payload: dict = field(default_factory=dict)
    elapsed_ms: int | None = None

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "payload": self.payload,
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


# ---------------------------------------------------------------------------
# character table cache


def cache_dir() -> str:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), ".cache", "freelie")


def _cache_path() -> str:
    return os.path.join(cache_dir(), CACHE_FILE_NAME)


def _rows_digest(rows) -> str:
    blob = json.dumps(rows, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_cache() -> bool:
    """Seed the in-memory character table from disk; invalid files are
    ignored with a warning (values are then recomputed on demand)."""
    path = _cache_path()
    if not os.path.exists(path):
        return False
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("format_version") != CACHE_FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {payload.get('format_version')}")
        rows = payload["rows"]
        if _rows_digest(rows) != payload.get("digest"):
            raise ValueError("digest mismatch")
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"warning: ignoring corrupt character cache ({exc}); it will be rebuilt",
              file=sys.stderr)
        return False
    symfunc.load_character_rows(rows)
    return True


def warm_cache(max_n: int) -> str:
    """Compute the character table through degree max_n and persist it
    atomically (write to a temp file, then rename)."""
    rows = symfunc.character_rows(max_n)
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "max_n": max_n,
        "digest": _rows_digest(rows),
        "rows": rows,
    }
    os.makedirs(cache_dir(), exist_ok=True)
    path = _cache_path()
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, separators=(",", ":"))
    os.replace(tmp, path)
    return path


def clear_cache() -> bool:
    path = _cache_path()
    if os.path.exists(path):
        os.remove(path)
        return True
    return False


# ---------------------------------------------------------------------------
# rendering helpers


def _render_sym(f: SymFunc) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for lam, coeff in f.items():
        name = f"{f.basis}_{format_partition(lam)}" if lam else "1"
        if coeff == QTPoly.one():
            parts.append(name)
        elif coeff.is_constant:
            value = coeff.constant_value()
            parts.append(f"{value}*{name}" if lam else str(value))
        else:
            parts.append(f"({coeff})*{name}" if lam else f"({coeff})")
    return " + ".join(parts).replace("+ -", "- ")


def _render_bi_terms(terms) -> str:
    parts = []
    for (lam, mu), coeff in terms:
        name = f"[{format_partition(lam)}|{format_partition(mu)}]"
        if coeff == QTPoly.one():
            parts.append(name)
        elif coeff.is_constant:
            parts.append(f"{coeff.constant_value()}*{name}")
        else:
            parts.append(f"({coeff})*{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _sym_payload(f: SymFunc) -> dict:
    expansion = symfunc.schur_expand(f)
    return {
        "p_expansion": _render_sym(symfunc.to_p(f)),
        "s_expansion": _render_sym(SymFunc("s", expansion.coefficients)),
        "schur_nonneg_integral": expansion.is_nonneg_integral,
        "json": symfunc.sym_to_json(symfunc.to_p(f)),
    }


def _bi_payload(f) -> dict:
    return {
        "p_expansion": _render_bi_terms(f.items()),
        "s_expansion": _render_bi_terms(sorted(symfunc.bi_schur_expand(f).items())),
    }


# ---------------------------------------------------------------------------
# verification suites
#
# Each suite returns a list of CheckReports; bounds default to the "full"
# profile used by the acceptance criteria.


def suite_brandt_diagonal(max_total: int = 8) -> list[CheckReport]:
    """Diagonal restriction of the two-alphabet character formula equals the
    one-alphabet formula, and the Schur expansion is a genuine character
    (nonnegative integer multiplicities)."""
    reports = []
    for total in range(1, max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            lhs = symfunc.diagonal(superlie.super_bi_brandt_char(n, m))
            rhs = superlie.super_brandt_char(n, m)
            ok = lhs == rhs
            reports.append(
                CheckReport(
                    "brandt-diagonal",
                    {"n": n, "m": m},
                    ok,
                    lhs=None if ok else _render_sym(lhs),
                    rhs=None if ok else _render_sym(rhs),
                )
            )
            expansion = symfunc.schur_expand(rhs)
            reports.append(
                CheckReport(
                    "schur-positivity",
                    {"n": n, "m": m},
                    expansion.is_nonneg_integral,
                    lhs=None
                    if expansion.is_nonneg_integral
                    else _render_sym(SymFunc("s", expansion.coefficients)),
                )
            )
    return reports


def suite_petrogradsky(max_n: int = 8, max_m: int = 8) -> list[CheckReport]:
    """Log-series expansion of the full graded character agrees with the
    closed per-bidegree formula."""
    series = superlie.petrogradsky_series(max_n, max_m)
    reports = []
    for (n, m), component in sorted(series.items()):
        expected = superlie.super_bi_brandt_char(n, m)
        ok = component == expected
        reports.append(
            CheckReport(
                "petrogradsky-series",
                {"n": n, "m": m},
                ok,
                lhs=None if ok else str(component),
                rhs=None if ok else str(expected),
            )
        )
    return reports


def suite_witt_oracle(
    max_total: int = 6,
    max_dim: int = 3,
    brute_max_total: int = 4,
    brute_max_dim: int = 2,
) -> list[CheckReport]:
    """Dimension formula vs character specialization at x = 1, and vs the
    brute-force rank of actual bracketed tensors."""
    reports = []
    for total in range(1, max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            char = superlie.super_brandt_char(n, m)
            for N in range(0, max_dim + 1):
                expected = superlie.super_witt_dim(n, m, N)
                via_char = symfunc.expand_truncated(char, N).eval_all_ones()
                reports.append(
                    CheckReport(
                        "witt-vs-specialization",
                        {"n": n, "m": m, "N": N},
                        Fraction(expected) == via_char,
                        lhs=str(via_char),
                        rhs=str(expected),
                    )
                )
    for total in range(1, brute_max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            for N in range(1, brute_max_dim + 1):
                expected = superlie.super_witt_dim(n, m, N)
                rank = superlie.brute_force_lie_dim(n, m, N, N)
                reports.append(
                    CheckReport(
                        "witt-vs-bracket-rank",
                        {"n": n, "m": m, "N": N},
                        rank == expected,
                        lhs=str(rank),
                        rhs=str(expected),
                    )
                )
    return reports


def suite_thrall(max_total: int = 5) -> list[CheckReport]:
    """Higher module characters sum to the tensor-space character."""
    reports = []
    for total in range(1, max_total + 1):
        for m in range(0, total + 1):
            reports.append(superlie.thrall_sum_check(total - m, m))
    return reports


def suite_klyachko(
    max_n: int = 8, oracle_max_r: int = 6, chi_cyc_max_total: int = 10
) -> list[CheckReport]:
    """Classical single-row case via induction, the induction shortcut vs the
    brute-force induced character, and the subset-rotation character vs orbit
    counting."""
    reports = []
    for n in range(1, max_n + 1):
        lhs = cyclic.induce_frobenius(cyclic.chi_power(n, 1))
        rhs = superlie.super_brandt_char(n, 0)
        reports.append(
            CheckReport(
                "klyachko-classical",
                {"n": n},
                lhs == rhs,
                lhs=_render_sym(lhs),
                rhs=_render_sym(rhs),
            )
        )
    for r in range(1, oracle_max_r + 1):
        for k0 in range(1, r + 1):
            chi = cyclic.chi_power(r, k0)
            direct = cyclic.induce_frobenius(chi)
            via_oracle = symfunc.frobenius_characteristic(cyclic.induce_oracle(chi))
            reports.append(
                CheckReport(
                    "induction-vs-oracle",
                    {"r": r, "k0": k0},
                    direct == via_oracle,
                    lhs=_render_sym(via_oracle),
                    rhs=_render_sym(direct),
                )
            )
    for total in range(1, chi_cyc_max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            fast = cyclic.chi_cyc(n, m)
            slow = cyclic.chi_cyc_oracle(n, m)
            reports.append(
                CheckReport(
                    "subset-rotation-character",
                    {"n": n, "m": m},
                    fast.values == slow.values,
                )
            )
    return reports


def suite_super_klyachko(max_total: int = 8) -> list[CheckReport]:
    """Twisted-induction description equals the power-sum formula."""
    reports = []
    for total in range(1, max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            lhs = cyclic.super_klyachko_char(n, m)
            rhs = superlie.super_brandt_char(n, m)
            ok = lhs == rhs
            reports.append(
                CheckReport(
                    "super-klyachko",
                    {"n": n, "m": m},
                    ok,
                    lhs=None if ok else _render_sym(lhs),
                    rhs=None if ok else _render_sym(rhs),
                )
            )
    return reports


def suite_hook(max_n: int = 8) -> list[CheckReport]:
    """q,t-hook product equals the (maj, bar count) generating polynomial,
    and its t = 0 slice is the classical maj generating polynomial."""
    reports = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            product = specialization.hook_product(lam)
            gen = tableau.maj_neg_generating_poly(lam)
            reports.append(
                CheckReport(
                    "hook-formula",
                    {"partition": format_partition(lam)},
                    gen == product,
                    lhs=None if gen == product else str(gen),
                    rhs=None if gen == product else str(product),
                )
            )
            classical = QTPoly.zero()
            for t in tableau.syt_enumerate(lam):
                classical = classical + QTPoly.monomial(tableau.maj(t), 0)
            t0_slice = QTPoly.from_qpoly(product.eval_t(0))
            reports.append(
                CheckReport(
                    "hook-classical-slice",
                    {"partition": format_partition(lam)},
                    classical == t0_slice,
                )
            )
    return reports


def suite_qps(max_n: int = 5, q_cap: int = DEFAULT_Q_CAP) -> list[CheckReport]:
    """Principal specialization formula for every descent set."""
    reports = []
    for n in range(1, max_n + 1):
        positions = list(range(1, n))
        for mask in range(1 << len(positions)):
            d = {positions[i] for i in range(len(positions)) if mask >> i & 1}
            reports.append(specialization.qps_check(n, d, q_cap))
    return reports


def suite_sps(
    max_n: int = 6, q_cap: int = DEFAULT_Q_CAP, qt_hook_max_n: int = 5
) -> list[CheckReport]:
    """Principal specialization of the two-alphabet Schur functions: maj and
    comaj equidistribution plus the series identity, and the numerical check
    of the closed hook-product specialization."""
    reports = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            reports.append(
                CheckReport(
                    "schur-principal-specialization",
                    {"partition": format_partition(lam), "q_cap": q_cap},
                    specialization.s_ps_check(lam, q_cap),
                )
            )
    for n in range(1, qt_hook_max_n + 1):
        for lam in partitions_of(n):
            reports.append(
                CheckReport(
                    "qt-hook-specialization",
                    {"partition": format_partition(lam), "q_cap": q_cap},
                    specialization.qt_hook_consistency_check(lam, q_cap),
                )
            )
    return reports


def suite_cauchy(max_n: int = 5, N: int = 2, M: int = 2) -> list[CheckReport]:
    reports = []
    for n in range(1, max_n + 1):
        reports.append(specialization.super_cauchy_check(n, N, M))
    return reports


def suite_reu(max_n: int = 8) -> list[CheckReport]:
    """Root-of-unity values of the hook-length-style quotient pi_lambda."""
    reports = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for d in (d for d in range(1, n + 1) if n % d == 0):
                reports.append(
                    CheckReport(
                        "pi-root",
                        {"partition": format_partition(lam), "d": d},
                        specialization.pi_root_check(lam, d),
                    )
                )
    return reports


def suite_kw(
    max_total: int = 8,
    omega_trials: int = 100,
    omega_max_r: int = 12,
    seed: int = 20_25,
) -> list[CheckReport]:
    """Multiplicity formula for all bidegrees, plus agreement of the two
    implementations of residue extraction on random polynomials."""
    reports = []
    for total in range(1, max_total + 1):
        for m in range(0, total + 1):
            reports.append(specialization.kw_check(total - m, m))

    rng = random.Random(seed)
    failures = 0
    for trial in range(omega_trials):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            parts = tuple(
                sorted((rng.randint(1, 4) for _ in range(rng.randint(0, 3))), reverse=True)
            )
            coeff = QTPoly(
                {
                    (rng.randint(0, 24), rng.randint(0, 4)): Fraction(
                        rng.randint(-9, 9), rng.randint(1, 5)
                    )
                    for _ in range(rng.randint(1, 6))
                }
            )
            if not coeff.is_zero:
                terms[parts] = coeff
        f = SymFunc("p", terms)
        r = rng.randint(1, omega_max_r)
        s = rng.randint(0, r)
        by_filter = specialization.omega_extract(f, r, s)
        by_roots = specialization.omega_extract_roots(f, r, s)
        if by_filter != by_roots:
            failures += 1
    reports.append(
        CheckReport(
            "omega-filter-vs-roots",
            {"trials": omega_trials, "max_r": omega_max_r, "seed": seed},
            failures == 0,
            first_discrepancy=None if failures == 0 else f"{failures} mismatches",
        )
    )
    return reports


def suite_symmetry(
    sym1_max_n: int = 7, sym2_max_total: int = 7, sym3_max_total: int = 8
) -> list[CheckReport]:
    """Residue-class counting symmetries of the maj statistic."""
    import math as _math

    reports = []
    for n in range(2, sym1_max_n + 1):
        for lam in partitions_of(n):
            ok = all(
                specialization.sym1_check(lam, r, s)
                for r in range(1, n + 1)
                for s in range(r + 1, n + 1)
                if _math.gcd(r, n) == _math.gcd(s, n)
            )
            reports.append(
                CheckReport(
                    "residue-symmetry-classical",
                    {"partition": format_partition(lam)},
                    ok,
                )
            )
    for total in range(2, sym2_max_total + 1):
        for m in range(0, total + 1):
            n = total - m
            if (n, m) == (0, 0):
                continue
            shift = specialization.half_if_even(m)
            pairs = [
                (r, s)
                for r in range(1, total + 1)
                for s in range(r + 1, total + 1)
                if _math.gcd(r + shift, total) == _math.gcd(s + shift, total)
            ]
            ok = all(
                specialization.sym2_check(lam, n, m, r, s)
                for lam in partitions_of(total)
                for (r, s) in pairs
            )
            reports.append(
                CheckReport(
                    "residue-symmetry-signed",
                    {"n": n, "m": m},
                    ok,
                )
            )
    for total in range(2, sym3_max_total + 1):
        for m in range(1, total, 2):
            n = total - m
            if n % 2 == 0 or n < 1:
                continue
            ok = all(
                specialization.sym3_check(lam, n, m, r)
                for lam in partitions_of(total)
                for r in range(total)
            )
            reports.append(
                CheckReport(
                    "bar-count-symmetry-odd",
                    {"n": n, "m": m},
                    ok,
                )
            )
    return reports


def suite_degree_two(max_d: int = 4) -> list[CheckReport]:
    return [specialization.degree_two_checks(d) for d in range(1, max_d + 1)]


SUITES = {
    "brandt-diagonal": suite_brandt_diagonal,
    "petrogradsky": suite_petrogradsky,
    "witt-oracle": suite_witt_oracle,
    "thrall": suite_thrall,
    "klyachko": suite_klyachko,
    "super-klyachko": suite_super_klyachko,
    "hook": suite_hook,
    "qps": suite_qps,
    "sps": suite_sps,
    "cauchy": suite_cauchy,
    "reu": suite_reu,
    "kw": suite_kw,
    "symmetry": suite_symmetry,
    "degree-two": suite_degree_two,
}

# Per-suite keyword bounds for the two reproducible profiles.
PROFILES: dict[str, dict[str, dict]] = {
    "full": {name: {} for name in SUITES},
    "quick": {
        "brandt-diagonal": {"max_total": 6},
        "petrogradsky": {"max_n": 3, "max_m": 3},
        "witt-oracle": {"max_total": 5, "max_dim": 2, "brute_max_total": 3},
        "thrall": {"max_total": 4},
        "klyachko": {"max_n": 6, "oracle_max_r": 4, "chi_cyc_max_total": 8},
        "super-klyachko": {"max_total": 6},
        "hook": {"max_n": 6},
        "qps": {"max_n": 4, "q_cap": 10},
        "sps": {"max_n": 4, "q_cap": 10, "qt_hook_max_n": 4},
        "cauchy": {"max_n": 4},
        "reu": {"max_n": 6},
        "kw": {"max_total": 6, "omega_trials": 25, "omega_max_r": 8},
        "symmetry": {"sym1_max_n": 5, "sym2_max_total": 5, "sym3_max_total": 6},
        "degree-two": {"max_d": 3},
    },
}


def run_suite(name: str, profile: str = "full", overrides: dict | None = None):
    """Run one suite (or "all") and return the list of CheckReports."""
    if profile not in PROFILES:
        raise UsageError(f"unknown profile {profile!r}")
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {name!r}")
    reports: list[CheckReport] = []
    for n in names:
        kwargs = dict(PROFILES[profile][n])
        if overrides:
            valid = SUITES[n].__code__.co_varnames[: SUITES[n].__code__.co_argcount]
            kwargs.update({k: v for k, v in overrides.items() if k in valid})
        reports.extend(SUITES[n](**kwargs))
    return reports


# ---------------------------------------------------------------------------
# command implementations


def cmd_char(args) -> RunReport:
    if args.kind in ("lie", "bilie"):
        if args.matrix is not None:
            raise UsageError("--matrix is only valid for 'char higher'")
        if len(args.args) != 2:
            raise UsageError(f"char {args.kind} requires two integers n m")
        try:
            n, m = int(args.args[0]), int(args.args[1])
        except ValueError:
            raise UsageError(f"cannot parse bidegree from {args.args!r}") from None
        if args.kind == "lie":
            payload = _sym_payload(superlie.super_brandt_char(n, m))
        else:
            payload = _bi_payload(superlie.super_bi_brandt_char(n, m))
        return RunReport("char", {"kind": args.kind, "n": n, "m": m}, "pass", payload)

    if args.matrix is None:
        raise UsageError("char higher requires --matrix")
    text = args.matrix
    if text.startswith("@") or os.path.exists(text):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read matrix file: {exc}") from None
    try:
        data = json.loads(text)
        matrix = superlie.SupportMatrix.from_json(data)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse support matrix: {exc}") from None
    payload = _bi_payload(superlie.super_lie_module_char(matrix))
    payload["bidegree"] = list(matrix.bidegree())
    return RunReport(
        "char", {"kind": "higher", "matrix": matrix.to_json()}, "pass", payload
    )


def cmd_dim(args) -> RunReport:
    value = superlie.super_witt_dim(args.n, args.m, args.N)
    payload: dict = {"dim": value}
    status = "pass"
    if args.oracle:
        rank = superlie.brute_force_lie_dim(args.n, args.m, args.N, args.N)
        payload["oracle"] = rank
        payload["match"] = rank == value
        if rank != value:
            status = "fail"
    return RunReport(
        "dim",
        {"n": args.n, "m": args.m, "N": args.N, "oracle": bool(args.oracle)},
        status,
        payload,
    )


def cmd_count(args) -> RunReport:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    parameters: dict = {"partition": format_partition(lam)}
    payload: dict = {}
    if args.gf:
        poly = tableau.maj_neg_generating_poly(lam)
        payload["generating_polynomial"] = str(poly)
        payload["monomials"] = poly.to_json()
        parameters["gf"] = True
    else:
        modulus = args.mod if args.mod is not None else sum(lam)
        residue = args.res
        neg = args.neg
        parameters.update({"mod": modulus, "res": residue, "neg": neg})
        payload["count"] = tableau.count_super_tableaux(lam, modulus, residue, neg)
    return RunReport("count", parameters, "pass", payload)


def cmd_verify(args) -> RunReport:
    overrides = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.max_total is not None:
        overrides["max_total"] = args.max_total
    if args.max_m is not None:
        overrides["max_m"] = args.max_m
    if args.qcap is not None:
        overrides["q_cap"] = args.qcap
    if args.max_degree is not None:
        overrides["max_d"] = args.max_degree
    reports = run_suite(args.suite, args.profile, overrides)
    ok = all(r.ok for r in reports)
    payload = {
        "total": len(reports),
        "failed": sum(1 for r in reports if not r.ok),
        "checks": [r.to_json() for r in reports],
    }
    return RunReport(
        "verify",
        {"suite": args.suite, "profile": args.profile, **overrides},
        "pass" if ok else "fail",
        payload,
    )


def cmd_cache(args) -> RunReport:
    if args.action == "warm":
        path = warm_cache(args.n)
        return RunReport(
            "cache", {"action": "warm", "n": args.n}, "pass", {"path": path}
        )
    removed = clear_cache()
    return RunReport(
        "cache", {"action": "clear"}, "pass", {"removed": removed}
    )


# ---------------------------------------------------------------------------
# argument parsing and entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freelie",
        description="Exact free Lie superalgebra characters and identity verification",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--timing", action="store_true", help="include elapsed_ms in the report"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", parents=[common], help="print a character")
    p_char.add_argument("kind", choices=("lie", "bilie", "higher"))
    p_char.add_argument("args", nargs="*")
    p_char.add_argument("--matrix", help="JSON [[i,j,a],...] for 'higher'")
    p_char.set_defaults(func=cmd_char)

    p_dim = sub.add_parser("dim", parents=[common], help="bigraded dimension")
    p_dim.add_argument("n", type=int)
    p_dim.add_argument("m", type=int)
    p_dim.add_argument("N", type=int)
    p_dim.add_argument("--oracle", action="store_true")
    p_dim.set_defaults(func=cmd_dim)

    p_count = sub.add_parser("count", parents=[common], help="signed tableau counts")
    p_count.add_argument("partition", help='partition, e.g. "(2,1)"')
    p_count.add_argument("--mod", type=int, default=None)
    p_count.add_argument("--res", type=int, default=1)
    p_count.add_argument("--neg", type=int, default=0)
    p_count.add_argument("--gf", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", parents=[common], help="run identity suites")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--profile", choices=("quick", "full"), default="full")
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_verify.add_argument("--max-total", dest="max_total", type=int, default=None)
    p_verify.add_argument("--max-m", dest="max_m", type=int, default=None)
    p_verify.add_argument("--qcap", type=int, default=None)
    p_verify.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_cache = sub.add_parser("cache", parents=[common], help="character table cache")
    p_cache.add_argument("action", choices=("warm", "clear"))
    p_cache.add_argument("--n", type=int, default=8)
    p_cache.set_defaults(func=cmd_cache)

    return parser


def _print_report(report: RunReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True, default=str))
        return
    print(f"{report.command} {json.dumps(report.parameters, sort_keys=True, default=str)}: {report.status}")
    for key, value in report.payload.items():
        if key == "checks":
            for check in value:
                line = f"  [{check['status']}] {check['check']} {json.dumps(check['parameters'], sort_keys=True, default=str)}"
                print(line)
                if check["status"] == "fail" and "first_discrepancy" in check:
                    print(f"    discrepancy: {check['first_discrepancy']}")
        elif key == "json":
            continue
        else:
            print(f"  {key}: {value}")
    if report.elapsed_ms is not None:
        print(f"  elapsed_ms: {report.elapsed_ms}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    load_cache()
    start = time.monotonic()
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ArithmeticError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.timing:
        report.elapsed_ms = int((time.monotonic() - start) * 1000)
    _print_report(report, args.format)
    if report.status == "fail":
        return EXIT_IDENTITY_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
