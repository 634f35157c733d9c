"""The q-difference operator in t, the coefficients c_n(t, m, q), and
empirical checks of the conjectured D/R, A/P and B/Q identities.

Conjecture checks report; they never assert.  Every table entry written
``D_{n,k}(x, t)`` etc. in the identities is read as the (t, q)-table entry
D_{n,k}(t, q) (likewise A and B).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .exactalg import ONE, ZERO, Poly, RatFunc, as_poly, q, substitute, t
from .families import pqrs_tq
from .moments import moment, table_ABDE
from .qcore import q_binom, q_factorial, q_int, q_pow
from .report import Checker, VerificationReport

__all__ = [
    "CONJECTURE_IDS",
    "ConjectureCase",
    "q_diff_t",
    "c_nm",
    "conjecture_sides",
    "check_conjecture",
    "gf_power_check",
    "run_grid",
]

CONJECTURE_IDS = ("3.45", "3.47", "3.48", "3.49", "3.50", "3.51", "gf_q1")
M_INDEXED = ("3.45", "3.50", "3.51", "gf_q1")

TABLE_NOTE = "D_{n,k}(x,t), A_{n,k}(x,t), B_{n,k}(x,t) read as the (t,q)-table entries"


@dataclass(frozen=True)
class ConjectureCase:
    id: str
    n: int
    m: int = 1

    def __post_init__(self):
        if self.id not in CONJECTURE_IDS:
            raise ValueError(f"unknown conjecture {self.id!r}; valid ids: {', '.join(CONJECTURE_IDS)}")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.id not in M_INDEXED and self.m != 1:
            raise ValueError(f"conjecture {self.id} is stated for m = 1 only")


def q_diff_t(f, m: int = 1):
    """Apply ``(f(t) - f(qt)) / ((1 - q) t)`` ``m`` times.

    Polynomial input stays polynomial; the division is asserted exact.
    """
    if m < 0:
        raise ValueError("iteration count must be >= 0")
    poly_in = isinstance(f, Poly)
    g = RatFunc.coerce(f)
    denom = RatFunc((1 - q) * t)
    for _ in range(m):
        g = (g - g.twist(1)) / denom
        if poly_in:
            g = RatFunc(as_poly(g))
    return as_poly(g) if poly_in else g


def c_nm(n: int, m: int) -> Poly:
    """``c_n(t, m, q)``, with the ``[m]/[n+m]`` factor cleared after summing."""
    if m < 1:
        raise ValueError("c_nm needs m >= 1")
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    total = ZERO
    for k in range(n):
        c = q_binom(n - 1, k) * q_binom(n + m, k + m)
        total = total + c.mul_term((2 * k * m + k * k + k, k, 0), 1)
    return as_poly(RatFunc(q_int(m) * total, q_int(n + m)))


def _qnar(n: int, shift: int) -> Poly:
    """``C_n(q^shift t, q)``; zero for ``n < 0``."""
    if n < 0:
        return ZERO
    return moment("q_narayana", n).num.twist(shift)


def _xpow(j: int) -> Poly:
    return Poly.monomial(1, ex=j)


def _prod_qint(values) -> Poly:
    out = ONE
    for v in values:
        out = out * q_int(v) if v >= 0 else ZERO
    return out


def _lhs(table: str, family: str, n: int, m: int) -> Poly:
    total = ZERO
    for k in range(n + 1):
        entry = as_poly(table_ABDE(table, n, k))
        d = q_diff_t(entry, m)
        if d:
            total = total + d * pqrs_tq(family, k).twist(m)
    return total


def _rhs_345(n, m):
    s = ZERO
    for j in range(n - m + 1):
        s = s + c_nm(n - m - j, m).twist(2 * j).mul_term((m * j, 0, j), 1)
    return s * q_factorial(m) * q_binom(n, m) * q_pow(m * m)


def _rhs_347(n, m):
    s = ZERO
    for j in range(n):
        s = s + _qnar(n - j - 1, 2 * j + 2).mul_term((j + 1, 0, j), 1)
    return s * q_binom(n, 1)


def _rhs_348(n, m):
    s = ZERO
    for j in range(2, n + 1):
        s = s + (q_int(j - 1) * _qnar(n - j, 2 * j)).mul_term((j, 0, j - 1), 1)
    return s


def _rhs_349(n, m):
    s = ZERO
    for j in range(1, n + 1):
        s = s + (q_int(j) * _qnar(n - j, 2 * j + 1)).mul_term((j, 0, j - 1), 1)
    return s


def _rhs_350(n, m):
    s = ZERO
    for j in range(n - m + 1):
        s = s + (q_int(j + 1) * c_nm(n - m - 1 - j, m).twist(2 * j + 2)).mul_term((m * j, 0, j + 1), 1)
    return s * _prod_qint(n - j for j in range(1, m)) * q_pow(m * m + m)


def _rhs_351(n, m):
    s = ZERO
    for j in range(n - m + 1):
        s = s + (q_int(j + 1) * c_nm(n - m - j, m).twist(2 * j + 1)).mul_term((m * j, 0, j), 1)
    return s * _prod_qint(n + 1 - j for j in range(1, m)) * q_pow(m * m)


_SIDES: dict[str, tuple[str, str, Callable]] = {
    "3.45": ("D", "R", _rhs_345),
    "3.47": ("D", "R", _rhs_347),
    "3.48": ("A", "P", _rhs_348),
    "3.49": ("B", "Q", _rhs_349),
    "3.50": ("A", "P", _rhs_350),
    "3.51": ("B", "Q", _rhs_351),
}


def conjecture_sides(case: ConjectureCase) -> tuple[Poly, Poly]:
    """Both sides of one conjectured identity as exact polynomials in q, t, x."""
    table, family, rhs = _SIDES[case.id]
    return _lhs(table, family, case.n, case.m), rhs(case.n, case.m)


def _narayana_series(N: int) -> list[Poly]:
    out = [ONE]
    for n in range(1, N + 1):
        out.append(Poly({(0, k, 0): Fraction(comb(n, k) * comb(n, k + 1), n) for k in range(n)}))
    return out


def gf_power_check(m: int, N: int, upper: str = "n-1") -> VerificationReport:
    """Compare ``[x^n] C(x, t)^m`` with ``c_n(t, m, 1)`` for ``0 <= n <= N``.

    ``upper`` chooses the summation limit used for ``c_n(t, m, 1)``:
    ``"n-1"`` (the limit of the q-version) or ``"n-m-1"``.
    """
    if m < 1 or N < 0:
        raise ValueError("gf_power_check needs m >= 1 and N >= 0")
    series = _narayana_series(N)
    power = [ONE] + [ZERO] * N
    for _ in range(m):
        power = [sum((power[i] * series[n - i] for i in range(n + 1)), ZERO) for n in range(N + 1)]
    chk = Checker(f"gf_q1[{upper}]", f"m={m}, 0<=n<={N}")
    for n in range(N + 1):
        if upper == "n-1":
            coeff = as_poly(substitute(c_nm(n, m), "q", 1))
        elif upper == "n-m-1":
            coeff = ONE if n == 0 else Poly(
                {(0, k, 0): Fraction(comb(n - 1, k) * comb(n + m, k + m) * m, n + m) for k in range(n - m)}
            )
        else:
            raise ValueError("upper must be 'n-1' or 'n-m-1'")
        chk.check({"m": m, "n": n}, power[n], coeff)
    return chk.done()


def check_conjecture(case: ConjectureCase) -> VerificationReport:
    """Evaluate one grid cell; failures are findings, reported with the difference."""
    start = time.perf_counter()
    if case.id == "gf_q1":
        rep = gf_power_check(case.m, case.n)
        rep.identity = "gf_q1"
        rep.tested_range = f"m={case.m}, n<={case.n}"
        alt = gf_power_check(case.m, case.n, upper="n-m-1")
        matches = [u for u, r in (("n-1", rep), ("n-m-1", alt)) if r.passed]
        rep.note = "summation limits matching the series: " + (", ".join(matches) or "none")
    else:
        chk = Checker(f"conj{case.id}", f"n={case.n}, m={case.m}", note=TABLE_NOTE)
        lhs, rhs = conjecture_sides(case)
        chk.check({"n": case.n, "m": case.m}, lhs, rhs)
        rep = chk.done()
    rep.seconds = time.perf_counter() - start
    return rep


def grid_cases(n_max: int, m_max: int, ids=None) -> list[ConjectureCase]:
    ids = list(ids) if ids else list(CONJECTURE_IDS)
    cases = []
    for cid in ids:
        ms = range(1, m_max + 1) if cid in M_INDEXED else [1]
        for m in ms:
            for n in range(1, n_max + 1):
                cases.append(ConjectureCase(cid, n, m))
    return cases


def run_grid(n_max: int, m_max: int, ids=None, jobs: int = 1) -> list[VerificationReport]:
    """Evaluate every cell; the result order is fixed regardless of ``jobs``."""
    cases = grid_cases(n_max, m_max, ids)
    if jobs > 1 and len(cases) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(check_conjecture, cases))
    return [check_conjecture(c) for c in cases]
