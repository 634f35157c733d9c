"""Expansion tables a(n, k), their closed forms, and moment sequences.

Row ``n`` of a :class:`TriangularTable` holds the coefficients of ``x^n``
in a monic family; column 0 is the moment sequence of the functional that
annihilates every member of positive index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .exactalg import ONE, ZERO, Poly, RatFunc, as_poly, q, substitute, t
from .families import PolyFamily, get_family
from .qcore import q_binom, q_int, q_pow
from .report import Checker, VerificationReport

__all__ = [
    "TriangularTable",
    "MomentSequence",
    "expand_in_family",
    "x_coefficients",
    "a_qfib_closed",
    "a_qfib_closed_difference",
    "a_qfib_entry",
    "a_fibtq_closed",
    "table_ABDE",
    "B_alternative",
    "closed_table",
    "moment",
    "MOMENT_KINDS",
    "moment_sequence",
    "FAMILY_MOMENTS",
    "catalan_stieltjes_check",
    "b_d_relation_check",
]


@dataclass
class TriangularTable:
    """Lower-triangular array ``entries[(n, k)]`` for ``0 <= k <= n <= N``."""

    name: str
    N: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, nk: tuple[int, int]) -> RatFunc:
        n, k = nk
        if not 0 <= k <= n <= self.N:
            return RatFunc(ZERO)
        return self.entries[(n, k)]

    def row(self, n: int) -> list[RatFunc]:
        return [self[n, k] for k in range(n + 1)]

    def column(self, k: int) -> list[RatFunc]:
        return [self[n, k] for n in range(k, self.N + 1)]

    def rows(self) -> Iterator[list[RatFunc]]:
        for n in range(self.N + 1):
            yield self.row(n)


def x_coefficients(p) -> dict[int, object]:
    """``{k: coefficient of x^k}`` with Poly or RatFunc coefficients."""
    if isinstance(p, RatFunc):
        if "x" in p.den.variables():
            raise ValueError("member denominator must be free of x")
        if p.den == ONE:
            return p.num.coefficients("x")
        return {k: RatFunc(c, p.den) for k, c in p.num.coefficients("x").items()}
    return Poly.coerce(p).coefficients("x")


def _is_one(c) -> bool:
    return c == 1 if isinstance(c, (Poly, RatFunc)) else c == 1


def expand_in_family(fam, N: int, name: str | None = None) -> TriangularTable:
    """Coefficients ``a(n, k)`` with ``x^n = sum_k a(n, k) p_k(x)`` by back-substitution.

    ``fam`` is a :class:`PolyFamily`, a family name, or a list of members.
    """
    if isinstance(fam, str):
        fam = get_family(fam)
    if isinstance(fam, PolyFamily):
        label = name or fam.name
        members = [fam(n) for n in range(N + 1)]
    else:
        label = name or "custom"
        members = list(fam)[: N + 1]
        if len(members) < N + 1:
            raise ValueError(f"need {N + 1} members, got {len(members)}")
    coeffs = []
    for k, p in enumerate(members):
        c = x_coefficients(p)
        if not c or max(c) != k or not _is_one(c[k]):
            raise ValueError(f"{label} member {k} is not monic of degree {k}")
        coeffs.append(c)

    table = TriangularTable(label, N)
    for n in range(N + 1):
        rem: dict[int, object] = {n: ONE}
        for k in range(n, -1, -1):
            a = rem.pop(k, ZERO)
            if a:
                for e, c in coeffs[k].items():
                    if e == k:
                        continue
                    rem[e] = rem.get(e, ZERO) - a * c
            table.entries[(n, k)] = RatFunc.coerce(a)
        leftover = [v for v in rem.values() if v]
        if leftover:
            raise ArithmeticError(f"back-substitution left a remainder in row {n}")
    return table


# -- closed forms -------------------------------------------------------------


def a_qfib_closed(n: int, k: int) -> Poly:
    """``a(2n+k, k, q) = [k+1]/[n+k+1] [2n+k, n]`` (exact division asserted)."""
    if n < 0 or k < 0:
        raise ValueError("a_qfib_closed needs n, k >= 0")
    return as_poly(RatFunc(q_int(k + 1) * q_binom(2 * n + k, n), q_int(n + k + 1)))


def a_qfib_closed_difference(n: int, k: int) -> Poly:
    """The same entry as ``q^-n ([2n+k, n] - [2n+k, n-1])``."""
    diff = q_binom(2 * n + k, n) - q_binom(2 * n + k, n - 1)
    return diff.div_monomial((n, 0, 0))


def a_qfib_entry(row: int, col: int) -> Poly:
    if not 0 <= col <= row or (row - col) % 2:
        return ZERO
    return a_qfib_closed((row - col) // 2, col)


def _q_inv(k: int) -> RatFunc:
    return RatFunc(ONE, q_pow(k))


def _tq(a: int, b: int) -> Poly:
    return Poly.monomial(1, eq=a, et=b)


def _fibtq_sum(n: int, k: int, odd: bool) -> RatFunc:
    total = ZERO
    for j in range(n - k + 1):
        if odd:
            c = q_binom(n, j) * q_binom(n + 1, j + k + 1) - q_binom(n + 1, j) * q_binom(n, j + k + 1)
        else:
            c = q_binom(n - 1, j) * q_binom(n + 1, j + k + 1) - q_binom(n, j) * q_binom(n, j + k + 1)
        if c:
            total = total + c * _tq(j * j + (k + 1) * j, j)
    return RatFunc(total, q_pow(n - k))


def a_fibtq_closed(row: int, col: int) -> RatFunc:
    """Closed form of ``a(row, col, t, q)`` in ``x^row = sum a(row, col) F_col(x, t, q)``."""
    if not 0 <= col <= row or (row - col) % 2:
        return RatFunc(ZERO)
    if row % 2:
        return _fibtq_sum((row - 1) // 2, (col - 1) // 2, odd=True)
    return _fibtq_sum(row // 2, col // 2, odd=False)


def _D(n: int, k: int) -> Poly:
    total = ZERO
    for j in range(n - k + 1):
        total = total + (q_binom(n, j) * q_binom(n, k + j)).mul_term((j * (j + k), j, 0), 1)
    return total


def _E(n: int, k: int) -> RatFunc:
    total = ZERO
    for j in range(n - k + 1):
        c = q_binom(n, k + j) * q_binom(n + 1, j)
        if c:
            total = total + c * (_tq(j * (j + k), j) + _tq((n + 1 - j) * (n - j - k), n + 1 - j))
    return RatFunc(total, 1 + Poly.monomial(1, et=k + 1))


@lru_cache(maxsize=None)
def table_ABDE(kind: str, n: int, k: int) -> RatFunc:
    """Entries of the A, B, D, E tables by literal evaluation of their sums."""
    if not 0 <= k <= n:
        raise ValueError(f"table_ABDE needs 0 <= k <= n, got ({n}, {k})")
    if kind == "A":
        return _fibtq_sum(n, k, odd=False)
    if kind == "B":
        return _fibtq_sum(n, k, odd=True)
    if kind == "D":
        return RatFunc(_D(n, k))
    if kind == "E":
        return _E(n, k)
    raise ValueError(f"kind must be one of A, B, D, E, not {kind!r}")


def B_alternative(n: int, k: int) -> RatFunc:
    """``[k+1]/[n+1] sum_j q^(j^2+kj) [n+1, j] [n+1, k+j+1] t^j``."""
    total = ZERO
    for j in range(n - k + 1):
        total = total + (q_binom(n + 1, j) * q_binom(n + 1, k + j + 1)).mul_term((j * j + k * j, j, 0), 1)
    return RatFunc(q_int(k + 1) * total, q_int(n + 1))


TABLES = ("a_orth", "a_qfib", "a_fibtq", "A", "B", "D", "E")


def closed_table(name: str, N: int) -> TriangularTable:
    """Build one of the named tables for rows ``0..N``."""
    if name == "a_orth":
        from .orthopoly import orthogonal_polys

        fam = orthogonal_polys(moment_sequence("qfib"), N)
        return expand_in_family(fam, N, name="a_orth")
    table = TriangularTable(name, N)
    for n in range(N + 1):
        for k in range(n + 1):
            if name == "a_qfib":
                v = RatFunc(a_qfib_entry(n, k))
            elif name == "a_fibtq":
                v = a_fibtq_closed(n, k)
            elif name in ("A", "B", "D", "E"):
                v = table_ABDE(name, n, k)
            else:
                raise KeyError(f"unknown table {name!r}; valid names: {', '.join(TABLES)}")
            table.entries[(n, k)] = v
    return table


# -- moment sequences ---------------------------------------------------------


def _narayana(n: int) -> Poly:
    if n == 0:
        return ONE
    return Poly({(0, k, 0): Fraction(comb(n, k) * comb(n, k + 1), n) for k in range(n)})


def _q_narayana(n: int) -> Poly:
    if n == 0:
        return ONE
    total = ZERO
    for j in range(n):
        total = total + (q_binom(n, j) * q_binom(n, j + 1)).mul_term((j * j + j, j, 0), 1)
    return as_poly(RatFunc(total, q_int(n)))


def _q_catalan(n: int) -> Poly:
    return as_poly(RatFunc(q_binom(2 * n, n), q_int(n + 1)))


def _typeB(n: int) -> Poly:
    total = ZERO
    for j in range(n + 1):
        b = q_binom(n, j)
        total = total + (b * b).mul_term((j * j, j, 0), 1)
    return total


def _L1(n: int) -> Poly:
    return as_poly(RatFunc((1 + q) * _q_catalan(n + 1), 1 + q_pow(n + 1)))


def _M1(n: int) -> RatFunc:
    shifted = substitute(_typeB(n + 1), "t", RatFunc(t, q))
    return shifted / (1 + t)


def _q_narayana_shift(n: int) -> Poly:
    return as_poly(substitute(_q_narayana(n + 1), "t", RatFunc(t, q)))


MOMENT_KINDS: dict[str, Callable[[int], object]] = {
    "narayana": _narayana,
    "q_narayana": _q_narayana,
    "q_catalan": _q_catalan,
    "central_qbinom": lambda n: q_binom(2 * n, n),
    "central_qbinom_odd": lambda n: q_binom(2 * n + 1, n),
    "typeB_M": _typeB,
    "L1_odd": _L1,
    "M1_odd": _M1,
    "q_narayana_shift": _q_narayana_shift,
}


@lru_cache(maxsize=None)
def moment(kind: str, n: int) -> RatFunc:
    """Value ``n`` of a named moment sequence, as a rational function."""
    if n < 0:
        raise ValueError("moment index must be >= 0")
    try:
        f = MOMENT_KINDS[kind]
    except KeyError:
        raise KeyError(f"unknown moment {kind!r}; valid names: {', '.join(MOMENT_KINDS)}") from None
    return RatFunc.coerce(f(n))


@dataclass(frozen=True)
class MomentSequence:
    """Moments ``L(x^n)`` of a linear functional.

    With ``interleaved`` set, ``L(x^(2n)) = values(n)`` and odd moments are 0.
    """

    name: str
    values: Callable[[int], RatFunc] = field(compare=False)
    interleaved: bool = False

    def __call__(self, n: int) -> RatFunc:
        if self.interleaved:
            return RatFunc(ZERO) if n % 2 else self.values(n // 2)
        return self.values(n)

    @classmethod
    def named(cls, kind: str, interleaved: bool = False) -> "MomentSequence":
        return cls(kind, lambda n: moment(kind, n), interleaved)

    @classmethod
    def from_list(cls, name: str, values) -> "MomentSequence":
        vals = [RatFunc.coerce(v) for v in values]

        def get(n):
            if n >= len(vals):
                raise IndexError(f"moment {n} of {name} not supplied")
            return vals[n]

        return cls(name, get)


# functional (family name -> the moment sequence that annihilates it)
FAMILY_MOMENTS: dict[str, tuple[str, bool]] = {
    "fib_t": ("narayana", True),
    "qfib": ("q_catalan", True),
    "qlucas": ("central_qbinom", True),
    "P": ("q_catalan", False),
    "Q": ("L1_odd", False),
    "R": ("central_qbinom", False),
    "S": ("central_qbinom_odd", False),
    "fib_tq": ("q_narayana", True),
    "lucas_tq": ("typeB_M", True),
    "P_tq": ("q_narayana", False),
    "Q_tq": ("q_narayana_shift", False),
    "R_tq": ("typeB_M", False),
    "S_tq": ("M1_odd", False),
}


def moment_sequence(family: str) -> MomentSequence:
    kind, inter = FAMILY_MOMENTS[family]
    return MomentSequence(f"{kind}{'~' if inter else ''}", lambda n: moment(kind, n), inter)


# -- recurrence checks on the D table -----------------------------------------


def _D_at_qt(n: int, k: int) -> Poly:
    if k < 0 or k > n:
        return ZERO
    return _D(n, k).twist(1)


def catalan_stieltjes_check(N: int, mutate: bool = False) -> VerificationReport:
    """Check the two row recurrences of the D table for ``1 <= n <= N``.

    ``mutate`` drops the ``q^(n+2k+1)`` factor of the last term, as a
    negative control that must fail.
    """
    chk = Checker("eq3.43-3.44" + ("-mutated" if mutate else ""), f"1<=n<={N}, 0<=k<=n")
    for n in range(1, N + 1):
        rhs = (1 + _tq(n, 1)) * _D_at_qt(n - 1, 0) + (1 + q_pow(n)) * _tq(1, 1) * _D_at_qt(n - 1, 1)
        chk.check({"n": n, "k": 0}, _D(n, 0), rhs)
        for k in range(1, n + 1):
            last = _tq(0 if mutate else n + 2 * k + 1, 1) * _D_at_qt(n - 1, k + 1)
            rhs = _D_at_qt(n - 1, k - 1) + q_pow(k) * (1 + _tq(n, 1)) * _D_at_qt(n - 1, k) + last
            chk.check({"n": n, "k": k}, _D(n, k), rhs)
    return chk.done()


def b_d_relation_check(N: int, mutate: bool = False) -> VerificationReport:
    """B = D - q^(2k+2) t D shifted, plus the termwise binomial identity behind it.

    ``mutate`` uses ``q^(2k+1)`` in place of ``q^(2k+2)``.
    """
    chk = Checker("eq3.31" + ("-mutated" if mutate else ""), f"0<=k<=n<={N}")
    for n in range(N + 1):
        for k in range(n + 1):
            shift = 2 * k + (1 if mutate else 2)
            d2 = _D(n, k + 2) if k + 2 <= n else ZERO
            rhs = _D(n, k) - d2.mul_term((shift, 1, 0), 1)
            chk.check({"n": n, "k": k}, table_ABDE("B", n, k), rhs)
            for j in range(n - k + 1):
                lhs = RatFunc(q_int(k + 1) * q_binom(n + 1, j) * q_binom(n + 1, k + j + 1), q_int(n + 1))
                rhs = q_binom(n, j) * q_binom(n, k + j) - (
                    q_binom(n, j - 1) * q_binom(n, k + j + 1)
                ).mul_term((k + 1, 0, 0), 1)
                chk.check({"n": n, "k": k, "j": j}, lhs, rhs)
    return chk.done()
