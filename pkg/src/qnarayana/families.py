"""Fibonacci- and Lucas-type polynomial families and their even/odd parts.

Every family that has both a recurrence and a closed form exposes both;
:data:`FAMILIES` addresses the canonical construction of each by name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable

from .exactalg import ONE, ZERO, Poly, RatFunc, as_poly, q, substitute, t, x
from .qcore import q_binom, q_int, q_pow

__all__ = [
    "PolyFamily",
    "FAMILIES",
    "get_family",
    "binom",
    "fib",
    "fib_t",
    "fib_t_recurrence",
    "qfib",
    "qlucas",
    "lucas_classical",
    "pqrs",
    "even_part",
    "odd_part",
    "tau_fib",
    "tau_lucas",
    "tau_lucas_q1",
    "fib_tq",
    "fib_tq_closed",
    "lucas_tq",
    "lucas_t",
    "pqrs_tq",
    "R_tq_closed",
    "R_tq_expanded",
]


def binom(n: int, k: int) -> int:
    """Ordinary binomial with ``C(n, 0) = 1`` for every ``n`` and 0 out of range."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        raise ValueError(f"binom({n}, {k}): negative top entry is not supported")
    return comb(n, k)


def _x(k: int) -> Poly:
    return Poly.monomial(1, ex=k)


def _t(k: int) -> Poly:
    return Poly.monomial(1, et=k)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class PolyFamily:
    """A named sequence ``n -> monic polynomial of degree n`` in x.

    Members are :class:`Poly` or, for families whose x-coefficients are
    rational in t, :class:`RatFunc` with a denominator free of x.
    """

    name: str
    variables: frozenset
    parity: str  # "alternating" or "none"
    generator: Callable[[int], "Poly | RatFunc"] = field(repr=False, compare=False)
    description: str = ""

    def __call__(self, n: int):
        if n < 0:
            return ZERO
        return self.generator(n)

    def members(self, N: int) -> list[Poly]:
        return [self(n) for n in range(N + 1)]


# -- classical and t-families ------------------------------------------------


@lru_cache(maxsize=None)
def fib(n: int) -> Poly:
    if n < 0:
        return ZERO
    out = ZERO
    for k in range(n // 2 + 1):
        out = out + Poly.monomial(_sign(k) * binom(n - k, k), ex=n - 2 * k)
    return out


@lru_cache(maxsize=None)
def fib_t(n: int) -> Poly:
    """Generalized Fibonacci polynomials F_n(x, t), closed form."""
    if n < 0:
        return ZERO
    h, g = n // 2, (n - 1) // 2
    out = ZERO
    for k in range(h + 1):
        for j in range(k + 1):
            c = binom(h - j, k - j) * binom(g - k + j, j)
            if c:
                out = out + Poly.monomial(_sign(k) * c, et=j, ex=n - 2 * k)
    return out


@lru_cache(maxsize=None)
def fib_t_recurrence(n: int) -> Poly:
    if n < 0:
        return ZERO
    if n < 2:
        return _x(n)
    prev = fib_t_recurrence(n - 2)
    step = prev if n % 2 == 0 else t * prev
    return x * fib_t_recurrence(n - 1) - step


# -- q-families ---------------------------------------------------------------


@lru_cache(maxsize=None)
def qfib(n: int) -> Poly:
    """q-Fibonacci polynomials F_n(x, q)."""
    if n < 0:
        return ZERO
    out = ZERO
    for j in range(n // 2 + 1):
        c = q_binom(n - j, j).mul_term((j * (j - 1) // 2, 0, n - 2 * j), _sign(j))
        out = out + c
    return out


@lru_cache(maxsize=None)
def qlucas(n: int) -> Poly:
    """q-Lucas polynomials L_n(x, q); the [n]/[n-k] ratios are cleared exactly."""
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    out = ZERO
    for k in range(n // 2 + 1):
        ratio = as_poly(RatFunc(q_int(n) * q_binom(n - k, k), q_int(n - k)))
        out = out + ratio.mul_term((k * (k - 1) // 2, 0, n - 2 * k), _sign(k))
    return out


def lucas_classical(n: int) -> Poly:
    """Classical Lucas polynomials (``L_0 = 2``) from the three-term recurrence."""
    a, b = Poly.const(2), x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, x * b - a
    return b


def _parity_part(p, rem: int):
    if isinstance(p, RatFunc):
        if "x" in p.den.variables():
            raise ValueError("parity extraction needs a denominator free of x")
        return RatFunc(_parity_part(p.num, rem), p.den)
    return Poly({(m[0], m[1], m[2] // 2): c for m, c in p.terms.items() if m[2] % 2 == rem})


def even_part(p):
    """``sum_k [x^(2k)] p * x^k``."""
    return _parity_part(p, 0)


def odd_part(p):
    """``sum_k [x^(2k+1)] p * x^k``."""
    return _parity_part(p, 1)


@lru_cache(maxsize=None)
def pqrs(kind: str, n: int) -> Poly:
    """P_n, Q_n, R_n, S_n in (x, q) from their closed-form sums."""
    if n < 0:
        return ZERO
    if kind == "R" and n == 0:
        return ONE
    out = ZERO
    for k in range(n + 1):
        sign = _sign(n - k)
        qexp = (n - k) * (n - k - 1) // 2
        if kind == "P":
            c = q_binom(n + k, 2 * k)
        elif kind == "Q":
            c = q_binom(n + k + 1, 2 * k + 1)
        elif kind == "R":
            c = as_poly(RatFunc(q_int(2 * n) * q_binom(n + k, 2 * k), q_int(n + k)))
        elif kind == "S":
            c = as_poly(RatFunc(q_int(2 * n + 1) * q_binom(n + k + 1, 2 * k + 1), q_int(n + k + 1)))
        else:
            raise ValueError(f"kind must be one of P, Q, R, S, not {kind!r}")
        out = out + c.mul_term((qexp, 0, k), sign)
    return out


# -- (t, q)-families ----------------------------------------------------------


def tau_fib(k: int) -> Poly:
    """Coefficient sequence of the F_n(x, t, q) recurrence: 1 at even, t at odd index."""
    return ONE if k % 2 == 0 else t


def tau_lucas(k: int) -> RatFunc:
    """Coefficient sequence of the L_n(x, t, q) recurrence."""
    if k == 0:
        return RatFunc(1 + q * t)
    n = k // 2
    if k % 2 == 0:
        qt_n = Poly.monomial(1, eq=n, et=n)
        return RatFunc(q_pow(n) * (1 + Poly.monomial(1, eq=n + 1, et=n + 1)), 1 + qt_n)
    return RatFunc(Poly.monomial(1, eq=n + 1, et=1) * (1 + _t(n)), 1 + _t(n + 1))


def tau_lucas_q1(k: int) -> RatFunc:
    """The same coefficients at q = 1, used by the type-B recurrence L_n(x, t)."""
    if k == 0:
        return RatFunc(1 + t)
    n = k // 2
    if k % 2 == 0:
        return RatFunc(1 + _t(n + 1), 1 + _t(n))
    return RatFunc(t * (1 + _t(n)), 1 + _t(n + 1))


@lru_cache(maxsize=None)
def fib_tq(n: int) -> Poly:
    """F_n(x, t, q) from the twisted three-term recurrence."""
    if n < 0:
        return ZERO
    if n < 2:
        return _x(n)
    shifted = fib_tq(n - 1).twist(1)
    return x * shifted - q_pow((n - 1) // 2) * tau_fib(n - 2) * fib_tq(n - 2)


@lru_cache(maxsize=None)
def fib_tq_closed(n: int) -> Poly:
    """F_n(x, t, q) from the explicit double sum."""
    if n < 0:
        return ZERO
    m, odd = divmod(n, 2)
    out = ZERO
    for k in range(m + 1):
        inner = ZERO
        for j in range(k + 1):
            lower = m - k + j if odd else m - k + j - 1
            c = q_binom(m - j, k - j) * q_binom(lower, j)
            if c:
                inner = inner + c.mul_term(((m - k + 1) * j, j, 0), 1)
        out = out + inner.mul_term((k * (k - 1) // 2, 0, n - 2 * k), _sign(k))
    return out


def _clear_even(n: int, f: RatFunc) -> RatFunc:
    if n % 2 == 0 and not f.is_poly():
        raise ArithmeticError(f"even-index member {n} did not clear to a polynomial: {f}")
    return f


@lru_cache(maxsize=None)
def lucas_tq(n: int) -> RatFunc:
    """L_n(x, t, q) from its twisted recurrence.

    Members are polynomials in x whose coefficients are rational in t and q.
    Even-index members are polynomials outright (checked); odd-index ones
    carry denominators such as ``1 + t``.
    """
    if n < 0:
        return RatFunc(ZERO)
    if n < 2:
        return RatFunc(_x(n))
    shifted = lucas_tq(n - 1).twist(1) * x
    return _clear_even(n, shifted - tau_lucas(n - 2) * lucas_tq(n - 2))


@lru_cache(maxsize=None)
def lucas_t(n: int) -> RatFunc:
    """Type-B polynomials L_n(x, t) (the q = 1 case), rational in t like :func:`lucas_tq`."""
    if n < 0:
        return RatFunc(ZERO)
    if n < 2:
        return RatFunc(_x(n))
    return _clear_even(n, lucas_t(n - 1) * x - tau_lucas_q1(n - 2) * lucas_t(n - 2))


def _P_tq(n: int) -> Poly:
    out = ZERO
    for k in range(n + 1):
        inner = ZERO
        for j in range(n + 1):
            c = q_binom(n - j, k) * q_binom(k + j - 1, j)
            if c:
                inner = inner + c.mul_term((j * (k + 1), j, 0), 1)
        out = out + inner.mul_term(((n - k) * (n - k - 1) // 2, 0, k), _sign(n - k))
    return out


def _Q_tq(n: int) -> Poly:
    out = ZERO
    for k in range(n + 1):
        inner = ZERO
        for j in range(k + 1):
            c = q_binom(n - j, k - j) * q_binom(n - k + j, j)
            if c:
                inner = inner + c.mul_term(((n - k + 1) * j, j, 0), 1)
        out = out + inner.mul_term((k * (k - 1) // 2, 0, n - k), _sign(k))
    return out


def _R_tq_relation(n: int) -> Poly:
    if n < 2:
        return pqrs_tq("Q", n)
    return pqrs_tq("Q", n) - pqrs_tq("Q", n - 2).mul_term((2 * n - 2, 1, 0), 1)


def _r_coeff(n: int, k: int) -> RatFunc:
    """``c(n, k, t)``: a rational function of t and q in general."""
    if k == n:
        return RatFunc(1 + Poly.monomial(1, eq=n, et=n))
    acc = RatFunc(ZERO)
    for j in range(k + 1):
        num = q_binom(k, j) * q_binom(n + j - k - 1, j) * Poly.monomial(1, eq=(n + 1 - k) * j, et=j)
        acc = acc + RatFunc(num, q_binom(n - 1, j))
    return acc


@lru_cache(maxsize=None)
def R_tq_closed(n: int) -> Poly:
    """R_n(x, t, q) as a single sum with the binomial-ratio coefficients."""
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    out = ZERO
    for k in range(n + 1):
        # [n, k] c(n, k, t) is a polynomial even when c(n, k, t) is not
        c = as_poly(_r_coeff(n, k) * q_binom(n, k))
        out = out + c.mul_term((k * (k - 1) // 2, 0, n - k), _sign(k))
    return out


@lru_cache(maxsize=None)
def R_tq_expanded(n: int) -> Poly:
    """R_n(x, t, q) written with the constant term split off."""
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    out = (1 + Poly.monomial(1, eq=n, et=n)).mul_term((n * (n - 1) // 2, 0, 0), _sign(n))
    for ell in range(1, n + 1):
        acc = RatFunc(ZERO)
        for j in range(n - ell + 1):
            num = q_binom(n - ell, j) * q_binom(ell + j - 1, j) * Poly.monomial(1, eq=(ell + 1) * j, et=j)
            acc = acc + RatFunc(num, q_binom(n - 1, j))
        c = as_poly(acc * q_binom(n, ell))
        out = out + c.mul_term(((n - ell) * (n - ell - 1) // 2, 0, ell), _sign(n - ell))
    return out


def _S_tq(n: int) -> RatFunc:
    if n == 0:
        return RatFunc(ONE)
    t_over_q = RatFunc(t, q)
    r_next = substitute(pqrs_tq("R", n + 1), "t", t_over_q)
    r_here = substitute(pqrs_tq("R", n), "t", t_over_q)
    total = r_next * (1 + _t(n)) + r_here * (q_pow(n) * (1 + _t(n + 1)))
    # the x-division must be exact; the 1 + t^n division need not be
    if total.num.coeff_of("x", 0):
        raise ArithmeticError(f"S_{n}: numerator not divisible by x: {total}")
    return RatFunc(total.num.div_monomial((0, 0, 1)), total.den * (1 + _t(n)))


@lru_cache(maxsize=None)
def pqrs_tq(kind: str, n: int):
    """P, Q, R, S in (x, t, q): the even/odd x-parts of F_n(x,t,q) and L_n(x,t,q).

    P, Q and R are polynomials.  S is returned as a :class:`RatFunc`, since
    its x-coefficients are rational in t.
    """
    if n < 0:
        return RatFunc(ZERO) if kind == "S" else ZERO
    if kind == "P":
        return _P_tq(n)
    if kind == "Q":
        return _Q_tq(n)
    if kind == "R":
        return _R_tq_relation(n)
    if kind == "S":
        return _S_tq(n)
    raise ValueError(f"kind must be one of P, Q, R, S, not {kind!r}")


def _family(name, variables, parity, gen, description) -> PolyFamily:
    return PolyFamily(name, frozenset(variables), parity, gen, description)


FAMILIES: dict[str, PolyFamily] = {
    f.name: f
    for f in [
        _family("fib", "x", "alternating", fib, "Fibonacci polynomials F_n(x)"),
        _family("fib_t", "tx", "alternating", fib_t, "generalized Fibonacci F_n(x,t)"),
        _family("qfib", "qx", "alternating", qfib, "q-Fibonacci F_n(x,q)"),
        _family("qlucas", "qx", "alternating", qlucas, "q-Lucas L_n(x,q)"),
        _family("P", "qx", "none", lambda n: pqrs("P", n), "P_n(x,q) = F_2n(sqrt x,q)"),
        _family("Q", "qx", "none", lambda n: pqrs("Q", n), "Q_n(x,q) = F_2n+1(sqrt x,q)/sqrt x"),
        _family("R", "qx", "none", lambda n: pqrs("R", n), "R_n(x,q) = L_2n(sqrt x,q)"),
        _family("S", "qx", "none", lambda n: pqrs("S", n), "S_n(x,q) = L_2n+1(sqrt x,q)/sqrt x"),
        _family("fib_tq", "qtx", "alternating", fib_tq, "F_n(x,t,q)"),
        _family("lucas_t", "tx", "alternating", lucas_t, "type-B L_n(x,t)"),
        _family("lucas_tq", "qtx", "alternating", lucas_tq, "L_n(x,t,q)"),
        _family("P_tq", "qtx", "none", lambda n: pqrs_tq("P", n), "P_n(x,t,q)"),
        _family("Q_tq", "qtx", "none", lambda n: pqrs_tq("Q", n), "Q_n(x,t,q)"),
        _family("R_tq", "qtx", "none", lambda n: pqrs_tq("R", n), "R_n(x,t,q)"),
        _family("S_tq", "qtx", "none", lambda n: pqrs_tq("S", n), "S_n(x,t,q)"),
    ]
}


def get_family(name: str) -> PolyFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; valid names: {', '.join(FAMILIES)}") from None
