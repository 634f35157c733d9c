"""q-integers, Gaussian binomials and the Carlitz summation identities."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .exactalg import ONE, ZERO, Poly, as_poly

__all__ = [
    "q_int",
    "q_factorial",
    "q_pochhammer",
    "q_binom",
    "q_binom_product",
    "q_pow",
    "carlitz_c",
    "vandermonde_sums",
    "carlitz_inversion",
    "catalan_weight",
]


def q_pow(k: int) -> Poly:
    if k < 0:
        raise ValueError(f"negative power q^{k} is not a polynomial")
    return Poly.monomial(1, eq=k)


@lru_cache(maxsize=None)
def q_int(n: int) -> Poly:
    """``[n] = 1 + q + ... + q^(n-1)``; ``[0] = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return Poly({(k, 0, 0): 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Poly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return ONE if n == 0 else q_factorial(n - 1) * q_int(n)


def q_pochhammer(n: int) -> Poly:
    """``(q; q)_n = (1-q)(1-q^2)...(1-q^n)``."""
    out = ONE
    for k in range(1, n + 1):
        out = out * (1 - q_pow(k))
    return out


@lru_cache(maxsize=None)
def _pascal(n: int, k: int) -> Poly:
    if k == 0 or k == n:
        return ONE
    return _pascal(n - 1, k - 1) + _pascal(n - 1, k).mul_term((k, 0, 0), 1)


def q_binom(n: int, k: int) -> Poly:
    """Gaussian binomial ``[n, k]`` from the q-Pascal rule.

    Out-of-range ``k`` gives 0 and ``k == 0`` gives 1 for every ``n`` (the
    empty product, needed where formulas produce a top entry of -1).  A
    negative top with ``k > 0`` is not supported.
    """
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if n < 0:
        raise ValueError(f"q_binom({n}, {k}): negative top entry is not supported")
    if k > n:
        return ZERO
    # lru_cache keeps the shared table consistent under concurrent lookup
    return _pascal(n, min(k, n - k))


def q_binom_product(n: int, k: int) -> Poly:
    """``(q;q)_n / ((q;q)_k (q;q)_{n-k})`` by exact division."""
    if k < 0 or k > n:
        return ZERO
    return q_pochhammer(n).exquo(q_pochhammer(k) * q_pochhammer(n - k))


def carlitz_c(n: int, k: int) -> Poly:
    """Alternating sum of products of Gaussian binomials that equals 1 for 0 <= k <= n."""
    if not 0 <= k <= n:
        raise ValueError("carlitz_c needs 0 <= k <= n")
    total = ZERO
    for j in range(min(k, n - k) + 1):
        term = q_binom(k, j) * q_binom(n - j, k) * q_pow(j * (j + 1) // 2)
        total = total - term if j % 2 else total + term
    return total


def vandermonde_sums(n: int, k: int) -> tuple[Poly, Poly]:
    """The two q-Vandermonde-type sums whose values are ``[2n-k, k]`` and ``[2n+1-k, k]``."""
    if not 0 <= k <= n:
        raise ValueError("vandermonde_sums needs 0 <= k <= n")
    first = ZERO
    second = ZERO
    for j in range(k + 1):
        w = q_binom(n - j, k - j) * q_pow((n - k + 1) * j)
        first = first + w * q_binom(n - k + j - 1, j)
        second = second + w * q_binom(n - k + j, j)
    return first, second


def catalan_weight(n: int, k: int) -> Poly:
    """``q^-k ([n, k] - [n, k-1])``, a polynomial for ``0 <= k <= n/2``."""
    diff = q_binom(n, k) - q_binom(n, k - 1)
    return diff.div_monomial((k, 0, 0))


def carlitz_inversion(u: Sequence, direction: str = "forward") -> list:
    """Apply the Carlitz inversion pair to a finite sequence indexed from 0.

    ``forward`` maps v to u with ``u(n) = sum_k q^-k ([n,k]-[n,k-1]) v(n-2k)``;
    ``backward`` maps u to v with
    ``v(n) = sum_j (-1)^j q^C(j,2) [n-j, j] u(n-2j)``.
    """
    seq = [as_poly(s) if not isinstance(s, Poly) else s for s in u]
    out = []
    if direction == "forward":
        for n in range(len(seq)):
            acc = ZERO
            for k in range(n // 2 + 1):
                acc = acc + catalan_weight(n, k) * seq[n - 2 * k]
            out.append(acc)
    elif direction == "backward":
        for n in range(len(seq)):
            acc = ZERO
            for j in range(n // 2 + 1):
                term = q_pow(j * (j - 1) // 2) * q_binom(n - j, j) * seq[n - 2 * j]
                acc = acc - term if j % 2 else acc + term
            out.append(acc)
    else:
        raise ValueError(f"direction must be 'forward' or 'backward', not {direction!r}")
    return out
