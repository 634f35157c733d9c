"""Monic orthogonal polynomials of a moment sequence, by exact Gram-Schmidt."""

from __future__ import annotations

from .exactalg import ONE, ZERO, Poly, RatFunc, det_exact, x
from .moments import MomentSequence, x_coefficients

__all__ = [
    "SingularMomentsError",
    "hankel_matrix",
    "hankel_det",
    "functional_apply",
    "orthogonal_polys",
    "orthogonal_polys_hankel",
]


class SingularMomentsError(ArithmeticError):
    """A Hankel determinant of the moment sequence vanishes."""

    def __init__(self, index: int):
        super().__init__(f"Hankel determinant of order {index} vanishes; no orthogonal p_{index + 1}")
        self.index = index


def hankel_matrix(m: MomentSequence, n: int) -> list[list[RatFunc]]:
    """``(m(i+j))`` for ``0 <= i, j <= n``."""
    vals = [m(k) for k in range(2 * n + 1)]
    return [[vals[i + j] for j in range(n + 1)] for i in range(n + 1)]


def hankel_det(m: MomentSequence, n: int) -> RatFunc:
    if n < 0:
        raise ValueError("hankel_det needs n >= 0")
    return det_exact(hankel_matrix(m, n))


def functional_apply(m: MomentSequence, p) -> RatFunc:
    """``L(p) = sum_k [x^k]p * m(k)``."""
    total = RatFunc(ZERO)
    for k, c in x_coefficients(p).items():
        mk = m(k)
        if mk:
            total = total + mk * c
    return total


def _as_member(p) -> RatFunc:
    return RatFunc.coerce(p)


def orthogonal_polys(m: MomentSequence, N: int) -> list[RatFunc]:
    """Monic ``p_0..p_N`` with ``L(p_n p_m) = 0`` for ``n != m``.

    Members are polynomials in x whose coefficients are rational functions
    of the remaining variables.  Raises :class:`SingularMomentsError` when
    some ``L(p_k^2)`` vanishes.
    """
    basis: list[RatFunc] = []
    norms: list[RatFunc] = []
    for n in range(N + 1):
        p = RatFunc(Poly.monomial(1, ex=n))
        xn = p
        for k in range(n):
            proj = functional_apply(m, xn * basis[k])
            if proj:
                p = p - basis[k] * (proj / norms[k])
        norm = functional_apply(m, p * p)
        if not norm and n < N:
            raise SingularMomentsError(n)
        basis.append(p)
        norms.append(norm)
    return basis


def orthogonal_polys_hankel(m: MomentSequence, N: int) -> list[RatFunc]:
    """The same polynomials from the determinant formula.

    ``p_n(x) = det(H_n with last row replaced by 1, x, ..., x^n) / det(H_{n-1})``.
    """
    out = [RatFunc(ONE)]
    for n in range(1, N + 1):
        vals = [m(k) for k in range(2 * n)]
        rows = [[vals[i + j] for j in range(n + 1)] for i in range(n)]
        rows.append([RatFunc(Poly.monomial(1, ex=j)) for j in range(n + 1)])
        prev = hankel_det(m, n - 1)
        if not prev:
            raise SingularMomentsError(n - 1)
        out.append(det_exact(rows) / prev)
    return out
