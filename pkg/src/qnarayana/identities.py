"""Registry of the proven identities, each checked exactly over a finite range.

Every entry maps an identity id (``eq2.7``, ``q-vandermonde`` ...) to a
checker ``f(N) -> VerificationReport``.  Ids starting with ``mut:`` are
deliberately broken variants used as negative controls; they are never part
of the default suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .exactalg import ONE, ZERO, Poly, RatFunc, as_poly, q, substitute, t, x
from .families import (
    even_part,
    fib,
    fib_t,
    fib_t_recurrence,
    fib_tq,
    fib_tq_closed,
    lucas_classical,
    lucas_t,
    lucas_tq,
    odd_part,
    pqrs,
    pqrs_tq,
    qfib,
    qlucas,
    R_tq_closed,
    R_tq_expanded,
    tau_fib,
    tau_lucas,
)
from .moments import (
    B_alternative,
    a_fibtq_closed,
    a_qfib_closed,
    a_qfib_closed_difference,
    a_qfib_entry,
    b_d_relation_check,
    catalan_stieltjes_check,
    expand_in_family,
    moment,
    moment_sequence,
    table_ABDE,
)
from .orthopoly import functional_apply, orthogonal_polys, orthogonal_polys_hankel
from .qcore import (
    carlitz_c,
    carlitz_inversion,
    catalan_weight,
    q_binom,
    q_int,
    q_pow,
    vandermonde_sums,
)
from .report import Checker, VerificationReport

__all__ = ["Identity", "IDENTITIES", "MUTANTS", "run_identity", "run_suite"]


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    default_N: int
    check: Callable[[int], VerificationReport]


def _xp(k: int) -> Poly:
    return Poly.monomial(1, ex=k)


def _tq(a: int, b: int) -> Poly:
    return Poly.monomial(1, eq=a, et=b)


def _at(f, var: str, value) -> RatFunc:
    return substitute(f, var, value)


T_OVER_Q = RatFunc(t, q)


# -- classical families and the orthogonal q-Catalan family ---------------------


def _eq1_1(N):
    chk = Checker("eq1.1", f"n<={N}")
    for n in range(2, N + 1):
        chk.check({"n": n}, fib(n), x * fib(n - 1) - fib(n - 2))
    for n in range(N + 1):
        chk.check({"n": n, "t": 1}, _at(fib_t(n), "t", 1), fib(n))
    return chk.done()


def _eq1_3(N):
    chk = Checker("eq1.3-1.4", f"n<={N}", note="moments of F_n(x) and F_n(x,t)")
    table = expand_in_family("fib_t", 2 * N)
    for n in range(2 * N + 1):
        expected = moment("narayana", n // 2) if n % 2 == 0 else ZERO
        chk.check({"n": n}, table[n, 0], expected)
    tab1 = expand_in_family("fib", 2 * N)
    for n in range(N + 1):
        chk.check({"n": 2 * n, "t": 1}, tab1[2 * n, 0], _at(moment("narayana", n), "t", 1))
        chk.check({"n": 2 * n, "catalan": True}, tab1[2 * n, 0], RatFunc(Poly.const(_catalan(n))))
    return chk.done()


def _catalan(n):
    from math import comb

    return comb(2 * n, n) // (n + 1)


def _eq1_5(N):
    chk = Checker("eq1.5-1.6", f"n<={N}")
    for n in range(N + 1):
        chk.check({"n": n}, fib_t(n), fib_t_recurrence(n))
    return chk.done()


def _a_closed_forms(N):
    chk = Checker("a-closed-forms", f"2n+k<={N}", note="both closed forms and the q=1 value")
    from math import comb

    for n in range(N // 2 + 1):
        for k in range(N - 2 * n + 1):
            a = a_qfib_closed(n, k)
            chk.check({"n": n, "k": k}, a, a_qfib_closed_difference(n, k))
            classical = comb(2 * n + k, n) - (comb(2 * n + k, n - 1) if n else 0)
            chk.check({"n": n, "k": k, "q": 1}, _at(a, "q", 1), RatFunc(Poly.const(classical)))
    return chk.done()


def _eq1_10(N):
    chk = Checker("eq1.10", f"0<=k<=n<={N}", note="x^n = sum a(n,k,q) F_k(x,q)")
    table = expand_in_family("qfib", N)
    for n in range(N + 1):
        for k in range(n + 1):
            chk.check({"n": n, "k": k}, table[n, k], a_qfib_entry(n, k))
    return chk.done()


def _orthogonal_q_catalan(N):
    chk = Checker("orthogonal-q-catalan", f"n<={N}", note="q-Catalan moments, t = 1")
    m = moment_sequence("qfib")
    ps = orthogonal_polys(m, N)
    hs = orthogonal_polys_hankel(m, min(N, 5))
    for n, h in enumerate(hs):
        chk.check({"n": n, "route": "hankel"}, ps[n], h)
    for n in range(N + 1):
        chk.check({"n": n, "L(p_n)": True}, functional_apply(m, ps[n]), RatFunc(ONE if n == 0 else ZERO))
        for k in range(n):
            chk.check({"n": n, "m": k}, functional_apply(m, ps[n] * ps[k]), ZERO)
        chk.require({"n": n}, bool(functional_apply(m, ps[n] * ps[n])), "L(p_n^2) vanished")
    return chk.done()


# -- q-Fibonacci, q-Lucas and P, Q, R, S -----------------------------------------


def _eq2_2(N):
    chk = Checker("eq2.2", f"n<={N}")
    for n in range(N + 1):
        s = ZERO
        for k in range(n // 2 + 1):
            s = s + catalan_weight(n, k) * qfib(n - 2 * k)
        chk.check({"n": n}, s, _xp(n))
    return chk.done()


def _eq2_3(N):
    chk = Checker("eq2.3", f"n<={N}")
    table = expand_in_family("qfib", 2 * N)
    for n in range(N + 1):
        c = moment("q_catalan", n)
        chk.check({"n": n}, table[2 * n, 0], c)
        chk.check({"n": n, "form": "difference"}, c, catalan_weight(2 * n, n))
        chk.check({"n": 2 * n + 1}, table[2 * n + 1, 0] if 2 * n + 1 <= 2 * N else ZERO, ZERO)
    return chk.done()


def _eq2_4(N):
    chk = Checker("eq2.4", f"1<=n<={N}", note="q-Lucas closed form at q=1 is the classical Lucas polynomial")
    for n in range(1, N + 1):
        chk.check({"n": n}, _at(qlucas(n), "q", 1), lucas_classical(n))
    return chk.done()


def _eq2_5(N, mutate=False):
    chk = Checker("eq2.5" + ("-mutated" if mutate else ""), f"n<={N}")
    for n in range(N + 1):
        s = ZERO
        for k in range(n // 2 + 1):
            s = s + q_binom(n, k) * qlucas(n - 2 * k)
        chk.check({"n": n}, s, _xp(n))
        for k in range(n + 1):
            lhs = q_binom(n, k) * q_pow(k) - q_binom(n, k - 1) * q_pow(n - k + 1)
            chk.check({"n": n, "k": k, "aux": True}, lhs, q_binom(n, k) - q_binom(n, k - 1))
    return chk.done()


def _eq2_6(N):
    chk = Checker("eq2.6", f"n<={N}")
    table = expand_in_family("qlucas", 2 * N)
    for n in range(2 * N + 1):
        expected = moment("central_qbinom", n // 2) if n % 2 == 0 else ZERO
        chk.check({"n": n}, table[n, 0], expected)
    return chk.done()


def _eq2_7(N, mutate=False):
    chk = Checker("eq2.7" + ("-mutated" if mutate else ""), f"2<=n<={N}")
    for n in range(2, N + 1):
        power = n if mutate else n - 1
        chk.check({"n": n}, qlucas(n), qfib(n) - q_pow(power) * qfib(n - 2))
    chk.check({"n": 0}, qlucas(0), qfib(0))
    chk.check({"n": 1}, qlucas(1), qfib(1))
    return chk.done()


def _eq2_8(N, mutate=False):
    chk = Checker("eq2.8" + ("-mutated" if mutate else ""), f"0<=k<=n<={N}")
    for n in range(N + 1):
        for k in range(n + 1):
            if mutate:
                val = ZERO
                for j in range(min(k, n - k) + 1):
                    term = q_binom(k, j) * q_binom(n - j, k) * q_pow(j * (j - 1) // 2)
                    val = val - term if j % 2 else val + term
            else:
                val = carlitz_c(n, k)
            chk.check({"n": n, "k": k}, val, ONE)
    return chk.done()


def _sample_sequence(L: int) -> list[Poly]:
    # deterministic, mixed-variable test sequence
    seq = []
    for n in range(L):
        seq.append((1 + n) * _xp(n) + Poly.monomial(n - 2, eq=n % 3, et=n % 2) + q_pow(n) * t)
    return seq


def _carlitz_inversion(N):
    chk = Checker("carlitz-inversion", f"length<={N}")
    for L in range(1, N + 1):
        v = _sample_sequence(L)
        chk.check({"length": L, "order": "backward.forward"},
                  _seq_poly(carlitz_inversion(carlitz_inversion(v, "forward"), "backward")), _seq_poly(v))
        chk.check({"length": L, "order": "forward.backward"},
                  _seq_poly(carlitz_inversion(carlitz_inversion(v, "backward"), "forward")), _seq_poly(v))
    u = carlitz_inversion([qfib(n) for n in range(N)], "forward")
    for n in range(N):
        chk.check({"n": n, "u": "x^n"}, u[n], _xp(n))
    return chk.done()


def _seq_poly(seq) -> Poly:
    # pack a sequence into one polynomial using powers of a spare exponent slot
    out = ZERO
    for i, p in enumerate(seq):
        out = out + p.mul_term((0, 0, 100 * i), 1)
    return out


def _eq2_9(N):
    chk = Checker("eq2.9", f"4<=n<={N}")
    for n in range(4, N + 1):
        rhs = x * qfib(n - 1) - q_pow(n - 2) * x * qfib(n - 3) + q_pow(n - 3) * qfib(n - 4)
        chk.check({"n": n}, qfib(n), rhs)
    return chk.done()


def _in_s(p: Poly) -> Poly:
    """Rewrite q as s^2, with s stored in the q slot."""
    return Poly({(m[0] * 2, m[1], m[2]): c for m, c in p.terms.items()})


def _eq2_10(N):
    chk = Checker("eq2.10", f"2<=n<={N}", note="checked after q = s^2, s in the q slot")
    for n in range(2, N + 1):
        prev2 = _in_s(qfib(n - 2))
        scaled = Poly({(m[0] + m[2], m[1], m[2]): c for m, c in prev2.terms.items()})  # x -> s x
        rhs = x * _in_s(qfib(n - 1)) - q_pow(n - 2) * scaled
        chk.check({"n": n}, _in_s(qfib(n)), rhs)
    return chk.done()


def _eq2_11_12(N):
    chk = Checker("eq2.11-2.12", f"n<={N}")
    for n in range(N + 1):
        chk.check({"n": n, "kind": "P"}, pqrs("P", n), even_part(qfib(2 * n)))
        chk.check({"n": n, "kind": "Q"}, pqrs("Q", n), odd_part(qfib(2 * n + 1)))
    return chk.done()


def _reconstruct(chk, members, coeff, N, tag):
    for n in range(N + 1):
        s = RatFunc(ZERO)
        for k in range(n + 1):
            c = coeff(n, k)
            if c:
                s = s + RatFunc.coerce(c) * members(k)
        chk.check({"n": n, "sum": tag}, s, _xp(n))


def _eq2_13_14(N):
    chk = Checker("eq2.13-2.14", f"n<={N}")

    def pc(n, k):
        return RatFunc(q_binom(2 * n, n - k) - q_binom(2 * n, n - k - 1), q_pow(n - k))

    def qc(n, k):
        return RatFunc(q_binom(2 * n + 1, n - k) - q_binom(2 * n + 1, n - k - 1), q_pow(n - k))

    _reconstruct(chk, lambda k: pqrs("P", k), pc, N, "P")
    _reconstruct(chk, lambda k: pqrs("Q", k), qc, N, "Q")
    return chk.done()


def _eq2_15_16(N):
    chk = Checker("eq2.15-2.16", f"n<={N}")
    tp = expand_in_family("P", N)
    tq = expand_in_family("Q", N)
    for n in range(N + 1):
        chk.check({"n": n, "functional": "L0"}, tp[n, 0], moment("q_catalan", n))
        expected = RatFunc((1 + q) * as_poly(moment("q_catalan", n + 1)), 1 + q_pow(n + 1))
        chk.check({"n": n, "functional": "L1"}, tq[n, 0], expected)
        chk.check({"n": n, "functional": "L1", "named": True}, tq[n, 0], moment("L1_odd", n))
    return chk.done()


def _eq2_17_18(N):
    chk = Checker("eq2.17-2.18", f"n<={N}")
    for n in range(N + 1):
        chk.check({"n": n, "kind": "R"}, pqrs("R", n), even_part(qlucas(2 * n)))
        chk.check({"n": n, "kind": "S"}, pqrs("S", n), odd_part(qlucas(2 * n + 1)))
    return chk.done()


def _eq2_19(N):
    chk = Checker("eq2.19", f"n<={N}")
    _reconstruct(chk, lambda k: pqrs("R", k), lambda n, k: q_binom(2 * n, n - k), N, "R")
    _reconstruct(chk, lambda k: pqrs("S", k), lambda n, k: q_binom(2 * n + 1, n - k), N, "S")
    return chk.done()


def _eq2_20(N):
    chk = Checker("eq2.20", f"n<={N}")
    tr = expand_in_family("R", N)
    ts = expand_in_family("S", N)
    for n in range(N + 1):
        chk.check({"n": n, "functional": "M0"}, tr[n, 0], q_binom(2 * n, n))
        chk.check({"n": n, "functional": "M1"}, ts[n, 0], q_binom(2 * n + 1, n))
    return chk.done()


def _eq2_21(N):
    chk = Checker("eq2.21", f"n<={N}")
    for n in range(N + 1):
        rhs = pqrs("Q", n) - (q_pow(2 * n - 2) * pqrs("Q", n - 2) if n >= 2 else ZERO)
        chk.check({"n": n}, pqrs("R", n), rhs)
    return chk.done()


# -- F_n(x,t,q), its table and the P, Q parts ------------------------------------


def _eq3_4_5(N):
    chk = Checker("eq3.4-3.5", f"n<={N}", note="recurrence equals the explicit double sum")
    for n in range(N + 1):
        chk.check({"n": n}, fib_tq(n), fib_tq_closed(n))
    return chk.done()


def _q_vandermonde(N):
    chk = Checker("q-vandermonde", f"0<=k<=n<={N}")
    for n in range(N + 1):
        for k in range(n + 1):
            a, b = vandermonde_sums(n, k)
            chk.check({"n": n, "k": k, "sum": 1}, a, q_binom(2 * n - k, k))
            chk.check({"n": n, "k": k, "sum": 2}, b, q_binom(2 * n + 1 - k, k))
    return chk.done()


def _eq3_6(N):
    chk = Checker("eq3.6", f"n<={2 * N}")
    table = expand_in_family("fib_tq", 2 * N)
    m = moment_sequence("fib_tq")
    for n in range(2 * N + 1):
        chk.check({"n": n}, table[n, 0], m(n))
    return chk.done()


def _eq3_8(N):
    chk = Checker("eq3.8", f"n<={N}", note="t = 1 gives F_n(x,q); q = 1 gives F_n(x,t)")
    for n in range(N + 1):
        chk.check({"n": n, "t": 1}, _at(fib_tq(n), "t", 1), qfib(n))
        chk.check({"n": n, "q": 1}, _at(fib_tq(n), "q", 1), fib_t(n))
    return chk.done()


def _eq3_9_11(N):
    chk = Checker("eq3.9-3.11", f"0<=k<=n<={N}")
    table = expand_in_family("fib_tq", N)
    for n in range(N + 1):
        for k in range(n + 1):
            chk.check({"n": n, "k": k}, table[n, k], a_fibtq_closed(n, k))
    return chk.done()


def _eq3_10(N):
    chk = Checker("eq3.10", f"0<=k<=n<={N}")
    table = expand_in_family("fib_tq", N)
    for n in range(1, N + 1):
        for k in range(n + 1):
            rhs = table[n - 1, k - 1].twist(1) + table[n - 1, k + 1].twist(1) * (
                q_pow((k + 1) // 2) * tau_fib(k)
            )
            chk.check({"n": n, "k": k}, table[n, k], rhs)
    return chk.done()


def _eq3_12_13(N):
    chk = Checker("eq3.12-3.13", f"n<={N}")
    a = a_fibtq_closed
    for n in range(1, N + 1):
        for k in range(n + 1):
            rhs = a(2 * n - 1, 2 * k - 1).twist(1) + a(2 * n - 1, 2 * k + 1).twist(1) * q_pow(k)
            chk.check({"n": n, "k": k, "eq": "3.12"}, a(2 * n, 2 * k), rhs)
    for n in range(N + 1):
        for k in range(n + 1):
            rhs = a(2 * n, 2 * k).twist(1) + a(2 * n, 2 * k + 2).twist(1) * _tq(k + 1, 1)
            chk.check({"n": n, "k": k, "eq": "3.13"}, a(2 * n + 1, 2 * k + 1), rhs)
    return chk.done()


def _eq3_14_15(N):
    chk = Checker("eq3.14-3.15", f"n<={N}", note="plus the q=1 and t=1/q specializations of C_n(t,q)")
    for n in range(N + 1):
        c = moment("q_narayana", n)
        chk.check({"n": n, "eq": "3.14"}, a_fibtq_closed(2 * n, 0), c)
        chk.check({"n": n, "eq": "3.15"}, _at(c, "t", 1), moment("q_catalan", n))
        chk.check({"n": n, "q": 1}, _at(c, "q", 1), moment("narayana", n))
        if n >= 1:
            lhs = _at(c, "t", RatFunc(ONE, q))
            rhs = RatFunc((1 + q) * as_poly(moment("q_catalan", n)), 1 + q_pow(n))
            chk.check({"n": n, "t": "1/q"}, lhs, rhs)
    return chk.done()


def _eq3_16(N):
    chk = Checker("eq3.16", f"n<={N}")
    for n in range(N + 1):
        chk.check({"n": n}, pqrs_tq("Q", n), odd_part(fib_tq(2 * n + 1)))
        chk.check({"n": n, "t": 1}, _at(pqrs_tq("Q", n), "t", 1), pqrs("Q", n))
    return chk.done()


def _eq3_17_19(N):
    chk = Checker("eq3.17-3.19", f"0<=k<=n<={N}")
    table = expand_in_family("Q_tq", N)
    for n in range(N + 1):
        for k in range(n + 1):
            b = table_ABDE("B", n, k)
            chk.check({"n": n, "k": k, "eq": "3.17"}, table[n, k], b)
            chk.check({"n": n, "k": k, "form": "alternative"}, b, B_alternative(n, k))
            t1 = RatFunc(q_binom(2 * n + 1, n - k) - q_binom(2 * n + 1, n - k - 1), q_pow(n - k))
            chk.check({"n": n, "k": k, "t": 1}, _at(b, "t", 1), t1)
        middle = ZERO
        for j in range(n + 1):
            middle = middle + (q_binom(n + 1, j) * q_binom(n + 1, j + 1)).mul_term((j * j, j, 0), 1)
        b0 = table_ABDE("B", n, 0)
        chk.check({"n": n, "eq": "3.19", "form": "sum"}, b0, RatFunc(middle, q_int(n + 1)))
        chk.check({"n": n, "eq": "3.19"}, b0, _at(moment("q_narayana", n + 1), "t", T_OVER_Q))
    _reconstruct(chk, lambda k: pqrs_tq("Q", k), lambda n, k: table_ABDE("B", n, k), N, "3.18")
    return chk.done()


def _eq3_20(N):
    chk = Checker("eq3.20", f"n<={N}")
    for n in range(N + 1):
        chk.check({"n": n}, pqrs_tq("P", n), even_part(fib_tq(2 * n)))
        chk.check({"n": n, "t": 1}, _at(pqrs_tq("P", n), "t", 1), pqrs("P", n))
    return chk.done()


def _eq3_21_23(N):
    chk = Checker("eq3.21-3.23", f"0<=k<=n<={N}")
    table = expand_in_family("P_tq", N)
    for n in range(N + 1):
        for k in range(n + 1):
            chk.check({"n": n, "k": k, "eq": "3.21"}, table[n, k], table_ABDE("A", n, k))
        chk.check({"n": n, "eq": "3.23"}, table_ABDE("A", n, 0), moment("q_narayana", n))
    _reconstruct(chk, lambda k: pqrs_tq("P", k), lambda n, k: table_ABDE("A", n, k), N, "3.22")
    return chk.done()


# -- L_n(x,t,q), its table and the R, S parts ------------------------------------


def _eq3_24(N):
    chk = Checker("eq3.24", f"n<={2 * N}", note="type-B L_n(x,t): moments M_n(t)")
    table = expand_in_family("lucas_t", 2 * N)
    for n in range(2 * N + 1):
        expected = _at(moment("typeB_M", n // 2), "q", 1) if n % 2 == 0 else ZERO
        chk.check({"n": n}, table[n, 0], expected)
    return chk.done()


def _eq3_26_27(N):
    chk = Checker("eq3.26-3.27", f"n<={2 * N}", note="includes the t=1 and q=1 reductions")
    table = expand_in_family("lucas_tq", 2 * N)
    m = moment_sequence("lucas_tq")
    for n in range(2 * N + 1):
        chk.check({"n": n, "eq": "3.27"}, table[n, 0], m(n))
        chk.check({"n": n, "t": 1}, _at(lucas_tq(n), "t", 1), qlucas(n))
        chk.check({"n": n, "q": 1}, _at(lucas_tq(n), "q", 1), lucas_t(n))
    return chk.done()


def _eq3_28_29(N):
    chk = Checker("eq3.28-3.29", f"0<=k<=n<={N}")
    table = expand_in_family("lucas_tq", N)
    for n in range(1, N + 1):
        for k in range(n + 1):
            rhs = table[n - 1, k - 1].twist(1) + table[n - 1, k + 1].twist(1) * tau_lucas(k)
            chk.check({"n": n, "k": k}, table[n, k], rhs)
    _reconstruct(chk, lucas_tq, lambda n, k: table[n, k], N, "3.29")
    return chk.done()


def _eq3_30(N):
    chk = Checker("eq3.30", f"2n+1<={N}", note="both forms of the odd entries; t=1 values")
    table = expand_in_family("lucas_tq", N)
    for n in range(N // 2 + 1):
        for k in range(n + 1):
            d = table_ABDE("D", n, k)
            chk.check({"row": 2 * n, "col": 2 * k}, table[2 * n, 2 * k], d)
            chk.check({"row": 2 * n, "col": 2 * k, "t": 1}, _at(d, "t", 1), q_binom(2 * n, n - k))
            if 2 * n + 1 > N:
                continue
            e = table_ABDE("E", n, k)
            chk.check({"row": 2 * n + 1, "col": 2 * k + 1}, table[2 * n + 1, 2 * k + 1], e)
            split = ZERO
            for j in range(n - k + 1):
                split = split + (q_binom(n, k + j) * q_binom(n + 1, j)).mul_term((j * (j + k), j, 0), 1)
            for j in range(k + 1, n + 2):
                split = split + (q_binom(n, j - k - 1) * q_binom(n + 1, j)).mul_term((j * (j - k - 1), j, 0), 1)
            chk.check({"row": 2 * n + 1, "col": 2 * k + 1, "form": "split"}, e,
                      RatFunc(split, 1 + Poly.monomial(1, et=k + 1)))
            chk.check({"row": 2 * n + 1, "col": 2 * k + 1, "t": 1}, _at(e, "t", 1), q_binom(2 * n + 1, n - k))
    return chk.done()


def _eq3_31(N):
    return b_d_relation_check(N)


def _eq3_32_35(N):
    chk = Checker("eq3.32-3.35", f"n<={N}", note="R_n(x,t,q): relation, single sum, split sum, even part of L_2n")
    for n in range(N + 1):
        r = pqrs_tq("R", n)
        chk.check({"n": n, "form": "3.33-3.34"}, r, R_tq_closed(n))
        chk.check({"n": n, "form": "3.35"}, r, R_tq_expanded(n))
        chk.check({"n": n, "form": "L_2n"}, r, even_part(lucas_tq(2 * n)))
        chk.check({"n": n, "t": 1}, _at(r, "t", 1), pqrs("R", n))
    return chk.done()


def _eq3_36_38(N):
    chk = Checker("eq3.36-3.38", f"0<=k<=n<={N}")
    table = expand_in_family("R_tq", N)
    for n in range(N + 1):
        for k in range(n + 1):
            chk.check({"n": n, "k": k, "eq": "3.36"}, table[n, k], table_ABDE("D", n, k))
        chk.check({"n": n, "eq": "3.38"}, table[n, 0], moment("typeB_M", n))
    _reconstruct(chk, lambda k: pqrs_tq("R", k), lambda n, k: table_ABDE("D", n, k), N, "3.37")
    return chk.done()


def _eq3_39(N):
    chk = Checker("eq3.39", f"n<={N}")
    for n in range(N + 1):
        s = pqrs_tq("S", n)
        chk.check({"n": n}, s, odd_part(lucas_tq(2 * n + 1)))
        chk.check({"n": n, "t": 1}, _at(s, "t", 1), pqrs("S", n))
    return chk.done()


def _eq3_40_42(N):
    chk = Checker("eq3.40-3.42", f"0<=k<=n<={N}")
    table = expand_in_family("S_tq", N)
    for n in range(N + 1):
        for k in range(n + 1):
            chk.check({"n": n, "k": k, "eq": "3.40"}, table[n, k], table_ABDE("E", n, k))
        e0 = table_ABDE("E", n, 0)
        direct = ZERO
        for j in range(n + 2):
            b = q_binom(n + 1, j)
            direct = direct + (b * b).mul_term((j * j - j, j, 0), 1)
        chk.check({"n": n, "eq": "3.42", "form": "sum"}, e0, RatFunc(direct, 1 + t))
        chk.check({"n": n, "eq": "3.42"}, e0, moment("M1_odd", n))
    _reconstruct(chk, lambda k: pqrs_tq("S", k), lambda n, k: table_ABDE("E", n, k), N, "3.41")
    return chk.done()


def _eq3_43_44(N):
    return catalan_stieltjes_check(N)


IDENTITIES: dict[str, Identity] = {
    i.id: i
    for i in [
        Identity("eq1.1", "Fibonacci polynomials: recurrence and t=1 case", 8, _eq1_1),
        Identity("eq1.3-1.4", "Catalan and Narayana moments of F_n(x), F_n(x,t)", 6, _eq1_3),
        Identity("eq1.5-1.6", "F_n(x,t): closed form equals recurrence", 8, _eq1_5),
        Identity("a-closed-forms", "two closed forms of a(2n+k,k,q)", 8, _a_closed_forms),
        Identity("eq1.10", "x^n in q-Fibonacci polynomials", 8, _eq1_10),
        Identity("orthogonal-q-catalan", "orthogonal polynomials of the q-Catalan moments", 5, _orthogonal_q_catalan),
        Identity("eq2.2", "x^n = sum q^-k([n,k]-[n,k-1]) F_{n-2k}(x,q)", 8, _eq2_2),
        Identity("eq2.3", "q-Catalan moments of F_n(x,q)", 6, _eq2_3),
        Identity("eq2.4", "q-Lucas polynomials at q = 1", 8, _eq2_4),
        Identity("eq2.5", "x^n = sum [n,k] L_{n-2k}(x,q)", 8, _eq2_5),
        Identity("eq2.6", "central q-binomial moments of L_n(x,q)", 6, _eq2_6),
        Identity("eq2.7", "L_n = F_n - q^{n-1} F_{n-2}", 8, _eq2_7),
        Identity("eq2.8", "Carlitz sum c(n,k) = 1", 8, _eq2_8),
        Identity("carlitz-inversion", "inversion pair round trips", 8, _carlitz_inversion),
        Identity("eq2.9", "four-term recursion of F_n(x,q)", 8, _eq2_9),
        Identity("eq2.10", "recursion with sqrt(q) (q = s^2)", 8, _eq2_10),
        Identity("eq2.11-2.12", "P_n, Q_n closed forms", 6, _eq2_11_12),
        Identity("eq2.13-2.14", "x^n in P_n and Q_n", 6, _eq2_13_14),
        Identity("eq2.15-2.16", "moments of L_0 and L_1", 6, _eq2_15_16),
        Identity("eq2.17-2.18", "R_n, S_n closed forms", 6, _eq2_17_18),
        Identity("eq2.19", "x^n in R_n and S_n", 6, _eq2_19),
        Identity("eq2.20", "moments of M_0 and M_1", 6, _eq2_20),
        Identity("eq2.21", "R_n = Q_n - q^{2n-2} Q_{n-2}", 6, _eq2_21),
        Identity("eq3.4-3.5", "F_n(x,t,q): recurrence equals closed form", 6, _eq3_4_5),
        Identity("q-vandermonde", "q-Vandermonde sums of the t=1 reduction", 6, _q_vandermonde),
        Identity("eq3.6", "q-Narayana moments of F_n(x,t,q)", 6, _eq3_6),
        Identity("eq3.8", "t=1 and q=1 reductions of F_n(x,t,q)", 6, _eq3_8),
        Identity("eq3.9-3.11", "a(n,k,t,q) closed form", 6, _eq3_9_11),
        Identity("eq3.10", "row recurrence of a(n,k,t,q)", 6, _eq3_10),
        Identity("eq3.12-3.13", "cross recurrences of the closed form", 6, _eq3_12_13),
        Identity("eq3.14-3.15", "a(2n,0,t,q) = C_n(t,q) and its specializations", 6, _eq3_14_15),
        Identity("eq3.16", "Q_n(x,t,q) closed form", 6, _eq3_16),
        Identity("eq3.17-3.19", "B table, expansion and B_{n,0}", 6, _eq3_17_19),
        Identity("eq3.20", "P_n(x,t,q) closed form", 6, _eq3_20),
        Identity("eq3.21-3.23", "A table, expansion and A_{n,0}", 6, _eq3_21_23),
        Identity("eq3.24", "type-B moments M_n(t)", 6, _eq3_24),
        Identity("eq3.26-3.27", "L_n(x,t,q) moments and reductions", 6, _eq3_26_27),
        Identity("eq3.28-3.29", "row recurrence of the L_n(x,t,q) table", 6, _eq3_28_29),
        Identity("eq3.30", "closed forms of the L_n(x,t,q) table", 6, _eq3_30),
        Identity("eq3.31", "B = D - q^{2k+2} t D_{n,k+2}", 6, _eq3_31),
        Identity("eq3.32-3.35", "R_n(x,t,q) forms", 6, _eq3_32_35),
        Identity("eq3.36-3.38", "D table, expansion and M_0", 6, _eq3_36_38),
        Identity("eq3.39", "S_n(x,t,q) from R_n", 6, _eq3_39),
        Identity("eq3.40-3.42", "E table, expansion and M_1", 6, _eq3_40_42),
        Identity("eq3.43-3.44", "Catalan-Stieltjes recurrences of D", 6, _eq3_43_44),
    ]
}

MUTANTS: dict[str, Identity] = {
    i.id: i
    for i in [
        Identity("mut:eq2.7", "q^n in place of q^{n-1}", 8, lambda N: _eq2_7(N, mutate=True)),
        Identity("mut:eq2.8", "q^C(j,2) in place of q^C(j+1,2)", 8, lambda N: _eq2_8(N, mutate=True)),
        Identity("mut:eq3.31", "q^{2k+1} in place of q^{2k+2}", 6, lambda N: b_d_relation_check(N, mutate=True)),
        Identity("mut:eq3.44", "drop the q^{n+2k+1} factor", 6, lambda N: catalan_stieltjes_check(N, mutate=True)),
    ]
}


def run_identity(identity_id: str, N: int | None = None) -> VerificationReport:
    entry = IDENTITIES.get(identity_id) or MUTANTS.get(identity_id)
    if entry is None:
        raise KeyError(f"unknown identity {identity_id!r}; valid ids: {', '.join(IDENTITIES)}")
    start = time.perf_counter()
    report = entry.check(entry.default_N if N is None else N)
    report.seconds = time.perf_counter() - start
    return report


def _run_pair(args):
    return run_identity(*args)


def run_suite(ids=None, N: int | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run identities in registry order; output order does not depend on ``jobs``."""
    ids = list(ids) if ids else list(IDENTITIES)
    work = [(i, N) for i in ids]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_pair, work))
    return [_run_pair(w) for w in work]
