"""Acceptance suite: six criteria, each printed as one PASS/FAIL line.

Every comparison is exact (zero tolerance); the runtime budgets are asserted
alongside the results.
"""

import json
import random
import time
from math import comb

import pytest

from qnarayana.conjectures import grid_cases, run_grid
from qnarayana.exactalg import ZERO, Poly, RatFunc, det_exact, q, substitute, t, x
from qnarayana.families import get_family, pqrs_tq, qfib
from qnarayana.identities import IDENTITIES, MUTANTS, run_identity
from qnarayana.moments import closed_table, expand_in_family, moment_sequence
from qnarayana.orthopoly import functional_apply, orthogonal_polys
from qnarayana.qcore import carlitz_c, q_binom


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, seconds, budget):
        line = f"criterion {number} {'PASS' if ok and seconds < budget else 'FAIL'}: {title} ({seconds:.2f}s, budget {budget}s)"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert seconds < budget, line

    return emit


def test_criterion_1_reference_objects(report):
    start = time.perf_counter()
    checks = []
    known_qfib = [
        1,
        x,
        x**2 - 1,
        x**3 - (1 + q) * x,
        x**4 - (1 + q + q**2) * x**2 + q,
        x**5 - (1 + q) * (1 + q**2) * x**3 + q * (1 + q + q**2) * x,
    ]
    checks += [qfib(n) == p for n, p in enumerate(known_qfib)]

    known_q_table = [
        [1],
        [0, 1],
        [1, 0, 1],
        [0, 1 + q, 0, 1],
        [1 + q**2, 0, 1 + q + q**2, 0, 1],
        [0, 1 + q + q**2 + q**3 + q**4, 0, (1 + q) * (1 + q**2), 0, 1],
    ]
    table = expand_in_family("qfib", 5)
    checks += [table.row(n) == [RatFunc.coerce(v) for v in row] for n, row in enumerate(known_q_table)]

    known_A = {
        (0, 0): 1,
        (1, 0): 1,
        (2, 0): 1 + q**2 * t,
        (3, 0): 1 + q**2 * t + q**3 * t + q**4 * t + q**6 * t**2,
        (1, 1): 1,
        (2, 1): 1 + q + q**2 * t,
        (3, 1): 1 + q + q**2 + q**2 * t + q**3 * t + 2 * q**4 * t + q**5 * t + q**6 * t**2,
        (2, 2): 1,
        (3, 2): 1 + q + q**2 + q**3 * t + q**4 * t,
        (3, 3): 1,
    }
    A = closed_table("A", 3)
    checks += [A[nk] == v for nk, v in known_A.items()]

    known_R = [
        1,
        -1 - q * t + x,
        q + q**3 * t**2 - x - q * x - q**2 * t * x - q**3 * t * x + x**2,
        -q**3 - q**6 * t**3 + q * x + q**2 * x + q**3 * x + q**3 * t * x + q**4 * t * x + q**5 * t * x
        + q**5 * t**2 * x + q**6 * t**2 * x + q**7 * t**2 * x - x**2 - q * x**2 - q**2 * x**2
        - q**3 * t * x**2 - q**4 * t * x**2 - q**5 * t * x**2 + x**3,
    ]
    checks += [pqrs_tq("R", n) == p for n, p in enumerate(known_R)]

    ps = orthogonal_polys(moment_sequence("qfib"), 3)
    checks += [ps[n] == p for n, p in enumerate([1, x, x**2 - 1, x**3 - (1 + q**2) * x])]

    report(1, "reference-object reproduction", all(checks), time.perf_counter() - start, 5)


# identity id -> bound used for acceptance (others run at their registry default)
ACCEPTANCE_BOUNDS = {
    "eq2.2": 12,
    "eq2.5": 12,
    "eq2.7": 12,
    "eq2.8": 12,
    "eq2.9": 10,
    "eq2.10": 10,
    "carlitz-inversion": 10,
    "eq3.30": 13,
}


def test_criterion_2_identity_suite(report):
    start = time.perf_counter()
    failures = []
    for identity_id in IDENTITIES:
        bound = ACCEPTANCE_BOUNDS.get(identity_id, max(IDENTITIES[identity_id].default_N, 6))
        rep = run_identity(identity_id, bound)
        if not rep.passed:
            failures.append((identity_id, rep.counterexample))
    report(2, f"identity suite, {len(IDENTITIES)} identities", not failures, time.perf_counter() - start, 120)


def test_criterion_3_moment_duality(report):
    start = time.perf_counter()
    ok = True
    for family in ("fib_tq", "lucas_tq", "qfib", "qlucas"):
        m = moment_sequence(family)
        fam = get_family(family)
        ok &= functional_apply(m, fam(0)) == 1
        for n in range(1, 11):
            ok &= functional_apply(m, fam(n)) == ZERO
    report(3, "moment-functional duality", bool(ok), time.perf_counter() - start, 10)


def test_criterion_4_conjecture_grid(report):
    start = time.perf_counter()
    first = [r.to_json() for r in run_grid(6, 2)]
    second = [r.to_json() for r in run_grid(6, 2, jobs=2)]
    complete = len(first) == len(grid_cases(6, 2)) and all(c["status"] in ("pass", "fail") for c in first)
    deterministic = json.dumps(first) == json.dumps(second)
    outcome = sum(c["status"] == "pass" for c in first)
    report(
        4,
        f"conjecture grid n<=6, m<=2 complete and deterministic; {outcome}/{len(first)} cells pass",
        complete and deterministic,
        time.perf_counter() - start,
        300,
    )


def _rand_poly(rng):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))] = rng.randint(-4, 4)
    return Poly(terms)


def _cofactor(m):
    if len(m) == 1:
        return RatFunc.coerce(m[0][0])
    total = RatFunc(ZERO)
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = RatFunc.coerce(m[0][j]) * _cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def test_criterion_5_kernel_properties(report):
    start = time.perf_counter()
    rng = random.Random(20240601)
    ok = True
    for _ in range(200):
        a, b, c = (_rand_poly(rng) for _ in range(3))
        ok &= (a + b) * c == a * c + b * c
        ok &= a * (b * c) == (a * b) * c
        ok &= a + b == b + a
        d = _rand_poly(rng)
        if d and "t" not in d.variables():
            f = RatFunc(a, d)
            ok &= substitute(substitute(f, "t", q * t), "t", RatFunc(t, q)) == f
    for size in range(1, 5):
        for _ in range(10):
            m = [[_rand_poly(rng) for _ in range(size)] for _ in range(size)]
            ok &= det_exact(m) == _cofactor(m)
    for n in range(16):
        for k in range(n + 1):
            ok &= q_binom(n, k) == q_binom(n, n - k)
            ok &= substitute(q_binom(n, k), "q", 1) == comb(n, k)
    for n in range(13):
        for k in range(n + 1):
            ok &= carlitz_c(n, k) == 1
    report(5, "kernel property suite", bool(ok), time.perf_counter() - start, 30)


def test_criterion_6_negative_controls(report):
    start = time.perf_counter()
    caught = [m for m in MUTANTS if (r := run_identity(m)).counterexample and not r.passed]
    report(6, f"negative controls, {len(caught)} of {len(MUTANTS)} mutants caught",
           len(caught) == len(MUTANTS) >= 3, time.perf_counter() - start, 30)
