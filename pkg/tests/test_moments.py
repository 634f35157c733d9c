import pytest

from qnarayana.exactalg import ZERO, RatFunc, as_poly, q, substitute, t, x
from qnarayana.families import get_family
from qnarayana.moments import (
    FAMILY_MOMENTS,
    B_alternative,
    MomentSequence,
    a_fibtq_closed,
    a_qfib_closed,
    a_qfib_closed_difference,
    b_d_relation_check,
    catalan_stieltjes_check,
    closed_table,
    expand_in_family,
    moment,
    moment_sequence,
    table_ABDE,
)
from qnarayana.orthopoly import functional_apply
from qnarayana.qcore import q_binom


def P(s):
    return RatFunc.coerce(s)


# rows 0-5 of the reference a(n,k,q) table for the q-Fibonacci family
REFERENCE_QFIB_TABLE = [
    [1],
    [0, 1],
    [1, 0, 1],
    [0, 1 + q, 0, 1],
    [1 + q**2, 0, 1 + q + q**2, 0, 1],
    [0, 1 + q + q**2 + q**3 + q**4, 0, (1 + q) * (1 + q**2), 0, 1],
]


def test_qfib_table_matches_reference():
    table = expand_in_family("qfib", 5)
    for n, row in enumerate(REFERENCE_QFIB_TABLE):
        assert table.row(n) == [P(v) for v in row]


def test_expand_examples():
    assert expand_in_family("fib_tq", 0).row(0) == [1]
    with pytest.raises(ValueError, match="monic"):
        expand_in_family([x, 2 * x], 1)


def test_a_qfib_closed():
    for k in range(5):
        assert a_qfib_closed(0, k) == 1
    assert a_qfib_closed(1, 2) == 1 + q + q**2
    assert a_qfib_closed(2, 0) == 1 + q**2
    for n in range(5):
        for k in range(5):
            assert a_qfib_closed(n, k) == a_qfib_closed_difference(n, k)


def test_a_fibtq_closed():
    assert a_fibtq_closed(0, 0) == 1
    assert substitute(a_fibtq_closed(4, 2), "t", 1) == 1 + q + q**2
    for n in range(7):
        assert a_fibtq_closed(2 * n, 0) == moment("q_narayana", n)
    assert a_fibtq_closed(3, 0) == 0


def test_abde_examples():
    assert table_ABDE("A", 2, 0) == 1 + q**2 * t
    assert table_ABDE("A", 3, 0) == 1 + q**2 * t + q**3 * t + q**4 * t + q**6 * t**2
    for n in range(6):
        for k in range(n + 1):
            b1 = (q_binom(2 * n + 1, n - k) - q_binom(2 * n + 1, n - k - 1)).div_monomial((n - k, 0, 0))
            assert substitute(table_ABDE("B", n, k), "t", 1) == b1
            assert substitute(table_ABDE("D", n, k), "t", 1) == q_binom(2 * n, n - k)
            assert table_ABDE("B", n, k) == B_alternative(n, k)
    with pytest.raises(ValueError):
        table_ABDE("Z", 1, 0)


def test_reference_A_table():
    rows = [
        [1],
        [1, 1],
        [1 + q**2 * t, 1 + q + q**2 * t, 1],
        [
            1 + q**2 * t + q**3 * t + q**4 * t + q**6 * t**2,
            1 + q + q**2 + q**2 * t + q**3 * t + 2 * q**4 * t + q**5 * t + q**6 * t**2,
            1 + q + q**2 + q**3 * t + q**4 * t,
            1,
        ],
    ]
    table = closed_table("A", 3)
    for n, row in enumerate(rows):
        assert table.row(n) == [P(v) for v in row]


@pytest.mark.parametrize(
    "family,name",
    [("qfib", "a_qfib"), ("fib_tq", "a_fibtq"), ("P_tq", "A"), ("Q_tq", "B"), ("R_tq", "D"), ("S_tq", "E")],
)
def test_closed_tables_match_expansion(family, name):
    expanded = expand_in_family(family, 6)
    closed = closed_table(name, 6)
    for n in range(7):
        assert expanded.row(n) == closed.row(n)


def test_moment_examples():
    assert moment("q_narayana", 2) == 1 + q**2 * t
    assert moment("q_catalan", 2) == 1 + q**2
    assert moment("typeB_M", 1) == 1 + q * t
    assert moment("narayana", 3) == 1 + 3 * t + t**2
    for kind in ("narayana", "q_narayana", "q_catalan", "central_qbinom", "typeB_M"):
        assert moment(kind, 0) == 1
    with pytest.raises(KeyError, match="valid names"):
        moment("nope", 1)
    with pytest.raises(ValueError):
        moment("narayana", -1)


def test_specializations():
    for n in range(1, 8):
        c = moment("q_narayana", n)
        assert substitute(c, "t", 1) == moment("q_catalan", n)
        assert substitute(c, "q", 1) == moment("narayana", n)
        lhs = substitute(c, "t", RatFunc(1, q))
        assert lhs == RatFunc((1 + q) * as_poly(moment("q_catalan", n)), 1 + q**n)


@pytest.mark.parametrize("family", list(FAMILY_MOMENTS))
def test_column_zero_is_moment_sequence(family):
    N = 8 if family in ("fib_tq", "lucas_tq") else 6
    table = expand_in_family(family, N)
    m = moment_sequence(family)
    for n in range(N + 1):
        assert table[n, 0] == m(n)
        assert table[n, n] == 1


@pytest.mark.parametrize("family", list(FAMILY_MOMENTS))
def test_functional_kills_members(family):
    m = moment_sequence(family)
    fam = get_family(family)
    assert functional_apply(m, fam(0)) == 1
    for n in range(1, 7):
        assert functional_apply(m, fam(n)) == ZERO


def test_moment_sequence_helpers():
    s = MomentSequence.from_list("toy", [1, 2, 5])
    assert s(2) == 5
    inter = MomentSequence.named("q_catalan", interleaved=True)
    assert inter(3) == 0 and inter(4) == moment("q_catalan", 2)


def test_q_catalan_b0_shift():
    for n in range(6):
        assert table_ABDE("B", n, 0) == substitute(moment("q_narayana", n + 1), "t", RatFunc(t, q))


def test_recurrence_checks_and_mutants():
    assert catalan_stieltjes_check(1).passed
    assert catalan_stieltjes_check(6).passed
    bad = catalan_stieltjes_check(6, mutate=True)
    assert not bad.passed and bad.counterexample
    assert b_d_relation_check(0).passed
    assert b_d_relation_check(6).passed
    assert not b_d_relation_check(6, mutate=True).passed


def test_table_outside_triangle_is_zero():
    table = closed_table("D", 2)
    assert table[1, 2] == 0 and table[5, 0] == 0
    assert closed_table("D", 0).row(0) == [1]
    with pytest.raises(KeyError):
        closed_table("Z", 1)
