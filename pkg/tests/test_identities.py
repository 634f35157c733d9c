"""Registry checks plus the negative controls.

Each mutant in ``MUTANTS`` is a real identity with one factor changed:

* ``mut:eq2.7``  uses ``q^n`` where the Lucas/Fibonacci relation has ``q^(n-1)``
* ``mut:eq2.8``  uses ``q^C(j,2)`` in the Carlitz sum instead of ``q^C(j+1,2)``
* ``mut:eq3.31`` uses ``q^(2k+1)`` in the B/D relation instead of ``q^(2k+2)``
* ``mut:eq3.44`` drops the ``q^(n+2k+1)`` factor from the D-table recurrence
"""

import pytest

from qnarayana.identities import IDENTITIES, MUTANTS, run_identity, run_suite


@pytest.mark.parametrize("identity_id", list(IDENTITIES))
def test_identity_holds_at_default_bound(identity_id):
    rep = run_identity(identity_id)
    assert rep.passed, rep.counterexample
    assert rep.cases > 0


@pytest.mark.parametrize("mutant_id", list(MUTANTS))
def test_mutant_is_caught(mutant_id):
    rep = run_identity(mutant_id)
    assert not rep.passed
    ce = rep.counterexample
    assert ce["indices"]
    assert "lhs" in ce and "rhs" in ce and "difference" in ce


def test_at_least_three_mutants():
    assert len(MUTANTS) >= 3


def test_unknown_identity():
    with pytest.raises(KeyError, match="valid ids"):
        run_identity("eq9.99")


def test_suite_order_independent_of_jobs():
    ids = ["eq2.7", "eq2.8", "eq3.31"]
    a = [r.to_json() for r in run_suite(ids, 6)]
    b = [r.to_json() for r in run_suite(ids, 6, jobs=2)]
    assert a == b
    assert [d["identity"] for d in a] == ids


def test_report_json_shape():
    d = run_identity("eq2.7", 5).to_json()
    assert list(d) == ["identity", "range", "status", "cases"]
    assert d["status"] == "pass"
    assert "PASS eq2.7" in str(run_identity("eq2.7", 5))
