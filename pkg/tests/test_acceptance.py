"""One test per acceptance criterion, each with its time bound.

Every criterion prints a single PASS/FAIL line, repeated in the terminal
summary.  The second criterion is expected to fail: in W(B4) the class pairs
over types (12) and (12)(34) include square-commutative ones, so that
assertion is kept exactly and marked as a strict expected failure.
"""

import time

import pytest

from weylnichols.classifier import (
    Outcome,
    RSRDescriptor,
    RSREntry,
    Summand,
    YDModuleSpec,
    central_oracle_agrees,
    central_scalar_oracle,
    classify,
    classify_rsr,
    is_central_quantum_linear,
)
from weylnichols.config import Config
from weylnichols.finite import inner_product
from weylnichols.groups import GroupSpec, WeylElement
from weylnichols.repkit import (
    RepDescriptor,
    minus_one_agreement,
    semidirect_irreducibles,
    weyl_group,
)
from weylnichols.squarecomm import (
    NEGATIVE_CASES,
    enumerate_pairs,
    negative_case_check,
    sign_condition_table,
)
from weylnichols.verify import (
    PROPERTY_CASES,
    PROPERTY_SUITES,
    SN_EXPECTED,
    phi_isomorphism,
    sn_square_commuting,
    xi_equivalence_sweep,
    xi_table,
)

pytestmark = pytest.mark.acceptance


def test_symmetric_group_square_commuting_pairs(criterion_log):
    start = time.perf_counter()
    got = {n: enumerate_pairs(GroupSpec("A", n)).type_pairs() for n in (3, 4, 5, 6)}
    seconds = time.perf_counter() - start
    exact = all(got[n] == SN_EXPECTED[n] for n in (3, 4, 5, 6))
    suite = sn_square_commuting()
    assert criterion_log(1, exact and suite.passed, "S_3..S_6 square-commuting pairs match exactly", seconds, 60)
    assert exact and suite.passed and seconds < 60


def _signed_rank_four():
    spec = GroupSpec("B", 4)
    assert spec.order() == 384
    negative = {case: negative_case_check(spec, case) for case in NEGATIVE_CASES}
    table = sign_condition_table(4, "B")
    parity_rule = all(sc == same for _, _, sc, same in table)
    return negative, table, parity_rule


def test_signed_rank_four_parts_that_hold():
    negative, table, parity_rule = _signed_rank_four()
    for case in ("(i)", "(ii)", "(iii)"):
        ok, checked, commuting = negative[case]
        assert ok and checked > 0 and commuting == 0, case
    assert table and parity_rule


@pytest.mark.xfail(
    strict=True,
    raises=AssertionError,
    reason="W(B4) has 8 square-commutative class pairs over types (12) and (12)(34)",
)
def test_signed_rank_four_negative_cases_and_sign_rule(criterion_log):
    start = time.perf_counter()
    negative, table, parity_rule = _signed_rank_four()
    seconds = time.perf_counter() - start
    failing = [case for case, (ok, _, _) in negative.items() if not ok]
    passed = not failing and parity_rule
    detail = "negative cases and parity rule in W(B4)"
    if failing:
        counts = ", ".join(f"{c}: {negative[c][2]} of {negative[c][1]} pairs commute" for c in failing)
        detail += f"; violated by {counts}"
    criterion_log(2, passed, detail, seconds, 120)
    assert passed and seconds < 120


def test_distinguished_element_table(criterion_log):
    res = xi_table()
    assert criterion_log(3, res.passed, "nine distinguished-element values are exact", res.seconds, 1)
    assert res.passed and res.seconds < 1


def test_distinguished_element_equivalence_sweep(criterion_log):
    res = xi_equivalence_sweep(6)
    assert criterion_log(4, res.passed, res.lines[0], res.seconds, 30)
    assert res.passed and res.seconds < 30


def test_phi_isomorphism(criterion_log):
    res = phi_isomorphism(("2^2", "2^3", "3^2"))
    assert criterion_log(5, res.passed, "phi is an isomorphism for 2^2, 2^3, 3^2", res.seconds, 60)
    assert res.passed and res.seconds < 60


def test_induction_oracle(criterion_log):
    start = time.perf_counter()
    ok = True
    details = []
    for spec in (GroupSpec("B", 2), GroupSpec("B", 3)):
        group = weyl_group(spec)
        reps = semidirect_irreducibles(spec)
        chars = [r.rep.character() for r in reps]
        complete = sum(r.dim**2 for r in reps) == group.order
        distinct = all(
            inner_product(a, b, group) == (1 if i == j else 0) for i, a in enumerate(chars) for j, b in enumerate(chars)
        )
        rows = minus_one_agreement(spec)
        agree = bool(rows) and all(r.agrees for r in rows)
        ok &= complete and distinct and agree
        details.append(f"{spec.family}{spec.rank}: {len(reps)} irreducibles, {len(rows)} (chi, rho) agree={agree}")
    seconds = time.perf_counter() - start
    assert criterion_log(6, ok, "; ".join(details), seconds, 60)
    assert ok and seconds < 60


def _module(family, rank, *summands):
    spec = GroupSpec(family, rank)
    return YDModuleSpec(spec, tuple(Summand(WeylElement.parse(s, rank), RepDescriptor((), nu=nu)) for s, nu in summands))


def test_classifier_end_to_end(criterion_log):
    start = time.perf_counter()
    v1 = classify(_module("B", 5, ("00000 (1 2)", 0), ("00000 (3 4)", 1)))
    v2 = classify(_module("B", 4, ("0000 (1 2)(3 4)", 0), ("0000 (1 3)(2 4)", 0)))
    v3 = classify(_module("B", 3, ("111", 1), ("111", 1)))
    spec = GroupSpec("B", 3)
    a = spec.central_sign_element()
    rsr = RSRDescriptor(spec, (RSREntry(a, 1, (RepDescriptor((), chi=(1, 0, 0)),)),))
    v4 = classify_rsr(rsr)
    verdicts = (
        v1.outcome is Outcome.INFINITE
        and v1.trace[0][0] == "Theorem 4"
        and "n = 5 is not 4" in v1.trace[0][1]
        and v2.outcome is Outcome.UNKNOWN
        and v2.trace[0][0] == "Theorem 4"
        and v3.outcome is Outcome.FINITE
        and v3.trace[0][0] == "Remark 3.8"
        and v4.outcome is Outcome.FINITE
        and v4.trace[0][0] == "Theorem 3"
        and is_central_quantum_linear(rsr)
    )
    rows = central_scalar_oracle(spec)
    weights = {r.weight % 2 for r in rows}
    oracle = central_oracle_agrees(spec) and weights == {0, 1}
    seconds = time.perf_counter() - start
    ok = verdicts and oracle
    assert criterion_log(7, ok, f"worked verdicts and central scalar oracle over {len(rows)} (chi, rho)", seconds, 30)
    assert ok and seconds < 30


def test_property_suites(criterion_log):
    seed = Config.from_env().seed
    results = [suite(PROPERTY_CASES, seed) for suite in PROPERTY_SUITES]
    ok = all(r.passed for r in results)
    seconds = sum(r.seconds for r in results)
    names = ", ".join(f"{r.name} {'ok' if r.passed else 'FAILED'}" for r in results)
    criterion_log(8, ok, f"{PROPERTY_CASES} cases each, seed {seed}: {names}", seconds)
    for r in results:
        assert r.passed, r.lines
