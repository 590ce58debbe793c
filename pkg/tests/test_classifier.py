import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnichols.classifier import (
    CASES,
    Outcome,
    RSRDescriptor,
    RSREntry,
    Summand,
    Verdict,
    YDModuleSpec,
    adjusted_fixed_points,
    central_oracle_agrees,
    central_scalar_oracle,
    classify,
    classify_any,
    classify_irreducible,
    classify_permuted,
    classify_reducible,
    is_central_quantum_linear,
    is_matched,
    load_spec,
    match_theorem2_case,
    normalize_character,
    restricted_minus_one_type,
)
from weylnichols.conjugacy import perm_centralizer
from weylnichols.cyclotomic import CyclotomicScalar, kron
from weylnichols.finite import ExplicitRep, FiniteGroup, irreducible_reps
from weylnichols.groups import (
    CycleType,
    GroupSpec,
    Permutation,
    WeylElement,
    cycle_type,
    enumerate_group,
    random_element,
    symmetric_group,
)
from weylnichols.repkit import (
    AbelianCharacter,
    BlockRep,
    RepDescriptor,
    chi_nu,
    enumerate_one_dim_reps,
    induce,
    is_minus_one_type,
    realize,
)
from weylnichols.verify import cycle_types, exponent_descriptors

MINUS_ONE = CyclotomicScalar.rational(-1)


def p(text, n):
    return Permutation.parse(text, n)


def desc_of(text, t, rho=None):
    ctype = CycleType.parse(text)
    rho = rho or {}
    blocks = tuple(BlockRep(j, t.get(j, (0,) * ctype.count(j)), rho.get(j, "epsilon")) for j in ctype.lengths())
    return RepDescriptor(blocks)


def module(family, rank, *summands):
    spec = GroupSpec(family, rank)
    return YDModuleSpec(spec, tuple(Summand(WeylElement.parse(s, rank), RepDescriptor((), nu=nu)) for s, nu in summands))


# normalization and matching ------------------------------------------------------


def test_normalize_character_examples():
    sigma = p("(1 2)", 4)
    nu, s2, phi = normalize_character(sigma, chi_nu(2, GroupSpec("B", 4)))
    assert nu == 2 and phi == Permutation.identity(4) and s2 == sigma
    nu, s2, phi = normalize_character(p("(2 4)", 4), AbelianCharacter(2, (0, 1, 0, 1)))
    assert nu == 2 and {phi(2), phi(4)} == {1, 2}
    assert s2 == phi * p("(2 4)", 4) * phi.inverse() == p("(1 2)", 4)
    nu, _, _ = normalize_character(sigma, AbelianCharacter(2, (0,) * 4))
    assert nu == 0
    with pytest.raises(ValueError):
        normalize_character(sigma, AbelianCharacter(3, (0,) * 4))


def test_is_matched_examples():
    assert is_matched(p("(1 2)", 5), 2)
    assert not is_matched(p("(2 3)", 5), 2)
    assert is_matched(p("(4 5)", 5), 2)
    with pytest.raises(ValueError):
        is_matched(p("(1 2)", 5), 6)


def test_adjusted_fixed_points():
    assert adjusted_fixed_points(p("(1 2)", 5), 3) == 1
    assert adjusted_fixed_points(p("(4 5)", 5), 2) == 1
    assert adjusted_fixed_points(p("(4 5)", 5), 3) == 0


def test_matching_case_examples():
    sigma = p("(3 4)", 4)
    d = desc_of("1^2 2", {2: (1,)}, {1: "sgn"})
    assert "(i)" in match_theorem2_case(sigma, 0, d)
    sigma = p("(1 2)(3 4 5 6)", 6)
    assert match_theorem2_case(sigma, 0, desc_of("2 4", {4: (2,)})) == ["(vii)"]
    for t in range(3):
        assert match_theorem2_case(p("(1 2 3)", 3), 0, desc_of("3", {3: (t,)})) == []
    with pytest.raises(ValueError):
        match_theorem2_case(p("(2 3)", 5), 2, desc_of("2", {}))


@pytest.mark.parametrize("n", range(1, 11))
def test_every_matching_case_is_minus_one_type(n):
    for ctype in cycle_types(n):
        sigma = ctype.representative()
        for desc in enumerate_one_dim_reps(sigma):
            if match_theorem2_case(sigma, 0, desc):
                assert is_minus_one_type(desc, sigma), (ctype, desc)


def test_all_nine_shapes_are_reachable():
    seen = set()
    for n in range(1, 11):
        for ctype in cycle_types(n):
            sigma = ctype.representative()
            for desc in enumerate_one_dim_reps(sigma):
                seen.update(match_theorem2_case(sigma, 0, desc))
    assert seen == set(CASES)


def _projections(nu):
    """Projections of ``S_nu x S_{nu+1..n}`` onto its two factors."""

    def low(q):
        return Permutation(q.images[:nu])

    def high(q):
        return Permutation(tuple(i - nu for i in q.images[nu:]))

    return low, high


@pytest.mark.parametrize("n", range(2, 5))
def test_xi_flag_matches_explicit_induced_matrices(n):
    spec = GroupSpec("B", n)
    for nu in range(n + 1):
        chi = chi_nu(nu, spec)
        mask = sum(1 << i for i in range(nu))
        low, high = _projections(nu)
        for sigma in symmetric_group(n):
            if sigma.is_identity() or not is_matched(sigma, nu):
                continue
            on_low = all(q <= nu for q in sigma.support())
            own = low(sigma) if on_low else high(sigma)
            other_n = n - nu if on_low else nu
            others = irreducible_reps(FiniteGroup(symmetric_group(other_n))) if other_n else [None]
            sig = WeylElement.from_perm(sigma)
            cent = [g for g in enumerate_group(spec) if g * sig == sig * g]
            ambient = FiniteGroup(cent)
            d_sigma = FiniteGroup([q for q in perm_centralizer(sigma) if chi.act(q) == chi])
            for desc in list(exponent_descriptors(cycle_type(own))) + enumerate_one_dim_reps(own):
                r_own = realize(desc, own)
                for r_other in others:
                    images = []
                    for q in d_sigma.elements:
                        a = r_own(low(q) if on_low else high(q))
                        if r_other is not None:
                            b = r_other(high(q) if on_low else low(q))
                            a = kron(a, b)
                        images.append(a)
                    rho = ExplicitRep(d_sigma, images)
                    theta = induce(mask, rho, ambient)
                    explicit = theta.rep.is_scalar_at(sig, MINUS_ONE)
                    assert explicit == restricted_minus_one_type(sigma, nu, desc), (sigma, nu, desc)


# irreducible verdicts -----------------------------------------------------------


def test_classify_irreducible_examples():
    v = classify_irreducible(p("(1 2)", 3), AbelianCharacter(2, (0, 0, 0)), desc_of("1 2", {2: (1,)}))
    assert v.outcome is Outcome.MINUS_ONE_CANDIDATE and v.cases[0] == "(i)"
    assert v.trace[0][0] == "Theorem 2 (i)"
    for t in range(5):
        v = classify_irreducible(p("(1 2 3 4 5)", 5), AbelianCharacter(2, (0,) * 5), desc_of("5", {5: (t,)}))
        assert v.outcome is Outcome.INFINITE
    v = classify_irreducible(p("(2 3)", 5), AbelianCharacter(2, (1, 1, 0, 0, 0)), desc_of("1^3 2", {}))
    assert v.outcome is Outcome.UNKNOWN and "outside Theorem 2 hypothesis" in v.trace[0][1]
    v = classify_irreducible(WeylElement.parse("100 (2 3)"), AbelianCharacter(2, (0, 0, 0)), desc_of("1 2", {}))
    assert v.outcome is Outcome.UNKNOWN


def test_classify_irreducible_family_checks():
    with pytest.raises(ValueError):
        classify_irreducible(p("(1 2)", 3), AbelianCharacter(2, (1, 0, 0)), desc_of("1 2", {}), GroupSpec("A", 3))
    with pytest.raises(TypeError):
        classify_irreducible("(1 2)", AbelianCharacter(2, (0, 0)), desc_of("2", {}))


# reducible verdicts -----------------------------------------------------------------


def test_worked_verdicts():
    v = classify(module("B", 5, ("00000 (1 2)", 0), ("00000 (3 4)", 1)))
    assert v.outcome is Outcome.INFINITE and v.trace[0][0] == "Theorem 4"
    v = classify(module("B", 4, ("0000 (1 2)(3 4)", 0), ("0000 (1 3)(2 4)", 0)))
    assert v.outcome is Outcome.UNKNOWN and v.trace[0][0] == "Theorem 4"
    v = classify(module("B", 3, ("111", 1), ("111", 1)))
    assert v.outcome is Outcome.FINITE and v.trace[0][0] == "Remark 3.8"


def test_reducible_variants():
    assert classify(module("B", 4, ("0000 (1 2)(3 4)", 0), ("1000 (1 3)(2 4)", 0))).outcome is Outcome.INFINITE
    assert classify(module("B", 4, ("0000 (1 2)(3 4)", 0), ("0000 (1 2 3 4)", 0))).outcome is Outcome.INFINITE
    assert classify(module("B", 3, ("111", 1), ("111", 2))).outcome is Outcome.UNKNOWN
    assert classify(module("B", 2, ("00 (1 2)", 0), ("00 (1 2)", 0))).outcome is Outcome.UNKNOWN
    with pytest.raises(ValueError):
        classify_reducible(module("B", 3, ("111", 1)))
    with pytest.raises(ValueError):
        module("D", 3, ("100", 1))


def test_single_central_summand():
    assert classify(module("B", 3, ("111", 3))).outcome is Outcome.FINITE


@st.composite
def modules(draw):
    family = draw(st.sampled_from("BD"))
    n = draw(st.integers(3, 5))
    spec = GroupSpec(family, n)
    elems = [spec.central_sign_element()] if spec.central_sign_element() else []
    count = draw(st.integers(2, 4))
    rng = draw(st.randoms(use_true_random=False))
    summands = []
    for _ in range(count):
        if elems and rng.random() < 0.3:
            x = elems[0]
        elif rng.random() < 0.3:
            perm = CycleType.parse("2^2" if n >= 4 else "2").representative()
            perm = Permutation(perm.images + tuple(range(perm.degree, n)))
            x = WeylElement(0, perm)
        else:
            x = random_element(spec, rng)
        summands.append(Summand(x, RepDescriptor((), nu=rng.randrange(n + 1))))
    return YDModuleSpec(spec, tuple(summands))


@given(modules(), st.randoms(use_true_random=False))
def test_reducible_is_permutation_invariant(m, rng):
    base = classify(m)
    order = list(range(len(m.summands)))
    for _ in range(3):
        rng.shuffle(order)
        v = classify_permuted(m, order)
        assert v.outcome == base.outcome and v.trace == base.trace


@given(modules())
def test_trace_cites_one_criterion(m):
    v = classify(m)
    assert len(v.trace) == 1
    assert v.outcome in (Outcome.INFINITE, Outcome.FINITE, Outcome.UNKNOWN)
    if v.outcome is Outcome.FINITE:
        assert v.trace[0][0] in ("Remark 3.8", "Theorem 3")
    if v.outcome is Outcome.INFINITE:
        assert v.trace[0][0] == "Theorem 4"


# central quantum linear spaces --------------------------------------------------------


def rsr(family, n, support, *weights):
    spec = GroupSpec(family, n)
    reps = tuple(RepDescriptor((), chi=tuple(1 if i < w else 0 for i in range(n))) for w in weights)
    return RSRDescriptor(spec, (RSREntry(WeylElement.parse(support, n), len(reps), reps),))


def test_central_quantum_linear_examples():
    assert is_central_quantum_linear(rsr("B", 3, "111", 1))
    assert not is_central_quantum_linear(rsr("B", 3, "111", 2))
    assert not is_central_quantum_linear(rsr("B", 3, "110", 1))
    assert is_central_quantum_linear(rsr("B", 3, "111", 1, 3))
    v = classify_any(rsr("B", 3, "111", 1))
    assert v.outcome is Outcome.FINITE and v.trace[0][0] == "Theorem 3"
    with pytest.raises(ValueError):
        RSREntry(WeylElement.parse("111"), 0, ())


@pytest.mark.parametrize("spec", [GroupSpec("B", 2), GroupSpec("B", 3), GroupSpec("D", 4)], ids=str)
def test_central_scalar_oracle(spec):
    rows = central_scalar_oracle(spec)
    assert rows and all(r.predicted for r in rows)
    assert central_oracle_agrees(spec)
    with pytest.raises(ValueError):
        central_scalar_oracle(GroupSpec("D", 3))


# serialization --------------------------------------------------------------------


def test_module_json_round_trip():
    m = module("B", 4, ("0000 (1 2)(3 4)", 0), ("1111", 3))
    text = json.dumps(m.to_json())
    assert load_spec(text) == m
    r = rsr("B", 3, "111", 1, 3)
    assert load_spec(json.dumps(r.to_json())) == r


def test_load_spec_errors():
    for bad in ["[]", "{}", '{"group": {"family": "B", "rank": 3}}', "not json"]:
        with pytest.raises(ValueError):
            load_spec(bad)


def test_verdict_json():
    v = Verdict(Outcome.MINUS_ONE_CANDIDATE, [("Theorem 2 (i)", "why")], ["(i)"])
    assert v.to_json() == {
        "outcome": "MinusOneTypeCandidate",
        "trace": [{"id": "Theorem 2 (i)", "justification": "why"}],
        "cases": ["(i)"],
    }
