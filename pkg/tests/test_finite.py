import pytest

from weylnichols.conjugacy import wreath_elements
from weylnichols.cyclotomic import ONE
from weylnichols.finite import (
    FiniteGroup,
    all_subgroups,
    induce,
    induced_character,
    inner_product,
    irreducible_reps,
    is_irreducible,
    linear_characters,
    linear_rep,
    negative_identity_at,
    restrict,
    trivial_rep,
)
from weylnichols.groups import GroupSpec, Permutation, enumerate_group, symmetric_group


def group_of(spec):
    return FiniteGroup(list(enumerate_group(spec)), str(spec))


def sym(n):
    return FiniteGroup(symmetric_group(n), f"S{n}")


def test_rejects_non_groups():
    with pytest.raises(ValueError):
        FiniteGroup([Permutation.identity(3), Permutation.identity(3)])
    with pytest.raises(KeyError):
        FiniteGroup([Permutation.identity(3), Permutation.parse("(1 2 3)", 3)])


def test_subgroup_counts():
    assert len(all_subgroups(sym(3))) == 6
    assert len(all_subgroups(sym(4))) == 30
    assert len(all_subgroups(group_of(GroupSpec("B", 2)))) == 10


def test_linear_characters_match_abelianization():
    for g in [sym(3), sym(4), group_of(GroupSpec("B", 2)), group_of(GroupSpec("B", 3)), group_of(GroupSpec("D", 4))]:
        chars = linear_characters(g)
        assert len(chars) == g.order // len(g.commutator_subgroup())
        for c in chars:
            assert is_irreducible(linear_rep(g, c))
            assert linear_rep(g, c).is_homomorphism()


def test_s3_irreducibles():
    reps = irreducible_reps(sym(3))
    assert [r.dim for r in reps] == [1, 1, 2]


@pytest.mark.parametrize(
    "group,degrees",
    [
        (sym(4), [1, 1, 2, 3, 3]),
        (FiniteGroup(wreath_elements(4, 1), "C4"), [1, 1, 1, 1]),
        (group_of(GroupSpec("B", 2)), [1, 1, 1, 1, 2]),
        (group_of(GroupSpec("D", 3)), [1, 1, 2, 3, 3]),
    ],
    ids=["S4", "C4", "B2", "D3"],
)
def test_irreducibles_are_complete(group, degrees):
    reps = irreducible_reps(group)
    assert sorted(r.dim for r in reps) == degrees
    assert sum(r.dim**2 for r in reps) == group.order
    chars = [r.character() for r in reps]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b, group) == (1 if i == j else 0)
    for r in reps:
        assert r.is_homomorphism()


def test_induction_dimension_and_reciprocity():
    g = sym(4)
    sub = g.subgroup(g.closure([g.index[Permutation.parse("(1 2 3)", 4)]]))
    for lam in linear_characters(sub):
        ind = induce(linear_rep(sub, lam), g)
        assert ind.dim == g.order // sub.order
        assert all(x == y for x, y in zip(ind.character(), induced_character(lam, sub, g)))
        for rho in irreducible_reps(g):
            left = inner_product(ind.character(), rho.character(), g)
            right = inner_product(lam, restrict(rho, sub).character(), sub)
            assert left == right


def test_negative_identity():
    g = group_of(GroupSpec("B", 1))
    sign = linear_rep(g, [ONE if x.sign == 0 else -ONE for x in g.elements])
    neg = [x for x in g.elements if x.sign][0]
    assert negative_identity_at(sign, neg)
    assert not negative_identity_at(trivial_rep(g), neg)
