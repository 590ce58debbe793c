import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnichols.groups import (
    CutoffExceeded,
    CycleType,
    GroupSpec,
    Permutation,
    WeylElement,
    act,
    compose,
    conjugate,
    cycle_type,
    enumerate_group,
    inverse,
    order,
    power,
    sign_cycle_decompose,
    signed_cycle_type,
)


@st.composite
def elements(draw, family=None, rank=None):
    fam = family or draw(st.sampled_from("ABD"))
    n = rank or draw(st.integers(1, 7))
    spec = GroupSpec(fam, n)
    images = tuple(draw(st.permutations(range(n))))
    mask = draw(st.sampled_from(spec.sign_masks()))
    return spec, WeylElement(mask, Permutation(images))


@st.composite
def triples(draw):
    n = draw(st.integers(1, 7))
    fam = draw(st.sampled_from("ABD"))
    return [draw(elements(fam, n))[1] for _ in range(3)]


def e(text, n=None):
    return WeylElement.parse(text, n)


# permutations ---------------------------------------------------------------


def test_left_composition_convention():
    a = Permutation.parse("(1 2)", 3)
    b = Permutation.parse("(2 3)", 3)
    assert a * b == Permutation.parse("(1 2 3)", 3)
    assert (a * b)(1) == a(b(1))


def test_permutation_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Permutation.parse("(1 2", 3)
    with pytest.raises(ValueError):
        Permutation.parse("(1 4)", 3)
    with pytest.raises(ValueError):
        Permutation.parse("(1 2)(2 3)", 3)
    with pytest.raises(ValueError):
        Permutation.from_images([1, 1, 2])


def test_permutation_print_round_trip():
    for p in itertools.permutations(range(4)):
        perm = Permutation(p)
        assert Permutation.parse(str(perm), 4) == perm
    assert str(Permutation.identity(3)) == "()"


# elements -------------------------------------------------------------------


def test_compose_examples():
    x = e("11 (1 2)")
    assert x * x == WeylElement.identity(2)
    assert e("(1 2)", 3) * e("(2 3)", 3) == e("(1 2 3)", 3)


def test_action_moves_bit_to_image_point():
    h = Permutation.parse("(1 2)", 3)
    assert act(h, 0b001) == 0b010


def test_inverse_examples():
    assert inverse(WeylElement.identity(3)) == WeylElement.identity(3)
    assert inverse(e("(1 2 3)", 3)) == e("(1 3 2)", 3)
    assert inverse(e("10 (1 2)")) == e("01 (1 2)")
    assert e("10 (1 2)") * e("01 (1 2)") == WeylElement.identity(2)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        compose(e("10"), e("100"))
    with pytest.raises(ValueError):
        e("10") * e("100")


def test_compose_checks_membership():
    with pytest.raises(ValueError):
        compose(e("100"), e("000"), GroupSpec("D", 3))


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == CycleType.parse("1^4")
    assert cycle_type(Permutation.parse("(1 2)(3 4)", 4)) == CycleType.parse("2^2")
    for k in range(1, 6):
        p = Permutation.from_cycles([[2 * i + 1, 2 * i + 2] for i in range(k)], 2 * k)
        assert cycle_type(p) == CycleType.parse(f"2^{k}")


def test_cycle_type_parse_and_print():
    c = CycleType.parse("1^2 2^3")
    assert c.n == 8 and c.count(2) == 3 and c.count(5) == 0
    assert CycleType.parse(str(c)) == c
    assert cycle_type(c.representative()) == c
    with pytest.raises(ValueError):
        CycleType.parse("2^x")


def test_sign_cycle_examples():
    cycles = sign_cycle_decompose(e("0000 (1 2)(3 4)"))
    assert [(c.support, c.parity) for c in cycles] == [((1, 2), 0), ((3, 4), 0)]
    cycles = sign_cycle_decompose(e("1000 (1 2)(3 4)"))
    assert [(c.support, c.parity) for c in cycles] == [((1, 2), 1), ((3, 4), 0)]
    assert e("1110 (1 2)").parity() == 1


def test_order_examples():
    assert order(WeylElement.identity(3)) == 1
    assert order(e("(1 2)", 2)) == 2
    assert order(e("10 (1 2)")) == 4


def test_enumeration_counts():
    assert len(list(enumerate_group(GroupSpec("B", 2)))) == 8
    assert len(list(enumerate_group(GroupSpec("D", 3)))) == 24
    assert len(list(enumerate_group(GroupSpec("A", 3)))) == 6
    for fam, n in itertools.product("ABD", range(1, 5)):
        spec = GroupSpec(fam, n)
        elems = list(enumerate_group(spec))
        assert len(elems) == len(set(elems)) == spec.order()


def test_enumeration_cutoff():
    with pytest.raises(CutoffExceeded):
        list(enumerate_group(GroupSpec("B", 4), cutoff=100))


def test_group_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec("C", 3)
    with pytest.raises(ValueError):
        GroupSpec("B", 0)
    assert GroupSpec("D", 3).contains(e("110"))
    assert not GroupSpec("D", 3).contains(e("100"))
    assert not GroupSpec("A", 3).contains(e("100"))


def test_element_text_round_trip():
    for x in enumerate_group(GroupSpec("B", 3)):
        assert WeylElement.parse(str(x)) == x


def test_generators_generate():
    for fam, n in itertools.product("ABD", range(1, 5)):
        spec = GroupSpec(fam, n)
        seen = {spec.identity()}
        frontier = [spec.identity()]
        while frontier:
            y = frontier.pop()
            for g in spec.generators():
                z = y * g
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
        assert len(seen) == spec.order()


# properties -----------------------------------------------------------------


@given(triples())
def test_associativity(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)


@given(elements())
def test_identity_and_inverse(se):
    spec, x = se
    one = spec.identity()
    assert x * one == x == one * x
    assert x * inverse(x) == one == inverse(x) * x


@given(elements())
def test_closure(se):
    spec, x = se
    assert spec.contains(x * x) and spec.contains(inverse(x))


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)), st.integers(0, 2**n - 1))))
def test_action_is_a_group_action(data):
    h, k, mask = data
    h, k = Permutation(tuple(h)), Permutation(tuple(k))
    assert act(h * k, mask) == act(h, act(k, mask))
    assert act(Permutation.identity(h.degree), mask) == mask


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(elements("B", n), elements("B", n))))
def test_conjugation_formula(pair):
    (_, x), (_, g) = pair
    # g = (b, t), x = (a, s): g x g^-1 = (b + t.a + (t s t^-1).b, t s t^-1)
    b, t, a, s = g.sign, g.perm, x.sign, x.perm
    tst = t * s * t.inverse()
    expected = WeylElement(b ^ act(t, a) ^ act(tst, b), tst)
    assert conjugate(x, g) == expected


@given(elements(), st.integers(-6, 6))
def test_power_and_order(se, k):
    _, x = se
    assert power(x, order(x)) == WeylElement.identity(x.rank)
    assert power(x, k) * power(x, -k) == WeylElement.identity(x.rank)


@given(elements())
def test_sign_cycles_reconstruct(se):
    _, x = se
    out = WeylElement.identity(x.rank)
    for c in sign_cycle_decompose(x):
        out = out * c.element(x.rank)
    assert out == x


@pytest.mark.parametrize("fam,n", list(itertools.product("ABD", range(1, 5))))
def test_conjugation_invariants_exhaustive(fam, n):
    spec = GroupSpec(fam, n)
    group = list(enumerate_group(spec))
    for x in group:
        for g in group:
            y = conjugate(x, g)
            assert cycle_type(y.perm) == cycle_type(x.perm)
            assert y.parity() == x.parity()
            assert signed_cycle_type(y) == signed_cycle_type(x)
