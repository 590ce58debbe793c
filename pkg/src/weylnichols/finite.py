"""Small finite groups given by their elements, and explicit representations.

Everything here is brute force over a Cayley table, meant for groups of a
few hundred elements at most.  Representations store one matrix per group
element, with entries in :class:`CyclotomicScalar`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Hashable, Sequence

from .cyclotomic import (
    ONE,
    ZERO,
    CyclotomicScalar,
    Matrix,
    block_monomial,
    mat_eq,
    mat_identity,
    mat_mul,
    mat_scale,
    trace,
)

MAX_BRUTE_ORDER = 200


class FiniteGroup:
    """A group stored as an element list plus a multiplication table.

    Elements must be hashable and multiply with ``*``.
    """

    def __init__(self, elements: Sequence[Hashable], name: str = "G"):
        self.elements = list(elements)
        self.name = name
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        self.table = [[self.index[a * b] for b in self.elements] for a in self.elements]
        ids = [i for i in range(n) if all(self.table[i][j] == j for j in range(n))]
        if len(ids) != 1:
            raise ValueError("element set is not closed or has no identity")
        self.e = ids[0]
        self.inv = [0] * n
        for i in range(n):
            self.inv[i] = self.table[i].index(self.e)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj(self, g: int, x: int) -> int:
        """Index of ``g x g^{-1}``."""
        return self.table[self.table[g][x]][self.inv[g]]

    def closure(self, gens: Sequence[int]) -> frozenset[int]:
        seen = {self.e}
        todo = deque([self.e])
        while todo:
            y = todo.popleft()
            for g in gens:
                z = self.table[y][g]
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
        return frozenset(seen)

    def subgroup(self, idx: frozenset[int] | Sequence[int], name: str = "H") -> FiniteGroup:
        return FiniteGroup([self.elements[i] for i in sorted(idx)], name)

    def classes(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.order):
            if x not in seen:
                c = frozenset(self.conj(g, x) for g in range(self.order))
                seen |= c
                out.append(c)
        return out

    def element_order(self, i: int) -> int:
        k, y = 1, i
        while y != self.e:
            y = self.table[y][i]
            k += 1
        return k

    def commutator_subgroup(self) -> frozenset[int]:
        t, inv = self.table, self.inv
        comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in range(self.order) for b in range(self.order)}
        return self.closure(sorted(comms))

    def generating_set(self) -> list[int]:
        gens: list[int] = []
        span = frozenset([self.e])
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self.closure(gens)
                if len(span) == self.order:
                    break
        return gens


@dataclass
class ExplicitRep:
    """Matrices ``images[i]`` for every element ``group.elements[i]``."""

    group: FiniteGroup
    images: list

    @property
    def dim(self) -> int:
        return len(self.images[self.group.e])

    def __call__(self, g) -> Matrix:
        return self.images[self.group.index[g]]

    def character(self) -> list[CyclotomicScalar]:
        return [trace(m) for m in self.images]

    def is_homomorphism(self, pairs: Sequence[tuple[int, int]] | None = None) -> bool:
        n = self.group.order
        if pairs is None:
            pairs = [(i, j) for i in range(n) for j in range(n)]
        return all(
            mat_eq(mat_mul(self.images[i], self.images[j]), self.images[self.group.table[i][j]])
            for i, j in pairs
        )

    def is_scalar_at(self, g, value) -> bool:
        return mat_eq(self(g), mat_identity(self.dim, CyclotomicScalar.rational(1) * value))


def linear_rep(group: FiniteGroup, values: Sequence[CyclotomicScalar]) -> ExplicitRep:
    return ExplicitRep(group, [((v,),) for v in values])


def trivial_rep(group: FiniteGroup) -> ExplicitRep:
    return linear_rep(group, [ONE] * group.order)


def inner_product(chi: Sequence[CyclotomicScalar], psi: Sequence[CyclotomicScalar], group: FiniteGroup) -> Fraction:
    """``<chi, psi> = |G|^{-1} sum chi(g) conj(psi(g))``; must come out rational."""
    total = ZERO
    for a, b in zip(chi, psi):
        if not a.is_zero() and not b.is_zero():
            total = total + a * b.conjugate()
    value = total / group.order
    return value.to_rational()


def restrict(rho: ExplicitRep, sub: FiniteGroup) -> ExplicitRep:
    return ExplicitRep(sub, [rho(g) for g in sub.elements])


def character_of_restriction(rho: ExplicitRep, sub: FiniteGroup) -> list[CyclotomicScalar]:
    return [trace(rho(g)) for g in sub.elements]


def _cosets(ambient: FiniteGroup, sub_idx: frozenset[int]) -> tuple[list[int], list[int]]:
    """Left coset representatives ``t_i`` and, for each element, its coset number."""
    coset_of = [-1] * ambient.order
    reps: list[int] = []
    for g in range(ambient.order):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        for h in sub_idx:
            coset_of[ambient.table[g][h]] = k
    return reps, coset_of


def induce(rho: ExplicitRep, ambient: FiniteGroup) -> ExplicitRep:
    """``rho`` induced from a subgroup: block ``(i, j)`` of ``g`` is ``rho(t_i^{-1} g t_j)``."""
    sub = rho.group
    sub_idx = frozenset(ambient.index[h] for h in sub.elements)
    reps, coset_of = _cosets(ambient, sub_idx)
    d = rho.dim
    t, inv = ambient.table, ambient.inv
    images = []
    for g in range(ambient.order):
        placement = {}
        for j, tj in enumerate(reps):
            gt = t[g][tj]
            i = coset_of[gt]
            h = t[inv[reps[i]]][gt]
            placement[(i, j)] = rho.images[sub.index[ambient.elements[h]]]
        images.append(block_monomial(len(reps), d, placement))
    return ExplicitRep(ambient, images)


def induced_character(values: Sequence[CyclotomicScalar], sub: FiniteGroup, ambient: FiniteGroup) -> list[CyclotomicScalar]:
    sub_idx = {ambient.index[h]: k for k, h in enumerate(sub.elements)}
    reps, _ = _cosets(ambient, frozenset(sub_idx))
    out = []
    for g in range(ambient.order):
        acc = ZERO
        for tj in reps:
            y = ambient.table[ambient.table[ambient.inv[tj]][g]][tj]
            if y in sub_idx:
                acc = acc + values[sub_idx[y]]
        out.append(acc)
    return out


def tensor_values(a: Sequence[CyclotomicScalar], b: Sequence[CyclotomicScalar]) -> list[CyclotomicScalar]:
    return [x * y for x, y in zip(a, b)]


def theta(
    ambient: FiniteGroup,
    split: Callable,
    chi: Callable,
    rho: ExplicitRep,
) -> tuple[ExplicitRep, ExplicitRep]:
    """``(chi (x) rho)`` induced from ``A x| D_chi`` up to ``ambient``.

    ``split(g)`` returns ``(a, d)`` with ``g = (a, d)``; ``chi(a)`` is a scalar
    and ``rho`` lives on the stabilizer ``D_chi``.  Returns the induced
    representation and the representation of ``A x| D_chi`` it came from.
    """
    stab = set(rho.group.elements)
    inner_elems = [g for g in ambient.elements if split(g)[1] in stab]
    inner = FiniteGroup(inner_elems, "G_chi")
    images = []
    for g in inner.elements:
        a, d = split(g)
        images.append(mat_scale(rho(d), chi(a)))
    base = ExplicitRep(inner, images)
    return induce(base, ambient), base


def linear_characters(group: FiniteGroup) -> list[list[CyclotomicScalar]]:
    """All degree-one characters, by enumerating images of a generating set."""
    gens = group.generating_set()
    if not gens:
        return [[ONE]]
    comm = group.commutator_subgroup()
    quotient_order = group.order // len(comm)
    exponent = 1
    for g in gens:
        # order of g modulo the commutator subgroup
        k, y = 1, g
        while y not in comm:
            y = group.table[y][g]
            k += 1
        exponent = math.lcm(exponent, k)
    # spanning tree: every element as parent * generator
    parent: dict[int, tuple[int, int]] = {}
    order_seen = [group.e]
    seen = {group.e}
    todo = deque([group.e])
    while todo:
        y = todo.popleft()
        for k, g in enumerate(gens):
            z = group.table[y][g]
            if z not in seen:
                seen.add(z)
                parent[z] = (y, k)
                order_seen.append(z)
                todo.append(z)
    found = []
    for assign in product(range(exponent), repeat=len(gens)):
        val = {group.e: 0}
        for z in order_seen[1:]:
            y, k = parent[z]
            val[z] = (val[y] + assign[k]) % exponent
        if all(
            val[group.table[y][g]] == (val[y] + assign[k]) % exponent
            for y in range(group.order)
            for k, g in enumerate(gens)
        ):
            found.append([CyclotomicScalar.root_of_unity(exponent, val[i]) for i in range(group.order)])
            if len(found) == quotient_order:
                break
    return found


def _chars_equal(a: Sequence[CyclotomicScalar], b: Sequence[CyclotomicScalar]) -> bool:
    return all(x == y for x, y in zip(a, b))


def all_subgroups(group: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, built by joining cyclic subgroups one element at a time."""
    found: dict[frozenset[int], tuple[int, ...]] = {}
    todo = deque()
    for a in range(group.order):
        c = group.closure([a])
        if c not in found:
            found[c] = (a,)
            todo.append(c)
    while todo:
        s = todo.popleft()
        gens = found[s]
        for a in range(group.order):
            if a in s:
                continue
            t = group.closure(gens + (a,))
            if t not in found:
                found[t] = gens + (a,)
                todo.append(t)
    return list(found)


def irreducible_reps(group: FiniteGroup) -> list[ExplicitRep]:
    """A complete set of irreducible representations, found by monomial search.

    Linear characters of subgroups (largest first)
    are induced; a candidate is kept when its character has norm 1 and is
    new.  The search stops once the squared degrees add up to ``|G|``.
    Raises if the group is not reached this way (non-monomial groups).
    """
    if group.order > MAX_BRUTE_ORDER:
        raise ValueError(f"group of order {group.order} is above the brute-force limit")
    subgroups = all_subgroups(group)
    ordered = sorted(subgroups, key=lambda s: (-len(s), sorted(s)))
    found: list[tuple[ExplicitRep, list[CyclotomicScalar]]] = []
    total = 0
    for sidx in ordered:
        if total == group.order:
            break
        if (group.order // len(sidx)) ** 2 > group.order - total:
            continue
        sub = group.subgroup(sidx)
        for lam in linear_characters(sub):
            ind = induced_character(lam, sub, group)
            if inner_product(ind, ind, group) != 1:
                continue
            if any(_chars_equal(ind, c) for _, c in found):
                continue
            rep = induce(linear_rep(sub, lam), group)
            found.append((rep, ind))
            total += rep.dim**2
            if total == group.order:
                break
    if total != group.order:
        raise RuntimeError(f"monomial search found only {total} of {group.order}")
    found.sort(key=lambda rc: rc[0].dim)
    return [r for r, _ in found]


def is_irreducible(rep: ExplicitRep) -> bool:
    chi = rep.character()
    return inner_product(chi, chi, rep.group) == 1


def negative_identity_at(rep: ExplicitRep, g) -> bool:
    return mat_eq(rep(g), mat_identity(rep.dim, -ONE))
