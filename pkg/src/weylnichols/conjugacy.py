"""Conjugacy classes, centralizers and the block structure of S_n centralizers.

For ``sigma`` of type ``1^{l_1} 2^{l_2} ... n^{l_n}`` the normal form lays the
cycles out block by block: block ``j`` occupies points
``r_j + 1 .. r_j + j * l_j`` with ``r_j = sum_{k<j} k l_k``, and its ``l``-th
cycle runs through consecutive points.  The centralizer of such a ``sigma`` in
``S_n`` is a product of wreath products ``C_j wr S_{l_j}``, realised by
:func:`phi`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .groups import (
    DEFAULT_CUTOFF,
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
    signed_cycle_type,
)


def descriptor(x: WeylElement) -> str:
    """Signed cycle type as text, e.g. ``"1+ 1+ 2-"``; plain cycle type when unsigned."""
    parts = [f"{length}{'-' if par else '+'}" for length, par in signed_cycle_type(x)]
    return " ".join(parts)


@dataclass(frozen=True)
class ConjugacyClass:
    spec: GroupSpec
    representative: WeylElement
    elements: frozenset = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def descriptor(self) -> str:
        return descriptor(self.representative)

    @property
    def perm_type(self) -> CycleType:
        return cycle_type(self.representative.perm)

    @property
    def parity(self) -> int:
        return self.representative.parity()

    def label(self) -> str:
        """Descriptor for unsigned groups, descriptor plus representative otherwise."""
        if self.spec.family == "A":
            return str(self.perm_type)
        return f"{self.descriptor} @ {self.representative}"

    def __contains__(self, x: WeylElement) -> bool:
        return x in self.elements

    def sorted_elements(self) -> list[WeylElement]:
        return sorted(self.elements, key=WeylElement.sort_key)


def _orbit(x: WeylElement, gens: list[WeylElement]) -> set[WeylElement]:
    ginv = [inverse(g) for g in gens]
    seen = {x}
    todo = deque([x])
    while todo:
        y = todo.popleft()
        for g, gi in zip(gens, ginv):
            z = compose(compose(g, y), gi)
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return seen


def _check_cutoff(spec: GroupSpec, cutoff: int) -> None:
    if spec.order() > cutoff:
        raise CutoffExceeded(f"|{spec}| = {spec.order()} exceeds cutoff {cutoff}")


def class_of(x: WeylElement, spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> ConjugacyClass:
    if not spec.contains(x):
        raise ValueError(f"{x} is not in {spec}")
    _check_cutoff(spec, cutoff)
    orb = _orbit(x, spec.generators())
    rep = min(orb, key=WeylElement.sort_key)
    return ConjugacyClass(spec, rep, frozenset(orb))


def all_classes(spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> list[ConjugacyClass]:
    """All classes, sorted by canonical representative."""
    _check_cutoff(spec, cutoff)
    seen: set[WeylElement] = set()
    out = []
    gens = spec.generators()
    for x in enumerate_group(spec, cutoff):
        if x in seen:
            continue
        orb = _orbit(x, gens)
        seen |= orb
        out.append(ConjugacyClass(spec, min(orb, key=WeylElement.sort_key), frozenset(orb)))
    out.sort(key=lambda c: c.representative.sort_key())
    return out


@dataclass(frozen=True)
class Centralizer:
    elements: frozenset
    generators: tuple
    abelian_part: frozenset | None = None  # A^sigma as sign masks, for x = (e, sigma)
    perm_part: frozenset | None = None  # D^sigma as permutations

    @property
    def order(self) -> int:
        return len(self.elements)


def _small_generating_set(elements: list[WeylElement]) -> tuple[WeylElement, ...]:
    """Greedy generating set: add elements until the generated subgroup is everything."""
    if not elements:
        return ()
    n = elements[0].rank
    e = WeylElement.identity(n)
    target = set(elements)
    gens: list[WeylElement] = []
    span = {e}
    for g in sorted(elements, key=WeylElement.sort_key):
        if g in span:
            continue
        gens.append(g)
        span = _closure(gens, e)
        if span == target:
            break
    return tuple(gens)


def _closure(gens: list, identity) -> set:
    seen = {identity}
    todo = deque([identity])
    while todo:
        y = todo.popleft()
        for g in gens:
            z = y * g
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return seen


def centralizer(x: WeylElement, spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> Centralizer:
    """Brute-force centralizer; for ``x = (e, sigma)`` also the split ``A^sigma x| D^sigma``."""
    if not spec.contains(x):
        raise ValueError(f"{x} is not in {spec}")
    elems = [g for g in enumerate_group(spec, cutoff) if compose(g, x) == compose(x, g)]
    a_part = d_part = None
    if x.sign == 0:
        sigma = x.perm
        a_part = frozenset(m for m in spec.sign_masks() if act(sigma, m) == m)
        d_part = frozenset(g.perm for g in elems if g.sign == 0)
        split = {WeylElement(m, d) for m in a_part for d in d_part}
        if split != set(elems):
            raise AssertionError("centralizer does not factor as A^sigma x| D^sigma")
    return Centralizer(frozenset(elems), _small_generating_set(elems), a_part, d_part)


def perm_centralizer(sigma: Permutation) -> list[Permutation]:
    from .groups import symmetric_group

    return [t for t in symmetric_group(sigma.degree) if t * sigma == sigma * t]


@dataclass(frozen=True)
class BlockData:
    """Offsets ``r_j`` and point blocks ``Y_j`` of a cycle type (1-based points)."""

    ctype: CycleType
    offsets: dict
    blocks: dict

    @classmethod
    def of(cls, ctype: CycleType) -> BlockData:
        offsets, blocks, r = {}, {}, 0
        for j in range(1, ctype.n + 1):
            offsets[j] = r
            lam = ctype.count(j)
            blocks[j] = frozenset(range(r + 1, r + j * lam + 1))
            r += j * lam
        return cls(ctype, offsets, blocks)

    def cycle_points(self, j: int, l: int) -> list[int]:
        """Points of the ``l``-th ``j``-cycle (1-based ``l``)."""
        start = self.offsets[j] + (l - 1) * j + 1
        return list(range(start, start + j))


def block_data(sigma: Permutation) -> BlockData:
    return BlockData.of(cycle_type(sigma))


def _ordered_cycles(sigma: Permutation) -> list[tuple[int, ...]]:
    cyc = sigma.cycles(include_fixed=True)
    return sorted(cyc, key=lambda c: (len(c), c[0]))


def normalize(sigma: Permutation) -> tuple[Permutation, Permutation]:
    """Return ``(gamma, sigma')`` with ``sigma' = gamma sigma gamma^{-1}`` in block layout.

    Cycles are taken in order of length, then least point, each read from its
    least point; ``gamma`` sends them onto consecutive points.
    """
    n = sigma.degree
    img = [0] * n
    p = 0
    for c in _ordered_cycles(sigma):
        for q in c:
            img[q - 1] = p
            p += 1
    gamma = Permutation(tuple(img))
    return gamma, gamma * sigma * gamma.inverse()


def is_normal_form(sigma: Permutation) -> bool:
    return sigma == cycle_type(sigma).representative()


def standard_generators(sigma: Permutation) -> dict:
    """The generators ``A_{l,j}`` and ``B_{h,j}`` of the S_n-centralizer of a normal-form ``sigma``.

    Returns ``{"A": {(l, j): perm}, "B": {(h, j): perm}}``; for ``j = 1`` the
    ``A_{l,1}`` are identities.
    """
    if not is_normal_form(sigma):
        raise ValueError(f"{sigma} is not in block normal form; call normalize() first")
    n = sigma.degree
    bd = block_data(sigma)
    gens_a, gens_b = {}, {}
    for j in bd.ctype.lengths():
        lam = bd.ctype.count(j)
        for l in range(1, lam + 1):
            gens_a[(l, j)] = Permutation.from_cycles([bd.cycle_points(j, l)] if j > 1 else [], n)
        for h in range(1, lam):
            left, right = bd.cycle_points(j, h), bd.cycle_points(j, h + 1)
            gens_b[(h, j)] = Permutation.from_cycles([[x, y] for x, y in zip(left, right)], n)
    return {"A": gens_a, "B": gens_b}


@dataclass(frozen=True, slots=True)
class WreathElement:
    """``(f, theta)`` in ``(C_l)^m x| S_m``; ``f`` holds exponents of ``g_l``.

    Multiplication: ``(f, s)(f', s') = (f + s.f', s s')`` with
    ``(s.f')_i = f'_{s^{-1}(i)}``.
    """

    l: int
    f: tuple[int, ...]
    theta: Permutation

    def __mul__(self, other: WreathElement) -> WreathElement:
        moved = [0] * len(self.f)
        for i, v in enumerate(other.f):
            moved[self.theta.images[i]] = v
        f = tuple((a + b) % self.l for a, b in zip(self.f, moved))
        return WreathElement(self.l, f, self.theta * other.theta)

    def inverse(self) -> WreathElement:
        tinv = self.theta.inverse()
        moved = [0] * len(self.f)
        for i, v in enumerate(self.f):
            moved[tinv.images[i]] = (-v) % self.l
        return WreathElement(self.l, tuple(moved), tinv)

    @classmethod
    def identity(cls, l: int, m: int) -> WreathElement:
        return cls(l, (0,) * m, Permutation.identity(m))


def wreath_elements(l: int, m: int) -> list[WreathElement]:
    from itertools import product

    from .groups import symmetric_group

    return [WreathElement(l, f, t) for t in symmetric_group(m) for f in product(range(l), repeat=m)]


@dataclass(frozen=True)
class PhiImage:
    """Per cycle length ``j``, the image of tau in ``C_j wr S_{l_j}``."""

    blocks: tuple  # tuple of (j, WreathElement)

    def __mul__(self, other: PhiImage) -> PhiImage:
        return PhiImage(tuple((j, a * b) for (j, a), (_, b) in zip(self.blocks, other.blocks)))

    def block(self, j: int) -> WreathElement:
        for k, w in self.blocks:
            if k == j:
                return w
        raise KeyError(j)


def cycle_labels(sigma: Permutation) -> dict:
    """``a_{i,k}`` per block: ``labels[j][i-1][k]`` is a 1-based point with ``sigma(a_{i,k}) = a_{i,k+1}``."""
    gamma, _ = normalize(sigma)
    ginv = gamma.inverse()
    bd = block_data(sigma)
    labels = {}
    for j in bd.ctype.lengths():
        labels[j] = [[ginv(p) for p in bd.cycle_points(j, i)] for i in range(1, bd.ctype.count(j) + 1)]
    return labels


def phi(tau: Permutation, sigma: Permutation) -> PhiImage:
    """Isomorphism from the S_n-centralizer of ``sigma`` onto ``prod_j C_j wr S_{l_j}``.

    With ``tau^{-1}(a_{i,0}) = a_{p,k}`` set ``theta(tau)^{-1}(i) = p`` and
    ``f_tau(i) = k``.
    """
    if tau * sigma != sigma * tau:
        raise ValueError(f"{tau} does not centralize {sigma}")
    labels = cycle_labels(sigma)
    tinv = tau.inverse()
    blocks = []
    for j, cyc in labels.items():
        where = {pt: (p, k) for p, c in enumerate(cyc) for k, pt in enumerate(c)}
        m = len(cyc)
        theta_inv = [0] * m
        f = [0] * m
        for i in range(m):
            p, k = where[tinv(cyc[i][0])]
            theta_inv[i] = p
            f[i] = k
        theta = Permutation(tuple(theta_inv)).inverse()
        blocks.append((j, WreathElement(j, tuple(f), theta)))
    return PhiImage(tuple(blocks))


def phi_inverse(image: PhiImage, sigma: Permutation) -> Permutation:
    """Inverse of :func:`phi`: ``tau(a_{p,x}) = a_{theta(p), x - f(theta(p))}``."""
    labels = cycle_labels(sigma)
    img = list(range(sigma.degree))
    for j, w in image.blocks:
        cyc = labels[j]
        for p, c in enumerate(cyc):
            q = w.theta.images[p]
            shift = w.f[q]
            for x, pt in enumerate(c):
                img[pt - 1] = cyc[q][(x - shift) % j] - 1
    return Permutation(tuple(img))


def embed_perm(p: Permutation) -> WeylElement:
    return WeylElement.from_perm(p)


def is_conjugate_via(x: WeylElement, y: WeylElement, g: WeylElement) -> bool:
    return conjugate(x, g) == y
