"""Representations of centralizers in S_n and in A x| S_n.

Irreducible representations of the S_n-centralizer of ``sigma`` are described
block by block: for each cycle length ``j`` an exponent tuple ``t_j`` (a
character of ``(C_j)^{l_j}``) and a representation ``rho_j`` of its stabilizer
in ``S_{l_j}``; the representation of the block is the induced
``theta_{chi^{t_j}, rho_j}`` pulled back through :func:`~weylnichols.conjugacy.phi`.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .conjugacy import perm_centralizer, phi, wreath_elements
from .cyclotomic import CyclotomicScalar, kron, mat_identity
from .finite import (
    ExplicitRep,
    FiniteGroup,
    inner_product,
    irreducible_reps,
    linear_rep,
    restrict,
    theta,
    trivial_rep,
)
from .groups import (
    CycleType,
    GroupSpec,
    Permutation,
    WeylElement,
    act,
    bits_to_mask,
    cycle_type,
    enumerate_group,
    symmetric_group,
)

LABELS = ("epsilon", "sgn")


@dataclass(frozen=True)
class AbelianCharacter:
    """``chi_l^{t_1} (x) ... (x) chi_l^{t_m}`` on ``(C_l)^m``; ``l = 2`` for sign characters."""

    l: int
    exps: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= t < self.l for t in self.exps):
            raise ValueError(f"exponents {self.exps} out of range for C_{self.l}")

    @property
    def weight(self) -> int:
        return sum(1 for t in self.exps if t)

    def value(self, a: Sequence[int]) -> CyclotomicScalar:
        """``chi(g_l^{a_1}, ..., g_l^{a_m})`` with the fixed ``chi_l(g_l) = zeta_l^{a_l}``."""
        k = chosen_exponent(self.l) * sum(t * x for t, x in zip(self.exps, a))
        return CyclotomicScalar.root_of_unity(self.l, k)

    def value_on_mask(self, mask: int) -> CyclotomicScalar:
        if self.l != 2:
            raise ValueError("sign masks only pair with C_2 characters")
        return CyclotomicScalar.rational(-1 if (bits_to_mask(self.exps) & mask).bit_count() % 2 else 1)

    def act(self, h: Permutation) -> AbelianCharacter:
        """``(h . chi)(a) = chi(h^{-1} . a)``: exponents move like the coordinates."""
        moved = [0] * len(self.exps)
        for i, t in enumerate(self.exps):
            moved[h.images[i]] = t
        return AbelianCharacter(self.l, tuple(moved))


def _nu_limit(spec: GroupSpec) -> int:
    return {"A": 0, "D": spec.rank - 1, "B": spec.rank}[spec.family]


def chi_nu(nu: int, spec: GroupSpec) -> AbelianCharacter:
    """``chi^{(nu)}``: ``nu`` leading copies of ``chi_2``, trivial on the rest."""
    if not 0 <= nu <= _nu_limit(spec):
        raise ValueError(f"nu = {nu} outside 0..{_nu_limit(spec)} for family {spec.family}")
    n = spec.rank
    return AbelianCharacter(2, (1,) * nu + (0,) * (n - nu))


def young_stabilizer(nu: int, n: int) -> list[Permutation]:
    """``S_{1..nu} x S_{nu+1..n}`` as a list of permutations."""
    return [p for p in symmetric_group(n) if all(p.images[i] < nu for i in range(nu))]


def character_stabilizer(chi: AbelianCharacter, spec: GroupSpec) -> list[Permutation]:
    """Brute force: ``h`` with ``chi(h^{-1} . a) = chi(a)`` for all ``a`` in the group's A."""
    masks = spec.sign_masks()
    base = [chi.value_on_mask(m) for m in masks]
    out = []
    for h in symmetric_group(spec.rank):
        hinv = h.inverse()
        if all(chi.value_on_mask(act(hinv, m)) == v for m, v in zip(masks, base)):
            out.append(h)
    return out


def character_orbit_representatives(spec: GroupSpec) -> list[int]:
    """Values of ``nu`` whose ``chi^{(nu)}`` are pairwise in distinct S_n-orbits on A-hat."""
    masks = spec.sign_masks()
    seen: list[tuple] = []
    out = []
    for nu in range(_nu_limit(spec) + 1):
        chi = chi_nu(nu, spec)
        orbit_sig = sorted(
            tuple(chi.act(h).value_on_mask(m).to_rational() for m in masks)
            for h in symmetric_group(spec.rank)
        )
        key = tuple(orbit_sig[0])
        if key not in seen:
            seen.append(key)
            out.append(nu)
    return out


def stabilizer_full(chi: AbelianCharacter) -> bool:
    return len(set(chi.exps)) <= 1


def stabilizer_brute(chi: AbelianCharacter) -> list[Permutation]:
    """Stabilizer of ``chi`` in ``S_m`` under the coordinate action."""
    return [h for h in symmetric_group(len(chi.exps)) if chi.act(h) == chi]


# descriptors -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockRep:
    """Block ``j``: exponents ``t`` (one per j-cycle) and a stabilizer representation.

    ``rho`` is ``"epsilon"``, ``"sgn"`` (restriction of the sign of
    ``S_{l_j}``), an int (degree only), or an :class:`ExplicitRep` over the
    stabilizer of ``chi^t``.
    """

    j: int
    t: tuple[int, ...]
    rho: object = "epsilon"

    def __post_init__(self):
        if any(not 0 <= x < self.j for x in self.t):
            raise ValueError(f"exponent out of range 0..{self.j - 1} in block {self.j}: {self.t}")
        if isinstance(self.rho, str) and self.rho not in LABELS:
            raise ValueError(f"unknown representation label {self.rho!r}")

    @property
    def lam(self) -> int:
        return len(self.t)

    def rho_degree(self) -> int:
        if isinstance(self.rho, str):
            return 1
        if isinstance(self.rho, int):
            return self.rho
        return self.rho.dim

    def stabilizer_index(self) -> int:
        """``[S_l : (S_l)_{chi^t}]``, a multinomial coefficient."""
        out = math.factorial(self.lam)
        for c in Counter(self.t).values():
            out //= math.factorial(c)
        return out

    def degree(self) -> int:
        return self.stabilizer_index() * self.rho_degree()

    def is_one_dimensional(self) -> bool:
        return self.degree() == 1

    def rho_label(self) -> str:
        """Label with the ``sgn``/``epsilon`` coincidence on ``S_1`` and ``S_0`` resolved."""
        if isinstance(self.rho, str):
            return "epsilon" if self.lam <= 1 else self.rho
        return "other"


@dataclass(frozen=True)
class RepDescriptor:
    blocks: tuple[BlockRep, ...]
    nu: int | None = None
    rho_prime: str | None = None
    rho_prime_prime: str | None = None
    chi: tuple[int, ...] | None = None

    def block(self, j: int) -> BlockRep | None:
        for b in self.blocks:
            if b.j == j:
                return b
        return None

    def cycle_type(self) -> CycleType:
        n = sum(b.j * b.lam for b in self.blocks)
        lam = [0] * n
        for b in self.blocks:
            lam[b.j - 1] += b.lam
        return CycleType(tuple(lam))

    def degree(self) -> int:
        out = 1
        for b in self.blocks:
            out *= b.degree()
        return out

    def for_type(self, ctype: CycleType) -> RepDescriptor:
        """Check the shape against ``ctype``, filling absent blocks with zero exponents and ``epsilon``."""
        blocks = []
        for j in ctype.lengths():
            b = self.block(j)
            lam = ctype.count(j)
            if b is None:
                b = BlockRep(j, (0,) * lam)
            elif b.lam != lam:
                raise ValueError(f"block {j} has {b.lam} exponents but the type has {lam} cycles")
            blocks.append(b)
        extra = {b.j for b in self.blocks} - set(ctype.lengths())
        if any(self.block(j).lam for j in extra):
            raise ValueError(f"blocks {sorted(extra)} do not occur in type {ctype}")
        return RepDescriptor(tuple(blocks), self.nu, self.rho_prime, self.rho_prime_prime, self.chi)

    @classmethod
    def one_dimensional(cls, ctype: CycleType, t: dict[int, int], rho: dict[int, str] | None = None) -> RepDescriptor:
        rho = rho or {}
        return cls(tuple(BlockRep(j, (t.get(j, 0),) * ctype.count(j), rho.get(j, "epsilon")) for j in ctype.lengths()))

    def to_json(self) -> dict:
        out: dict = {"blocks": []}
        for b in self.blocks:
            rho = b.rho if isinstance(b.rho, str) else {"degree": b.rho_degree()}
            out["blocks"].append({"j": b.j, "t": list(b.t), "rho": rho})
        if self.nu is not None:
            out["nu"] = self.nu
        if self.chi is not None:
            out["chi"] = list(self.chi)
        if self.rho_prime is not None:
            out["rhoPrime"] = self.rho_prime
        if self.rho_prime_prime is not None:
            out["rhoPrimePrime"] = self.rho_prime_prime
        return out

    @classmethod
    def from_json(cls, data: dict) -> RepDescriptor:
        if not isinstance(data, dict):
            raise ValueError("descriptor must be a JSON object")
        blocks = []
        for b in data.get("blocks", []):
            rho = b.get("rho", "epsilon")
            if isinstance(rho, dict):
                rho = int(rho["degree"])
            blocks.append(BlockRep(int(b["j"]), tuple(int(x) for x in b["t"]), rho))
        chi = data.get("chi")
        return cls(
            tuple(blocks),
            data.get("nu"),
            data.get("rhoPrime"),
            data.get("rhoPrimePrime"),
            tuple(chi) if chi is not None else None,
        )


def distinguished_element(desc: RepDescriptor) -> Fraction:
    """``sum_{j,k} t_{j,k} / k + 1/2``."""
    xi = Fraction(1, 2)
    for b in desc.blocks:
        for t in b.t:
            if not 0 <= t <= b.j - 1:
                raise ValueError(f"exponent {t} out of range for cycle length {b.j}")
            xi += Fraction(t, b.j)
    return xi


def chosen_exponent(k: int) -> int:
    """Least ``a`` prime to ``k`` with ``a (k - 1) = 1 mod k``, so ``chi_k(g_k) = zeta_k^a``."""
    for a in range(1, k + 1):
        if math.gcd(a, k) == 1 and (a * (k - 1)) % k == 1 % k:
            return a
    raise AssertionError("unreachable: k - 1 is its own inverse mod k")


def char_value_at_sigma(desc: RepDescriptor, sigma: Permutation) -> CyclotomicScalar:
    """Character value at ``sigma`` via ``prod chi_k(g_k)^{(k-1) t_{j,k}} * deg``."""
    desc = desc.for_type(cycle_type(sigma))
    value = CyclotomicScalar.rational(desc.degree())
    for b in desc.blocks:
        root = CyclotomicScalar.root_of_unity(b.j, chosen_exponent(b.j))
        for t in b.t:
            value = value * root ** ((b.j - 1) * t)
    return value


def is_minus_one_type(desc: RepDescriptor, sigma: Permutation) -> bool:
    desc.for_type(cycle_type(sigma))
    return distinguished_element(desc).denominator == 1 and sigma.order() % 2 == 0


def enumerate_one_dim_reps(sigma: Permutation) -> list[RepDescriptor]:
    """Every degree-one representation: constant exponents per block, ``epsilon``/``sgn`` on ``S_{l_j}``."""
    ctype = cycle_type(sigma)
    choices = []
    for j in ctype.lengths():
        rhos = LABELS if ctype.count(j) >= 2 else ("epsilon",)
        choices.append([(j, t, r) for t in range(j) for r in rhos])
    out = []
    for combo in product(*choices):
        out.append(RepDescriptor(tuple(BlockRep(j, (t,) * ctype.count(j), r) for j, t, r in combo)))
    return out


# explicit realizations ------------------------------------------------------


@lru_cache(maxsize=None)
def wreath_group(l: int, m: int) -> FiniteGroup:
    return FiniteGroup(wreath_elements(l, m), f"C{l} wr S{m}")


@lru_cache(maxsize=None)
def _perm_group(perms: tuple) -> FiniteGroup:
    return FiniteGroup(list(perms))


def stabilizer_group(chi: AbelianCharacter) -> FiniteGroup:
    return _perm_group(tuple(stabilizer_brute(chi)))


def label_rep(label: str, group: FiniteGroup) -> ExplicitRep:
    if label == "epsilon":
        return trivial_rep(group)
    return linear_rep(group, [CyclotomicScalar.rational(p.sign()) for p in group.elements])


def block_theta(b: BlockRep) -> ExplicitRep:
    """``theta_{chi^t, rho}`` on ``C_j wr S_{l_j}`` as explicit matrices."""
    chi = AbelianCharacter(b.j, b.t)
    stab = stabilizer_group(chi)
    if isinstance(b.rho, str):
        rho = label_rep(b.rho, stab)
    elif isinstance(b.rho, ExplicitRep):
        rho = b.rho
        if set(rho.group.elements) != set(stab.elements):
            raise ValueError("explicit rho is not a representation of the stabilizer")
    else:
        raise ValueError("degree-only descriptors cannot be realized")
    rep, _ = theta(wreath_group(b.j, b.lam), lambda w: (w.f, w.theta), chi.value, rho)
    return rep


def centralizer_group(sigma: Permutation) -> FiniteGroup:
    return FiniteGroup(perm_centralizer(sigma), "S_n^sigma")


def realize(desc: RepDescriptor, sigma: Permutation) -> ExplicitRep:
    """The representation ``(x)_j theta_j . phi_j`` of the S_n-centralizer of ``sigma``."""
    desc = desc.for_type(cycle_type(sigma))
    group = centralizer_group(sigma)
    thetas = {b.j: block_theta(b) for b in desc.blocks}
    images = []
    for tau in group.elements:
        img = phi(tau, sigma)
        mat = mat_identity(1)
        for j, w in img.blocks:
            mat = kron(mat, thetas[j](w))
        images.append(mat)
    return ExplicitRep(group, images)


def explicit_minus_one_type(desc: RepDescriptor, sigma: Permutation) -> bool:
    rep = realize(desc, sigma)
    return sigma.order() % 2 == 0 and rep.is_scalar_at(sigma, -1)


# semidirect products A x| S_n ----------------------------------------------


def weyl_group(spec: GroupSpec) -> FiniteGroup:
    return FiniteGroup(list(enumerate_group(spec)), str(spec))


def _split_weyl(g: WeylElement):
    return g.sign, g.perm


@dataclass
class InducedRep:
    """``theta_{chi, rho}`` on a group of signed permutations, with the data it was induced from."""

    chi_mask: int
    stabilizer: FiniteGroup
    rho: ExplicitRep
    rep: ExplicitRep
    inner: ExplicitRep = field(repr=False)

    @property
    def dim(self) -> int:
        return self.rep.dim


def induce(chi_mask: int, rho: ExplicitRep, ambient: FiniteGroup) -> InducedRep:
    """``(chi (x) rho)`` induced from ``A x| D_chi`` to ``ambient`` (a group of :class:`WeylElement`).

    ``chi`` is the sign character with bit pattern ``chi_mask``; ``rho`` must
    be a representation of permutations that fix ``chi`` on the A-part of
    ``ambient``.
    """
    a_part = [g.sign for g in ambient.elements if g.perm.is_identity()]
    for d in rho.group.elements:
        dinv = d.inverse()
        for m in a_part:
            if ((act(dinv, m) ^ m) & chi_mask).bit_count() % 2:
                raise ValueError("rho's group does not stabilize chi")

    def chi(mask: int) -> CyclotomicScalar:
        return CyclotomicScalar.rational(-1 if (mask & chi_mask).bit_count() % 2 else 1)

    rep, inner = theta(ambient, _split_weyl, chi, rho)
    return InducedRep(chi_mask, rho.group, rho, rep, inner)


def semidirect_irreducibles(spec: GroupSpec) -> list[InducedRep]:
    """All ``theta_{chi^{(nu)}, rho}``: ``nu`` over orbit representatives, ``rho`` over stabilizer irreducibles."""
    group = weyl_group(spec)
    out = []
    for nu in character_orbit_representatives(spec):
        chi = chi_nu(nu, spec)
        stab = FiniteGroup(character_stabilizer(chi, spec), f"stab{nu}")
        for rho in irreducible_reps(stab):
            out.append(induce(bits_to_mask(chi.exps), rho, group))
    return out


def sign_characters_of_invariants(a_masks: Sequence[int], n: int) -> list[int]:
    """Distinct characters of a subgroup of ``(C_2)^n``, each as a least bit mask."""
    seen = {}
    for delta in range(2**n):
        key = tuple((delta & m).bit_count() % 2 for m in a_masks)
        seen.setdefault(key, delta)
    return sorted(seen.values())


def sub_rsr(rho: ExplicitRep, rho_prime: ExplicitRep) -> bool:
    """Whether ``rho`` occurs in the restriction of ``rho_prime`` to ``rho``'s group."""
    sub = rho.group
    if not set(sub.elements) <= set(rho_prime.group.elements):
        raise ValueError("rho's group is not a subgroup of rho_prime's group")
    res = restrict(rho_prime, sub)
    return inner_product(rho.character(), res.character(), sub) >= 1


is_sub_rsr = sub_rsr


def tensor_rep(r1: ExplicitRep, r2: ExplicitRep, group: FiniteGroup, proj1, proj2) -> ExplicitRep:
    """``r1 (x) r2`` on ``group`` via projections onto the factors."""
    return ExplicitRep(group, [kron(r1(proj1(g)), r2(proj2(g))) for g in group.elements])


def scalar_value(rep: ExplicitRep, g) -> CyclotomicScalar | None:
    """The scalar ``c`` when ``rep(g) = c * id``, else ``None``."""
    m = rep(g)
    c = m[0][0]
    return c if rep.is_scalar_at(g, c) else None




def stabilizer_on(chi_mask: int, a_masks: Sequence[int], perms: Sequence[Permutation]) -> list[Permutation]:
    """Permutations ``h`` with ``chi(h^{-1} . a) = chi(a)`` for every ``a`` in ``a_masks``."""
    out = []
    for h in perms:
        hinv = h.inverse()
        if all(((act(hinv, m) ^ m) & chi_mask).bit_count() % 2 == 0 for m in a_masks):
            out.append(h)
    return out


@dataclass(frozen=True)
class MinusOneAgreement:
    sigma: Permutation
    chi_mask: int
    rho_dim: int
    theta_dim: int
    theta_minus_one: bool
    rho_minus_one: bool

    @property
    def agrees(self) -> bool:
        return self.theta_minus_one == self.rho_minus_one


def minus_one_agreement(spec: GroupSpec) -> list[MinusOneAgreement]:
    """For each ``sigma`` in ``S_n``, compare ``theta(sigma) = -id`` on ``G^sigma`` with ``rho(sigma) = -id``.

    ``chi`` runs over the distinct characters of ``A^sigma`` and ``rho`` over
    the irreducibles of the stabilizer of ``chi`` in ``S_n^sigma``.
    """
    minus = CyclotomicScalar.rational(-1)
    out = []
    for sigma in symmetric_group(spec.rank):
        sig = WeylElement.from_perm(sigma)
        cent = [g for g in enumerate_group(spec) if g * sig == sig * g]
        ambient = FiniteGroup(cent, "G^sigma")
        a_masks = [g.sign for g in cent if g.perm.is_identity()]
        d_sigma = [g.perm for g in cent if g.sign == 0]
        for chi_mask in sign_characters_of_invariants(a_masks, spec.rank):
            stab = FiniteGroup(stabilizer_on(chi_mask, a_masks, d_sigma), "D_chi^sigma")
            for rho in irreducible_reps(stab):
                ind = induce(chi_mask, rho, ambient)
                out.append(
                    MinusOneAgreement(
                        sigma,
                        chi_mask,
                        rho.dim,
                        ind.dim,
                        ind.rep.is_scalar_at(sig, minus),
                        rho.is_scalar_at(sigma, minus),
                    )
                )
    return out
