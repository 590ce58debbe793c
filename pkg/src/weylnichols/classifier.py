"""Verdicts on Nichols algebras over classical Weyl groups.

The classifier only reports what the known criteria decide:

* a reducible module with two supports outside ``A`` is infinite dimensional
  unless ``n = 4``, every such support has type ``2^2`` and they share one
  sign parity;
* a module supported on the central element ``(g_2, ..., g_2)`` whose
  characters ``chi^{(nu_i)}`` all have odd ``nu_i`` is finite dimensional;
* an irreducible matched module whose rep fits none of the nine
  ``-1``-type shapes is infinite dimensional.

Anything else is ``Unknown``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .cyclotomic import CyclotomicScalar
from .finite import FiniteGroup, irreducible_reps
from .groups import (
    CycleType,
    GroupSpec,
    Permutation,
    WeylElement,
    bits_to_mask,
    cycle_type,
    mask_to_bits,
)
from .repkit import (
    AbelianCharacter,
    BlockRep,
    RepDescriptor,
    character_stabilizer,
    induce,
    is_minus_one_type,
    weyl_group,
)


class Outcome(str, Enum):
    INFINITE = "Infinite"
    FINITE = "Finite"
    MINUS_ONE_CANDIDATE = "MinusOneTypeCandidate"
    UNKNOWN = "Unknown"


@dataclass
class Verdict:
    outcome: Outcome
    trace: list[tuple[str, str]] = field(default_factory=list)
    cases: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "outcome": self.outcome.value,
            "trace": [{"id": i, "justification": j} for i, j in self.trace],
        }
        if self.cases:
            out["cases"] = list(self.cases)
        return out


# normalization and matching -------------------------------------------------


def normalize_character(sigma: Permutation, chi: AbelianCharacter) -> tuple[int, Permutation, Permutation]:
    """Move the support ``W`` of ``chi`` onto ``{1..nu}``.

    Returns ``(nu, sigma', phi)`` with ``phi(W) = {1..nu}`` (order preserving on
    ``W`` and on its complement) and ``sigma' = phi sigma phi^{-1}``.
    """
    n = sigma.degree
    if chi.l != 2 or len(chi.exps) != n:
        raise ValueError(f"expected a sign character with {n} bits, got {chi}")
    support = [i for i in range(n) if chi.exps[i]]
    rest = [i for i in range(n) if not chi.exps[i]]
    images = [0] * n
    for k, i in enumerate(support + rest):
        images[i] = k
    phi = Permutation(tuple(images))
    return len(support), phi * sigma * phi.inverse(), phi


def is_matched(sigma: Permutation, nu: int) -> bool:
    """Whether every moved point of ``sigma`` lies on one side of the cut after ``nu``."""
    if not 0 <= nu <= sigma.degree:
        raise ValueError(f"nu = {nu} outside 0..{sigma.degree}")
    moved = sigma.support()
    return all(p <= nu for p in moved) or all(p > nu for p in moved)


def matched_side(sigma: Permutation, nu: int) -> str:
    """``"low"`` when ``sigma`` lives on ``{1..nu}``, ``"high"`` otherwise (the identity counts as low)."""
    if not is_matched(sigma, nu):
        raise ValueError(f"{sigma} straddles the cut after {nu}")
    return "low" if all(p <= nu for p in sigma.support()) else "high"


def adjusted_fixed_points(sigma: Permutation, nu: int) -> int:
    """``lambda_1'``: fixed points of ``sigma`` on its own side of the cut."""
    lam1 = cycle_type(sigma).count(1)
    n = sigma.degree
    return lam1 - (n - nu) if matched_side(sigma, nu) == "low" else lam1 - nu


def restricted_type(sigma: Permutation, nu: int) -> CycleType:
    """Cycle type of ``sigma`` as a permutation of its own side of the cut."""
    full = cycle_type(sigma)
    lam1 = adjusted_fixed_points(sigma, nu)
    lam = list(full.lam)
    lam[0] = lam1
    size = sum((i + 1) * c for i, c in enumerate(lam))
    return CycleType(tuple(lam[:size]) if size else ())


def _restrict_descriptor(desc: RepDescriptor, ctype: CycleType) -> RepDescriptor:
    """Fit ``desc`` to ``ctype``; a block of fixed points only carries a label, so its length is adjusted."""
    b1 = desc.block(1)
    if b1 is not None and b1.lam != ctype.count(1):
        label = b1.rho if isinstance(b1.rho, str) else "epsilon"
        blocks = [b for b in desc.blocks if b.j != 1]
        if ctype.count(1):
            blocks.insert(0, BlockRep(1, (0,) * ctype.count(1), label))
        desc = RepDescriptor(tuple(blocks), desc.nu, desc.rho_prime, desc.rho_prime_prime, desc.chi)
    return desc.for_type(ctype)


def _one_dim_label(b: BlockRep | None) -> bool:
    """``mu_1 = sgn or epsilon``: a one-dimensional rep of ``S_{lambda_1'}`` (absent block counts)."""
    return b is None or isinstance(b.rho, str) or b.rho_degree() == 1


def _is_chi(b: BlockRep | None, t: tuple[int, ...], labels: tuple[str, ...] = ("epsilon", "sgn")) -> bool:
    return b is not None and b.t == t and isinstance(b.rho, str) and b.rho_label() in labels


def _only(ctype: CycleType, allowed: set[int]) -> bool:
    return set(ctype.lengths()) <= allowed


def _case_matches(case: str, ctype: CycleType, desc: RepDescriptor) -> bool:
    lam1 = ctype.count(1)
    b = desc.block
    c = ctype.count
    if case == "(i)":
        return _only(ctype, {1, 2}) and c(2) == 1 and _one_dim_label(b(1)) and _is_chi(b(2), (1,))
    if case == "(ii)":
        odd = [j for j in ctype.lengths() if j % 2 and j > 1]
        if lam1 or c(2) != 1 or not odd or not _only(ctype, {2, *odd}):
            return False
        # the odd blocks are constrained only through their character part
        return _is_chi(b(2), (1,)) and all(all(t == 0 for t in b(j).t) for j in odd)
    if case == "(iii)":
        if not (_only(ctype, {1, 2}) and c(2) == 3 and _one_dim_label(b(1))):
            return False
        labels = ("sgn",) if lam1 > 0 else ("epsilon", "sgn")
        return _is_chi(b(2), (1, 1, 1), labels)
    if case == "(iv)":
        return _only(ctype, {2}) and c(2) == 5 and _is_chi(b(2), (1,) * 5)
    if case == "(v)":
        return _only(ctype, {1, 4}) and c(4) == 1 and _one_dim_label(b(1)) and _is_chi(b(4), (2,))
    if case == "(vi)":
        return (
            _only(ctype, {1, 4})
            and c(4) == 2
            and _one_dim_label(b(1))
            and (_is_chi(b(4), (1, 1), ("sgn",)) or _is_chi(b(4), (3, 3), ("sgn",)))
        )
    if case == "(vii)":
        if not (_only(ctype, {2, 4}) and c(2) == 1 and c(4) == 1):
            return False
        return (_is_chi(b(2), (1,)) and _is_chi(b(4), (0,))) or (_is_chi(b(2), (0,)) and _is_chi(b(4), (2,)))
    if case == "(viii)":
        return (
            _only(ctype, {2, 4})
            and c(2) == 1
            and c(4) == 2
            and _is_chi(b(2), (0,))
            and (_is_chi(b(4), (1, 1), ("sgn",)) or _is_chi(b(4), (3, 3), ("sgn",)))
        )
    if case == "(ix)":
        if not (_only(ctype, {2, 4}) and c(2) == 2 and c(4) == 1):
            return False
        return b(2).is_one_dimensional() and _is_chi(b(4), (2,))
    raise KeyError(case)


CASES = ("(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)", "(ix)")


def match_theorem2_case(sigma: Permutation, nu: int, desc: RepDescriptor) -> list[str]:
    """Every one of the nine ``-1``-type shapes that ``(sigma, mu)`` fits.

    ``desc`` describes ``mu``, the factor of the stabilizer representation on
    the side of the cut that carries ``sigma``; its fixed-point block has
    ``lambda_1'`` entries (a block of any length is accepted and resized).
    """
    if not is_matched(sigma, nu):
        raise ValueError(f"{sigma} is not matched with nu = {nu}")
    ctype = restricted_type(sigma, nu)
    desc = _restrict_descriptor(desc, ctype)
    return [case for case in CASES if _case_matches(case, ctype, desc)]


def restricted_minus_one_type(sigma: Permutation, nu: int, desc: RepDescriptor) -> bool:
    """The ``xi`` criterion evaluated on the side of the cut that carries ``sigma``."""
    ctype = restricted_type(sigma, nu)
    desc = _restrict_descriptor(desc, ctype)
    if ctype.n == 0:
        return False
    rep = ctype.representative()
    return is_minus_one_type(desc, rep) and sigma.order() % 2 == 0


# irreducible modules -------------------------------------------------------


def _as_permutation(sigma) -> Permutation | None:
    if isinstance(sigma, Permutation):
        return sigma
    if isinstance(sigma, WeylElement):
        return sigma.perm if sigma.sign == 0 else None
    raise TypeError(f"expected a permutation or group element, got {type(sigma).__name__}")


def classify_irreducible(sigma, chi: AbelianCharacter, desc: RepDescriptor, spec: GroupSpec | None = None) -> Verdict:
    """Verdict for one summand supported on ``sigma`` in ``S_n`` with character ``chi`` of ``A^sigma``."""
    perm = _as_permutation(sigma)
    if perm is None:
        return Verdict(Outcome.UNKNOWN, [("Theorem 2", "support has a nonzero sign part; outside Theorem 2 hypothesis")])
    if perm.is_identity():
        return Verdict(Outcome.UNKNOWN, [("Theorem 2", "trivial support; outside Theorem 2 hypothesis")])
    nu, sigma2, _ = normalize_character(perm, chi)
    if spec is not None and spec.family == "A" and nu:
        raise ValueError("family A has a trivial abelian part; chi must be trivial")
    if spec is not None and spec.family == "D" and nu == perm.degree:
        nu = 0  # chi^{(n)} restricts to the trivial character on the even-weight part
    if not is_matched(sigma2, nu):
        return Verdict(
            Outcome.UNKNOWN,
            [("Theorem 2", f"{sigma2} straddles the cut after nu = {nu}; outside Theorem 2 hypothesis")],
        )
    cases = match_theorem2_case(sigma2, nu, desc)
    ctype = restricted_type(sigma2, nu)
    if not cases:
        return Verdict(
            Outcome.INFINITE,
            [("Theorem 2", f"matched with nu = {nu}, type {ctype} on its side fits none of cases (i)-(ix)")],
        )
    if not restricted_minus_one_type(sigma2, nu, desc):
        raise AssertionError(f"case {cases} matched but the xi criterion disagrees")
    return Verdict(
        Outcome.MINUS_ONE_CANDIDATE,
        [(f"Theorem 2 {cases[0]}", f"matched with nu = {nu}; type {ctype} with the listed rep is -1-type")],
        cases,
    )


# reducible modules ----------------------------------------------------------


@dataclass(frozen=True)
class Summand:
    support: WeylElement
    rep: RepDescriptor

    def chi(self) -> AbelianCharacter:
        n = self.support.rank
        if self.rep.chi is not None:
            return AbelianCharacter(2, tuple(int(x) for x in self.rep.chi))
        nu = self.rep.nu or 0
        return AbelianCharacter(2, (1,) * nu + (0,) * (n - nu))

    def nu(self) -> int:
        return self.chi().weight


@dataclass(frozen=True)
class YDModuleSpec:
    spec: GroupSpec
    summands: tuple[Summand, ...]

    def __post_init__(self):
        for s in self.summands:
            if not self.spec.contains(s.support):
                raise ValueError(f"support {s.support} is not in {self.spec}")

    def to_json(self) -> dict:
        return {
            "group": {"family": self.spec.family, "rank": self.spec.rank},
            "summands": [{"support": str(s.support), "rep": s.rep.to_json()} for s in self.summands],
        }

    @classmethod
    def from_json(cls, data: dict) -> YDModuleSpec:
        spec = _spec_from_json(data)
        summands = []
        for s in data.get("summands", []):
            sup = WeylElement.parse(str(s["support"]), spec.rank)
            summands.append(Summand(sup, RepDescriptor.from_json(s.get("rep", {"blocks": []}))))
        return cls(spec, tuple(summands))


def _spec_from_json(data: dict) -> GroupSpec:
    if not isinstance(data, dict) or "group" not in data:
        raise ValueError("missing 'group' object")
    g = data["group"]
    return GroupSpec(str(g["family"]), int(g["rank"]))


def _central_odd(m: YDModuleSpec) -> bool:
    a = m.spec.central_sign_element()
    return a is not None and all(s.support == a and s.nu() % 2 == 1 for s in m.summands)


def classify_reducible(m: YDModuleSpec) -> Verdict:
    n = m.spec.rank
    if len(m.summands) < 2:
        raise ValueError("a reducible module needs at least two summands")
    if n <= 2:
        return Verdict(Outcome.UNKNOWN, [("Theorem 1", "rank must exceed 2")])
    outside = [s.support for s in m.summands if not s.support.is_in_abelian_part()]
    finite = _central_odd(m)
    if len(outside) >= 2:
        reasons = []
        if n != 4:
            reasons.append(f"n = {n} is not 4")
        bad = sorted((x for x in outside if cycle_type(x.perm) != CycleType.parse("2^2")), key=WeylElement.sort_key)
        if bad:
            reasons.append(f"support {bad[0]} is not of type 2^2")
        if len({x.parity() for x in outside}) > 1:
            reasons.append("outside-A supports have different sign parities")
        if reasons:
            assert not finite
            return Verdict(
                Outcome.INFINITE,
                [("Theorem 4", "two supports outside A and " + "; ".join(reasons) + " (Remark 3.12)")],
            )
        return Verdict(
            Outcome.UNKNOWN,
            [("Theorem 4", "n = 4, all outside-A supports of type 2^2 with one sign parity; not decided")],
        )
    if finite:
        nus = ", ".join(str(s.nu()) for s in m.summands)
        return Verdict(
            Outcome.FINITE,
            [("Remark 3.8", f"every summand supported on (g_2, ..., g_2) with odd nu ({nus})")],
        )
    return Verdict(Outcome.UNKNOWN, [("Theorem 1", "no criterion applies")])


def classify(m: YDModuleSpec) -> Verdict:
    """Dispatch on the number of summands."""
    if not m.summands:
        raise ValueError("module has no summands")
    if len(m.summands) >= 2:
        return classify_reducible(m)
    (s,) = m.summands
    if _central_odd(m):
        return Verdict(
            Outcome.FINITE,
            [("Remark 3.8", f"supported on (g_2, ..., g_2) with odd nu = {s.nu()}")],
        )
    return classify_irreducible(s.support, s.chi(), s.rep, m.spec)


def classify_permuted(m: YDModuleSpec, order: list[int]) -> Verdict:
    return classify(YDModuleSpec(m.spec, tuple(m.summands[i] for i in order)))


# central quantum linear spaces -----------------------------------------------


@dataclass(frozen=True)
class RSREntry:
    class_rep: WeylElement
    multiplicity: int
    reps: tuple[RepDescriptor, ...]

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


@dataclass(frozen=True)
class RSRDescriptor:
    spec: GroupSpec
    entries: tuple[RSREntry, ...]

    def to_json(self) -> dict:
        return {
            "group": {"family": self.spec.family, "rank": self.spec.rank},
            "entries": [
                {"classRep": str(e.class_rep), "multiplicity": e.multiplicity, "reps": [r.to_json() for r in e.reps]}
                for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> RSRDescriptor:
        spec = _spec_from_json(data)
        entries = []
        for e in data.get("entries", []):
            rep = WeylElement.parse(str(e["classRep"]), spec.rank)
            entries.append(
                RSREntry(rep, int(e.get("multiplicity", 1)), tuple(RepDescriptor.from_json(r) for r in e.get("reps", [])))
            )
        return cls(spec, tuple(entries))

    def as_module(self) -> YDModuleSpec:
        summands = []
        for e in self.entries:
            for r in e.reps:
                summands.append(Summand(e.class_rep, r))
        return YDModuleSpec(self.spec, tuple(summands))


def _rep_weight(rep: RepDescriptor, n: int) -> int:
    if rep.chi is not None:
        return sum(1 for x in rep.chi if x)
    return rep.nu or 0


def is_central_quantum_linear(rsr: RSRDescriptor) -> bool:
    """Supported on the single class ``{(g_2, ..., g_2)}`` with odd-weight characters throughout."""
    a = rsr.spec.central_sign_element()
    if a is None or len(rsr.entries) != 1:
        return False
    (entry,) = rsr.entries
    if entry.class_rep != a or not entry.reps:
        return False
    if len(entry.reps) != entry.multiplicity:
        return False
    n = rsr.spec.rank
    return all(_rep_weight(r, n) % 2 == 1 for r in entry.reps)


def classify_rsr(rsr: RSRDescriptor) -> Verdict:
    if is_central_quantum_linear(rsr):
        return Verdict(
            Outcome.FINITE,
            [("Theorem 3", "single central class {(g_2, ..., g_2)} with odd-weight characters")],
        )
    return classify(rsr.as_module())


def load_spec(text: str) -> YDModuleSpec | RSRDescriptor:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("input must be a JSON object")
    if "entries" in data:
        return RSRDescriptor.from_json(data)
    if "summands" in data:
        return YDModuleSpec.from_json(data)
    raise ValueError("input needs 'summands' or 'entries'")


def classify_any(obj: YDModuleSpec | RSRDescriptor) -> Verdict:
    return classify_rsr(obj) if isinstance(obj, RSRDescriptor) else classify(obj)


@dataclass(frozen=True)
class CentralScalar:
    chi_mask: int
    weight: int
    rho_dim: int
    theta_dim: int
    scalar: int | None

    @property
    def predicted(self) -> bool:
        """Whether the scalar is ``(-1)^weight``."""
        return self.scalar == (-1) ** self.weight


def central_scalar_oracle(spec: GroupSpec) -> list[CentralScalar]:
    """``theta_{chi, rho}((g_2, ..., g_2))`` on explicit matrices, for every ``chi`` in ``A-hat``."""
    a = spec.central_sign_element()
    if a is None:
        raise ValueError(f"{spec} has no central sign element")
    group: FiniteGroup = weyl_group(spec)
    out = []
    for mask in range(2**spec.rank):
        chi = AbelianCharacter(2, mask_to_bits(mask, spec.rank))
        stab = FiniteGroup(character_stabilizer(chi, spec), "D_chi")
        for rho in irreducible_reps(stab):
            ind = induce(bits_to_mask(chi.exps), rho, group)
            scalar = None
            for s in (1, -1):
                if ind.rep.is_scalar_at(a, CyclotomicScalar.rational(s)):
                    scalar = s
            out.append(CentralScalar(mask, chi.weight, rho.dim, ind.dim, scalar))
    return out


def central_oracle_agrees(spec: GroupSpec) -> bool:
    """Oracle against :func:`is_central_quantum_linear` on one-entry RSRs at the central class."""
    a = spec.central_sign_element()
    for row in central_scalar_oracle(spec):
        rsr = RSRDescriptor(
            spec, (RSREntry(a, 1, (RepDescriptor((), chi=mask_to_bits(row.chi_mask, spec.rank)),)),)
        )
        if row.scalar is None or is_central_quantum_linear(rsr) != (row.scalar == -1):
            return False
    return True

