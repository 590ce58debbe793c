"""Square-commutativity of conjugacy classes.

Two classes ``O_s`` and ``O_t`` square-commute when ``stst = tsts`` for all
``s`` in one and ``t`` in the other.  Since the condition is invariant under
simultaneous conjugation it suffices to fix ``t`` and ask whether ``sts``
commutes with ``t`` for every ``s``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .conjugacy import ConjugacyClass, all_classes, class_of
from .groups import DEFAULT_CUTOFF, CycleType, GroupSpec, WeylElement, cycle_type

Witness = tuple[WeylElement, WeylElement]


def _check_same_group(c1: ConjugacyClass, c2: ConjugacyClass) -> None:
    if c1.spec != c2.spec:
        raise ValueError(f"classes live in different groups: {c1.spec} and {c2.spec}")


def square_commute(c1: ConjugacyClass, c2: ConjugacyClass) -> tuple[bool, Witness | None]:
    """Reduced test with ``t`` the representative of ``c2``; the witness uses the least failing ``s``."""
    _check_same_group(c1, c2)
    t = c2.representative
    for s in c1.sorted_elements():
        sts = s * t * s
        if sts * t != t * sts:
            return False, (s, t)
    return True, None


def square_commute_with(c1: ConjugacyClass, t: WeylElement) -> bool:
    """The reduced test against an arbitrary member ``t`` of the second class."""
    return all((s * t * s) * t == t * (s * t * s) for s in c1.elements)


def full_sweep(c1: ConjugacyClass, c2: ConjugacyClass) -> tuple[bool, Witness | None]:
    """Oracle: check ``stst = tsts`` over every pair."""
    _check_same_group(c1, c2)
    for s in c1.sorted_elements():
        for t in c2.sorted_elements():
            st = s * t
            ts = t * s
            if st * st != ts * ts:
                return False, (s, t)
    return True, None


@dataclass(frozen=True)
class PairResult:
    first: ConjugacyClass
    second: ConjugacyClass
    commute: bool
    witness: Witness | None

    def to_json(self) -> dict:
        out = {
            "first": self.first.label(),
            "second": self.second.label(),
            "squareCommutative": self.commute,
        }
        if self.witness is not None:
            out["witness"] = {"s": str(self.witness[0]), "t": str(self.witness[1])}
        return out


@dataclass
class SquareCommReport:
    spec: GroupSpec
    classes: list[ConjugacyClass] = field(repr=False)
    results: list[PairResult] = field(repr=False)

    @property
    def pairs(self) -> list[tuple[ConjugacyClass, ConjugacyClass]]:
        return [(r.first, r.second) for r in self.results if r.commute]

    @property
    def witnesses(self) -> dict:
        return {(r.first.representative, r.second.representative): r.witness for r in self.results if not r.commute}

    def type_pairs(self) -> set[frozenset]:
        """Commuting pairs as unordered pairs of class labels (a multiset when the two coincide)."""
        return {_unordered(r.first.label(), r.second.label()) for r in self.results if r.commute}

    def lookup(self, a: ConjugacyClass, b: ConjugacyClass) -> PairResult:
        for r in self.results:
            if (r.first, r.second) in ((a, b), (b, a)):
                return r
        raise KeyError("pair not in report")

    def to_json(self) -> dict:
        return {
            "group": {"family": self.spec.family, "rank": self.spec.rank},
            "classes": [c.label() for c in self.classes],
            "pairs": [r.to_json() for r in self.results],
            "squareCommutative": [[r.first.label(), r.second.label()] for r in self.results if r.commute],
        }


def _unordered(a: str, b: str) -> frozenset:
    return frozenset([a, b]) if a != b else frozenset([a])


def _decide(args: tuple[ConjugacyClass, ConjugacyClass]) -> PairResult:
    c1, c2 = args
    ok, wit = square_commute(c1, c2)
    return PairResult(c1, c2, ok, wit)


def enumerate_pairs(
    spec: GroupSpec,
    include_trivial: bool = False,
    workers: int = 1,
    cutoff: int = DEFAULT_CUTOFF,
) -> SquareCommReport:
    """Decide every unordered pair of classes (nontrivial ones unless ``include_trivial``)."""
    classes = all_classes(spec, cutoff)
    if not include_trivial:
        identity = spec.identity()
        classes = [c for c in classes if identity not in c]
    grid = list(combinations_with_replacement(classes, 2))
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_decide, grid, chunksize=max(1, len(grid) // (4 * workers))))
    else:
        results = [_decide(p) for p in grid]
    return SquareCommReport(spec, classes, results)


def projected_class(c: ConjugacyClass) -> ConjugacyClass:
    """The S_n-class of the permutation part of ``c``."""
    spec = GroupSpec("A", c.spec.rank)
    return class_of(WeylElement.from_perm(c.representative.perm), spec)


def lifted_necessity_counterexamples(spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> list[PairResult]:
    """Square-commuting pairs whose permutation projections fail to square-commute."""
    report = enumerate_pairs(spec, include_trivial=True, cutoff=cutoff)
    bad = []
    for r in report.results:
        if r.commute:
            ok, _ = square_commute(projected_class(r.first), projected_class(r.second))
            if not ok:
                bad.append(r)
    return bad


def lifted_necessity_check(spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> bool:
    return not lifted_necessity_counterexamples(spec, cutoff)


def classes_over(classes: list[ConjugacyClass], ctype: CycleType) -> list[ConjugacyClass]:
    return [c for c in classes if cycle_type(c.representative.perm) == ctype]


def sign_condition_table(rank: int = 4, family: str = "B") -> list[tuple[ConjugacyClass, ConjugacyClass, bool, bool]]:
    """For classes over type ``2^{rank/2}``: (first, second, square-commute, parities equal)."""
    spec = GroupSpec(family, rank)
    if rank % 2:
        raise ValueError("the sign condition concerns fixed-point-free involution types")
    over = classes_over(all_classes(spec), CycleType.parse(f"2^{rank // 2}"))
    out = []
    for c1, c2 in combinations_with_replacement(over, 2):
        ok, _ = square_commute(c1, c2)
        out.append((c1, c2, ok, c1.parity == c2.parity))
    return out


def sign_condition_check(rank: int = 4, family: str = "B") -> bool:
    """Classes over ``(12)(34)`` square-commute exactly when their total sign parities agree."""
    if family not in ("B", "D"):
        raise ValueError("the sign condition concerns families B and D")
    return all(ok == same for _, _, ok, same in sign_condition_table(rank, family))


NEGATIVE_CASES = {
    "(i)": ("3", "3"),
    "(ii)": ("2", "3"),
    "(iii)": ("2^2", "4"),
    "(iv)": ("2", "2^2"),
}


def _pad(text: str, n: int) -> CycleType:
    """Cycle type from ``text`` padded with fixed points up to degree ``n``."""
    base = CycleType.parse(text)
    extra = n - base.n
    if extra < 0:
        raise ValueError(f"type {text} does not fit in degree {n}")
    return CycleType.parse(f"{text} 1^{extra}") if extra else base


def negative_case_pairs(spec: GroupSpec, case: str) -> list[tuple[ConjugacyClass, ConjugacyClass, bool]]:
    """Every class pair over the two permutation types of ``case``, with its verdict."""
    t1, t2 = NEGATIVE_CASES[case]
    classes = all_classes(spec)
    over1 = classes_over(classes, _pad(t1, spec.rank))
    over2 = classes_over(classes, _pad(t2, spec.rank))
    return [(c1, c2, square_commute(c1, c2)[0]) for c1 in over1 for c2 in over2]


def negative_case_check(spec: GroupSpec, case: str) -> tuple[bool, int, int]:
    """Whether no class pair over the types of ``case`` square-commutes.

    Returns the verdict, the number of pairs examined and the number that do
    square-commute.
    """
    rows = negative_case_pairs(spec, case)
    commuting = sum(1 for *_, ok in rows if ok)
    return bool(rows) and commuting == 0, len(rows), commuting
