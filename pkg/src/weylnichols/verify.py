"""Reproduction suites: each returns a :class:`SuiteResult` with per-check lines."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .conjugacy import (
    WreathElement,
    all_classes,
    centralizer,
    class_of,
    descriptor,
    perm_centralizer,
    phi,
    phi_inverse,
    wreath_elements,
)
from .cyclotomic import CyclotomicScalar
from .groups import (
    CycleType,
    GroupSpec,
    Permutation,
    conjugate,
    cycle_type,
    inverse,
    random_element,
    signed_cycle_type,
)
from .repkit import BlockRep, RepDescriptor, char_value_at_sigma, distinguished_element
from .squarecomm import (
    NEGATIVE_CASES,
    enumerate_pairs,
    full_sweep,
    negative_case_check,
    sign_condition_table,
    square_commute_with,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "details": self.lines, "seconds": round(self.seconds, 3)}


def _timed(fn):
    def run(*args, **kwargs):
        t = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def cycle_types(n: int) -> list[CycleType]:
    return [CycleType.parse(" ".join(map(str, p))) for p in partitions(n)]


def exponent_descriptors(ctype: CycleType):
    """Every exponent assignment ``t`` on ``ctype`` with trivial stabilizer labels."""
    choices = [[(j, t) for t in product(range(j), repeat=ctype.count(j))] for j in ctype.lengths()]
    for combo in product(*choices):
        yield RepDescriptor(tuple(BlockRep(j, t) for j, t in combo))


# distinguished element -------------------------------------------------------


@_timed
def xi_equivalence_sweep(max_n: int = 6) -> SuiteResult:
    """``xi`` integral exactly when the character value at ``sigma`` is ``-deg``."""
    total = mismatches = 0
    minus_one = CyclotomicScalar.rational(-1)
    for n in range(1, max_n + 1):
        for ctype in cycle_types(n):
            sigma = ctype.representative()
            for desc in exponent_descriptors(ctype):
                total += 1
                integral = distinguished_element(desc).denominator == 1
                value = char_value_at_sigma(desc, sigma)
                if integral != (value == minus_one * desc.degree()):
                    mismatches += 1
    return SuiteResult("xi-equivalence", mismatches == 0, [f"{total} descriptors over n <= {max_n}, {mismatches} mismatches"])


XI_TABLE = {
    "(i)": ([("2", {2: (1,)})], [Fraction(1)]),
    "(ii)": ([("2 3", {2: (1,), 3: (0,)})], [Fraction(1)]),
    "(iii)": ([("2^3", {2: (1, 1, 1)})], [Fraction(2)]),
    "(iv)": ([("2^5", {2: (1,) * 5})], [Fraction(3)]),
    "(v)": ([("4", {4: (2,)})], [Fraction(1)]),
    "(vi)": ([("4^2", {4: (1, 1)}), ("4^2", {4: (3, 3)})], [Fraction(1), Fraction(2)]),
    "(vii)": ([("2 4", {2: (1,), 4: (0,)}), ("2 4", {2: (0,), 4: (2,)})], [Fraction(1), Fraction(1)]),
    "(viii)": ([("2 4^2", {2: (0,), 4: (1, 1)}), ("2 4^2", {2: (0,), 4: (3, 3)})], [Fraction(1), Fraction(2)]),
}


def xi_of(type_text: str, t: dict[int, tuple[int, ...]]) -> Fraction:
    ctype = CycleType.parse(type_text)
    desc = RepDescriptor(tuple(BlockRep(j, t.get(j, (0,) * ctype.count(j))) for j in ctype.lengths()))
    return distinguished_element(desc.for_type(ctype))


@_timed
def xi_table() -> SuiteResult:
    """The nine ``-1``-type shapes evaluate to their expected distinguished elements."""
    lines, ok = [], True
    for case, (rows, expected) in XI_TABLE.items():
        got = [xi_of(text, t) for text, t in rows]
        good = got == expected
        ok &= good
        lines.append(f"{case}: {', '.join(map(str, got))} {'ok' if good else 'MISMATCH'}")
    # (ix) is symbolic in t: 1 + t
    got = [xi_of("2^2 4", {2: (t, t), 4: (2,)}) for t in (0, 1)]
    good = got == [1 + t for t in (0, 1)]
    ok &= good
    lines.append(f"(ix): 1+t at t=0,1 -> {', '.join(map(str, got))} {'ok' if good else 'MISMATCH'}")
    return SuiteResult("xi-table", ok, lines)


# phi isomorphism --------------------------------------------------------------


def phi_block_check(type_text: str) -> tuple[bool, str]:
    ctype = CycleType.parse(type_text)
    (l,) = ctype.lengths()
    m = ctype.count(l)
    sigma = ctype.representative()
    cent = perm_centralizer(sigma)
    images = {tau: phi(tau, sigma).block(l) for tau in cent}
    target = set(wreath_elements(l, m))
    bijective = len(set(images.values())) == len(cent) == len(target) == l**m * math.factorial(m)
    onto = set(images.values()) == target
    hom = all(images[a * b] == images[a] * images[b] for a in cent for b in cent)
    back = all(phi_inverse(phi(tau, sigma), sigma) == tau for tau in cent)
    expected_sigma = WreathElement(l, (l - 1,) * m, Permutation.identity(m))
    at_sigma = images[sigma] == expected_sigma
    ok = bijective and onto and hom and back and at_sigma
    return ok, (
        f"type {ctype}: |centralizer| = {len(cent)} = {l}^{m}*{m}!, bijective={bijective and onto}, "
        f"homomorphism={hom}, phi(sigma)=({','.join([str(l - 1)] * m)};id) {at_sigma}"
    )


@_timed
def phi_isomorphism(types: tuple[str, ...] = ("2^2", "2^3", "3^2")) -> SuiteResult:
    """``phi`` is a bijective homomorphism onto ``(C_l)^m x| S_m`` for single-block types."""
    ok, lines = True, []
    for text in types:
        good, line = phi_block_check(text)
        ok &= good
        lines.append(line)
    return SuiteResult("phi", ok, lines)


# square-commutativity -------------------------------------------------------


SN_EXPECTED = {
    3: {frozenset(["3^1"]), frozenset(["1^1 2^1", "3^1"])},
    4: {frozenset(["2^2"]), frozenset(["2^2", "4^1"]), frozenset(["1^2 2^1", "2^2"])},
    5: set(),
    6: {frozenset(["1^4 2^1", "2^3"])},
}


def _fmt_pair(p: frozenset) -> str:
    items = sorted(p)
    return "(" + ", ".join(items * (2 if len(items) == 1 else 1)) + ")"


@_timed
def sn_square_commuting(ns: tuple[int, ...] = (3, 4, 5, 6), workers: int = 1) -> SuiteResult:
    """Square-commuting nontrivial class pairs of ``S_n`` against the expected lists."""
    ok, lines = True, []
    for n in ns:
        got = enumerate_pairs(GroupSpec("A", n), workers=workers).type_pairs()
        good = n not in SN_EXPECTED or got == SN_EXPECTED[n]
        ok &= good
        shown = ", ".join(sorted(_fmt_pair(p) for p in got)) or "none"
        lines.append(f"S_{n}: {shown} {'ok' if good else 'MISMATCH'}")
    return SuiteResult("sn-square-commuting", ok, lines)


@_timed
def signed_square_commuting(rank: int = 4, family: str = "B") -> SuiteResult:
    """Negative cases over the listed permutation types and the sign-parity condition."""
    spec = GroupSpec(family, rank)
    ok, lines = True, []
    for case, (t1, t2) in NEGATIVE_CASES.items():
        good, checked, commuting = negative_case_check(spec, case)
        ok &= good
        lines.append(
            f"{case} types ({t1}) x ({t2}): never square-commutative: {good} "
            f"({checked} class pairs, {commuting} square-commutative)"
        )
    table = sign_condition_table(rank, family) if rank % 2 == 0 else []
    agree = all(sc == same for _, _, sc, same in table)
    ok &= agree
    lines.append(f"(v) type 2^{rank // 2}: square-commutative iff sign parities agree: {agree} ({len(table)} class pairs)")
    return SuiteResult(f"signed-square-commuting {family}{rank}", ok, lines)


# randomized property suites ----------------------------------------------------

PROPERTY_CASES = 10**4
SMALL_SPECS = tuple(GroupSpec(f, n) for f in "ABD" for n in range(1, 5))


def _report(name: str, cases: int, failures: list[str], seed: int) -> SuiteResult:
    lines = [f"{cases} random cases (seed {seed}), {len(failures)} failures"] + failures[:5]
    return SuiteResult(name, not failures, lines)


@_timed
def orbit_stabilizer_property(cases: int = PROPERTY_CASES, seed: int = 0) -> SuiteResult:
    """``|class| * |centralizer| = |G|`` for random elements of rank <= 4."""
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        spec = rng.choice(SMALL_SPECS)
        x = random_element(spec, rng)
        size = class_of(x, spec).size
        cent = centralizer(x, spec).order
        if size * cent != spec.order():
            failures.append(f"{spec} {x}: {size} * {cent} != {spec.order()}")
    return _report("orbit-stabilizer", cases, failures, seed)


@_timed
def group_law_property(cases: int = PROPERTY_CASES, seed: int = 0, max_rank: int = 8) -> SuiteResult:
    """Associativity, identity, inverses and closure on random triples."""
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        spec = GroupSpec(rng.choice("ABD"), rng.randint(1, max_rank))
        x, y, z = (random_element(spec, rng) for _ in range(3))
        one = spec.identity()
        ok = (
            (x * y) * z == x * (y * z)
            and x * one == x == one * x
            and x * inverse(x) == one == inverse(x) * x
            and spec.contains(x * y)
        )
        if not ok:
            failures.append(f"{spec}: {x}, {y}, {z}")
    return _report("group-laws", cases, failures, seed)


@_timed
def conjugation_invariance_property(cases: int = PROPERTY_CASES, seed: int = 0, max_rank: int = 8) -> SuiteResult:
    """Cycle type, sign parity and signed descriptor survive conjugation."""
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        spec = GroupSpec(rng.choice("ABD"), rng.randint(1, max_rank))
        x, g = random_element(spec, rng), random_element(spec, rng)
        y = conjugate(x, g)
        ok = (
            cycle_type(y.perm) == cycle_type(x.perm)
            and y.parity() == x.parity()
            and signed_cycle_type(y) == signed_cycle_type(x)
            and descriptor(y) == descriptor(x)
        )
        if not ok:
            failures.append(f"{spec}: x = {x}, g = {g}")
    return _report("conjugation-invariance", cases, failures, seed)


@_timed
def reduced_vs_full_property(cases: int = PROPERTY_CASES, seed: int = 0) -> SuiteResult:
    """The reduced test at a random member ``t`` of the second class agrees with the full sweep.

    The full sweep depends only on the pair of classes, so its verdict is
    computed once per pair; the reduced test runs afresh for every case.
    """
    rng = random.Random(seed)
    classes = {spec: all_classes(spec) for spec in SMALL_SPECS}
    oracle: dict = {}
    failures = []
    for _ in range(cases):
        spec = rng.choice(SMALL_SPECS)
        c1, c2 = rng.choice(classes[spec]), rng.choice(classes[spec])
        key = (spec, c1.representative, c2.representative)
        if key not in oracle:
            oracle[key] = full_sweep(c1, c2)[0]
        t = conjugate(c2.representative, random_element(spec, rng))
        if square_commute_with(c1, t) != oracle[key]:
            failures.append(f"{spec}: {c1.label()} vs t = {t}")
    return _report("reduced-vs-full", cases, failures, seed)


PROPERTY_SUITES = (
    orbit_stabilizer_property,
    group_law_property,
    conjugation_invariance_property,
    reduced_vs_full_property,
)


SUITES = {
    "2.4": lambda n: xi_equivalence_sweep(n or 6),
    "2.8": lambda n: xi_table(),
    "2.1": lambda n: phi_isomorphism(),
    "phi": lambda n: phi_isomorphism(),
    "3.10": lambda n: sn_square_commuting((n,) if n else (3, 4, 5, 6)),
    "3.11": lambda n: signed_square_commuting(n or 4),
}


def run_suite(key: str, n: int | None = None) -> list[SuiteResult]:
    if key == "all":
        return [SUITES[k](None) for k in ("2.4", "2.8", "2.1", "3.10", "3.11")]
    if key not in SUITES:
        raise ValueError(f"unknown suite {key!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[key](n)]
