"""Signed permutations and the classical Weyl groups A_{n-1}, B_n, D_n.

Elements are pairs ``(a, sigma)`` in ``(C_2)^n x| S_n``.  Sign vectors are
packed into an int (bit ``i`` is the exponent at point ``i + 1``) and
permutations are 0-based image tuples.  Points are 1-based in every textual
form.

Permutations compose as functions acting on the left: ``(f * g)(x) = f(g(x))``.
The permutation ``h`` acts on sign vectors by ``(h . a)_i = a_{h^{-1}(i)}``,
i.e. it carries the bit at point ``j`` to point ``h(j)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import permutations as _iter_permutations
from typing import Iterator, Sequence

DEFAULT_CUTOFF = 10**6
MAX_RANK = 64


class CutoffExceeded(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured size."""


@dataclass(frozen=True, slots=True)
class Permutation:
    """Permutation of ``{1..n}`` stored as 0-based images."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-based images ``[sigma(1), ..., sigma(n)]``."""
        img = tuple(i - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection: {list(images)}")
        return cls(img)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> Permutation:
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n or p in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {n}")
                seen.add(p)
            for k, p in enumerate(cyc):
                img[p - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"()"``."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)*", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(p) for p in re.split(r"[\s,]+", body.strip()) if p]
            if pts:
                cycles.append(pts)
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        img = self.images
        return Permutation(tuple(img[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, 1-based, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p + 1)
                p = self.images[p]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self.images) if i != j)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(True))) if self.degree else 1

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd ones."""
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self})"


@dataclass(frozen=True, slots=True)
class CycleType:
    """Counts ``lam[i-1]`` of i-cycles, so that ``sum(i * lam_i) == n``."""

    lam: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Parse ``"1^2 2^3"`` (exponent optional, ``"4"`` means ``4^1``)."""
        counts: dict[int, int] = {}
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad cycle type token {tok!r}")
            length, mult = int(m.group(1)), int(m.group(2) or 1)
            if length < 1:
                raise ValueError("cycle lengths are positive")
            counts[length] = counts.get(length, 0) + mult
        n = sum(k * v for k, v in counts.items())
        return cls(tuple(counts.get(i, 0) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return sum((i + 1) * c for i, c in enumerate(self.lam))

    def count(self, length: int) -> int:
        return self.lam[length - 1] if 1 <= length <= len(self.lam) else 0

    def lengths(self) -> list[int]:
        return [i + 1 for i, c in enumerate(self.lam) if c]

    def representative(self) -> Permutation:
        """The block-layout permutation: cycles by increasing length on consecutive points."""
        cycles, p = [], 1
        for length in self.lengths():
            for _ in range(self.count(length)):
                cycles.append(list(range(p, p + length)))
                p += length
        return Permutation.from_cycles(cycles, self.n)

    def __str__(self) -> str:
        parts = [f"{i + 1}^{c}" for i, c in enumerate(self.lam) if c]
        return " ".join(parts) or "()"


def cycle_type(p: Permutation) -> CycleType:
    lam = [0] * p.degree
    for c in p.cycles(include_fixed=True):
        lam[len(c) - 1] += 1
    return CycleType(tuple(lam))


def act(h: Permutation, mask: int) -> int:
    """``h . a`` on packed sign bits: the bit at point j moves to h(j)."""
    out = 0
    img = h.images
    j = 0
    while mask:
        if mask & 1:
            out |= 1 << img[j]
        mask >>= 1
        j += 1
    return out


def mask_to_bits(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def bits_to_mask(bits: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b % 2:
            out |= 1 << i
    return out


@dataclass(frozen=True, slots=True)
class WeylElement:
    """``(a, sigma)`` with ``a`` packed as an int of sign bits."""

    sign: int
    perm: Permutation

    @classmethod
    def make(cls, bits: Sequence[int] | str, perm: Permutation | str | None = None) -> WeylElement:
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        n = len(bits)
        if perm is None:
            perm = Permutation.identity(n)
        elif isinstance(perm, str):
            perm = Permutation.parse(perm, n)
        if perm.degree != n:
            raise ValueError("rank mismatch between sign vector and permutation")
        return cls(bits_to_mask(bits), perm)

    @classmethod
    def from_perm(cls, perm: Permutation) -> WeylElement:
        return cls(0, perm)

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(0, Permutation.identity(n))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> WeylElement:
        """Parse ``"1000 (1 2)(3 4)"``, ``"(1 2 3)"`` or ``"1000"``.

        A leading bit string fixes the rank; otherwise ``n`` must be given.
        """
        text = text.strip()
        m = re.match(r"^([01]+)\s*(.*)$", text)
        if m:
            bits, rest = m.group(1), m.group(2)
            if n is not None and len(bits) != n:
                raise ValueError(f"sign vector {bits!r} does not have length {n}")
            return cls.make(bits, rest if rest else None)
        if n is None:
            raise ValueError("rank needed to parse an element without a sign vector")
        return cls(0, Permutation.parse(text, n))

    @property
    def rank(self) -> int:
        return self.perm.degree

    @property
    def bits(self) -> tuple[int, ...]:
        return mask_to_bits(self.sign, self.rank)

    def parity(self) -> int:
        """Total sign: 0 (positive) or 1 (negative)."""
        return self.sign.bit_count() % 2

    def is_in_abelian_part(self) -> bool:
        return self.perm.is_identity()

    def __mul__(self, other: WeylElement) -> WeylElement:
        img = self.perm.images
        oimg = other.perm.images
        if len(img) != len(oimg):
            raise ValueError(f"rank mismatch: {len(img)} vs {len(oimg)}")
        # inline of compose: sign bits move along self.perm
        moved, mask, j = 0, other.sign, 0
        while mask:
            if mask & 1:
                moved |= 1 << img[j]
            mask >>= 1
            j += 1
        return WeylElement(self.sign ^ moved, Permutation(tuple(img[k] for k in oimg)))

    def sort_key(self) -> tuple:
        return (self.bits, self.perm.images)

    def __lt__(self, other: WeylElement) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "".join(map(str, self.bits)) + " " + str(self.perm)

    def __repr__(self) -> str:
        return f"WeylElement({self})"


@dataclass(frozen=True, slots=True)
class GroupSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        if not 1 <= self.rank <= MAX_RANK:
            raise ValueError(f"rank must lie in 1..{MAX_RANK}")

    def admits_sign(self, mask: int) -> bool:
        if self.family == "A":
            return mask == 0
        if self.family == "D":
            return mask.bit_count() % 2 == 0
        return True

    def contains(self, x: WeylElement) -> bool:
        return x.rank == self.rank and self.admits_sign(x.sign)

    def order(self) -> int:
        n = self.rank
        return math.factorial(n) * {"A": 1, "B": 2**n, "D": 2 ** (n - 1)}[self.family]

    def sign_masks(self) -> list[int]:
        return [m for m in range(2**self.rank) if self.admits_sign(m)]

    def identity(self) -> WeylElement:
        return WeylElement.identity(self.rank)

    def central_sign_element(self) -> WeylElement | None:
        """``(g_2, ..., g_2)`` when it belongs to the group."""
        x = WeylElement((1 << self.rank) - 1, Permutation.identity(self.rank))
        return x if self.contains(x) else None

    def generators(self) -> list[WeylElement]:
        n = self.rank
        gens = []
        if n > 1:
            gens.append(WeylElement.from_perm(Permutation.from_cycles([[1, 2]], n)))
            gens.append(WeylElement.from_perm(Permutation.from_cycles([list(range(1, n + 1))], n)))
        if self.family == "B":
            gens.append(WeylElement(1, Permutation.identity(n)))
        elif self.family == "D" and n > 1:
            gens.append(WeylElement(3, Permutation.identity(n)))
        return gens

    def __str__(self) -> str:
        return f"W({self.family}, rank {self.rank})"


def _check_ranks(x: WeylElement, y: WeylElement) -> None:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")


def compose(x: WeylElement, y: WeylElement, spec: GroupSpec | None = None) -> WeylElement:
    """``(a, s)(b, t) = (a (s . b), s t)``."""
    _check_ranks(x, y)
    if spec is not None and not (spec.contains(x) and spec.contains(y)):
        raise ValueError(f"operands do not lie in {spec}")
    return WeylElement(x.sign ^ act(x.perm, y.sign), x.perm * y.perm)


def inverse(x: WeylElement) -> WeylElement:
    """``(a, s)^{-1} = (s^{-1} . a^{-1}, s^{-1})``; bits are their own inverses."""
    inv = x.perm.inverse()
    return WeylElement(act(inv, x.sign), inv)


def conjugate(x: WeylElement, g: WeylElement) -> WeylElement:
    """``g x g^{-1}``."""
    return compose(compose(g, x), inverse(g))


def power(x: WeylElement, k: int) -> WeylElement:
    base = x if k >= 0 else inverse(x)
    out = WeylElement.identity(x.rank)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


def order(x: WeylElement) -> int:
    e = WeylElement.identity(x.rank)
    y, k = x, 1
    while y != e:
        y = compose(y, x)
        k += 1
    return k


@dataclass(frozen=True, slots=True)
class SignCycle:
    support: tuple[int, ...]
    sign_bits: tuple[int, ...]

    @property
    def parity(self) -> int:
        return sum(self.sign_bits) % 2

    def element(self, n: int) -> WeylElement:
        mask = 0
        for p, b in zip(self.support, self.sign_bits):
            if b:
                mask |= 1 << (p - 1)
        return WeylElement(mask, Permutation.from_cycles([list(self.support)], n))


def sign_cycle_decompose(x: WeylElement) -> list[SignCycle]:
    """Independent sign-cycle decomposition.

    Fixed points carrying a sign bit are kept as negative 1-cycles, since
    they are moved by the signed permutation.
    """
    out = []
    bits = x.bits
    for cyc in x.perm.cycles(include_fixed=True):
        sb = tuple(bits[p - 1] for p in cyc)
        if len(cyc) > 1 or sb[0]:
            out.append(SignCycle(cyc, sb))
    return out


def signed_cycle_type(x: WeylElement) -> tuple[tuple[int, int], ...]:
    """Sorted ``(length, parity)`` pairs over all cycles, fixed points included."""
    bits = x.bits
    return tuple(
        sorted((len(c), sum(bits[p - 1] for p in c) % 2) for c in x.perm.cycles(include_fixed=True))
    )


def enumerate_group(spec: GroupSpec, cutoff: int = DEFAULT_CUTOFF) -> Iterator[WeylElement]:
    if spec.order() > cutoff:
        raise CutoffExceeded(f"|{spec}| = {spec.order()} exceeds cutoff {cutoff}")
    masks = spec.sign_masks()
    for img in _iter_permutations(range(spec.rank)):
        p = Permutation(img)
        for m in masks:
            yield WeylElement(m, p)


def symmetric_group(n: int) -> list[Permutation]:
    return [Permutation(img) for img in _iter_permutations(range(n))]


def random_element(spec: GroupSpec, rng) -> WeylElement:
    """Uniform element of ``spec`` drawn with ``rng`` (a :class:`random.Random`)."""
    n = spec.rank
    images = list(range(n))
    rng.shuffle(images)
    if spec.family == "A":
        mask = 0
    else:
        mask = rng.getrandbits(n) if n else 0
        if spec.family == "D" and mask.bit_count() % 2:
            mask ^= 1
    return WeylElement(mask, Permutation(tuple(images)))
