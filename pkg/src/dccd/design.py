"""Ordered block designs: verification, coverage accounting, bounds and classification.

Points are the integers ``0..v-1``. A design is an ordered list of ``k``-subsets
("blocks"). Gap ``i`` (1-based) sits between blocks ``B_i`` and ``B_{i+1}``; in a
circular design gap ``b`` is the seam between ``B_b`` and ``B_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import ParameterError, StructuralError

__all__ = [
    "Design",
    "BoundQuery",
    "ChangeCheck",
    "CoverageLedger",
    "Classification",
    "UnchangedSubsets",
    "lower_bound_linear",
    "lower_bound_circular",
    "verify_m_change",
    "change_number",
    "introductions",
    "coverage",
    "classify",
    "unchanged_subsets",
]


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    blocks: tuple[frozenset[int], ...]
    circular: bool = False

    def __init__(self, v: int, k: int, blocks: Iterable[Iterable[int]], circular: bool = False):
        frozen = tuple(frozenset(b) for b in blocks)
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "blocks", frozen)
        object.__setattr__(self, "circular", bool(circular))
        self._check()

    def _check(self) -> None:
        if self.k < 1 or self.v < self.k:
            raise ParameterError(f"need 1 <= k <= v, got v={self.v}, k={self.k}")
        if not self.blocks:
            raise StructuralError("a design needs at least one block")
        for i, block in enumerate(self.blocks, start=1):
            if len(block) != self.k:
                raise StructuralError(f"block {i} has {len(block)} points, expected {self.k}")
            if min(block) < 0 or max(block) >= self.v:
                raise StructuralError(f"block {i} has points outside [0, {self.v})")

    @property
    def b(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> list[list[int]]:
        return [sorted(block) for block in self.blocks]

    def predecessor(self, i: int) -> frozenset[int]:
        """Block preceding block index ``i`` (0-based); empty for the first block of a linear design."""
        if i > 0:
            return self.blocks[i - 1]
        if self.circular and self.b > 1:
            return self.blocks[-1]
        return frozenset()

    def gaps(self) -> list[tuple[int, frozenset[int], frozenset[int]]]:
        """``(gap index, left block, right block)`` for every gap, seam included when circular."""
        out = [(i + 1, self.blocks[i], self.blocks[i + 1]) for i in range(self.b - 1)]
        if self.circular and self.b > 1:
            out.append((self.b, self.blocks[-1], self.blocks[0]))
        return out

    def relabel(self, perm: Sequence[int]) -> "Design":
        return Design(self.v, self.k, [[perm[x] for x in blk] for blk in self.blocks], self.circular)

    def __repr__(self) -> str:
        kind = "CDCCD" if self.circular else "DCCD"
        return f"<Design {kind}-like v={self.v} k={self.k} b={self.b}>"


def _binom(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def _ceil_div(a: int, d: int) -> int:
    return (a + d - 1) // d


@dataclass(frozen=True)
class BoundQuery:
    """Parameters of a block-count lower bound; ``change`` is the number of swapped points per gap."""

    v: int
    k: int
    t: int = 2
    change: int = 2

    def __post_init__(self):
        if not (1 <= self.t <= self.k <= self.v):
            raise ParameterError(f"need 1 <= t <= k <= v, got v={self.v}, k={self.k}, t={self.t}")
        if not (1 <= self.change <= self.k):
            raise ParameterError(f"change number {self.change} not in 1..k")
        if self.per_block() < 1:
            raise ParameterError(f"no t-set can be newly covered with k={self.k}, t={self.t}")

    def per_block(self) -> int:
        """Most t-sets a block can cover once its predecessor is fixed."""
        m, k, t = self.change, self.k, self.t
        return sum(_binom(m, i) * _binom(k - m, t - i) for i in range(1, t + 1))

    def linear(self) -> int:
        num = max(0, _binom(self.v, self.t) - _binom(self.k, self.t))
        return _ceil_div(num, self.per_block()) + 1

    def circular(self) -> int:
        return _ceil_div(_binom(self.v, self.t), self.per_block())

    def linear_exact(self) -> bool:
        return (_binom(self.v, self.t) - _binom(self.k, self.t)) % self.per_block() == 0

    def circular_exact(self) -> bool:
        return _binom(self.v, self.t) % self.per_block() == 0


def lower_bound_linear(v: int, k: int, t: int = 2, change: int = 2) -> int:
    """Fewest blocks any linear ``change``-change covering design can have."""
    return BoundQuery(v, k, t, change).linear()


def lower_bound_circular(v: int, k: int, t: int = 2, change: int = 2) -> int:
    """Fewest blocks any circular ``change``-change covering design can have."""
    return BoundQuery(v, k, t, change).circular()


@dataclass(frozen=True)
class ChangeCheck:
    ok: bool
    gap: Optional[int] = None
    intersection: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_m_change(d: Design, m: int = 2) -> ChangeCheck:
    """Check that every gap (seam included for circular designs) swaps exactly ``m`` points."""
    if not 1 <= m <= d.k:
        raise ParameterError(f"m={m} not in 1..{d.k}")
    for gap, left, right in d.gaps():
        size = len(left & right)
        if size != d.k - m:
            return ChangeCheck(False, gap, size)
    return ChangeCheck(True)


def change_number(d: Design) -> Optional[int]:
    """The common number of swapped points per gap, or None if gaps disagree or there are none."""
    sizes = {len(left & right) for _, left, right in d.gaps()}
    if len(sizes) != 1:
        return None
    m = d.k - sizes.pop()
    return m if m >= 1 else None


def introductions(d: Design) -> list[frozenset[int]]:
    return [blk - d.predecessor(i) for i, blk in enumerate(d.blocks)]


@dataclass
class CoverageLedger:
    v: int
    t: int
    multiplicity: dict[tuple[int, ...], int]
    uncovered: set[tuple[int, ...]] = field(default_factory=set)

    @property
    def covers_all(self) -> bool:
        return not self.uncovered

    @property
    def total_events(self) -> int:
        return sum(self.multiplicity.values())

    @property
    def exactly_once(self) -> bool:
        return not self.uncovered and all(c == 1 for c in self.multiplicity.values())

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.multiplicity.values():
            hist[c] = hist.get(c, 0) + 1
        if self.uncovered:
            hist[0] = len(self.uncovered)
        return dict(sorted(hist.items()))


def coverage(d: Design, t: int = 2) -> CoverageLedger:
    """Count, for every t-set, the blocks containing it in which one of its members is introduced."""
    if not 1 <= t <= d.k:
        raise ParameterError(f"strength t={t} not in 1..{d.k}")
    mult: dict[tuple[int, ...], int] = {}
    for blk, intro in zip(d.blocks, introductions(d)):
        if not intro:
            continue
        for tset in combinations(sorted(blk), t):
            if any(x in intro for x in tset):
                mult[tset] = mult.get(tset, 0) + 1
    uncovered = {ts for ts in combinations(range(d.v), t) if ts not in mult}
    return CoverageLedger(d.v, t, mult, uncovered)


@dataclass(frozen=True)
class Classification:
    change: Optional[int]
    is_m_change: dict[int, bool]
    covers_all: bool
    economical: bool
    tight: bool
    bound: Optional[int]
    b: int

    def as_dict(self) -> dict:
        return {
            "b": self.b,
            "change": self.change,
            "is_m_change": {str(m): ok for m, ok in self.is_m_change.items()},
            "covers_all": self.covers_all,
            "bound": self.bound,
            "economical": self.economical,
            "tight": self.tight,
        }


def classify(d: Design, t: int = 2, ledger: Optional[CoverageLedger] = None) -> Classification:
    """Classify ``d`` against the lower bound for its own change number.

    A single block counts as 2-change when it has room to be one (k >= 2).
    """
    ledger = ledger if ledger is not None else coverage(d, t)
    tested = {m: bool(verify_m_change(d, m)) for m in (1, 2) if m <= d.k}
    if d.b == 1:
        m = 2 if d.k >= 2 else 1
    else:
        m = change_number(d)
    bound = None
    economical = tight = False
    if m is not None and t <= d.k:
        try:
            q = BoundQuery(d.v, d.k, t, m)
        except ParameterError:
            q = None
        if q is not None:
            bound = q.circular() if d.circular else q.linear()
            exact = q.circular_exact() if d.circular else q.linear_exact()
            economical = ledger.covers_all and d.b == bound
            tight = economical and exact and ledger.exactly_once
    return Classification(m, tested, ledger.covers_all, economical, tight, bound, d.b)


@dataclass(frozen=True)
class UnchangedSubsets:
    """Shared ``(k-2)``-sets of a double-change design, indexed by gap.

    ``interior[i]`` is ``B_i ∩ B_{i+1}`` for ``i`` in ``1..b-1``. Circular designs
    carry a fixed ``seam`` set; linear designs instead expose every ``(k-2)``-subset
    of the first and last blocks as choices for gaps ``0`` and ``b``.
    """

    b: int
    circular: bool
    interior: dict[int, frozenset[int]]
    seam: Optional[frozenset[int]] = None
    first_domain: tuple[frozenset[int], ...] = ()
    last_domain: tuple[frozenset[int], ...] = ()

    def candidates(self) -> list[tuple[int, frozenset[int]]]:
        """Every ``(location, part)`` option, ordered by location then sorted part."""
        out: list[tuple[int, frozenset[int]]] = []
        if not self.circular:
            out += [(0, p) for p in self.first_domain]
        out += [(i, self.interior[i]) for i in sorted(self.interior)]
        if self.circular:
            if self.seam is not None:
                out.append((self.b, self.seam))
        else:
            out += [(self.b, p) for p in self.last_domain]
        return out


def _subset_domain(block: frozenset[int], size: int) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(c) for c in combinations(sorted(block), size))


def unchanged_subsets(d: Design) -> UnchangedSubsets:
    check = verify_m_change(d, 2) if d.k >= 2 else ChangeCheck(False)
    if not check:
        raise StructuralError(f"design is not double change (gap {check.gap})")
    interior = {i + 1: d.blocks[i] & d.blocks[i + 1] for i in range(d.b - 1)}
    if d.circular:
        if d.b == 1:
            raise StructuralError("a single-block circular design has no seam")
        seam = d.blocks[0] & d.blocks[-1]
        return UnchangedSubsets(d.b, True, interior, seam=seam)
    return UnchangedSubsets(
        d.b,
        False,
        interior,
        first_domain=_subset_domain(d.blocks[0], d.k - 2),
        last_domain=_subset_domain(d.blocks[-1], d.k - 2),
    )
