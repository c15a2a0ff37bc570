"""Direct constructions: consecutive-block CSCCDs, point doubling, point adjunction,
and cyclic development of base-block families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .design import Design, classify, verify_m_change
from .errors import ParameterError, StructuralError


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    design: Design
    provenance: str
    notes: str = ""


def csccd_consecutive(kprime: int) -> Design:
    """Circular single-change design on Z_{2k'-1} with blocks {i, ..., i+k'-1}."""
    if kprime < 2:
        raise ParameterError(f"k' must be at least 2, got {kprime}")
    v = 2 * kprime - 1
    blocks = [[(i + j) % v for j in range(kprime)] for i in range(v)]
    return Design(v, kprime, blocks, circular=True)


def double_points(s: Design) -> Design:
    """Replace every point x by the two points 2x and 2x+1."""
    if not s.circular or not verify_m_change(s, 1):
        raise StructuralError("doubling needs a circular single-change design")
    blocks = [[y for x in blk for y in (2 * x, 2 * x + 1)] for blk in s.blocks]
    return Design(2 * s.v, 2 * s.k, blocks, circular=True)


def adjoin_point(d: Design) -> Design:
    """Add one new point (labelled ``v``) to every block of a tight CDCCD(2k-2, k, k-1), k even."""
    k = d.k
    if k % 2 or d.v != 2 * k - 2 or d.b != k - 1 or not d.circular:
        raise StructuralError(f"adjoin_point needs a circular CDCCD(2k-2,k,k-1) with k even; got v={d.v} k={k} b={d.b}")
    if not classify(d).tight:
        raise StructuralError("adjoin_point needs a tight input design")
    return Design(d.v + 1, k + 1, [set(blk) | {d.v} for blk in d.blocks], circular=True)


@dataclass(frozen=True)
class BaseBlockFamily:
    v: int
    k: int
    base_blocks: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.base_blocks)


@dataclass
class FamilyReport:
    ok: bool
    bad_sizes: list[int] = field(default_factory=list)
    bad_seams: list[tuple[int, int]] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)
    repeated: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        parts = []
        if self.bad_sizes:
            parts.append(f"blocks with wrong size: {self.bad_sizes}")
        if self.bad_seams:
            parts.append("seams (block index, intersection size): " + str(self.bad_seams))
        if self.missing:
            parts.append(f"missing differences: {self.missing}")
        if self.repeated:
            parts.append(f"repeated differences: {self.repeated}")
        return "; ".join(parts) or "ok"


def _shift(block, i: int, v: int) -> frozenset[int]:
    return frozenset((x + i) % v for x in block)


# Table of (x, y) pairs per family size, as functions of s = k-2; A = {0..k-3}.
_FAMILIES = {
    1: lambda s: [(s, 2 * s + 1)],
    2: lambda s: [(2 * s, 5 * s + 2), (s, 3 * s + 1)],
    3: lambda s: [(2 * s, 7 * s + 3), (3 * s + 1, 5 * s + 2), (s, 4 * s + 2)],
    4: lambda s: [(2 * s, 8 * s + 4), (3 * s + 1, 5 * s + 2), (4 * s + 2, 7 * s + 4), (s, 6 * s + 3)],
    5: lambda s: [
        (2 * s, 6 * s + 3),
        (3 * s, 9 * s + 4),
        (4 * s + 2, 7 * s + 4),
        (5 * s + 3, 8 * s + 4),
        (s, 10 * s + 5),
    ],
}


def base_family(k: int, c: int) -> BaseBlockFamily:
    """The c base blocks over Z_{c(4k-6)+1}, in development order."""
    if k < 3:
        raise ParameterError(f"k must be at least 3, got {k}")
    if c not in _FAMILIES:
        raise ParameterError(f"c must be in 1..5, got {c} (use base_family_61 for the c=6, k=4 family)")
    s = k - 2
    a = tuple(range(s))
    blocks = tuple(a + xy for xy in _FAMILIES[c](s))
    return BaseBlockFamily(c * (4 * k - 6) + 1, k, blocks)


def base_family_61() -> BaseBlockFamily:
    blocks = ((0, 1, 4, 19), (0, 1, 6, 22), (0, 1, 8, 25), (0, 1, 10, 48), (0, 1, 12, 32), (0, 1, 2, 28))
    return BaseBlockFamily(61, 4, blocks)


def verify_base_family(f: BaseBlockFamily) -> FamilyReport:
    """Check block sizes, the k-2 overlap of consecutive base blocks (the last
    against the first shifted by one), and that the introduced differences hit
    every nonzero residue exactly once."""
    v, k = f.v, f.k
    report = FamilyReport(True)
    blocks = [frozenset(x % v for x in blk) for blk in f.base_blocks]
    for j, blk in enumerate(blocks):
        if len(blk) != k or len(f.base_blocks[j]) != k:
            report.bad_sizes.append(j)
    if report.bad_sizes:
        report.ok = False
        return report
    c = len(blocks)
    # predecessor of base block j is j-1, and of the first block the last one shifted back by one
    preds = [_shift(blocks[-1], -1, v)] + blocks[:-1]
    diffs: Counter[int] = Counter()
    for j, (blk, pred) in enumerate(zip(blocks, preds)):
        nxt = blocks[j + 1] if j + 1 < c else _shift(blocks[0], 1, v)
        size = len(blk & nxt)
        if size != k - 2:
            report.bad_seams.append((j, size))
        intro = blk - pred
        for x in intro:
            for y in blk:
                if y == x or (y in intro and y < x):
                    continue
                diffs[(x - y) % v] += 1
                diffs[(y - x) % v] += 1
    report.missing = [d for d in range(1, v) if diffs[d] == 0]
    report.repeated = [d for d in range(1, v) if diffs[d] > 1]
    report.ok = not (report.bad_seams or report.missing or report.repeated)
    return report


def develop(f: BaseBlockFamily, check: bool = True) -> Design:
    """Blocks B_{i,j} = base_j + i (mod v), ordered by round i then family index j."""
    if check:
        report = verify_base_family(f)
        if not report:
            raise StructuralError(f"base family over Z_{f.v} is invalid: {report.describe()}")
    blocks = [_shift(base, i, f.v) for i in range(f.v) for base in f.base_blocks]
    return Design(f.v, f.k, blocks, circular=True)


def family_name(f: BaseBlockFamily, suffix: Optional[str] = None) -> str:
    name = f"cdccd-{f.v}-{f.k}-{f.c * f.v}"
    return f"{name}-{suffix}" if suffix else name
