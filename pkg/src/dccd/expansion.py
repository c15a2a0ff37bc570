"""Expansion sets and the 1-factorization recursion that grows a design by
``v/(k-2) + 1`` points."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .constructions import CatalogEntry, base_family, develop
from .design import Design, classify, unchanged_subsets, verify_m_change
from .errors import StructuralError
from .factorization import OneFactorization, circle_method, verify_factorization

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpansionSet:
    """Gap locations whose unchanged subsets partition the point set.

    ``end_choices`` maps linear end gaps (0 and/or b) to the subset picked from
    their free domain.
    """

    locations: tuple[int, ...]
    parts: tuple[frozenset[int], ...]
    end_choices: dict[int, frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.locations)

    def as_pairs(self) -> list[tuple[int, list[int]]]:
        return [(loc, sorted(p)) for loc, p in zip(self.locations, self.parts)]


def find_expansion_set(d: Design) -> Optional[ExpansionSet]:
    """Exact cover of the points by unchanged subsets, or None.

    Branches on the smallest uncovered point; candidates are tried in
    ``(location, part)`` order. Identical parts at single-option locations are
    interchangeable, so only the first of them is tried.
    """
    if d.k <= 2 or d.v % (d.k - 2):
        return None
    us = unchanged_subsets(d)
    candidates = us.candidates()
    by_point: dict[int, list[tuple[int, frozenset[int]]]] = {x: [] for x in range(d.v)}
    for loc, part in candidates:
        for x in part:
            by_point[x].append((loc, part))

    free_ends = set() if d.circular else {0, d.b}
    chosen: list[tuple[int, frozenset[int]]] = []
    used_locs: set[int] = set()
    covered: set[int] = set()

    def solve() -> bool:
        if len(covered) == d.v:
            return True
        x = next(p for p in range(d.v) if p not in covered)
        tried: set[frozenset[int]] = set()
        for loc, part in by_point[x]:
            if loc in used_locs or part in tried or not covered.isdisjoint(part):
                continue
            if loc not in free_ends:
                tried.add(part)
            chosen.append((loc, part))
            used_locs.add(loc)
            covered.update(part)
            if solve():
                return True
            chosen.pop()
            used_locs.discard(loc)
            covered.difference_update(part)
        return False

    if not solve():
        return None
    chosen.sort(key=lambda lp: lp[0])
    ends = {}
    if not d.circular:
        ends = {loc: part for loc, part in chosen if loc in (0, d.b)}
    return ExpansionSet(tuple(l for l, _ in chosen), tuple(p for _, p in chosen), ends)


def check_expansion_set(d: Design, e: ExpansionSet) -> None:
    """Raise StructuralError unless ``e`` is a valid expansion set of ``d``."""
    us = unchanged_subsets(d)
    if list(e.locations) != sorted(set(e.locations)):
        raise StructuralError("expansion locations must be strictly ascending")
    for loc, part in zip(e.locations, e.parts):
        if d.circular:
            if loc == d.b:
                allowed = part == us.seam
            else:
                allowed = us.interior.get(loc) == part
        elif loc == 0:
            allowed = part in us.first_domain
        elif loc == d.b:
            allowed = part in us.last_domain
        else:
            allowed = us.interior.get(loc) == part
        if not allowed:
            raise StructuralError(f"part {sorted(part)} is not the unchanged subset at location {loc}")
    seen: set[int] = set()
    for part in e.parts:
        if not seen.isdisjoint(part):
            raise StructuralError("expansion parts overlap")
        seen |= part
    if seen != set(range(d.v)):
        raise StructuralError("expansion parts do not cover every point")


def expand(d: Design, e: ExpansionSet, f: Optional[OneFactorization] = None) -> Design:
    """Insert ``U ∪ edge`` blocks at every expansion location.

    With ``l`` locations the new points are ``v..v+l``; the j-th location (in
    ascending order) receives factor ``j`` of a 1-factorization of K_{l+1},
    edges in the factor's own order.
    """
    if not verify_m_change(d, 2):
        raise StructuralError("expand needs a double-change design")
    check_expansion_set(d, e)
    l = e.size
    if l % 2 == 0:
        raise StructuralError(f"expansion set has even size {l}; the recursion needs v/(k-2) odd")
    f = f if f is not None else circle_method(l + 1)
    if f.n != l + 1:
        raise StructuralError(f"1-factorization is on K_{f.n}, need K_{l + 1}")
    fcheck = verify_factorization(f)
    if not fcheck:
        raise StructuralError(f"not a 1-factorization: {fcheck.reason}")

    inserts: dict[int, list[frozenset[int]]] = {}
    for j, (loc, part) in enumerate(zip(e.locations, e.parts)):
        inserts[loc] = [part | {d.v + a, d.v + b} for a, b in f.factors[j]]
    blocks = list(inserts.get(0, [])) if not d.circular else []
    for i, blk in enumerate(d.blocks, start=1):
        blocks.append(blk)
        blocks.extend(inserts.get(i, []))
    return Design(d.v + l + 1, d.k, blocks, circular=d.circular)


# Printed parameter list for the recursion applied to difference families.
PRINTED_COROLLARY_PARAMS = (
    (15, 3, 35),
    (21, 5, 30),
    (27, 3, 117),
    (55, 7, 135),
    (39, 3, 247),
    (105, 9, 364),
    (67, 3, 489),
    (77, 5, 418),
    (161, 11, 640),
    (63, 3, 651),
    (253, 13, 1386),
)


def chain_pairs(c_max: int = 5) -> list[tuple[int, int]]:
    """``(c, k)`` with ``(k-2) | 2c+1`` and an odd quotient, so the expansion set has odd size."""
    pairs = []
    for c in range(1, c_max + 1):
        for k in range(3, 2 * c + 4):
            q, r = divmod(2 * c + 1, k - 2)
            if r == 0 and q % 2 == 1:
                pairs.append((c, k))
    return pairs


def chain_entry(c: int, k: int) -> CatalogEntry:
    src = develop(base_family(k, c))
    e = find_expansion_set(src)
    if e is None:
        raise StructuralError(f"no expansion set for the (c={c}, k={k}) family")
    out = expand(src, e)
    cls = classify(out)
    if not (cls.tight and out.circular):
        raise StructuralError(f"expansion of the (c={c}, k={k}) family is not a tight circular design")
    name = f"cdccd-{out.v}-{out.k}-{out.b}"
    return CatalogEntry(name, out, f"expand(develop(base_family(k={k}, c={c})), circle_method({e.size + 1}))")


def corollary_chain() -> list[CatalogEntry]:
    entries = [chain_entry(c, k) for c, k in chain_pairs()]
    printed = set(PRINTED_COROLLARY_PARAMS)
    for entry in entries:
        params = (entry.design.v, entry.design.k, entry.design.b)
        if params not in printed:
            log.warning("chain produced %s, which is not in the printed list", params)
    return entries


def chain_discrepancies(entries: list[CatalogEntry]) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """(computed params missing from the printed list, printed params not computed)."""
    got = [(e.design.v, e.design.k, e.design.b) for e in entries]
    printed = list(PRINTED_COROLLARY_PARAMS)
    return [p for p in got if p not in printed], [p for p in printed if p not in got]
