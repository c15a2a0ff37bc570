"""Bounded exhaustive search for minimum m-change covering designs (pairs only).

The search is a depth-first enumeration over block sequences with two
symmetry reductions: the first block is ``{0..k-1}``, and points that have not
appeared yet may only enter in ascending order. Successors are tried in
lexicographic order of their sorted tuples, so the first witness found is the
canonical one.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb
from typing import Optional

from .design import Design
from .errors import ParameterError, SearchBudgetExceeded, SearchRefused

DEFAULT_NODE_BUDGET = 2_000_000
MAX_BLOCK_SPACE = 10_000
MAX_B = 12
BUDGET_ENV = "DCCD_SEARCH_BUDGET"


def _budget_from_env() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ParameterError(f"{BUDGET_ENV} must be positive")
    return value


class _Searcher:
    def __init__(self, v: int, k: int, m: int, circular: bool, budget: int):
        self.v, self.k, self.m, self.circular = v, k, m, circular
        self.budget = budget
        self.nodes = 0
        self.per_block = comb(m, 2) + m * (k - m)
        self.pair_index = [[-1] * v for _ in range(v)]
        idx = 0
        for x, y in combinations(range(v), 2):
            self.pair_index[x][y] = self.pair_index[y][x] = idx
            idx += 1
        self.n_pairs = idx
        self._succ_cache: dict[tuple[frozenset[int], int], list[frozenset[int]]] = {}

    def successors(self, block: frozenset[int], used: int) -> list[frozenset[int]]:
        key = (block, used)
        hit = self._succ_cache.get(key)
        if hit is not None:
            return hit
        outside_used = [x for x in range(used) if x not in block]
        fresh = list(range(used, self.v))
        out = []
        for drop in combinations(sorted(block), self.m):
            keep = block.difference(drop)
            for n_fresh in range(0, min(self.m, len(fresh)) + 1):
                # fresh points are interchangeable: take the lowest ones only
                new_fresh = fresh[:n_fresh]
                for old in combinations(outside_used, self.m - n_fresh):
                    out.append(keep.union(old, new_fresh))
        out.sort(key=lambda s: tuple(sorted(s)))
        self._succ_cache[key] = out
        return out

    def covered_pairs(self, block: frozenset[int], intro: frozenset[int]) -> list[int]:
        pi = self.pair_index
        return [pi[x][y] for x, y in combinations(sorted(block), 2) if x in intro or y in intro]

    def run(self, b: int) -> Optional[list[frozenset[int]]]:
        first = frozenset(range(self.k))
        counts = [0] * self.n_pairs
        uncovered = self.n_pairs
        if not self.circular or b == 1:
            for p in self.covered_pairs(first, first):
                counts[p] += 1
            uncovered -= len(set(self.covered_pairs(first, first)))
        self._first = first
        self._counts = counts
        self._b = b
        first_pairs = {self.pair_index[x][y] for x, y in combinations(sorted(first), 2)}
        self._in_first = [i in first_pairs for i in range(self.n_pairs)]
        self._outside_first = sum(1 for i, c in enumerate(counts) if c == 0 and not self._in_first[i])
        return self._dfs([first], uncovered, self.k)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget, self._b)

    def _dfs(self, seq: list[frozenset[int]], uncovered: int, used: int) -> Optional[list[frozenset[int]]]:
        self._tick()
        remaining = self._b - len(seq)
        if remaining == 0:
            return self._finish(seq, uncovered)
        pending_first = self.circular and self._b > 1
        if uncovered > (remaining + pending_first) * self.per_block:
            return None
        # the first block of a circular design can only pick up pairs lying inside it
        if pending_first and self._outside_first > remaining * self.per_block:
            return None
        counts = self._counts
        in_first = self._in_first
        last = seq[-1]
        for nxt in self.successors(last, used):
            if remaining == 1 and self.circular and len(nxt & self._first) != self.k - self.m:
                continue
            pairs = self.covered_pairs(nxt, nxt - last)
            newly = newly_outside = 0
            for p in pairs:
                if counts[p] == 0:
                    newly += 1
                    newly_outside += not in_first[p]
                counts[p] += 1
            self._outside_first -= newly_outside
            new_used = max(used, max(nxt) + 1)
            seq.append(nxt)
            found = self._dfs(seq, uncovered - newly, new_used)
            if found is not None:
                return found
            seq.pop()
            self._outside_first += newly_outside
            for p in pairs:
                counts[p] -= 1
        return None

    def _finish(self, seq: list[frozenset[int]], uncovered: int) -> Optional[list[frozenset[int]]]:
        if not (self.circular and self._b > 1):
            return list(seq) if uncovered == 0 else None
        first = seq[0]
        pairs = self.covered_pairs(first, first - seq[-1])
        newly = sum(1 for p in set(pairs) if self._counts[p] == 0)
        return list(seq) if uncovered - newly == 0 else None


def exhaustive_min_blocks(
    v: int,
    k: int,
    circular: bool,
    b_max: int,
    *,
    m: int = 2,
    node_budget: Optional[int] = None,
    allow_large: bool = False,
) -> Optional[tuple[Design, int]]:
    """Smallest ``b <= b_max`` admitting an m-change design covering every pair.

    Returns ``(design, b)`` for the canonical witness, or ``None`` when the search
    proves that no such design exists up to ``b_max``. Raises
    :class:`SearchBudgetExceeded` if the node budget runs out first, so "budget
    exhausted" is never confused with "none exists".
    """
    if k < 2 or v < k:
        raise ParameterError(f"need 2 <= k <= v, got v={v}, k={k}")
    if not 1 <= m <= k:
        raise ParameterError(f"m={m} not in 1..{k}")
    if b_max < 1:
        raise ParameterError("b_max must be positive")
    if not allow_large and (comb(v, k) > MAX_BLOCK_SPACE or b_max > MAX_B):
        raise SearchRefused(
            f"C({v},{k})={comb(v, k)} or b_max={b_max} exceeds the default guard "
            f"(C(v,k) <= {MAX_BLOCK_SPACE}, b_max <= {MAX_B}); pass allow_large to override"
        )
    budget = node_budget if node_budget is not None else _budget_from_env()
    searcher = _Searcher(v, k, m, circular, budget)
    for b in range(1, b_max + 1):
        found = searcher.run(b)
        if found is not None:
            return Design(v, k, found, circular), b
    return None
