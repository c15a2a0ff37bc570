"""1-factorizations of complete graphs K_n, n even."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import ParameterError

Edge = tuple[int, int]


@dataclass(frozen=True)
class OneFactorization:
    n: int
    factors: tuple[tuple[Edge, ...], ...]


@dataclass(frozen=True)
class FactorizationCheck:
    ok: bool
    reason: Optional[str] = None
    factor: Optional[int] = None
    vertex: Optional[int] = None
    edge: Optional[Edge] = None

    def __bool__(self) -> bool:
        return self.ok


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def circle_method(n: int) -> OneFactorization:
    """Round-robin factorization: vertex ``n-1`` is fixed, the others rotate.

    Factor ``j`` pairs ``j`` with ``n-1`` and ``j-i`` with ``j+i`` (mod ``n-1``)
    for ``1 <= i < n/2``. Edges are stored smaller endpoint first and sorted.
    """
    if n < 2 or n % 2:
        raise ParameterError(f"circle method needs an even n >= 2, got {n}")
    r = n - 1
    factors = []
    for j in range(r):
        edges = [_edge(j, r)]
        edges += [_edge((j - i) % r, (j + i) % r) for i in range(1, n // 2)]
        factors.append(tuple(sorted(edges)))
    return OneFactorization(n, tuple(factors))


def verify_factorization(f: OneFactorization) -> FactorizationCheck:
    """Each factor a perfect matching, and every edge of K_n in exactly one factor."""
    n = f.n
    if n < 2 or n % 2:
        return FactorizationCheck(False, "n must be even and at least 2")
    seen: set[Edge] = set()
    for j, factor in enumerate(f.factors):
        touched: set[int] = set()
        for a, b in factor:
            if a == b or not (0 <= a < n and 0 <= b < n):
                return FactorizationCheck(False, "bad edge", factor=j, edge=(a, b))
            for x in (a, b):
                if x in touched:
                    return FactorizationCheck(False, "vertex in two edges of one factor", factor=j, vertex=x)
                touched.add(x)
            e = _edge(a, b)
            if e in seen:
                return FactorizationCheck(False, "edge repeated across factors", factor=j, edge=e)
            seen.add(e)
        if len(touched) != n:
            missing = min(set(range(n)) - touched)
            return FactorizationCheck(False, "vertex not matched", factor=j, vertex=missing)
    for e in combinations(range(n), 2):
        if e not in seen:
            return FactorizationCheck(False, "edge not in any factor", edge=e)
    return FactorizationCheck(True)
