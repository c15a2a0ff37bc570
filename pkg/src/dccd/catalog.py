"""Named designs. Only the hand-built STS(7) ordering is stored; everything else is rebuilt
from its construction on lookup and re-verified before it is returned."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .constructions import (
    CatalogEntry,
    adjoin_point,
    base_family,
    base_family_61,
    csccd_consecutive,
    develop,
    double_points,
)
from .design import Design, classify
from .errors import StructuralError
from .expansion import chain_entry, chain_pairs, expand, find_expansion_set

TABLE1_BLOCKS = ((0, 1, 2), (0, 4, 5), (2, 3, 4), (0, 3, 6), (1, 4, 6), (2, 5, 6), (1, 3, 5))


def table1(circular: bool = True) -> Design:
    return Design(7, 3, TABLE1_BLOCKS, circular=circular)


def _expand_first(d: Design) -> Design:
    e = find_expansion_set(d)
    if e is None:
        raise StructuralError("design has no expansion set")
    return expand(d, e)


# name -> (builder, provenance, promised change number, promised circular flag)
_Builder = Callable[[], Design]
_REGISTRY: dict[str, tuple[_Builder, str, int, bool]] = {}


def _register(name: str, builder: _Builder, provenance: str, change: int = 2, circular: bool = True) -> None:
    if name in _REGISTRY:
        raise RuntimeError(f"duplicate catalog name {name}")
    _REGISTRY[name] = (builder, provenance, change, circular)


def _populate() -> None:
    _register("cdccd-7-3-7", lambda: table1(True), "stored: STS(7) blocks in a hand-built circular order")
    _register("dccd-7-3-7", lambda: table1(False), "stored: STS(7) blocks, linear reading", circular=False)
    _register("cdccd-7-3-7-linear", lambda: table1(False), "alias of dccd-7-3-7", circular=False)
    _register(
        "dccd-15-3-35",
        lambda: _expand_first(table1(False)),
        "expand(dccd-7-3-7, circle_method(8))",
        circular=False,
    )
    for kp in range(2, 11):
        v = 2 * kp - 1
        _register(f"csccd-{v}-{kp}-{v}", lambda kp=kp: csccd_consecutive(kp), f"csccd_consecutive({kp})", change=1)
        _register(
            f"cdccd-{2 * v}-{2 * kp}-{v}",
            lambda kp=kp: double_points(csccd_consecutive(kp)),
            f"double_points(csccd_consecutive({kp}))",
        )
        _register(
            f"cdccd-{2 * v + 1}-{2 * kp + 1}-{v}",
            lambda kp=kp: adjoin_point(double_points(csccd_consecutive(kp))),
            f"adjoin_point(double_points(csccd_consecutive({kp})))",
        )
    _register(
        "cdccd-3-3-1",
        lambda: adjoin_point(Design(2, 2, [[0, 1]], circular=True)),
        "adjoin_point of the one-block CDCCD(2,2,1); degenerate (b=1)",
    )
    _register(
        "cdccd-10-4-9",
        lambda: _expand_first(double_points(csccd_consecutive(2))),
        "expand(cdccd-6-4-3, circle_method(4)); new points 6..9",
    )
    for k in range(3, 13):
        for c in range(1, 6):
            fam = base_family(k, c)
            name = f"cdccd-{fam.v}-{k}-{c * fam.v}"
            if name in _REGISTRY:
                name += "-diff"
            _register(name, lambda k=k, c=c: develop(base_family(k, c)), f"develop(base_family(k={k}, c={c}))")
    _register("cdccd-61-4-366", lambda: develop(base_family_61()), "develop(base_family_61())")
    for c, k in chain_pairs():
        fam = base_family(k, c)
        l = fam.v // (k - 2)
        name = f"cdccd-{fam.v + l + 1}-{k}-{c * fam.v + l * (l + 1) // 2}"
        _register(name, lambda c=c, k=k: chain_entry(c, k).design, f"expand(develop(base_family(k={k}, c={c})))")


_populate()

RECURSION_NAMES = tuple(
    ["cdccd-10-4-9"]
    + [n for n, (_, prov, _, _) in _REGISTRY.items() if prov.startswith("expand(develop(")]
)


def catalog_names() -> list[str]:
    return sorted(_REGISTRY)


@lru_cache(maxsize=None)
def catalog(name: str) -> CatalogEntry:
    """Build, verify and return the named design."""
    try:
        builder, provenance, change, circular = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}; available: {', '.join(catalog_names())}") from None
    design = builder()
    cls = classify(design)
    if not (cls.tight and cls.change == change and design.circular == circular):
        raise StructuralError(f"catalog entry {name} failed verification: {cls.as_dict()}")
    return CatalogEntry(name, design, provenance)
