import pytest

from dccd import (
    Design,
    ExpansionSet,
    StructuralError,
    base_family,
    catalog,
    circle_method,
    classify,
    csccd_consecutive,
    develop,
    double_points,
    exhaustive_min_blocks,
    expand,
    find_expansion_set,
    verify_m_change,
)
from dccd.expansion import chain_pairs

from .oracles import brute_force_partitions


def test_table1_linear_partition(table1_linear):
    e = find_expansion_set(table1_linear)
    assert e.as_pairs() == [(0, [2]), (1, [0]), (2, [4]), (3, [3]), (4, [6]), (6, [5]), (7, [1])]
    assert e.end_choices == {0: {2}, 7: {1}}
    assert e.as_pairs() in [[(l, sorted(p)) for l, p in part] for part in brute_force_partitions(table1_linear)]


def test_table1_circular_has_none(table1_circular):
    assert find_expansion_set(table1_circular) is None
    assert brute_force_partitions(table1_circular) == []


def test_developed_triples_singletons():
    d = develop(base_family(3, 1))
    e = find_expansion_set(d)
    assert e.locations == tuple(range(1, 8))
    assert all(len(p) == 1 for p in e.parts)


def test_table5_partition():
    d = double_points(csccd_consecutive(2))
    e = find_expansion_set(d)
    assert e.as_pairs() == [(1, [2, 3]), (2, [4, 5]), (3, [0, 1])]


def test_not_divisible_returns_none():
    # 11 points cannot be split into pairs
    assert find_expansion_set(catalog("cdccd-11-4-11").design) is None


def test_expand_table1_linear(table1_linear, table3):
    out = expand(table1_linear, find_expansion_set(table1_linear), circle_method(8))
    assert (out.v, out.k, out.b, out.circular) == (15, 3, 35, False)
    assert classify(out).tight
    assert classify(table3) == classify(out)


def test_expand_inserts_at_locations(table1_linear):
    out = expand(table1_linear, find_expansion_set(table1_linear))
    # four blocks {2} ∪ edge precede the old first block
    assert [sorted(b) for b in out.blocks[:5]] == [[2, 7, 14], [2, 8, 13], [2, 9, 12], [2, 10, 11], [0, 1, 2]]
    # the seam-end choice {1} closes the design with one full factor
    tail = out.blocks[-4:]
    assert all(1 in b for b in tail)
    assert set().union(*tail) - {1} == set(range(7, 15))


def test_expand_developed_triples():
    out = expand(develop(base_family(3, 1)), find_expansion_set(develop(base_family(3, 1))), circle_method(8))
    assert (out.v, out.b, out.circular) == (15, 35, True)
    assert classify(out).tight


def test_expand_table5_gives_10_4_9(table4):
    src = double_points(csccd_consecutive(2))
    out = expand(src, find_expansion_set(src))
    assert (out.v, out.k, out.b) == (10, 4, 9)
    assert classify(out).tight and classify(table4).tight
    # old-point traces agree with the hand-built table; only the factor placement may differ
    trace = lambda d: sorted(tuple(sorted(b & set(range(6)))) for b in d.blocks)
    assert trace(out) == trace(table4)
    assert out.blocks[0] == table4.blocks[0]


@pytest.mark.parametrize("v,k,b", [(7, 3, 7), (15, 5, 15), (6, 4, 3), (13, 3, 26)])
def test_block_count_identity(v, k, b):
    l = v // (k - 2)
    assert b + l * (v + k - 2) // (2 * k - 4) == b + l * (l + 1) // 2


def test_expand_rejects_even_size():
    d, _ = exhaustive_min_blocks(6, 3, False, 6)
    e = find_expansion_set(d)
    assert e is not None and e.size % 2 == 0
    with pytest.raises(StructuralError, match="even"):
        expand(d, e)


def test_expand_rejects_wrong_factorization(table1_linear):
    with pytest.raises(StructuralError):
        expand(table1_linear, find_expansion_set(table1_linear), circle_method(6))


def test_expand_rejects_bad_part(table1_linear):
    e = find_expansion_set(table1_linear)
    parts = list(e.parts)
    parts[1], parts[2] = parts[2], parts[1]
    with pytest.raises(StructuralError):
        expand(table1_linear, ExpansionSet(e.locations, tuple(parts), e.end_choices))


def test_expand_rejects_overlap(table1_linear):
    bad = ExpansionSet((1, 2), (frozenset({0}), frozenset({4})), {})
    with pytest.raises(StructuralError):
        expand(table1_linear, bad)


@pytest.mark.parametrize("k", range(3, 13))
@pytest.mark.parametrize("c", range(1, 6))
def test_developed_family_expansion_iff_divisible(k, c):
    d = develop(base_family(k, c))
    e = find_expansion_set(d)
    if (2 * c + 1) % (k - 2) == 0:
        assert e is not None
        assert e.size == 4 * c + (2 * c + 1) // (k - 2)
    else:
        assert e is None


@pytest.mark.parametrize("kp", range(2, 11))
def test_doubled_design_expansion_only_for_k4(kp):
    e = find_expansion_set(double_points(csccd_consecutive(kp)))
    assert (e is not None) == (2 * kp == 4)


def test_chain_pairs():
    assert chain_pairs() == [(1, 3), (1, 5), (2, 3), (2, 7), (3, 3), (3, 9), (4, 3), (4, 5), (4, 11), (5, 3), (5, 13)]
    # c=1, k=3: 4c + (2c+1)/(k-2) = 7
    assert 4 * 1 + 3 // 1 == 7


def _small_corpus(table1_linear, table1_circular, table3, table4):
    corpus = [table1_linear, table1_circular, table3, table4]
    corpus += [catalog(n).design for n in ("cdccd-6-4-3", "cdccd-10-4-9", "cdccd-11-4-11", "cdccd-13-3-26",
                                              "cdccd-7-5-3", "cdccd-10-6-5", "cdccd-11-7-5", "cdccd-15-5-15",
                                              "cdccd-15-3-35", "dccd-15-3-35", "cdccd-14-8-7", "cdccd-15-9-7",
                                              "cdccd-7-3-7-diff")]
    corpus += [exhaustive_min_blocks(6, 3, False, 6)[0], exhaustive_min_blocks(6, 3, True, 6)[0],
               exhaustive_min_blocks(8, 4, False, 8)[0], exhaustive_min_blocks(7, 3, True, 7)[0]]
    return [d for d in corpus if d.v <= 16 and verify_m_change(d, 2)]


def test_backtracking_agrees_with_brute_force(table1_linear, table1_circular, table3, table4):
    corpus = _small_corpus(table1_linear, table1_circular, table3, table4)
    assert len(corpus) >= 15
    for d in corpus:
        e = find_expansion_set(d)
        partitions = brute_force_partitions(d)
        assert (e is not None) == bool(partitions), d
        if e is not None:
            assert sorted(zip(e.locations, e.parts)) in partitions


def test_expanded_designs_have_no_expansion_set(table1_linear):
    sources = [table1_linear, develop(base_family(3, 1)), double_points(csccd_consecutive(2)),
               develop(base_family(5, 1)), develop(base_family(3, 2))]
    for src in sources:
        out = expand(src, find_expansion_set(src))
        assert out.v <= 30
        assert find_expansion_set(out) is None
        if out.v <= 16:
            assert brute_force_partitions(out) == []


def test_expansion_preserves_flags():
    for src in (develop(base_family(3, 1)), double_points(csccd_consecutive(2)), develop(base_family(5, 1))):
        out = expand(src, find_expansion_set(src))
        a, b = classify(src), classify(out)
        assert (a.tight, a.economical, src.circular) == (b.tight, b.economical, out.circular)
        l = src.v // (src.k - 2)
        assert out.v == src.v + l + 1 and out.b == src.b + l * (l + 1) // 2


def test_not_double_change_rejected():
    with pytest.raises(StructuralError):
        find_expansion_set(Design(7, 3, [[0, 1, 2], [0, 1, 3]]))
