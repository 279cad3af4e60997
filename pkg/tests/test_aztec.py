"""Diamond geometry, barriers, exact counting, enumeration, signatures."""

from collections import Counter
from random import Random

import pytest

from aztec_barriers.aztec import (
    COUNT_CEILING,
    ENUM_CEILING,
    ZAG,
    ZIG,
    ZIP,
    barrier_sweep,
    blocked_edges,
    count_tilings,
    diamond_cells,
    enumerate_tilings,
    normalize_barriers,
    partition_signature,
    signature_class_size,
    signature_partition,
    spine_cells,
    spine_k,
    spine_signature,
    tiling_from_obj,
    tiling_to_obj,
)
from aztec_barriers.partitions import BalancedPartition


def random_barriers(n, rng):
    return "".join(rng.choice([ZIG, ZAG, ZIP]) for _ in range(2 * spine_k(n)))


def is_compatible(tiling, blocked):
    return all(frozenset(domino) not in blocked for domino in tiling)


def test_cell_counts():
    for n in range(1, 13):
        assert len(diamond_cells(n)) == 2 * n * (n + 1)


def test_spine_geometry():
    for n in range(1, 13):
        spine = spine_cells(n)
        assert len(spine) == 2 * ((n + 1) // 2)
        cells = diamond_cells(n)
        assert all(c in cells for c in spine)
        # the spine is maximal: the diagonal cells just beyond it fall outside
        assert (spine_k(n), spine_k(n)) not in cells


def test_normalize_barriers():
    assert normalize_barriers(2, None) == ".."
    assert normalize_barriers(2, ".i") == ".i"
    with pytest.raises(ValueError):
        normalize_barriers(2, ".")
    with pytest.raises(ValueError):
        normalize_barriers(2, "xx")
    with pytest.raises(ValueError):
        count_tilings(0)


def test_blocked_edges_all_zip_is_empty():
    assert blocked_edges(3) == frozenset()


def test_blocked_edges_zig_blocks_south_and_east():
    edges = blocked_edges(2, "i.")
    assert edges == frozenset(
        {frozenset({(-1, -1), (-1, -2)}), frozenset({(-1, -1), (0, -1)})}
    )


def test_blocked_edges_spec_configuration_has_eight():
    assert len(blocked_edges(8, ".i.a.a.i")) == 8


def test_blocked_edges_outside_region_are_dropped():
    # order 3: the SW spine square's south and west edges leave the diamond,
    # so either mark keeps only its one interior edge
    assert blocked_edges(3, "i...") == frozenset({frozenset({(-2, -2), (-1, -2)})})
    assert blocked_edges(3, "a...") == frozenset({frozenset({(-2, -2), (-2, -1)})})
    # an interior square keeps both of its edges
    assert len(blocked_edges(3, ".i..")) == 2


@pytest.mark.parametrize("n,expected", [(1, 2), (2, 8), (3, 64), (4, 1024)])
def test_unconstrained_counts(n, expected):
    assert count_tilings(n) == expected


def test_count_with_single_zig():
    assert count_tilings(2, ".i") == 4


def test_count_ceiling_enforced():
    with pytest.raises(ValueError):
        count_tilings(COUNT_CEILING + 1)
    with pytest.raises(ValueError):
        list(enumerate_tilings(ENUM_CEILING + 1))


def test_enumerate_order_one_explicitly():
    tilings = list(enumerate_tilings(1))
    horizontal = (((-1, -1), (0, -1)), ((-1, 0), (0, 0)))
    vertical = (((-1, -1), (-1, 0)), ((0, -1), (0, 0)))
    assert set(tilings) == {horizontal, vertical}
    assert len(tilings) == 2


def test_enumeration_is_deterministic():
    first = list(enumerate_tilings(3, ".i.a"))
    second = list(enumerate_tilings(3, ".i.a"))
    assert first == second


def test_enumeration_matches_count_on_random_configs():
    rng = Random(99)
    for n in range(1, 5):
        for _ in range(5):
            cfg = random_barriers(n, rng)
            tilings = list(enumerate_tilings(n, cfg))
            assert len(tilings) == count_tilings(n, cfg), (n, cfg)
            assert len(set(tilings)) == len(tilings)
            blocked = blocked_edges(n, cfg)
            assert all(is_compatible(t, blocked) for t in tilings)


def test_mixed_zig_zag_example():
    assert count_tilings(3, ".i.i") == 16
    assert len(list(enumerate_tilings(3, ".i.i"))) == 16


def test_signature_of_order_one_tilings():
    horizontal = (((-1, -1), (0, -1)), ((-1, 0), (0, 0)))
    vertical = (((-1, -1), (-1, 0)), ((0, -1), (0, 0)))
    assert spine_signature(vertical, 1) == "ia"
    assert spine_signature(horizontal, 1) == "ai"


def test_signature_balance():
    for n in range(1, 4):
        k = spine_k(n)
        for tiling in enumerate_tilings(n):
            sig = spine_signature(tiling, n)
            assert sig.count(ZIG) == k
            assert sig.count(ZAG) == k


def test_signature_requires_cover():
    with pytest.raises(ValueError):
        spine_signature((), 1)


def test_signature_partition_roundtrip():
    p = BalancedPartition.from_zigs((2, 3, 5, 8))
    assert partition_signature(p) == "aiiaiaai"
    assert signature_partition("aiiaiaai") == p
    assert signature_partition(partition_signature(p)) == p
    with pytest.raises(ValueError):
        signature_partition("ii")
    with pytest.raises(ValueError):
        signature_partition("i.")


def test_class_sizes_match_product_formula():
    for n in range(1, 5):
        histogram = Counter(spine_signature(t, n) for t in enumerate_tilings(n))
        for sig, size in histogram.items():
            assert signature_class_size(signature_partition(sig), n) == size
        assert sum(histogram.values()) == 1 << (n * (n + 1) // 2)


def test_each_tiling_compatible_with_exactly_its_own_signature_config():
    for n in (1, 2, 3):
        k = spine_k(n)
        from aztec_barriers.partitions import enumerate_balanced

        full_configs = {
            partition_signature(p): blocked_edges(n, partition_signature(p))
            for p in enumerate_balanced(k)
        }
        for tiling in enumerate_tilings(n):
            compatible = [
                sig for sig, blocked in full_configs.items() if is_compatible(tiling, blocked)
            ]
            assert compatible == [spine_signature(tiling, n)]


def test_signature_class_size_examples():
    assert signature_class_size(BalancedPartition.from_zigs((1,), 1), 1) == 1
    assert signature_class_size(BalancedPartition.from_zigs((1,), 1), 2) == 4
    p = BalancedPartition.from_zigs((2, 3, 5, 8))
    assert signature_class_size(p, 8) == 2025 * (1 << 20)
    with pytest.raises(ValueError):
        signature_class_size(p, 4)


def test_barrier_sweep_small_orders():
    assert [count for _, count in barrier_sweep(2)] == [4, 4]
    assert [count for _, count in barrier_sweep(4)] == [256] * 4
    assert [count for _, count in barrier_sweep(3, rotated=True)] == [16] * 4
    assert [count for _, count in barrier_sweep(3)] == [16] * 4


def test_sweep_covers_all_subsets():
    table = barrier_sweep(4)
    assert [subset for subset, _ in table] == [(), (2,), (4,), (2, 4)]


def test_adding_barriers_never_increases_count():
    rng = Random(123)
    for n in (2, 3):
        for _ in range(8):
            cfg = list(random_barriers(n, rng))
            zips = [i for i, ch in enumerate(cfg) if ch == ZIP]
            if not zips:
                continue
            base = count_tilings(n, "".join(cfg))
            idx = rng.choice(zips)
            for mark in (ZIG, ZAG):
                harder = cfg.copy()
                harder[idx] = mark
                assert count_tilings(n, "".join(harder)) <= base


def test_tiling_json_roundtrip():
    for tiling in enumerate_tilings(2, ".a"):
        assert tiling_from_obj(tiling_to_obj(tiling)) == tiling
