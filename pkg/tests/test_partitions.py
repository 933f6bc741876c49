import math
from collections import Counter

import pytest

from sumzero.errors import ResourceLimitError
from sumzero.partitions import (
    SetPartition,
    Shape,
    set_partitions,
    shape_gcd,
    shape_multiplicity,
    shapes_of,
)


def _bell(n):
    # Bell triangle, independent of the enumerator
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _partition_count(n):
    # coin-change recurrence for p(n)
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def test_shapes_of_small():
    assert [s.parts for s in shapes_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [s.parts for s in shapes_of(1)] == [(1,)]
    assert [s.parts for s in shapes_of(0)] == [()]


@pytest.mark.parametrize("n", range(1, 16))
def test_shape_count_and_uniqueness(n):
    shapes = [s.parts for s in shapes_of(n)]
    assert len(shapes) == len(set(shapes)) == _partition_count(n)
    assert all(sum(s) == n for s in shapes)
    assert shapes == sorted(shapes, reverse=True)


def test_p8_is_22():
    assert sum(1 for _ in shapes_of(8)) == 22


def test_shape_multiplicity_examples():
    assert shape_multiplicity(Shape((2, 2))) == 3
    assert shape_multiplicity(Shape((3, 1))) == 4
    tally = Counter(p.shape.parts for p in set_partitions(6))
    assert tally[(2, 2, 1, 1)] == 45
    assert shape_multiplicity(Shape((2, 2, 1, 1))) == 45


@pytest.mark.parametrize("n", range(1, 10))
def test_shape_aggregation_is_lossless(n):
    tally = Counter(p.shape for p in set_partitions(n))
    for shape in shapes_of(n):
        assert shape_multiplicity(shape) == tally[shape]
    for k in range(1, n + 1):
        by_shape = sum(shape_multiplicity(s) for s in shapes_of(n) if s.length == k)
        assert by_shape == sum(1 for _ in set_partitions(n, k))


def test_set_partitions_examples():
    assert sum(1 for _ in set_partitions(3)) == 5
    assert [str(p) for p in set_partitions(3, 2)] == ["{12|3}", "{13|2}", "{1|23}"]
    assert sum(1 for _ in set_partitions(8)) == 4140


@pytest.mark.parametrize("n", range(0, 10))
def test_bell_numbers(n):
    assert sum(1 for _ in set_partitions(n)) == _bell(n)


def test_set_partitions_are_lexicographic_valid_rgs():
    rgs = [p.rgs for p in set_partitions(6)]
    assert rgs == sorted(rgs)
    assert len(set(rgs)) == len(rgs)
    for p in set_partitions(6):
        assert p.rgs[0] == 0
        assert len(set(p.rgs)) == p.length
        assert p.shape.n == 6 and p.shape.length == p.length
        assert SetPartition.from_blocks(p.blocks) == p


def test_set_partitions_limit():
    with pytest.raises(ResourceLimitError, match="12"):
        next(set_partitions(13))
    with pytest.raises(ValueError):
        next(set_partitions(3, 4))


def test_invalid_rgs_rejected():
    with pytest.raises(ValueError):
        SetPartition((1, 0))
    with pytest.raises(ValueError):
        SetPartition((0, 2))
    with pytest.raises(ValueError):
        SetPartition.from_blocks([[1, 2], [2, 3]])


def test_shape_gcd():
    assert shape_gcd(Shape((2, 2))) == 2
    assert shape_gcd(Shape((3, 1))) == 1
    assert shape_gcd(Shape((6, 4, 2))) == 2
    with pytest.raises(ValueError):
        shape_gcd(Shape(()))


@pytest.mark.parametrize("n", range(1, 13))
def test_part_one_forces_gcd_one(n):
    for shape in shapes_of(n):
        if 1 in shape.parts:
            assert shape.gcd == 1
        assert shape.gcd == math.gcd(*shape.parts) >= 1


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape((1, 2))
    with pytest.raises(ValueError):
        Shape((2, 0))
