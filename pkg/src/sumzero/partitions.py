"""Integer partitions (shapes) and set partitions of {1..n}.

Sums over set partitions whose summand only depends on the block sizes are
computed over shapes, weighting each shape by the number of set partitions
that realise it.  Direct set-partition enumeration is kept for cross-checks
and is bounded by ``ORACLE_LIMIT``.
"""

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterator, Optional

from .errors import ResourceLimitError

ORACLE_LIMIT = 12


@dataclass(frozen=True)
class Shape:
    """An integer partition, stored as non-increasing positive parts."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_sizes(cls, sizes) -> "Shape":
        return cls(tuple(sorted(sizes, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> Counter:
        """Part size -> how often it occurs."""
        return Counter(self.parts)

    @property
    def gcd(self) -> int:
        return shape_gcd(self)

    @property
    def multiplicity(self) -> int:
        return shape_multiplicity(self)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def shapes_of(n: int) -> Iterator[Shape]:
    """Yield every integer partition of ``n`` in reverse-lexicographic order.

    >>> [s.parts for s in shapes_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining, largest, prefix):
        if remaining == 0:
            yield Shape(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def shape_multiplicity(shape: Shape) -> int:
    """Number of set partitions of {1..n} whose block sizes are ``shape``.

    This is n! / (prod part! * prod over sizes of (count of that size)!).
    """
    denom = 1
    for part in shape.parts:
        denom *= math.factorial(part)
    for count in Counter(shape.parts).values():
        denom *= math.factorial(count)
    num = math.factorial(shape.n)
    assert num % denom == 0
    return num // denom


def shape_gcd(shape: Shape) -> int:
    if not shape.parts:
        raise ValueError("gcd of the empty shape is undefined")
    return reduce(math.gcd, shape.parts)


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..n} encoded as a restricted growth string.

    ``rgs[i]`` is the block label of element ``i + 1``; labels are assigned in
    order of first appearance, so ``rgs[0] == 0`` and each entry exceeds the
    running maximum by at most one.
    """

    rgs: tuple

    def __post_init__(self):
        rgs = tuple(self.rgs)
        top = -1
        for label in rgs:
            if not isinstance(label, int) or label < 0 or label > top + 1:
                raise ValueError(f"not a restricted growth string: {rgs!r}")
            top = max(top, label)
        object.__setattr__(self, "rgs", rgs)

    @classmethod
    def from_blocks(cls, blocks, n: Optional[int] = None) -> "SetPartition":
        """Build from an iterable of blocks of 1-based elements."""
        blocks = [sorted(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in blocks)
        owner = [None] * n
        for idx, block in enumerate(blocks):
            if not block:
                raise ValueError("blocks must be non-empty")
            for e in block:
                if not 1 <= e <= n or owner[e - 1] is not None:
                    raise ValueError(f"blocks do not partition 1..{n}: {blocks!r}")
                owner[e - 1] = idx
        if None in owner:
            raise ValueError(f"blocks do not cover 1..{n}: {blocks!r}")
        relabel = {}
        return cls(tuple(relabel.setdefault(o, len(relabel)) for o in owner))

    @classmethod
    def finest(cls, n: int) -> "SetPartition":
        return cls(tuple(range(n)))

    @classmethod
    def coarsest(cls, n: int) -> "SetPartition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.rgs)

    @property
    def length(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    @cached_property
    def blocks(self) -> tuple:
        out = [[] for _ in range(self.length)]
        for i, label in enumerate(self.rgs):
            out[label].append(i + 1)
        return tuple(tuple(b) for b in out)

    @property
    def block_sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    @property
    def shape(self) -> Shape:
        return Shape.from_sizes(self.block_sizes)

    def __str__(self):
        return "{" + "|".join("".join(map(str, b)) for b in self.blocks) + "}"


def set_partitions(n: int, k: Optional[int] = None, limit: int = ORACLE_LIMIT) -> Iterator[SetPartition]:
    """Yield the set partitions of {1..n} (with exactly ``k`` blocks if given).

    Partitions come out in lexicographic order of their restricted growth
    strings.  ``n`` above ``limit`` raises ``ResourceLimitError``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise ResourceLimitError(
            f"set partition enumeration for n={n} exceeds the oracle limit {limit}", limit
        )
    if k is not None and not 1 <= k <= max(n, 1):
        raise ValueError(f"k must satisfy 1 <= k <= n, got n={n}, k={k}")
    if n == 0:
        if k is None:
            yield SetPartition(())
        return
    target = k
    rgs = [0] * n

    def rec(i, used):
        if i == n:
            if target is None or used == target:
                yield SetPartition(tuple(rgs))
            return
        remaining = n - i
        for label in range(used + 1):
            if label == used:
                if target is not None and used + 1 > target:
                    break
                new_used = used + 1
            else:
                new_used = used
            # the rest of the string must still be able to open the missing blocks
            if target is not None and target - new_used > remaining - 1:
                continue
            rgs[i] = label
            yield from rec(i + 1, new_used)

    rgs[0] = 0
    yield from rec(1, 1)
