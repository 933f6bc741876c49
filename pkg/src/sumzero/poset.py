"""Refinement order on set partitions and its Möbius function."""

import itertools
import math
from functools import lru_cache

from .errors import BudgetExceededError, ResourceLimitError
from .partitions import SetPartition, set_partitions

MOBIUS_ORACLE_LIMIT = 8
KERNEL_BUDGET = 10**7


def refines(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff ``sigma`` is finer than (or equal to) ``pi``."""
    if sigma.n != pi.n:
        raise ValueError(f"partitions of different sets: n={sigma.n} vs n={pi.n}")
    target = {}
    for s_label, p_label in zip(sigma.rgs, pi.rgs):
        if target.setdefault(s_label, p_label) != p_label:
            return False
    return True


def mobius_closed(sigma: SetPartition) -> int:
    """mu(0, sigma) = (-1)^(n - l) * prod (|block| - 1)!."""
    value = 1
    for size in sigma.block_sizes:
        value *= math.factorial(size - 1)
    return -value if (sigma.n - sigma.length) % 2 else value


def refinements(sigma: SetPartition):
    """Yield every partition finer than or equal to ``sigma``.

    The interval below ``sigma`` is the product of the partition lattices of
    its blocks, so refinements are assembled block by block.
    """
    blocks = sigma.blocks
    per_block = [list(set_partitions(len(b), limit=len(b))) for b in blocks]
    for choice in itertools.product(*per_block):
        owner = [None] * sigma.n
        label = 0
        for block, sub in zip(blocks, choice):
            for elem, sub_label in zip(block, sub.rgs):
                owner[elem - 1] = label + sub_label
            label += sub.length
        yield SetPartition.from_blocks(_group(owner), sigma.n)


def _group(owner):
    groups = {}
    for i, label in enumerate(owner):
        groups.setdefault(label, []).append(i + 1)
    return groups.values()


@lru_cache(maxsize=None)
def _mobius_by_shape(parts: tuple) -> int:
    if all(p == 1 for p in parts):
        return 1
    # any set partition of this shape represents the interval [0, sigma]
    sigma = SetPartition.from_blocks(_canonical_blocks(parts))
    total = 0
    for tau in refinements(sigma):
        if tau != sigma:
            total += _mobius_by_shape(tau.shape.parts)
    return -total


def _canonical_blocks(parts):
    blocks, start = [], 1
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    return blocks


def mobius_recursive(sigma: SetPartition, limit: int = MOBIUS_ORACLE_LIMIT) -> int:
    """mu(0, sigma) from the defining recursion sum_{0 <= tau <= sigma} mu(0, tau) = delta.

    Memoised on the shape of ``sigma``; the closed form is never consulted.
    """
    if sigma.n > limit:
        raise ResourceLimitError(f"recursive Möbius oracle limited to n <= {limit}", limit)
    return _mobius_by_shape(sigma.shape.parts)


def kernel(values) -> SetPartition:
    """The set partition of positions induced by equal values."""
    relabel = {}
    return SetPartition(tuple(relabel.setdefault(v, len(relabel)) for v in values))


def count_functions_with_kernel(sigma: SetPartition, x: int, budget: int = KERNEL_BUDGET) -> int:
    """Brute-force count of functions {1..n} -> {1..x} whose kernel is ``sigma``."""
    if x < 0:
        raise ValueError("x must be non-negative")
    visits = x**sigma.n
    if visits > budget:
        raise BudgetExceededError(f"{visits} functions exceed the budget of {budget}", budget)
    target = sigma.rgs
    return sum(1 for f in itertools.product(range(x), repeat=sigma.n) if kernel(f).rgs == target)
