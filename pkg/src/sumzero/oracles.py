"""Brute-force counts in finite models of the configuration spaces.

F_n(X) is modelled by a finite set of size x and F_n^0(E) by the group
(Z/NZ)^2.  The group has full d-torsion (d^2 solutions of d z = 0) for every
d dividing N, so when lcm(1..n) divides N the class formula evaluated at
[E] = N^2 must equal the number of distinct sum-zero n-tuples.

Budgets count tuple visits, not seconds, so results do not depend on the machine.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor

from .classes import class_fn, class_fn0
from .errors import BudgetExceededError, OraclePreconditionError

DEFAULT_BUDGET = 10**8


def _spend(visits, budget):
    # even an empty enumeration costs one visit, so a zero budget runs nothing
    visits = max(visits, 1)
    if visits > budget:
        raise BudgetExceededError(f"{visits} tuple visits exceed the budget of {budget}", budget)


def count_distinct_tuples(n: int, x: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of n-tuples of pairwise-distinct elements of a set of size ``x``."""
    if n < 0 or x < 0:
        raise ValueError("n and x must be non-negative")
    _spend(x**n, budget)
    return sum(1 for t in itertools.product(range(x), repeat=n) if len(set(t)) == n)


class TorusGroup:
    """(Z/NZ)^2 with elements encoded as ``a * N + b``."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.order = N * N
        elems = [(a, b) for a in range(N) for b in range(N)]
        self.add = [
            [((a + c) % N) * N + (b + d) % N for (c, d) in elems] for (a, b) in elems
        ]
        self.neg = [((-a) % N) * N + (-b) % N for (a, b) in elems]

    def multiply(self, d: int, z: int) -> int:
        a, b = divmod(z, self.N)
        return ((d * a) % self.N) * self.N + (d * b) % self.N

    def torsion_count(self, d: int) -> int:
        """Number of z with d z = 0, by enumeration."""
        return sum(1 for z in range(self.order) if self.multiply(d, z) == 0)


def _count_sumzero_from(n, N, firsts):
    G = TorusGroup(N)
    add, neg, order = G.add, G.neg, G.order
    elems = range(order)

    def rec(depth, total, chosen):
        # depth = number of free coordinates still to choose; the last one is forced
        if depth == 1:
            row = add[total]
            return sum(
                1
                for z in elems
                if z not in chosen and (w := neg[row[z]]) != z and w not in chosen
            )
        count = 0
        row = add[total]
        for z in elems:
            if z not in chosen:
                chosen.add(z)
                count += rec(depth - 1, row[z], chosen)
                chosen.discard(z)
        return count

    total = 0
    for z in firsts:
        if n == 2:
            total += 1 if neg[z] != z else 0
        else:
            total += rec(n - 2, z, {z})
    return total


def count_sumzero_tuples(n: int, N: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Number of pairwise-distinct n-tuples in (Z/NZ)^2 summing to zero.

    The first n - 1 coordinates are enumerated and the last is forced to minus
    their sum, so the cost is N^(2(n-1)) visits.  With ``workers > 1`` the
    range of the first coordinate is split across processes.
    """
    if n < 1 or N < 1:
        raise ValueError("n and N must be positive")
    _spend(N ** (2 * (n - 1)), budget)
    order = N * N
    if n == 1:
        return 1
    if workers <= 1:
        return _count_sumzero_from(n, N, range(order))
    chunks = [range(i, order, workers) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_sumzero_from, [n] * workers, [N] * workers, chunks))


def torsion_count(d: int, N: int) -> int:
    return TorusGroup(N).torsion_count(d)


def fn_oracle_identity(n: int, x: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Compare the F_n class polynomial at [X] = x against direct counting."""
    return count_distinct_tuples(n, x, budget) == class_fn(n).poly.eval(x)


def lcm_upto(n: int) -> int:
    return math.lcm(*range(1, n + 1)) if n >= 1 else 1


def fn0_oracle_identity(n: int, N: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> bool:
    """Compare the F_n^0 class polynomial at [E] = N^2 against counting in (Z/NZ)^2.

    Requires lcm(1..n) | N.  Outside that range the group lacks the torsion
    the formula assumes, and the two sides generally disagree.
    """
    if N < 1 or N % lcm_upto(n):
        raise OraclePreconditionError(
            f"lcm(1..{n}) = {lcm_upto(n)} must divide N = {N} for the group model to apply"
        )
    return count_sumzero_tuples(n, N, budget, workers) == class_fn0(n).poly.eval(N * N)
