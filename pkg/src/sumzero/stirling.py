"""Stirling numbers of the first kind and their gcd-squared weighted variant.

``s(n, k)`` counts permutations of n letters with k cycles; equivalently it is
the sum over k-block set partitions of prod (|block| - 1)!.  The modified
numbers ``s_m(n, k)`` weight each set partition by the square of the gcd of
its block sizes.  Each quantity has two independent evaluation paths:

* ``s``:   recurrence (``stirling_first``) and shape sum (``stirling_first_by_shapes``)
* ``s_m``: shape sum (``stirling_mod``) and set-partition sum (``stirling_mod_oracle``)
"""

import itertools
import math
import threading
from functools import lru_cache

from .errors import ResourceLimitError
from .partitions import shape_multiplicity, shapes_of, set_partitions
from .poly import IntPoly

DEFAULT_N_MAX = 64
MOD_ORACLE_LIMIT = 10
BURNSIDE_LIMIT = 7


def _check_n(n, n_max):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > n_max:
        raise ResourceLimitError(f"n={n} exceeds n_max={n_max}", n_max)


def _cycle_weight(parts) -> int:
    w = 1
    for p in parts:
        w *= math.factorial(p - 1)
    return w


def _gcd_squared(parts) -> int:
    return math.gcd(*parts) ** 2


class StirlingTable:
    """Cached rows of ``s`` and ``s_m`` for 0 <= n <= ``n_max``.

    The ``s`` triangle is filled by the recurrence at construction.  Rows of
    ``s_m`` cost a pass over all integer partitions of n, so they are filled
    on first request under a lock; once filled a row is never modified.
    """

    def __init__(self, n_max: int = DEFAULT_N_MAX):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        self.n_max = n_max
        rows = [[1]]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                left = prev[k - 1]
                right = prev[k] if k < n else 0
                row[k] = left + (n - 1) * right
            rows.append(row)
        self._s = [tuple(r) for r in rows]
        self._sm = {}
        self._lock = threading.Lock()

    def s(self, n: int, k: int) -> int:
        _check_n(n, self.n_max)
        if k < 0 or k > n:
            return 0
        return self._s[n][k]

    def s_row(self, n: int) -> tuple:
        """``(s(n, 1), ..., s(n, n))``."""
        _check_n(n, self.n_max)
        return self._s[n][1:]

    def s_m(self, n: int, k: int) -> int:
        _check_n(n, self.n_max)
        if k < 0 or k > n:
            return 0
        return self._sm_full(n)[k]

    def s_m_row(self, n: int) -> tuple:
        """``(s_m(n, 1), ..., s_m(n, n))``."""
        _check_n(n, self.n_max)
        return self._sm_full(n)[1:]

    def _sm_full(self, n):
        row = self._sm.get(n)
        if row is None:
            with self._lock:
                row = self._sm.get(n)
                if row is None:
                    row = _mod_row_by_shapes(n)
                    self._sm[n] = row
        return row

    def row(self, kind: str, n: int) -> tuple:
        if kind == "s":
            return self.s_row(n)
        if kind == "sm":
            return self.s_m_row(n)
        raise ValueError(f"unknown triangle {kind!r}; expected 's' or 'sm'")


def _mod_row_by_shapes(n):
    """Row of s_m by a walk over integer partitions of n.

    A shape with part sizes p occurring m_p times contributes
    n! / prod(p^m_p * m_p!) set-partition-weighted cycle counts, times gcd^2.
    The walk picks each distinct part size together with its multiplicity, so
    that denominator and the gcd accumulate along the path.
    """
    row = [0] * (n + 1)
    if n == 0:
        row[0] = 1
        return tuple(row)
    fact_n = math.factorial(n)
    fact = [math.factorial(i) for i in range(n + 1)]

    def walk(remaining, below, length, denom, g):
        if remaining == 0:
            row[length] += (fact_n // denom) * g * g
            return
        for p in range(min(remaining, below - 1), 0, -1):
            g2 = math.gcd(g, p)
            pm = 1
            for m in range(1, remaining // p + 1):
                pm *= p
                walk(remaining - m * p, p, length + m, denom * pm * fact[m], g2)

    walk(n, n + 1, 0, 1, 0)
    return tuple(row)


@lru_cache(maxsize=8)
def get_table(n_max: int = DEFAULT_N_MAX) -> StirlingTable:
    return StirlingTable(n_max)


def stirling_first(n: int, k: int, n_max: int = DEFAULT_N_MAX) -> int:
    """Unsigned Stirling number of the first kind via s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)."""
    return get_table(n_max).s(n, k)


def stirling_first_by_shapes(n: int, k: int, n_max: int = DEFAULT_N_MAX) -> int:
    """Sum over shapes of length k of multiplicity * prod (part - 1)!."""
    _check_n(n, n_max)
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return sum(
        shape_multiplicity(shape) * _cycle_weight(shape.parts)
        for shape in shapes_of(n)
        if len(shape.parts) == k
    )


def stirling_mod(n: int, k: int, n_max: int = DEFAULT_N_MAX) -> int:
    """Sum over shapes of length k of multiplicity * gcd^2 * prod (part - 1)!."""
    return get_table(n_max).s_m(n, k)


def stirling_mod_oracle(n: int, k: int, limit: int = MOD_ORACLE_LIMIT) -> int:
    """Same sum as ``stirling_mod`` taken directly over k-block set partitions."""
    if n > limit:
        raise ResourceLimitError(f"set-partition oracle limited to n <= {limit}", limit)
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 1 or k > n:
        return 1 if n == k == 0 else 0
    total = 0
    for sigma in set_partitions(n, k, limit=limit):
        sizes = sigma.block_sizes
        total += _gcd_squared(sizes) * _cycle_weight(sizes)
    return total


def rising_factorial(n: int) -> IntPoly:
    """x (x + 1) ... (x + n - 1) in the variable ``x``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = IntPoly.gen("x")
    out = IntPoly.constant(1, "x")
    for i in range(n):
        out = out * (x + i)
    return out


def falling_factorial(n: int) -> IntPoly:
    """x (x - 1) ... (x - n + 1) in the variable ``x``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = IntPoly.gen("x")
    out = IntPoly.constant(1, "x")
    for i in range(n):
        out = out * (x - i)
    return out


def count_cycles(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def burnside_multiset_check(n: int, x: int) -> bool:
    """Check sum over S_n of x^cycles(tau) against the rising factorial at x.

    Each permutation with k cycles fixes x^k functions {1..n} -> {1..x}, so the
    left side is n! times the number of size-n multisets on x letters.
    """
    if n > BURNSIDE_LIMIT:
        raise ResourceLimitError(f"Burnside check enumerates n! permutations; n <= {BURNSIDE_LIMIT}", BURNSIDE_LIMIT)
    if n < 1 or x < 0:
        raise ValueError("need n >= 1 and x >= 0")
    fixed = sum(x ** count_cycles(p) for p in itertools.permutations(range(n)))
    return fixed == rising_factorial(n).eval(x) and fixed == math.comb(n + x - 1, n) * math.factorial(n)
