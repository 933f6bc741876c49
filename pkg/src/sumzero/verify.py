"""Self-checks run by ``sumzero verify``.

Each check returns a ``CheckResult``.  Oracle cases that would exceed the
visit budget are counted as skipped; a check whose cases were all skipped is
reported as skipped rather than failed.
"""

import math
from dataclasses import dataclass, field

from . import classes, oracles, poset, stirling
from .errors import BudgetExceededError
from .partitions import SetPartition, set_partitions
from .poly import IntPoly
from .reference import FN0_TABLE, FN_TABLE, normalize

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    failures: list = field(default_factory=list)

    def line(self) -> str:
        text = f"{self.status}  {self.name}"
        if self.detail:
            text += f"  ({self.detail})"
        if self.failures:
            text += "  first failure: " + str(self.failures[0])
        return text


def _result(name, failures, ran, skipped=0, what="cases"):
    if ran == 0 and skipped:
        return CheckResult(name, SKIP, f"{skipped} {what} over budget")
    detail = f"{ran} {what}" + (f", {skipped} skipped over budget" if skipped else "")
    return CheckResult(name, FAIL if failures else PASS, detail, failures)


def check_table(space, n_max):
    table = FN_TABLE if classes.Space(space) is classes.Space.FN else FN0_TABLE
    top = min(8, n_max)
    if top < 2:
        return CheckResult(f"table-{classes.Space(space).value}", SKIP, "n_max below 2")
    rows = classes.table_rows(space, 2, top, "latex", n_max=n_max)
    failures = [
        (n, row, table[n]) for n, row in zip(range(2, top + 1), rows) if normalize(row) != normalize(table[n])
    ]
    return _result(f"table-{classes.Space(space).value}", failures, len(rows), what="rows")


def check_stirling_dual(n_max):
    failures, ran = [], 0
    for n in range(1, min(12, n_max) + 1):
        for k in range(1, n + 1):
            ran += 1
            a = stirling.stirling_first(n, k, n_max)
            b = stirling.stirling_first_by_shapes(n, k, n_max)
            if a != b:
                failures.append((n, k, a, b))
    return _result("stirling-s recurrence == shape sum", failures, ran)


def check_stirling_mod_dual(n_max):
    failures, ran = [], 0
    for n in range(1, min(10, n_max) + 1):
        for k in range(1, n + 1):
            ran += 1
            a = stirling.stirling_mod(n, k, n_max)
            b = stirling.stirling_mod_oracle(n, k)
            if a != b:
                failures.append((n, k, a, b))
    return _result("stirling-sm shape sum == set-partition sum", failures, ran)


def check_mobius(limit=5):
    failures, ran = [], 0
    for n in range(1, limit + 1):
        parts = list(set_partitions(n))
        for sigma in parts:
            ran += 1
            if poset.mobius_recursive(sigma) != poset.mobius_closed(sigma):
                failures.append(("recursive", str(sigma)))
        bottom = SetPartition.finest(n)
        for pi in parts:
            total = sum(poset.mobius_closed(s) for s in parts if poset.refines(s, pi))
            if total != (1 if pi == bottom else 0):
                failures.append(("defining relation", str(pi), total))
    return _result("mobius recursive == closed, defining relation", failures, ran, what="partitions")


def check_generating(n_max):
    failures, ran = [], 0
    x = IntPoly.gen("x")
    for n in range(1, min(12, n_max) + 1):
        ran += 1
        row = stirling.get_table(n_max).s_row(n)
        rising = stirling.rising_factorial(n)
        if list(rising.coeffs) != [0, *row]:
            failures.append(("rising", n))
        signed = sum(((-1) ** (n - k) * row[k - 1] * x**k for k in range(1, n + 1)), IntPoly((), "x"))
        if signed != stirling.falling_factorial(n):
            failures.append(("falling", n))
        if sum(row) != math.factorial(n):
            failures.append(("row sum", n))
    for n in range(1, 7):
        for xv in range(1, 6):
            ran += 1
            if not stirling.burnside_multiset_check(n, xv):
                failures.append(("burnside", n, xv))
    return _result("generating identities", failures, ran)


def check_structure(n_max):
    failures, ran = [], 0
    top = min(20, n_max)
    for n in range(1, top + 1):
        ran += 1
        s = lambda k: stirling.stirling_first(n, k, n_max)
        sm = lambda k: stirling.stirling_mod(n, k, n_max)
        if any(s(k) != sm(k) for k in range(n // 2 + 1, n + 1)):
            failures.append(("half collapse", n))
        if s(1) != math.factorial(n - 1) or sm(1) != n * n * math.factorial(n - 1):
            failures.append(("k=1", n))
        if s(n) != 1 or sm(n) != 1:
            failures.append(("diagonal", n))
    for p in (2, 3, 5, 7, 11, 13):
        if p > top:
            continue
        ran += 1
        if any(stirling.stirling_first(p, k, n_max) != stirling.stirling_mod(p, k, n_max) for k in range(2, p + 1)):
            failures.append(("prime collapse", p))
    return _result("structural identities", failures, ran)


def check_inclusion_exclusion(n_max):
    failures, ran = [], 0
    for n in range(1, min(8, n_max) + 1):
        ran += 1
        if classes.class_fn_by_inclusion_exclusion(n) != classes.class_fn(n, n_max).poly:
            failures.append(n)
    return _result("inclusion-exclusion assembly == Stirling form", failures, ran)


def check_fn_oracle(budget):
    failures, ran, skipped = [], 0, 0
    for n in range(1, 6):
        for x in range(0, 9):
            try:
                ok = oracles.fn_oracle_identity(n, x, budget)
            except BudgetExceededError:
                skipped += 1
                continue
            ran += 1
            if not ok:
                failures.append((n, x))
    return _result("F_n class == distinct-tuple count", failures, ran, skipped)


def check_fn0_oracle(budget):
    failures, ran, skipped = [], 0, 0
    for n, N in [(1, 1), (2, 2), (2, 4), (3, 6), (4, 12)]:
        try:
            ok = oracles.fn0_oracle_identity(n, N, budget)
        except BudgetExceededError:
            skipped += 1
            continue
        ran += 1
        if not ok:
            failures.append((n, N))
    return _result("F_n^0 class == sum-zero count in (Z/NZ)^2", failures, ran, skipped)


def check_torsion(budget):
    if 144 > budget:
        return CheckResult("torsion counts in (Z/12Z)^2", SKIP, "over budget")
    failures = [d for d in (1, 2, 3, 4) if oracles.torsion_count(d, 12) != d * d]
    return _result("torsion counts in (Z/12Z)^2", failures, 4)


def run_all(n_max=stirling.DEFAULT_N_MAX, budget=oracles.DEFAULT_BUDGET):
    """Run every check; returns the list of results in a fixed order."""
    return [
        check_table(classes.Space.FN, n_max),
        check_table(classes.Space.FN0, n_max),
        check_stirling_dual(n_max),
        check_stirling_mod_dual(n_max),
        check_mobius(),
        check_generating(n_max),
        check_structure(n_max),
        check_inclusion_exclusion(n_max),
        check_fn_oracle(budget),
        check_fn0_oracle(budget),
        check_torsion(budget),
    ]
