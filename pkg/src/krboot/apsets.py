"""Sets of integers in [1, n] containing no 3-term arithmetic progression.

Three generators at different quality/cost points: a base-3 digit set (fast,
size 2^floor(log3 n)), a sphere-digit sweep (better for large n), and an exact
branch-and-bound maximiser for tiny n.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ApSet:
    """Ascending integers drawn from [1, n]."""

    n: int
    elements: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient bound must be non-negative")
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                raise ValueError("elements must be strictly increasing")
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise ValueError(f"elements must lie in [1, {self.n}]")

    def __len__(self) -> int:
        return len(self.elements)


def ap_digits3(n: int) -> ApSet:
    """All a+1 where a uses only digits 0 and 1 in the top base-3 block <= n.

    Digit-wise, a + b = 2c with 0/1 digits forces a = b = c, so the set is
    3-AP-free by construction.  Size is exactly 2^k for the largest k with
    3^k <= n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    k = 0
    while 3 ** (k + 1) <= n:
        k += 1
    powers = [3**i for i in range(k)]
    vals = sorted(sum(c) for j in range(k + 1) for c in itertools.combinations(powers, j))
    return ApSet(n, tuple(v + 1 for v in vals))


def ap_behrend(n: int, time_budget_s: float = 2.0) -> ApSet:
    """Sphere-digit construction: best fixed-norm digit vectors, checked.

    Vectors x in {0..d-1}^k with a common squared norm map injectively to
    integers via base (2d-1); digit sums never carry, so an arithmetic
    progression would force equal vectors on a sphere, which cannot happen.
    Falls back to ``ap_digits3`` whenever the sweep does no better.  The
    result is always re-checked for 3-AP-freeness before returning.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    best = ap_digits3(n)
    deadline = time.monotonic() + time_budget_s
    k = 2
    while (3**k - 1) // 2 + 1 <= n and time.monotonic() < deadline:
        d = 2
        while True:
            base = 2 * d - 1
            top = (d - 1) * (base**k - 1) // (base - 1)  # largest mapped value
            if top + 1 > n:
                break
            buckets: dict[int, list[int]] = {}
            for digits in itertools.product(range(d), repeat=k):
                norm = sum(x * x for x in digits)
                val = 0
                for x in digits:
                    val = val * base + x
                buckets.setdefault(norm, []).append(val + 1)
            cand = max(buckets.values(), key=len)
            if len(cand) > len(best):
                best = ApSet(n, tuple(sorted(cand)))
            d += 1
            if time.monotonic() > deadline:
                break
        k += 1

    from .verify import check_ap_free

    report = check_ap_free(best)
    if not report.passed:
        raise AssertionError(f"generated set failed its own 3-AP check: {report.witness}")
    return best


def ap_max_exhaustive(n: int) -> ApSet:
    """Exact maximum 3-AP-free subset of [1, n] by branch and bound; n <= 25."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 25:
        raise ValueError("exhaustive maximiser is limited to n <= 25")
    best: list[int] = []
    chosen: list[int] = []
    chosen_set: set[int] = set()

    def extend(lo: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if len(chosen) + (n - lo + 1) <= len(best):
            return
        for x in range(lo, n + 1):
            # x is the largest element, so any new progression ends at x
            if any(2 * b - x in chosen_set for b in chosen):
                continue
            chosen.append(x)
            chosen_set.add(x)
            extend(x + 1)
            chosen.pop()
            chosen_set.remove(x)

    extend(1)
    return ApSet(n, tuple(best))
