"""Shared brute-force oracles, written independently of the package code.

Each helper recomputes a quantity by the most direct method available so
that package results can be checked against an implementation that shares
no code path with them.
"""

from __future__ import annotations

from functools import lru_cache


def dp_partition_count(n: int) -> int:
    """p(n) by the classic coin-counting dynamic program."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def dp_partition_count_parts_mult3(n: int) -> int:
    """Partitions of n with every part divisible by 3, by the same DP."""
    table = [1] + [0] * n
    for part in range(3, n + 1, 3):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def brute_sigma(k: int, n: int) -> int:
    """Divisor power sum by scanning every candidate divisor."""
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def ascending_partitions(n: int, min_part: int = 1) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as ascending tuples (independent enumeration)."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min_part, n + 1):
        for rest in ascending_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def signed_distinct_part_count(n: int, m: int) -> int:
    """sum over partitions of m into distinct parts <= n of (-1)^(#parts);
    the q^m coefficient of prod_{j=1..n} (1 - q^j), by direct expansion."""

    def walk(remaining: int, max_part: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for part in range(min(remaining, max_part), 0, -1):
            total -= walk(remaining - part, part - 1)
        return total

    return walk(m, n)


def brute_pair_count(total: int) -> int:
    """Number of (i, j) with i, j >= 0 and i + j = total."""
    return sum(1 for i in range(total + 1) for j in range(total + 1) if i + j == total)
