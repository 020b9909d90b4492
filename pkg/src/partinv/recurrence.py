"""The triangular recurrence v[n][k] counting pattern avoiders by last
entry, its row sums (the counting sequence of nonoverlapping partitions,
OEIS A006789), and exact big-integer evaluation.

    v[n][n] = 1                                        n >= 1
    v[n][1] = sum_{i=1}^{n-1} v[n-1][i]                n >= 2
    v[n][k] = sum_{i=k}^{n-1} v[n-1][i]
            + sum_{i=k+1}^{n} sum_{d=2}^{k} C(k-2, d-2) * v[n-d][i-d]
                                                       2 <= k <= n-1

Empty sums are 0 and C(0, 0) = 1. All arithmetic is exact: entries grow
super-exponentially and leave 64-bit range near n = 25.
"""

import math
from dataclasses import dataclass
from functools import cache

from .errors import DomainError


def binomial(a: int, b: int) -> int:
    """C(a, b) for nonnegative arguments; 0 when b > a."""
    return math.comb(a, b)


@cache
def _v(n: int, k: int) -> int:
    if k == n:
        return 1
    if k == 1:
        return sum(_v(n - 1, i) for i in range(1, n))
    direct = sum(_v(n - 1, i) for i in range(k, n))
    shifted = sum(
        binomial(k - 2, d - 2) * _v(n - d, i - d)
        for i in range(k + 1, n + 1)
        for d in range(2, k + 1)
    )
    return direct + shifted


def v_compute(n: int, k: int) -> int:
    """Entry v[n][k] of the triangle."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return _v(n, k)


@dataclass(frozen=True)
class VTable:
    """The triangle v[n][k] for 1 <= k <= n <= n_max; rows[i] is row n=i+1."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, n: int, k: int) -> int:
        if not 1 <= k <= n <= self.n_max:
            raise DomainError(f"need 1 <= k <= n <= {self.n_max}, got n={n}, k={k}")
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.n_max:
            raise DomainError(f"need 1 <= n <= {self.n_max}, got n={n}")
        return self.rows[n - 1]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)


def v_table(n_max: int) -> VTable:
    """The full triangle up to row n_max."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    rows = tuple(tuple(_v(n, k) for k in range(1, n + 1)) for n in range(1, n_max + 1))
    return VTable(n_max, rows)


def bessel(n: int) -> int:
    """Row sum of the triangle: the number of nonoverlapping partitions of [n]."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return sum(_v(n, k) for k in range(1, n + 1))
