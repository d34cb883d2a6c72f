"""Independent brute-force oracles for the test suite.

Nothing here shares a code path with the package: the minimizer below
is a dynamic program over all valid h-vectors (no greedy assumption,
no closed formula), and the counter recounts enumerations through a
different recursion.  Tests pit the package against these.
"""

from functools import lru_cache
from math import comb


def _bound(i: int, codim: int) -> int:
    return comb(i + codim - 1, codim - 1)


def min_genus_search(d: int, codim: int, nondegenerate: bool = True) -> int:
    """Exhaustive minimal genus over valid h-vectors of total d, by
    dynamic programming on (position, remaining degree)."""
    if d < 1:
        raise ValueError(d)

    @lru_cache(maxsize=None)
    def best(i: int, remaining: int) -> int:
        # Minimal sum of (j - 1) * c_j over completions c_i, c_{i+1}, ...
        if remaining == 0:
            return 0
        weight = i - 1 if i >= 2 else 0
        return min(
            weight * c + best(i + 1, remaining - c)
            for c in range(1, min(_bound(i, codim), remaining) + 1)
        )

    if nondegenerate:
        if d - 1 < codim:
            raise ValueError(f"no nondegenerate vector of degree {d}")
        return best(2, d - 1 - codim)
    if d == 1:
        return 0
    return min(
        best(2, d - 1 - c1) for c1 in range(1, min(_bound(1, codim), d - 1) + 1)
    )


def count_hvectors(d: int, codim: int) -> int:
    """Number of valid h-vectors of total degree d, counted without
    generating them."""
    if d < 1:
        raise ValueError(d)

    @lru_cache(maxsize=None)
    def ways(i: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        return sum(
            ways(i + 1, remaining - c)
            for c in range(1, min(_bound(i, codim), remaining) + 1)
        )

    return ways(1, d - 1)
