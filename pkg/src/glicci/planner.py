"""Reduction planners: validated chains from n general points down to one.

Four planners, one per ambient:

  * plan_p2: ascending biliaisons on plane curves;
  * plan_quadric: ascending biliaisons on the two ACM families of the
    quadric (with the classical height-0 repositioning for n = 2);
  * plan_cubic: strict liaisons by m*H - K on the four ACM families of
    the cubic surface, with hard-coded tables for n <= 17 and a
    six-range schedule above that;
  * plan_p3: shortest walks over the eleven tabulated moves, total for
    n <= 19 and a typed open-case error beyond.

Every chain is validated move by move at construction time.  A
breadth-first reachability oracle over the full admissible-move graph
serves as an independent cross-check of the planners.

Planners are pure functions of n; identical inputs give identical
chains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .catalog import (
    CurveFamily,
    cubic_surface_type,
    p3_acm_family,
    perrin_m,
    perrin_table,
    plane_curve_family,
    quadric_family,
    quadric_ruling_line,
)
from .errors import (
    DegreeTooSmall,
    InvalidMove,
    OutOfGuaranteedRange,
    SearchBudgetExceeded,
)
from .moves import (
    BILIAISON,
    LIAISON,
    Chain,
    LinkMove,
    liaison_target,
    liaison_total,
    validate_chain,
    validate_move_p3,
    validate_move_p3_undirected,
)

SPACES = ("p2", "quadric", "cubic-surface", "p3")

_SEARCH_CAP = 10_000


def _check_n(n: int) -> None:
    if n < 1:
        raise DegreeTooSmall(f"need at least one point, got {n}")


# ---------------------------------------------------------------------------
# Points in the plane.

def _plane_degree(n: int) -> int:
    # Least d >= 2 with (d-1)(d+2)/2 < n <= d(d+3)/2.
    d = max(2, (isqrt(8 * n + 9) - 3) // 2)
    while d * (d + 3) // 2 < n:
        d += 1
    while d > 2 and (d - 1) * (d + 2) // 2 >= n:
        d -= 1
    return d


def plan_p2(n: int) -> Chain:
    """Reduce n general points of the plane to one point by ascending
    biliaisons on plane curves.  For n >= 6 the carrier has the least
    degree d whose curves can hold the points, and the height is 1
    exactly when n sits just above the previous range."""
    _check_n(n)
    steps = []
    cur = n
    while cur > 1:
        if cur == 2:
            d, h = 1, 1
        elif cur in (3, 4):
            d, h = 2, 1
        elif cur == 5:
            d, h = 2, 2
        else:
            d = _plane_degree(cur)
            h = 1 if cur == (d - 1) * (d + 2) // 2 + 1 else 2
        carrier = plane_curve_family(d)
        nxt = cur - h * d
        steps.append(LinkMove(BILIAISON, cur, nxt, carrier, h=h))
        cur = nxt
    chain = Chain("p2", n, tuple(steps))
    validate_chain(chain)
    return chain


# ---------------------------------------------------------------------------
# Points on the nonsingular quadric.

def _quadric_level(n: int) -> int:
    # The a >= 2 with a^2 + a <= n <= a^2 + 3a + 1.
    a = max(2, (isqrt(4 * n + 1) - 1) // 2)
    while a * a + a > n:
        a -= 1
    while a * a + 3 * a + 1 < n:
        a += 1
    return a


def plan_quadric(n: int) -> Chain:
    """Reduce n general points on a fixed nonsingular quadric to one
    point by ascending biliaisons on its two ACM families.  The n = 2
    base case slides the points along a twisted cubic (a height-0
    biliaison) onto a ruling line first."""
    _check_n(n)
    steps = []
    cur = n
    while cur > 1:
        if cur == 2:
            cubic = quadric_family(1, "ii")
            line = quadric_ruling_line()
            steps.append(
                LinkMove(BILIAISON, 2, 2, cubic, h=0,
                         note="slide along the twisted cubic onto a ruling line")
            )
            steps.append(
                LinkMove(BILIAISON, 2, 1, line, h=1,
                         note="points repositioned onto the line")
            )
            cur = 1
        elif cur == 3:
            carrier = quadric_family(1, "i")  # the conic (2, 0)
            steps.append(LinkMove(BILIAISON, 3, 1, carrier, h=1))
            cur = 1
        elif cur in (4, 5):
            carrier = quadric_family(1, "ii")  # the twisted cubic (3, 0)
            steps.append(LinkMove(BILIAISON, cur, cur - 3, carrier, h=1))
            cur = cur - 3
        else:
            a = _quadric_level(cur)
            case = "i" if cur <= a * a + 2 * a else "ii"
            carrier = quadric_family(a, case)
            nxt = cur - carrier.d
            steps.append(LinkMove(BILIAISON, cur, nxt, carrier, h=1))
            cur = nxt
    chain = Chain("quadric", n, tuple(steps))
    validate_chain(chain)
    return chain


# ---------------------------------------------------------------------------
# Points on the nonsingular cubic surface.

# Tabulated liaisons for n <= 8 and 9 <= n <= 17: (n, n', m, kind, a).
_CUBIC_TABLE = (
    (1, 3, 1, "i", 2),     # H-K on (4,1)
    (2, 6, 2, "ii", 2),    # 2H-K on (5,2)
    (3, 5, 2, "ii", 2),
    (6, 8, 3, "iii", 2),   # 3H-K on (6,3)
    (4, 8, 3, "iv", 2),    # 3H-K on (6,4)
    (5, 7, 3, "iv", 2),
    (6, 7, 3, "i", 3),     # 3H-K on (7,5)
    (9, 11, 4, "i", 3),    # 4H-K on (7,5)
    (7, 13, 4, "ii", 3),   # 4H-K on (8,7)
    (8, 12, 4, "ii", 3),
    (12, 17, 5, "iii", 3),  # 5H-K on (9,9)
    (13, 16, 5, "iii", 3),
    (10, 17, 5, "iv", 3),  # 5H-K on (9,10)
    (11, 16, 5, "iv", 3),
    (12, 15, 5, "iv", 3),
    (13, 14, 5, "iv", 3),
)


@lru_cache(maxsize=1)
def _cubic_small_routes() -> dict[int, tuple[int, int, CurveFamily]]:
    """Next hop toward 1 for every 2 <= n <= 17, from a breadth-first
    search over the tabulated liaisons (ties broken by smaller target)."""
    adjacency: dict[int, list[tuple[int, int, CurveFamily]]] = {}
    for lo, hi, m, kind, a in _CUBIC_TABLE:
        fam = cubic_surface_type(kind, a)
        adjacency.setdefault(lo, []).append((hi, m, fam))
        adjacency.setdefault(hi, []).append((lo, m, fam))
    dist = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u, _, _ in sorted(adjacency.get(v, []), key=lambda t: t[0]):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    routes: dict[int, tuple[int, int, CurveFamily]] = {}
    for v, nbrs in adjacency.items():
        if v == 1:
            continue
        best = min(nbrs, key=lambda t: (dist[t[0]], t[0]))
        routes[v] = best
    return routes


def _cubic_level(n: int) -> int:
    # The a >= 4 with 3a(a-1)/2 <= n < 3a(a+1)/2, for n >= 18.
    a = max(4, (isqrt(24 * n + 9) + 3) // 6)
    while 3 * a * (a - 1) // 2 > n:
        a -= 1
    while 3 * a * (a + 1) // 2 <= n:
        a += 1
    return a


@lru_cache(maxsize=None)
def _cubic_spiral(a: int) -> dict[int, tuple[int, int, str]]:
    """Outgoing move for every n in range D at level a.

    The schedule weaves outward from the middle of D, alternating the
    two liaison totals, and lands in range E; it must visit every value
    of D exactly once, which is asserted here."""
    n0 = 3 * a * (a - 1) // 2
    d_lo, d_hi = n0 + a + 2, n0 + 2 * a - 2
    if a % 2:
        k = (a - 1) // 2
        cur, kind = n0 + 3 * k + 2, "iv"
    else:
        k = a // 2
        cur, kind = n0 + 3 * k, "ii"
    totals = {"iv": 2 * n0 + 3 * a, "ii": 2 * n0 + 3 * a + 1}
    out: dict[int, tuple[int, int, str]] = {}
    while d_lo <= cur <= d_hi:
        nxt = totals[kind] - cur
        out[cur] = (nxt, 2 * a - 1, kind)
        cur = nxt
        kind = "ii" if kind == "iv" else "iv"
    if sorted(out) != list(range(d_lo, d_hi + 1)):
        raise AssertionError(f"spiral at a={a} missed part of range D")
    if not (n0 + 2 * a - 1 <= cur <= n0 + 2 * a):
        raise AssertionError(f"spiral at a={a} ended at {cur}, outside range E")
    return out


def _cubic_ranges(a: int) -> dict[str, range]:
    n0 = 3 * a * (a - 1) // 2
    return {
        "A": range(n0, n0 + 3),
        "B": range(n0 + 3, n0 + a),
        "C": range(n0 + a, n0 + a + 2),
        "D": range(n0 + a + 2, n0 + 2 * a - 1),
        "E": range(n0 + 2 * a - 1, n0 + 2 * a + 1),
        "F": range(n0 + 2 * a + 1, n0 + 3 * a),
    }


def _check_range_cover(a: int) -> None:
    ranges = _cubic_ranges(a)
    n0 = 3 * a * (a - 1) // 2
    n1 = 3 * a * (a + 1) // 2
    seen: list[int] = []
    for r in ranges.values():
        seen.extend(r)
    if sorted(seen) != list(range(n0, n1)):
        raise AssertionError(f"ranges at a={a} fail to tile [{n0}, {n1})")


def _cubic_range_move(n: int) -> tuple[int, int, str, int]:
    """The single outgoing move (target, m, kind, a) for n >= 18."""
    a = _cubic_level(n)
    n0 = 3 * a * (a - 1) // 2
    t = n - n0
    if t == 0:
        return 2 * n0 + 2 - n, 2 * a - 2, "i", a
    if t in (1, 2):
        return 2 * n0 + 3 * a - n, 2 * a - 1, "iv", a
    if 3 <= t <= a - 1:
        return 2 * n0 + 2 - n, 2 * a - 2, "i", a
    if t in (a, a + 1):
        return 2 * n0 + 2 - n, 2 * a - 2, "ii", a
    if a + 2 <= t <= 2 * a - 2:
        nxt, m, kind = _cubic_spiral(a)[n]
        return nxt, m, kind, a
    if t in (2 * a - 1, 2 * a):
        return 2 * n0 + 3 * a - n, 2 * a - 1, "iv", a
    if 2 * a + 1 <= t <= 3 * a - 1:
        return 2 * n0 + 3 * a + 2 - n, 2 * a - 1, "iii", a
    raise AssertionError(f"n={n} escaped the six ranges at a={a}")


def plan_cubic(n: int) -> Chain:
    """Reduce n general points on a fixed nonsingular cubic surface to a
    single point by strict liaisons on its four ACM curve families.
    Tabulated links handle n <= 17; the six-range schedule handles the
    rest, recursing once a link drops below the current block."""
    _check_n(n)
    steps = []
    cur = n
    while cur >= 18:
        nxt, m, kind, a = _cubic_range_move(cur)
        carrier = cubic_surface_type(kind, a)
        steps.append(LinkMove(LIAISON, cur, nxt, carrier, m=m))
        cur = nxt
    routes = _cubic_small_routes()
    while cur != 1:
        nxt, m, carrier = routes[cur]
        steps.append(LinkMove(LIAISON, cur, nxt, carrier, m=m))
        cur = nxt
    chain = Chain("cubic-surface", n, tuple(steps))
    validate_chain(chain)
    return chain


# ---------------------------------------------------------------------------
# Points in 3-space.

P3_GUARANTEED_MAX = 19

# The eleven tabulated moves: height-1 biliaisons as (low, high, d, g)
# and the two liaisons as (low, high, m, d, g).
_P3_BILIAISONS = (
    (1, 2, 1, 0),
    (1, 3, 2, 0),
    (1, 4, 3, 0), (2, 5, 3, 0), (3, 6, 3, 0),
    (3, 7, 4, 1), (4, 8, 4, 1),
    (4, 9, 5, 2),
    (4, 10, 6, 3), (5, 11, 6, 3), (6, 12, 6, 3),
    (6, 13, 7, 5), (7, 14, 7, 5),
    (7, 15, 8, 7), (8, 16, 8, 7),
    (9, 18, 9, 9),
)
_P3_LIAISONS = (
    (12, 17, 5, 9, 9),
    (11, 19, 5, 10, 11),
)


@lru_cache(maxsize=1)
def _p3_routes() -> dict[int, tuple[int, str, int | None, CurveFamily]]:
    """Next hop toward 1 for 2 <= n <= 19 over the eleven table moves:
    shortest path, preferring biliaisons over liaisons and then smaller
    targets."""
    adjacency: dict[int, list[tuple[int, str, int | None, CurveFamily]]] = {}

    def add(lo, hi, kind, m, fam):
        adjacency.setdefault(lo, []).append((hi, kind, m, fam))
        adjacency.setdefault(hi, []).append((lo, kind, m, fam))

    for lo, hi, d, g in _P3_BILIAISONS:
        add(lo, hi, BILIAISON, None, p3_acm_family(d, g))
    for lo, hi, m, d, g in _P3_LIAISONS:
        add(lo, hi, LIAISON, m, p3_acm_family(d, g))

    dist = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u, _, _, _ in sorted(adjacency.get(v, []), key=lambda t: t[0]):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    routes = {}
    for v, nbrs in adjacency.items():
        if v == 1:
            continue
        routes[v] = min(
            nbrs,
            key=lambda t: (dist[t[0]], 0 if t[1] == BILIAISON else 1, t[0]),
        )
    return routes


def plan_p3(n: int) -> Chain:
    """Reduce n <= 19 general points of 3-space to one point with the
    eleven tabulated moves.  For n not 17 or 19 the chain descends by
    biliaisons alone; those two need one liaison each.  For n >= 20 no
    tabulated move applies (the (10,11) carrier would need a residual of
    degree 10, below its genus), and whether such a set reduces at all
    is open, so the planner raises OutOfGuaranteedRange."""
    _check_n(n)
    if n > P3_GUARANTEED_MAX:
        raise OutOfGuaranteedRange(
            f"{n} > {P3_GUARANTEED_MAX} general points in 3-space: no descending "
            "move over the general-points table is admissible (for 20 points the "
            "only carrier is the (10,11) curve, whose moves leave a residual of "
            "degree 10 < genus 11), and the reduction question is open"
        )
    steps = []
    cur = n
    routes = _p3_routes()
    while cur != 1:
        nxt, kind, m, carrier = routes[cur]
        if kind == BILIAISON:
            steps.append(LinkMove(BILIAISON, cur, nxt, carrier, h=1))
        else:
            steps.append(LinkMove(LIAISON, cur, nxt, carrier, m=m))
        cur = nxt
    chain = Chain("p3", n, tuple(steps))
    validate_chain(chain)
    return chain


def plan(space: str, n: int) -> Chain:
    """Dispatch to the planner for the given ambient space."""
    planners = {
        "p2": plan_p2,
        "quadric": plan_quadric,
        "cubic-surface": plan_cubic,
        "p3": plan_p3,
    }
    try:
        return planners[space](n)
    except KeyError:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}") from None


# ---------------------------------------------------------------------------
# Brute-force reachability oracle.

@dataclass(frozen=True)
class ReachabilityOracle:
    """Undirected admissible-move graph for one ambient, with the set of
    counts connected to 1.  Edges come from every registered carrier
    whose parameters matter below the cap, not from the planners, so
    agreement between the two is a real check."""

    space: str
    n_max: int
    cap: int
    edges: frozenset[frozenset[int]]
    reachable: frozenset[int]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def is_reachable(self, n: int) -> bool:
        return n in self.reachable

    def confirms(self, chain: Chain) -> bool:
        """True when every step of the chain is an edge of this graph.
        Height-0 repositioning steps change no count and are skipped."""
        return all(
            self.has_edge(s.n_from, s.n_to)
            for s in chain.steps
            if s.n_from != s.n_to
        )


def _p2_edges(cap: int) -> set[frozenset[int]]:
    edges = set()
    d = 1
    while (d - 1) * (d - 2) // 2 <= cap:
        g = (d - 1) * (d - 2) // 2
        dim = d * (d + 3) // 2
        for n in range(1, min(dim, cap) + 1):
            h = 1
            while n - h * d >= max(g, 1):
                edges.add(frozenset((n, n - h * d)))
                h += 1
        d += 1
    return edges


def _quadric_edges(cap: int) -> set[frozenset[int]]:
    edges = {frozenset((2, 1))}  # via the ruling line after repositioning
    a = 1
    while (a - 1) ** 2 <= cap:
        for case in ("i", "ii"):
            fam = quadric_family(a, case)
            for n in range(1, min(fam.linsys_dim, cap) + 1):
                h = 1
                while n - h * fam.d >= max(fam.g, 1):
                    edges.add(frozenset((n, n - h * fam.d)))
                    h += 1
        a += 1
    return edges


def _cubic_cap(n_max: int) -> int:
    a = _cubic_level(max(n_max, 18))
    return 3 * a * (a + 1) // 2 - 1


def _cubic_edges(cap: int) -> set[frozenset[int]]:
    edges = set()
    a = 1
    while (3 * a * a - 7 * a + 4) // 2 <= cap:
        for kind in ("i", "ii", "iii", "iv"):
            fam = cubic_surface_type(kind, a)
            d, g = fam.d, fam.g
            lo, hi = g, d + g - 1
            if lo > cap:
                continue
            m = 1
            while liaison_total(m, fam) < 2 * lo:
                m += 1
            while liaison_total(m, fam) <= 2 * min(hi, cap):
                total = liaison_total(m, fam)
                for n in range(max(lo, total - min(hi, cap), 1), min(hi, cap, total - 1) + 1):
                    n_to = total - n
                    if n != n_to and lo <= n_to <= hi and n_to <= cap and n_to >= 1:
                        edges.add(frozenset((n, n_to)))
                m += 1
        a += 1
    return edges


def _p3_edges(cap: int) -> set[frozenset[int]]:
    edges = set()
    for row in perrin_table():
        fam = p3_acm_family(row.d, row.g)
        for n in range(1, min(row.m, cap) + 1):
            h = 1
            while n - h * row.d >= max(row.g, 1):
                edges.add(frozenset((n, n - h * row.d)))
                h += 1
        m = 1
        top = min(row.m, cap)
        while liaison_total(m, fam) <= 2 * top:
            total = liaison_total(m, fam)
            for n in range(max(row.g, total - top, 1), top + 1):
                n_to = total - n
                if n != n_to and validate_move_p3_undirected(n, n_to, fam) and 1 <= n_to <= cap:
                    edges.add(frozenset((n, n_to)))
            m += 1
    return edges


def build_oracle(space: str, n_max: int) -> ReachabilityOracle:
    """Assemble the admissible-move graph for a space and run one
    breadth-first search from 1."""
    if n_max > _SEARCH_CAP:
        raise SearchBudgetExceeded(f"oracle capped at n_max <= {_SEARCH_CAP}")
    _check_n(n_max)
    if space == "p2":
        cap = n_max
        edges = _p2_edges(cap)
    elif space == "quadric":
        cap = n_max
        edges = _quadric_edges(cap)
    elif space == "cubic-surface":
        cap = _cubic_cap(n_max)
        edges = _cubic_edges(cap)
    elif space == "p3":
        cap = max(n_max, max(row.m for row in perrin_table()))
        edges = _p3_edges(cap)
    else:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")
    adjacency: dict[int, set[int]] = {}
    for edge in edges:
        u, v = tuple(edge)
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    reachable = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in adjacency.get(v, ()):
            if u not in reachable:
                reachable.add(u)
                queue.append(u)
    return ReachabilityOracle(
        space=space,
        n_max=n_max,
        cap=cap,
        edges=frozenset(edges),
        reachable=frozenset(reachable),
    )


def oracle_reachability(space: str, n_max: int) -> dict[int, bool]:
    """Reachability-to-1 of every 1 <= n <= n_max in the admissible-move
    graph of the space."""
    oracle = build_oracle(space, n_max)
    return {n: oracle.is_reachable(n) for n in range(1, n_max + 1)}


def p3_descending_moves(n: int) -> list[tuple[str, int, tuple[int, int], int]]:
    """Every admissible move from n general points of 3-space to a
    strictly smaller count, over the general-points table: entries
    (kind, parameter, (d, g), target).  Empty for n = 20, which is the
    arithmetic behind the open case."""
    found = []
    for row in perrin_table():
        fam = p3_acm_family(row.d, row.g)
        h = 1
        while n - h * row.d >= 1:
            n_to = n - h * row.d
            if validate_move_p3(n, n_to, fam):
                found.append((BILIAISON, h, (row.d, row.g), n_to))
            h += 1
        m = 1
        while liaison_total(m, fam) < 2 * n:
            n_to = liaison_target(n, m, fam)
            if 1 <= n_to < n and validate_move_p3(n, n_to, fam):
                found.append((LIAISON, m, (row.d, row.g), n_to))
            m += 1
    return found
