"""Independent brute-force ground truth.

Everything here is deliberately dumb and exhaustive: list colouring by DFS
over candidate subsets, choosability by enumerating list assignments up to
colour renaming, and bad-set counting by scanning every subset.  The rest
of the package is checked against these routines, never the other way
round.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapExceeded, EvenPath, WidthViolation
from .graphs import Graph
from .lists import FoldColouring, ListAssignment
from .paths import PathInstance, damage_closed_form, profile

DEFAULT_VERTEX_CAP = 12


def colex_subsets(colours, k: int):
    """All k-subsets of the iterable, as sorted tuples in colex order."""
    ordered = sorted(colours)
    subs = list(combinations(ordered, k))
    subs.sort(key=lambda s: tuple(reversed(s)))
    return subs


def brute_force_colour(
    g: Graph, la: ListAssignment, b: int, cap: int = DEFAULT_VERTEX_CAP
) -> FoldColouring | None:
    """First (L,b)-colouring in lexicographic DFS order, or None.

    Vertices are scanned in id order and candidate b-subsets in colex
    order, so the witness is reproducible.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the oracle cap {cap}")
    universe = sorted(set().union(*la.lists)) if la.n else []
    bit = {c: i for i, c in enumerate(universe)}

    cand: list[list[tuple[int, tuple[int, ...]]]] = []
    for v in range(g.n):
        masks = []
        for sub in colex_subsets(la.lists[v], b):
            mask = 0
            for c in sub:
                mask |= 1 << bit[c]
            masks.append((mask, sub))
        cand.append(masks)

    prev_nbrs = [tuple(w for w in g.adj[v] if w < v) for v in range(g.n)]
    picked_mask = [0] * g.n
    picked_sub: list[tuple[int, ...]] = [()] * g.n

    def dfs(v: int) -> bool:
        if v == g.n:
            return True
        blocked = 0
        for w in prev_nbrs[v]:
            blocked |= picked_mask[w]
        for mask, sub in cand[v]:
            if mask & blocked:
                continue
            picked_mask[v] = mask
            picked_sub[v] = sub
            if dfs(v + 1):
                return True
        return False

    if not dfs(0):
        return None
    return FoldColouring(tuple(frozenset(s) for s in picked_sub), b)


def canonical_assignments(n: int, a: int):
    """Width-a list assignments over a canonical universe, one representative
    per colour-renaming orbit (with some benign redundancy).

    Colours are introduced in first-use order scanning vertices 0..n-1, so
    every assignment is a relabelling of at least one emitted tuple.
    """

    def rec(i: int, lists: list[frozenset[int]], used: int):
        if i == n:
            yield tuple(lists)
            return
        for fresh in range(a + 1):
            new = tuple(range(used, used + fresh))
            for old in combinations(range(used), a - fresh):
                lists.append(frozenset(old + new))
                yield from rec(i + 1, lists, used + fresh)
                lists.pop()

    yield from rec(0, [], 0)


def exhaustive_choosable(g: Graph, a: int, b: int, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Decide (a,b)-choosability by enumerating assignments up to renaming."""
    if a > 2 and g.n > 5:
        raise CapExceeded(f"a={a} with {g.n} vertices is beyond the enumeration cap")
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the oracle cap {cap}")
    for lists in canonical_assignments(g.n, a):
        la = ListAssignment(lists, a)
        if brute_force_colour(g, la, b, cap=cap) is None:
            return False
    return True


@dataclass(frozen=True)
class BadSetReport:
    """Exact census of endpoint pre-colourings that block a path extension."""

    W: frozenset[int]
    bad_subsets: tuple[tuple[int, ...], ...]
    count: int
    bound: int  # strict: count must stay below this

    @property
    def ok(self) -> bool:
        return self.count < self.bound

    def to_json(self) -> dict:
        return {
            "W": sorted(self.W),
            "badSubsets": [list(s) for s in self.bad_subsets],
            "count": self.count,
            "bound": self.bound,
            "ok": self.ok,
        }


def enumerate_bad_sets(p: PathInstance, W) -> BadSetReport:
    """Scan every 2m-subset S of W; S is bad when deleting it from both path
    ends eats more of the colourability slack than the path has."""
    W = frozenset(W)
    m = p.m
    if len(W) != 4 * m:
        raise WidthViolation(f"|W|={len(W)} is not 4m={4 * m}")
    if p.n % 2 == 0:
        raise EvenPath("bad-set counting needs an odd vertex count")
    prof = profile(p)
    slack = prof.s_l - 2 * p.n * m
    bad = tuple(
        s
        for s in colex_subsets(W, 2 * m)
        if damage_closed_form(prof, s, s) > slack
    )
    return BadSetReport(W, bad, len(bad), comb(4 * m, 2 * m) // 2)


def find_uncolourable_assignment(
    g: Graph, a: int, b: int, budget: int = 10000
) -> ListAssignment | None:
    """Budgeted witness search; None means inconclusive, not choosable.

    Scans canonical assignments first, then seeded random assignments over
    universes up to a*n.  Any hit is re-verified by the colouring oracle
    before being returned.
    """
    tried = 0
    for lists in canonical_assignments(g.n, a):
        if tried >= budget:
            return None
        tried += 1
        la = ListAssignment(lists, a)
        if brute_force_colour(g, la, b) is None:
            return la
    rng = random.Random(0)
    while tried < budget:
        tried += 1
        universe = rng.randint(a, a * g.n)
        lists = tuple(
            frozenset(rng.sample(range(universe), a)) for _ in range(g.n)
        )
        la = ListAssignment(lists, a)
        if brute_force_colour(g, la, b) is None:
            return la
    return None
