"""Per-path machinery: the alternating difference profile, the exact
colourability criterion, constructive path colouring, endpoint list
subtraction, damage, and the odd-path damage closed form with its lower
bound companion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EvenPath, Infeasible, WidthViolation
from .lists import FoldColouring


@dataclass(frozen=True)
class PathInstance:
    """An ordered path v1..vn with per-vertex lists and fold parameter m.

    The colourability criterion expects endpoint widths >= 2m and interior
    widths exactly 4m; reduced instances produced by `subtract` stay inside
    that contract.
    """

    lists: tuple[frozenset[int], ...]
    m: int

    @property
    def n(self) -> int:
        return len(self.lists)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.lists)


def path_instance(lists, m: int) -> PathInstance:
    return PathInstance(tuple(frozenset(s) for s in lists), m)


def path_instance_from_json(obj: dict) -> PathInstance:
    return path_instance(obj["lists"], int(obj["m"]))


def path_instance_to_json(p: PathInstance) -> dict:
    return {"m": p.m, "lists": [sorted(s) for s in p.lists]}


@dataclass(frozen=True)
class PathProfile:
    """The X_i decomposition plus the odd-path endpoint sets.

    X_1 = L(v1), X_i = L(v_i) - X_{i-1}, s_l = sum |X_i|.  For odd n the
    profile also carries:
      lam     - colours common to every list,
      x1_hat  - colours of L(v1)-lam first missing at an even index,
      xn_hat  - colours of L(vn)-lam last missing at an even index.
    For even n those three fields are None.
    """

    X: tuple[frozenset[int], ...]
    s_l: int
    widths: tuple[int, ...]
    lam: frozenset[int] | None
    x1_hat: frozenset[int] | None
    xn_hat: frozenset[int] | None

    @property
    def n(self) -> int:
        return len(self.X)

    @property
    def odd(self) -> bool:
        return self.lam is not None


def profile(p: PathInstance) -> PathProfile:
    lists = p.lists
    n = len(lists)
    X = [lists[0]]
    for i in range(1, n):
        X.append(lists[i] - X[-1])
    s_l = sum(len(x) for x in X)
    lam = x1_hat = xn_hat = None
    if n % 2 == 1:
        lam = frozenset.intersection(*lists)
        x1 = set()
        for c in lists[0] - lam:
            first_missing = next(i for i in range(n) if c not in lists[i])
            if (first_missing + 1) % 2 == 0:  # indices are 1-based in the maths
                x1.add(c)
        xn = set()
        for c in lists[-1] - lam:
            last_missing = max(i for i in range(n) if c not in lists[i])
            if (last_missing + 1) % 2 == 0:
                xn.add(c)
        x1_hat, xn_hat = frozenset(x1), frozenset(xn)
    return PathProfile(tuple(X), s_l, p.widths, lam, x1_hat, xn_hat)


def _check_widths(p: PathInstance) -> None:
    m = p.m
    w = p.widths
    if w[0] < 2 * m or w[-1] < 2 * m:
        raise WidthViolation(f"endpoint widths {w[0]},{w[-1]} below 2m={2 * m}")
    for i in range(1, p.n - 1):
        if w[i] != 4 * m:
            raise WidthViolation(f"interior width {w[i]} at {i} is not 4m={4 * m}")


def decide_colourable(p: PathInstance) -> bool:
    """Exact criterion: a 2m-fold list colouring exists iff s_l >= 2nm."""
    _check_widths(p)
    return profile(p).s_l >= 2 * p.n * p.m


def subtract(p: PathInstance, S, T) -> PathInstance:
    """Delete S from the first list and T from the last; for a single-vertex
    path both deletions apply to the one list."""
    S, T = frozenset(S), frozenset(T)
    lists = list(p.lists)
    if p.n == 1:
        lists[0] = lists[0] - (S | T)
    else:
        lists[0] = lists[0] - S
        lists[-1] = lists[-1] - T
    return PathInstance(tuple(lists), p.m)


def damage(p: PathInstance, S, T) -> int:
    """Drop in s_l caused by the endpoint deletions, by definition."""
    return profile(p).s_l - profile(subtract(p, S, T)).s_l


def damage_closed_form(prof: PathProfile, S, T) -> int:
    """Odd-path damage without recomputing any profile."""
    if not prof.odd:
        raise EvenPath("damage closed form needs an odd vertex count")
    S, T = frozenset(S), frozenset(T)
    return (
        len(prof.x1_hat & S)
        + len(prof.xn_hat & T)
        + len(prof.lam & (S | T))
    )


def profile_lower_bound(prof: PathProfile, m: int) -> int:
    """Guaranteed floor for s_l on odd paths with uniform width 4m."""
    if not prof.odd:
        raise EvenPath("lower bound needs an odd vertex count")
    if any(w != 4 * m for w in prof.widths):
        raise WidthViolation(f"widths {prof.widths} are not uniformly 4m={4 * m}")
    n = prof.n
    return max(
        2 * (n - 1) * m + len(prof.x1_hat) + len(prof.xn_hat) + len(prof.lam),
        2 * (n + 1) * m,
    )


def colour_path(p: PathInstance) -> FoldColouring:
    """Deterministic 2m-fold colouring of a path that passes the criterion.

    Greedy left to right: prefer 2m-subsets with minimal overlap with the
    next list, ties by smallest colour tuple; backtracks on dead ends.
    Raises Infeasible only if the search fails outright, which contradicts
    the criterion and is treated as a test failure by callers.
    """
    b = 2 * p.m
    n = p.n
    chosen: list[frozenset[int]] = []

    def candidates(i: int, banned: frozenset[int]):
        avail = sorted(p.lists[i] - banned)
        if len(avail) < b:
            return []
        nxt = p.lists[i + 1] if i + 1 < n else frozenset()
        subs = [tuple(c) for c in combinations(avail, b)]
        subs.sort(key=lambda s: (sum(1 for c in s if c in nxt), s))
        return subs

    def extend(i: int) -> bool:
        if i == n:
            return True
        banned = chosen[-1] if chosen else frozenset()
        for cand in candidates(i, banned):
            chosen.append(frozenset(cand))
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        raise Infeasible(
            f"no {b}-fold colouring found for path with lists "
            f"{[sorted(s) for s in p.lists]}"
        )
    return FoldColouring(tuple(chosen), b)
