"""Colour lists, fold colourings, validity checking and instance generators.

Colours are bare non-negative integers; colour sets are frozensets at the
API surface.  Generators are deterministic given their seed and cap the
colour universe at 64 so bitmask tricks stay available downstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainMismatch, InvalidParams
from .graphs import Graph

UNIVERSE_CAP = 64


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex colour lists with a declared width.

    Reduced instances may carry per-vertex widths differing from the
    declared width; `widths` reports the actual sizes.
    """

    lists: tuple[frozenset[int], ...]
    width: int

    @property
    def n(self) -> int:
        return len(self.lists)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.lists)

    def uniform(self) -> bool:
        return all(len(s) == self.width for s in self.lists)


@dataclass(frozen=True)
class FoldColouring:
    """Per-vertex chosen colour sets, all of size `fold`."""

    chosen: tuple[frozenset[int], ...]
    fold: int

    @property
    def n(self) -> int:
        return len(self.chosen)


def assignment(lists, width: int | None = None) -> ListAssignment:
    sets = tuple(frozenset(s) for s in lists)
    if width is None:
        width = max((len(s) for s in sets), default=0)
    return ListAssignment(sets, width)


def validate(g: Graph, la: ListAssignment, phi: FoldColouring) -> bool:
    """True iff phi is a proper fold colouring drawn from the lists."""
    if la.n != g.n or phi.n != g.n:
        raise DomainMismatch(
            f"vertex counts differ: graph {g.n}, lists {la.n}, colouring {phi.n}"
        )
    for v in range(g.n):
        if len(phi.chosen[v]) != phi.fold:
            return False
        if not phi.chosen[v] <= la.lists[v]:
            return False
    for u, w in g.edges():
        if phi.chosen[u] & phi.chosen[w]:
            return False
    return True


def random_assignment(g: Graph, a: int, universe_size: int, seed: int) -> ListAssignment:
    """Independent uniform a-subsets of {0..universe_size-1}, one per vertex."""
    if a < 1 or universe_size < a:
        raise InvalidParams(f"need universe_size >= a >= 1, got a={a}, universe={universe_size}")
    rng = random.Random(seed)
    pool = range(universe_size)
    return ListAssignment(
        tuple(frozenset(rng.sample(pool, a)) for _ in range(g.n)), a
    )


def _biased_list(rng: random.Random, a: int, preferred: list[int], pool: list[int], bias: float) -> frozenset[int]:
    """Draw an a-set favouring `preferred` colours with the given bias."""
    chosen: set[int] = set()
    pref = [c for c in preferred]
    rng.shuffle(pref)
    for c in pref:
        if len(chosen) == a:
            break
        if rng.random() < bias:
            chosen.add(c)
    rest = [c for c in pool if c not in chosen]
    chosen.update(rng.sample(rest, a - len(chosen)))
    return frozenset(chosen)


def adversarial_sweep(g: Graph, a: int, seed: int):
    """Endless deterministic stream of width-a assignments.

    Universe sizes sweep from a (all lists identical) up to min(a*n, 64);
    the hub vertices (degree >= 3, else vertex 0) get heavily overlapping
    lists and the remaining lists are biased toward the hub colours, the
    regime where endpoint damage is largest.
    """
    rng = random.Random(seed)
    hubs = [v for v in range(g.n) if g.degree(v) >= 3] or [0]
    cap = min(a * g.n, UNIVERSE_CAP)
    yield ListAssignment(tuple(frozenset(range(a)) for _ in range(g.n)), a)
    while True:
        for universe in range(a, cap + 1):
            pool = list(range(universe))
            hub_pool = rng.sample(pool, min(universe, a + a // 2))
            lists: list[frozenset[int]] = [frozenset()] * g.n
            hub_list = frozenset(rng.sample(hub_pool, a))
            for v in hubs:
                lists[v] = _biased_list(rng, a, sorted(hub_list), pool, bias=0.8)
            hub_colours = sorted(set().union(*(lists[v] for v in hubs)))
            for v in range(g.n):
                if v in hubs:
                    continue
                lists[v] = _biased_list(rng, a, hub_colours, pool, bias=0.6)
            yield ListAssignment(tuple(lists), a)


# ---------------------------------------------------------------------------
# JSON forms


def assignment_to_json(la: ListAssignment) -> dict:
    return {
        "a": la.width,
        "lists": {str(v): sorted(la.lists[v]) for v in range(la.n)},
    }


def assignment_from_json(obj: dict) -> ListAssignment:
    lists_obj = obj["lists"]
    n = len(lists_obj)
    lists = tuple(frozenset(lists_obj[str(v)]) for v in range(n))
    return ListAssignment(lists, int(obj["a"]))


def colouring_to_json(phi: FoldColouring) -> dict:
    return {
        "b": phi.fold,
        "chosen": {str(v): sorted(phi.chosen[v]) for v in range(phi.n)},
    }


def colouring_from_json(obj: dict) -> FoldColouring:
    chosen_obj = obj["chosen"]
    n = len(chosen_obj)
    chosen = tuple(frozenset(chosen_obj[str(v)]) for v in range(n))
    return FoldColouring(chosen, int(obj["b"]))
