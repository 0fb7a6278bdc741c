"""Graph families, cores and the choosability classification.

Vertex numbering convention: hub vertices come first (u=0, v=1, or a single
shared vertex 0), then internal path vertices path-by-path in traversal
order.  All downstream modules address lists and colourings through this
numbering.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidSpec


# ---------------------------------------------------------------------------
# family specs


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of one of the supported graph families.

    variant is one of "oddCycle", "evenCycle", "twoCyclesShared",
    "twoCyclesJoined", "theta"; params holds the integers of the variant.
    """

    variant: str
    params: tuple

    def __post_init__(self):
        v, p = self.variant, self.params
        if v == "oddCycle":
            (n,) = p
            if n < 3 or n % 2 == 0:
                raise InvalidSpec(f"odd cycle length must be odd and >= 3, got {n}")
        elif v == "evenCycle":
            (n,) = p
            if n < 4 or n % 2 == 1:
                raise InvalidSpec(f"even cycle length must be even and >= 4, got {n}")
        elif v == "twoCyclesShared":
            cp, cq = p
            if cp % 2 or cq % 2 or cp < 4 or cq < 4:
                raise InvalidSpec(f"cycle lengths must be even and >= 4, got {cp},{cq}")
        elif v == "twoCyclesJoined":
            cp, cq, path_len = p
            if cp % 2 or cq % 2 or cp < 4 or cq < 4:
                raise InvalidSpec(f"cycle lengths must be even and >= 4, got {cp},{cq}")
            if path_len < 1:
                raise InvalidSpec(f"connecting path length must be >= 1, got {path_len}")
        elif v == "theta":
            if len(p) < 3:
                raise InvalidSpec("theta needs at least 3 path lengths")
            if any(k < 1 for k in p):
                raise InvalidSpec(f"theta path lengths must be >= 1, got {p}")
            if sum(1 for k in p if k == 1) > 1:
                raise InvalidSpec("at most one theta path may have length 1")
            if tuple(sorted(p)) != p:
                raise InvalidSpec("theta lengths must be stored sorted")
        else:
            raise InvalidSpec(f"unknown family variant {v!r}")


def odd_cycle(n: int) -> FamilySpec:
    return FamilySpec("oddCycle", (n,))


def even_cycle(n: int) -> FamilySpec:
    return FamilySpec("evenCycle", (n,))


def two_cycles_shared(p: int, q: int) -> FamilySpec:
    return FamilySpec("twoCyclesShared", (p, q))


def two_cycles_joined(p: int, q: int, path_len: int) -> FamilySpec:
    return FamilySpec("twoCyclesJoined", (p, q, path_len))


def theta(*lengths: int) -> FamilySpec:
    return FamilySpec("theta", tuple(sorted(lengths)))


def spec_from_json(obj: dict) -> FamilySpec:
    """Parse the JSON form, e.g. {"theta": [2, 4, 4]} or {"oddCycle": 5}."""
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidSpec(f"family JSON must have exactly one key, got {obj!r}")
    key, val = next(iter(obj.items()))
    if key == "oddCycle":
        return odd_cycle(int(val))
    if key == "evenCycle":
        return even_cycle(int(val))
    if key == "twoCyclesShared":
        return two_cycles_shared(int(val["p"]), int(val["q"]))
    if key == "twoCyclesJoined":
        return two_cycles_joined(int(val["p"]), int(val["q"]), int(val["pathLen"]))
    if key == "theta":
        return theta(*[int(k) for k in val])
    raise InvalidSpec(f"unknown family variant {key!r}")


def spec_to_json(spec: FamilySpec) -> dict:
    if spec.variant in ("oddCycle", "evenCycle"):
        return {spec.variant: spec.params[0]}
    if spec.variant == "twoCyclesShared":
        return {"twoCyclesShared": {"p": spec.params[0], "q": spec.params[1]}}
    if spec.variant == "twoCyclesJoined":
        p, q, path_len = spec.params
        return {"twoCyclesJoined": {"p": p, "q": q, "pathLen": path_len}}
    return {"theta": list(spec.params)}


# ---------------------------------------------------------------------------
# concrete graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as per-vertex sorted neighbour tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        return [(u, w) for u in range(self.n) for w in self.adj[u] if u < w]


def graph_from_edges(n: int, edges) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, w in edges:
        if u == w:
            raise InvalidSpec(f"loop at vertex {u}")
        adj[u].add(w)
        adj[w].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


def realize(spec: FamilySpec) -> Graph:
    """Build the concrete graph of a family spec, hub-first numbering."""
    v, p = spec.variant, spec.params
    if v in ("oddCycle", "evenCycle"):
        (n,) = p
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if v == "twoCyclesShared":
        cp, cq = p
        edges = []
        # cycle 1: 0,1,...,cp-1; cycle 2: 0,cp,...,cp+cq-2
        first = list(range(1, cp))
        edges += [(0, first[0])] + list(zip(first, first[1:])) + [(first[-1], 0)]
        second = list(range(cp, cp + cq - 1))
        edges += [(0, second[0])] + list(zip(second, second[1:])) + [(second[-1], 0)]
        return graph_from_edges(cp + cq - 1, edges)
    if v == "twoCyclesJoined":
        cp, cq, path_len = p
        edges = []
        left = list(range(2, cp + 1))  # cycle through u=0
        edges += [(0, left[0])] + list(zip(left, left[1:])) + [(left[-1], 0)]
        right = list(range(cp + 1, cp + cq))  # cycle through v=1
        edges += [(1, right[0])] + list(zip(right, right[1:])) + [(right[-1], 1)]
        mid = list(range(cp + cq, cp + cq + path_len - 1))
        chain = [0] + mid + [1]
        edges += list(zip(chain, chain[1:]))
        return graph_from_edges(cp + cq + path_len - 1, edges)
    # theta
    edges = []
    nxt = 2
    for k in p:
        inner = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        chain = [0] + inner + [1]
        edges += list(zip(chain, chain[1:]))
    return graph_from_edges(nxt, edges)


def core(g: Graph) -> Graph:
    """Iterated leaf deletion; returns K1 when everything is removed.

    The surviving vertices keep their relative order; `labels` records the
    original vertex ids so callers can map back.
    """
    alive = [True] * g.n
    deg = [g.degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        if sum(alive) == 1:
            break
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    keep = [v for v in range(g.n) if alive[v]]
    if not keep:
        keep = [0]
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(
        tuple(index[w] for w in g.adj[v] if alive[w]) for v in keep
    )
    return Graph(len(keep), adj, labels=tuple(str(v) for v in keep))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    kind: str  # "TwoChoosable" | "ThreeChoiceCritical" | "Other"
    detail: str = ""
    case: int | None = None
    bipartite: bool | None = None
    known_4m_2m_choosable: bool | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "detail": self.detail}
        if self.case is not None:
            out["case"] = self.case
            out["bipartite"] = self.bipartite
            out["known42Choosable"] = self.known_4m_2m_choosable
        return out


def _critical(case: int, detail: str, known42: bool) -> Classification:
    return Classification(
        kind="ThreeChoiceCritical",
        detail=detail,
        case=case,
        bipartite=(case != 1),
        known_4m_2m_choosable=known42,
    )


def classify(spec: FamilySpec) -> Classification:
    """Classify a family symbolically via parity and size tests."""
    v, p = spec.variant, spec.params
    if v == "oddCycle":
        return _critical(1, f"odd cycle C_{p[0]}", known42=False)
    if v == "evenCycle":
        return Classification("TwoChoosable", detail="even cycle")
    if v == "twoCyclesJoined":
        return _critical(2, "two even cycles joined by a path", known42=True)
    if v == "twoCyclesShared":
        return _critical(3, "two even cycles sharing a vertex", known42=True)

    lengths = p
    if len(lengths) == 3:
        k1, k2, k3 = lengths
        if k1 == 2 and k2 == 2 and k3 % 2 == 0:
            return Classification("TwoChoosable", detail="theta(2,2,2p)")
        parities = {k % 2 for k in lengths}
        if len(parities) != 1:
            return Classification("Other", detail="mixed-parity theta")
        even = lengths[0] % 2 == 0
        if even and k1 >= 2 and k2 > 2 and k3 > 2:
            return _critical(4, f"theta{lengths}", known42=(k1 <= 2))
        if not even and k2 > 1 and k3 > 1:
            return _critical(4, f"theta{lengths}", known42=(k1 <= 2))
        return Classification("Other", detail="theta outside the critical shapes")
    if len(lengths) == 4:
        k1, k2, k3, k4 = lengths
        if (k1, k2, k3) == (2, 2, 2) and k4 % 2 == 0:
            # theta(2,2,2,2t); t=1 is (4,2)-choosable, t>=2 is not
            return _critical(5, f"theta{lengths}", known42=(k4 == 2))
        return Classification("Other", detail="4-path theta outside the critical shape")
    return Classification("Other", detail="theta with too many paths")


def _walk(g: Graph, hub: int, start: int):
    """Follow the degree-2 chain out of `hub` through neighbour `start`.

    Returns (endpoint, length_in_edges, interior_vertices); the endpoint is
    the first vertex of degree != 2 reached (possibly `hub` itself).
    """
    prev, cur, steps = hub, start, 1
    interior = []
    while g.degree(cur) == 2:
        interior.append(cur)
        nxt = [x for x in g.adj[cur] if x != prev]
        prev, cur = cur, nxt[0]
        steps += 1
    return cur, steps, interior


def _recognize_core(c: Graph) -> FamilySpec | None:
    """Match a leafless connected graph against the five critical shapes
    plus cycles; returns None if nothing fits."""
    if c.n < 3:
        return None
    degs = [c.degree(v) for v in range(c.n)]
    if min(degs) < 2:
        return None
    if max(degs) == 2:  # a cycle
        return odd_cycle(c.n) if c.n % 2 else even_cycle(c.n)
    big = [v for v in range(c.n) if c.degree(v) >= 3]

    # walk out of every hub edge; dedupe chains walked from both ends
    chains = {}  # frozenset(interior) or edge key -> (hub, end, length)
    covered = set(big)
    try:
        for h in big:
            for start in c.adj[h]:
                end, length, interior = _walk(c, h, start)
                if end not in big:
                    return None
                key = frozenset(interior) if interior else frozenset({-h - 1, -end - 1})
                if key not in chains:
                    chains[key] = (h, end, length)
                    covered.update(interior)
    except IndexError:
        return None
    if len(covered) != c.n:
        return None
    loops = [(h, ln) for (h, end, ln) in chains.values() if h == end]
    links = [(h, end, ln) for (h, end, ln) in chains.values() if h != end]

    if len(big) == 1 and degs[big[0]] == 4:
        if len(loops) == 2 and not links:
            cp, cq = sorted(ln for _, ln in loops)
            if cp % 2 == 0 and cq % 2 == 0:
                return two_cycles_shared(cp, cq)
        return None
    if len(big) == 2 and all(c.degree(v) == 3 for v in big):
        if len(links) == 3 and not loops:
            return FamilySpec("theta", tuple(sorted(ln for *_, ln in links)))
        if len(links) == 1 and len(loops) == 2 and {h for h, _ in loops} == set(big):
            cp, cq = sorted(ln for _, ln in loops)
            if cp % 2 == 0 and cq % 2 == 0:
                return two_cycles_joined(cp, cq, links[0][2])
        return None
    if len(big) == 2 and all(c.degree(v) == 4 for v in big):
        if len(links) == 4 and not loops:
            return FamilySpec("theta", tuple(sorted(ln for *_, ln in links)))
    return None


def classify_graph(g: Graph) -> Classification:
    """Classify an arbitrary graph: take the core, then pattern-match."""
    c = core(g)
    if c.n == 1:
        return Classification("TwoChoosable", detail="core K1")
    spec = _recognize_core(c)
    if spec is None:
        return Classification("Other", detail="core matches no supported shape")
    return classify(spec)
