"""Constructive multi-fold colouring of the families that are known to
admit one: two even cycles sharing a vertex, two even cycles joined by a
path, and theta graphs with one path of length at most 2 and the other two
longer, all lengths of the same parity.

The strategy: pre-colour the high-degree hub vertices with 2m-sets whose
damage on every internal path stays within that path's colourability
slack, then colour each path independently.  Hub candidates are scanned
exhaustively; a failed scan would contradict the guarantees the search
relies on, so it dumps a counterexample file and raises NotFound.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from itertools import combinations

from .errors import NotFound, UnsupportedFamily, WidthViolation
from .graphs import FamilySpec, Graph, realize, spec_to_json, theta as theta_spec
from .lists import FoldColouring, ListAssignment, assignment_to_json, validate
from .oracle import colex_subsets
from .paths import (
    PathInstance,
    PathProfile,
    colour_path,
    damage_closed_form,
    profile,
    subtract,
)

HEAVY, LIGHT, SAFE = 2, 1, 0


@dataclass(frozen=True)
class Decomposition:
    """Hubs plus the internal paths of the host graph.

    kind is "shared", "joined" or "theta".  Each path is a tuple of vertex
    ids in traversal order; both path endpoints are adjacent to a hub (the
    first endpoint to hubs[0], the last to hubs[-1]).  For "joined", the
    connector runs from hub to hub inclusive.
    """

    kind: str
    graph: Graph
    hubs: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    connector: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CoupleTable:
    """Matched colour pairs (c_j, c'_j) over the two hub lists; shared
    colours are paired with themselves and listed first."""

    couples: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.couples)


@dataclass(frozen=True)
class CoupleProfile:
    """Per internal path: the damage class of every couple and the
    (heavy, light, safe) counts x, y, z."""

    classes: tuple[tuple[int, ...], ...]  # [path][couple] -> 2/1/0
    counts: tuple[tuple[int, int, int], ...]  # [path] -> (x, y, z)


@dataclass(frozen=True)
class SimplePair:
    """Hub subsets selected by a common couple index set."""

    indices: tuple[int, ...]
    S: frozenset[int]
    T: frozenset[int]


def decompose(spec: FamilySpec) -> Decomposition:
    """Split a supported family into hubs and internal paths."""
    v, p = spec.variant, spec.params
    g = realize(spec)
    if v == "twoCyclesShared":
        cp, cq = p
        return Decomposition(
            "shared",
            g,
            hubs=(0,),
            paths=(tuple(range(1, cp)), tuple(range(cp, cp + cq - 1))),
        )
    if v == "twoCyclesJoined":
        cp, cq, path_len = p
        connector = (0,) + tuple(range(cp + cq, cp + cq + path_len - 1)) + (1,)
        return Decomposition(
            "joined",
            g,
            hubs=(0, 1),
            paths=(tuple(range(2, cp + 1)), tuple(range(cp + 1, cp + cq))),
            connector=connector,
        )
    if v == "theta":
        if len(p) != 3:
            raise UnsupportedFamily(f"theta{p} is outside the colourable scope")
        k1, k2, k3 = p
        if k1 != 2 or k2 <= 2 or k3 <= 2 or k2 % 2 or k3 % 2:
            raise UnsupportedFamily(
                f"theta{p}: need lengths (2, 2s, 2t) with s,t >= 2"
            )
        paths = []
        nxt = 2
        for k in p:
            paths.append(tuple(range(nxt, nxt + k - 1)))
            nxt += k - 1
        return Decomposition("theta", g, hubs=(0, 1), paths=tuple(paths))
    raise UnsupportedFamily(f"{v} has no path decomposition here")


def _path_instances(dec: Decomposition, la: ListAssignment, m: int):
    return [
        PathInstance(tuple(la.lists[v] for v in ids), m) for ids in dec.paths
    ]


def build_couples(lu: frozenset[int], lv: frozenset[int]) -> CoupleTable:
    """Deterministic couple indexing: shared colours first ascending, then
    the leftovers of each side paired ascending."""
    if len(lu) != len(lv):
        raise WidthViolation(f"hub widths differ: {len(lu)} vs {len(lv)}")
    shared = sorted(lu & lv)
    rest_u = sorted(lu - lv)
    rest_v = sorted(lv - lu)
    couples = [(c, c) for c in shared] + list(zip(rest_u, rest_v))
    return CoupleTable(tuple(couples))


def couple_damage(prof: PathProfile, c: int, cp: int) -> int:
    """Damage of the singleton pair ({c}, {c'}) on an odd path."""
    dam = 0
    if c in prof.x1_hat:
        dam += 1
    if cp in prof.xn_hat:
        dam += 1
    dam += len(prof.lam & {c, cp})
    return dam


def classify_couples(
    dec: Decomposition, la: ListAssignment, m: int
) -> tuple[CoupleTable, CoupleProfile]:
    """Heavy/light/safe class of every couple on every internal path."""
    u, v = dec.hubs[0], dec.hubs[-1]
    lu, lv = la.lists[u], la.lists[v]
    if len(lu) != 4 * m or len(lv) != 4 * m:
        raise WidthViolation(f"hub widths {len(lu)},{len(lv)} are not 4m={4 * m}")
    table = build_couples(lu, lv)
    profs = [profile(p) for p in _path_instances(dec, la, m)]
    classes = tuple(
        tuple(couple_damage(pr, c, cp) for c, cp in table.couples) for pr in profs
    )
    counts = tuple(
        (row.count(HEAVY), row.count(LIGHT), row.count(SAFE)) for row in classes
    )
    return table, CoupleProfile(classes, counts)


def simple_pair_damage(cp: CoupleProfile, path_idx: int, indices) -> int:
    """Damage of a simple pair via per-couple additivity."""
    row = cp.classes[path_idx]
    return sum(row[j] for j in indices)


def find_simple_pair(dec: Decomposition, la: ListAssignment, m: int) -> SimplePair:
    """Exhaustive colex scan over couple index 2m-subsets for a pair whose
    damage fits inside every path's slack; first hit wins."""
    table, cprof = classify_couples(dec, la, m)
    insts = _path_instances(dec, la, m)
    slack = [profile(p).s_l - 2 * m * p.n for p in insts]
    for idx in colex_subsets(range(len(table)), 2 * m):
        if all(
            simple_pair_damage(cprof, i, idx) <= slack[i] for i in range(len(insts))
        ):
            S = frozenset(table.couples[j][0] for j in idx)
            T = frozenset(table.couples[j][1] for j in idx)
            return SimplePair(idx, S, T)
    _dump_and_raise(
        "no admissible simple pair",
        dec,
        la,
        m,
        extra={"slack": slack, "couples": [list(c) for c in table.couples]},
    )


def _dump_and_raise(message: str, dec: Decomposition, la: ListAssignment, m: int, extra=None):
    payload = {
        "message": message,
        "kind": dec.kind,
        "m": m,
        "assignment": assignment_to_json(la),
        "paths": [list(p) for p in dec.paths],
    }
    if extra:
        payload["trace"] = extra
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode()
    ).hexdigest()[:16]
    directory = os.environ.get("LISTCHROM_DUMP_DIR", ".")
    path = os.path.join(directory, f"counterexample-{digest}.json")
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
    raise NotFound(f"{message}; instance dumped to {path}", dump_path=path)


def _assemble(
    g: Graph, m: int, hub_sets: dict[int, frozenset[int]], path_ids, path_colourings
) -> FoldColouring:
    chosen: list[frozenset[int]] = [frozenset()] * g.n
    for v, s in hub_sets.items():
        chosen[v] = s
    for ids, phi in zip(path_ids, path_colourings):
        for v, s in zip(ids, phi.chosen):
            chosen[v] = s
    return FoldColouring(tuple(chosen), 2 * m)


def colour_two_cycle_family(
    dec: Decomposition, la: ListAssignment, m: int
) -> FoldColouring:
    """Colour the shared-vertex and joined two-cycle families."""
    insts = _path_instances(dec, la, m)
    profs = [profile(p) for p in insts]
    slack = [profs[i].s_l - 2 * m * insts[i].n for i in range(len(insts))]

    def bad(i: int, s) -> bool:
        return damage_closed_form(profs[i], s, s) > slack[i]

    if dec.kind == "shared":
        hub = dec.hubs[0]
        for s in colex_subsets(la.lists[hub], 2 * m):
            if not bad(0, s) and not bad(1, s):
                S = frozenset(s)
                phis = [colour_path(subtract(p, S, S)) for p in insts]
                return _assemble(dec.graph, m, {hub: S}, dec.paths, phis)
        _dump_and_raise("no hub set avoids both cycles' bad sets", dec, la, m)

    if dec.kind != "joined":
        raise UnsupportedFamily(f"{dec.kind} is not a two-cycle decomposition")

    u, v = dec.hubs
    connector = dec.connector
    b = 2 * m

    def extend_connector(pos: int, picks: list[frozenset[int]]):
        """DFS along the connector interior, then scan end sets at v."""
        vertex = connector[pos]
        prev = picks[-1]
        if vertex == v:
            for t in colex_subsets(la.lists[v] - prev, b):
                if not bad(1, t):
                    return frozenset(t), picks[1:]
            return None
        for cand in colex_subsets(la.lists[vertex] - prev, b):
            picks.append(frozenset(cand))
            hit = extend_connector(pos + 1, picks)
            if hit is not None:
                return hit
            picks.pop()
        return None

    for s in colex_subsets(la.lists[u], b):
        if bad(0, s):
            continue
        S = frozenset(s)
        hit = extend_connector(1, [S])
        if hit is None:
            continue
        T, interior = hit
        phis = [
            colour_path(subtract(insts[0], S, S)),
            colour_path(subtract(insts[1], T, T)),
        ]
        phi = _assemble(dec.graph, m, {u: S, v: T}, dec.paths, phis)
        chosen = list(phi.chosen)
        for vertex, pick in zip(connector[1:-1], interior):
            chosen[vertex] = pick
        return FoldColouring(tuple(chosen), b)
    _dump_and_raise("no extendable hub pre-colouring found", dec, la, m)


@dataclass(frozen=True)
class MergeReduction:
    """Even theta target of the odd-theta reduction.

    list_source[x] is the odd-theta vertex whose list the even-theta vertex
    x inherits; every neighbour of the deleted hub inherits the merged
    vertex's list, which forces their colour sets to coincide so the
    colouring projects back.
    """

    even_spec: FamilySpec
    list_source: tuple[int, ...]
    colour_target: tuple[tuple[int, int], ...]  # (even vertex, odd vertex)


def merge_reduce(spec: FamilySpec) -> MergeReduction:
    """Reduce theta(1, 2r-1, 2s-1) to theta(2, 2r, 2s)."""
    if spec.variant != "theta" or len(spec.params) != 3:
        raise UnsupportedFamily(f"{spec.variant}{spec.params} is not an odd theta")
    k1, k2, k3 = spec.params
    if k1 != 1 or k2 < 3 or k3 < 3 or k2 % 2 == 0 or k3 % 2 == 0:
        raise UnsupportedFamily(
            f"theta{spec.params}: need lengths (1, 2r-1, 2s-1) with r,s >= 2"
        )
    even = theta_spec(2, k2 + 1, k3 + 1)

    # even-theta layout: 0=u, 1=v, 2=w (short path), 3..k2+2 path A, then path B
    a_even = list(range(3, 3 + k2))
    b_even = list(range(3 + k2, 3 + k2 + k3))
    # odd-theta layout: 0=z, 1=v, 2..k2 path A', then path B'
    a_odd = list(range(2, 2 + (k2 - 1)))
    b_odd = list(range(2 + (k2 - 1), 2 + (k2 - 1) + (k3 - 1)))

    source = [0] * (3 + k2 + k3)
    source[0] = 0  # deleted hub borrows the merged vertex's list
    source[1] = 1
    source[2] = 0
    source[a_even[0]] = 0
    for x, y in zip(a_even[1:], a_odd):
        source[x] = y
    source[b_even[0]] = 0
    for x, y in zip(b_even[1:], b_odd):
        source[x] = y

    targets = [(2, 0), (1, 1)]
    targets += list(zip(a_even[1:], a_odd))
    targets += list(zip(b_even[1:], b_odd))
    return MergeReduction(even, tuple(source), tuple(targets))


def _colour_even_theta(spec: FamilySpec, la: ListAssignment, m: int) -> FoldColouring:
    dec = decompose(spec)
    pair = find_simple_pair(dec, la, m)
    insts = _path_instances(dec, la, m)
    phis = [colour_path(subtract(p, pair.S, pair.T)) for p in insts]
    u, v = dec.hubs
    return _assemble(dec.graph, m, {u: pair.S, v: pair.T}, dec.paths, phis)


def colour_family(spec: FamilySpec, la: ListAssignment, m: int) -> FoldColouring:
    """Full pipeline: dispatch, colour, validate, return."""
    if la.width != 4 * m or not la.uniform():
        raise WidthViolation(f"need a uniform 4m-list assignment, 4m={4 * m}")
    g = realize(spec)
    if la.n != g.n:
        raise WidthViolation(
            f"assignment covers {la.n} vertices, graph has {g.n}"
        )
    if spec.variant in ("twoCyclesShared", "twoCyclesJoined"):
        phi = colour_two_cycle_family(decompose(spec), la, m)
    elif spec.variant == "theta" and len(spec.params) == 3 and spec.params[0] == 1:
        red = merge_reduce(spec)
        even_lists = tuple(la.lists[src] for src in red.list_source)
        even_la = ListAssignment(even_lists, la.width)
        even_phi = _colour_even_theta(red.even_spec, even_la, m)
        chosen: list[frozenset[int]] = [frozenset()] * g.n
        for even_v, odd_v in red.colour_target:
            chosen[odd_v] = even_phi.chosen[even_v]
        phi = FoldColouring(tuple(chosen), 2 * m)
    elif spec.variant == "theta":
        phi = _colour_even_theta(spec, la, m)
    else:
        raise UnsupportedFamily(f"{spec.variant} is outside the colourable scope")
    if not validate(g, la, phi):
        raise NotFound(
            f"constructed colouring failed validation for {spec_to_json(spec)}"
        )
    return phi
