"""Seeded sweep drivers behind the `verify` CLI subcommands and the
acceptance suite.

Each sweep returns a plain dict: counters, any violations found (with full
reproducers), and whatever summary value is worth tracking across runs.
Sweeps are deterministic given their seed.
"""

from __future__ import annotations

import os
import random
from itertools import combinations, islice

from .graphs import Graph, graph_from_edges, realize, spec_to_json
from .inequality import (
    ParamTuple,
    check_convolution_identities,
    check_half_bound,
    check_monotonicity,
    count_blocking_selections,
    count_blocking_selections_rect,
    grid,
    valid_ell_tau,
)
from .lists import ListAssignment, adversarial_sweep, validate
from .oracle import brute_force_colour, enumerate_bad_sets
from .paths import (
    PathInstance,
    damage,
    damage_closed_form,
    decide_colourable,
    path_instance_to_json,
    profile,
    profile_lower_bound,
)
from .colourer import colour_family


def _path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _random_subset(rng: random.Random, pool, k: int) -> frozenset[int]:
    return frozenset(rng.sample(sorted(pool), k))


def random_path_instance(
    rng: random.Random, n: int, m: int, reduce_endpoints: bool = False
) -> PathInstance:
    """Width-4m lists over a smallish universe; optionally shrinks the
    endpoint lists toward their neighbours, the regime where the
    colourability criterion can fail."""
    width = 4 * m
    universe = list(range(rng.randint(width, 2 * width + rng.randrange(3) * m)))
    lists = [_random_subset(rng, universe, width) for _ in range(n)]
    if reduce_endpoints and n >= 2 and rng.random() < 0.6:
        for end, nbr in ((0, 1), (n - 1, n - 2)):
            w = rng.randint(2 * m, width)
            base = lists[nbr] if rng.random() < 0.7 else frozenset(universe)
            pool = base if len(base) >= w else frozenset(universe)
            lists[end] = _random_subset(rng, pool, w)
    return PathInstance(tuple(lists), m)


# ---------------------------------------------------------------------------
# path criterion vs brute force


def sweep_path_criterion(
    seed: int,
    trials: int = 10_000,
    ns=(5, 7),
    ms=(1, 2),
    exhaustive_small: bool = True,
) -> dict:
    checked = 0
    mismatches = []

    def compare(p: PathInstance):
        nonlocal checked
        checked += 1
        la = ListAssignment(p.lists, 4 * p.m)
        predicted = decide_colourable(p)
        actual = brute_force_colour(_path_graph(p.n), la, 2 * p.m) is not None
        if predicted != actual:
            mismatches.append(path_instance_to_json(p))

    if exhaustive_small:
        fours = list(combinations(range(1, 7), 4))
        for l1 in fours:
            for l2 in fours:
                for l3 in fours:
                    compare(PathInstance((frozenset(l1), frozenset(l2), frozenset(l3)), 1))

    rng = random.Random(seed)
    combos = [(n, m) for n in ns for m in ms]
    per_combo = trials // len(combos)
    for n, m in combos:
        for _ in range(per_combo):
            compare(random_path_instance(rng, n, m, reduce_endpoints=True))
    return {"checked": checked, "mismatches": mismatches}


# ---------------------------------------------------------------------------
# damage closed form


def sweep_damage_closed_form(
    seed: int, comparisons: int = 100_000, ns=(3, 5, 7), ms=(1, 2)
) -> dict:
    rng = random.Random(seed)
    done = 0
    mismatches = []
    while done < comparisons:
        n = rng.choice(ns)
        m = rng.choice(ms)
        p = random_path_instance(rng, n, m)
        prof = profile(p)
        colours = sorted(set().union(*p.lists))
        for _ in range(20):
            S = _random_subset(rng, rng.choice([p.lists[0], frozenset(colours)]), 2 * m)
            T = _random_subset(rng, rng.choice([p.lists[-1], frozenset(colours)]), 2 * m)
            done += 1
            if damage(p, S, T) != damage_closed_form(prof, S, T):
                mismatches.append(
                    {"instance": path_instance_to_json(p), "S": sorted(S), "T": sorted(T)}
                )
    return {"comparisons": done, "mismatches": mismatches}


# ---------------------------------------------------------------------------
# profile lower bound


def sweep_profile_bound(seed: int, trials: int = 10_000, ns=(1, 3, 5, 7), ms=(1, 2)) -> dict:
    rng = random.Random(seed)
    violations = []
    for _ in range(trials):
        n = rng.choice(ns)
        m = rng.choice(ms)
        p = random_path_instance(rng, n, m)
        prof = profile(p)
        if prof.s_l < profile_lower_bound(prof, m):
            violations.append(path_instance_to_json(p))
    return {"checked": trials, "violations": violations}


# ---------------------------------------------------------------------------
# bad-set half bound


def sweep_bad_sets(seed: int, trials_per_m: int = 1000, ms=(1, 2), ns=(3, 5, 7)) -> dict:
    rng = random.Random(seed)
    checked = 0
    violations = []
    for m in ms:
        for _ in range(trials_per_m):
            n = rng.choice(ns)
            p = random_path_instance(rng, n, m)
            prof = profile(p)
            favoured = sorted(p.lists[0] | p.lists[-1] | prof.lam)
            universe = sorted(set().union(*p.lists) | set(range(4 * m)))
            w = set(rng.sample(favoured, min(len(favoured), rng.randint(2 * m, 4 * m))))
            w.update(rng.sample([c for c in universe if c not in w], 4 * m - len(w)))
            report = enumerate_bad_sets(p, frozenset(w))
            checked += 1
            if not report.ok:
                violations.append(
                    {"instance": path_instance_to_json(p), "report": report.to_json()}
                )
    return {"checked": checked, "violations": violations}


# ---------------------------------------------------------------------------
# counting inequality, monotonicity, convolution identities


def _inequality_chunk(args):
    m, ell, tau = args
    worst = None
    violations = []
    checked = 0
    for x in range(0, ell + 1):
        for y in range(0, ell - x + 1):
            t = ParamTuple(m, ell, tau, x, y)
            if count_blocking_selections(t) != count_blocking_selections_rect(t):
                violations.append({"params": t.to_json(), "reason": "impl mismatch"})
            ok, margin = check_half_bound(t)
            checked += 1
            if not ok:
                violations.append({"params": t.to_json(), "reason": "bound violated"})
            elif worst is None or margin < worst[0]:
                worst = (margin, t)
    return checked, violations, worst


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LISTCHROM_THREADS", "1")))
    except ValueError:
        return 1


def sweep_inequality(max_m: int = 5) -> dict:
    chunks = [(m, ell, tau) for m in range(1, max_m + 1) for ell, tau in valid_ell_tau(m)]
    workers = worker_count()
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            results = pool.map(_inequality_chunk, chunks)
    else:
        results = [_inequality_chunk(c) for c in chunks]
    checked = sum(r[0] for r in results)
    violations = [v for r in results for v in r[1]]
    worst = None
    for _, _, w in results:
        if w is not None and (worst is None or w[0] < worst[0]):
            worst = w
    out = {"checked": checked, "violations": violations}
    if worst is not None:
        margin, t = worst
        out["minMargin"] = float(margin)
        out["argmin"] = t.to_json()
    return out


def sweep_monotonicity(max_m: int = 4) -> dict:
    checked = 0
    violations = []
    for m in range(1, max_m + 1):
        for ell, tau in valid_ell_tau(m):
            for x0 in range(0, ell + 1):
                checked += 1
                if not check_monotonicity(m, ell, tau, x0):
                    violations.append({"m": m, "ell": ell, "tau": tau, "x0": x0})
    return {"checked": checked, "violations": violations}


def sweep_convolution(max_m: int = 4) -> dict:
    checked = 0
    violations = []
    for m in range(1, max_m + 1):
        for ell, tau in valid_ell_tau(m):
            for x in range(1, (ell + 1) // 2):
                checked += 1
                if not check_convolution_identities(m, ell, tau, x):
                    violations.append({"m": m, "ell": ell, "tau": tau, "x": x})
    return {"checked": checked, "violations": violations}


# ---------------------------------------------------------------------------
# end-to-end family colouring


def sweep_family_colourings(seed: int, trials: int = 1000, families=None, ms=(1, 2)) -> dict:
    from .graphs import theta, two_cycles_joined, two_cycles_shared

    if families is None:
        families = [
            two_cycles_shared(4, 4),
            two_cycles_joined(4, 6, 2),
            theta(2, 4, 4),
            theta(2, 4, 6),
            theta(1, 3, 3),
        ]
    results = []
    not_found = 0
    failures = []
    for spec in families:
        g = realize(spec)
        for m in ms:
            ok = 0
            stream = adversarial_sweep(g, 4 * m, seed)
            for la in islice(stream, trials):
                try:
                    phi = colour_family(spec, la, m)
                except Exception as exc:  # NotFound or anything unexpected
                    not_found += 1
                    failures.append(
                        {"spec": spec_to_json(spec), "m": m, "error": repr(exc)}
                    )
                    continue
                if validate(g, la, phi):
                    ok += 1
                else:
                    failures.append({"spec": spec_to_json(spec), "m": m, "error": "invalid"})
            results.append(
                {"spec": spec_to_json(spec), "m": m, "trials": trials, "ok": ok}
            )
    return {"perFamily": results, "notFound": not_found, "failures": failures}
