"""Acceptance gate: one test per release criterion, each printing a single
pass/fail line.  Sizes and tolerances are fixed; do not shrink them."""

import time

import pytest

from listchrom import (
    brute_force_colour,
    exhaustive_choosable,
    find_uncolourable_assignment,
)
from listchrom.graphs import graph_from_edges
from listchrom import verification as V

SEED = 2024


def cycle_graph(n):
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def report(name, ok, detail=""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_path_criterion_oracle_equivalence():
    started = time.monotonic()
    r = V.sweep_path_criterion(SEED, trials=10_000, ns=(5, 7), ms=(1, 2))
    elapsed = time.monotonic() - started
    ok = (
        r["checked"] >= 3375 + 10_000
        and not r["mismatches"]
        and elapsed < 30
    )
    report(
        "1 path-criterion vs oracle",
        ok,
        f"{r['checked']} instances, {len(r['mismatches'])} mismatches, {elapsed:.1f}s",
    )


def test_criterion_2_damage_closed_form():
    r = V.sweep_damage_closed_form(SEED, comparisons=100_000)
    ok = r["comparisons"] >= 100_000 and not r["mismatches"]
    report(
        "2 damage closed form",
        ok,
        f"{r['comparisons']} comparisons, {len(r['mismatches'])} mismatches",
    )


def test_criterion_3_profile_lower_bound():
    r = V.sweep_profile_bound(SEED, trials=10_000)
    ok = r["checked"] >= 10_000 and not r["violations"]
    report(
        "3 profile sum lower bound",
        ok,
        f"{r['checked']} instances, {len(r['violations'])} violations",
    )


def test_criterion_4_bad_set_half_bound():
    r = V.sweep_bad_sets(SEED, trials_per_m=1000, ms=(1, 2))
    ok = r["checked"] == 2000 and not r["violations"]
    report(
        "4 bad-set half bound",
        ok,
        f"{r['checked']} instances, {len(r['violations'])} violations",
    )


def test_criterion_5_counting_inequality_exhaustive():
    started = time.monotonic()
    r = V.sweep_inequality(max_m=5)
    elapsed = time.monotonic() - started
    ok = not r["violations"] and elapsed < 60 and "minMargin" in r
    report(
        "5 counting inequality m<=5",
        ok,
        f"{r['checked']} tuples, min margin {r.get('minMargin')} at "
        f"{r.get('argmin')}, {elapsed:.1f}s",
    )


def test_criterion_6_monotonicity_and_identities():
    mono = V.sweep_monotonicity(max_m=4)
    conv = V.sweep_convolution(max_m=4)
    ok = not mono["violations"] and not conv["violations"]
    report(
        "6 monotonicity + convolution identities m<=4",
        ok,
        f"{mono['checked']} + {conv['checked']} checks",
    )


def test_criterion_7_end_to_end_family_colouring():
    started = time.monotonic()
    r = V.sweep_family_colourings(SEED, trials=1000)
    elapsed = time.monotonic() - started
    all_ok = all(row["ok"] == row["trials"] for row in r["perFamily"])
    ok = (
        len(r["perFamily"]) == 10
        and all_ok
        and r["notFound"] == 0
        and not r["failures"]
        and elapsed < 300
    )
    report(
        "7 end-to-end family colouring",
        ok,
        f"10x1000 trials, notFound={r['notFound']}, "
        f"failures={len(r['failures'])}, {elapsed:.1f}s",
    )


def test_criterion_8_negative_controls():
    w3 = find_uncolourable_assignment(cycle_graph(3), 2, 1)
    w5 = find_uncolourable_assignment(cycle_graph(5), 2, 1)
    witnesses_ok = (
        w3 is not None
        and brute_force_colour(cycle_graph(3), w3, 1) is None
        and w5 is not None
        and brute_force_colour(cycle_graph(5), w5, 1) is None
    )
    choosability_ok = exhaustive_choosable(cycle_graph(4), 2, 1) and not exhaustive_choosable(
        cycle_graph(3), 2, 1
    )
    report(
        "8 negative controls",
        witnesses_ok and choosability_ok,
        "C3/C5 witnesses verified; C4 (2,1)-choosable, C3 not",
    )
