"""List assignments, validation, and the instance generators."""

import json
from itertools import islice

import pytest
from hypothesis import given, settings, strategies as st

from listchrom import (
    DomainMismatch,
    FoldColouring,
    InvalidParams,
    adversarial_sweep,
    assignment,
    random_assignment,
    realize,
    theta,
    validate,
)
from listchrom.graphs import graph_from_edges
from listchrom.lists import (
    UNIVERSE_CAP,
    ListAssignment,
    assignment_from_json,
    assignment_to_json,
    colouring_from_json,
    colouring_to_json,
)


def triangle():
    return graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])


def test_assignment_infers_width():
    la = assignment([{1, 2}, {1, 2, 3}])
    assert la.width == 3
    assert la.widths == (2, 3)
    assert not la.uniform()


def test_validate_accepts_proper_colouring():
    la = assignment([{1, 2}, {2, 3}, {3, 1}], 2)
    phi = FoldColouring((frozenset({1}), frozenset({2}), frozenset({3})), 1)
    assert validate(triangle(), la, phi)


def test_validate_rejects_shared_edge_colour():
    la = assignment([{1, 2}, {1, 2}, {3, 4}], 2)
    phi = FoldColouring((frozenset({1}), frozenset({1}), frozenset({3})), 1)
    assert not validate(triangle(), la, phi)


def test_validate_rejects_colour_outside_list():
    la = assignment([{1, 2}, {2, 3}, {3, 4}], 2)
    phi = FoldColouring((frozenset({9}), frozenset({2}), frozenset({3})), 1)
    assert not validate(triangle(), la, phi)


def test_validate_rejects_wrong_fold_size():
    la = assignment([{1, 2}, {2, 3}, {3, 4}], 2)
    phi = FoldColouring((frozenset({1, 2}), frozenset({3}), frozenset({4})), 1)
    assert not validate(triangle(), la, phi)


def test_validate_rejects_size_mismatch():
    la = assignment([{1, 2}, {2, 3}], 2)
    phi = FoldColouring((frozenset({1}), frozenset({2})), 1)
    with pytest.raises(DomainMismatch):
        validate(triangle(), la, phi)


def test_random_assignment_is_seeded():
    g = triangle()
    a = random_assignment(g, 4, 8, seed=5)
    b = random_assignment(g, 4, 8, seed=5)
    c = random_assignment(g, 4, 8, seed=6)
    assert a == b
    assert a != c
    assert a.uniform() and a.width == 4


def test_random_assignment_rejects_small_universe():
    with pytest.raises(InvalidParams):
        random_assignment(triangle(), 4, 3, seed=0)


def test_adversarial_sweep_starts_with_identical_lists():
    g = realize(theta(2, 4, 4))
    first = next(adversarial_sweep(g, 4, seed=0))
    assert all(l == frozenset(range(4)) for l in first.lists)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 1000), st.sampled_from([4, 8]))
def test_adversarial_sweep_widths_and_cap(seed, a):
    g = realize(theta(2, 4, 4))
    for la in islice(adversarial_sweep(g, a, seed), 30):
        assert la.uniform() and la.width == a
        assert all(max(l) < UNIVERSE_CAP for l in la.lists)


def test_adversarial_sweep_deterministic():
    g = realize(theta(1, 3, 3))
    s1 = list(islice(adversarial_sweep(g, 4, seed=3), 10))
    s2 = list(islice(adversarial_sweep(g, 4, seed=3), 10))
    assert s1 == s2


def test_assignment_json_round_trip():
    la = assignment([{1, 2, 3, 4}, {3, 4, 5, 6}], 4)
    assert assignment_from_json(json.loads(json.dumps(assignment_to_json(la)))) == la


def test_colouring_json_round_trip():
    phi = FoldColouring((frozenset({1, 2}), frozenset({3, 4})), 2)
    assert colouring_from_json(json.loads(json.dumps(colouring_to_json(phi)))) == phi
