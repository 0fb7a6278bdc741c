"""Path profiles, the colourability criterion, damage, and path colouring."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from listchrom import (
    EvenPath,
    Infeasible,
    WidthViolation,
    colour_path,
    damage,
    damage_closed_form,
    decide_colourable,
    path_instance,
    profile,
    profile_lower_bound,
    subtract,
)
from listchrom.lists import ListAssignment, validate
from listchrom.verification import _path_graph, random_path_instance


def inst(lists, m=1):
    return path_instance([list(l) for l in lists], m)


# ---------------------------------------------------------------------------
# profile: frozen hand-checked values


def test_profile_disjoint_ends():
    p = inst([{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}])
    prof = profile(p)
    assert [sorted(x) for x in prof.X] == [[1, 2, 3, 4], [5, 6], [7, 8]]
    assert prof.s_l == 8
    assert prof.lam == frozenset()
    assert prof.x1_hat == {1, 2}
    assert prof.xn_hat == {7, 8}


def test_profile_identical_lists():
    p = inst([{1, 2, 3, 4}] * 3)
    prof = profile(p)
    assert prof.s_l == 8
    assert prof.lam == frozenset({1, 2, 3, 4})
    assert prof.x1_hat == frozenset()
    assert prof.xn_hat == frozenset()


def test_profile_single_vertex():
    prof = profile(inst([{1, 2, 3, 4}]))
    assert prof.s_l == 4
    assert prof.lam == frozenset({1, 2, 3, 4})


def test_profile_hat_sets_use_one_based_parity():
    # colour 9 leaves at position 2 (1-based), even => in the hat set
    p = inst([{1, 2, 3, 9}, {3, 4, 5, 6}, {5, 6, 7, 8}])
    assert 9 in profile(p).x1_hat


# ---------------------------------------------------------------------------
# colourability criterion


def test_criterion_threshold():
    assert decide_colourable(inst([{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}]))
    # reduced ends sitting inside the middle list: S_L = 2+2+2 < 6
    assert not decide_colourable(inst([{3, 4}, {3, 4, 5, 6}, {5, 6}]))
    assert decide_colourable(inst([{1, 2}, {3, 4, 5, 6}, {5, 6}]))


def test_criterion_rejects_bad_widths():
    with pytest.raises(WidthViolation):
        decide_colourable(inst([{1}, {1, 2, 3, 4}, {1, 2}]))
    with pytest.raises(WidthViolation):
        decide_colourable(inst([{1, 2}, {1, 2, 3}, {1, 2}]))


# ---------------------------------------------------------------------------
# subtraction and damage


def test_subtract_single_vertex_removes_union():
    p = inst([{1, 2, 3, 4}])
    q = subtract(p, {1}, {2})
    assert q.lists == (frozenset({3, 4}),)


def test_damage_matches_hand_value():
    p = inst([{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}])
    assert damage(p, {1, 2}, {7, 8}) == 4
    assert damage_closed_form(profile(p), {1, 2}, {7, 8}) == 4


def test_damage_shared_colour_costs_one():
    # c = c' in the common intersection: damage 1, not 2
    p = inst([{1, 2, 3, 4}] * 3)
    assert damage(p, {1}, {1}) == 1
    assert damage_closed_form(profile(p), {1}, {1}) == 1


def test_damage_closed_form_needs_odd_path():
    p = inst([{1, 2, 3, 4}] * 4)
    with pytest.raises(EvenPath):
        damage_closed_form(profile(p), {1}, {1})


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([3, 5, 7]), st.sampled_from([1, 2]))
def test_damage_closed_form_agrees_with_recompute(seed, n, m):
    rng = random.Random(seed)
    p = random_path_instance(rng, n, m)
    prof = profile(p)
    colours = sorted(set().union(*p.lists))
    S = frozenset(rng.sample(colours, min(2 * m, len(colours))))
    T = frozenset(rng.sample(colours, min(2 * m, len(colours))))
    assert damage(p, S, T) == damage_closed_form(prof, S, T)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([1, 3, 5, 7]), st.sampled_from([1, 2]))
def test_profile_sum_lower_bound(seed, n, m):
    rng = random.Random(seed)
    p = random_path_instance(rng, n, m)
    prof = profile(p)
    assert prof.s_l >= profile_lower_bound(prof, m)


def test_lower_bound_frozen_values():
    assert profile_lower_bound(profile(inst([{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}])), 1) == 8
    assert profile_lower_bound(profile(inst([{1, 2, 3, 4}] * 3)), 1) == 8


# ---------------------------------------------------------------------------
# colouring


def test_colour_path_identical_lists():
    phi = colour_path(inst([{1, 2, 3, 4}] * 3))
    assert [sorted(s) for s in phi.chosen] == [[1, 2], [3, 4], [1, 2]]


def test_colour_path_infeasible():
    with pytest.raises(Infeasible):
        colour_path(inst([{3, 4}, {3, 4, 5, 6}, {5, 6}]))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([1, 3, 5, 7]), st.sampled_from([1, 2]))
def test_colour_path_output_validates(seed, n, m):
    rng = random.Random(seed)
    p = random_path_instance(rng, n, m)
    phi = colour_path(p)  # full-width lists are always colourable
    la = ListAssignment(p.lists, 4 * m)
    assert validate(_path_graph(n), la, phi)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([3, 5]), st.sampled_from([1, 2]))
def test_criterion_matches_colourer_on_reduced_instances(seed, n, m):
    rng = random.Random(seed)
    p = random_path_instance(rng, n, m, reduce_endpoints=True)
    ok = decide_colourable(p)
    try:
        phi = colour_path(p)
    except Infeasible:
        assert not ok
    else:
        assert ok
        la = ListAssignment(p.lists, None)
        assert validate(_path_graph(n), la, phi)
