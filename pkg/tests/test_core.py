"""Unit tests for the shared domain types (box, candidates, randomness)."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vulture_opt import (
    EvaluationError,
    Population,
    RandomSource,
    SearchSpace,
    Vulture,
    clamp,
    uniform,
    update_leaders,
)


# --- SearchSpace -----------------------------------------------------------


def test_space_holds_bounds_and_derived_fields():
    space = SearchSpace(np.array([-1.0, 0.0]), np.array([1.0, 4.0]))
    assert space.dim == 2
    np.testing.assert_array_equal(space.lower, [-1.0, 0.0])
    np.testing.assert_array_equal(space.upper, [1.0, 4.0])
    np.testing.assert_array_equal(space.midpoint, [0.0, 2.0])


def test_space_cube_factory():
    space = SearchSpace.cube(30, -100.0, 100.0)
    assert space.dim == 30
    assert np.all(space.lower == -100.0)
    assert np.all(space.upper == 100.0)


def test_space_rejects_bad_bounds():
    with pytest.raises(ValueError):
        SearchSpace(np.array([0.0, 0.0]), np.array([1.0]))  # length mismatch
    with pytest.raises(ValueError):
        SearchSpace(np.array([[0.0]]), np.array([[1.0]]))  # not 1-d
    with pytest.raises(ValueError):
        SearchSpace(np.array([0.0]), np.array([0.0]))  # degenerate axis
    with pytest.raises(ValueError):
        SearchSpace(np.array([2.0]), np.array([1.0]))  # inverted axis
    with pytest.raises(ValueError):
        SearchSpace.cube(0, 0.0, 1.0)  # no axes


def test_space_accepts_scalar_like_bounds():
    space = SearchSpace(np.float64(-1.0), np.float64(1.0))
    assert space.dim == 1


# --- Vulture / Population --------------------------------------------------


def test_vulture_owns_a_copy_of_its_position():
    raw = np.array([1.0, 2.0])
    v = Vulture(raw, 3)
    raw[0] = 99.0
    assert v.position[0] == 1.0
    assert isinstance(v.fitness, float)
    assert v.fitness == 3.0


def test_population_freezes_members_as_tuple():
    a, b = Vulture(np.zeros(1), 0.0), Vulture(np.ones(1), 1.0)
    pop = Population([a, b])
    assert isinstance(pop.members, tuple)
    assert pop.members == (a, b)
    assert pop.best1 is None and pop.best2 is None


def test_evaluation_error_copies_position():
    raw = np.array([1.0, float("nan")])
    err = EvaluationError(raw)
    raw[0] = -5.0
    assert err.position[0] == 1.0
    assert isinstance(err, RuntimeError)
    assert "NaN" in str(err)


# --- RandomSource ----------------------------------------------------------


def test_random_source_is_deterministic_per_seed():
    a = RandomSource(42)
    b = RandomSource(42)
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]
    np.testing.assert_array_equal(a.normals(4), b.normals(4))


def test_random_source_streams_differ_across_seeds():
    assert RandomSource(0).random() != RandomSource(1).random()


def test_random_source_matches_reference_generator():
    # same bit generator, same seed -> identical draws
    ours = RandomSource(7)
    ref = np.random.Generator(np.random.PCG64(7))
    assert ours.random() == ref.random()
    np.testing.assert_array_equal(ours.normals(3), ref.standard_normal(3))
    assert ours.random() == ref.random()  # stream stays in lockstep after normals


def test_random_source_draw_types():
    rng = RandomSource(0)
    x = rng.random()
    assert isinstance(x, float) and 0.0 <= x < 1.0
    z = rng.normals(6)
    assert z.shape == (6,) and z.dtype == np.float64


# --- uniform ---------------------------------------------------------------


def test_uniform_applies_affine_map_to_one_draw():
    probe, actual = RandomSource(123), RandomSource(123)
    draw = probe.random()
    assert uniform(actual, -2.0, 2.0) == -2.0 + 4.0 * draw
    # exactly one draw consumed: streams still aligned
    assert actual.random() == probe.random()


def test_uniform_rejects_inverted_interval():
    with pytest.raises(ValueError):
        uniform(RandomSource(0), 1.0, -1.0)


def test_uniform_degenerate_interval_returns_endpoint():
    assert uniform(RandomSource(0), 3.5, 3.5) == 3.5


@given(
    seed=st.integers(0, 2**32 - 1),
    lo=st.floats(-1e6, 1e6),
    span=st.floats(1e-9, 1e6),
)
@settings(max_examples=200, deadline=None)
def test_uniform_stays_inside_interval(seed, lo, span):
    hi = lo + span
    value = uniform(RandomSource(seed), lo, hi)
    assert lo <= value <= hi


# --- clamp -----------------------------------------------------------------


def test_clamp_projects_componentwise():
    space = SearchSpace(np.array([-1.0, -1.0, -1.0]), np.array([1.0, 1.0, 1.0]))
    out = clamp(np.array([-5.0, 0.25, 9.0]), space)
    np.testing.assert_array_equal(out, [-1.0, 0.25, 1.0])


def test_clamp_sends_nan_to_axis_midpoint():
    space = SearchSpace(np.array([0.0, 10.0]), np.array([2.0, 20.0]))
    out = clamp(np.array([np.nan, np.nan]), space)
    np.testing.assert_array_equal(out, [1.0, 15.0])


def test_clamp_handles_infinities():
    space = SearchSpace.cube(2, -1.0, 1.0)
    out = clamp(np.array([np.inf, -np.inf]), space)
    np.testing.assert_array_equal(out, [1.0, -1.0])


def test_clamp_rejects_wrong_shape():
    space = SearchSpace.cube(3, 0.0, 1.0)
    with pytest.raises(ValueError):
        clamp(np.zeros(2), space)


@given(
    values=st.lists(
        st.floats(allow_nan=True, allow_infinity=True, width=64),
        min_size=1,
        max_size=8,
    )
)
@settings(max_examples=200, deadline=None)
def test_clamp_output_always_inside_box_and_finite(values):
    space = SearchSpace.cube(len(values), -3.0, 7.0)
    out = clamp(np.array(values, dtype=float), space)
    assert np.all(out >= space.lower) and np.all(out <= space.upper)
    assert np.all(np.isfinite(out))


def test_clamp_leaves_in_bounds_points_untouched():
    space = SearchSpace.cube(4, -2.0, 2.0)
    x = np.array([-2.0, -0.5, 0.5, 2.0])
    np.testing.assert_array_equal(clamp(x, space), x)


# --- update_leaders --------------------------------------------------------


def _member(fitness, tag=0.0):
    return Vulture(np.array([tag]), fitness)


def test_update_leaders_picks_two_lowest():
    members = [_member(5.0), _member(1.0), _member(3.0), _member(2.0)]
    pop = update_leaders(Population(members))
    assert pop.best1.fitness == 1.0
    assert pop.best2.fitness == 2.0
    assert pop.members == tuple(members)  # membership untouched


def test_update_leaders_breaks_ties_by_member_order():
    first = _member(1.0, tag=10.0)
    second = _member(1.0, tag=20.0)
    pop = update_leaders(Population([_member(2.0), first, second]))
    assert pop.best1 is first
    assert pop.best2 is second


def test_update_leaders_requires_two_members():
    with pytest.raises(ValueError):
        update_leaders(Population([_member(0.0)]))


@given(st.lists(st.floats(-1e9, 1e9), min_size=2, max_size=20))
@settings(max_examples=200, deadline=None)
def test_update_leaders_matches_sorted_oracle(fits):
    pop = update_leaders(Population([_member(f) for f in fits]))
    expected = sorted(fits)
    assert pop.best1.fitness == expected[0]
    assert pop.best2.fitness == expected[1]
