"""Benchmark catalogue tests: spot values, invariants, registry wiring."""

import hashlib

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import vulture_opt.benchmarks as benchmarks
from vulture_opt import (
    EvaluationError,
    evaluate,
    external_problem,
    problem,
    registry,
    run,
    variant_config,
)

# fid -> (default_dim, lower, upper, scalable)
_CATALOGUE = {
    "F1": (30, -100.0, 100.0, True),
    "F2": (30, -10.0, 10.0, True),
    "F3": (30, -100.0, 100.0, True),
    "F4": (30, -100.0, 100.0, True),
    "F5": (30, -30.0, 30.0, True),
    "F6": (30, -100.0, 100.0, True),
    "F7": (30, -1.28, 1.28, True),
    "F8": (30, -500.0, 500.0, True),
    "F9": (30, -5.12, 5.12, True),
    "F10": (30, -32.0, 32.0, True),
    "F11": (30, -600.0, 600.0, True),
    "F12": (30, -50.0, 50.0, True),
    "F13": (30, -50.0, 50.0, True),
    "F14": (2, -65.0, 65.0, False),
    "F15": (4, -5.0, 5.0, False),
    "F16": (2, -5.0, 5.0, False),
    "F17": (2, -5.0, 5.0, False),
    "F18": (2, -2.0, 2.0, False),
    "F19": (3, 1.0, 3.0, False),
    "F20": (6, 0.0, 1.0, False),
    "F21": (4, 0.0, 10.0, False),
    "F22": (4, 0.0, 10.0, False),
    "F23": (4, 0.0, 10.0, False),
}

# [frozen oracles] evaluate(fid, point) cross-checked against 40-digit
# high-precision implementations of the classical formulas
_SPOT_VALUES = [
    ("F1", [1.0, 2.0, 3.0], 14.0),
    ("F2", [1.0, -2.0, 3.0], 12.0),  # 6 + 6: abs-sum plus abs-product
    ("F3", [1.0, 2.0, 3.0], 46.0),  # 1^2 + 3^2 + 6^2 over prefix sums
    ("F4", [1.0, -7.0, 3.0], 7.0),
    ("F5", [1.0, 2.0, 3.0], 201.0),
    ("F6", [0.6, -0.6], 2.0),
    ("F6", [0.49, 0.0], 0.0),
    ("F8", [1.0], -0.8414709848078965),  # -sin(1)
    ("F9", [0.5, 0.5], 40.5),
    ("F10", [1.0, 1.0], 3.6253849384403627),
    ("F11", [100.0, -100.0], 6.0214207401607025),
    ("F12", [0.0, 0.0], 8.54120502694725),
    ("F12", [20.0, -20.0], 2000303.065516301),  # deep in the penalty region
    ("F13", [0.0, 0.0], 0.2),
    ("F13", [2.0, 2.0], 0.2),
    ("F14", [-32.0, -32.0], 0.998003838818649),
    ("F17", [3.141592653589793, 2.275], 0.39788735772973816),
    ("F18", [0.0, -1.0], 3.0),
]

# [frozen oracles] value of evaluate at the catalogued minimizer, plus the
# distance allowed between that value and the printed catalogue optimum
_OPTIMA_FIXED_DIM = {
    "F14": (0.9980038377944505, 1e-5),
    "F15": (0.00030748598865587275, 2e-5),
    "F16": (-1.0316284229280817, 1e-3),
    "F17": (0.39788735772973816, 1e-3),
    "F18": (3.0, 1e-9),
    "F19": (-3.862782147819745, 5e-3),
    "F20": (-3.322368011391339, 5e-3),
    "F21": (-10.153195850979039, 1e-2),
    "F22": (-10.402818836930305, 1e-2),
    "F23": (-10.536283726219605, 1e-2),
}

# guard rails around the hand-entered coefficient tables
_TABLE_CHECKSUMS = {
    "_FOXHOLES_A": "366a12d8f80e4ae1",
    "_KOWALIK_A": "0e1019a41c285a88",
    "_KOWALIK_B": "46cc7b74fe9a43e2",
    "_HARTMANN_C": "17faf2f34636dc94",
    "_HARTMANN3_A": "208f2d2676739844",
    "_HARTMANN3_P": "591cf65d6e53b128",
    "_HARTMANN6_A": "818dc1b9e942b9ad",
    "_HARTMANN6_P": "d812073aeb71fd12",
    "_SHEKEL_A": "d5e4e002fdaf06ab",
    "_SHEKEL_C": "72b01005a229e111",
}


# --- registry contract -----------------------------------------------------


def test_registry_lists_all_functions_in_order():
    specs = registry()
    assert [s.fid for s in specs] == [f"F{i}" for i in range(1, 24)]


def test_registry_returns_a_fresh_list():
    first = registry()
    first.clear()
    assert len(registry()) == 23


def test_registry_dimensions_and_bounds():
    for spec in registry():
        dim, lo, hi, scalable = _CATALOGUE[spec.fid]
        assert spec.default_dim == dim, spec.fid
        assert spec.lower == lo and spec.upper == hi, spec.fid
        assert spec.scalable == scalable, spec.fid
        space = spec.space()
        assert space.dim == dim
        assert np.all(space.lower == lo) and np.all(space.upper == hi)


def test_registry_catalogue_optima():
    known = {s.fid: s.known_optimum for s in registry()}
    assert known["F1"] == 0.0 and known["F9"] == 0.0 and known["F13"] == 0.0
    assert known["F8"] == pytest.approx(-418.9829 * 30, abs=1e-9)
    assert known["F14"] == 0.998
    assert known["F15"] == 3.0e-4
    assert known["F16"] == -1.0316
    assert known["F17"] == 0.398
    assert known["F18"] == 3.0
    assert known["F19"] == -3.86
    assert known["F20"] == -3.32
    assert known["F21"] == -10.1532
    assert known["F22"] == -10.4028
    assert known["F23"] == -10.5363


def test_registry_optimum_locations():
    locs = {s.fid: s.optimum_location for s in registry()}
    assert locs["F7"] is None  # noisy evaluator has no checkable point value
    np.testing.assert_array_equal(locs["F1"], np.zeros(30))
    np.testing.assert_array_equal(locs["F5"], np.ones(30))
    np.testing.assert_array_equal(locs["F12"], -np.ones(30))
    np.testing.assert_array_equal(locs["F21"], np.full(4, 4.0))


def test_scalable_space_respects_requested_dimension():
    space = registry()[0].space(12)
    assert space.dim == 12
    with pytest.raises(ValueError):
        registry()[13].space(5)  # fixed-dimension entry
    with pytest.raises(ValueError):
        registry()[0].space(0)


# --- spot values -----------------------------------------------------------


@pytest.mark.parametrize("fid,x,expected", _SPOT_VALUES)
def test_benchmark_spot_values(fid, x, expected):
    assert evaluate(fid, np.array(x)) == pytest.approx(expected, rel=1e-12, abs=1e-300)


def test_ackley_double_precision_floor_at_origin():
    assert evaluate("F10", np.zeros(5)) == 4.440892098500626e-16
    assert evaluate("F10", np.zeros(30)) == 4.440892098500626e-16


def test_simple_point_optima_self_consistency():
    # scalable functions with an exact catalogued minimizer
    for spec in registry():
        if spec.fid in ("F7", "F8") or not spec.scalable:
            continue
        value = evaluate(spec.fid, spec.optimum_location)
        assert abs(value - spec.known_optimum) <= 1e-6, spec.fid


def test_resonant_valley_optimum_within_coarse_tolerance():
    spec = registry()[7]
    assert spec.fid == "F8"
    value = evaluate("F8", spec.optimum_location)
    assert abs(value - spec.known_optimum) <= 1e-1
    assert value == pytest.approx(-12569.486618164876, rel=1e-12)


@pytest.mark.parametrize("fid", sorted(_OPTIMA_FIXED_DIM))
def test_fixed_dimension_optima(fid):
    frozen, toleranced = _OPTIMA_FIXED_DIM[fid]
    spec = next(s for s in registry() if s.fid == fid)
    value = evaluate(fid, spec.optimum_location)
    assert value == pytest.approx(frozen, rel=1e-12)
    assert abs(frozen - spec.known_optimum) <= toleranced


# --- evaluate validation ---------------------------------------------------


def test_evaluate_rejects_unknown_id():
    with pytest.raises(ValueError, match="unknown function id"):
        evaluate("F24", np.zeros(2))


def test_evaluate_is_case_insensitive():
    assert evaluate("f1", np.array([2.0])) == 4.0


def test_evaluate_rejects_bad_vectors():
    with pytest.raises(ValueError):
        evaluate("F1", np.zeros((2, 2)))
    with pytest.raises(ValueError):
        evaluate("F1", np.array([]))
    with pytest.raises(ValueError):
        evaluate("F14", np.zeros(3))  # fixed at dimension 2


def test_evaluate_accepts_any_dimension_for_scalable_entries():
    assert evaluate("F1", np.ones(7)) == 7.0


# --- function-specific behavior --------------------------------------------


def test_noisy_quartic_is_deterministic_per_point():
    x = np.linspace(-1.0, 1.0, 30)
    assert evaluate("F7", x) == evaluate("F7", x)


def test_noisy_quartic_reference_values():
    # [frozen] noise-only at the origin; base 10 plus noise at all-ones
    assert evaluate("F7", np.zeros(4)) == pytest.approx(0.6299085342998938, rel=1e-12)
    assert evaluate("F7", np.ones(4)) == pytest.approx(10.937513688348332, rel=1e-12)


def test_noisy_quartic_noise_stays_in_unit_interval():
    rng = np.random.default_rng(0)
    for _ in range(50):
        x = rng.uniform(-1.28, 1.28, 6)
        base = float(np.sum(np.arange(1, 7) * x ** 4))
        value = evaluate("F7", x)
        assert base <= value < base + 1.0


def test_noisy_quartic_noise_varies_across_points():
    values = {evaluate("F7", np.full(3, v)) - float(np.sum(np.arange(1, 4) * v ** 4))
              for v in np.linspace(-1.0, 1.0, 20)}
    assert len(values) == 20  # distinct noise at distinct points


def test_step_function_has_plateaus():
    assert evaluate("F6", np.array([0.1, -0.2, 0.3])) == 0.0
    assert evaluate("F6", np.array([1.1, 1.2])) == evaluate("F6", np.array([0.9, 1.4]))


@given(st.lists(st.floats(-5.0, 5.0), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_even_symmetry_of_separable_functions(values):
    x = np.array(values)
    for fid in ("F1", "F9", "F10"):
        assert evaluate(fid, x) == evaluate(fid, -x)


@given(st.lists(st.floats(-100.0, 100.0), min_size=1, max_size=8))
@settings(max_examples=200, deadline=None)
def test_max_abs_matches_numpy_oracle(values):
    x = np.array(values)
    assert evaluate("F4", x) == np.max(np.abs(x))


@given(st.lists(st.floats(-5.0, 5.0), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_abs_sum_prod_matches_loop_oracle(values):
    x = np.array(values)
    total, prod = 0.0, 1.0
    for v in values:
        total += abs(v)
        prod *= abs(v)
    assert evaluate("F2", x) == pytest.approx(total + prod, rel=1e-12, abs=1e-30)


@given(st.lists(st.floats(-10.0, 10.0), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_prefix_sum_square_matches_loop_oracle(values):
    x = np.array(values)
    expected, acc = 0.0, 0.0
    for v in values:
        acc += v
        expected += acc * acc
    assert evaluate("F3", x) == pytest.approx(expected, rel=1e-12, abs=1e-30)


@given(st.lists(st.floats(-5.0, 5.0), min_size=2, max_size=6))
@settings(max_examples=200, deadline=None)
def test_banana_valley_matches_loop_oracle(values):
    x = np.array(values)
    expected = sum(
        100.0 * (values[i + 1] - values[i] ** 2) ** 2 + (values[i] - 1.0) ** 2
        for i in range(len(values) - 1)
    )
    assert evaluate("F5", x) == pytest.approx(expected, rel=1e-12, abs=1e-30)


def test_nonnegative_functions_stay_nonnegative():
    rng = np.random.default_rng(3)
    for _ in range(30):
        x = rng.uniform(-5.0, 5.0, 10)
        for fid in ("F1", "F2", "F3", "F4", "F6", "F9", "F11"):
            assert evaluate(fid, x) >= 0.0, fid


def test_coefficient_tables_are_unchanged():
    for name, expected in _TABLE_CHECKSUMS.items():
        arr = np.ascontiguousarray(getattr(benchmarks, name), dtype=float)
        assert hashlib.sha256(arr.tobytes()).hexdigest()[:16] == expected, name


# --- problem / external_problem --------------------------------------------


def test_problem_wires_space_and_objective():
    prob = problem("F16")
    assert prob.name == "F16"
    assert prob.space.dim == 2
    assert prob.objective(np.array([0.0898, -0.7126])) == pytest.approx(-1.0316, abs=1e-3)


def test_problem_scalable_with_custom_dimension():
    prob = problem("F1", 10)
    assert prob.space.dim == 10


def test_problem_rejects_dim_override_on_fixed_entries():
    with pytest.raises(ValueError):
        problem("F14", 5)


def test_external_problem_broadcasts_scalar_bounds():
    prob = external_problem(3, (-2.0, 2.0), lambda x: float(np.sum(x)))
    np.testing.assert_array_equal(prob.space.lower, [-2.0, -2.0, -2.0])
    np.testing.assert_array_equal(prob.space.upper, [2.0, 2.0, 2.0])
    assert prob.name == "external"


def test_external_problem_accepts_per_axis_bounds():
    prob = external_problem(2, (np.array([-1.0, 0.0]), np.array([1.0, 5.0])),
                            lambda x: 0.0, name="custom")
    np.testing.assert_array_equal(prob.space.upper, [1.0, 5.0])
    assert prob.name == "custom"


def test_external_problem_validates_inputs():
    with pytest.raises(ValueError):
        external_problem(0, (-1.0, 1.0), lambda x: 0.0)
    prob = external_problem(3, (-1.0, 1.0), lambda x: 0.0)
    with pytest.raises(ValueError):
        prob.objective(np.zeros(2))


def test_external_problem_surfaces_nan_as_evaluation_error():
    prob = external_problem(2, (-1.0, 1.0), lambda x: float("nan"))
    with pytest.raises(EvaluationError):
        prob.objective(np.zeros(2))


def test_external_problem_drives_a_full_run():
    prob = external_problem(3, (-4.0, 4.0), lambda x: float(np.sum(np.abs(x))))
    record = run(variant_config("avoa", pop_size=8, max_iters=30, seed=0),
                 prob.objective, prob.space)
    assert record.final_best.fitness < 1.0  # easily below the random-init level
    assert np.all(np.diff(record.best_fitness_per_iteration) <= 0.0)
