import numpy as np
import pytest
from hypothesis import given, strategies as st

from polysym.bethe import (
    build_instance,
    delta_grid,
    functional_residual,
    phase_check,
    phase_sweep,
    root_of_unity,
    salem_scan,
    solutions,
)
from polysym.criteria import vieira_count
from polysym.polycore import Polynomial
from polysym.symmetry import classify

instances = st.builds(
    lambda L, a, d: (L, a, d), st.integers(3, 12), st.integers(1, 12), st.floats(-4, 4)
).filter(lambda t: t[1] <= t[0] and root_of_unity(t[1], t[0]) != -1)


def test_build_examples():
    inst = build_instance(4, 4, 3)
    assert inst.poly == Polynomial([2, -6, 0, -6, 2])
    assert inst.crit1 == 1 and inst.crit2 == 2
    d = build_instance(4, 2, 0.7)
    assert d.degenerate and d.poly.degree == 2
    assert np.allclose(d.poly.coeffs, [-1.4, 0, 1.4])
    z = np.abs(build_instance(6, 6, 0).poly.coeffs)
    assert np.allclose(z, [2, 0, 0, 0, 0, 0, 2])


def test_build_errors():
    for args in ((2, 1, 0), (4, 0, 0), (4, 5, 0), (4, 1, float("nan"))):
        with pytest.raises(ValueError):
            build_instance(*args)
    with pytest.raises(ValueError):
        phase_check(build_instance(4, 2, 0.5))


def test_phase_examples():
    v = phase_check(build_instance(4, 4, 0.5))
    assert v.predicted == v.observed == "AllOnCircle" and v.agrees
    v = phase_check(build_instance(4, 4, 3))
    assert v.predicted == "AllButTwoOnCircle" and v.on_circle == 2 and v.agrees
    v = phase_check(build_instance(4, 4, 1))
    assert v.predicted == "AllOnCircle" and v.agrees
    v = phase_check(build_instance(4, 4, 1.5))
    assert v.predicted == "Intermediate" and v.agrees is None


def test_solutions_examples():
    inst = build_instance(4, 4, 3)
    sol = solutions(inst)
    assert len(sol.pairs) == 4
    assert sol.residual1 < 1e-8 and sol.residual2 < 1e-8
    assert all(x * y == inst.omega or abs(x * y - inst.omega) < 1e-15 for x, y in sol.pairs)
    sol = solutions(build_instance(6, 6, 0))
    for x, y in sol.pairs:
        assert abs(x**12 - 1) < 1e-10 and abs(y - 1 / x) < 1e-12


def test_salem_scan_examples():
    rows = {(L, d): r for L, d, r in salem_scan([4], range(-3, 4))}
    assert rows[(4, 3)].classification == "salem"
    assert rows[(4, 0)].classification == "measure_one"
    with pytest.raises(ValueError):
        salem_scan([4], [0.5])


def test_vieira_fires_below_crit1():
    inst = build_instance(7, 2, 0.3)
    assert abs(inst.delta) <= inst.crit1
    assert vieira_count(inst.poly).label == "ExactOnCircle(7)"


def test_delta_grid():
    g = delta_grid(-3, 3, 0.1)
    assert len(g) == 61 and g[0] == -3 and g[-1] == 3 and 0.5 in g


@given(instances)
def test_si_and_functional_relation(t):
    inst = build_instance(*t)
    assert classify(inst.poly).is_si
    rng = np.random.default_rng(0)
    z = np.exp(rng.uniform(-0.5, 0.5, 64) + 1j * rng.uniform(0, 2 * np.pi, 64))
    assert functional_residual(inst, z) < 1e-10 * max(1, np.abs(z).max() ** inst.L)


@given(instances)
def test_solution_residuals(t):
    inst = build_instance(*t)
    sol = solutions(inst)
    assert sol.residual1 < 1e-8 and sol.residual2 < 1e-8
    assert sol.product_residual < 1e-8


def test_small_sweep():
    rows = phase_sweep([5], delta_grid(-2, 2, 0.5))
    assert len(rows) == 5 * 9
    assert all(r.agrees is not False for r in rows)
