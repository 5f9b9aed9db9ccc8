import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull, Delaunay

from polysym.catalog import lehmer
from polysym.polycore import Polynomial, abs_evaluate, derivative, evaluate
from polysym.roots import find_roots, guard_band, locate
from polysym.sampling import random_general, random_si

import oracles

seeds = st.integers(0, 2**32 - 1)


def test_examples():
    rs = find_roots(Polynomial([1, 0, 1]))
    assert oracles.match(rs.values(), [1j, -1j]) < 1e-14
    z = find_roots(Polynomial([-1, -1, 0, 1])).values()
    real = z[np.abs(z.imag) < 1e-12].real
    assert real.size == 1 and abs(real[0] - 1.32471795724) < 1e-9
    assert np.sum(np.abs(z) < 1) == 2
    z = find_roots(lehmer()).values()
    assert abs(np.max(z.real) - 1.17628081826) < 1e-9


def test_locate_examples():
    assert locate(find_roots(Polynomial([1, 1, 1]))).on_circle == 2
    loc = locate(find_roots(lehmer()))
    assert (loc.on_circle, loc.inside, loc.outside) == (8, 1, 1)
    assert locate(find_roots(Polynomial([-1, 0, 4]))).inside == 2
    assert guard_band() == pytest.approx(1e-7)


def test_multiplicity_and_zero_roots():
    rs = find_roots(Polynomial.from_roots([0.5, 0.5, 0.5, 2j, 0, 0]))
    mult = sorted((round(abs(r.value), 6), r.multiplicity) for r in rs.roots)
    assert mult == [(0.0, 2), (0.5, 3), (2.0, 1)]
    with pytest.raises(ValueError):
        find_roots(Polynomial([3]))


def test_deterministic():
    p = random_general(np.random.default_rng(4), 12)
    assert np.array_equal(find_roots(p).values(), find_roots(p).values())


@given(seeds, st.integers(1, 20))
def test_reconstruction_and_backward_error(seed, n):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-10, 10, n + 1) + 1j * rng.uniform(-10, 10, n + 1)
    p = Polynomial(c)
    rs = find_roots(p)
    assert rs.degree == n
    z = rs.values()
    back = Polynomial.from_roots(z, p.leading).coeffs
    assert np.max(np.abs(back - p.coeffs)) < 1e-7 * p.height
    for r in rs.roots:
        assert abs(evaluate(p, r.value)) <= 1e3 * 2.3e-16 * n * abs_evaluate(p, abs(r.value)) * 10


def _hull_distance(pts: np.ndarray, w: complex) -> float:
    if len(pts) < 3:
        a, b = pts[0], pts[-1]
        return _segment_distance(a, b, w)
    hull = ConvexHull(np.column_stack([pts.real, pts.imag]))
    if Delaunay(hull.points[hull.vertices]).find_simplex([w.real, w.imag]) >= 0:
        return 0.0
    v = pts[hull.vertices]
    return min(_segment_distance(v[i], v[i - 1], w) for i in range(len(v)))


def _segment_distance(a: complex, b: complex, w: complex) -> float:
    d = b - a
    t = 0.0 if d == 0 else min(1.0, max(0.0, ((w - a) * np.conj(d)).real / abs(d) ** 2))
    return abs(a + t * d - w)


@given(seeds, st.integers(2, 10))
def test_gauss_lucas(seed, n):
    p = random_general(np.random.default_rng(seed), n)
    z = find_roots(p).values()
    for w in find_roots(derivative(p)).values():
        assert _hull_distance(z, w) < 1e-8


@given(seeds, st.integers(2, 10))
def test_cohn_counts(seed, n):
    p = random_si(np.random.default_rng(seed), n)
    dp = np.abs(np.abs(find_roots(p).values()) - 1)
    zd = np.abs(find_roots(derivative(p)).values())
    dd = np.abs(zd - 1)
    if np.any((dp > 1e-8) & (dp < 1e-6)) or np.any(dd < 1e-6):
        return
    zp = np.abs(find_roots(p).values())
    assert np.sum((zp > 1) & (dp > 1e-8)) == np.sum(zd > 1)
    k = int(np.sum(dp <= 1e-8))
    l = int(np.sum(zd < 1))
    assert n == 2 * (l + 1) - k
