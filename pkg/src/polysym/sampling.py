"""Seeded random polynomials for property checks and sweeps.

Every generator takes a ``numpy.random.Generator`` so sweeps are
reproducible from a single seed.
"""

from __future__ import annotations

import numpy as np

from .polycore import Polynomial


def _cgauss(rng: np.random.Generator, size) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def unit(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def random_general(rng, n: int) -> Polynomial:
    return Polynomial(_cgauss(rng, n + 1))


def random_real(rng, n: int) -> Polynomial:
    return Polynomial(rng.standard_normal(n + 1))


def random_sc(rng, n: int) -> Polynomial:
    """A real polynomial times a unit constant."""
    return Polynomial(unit(rng) * rng.standard_normal(n + 1))


def random_si(rng, n: int, omega: complex | None = None) -> Polynomial:
    """p_{n-k} = omega conj(p_k); for even n the middle term lies on sqrt(omega) R."""
    w = unit(rng) if omega is None else omega
    c = np.zeros(n + 1, dtype=complex)
    half = (n + 1) // 2
    low = _cgauss(rng, half)
    c[:half] = low
    c[n - half + 1 :] = w * np.conj(low[::-1])
    if n % 2 == 0:
        c[n // 2] = np.sqrt(w) * rng.standard_normal()
    return Polynomial(c)


def random_psr(rng, n: int, height: float = 1.0) -> Polynomial:
    half = rng.standard_normal(n // 2 + 1) * height
    c = np.concatenate([half, half[: (n + 1) // 2][::-1]])
    return Polynomial(c)


def random_on_circle(rng, n: int, repeat: bool = False) -> Polynomial:
    """Unit-modulus roots (optionally with a repeated one) times a unit constant."""
    roots = np.exp(2j * np.pi * rng.random(n))
    if repeat and n >= 2:
        roots[1] = roots[0]
    return Polynomial.from_roots(roots, unit(rng))


def random_roots_away(rng, n: int, gap: float = 1e-3) -> Polynomial:
    """Roots with | |z| - 1 | >= gap, moduli in [0.2, 1 - gap] or [1 + gap, 3]."""
    inside = rng.random(n) < 0.5
    mod = np.where(inside, rng.uniform(0.2, 1 - gap, n), rng.uniform(1 + gap, 3.0, n))
    roots = mod * np.exp(2j * np.pi * rng.random(n))
    return Polynomial.from_roots(roots)


def random_psr_circle_product(rng, m: int) -> Polynomial:
    """Product of m distinct circle quadratics z^2 - 2cos(t) z + 1."""
    t = np.sort(rng.uniform(0.05, np.pi - 0.05, m))
    c = np.array([1.0])
    for x in t:
        c = np.convolve(c, [1.0, -2 * np.cos(x), 1.0])
    return Polynomial(c)


def random_chen(rng, n: int) -> Polynomial:
    """z^m q + w q^dagger with q having every zero inside the circle."""
    m = int(rng.integers(0, n))
    d = n - m
    roots = rng.uniform(0.0, 0.95, d) * np.exp(2j * np.pi * rng.random(d))
    q = Polynomial.from_roots(roots, _cgauss(rng, 1)[0])
    shifted = np.concatenate([np.zeros(m, complex), q.coeffs])
    dag = np.zeros(n + 1, complex)
    dag[: d + 1] = unit(rng) * np.conj(q.coeffs[::-1])
    return Polynomial(shifted + dag)


def random_dominant(rng, n: int) -> Polynomial:
    c = _cgauss(rng, n + 1)
    k = int(rng.integers(0, n + 1))
    rest = np.abs(c).sum() - abs(c[k])
    c[k] *= rest / abs(c[k]) * rng.uniform(0.8, 2.0)
    return Polynomial(c)


def random_lakatos_like(rng, n: int) -> Polynomial:
    """PSR with p_n = 1 and the rest near 1, often close to the Lakatos boundary."""
    half = 1.0 + rng.uniform(-1, 1, n // 2 + 1) * rng.uniform(0, 2.0 / n)
    half[0] = 1.0
    c = np.concatenate([half, half[: (n + 1) // 2][::-1]])
    return Polynomial(c)


def random_height_one(rng, n: int) -> Polynomial:
    c = rng.integers(-1, 2, n + 1).astype(float)
    if rng.random() < 0.5:
        c = np.where(np.arange(n + 1) > n / 2, c[::-1], c)
    c[-1] = rng.choice([-1.0, 1.0])
    if c[0] == 0:
        c[0] = c[-1]
    return Polynomial(c)


def random_monotone(rng, n: int) -> Polynomial:
    c = np.cumsum(rng.uniform(0, 1, n + 1)) + 0.1
    return Polynomial(c if rng.random() < 0.5 else c[::-1])


def random_si_dominant(rng, n: int) -> Polynomial:
    """SI with one boosted symmetric coefficient pair, the Vieira regime."""
    p = random_si(rng, n)
    c = p.coeffs.copy()
    w = c[-1] / np.conj(c[0])
    k = int(rng.integers(0, n // 2 + 1))
    f = rng.uniform(1.0, 3.0 * n)
    c[k] *= f
    c[n - k] = w * np.conj(c[k]) if n - k != k else c[k]
    return Polynomial(c)


SWEEP_FAMILIES = (
    random_general,
    random_real,
    random_si,
    random_psr,
    random_on_circle,
    random_chen,
    random_dominant,
    random_lakatos_like,
    random_height_one,
    random_monotone,
    random_si_dominant,
    random_sc,
)


def sweep_polynomial(rng: np.random.Generator, max_degree: int = 10) -> Polynomial:
    """One draw from the mixed sweep distribution."""
    fam = SWEEP_FAMILIES[int(rng.integers(len(SWEEP_FAMILIES)))]
    n = int(rng.integers(1, max_degree + 1))
    if fam is random_on_circle:
        return fam(rng, n, repeat=bool(rng.random() < 0.2))
    return fam(rng, n)
