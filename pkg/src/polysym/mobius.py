"""Cayley transformations between the real line and the unit circle.

M(z) = (z - i)/(z + i) sends the real line onto the circle and W(z) =
-i (z + 1)/(z - 1) is its inverse.  The induced polynomial transforms are

    Q(z) = (z + i)^n p(M(z)),    T(z) = (z - 1)^n p(W(z)),

which turn self-inversive polynomials into self-conjugate ones and back.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.optimize import linear_sum_assignment

from .polycore import NotARootError, Polynomial, deflate
from .roots import find_roots

INF = complex(float("inf"), 0.0)
POLE_RTOL = 1e-10


def _is_inf(z: complex) -> bool:
    return cmath.isinf(z)


def mobius_point(z: complex, direction: Literal["M", "W"]) -> complex:
    """Apply M or W on the Riemann sphere; infinity is represented by ``INF``."""
    z = complex(z)
    if direction == "M":
        if _is_inf(z):
            return 1 + 0j
        if z == -1j:
            return INF
        return (z - 1j) / (z + 1j)
    if direction == "W":
        if _is_inf(z):
            return -1j
        if z == 1:
            return INF
        return -1j * (z + 1) / (z - 1)
    raise ValueError(f"direction must be 'M' or 'W', got {direction!r}")


@dataclass(frozen=True)
class MobiusResult:
    poly: Polynomial
    degree_drop: int
    direction: Literal["Q", "T"]


def _pole_multiplicity(p: Polynomial, pole: complex) -> int:
    m = 0
    q = p
    while q.degree and q.degree >= 1:
        try:
            q, _ = deflate(q, pole, POLE_RTOL)
        except NotARootError:
            break
        m += 1
    return m


def _expand(p: Polynomial, a: np.ndarray, b: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """sum_k w_k p_k a(z)^k b(z)^(n-k) for linear factors a, b."""
    n = p.degree
    apow = [np.array([1.0 + 0j])]
    bpow = [np.array([1.0 + 0j])]
    for _ in range(n):
        apow.append(np.convolve(apow[-1], a))
        bpow.append(np.convolve(bpow[-1], b))
    out = np.zeros(n + 1, dtype=complex)
    for k, pk in enumerate(p.coeffs):
        if pk != 0:
            out += weights[k] * pk * np.convolve(apow[k], bpow[n - k])
    return out


def _finish(p: Polynomial, raw: np.ndarray, pole: complex, direction) -> MobiusResult:
    drop = _pole_multiplicity(p, pole)
    keep = p.degree - drop
    return MobiusResult(Polynomial(raw[: keep + 1]), drop, direction)


def transform_Q(p: Polynomial) -> MobiusResult:
    """Q(z) = sum_k p_k (z - i)^k (z + i)^(n-k); degree drops by the multiplicity of 1."""
    if p.is_zero:
        raise ValueError("transform of the zero polynomial")
    n = p.degree
    raw = _expand(p, np.array([-1j, 1.0]), np.array([1j, 1.0]), np.ones(n + 1))
    return _finish(p, raw, 1.0, "Q")


def transform_T(p: Polynomial) -> MobiusResult:
    """T(z) = sum_k p_k (-i)^k (z + 1)^k (z - 1)^(n-k); degree drops by the multiplicity of -i."""
    if p.is_zero:
        raise ValueError("transform of the zero polynomial")
    n = p.degree
    weights = np.array([(-1j) ** (k % 4) for k in range(n + 1)])
    raw = _expand(p, np.array([1.0, 1.0]), np.array([-1.0, 1.0]), weights)
    return _finish(p, raw, -1j, "T")


def pairing_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Largest distance under the optimal one-to-one pairing of two point sets.

    Distances are relative to max(1, |b|) so large points are compared fairly.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.size != b.size:
        raise ValueError(f"point sets differ in size: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :]) / np.maximum(1.0, np.abs(b))[None, :]
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def root_mapping_check(p: Polynomial, result: MobiusResult) -> float:
    """Max pairing error between the transformed roots and the images of p's roots."""
    if result.degree_drop:
        raise ValueError("root mapping is only defined when no root sits at the pole point")
    to = "W" if result.direction == "Q" else "M"
    images = np.array([mobius_point(z, to) for z in find_roots(p).values()])
    got = find_roots(result.poly).values() if result.poly.degree else np.array([], complex)
    return pairing_distance(got, images)
