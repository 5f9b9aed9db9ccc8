"""Named polynomial families used as fixtures and test inputs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .polycore import Polynomial, evaluate
from .roots import find_roots

FAMILIES = (
    "cyclotomic",
    "chebyshev_T",
    "hermite",
    "lehmer",
    "smyth",
    "alexander",
    "littlewood_random",
    "newman_random",
    "borwein_random",
)

LEHMER = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)
SMYTH = (-1, -1, 0, 1)

# Alexander polynomials of the prime knots with at most six crossings.
ALEXANDER = {
    "0_1": (1,),
    "3_1": (1, -1, 1),
    "4_1": (1, -3, 1),
    "5_1": (1, -1, 1, -1, 1),
    "5_2": (2, -3, 2),
    "6_1": (2, -5, 2),
    "6_2": (1, -3, 3, -3, 1),
    "6_3": (1, -3, 5, -3, 1),
}
# The (-2, 3, 7) pretzel knot; its Alexander polynomial is Lehmer's polynomial.
PRETZEL_237 = "P(-2,3,7)"


def _int_divide(num: list[int], den: list[int]) -> list[int]:
    """Exact division of ascending integer coefficient lists; den must be monic."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dq = len(num) - len(den)
    if dq < 0:
        raise ArithmeticError("divisor has higher degree")
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_divide(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def cyclotomic(n: int) -> Polynomial:
    return Polynomial(cyclotomic_coeffs(n))


@lru_cache(maxsize=None)
def chebyshev_T_coeffs(n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("degree must be >= 0")
    prev, cur = [1], [0, 1]
    if n == 0:
        return (1,)
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return tuple(cur)


def chebyshev_T(n: int, check: bool = True) -> Polynomial:
    """T_n with T_n((z + 1/z)/2) = (z^n + z^-n)/2."""
    p = Polynomial(chebyshev_T_coeffs(n))
    if check:
        z = np.exp(1j * np.linspace(0.1, 3.0, 8)) * 1.3
        lhs = evaluate(p, 0.5 * (z + 1 / z))
        rhs = 0.5 * (z**n + z ** (-n))
        if not np.allclose(lhs, rhs, rtol=1e-10, atol=1e-10):
            raise ArithmeticError("Chebyshev normalization self-check failed")
    return p


@lru_cache(maxsize=None)
def hermite_coeffs(n: int) -> tuple[int, ...]:
    """Physicists' Hermite polynomial via H_{k+1} = 2z H_k - 2k H_{k-1}."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    prev, cur = [1], [0, 2]
    if n == 0:
        return (1,)
    for k in range(1, n):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        prev, cur = cur, nxt
    return tuple(cur)


def hermite(n: int) -> Polynomial:
    return Polynomial(hermite_coeffs(n))


def circle_arguments(p: Polynomial) -> np.ndarray:
    """Sorted arguments in (0, 2 pi) of the zeros of p, cutting the circle at z = 1."""
    z = find_roots(p).values()
    return np.sort(np.mod(np.angle(z), 2 * np.pi))


def interlaces(p: Polynomial, q: Polynomial) -> bool:
    """True when the zero arguments of p and q strictly alternate on (0, 2 pi).

    A zero shared by both (z = -1 for some families) is dropped first.
    """
    a, b = circle_arguments(p), circle_arguments(q)
    shared = [x for x in a if np.any(np.abs(b - x) < 1e-9)]
    for x in shared:
        a = a[np.abs(a - x) >= 1e-9]
        b = b[np.abs(b - x) >= 1e-9]
    if abs(a.size - b.size) > 1:
        return False
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    labels = [t for _, t in merged]
    if any(u == v for u, v in zip(labels, labels[1:])):
        return False
    xs = [x for x, _ in merged]
    return all(v - u > 1e-12 for u, v in zip(xs, xs[1:]))


def lehmer() -> Polynomial:
    return Polynomial(LEHMER)


def smyth() -> Polynomial:
    return Polynomial(SMYTH)


def alexander_coeffs(knot: str) -> tuple[int, ...]:
    if knot == PRETZEL_237:
        return LEHMER
    try:
        return ALEXANDER[knot]
    except KeyError:
        raise ValueError(
            f"unknown knot {knot!r}; choose from {sorted(ALEXANDER) + [PRETZEL_237]}"
        ) from None


def alexander(knot: str) -> Polynomial:
    return Polynomial(alexander_coeffs(knot))


def _random_height_one(n: int, seed: int, values: tuple[int, ...], lead: tuple[int, ...]) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be >= 0")
    rng = np.random.default_rng(seed)
    c = rng.choice(values, size=n + 1)
    c[n] = rng.choice(lead)
    return Polynomial(c.astype(float))


def littlewood_random(n: int, seed: int = 0) -> Polynomial:
    return _random_height_one(n, seed, (-1, 1), (-1, 1))


def newman_random(n: int, seed: int = 0) -> Polynomial:
    return _random_height_one(n, seed, (0, 1), (1,))


def borwein_random(n: int, seed: int = 0) -> Polynomial:
    return _random_height_one(n, seed, (-1, 0, 1), (-1, 1))


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int = 0
    knot: str = ""
    seed: int = 0


def generate(spec: FamilySpec) -> Polynomial:
    name = spec.name
    if name == "cyclotomic":
        return cyclotomic(spec.n)
    if name == "chebyshev_T":
        return chebyshev_T(spec.n)
    if name == "hermite":
        return hermite(spec.n)
    if name == "lehmer":
        return lehmer()
    if name == "smyth":
        return smyth()
    if name == "alexander":
        return alexander(spec.knot)
    if name == "littlewood_random":
        return littlewood_random(spec.n, spec.seed)
    if name == "newman_random":
        return newman_random(spec.n, spec.seed)
    if name == "borwein_random":
        return borwein_random(spec.n, spec.seed)
    raise ValueError(f"unknown family {name!r}; choose from {FAMILIES}")
