"""Two-magnon Bethe equations of the XXZ chain through SI polynomials.

With N = 2 the Bethe equations on a chain of length L reduce, after
fixing x1 x2 = w_a = exp(2 pi i a / L), to the roots of

    p_a(z) = (1 + w_a) z^L - 2 Delta w_a z^(L-1) - 2 Delta z + (1 + w_a).

All roots lie on the unit circle for |Delta| <= |1 + w_a| / 2, and all but
two do for |Delta| >= L / (L - 2) * |1 + w_a| / 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .mahler import MahlerReport, mahler_measure
from .polycore import Polynomial, evaluate
from .roots import LOCATION_TOL, find_roots, locate

Phase = Literal["AllOnCircle", "AllButTwoOnCircle", "Intermediate"]

# relative slack in the |Delta| comparisons, so grid values such as 0.5 at
# a critical value 0.5000000000000001 fall on the theorem's side
CRIT_RTOL = 1e-12


def root_of_unity(a: int, L: int) -> complex:
    """exp(2 pi i a / L), exact at the quarter turns."""
    k = a % L
    if (4 * k) % L == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[(4 * k) // L]
    return cmath.exp(2j * math.pi * k / L)


@dataclass(frozen=True)
class BetheInstance:
    L: int
    a: int
    delta: float
    omega: complex
    poly: Polynomial
    crit1: float
    crit2: float
    degenerate: bool

    def to_dict(self) -> dict:
        return {
            "L": self.L,
            "a": self.a,
            "delta": self.delta,
            "omega": [self.omega.real, self.omega.imag],
            "poly": self.poly.to_dict(),
            "crit1": self.crit1,
            "crit2": self.crit2,
            "degenerate": self.degenerate,
        }


def bethe_coeffs(L: int, omega: complex, delta: float) -> np.ndarray:
    c = np.zeros(L + 1, dtype=complex)
    c[0] = c[L] = 1 + omega
    c[1] += -2 * delta
    c[L - 1] += -2 * delta * omega
    return c


def build_instance(L: int, a: int, delta: float) -> BetheInstance:
    """The polynomial p_a and its critical anisotropies.

    When 1 + w_a = 0 (a = L/2) the end coefficients vanish; the polynomial is
    stored with the factor z removed and the instance is marked degenerate.
    """
    if L < 3:
        raise ValueError("chain length L must be >= 3")
    if not 1 <= a <= L:
        raise ValueError(f"a must lie in 1..{L}")
    delta = float(delta)
    if not math.isfinite(delta):
        raise ValueError("delta must be finite")
    omega = root_of_unity(a, L)
    c = bethe_coeffs(L, omega, delta)
    s = abs(1 + omega)
    degenerate = s == 0
    if degenerate:
        c = c[1:]
    return BetheInstance(
        L=L,
        a=a,
        delta=delta,
        omega=omega,
        poly=Polynomial(c),
        crit1=0.5 * s,
        crit2=0.5 * L / (L - 2) * s,
        degenerate=degenerate,
    )


def functional_residual(inst: BetheInstance, z: np.ndarray) -> float:
    """max |p_a(z) - z^L p_a(w_a / z)| / height over the sample points."""
    p = inst.poly
    z = np.asarray(z, dtype=complex)
    lhs = evaluate(p, z)
    rhs = z**inst.L * evaluate(p, inst.omega / z)
    return float(np.max(np.abs(lhs - rhs)) / p.height)


def predicted_phase(inst: BetheInstance) -> Phase:
    d = abs(inst.delta)
    if d <= inst.crit1 * (1 + CRIT_RTOL):
        return "AllOnCircle"
    if d >= inst.crit2 * (1 - CRIT_RTOL):
        return "AllButTwoOnCircle"
    return "Intermediate"


@dataclass(frozen=True)
class PhaseVerdict:
    L: int
    a: int
    delta: float
    predicted: Phase
    on_circle: int
    off_circle: int
    agrees: bool | None

    @property
    def observed(self) -> str:
        if self.off_circle == 0:
            return "AllOnCircle"
        if self.off_circle == 2:
            return "AllButTwoOnCircle"
        return f"{self.on_circle}OnCircle"

    def to_dict(self) -> dict:
        return {
            "L": self.L,
            "a": self.a,
            "delta": self.delta,
            "predicted": self.predicted,
            "observed": self.observed,
            "on_circle": self.on_circle,
            "off_circle": self.off_circle,
            "agrees": self.agrees,
        }


def phase_check(inst: BetheInstance, tol: float = LOCATION_TOL) -> PhaseVerdict:
    """Compare the critical-value prediction with the root oracle.

    Inside the open strip between the critical values only the observation
    is reported and ``agrees`` is None.
    """
    if inst.degenerate:
        raise ValueError("phase_check needs a non-degenerate instance (1 + w_a != 0)")
    loc = locate(find_roots(inst.poly), tol)
    off = loc.inside + loc.outside
    pred = predicted_phase(inst)
    if pred == "AllOnCircle":
        agrees = off == 0
    elif pred == "AllButTwoOnCircle":
        agrees = off == 2
    else:
        agrees = None
    return PhaseVerdict(inst.L, inst.a, inst.delta, pred, loc.on_circle, off, agrees)


def delta_grid(lo: float, hi: float, step: float) -> list[float]:
    """lo, lo + step, ..., hi, rounded so that decimal grids are exact decimals."""
    n = int(round((hi - lo) / step))
    return [round(lo + k * step, 10) for k in range(n + 1)]


def phase_sweep(L_values: Iterable[int], deltas: Iterable[float]) -> list[PhaseVerdict]:
    """phase_check over every non-degenerate (L, a) and every delta."""
    deltas = list(deltas)
    out = []
    for L in L_values:
        for a in range(1, L + 1):
            for d in deltas:
                inst = build_instance(L, a, d)
                if inst.degenerate:
                    break
                out.append(phase_check(inst))
    return out


@dataclass(frozen=True)
class BetheSolutionSet:
    pairs: tuple[tuple[complex, complex], ...]
    residual1: float
    residual2: float
    product_residual: float

    def to_dict(self) -> dict:
        return {
            "pairs": [[[x.real, x.imag], [y.real, y.imag]] for x, y in self.pairs],
            "residual1": self.residual1,
            "residual2": self.residual2,
            "product_residual": self.product_residual,
        }


def bethe_residuals(x1: complex, x2: complex, delta: float, L: int) -> tuple[float, float]:
    """Defects of both N = 2 Bethe equations, with denominators cleared."""
    s = x1 * x2 + 1
    u1 = s - 2 * delta * x1
    u2 = s - 2 * delta * x2
    return abs(x1**L * u2 + u1), abs(x2**L * u1 + u2)


def solutions(inst: BetheInstance, scaled: bool = True) -> BetheSolutionSet:
    """Solution pairs (z, w_a / z) over the roots z of p_a.

    With ``scaled`` each residual is divided by (1 + |x|)^L using the larger
    modulus of the pair, which puts all roots on a common footing.
    """
    if inst.poly.degree is None or inst.poly.degree < 1:
        raise ValueError("p_a has no roots")
    rs = find_roots(inst.poly)
    pairs = []
    r1 = r2 = prod = 0.0
    for r in rs.roots:
        z = r.value
        if abs(z) < 1e-12:
            raise ValueError(f"spurious root {z!r} at the origin")
        x2 = inst.omega / z
        pairs.append((z, x2))
        a, b = bethe_residuals(z, x2, inst.delta, inst.L)
        w = (1 + max(abs(z), abs(x2))) ** inst.L if scaled else 1.0
        r1, r2 = max(r1, a / w), max(r2, b / w)
        prod = max(prod, abs(z**inst.L * x2**inst.L - 1))
    return BetheSolutionSet(tuple(pairs), r1, r2, prod)


def salem_scan(
    L_values: Iterable[int], deltas: Iterable[int] = range(-10, 11)
) -> list[tuple[int, int, MahlerReport]]:
    """Mahler reports of p_L / 2 = z^L - D z^(L-1) - D z + 1 for integer D."""
    out = []
    for L in L_values:
        for d in deltas:
            if int(d) != d:
                raise ValueError(f"delta must be an integer, got {d!r}")
            d = int(d)
            c = [1, -d] + [0] * (L - 3) + [-d, 1]
            out.append((L, d, mahler_measure(Polynomial(c))))
    return out
