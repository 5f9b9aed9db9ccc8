"""Aberth-Ehrlich simultaneous root finder with multiplicity recovery.

This is the numerical ground truth that every zero-location criterion is
checked against, so it errs on the side of care: converged iterates are
polished by Newton's method, and clusters of iterates around a multiple
root are collapsed and re-solved on the appropriate derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .polycore import Polynomial, abs_evaluate, derivative, evaluate

EPS = float(np.finfo(float).eps)
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

DEFAULT_SEED = 0
LOCATION_TOL = 1e-8
GUARD_FACTOR = 10.0
# Accepted backward error |p(z)| / sum|p_k||z|^k is at most BACKWARD_KAPPA * EPS.
BACKWARD_KAPPA = 1e3
CLUSTER_RTOL = 1e-6
POLISH_RTOL = 1e-12


class RootFindingError(RuntimeError):
    """Aberth iteration did not reach the backward-error target."""

    def __init__(self, message: str, best: np.ndarray, residuals: np.ndarray):
        super().__init__(message)
        self.best = best
        self.residuals = residuals


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int = 1


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]
    max_backward_error: float

    @property
    def degree(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def values(self) -> np.ndarray:
        """All roots repeated according to multiplicity."""
        out = [r.value for r in self.roots for _ in range(r.multiplicity)]
        return np.array(out, dtype=complex)

    def to_dict(self) -> dict:
        return {
            "roots": [
                {"re": r.value.real, "im": r.value.imag, "multiplicity": r.multiplicity}
                for r in self.roots
            ],
            "max_backward_error": self.max_backward_error,
        }


@dataclass(frozen=True)
class LocationSummary:
    tol: float
    on_circle: int
    inside: int
    outside: int
    on_axis: int
    upper: int
    lower: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _backward_error(p: Polynomial, z) -> np.ndarray:
    num = np.abs(evaluate(p, z))
    den = abs_evaluate(p, np.abs(z))
    return num / np.maximum(den, np.finfo(float).tiny)


def _newton_ratio(c: np.ndarray, dc: np.ndarray, rc: np.ndarray, drc: np.ndarray, z: np.ndarray):
    """p(z)/p'(z) and the backward error at z, evaluated without overflow.

    Points outside the unit disk use the reversed polynomial in 1/z.
    """
    n = c.size - 1
    out_ratio = np.empty_like(z)
    out_bwd = np.empty(z.shape)
    absc = np.abs(c)
    big = np.abs(z) > 1.0
    for mask, rev in ((~big, False), (big, True)):
        if not mask.any():
            continue
        x = z[mask] if not rev else 1.0 / z[mask]
        a, da = (rc, drc) if rev else (c, dc)
        pv = np.full(x.shape, a[-1], dtype=complex)
        for k in range(a.size - 2, -1, -1):
            pv = pv * x + a[k]
        dv = np.full(x.shape, da[-1], dtype=complex) if da.size else np.zeros(x.shape, complex)
        for k in range(da.size - 2, -1, -1):
            dv = dv * x + da[k]
        ax = np.abs(x)
        aa = absc[::-1] if rev else absc
        s = np.full(x.shape, aa[-1])
        for k in range(aa.size - 2, -1, -1):
            s = s * ax + aa[k]
        if rev:
            # p(z) = z^n R(y), p'(z) = z^(n-1) (n R(y) - y R'(y))
            ratio = z[mask] * pv / (n * pv - x * dv)
        else:
            ratio = pv / dv
        out_ratio[mask] = ratio
        out_bwd[mask] = np.abs(pv) / np.maximum(s, np.finfo(float).tiny)
    return out_ratio, out_bwd


def _aberth(c: np.ndarray, seed: int, max_iter: int) -> tuple[np.ndarray, np.ndarray, bool]:
    n = c.size - 1
    c = c / c[-1]
    dc = c[1:] * np.arange(1, n + 1)
    rc = c[::-1].copy()
    drc = rc[1:] * np.arange(1, n + 1)
    rng = np.random.default_rng(seed)
    radius = abs(c[0]) ** (1.0 / n)
    angles = np.arange(n) * GOLDEN_ANGLE + 0.25
    jitter = 1.0 + 1e-3 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    z = radius * np.exp(1j * angles) * jitter
    active = np.ones(n, dtype=bool)
    bwd = np.full(n, np.inf)
    target = 4.0 * n * EPS
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        zi = z[idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio, b = _newton_ratio(c, dc, rc, drc, zi)
            diff = zi[:, None] - z[None, :]
            diff[np.arange(idx.size), idx] = np.inf
            sigma = np.sum(1.0 / diff, axis=1)
            w = ratio / (1.0 - ratio * sigma)
        bwd[idx] = b
        done = b <= target
        bad = ~np.isfinite(w)
        if bad.any():
            w[bad] = 1e-3 * (1.0 + np.abs(zi[bad])) * np.exp(1j * rng.uniform(0, 2 * math.pi, bad.sum()))
        step = np.where(done, 0.0, w)
        z[idx] = zi - step
        small = np.abs(step) <= 4.0 * EPS * np.abs(zi)
        active[idx[done | (small & ~bad)]] = False
    _, bwd = _newton_ratio(c, dc, rc, drc, z)
    return z, bwd, not active.any()


def _polish(p: Polynomial, dp: Polynomial, z: complex, steps: int = 4) -> complex:
    best, best_b = z, float(_backward_error(p, z))
    for _ in range(steps):
        d = evaluate(dp, best)
        if d == 0:
            break
        cand = best - evaluate(p, best) / d
        b = float(_backward_error(p, cand))
        if not b < best_b:
            break
        best, best_b = cand, b
    return complex(best)


def _polish_extended(c: np.ndarray, z: complex, steps: int = 3) -> complex:
    """Newton steps with the stored coefficients evaluated in 34-digit arithmetic."""
    with mpmath.workdps(34):
        coeffs = [mpmath.mpc(complex(a)) for a in c[::-1]]
        x = mpmath.mpc(z)
        for _ in range(steps):
            v, d = mpmath.polyval(coeffs, x, derivative=True)
            if d == 0:
                break
            x -= v / d
        return complex(x)


def _clusters(p: Polynomial, dp: Polynomial, z: np.ndarray) -> list[list[int]]:
    n = z.size
    az = np.abs(z)
    pv = np.abs(evaluate(p, z))
    dv = np.abs(evaluate(dp, z))
    s = abs_evaluate(p, az)
    with np.errstate(divide="ignore", invalid="ignore"):
        incl = n * (pv + 2 * n * EPS * s) / dv
    scale = np.maximum(1.0, az)
    incl = np.where(np.isfinite(incl), incl, np.inf)
    rho = np.maximum(CLUSTER_RTOL * scale, np.minimum(incl, 1e-2 * scale))
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    dist = np.abs(z[:, None] - z[None, :])
    ii, jj = np.nonzero(np.triu(dist <= rho[:, None] + rho[None, :], k=1))
    for i, j in zip(ii, jj):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _solve_multiple(p: Polynomial, z: np.ndarray, m: int) -> complex | None:
    """Locate an m-fold root near the centroid of ``z`` as a simple root of p^(m-1)."""
    c = complex(z.mean())
    g = derivative(p, m - 1)
    dg = derivative(g)
    spread = float(np.abs(z - c).max())
    x = c
    for _ in range(50):
        d = evaluate(dg, x)
        if d == 0:
            break
        step = evaluate(g, x) / d
        x = x - step
        if abs(step) <= 4 * EPS * max(1.0, abs(x)):
            break
    if not np.isfinite(x) or abs(x - c) > max(4 * spread, CLUSTER_RTOL * max(1.0, abs(c))):
        return None
    if float(_backward_error(p, x)) > BACKWARD_KAPPA * EPS:
        return None
    return complex(x)


def find_roots(p: Polynomial, *, seed: int = DEFAULT_SEED, max_iter: int = 500) -> RootSet:
    """All roots of ``p`` with multiplicities.

    Raises :class:`RootFindingError` if the simultaneous iteration fails to
    bring every iterate to a backward error below 1e3 * eps.
    """
    if p.degree is None or p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    c = p.coeffs
    nz = int(np.argmax(c != 0))
    found: list[Root] = []
    if nz:
        found.append(Root(0j, nz))
    core = Polynomial(c[nz:])
    if core.degree == 0:
        return RootSet(tuple(found), 0.0)
    if core.degree == 1:
        r = complex(-core.coeffs[0] / core.coeffs[1])
        found.append(Root(r, 1))
        return RootSet(tuple(found), float(_backward_error(core, r)))

    z, bwd, converged = _aberth(core.coeffs.copy(), seed, max_iter)
    if not np.all(np.isfinite(z)) or (not converged and bwd.max() > BACKWARD_KAPPA * EPS):
        raise RootFindingError(
            f"Aberth iteration did not converge in {max_iter} iterations "
            f"(max backward error {np.nanmax(bwd):.3e})",
            z,
            bwd,
        )
    dcore = derivative(core)
    z = np.array([_polish(core, dcore, complex(x)) for x in z])

    for group in _clusters(core, dcore, z):
        m = len(group)
        if m > 1:
            x = _solve_multiple(core, z[group], m)
            if x is not None:
                found.append(Root(x, m))
                continue
        for i in group:
            x = complex(z[i])
            # ill-conditioned simple roots (tight clusters) get extended-precision Newton
            if m == 1 and EPS * abs_evaluate(core, abs(x)) > POLISH_RTOL * max(1.0, abs(x)) * abs(evaluate(dcore, x)):
                x = _polish_extended(core.coeffs, x)
            found.append(Root(x, 1))

    vals = np.array([r.value for r in found if r.value != 0], dtype=complex)
    worst = float(_backward_error(core, vals).max()) if vals.size else 0.0
    found.sort(key=lambda r: (round(r.value.real, 12), round(r.value.imag, 12)))
    return RootSet(tuple(found), worst)


def locate(rs: RootSet, tol: float = LOCATION_TOL) -> LocationSummary:
    """Counts, with multiplicity, relative to the unit circle and the real axis."""
    on = inside = outside = axis = upper = lower = 0
    for r in rs.roots:
        m, z = r.multiplicity, r.value
        mod = abs(z)
        if abs(mod - 1.0) <= tol:
            on += m
        elif mod < 1.0:
            inside += m
        else:
            outside += m
        if abs(z.imag) <= tol * (1.0 + mod):
            axis += m
        elif z.imag > 0:
            upper += m
        else:
            lower += m
    return LocationSummary(tol, on, inside, outside, axis, upper, lower)


def guard_band(tol: float = LOCATION_TOL) -> float:
    return GUARD_FACTOR * tol
