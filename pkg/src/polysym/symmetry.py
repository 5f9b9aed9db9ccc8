"""Symmetry classes: self-conjugate, self-reciprocal, self-inversive.

A polynomial is SC, SR or SI when p = w * conj(p), w * p^* or w * p^dagger
for some unit w.  Real self-reciprocal polynomials split further into the
palindromic (PSR, w = 1) and anti-palindromic (NSR, w = -1) cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .polycore import Polynomial, deflate, evaluate
from .roots import LOCATION_TOL, RootSet, find_roots

DEFAULT_TOL = 1e-10


class NotApplicableError(ValueError):
    """The polynomial is outside the class an operation requires."""


@dataclass(frozen=True)
class ClassificationReport:
    is_sc: bool
    is_sr: bool
    is_si: bool
    is_psr: bool
    is_nsr: bool
    omega_sc: complex | None
    omega_sr: complex | None
    omega_si: complex | None
    residual_sc: float
    residual_sr: float
    residual_si: float

    def to_dict(self) -> dict:
        def w(x):
            return None if x is None else [x.real, x.imag]

        def r(x):
            return None if not math.isfinite(x) else x

        return {
            "sc": self.is_sc,
            "sr": self.is_sr,
            "si": self.is_si,
            "psr": self.is_psr,
            "nsr": self.is_nsr,
            "omega_sc": w(self.omega_sc),
            "omega_sr": w(self.omega_sr),
            "omega_si": w(self.omega_si),
            "residual_sc": r(self.residual_sc),
            "residual_sr": r(self.residual_sr),
            "residual_si": r(self.residual_si),
        }


def _unit(w: complex) -> complex:
    return w / abs(w)


def _relation(c: np.ndarray, ref: np.ndarray, omega: complex, h: float) -> float:
    return float(np.max(np.abs(c - omega * ref)) / h)


def classify(p: Polynomial, tol: float = DEFAULT_TOL) -> ClassificationReport:
    """Test the SC/SR/SI coefficient relations with the rotation read off the ends.

    Polynomials with p_0 = 0 are never SR or SI: zero has no reciprocal.
    """
    if p.degree is None:
        raise ValueError("cannot classify the zero polynomial")
    if p.degree < 1:
        raise ValueError("classification needs degree >= 1")
    c = p.coeffs
    h = p.height
    pn, p0 = c[-1], c[0]

    w_sc = pn / np.conj(pn)
    res_sc = _relation(c, np.conj(c), w_sc, h)
    if p0 != 0:
        w_sr = pn / p0
        res_sr = _relation(c, c[::-1], w_sr, h)
        w_si = pn / np.conj(p0)
        res_si = _relation(c, np.conj(c[::-1]), w_si, h)
    else:
        w_sr = w_si = None
        res_sr = res_si = math.inf

    is_sc = res_sc <= tol
    is_sr = res_sr <= tol
    is_si = res_si <= tol
    if is_sc and is_si and not is_sr and w_sr is not None:
        # SC and SI together force SR; trust the two stronger tests.
        is_sr = True
    omega_sr = _unit(complex(w_sr)) if is_sr else None
    sign_ok = lambda target: omega_sr is not None and abs(omega_sr - target) <= tol
    is_psr = is_sr and is_sc and sign_ok(1.0)
    is_nsr = is_sr and is_sc and sign_ok(-1.0)
    if is_psr:
        omega_sr = 1.0 + 0j
    elif is_nsr:
        omega_sr = -1.0 + 0j
    return ClassificationReport(
        is_sc=is_sc,
        is_sr=is_sr,
        is_si=is_si,
        is_psr=is_psr,
        is_nsr=is_nsr,
        omega_sc=_unit(complex(w_sc)) if is_sc else None,
        omega_sr=omega_sr,
        omega_si=_unit(complex(w_si)) if is_si else None,
        residual_sc=res_sc,
        residual_sr=res_sr,
        residual_si=res_si,
    )


def real_form(p: Polynomial, tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """Real coefficients of p rotated by a unit constant, or None if p is not SC."""
    c = p.coeffs
    if p.is_real():
        return c.real.copy()
    pn = c[-1]
    rotated = c * (np.conj(pn) / abs(pn))
    if np.max(np.abs(rotated.imag)) > tol * p.height:
        return None
    return rotated.real.copy()


def forced_zero_deflation(p: Polynomial, tol: float = DEFAULT_TOL) -> tuple[Polynomial, list[float]]:
    """Remove the zeros at +1 / -1 that NSR and odd-degree PSR polynomials must have."""
    rep = classify(p, tol)
    if rep.is_nsr:
        removed = [1.0] + ([-1.0] if p.degree % 2 == 0 else [])
    elif rep.is_psr and p.degree % 2 == 1:
        removed = [-1.0]
    else:
        raise NotApplicableError("only NSR and odd-degree PSR polynomials have forced zeros")
    q = p
    for r in removed:
        q, _ = deflate(q, r, tol)
    return q, removed


@dataclass(frozen=True)
class ChebyshevReduction:
    """q with q(z + 1/z) = p(z) / z^m for an even PSR polynomial of degree 2m.

    ``cheb_coeffs[k]`` multiplies T_k(x/2); the combination equals q(x).
    """

    m: int
    q_coeffs: np.ndarray
    cheb_coeffs: np.ndarray
    max_residual: float

    @property
    def q(self) -> Polynomial:
        return Polynomial(self.q_coeffs)


def _z_polys(m: int) -> list[np.ndarray]:
    # z^s + z^-s as a polynomial in x = z + 1/z
    Z = [np.array([2.0]), np.array([0.0, 1.0])]
    for s in range(2, m + 1):
        nxt = np.zeros(s + 1)
        nxt[1:] += Z[s - 1]
        nxt[: Z[s - 2].size] -= Z[s - 2]
        Z.append(nxt)
    return Z[: m + 1]


def psr_to_q(p: Polynomial, tol: float = DEFAULT_TOL, samples: int = 32) -> ChebyshevReduction:
    rep = classify(p, tol)
    if not rep.is_psr or p.degree % 2:
        raise NotApplicableError("psr_to_q needs a PSR polynomial of even degree")
    c = real_form(p, tol)
    n = p.degree
    m = n // 2
    Z = _z_polys(m)
    q = np.zeros(m + 1)
    q[0] = c[m]
    for s in range(1, m + 1):
        q[: s + 1] += c[m - s] * Z[s]
    cheb = np.empty(m + 1)
    cheb[0] = c[m]
    cheb[1:] = 2.0 * c[m - 1 :: -1]

    z = np.exp(2j * np.pi * (np.arange(samples) + 0.5) / samples)
    x = z + 1.0 / z
    qv = evaluate(Polynomial(q), x)
    res_q = np.abs(qv * z**m - evaluate(Polynomial(c), z))
    res_cheb = np.abs(npcheb.chebval((x / 2).real, cheb) - qv)
    scale = float(np.abs(c).max())
    return ChebyshevReduction(m, q, cheb, float(max(res_q.max(), res_cheb.max()) / scale))


def q_zero_mapping(
    p: Polynomial, rootset: RootSet | None = None, tol: float = LOCATION_TOL
) -> list[float]:
    """Map each zero e^{i theta} of p on the unit circle to 2 cos(theta).

    Reciprocal pairs land on the same point; multiplicities are repeated.
    """
    red = psr_to_q(p)
    rs = rootset if rootset is not None else find_roots(p)
    out = []
    for r in rs.roots:
        if abs(abs(r.value) - 1.0) <= tol:
            xi = 2.0 * math.cos(math.atan2(r.value.imag, r.value.real))
            out.extend([xi] * r.multiplicity)
    qh = float(np.abs(red.q_coeffs).max())
    bad = [xi for xi in out if abs(evaluate(red.q, xi)) >= 1e-8 * qh]
    if bad:
        raise ArithmeticError(f"mapped points are not zeros of q: {bad}")
    return sorted(out)
