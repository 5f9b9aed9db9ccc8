"""Dense complex polynomials stored with ascending coefficients.

``Polynomial([p0, p1, ..., pn])`` represents p0 + p1 z + ... + pn z^n.  Values
are immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

# Trailing coefficients below TRIM_RTOL * height are dropped on construction.
TRIM_RTOL = 1e-14

TransformKind = Literal["conjugate", "reciprocal", "inversive"]


class NotARootError(ValueError):
    """Raised by :func:`deflate` when the divisor point is not a root."""

    def __init__(self, root: complex, remainder: float, bound: float):
        super().__init__(
            f"{root!r} is not a root: |remainder| = {remainder:.3e} > {bound:.3e}"
        )
        self.root = root
        self.remainder = remainder


def _trim(c: np.ndarray) -> np.ndarray:
    if c.size == 0:
        return c
    mags = np.abs(c)
    h = mags.max()
    if h == 0.0:
        return c[:0]
    keep = np.nonzero(mags >= TRIM_RTOL * h)[0]
    return c[: keep[-1] + 1]


@dataclass(frozen=True, init=False, eq=False)
class Polynomial:
    coeffs: np.ndarray

    def __init__(self, coeffs: Iterable[complex] | np.ndarray = ()):
        c = np.array(coeffs, dtype=complex).ravel()
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        c = _trim(c)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- basic attributes -------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Index of the leading coefficient; ``None`` for the zero polynomial."""
        return None if self.coeffs.size == 0 else self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1]) if self.coeffs.size else 0j

    @property
    def height(self) -> float:
        return float(np.abs(self.coeffs).max()) if self.coeffs.size else 0.0

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) <= tol * max(self.height, 1e-300)))

    def real_coeffs(self) -> np.ndarray:
        return self.coeffs.real.copy()

    def __len__(self) -> int:
        return self.coeffs.size

    def __iter__(self):
        return iter(complex(c) for c in self.coeffs)

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.tolist()))

    def __repr__(self) -> str:
        def fmt(c: complex) -> str:
            if c.imag == 0:
                return f"{c.real:g}"
            return f"{c.real:g}{c.imag:+g}j"

        return f"Polynomial([{', '.join(fmt(complex(c)) for c in self.coeffs)}])"

    # -- arithmetic ------------------------------------------------------

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other: Polynomial) -> Polynomial:
        return add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return add(self, scale(other, -1))

    def __neg__(self) -> Polynomial:
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def derivative(self) -> Polynomial:
        return derivative(self)

    def conjugate(self) -> Polynomial:
        return transform(self, "conjugate")

    def reciprocal(self) -> Polynomial:
        return transform(self, "reciprocal")

    def inversive(self) -> Polynomial:
        return transform(self, "inversive")

    # -- serialization ---------------------------------------------------

    def to_dict(self, compact: bool = False) -> dict:
        if compact and self.is_real():
            return {"coeffs": [float(c.real) for c in self.coeffs]}
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs]}

    def to_json(self, compact: bool = False) -> str:
        return json.dumps(self.to_dict(compact))

    @classmethod
    def from_dict(cls, data: dict) -> Polynomial:
        if not isinstance(data, dict) or "coeffs" not in data:
            raise ValueError('expected an object with a "coeffs" array')
        entries = data["coeffs"]
        if not isinstance(entries, list):
            raise ValueError('"coeffs" must be an array')
        out = []
        for i, e in enumerate(entries):
            if isinstance(e, bool):
                raise ValueError(f"coeffs[{i}]: booleans are not numbers")
            if isinstance(e, (int, float)):
                out.append(complex(e))
            elif (
                isinstance(e, list)
                and len(e) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in e)
            ):
                out.append(complex(e[0], e[1]))
            else:
                raise ValueError(f"coeffs[{i}]: expected a number or [re, im] pair")
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> Polynomial:
        c = np.array([leading], dtype=complex)
        for r in roots:
            c = np.convolve(c, np.array([-r, 1.0], dtype=complex))
        return cls(c)

    @classmethod
    def monomial(cls, n: int, c: complex = 1.0) -> Polynomial:
        out = np.zeros(n + 1, dtype=complex)
        out[n] = c
        return cls(out)


ZERO = Polynomial()


def evaluate(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    c = p.coeffs
    if c.size == 0:
        return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0j
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, c[-1], dtype=complex)
    for k in range(c.size - 2, -1, -1):
        acc = acc * z + c[k]
    return complex(acc) if acc.ndim == 0 else acc


def abs_evaluate(p: Polynomial, r):
    """sum |p_k| r^k, the natural scale of rounding errors in evaluate."""
    a = np.abs(p.coeffs)
    r = np.asarray(r, dtype=float)
    if a.size == 0:
        return np.zeros_like(r) if r.ndim else 0.0
    acc = np.full(r.shape, a[-1])
    for k in range(a.size - 2, -1, -1):
        acc = acc * r + a[k]
    return float(acc) if acc.ndim == 0 else acc


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    c = p.coeffs
    for _ in range(order):
        if c.size <= 1:
            return ZERO
        c = c[1:] * np.arange(1, c.size)
    return Polynomial(c)


def transform(p: Polynomial, kind: TransformKind) -> Polynomial:
    """Conjugate, reciprocal (reversed) or inversive (reversed and conjugated)."""
    c = p.coeffs
    if kind == "conjugate":
        return Polynomial(np.conj(c))
    if kind == "reciprocal":
        return Polynomial(c[::-1])
    if kind == "inversive":
        return Polynomial(np.conj(c[::-1]))
    raise ValueError(f"unknown transform kind {kind!r}")


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(p.coeffs.size, q.coeffs.size)
    out = np.zeros(n, dtype=complex)
    out[: p.coeffs.size] += p.coeffs
    out[: q.coeffs.size] += q.coeffs
    return Polynomial(out)


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero or q.is_zero:
        return ZERO
    return Polynomial(np.convolve(p.coeffs, q.coeffs))


def scale(p: Polynomial, c: complex) -> Polynomial:
    return Polynomial(p.coeffs * complex(c))


def deflate(p: Polynomial, root: complex, tol: float = 1e-10) -> tuple[Polynomial, float]:
    """Divide by (z - root); returns the quotient and |remainder|.

    The remainder is judged against ``tol * sum |p_k| |root|^k``; a larger
    remainder raises :class:`NotARootError`.
    """
    c = p.coeffs
    if c.size < 2:
        raise ValueError("cannot deflate a constant polynomial")
    root = complex(root)
    q = np.empty(c.size - 1, dtype=complex)
    acc = c[-1]
    for k in range(c.size - 2, -1, -1):
        q[k] = acc
        acc = c[k] + root * acc
    rem = abs(acc)
    bound = tol * max(abs_evaluate(p, abs(root)), np.finfo(float).tiny)
    if rem > bound:
        raise NotARootError(root, rem, bound)
    return Polynomial(q), rem


@dataclass(frozen=True)
class NormReport:
    length: float
    lr_norm: float
    r: float
    height: float
    term_count: int


def norms(p: Polynomial, r: float = 1.0) -> NormReport:
    """Length sum|p_k|, the l^r norm (sum|p_k|^r)^(1/r), height and term count."""
    if r < 1:
        raise ValueError("r must be >= 1")
    a = np.abs(p.coeffs)
    return NormReport(
        length=float(a.sum()),
        lr_norm=float(np.sum(a**r) ** (1.0 / r)) if a.size else 0.0,
        r=float(r),
        height=float(a.max()) if a.size else 0.0,
        term_count=int(np.count_nonzero(a)),
    )


def max_modulus_on_circle(p: Polynomial, samples: int = 4096, refine_steps: int = 50) -> tuple[float, float]:
    """Bracket max |p(z)| over |z| = 1.

    The lower end is the best value found by sampling plus golden-section
    refinement; the upper end adds the Lipschitz bound sum k|p_k| times the
    half sample spacing.
    """
    if p.is_zero:
        return 0.0, 0.0
    theta = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    vals = np.abs(evaluate(p, np.exp(1j * theta)))
    i = int(np.argmax(vals))
    h = 2 * math.pi / samples
    lo, hi = theta[i] - h, theta[i] + h
    f = lambda t: abs(evaluate(p, complex(math.cos(t), math.sin(t))))
    g = (math.sqrt(5) - 1) / 2
    a, b = lo + (1 - g) * (hi - lo), lo + g * (hi - lo)
    fa, fb = f(a), f(b)
    for _ in range(refine_steps):
        if fa > fb:
            hi, b, fb = b, a, fa
            a = lo + (1 - g) * (hi - lo)
            fa = f(a)
        else:
            lo, a, fa = a, b, fb
            b = lo + g * (hi - lo)
            fb = f(b)
    lower = max(float(vals[i]), fa, fb)
    lip = float(np.sum(np.arange(p.coeffs.size) * np.abs(p.coeffs)))
    upper = float(vals.max()) + lip * h / 2
    return lower, max(upper, lower)
