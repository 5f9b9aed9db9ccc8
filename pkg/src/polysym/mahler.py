"""Mahler measure, Pisot/Salem labels and small exhaustive searches.

For monic integer polynomials the measure is the product of max(1, |z|)
over the roots.  It is computed from the root oracle and checked against
an independent value built only from evaluations of p: the mean of
log|p| over circles of radius slightly larger than one, continued back to
radius one with Jensen's formula.  Sampling exactly on the unit circle
converges only like 1/N when p has zeros there (every Salem polynomial
does), so the off-circle radii are what make a 1e-6 agreement possible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import mpmath
import numpy as np

from .catalog import LEHMER, _int_divide, cyclotomic_coeffs
from .polycore import Polynomial, evaluate
from .roots import LOCATION_TOL, RootSet, find_roots
from .symmetry import classify

Classification = Literal["measure_one", "pisot", "salem", "other"]
Constraint = Literal["psr", "non-sr", "none"]

QUADRATURE_NODES = 2**14
INTEGRAL_AGREEMENT = 1e-6
MEASURE_ONE_TOL = 1e-9
FAMILY_LIMIT = 10**7


class FamilyTooLargeError(ValueError):
    def __init__(self, size: int, limit: int = FAMILY_LIMIT):
        super().__init__(f"family has {size} members, above the limit of {limit}")
        self.size = size


@dataclass(frozen=True)
class MahlerReport:
    measure: float
    outside_count: int
    classification: Classification
    dominant_root: complex | None
    integral_measure: float | None = None

    def to_dict(self) -> dict:
        d = self.dominant_root
        return {
            "measure": self.measure,
            "class": self.classification,
            "outside_count": self.outside_count,
            "dominant_root": None if d is None else [d.real, d.imag],
            "integral_measure": self.integral_measure,
        }


# -- integer helpers ----------------------------------------------------------


def integer_coeffs(p: Polynomial) -> tuple[int, ...] | None:
    """Exact integer coefficients of p, or None if any coefficient is not an integer."""
    c = p.coeffs
    if np.any(c.imag != 0) or np.any(c.real != np.round(c.real)):
        return None
    return tuple(int(x) for x in c.real)


def _require_monic_integer(p: Polynomial) -> tuple[int, ...]:
    ints = integer_coeffs(p)
    if ints is None or p.is_zero:
        raise ValueError("Mahler measure here needs integer coefficients")
    if ints[-1] != 1:
        raise ValueError("Mahler measure here needs a monic polynomial")
    return ints


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    out, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            out -= out // d
        d += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def _cyclotomic_indices(degree: int) -> tuple[int, ...]:
    # phi(k) >= sqrt(k / 2), so every k with phi(k) <= degree is below 2 degree^2 + 2
    return tuple(k for k in range(1, 2 * degree * degree + 3) if _totient(k) <= degree)


def strip_cyclotomic(ints: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    """Divide out powers of z and every cyclotomic factor exactly.

    Returns the remaining cofactor and the list of removed cyclotomic indices
    (with repetition; a removed power of z is reported as index 0).
    """
    c = list(ints)
    removed: list[int] = []
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
        removed.append(0)
    for k in _cyclotomic_indices(max(len(c) - 1, 1)):
        phi = list(cyclotomic_coeffs(k))
        while len(c) >= len(phi):
            try:
                c = _int_divide(c, phi)
            except ArithmeticError:
                break
            removed.append(k)
    return tuple(c), removed


def is_kronecker(ints: tuple[int, ...]) -> bool:
    """Monic integer polynomial whose roots are all zero or roots of unity."""
    rest, _ = strip_cyclotomic(ints)
    return len(rest) == 1 and abs(rest[0]) == 1


# -- the measure ----------------------------------------------------------------


def measure(p: Polynomial, rootset: RootSet | None = None) -> float:
    """|p_n| times the product of max(1, |z|) over the roots; any coefficients."""
    if p.is_zero:
        raise ValueError("measure of the zero polynomial")
    lead = abs(p.leading)
    if p.degree == 0:
        return lead
    rs = rootset if rootset is not None else find_roots(p)
    logs = [r.multiplicity * math.log(abs(r.value)) for r in rs.roots if abs(r.value) > 1.0]
    return lead * math.exp(math.fsum(logs))


def _circle_mean_log(p: Polynomial, radius: float, nodes: int) -> float:
    t = (np.arange(nodes) + 0.5) / nodes
    vals = np.abs(evaluate(p, radius * np.exp(2j * np.pi * t)))
    with np.errstate(divide="ignore"):
        return float(np.mean(np.log(vals)))


def unit_circle_measure(p: Polynomial, nodes: int = QUADRATURE_NODES) -> float:
    """exp of the midpoint-rule mean of log|p(e^{2 pi i t})|, taken literally."""
    return math.exp(_circle_mean_log(p, 1.0, nodes))


def integral_measure(
    p: Polynomial,
    nodes: int = QUADRATURE_NODES,
    steps: tuple[float, ...] = (0.02, 0.01, 0.04, 0.005, 0.08, 0.0025, 0.16, 0.00125),
    refinements: int = 2,
) -> float:
    """Mahler measure from circle integrals of log|p| alone (no roots).

    By Jensen, I(r) = log|p_n| + sum log max(r, |z|) is piecewise linear in
    log r with integer slopes.  The slopes on e^h..e^3h and e^-3h..e^-h must
    be integers, and the jump across e^-h..e^h must equal their sum, which
    holds exactly when every zero in that annulus sits on the circle.  Then
    M = exp(I(e^h) - s h) with s the outer slope.  Several step sizes are
    tried; zeros very close to the circle force small steps, so each
    refinement round shrinks the steps and multiplies the node count by 8.
    If nothing passes, the literal unit-circle rule is returned.
    """
    if p.is_zero or p.degree is None:
        raise ValueError("measure of the zero polynomial")
    if p.degree == 0:
        return abs(p.leading)
    for level in range(refinements + 1):
        scale = 8**level
        for h in steps:
            h /= scale
            N = nodes * scale
            I = {j: _circle_mean_log(p, math.exp(j * h), N) for j in (-3, -2, -1, 1, 2, 3)}
            right = ((I[2] - I[1]) / h, (I[3] - I[2]) / h)
            left = ((I[-1] - I[-2]) / h, (I[-2] - I[-3]) / h)
            kr, kl = round(right[0]), round(left[0])
            ok = all(abs(x - kr) < 1e-7 for x in right) and all(abs(x - kl) < 1e-7 for x in left)
            if ok and abs((I[1] - I[-1]) / h - (kl + kr)) < 1e-7 and 0 <= kl <= kr <= p.degree:
                return math.exp(I[1] - kr * h)
    return unit_circle_measure(p, nodes)


def _off_circle(rs: RootSet, tol: float) -> list:
    return [r for r in rs.roots if abs(abs(r.value) - 1.0) > tol]


def classify_pisot_salem(report: MahlerReport, p: Polynomial, rootset: RootSet | None = None,
                         tol: float = LOCATION_TOL) -> Classification:
    """Label a monic integer polynomial as measure one, Pisot, Salem or other.

    Salem is checked before Pisot: z^2 - 3z + 1 meets both definitions and
    is reported as Salem.
    """
    ints = integer_coeffs(p)
    if (ints is not None and ints[-1] == 1 and is_kronecker(ints)) or abs(report.measure - 1.0) <= MEASURE_ONE_TOL:
        return "measure_one"
    rs = rootset if rootset is not None else find_roots(p)
    off = _off_circle(rs, tol)
    n_off = sum(r.multiplicity for r in off)
    real_pos = all(abs(r.value.imag) <= tol * (1 + abs(r.value)) and r.value.real > 0 for r in off)
    if p.degree >= 2 and n_off == 2 and len(off) == 2 and real_pos and classify(p).is_sr:
        return "salem"
    d = report.dominant_root
    if report.outside_count == 1 and d is not None and abs(d.imag) <= tol * abs(d) and d.real > 1:
        return "pisot"
    return "other"


def mahler_measure(p: Polynomial, *, cross_check: bool = True) -> MahlerReport:
    """Measure and Pisot/Salem label of a monic integer polynomial.

    With ``cross_check`` the root product is compared against
    :func:`integral_measure` and an ``ArithmeticError`` is raised when they
    differ by more than 1e-6.
    """
    _require_monic_integer(p)
    if p.degree == 0:
        return MahlerReport(1.0, 0, "measure_one", None, 1.0 if cross_check else None)
    rs = find_roots(p)
    m = measure(p, rs)
    outside = [r for r in rs.roots if abs(r.value) > 1.0 + LOCATION_TOL]
    count = sum(r.multiplicity for r in outside)
    dominant = max(outside, key=lambda r: abs(r.value)).value if outside else None
    if dominant is not None and abs(dominant.imag) <= LOCATION_TOL * abs(dominant):
        dominant = complex(dominant.real, 0.0)
    integral = None
    if cross_check:
        integral = integral_measure(p)
        if abs(integral - m) > INTEGRAL_AGREEMENT * max(1.0, m):
            raise ArithmeticError(
                f"root product {m!r} and integral form {integral!r} disagree"
            )
    report = MahlerReport(m, count, "other", dominant, integral)
    label = classify_pisot_salem(report, p, rs)
    return MahlerReport(m, count, label, dominant, integral)


# -- exhaustive family search ----------------------------------------------------


@dataclass(frozen=True)
class FamilySearchConfig:
    degree: int
    height: int
    constraint: Constraint = "none"
    monic: bool = True


@dataclass(frozen=True)
class FamilySearchResult:
    config: FamilySearchConfig
    candidates_examined: int
    measure_one_count: int
    minimum_measure_above_one: float | None
    argmin: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        c = self.config
        return {
            "degree": c.degree,
            "height": c.height,
            "constraint": c.constraint,
            "monic": c.monic,
            "candidates_examined": self.candidates_examined,
            "measure_one_count": self.measure_one_count,
            "minimum_measure_above_one": self.minimum_measure_above_one,
            "argmin": [list(a) for a in self.argmin],
        }


def _free_slots(cfg: FamilySearchConfig) -> int:
    if cfg.constraint == "psr":
        return cfg.degree // 2 if cfg.degree % 2 == 0 else (cfg.degree + 1) // 2 - 1
    return cfg.degree


def family_size(cfg: FamilySearchConfig) -> int:
    leads = 1 if cfg.monic else cfg.height
    return leads * (2 * cfg.height + 1) ** _free_slots(cfg)


def _decode(cfg: FamilySearchConfig, index: int) -> tuple[int, ...]:
    base = 2 * cfg.height + 1
    free = _free_slots(cfg)
    digits = []
    for _ in range(free):
        index, r = divmod(index, base)
        digits.append(r - cfg.height)
    lead = 1 + index
    n = cfg.degree
    if cfg.constraint == "psr":
        c = [0] * (n + 1)
        c[0] = c[n] = lead
        for j, d in enumerate(digits, start=1):
            c[j] = c[n - j] = d
        return tuple(c)
    return tuple(digits) + (lead,)


def _is_sr_integer(c: tuple[int, ...]) -> bool:
    if c[0] == 0:
        return False
    rev = c[::-1]
    return c == rev or c == tuple(-x for x in rev)


def canonical_form(c: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of c under z -> 1/z, z -> -z and an overall sign.

    The orbit members are normalized to a positive leading coefficient; the
    one with the smallest value at z = 1 is chosen, which puts a dominant
    real root on the positive axis, with ties broken lexicographically.  Reversal is only used when the
    constant term is nonzero, so the degree is preserved.
    """

    def normed(x):
        x = tuple(x)
        return x if x[-1] > 0 else tuple(-v for v in x)

    neg = tuple(v if k % 2 == 0 else -v for k, v in enumerate(c))
    orbit = [normed(c), normed(neg)]
    if c[0] != 0:
        orbit += [normed(c[::-1]), normed(neg[::-1])]
    return min(orbit, key=lambda x: (sum(x), x))


def _search_range(cfg: FamilySearchConfig, start: int, stop: int, tol: float):
    examined = ones = 0
    best = math.inf
    arg: set[tuple[int, ...]] = set()
    for idx in range(start, stop):
        c = _decode(cfg, idx)
        if cfg.constraint == "non-sr" and _is_sr_integer(c):
            continue
        examined += 1
        rest, _ = strip_cyclotomic(c)
        if len(rest) == 1:
            if abs(rest[0]) == 1:
                ones += 1
                continue
            m = float(abs(rest[0]))
        else:
            m = measure(Polynomial(rest))
            if m <= 1.0 + MEASURE_ONE_TOL:
                ones += 1
                continue
        if m < best * (1 - tol):
            best, arg = m, {canonical_form(c)}
        elif m <= best * (1 + tol):
            best = min(best, m)
            arg.add(canonical_form(c))
    return examined, ones, best, arg


def _merge(parts, tol: float):
    examined = sum(p[0] for p in parts)
    ones = sum(p[1] for p in parts)
    best = min((p[2] for p in parts), default=math.inf)
    arg: set = set()
    for p in parts:
        if p[3] and p[2] <= best * (1 + tol):
            arg |= p[3]
    return examined, ones, best, arg


def family_search(
    degree: int,
    height: int,
    constraint: Constraint = "none",
    monic: bool = True,
    *,
    chunks: int = 1,
    limit: int = FAMILY_LIMIT,
    tie_rtol: float = 1e-9,
) -> FamilySearchResult:
    """Exhaustive minimum of the Mahler measure above one over a coefficient box.

    The box holds integer polynomials of the given degree with coefficients in
    [-height, height] (leading coefficient 1 when monic, otherwise in
    1..height).  ``psr`` restricts to palindromes and ``non-sr`` drops
    palindromes and anti-palindromes.  The index range is split into
    ``chunks`` pieces that are reduced independently and then merged, so the
    result does not depend on the chunk count.
    """
    if degree < 1 or height < 1:
        raise ValueError("degree and height must be >= 1")
    if constraint not in ("psr", "non-sr", "none"):
        raise ValueError(f"unknown constraint {constraint!r}")
    if chunks < 1:
        raise ValueError("chunks must be >= 1")
    cfg = FamilySearchConfig(degree, height, constraint, monic)
    size = family_size(cfg)
    if size > limit:
        raise FamilyTooLargeError(size, limit)
    bounds = np.linspace(0, size, chunks + 1).round().astype(int)
    parts = [_search_range(cfg, int(a), int(b), tie_rtol) for a, b in itertools.pairwise(bounds)]
    examined, ones, best, arg = _merge(parts, tie_rtol)
    return FamilySearchResult(
        cfg,
        examined,
        ones,
        None if not math.isfinite(best) else best,
        tuple(sorted(arg)),
    )


# -- the polylogarithm-ladder identity for Lehmer's number ------------------------

# (k, e): factor (lambda^k - 1)^e
BB_NUMERATOR = ((315, 1), (210, 1), (126, 2), (90, 1), (3, 3), (2, 5), (1, 3))
BB_DENOMINATOR = ((630, 1), (35, 1), (15, 2), (14, 2), (5, 6))
BB_LAMBDA_POWER = 68


def lehmer_number(dps: int = 50) -> mpmath.mpf:
    """The real root > 1 of Lehmer's polynomial, refined by Newton in mpmath."""
    with mpmath.workdps(dps + 10):
        coeffs = [mpmath.mpf(c) for c in reversed(LEHMER)]
        return mpmath.findroot(lambda t: mpmath.polyval(coeffs, t), mpmath.mpf("1.17628081826"))


def bailey_broadhurst_residual(lam, dps: int = 50) -> float:
    """|log| of the ratio of products that equals one at Lehmer's number."""
    with mpmath.workdps(dps):
        lam = mpmath.mpf(lam)
        num = mpmath.fsum(e * mpmath.log(abs(lam**k - 1)) for k, e in BB_NUMERATOR)
        den = mpmath.fsum(e * mpmath.log(abs(lam**k - 1)) for k, e in BB_DENOMINATOR)
        den += BB_LAMBDA_POWER * mpmath.log(lam)
        return float(abs(num - den))


def bailey_broadhurst_check(dps: int = 50) -> float:
    return bailey_broadhurst_residual(lehmer_number(dps), dps)
