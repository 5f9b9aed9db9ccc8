"""Zero-location theorems as executable checkers, plus an oracle referee.

Each checker tests one theorem's hypothesis on the coefficients and, when
it holds, states the theorem's conclusion.  :func:`battery` runs all of them
and compares every stated conclusion with the roots found numerically; a
disagreement outside the guard band around the circle is a soundness
incident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from .polycore import Polynomial, evaluate, max_modulus_on_circle
from .roots import LOCATION_TOL, GUARD_FACTOR, RootSet, find_roots, locate, LocationSummary
from .symmetry import DEFAULT_TOL, classify, psr_to_q, real_form

SimpleZeros = Literal["yes", "unless_equality", "unknown"]

CONCLUSIONS = (
    "AllOnCircle",
    "AllInOrOnCircle",
    "AllOnOrOutCircle",
    "ExactInside",
    "ExactOnCircle",
    "NoneOnCircle",
    "OnOrSymmetric",
    "NotAllOnCircle",
    "UpperBoundPositiveRealZeros",
    "ExactRealZerosInInterval",
    "Inconclusive",
)
COUNTED = {"ExactInside", "ExactOnCircle", "OnOrSymmetric", "UpperBoundPositiveRealZeros", "ExactRealZerosInInterval"}

SEARCH_GRID = 64
SEARCH_REFINE = 50
ZOOM_LEVELS = 3
WEISZFELD_STEPS = 60
MJ_ZERO_RTOL = 1e-11
# Searched witnesses must clear this relative margin: a search can drift into
# degenerate limits (a -> 0) where the two sides agree up to rounding.
WITNESS_MARGIN = 1e-12
STURM_ENDPOINT_RTOL = 1e-12


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    applicable: bool
    fired: bool = False
    conclusion: str = "Inconclusive"
    count: int | None = None
    simple_zeros: SimpleZeros = "unknown"
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.conclusion not in CONCLUSIONS:
            raise ValueError(f"unknown conclusion {self.conclusion!r}")
        if self.fired and not self.applicable:
            raise ValueError("a checker cannot fire when it is not applicable")
        if self.conclusion != "Inconclusive" and not self.fired:
            raise ValueError("only fired checkers carry a conclusion")
        if (self.conclusion in COUNTED) != (self.count is not None):
            raise ValueError(f"{self.conclusion} count mismatch")

    @property
    def label(self) -> str:
        return self.conclusion if self.count is None else f"{self.conclusion}({self.count})"

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "applicable": self.applicable,
            "fired": self.fired,
            "conclusion": self.label,
            "simple_zeros": self.simple_zeros,
            "witness": _jsonable(self.witness),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def _na(name: str, why: str) -> CriterionVerdict:
    return CriterionVerdict(name, False, witness={"reason": why})


def _quiet(name: str, **witness) -> CriterionVerdict:
    return CriterionVerdict(name, True, witness=witness)


def _need_degree(p: Polynomial, k: int = 1) -> int:
    if p.degree is None or p.degree < k:
        raise ValueError(f"needs a polynomial of degree >= {k}")
    return p.degree


# -- classical, no symmetry needed ------------------------------------------------


def rouche_dominant(p: Polynomial) -> CriterionVerdict:
    """One coefficient beats the sum of the moduli of all others.

    Then p and p_k z^k have the same zeros inside the circle, so exactly k of
    them are inside and none lies on the circle.
    """
    name = "rouche"
    n = _need_degree(p)
    a = np.abs(p.coeffs)
    total = float(a.sum())
    for k in range(n + 1):
        if a[k] > total - a[k]:
            return CriterionVerdict(
                name, True, True, "ExactInside", k, "unknown",
                {"k": k, "none_on_circle": True, "slack": float(2 * a[k] - total)},
            )
    return _quiet(name)


def enestrom_kakeya(p: Polynomial) -> CriterionVerdict:
    name = "enestrom_kakeya"
    _need_degree(p)
    if not p.is_real():
        return _na(name, "non-real coefficients")
    c = p.coeffs.real
    asc = c[0] > 0 and bool(np.all(np.diff(c) >= 0))
    desc = c[-1] > 0 and bool(np.all(np.diff(c) <= 0))
    w = {"ascending": asc, "descending": desc}
    if asc and desc:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", w)
    if asc:
        return CriterionVerdict(name, True, True, "AllInOrOnCircle", None, "unknown", w)
    if desc:
        return CriterionVerdict(name, True, True, "AllOnOrOutCircle", None, "unknown", w)
    return _quiet(name, **w)


def cohn_full(p: Polynomial, tol: float = DEFAULT_TOL, loc_tol: float = LOCATION_TOL) -> CriterionVerdict:
    """All zeros on the circle iff p is SI and p' has no zero outside it.

    The zeros of p' come from the oracle; those inside the guard band count
    as not outside.  The witness also records the variant "|p_n| = |p_0| and
    no zero of p outside".
    """
    name = "cohn"
    n = _need_degree(p)
    si = classify(p, tol).is_si
    guard = GUARD_FACTOR * loc_tol
    if n == 1:
        d_out = 0
    else:
        d_out = sum(r.multiplicity for r in find_roots(p.derivative()).roots if abs(r.value) > 1 + guard)
    p_out = sum(r.multiplicity for r in find_roots(p).roots if abs(r.value) > 1 + guard)
    ends = abs(abs(p.coeffs[-1]) - abs(p.coeffs[0])) <= tol * p.height
    w = {"si": si, "derivative_outside": d_out, "variant_all_on": bool(ends and p_out == 0)}
    if si and d_out == 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", w)
    return CriterionVerdict(name, True, True, "NotAllOnCircle", None, "unknown", w)


@dataclass(frozen=True)
class SchurSequence:
    """P_0 = p and P_{j+1} = conj(p_{j,0}) P_j - p_{j,n-j} P_j^dagger.

    ``coeffs[j]`` holds P_j divided by a positive scale, so signs are
    preserved; ``deltas`` and ``schur_products`` are on the true scale.
    """

    coeffs: tuple[np.ndarray, ...]
    deltas: tuple[float, ...]
    schur_products: tuple[float, ...]
    signs: tuple[int, ...]
    max_imag_residue: float

    @property
    def polys(self) -> list[Polynomial]:
        return [Polynomial(c) for c in self.coeffs]


def _schur_sequence(p: Polynomial):
    n = p.degree
    c = p.coeffs.astype(complex)
    scale = float(np.abs(c).max())
    P = c / scale
    log_scale = math.log(scale)
    coeffs = [P.copy()]
    deltas: list[float] = []
    signs: list[int] = []
    imag = 0.0
    zero_at = None
    for j in range(n):
        m = n - j
        a, b = P[0], P[m]
        R = np.conj(a) * P - b * np.conj(P[::-1])
        R = R[:m]  # the z^m coefficient cancels identically
        mag = float(np.abs(R).max()) if R.size else 0.0
        ref = abs(a) * float(np.abs(P).max()) + abs(b) * float(np.abs(P).max())
        if mag <= MJ_ZERO_RTOL * max(ref, 1e-300):
            zero_at = j
            break
        P = R / mag
        log_scale = 2 * log_scale + math.log(mag)
        coeffs.append(P.copy())
        d0 = P[0]
        imag = max(imag, abs(d0.imag))
        if abs(d0) <= MJ_ZERO_RTOL:
            signs.append(0)
            deltas.append(0.0)
            return coeffs, deltas, signs, imag, ("singular", j + 1)
        signs.append(1 if d0.real > 0 else -1)
        with np.errstate(over="ignore"):
            deltas.append(float(d0.real) * math.exp(min(log_scale, 700.0)))
    return coeffs, deltas, signs, imag, ("zero", zero_at) if zero_at is not None else ("full", n)


def marden_jury(p: Polynomial) -> tuple[SchurSequence, CriterionVerdict]:
    """Count zeros inside the circle from signs of the Schur-Cohn products."""
    name = "marden_jury"
    n = _need_degree(p)
    coeffs, deltas, signs, imag, (kind, k) = _schur_sequence(p)
    prods, running, prod_signs = [], 1.0, []
    s = 1
    for d, sg in zip(deltas, signs):
        running *= d
        s *= sg
        prods.append(running)
        prod_signs.append(s)
    seq = SchurSequence(tuple(coeffs), tuple(deltas), tuple(prods), tuple(signs), imag)
    neg = sum(1 for x in prod_signs if x < 0)
    if kind == "full":
        v = CriterionVerdict(name, True, True, "ExactInside", neg, "unknown", {"none_on_circle": True})
    elif kind == "zero":
        v = CriterionVerdict(
            name, True, True, "OnOrSymmetric", n - k, "unknown", {"k": k, "inside_among_rest": neg}
        )
    else:
        v = _quiet(name, reason=f"delta_{k} vanishes while P_{k} does not")
    return seq, v


def chen_generate(q: Polynomial, m: int, omega: complex, loc_tol: float = LOCATION_TOL) -> Polynomial:
    """p = z^m q + omega q^dagger, which has every zero on the circle."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if abs(abs(omega) - 1.0) > 1e-12:
        raise ValueError("omega must have modulus one")
    if q.degree is None:
        raise ValueError("q must be nonzero")
    if q.degree >= 1:
        worst = max(abs(r.value) for r in find_roots(q).roots)
        if worst > 1.0 + GUARD_FACTOR * loc_tol:
            raise ValueError(f"q has a zero outside the circle (modulus {worst:.6g})")
    shifted = np.concatenate([np.zeros(m, complex), q.coeffs])
    dag = np.zeros(shifted.size, complex)
    dag[: q.coeffs.size] = omega * np.conj(q.coeffs[::-1])
    p = Polynomial(shifted + dag)
    if p.degree is None or p.degree < 1:
        raise ValueError("the construction degenerates to a constant")
    return p


# -- real self-reciprocal polynomials ---------------------------------------------


def _psr_real(p: Polynomial, tol: float) -> np.ndarray | None:
    """Real palindromic coefficients with positive leading term, or None."""
    if not classify(p, tol).is_psr:
        return None
    c = real_form(p, tol)
    return c if c[-1] > 0 else -c


def chen_chinen(c: np.ndarray) -> CriterionVerdict:
    name = "chen_chinen"
    n = c.size - 1
    nz = [j for j in range(n + 1) if c[j] != 0]
    k = max(j for j in nz if 2 * j < n) if any(2 * j < n for j in nz) else None
    if k is None:
        return _quiet(name, reason="no lower block")
    middle = c[k + 1 : n - k]
    chain = c[: k + 1]
    ok = bool(np.all(middle == 0)) and chain[-1] > 0 and bool(np.all(np.diff(chain) < 0))
    if ok:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", {"k": k})
    return _quiet(name, k=k)


def choo(c: np.ndarray) -> CriterionVerdict:
    """With c_j = (j+1) p_{j+1}: a chain c_{n-1} >= ... >= c_k > 0 and
    c_k >= sum_{j<=k} |c_j - c_{j-1}| for some k."""
    name = "choo"
    n = c.size - 1
    d = c[1:] * np.arange(1, n + 1)
    var = np.abs(np.diff(np.concatenate([[0.0], d])))
    cum = np.cumsum(var)
    for k in range(n - 1, -1, -1):
        if d[k] <= 0 or (k < n - 1 and d[k] > d[k + 1]):
            break
        if d[k] >= cum[k]:
            return CriterionVerdict(
                name, True, True, "AllOnCircle", None, "unknown", {"k": k, "slack": float(d[k] - cum[k])}
            )
    return _quiet(name)


def _lakatos_sum(c: np.ndarray, r: float = 0.0) -> float:
    pn = c[-1]
    return float(np.sum(np.abs(c[1:-1] - pn + r)))


def lakatos(c: np.ndarray) -> CriterionVerdict:
    name = "lakatos"
    n = c.size - 1
    if n <= 2:
        return _na(name, "degree must exceed 2")
    s = _lakatos_sum(c)
    slack = abs(c[-1]) - s
    if slack >= 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", {"slack": slack})
    return _quiet(name, slack=slack)


def lakatos_losonczi_odd(c: np.ndarray) -> CriterionVerdict:
    name = "lakatos_losonczi_odd"
    n = c.size - 1
    if n % 2 == 0:
        return _na(name, "degree must be odd")
    m = (n - 1) // 2
    factor = math.cos(math.pi / (4 * (m + 1))) ** 2
    slack = abs(c[-1]) - factor * _lakatos_sum(c)
    w = {"m": m, "cos2_phi": factor, "slack": slack}
    if slack >= 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", w)
    return _quiet(name, **w)


def _golden_max(f, lo: float, hi: float, steps: int) -> tuple[float, float]:
    g = (math.sqrt(5) - 1) / 2
    a, b = hi - g * (hi - lo), lo + g * (hi - lo)
    fa, fb = f(a), f(b)
    for _ in range(steps):
        if fa < fb:
            lo, a, fa = a, b, fb
            b = lo + g * (hi - lo)
            fb = f(b)
        else:
            hi, b, fb = b, a, fa
            a = hi - g * (hi - lo)
            fa = f(a)
    return (a, fa) if fa >= fb else (b, fb)


def lakatos_losonczi_r(c: np.ndarray, r: float | None = None) -> CriterionVerdict:
    """|p_n + r| >= sum |p_k - p_n + r| with p_n r >= 0 and |r| <= |p_n|.

    The slack is concave in r on the admissible segment; without a fixed
    ``r`` it is maximized on a grid and refined by golden section.
    """
    name = "lakatos_losonczi_r"
    n = c.size - 1
    if n <= 2:
        return _na(name, "degree must exceed 2")
    pn = float(c[-1])
    slack = lambda t: abs(pn + t) - _lakatos_sum(c, t)
    if r is not None:
        if pn * r < 0 or abs(r) > abs(pn):
            raise ValueError("r must satisfy p_n r >= 0 and |r| <= |p_n|")
        best_r, best = float(r), slack(float(r))
    else:
        grid = np.linspace(0.0, pn, SEARCH_GRID)
        vals = [slack(t) for t in grid]
        i = int(np.argmax(vals))
        best_r, best = float(grid[i]), float(vals[i])
        if best < 0:
            lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, SEARCH_GRID - 1)]
            lo, hi = min(lo, hi), max(lo, hi)
            t, v = _golden_max(slack, lo, hi, SEARCH_REFINE)
            if v > best:
                best_r, best = t, v
        if slack(0.0) >= best:
            best_r, best = 0.0, slack(0.0)
    w = {"r": best_r, "slack": best}
    if best >= 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", w)
    return _quiet(name, **w)


def kwon(c: np.ndarray) -> CriterionVerdict:
    """Kwon's even-degree test, literally: it needs p_0 <= ... <= p_n, which
    for a palindrome means a constant coefficient sequence."""
    name = "kwon"
    n = c.size - 1
    if n % 2 or n < 2:
        return _na(name, "degree must be even and >= 2")
    if not np.all(np.diff(c) >= 0):
        return _quiet(name, reason="coefficients are not nondecreasing")
    mid = c[n // 2]
    first = mid >= np.sum(np.abs(c - mid))
    second = evaluate(Polynomial(c), 1.0).real >= 0 and c[-1] >= 0.5 * np.sum(np.abs(c[1:-1] - mid))
    if first or second:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", {"first": bool(first), "second": bool(second)})
    return _quiet(name)


PSR_CHECKERS = ("chen_chinen", "choo", "lakatos", "lakatos_losonczi_odd", "lakatos_losonczi_r", "kwon")


def psr_coefficient_tests(p: Polynomial, tol: float = DEFAULT_TOL, r: float | None = None) -> list[CriterionVerdict]:
    _need_degree(p)
    c = _psr_real(p, tol)
    if c is None:
        return [_na(name, "not a real PSR polynomial") for name in PSR_CHECKERS]
    return [chen_chinen(c), choo(c), lakatos(c), lakatos_losonczi_odd(c), lakatos_losonczi_r(c, r), kwon(c)]


# -- self-inversive polynomials ---------------------------------------------------


def _weiszfeld(w: np.ndarray, y: np.ndarray, steps: int = WEISZFELD_STEPS) -> np.ndarray:
    """Row-wise minimizer of sum_k w_k |a - y_k| over complex a."""
    a = np.sum(w * y, axis=-1) / np.sum(w, axis=-1)
    for _ in range(steps):
        d = np.maximum(np.abs(a[..., None] - y), 1e-300)
        q = w / d
        a = np.sum(q * y, axis=-1) / np.sum(q, axis=-1)
    return a


def _ab_sum(c: np.ndarray, a, targets: np.ndarray, idx: np.ndarray):
    """sum over idx of |a c_k - target_k|."""
    return np.sum(np.abs(np.asarray(a)[..., None] * c[idx] - targets[..., idx]), axis=-1)


def _best_a(c: np.ndarray, targets: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Weiszfeld a per row of targets, falling back to a = 1 when it is better."""
    nz = idx[c[idx] != 0]
    if nz.size == 0:
        return np.ones(targets.shape[:-1], dtype=complex)
    w = np.abs(c[nz])
    a = _weiszfeld(np.broadcast_to(w, targets[..., nz].shape), targets[..., nz] / c[nz])
    a = np.where(np.abs(a) > 1e-300, a, 1.0)
    better = _ab_sum(c, 1.0 + 0j, targets, idx) <= _ab_sum(c, a, targets, idx)
    return np.where(better, 1.0 + 0j, a)


def _witness_search(c: np.ndarray, make_targets, idx: np.ndarray, ts=(0.0,), extra_b=()):
    """Minimize sum |a c_k - T_k(b, t)| - t |c_n| over a, |b| = 1 and t in ``ts``.

    Every (t, b) pair of the base grid is solved in one vectorized Weiszfeld
    run; the best angle is then refined by zooming grids at fixed t.
    Returns (sum, a, b, t).
    """
    pn = abs(c[-1])
    thetas = 2 * math.pi * np.arange(SEARCH_GRID) / SEARCH_GRID
    b1 = np.concatenate([np.exp(1j * thetas), np.asarray(extra_b, dtype=complex)])
    ts = np.asarray(ts, dtype=float)
    B = np.tile(b1, ts.size)
    Tt = np.repeat(ts, b1.size)
    T = make_targets(B, Tt)
    a = _best_a(c, T, idx)
    s = _ab_sum(c, a, T, idx)
    obj = s - pn * Tt
    i = int(np.argmin(obj))
    best = (float(obj[i]), float(s[i]), complex(a[i]), complex(B[i]), float(Tt[i]))
    if i % b1.size < SEARCH_GRID:
        center, h = thetas[i % b1.size], 2 * math.pi / SEARCH_GRID
        for _ in range(ZOOM_LEVELS):
            th = center + np.linspace(-h, h, SEARCH_GRID)
            bb = np.exp(1j * th)
            tt = np.full(th.size, best[4])
            TT = make_targets(bb, tt)
            aa = _best_a(c, TT, idx)
            ss = _ab_sum(c, aa, TT, idx)
            j = int(np.argmin(ss))
            if ss[j] - pn * tt[j] < best[0]:
                best = (float(ss[j] - pn * tt[j]), float(ss[j]), complex(aa[j]), complex(bb[j]), best[4])
            center, h = th[j], 2 * h / (SEARCH_GRID - 1)
    return best[1:]


def _schinzel_witness(c, make, idx, witness):
    """(sum, a, b, searched); the fixed witness (1, 1) wins ties and is exact."""
    if witness is not None:
        a, b = complex(witness[0]), complex(witness[1])
        return float(_ab_sum(c, a, make(np.array([b])), idx)[0]), a, b, False
    s1 = float(_ab_sum(c, 1.0 + 0j, make(np.array([1.0 + 0j])), idx)[0])
    s, a, b, _ = _witness_search(c, lambda b, t: make(b), idx)
    if s1 <= s * (1 + WITNESS_MARGIN):
        return s1, 1.0 + 0j, 1.0 + 0j, False
    return s, a, b, True


def half_sum(c: np.ndarray) -> CriterionVerdict:
    name = "half_sum"
    slack = float(abs(c[-1]) - 0.5 * np.sum(np.abs(c[1:-1])))
    if slack >= 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", {"slack": slack})
    return _quiet(name, slack=slack)


def schinzel(c: np.ndarray, witness: tuple[complex, complex] | None = None) -> CriterionVerdict:
    """|p_n| >= inf_{a, |b| = 1} sum_{k=0}^{n} |a p_k - b^(n-k) p_n|, via a witness."""
    name = "schinzel"
    n = c.size - 1
    pn = c[-1]
    idx = np.arange(n + 1)
    powers = n - idx
    make = lambda b: (b[:, None] ** powers) * pn
    s, a, b, searched = _schinzel_witness(c, make, idx, witness)
    slack = float(abs(pn) - s)
    w = {"a": a, "b": b, "sum": s, "slack": slack}
    if slack >= (WITNESS_MARGIN * (abs(pn) + s) if searched else 0.0):
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", w)
    return _quiet(name, **w)


def _psr_rotations(c: np.ndarray, rtol: float = 1e-10) -> list[complex]:
    """Unit b with p(bz) a unit multiple of a real palindrome."""
    n = c.size - 1
    pn = c[-1]
    out = []
    for j in range(n):
        b = complex((c[0] / pn) ** (1.0 / n) * np.exp(2j * np.pi * j / n))
        r = c * b ** np.arange(n + 1)
        r = r / (r[-1] / abs(r[-1]))
        if np.max(np.abs(r.imag)) <= rtol * np.max(np.abs(r)) and np.allclose(r, r[::-1], rtol=0, atol=rtol * np.max(np.abs(r))):
            out.append(b)
    return out


def losonczi_schinzel_odd(c: np.ndarray, witness: tuple[complex, complex] | None = None) -> CriterionVerdict:
    """Odd degree n = 2m + 1: |p_n| >= cos^2(pi / (4(m+1))) sum_{k=1}^{n} |a p_k - b^(n-k) p_n|.

    Free witnesses (a, b) make this false: random cubics with zeros off the
    circle satisfy it.  It is used with a = 1 and b such that p(bz) is a unit
    times a real palindrome, where the sum is the Lakatos-Losonczi sum of that
    palindrome and the bound is known to hold.
    """
    name = "losonczi_schinzel_odd"
    n = c.size - 1
    if n % 2 == 0:
        return _na(name, "degree must be odd")
    m = (n - 1) // 2
    factor = math.cos(math.pi / (4 * (m + 1))) ** 2
    pn = c[-1]
    powers = n - np.arange(1, n + 1)
    rots = _psr_rotations(c)
    if witness is not None:
        a, b = complex(witness[0]), complex(witness[1])
        valid = a == 1 and any(abs(b - r) <= 1e-10 for r in rots)
        cands = [b]
    else:
        a, valid, cands = 1.0 + 0j, bool(rots), rots or [1.0 + 0j]
    sums = [float(np.sum(np.abs(a * c[1:] - b**powers * pn))) for b in cands]
    i = int(np.argmin(sums))
    s, b = sums[i], cands[i]
    slack = float(abs(pn) - factor * s)
    w = {"a": a, "b": b, "m": m, "sum": s, "slack": slack, "psr_rotation": valid}
    if valid and slack >= 0:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", w)
    return _quiet(name, **w)


def _abc_make(c: np.ndarray):
    n = c.size - 1
    pn = c[-1]
    powers = n - np.arange(n + 1)

    def make(b, t):
        base = np.repeat((pn * (1.0 - np.asarray(t, dtype=float)))[:, None], n + 1, axis=1).astype(complex)
        base[:, 0] = pn
        T = (b[:, None] ** powers) * base
        T[:, n] = pn
        return T

    return make


def lakatos_losonczi_abc(c: np.ndarray, witness: tuple[complex, complex, float] | None = None) -> CriterionVerdict:
    """|p_n + c| >= |a p_0 - b^n p_n| + sum_{k=1}^{n-1} |a p_k - b^(n-k) (p_n - c)| + |a p_n - p_n|

    with c = t p_n, 0 <= t <= 1.  The middle terms use (p_n - c); with the
    opposite sign the statement admits polynomials with zeros off the circle.
    """
    name = "lakatos_losonczi_abc"
    n = c.size - 1
    if n < 2:
        return _na(name, "degree must be >= 2")
    pn = c[-1]
    idx = np.arange(n + 1)
    if witness is not None:
        a, b, t = complex(witness[0]), complex(witness[1]), float(witness[2])
        if not 0.0 <= t <= 1.0 or a == 0:
            raise ValueError("witness needs a != 0 and 0 <= t <= 1")
        s = float(_ab_sum(c, a, _abc_make(c)(np.array([b]), np.array([t])), idx)[0])
        searched = False
    else:
        # fixed witnesses: Lakatos/Schinzel (a, b, t) = (1, 1, 0) and half-sum
        # (1, b0, 1) with b0^n p_n = p_0
        b0 = complex((c[0] / pn) ** (1.0 / n))
        cands = []
        for a_, b_, t_ in ((1.0 + 0j, 1.0 + 0j, 0.0), (1.0 + 0j, b0, 1.0)):
            s_ = float(_ab_sum(c, a_, _abc_make(c)(np.array([b_]), np.array([t_])), idx)[0])
            cands.append((s_ - abs(pn) * t_, 0, a_, b_, t_))
        fixed_best = min(x[0] for x in cands)
        s_, a_, b_, t_ = _witness_search(c, _abc_make(c), idx, ts=np.linspace(0.0, 1.0, 9), extra_b=(b0,))
        if s_ - abs(pn) * t_ < fixed_best - WITNESS_MARGIN * abs(pn):
            cands.append((s_ - abs(pn) * t_, 1, a_, b_, t_))
        _, kind, a, b, t = min(cands, key=lambda x: (x[0], x[1]))
        s = float(_ab_sum(c, a, _abc_make(c)(np.array([b]), np.array([t])), idx)[0])
        searched = kind == 1
    slack = float(abs(pn) * (1.0 + t) - s)
    w = {"a": a, "b": b, "c": t * pn, "sum": s, "slack": slack}
    if slack >= (WITNESS_MARGIN * (abs(pn) * (1.0 + t) + s) if searched else 0.0):
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unless_equality", w)
    return _quiet(name, **w)


def sinclair_vaaler(c: np.ndarray, r: float = 1.0) -> CriterionVerdict:
    """Monic SI: L^r <= 2 + 2^r (n-1)^(1-r) or L^r <= 2 + 2^r (l-2)^(1-r)."""
    name = "sinclair_vaaler"
    if r < 1:
        raise ValueError("r must be >= 1")
    n = c.size - 1
    if n < 2:
        return _na(name, "degree must be >= 2")
    m = c / c[-1]
    lr = float(np.sum(np.abs(m) ** r))
    l = int(np.count_nonzero(m))
    b1 = 2 + 2**r * (n - 1) ** (1 - r)
    b2 = math.inf if (l - 2 == 0 and r > 1) else 2 + 2**r * float(l - 2) ** (1 - r)
    w = {"r": r, "L_r": lr, "terms": l, "bound_degree": b1, "bound_terms": b2}
    if lr <= b1 or lr <= b2:
        return CriterionVerdict(name, True, True, "AllOnCircle", None, "unknown", w)
    return _quiet(name, **w)


def ohara_rodriguez(c: np.ndarray) -> CriterionVerdict:
    """Necessary conditions for all zeros on the circle, tested against a
    certified upper bound on max |p| over the circle."""
    name = "ohara_rodriguez"
    n = c.size - 1
    lo, hi = max_modulus_on_circle(Polynomial(c))
    a = np.abs(c)
    energy = float(np.sum(a**2))
    bad = []
    if energy > hi**2:
        bad.append("energy")
    for k in range(n + 1):
        bound = (math.sqrt(2) / 2 if 2 * k == n else 0.5) * hi
        if a[k] > bound:
            bad.append(f"coefficient_{k}")
    w = {"max_modulus_lower": lo, "max_modulus_upper": hi, "energy": energy, "violations": bad}
    if bad:
        return CriterionVerdict(name, True, True, "NotAllOnCircle", None, "unknown", w)
    return _quiet(name, **w)


SI_CHECKERS = ("half_sum", "schinzel", "losonczi_schinzel_odd", "lakatos_losonczi_abc", "sinclair_vaaler", "ohara_rodriguez")


def si_inequality_tests(
    p: Polynomial, tol: float = DEFAULT_TOL, r: float = 1.0, witness: tuple[complex, complex] | None = None
) -> list[CriterionVerdict]:
    """The SI sufficient tests; ``witness`` pins (a, b) for the Schinzel pair."""
    _need_degree(p)
    if not classify(p, tol).is_si:
        return [_na(name, "not SI") for name in SI_CHECKERS]
    c = p.coeffs.astype(complex)
    return [
        half_sum(c),
        schinzel(c, witness),
        losonczi_schinzel_odd(c, witness),
        lakatos_losonczi_abc(c),
        sinclair_vaaler(c, r),
        ohara_rodriguez(c),
    ]


def vieira_count(p: Polynomial, tol: float = DEFAULT_TOL) -> CriterionVerdict:
    """|p_{n-m}| >= (1/4) (n/(n-m)) L[p] gives exactly n - 2m zeros on the circle."""
    name = "vieira"
    n = _need_degree(p)
    if not classify(p, tol).is_si:
        return _na(name, "not SI")
    a = np.abs(p.coeffs)
    length = float(a.sum())
    for m in range(0, (n + 1) // 2):
        if a[n - m] >= 0.25 * n / (n - m) * length:
            return CriterionVerdict(name, True, True, "ExactOnCircle", n - 2 * m, "unless_equality", {"m": m})
    if n % 2 == 0 and a[n // 2] > 0.5 * length:
        return CriterionVerdict(name, True, True, "NoneOnCircle", None, "unknown", {"m": n // 2})
    return _quiet(name)


def losonczi_coefficients(alphas) -> Polynomial:
    """Coefficients p_k = (-1)^k sum_l C(m-k+2l, l) sigma_{k-2l}(alphas), mirrored.

    ``alphas`` holds 2m reals of modulus at most 2 and m = len(alphas) / 2.
    """
    al = np.asarray(alphas, dtype=float).ravel()
    if al.size == 0 or al.size % 2:
        raise ValueError("need an even, positive number of alphas")
    if np.any(np.abs(al) > 2):
        raise ValueError("every alpha must satisfy |alpha| <= 2")
    m = al.size // 2
    sigma = np.zeros(al.size + 1)
    sigma[0] = 1.0
    for x in al:
        sigma[1:] = sigma[1:] + x * sigma[:-1]
    out = np.zeros(2 * m + 1)
    for k in range(m + 1):
        s = sum(math.comb(m - k + 2 * l, l) * sigma[k - 2 * l] for l in range(k // 2 + 1))
        out[k] = out[2 * m - k] = (-1) ** k * s
    return Polynomial(out)


def binomial_bound_check(p: Polynomial, tol: float = DEFAULT_TOL) -> CriterionVerdict:
    """Monic SR with all zeros on the circle has real coefficients, |p_k| <= C(n, k)."""
    name = "binomial_bound"
    n = _need_degree(p)
    if not classify(p, tol).is_sr:
        return _na(name, "not SR")
    m = p.coeffs / p.coeffs[-1]
    nonreal = bool(np.any(np.abs(m.imag) > tol * max(1.0, float(np.abs(m).max()))))
    over = [k for k in range(n + 1) if abs(m[k]) > math.comb(n, k) * (1 + 1e-12)]
    w = {"nonreal": nonreal, "violations": over}
    if nonreal or over:
        return CriterionVerdict(name, True, True, "NotAllOnCircle", None, "unknown", w)
    return _quiet(name, **w)


def descartes_bound(p: Polynomial) -> CriterionVerdict:
    name = "descartes"
    _need_degree(p)
    if not p.is_real():
        return _na(name, "non-real coefficients")
    s = np.sign(p.coeffs.real)
    s = s[s != 0]
    v = int(np.count_nonzero(s[1:] != s[:-1]))
    return CriterionVerdict(name, True, True, "UpperBoundPositiveRealZeros", v, "unknown", {"variations": v})


# -- Sturm sequences in exact arithmetic ------------------------------------------


def _frac_poly(c) -> list[Fraction]:
    out = [Fraction(float(x)) for x in c]
    while out and out[-1] == 0:
        out.pop()
    return out


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[shift + i] -= f * x
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _frac_eval(c: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for k in reversed(c):
        acc = acc * x + k
    return acc


def sturm_sequence(p: Polynomial) -> list[list[Fraction]]:
    """S_0 = p, S_1 = p', S_{k+1} = -rem(S_{k-1}, S_k) with exact rationals.

    Raises ValueError if p is not square-free (the last remainder is not constant).
    """
    if not p.is_real():
        raise ValueError("Sturm sequences need real coefficients")
    s0 = _frac_poly(p.coeffs.real)
    if len(s0) < 2:
        raise ValueError("needs degree >= 1")
    s1 = [k * x for k, x in enumerate(s0)][1:]
    seq = [s0, s1]
    while True:
        r = _frac_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    if len(seq[-1]) > 1:
        raise ValueError("polynomial is not square-free; divide out the repeated factor first")
    return seq


def _variations(seq, x: Fraction) -> int:
    vals = [_frac_eval(s, x) for s in seq]
    signs = [v > 0 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Polynomial, a: float, b: float) -> CriterionVerdict:
    """Exact number of distinct real zeros in (a, b]."""
    name = "sturm"
    if not a < b:
        raise ValueError("need a < b")
    seq = sturm_sequence(p)
    for x in (a, b):
        val = abs(evaluate(p, x))
        scale = float(np.sum(np.abs(p.coeffs) * abs(x) ** np.arange(p.coeffs.size)))
        if val <= STURM_ENDPOINT_RTOL * scale:
            raise ValueError(f"p is (nearly) zero at the endpoint {x!r}; perturb the interval")
    count = _variations(seq, Fraction(a)) - _variations(seq, Fraction(b))
    return CriterionVerdict(
        name, True, True, "ExactRealZerosInInterval", count, "yes", {"a": float(a), "b": float(b)}
    )


def sturm_chebyshev(p: Polynomial, tol: float = DEFAULT_TOL) -> CriterionVerdict:
    """Zeros on the circle of an even-degree PSR p from the real zeros of q in (-2, 2].

    Each simple zero of q strictly between -2 and 2 accounts for a conjugate
    pair e^{+-i theta} of zeros of p.
    """
    name = "sturm_chebyshev"
    n = _need_degree(p)
    rep = classify(p, tol)
    if not rep.is_psr or n % 2:
        return _na(name, "needs an even-degree PSR polynomial")
    scale = float(np.abs(p.coeffs).sum())
    if min(abs(evaluate(p, 1.0)), abs(evaluate(p, -1.0))) <= STURM_ENDPOINT_RTOL * scale:
        return _na(name, "p vanishes at +1 or -1")
    q = psr_to_q(p, tol).q
    try:
        v = sturm_count(q, -2.0, 2.0)
    except ValueError as e:
        return _na(name, str(e))
    return CriterionVerdict(name, True, True, "ExactOnCircle", 2 * v.count, "unknown", {"q_zeros": v.count})


# -- referee ----------------------------------------------------------------------


@dataclass(frozen=True)
class Zones:
    """Oracle counts split by distance to the circle.

    ``on`` roots are within tol; ``amb_in``/``amb_out`` sit in the guard band
    on either side and may be counted as on the circle or off it.
    """

    n: int
    on: int
    inside: int
    outside: int
    amb_in: int
    amb_out: int


def zones(rs: RootSet, tol: float = LOCATION_TOL) -> Zones:
    guard = GUARD_FACTOR * tol
    on = inside = outside = ai = ao = 0
    for r in rs.roots:
        d = abs(r.value) - 1.0
        m = r.multiplicity
        if abs(d) <= tol:
            on += m
        elif d < -guard:
            inside += m
        elif d > guard:
            outside += m
        elif d < 0:
            ai += m
        else:
            ao += m
    return Zones(rs.degree, on, inside, outside, ai, ao)


def _positive_reals(rs: RootSet, tol: float) -> tuple[int, int]:
    sure = maybe = 0
    for r in rs.roots:
        z = r.value
        if abs(z.imag) <= tol * (1 + abs(z)) and z.real > tol:
            sure += r.multiplicity
        elif abs(z.imag) <= GUARD_FACTOR * tol * (1 + abs(z)) and z.real > -GUARD_FACTOR * tol:
            maybe += r.multiplicity
    return sure, maybe


def _reals_in(rs: RootSet, a: float, b: float, tol: float) -> tuple[int, int]:
    sure = maybe = 0
    g = GUARD_FACTOR * tol
    for r in rs.roots:
        z = r.value
        if abs(z.imag) > g * (1 + abs(z)):
            continue
        near_end = min(abs(z.real - a), abs(z.real - b)) <= g * (1 + abs(z))
        real_sure = abs(z.imag) <= tol * (1 + abs(z))
        # distinct zeros: Sturm counts each once
        if a < z.real <= b and real_sure and not near_end:
            sure += 1
        elif a - g <= z.real <= b + g:
            maybe += 1
    return sure, maybe


def contradicts(v: CriterionVerdict, rs: RootSet, tol: float = LOCATION_TOL) -> bool:
    """True when the oracle rules out the verdict's conclusion."""
    if not v.fired:
        return False
    z = zones(rs, tol)
    c, k = v.conclusion, v.count
    in_lo, in_hi = z.inside, z.inside + z.amb_in
    out_lo, out_hi = z.outside, z.outside + z.amb_out
    on_lo, on_hi = z.on, z.on + z.amb_in + z.amb_out
    if c == "AllOnCircle":
        return z.inside + z.outside > 0
    if c == "AllInOrOnCircle":
        return z.outside > 0
    if c == "AllOnOrOutCircle":
        return z.inside > 0
    if c == "NotAllOnCircle":
        return z.on == z.n
    if c == "NoneOnCircle":
        return z.on > 0
    if c == "ExactOnCircle":
        return not on_lo <= k <= on_hi
    if c == "ExactInside":
        # zeros within the guard band may sit on either side
        return z.inside > k or z.outside > z.n - k
    if c == "OnOrSymmetric":
        N = v.witness["inside_among_rest"]
        rest = z.n - k
        for s in range(0, k // 2 + 1):
            if in_lo <= N + s <= in_hi and out_lo <= rest - N + s <= out_hi:
                return False
        return True
    if c == "UpperBoundPositiveRealZeros":
        sure, _ = _positive_reals(rs, tol)
        return sure > k
    if c == "ExactRealZerosInInterval":
        sure, maybe = _reals_in(rs, v.witness["a"], v.witness["b"], tol)
        return not sure <= k <= sure + maybe
    return False


@dataclass(frozen=True)
class BatteryReport:
    verdicts: tuple[CriterionVerdict, ...]
    location: LocationSummary
    incidents: tuple[str, ...]

    @property
    def fired(self) -> list[str]:
        return [v.criterion for v in self.verdicts if v.fired]

    def to_dict(self) -> dict:
        return {
            "verdicts": [v.to_dict() for v in self.verdicts],
            "location": self.location.to_dict(),
            "incidents": list(self.incidents),
        }


CRITERIA = tuple(
    sorted(
        ("rouche", "enestrom_kakeya", "cohn", "marden_jury", "vieira", "binomial_bound", "descartes", "sturm_chebyshev")
        + PSR_CHECKERS
        + SI_CHECKERS
    )
)


def run_checkers(p: Polynomial, tol: float = DEFAULT_TOL) -> list[CriterionVerdict]:
    out = [
        rouche_dominant(p),
        enestrom_kakeya(p),
        cohn_full(p, tol),
        marden_jury(p)[1],
        vieira_count(p, tol),
        binomial_bound_check(p, tol),
        descartes_bound(p),
        sturm_chebyshev(p, tol),
    ]
    out += psr_coefficient_tests(p, tol)
    out += si_inequality_tests(p, tol)
    return sorted(out, key=lambda v: v.criterion)


def battery(p: Polynomial, tol: float = DEFAULT_TOL, loc_tol: float = LOCATION_TOL,
            names: tuple[str, ...] | None = None) -> BatteryReport:
    """Run every checker (or those in ``names``) and referee them with the oracle."""
    if names is not None:
        unknown = set(names) - set(CRITERIA)
        if unknown:
            raise ValueError(f"unknown criteria {sorted(unknown)}; choose from {CRITERIA}")
    rs = find_roots(p)
    verdicts = [v for v in run_checkers(p, tol) if names is None or v.criterion in names]
    incidents = tuple(f"{v.criterion}: {v.label}" for v in verdicts if contradicts(v, rs, loc_tol))
    return BatteryReport(tuple(verdicts), locate(rs, loc_tol), incidents)
