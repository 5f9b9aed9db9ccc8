"""The thirteen acceptance criteria, each at its stated tolerance.

Run with pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import math
import time
from collections import Counter

import numpy as np
import pytest

from polysym.bethe import build_instance, delta_grid, phase_check
from polysym.catalog import SMYTH, LEHMER, cyclotomic, hermite, lehmer, smyth
from polysym.criteria import battery, marden_jury, sturm_count
from polysym.mahler import bailey_broadhurst_check, bailey_broadhurst_residual, canonical_form, family_search, mahler_measure
from polysym.mobius import root_mapping_check, transform_Q, transform_T
from polysym.polycore import Polynomial, evaluate
from polysym.roots import find_roots, locate
from polysym.sampling import random_psr, random_roots_away, random_sc, random_si, sweep_polynomial
from polysym.symmetry import classify, psr_to_q

LAMBDA = 1.17628081826
SIGMA = 1.32471795724

# Mobius-transformed Hermite polynomials H_0..H_4 as tabulated
HERMITE_T = (
    (1,),
    (-2j, -2j),
    (-6, -4, -6),
    (20j, 12j, 12j, 20j),
    (76, 16, 72, 16, 76),
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (bool(ok), detail)
    assert ok, detail


def c01_hermite_table():
    t = time.perf_counter()
    rows = [transform_T(hermite(n)).poly for n in range(5)]
    dt = time.perf_counter() - t
    exact = all(p == Polynomial(ref) for p, ref in zip(rows, HERMITE_T))
    integral = all(np.all(p.coeffs == np.round(p.coeffs.real) + 1j * np.round(p.coeffs.imag)) for p in rows)
    record(1, exact and integral and dt < 1.0, f"table reproduced={exact}, integer={integral}, {dt:.3f}s")


def c02_constants():
    s = mahler_measure(smyth()).measure
    l = mahler_measure(lehmer()).measure
    ok = abs(s - SIGMA) <= 1e-9 and abs(l - LAMBDA) <= 1e-9
    record(2, ok, f"M[z^3-z-1]={s:.12f}, M[Lehmer]={l:.12f}")


def c03_bailey_broadhurst():
    r = bailey_broadhurst_check()
    c = bailey_broadhurst_residual(1.2)
    record(3, r < 1e-6 and c > 1e-2, f"residual={r:.2e}, control(1.2)={c:.3g}")


def c04_cyclotomic():
    t = time.perf_counter()
    bad = []
    for n in range(1, 31):
        p = cyclotomic(n)
        if n > 1 and not classify(p).is_psr:
            bad.append((n, "psr"))
        z = find_roots(p).values()
        if np.max(np.abs(np.abs(z) - 1)) > 1e-10:
            bad.append((n, "circle"))
        if abs(mahler_measure(p).measure - 1) > 1e-9:
            bad.append((n, "measure"))
    dt = time.perf_counter() - t
    record(4, not bad and dt < 5.0, f"failures={bad}, {dt:.2f}s")


def c05_lehmer_search():
    t = time.perf_counter()
    r = family_search(10, 1, "psr")
    dt = time.perf_counter() - t
    ok = (
        r.candidates_examined == 243
        and r.argmin == (canonical_form(LEHMER),)
        and abs(r.minimum_measure_above_one - LAMBDA) <= 1e-9
        and dt < 60
    )
    record(5, ok, f"examined={r.candidates_examined}, argmin={r.argmin}, min={r.minimum_measure_above_one}, {dt:.2f}s")


def c06_smyth_search():
    r = family_search(3, 1, "non-sr")
    ok = abs(r.minimum_measure_above_one - SIGMA) <= 1e-9 and canonical_form(SMYTH) in r.argmin
    record(6, ok, f"min={r.minimum_measure_above_one}, argmin={r.argmin}")


def c07_marden_jury():
    rng = np.random.default_rng(7)
    agree = 0
    for _ in range(1000):
        p = random_roots_away(rng, int(rng.integers(1, 9)), gap=1e-3)
        v = marden_jury(p)[1]
        truth = locate(find_roots(p)).inside
        agree += v.conclusion == "ExactInside" and v.count == truth
    record(7, agree == 1000, f"{agree}/1000 agree")


def c08_soundness_sweep():
    rng = np.random.default_rng(8)
    incidents, fired = [], Counter()
    t = time.perf_counter()
    for i in range(10_000):
        p = sweep_polynomial(rng)
        rep = battery(p)
        fired.update(rep.fired)
        if rep.incidents:
            incidents.append((i, rep.incidents))
    dt = time.perf_counter() - t
    record(8, not incidents, f"incidents={incidents[:5]} ({len(incidents)}), checkers fired={sum(fired.values())}, {dt:.1f}s")


def c09_bethe_phase_map():
    t = time.perf_counter()
    deltas = delta_grid(-3.0, 3.0, 0.1)
    checked, failures = 0, []
    for L in range(3, 11):
        for a in range(1, L + 1):
            for d in deltas:
                inst = build_instance(L, a, d)
                if inst.degenerate:
                    break
                v = phase_check(inst)
                if v.agrees is None:
                    continue
                checked += 1
                if not v.agrees:
                    failures.append((L, a, d, v.predicted, v.observed))
    dt = time.perf_counter() - t
    record(9, not failures and dt < 120, f"{checked} predictions, failures={failures}, {dt:.1f}s")


def c10_isomorphism():
    rng = np.random.default_rng(10)
    worst_res = worst_pair = 0.0
    done = 0
    while done < 500:
        p = random_si(rng, int(rng.integers(1, 11)))
        if abs(evaluate(p, 1.0)) < 1e-8 * p.height:
            continue
        q = transform_Q(p)
        rep = classify(q.poly)
        if not rep.is_sc:
            worst_res = math.inf
        worst_res = max(worst_res, rep.residual_sc)
        worst_pair = max(worst_pair, root_mapping_check(p, q))
        s = random_sc(rng, int(rng.integers(1, 11)))
        if abs(evaluate(s, -1j)) < 1e-8 * s.height:
            continue
        t = transform_T(s)
        rep = classify(t.poly)
        if not rep.is_si:
            worst_res = math.inf
        worst_res = max(worst_res, rep.residual_si)
        worst_pair = max(worst_pair, root_mapping_check(s, t))
        done += 1
    record(10, worst_res < 1e-10 and worst_pair < 1e-8, f"max residual={worst_res:.2e}, max pairing={worst_pair:.2e}")


def c11_odd_degree():
    rng = np.random.default_rng(11)
    miss_sc = miss_si = 0
    for _ in range(500):
        n = 2 * int(rng.integers(0, 5)) + 1
        z = find_roots(random_sc(rng, n)).values()
        miss_sc += np.min(np.abs(z.imag)) >= 1e-8
        z = find_roots(random_si(rng, n)).values()
        miss_si += np.min(np.abs(np.abs(z) - 1)) >= 1e-8
    record(11, miss_sc == 0 and miss_si == 0, f"SC misses={miss_sc}, SI misses={miss_si}")


def c12_cohn_count():
    rng = np.random.default_rng(12)
    tol = 1e-8
    bad = []
    for i in range(500):
        p = random_si(rng, int(rng.integers(1, 11)))
        n = p.degree
        k = locate(find_roots(p), tol).on_circle
        if n == 1:
            l = 0
        else:
            loc = locate(find_roots(p.derivative()), tol)
            l = loc.inside + loc.on_circle
        if n != 2 * (l + 1) - k:
            bad.append((i, n, k, l))
    record(12, not bad, f"violations={bad[:5]} ({len(bad)})")


def c13_chebyshev():
    rng = np.random.default_rng(13)
    eps = 1e-9
    bad_id, bad_count, done = 0, [], 0
    while done < 200:
        m = int(rng.integers(1, 11))
        p = random_psr(rng, 2 * m)
        red = psr_to_q(p)
        z = np.exp(2j * np.pi * np.arange(64) / 64 + 0.1j)
        err = np.max(np.abs(evaluate(red.q, z + 1 / z) * z**m - evaluate(p, z)))
        bad_id += err > 1e-10 * p.height
        rs = find_roots(p)
        simple_on = sum(1 for r in rs.roots if r.multiplicity == 1 and abs(abs(r.value) - 1) <= 1e-8)
        try:
            c = sturm_count(red.q, -2 - eps, 2 + eps).count
        except ValueError:
            continue  # q not square-free or vanishing at an endpoint
        if 2 * c != simple_on:
            bad_count.append((m, c, simple_on))
        done += 1
    record(13, bad_id == 0 and not bad_count, f"identity failures={bad_id}, count mismatches={bad_count[:5]}")


CRITERIA = [
    c01_hermite_table,
    c02_constants,
    c03_bailey_broadhurst,
    c04_cyclotomic,
    c05_lehmer_search,
    c06_smyth_search,
    c07_marden_jury,
    c08_soundness_sweep,
    c09_bethe_phase_map,
    c10_isomorphism,
    c11_odd_degree,
    c12_cohn_count,
    c13_chebyshev,
]


@pytest.mark.parametrize("check", CRITERIA, ids=[f.__name__ for f in CRITERIA])
def test_acceptance(check):
    check()


def summary_lines() -> list[str]:
    return [f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}" for n, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for check in CRITERIA:
        try:
            check()
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
