import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from polysym.catalog import lehmer
from polysym.criteria import (
    CRITERIA,
    CriterionVerdict,
    battery,
    binomial_bound_check,
    chen_generate,
    cohn_full,
    contradicts,
    descartes_bound,
    enestrom_kakeya,
    lakatos,
    lakatos_losonczi_r,
    losonczi_coefficients,
    losonczi_schinzel_odd,
    marden_jury,
    psr_coefficient_tests,
    rouche_dominant,
    schinzel,
    si_inequality_tests,
    sturm_chebyshev,
    sturm_count,
    vieira_count,
)
from polysym.polycore import Polynomial
from polysym.roots import find_roots, locate
from polysym.sampling import (
    random_lakatos_like,
    random_psr,
    random_psr_circle_product,
    random_roots_away,
)
from polysym.symmetry import psr_to_q

import oracles

seeds = st.integers(0, 2**32 - 1)
P = Polynomial


def by_name(verdicts):
    return {v.criterion: v for v in verdicts}


def test_verdict_invariants():
    with pytest.raises(ValueError):
        CriterionVerdict("x", False, fired=True, conclusion="AllOnCircle")
    with pytest.raises(ValueError):
        CriterionVerdict("x", True, fired=False, conclusion="AllOnCircle")
    with pytest.raises(ValueError):
        CriterionVerdict("x", True, fired=True, conclusion="ExactInside")
    assert CriterionVerdict("x", True, True, "ExactInside", 2).label == "ExactInside(2)"


def test_rouche():
    assert rouche_dominant(P([1, 1, 4])).label == "ExactInside(2)"
    assert rouche_dominant(P([4, 1, 1])).label == "ExactInside(0)"
    assert not rouche_dominant(P([1, 1])).fired
    # the modulus-of-sum reading would fire here although the zeros are on the circle
    assert not rouche_dominant(P([1, 0.1, -1])).fired


def test_enestrom_kakeya():
    assert enestrom_kakeya(P([1, 2, 3])).conclusion == "AllInOrOnCircle"
    assert enestrom_kakeya(P([3, 2, 1])).conclusion == "AllOnOrOutCircle"
    v = enestrom_kakeya(P([1, 1, 1]))
    assert v.conclusion == "AllOnCircle" and v.witness["ascending"] and v.witness["descending"]
    assert not enestrom_kakeya(P([1, 1j])).applicable


def test_cohn():
    assert cohn_full(P([1, 0, 1])).conclusion == "AllOnCircle"
    assert cohn_full(P([1, 4, 1])).conclusion == "NotAllOnCircle"
    assert cohn_full(P([-1, -1, 0, 1])).conclusion == "NotAllOnCircle"


def test_marden_jury_examples():
    seq, v = marden_jury(P([-0.25, 0, 1]))
    assert seq.deltas == pytest.approx((-15 / 16, 225 / 256))
    assert seq.schur_products == pytest.approx((-15 / 16, -15 * 225 / 4096))
    assert v.label == "ExactInside(2)"
    assert marden_jury(P([1, 0, 1]))[1].label == "OnOrSymmetric(2)"
    assert marden_jury(P([1, 2, 3]))[1].label == "ExactInside(2)"


@given(seeds, st.integers(1, 8))
def test_marden_jury_matches_oracle(seed, n):
    p = random_roots_away(np.random.default_rng(seed), n)
    v = marden_jury(p)[1]
    assert v.conclusion == "ExactInside" and v.count == oracles.counts(p.coeffs)[0]


def test_chen_generate():
    assert chen_generate(P([0.5, 1]), 1, 1) == P([1, 1, 1])
    p = chen_generate(P([0.3j, 1]), 2, 1j)
    assert p.degree == 3 and locate(find_roots(p)).on_circle == 3
    with pytest.raises(ValueError):
        chen_generate(P([1]), 0, 1)
    with pytest.raises(ValueError):
        chen_generate(P([2, 1]), 0, 1)


def test_psr_examples():
    v = by_name(psr_coefficient_tests(P([1, 1, 1, 1])))
    assert v["lakatos"].conclusion == "AllOnCircle"
    assert v["lakatos_losonczi_odd"].conclusion == "AllOnCircle"
    assert v["lakatos_losonczi_odd"].witness["cos2_phi"] == pytest.approx(math.cos(math.pi / 8) ** 2)
    assert by_name(psr_coefficient_tests(P([1, 1, 1])))["choo"].conclusion == "AllOnCircle"
    assert by_name(psr_coefficient_tests(P([2, 1, 0, 1, 2])))["chen_chinen"].conclusion == "AllOnCircle"
    assert not any(v.applicable for v in psr_coefficient_tests(P([1, 2, 3])))


def test_si_examples():
    v = by_name(si_inequality_tests(P([1, 1, 1, 1])))
    assert v["half_sum"].conclusion == "AllOnCircle"
    assert not by_name(si_inequality_tests(P([1, 1])))["ohara_rodriguez"].fired
    assert by_name(si_inequality_tests(P([1, 1, 1])))["sinclair_vaaler"].conclusion == "AllOnCircle"
    assert not any(v.applicable for v in si_inequality_tests(P([1, 2, 3])))


def test_abc_counterexample_does_not_fire():
    # zeros off the circle; the sign-flipped (a, b, c) inequality would accept it
    p = P([1, -1, -1, -1, 1])
    assert locate(find_roots(p)).on_circle < 4
    assert not by_name(si_inequality_tests(p))["lakatos_losonczi_abc"].fired


def test_vieira():
    assert vieira_count(P([1, 1, 1, 1])).label == "ExactOnCircle(3)"
    assert vieira_count(P([1, 10, 1])).label == "NoneOnCircle"


def test_losonczi_coefficients():
    assert losonczi_coefficients([1, 1]) == P([1, -2, 1])
    assert losonczi_coefficients([0, 0]) == P([1, 0, 1])
    anomaly = losonczi_coefficients([2, 2])
    assert anomaly == P([1, -4, 1])
    assert locate(find_roots(anomaly)).on_circle == 0
    with pytest.raises(ValueError):
        losonczi_coefficients([3, 0])


def test_binomial_bound():
    assert not binomial_bound_check(P([1, 1, 1])).fired
    assert not binomial_bound_check(P([1, 4, 6, 4, 1])).fired
    assert binomial_bound_check(P([1, -4, 1])).conclusion == "NotAllOnCircle"


def test_descartes():
    assert descartes_bound(P([-1, -1, 1])).count == 1
    assert descartes_bound(P([1, 1, 1])).count == 0
    assert descartes_bound(P([1, -3, 1])).count == 2


def test_sturm():
    assert sturm_count(P([-2, 0, 1]), 0, 2).count == 1
    assert sturm_count(P([1, 1, 1]), -2, 0).count == 0
    q = psr_to_q(P([1, 1, 1, 1, 1])).q
    assert sturm_count(q, -2, 2).count == 2
    assert sturm_chebyshev(P([1, 1, 1, 1, 1])).label == "ExactOnCircle(4)"
    with pytest.raises(ValueError):
        sturm_count(P([-1, 0, 1]), 1, 2)
    with pytest.raises(ValueError):
        sturm_count(P([1, 2, 1]), -3, 0)


def test_battery_examples():
    rep = battery(P([1, 1, 1]))
    assert len(rep.fired) > 3 and not rep.incidents
    rep = battery(lehmer())
    assert not rep.incidents
    assert not any(v.fired and v.conclusion == "AllOnCircle" for v in rep.verdicts)
    assert [v.criterion for v in rep.verdicts] == sorted(v.criterion for v in rep.verdicts)
    with pytest.raises(ValueError):
        battery(P([1, 1]), names=("nope",))
    assert {v.criterion for v in battery(P([1, 1]), names=("rouche",)).verdicts} == {"rouche"}
    assert set(CRITERIA) >= {"schinzel", "marden_jury", "kwon"}


def test_referee_flags_false_claim():
    rs = find_roots(P([1, -4, 1]))
    fake = CriterionVerdict("x", True, True, "AllOnCircle")
    assert contradicts(fake, rs)
    near = find_roots(P.from_roots([1 + 5e-9, 1j]))  # inside the guard band
    assert not contradicts(CriterionVerdict("x", True, True, "ExactInside", 0, witness={"none_on_circle": True}), near)


@given(seeds, st.integers(3, 12))
def test_schinzel_one_one_iff_lakatos(seed, n):
    p = random_lakatos_like(np.random.default_rng(seed), n)
    c = p.coeffs.real
    assert schinzel(p.coeffs, witness=(1, 1)).fired == lakatos(c).fired


@given(seeds, st.integers(3, 12))
def test_r_zero_reproduces_lakatos(seed, n):
    p = random_lakatos_like(np.random.default_rng(seed), n)
    c = p.coeffs.real
    assert lakatos_losonczi_r(c, r=0.0).fired == lakatos(c).fired


@given(seeds, st.integers(1, 8))
def test_sturm_counts_circle_pairs(seed, m):
    p = random_psr_circle_product(np.random.default_rng(seed), m)
    q = psr_to_q(p).q
    eps = 1e-6
    count = sturm_count(q, -2 - eps, 2 + eps).count
    on = sum(r.multiplicity for r in find_roots(p).roots if abs(abs(r.value) - 1) < 1e-8 and r.multiplicity == 1)
    assert count == on // 2


@given(seeds, st.integers(1, 10))
def test_battery_sound_on_psr(seed, n):
    assert not battery(random_psr(np.random.default_rng(seed), n)).incidents


def test_losonczi_schinzel_odd_rotated_palindrome():
    assert losonczi_schinzel_odd(np.array([1.0, 1, 1, 1], complex)).fired
    b = np.exp(0.7j)
    rotated = np.array([1.0, 1, 1, 1]) * np.exp(0.3j) * np.conj(b) ** np.arange(4)
    v = losonczi_schinzel_odd(rotated)
    assert v.fired and abs(v.witness["b"] - b) < 1e-9


def test_losonczi_schinzel_odd_free_witness_is_not_trusted():
    # SI cubic with zeros of modulus 1.3085 and 0.7642; a free (a, b) search
    # would satisfy the inequality here
    c = np.array([0.13522079 - 0.62693036j, -0.77589 + 0.85039065j, 0.72554148 - 0.89373324j, -0.59984796 + 0.22695541j])
    assert not losonczi_schinzel_odd(c).fired
    assert not losonczi_schinzel_odd(c, (0.5709396903525543 + 0.1397825115880878j, -0.9852191366241018 + 0.1712987239580593j)).fired
