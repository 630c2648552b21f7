"""Membership criteria, sharp bounds and extremal functions for both families."""

import math

import numpy as np
import pytest

from pvalent import (
    ClassParams,
    budget_certified,
    check_p_membership,
    check_r_membership,
    coeff_bound_p,
    coeff_bound_r,
    extremal_p,
    extremal_r,
    make_series,
    r_criterion_term,
    random_member,
    random_params,
    zf_prime_over_p,
)
from pvalent.classes import log_r_criterion_term
from pvalent.errors import ParameterOutOfRangeError, ValenceMismatchError
from pvalent.series import CoefficientSeries

CANONICAL = ClassParams()


def test_canonical_criterion_terms_frozen():
    assert r_criterion_term(2, CANONICAL) == 4.0
    assert r_criterion_term(3, CANONICAL) == 18.0


def test_canonical_bounds_frozen():
    assert coeff_bound_r(2, CANONICAL) == 0.25
    assert coeff_bound_p(2, CANONICAL) == 0.125


def test_log_term_consistent_with_term(rng):
    for _ in range(30):
        cp = random_params(rng)
        k = cp.p + int(rng.integers(1, 10))
        assert log_r_criterion_term(k, cp) == pytest.approx(
            math.log(r_criterion_term(k, cp)), abs=1e-12
        )


def test_extremal_saturates_and_flips():
    rep = check_r_membership(extremal_r(2, CANONICAL), CANONICAL)
    assert rep.member and rep.margin == 0.0
    bumped = make_series(1, [(2, 0.25 * (1.0 + 1e-9))])
    assert not check_r_membership(bumped, CANONICAL).member


def test_flip_holds_across_random_configs(rng):
    for _ in range(50):
        cp = random_params(rng)
        k = cp.p + int(rng.integers(1, 8))
        assert check_r_membership(extremal_r(k, cp), cp).member
        bumped = make_series(cp.p, [(k, coeff_bound_r(k, cp) * (1.0 + 1e-9))])
        assert not check_r_membership(bumped, cp).member


def test_membership_report_shape():
    f = make_series(1, [(2, 0.1), (3, 0.01)])
    rep = check_r_membership(f, CANONICAL)
    assert rep.sum == pytest.approx(0.1 * 4.0 + 0.01 * 18.0, rel=1e-15)
    assert rep.margin == pytest.approx(1.0 - rep.sum, rel=1e-15)
    assert [k for k, _ in rep.per_term] == [2, 3]
    d = rep.to_dict()
    assert set(d) == {"sum", "member", "margin", "per_term"}


def test_sum_scales_linearly(rng):
    """Scaling every coefficient by t scales the criterion sum by t."""
    for _ in range(20):
        cp = random_params(rng)
        f = random_member(cp, rng)
        t = 0.5  # power of two keeps the products exact
        g = CoefficientSeries(p=f.p, coeffs={k: t * a for k, a in f.coeffs.items()})
        assert check_r_membership(g, cp).sum == t * check_r_membership(f, cp).sum


def test_p_family_matches_mapped_r_family(rng):
    for _ in range(50):
        cp = random_params(rng)
        f = random_member(cp, rng)
        via_p = check_p_membership(f, cp)
        via_r = check_r_membership(zf_prime_over_p(f), cp)
        assert via_p.sum == via_r.sum
        assert via_p.per_term == via_r.per_term


def test_extremal_p_saturates(rng):
    for _ in range(20):
        cp = random_params(rng)
        k = cp.p + int(rng.integers(1, 6))
        rep = check_p_membership(extremal_p(k, cp), cp)
        assert abs(rep.margin) <= 1e-12


def test_random_member_is_member(rng):
    for _ in range(50):
        cp = random_params(rng)
        f = random_member(cp, rng)
        assert check_r_membership(f, cp).member


def test_random_member_target_sum(rng):
    cp = random_params(rng)
    f = random_member(cp, rng, target_sum=0.7)
    assert check_r_membership(f, cp).sum == pytest.approx(0.7, rel=1e-12)


def test_random_params_ranges(rng):
    for _ in range(100):
        cp = random_params(rng, max_p=4)
        assert 1 <= cp.p <= 4
        assert 0.0 <= cp.alpha < cp.p
        assert -1.0 <= cp.B < cp.A <= 1.0
        assert 0.0 <= cp.mu < 1.0
        assert 0.0 <= cp.delta <= 1.0


def test_random_params_budget_requirement(rng):
    for _ in range(30):
        cp = random_params(rng, require_budget_orders=(0, 1))
        assert budget_certified(cp, 0) and budget_certified(cp, 1)


def test_budget_certified_cases():
    assert budget_certified(CANONICAL, 0)
    assert budget_certified(CANONICAL, 1)
    # heavy damping with delta=0 makes the tail terms shrink
    assert not budget_certified(ClassParams(mu=0.9, delta=0.0), 1)


def test_class_params_validation():
    with pytest.raises(ParameterOutOfRangeError):
        ClassParams(alpha=1.0)  # alpha must stay below p
    with pytest.raises(ParameterOutOfRangeError):
        ClassParams(A=-1.0, B=-1.0)  # need B < A
    with pytest.raises(ParameterOutOfRangeError):
        ClassParams(B=-1.5)
    with pytest.raises(ParameterOutOfRangeError):
        ClassParams(A=1.2)
    with pytest.raises(ParameterOutOfRangeError):
        ClassParams(p=0)


def test_valence_mismatch_rejected():
    with pytest.raises(ValenceMismatchError):
        check_r_membership(make_series(2, [(3, 0.1)]), CANONICAL)


def test_scale_and_rafid_accessors():
    cp = ClassParams(p=2, alpha=0.5, A=0.8, B=-0.4, mu=0.1, delta=0.6)
    assert cp.scale == pytest.approx((0.8 + 0.4) * (2 - 0.5), rel=1e-15)
    assert cp.rafid.mu == 0.1 and cp.rafid.delta == 0.6
