"""Distortion bounds, their certification premise, and the three radii."""

import math
import warnings

import pytest

from pvalent import (
    ClassParams,
    budget_certified,
    check_r_membership,
    derivative_m,
    distortion_bounds,
    distortion_curve,
    extremal_r,
    make_series,
    r_criterion_term,
    radius_close_to_convex,
    radius_convex,
    radius_starlike,
    random_member,
    random_params,
    starlike_min_re,
)
from pvalent.errors import RadiusOutOfRangeError, UncertifiedBoundWarning

CANONICAL = ClassParams()


def test_canonical_distortion_frozen():
    assert distortion_bounds(CANONICAL, 0, 0.5) == (0.4375, 0.5625)
    assert distortion_bounds(CANONICAL, 1, 0.5) == (0.75, 1.25)


def test_distortion_contains_members(rng):
    for _ in range(100):
        cp = random_params(rng, require_budget_orders=(0, 1))
        f = random_member(cp, rng)
        m = int(rng.integers(0, 2))
        r = float(rng.uniform(0.05, 0.95))
        lo, up = distortion_bounds(cp, m, r)
        theta = float(rng.uniform(0, 2 * math.pi))
        z = r * complex(math.cos(theta), math.sin(theta))
        val = abs(derivative_m(f, m).evaluate(z))
        slack = 1e-12 * max(1.0, up)
        assert lo - slack <= val <= up + slack


def test_extremal_attains_lower_bound_on_real_axis(rng):
    for _ in range(25):
        cp = random_params(rng, require_budget_orders=(0,))
        r = float(rng.uniform(0.1, 0.9))
        lo, _ = distortion_bounds(cp, 0, r)
        val = derivative_m(extremal_r(cp.p + 1, cp), 0).evaluate(r)
        assert val.imag == 0.0
        assert abs(val.real - lo) <= 1e-10 * max(1.0, abs(lo))


def test_distortion_rejects_radius_outside_disk():
    with pytest.raises(RadiusOutOfRangeError):
        distortion_bounds(CANONICAL, 0, 1.0)
    with pytest.raises(RadiusOutOfRangeError):
        distortion_bounds(CANONICAL, 0, -0.1)


def test_distortion_curve_shape():
    curve = distortion_curve(CANONICAL, 1, [0.1, 0.3, 0.5])
    assert curve.m == 1
    assert len(curve.samples) == 3
    assert curve.samples[2] == (0.5, 0.75, 1.25)


def test_uncertified_budget_has_a_violating_member():
    """Heavy damping breaks the tail aggregation the bounds rely on."""
    cp = ClassParams(mu=0.9, delta=0.0)
    assert not budget_certified(cp, 1)
    # mass far out: the criterion admits a huge third coefficient
    a3 = 1.0 / r_criterion_term(3, cp)
    f = make_series(1, [(3, a3)])
    assert check_r_membership(f, cp).member
    with pytest.warns(UncertifiedBoundWarning):
        _, up = distortion_bounds(cp, 1, 0.5)
    val = abs(derivative_m(f, 1).evaluate(0.5j))
    assert val == pytest.approx(13.5, rel=1e-12)
    assert val > up  # the printed bound (6.0) genuinely fails here


def test_certified_regime_emits_no_warning():
    with warnings.catch_warnings():
        warnings.simplefilter("error", UncertifiedBoundWarning)
        distortion_bounds(CANONICAL, 1, 0.5)


def test_canonical_radius_candidates_frozen():
    rep = radius_starlike(CANONICAL)
    ks, vals = zip(*rep.candidates)
    assert ks[0] == 2 and ks[1] == 3
    assert vals[0] == pytest.approx(2.0, abs=1e-12)
    assert vals[1] == pytest.approx(math.sqrt(6.0), abs=1e-12)
    assert rep.argmin_k == 2
    assert rep.radius == vals[0]
    assert rep.certified and rep.whole_disk
    # increasing along the first stretch
    assert all(a < b for a, b in zip(vals[:10], vals[1:11]))


def test_convex_at_most_starlike(rng):
    for _ in range(25):
        cp = random_params(rng, mu_range=(0.55, 0.9))
        zeta = float(rng.uniform(0.0, 0.6 * cp.p))
        rs = radius_starlike(cp, zeta).radius
        rc = radius_convex(cp, zeta).radius
        assert rc <= rs * (1.0 + 1e-12)


def test_radius_confirmed_by_sign_change(rng):
    checked = 0
    for _ in range(200):
        cp = random_params(rng, mu_range=(0.55, 0.9))
        zeta = float(rng.uniform(0.0, 0.6 * cp.p))
        rep = radius_starlike(cp, zeta)
        if rep.radius >= 0.999 or not rep.certified:
            continue
        f = extremal_r(rep.argmin_k, cp)
        inside = starlike_min_re(f, zeta, rep.radius * (1.0 - 1e-5))
        outside = starlike_min_re(f, zeta, rep.radius * (1.0 + 1e-5))
        assert inside.extremum > zeta
        assert outside.extremum < zeta
        checked += 1
        if checked == 25:
            break
    assert checked == 25


def test_close_to_convex_radius_is_reported():
    rep = radius_close_to_convex(CANONICAL, zeta=0.0)
    assert rep.kind == "close-to-convex"
    assert rep.radius > 0
    assert rep.argmin_k >= 2


def test_radius_report_dict_round():
    d = radius_starlike(CANONICAL).to_dict()
    assert d["kind"] == "starlike"
    assert d["argmin_k"] == 2
