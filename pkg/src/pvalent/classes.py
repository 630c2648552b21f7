"""Coefficient criteria for the two subordination-defined families.

The R family collects series f(z) = z^p - sum a_k z^k whose smoothed image
has z g'(z)/g(z) subordinate to (p + [Bp + (A-B)(p-alpha)] z)/(1 + B z);
the P family asks the same of z f'(z)/p.  For negative-coefficient tails
both reduce to a single sharp linear criterion

    sum_k  [(1-B)(k-p) + (A-B)(p-alpha)] w_k a_k  <=  (A-B)(p-alpha),

with w_k the smoothing multiplier, and the P criterion carrying one extra
factor k/p.  Everything here works with the normalized form: the
per-coefficient term is divided by the right-hand side, so membership is
``sum <= 1`` and the sharp bound for a lone coefficient is the reciprocal
of its term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import OrderExceedsValenceError, ParameterOutOfRangeError, ValenceMismatchError
from .operators import RafidParams, rafid_weight
from .series import CoefficientSeries, make_series


@dataclass(frozen=True)
class ClassParams:
    """Family parameters: p >= 1, 0 <= alpha < p, -1 <= B < A <= 1, plus smoothing (mu, delta)."""

    p: int = 1
    alpha: float = 0.0
    A: float = 1.0
    B: float = -1.0
    mu: float = 0.0
    delta: float = 1.0

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int) or self.p < 1:
            raise ParameterOutOfRangeError(f"p must be a positive integer, got {self.p!r}")
        if not (0.0 <= self.alpha < self.p):
            raise ParameterOutOfRangeError(f"alpha must lie in [0, p), got {self.alpha}")
        if not (-1.0 <= self.B < self.A <= 1.0):
            raise ParameterOutOfRangeError(
                f"need -1 <= B < A <= 1, got A = {self.A}, B = {self.B}"
            )
        # delegate mu/delta checks
        RafidParams(self.mu, self.delta)

    @property
    def rafid(self) -> RafidParams:
        return RafidParams(self.mu, self.delta)

    @property
    def scale(self) -> float:
        """Right-hand side (A-B)(p-alpha) of the unnormalized criterion."""
        return (self.A - self.B) * (self.p - self.alpha)


@dataclass(frozen=True)
class MembershipReport:
    sum: float
    member: bool
    margin: float
    per_term: tuple[tuple[int, float], ...]

    def to_dict(self) -> dict:
        return {
            "sum": self.sum,
            "member": self.member,
            "margin": self.margin,
            "per_term": [[k, c] for k, c in self.per_term],
        }


def r_criterion_term(k: int, cp: ClassParams) -> float:
    """Normalized criterion multiplier of a_k for the R family.

    [(1-B)(k-p) + (A-B)(p-alpha)] w_k / ((A-B)(p-alpha)); always >= w_k >= 1
    at mu = 0 and strictly increasing once the smoothing growth takes over.
    """
    if k < cp.p + 1:
        raise ParameterOutOfRangeError(f"criterion terms start at k = p+1, got {k}")
    bracket = (1.0 - cp.B) * (k - cp.p) + cp.scale
    return bracket * rafid_weight(k, cp.p, cp.rafid) / cp.scale


def log_r_criterion_term(k: int, cp: ClassParams) -> float:
    """log of :func:`r_criterion_term`, safe for indices far beyond overflow."""
    if k < cp.p + 1:
        raise ParameterOutOfRangeError(f"criterion terms start at k = p+1, got {k}")
    bracket = (1.0 - cp.B) * (k - cp.p) + cp.scale
    return (
        math.log(bracket)
        + (k - cp.p) * math.log1p(-cp.mu)
        + math.lgamma(k + cp.delta)
        - math.lgamma(cp.p + cp.delta)
        - math.log(cp.scale)
    )


def check_r_membership(f: CoefficientSeries, cp: ClassParams) -> MembershipReport:
    """Exact finite criterion sum; member iff sum <= 1, margin = 1 - sum."""
    if f.p != cp.p:
        raise ValenceMismatchError(f"series valence {f.p} != parameter valence {cp.p}")
    per_term = tuple(
        (k, r_criterion_term(k, cp) * f.coeffs[k]) for k in sorted(f.coeffs)
    )
    total = math.fsum(c for _, c in per_term)
    return MembershipReport(
        sum=total, member=total <= 1.0, margin=1.0 - total, per_term=per_term
    )


def coeff_bound_r(k: int, cp: ClassParams) -> float:
    """Largest admissible lone coefficient at index k (sharp)."""
    return 1.0 / r_criterion_term(k, cp)


def extremal_r(k: int, cp: ClassParams) -> CoefficientSeries:
    """z^p - coeff_bound_r(k) z^k; saturates the criterion with margin ~0."""
    return make_series(cp.p, [(k, coeff_bound_r(k, cp))])


def zf_prime_over_p(f: CoefficientSeries) -> CoefficientSeries:
    """Coefficient map of z f'(z)/p, which carries the P family onto the R family."""
    return CoefficientSeries(
        p=f.p, coeffs={k: (k / f.p) * a for k, a in f.coeffs.items()}
    )


def check_p_membership(f: CoefficientSeries, cp: ClassParams) -> MembershipReport:
    """P-family criterion, evaluated as the R criterion of z f'/p.

    Routing through the same code path makes the correspondence exact per
    term, not merely up to rounding.
    """
    return check_r_membership(zf_prime_over_p(f), cp)


def coeff_bound_p(k: int, cp: ClassParams) -> float:
    """Sharp lone-coefficient bound for the P family: the R bound shrunk by p/k."""
    return 1.0 / ((k / cp.p) * r_criterion_term(k, cp))


def extremal_p(k: int, cp: ClassParams) -> CoefficientSeries:
    return make_series(cp.p, [(k, coeff_bound_p(k, cp))])


def random_member(
    cp: ClassParams,
    rng: np.random.Generator,
    max_terms: int = 5,
    max_span: int = 12,
    target_sum: float | None = None,
) -> CoefficientSeries:
    """Random R-family member with criterion sum equal to target (default U(0, 0.999)).

    Coefficients are sharp bounds scaled by a random convex combination, so
    the membership sum is the target up to a few ulp.
    """
    count = int(rng.integers(1, max_terms + 1))
    ks = rng.choice(np.arange(cp.p + 1, cp.p + 1 + max_span), size=count, replace=False)
    u = rng.random(count)
    u = u / u.sum()
    s = float(rng.uniform(0.0, 0.999)) if target_sum is None else float(target_sum)
    pairs = [(int(k), s * float(ui) * coeff_bound_r(int(k), cp)) for k, ui in zip(ks, u)]
    return make_series(cp.p, pairs)


@lru_cache(maxsize=4096)
def budget_certified(cp: ClassParams, m: int = 0) -> bool:
    """Whether the k = p+1 multiplier binds the order-m aggregated budget.

    The distortion and composition bounds replace the true per-coefficient
    multipliers by the single k = p+1 value, which is only valid when

        term(k) * fallfac(p+1, m) / fallfac(k, m)  >=  term(p+1)   for all k > p.

    This always holds at mu = 0 but fails for strong smoothing (large mu,
    small delta), where admissible functions genuinely escape those bounds.
    The scan runs in log space and stops once the per-step growth factor
    (1-mu)(k+delta)(k+1-m)/(k+1) reaches one, after which the sequence can
    no longer dip.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ParameterOutOfRangeError(f"order must be an integer >= 0, got {m!r}")
    if m > cp.p:
        raise OrderExceedsValenceError(f"order {m} exceeds valence {cp.p}")
    base = log_r_criterion_term(cp.p + 1, cp)
    perm_base = math.lgamma(cp.p + 2) - math.lgamma(cp.p + 2 - m)
    k = cp.p + 1
    while (1.0 - cp.mu) * (k + cp.delta) * (k + 1 - m) / (k + 1) < 1.0:
        k += 1
        if k - cp.p > 200_000:
            return False
        log_ratio = (
            log_r_criterion_term(k, cp)
            - base
            + perm_base
            - (math.lgamma(k + 1) - math.lgamma(k + 1 - m))
        )
        if log_ratio < -1e-9:
            return False
    return True


def random_params(
    rng: np.random.Generator,
    max_p: int = 4,
    mu_range: tuple[float, float] = (0.0, 0.9),
    delta_range: tuple[float, float] = (0.0, 1.0),
    require_budget_orders: Sequence[int] = (),
) -> ClassParams:
    """Draw admissible parameters, optionally rejecting uncertified budget regimes."""
    while True:
        p = int(rng.integers(1, max_p + 1))
        alpha = float(rng.uniform(0.0, 0.8 * p))
        B = float(rng.uniform(-1.0, 0.8))
        A = float(rng.uniform(B + 0.1, 1.0))
        if not B < A <= 1.0:
            continue
        mu = float(rng.uniform(*mu_range))
        delta = float(rng.uniform(*delta_range))
        cp = ClassParams(p=p, alpha=alpha, A=A, B=B, mu=mu, delta=delta)
        if all(budget_certified(cp, m) for m in require_budget_orders if m <= p):
            return cp
