"""Class orders preserved by coefficientwise (Hadamard) products.

For two members of the order-alpha R family the product f1 * f2 lies in the
order-lambda family, where lambda comes from the k = p+1 case of

    Phi(k) = p - (1-B)(k-p)(A-B)(p-alpha)^2
             / ([(1-B)(k-p)+(A-B)(p-alpha)]^2 w_k - [(A-B)(p-alpha)]^2),

w_k the smoothing multiplier.  The order is best possible: the squared
k = p+1 extremal saturates it.  Phi being smallest at k = p+1 is checked
numerically on every call rather than assumed; the mixed-order variant
(factors of orders alpha and beta) follows the same pattern and collapses
to lambda at beta = alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classes import ClassParams, check_r_membership, extremal_r
from .errors import DegenerateDenominatorError, ParameterOutOfRangeError
from .operators import rafid_weight
from .series import hadamard_product

_SATURATION_TOL = 1e-10
_ORDER_BUMP = 1e-6


@dataclass(frozen=True)
class ConvolutionOrderReport:
    order: float
    saturating_k: int
    verified_best: bool
    phi_increasing: bool
    saturation_margin: float

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "saturating_k": self.saturating_k,
            "verified_best": self.verified_best,
            "phi_increasing": self.phi_increasing,
            "saturation_margin": self.saturation_margin,
        }


def _phi_pieces(k: int, cp: ClassParams, beta: float) -> tuple[float, float]:
    """Numerator and denominator of p - Phi(k) for orders (alpha, beta)."""
    s_a = cp.scale
    s_b = (cp.A - cp.B) * (cp.p - beta)
    w = rafid_weight(k, cp.p, cp.rafid)
    bracket_a = (1.0 - cp.B) * (k - cp.p) + s_a
    bracket_b = (1.0 - cp.B) * (k - cp.p) + s_b
    # one factor (A-B) total: s_a carries it, the beta side enters as (p-beta)
    num = (1.0 - cp.B) * (k - cp.p) * s_a * (cp.p - beta)
    den = bracket_a * bracket_b * w - s_a * s_b
    return num, den


def mixed_order_candidate(k: int, cp: ClassParams, beta: float) -> float:
    """Order contributed by index k when convolving orders alpha and beta.

    Returns nan when the denominator degenerates at k > p+1 (strong
    smoothing); the k = p+1 case raises instead, since the reported order
    itself would be meaningless.
    """
    if k < cp.p + 1:
        raise ParameterOutOfRangeError(f"candidates start at k = p+1, got {k}")
    if not (0.0 <= beta < cp.p):
        raise ParameterOutOfRangeError(f"beta must lie in [0, p), got {beta}")
    num, den = _phi_pieces(k, cp, beta)
    if den <= 0.0:
        if k == cp.p + 1:
            raise DegenerateDenominatorError(
                f"order denominator {den} not positive at k = p+1; "
                "the squared extremal escapes every order for these parameters"
            )
        return math.nan
    return cp.p - num / den


def class_order_candidate(k: int, cp: ClassParams) -> float:
    """Same-order special case of :func:`mixed_order_candidate`."""
    return mixed_order_candidate(k, cp, cp.alpha)


def _saturation(cp_a: ClassParams, beta: float, order: float) -> tuple[float, bool]:
    """(margin at the order, fails at order + bump) for the product of extremals."""
    cp_b = ClassParams(p=cp_a.p, alpha=beta, A=cp_a.A, B=cp_a.B, mu=cp_a.mu, delta=cp_a.delta)
    product = hadamard_product(extremal_r(cp_a.p + 1, cp_a), extremal_r(cp_b.p + 1, cp_b))
    at_order = ClassParams(
        p=cp_a.p, alpha=order, A=cp_a.A, B=cp_a.B, mu=cp_a.mu, delta=cp_a.delta
    )
    margin = check_r_membership(product, at_order).margin
    bumped = order + _ORDER_BUMP
    if bumped >= cp_a.p:
        fails_above = True  # no admissible higher order exists at all
    else:
        above = ClassParams(
            p=cp_a.p, alpha=bumped, A=cp_a.A, B=cp_a.B, mu=cp_a.mu, delta=cp_a.delta
        )
        fails_above = not check_r_membership(product, above).member
    return margin, fails_above


def _order_report(cp: ClassParams, beta: float, k_max: int) -> ConvolutionOrderReport:
    if k_max < cp.p + 1:
        raise ParameterOutOfRangeError(f"k_max must be at least p+1, got {k_max}")
    order = mixed_order_candidate(cp.p + 1, cp, beta)
    values = [order]
    for k in range(cp.p + 2, k_max + 1):
        values.append(mixed_order_candidate(k, cp, beta))
    increasing = all(
        not math.isnan(a) and not math.isnan(b) and b >= a - 1e-12
        for a, b in zip(values, values[1:])
    )
    if 0.0 <= order < cp.p:
        margin, fails_above = _saturation(cp, beta, order)
        saturated = abs(margin) <= _SATURATION_TOL and fails_above
    else:
        margin, saturated = math.nan, False
    return ConvolutionOrderReport(
        order=order,
        saturating_k=cp.p + 1,
        verified_best=increasing and saturated,
        phi_increasing=increasing,
        saturation_margin=margin,
    )


def schild_silverman_lambda(cp: ClassParams, k_max: int = 64) -> ConvolutionOrderReport:
    """Order preserved when convolving two order-alpha members."""
    return _order_report(cp, cp.alpha, k_max)


def mixed_order_xi(cp: ClassParams, beta: float, k_max: int = 64) -> ConvolutionOrderReport:
    """Order preserved when convolving an order-alpha with an order-beta member."""
    if not (0.0 <= beta < cp.p):
        raise ParameterOutOfRangeError(f"beta must lie in [0, p), got {beta}")
    return _order_report(cp, beta, k_max)
