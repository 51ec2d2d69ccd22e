"""Entropy, Fisher information and complexity measures of radial densities.

All measures act on a RadialDensity whose radial profile f represents the
two-dimensional density f/(2 pi), and reduce to one radial integral:

    S      = ln(2 pi) - int f ln f  x dx
    R_l    = ln(2 pi) + ln(int f^l x dx) / (1 - l)
    F      = int (f')^2 / f  x dx
    D      = (1/2 pi) int f^2 x dx

Natural logarithms throughout.  Integrands like f ln f are extended by
continuity to 0 where f vanishes.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

TWO_PI = 2.0 * math.pi

#: f below this threshold contributes nothing to logarithmic integrands
TINY = 1e-300

#: numerical slack applied to every inequality check
EPS_NUM = 1e-6

#: entropic uncertainty bound S_pos + S_mom >= 2 (1 + ln pi) in 2D
SHANNON_SUM_BOUND = 2.0 * (1.0 + math.log(math.pi))

#: Fisher uncertainty bound; valid for real (m = 0) wavefunctions only
FISHER_PRODUCT_BOUND = 16.0


@dataclass(frozen=True)
class MeasureSpec:
    """Renyi orders used by the two-parameter complexity measure."""

    renyi_lambda: float = 2.0 / 3.0
    renyi_beta: float = 3.0

    def __post_init__(self):
        if self.renyi_lambda <= 0 or self.renyi_beta <= 0:
            raise ValueError("Renyi orders must be positive")
        if self.renyi_lambda >= self.renyi_beta:
            raise ValueError("need renyi_lambda < renyi_beta")


def _radial_sum(d, integrand_vals):
    return float(np.dot(d.weights, integrand_vals * d.nodes))


def shannon(d):
    """Shannon entropy (nats) of the two-dimensional density f/(2 pi)."""
    f = d.f_vals
    flnf = np.where(f > TINY, f * np.log(np.maximum(f, TINY)), 0.0)
    return math.log(TWO_PI) - _radial_sum(d, flnf)


def renyi(d, lam):
    """Renyi entropy of order lam (lam > 0, lam != 1)."""
    if lam <= 0:
        raise ValueError("Renyi order must be positive")
    if lam == 1:
        raise ValueError("order 1 is the Shannon limit; use shannon()")
    integral = _radial_sum(d, np.power(np.maximum(d.f_vals, 0.0), lam))
    return math.log(TWO_PI) + math.log(integral) / (1.0 - lam)


def fisher(d):
    """Fisher information int (f')^2/f x dx of an angle-independent density."""
    f = d.f_vals
    df = d.df_vals
    integrand = np.where(f > TINY, df * df / np.maximum(f, TINY), 0.0)
    if not np.all(np.isfinite(integrand)):
        raise ArithmeticError("Fisher integrand overflowed")
    return _radial_sum(d, integrand)


def disequilibrium(d):
    """Distance from equiprobability, int rho^2 = (1/2 pi) int f^2 x dx."""
    return _radial_sum(d, d.f_vals * d.f_vals) / TWO_PI


def complexity_fs(d):
    """Fisher-Shannon complexity (1/(2 pi e)) F e^S; lower bound 2 in 2D."""
    return fisher(d) * math.exp(shannon(d)) / (TWO_PI * math.e)


def complexity_lmc(d):
    """LMC complexity e^S times the disequilibrium; lower bound 1."""
    return math.exp(shannon(d)) * disequilibrium(d)


def complexity_lmc_renyi(d, lam, beta):
    """Generalized LMC complexity e^{R_lam - R_beta}, lam < beta.

    Order 1 on either side is routed through the Shannon entropy.
    """
    if not 0 < lam < beta:
        raise ValueError("need 0 < lam < beta")
    r_lam = shannon(d) if lam == 1 else renyi(d, lam)
    r_beta = shannon(d) if beta == 1 else renyi(d, beta)
    return math.exp(r_lam - r_beta)


class ShannonUncertainty(NamedTuple):
    total: float
    satisfied: bool


class FisherUncertainty(NamedTuple):
    product: float
    applicable: bool
    satisfied: Optional[bool]


def uncertainty_shannon(s_pos, s_mom):
    """Entropic uncertainty sum and whether it clears 2(1 + ln pi)."""
    total = s_pos + s_mom
    return ShannonUncertainty(total, total >= SHANNON_SUM_BOUND - EPS_NUM)


def uncertainty_fisher(f_pos, f_mom, state):
    """Fisher uncertainty product; the >= 16 bound applies to the real
    (m = 0) wavefunctions only."""
    product = f_pos * f_mom
    applicable = state.m == 0
    satisfied = None
    if applicable:
        satisfied = product >= FISHER_PRODUCT_BOUND * (1.0 - EPS_NUM)
    return FisherUncertainty(product, applicable, satisfied)
