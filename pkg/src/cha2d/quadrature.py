"""Gauss-Legendre quadrature on finite intervals and semi-infinite tails.

All rules are open (no node ever sits on an interval endpoint), so
integrands with finite limits at r = 0 need no special-casing.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss


class NonFiniteIntegrandError(ArithmeticError):
    """The integrand returned NaN or infinity at a quadrature node."""


class TailNonConvergenceError(ArithmeticError):
    """A semi-infinite tail integral failed to converge."""


@lru_cache(maxsize=64)
def _base_rule(npoints):
    x, w = leggauss(npoints)
    return x, w


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple

    def __post_init__(self):
        a, b = self.interval
        if not (np.all(self.nodes > a) and np.all(self.nodes < b)):
            raise ValueError("nodes must lie strictly inside the interval")
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")


def gauss_legendre(npoints, a, b):
    """Gauss-Legendre rule with `npoints` nodes on [a, b].

    Exact for polynomials of degree <= 2 * npoints - 1.
    """
    if npoints < 1:
        raise ValueError("npoints must be >= 1")
    if a >= b:
        raise ValueError("need a < b")
    x, w = _base_rule(npoints)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return QuadratureRule(nodes=mid + half * x, weights=half * w, interval=(a, b))


def _eval(f, nodes):
    try:
        vals = np.asarray(f(nodes), dtype=float)
        if vals.shape != nodes.shape:
            raise TypeError
    except (TypeError, ValueError):
        # scalar-only callable; fall back to pointwise evaluation
        vals = np.array([float(f(x)) for x in nodes])
    if not np.all(np.isfinite(vals)):
        raise NonFiniteIntegrandError("integrand is not finite at a quadrature node")
    return vals


def integrate(f, rule):
    """Weighted sum of f over the rule's nodes."""
    return float(np.dot(rule.weights, _eval(f, rule.nodes)))


def composite_rule(a, b, panels, npoints):
    """Nodes and weights of `panels` equal Gauss-Legendre panels on [a, b]."""
    if panels < 1:
        raise ValueError("panels must be >= 1")
    if a >= b:
        raise ValueError("need a < b")
    x, w = _base_rule(npoints)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    nodes = (mid[:, None] + half * x[None, :]).ravel()
    weights = np.tile(half * w, panels)
    return nodes, weights


def integrate_panels(f, a, b, panels, npoints=16):
    """Composite fixed-order Gauss-Legendre integral of f over [a, b]."""
    nodes, weights = composite_rule(a, b, panels, npoints)
    return float(np.dot(weights, _eval(f, nodes)))


def integrate_tail(f, a, rel_tol, panel_width=1.0, npoints=16, max_panels=10_000):
    """Integrate f over [a, infinity) by accumulating unit panels.

    Stops once three consecutive panel contributions are each below
    rel_tol times the accumulated value.  Returns (value, truncation point).
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    x, w = _base_rule(npoints)
    acc = 0.0
    small = 0
    for k in range(max_panels):
        lo = a + k * panel_width
        nodes = lo + 0.5 * panel_width * (x + 1.0)
        contrib = float(np.dot(0.5 * panel_width * w, _eval(f, nodes)))
        acc += contrib
        if abs(contrib) <= rel_tol * abs(acc):
            small += 1
            if small >= 3:
                return acc, lo + panel_width
        else:
            small = 0
    raise TailNonConvergenceError(
        f"tail integral from {a} did not converge within {max_panels} panels"
    )
