"""Variational bound states of the hydrogen atom confined to a disk.

The trial radial function for a state (n, m) is the free-atom form
e^{-alpha r} (alpha r)^|m| L_{n-|m|-1}^{2|m|}(alpha r) multiplied by the
cut-off factor (1 - r/r0) that enforces the hard-wall boundary condition,
with alpha the single nonlinear parameter.

For the lowest state of each |m| (the circular states 1s, 2p, 3d) the
energy is the plain Rayleigh quotient of that trial function.  For higher
radial excitations (2s) a Rayleigh quotient of the bare trial collapses
toward the nodeless ground state, so the energy is instead the
(n - |m|)-th root of the generalized eigenproblem in the span of all
trial functions with the same |m| at shared alpha.  By the
Hylleraas-Undheim-MacDonald theorem that root is a true upper bound to
the corresponding exact level, and minimizing it over alpha reproduces
the reference energies.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import minimize_scalar

from .density import RadialDensity
from .quadrature import composite_rule
from .specfun import assoc_laguerre, assoc_laguerre_deriv

LABELS = {"1s": (1, 0), "2s": (2, 0), "2p": (2, 1), "3d": (3, 2)}
STATE_ORDER = ("1s", "2s", "2p", "3d")

#: radius (a.u.) used as the numerical stand-in for the unconfined atom
FREE_RADIUS = 30.0

#: default composite-rule resolution for radial position-space integrals
RADIAL_PANELS = 64
RADIAL_POINTS = 16

_SHELL_LETTERS = "spdfgh"


class NoBracketError(RuntimeError):
    """The energy had no interior minimum in the alpha search window."""


class DegenerateWavefunctionError(ArithmeticError):
    """The trial wavefunction norm underflowed."""


@dataclass(frozen=True)
class QuantumState:
    """Quantum numbers (n, m) with n >= 1 and 0 <= m <= n - 1."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.m <= self.n - 1:
            raise ValueError("need 0 <= m <= n - 1")

    @classmethod
    def from_label(cls, label):
        if label not in LABELS:
            raise ValueError(f"unknown state label {label!r}")
        return cls(*LABELS[label])

    @property
    def label(self):
        return f"{self.n}{_SHELL_LETTERS[self.m]}"

    @property
    def is_circular(self):
        return self.m == self.n - 1


@dataclass(frozen=True)
class ConfinementSetup:
    """Disk radius r0 (a.u.) and nuclear charge Z."""

    r0: float
    Z: float = 1.0

    def __post_init__(self):
        if not (self.r0 > 0 and math.isfinite(self.r0)):
            raise ValueError("r0 must be positive and finite")
        if self.Z <= 0:
            raise ValueError("Z must be positive")

    @classmethod
    def free(cls, Z=1.0):
        """Proxy setup for the unconfined atom (all measures converge well
        before r0 = 30 a.u.)."""
        return cls(r0=FREE_RADIUS, Z=Z)


def free_beta(n, Z=1.0):
    """Inverse length scale 2Z/(n - 1/2) of the free radial wavefunction."""
    return 2.0 * Z / (n - 0.5)


def _u_du(n, m, r0, alpha, r):
    """Unnormalized trial u(r) and u'(r) on an array of radii."""
    x = alpha * r
    k = n - m - 1
    lag = np.asarray(assoc_laguerre(k, 2 * m, x))
    dlag = np.asarray(assoc_laguerre_deriv(k, 2 * m, x))
    expf = np.exp(-x)
    cut = 1.0 - r / r0
    if m == 0:
        v = expf * lag
        dv = expf * alpha * (dlag - lag)
    else:
        pw = x ** m
        v = expf * pw * lag
        dv = expf * alpha * (pw * (dlag - lag) + m * x ** (m - 1) * lag)
    return v * cut, dv * cut - v / r0


def trial_radial(state, setup, alpha):
    """Unnormalized trial wavefunction u(r) for one (n, m); u(r0) = 0."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")

    def u(r):
        arr = np.asarray(r, dtype=float)
        if np.any(arr < 0) or np.any(arr > setup.r0):
            raise ValueError("r outside the confinement region")
        out = _u_du(state.n, state.m, setup.r0, alpha, arr)[0]
        return out if out.ndim else float(out)

    return u


def trial_radial_deriv(state, setup, alpha):
    """Analytic derivative u'(r) of the trial wavefunction."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")

    def du(r):
        arr = np.asarray(r, dtype=float)
        if np.any(arr < 0) or np.any(arr > setup.r0):
            raise ValueError("r outside the confinement region")
        out = _u_du(state.n, state.m, setup.r0, alpha, arr)[1]
        return out if out.ndim else float(out)

    return du


def _solve(state, setup, alpha, nodes, weights):
    """Coefficients, normalization and energy at fixed alpha.

    Returns (coeffs, norm, energy) where the physical radial function is
    norm * sum_j coeffs[j] * u_j(r) over the same-|m| trial basis.
    """
    n, m, r0 = state.n, state.m, setup.r0
    size = n - m
    basis = [_u_du(m + 1 + j, m, r0, alpha, nodes) for j in range(size)]
    wr = weights * nodes
    if size == 1:
        u, du = basis[0]
        den = float(np.dot(wr, u * u))
        if not (np.isfinite(den) and den > 1e-280):
            raise DegenerateWavefunctionError(
                f"norm integral degenerate at alpha={alpha}, r0={r0}"
            )
        kin = 0.5 * np.dot(wr, du * du)
        if m:
            kin += 0.5 * m * m * np.dot(weights, u * u / nodes)
        pot = -setup.Z * np.dot(weights, u * u)
        coeffs = np.array([1.0])
        energy_val = (kin + pot) / den
        return coeffs, 1.0 / math.sqrt(den), energy_val

    S = np.empty((size, size))
    H = np.empty((size, size))
    for i in range(size):
        ui, dui = basis[i]
        for j in range(i, size):
            uj, duj = basis[j]
            S[i, j] = S[j, i] = np.dot(wr, ui * uj)
            hij = 0.5 * np.dot(wr, dui * duj) - setup.Z * np.dot(weights, ui * uj)
            if m:
                hij += 0.5 * m * m * np.dot(weights, ui * uj / nodes)
            H[i, j] = H[j, i] = hij
    if not (np.all(np.isfinite(S)) and S[-1, -1] > 1e-280):
        raise DegenerateWavefunctionError(
            f"overlap matrix degenerate at alpha={alpha}, r0={r0}"
        )
    vals, vecs = eigh(H, S)
    coeffs = vecs[:, size - 1]
    # fix the overall sign so the wavefunction is positive at the origin
    if coeffs.sum() < 0:
        coeffs = -coeffs
    den = float(coeffs @ S @ coeffs)
    return coeffs, 1.0 / math.sqrt(den), float(vals[size - 1])


@dataclass(frozen=True)
class ConfinedOrbital:
    """An optimized (or fixed-alpha) normalized confined state."""

    state: QuantumState
    setup: ConfinementSetup
    alpha: float
    norm: float
    energy: float
    coeffs: tuple
    panels: int = RADIAL_PANELS
    npoints: int = RADIAL_POINTS

    def radial(self, r):
        """Normalized radial wavefunction R(r)."""
        arr = np.asarray(r, dtype=float)
        m, r0 = self.state.m, self.setup.r0
        out = sum(
            c * _u_du(m + 1 + j, m, r0, self.alpha, arr)[0]
            for j, c in enumerate(self.coeffs)
        )
        out = self.norm * out
        return out if out.ndim else float(out)

    def radial_deriv(self, r):
        """R'(r), assembled from the analytic basis derivatives."""
        arr = np.asarray(r, dtype=float)
        m, r0 = self.state.m, self.setup.r0
        out = sum(
            c * _u_du(m + 1 + j, m, r0, self.alpha, arr)[1]
            for j, c in enumerate(self.coeffs)
        )
        out = self.norm * out
        return out if out.ndim else float(out)


def normalize(state, setup, alpha, panels=RADIAL_PANELS, npoints=RADIAL_POINTS):
    """Build the normalized orbital at a given alpha."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    nodes, weights = composite_rule(0.0, setup.r0, panels, npoints)
    coeffs, norm, energy_val = _solve(state, setup, alpha, nodes, weights)
    return ConfinedOrbital(
        state=state,
        setup=setup,
        alpha=alpha,
        norm=norm,
        energy=energy_val,
        coeffs=tuple(coeffs),
        panels=panels,
        npoints=npoints,
    )


def energy(state, setup, alpha, panels=RADIAL_PANELS, npoints=RADIAL_POINTS):
    """Variational energy (hartree) of the state at fixed alpha."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    nodes, weights = composite_rule(0.0, setup.r0, panels, npoints)
    return _solve(state, setup, alpha, nodes, weights)[2]


def alpha_window(state, setup):
    """Search window for the variational parameter.

    The lower edge is pushed toward zero for radial excitations: their
    optimal alpha migrates there under strong confinement, where the
    polynomial part of the basis carries the whole shape.
    """
    lo = 0.05 if state.is_circular else 1e-3
    return lo, 4.0 * setup.Z * state.n


def optimize_alpha(state, setup, panels=RADIAL_PANELS, npoints=RADIAL_POINTS):
    """Minimize the variational energy over alpha and return the orbital.

    Coarse log-spaced scan followed by bounded golden-section/parabolic
    refinement; deterministic for fixed inputs.
    """
    nodes, weights = composite_rule(0.0, setup.r0, panels, npoints)

    def f(a):
        return _solve(state, setup, a, nodes, weights)[2]

    lo, hi = alpha_window(state, setup)
    grid = np.geomspace(lo, hi, 60)
    energies = [f(a) for a in grid]
    i = int(np.argmin(energies))
    if i == len(grid) - 1 or (i == 0 and state.is_circular):
        raise NoBracketError(
            f"E(alpha) has no interior minimum for {state.label} at "
            f"r0={setup.r0} in window [{lo}, {hi}]"
        )
    res = minimize_scalar(
        f,
        bounds=(grid[max(i - 1, 0)], grid[i + 1]),
        method="bounded",
        options={"xatol": 1e-9},
    )
    return normalize(state, setup, float(res.x), panels=panels, npoints=npoints)


def position_density(orbital):
    """Normalized radial position profile f(r) = R(r)^2; the full
    two-dimensional density is f/(2 pi)."""

    def profile(r):
        R = orbital.radial(r)
        return R * R

    def profile_deriv(r):
        return 2.0 * orbital.radial(r) * orbital.radial_deriv(r)

    return RadialDensity.from_profile(
        space="position",
        support_end=orbital.setup.r0,
        profile=profile,
        profile_deriv=profile_deriv,
        panels=orbital.panels,
        npoints=orbital.npoints,
    )
