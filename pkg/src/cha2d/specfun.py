"""Special functions the radial wavefunctions are built from.

Laguerre polynomials are evaluated by the forward three-term recurrence,
which is stable for the small degrees needed here.  Bessel functions of
integer order are delegated to scipy's double-precision routines.
"""

import numpy as np
from scipy import special as _sp


def pochhammer(a, k):
    """Rising factorial a(a+1)...(a+k-1); empty product (= 1) for k = 0."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0
    for i in range(int(k)):
        out *= a + i
    return out


def assoc_laguerre(k, a, x):
    """Generalized Laguerre polynomial L_k^a(x).

    Works elementwise on array arguments.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    x = np.asarray(x, dtype=float)
    ones = np.ones_like(x)
    if k == 0:
        return ones if ones.ndim else float(ones)
    prev = ones
    cur = a + 1.0 - x
    for i in range(1, k):
        prev, cur = cur, ((2 * i + a + 1 - x) * cur - (i + a) * prev) / (i + 1)
    return cur if cur.ndim else float(cur)


def assoc_laguerre_deriv(k, a, x):
    """d/dx L_k^a(x), via the identity d/dx L_k^a = -L_{k-1}^{a+1}."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        z = np.zeros_like(np.asarray(x, dtype=float))
        return z if z.ndim else 0.0
    out = -np.asarray(assoc_laguerre(k - 1, a + 1, x))
    return out if out.ndim else float(out)


def bessel_j(m, x):
    """Bessel function of the first kind J_m(x) for integer m >= 0.

    Works elementwise on array arguments.
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    if m == 0:
        return _sp.j0(x)
    if m == 1:
        return _sp.j1(x)
    return _sp.jn(m, x)


def bessel_j_deriv(m, x):
    """J_m'(x) from the recurrence J_m' = (J_{m-1} - J_{m+1}) / 2."""
    if m == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x))
