"""Acceptance suite: every release criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the pass/fail lines.
All tolerances are the contractual ones; the session-cached sweep over the
default radius grid backs the per-point bound criteria.
"""

import math
import time

import numpy as np
import pytest

from cha2d import fisher, renyi, shannon
from cha2d.density import RadialDensity
from cha2d.hydrogen import STATE_ORDER
from cha2d.infotheory import (
    SHANNON_SUM_BOUND,
    complexity_fs,
    complexity_lmc,
    complexity_lmc_renyi,
)
from cha2d.quadrature import gauss_legendre, integrate
from cha2d.records import (
    DEFAULT_R0_GRID,
    FREE_ENERGIES,
    NoSignChangeError,
    TABLE_TOL,
    crossover_radius,
    inversion_radius,
    table_rows,
)
from cha2d.specfun import assoc_laguerre, bessel_j

from conftest import densities, orbital

FREE_R0 = 30.0


def _check(num, desc, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {desc}")
    assert ok, f"criterion {num}: {desc}"


@pytest.fixture(scope="session")
def sweep_data():
    """Full measures at every (state, r0) of the default sweep grid."""
    data = {}
    for label in STATE_ORDER:
        for r0 in DEFAULT_R0_GRID:
            dpos, dmom = densities(label, r0)
            point = {
                "energy": orbital(label, r0).energy,
                "S_pos": shannon(dpos),
                "S_mom": shannon(dmom),
                "F_pos": fisher(dpos),
                "F_mom": fisher(dmom),
                "norm_defect": dmom.norm_defect,
            }
            for tag, d in (("pos", dpos), ("mom", dmom)):
                point[f"C_FS_{tag}"] = complexity_fs(d)
                point[f"C_LMC_{tag}"] = complexity_lmc(d)
                point[f"C_LR_{tag}"] = complexity_lmc_renyi(d, 2.0 / 3.0, 3.0)
            data[(label, r0)] = point
    return data


def test_criterion_01_reference_table():
    start = time.perf_counter()
    rows = table_rows()
    elapsed = time.perf_counter() - start
    worst = max(row["deviation"] / max(1.0, abs(row["E_ref"]))
                for row in rows)
    ok = (len(rows) == 64 and worst <= TABLE_TOL and elapsed < 60.0)
    _check(1, f"64-entry energy table within {TABLE_TOL:g} relative "
              f"(worst {worst:.2e}) in {elapsed:.1f}s", ok)


def test_criterion_02_free_energies(sweep_data):
    devs = {label: abs(sweep_data[(label, FREE_R0)]["energy"]
                       - FREE_ENERGIES[label])
            for label in STATE_ORDER}
    worst = max(devs.values())
    _check(2, f"free-limit energies at r0=30 within 1e-3 "
              f"(worst {worst:.2e})", worst <= 1e-3)


def test_criterion_03_free_shannon(sweep_data):
    target = 2.0 + math.log(math.pi / 8.0)
    dev = abs(sweep_data[("1s", FREE_R0)]["S_pos"] - target)
    _check(3, f"free 1s position Shannon = 2+ln(pi/8) +- 0.01 "
              f"(dev {dev:.2e})", dev <= 0.01)


def test_criterion_04_free_fisher(sweep_data):
    d1 = abs(sweep_data[("1s", FREE_R0)]["F_pos"] / 16.0 - 1.0)
    d2 = abs(sweep_data[("2s", FREE_R0)]["F_pos"] / (16.0 / 9.0) - 1.0)
    _check(4, f"free Fisher 16 and 16/9 within 1% "
              f"(devs {d1:.2e}, {d2:.2e})", max(d1, d2) <= 0.01)


def test_criterion_05_entropic_uncertainty(sweep_data):
    margin = min(p["S_pos"] + p["S_mom"] - SHANNON_SUM_BOUND
                 for p in sweep_data.values())
    _check(5, f"S_pos + S_mom >= 2(1+ln pi) at all sweep points "
              f"(min margin {margin:+.3e})", margin >= -1e-6)


def test_criterion_06_fisher_uncertainty(sweep_data):
    margin = min(p["F_pos"] * p["F_mom"] - 16.0
                 for (label, _), p in sweep_data.items()
                 if label in ("1s", "2s"))
    _check(6, f"F_pos*F_mom >= 16 for 1s and 2s at all sweep points "
              f"(min margin {margin:+.3e})", margin >= -1e-4)


def test_criterion_07_complexity_bounds(sweep_data):
    margins = []
    for point in sweep_data.values():
        for tag in ("pos", "mom"):
            margins.append(point[f"C_FS_{tag}"] - 2.0)
            margins.append(point[f"C_LMC_{tag}"] - 1.0)
            margins.append(point[f"C_LR_{tag}"] - 1.0)
    worst = min(margins)
    _check(7, f"C_FS >= 2, C_LMC >= 1, C_(2/3,3) >= 1 in both spaces "
              f"(min margin {worst:+.3e})", worst >= -1e-6)


def test_criterion_08_entropy_crossover():
    crossings = {label: crossover_radius(label) for label in ("2s", "2p", "3d")}
    in_range = all(2.5 <= rc <= 3.1 for rc in crossings.values())
    try:
        crossover_radius("1s")
        no_ground_crossing = False
    except NoSignChangeError:
        no_ground_crossing = True
    shown = ", ".join(f"{k}={v:.2f}" for k, v in crossings.items())
    _check(8, f"entropy crossover in [2.5, 3.1] for excited states ({shown}) "
              f"and absent for 1s", in_range and no_ground_crossing)


def test_criterion_09_sd_inversion():
    r_star = inversion_radius()
    _check(9, f"2s/3d energy inversion radius {r_star:.3f} in (0.9, 1.0)",
           0.9 < r_star < 1.0)


def test_criterion_10_parseval(sweep_data):
    worst = max(p["norm_defect"] for p in sweep_data.values())
    _check(10, f"momentum norm defect <= 1e-6 at all sweep points "
               f"(worst {worst:.2e})", worst <= 1e-6)


def test_criterion_11_property_suites(sweep_data):
    checks = []

    # analytic closed forms: uniform disk saturates LMC, Gaussian saturates FS
    disk = RadialDensity.from_profile(
        "position", 2.0,
        lambda x: np.full_like(np.asarray(x, float), 0.5),
        lambda x: np.zeros_like(np.asarray(x, float)), panels=32)
    checks.append(abs(shannon(disk) - math.log(4 * math.pi)) <= 1e-6)
    checks.append(abs(complexity_lmc(disk) - 1.0) <= 1e-6)
    sig2 = 1.3 ** 2
    gauss = RadialDensity.from_profile(
        "position", 12 * 1.3,
        lambda x: np.exp(-np.asarray(x, float) ** 2 / (2 * sig2)) / sig2,
        lambda x: -np.asarray(x, float) / sig2
        * np.exp(-np.asarray(x, float) ** 2 / (2 * sig2)) / sig2, panels=128)
    checks.append(abs(complexity_fs(gauss) - 2.0) <= 1e-6)

    # special-function recurrences at spot points
    x = np.linspace(0.0, 40.0, 257)
    for k, a in ((3, 0.0), (5, 2.0)):
        lhs = (k + 1) * assoc_laguerre(k + 1, a, x)
        rhs = ((2 * k + 1 + a - x) * assoc_laguerre(k, a, x)
               - (k + a) * assoc_laguerre(k - 1, a, x))
        checks.append(float(np.max(np.abs(lhs - rhs))) <= 1e-9)
    p = np.linspace(0.1, 30.0, 300)
    rec = bessel_j(0, p) + bessel_j(2, p) - 2.0 / p * bessel_j(1, p)
    checks.append(float(np.max(np.abs(rec))) <= 1e-9)

    # Fisher identity F = 4 int (R')^2 x dx for a real wavefunction
    orb = orbital("2p", 2.0)
    rule = gauss_legendre(64, 0.0, 2.0)
    direct = integrate(lambda r: 4.0 * orb.radial_deriv(r) ** 2 * r, rule)
    dpos, _ = densities("2p", 2.0)
    checks.append(abs(fisher(dpos) / direct - 1.0) <= 1e-6)

    # quadrature exactness: 8 nodes integrate degree-6 polynomials exactly
    value = integrate(lambda t: 7 * t ** 6 - t ** 3 + 2,
                      gauss_legendre(8, -1.0, 3.0))
    antideriv = lambda t: t ** 7 - t ** 4 / 4.0 + 2.0 * t  # noqa: E731
    checks.append(abs(value - (antideriv(3.0) - antideriv(-1.0))) <= 1e-9)

    # qualitative curve shapes on the sweep grid
    s_pos = [sweep_data[("1s", r0)]["S_pos"] for r0 in DEFAULT_R0_GRID]
    s_mom = [sweep_data[("1s", r0)]["S_mom"] for r0 in DEFAULT_R0_GRID]
    checks.append(all(a < b for a, b in zip(s_pos, s_pos[1:])))
    checks.append(all(a > b for a, b in zip(s_mom, s_mom[1:])))
    fs_order = all(
        sweep_data[("1s", r0)]["C_FS_pos"]
        < sweep_data[("2p", r0)]["C_FS_pos"]
        < sweep_data[("3d", r0)]["C_FS_pos"]
        < sweep_data[("2s", r0)]["C_FS_pos"]
        for r0 in DEFAULT_R0_GRID)
    checks.append(fs_order)
    lmc_order = all(
        sweep_data[("3d", r0)]["C_LMC_pos"]
        < sweep_data[("2s", r0)]["C_LMC_pos"]
        < sweep_data[("2p", r0)]["C_LMC_pos"]
        < sweep_data[("1s", r0)]["C_LMC_pos"]
        for r0 in DEFAULT_R0_GRID if r0 >= 6.0)
    checks.append(lmc_order)

    failed = [i for i, ok in enumerate(checks) if not ok]
    _check(11, f"property roll-up: closed forms, recurrences, Fisher "
               f"identity, quadrature exactness, curve shapes "
               f"({len(checks) - len(failed)}/{len(checks)} sub-checks)",
           not failed)
