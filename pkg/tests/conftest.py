import pytest

from cha2d import (
    ConfinementSetup,
    QuantumState,
    momentum_density,
    optimize_alpha,
    position_density,
)

_orbital_cache = {}
_density_cache = {}


def orbital(label, r0):
    """Optimized orbital, cached across the whole test session."""
    key = (label, r0)
    if key not in _orbital_cache:
        _orbital_cache[key] = optimize_alpha(
            QuantumState.from_label(label), ConfinementSetup(r0=r0))
    return _orbital_cache[key]


def densities(label, r0):
    """(position, momentum) density pair, cached across the session."""
    key = (label, r0)
    if key not in _density_cache:
        orb = orbital(label, r0)
        _density_cache[key] = (position_density(orb), momentum_density(orb))
    return _density_cache[key]


@pytest.fixture(scope="session")
def get_orbital():
    return orbital


@pytest.fixture(scope="session")
def get_densities():
    return densities
