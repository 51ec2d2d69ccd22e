"""Entropy and complexity measures of the disk-confined 2D hydrogen atom."""

from .density import RadialDensity
from .hydrogen import (
    FREE_RADIUS,
    LABELS,
    STATE_ORDER,
    ConfinedOrbital,
    ConfinementSetup,
    QuantumState,
    energy,
    free_beta,
    normalize,
    optimize_alpha,
    position_density,
    trial_radial,
    trial_radial_deriv,
)
from .infotheory import (
    MeasureSpec,
    complexity_fs,
    complexity_lmc,
    complexity_lmc_renyi,
    disequilibrium,
    fisher,
    renyi,
    shannon,
    uncertainty_fisher,
    uncertainty_shannon,
)
from .momentum import momentum_amplitude, momentum_density
from .records import (
    MeasureRecord,
    SweepConfig,
    compute_record,
    crossover_radius,
    inversion_radius,
    sweep,
    table_rows,
)

__version__ = "0.1.0"
