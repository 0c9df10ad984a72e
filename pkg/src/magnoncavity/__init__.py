"""Nanoscale magnonic cavities: mode spectra, spin coupling, and open-system dynamics."""

__version__ = "0.1.0"

from .constants import (CONSTANTS, ConfigError, Constants, DomainError,
                        NumericalError, field_to_tesla, tesla_to_field)
from .material import (MaterialParams, StaticFieldState, SusceptibilityTensor,
                       internal_field, state_from_internal, susceptibility)
from .modes import (CavityConfig, MagnonMode, PolarizationVectors,
                    coupling_strength, kittel_frequency, magnon_modes,
                    mode_field, mode_frequency, mode_potential, quantize_mode)
from .spectral import (FieldSweepMap, SpectralGrid, auto_omega_grid,
                       field_sweep_map, spectral_density, spectral_grid)
from .dynamics import (EmitterConfig, MemoryKernel, TimeSeries, build_kernel,
                       evolve_pseudomode, evolve_volterra,
                       extract_rabi_frequency, first_revival_time,
                       fit_decay_rate, max_stable_dt, radius_sweep_dynamics)
from .network import (TransferResult, TwoEmitterConfig, coupling_vs_separation_sweep,
                      dipole_dipole_coupling, effective_coupling, has_fast_ripples,
                      symmetric_pair, transfer_dynamics)

__all__ = [
    "CONSTANTS", "Constants", "ConfigError", "DomainError", "NumericalError",
    "tesla_to_field", "field_to_tesla",
    "MaterialParams", "StaticFieldState", "SusceptibilityTensor",
    "internal_field", "state_from_internal", "susceptibility",
    "CavityConfig", "MagnonMode", "PolarizationVectors", "coupling_strength",
    "kittel_frequency", "magnon_modes", "mode_field", "mode_frequency",
    "mode_potential", "quantize_mode",
    "FieldSweepMap", "SpectralGrid", "auto_omega_grid", "field_sweep_map",
    "spectral_density", "spectral_grid",
    "EmitterConfig", "MemoryKernel", "TimeSeries", "build_kernel",
    "evolve_pseudomode", "evolve_volterra", "extract_rabi_frequency",
    "first_revival_time", "fit_decay_rate", "max_stable_dt",
    "radius_sweep_dynamics",
    "TransferResult", "TwoEmitterConfig", "coupling_vs_separation_sweep",
    "dipole_dipole_coupling", "effective_coupling", "has_fast_ripples",
    "symmetric_pair", "transfer_dynamics",
]
