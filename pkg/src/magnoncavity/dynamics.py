"""Non-Markovian decay of a spin emitter into the magnon modes.

Rotating-frame amplitude c(t) (c_tilde, slowly varying at omega0) obeys

    dc/dt = -Int_0^t K(t - t') c(t') dt',
    K(tau) = sum_n g_n^2 exp[(i(omega0 - omega_n) - Gamma_n/2) tau],

the closed-contour transform of the Lorentzian spectral density. Two
independent solvers are provided and cross-validated:

  * evolve_volterra   -- literal trapezoidal-history discretization of the
                         integro-differential equation, O(N^2).
  * evolve_pseudomode -- equivalent linear ODE system (one damped auxiliary
                         amplitude per Lorentzian), adaptive high-order
                         integrator, O(N * modes). Production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .constants import ConfigError, DomainError, NumericalError
from .material import state_from_internal
from .modes import CavityConfig, kittel_frequency
from .spectral import mode_couplings

POPULATION_TOL = 1e-9


@dataclass(frozen=True)
class EmitterConfig:
    """Spin position (m), transition frequency (rad/s), dipole scale factor.

    The transition dipole is circular with magnitude sqrt(2)*muB; dipole_scale
    multiplies it (1.0 = a bare electron spin).
    """

    position: tuple[float, float, float]
    omega0: float
    dipole_scale: float = 1.0


@dataclass(frozen=True)
class MemoryKernel:
    """K(tau) = sum_k weights[k] * exp(rates[k] * tau).

    weights are the g_n^2 (rad^2/s^2); rates are i*(omega0 - omega_n) - Gamma_n/2.
    """

    weights: tuple[float, ...]
    rates: tuple[complex, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise DomainError("kernel weights must be non-negative")

    @property
    def K0(self) -> float:
        return float(sum(self.weights))

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        if not self.weights:
            return np.zeros(tau.shape, dtype=complex)
        w = np.array(self.weights)
        s = np.array(self.rates)
        return np.sum(w * np.exp(s * tau[..., None]), axis=-1)


@dataclass(frozen=True)
class TimeSeries:
    """Sampled populations |c_e(t)|^2 with optional mode amplitudes."""

    times: np.ndarray
    populations: np.ndarray
    amplitudes: np.ndarray | None = None
    mode_amplitudes: np.ndarray | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.populations
        if np.any(p < -POPULATION_TOL) or np.any(p > 1.0 + POPULATION_TOL):
            raise NumericalError("populations left [0, 1] beyond tolerance")


def build_kernel(emitter: EmitterConfig, cavity: CavityConfig) -> MemoryKernel:
    """One exponential term per retained mode, from the quantized couplings."""
    omega_n, g_n, Gamma_n = mode_couplings(cavity, emitter)
    rates = 1j * (emitter.omega0 - omega_n) - Gamma_n / 2.0
    return MemoryKernel(weights=tuple(g_n**2), rates=tuple(rates))


def max_stable_dt(kernel: MemoryKernel) -> float:
    """Resolution guard: dt must not exceed min(2pi/max|detuning|, 1/Gamma, 1/(10 g_max))/10."""
    bounds = {}
    if kernel.weights:
        det = max(abs(s.imag) for s in kernel.rates)
        if det > 0:
            bounds["detuning"] = 2.0 * math.pi / det
        Gamma = max(-2.0 * s.real for s in kernel.rates)
        if Gamma > 0:
            bounds["linewidth"] = 1.0 / Gamma
        gmax = math.sqrt(max(kernel.weights))
        if gmax > 0:
            bounds["coupling"] = 1.0 / (10.0 * gmax)
    if not bounds:
        return math.inf
    return min(bounds.values()) / 10.0


def _check_dt(kernel: MemoryKernel, dt: float) -> None:
    if dt <= 0:
        raise ConfigError("dt must be positive")
    limit = max_stable_dt(kernel)
    if dt > limit:
        # Name the binding constraint for the error message.
        names = {}
        if kernel.weights:
            det = max(abs(s.imag) for s in kernel.rates)
            if det > 0:
                names["max detuning"] = 2.0 * math.pi / det / 10.0
            Gamma = max(-2.0 * s.real for s in kernel.rates)
            if Gamma > 0:
                names["linewidth"] = 1.0 / Gamma / 10.0
            gmax = math.sqrt(max(kernel.weights))
            if gmax > 0:
                names["max coupling"] = 1.0 / (10.0 * gmax) / 10.0
        binding = min(names, key=names.get) if names else "kernel"
        raise ConfigError(
            f"dt = {dt:g} s exceeds the resolution guard {limit:g} s "
            f"(binding constraint: {binding})"
        )


def evolve_volterra(kernel: MemoryKernel, t_end: float, dt: float) -> TimeSeries:
    """Trapezoidal-history integration of the Volterra equation.

    Crank-Nicolson in time with a trapezoid rule over the full history;
    second order in dt, cost O(N^2).
    """
    _check_dt(kernel, dt)
    N = int(round(t_end / dt))
    times = np.arange(N + 1) * dt
    c = np.zeros(N + 1, dtype=complex)
    c[0] = 1.0

    if not kernel.weights:
        return TimeSeries(times=times, populations=np.ones(N + 1),
                          amplitudes=np.ones(N + 1, dtype=complex))

    Kgrid = kernel(times)
    K0 = Kgrid[0]
    f_prev = 0.0 + 0.0j          # dc/dt at t_0 (history integral is empty)
    denom = 1.0 + dt * dt * K0 / 4.0
    for k in range(N):
        # Trapezoid over history for the integral at t_{k+1}, excluding the
        # as-yet-unknown endpoint term (dt/2)*K(0)*c_{k+1}.
        hist = np.dot(Kgrid[k + 1:0:-1], c[: k + 1]) - 0.5 * Kgrid[k + 1] * c[0]
        A = dt * hist
        c_next = (c[k] + 0.5 * dt * f_prev - 0.5 * dt * A) / denom
        c[k + 1] = c_next
        f_prev = -(A + 0.5 * dt * K0 * c_next)

    return TimeSeries(times=times, populations=np.abs(c) ** 2, amplitudes=c,
                      metadata={"solver": "volterra", "dt_s": dt})


def evolve_pseudomode(kernel: MemoryKernel, t_end: float, dt: float,
                      rtol: float = 1e-10, atol: float = 1e-12) -> TimeSeries:
    """Adaptive integration of the equivalent damped-mode ODE system."""
    _check_dt(kernel, dt)
    times = np.arange(int(round(t_end / dt)) + 1) * dt
    if not kernel.weights:
        return TimeSeries(times=times, populations=np.ones(times.size),
                          amplitudes=np.ones(times.size, dtype=complex))

    g = np.sqrt(np.array(kernel.weights))
    s = np.array(kernel.rates)

    def rhs(t, y):
        c, b = y[0], y[1:]
        dc = -1j * np.sum(g * b)
        db = -1j * g * c + s * b
        return np.concatenate(([dc], db))

    y0 = np.zeros(1 + g.size, dtype=complex)
    y0[0] = 1.0
    sol = solve_ivp(rhs, (0.0, times[-1]), y0, t_eval=times, method="DOP853",
                    rtol=rtol, atol=atol)
    if not sol.success:
        raise NumericalError(f"pseudo-mode integration failed: {sol.message}")
    c = sol.y[0]
    return TimeSeries(times=times, populations=np.abs(c) ** 2, amplitudes=c,
                      mode_amplitudes=sol.y[1:],
                      metadata={"solver": "pseudomode", "dt_s": dt, "rtol": rtol})


def radius_sweep_dynamics(R_values, mat, H0: float, t_end: float,
                          a_over_R: float = 1.2, n_max: int = 1,
                          dt: float | None = None,
                          dipole_scale: float = 1.0) -> dict[float, TimeSeries]:
    """Resonant decay dynamics per sphere radius, omega0 retuned to the Kittel mode."""
    out: dict[float, TimeSeries] = {}
    fields = state_from_internal(H0, mat)
    for R in R_values:
        if not (10e-9 <= R <= 500e-9):
            raise DomainError(f"R = {R:g} m outside the supported [10, 500] nm range")
        cavity = CavityConfig(R=R, mat=mat, fields=fields, n_max=n_max)
        omega0 = kittel_frequency(fields, mat)
        emitter = EmitterConfig(position=(a_over_R * R, 0.0, 0.0), omega0=omega0,
                                dipole_scale=dipole_scale)
        kernel = build_kernel(emitter, cavity)
        step = dt if dt is not None else max_stable_dt(kernel) / 2.0
        out[R] = evolve_pseudomode(kernel, t_end, step)
    return out


def extract_rabi_frequency(ts: TimeSeries) -> float:
    """Omega = pi/t_min from the first local minimum of the population."""
    p = ts.populations
    for k in range(1, p.size - 1):
        if p[k] < p[k - 1] and p[k] <= p[k + 1]:
            return math.pi / ts.times[k]
    raise NumericalError("no population minimum found; horizon too short?")


def first_revival_time(ts: TimeSeries) -> float:
    """Time of the first local population maximum after the first minimum."""
    p = ts.populations
    k = 1
    while k < p.size - 1 and not (p[k] < p[k - 1] and p[k] <= p[k + 1]):
        k += 1
    while k < p.size - 1 and not (p[k] > p[k - 1] and p[k] >= p[k + 1]):
        k += 1
    if k >= p.size - 1:
        raise NumericalError("no population revival found; horizon too short?")
    return float(ts.times[k])


def fit_decay_rate(ts: TimeSeries, floor: float = 1e-3) -> float:
    """Exponential rate from a linear fit of log population (Markovian regime)."""
    mask = ts.populations > floor
    mask[0] = False  # log(1) anchors the fit too strongly at t = 0
    if mask.sum() < 10:
        raise NumericalError("too few points above the fit floor")
    slope, _ = np.polyfit(ts.times[mask], np.log(ts.populations[mask]), 1)
    return float(-slope)
