import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magnoncavity import (CONSTANTS, CavityConfig, DomainError, EmitterConfig,
                          coupling_strength, kittel_frequency, magnon_modes,
                          mode_field, mode_frequency, mode_potential,
                          quantize_mode)
from magnoncavity.modes import E_MINUS, E_PLUS

from oracles import (fd_curl_and_divergence, fd_gradient_of_potential,
                     quantization_integral, quantized_mode_oracle)

GHZ = 2.0 * math.pi * 1e9


# ---------------------------------------------------------------- frequencies

def test_kittel_frequency_hand_value(cavity):
    # 28 GHz/T * (0.5 + 0.178/3) T = 15.66133... GHz
    assert kittel_frequency(cavity.fields, cavity.mat) / GHZ == pytest.approx(
        28.0 * (0.5 + 0.178 / 3.0), rel=1e-12)


def test_kittel_same_code_path_as_n1(cavity):
    assert kittel_frequency(cavity.fields, cavity.mat) == mode_frequency(
        1, cavity.fields, cavity.mat)


def test_frequencies_increase_and_saturate(cavity):
    omegas = [mode_frequency(n, cavity.fields, cavity.mat) for n in range(1, 40)]
    assert all(b > a for a, b in zip(omegas, omegas[1:]))
    limit = cavity.mat.gamma_tilde * (cavity.fields.H0 + cavity.mat.Ms / 2.0)
    assert omegas[-1] < limit
    assert omegas[-1] / limit == pytest.approx(1.0, abs=2e-3)


def test_branch_band_edges(cavity):
    lo = cavity.mat.gamma_tilde * (cavity.fields.H0 + cavity.mat.Ms / 3.0)
    for n in range(1, 10):
        w = mode_frequency(n, cavity.fields, cavity.mat)
        assert lo <= w < cavity.mat.gamma_tilde * (cavity.fields.H0 + cavity.mat.Ms / 2.0)


@settings(deadline=None, max_examples=40)
@given(n=st.integers(min_value=1, max_value=30))
def test_frequency_closed_form(n, cavity):
    w = mode_frequency(n, cavity.fields, cavity.mat)
    expected = cavity.mat.gamma_tilde * (
        cavity.fields.H0 + cavity.mat.Ms * n / (2 * n + 1))
    assert w == pytest.approx(expected, rel=1e-14)


def test_invalid_mode_order(cavity):
    with pytest.raises(DomainError):
        mode_frequency(0, cavity.fields, cavity.mat)
    with pytest.raises(DomainError):
        mode_field(0, [(1e-9, 0, 0)], cavity)


# ------------------------------------------------------- potential and field

def test_potential_continuity_across_surface(cavity, rng):
    R = cavity.R
    for n in (1, 2, 3, 5):
        for _ in range(20):
            u = rng.normal(size=3)
            u /= np.linalg.norm(u)
            inside = mode_potential(n, (1.0 - 1e-8) * R * u, R)
            outside = mode_potential(n, (1.0 + 1e-8) * R * u, R)
            scale = max(abs(inside), abs(outside), R**n * 1e-12)
            assert abs(inside - outside) / scale < 1e-6


def test_potential_exterior_power_law(cavity):
    R = cavity.R
    p = np.array([2.1 * R, 0.7 * R, -1.3 * R])
    for n in (1, 2, 4):
        ratio = mode_potential(n, 2.0 * p, R) / mode_potential(n, p, R)
        assert ratio == pytest.approx(2.0 ** -(n + 1), rel=1e-12)


def test_field_matches_fd_gradient(cavity, rng):
    R = cavity.R
    for n in (1, 2, 3):
        for r in [np.array([0.4 * R, 0.2 * R, -0.3 * R]),
                  np.array([1.5 * R, -0.8 * R, 0.9 * R]),
                  R * rng.normal(size=3) * 0.25,
                  R * (rng.normal(size=3) + 3.0)]:
            got = mode_field(n, r, cavity)
            want = fd_gradient_of_potential(n, r, R)
            assert np.allclose(got, want, rtol=1e-6, atol=1e-6 * np.max(np.abs(want)))


def test_field_curl_and_divergence_free(cavity):
    R = cavity.R

    for n in (1, 2, 3):
        def f(r, n=n):
            return mode_field(n, r, cavity)

        for r in (np.array([0.3 * R, 0.25 * R, 0.2 * R]),
                  np.array([1.8 * R, -0.9 * R, 1.1 * R])):
            curl, div = fd_curl_and_divergence(f, r, 1e-6 * R)
            ref = np.max(np.abs(f(r))) / R
            assert np.max(np.abs(curl)) < 1e-5 * ref
            assert abs(div) < 1e-5 * ref


def test_interior_field_is_co_rotating_circular(cavity, rng):
    # Interior H is exactly e(-) polarized: zero overlap with e(+).
    R = cavity.R
    for n in (1, 2, 4):
        r = 0.3 * R * rng.normal(size=3)
        H = mode_field(n, r, cavity)
        assert abs(np.vdot(E_PLUS, H)) < 1e-12 * np.linalg.norm(H)
        assert abs(np.vdot(E_MINUS, H)) == pytest.approx(np.linalg.norm(H), rel=1e-12)
        assert H[2] == 0.0


def test_uniform_interior_field_n1(cavity, rng):
    R = cavity.R
    vals = [mode_field(1, 0.5 * R * rng.normal(size=3) / 3.0, cavity) for _ in range(5)]
    for v in vals[1:]:
        assert np.allclose(v, vals[0], rtol=0, atol=1e-15)


def test_exterior_field_power_law(cavity):
    # Equatorial |H| falls as a^-(n+2) outside the sphere.
    R = cavity.R
    for n in (1, 2, 3):
        h1 = np.linalg.norm(mode_field(n, (2.0 * R, 0.0, 0.0), cavity))
        h2 = np.linalg.norm(mode_field(n, (4.0 * R, 0.0, 0.0), cavity))
        assert h2 / h1 == pytest.approx(2.0 ** -(n + 2), rel=1e-12)


def test_surface_shell_evaluates_as_exterior(cavity):
    R = cavity.R
    on = mode_field(1, (R, 0.0, 0.0), cavity)
    just_out = mode_field(1, (R * (1 + 1e-13), 0.0, 0.0), cavity)
    assert np.allclose(on, just_out, rtol=1e-9)


def test_field_vectorized_shape(cavity):
    pts = np.array([[[0.5 * cavity.R, 0, 0], [2 * cavity.R, 0, 0]]])
    out = mode_field(1, pts, cavity)
    assert out.shape == (1, 2, 3)
    single = mode_field(1, pts[0, 1], cavity)
    assert np.allclose(out[0, 1], single)


def test_field_undefined_at_origin(cavity):
    with pytest.raises(DomainError):
        mode_field(1, (0.0, 0.0, 0.0), cavity)


# -------------------------------------------------------------- quantization

@pytest.mark.parametrize("n", [1, 2, 3])
def test_quantization_against_quadrature(n, cavity):
    # Closed-form normalization vs independent Gauss-Legendre quadrature
    # with a finite-difference tensor derivative.
    mode = quantize_mode(n, cavity)
    oracle = quantized_mode_oracle(n, cavity)
    assert mode.scale == pytest.approx(oracle["scale"], rel=1e-6)
    assert mode.Hzp == pytest.approx(oracle["Hzp"], rel=1e-6)
    assert mode.Veff == pytest.approx(oracle["Veff"], rel=1e-6)


def test_one_quantum_of_energy(cavity):
    mode = quantize_mode(1, cavity)
    energy = mode.scale**2 * quantization_integral(1, cavity)
    assert energy == pytest.approx(CONSTANTS.hbar * mode.omega, rel=1e-8)


def test_veff_closed_form_n1(cavity):
    # Veff = 3V (Ms + 3 H0)/Ms for the uniform mode.
    mode = quantize_mode(1, cavity)
    Ms, H0 = cavity.mat.Ms, cavity.fields.H0
    expected = 3.0 * cavity.volume * (Ms + 3.0 * H0) / Ms
    assert mode.Veff == pytest.approx(expected, rel=1e-12)


def test_working_point_numbers(cavity):
    mode = quantize_mode(1, cavity)
    assert mode.Veff == pytest.approx(3.198e-21, rel=1e-3)   # m^3
    assert mode.Hzp == pytest.approx(50.81, rel=1e-3)        # A/m
    assert mode.omega / GHZ == pytest.approx(15.6613, rel=1e-4)


def test_veff_scales_with_volume(yig, fields):
    v30 = quantize_mode(1, CavityConfig(R=30e-9, mat=yig, fields=fields)).Veff
    v60 = quantize_mode(1, CavityConfig(R=60e-9, mat=yig, fields=fields)).Veff
    assert v60 / v30 == pytest.approx(8.0, rel=1e-12)


def test_hzp_consistent_with_veff(cavity):
    for n in (1, 2, 3):
        mode = quantize_mode(n, cavity)
        assert CONSTANTS.mu0 * mode.Hzp**2 * mode.Veff == pytest.approx(
            CONSTANTS.hbar * mode.omega, rel=1e-12)


def test_mode_list(cavity):
    modes = magnon_modes(cavity)
    assert [m.n for m in modes] == list(range(1, cavity.n_max + 1))
    assert all(m.m == m.n for m in modes)
    omegas = [m.omega for m in modes]
    assert all(b > a for a, b in zip(omegas, omegas[1:]))


# ------------------------------------------------------------------ coupling

def test_coupling_hand_value(cavity, emitter):
    # g/2pi = 1.0971 MHz for R = 30 nm, equatorial emitter at a = 1.2 R.
    g = coupling_strength(quantize_mode(1, cavity), emitter)
    assert g / (2 * math.pi) == pytest.approx(1.0971e6, rel=1e-3)


def test_coupling_closed_form_projection(cavity, emitter):
    # <e(+), H_out> at the equator is (2n+1) R^(2n+1) / (sqrt(2) a^(n+2)) times scale.
    a = emitter.position[0]
    for n in (1, 2, 3):
        mode = quantize_mode(n, cavity)
        proj = abs(np.vdot(E_PLUS, mode.field(np.array(emitter.position))))
        expected = mode.scale * (2 * n + 1) * cavity.R ** (2 * n + 1) / (
            math.sqrt(2.0) * a ** (n + 2))
        assert proj == pytest.approx(expected, rel=1e-12)
        g = coupling_strength(mode, emitter)
        assert g == pytest.approx(
            math.sqrt(2.0) * CONSTANTS.mu0 * CONSTANTS.muB * proj / CONSTANTS.hbar,
            rel=1e-12)


def test_coupling_distance_law(cavity):
    mode = quantize_mode(1, cavity)
    omega0 = mode.omega
    g_near = coupling_strength(mode, EmitterConfig((1.2 * cavity.R, 0, 0), omega0))
    g_far = coupling_strength(mode, EmitterConfig((2.4 * cavity.R, 0, 0), omega0))
    assert g_near / g_far == pytest.approx(8.0, rel=1e-12)


def test_coupling_linear_in_dipole_scale(cavity, emitter):
    mode = quantize_mode(1, cavity)
    boosted = EmitterConfig(emitter.position, emitter.omega0, dipole_scale=7.0)
    assert coupling_strength(mode, boosted) == pytest.approx(
        7.0 * coupling_strength(mode, emitter), rel=1e-12)


def test_coupling_rejects_interior_emitter(cavity):
    mode = quantize_mode(1, cavity)
    with pytest.raises(DomainError):
        coupling_strength(mode, EmitterConfig((0.5 * cavity.R, 0, 0), mode.omega))
