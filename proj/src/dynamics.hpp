// dynamics.hpp — exact non-Markovian amplitude dynamics and the Born–Markov closed form
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "spectral.hpp"

namespace qslcv {

/// Solution record on a uniform time grid. u(0) = 1 and u̇(0) = −iω₀ exactly;
/// |u(t)| ≤ 1 + 1e−6 everywhere (vacuum dissipation is contractive).
struct AmplitudeTrajectory {
    SpectralParams params;
    double step = 0.0;
    std::vector<double> t;
    std::vector<std::complex<double>> u;
    std::vector<std::complex<double>> du;
    std::vector<double> omega_t; // renormalized frequency Ω(t) = −Im[u̇/u]
    std::vector<double> gamma_t; // decay rate γ(t) = −Re[u̇/u]
    std::size_t coeff_valid = 0; // Ω/γ entries before the |u| underflow cutoff (NaN after)

    std::size_t size() const { return t.size(); }
    double tau() const { return t.empty() ? 0.0 : t.back(); }
};

/// Pointwise Ω(t), γ(t) from u and u̇, truncated (NaN-filled) once |u| falls
/// below 1e−12. Returns the number of valid leading entries.
std::size_t master_equation_coefficients(std::span<const std::complex<double>> u,
                                         std::span<const std::complex<double>> du,
                                         std::vector<double>& omega_out,
                                         std::vector<double>& gamma_out);

/// Solves u̇(t) + iω₀ u(t) + ∫₀^t μ(t−τ′) u(τ′) dτ′ = 0 with u(0) = 1 by the
/// trapezoidal method: composite-trapezoid convolution over the full history
/// and the (linear) corrector solved in closed form; O(N²) total.
/// step > 0 uses that step; step <= 0 selects h = min(0.01, 0.5/ω_c) and runs
/// a convergence gate (solve at h and h/2; the pointwise mismatch must stay
/// below 1e−5·(1 + ω₀t), else h is halved, at most four times).
AmplitudeTrajectory solve_amplitude(const SpectralParams& p, double tau, double step = 0.0);

/// Born–Markov closed form u^MA(t) = e^{−{κ + i[ω₀ + Δ(ω₀)]} t}; the shift
/// term Δ(ω₀) is dropped when include_shift is false.
std::complex<double> markov_amplitude(const SpectralParams& p, double t, bool include_shift);

/// u^MA sampled on a uniform grid with analytic derivatives.
AmplitudeTrajectory markov_trajectory(const SpectralParams& p, double tau, double step,
                                      bool include_shift);

/// Independent check on solve_amplitude: the bath is discretized into n_modes
/// oscillators at ω_k = (k−½)Δω with g_k = √(J(ω_k)Δω) and the coupled
/// single-excitation amplitude equations
///   ċ₀ = −iω₀c₀ − iΣ_k g_k c_k,   ċ_k = −iω_k c_k − i g_k c₀
/// are integrated with the classic 4th-order Runge–Kutta rule; c₀(t) equals
/// u(t) up to discretization error. Poincaré recurrences appear at 2π/Δω, so
/// the caller must keep n_modes ≥ ω_max·τ/(2π). Recommended ω_max ≈ 20·ω_c.
/// max_norm_drift, when given, receives max_t |Σ|c|² − 1| over the run.
AmplitudeTrajectory discretized_bath_oracle(const SpectralParams& p, double tau,
                                            std::size_t n_modes, double omega_max,
                                            double step = 0.01,
                                            double* max_norm_drift = nullptr);

} // namespace qslcv
