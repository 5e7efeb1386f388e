// spectral.hpp — Ohmic-family spectral density and derived bath quantities
#pragma once

#include <complex>

namespace qslcv {

/// Bath description J(ω) = η ω^s ω_c^{1−s} e^{−ω/ω_c} together with the
/// system frequency ω₀. ω₀ = 1 fixes the unit system: all frequencies are in
/// units of ω₀ and all times in units of 1/ω₀.
struct SpectralParams {
    double eta;     // dimensionless coupling; η = 0 is the closed-system limit
    double s;       // Ohmicity exponent, > 0
    double omega_c; // cutoff frequency, > 0
    double omega_0 = 1.0;

    SpectralParams(double eta, double s, double omega_c);

    bool sub_ohmic() const { return s < 1.0; }
    bool ohmic() const { return s == 1.0; }
    bool super_ohmic() const { return s > 1.0; }
};

/// J(ω) for ω ≥ 0.
double spectral_density(const SpectralParams& p, double omega);

/// dJ/dω for ω > 0.
double spectral_density_slope(const SpectralParams& p, double omega);

/// Memory kernel μ(t) = ∫₀^∞ J(ω) e^{−iωt} dω, evaluated through the closed
/// form η ω_c^{1−s} Γ(s+1) (1/ω_c + it)^{−(s+1)} (principal branch).
std::complex<double> memory_kernel(const SpectralParams& p, double t);

/// Markovian decay coefficient κ = π J(ω₀).
double markov_decay_rate(const SpectralParams& p);

/// Environmentally induced shift Δ(ω) = P∫₀^∞ J(ω′)/(ω − ω′) dω′ for ω > 0.
/// The principal value is handled by singularity subtraction on [0, 2ω].
double frequency_shift(const SpectralParams& p, double omega);

/// ∫₀^∞ J(ω) dω = η Γ(s+1) ω_c²  (equals μ(0)).
double total_spectral_weight(const SpectralParams& p);

/// ∫₀^∞ J(ω)/ω dω = η ω_c Γ(s); its sign against ω₀ decides the bound state.
double spectral_weight_over_omega(const SpectralParams& p);

} // namespace qslcv
