// spectrum.hpp — single-excitation spectrum analysis: bound state, residue, asymptotics
#pragma once

#include <complex>

#include "spectral.hpp"

namespace qslcv {

/// Isolated pole of the resolvent below the continuum. When present, the
/// long-time amplitude plateaus at the residue: u(τ) ≃ Z e^{−iE_b τ}.
struct BoundState {
    bool exists = false;
    double e_b = 0.0; // isolated eigenenergy, < 0 when exists
    double z = 0.0;   // residue, in (0, 1) when exists
};

/// y(ϖ) = ω₀ − ∫₀^∞ J(ω)/(ω − ϖ) dω for ϖ < 0 (monotonically decreasing).
double spectral_function_y(const SpectralParams& p, double varpi);

/// y at the band edge ϖ → 0⁻, evaluated by quadrature after the smoothing
/// substitution z = (ω/ω_c)^s. Used for the numeric threshold scan; the
/// closed form is ω₀ − η ω_c Γ(s).
double band_edge_y(const SpectralParams& p);

/// Locates the isolated root of y(ϖ) = ϖ by bisection and computes the
/// residue Z = [1 + ∫ J(ω)/(E_b − ω)² dω]⁻¹. Existence is decided by the
/// band-edge condition ω₀ − η ω_c Γ(s) < 0.
BoundState find_bound_state(const SpectralParams& p);

/// Coupling η* at which the bound state appears, from a bisection on the
/// sign of the quadrature-evaluated band-edge y. Relative tolerance 1e-9.
double bound_state_threshold(double s, double omega_c, double omega_0 = 1.0);

/// Weight of the band contribution in the denominator of the inversion
/// integral: `printed` uses [2πJ(ω)]², `standard` the resolvent form [πJ(ω)]².
enum class BranchCutWeight { printed, standard };

/// Long-time amplitude u(τ) ≃ Z e^{−iE_b τ} plus, optionally, the band
/// (branch-cut) integral evaluated with oscillation-resolving panels.
std::complex<double> asymptotic_amplitude(const BoundState& b, const SpectralParams& p,
                                          double tau, bool include_branch_cut,
                                          BranchCutWeight weight = BranchCutWeight::printed);

} // namespace qslcv
