// qsl.hpp — speeds, path lengths, and QSL times in the Fisher–Rao and Wigner geometries
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dynamics.hpp"
#include "gaussian.hpp"

namespace qslcv {

/// A coherent state |α⟩ dragged by an amplitude trajectory: the reduced state
/// at time t has d_t = (α u(t), α* u(t)*) and σ_t = 1.
struct CoherentTrajectory {
    std::complex<double> alpha;
    const AmplitudeTrajectory* traj = nullptr;
};

struct QslReport {
    double tau = 0.0;
    double ell = 0.0;     // path length ∫ √F_Q / 2 dt = ∫ |α u̇| dt
    double l_b = 0.0;     // Bures angle between the endpoints
    double v_bar = 0.0;   // ℓ/τ
    double ratio = 0.0;   // τ_QSL/τ = L_B/ℓ
    double v_bar_w = 0.0; // Wigner-space speed, (2/√π)·v̄
    double l_w = 0.0;     // Wasserstein-2 distance between endpoint Wigner functions
    double ratio_w = 0.0; // τ^W_QSL/τ = L_W/(v̄_W τ)
};

/// Precomputes the cumulative path length once so that reports at many
/// horizons on the same trajectory cost O(1) each.
class QslEvaluator {
public:
    explicit QslEvaluator(const CoherentTrajectory& ct);

    std::size_t size() const { return ell_cum_.size(); }
    /// Report with the horizon truncated at grid index i (t_i > 0 required).
    QslReport at(std::size_t i) const;
    /// Nearest grid index for a requested horizon.
    std::size_t index_of(double tau) const;

private:
    CoherentTrajectory ct_;
    std::vector<double> ell_cum_;
};

/// Time-averaged speed v̄ = (1/τ)∫₀^τ |α u̇| dt over the whole trajectory.
double average_speed(const CoherentTrajectory& ct);

/// Full report at the trajectory's final time.
QslReport qsl_ratio(const CoherentTrajectory& ct);

/// Closed-form Wasserstein-2 distance L_W = (2/√π)·√(1 − e^{−|α|²|u(τ)−1|²}).
double wasserstein_distance(const CoherentTrajectory& ct, double tau);

/// (v̄_W, τ^W_QSL/τ) at the trajectory's final time.
std::pair<double, double> wigner_speed_and_ratio(const CoherentTrajectory& ct);

struct TightnessRow {
    double tau;
    double ratio;
    double ratio_w;
};

/// (τ, τ_QSL/τ, τ^W_QSL/τ) rows over a horizon grid.
std::vector<TightnessRow> tightness_compare(const CoherentTrajectory& ct,
                                            std::span<const double> tau_grid);

/// Reports for several horizons on one trajectory.
std::vector<QslReport> report_series(const CoherentTrajectory& ct,
                                     std::span<const double> taus);

/// Fully closed-form Born–Markov report (no grid): u^MA endpoint plus the
/// analytic speed |α|√(κ²+Ω²)(1−e^{−κτ})/(κτ) with Ω = ω₀ [+ Δ(ω₀)].
QslReport markov_qsl_report(const SpectralParams& p, double alpha_abs, double tau,
                            bool include_shift);

} // namespace qslcv
