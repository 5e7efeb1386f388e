#include "qsl.hpp"

#include <cmath>
#include <stdexcept>

namespace qslcv {

namespace {

const double kWignerPrefactor = 2.0 / std::sqrt(M_PI);

double wasserstein_closed_form(std::complex<double> alpha, std::complex<double> u) {
    const double exponent = std::norm(alpha) * std::norm(u - 1.0);
    return kWignerPrefactor * std::sqrt(-std::expm1(-exponent));
}

// √F_Q / 2 through the Gaussian pipeline; for this trajectory class σ̇ = 0,
// so the value reduces to |α u̇|.
double fisher_speed(const GaussianState& state, std::complex<double> alpha,
                    std::complex<double> du) {
    const std::complex<double> dd = alpha * du;
    const double fq = quantum_fisher_information(state, {dd, std::conj(dd)}, Mat2c{});
    return 0.5 * std::sqrt(fq);
}

} // namespace

QslEvaluator::QslEvaluator(const CoherentTrajectory& ct) : ct_(ct) {
    if (!ct.traj || ct.traj->size() == 0)
        throw std::domain_error("QslEvaluator: empty trajectory");
    const AmplitudeTrajectory& traj = *ct.traj;
    const std::size_t n = traj.size();
    ell_cum_.resize(n);
    double acc = 0.0;
    double prev = fisher_speed(GaussianState::coherent(ct.alpha * traj.u[0]), ct.alpha,
                               traj.du[0]);
    ell_cum_[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double speed = fisher_speed(GaussianState::coherent(ct.alpha * traj.u[i]),
                                          ct.alpha, traj.du[i]);
        acc += 0.5 * traj.step * (prev + speed);
        ell_cum_[i] = acc;
        prev = speed;
    }
}

std::size_t QslEvaluator::index_of(double tau) const {
    const AmplitudeTrajectory& traj = *ct_.traj;
    const auto i = static_cast<long>(std::llround(tau / traj.step));
    if (i < 0 || static_cast<std::size_t>(i) >= traj.size())
        throw std::domain_error("QslEvaluator: horizon outside the trajectory");
    if (std::abs(traj.t[static_cast<std::size_t>(i)] - tau) > 0.5 * traj.step + 1e-12)
        throw std::domain_error("QslEvaluator: horizon does not hit the grid");
    return static_cast<std::size_t>(i);
}

QslReport QslEvaluator::at(std::size_t i) const {
    const AmplitudeTrajectory& traj = *ct_.traj;
    if (i >= traj.size()) throw std::domain_error("QslEvaluator: index out of range");

    QslReport r;
    r.tau = traj.t[i];
    r.ell = ell_cum_[i];
    if (!(r.tau > 0.0) || !(r.ell > 0.0))
        throw std::domain_error("qsl: ratio undefined (zero horizon or zero speed)");
    r.v_bar = r.ell / r.tau;

    const GaussianState initial = GaussianState::coherent(ct_.alpha);
    const GaussianState end_state = GaussianState::coherent(ct_.alpha * traj.u[i]);
    r.l_b = bures_angle(initial, end_state);
    r.ratio = r.l_b / r.ell;

    r.v_bar_w = kWignerPrefactor * r.v_bar;
    r.l_w = wasserstein_closed_form(ct_.alpha, traj.u[i]);
    r.ratio_w = r.l_w / (r.v_bar_w * r.tau);
    return r;
}

double average_speed(const CoherentTrajectory& ct) {
    QslEvaluator eval(ct);
    const std::size_t last = eval.size() - 1;
    if (last == 0) throw std::domain_error("average_speed: trajectory has a single point");
    return eval.at(last).v_bar;
}

QslReport qsl_ratio(const CoherentTrajectory& ct) {
    QslEvaluator eval(ct);
    return eval.at(eval.size() - 1);
}

double wasserstein_distance(const CoherentTrajectory& ct, double tau) {
    if (!ct.traj) throw std::domain_error("wasserstein_distance: empty trajectory");
    if (tau == 0.0) return 0.0;
    QslEvaluator eval(ct);
    return wasserstein_closed_form(ct.alpha, ct.traj->u[eval.index_of(tau)]);
}

std::pair<double, double> wigner_speed_and_ratio(const CoherentTrajectory& ct) {
    const QslReport r = qsl_ratio(ct);
    return {r.v_bar_w, r.ratio_w};
}

std::vector<TightnessRow> tightness_compare(const CoherentTrajectory& ct,
                                            std::span<const double> tau_grid) {
    QslEvaluator eval(ct);
    std::vector<TightnessRow> rows;
    rows.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const QslReport r = eval.at(eval.index_of(tau));
        rows.push_back({r.tau, r.ratio, r.ratio_w});
    }
    return rows;
}

std::vector<QslReport> report_series(const CoherentTrajectory& ct,
                                     std::span<const double> taus) {
    QslEvaluator eval(ct);
    std::vector<QslReport> reports;
    reports.reserve(taus.size());
    for (double tau : taus) reports.push_back(eval.at(eval.index_of(tau)));
    return reports;
}

QslReport markov_qsl_report(const SpectralParams& p, double alpha_abs, double tau,
                            bool include_shift) {
    if (!(alpha_abs > 0.0)) throw std::domain_error("markov_qsl_report: alpha must be > 0");
    if (!(tau > 0.0)) throw std::domain_error("markov_qsl_report: tau must be > 0");

    const double kappa = markov_decay_rate(p);
    const double omega = p.omega_0 + (include_shift ? frequency_shift(p, p.omega_0) : 0.0);
    const std::complex<double> u = std::exp(std::complex<double>(-kappa, -omega) * tau);

    QslReport r;
    r.tau = tau;
    // ∫₀^τ |α u̇^MA| dt = |α|√(κ²+Ω²)(1−e^{−κτ})/κ, with the κ → 0 limit |α|Ωτ.
    const double speed_scale = alpha_abs * std::hypot(kappa, omega);
    r.ell = (kappa > 0.0) ? speed_scale * (-std::expm1(-kappa * tau)) / kappa
                          : speed_scale * tau;
    r.v_bar = r.ell / tau;

    const GaussianState initial = GaussianState::coherent(alpha_abs);
    const GaussianState end_state = GaussianState::coherent(alpha_abs * u);
    r.l_b = bures_angle(initial, end_state);
    r.ratio = r.l_b / r.ell;

    r.v_bar_w = kWignerPrefactor * r.v_bar;
    r.l_w = wasserstein_closed_form(alpha_abs, u);
    r.ratio_w = r.l_w / (r.v_bar_w * tau);
    return r;
}

} // namespace qslcv
