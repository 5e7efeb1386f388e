#include "spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace qslcv {

SpectralParams::SpectralParams(double eta_, double s_, double omega_c_)
    : eta(eta_), s(s_), omega_c(omega_c_) {
    if (!std::isfinite(eta) || eta < 0.0)
        throw std::invalid_argument("SpectralParams: eta must be finite and >= 0");
    if (!std::isfinite(s) || s <= 0.0)
        throw std::invalid_argument("SpectralParams: s must be finite and > 0");
    if (!std::isfinite(omega_c) || omega_c <= 0.0)
        throw std::invalid_argument("SpectralParams: omega_c must be finite and > 0");
}

double spectral_density(const SpectralParams& p, double omega) {
    if (omega < 0.0) throw std::domain_error("spectral_density: omega must be >= 0");
    if (omega == 0.0 || p.eta == 0.0) return 0.0;
    return p.eta * std::pow(omega, p.s) * std::pow(p.omega_c, 1.0 - p.s) *
           std::exp(-omega / p.omega_c);
}

double spectral_density_slope(const SpectralParams& p, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("spectral_density_slope: omega must be > 0");
    const double common =
        p.eta * std::pow(p.omega_c, 1.0 - p.s) * std::exp(-omega / p.omega_c);
    return common * (p.s * std::pow(omega, p.s - 1.0) - std::pow(omega, p.s) / p.omega_c);
}

std::complex<double> memory_kernel(const SpectralParams& p, double t) {
    if (t < 0.0) throw std::domain_error("memory_kernel: t must be >= 0");
    const std::complex<double> pole(1.0 / p.omega_c, t);
    return p.eta * std::pow(p.omega_c, 1.0 - p.s) * std::tgamma(p.s + 1.0) *
           std::pow(pole, -(p.s + 1.0));
}

double markov_decay_rate(const SpectralParams& p) {
    return M_PI * spectral_density(p, p.omega_0);
}

double frequency_shift(const SpectralParams& p, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("frequency_shift: omega must be > 0");
    if (p.eta == 0.0) return 0.0;

    const double j_at = spectral_density(p, omega);
    const double slope_at = spectral_density_slope(p, omega);

    // [J(ω′) − J(ω)]/(ω − ω′) has a removable singularity at ω′ = ω; the
    // subtracted constant integrates to zero on the symmetric window [0, 2ω].
    auto difference_quotient = [&](double w) {
        const double d = omega - w;
        if (std::abs(d) < 1e-8 * omega) return -slope_at;
        return (spectral_density(p, w) - j_at) / d;
    };
    const double near = integrate(difference_quotient, 0.0, 2.0 * omega);

    auto tail = [&](double w) {
        const double om = 2.0 * omega + w;
        return spectral_density(p, om) / (omega - om);
    };
    const double far = integrate_semi_infinite(tail, std::max(p.omega_c, omega));
    return near + far;
}

double total_spectral_weight(const SpectralParams& p) {
    return p.eta * std::tgamma(p.s + 1.0) * p.omega_c * p.omega_c;
}

double spectral_weight_over_omega(const SpectralParams& p) {
    return p.eta * p.omega_c * std::tgamma(p.s);
}

} // namespace qslcv
