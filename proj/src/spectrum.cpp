#include "spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "quadrature.hpp"

namespace qslcv {

double spectral_function_y(const SpectralParams& p, double varpi) {
    if (!(varpi < 0.0))
        throw std::domain_error("spectral_function_y: requires varpi < 0 (continuum above)");
    auto f = [&](double omega) { return spectral_density(p, omega) / (omega - varpi); };
    return p.omega_0 - integrate_semi_infinite(f, std::max(p.omega_c, -varpi));
}

double band_edge_y(const SpectralParams& p) {
    // ∫ J/ω dω = (η ω_c / s) ∫₀^∞ e^{−z^{1/s}} dz after z = (ω/ω_c)^s; the
    // substituted integrand is smooth at z = 0 for every s > 0.
    const double inv_s = 1.0 / p.s;
    auto f = [inv_s](double z) { return std::exp(-std::pow(z, inv_s)); };
    const double scale = std::pow(34.0, p.s); // e^{−z^{1/s}} ≈ 2e−15 at z = scale
    const double weight = (p.eta * p.omega_c / p.s) * integrate_semi_infinite(f, scale);
    return p.omega_0 - weight;
}

BoundState find_bound_state(const SpectralParams& p) {
    BoundState bound;
    const double y0 = p.omega_0 - spectral_weight_over_omega(p);
    if (y0 >= 0.0) return bound;

    auto g = [&](double varpi) { return spectral_function_y(p, varpi) - varpi; };

    // g is strictly decreasing with g → +∞ as ϖ → −∞ and g(0⁻) = y(0) < 0.
    double lo = -(p.omega_0 + spectral_weight_over_omega(p));
    int doublings = 0;
    while (g(lo) <= 0.0) {
        lo *= 2.0;
        if (++doublings > 60)
            throw numeric_error("find_bound_state: bracket expansion failed");
    }

    // Upper bracket: probe toward the band edge until g < 0. For s < 1 the
    // root approaches 0 super-linearly near threshold and may be unresolvable.
    double hi = 0.0;
    for (int k = 3; k <= 10; ++k) {
        const double probe = -std::abs(y0) * std::pow(10.0, -k);
        if (g(probe) < 0.0) {
            hi = probe;
            break;
        }
        lo = probe; // still above the root; tighten the lower bracket
    }
    if (hi == 0.0)
        throw numeric_error("find_bound_state: root unresolvably close to the band edge");

    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double e_b = 0.5 * (lo + hi);

    const double residual = std::abs(spectral_function_y(p, e_b) - e_b);
    if (!(residual < 1e-10)) {
        std::ostringstream msg;
        msg << "find_bound_state: root residual " << residual << " exceeds 1e-10";
        throw numeric_error(msg.str());
    }

    auto z_integrand = [&](double omega) {
        const double d = e_b - omega;
        return spectral_density(p, omega) / (d * d);
    };
    const double z = 1.0 / (1.0 + integrate_semi_infinite(z_integrand, p.omega_c));
    if (!(z > 0.0 && z < 1.0))
        throw numeric_error("find_bound_state: residue outside (0, 1)");

    bound.exists = true;
    bound.e_b = e_b;
    bound.z = z;
    return bound;
}

double bound_state_threshold(double s, double omega_c, double omega_0) {
    // band_edge_y is affine in η; bracket the sign change and bisect.
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    auto edge = [&](double eta) {
        SpectralParams q(eta, s, omega_c);
        q.omega_0 = omega_0;
        return band_edge_y(q);
    };
    while (edge(hi) >= 0.0) {
        hi *= 2.0;
        if (++doublings > 60)
            throw numeric_error("bound_state_threshold: no sign change found");
    }
    while ((hi - lo) > 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (edge(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::complex<double> asymptotic_amplitude(const BoundState& b, const SpectralParams& p,
                                          double tau, bool include_branch_cut,
                                          BranchCutWeight weight) {
    if (!(tau > 0.0)) throw std::domain_error("asymptotic_amplitude: tau must be > 0");

    std::complex<double> u{0.0, 0.0};
    if (b.exists) u = b.z * std::exp(std::complex<double>(0.0, -b.e_b * tau));

    if (include_branch_cut) {
        const double c = (weight == BranchCutWeight::printed) ? 2.0 * M_PI : M_PI;
        auto integrand = [&](double omega) -> std::complex<double> {
            const double j = spectral_density(p, omega);
            if (j == 0.0) return {0.0, 0.0};
            const double detune = omega - p.omega_0 - frequency_shift(p, omega);
            const double denom = detune * detune + (c * j) * (c * j);
            return j * std::exp(std::complex<double>(0.0, -omega * tau)) / denom;
        };
        const double omega_hi = 45.0 * p.omega_c;
        const double panel = std::min(M_PI / tau, p.omega_c / 8.0);
        u += integrate_panels(integrand, 0.0, omega_hi, panel);
    }
    return u;
}

} // namespace qslcv
