// quadrature.hpp — adaptive Gauss–Kronrod quadrature on finite and semi-infinite intervals
#pragma once

#include <complex>
#include <functional>

namespace qslcv {

struct QuadratureOptions {
    double abs_tol = 1e-10; // absolute tolerance on the total integral
    int max_levels = 60;    // smallest admissible panel is span / 2^max_levels
    int max_panels = 40000;
};

/// ∫_a^b f dx by adaptive 15-point Gauss–Kronrod, refining the worst panel first.
/// Throws numeric_error if the tolerance cannot be met within the panel budget
/// or before panels shrink below the level cap.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// ∫_0^∞ f dω via the compactifying substitution ω = scale·x/(1−x), x ∈ [0,1).
/// f must be smooth on [0, ∞) and decay at least exponentially past the scale.
double integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                               const QuadratureOptions& opts = {});

/// ∫_a^b f dx for oscillatory complex integrands: fixed panels of width at most
/// max_panel, one GK15 rule per panel. Choose max_panel ≤ π/ω for phase ω.
std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double max_panel);

} // namespace qslcv
