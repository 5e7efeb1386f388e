#include "quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace qslcv {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double f1 = f(mid - half * kXgk[j]);
        const double f2 = f(mid + half * kXgk[j]);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    PanelEstimate est{resk * half, std::abs((resk - resg) * half)};
    if (!std::isfinite(est.integral))
        throw numeric_error("quadrature: integrand produced a non-finite value");
    return est;
}

struct Panel {
    double error;
    double a, b;
    double integral;
    bool operator<(const Panel& o) const { return error < o.error; }
};

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (a == b) return 0.0;
    const double span = std::abs(b - a);
    const double min_width = span * std::ldexp(1.0, -opts.max_levels);

    std::priority_queue<Panel> queue;
    PanelEstimate whole = gk15(f, a, b);
    double total = whole.integral;
    double total_error = whole.error;
    queue.push({whole.error, a, b, whole.integral});
    int panels = 1;

    while (total_error > opts.abs_tol) {
        const Panel worst = queue.top();
        if (std::abs(worst.b - worst.a) <= min_width || panels >= opts.max_panels) {
            std::ostringstream msg;
            msg << "quadrature: tolerance " << opts.abs_tol << " not reached (error "
                << total_error << ", " << panels << " panels, worst on [" << worst.a
                << ", " << worst.b << "])";
            throw numeric_error(msg.str());
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const PanelEstimate left = gk15(f, worst.a, mid);
        const PanelEstimate right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_error += left.error + right.error - worst.error;
        queue.push({left.error, worst.a, mid, left.integral});
        queue.push({right.error, mid, worst.b, right.integral});
        ++panels;
    }
    return total;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                               const QuadratureOptions& opts) {
    if (!(scale > 0.0)) throw std::invalid_argument("integrate_semi_infinite: scale must be > 0");
    auto mapped = [&f, scale](double x) {
        const double w = 1.0 - x;
        const double omega = scale * x / w;
        const double value = f(omega);
        if (value == 0.0) return 0.0; // keep the underflowed tail from turning into 0·huge
        return value * scale / (w * w);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double max_panel) {
    if (!(max_panel > 0.0)) throw std::invalid_argument("integrate_panels: panel width must be > 0");
    if (a == b) return {0.0, 0.0};
    const long n = static_cast<long>(std::ceil((b - a) / max_panel - 1e-12));
    const double width = (b - a) / static_cast<double>(n);
    std::complex<double> total{0.0, 0.0};
    for (long k = 0; k < n; ++k) {
        const double pa = a + width * static_cast<double>(k);
        const double mid = pa + 0.5 * width;
        const double half = 0.5 * width;
        std::complex<double> resk = kWgk[7] * f(mid);
        for (int j = 0; j < 7; ++j) {
            resk += kWgk[j] * (f(mid - half * kXgk[j]) + f(mid + half * kXgk[j]));
        }
        total += resk * half;
    }
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
        throw numeric_error("integrate_panels: integrand produced a non-finite value");
    return total;
}

} // namespace qslcv
