#include "gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace qslcv {

namespace {

constexpr double kPhysicalityTol = 1e-10;
constexpr double kPinvCutoff = 1e-12;

double checked_real(cd value, const char* what) {
    if (std::abs(value.imag()) > 1e-8 * (1.0 + std::abs(value)))
        throw std::domain_error(std::string("gaussian: non-real ") + what +
                                " (non-physical covariance input)");
    return value.real();
}

// Nonnegative square root with a small clamp for roundoff.
double safe_sqrt(double x, const char* what) {
    if (x < -1e-9) throw std::domain_error(std::string("gaussian: negative ") + what);
    return std::sqrt(std::max(x, 0.0));
}

// ---- 4×4 Hermitian helpers (only needed by the QFI metric term) ------------

using Mat4 = std::array<cd, 16>;
using Vec4 = std::array<cd, 4>;

cd& at(Mat4& m, int i, int j) { return m[static_cast<std::size_t>(4 * i + j)]; }
cd at(const Mat4& m, int i, int j) { return m[static_cast<std::size_t>(4 * i + j)]; }

Vec4 apply(const Mat4& m, const Vec4& v) {
    Vec4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(i)] += at(m, i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

// Column-major vectorization: Vec[X] = (X00, X10, X01, X11).
Vec4 vectorize(const Mat2c& x) { return {x.a00, x.a10, x.a01, x.a11}; }

Mat2c unvectorize(const Vec4& v) { return {v[0], v[2], v[1], v[3]}; }

// Cyclic complex Jacobi diagonalization of a Hermitian 4×4 matrix.
void hermitian_eig4(Mat4 a, std::array<double, 4>& eigenvalues, Mat4& vectors) {
    vectors = Mat4{};
    for (int i = 0; i < 4; ++i) at(vectors, i, i) = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (int i = 0; i < 4; ++i) {
            diag += std::norm(at(a, i, i));
            for (int j = i + 1; j < 4; ++j) off += std::norm(at(a, i, j));
        }
        if (off <= 1e-30 * (diag + 1e-300)) break;

        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const cd apq = at(a, p, q);
                if (std::abs(apq) == 0.0) continue;
                const double app = at(a, p, p).real();
                const double aqq = at(a, q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
                const double c = std::cos(theta);
                const cd phase = apq / std::abs(apq);
                const cd s_conj = std::sin(theta) * phase;       // row-p mixing
                const cd s = std::conj(s_conj);                  // row-q mixing

                // A ← U† A U with U = [[c, −s̄],[s, c]] acting on (p, q).
                for (int i = 0; i < 4; ++i) {
                    const cd aip = at(a, i, p);
                    const cd aiq = at(a, i, q);
                    at(a, i, p) = aip * c + aiq * s;
                    at(a, i, q) = -aip * std::conj(s) + aiq * c;
                }
                for (int j = 0; j < 4; ++j) {
                    const cd apj = at(a, p, j);
                    const cd aqj = at(a, q, j);
                    at(a, p, j) = apj * c + aqj * std::conj(s);
                    at(a, q, j) = -apj * s + aqj * c;
                }
                for (int i = 0; i < 4; ++i) {
                    const cd vip = at(vectors, i, p);
                    const cd viq = at(vectors, i, q);
                    at(vectors, i, p) = vip * c + viq * s;
                    at(vectors, i, q) = -vip * std::conj(s) + viq * c;
                }
            }
        }
    }
    for (int i = 0; i < 4; ++i) eigenvalues[static_cast<std::size_t>(i)] = at(a, i, i).real();
}

} // namespace

Mat2c operator+(const Mat2c& x, const Mat2c& y) {
    return {x.a00 + y.a00, x.a01 + y.a01, x.a10 + y.a10, x.a11 + y.a11};
}

Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    return {x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11,
            x.a10 * y.a00 + x.a11 * y.a10, x.a10 * y.a01 + x.a11 * y.a11};
}

cd det(const Mat2c& m) { return m.a00 * m.a11 - m.a01 * m.a10; }

Mat2c inverse(const Mat2c& m) {
    const cd d = det(m);
    if (std::abs(d) < 1e-300) throw std::domain_error("Mat2c: singular matrix");
    return {m.a11 / d, -m.a01 / d, -m.a10 / d, m.a00 / d};
}

double frobenius_norm(const Mat2c& m) {
    return std::sqrt(std::norm(m.a00) + std::norm(m.a01) + std::norm(m.a10) +
                     std::norm(m.a11));
}

std::array<double, 2> hermitian_eigenvalues(const Mat2c& m) {
    const double mean = 0.5 * (m.a00.real() + m.a11.real());
    const double half_gap = 0.5 * (m.a00.real() - m.a11.real());
    const double radius = std::sqrt(half_gap * half_gap + std::norm(m.a01));
    return {mean - radius, mean + radius};
}

GaussianState GaussianState::coherent(cd alpha) {
    return {{alpha, std::conj(alpha)}, Mat2c::identity()};
}

GaussianState GaussianState::make(cd displacement, const Mat2c& sigma) {
    const double scale = 1.0 + frobenius_norm(sigma);
    if (std::abs(sigma.a01 - std::conj(sigma.a10)) > kPhysicalityTol * scale ||
        std::abs(sigma.a00.imag()) > kPhysicalityTol * scale ||
        std::abs(sigma.a11.imag()) > kPhysicalityTol * scale)
        throw std::domain_error("GaussianState: covariance is not Hermitian");
    const Mat2c shifted = sigma + Mat2c::k_matrix();
    if (hermitian_eigenvalues(shifted)[0] < -kPhysicalityTol)
        throw std::domain_error("GaussianState: sigma + K has a negative eigenvalue");
    return {{displacement, std::conj(displacement)}, sigma};
}

double fidelity(const GaussianState& a, const GaussianState& b) {
    const Mat2c k = Mat2c::k_matrix();
    const Mat2c sum = a.sigma + b.sigma;

    const std::array<cd, 2> delta{a.d[0] - b.d[0], a.d[1] - b.d[1]};
    const Mat2c sum_inv = inverse(sum);
    const cd quad = std::conj(delta[0]) * (sum_inv.a00 * delta[0] + sum_inv.a01 * delta[1]) +
                    std::conj(delta[1]) * (sum_inv.a10 * delta[0] + sum_inv.a11 * delta[1]);
    const double exponent = checked_real(quad, "displacement form");

    const double pi_det = checked_real(det(sum), "Pi");
    const Mat2c ksk = k * a.sigma * k * b.sigma;
    const double gamma_det =
        checked_real(det(Mat2c::identity() + ksk), "Gamma");
    const double lambda_det =
        checked_real(det(a.sigma + k) * det(b.sigma + k), "Lambda");

    const double root_sum = safe_sqrt(gamma_det, "Gamma") + safe_sqrt(lambda_det, "Lambda");
    const double denom = root_sum - safe_sqrt(root_sum * root_sum - pi_det, "denominator");
    if (!(denom > 0.0)) throw std::domain_error("fidelity: degenerate denominator");

    const double f = 2.0 * std::exp(-exponent) / denom;
    if (f > 1.0 + 1e-9) throw std::domain_error("fidelity: value above 1");
    return std::min(f, 1.0);
}

double bures_angle(const GaussianState& a, const GaussianState& b) {
    const double root = std::sqrt(fidelity(a, b));
    return std::acos(std::min(root, 1.0));
}

double quantum_fisher_information(const GaussianState& state,
                                  const std::array<cd, 2>& d_dot, const Mat2c& sigma_dot) {
    if (std::abs(d_dot[1] - std::conj(d_dot[0])) >
        kPhysicalityTol * (1.0 + std::abs(d_dot[0])))
        throw std::invalid_argument("quantum_fisher_information: d_dot must be a conjugate pair");
    if (std::abs(sigma_dot.a01 - std::conj(sigma_dot.a10)) >
        kPhysicalityTol * (1.0 + frobenius_norm(sigma_dot)))
        throw std::invalid_argument("quantum_fisher_information: sigma_dot must be Hermitian");

    // Displacement term 2 ḋ† σ⁻¹ ḋ.
    const Mat2c sigma_inv = inverse(state.sigma);
    const cd disp = std::conj(d_dot[0]) * (sigma_inv.a00 * d_dot[0] + sigma_inv.a01 * d_dot[1]) +
                    std::conj(d_dot[1]) * (sigma_inv.a10 * d_dot[0] + sigma_inv.a11 * d_dot[1]);
    double result = 2.0 * checked_real(disp, "displacement term");

    if (frobenius_norm(sigma_dot) > 0.0) {
        // M Vec[X] = Vec[σXσ − KXK]; build M column by column from basis matrices.
        const Mat2c k = Mat2c::k_matrix();
        Mat4 m{};
        for (int col = 0; col < 4; ++col) {
            Vec4 basis{};
            basis[static_cast<std::size_t>(col)] = 1.0;
            const Mat2c e = unvectorize(basis);
            const Mat2c mapped_s = state.sigma * e * state.sigma;
            const Mat2c mapped_k = k * e * k;
            const Vec4 column = vectorize(
                {mapped_s.a00 - mapped_k.a00, mapped_s.a01 - mapped_k.a01,
                 mapped_s.a10 - mapped_k.a10, mapped_s.a11 - mapped_k.a11});
            for (int row = 0; row < 4; ++row) at(m, row, col) = column[static_cast<std::size_t>(row)];
        }

        std::array<double, 4> eigenvalues{};
        Mat4 vectors{};
        hermitian_eig4(m, eigenvalues, vectors);
        double lambda_max = 0.0;
        for (double lambda : eigenvalues) lambda_max = std::max(lambda_max, std::abs(lambda));
        const double cutoff = kPinvCutoff * lambda_max;

        const Vec4 v = vectorize(sigma_dot);
        // Components in the eigenbasis: w_i = ⟨vec_i, v⟩.
        Vec4 w{};
        double v_norm2 = 0.0;
        double null_norm2 = 0.0;
        cd quad_form = 0.0;
        for (int i = 0; i < 4; ++i) {
            cd wi = 0.0;
            for (int r = 0; r < 4; ++r) wi += std::conj(at(vectors, r, i)) * v[static_cast<std::size_t>(r)];
            w[static_cast<std::size_t>(i)] = wi;
            v_norm2 += std::norm(wi);
            if (std::abs(eigenvalues[static_cast<std::size_t>(i)]) <= cutoff)
                null_norm2 += std::norm(wi);
            else
                quad_form += std::conj(wi) * wi / eigenvalues[static_cast<std::size_t>(i)];
        }
        if (null_norm2 > 1e-16 * v_norm2)
            throw std::domain_error(
                "quantum_fisher_information: Vec[sigma_dot] outside the range of M");
        result += 0.5 * checked_real(quad_form, "metric term");
    }
    return result;
}

} // namespace qslcv
