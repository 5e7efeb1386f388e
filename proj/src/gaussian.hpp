// gaussian.hpp — single-mode Gaussian states and information-geometric primitives
#pragma once

#include <array>
#include <complex>

namespace qslcv {

using cd = std::complex<double>;

/// 2×2 complex matrix in the (â, â†) ordering, row-major.
struct Mat2c {
    cd a00{0.0}, a01{0.0}, a10{0.0}, a11{0.0};

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// K = Diag(1, −1), the symplectic sign of the (â, â†) pair.
    static Mat2c k_matrix() { return {1.0, 0.0, 0.0, -1.0}; }
};

Mat2c operator+(const Mat2c& x, const Mat2c& y);
Mat2c operator*(const Mat2c& x, const Mat2c& y);
cd det(const Mat2c& m);
Mat2c inverse(const Mat2c& m);
double frobenius_norm(const Mat2c& m);
/// Eigenvalues of a Hermitian 2×2 matrix, ascending.
std::array<double, 2> hermitian_eigenvalues(const Mat2c& m);

/// Gaussian state: displacement vector d = (d, d*) matching Â = (â, â†) and
/// covariance σ^{ij} = Tr(ρ{Â_i − d_i, Â_j† − d_j*}). Coherent states have
/// σ = 1; physicality requires σ Hermitian with σ + K ≥ 0.
struct GaussianState {
    std::array<cd, 2> d;
    Mat2c sigma;

    static GaussianState coherent(cd alpha);
    /// Validates Hermiticity and σ + K ≥ 0 (tolerance 1e−10).
    static GaussianState make(cd displacement, const Mat2c& sigma);
};

/// Uhlmann fidelity for single-mode Gaussian states, from the displacement
/// vectors and covariance matrices (Π, Γ, Λ determinant form).
double fidelity(const GaussianState& a, const GaussianState& b);

/// Bures angle L_B = arccos √F, in [0, π/2].
double bures_angle(const GaussianState& a, const GaussianState& b);

/// Quantum Fisher information with respect to the evolution time,
///   F_Q = ½ Vec[σ̇]† M⁻¹ Vec[σ̇] + 2 ḋ† σ⁻¹ ḋ,   M = σ*⊗σ − K⊗K.
/// Singular M (pure states) is handled by a rank-revealing pseudo-inverse
/// with singular-value cutoff 1e−12·λ_max; Vec[σ̇] outside the range of M
/// with σ̇ ≠ 0 is rejected, and σ̇ = 0 makes the first term exactly zero.
double quantum_fisher_information(const GaussianState& state,
                                  const std::array<cd, 2>& d_dot, const Mat2c& sigma_dot);

} // namespace qslcv
