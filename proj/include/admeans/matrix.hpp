#pragma once

#include <complex>

#include <Eigen/Dense>

#include "admeans/errors.hpp"

namespace admeans {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Thresholds are relative to the spectral norm of the operand; for a zero
// operand they act as absolute values.
struct ToleranceConfig {
    double psd_tol = 1e-10; // semidefiniteness slack
    double pd_tol = 1e-10;  // strict definiteness margin
    double eq_tol = 1e-9;   // matrix equality

    static ToleranceConfig defaults() { return {}; }
};

double spectral_norm(const CMatrix& m);
double frobenius_norm(const CMatrix& m);

// max(||t||_2, ||s||_2, 1): the shared scale for relative comparisons
// between two matrices.
double comparison_scale(const CMatrix& t, const CMatrix& s);

bool all_finite(const CMatrix& m);

// Throws DimensionMismatch / InvalidInput unless m is square with finite
// entries.
void require_square(const CMatrix& m, const char* what);

// Throws DimensionMismatch unless a and b are square, finite and of equal
// dimension.
void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what);

CMatrix conjugate_transpose(const CMatrix& m);

// A square complex matrix equal to its conjugate transpose bit-for-bit.
// Construction symmetrizes (H <- (H+H*)/2 with each (i,j)/(j,i) pair computed
// once) and rejects inputs whose off-symmetry residual exceeds
// eq_tol * spectral_norm.
class HermitianMatrix {
public:
    HermitianMatrix(const CMatrix& m, const ToleranceConfig& tol = {});

    const CMatrix& get() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

    // Symmetrize without the residual check; for matrices Hermitian by
    // construction (e.g. V diag(real) V*).
    static HermitianMatrix symmetrize(const CMatrix& m);

private:
    struct Trusted {};
    HermitianMatrix(CMatrix m, Trusted) : m_(std::move(m)) {}

    CMatrix m_;
};

} // namespace admeans
