#include "admeans/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace admeans {

EigenDecomposition hermitian_eigendecomposition(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.get());
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("hermitian_eigendecomposition: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

struct SpectralBounds {
    double min_eig;
    double max_abs;
};

SpectralBounds spectrum_bounds(const HermitianMatrix& h) {
    const auto eig = hermitian_eigendecomposition(h);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
    return {lo, std::max(std::abs(lo), std::abs(hi))};
}

} // namespace

bool is_positive_definite(const HermitianMatrix& h, const ToleranceConfig& tol) {
    const auto b = spectrum_bounds(h);
    const double threshold = b.max_abs > 0.0 ? tol.pd_tol * b.max_abs : tol.pd_tol;
    return b.min_eig > threshold;
}

bool is_positive_semidefinite(const HermitianMatrix& h, const ToleranceConfig& tol) {
    const auto b = spectrum_bounds(h);
    return b.min_eig >= -tol.psd_tol * b.max_abs;
}

HermitianMatrix hermitian_sqrt(const HermitianMatrix& h, const ToleranceConfig& tol) {
    if (!is_positive_semidefinite(h, tol))
        throw NotPSD("hermitian_sqrt: input is not positive semidefinite");
    const auto eig = hermitian_eigendecomposition(h);
    RVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    CMatrix r = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
    return HermitianMatrix::symmetrize(r);
}

HermitianMatrix hermitian_inverse(const HermitianMatrix& h, const ToleranceConfig& tol) {
    if (!is_positive_definite(h, tol))
        throw NotPD("hermitian_inverse: input is not positive definite");
    const auto eig = hermitian_eigendecomposition(h);
    RVector inv = eig.eigenvalues.cwiseInverse();
    CMatrix r = eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
    return HermitianMatrix::symmetrize(r);
}

CMatrix complex_inverse(const CMatrix& m, const ToleranceConfig& tol) {
    require_square(m, "complex_inverse");
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= tol.pd_tol * sv(0))
        throw Singular("complex_inverse: matrix is singular or near-singular");
    return m.partialPivLu().inverse();
}

} // namespace admeans
