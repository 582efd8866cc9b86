#include "admeans/matrix.hpp"

#include <Eigen/SVD>

namespace admeans {

double spectral_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double frobenius_norm(const CMatrix& m) { return m.norm(); }

double comparison_scale(const CMatrix& t, const CMatrix& s) {
    return std::max({spectral_norm(t), spectral_norm(s), 1.0});
}

bool all_finite(const CMatrix& m) {
    return m.allFinite();
}

void require_square(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionMismatch(std::string(what) + ": matrix must be square and nonempty");
    if (!all_finite(m))
        throw InvalidInput(std::string(what) + ": matrix has non-finite entries");
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
    require_square(a, what);
    require_square(b, what);
    if (a.rows() != b.rows())
        throw DimensionMismatch(std::string(what) + ": operands have different dimensions");
}

CMatrix conjugate_transpose(const CMatrix& m) { return m.adjoint(); }

namespace {

// (i,j)/(j,i) pairs share one rounded value so the result is exactly
// self-adjoint, not just up to 1 ulp.
CMatrix exact_symmetrize(const CMatrix& m) {
    const Eigen::Index n = m.rows();
    CMatrix h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = Complex(m(i, i).real(), 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Complex v = (m(i, j) + std::conj(m(j, i))) * 0.5;
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

} // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& m, const ToleranceConfig& tol) {
    require_square(m, "HermitianMatrix");
    const double scale = std::max(spectral_norm(m), 1.0);
    const double residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (residual > tol.eq_tol * scale)
        throw NotHermitian("HermitianMatrix: off-symmetry residual " + std::to_string(residual) +
                           " exceeds tolerance");
    m_ = exact_symmetrize(m);
}

HermitianMatrix HermitianMatrix::symmetrize(const CMatrix& m) {
    require_square(m, "HermitianMatrix::symmetrize");
    return HermitianMatrix(exact_symmetrize(m), Trusted{});
}

} // namespace admeans
