#pragma once

#include "admeans/matrix.hpp"

namespace admeans {

struct EigenDecomposition {
    RVector eigenvalues; // ascending
    CMatrix eigenvectors; // unitary, columns match eigenvalues
};

// H = V diag(lambda) V*. Throws ConvergenceFailure if the solver fails.
EigenDecomposition hermitian_eigendecomposition(const HermitianMatrix& h);

// min eigenvalue > pd_tol * max|eigenvalue| (absolute for the zero matrix).
bool is_positive_definite(const HermitianMatrix& h, const ToleranceConfig& tol = {});

// min eigenvalue >= -psd_tol * max|eigenvalue|.
bool is_positive_semidefinite(const HermitianMatrix& h, const ToleranceConfig& tol = {});

// Principal PSD square root V diag(sqrt(max(lambda,0))) V*.
// Throws NotPSD if the input fails is_positive_semidefinite.
HermitianMatrix hermitian_sqrt(const HermitianMatrix& h, const ToleranceConfig& tol = {});

// Inverse through the same spectral backend. Throws NotPD.
HermitianMatrix hermitian_inverse(const HermitianMatrix& h, const ToleranceConfig& tol = {});

// General complex inverse; near-singularity decided on singular values
// (smallest > pd_tol * largest). Throws Singular.
CMatrix complex_inverse(const CMatrix& m, const ToleranceConfig& tol = {});

} // namespace admeans
