#pragma once

#include <utility>

#include "admeans/means.hpp"
#include "admeans/toeplitz.hpp"

namespace admeans {

// 2x2 block split: the leading k x k block is the (1,1) block.
struct BlockPartition {
    Eigen::Index k;

    void validate(Eigen::Index n) const {
        if (k < 1 || k >= n)
            throw DimensionMismatch("BlockPartition: split index out of range");
    }
};

// Correction factors of the Schur-complement-of-a-sum identity.
struct SchurCorrectionTerms {
    CMatrix x;    // A12 A22^{-1} - B12 B22^{-1}
    CMatrix y;    // A22^{-1} A21 - B22^{-1} B21 (equals x* when A, B Hermitian)
    CMatrix core; // parallel sum A22 : B22
};

// E + iF with E the real and F the imaginary part of T^{-1}; for
// accretive-dissipative T, E is positive definite and F negative definite.
struct InverseParts {
    HermitianMatrix e;
    HermitianMatrix f;
};

// M11 - M12 M22^{-1} M21. Throws SingularBlock when the (2,2) block is
// (near-)singular.
CMatrix schur_complement(const CMatrix& m, BlockPartition p, const ToleranceConfig& tol = {});

// (T^{-1} + S^{-1})^{-1}; preserves the accretive-dissipative cone.
CMatrix parallel_sum(const CMatrix& t, const CMatrix& s, const ToleranceConfig& tol = {});

// Closed forms E = (A + B A^{-1} B)^{-1}, F = -(B + A B^{-1} A)^{-1},
// cross-checked against the direct complex inverse.
InverseParts inverse_parts(const AccretiveDissipativeMatrix& t, const ToleranceConfig& tol = {});

// Residual norms of the two inverse-part identities relating A^{-1} and
// B^{-1} to E and F; both vanish for any accretive-dissipative input.
std::pair<double, double> identity_residuals(const AccretiveDissipativeMatrix& t,
                                             const ToleranceConfig& tol = {});

// Sherman-Morrison-Woodbury residual for (A + B A^{-1} B)^{-1}.
double smw_residual(const AccretiveDissipativeMatrix& t, const ToleranceConfig& tol = {});

struct SchurSumDecomposition {
    CMatrix lhs; // (A+B)/(A22+B22)
    CMatrix rhs; // A/A22 + B/B22 + X (A22:B22) Y
    SchurCorrectionTerms correction;

    double residual() const { return (lhs - rhs).norm(); }
};

// The Schur-complement-of-a-sum identity, valid for arbitrary (not just
// Hermitian) blocks with the three required inverses.
SchurSumDecomposition schur_sum_decomposition(const CMatrix& a, const CMatrix& b,
                                              BlockPartition p, const ToleranceConfig& tol = {});

// (A+B)/(A22+B22) vs A/A22 + B/B22 for Hermitian positive definite A, B;
// superadditivity of the Schur complement predicts GreaterEq or Equal.
OrderRelation check_fm_inequality(const HermitianMatrix& a, const HermitianMatrix& b,
                                  BlockPartition p, const ToleranceConfig& tol = {});

// (A+iB)/(A22+iB22) vs A/A22 + i B/B22 in the extended order.
OrderRelation check_mixed_schur(const HermitianMatrix& a, const HermitianMatrix& b,
                                BlockPartition p, const ToleranceConfig& tol = {});

// 2(T:S) vs the harmonic mean T!S; the parallel-sum bound predicts GreaterEq
// or Equal.
OrderRelation check_parallel_vs_harmonic(const AccretiveDissipativeMatrix& t,
                                         const AccretiveDissipativeMatrix& s,
                                         const ToleranceConfig& tol = {});

// 2(T:S) vs the geometric mean; no predicted direction (the interesting
// outcome is incomparability).
OrderRelation compare_parallel_vs_geometric(const AccretiveDissipativeMatrix& t,
                                            const AccretiveDissipativeMatrix& s,
                                            const ToleranceConfig& tol = {});

// Hermitian PD case: (A sigma C)/(A sigma C)_22 vs (A/A22) sigma (C/C22);
// predicted GreaterEq or Equal for all three kinds.
OrderRelation check_pd_schur_mean(const HermitianMatrix& a, const HermitianMatrix& c,
                                  MeanKind kind, BlockPartition p,
                                  const ToleranceConfig& tol = {});

// The first counterexample works with the plain sum; the mean differs by a
// factor 2.
enum class ArithmeticVariant { UseMean, UseSum };

struct Question42Outcome {
    CMatrix lhs; // (T sigma S)/(T sigma S)_22
    CMatrix rhs; // (T/T22) sigma (S/S22)
    OrderRelation relation;
};

// The conjectured Schur-complement inequality for accretive-dissipative
// means; refuted, so no predicted direction.
Question42Outcome evaluate_question_42(const AccretiveDissipativeMatrix& t,
                                       const AccretiveDissipativeMatrix& s, MeanKind kind,
                                       BlockPartition p, const ToleranceConfig& tol = {},
                                       ArithmeticVariant variant = ArithmeticVariant::UseMean);

// Two-step lower bound: (T sigma S)/(T sigma S)_22
//   >= (A sigma C)/(A sigma C)_22 + i (B sigma D)/(B sigma D)_22
//   >= (A/A22) sigma (C/C22) + i (B/B22) sigma (D/D22).
std::pair<OrderRelation, OrderRelation> check_lower_bound_chain(
    const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s, MeanKind kind,
    BlockPartition p, const ToleranceConfig& tol = {});

// || (T:S)/(T:S)_22 - (T/T22):(S/S22) ||_F; an equality, so the residual
// vanishes. The general (non-AD) overload accepts any matrices for which the
// relevant inverses exist.
double parallel_sum_schur_equality(const AccretiveDissipativeMatrix& t,
                                   const AccretiveDissipativeMatrix& s, BlockPartition p,
                                   const ToleranceConfig& tol = {});
double parallel_sum_schur_equality_general(const CMatrix& t, const CMatrix& s, BlockPartition p,
                                           const ToleranceConfig& tol = {});

// Cross-check of the inverse-block identity: the (1,1) block of M^{-1} equals
// (M/M22)^{-1}. Returns the residual norm.
double inverse_block_identity_residual(const CMatrix& m, BlockPartition p,
                                       const ToleranceConfig& tol = {});

} // namespace admeans
