#pragma once

#include <utility>
#include <vector>

#include "admeans/toeplitz.hpp"

namespace admeans {

enum class MeanKind { Arithmetic, Geometric, Harmonic };

const char* to_string(MeanKind kind);

// Arithmetic (A+C)/2, geometric A^{1/2}(A^{-1/2}CA^{-1/2})^{1/2}A^{1/2},
// harmonic 2(A^{-1}+C^{-1})^{-1}. Inputs must be positive definite; the
// geometric mean is averaged over both evaluation orders so it is symmetric
// beyond formula roundoff.
HermitianMatrix hermitian_mean(MeanKind kind, const HermitianMatrix& a,
                               const HermitianMatrix& c, const ToleranceConfig& tol = {});

// Component-wise on the Toeplitz parts: T sigma S = (A sigma C) + i(B sigma D).
AccretiveDissipativeMatrix ad_mean(MeanKind kind, const AccretiveDissipativeMatrix& t,
                                   const AccretiveDissipativeMatrix& s,
                                   const ToleranceConfig& tol = {});

// Membership test for the geometric mean's maximal characterization:
// [[T, X], [X, S]] >= 0 in the extended order.
bool geometric_block_witness(const AccretiveDissipativeMatrix& t,
                             const AccretiveDissipativeMatrix& s, const CMatrix& x,
                             const ToleranceConfig& tol = {});

// Membership test for the harmonic mean's characterization:
// diag(2T, 2S) - [[X, X], [X, X]] >= 0 in the extended order.
bool harmonic_block_witness(const AccretiveDissipativeMatrix& t,
                            const AccretiveDissipativeMatrix& s, const CMatrix& x,
                            const ToleranceConfig& tol = {});

// Relation of mean(sum T_k, sum S_k) against sum_k mean(T_k, S_k).
// Superadditivity predicts GreaterEq or Equal for geometric and harmonic
// kinds.
OrderRelation check_superadditivity(
    MeanKind kind,
    const std::vector<std::pair<AccretiveDissipativeMatrix, AccretiveDissipativeMatrix>>& pairs,
    const ToleranceConfig& tol = {});

// (relation of arithmetic vs geometric, relation of geometric vs harmonic).
std::pair<OrderRelation, OrderRelation> check_amgmhm(const AccretiveDissipativeMatrix& t,
                                                     const AccretiveDissipativeMatrix& s,
                                                     const ToleranceConfig& tol = {});

// (Q*TQ) geo-mean (Q*SQ) == Q*(T geo-mean S)Q within eq_tol * ||Q||^2 * scale.
bool check_congruence(const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s,
                      const CMatrix& q, const ToleranceConfig& tol = {});

// Residual of the closed form A^{1/2}C^{1/2} + i B^{1/2}D^{1/2} against the
// geometric mean; requires TS = ST and at least one operand normal, else
// throws HypothesisFail.
double commuting_normal_geometric(const AccretiveDissipativeMatrix& t,
                                  const AccretiveDissipativeMatrix& s,
                                  const ToleranceConfig& tol = {});

// Negative companion of the commuting-normal closed form: the product of the
// principal roots and its distance from the geometric mean (generally large).
std::pair<CMatrix, double> sqrt_product_mismatch(const AccretiveDissipativeMatrix& t,
                                                 const AccretiveDissipativeMatrix& s,
                                                 const ToleranceConfig& tol = {});

// The three equivalent predicates (geo <= S, T <= S, T <= geo); each accepts
// LessEq or Equal. All three agree when the order equivalence holds.
struct OrderEquivalences {
    bool mean_below_second;
    bool first_below_second;
    bool first_below_mean;
};

OrderEquivalences check_order_equivalences(const AccretiveDissipativeMatrix& t,
                                           const AccretiveDissipativeMatrix& s,
                                           const ToleranceConfig& tol = {});

// ||G T^{-1} G - S||_F with G the geometric mean; typically NOT small — the
// Riccati property fails for accretive-dissipative matrices.
double riccati_residual(const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s,
                        const ToleranceConfig& tol = {});

} // namespace admeans
