#pragma once

#include "admeans/kernel.hpp"
#include "admeans/matrix.hpp"

namespace admeans {

// T = realPart + i*imagPart with both parts Hermitian.
struct ToeplitzParts {
    HermitianMatrix real_part;
    HermitianMatrix imag_part;

    CMatrix recompose() const {
        return real_part.get() + Complex(0.0, 1.0) * imag_part.get();
    }
};

ToeplitzParts toeplitz_decompose(const CMatrix& t);

bool is_accretive_dissipative(const CMatrix& t, const ToleranceConfig& tol = {});

// A complex square matrix whose Toeplitz parts are both positive definite,
// with the parts cached at construction.
class AccretiveDissipativeMatrix {
public:
    AccretiveDissipativeMatrix(const CMatrix& t, const ToleranceConfig& tol = {});

    const CMatrix& matrix() const { return m_; }
    const HermitianMatrix& real_part() const { return parts_.real_part; }
    const HermitianMatrix& imag_part() const { return parts_.imag_part; }
    const ToeplitzParts& parts() const { return parts_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    CMatrix m_;
    ToeplitzParts parts_;
};

enum class PartRelation { Equal, GreaterEq, LessEq, Incomparable };

enum class OrderTag { Equal, GreaterEq, LessEq, StrictGreater, StrictLess, Incomparable };

struct PartWitness {
    PartRelation rel = PartRelation::Incomparable;
    bool strict = false;   // all eigenvalues of the difference clear pd_tol
    double min_eig = 0.0;  // spectrum of the difference part
    double max_eig = 0.0;
};

// Outcome of an extended-Loewner comparison: the combined tag plus the
// per-part sub-relations it was derived from.
struct OrderRelation {
    OrderTag tag = OrderTag::Incomparable;
    PartWitness real_part;
    PartWitness imag_part;

    bool greater_eq() const {
        return tag == OrderTag::Equal || tag == OrderTag::GreaterEq ||
               tag == OrderTag::StrictGreater;
    }
    bool less_eq() const {
        return tag == OrderTag::Equal || tag == OrderTag::LessEq || tag == OrderTag::StrictLess;
    }
    bool equal() const { return tag == OrderTag::Equal; }
    bool incomparable() const { return tag == OrderTag::Incomparable; }
};

const char* to_string(OrderTag tag);
const char* to_string(PartRelation rel);

// T >= S iff both Toeplitz parts dominate in the Loewner sense. One scale,
// max(||T||, ||S||, 1), drives the equality/PSD thresholds of both parts.
OrderRelation compare_extended_order(const CMatrix& t, const CMatrix& s,
                                     const ToleranceConfig& tol = {});

// Extended-order comparison against zero: both parts PSD.
bool extended_psd(const CMatrix& t, const ToleranceConfig& tol = {});

// The unique accretive-dissipative square root (principal square root,
// validated for residual and cone membership). Throws SqrtNotInCone when the
// computed root fails validation.
AccretiveDissipativeMatrix ad_sqrt(const AccretiveDissipativeMatrix& t,
                                   const ToleranceConfig& tol = {});

} // namespace admeans
