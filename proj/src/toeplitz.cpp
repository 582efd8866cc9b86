#include "admeans/toeplitz.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace admeans {

ToeplitzParts toeplitz_decompose(const CMatrix& t) {
    require_square(t, "toeplitz_decompose");
    const CMatrix adj = t.adjoint();
    const CMatrix real_raw = (t + adj) * 0.5;
    const CMatrix imag_raw = (t - adj) / Complex(0.0, 2.0);
    return {HermitianMatrix::symmetrize(real_raw), HermitianMatrix::symmetrize(imag_raw)};
}

bool is_accretive_dissipative(const CMatrix& t, const ToleranceConfig& tol) {
    const auto parts = toeplitz_decompose(t);
    return is_positive_definite(parts.real_part, tol) &&
           is_positive_definite(parts.imag_part, tol);
}

AccretiveDissipativeMatrix::AccretiveDissipativeMatrix(const CMatrix& t,
                                                       const ToleranceConfig& tol)
    : m_(t), parts_(toeplitz_decompose(t)) {
    if (!is_positive_definite(parts_.real_part, tol))
        throw NotAD("AccretiveDissipativeMatrix: real part is not positive definite");
    if (!is_positive_definite(parts_.imag_part, tol))
        throw NotAD("AccretiveDissipativeMatrix: imaginary part is not positive definite");
}

const char* to_string(OrderTag tag) {
    switch (tag) {
        case OrderTag::Equal: return "Equal";
        case OrderTag::GreaterEq: return "GreaterEq";
        case OrderTag::LessEq: return "LessEq";
        case OrderTag::StrictGreater: return "StrictGreater";
        case OrderTag::StrictLess: return "StrictLess";
        case OrderTag::Incomparable: return "Incomparable";
    }
    return "?";
}

const char* to_string(PartRelation rel) {
    switch (rel) {
        case PartRelation::Equal: return "=";
        case PartRelation::GreaterEq: return ">=";
        case PartRelation::LessEq: return "<=";
        case PartRelation::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

PartWitness classify_part(const HermitianMatrix& diff, double scale,
                          const ToleranceConfig& tol) {
    const auto eig = hermitian_eigendecomposition(diff);
    PartWitness w;
    w.min_eig = eig.eigenvalues(0);
    w.max_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);

    const double spread = std::max(std::abs(w.min_eig), std::abs(w.max_eig));
    if (spread <= tol.eq_tol * scale) {
        w.rel = PartRelation::Equal;
    } else if (w.min_eig >= -tol.psd_tol * scale) {
        w.rel = PartRelation::GreaterEq;
        w.strict = w.min_eig > tol.pd_tol * scale;
    } else if (w.max_eig <= tol.psd_tol * scale) {
        w.rel = PartRelation::LessEq;
        w.strict = w.max_eig < -tol.pd_tol * scale;
    } else {
        w.rel = PartRelation::Incomparable;
    }
    return w;
}

bool part_ge(const PartWitness& w) {
    return w.rel == PartRelation::GreaterEq || w.rel == PartRelation::Equal;
}

bool part_le(const PartWitness& w) {
    return w.rel == PartRelation::LessEq || w.rel == PartRelation::Equal;
}

} // namespace

OrderRelation compare_extended_order(const CMatrix& t, const CMatrix& s,
                                     const ToleranceConfig& tol) {
    require_same_dim(t, s, "compare_extended_order");
    const double scale = comparison_scale(t, s);
    const auto diff = toeplitz_decompose(t - s);

    OrderRelation r;
    r.real_part = classify_part(diff.real_part, scale, tol);
    r.imag_part = classify_part(diff.imag_part, scale, tol);

    const auto& re = r.real_part;
    const auto& im = r.imag_part;
    if (re.rel == PartRelation::Equal && im.rel == PartRelation::Equal) {
        r.tag = OrderTag::Equal;
    } else if (part_ge(re) && part_ge(im)) {
        r.tag = (re.strict && im.strict) ? OrderTag::StrictGreater : OrderTag::GreaterEq;
    } else if (part_le(re) && part_le(im)) {
        r.tag = (re.strict && im.strict) ? OrderTag::StrictLess : OrderTag::LessEq;
    } else {
        r.tag = OrderTag::Incomparable;
    }
    return r;
}

bool extended_psd(const CMatrix& t, const ToleranceConfig& tol) {
    const auto parts = toeplitz_decompose(t);
    return is_positive_semidefinite(parts.real_part, tol) &&
           is_positive_semidefinite(parts.imag_part, tol);
}

AccretiveDissipativeMatrix ad_sqrt(const AccretiveDissipativeMatrix& t,
                                   const ToleranceConfig& tol) {
    // Principal square root (Schur based). For accretive-dissipative input the
    // principal root is the unique root in the cone, so validation failures
    // signal numerical trouble, not absence.
    const CMatrix root = t.matrix().sqrt();

    const double residual = frobenius_norm(root * root - t.matrix());
    if (!root.allFinite() || residual > tol.eq_tol * spectral_norm(t.matrix()))
        throw SqrtNotInCone("ad_sqrt: square-root residual too large");

    try {
        return AccretiveDissipativeMatrix(root, tol);
    } catch (const NotAD&) {
        throw SqrtNotInCone("ad_sqrt: computed root is not accretive-dissipative");
    }
}

} // namespace admeans
