#include "admeans/schur.hpp"

namespace admeans {

namespace {

struct Blocks {
    CMatrix b11, b12, b21, b22;
};

Blocks split(const CMatrix& m, BlockPartition p) {
    const Eigen::Index n = m.rows();
    p.validate(n);
    const Eigen::Index k = p.k;
    return {m.topLeftCorner(k, k), m.topRightCorner(k, n - k), m.bottomLeftCorner(n - k, k),
            m.bottomRightCorner(n - k, n - k)};
}

CMatrix block_inverse_or_throw(const CMatrix& block, const ToleranceConfig& tol,
                               const char* what) {
    try {
        return complex_inverse(block, tol);
    } catch (const Singular&) {
        throw SingularBlock(std::string(what) + ": (2,2) block is singular");
    }
}

} // namespace

CMatrix schur_complement(const CMatrix& m, BlockPartition p, const ToleranceConfig& tol) {
    require_square(m, "schur_complement");
    const Blocks b = split(m, p);
    const CMatrix inv22 = block_inverse_or_throw(b.b22, tol, "schur_complement");
    return b.b11 - b.b12 * inv22 * b.b21;
}

CMatrix parallel_sum(const CMatrix& t, const CMatrix& s, const ToleranceConfig& tol) {
    require_same_dim(t, s, "parallel_sum");
    const CMatrix ti = complex_inverse(t, tol);
    const CMatrix si = complex_inverse(s, tol);
    return complex_inverse(ti + si, tol);
}

InverseParts inverse_parts(const AccretiveDissipativeMatrix& t, const ToleranceConfig& tol) {
    const CMatrix& a = t.real_part().get();
    const CMatrix& b = t.imag_part().get();
    const CMatrix a_inv = hermitian_inverse(t.real_part(), tol).get();
    const CMatrix b_inv = hermitian_inverse(t.imag_part(), tol).get();

    const HermitianMatrix e = hermitian_inverse(
        HermitianMatrix::symmetrize(a + b * a_inv * b), tol);
    const HermitianMatrix f = HermitianMatrix::symmetrize(
        -hermitian_inverse(HermitianMatrix::symmetrize(b + a * b_inv * a), tol).get());

    // The closed forms must reassemble the direct inverse.
    const CMatrix direct = complex_inverse(t.matrix(), tol);
    const CMatrix assembled = e.get() + Complex(0, 1) * f.get();
    const double scale = std::max(spectral_norm(direct), 1.0);
    if (frobenius_norm(assembled - direct) > tol.eq_tol * scale)
        throw ConvergenceFailure("inverse_parts: closed forms disagree with direct inverse");
    return {e, f};
}

std::pair<double, double> identity_residuals(const AccretiveDissipativeMatrix& t,
                                             const ToleranceConfig& tol) {
    const CMatrix& a = t.real_part().get();
    const CMatrix& b = t.imag_part().get();
    const CMatrix a_inv = hermitian_inverse(t.real_part(), tol).get();
    const CMatrix b_inv = hermitian_inverse(t.imag_part(), tol).get();

    const CMatrix real_core = a + b * a_inv * b; // E^{-1}
    const CMatrix imag_core = b + a * b_inv * a; // (-F)^{-1}
    const CMatrix real_core_inv = complex_inverse(real_core, tol);
    const CMatrix imag_core_inv = complex_inverse(imag_core, tol);

    const double first =
        frobenius_norm(a_inv - (real_core_inv + imag_core_inv * real_core * imag_core_inv));
    const double second =
        frobenius_norm(b_inv - (imag_core_inv + real_core_inv * imag_core * real_core_inv));
    return {first, second};
}

double smw_residual(const AccretiveDissipativeMatrix& t, const ToleranceConfig& tol) {
    const CMatrix& a = t.real_part().get();
    const CMatrix& b = t.imag_part().get();
    const CMatrix a_inv = hermitian_inverse(t.real_part(), tol).get();
    const CMatrix core_inv = complex_inverse(a + b * a_inv * b, tol);
    return frobenius_norm(core_inv - (a_inv - a_inv * b * core_inv * b * a_inv));
}

SchurSumDecomposition schur_sum_decomposition(const CMatrix& a, const CMatrix& b,
                                              BlockPartition p, const ToleranceConfig& tol) {
    require_same_dim(a, b, "schur_sum_decomposition");
    const Blocks ab = split(a, p);
    const Blocks bb = split(b, p);

    const CMatrix a22_inv = block_inverse_or_throw(ab.b22, tol, "schur_sum_decomposition");
    const CMatrix b22_inv = block_inverse_or_throw(bb.b22, tol, "schur_sum_decomposition");

    SchurCorrectionTerms corr;
    corr.x = ab.b12 * a22_inv - bb.b12 * b22_inv;
    corr.y = a22_inv * ab.b21 - b22_inv * bb.b21;
    corr.core = parallel_sum(ab.b22, bb.b22, tol);

    SchurSumDecomposition out;
    out.lhs = schur_complement(a + b, p, tol);
    out.rhs = schur_complement(a, p, tol) + schur_complement(b, p, tol) +
              corr.x * corr.core * corr.y;
    out.correction = std::move(corr);
    return out;
}

namespace {

void require_pd(const HermitianMatrix& h, const ToleranceConfig& tol, const char* what) {
    if (!is_positive_definite(h, tol))
        throw NotPD(std::string(what) + ": operand is not positive definite");
}

// Loewner comparison of two Hermitian matrices via the extended order (the
// imaginary parts are zero, so the imaginary witness reads "=").
OrderRelation compare_loewner(const CMatrix& lhs, const CMatrix& rhs,
                              const ToleranceConfig& tol) {
    return compare_extended_order(lhs, rhs, tol);
}

} // namespace

OrderRelation check_fm_inequality(const HermitianMatrix& a, const HermitianMatrix& b,
                                  BlockPartition p, const ToleranceConfig& tol) {
    require_pd(a, tol, "check_fm_inequality");
    require_pd(b, tol, "check_fm_inequality");
    const CMatrix lhs = schur_complement(a.get() + b.get(), p, tol);
    const CMatrix rhs = schur_complement(a.get(), p, tol) + schur_complement(b.get(), p, tol);
    return compare_loewner(lhs, rhs, tol);
}

OrderRelation check_mixed_schur(const HermitianMatrix& a, const HermitianMatrix& b,
                                BlockPartition p, const ToleranceConfig& tol) {
    require_pd(a, tol, "check_mixed_schur");
    require_pd(b, tol, "check_mixed_schur");
    const CMatrix lhs = schur_complement(a.get() + Complex(0, 1) * b.get(), p, tol);
    const CMatrix rhs = schur_complement(a.get(), p, tol) +
                        Complex(0, 1) * schur_complement(b.get(), p, tol);
    return compare_extended_order(lhs, rhs, tol);
}

OrderRelation check_parallel_vs_harmonic(const AccretiveDissipativeMatrix& t,
                                         const AccretiveDissipativeMatrix& s,
                                         const ToleranceConfig& tol) {
    const CMatrix doubled = 2.0 * parallel_sum(t.matrix(), s.matrix(), tol);
    const CMatrix harmonic = ad_mean(MeanKind::Harmonic, t, s, tol).matrix();
    return compare_extended_order(doubled, harmonic, tol);
}

OrderRelation compare_parallel_vs_geometric(const AccretiveDissipativeMatrix& t,
                                            const AccretiveDissipativeMatrix& s,
                                            const ToleranceConfig& tol) {
    const CMatrix doubled = 2.0 * parallel_sum(t.matrix(), s.matrix(), tol);
    const CMatrix geometric = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    return compare_extended_order(doubled, geometric, tol);
}

OrderRelation check_pd_schur_mean(const HermitianMatrix& a, const HermitianMatrix& c,
                                  MeanKind kind, BlockPartition p, const ToleranceConfig& tol) {
    const HermitianMatrix mean = hermitian_mean(kind, a, c, tol);
    const CMatrix lhs = schur_complement(mean.get(), p, tol);
    const HermitianMatrix sc_a = HermitianMatrix::symmetrize(schur_complement(a.get(), p, tol));
    const HermitianMatrix sc_c = HermitianMatrix::symmetrize(schur_complement(c.get(), p, tol));
    const CMatrix rhs = hermitian_mean(kind, sc_a, sc_c, tol).get();
    return compare_loewner(lhs, rhs, tol);
}

namespace {

CMatrix ad_combine(MeanKind kind, const AccretiveDissipativeMatrix& t,
                   const AccretiveDissipativeMatrix& s, ArithmeticVariant variant,
                   const ToleranceConfig& tol) {
    if (kind == MeanKind::Arithmetic && variant == ArithmeticVariant::UseSum)
        return t.matrix() + s.matrix();
    return ad_mean(kind, t, s, tol).matrix();
}

} // namespace

Question42Outcome evaluate_question_42(const AccretiveDissipativeMatrix& t,
                                       const AccretiveDissipativeMatrix& s, MeanKind kind,
                                       BlockPartition p, const ToleranceConfig& tol,
                                       ArithmeticVariant variant) {
    if (t.dim() != s.dim())
        throw DimensionMismatch("evaluate_question_42: operands differ in dimension");

    Question42Outcome out;
    out.lhs = schur_complement(ad_combine(kind, t, s, variant, tol), p, tol);

    // Schur complements of accretive-dissipative matrices stay in the cone.
    const AccretiveDissipativeMatrix sc_t(schur_complement(t.matrix(), p, tol), tol);
    const AccretiveDissipativeMatrix sc_s(schur_complement(s.matrix(), p, tol), tol);
    out.rhs = ad_combine(kind, sc_t, sc_s, variant, tol);
    out.relation = compare_extended_order(out.lhs, out.rhs, tol);
    return out;
}

std::pair<OrderRelation, OrderRelation> check_lower_bound_chain(
    const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s, MeanKind kind,
    BlockPartition p, const ToleranceConfig& tol) {
    if (t.dim() != s.dim())
        throw DimensionMismatch("check_lower_bound_chain: operands differ in dimension");

    const HermitianMatrix real_mean = hermitian_mean(kind, t.real_part(), s.real_part(), tol);
    const HermitianMatrix imag_mean = hermitian_mean(kind, t.imag_part(), s.imag_part(), tol);

    // (T sigma S)/(T sigma S)_22 with T sigma S = real_mean + i imag_mean.
    const CMatrix top =
        schur_complement(real_mean.get() + Complex(0, 1) * imag_mean.get(), p, tol);
    const CMatrix middle = schur_complement(real_mean.get(), p, tol) +
                           Complex(0, 1) * schur_complement(imag_mean.get(), p, tol);

    const auto sc_pd = [&](const HermitianMatrix& h) {
        return HermitianMatrix::symmetrize(schur_complement(h.get(), p, tol));
    };
    const CMatrix bottom =
        hermitian_mean(kind, sc_pd(t.real_part()), sc_pd(s.real_part()), tol).get() +
        Complex(0, 1) *
            hermitian_mean(kind, sc_pd(t.imag_part()), sc_pd(s.imag_part()), tol).get();

    return {compare_extended_order(top, middle, tol),
            compare_extended_order(middle, bottom, tol)};
}

double parallel_sum_schur_equality(const AccretiveDissipativeMatrix& t,
                                   const AccretiveDissipativeMatrix& s, BlockPartition p,
                                   const ToleranceConfig& tol) {
    return parallel_sum_schur_equality_general(t.matrix(), s.matrix(), p, tol);
}

double parallel_sum_schur_equality_general(const CMatrix& t, const CMatrix& s, BlockPartition p,
                                           const ToleranceConfig& tol) {
    require_same_dim(t, s, "parallel_sum_schur_equality");
    const CMatrix lhs = schur_complement(parallel_sum(t, s, tol), p, tol);
    const CMatrix rhs =
        parallel_sum(schur_complement(t, p, tol), schur_complement(s, p, tol), tol);
    return frobenius_norm(lhs - rhs);
}

double inverse_block_identity_residual(const CMatrix& m, BlockPartition p,
                                       const ToleranceConfig& tol) {
    require_square(m, "inverse_block_identity_residual");
    p.validate(m.rows());
    const CMatrix inv = complex_inverse(m, tol);
    const CMatrix block = inv.topLeftCorner(p.k, p.k);
    const CMatrix via_schur = complex_inverse(schur_complement(m, p, tol), tol);
    return frobenius_norm(block - via_schur);
}

} // namespace admeans
