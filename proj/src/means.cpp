#include "admeans/means.hpp"

namespace admeans {

const char* to_string(MeanKind kind) {
    switch (kind) {
        case MeanKind::Arithmetic: return "arithmetic";
        case MeanKind::Geometric: return "geometric";
        case MeanKind::Harmonic: return "harmonic";
    }
    return "?";
}

namespace {

CMatrix geometric_one_order(const HermitianMatrix& a, const HermitianMatrix& c,
                            const ToleranceConfig& tol) {
    const HermitianMatrix root_a = hermitian_sqrt(a, tol);
    const HermitianMatrix root_a_inv = hermitian_inverse(root_a, tol);
    const HermitianMatrix middle = HermitianMatrix::symmetrize(
        root_a_inv.get() * c.get() * root_a_inv.get());
    const HermitianMatrix middle_root = hermitian_sqrt(middle, tol);
    return root_a.get() * middle_root.get() * root_a.get();
}

void require_pd(const HermitianMatrix& h, const ToleranceConfig& tol, const char* what) {
    if (!is_positive_definite(h, tol))
        throw NotPD(std::string(what) + ": operand is not positive definite");
}

} // namespace

HermitianMatrix hermitian_mean(MeanKind kind, const HermitianMatrix& a,
                               const HermitianMatrix& c, const ToleranceConfig& tol) {
    if (a.dim() != c.dim())
        throw DimensionMismatch("hermitian_mean: operands have different dimensions");
    require_pd(a, tol, "hermitian_mean");
    require_pd(c, tol, "hermitian_mean");

    switch (kind) {
        case MeanKind::Arithmetic:
            return HermitianMatrix::symmetrize((a.get() + c.get()) * 0.5);
        case MeanKind::Geometric: {
            const CMatrix forward = geometric_one_order(a, c, tol);
            const CMatrix reverse = geometric_one_order(c, a, tol);
            return HermitianMatrix::symmetrize((forward + reverse) * 0.5);
        }
        case MeanKind::Harmonic: {
            const HermitianMatrix inv_sum = HermitianMatrix::symmetrize(
                hermitian_inverse(a, tol).get() + hermitian_inverse(c, tol).get());
            return HermitianMatrix::symmetrize(2.0 * hermitian_inverse(inv_sum, tol).get());
        }
    }
    throw InvalidInput("hermitian_mean: unknown kind");
}

AccretiveDissipativeMatrix ad_mean(MeanKind kind, const AccretiveDissipativeMatrix& t,
                                   const AccretiveDissipativeMatrix& s,
                                   const ToleranceConfig& tol) {
    if (t.dim() != s.dim())
        throw DimensionMismatch("ad_mean: operands have different dimensions");
    const HermitianMatrix real = hermitian_mean(kind, t.real_part(), s.real_part(), tol);
    const HermitianMatrix imag = hermitian_mean(kind, t.imag_part(), s.imag_part(), tol);
    return AccretiveDissipativeMatrix(real.get() + Complex(0, 1) * imag.get(), tol);
}

namespace {

// [[NW, NE], [SW, SE]] as one 2n x 2n matrix.
CMatrix block2x2(const CMatrix& nw, const CMatrix& ne, const CMatrix& sw, const CMatrix& se) {
    const Eigen::Index n = nw.rows();
    CMatrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = nw;
    m.topRightCorner(n, n) = ne;
    m.bottomLeftCorner(n, n) = sw;
    m.bottomRightCorner(n, n) = se;
    return m;
}

} // namespace

bool geometric_block_witness(const AccretiveDissipativeMatrix& t,
                             const AccretiveDissipativeMatrix& s, const CMatrix& x,
                             const ToleranceConfig& tol) {
    require_same_dim(t.matrix(), x, "geometric_block_witness");
    if (t.dim() != s.dim())
        throw DimensionMismatch("geometric_block_witness: operands have different dimensions");
    return extended_psd(block2x2(t.matrix(), x, x, s.matrix()), tol);
}

bool harmonic_block_witness(const AccretiveDissipativeMatrix& t,
                            const AccretiveDissipativeMatrix& s, const CMatrix& x,
                            const ToleranceConfig& tol) {
    require_same_dim(t.matrix(), x, "harmonic_block_witness");
    if (t.dim() != s.dim())
        throw DimensionMismatch("harmonic_block_witness: operands have different dimensions");
    const CMatrix zero = CMatrix::Zero(t.dim(), t.dim());
    const CMatrix lhs = block2x2(2.0 * t.matrix(), zero, zero, 2.0 * s.matrix());
    const CMatrix rhs = block2x2(x, x, x, x);
    return extended_psd(lhs - rhs, tol);
}

OrderRelation check_superadditivity(
    MeanKind kind,
    const std::vector<std::pair<AccretiveDissipativeMatrix, AccretiveDissipativeMatrix>>& pairs,
    const ToleranceConfig& tol) {
    if (pairs.empty())
        throw InvalidInput("check_superadditivity: need at least one pair");
    const Eigen::Index n = pairs.front().first.dim();

    CMatrix sum_t = CMatrix::Zero(n, n);
    CMatrix sum_s = CMatrix::Zero(n, n);
    CMatrix sum_means = CMatrix::Zero(n, n);
    for (const auto& [tk, sk] : pairs) {
        if (tk.dim() != n || sk.dim() != n)
            throw DimensionMismatch("check_superadditivity: pairs have different dimensions");
        sum_t += tk.matrix();
        sum_s += sk.matrix();
        sum_means += ad_mean(kind, tk, sk, tol).matrix();
    }
    const AccretiveDissipativeMatrix total_t(sum_t, tol);
    const AccretiveDissipativeMatrix total_s(sum_s, tol);
    const CMatrix mean_of_sums = ad_mean(kind, total_t, total_s, tol).matrix();
    return compare_extended_order(mean_of_sums, sum_means, tol);
}

std::pair<OrderRelation, OrderRelation> check_amgmhm(const AccretiveDissipativeMatrix& t,
                                                     const AccretiveDissipativeMatrix& s,
                                                     const ToleranceConfig& tol) {
    const CMatrix am = ad_mean(MeanKind::Arithmetic, t, s, tol).matrix();
    const CMatrix gm = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    const CMatrix hm = ad_mean(MeanKind::Harmonic, t, s, tol).matrix();
    return {compare_extended_order(am, gm, tol), compare_extended_order(gm, hm, tol)};
}

bool check_congruence(const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s,
                      const CMatrix& q, const ToleranceConfig& tol) {
    require_same_dim(t.matrix(), q, "check_congruence");
    // Throws Singular when q is not invertible.
    (void)complex_inverse(q, tol);

    const CMatrix qa = q.adjoint();
    const AccretiveDissipativeMatrix tq(qa * t.matrix() * q, tol);
    const AccretiveDissipativeMatrix sq(qa * s.matrix() * q, tol);
    const CMatrix lhs = ad_mean(MeanKind::Geometric, tq, sq, tol).matrix();
    const CMatrix rhs = qa * ad_mean(MeanKind::Geometric, t, s, tol).matrix() * q;

    const double qnorm = spectral_norm(q);
    const double scale = comparison_scale(t.matrix(), s.matrix()) * qnorm * qnorm;
    return frobenius_norm(lhs - rhs) <= tol.eq_tol * scale;
}

double commuting_normal_geometric(const AccretiveDissipativeMatrix& t,
                                  const AccretiveDissipativeMatrix& s,
                                  const ToleranceConfig& tol) {
    const CMatrix& tm = t.matrix();
    const CMatrix& sm = s.matrix();
    if (tm.rows() != sm.rows())
        throw DimensionMismatch("commuting_normal_geometric: operands differ in dimension");

    const double scale = comparison_scale(tm, sm);
    if (frobenius_norm(tm * sm - sm * tm) > tol.eq_tol * scale * scale)
        throw HypothesisFail("commuting_normal_geometric: operands do not commute");
    const bool t_normal =
        frobenius_norm(tm * tm.adjoint() - tm.adjoint() * tm) <= tol.eq_tol * scale * scale;
    const bool s_normal =
        frobenius_norm(sm * sm.adjoint() - sm.adjoint() * sm) <= tol.eq_tol * scale * scale;
    if (!t_normal && !s_normal)
        throw HypothesisFail("commuting_normal_geometric: neither operand is normal");

    const CMatrix closed_form =
        hermitian_sqrt(t.real_part(), tol).get() * hermitian_sqrt(s.real_part(), tol).get() +
        Complex(0, 1) * hermitian_sqrt(t.imag_part(), tol).get() *
            hermitian_sqrt(s.imag_part(), tol).get();
    const CMatrix mean = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    return frobenius_norm(mean - closed_form);
}

std::pair<CMatrix, double> sqrt_product_mismatch(const AccretiveDissipativeMatrix& t,
                                                 const AccretiveDissipativeMatrix& s,
                                                 const ToleranceConfig& tol) {
    const CMatrix product = ad_sqrt(t, tol).matrix() * ad_sqrt(s, tol).matrix();
    const CMatrix mean = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    return {product, frobenius_norm(product - mean)};
}

OrderEquivalences check_order_equivalences(const AccretiveDissipativeMatrix& t,
                                           const AccretiveDissipativeMatrix& s,
                                           const ToleranceConfig& tol) {
    const CMatrix mean = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    return {
        compare_extended_order(mean, s.matrix(), tol).less_eq(),
        compare_extended_order(t.matrix(), s.matrix(), tol).less_eq(),
        compare_extended_order(t.matrix(), mean, tol).less_eq(),
    };
}

double riccati_residual(const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s,
                        const ToleranceConfig& tol) {
    const CMatrix mean = ad_mean(MeanKind::Geometric, t, s, tol).matrix();
    const CMatrix t_inv = complex_inverse(t.matrix(), tol);
    return frobenius_norm(mean * t_inv * mean - s.matrix());
}

} // namespace admeans
