#include "admeans/random.hpp"

namespace admeans {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

CMatrix random_complex_gaussian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

HermitianMatrix random_hermitian_pd(int n, double conditioning, std::mt19937_64& rng) {
    const CMatrix g = random_complex_gaussian(n, rng);
    const CMatrix gram = g * g.adjoint();
    const double ridge = std::max(spectral_norm(gram), 1.0) / conditioning;
    return HermitianMatrix::symmetrize(gram + ridge * CMatrix::Identity(n, n));
}

AccretiveDissipativeMatrix random_ad(int n, double conditioning, std::mt19937_64& rng) {
    const HermitianMatrix real = random_hermitian_pd(n, conditioning, rng);
    const HermitianMatrix imag = random_hermitian_pd(n, conditioning, rng);
    return AccretiveDissipativeMatrix(real.get() + Complex(0, 1) * imag.get());
}

CMatrix random_nonsingular(int n, std::mt19937_64& rng) {
    // Complex Gaussian matrices are almost surely well conditioned; redraw on
    // the rare degenerate sample.
    for (;;) {
        const CMatrix g = random_complex_gaussian(n, rng);
        Eigen::JacobiSVD<CMatrix> svd(g);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > 1e-6 * sv(0)) return g;
    }
}

std::vector<AccretiveDissipativeMatrix> generate_random_ad(const InstanceSpec& spec) {
    spec.validate();
    std::vector<AccretiveDissipativeMatrix> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int k = 0; k < spec.count; ++k) {
        auto rng = trial_rng(spec.seed, static_cast<std::uint64_t>(k));
        out.push_back(random_ad(spec.dim, spec.conditioning, rng));
    }
    return out;
}

} // namespace admeans
