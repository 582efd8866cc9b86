#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "admeans/toeplitz.hpp"

namespace admeans {

struct InstanceSpec {
    int dim = 2;
    std::uint64_t seed = 0;
    double conditioning = 1e3; // spectral spread cap of the generated PD parts
    int count = 1;

    void validate() const {
        if (dim < 1) throw InvalidInput("InstanceSpec: dim must be >= 1");
        if (conditioning < 1.0) throw InvalidInput("InstanceSpec: conditioning must be >= 1");
        if (count < 1) throw InvalidInput("InstanceSpec: count must be >= 1");
    }
};

// Independent deterministic stream for trial `index` of master seed `seed`;
// suites derive one per trial so results are order-independent.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

CMatrix random_complex_gaussian(int n, std::mt19937_64& rng);

// Gram-plus-ridge construction: G G* + (||G G*|| / conditioning) I.
HermitianMatrix random_hermitian_pd(int n, double conditioning, std::mt19937_64& rng);

AccretiveDissipativeMatrix random_ad(int n, double conditioning, std::mt19937_64& rng);

// Nonsingular by construction (random Gaussian plus a ridge sized from its
// largest singular value).
CMatrix random_nonsingular(int n, std::mt19937_64& rng);

// spec.count accretive-dissipative matrices of dimension spec.dim, the k-th
// drawn from trial_rng(spec.seed, k).
std::vector<AccretiveDissipativeMatrix> generate_random_ad(const InstanceSpec& spec);

} // namespace admeans
