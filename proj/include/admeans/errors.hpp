#pragma once

#include <stdexcept>
#include <string>

namespace admeans {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Construction of HermitianMatrix from an input that is not Hermitian
// within tolerance.
struct NotHermitian : Error {
    using Error::Error;
};

struct NotPSD : Error {
    using Error::Error;
};

struct NotPD : Error {
    using Error::Error;
};

// Input fails the accretive-dissipative membership test.
struct NotAD : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

// The (2,2) block of a partitioned matrix is (near-)singular.
struct SingularBlock : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

// A theorem's hypothesis (commutation, normality) is violated; distinguishes
// "not applicable" from "violated".
struct HypothesisFail : Error {
    using Error::Error;
};

// The computed principal square root fails the cone-membership check.
struct SqrtNotInCone : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

// Malformed matrix files, bad CLI arguments, non-finite entries.
struct InvalidInput : Error {
    using Error::Error;
};

} // namespace admeans
