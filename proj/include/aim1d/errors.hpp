#pragma once

#include <stdexcept>
#include <string>

namespace aim1d {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated an interface contract (mismatched jet orders, bad
// argument ranges, malformed potential strings).
struct UsageError : Error {
    using Error::Error;
};

// Differentiating an order-0 jet: the jet order budget is too small for
// the requested iteration depth.
struct OrderExhausted : Error {
    using Error::Error;
};

// Series division by a jet whose leading coefficient is not an invertible
// (nonzero, energy-free) scalar.
struct SingularDivision : Error {
    using Error::Error;
};

// The quantization polynomial came out identically zero; the expansion
// point is pathological for this iteration count.
struct DegenerateDiscriminant : Error {
    using Error::Error;
};

// Root extraction requested on a polynomial of degree < 1.
struct NoRoots : Error {
    using Error::Error;
};

// Potential evaluation would exceed the floating-point range.
struct PotentialOverflow : Error {
    using Error::Error;
};

// The finite-difference oracle cannot be applied to this configuration.
struct OracleInapplicable : Error {
    using Error::Error;
};

// Out-of-domain physical input (non-positive energy difference, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace aim1d
