#ifndef POWOP_ERROR_HPP
#define POWOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace powop {

/// Caller violated a precondition: composite prime, mismatched contexts,
/// out-of-range indices, infeasible brute-force sizes.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures that happen while computing on valid input.
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element has no inverse at the working precision.
class not_invertible : public computation_error {
public:
    using computation_error::computation_error;
};

/// A result would need exponents above max_exp, or a windowed inversion
/// failed to stabilize.
class window_error : public computation_error {
public:
    using computation_error::computation_error;
};

/// An iteration exhausted its step budget.
class convergence_error : public computation_error {
public:
    using computation_error::computation_error;
};

} // namespace powop

#endif
