#ifndef POWOP_EXAMPLE_COMPARISON_HPP
#define POWOP_EXAMPLE_COMPARISON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace powop {

/// One reference coefficient set against the value this library computes.
struct CoefficientComparison {
    /// e.g. "alpha_star", "psi_F", "psi_E".
    std::string quantity;
    /// Which form of the quantity was evaluated, e.g. "general formula".
    std::string variant;
    /// h-exponent for series, alpha-degree for psi_E rows.
    long index = 0;
    std::string reference;
    std::string computed;
    bool agrees = false;
};

/// Reference tables exist for p = 2 and p = 3 only. For p = 2 the tables
/// carry known sign/coefficient disagreements; they are reported, never
/// used as ground truth.
struct ExampleComparison {
    std::uint64_t p = 0;
    unsigned precision = 0;
    bool has_reference = false;
    std::vector<CoefficientComparison> rows;
    std::vector<std::string> notes;

    bool all_agree() const;
    /// "agreement", "discrepancy", or "no_reference".
    std::string status() const;
    nlohmann::json to_json() const;
};

/// Compares root and power-operation coefficients computed at precision N
/// against the tabulated small-prime values.
ExampleComparison compare_reference_examples(std::uint64_t p, unsigned precision);

} // namespace powop

#endif
