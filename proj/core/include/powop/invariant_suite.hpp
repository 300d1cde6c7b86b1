#ifndef POWOP_INVARIANT_SUITE_HPP
#define POWOP_INVARIANT_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <powop/example_comparison.hpp>

namespace powop {

struct InvariantCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct InvariantReport {
    std::uint64_t p = 0;
    unsigned precision = 0;
    std::vector<InvariantCheck> checks;
    ExampleComparison comparison;

    bool all_passed() const;
    /// "violation" if any check failed, else "discrepancy" if the reference
    /// comparison disagrees, else "ok".
    std::string status() const;
    nlohmann::ordered_json to_json() const;
};

/// Runs every structural check for one prime at precision N: w closed form
/// vs expansion, the mod-p shape of w, d_{i,tau} backtracking vs DP, psi_E
/// degrees and its alpha^0 coefficient mod p, root residual and divisibility,
/// leading coefficients, solver agreement and convergence rates, both psi_F
/// assembly orders, the Frobenius congruence, and window stability.
InvariantReport run_invariant_suite(std::uint64_t p, unsigned precision);

} // namespace powop

#endif
