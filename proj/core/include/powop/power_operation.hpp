#ifndef POWOP_POWER_OPERATION_HPP
#define POWOP_POWER_OPERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include <gmpxx.h>

#include <powop/alpha_solver.hpp>
#include <powop/hpoly.hpp>
#include <powop/laurent.hpp>

namespace powop {

/// Compositions m_1 + ... + m_parts = total with lower <= m_s <= upper and
/// m_parts >= last_min.
struct CompositionSpec {
    unsigned total = 0;
    unsigned parts = 1;
    unsigned lower = 1;
    unsigned upper = 1;
    unsigned last_min = 1;
};

/// Calls visit once per composition, in lexicographic order. Returns the count.
std::uint64_t for_each_composition(const CompositionSpec& spec,
                                   const std::function<void(std::span<const unsigned>)>& visit);

/// d_{i,tau} = sum_{n=0}^{tau-1} (-1)^{tau-n} w_0^n  sum  w_{m_1} ... w_{m_{tau-n}},
/// the inner sum over compositions of tau+i into tau-n parts in [1, p+1]
/// whose last part is at least i+1. Enumerated by backtracking.
/// Requires 0 <= i <= p and 1 <= tau <= p.
HPolynomial d_coefficient(std::uint64_t p, unsigned i, unsigned tau);

/// Same value by a part-count/running-total convolution table.
HPolynomial d_coefficient_oracle(std::uint64_t p, unsigned i, unsigned tau);

/// The image of h under the height-2 total power operation, as a polynomial
/// in alpha of degree <= p:
///
///     a + sum_{i=0}^{p} a^i sum_{tau=1}^{p} w_{tau+1} d_{i,tau}.
///
/// The standalone a is folded into the alpha^1 coefficient.
struct PsiEPolynomial {
    std::uint64_t p = 0;
    AlphaPolynomial body;
};

PsiEPolynomial psi_E(std::uint64_t p);

/// Applies a -> alpha_star (Horner). Throws usage_error on a prime mismatch.
HLaurentSeries specialize_alpha(const PsiEPolynomial& psi, const HLaurentSeries& alpha_star);

/// Sum assembled in the original term order: alpha_star plus explicit powers
/// (alpha_star)^i times the injected tau-sums. Independent of the Horner path.
HLaurentSeries psi_F_termwise(std::uint64_t p, const HLaurentSeries& alpha_star);

/// specialize_alpha(psi_E(p), root) where the root is solved by fixed point.
/// With an explicit floor the root is solved p exponents deeper so every
/// coefficient above the floor is exact.
HLaurentSeries psi_F(const SeriesPrecision& prec);
HLaurentSeries psi_F(std::uint64_t p, unsigned precision);

/// True when every coefficient above report_floor is unchanged after raising
/// max_exp by 4 and deepening the floor by 8.
bool psi_F_window_stable(const SeriesPrecision& prec, long report_floor);

struct FrobeniusWitness {
    long exp = 0;
    /// Coefficient mod p at exp.
    unsigned long residue = 0;
};

struct FrobeniusResult {
    bool holds = false;
    std::optional<FrobeniusWitness> witness;
};

/// Checks psi == h^p modulo p; on failure reports the highest offending exponent.
FrobeniusResult frobenius_check(const HLaurentSeries& psi, std::uint64_t p);

} // namespace powop

#endif
