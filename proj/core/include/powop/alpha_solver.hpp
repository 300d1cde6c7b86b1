#ifndef POWOP_ALPHA_SOLVER_HPP
#define POWOP_ALPHA_SOLVER_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <powop/laurent.hpp>

namespace powop {

enum class SolveMethod { fixed_point, newton };

std::string_view to_string(SolveMethod m) noexcept;

/// Outcome of solving w(h, a) = 0 in Z_p((h))^_p.
struct SolveReport {
    HLaurentSeries alpha_star;
    unsigned iterations = 0;
    /// Minimum valuation of w(h, alpha_star) over the certified window.
    unsigned residual_valuation = 0;
    SolveMethod method = SolveMethod::fixed_point;
    /// Fixed point: valuation of a_{k+1} - a_k per step.
    /// Newton: residual valuation after each step (entry 0 is the start value).
    std::vector<unsigned> history;
};

/// Root of w by the contraction
///
///     a <- h^{-1} (w_0 + w_2 a^2 + ... + w_{p+1} a^{p+1}),   a_0 = 0,
///
/// iterated until two successive iterates agree modulo p^N, then certified by
/// one residual evaluation. Each step divides only by the monomial h, so the
/// result is exact on the window. Throws convergence_error if the budget
/// (default 4N steps) runs out or the certificate fails.
SolveReport solve_alpha_fixed_point(const SeriesPrecision& prec, unsigned max_steps = 0);
SolveReport solve_alpha_fixed_point(std::uint64_t p, unsigned precision);

/// Hensel-Newton iteration a <- a - w(a)/w'(a) from a = 0. w'(0) = -h is a
/// unit, so the residual valuation at least doubles per step. Requires
/// max_exp >= p + 1; window errors from the inversion propagate.
SolveReport solve_alpha_newton(const SeriesPrecision& prec, unsigned max_steps = 0);
SolveReport solve_alpha_newton(std::uint64_t p, unsigned precision);

/// Predicted h^{-1} and h^{-3} coefficients of the root:
/// c1 = (-1)^{p+1} p,  c3 = (1 + (-1)^{p+1} p(p-1)/2) p^3.
std::pair<mpz_class, mpz_class> leading_closed_forms(std::uint64_t p);

/// Residual valuation of a candidate root: the minimum valuation of w(h, a)
/// over the exponents the truncated candidate determines.
unsigned residual_valuation(std::uint64_t p, const HLaurentSeries& alpha);

} // namespace powop

#endif
