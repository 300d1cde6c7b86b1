#ifndef POWOP_SYMMETRIC_RANKS_HPP
#define POWOP_SYMMETRIC_RANKS_HPP

#include <cstdint>

#include <gmpxx.h>

namespace powop {

/// Bounds under which HNF enumeration is attempted.
inline constexpr unsigned kBruteForceMaxRank = 6;
inline constexpr unsigned kBruteForceMaxExponent = 8;
/// Enumeration aborts past this many matrices.
inline constexpr std::uint64_t kBruteForceMaxCount = 50'000'000;

/// Number of sublattices of index p^m in Z_p^r:
///
///     prod_{t=1}^{r-1} (p^{m+t} - 1) / (p^t - 1).
///
/// Empty product (r = 1) is 1. Requires r >= 1.
mpz_class sublattice_count_closed(std::uint64_t p, unsigned r, unsigned m);

/// Same count by listing Hermite normal forms: upper-triangular r x r
/// integer matrices with diagonal p^{e_1}, ..., p^{e_r}, sum e_j = m, and
/// entries above the diagonal reduced modulo their column's diagonal entry.
/// Throws usage_error outside r <= 6, m <= 8, or past kBruteForceMaxCount.
mpz_class sublattice_count_bruteforce(std::uint64_t p, unsigned r, unsigned m);

/// Isomorphism classes of Z_p^r-sets of order k.
///
/// A finite transitive Z_p^r-set is Z_p^r / L for an open sublattice L, and
/// two are isomorphic iff the sublattices agree (the group is abelian). So
/// transitive sets of size p^m number c_m = sublattice_count_closed(p, r, m),
/// and the answer is the x^k coefficient of prod_m (1 - x^{p^m})^{-c_m}.
mpz_class zpn_set_count(std::uint64_t p, unsigned r, unsigned k);

} // namespace powop

#endif
