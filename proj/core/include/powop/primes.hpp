#ifndef POWOP_PRIMES_HPP
#define POWOP_PRIMES_HPP

#include <cstdint>

namespace powop {

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

/// Throws usage_error unless n is prime.
void require_prime(std::uint64_t n);

} // namespace powop

#endif
