#include <powop/primes.hpp>

#include <powop/error.hpp>

#include <string>

namespace powop {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0 || n % 3 == 0) {
        return false;
    }
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) {
            return false;
        }
    }
    return true;
}

void require_prime(std::uint64_t n)
{
    if (!is_prime(n)) {
        throw usage_error("p = " + std::to_string(n) + " is not prime");
    }
}

} // namespace powop
