#include <doctest.h>

#include <powop/error.hpp>
#include <powop/symmetric_ranks.hpp>

#include <vector>

using namespace powop;

namespace {

// Binary partitions by the recurrence b(2n+1) = b(2n), b(2n) = b(2n-1) + b(n).
std::vector<mpz_class> binary_partitions(unsigned up_to)
{
    std::vector<mpz_class> b(up_to + 1);
    b[0] = 1;
    for (unsigned k = 1; k <= up_to; ++k) {
        b[k] = (k % 2 == 1) ? b[k - 1] : b[k - 1] + b[k / 2];
    }
    return b;
}

// Partitions of k into parts from {1, p, p^2, ...} by explicit recursion on
// the largest part allowed.
std::uint64_t power_partitions(std::uint64_t p, std::uint64_t k, std::uint64_t largest)
{
    if (k == 0) {
        return 1;
    }
    if (largest == 1) {
        return 1;
    }
    std::uint64_t total = 0;
    for (std::uint64_t used = 0; used * largest <= k; ++used) {
        total += power_partitions(p, k - used * largest, largest / p);
    }
    return total;
}

std::uint64_t power_partitions(std::uint64_t p, std::uint64_t k)
{
    std::uint64_t largest = 1;
    while (largest * p <= k) {
        largest *= p;
    }
    return power_partitions(p, k, largest);
}

} // namespace

TEST_CASE("closed form examples")
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned m = 0; m <= 5; ++m) {
            CHECK(sublattice_count_closed(p, 1, m) == 1);
        }
        CHECK(sublattice_count_closed(p, 3, 0) == 1);
    }
    CHECK(sublattice_count_closed(2, 2, 1) == 3);
    CHECK(sublattice_count_closed(2, 2, 2) == 7);
    CHECK(sublattice_count_closed(2, 2, 3) == 15);
    CHECK(sublattice_count_closed(2, 3, 1) == 7);
    CHECK(sublattice_count_closed(3, 2, 1) == 4);
    CHECK_THROWS_AS(sublattice_count_closed(2, 0, 1), usage_error);
    CHECK_THROWS_AS(sublattice_count_closed(6, 2, 1), usage_error);
}

TEST_CASE("HNF enumeration examples")
{
    CHECK(sublattice_count_bruteforce(2, 2, 1) == 3);
    CHECK(sublattice_count_bruteforce(3, 2, 1) == 4);
    CHECK(sublattice_count_bruteforce(2, 1, 3) == 1);
    CHECK(sublattice_count_bruteforce(2, 2, 3) == 15);
    CHECK(sublattice_count_bruteforce(5, 3, 0) == 1);
}

TEST_CASE("closed form equals HNF enumeration on the grid")
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned r = 1; r <= 3; ++r) {
            for (unsigned m = 0; m <= 3; ++m) {
                CHECK(sublattice_count_closed(p, r, m) == sublattice_count_bruteforce(p, r, m));
            }
        }
    }
    CHECK(sublattice_count_closed(2, 4, 4) == sublattice_count_bruteforce(2, 4, 4));
    CHECK(sublattice_count_closed(7, 2, 2) == sublattice_count_bruteforce(7, 2, 2));
}

TEST_CASE("HNF enumeration bounds")
{
    CHECK_THROWS_AS(sublattice_count_bruteforce(2, 7, 1), usage_error);
    CHECK_THROWS_AS(sublattice_count_bruteforce(2, 2, 9), usage_error);
    CHECK_THROWS_AS(sublattice_count_bruteforce(2, 0, 1), usage_error);
    CHECK_THROWS_AS(sublattice_count_bruteforce(13, 6, 8), usage_error);
}

TEST_CASE("counts grow with index and rank")
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned r = 2; r <= 4; ++r) {
            for (unsigned m = 0; m < 6; ++m) {
                CHECK(sublattice_count_closed(p, r, m + 1) > sublattice_count_closed(p, r, m));
                CHECK(sublattice_count_closed(p, r + 1, m + 1) > sublattice_count_closed(p, r, m + 1));
            }
        }
    }
}

TEST_CASE("Z_p^r-set counts")
{
    CHECK_THROWS_AS(zpn_set_count(2, 1, 0), usage_error);
    CHECK(zpn_set_count(2, 1, 1) == 1);
    CHECK(zpn_set_count(2, 1, 2) == 2);
    CHECK(zpn_set_count(2, 1, 3) == 2);
    CHECK(zpn_set_count(3, 1, 3) == 2);
    // Order 2 with r = 2: two points, or one of three transitive 2-sets.
    CHECK(zpn_set_count(2, 2, 2) == 4);
    CHECK_THROWS_AS(zpn_set_count(2, 0, 2), usage_error);
}

TEST_CASE("rank 1 counts are p-power partitions")
{
    const auto b = binary_partitions(64);
    for (unsigned k = 1; k <= 64; ++k) {
        CHECK(zpn_set_count(2, 1, k) == b[k]);
        CHECK(zpn_set_count(2, 1, k) == power_partitions(2, k));
    }
    for (unsigned k = 1; k <= 40; ++k) {
        CHECK(zpn_set_count(3, 1, k) == power_partitions(3, k));
    }
}

TEST_CASE("set counts dominate transitive counts")
{
    for (std::uint64_t p : {2u, 3u}) {
        for (unsigned r = 1; r <= 3; ++r) {
            std::uint64_t size = 1;
            for (unsigned m = 0; m <= 3; ++m) {
                CHECK(zpn_set_count(p, r, static_cast<unsigned>(size)) >= sublattice_count_closed(p, r, m));
                size *= p;
            }
        }
    }
}
