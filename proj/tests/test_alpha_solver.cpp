#include <doctest.h>

#include <powop/alpha_solver.hpp>
#include <powop/error.hpp>

#include "support/exact_series.hpp"

using namespace powop;

namespace {

mpz_class coeff(const SolveReport& r, long e)
{
    return r.alpha_star.signed_coefficient(e);
}

} // namespace

TEST_CASE("p = 3 root coefficients")
{
    const SolveReport r = solve_alpha_fixed_point(3, 16);
    CHECK(coeff(r, -1) == 3);
    CHECK(coeff(r, -2) == 0);
    CHECK(coeff(r, -3) == 108);
    CHECK(coeff(r, -4) == -162);
    CHECK(coeff(r, -5) == 7857);
    CHECK(r.residual_valuation >= 16);
    CHECK(r.method == SolveMethod::fixed_point);
}

TEST_CASE("p = 2 root coefficients")
{
    const SolveReport r = solve_alpha_fixed_point(2, 16);
    CHECK(coeff(r, -1) == -2);
    CHECK(coeff(r, -4) == -8);
    // Residual-certified; the sign disagrees with the tabulated +96.
    CHECK(coeff(r, -7) == -96);
    CHECK(r.residual_valuation >= 16);
    for (long e : {-2L, -3L, -5L, -6L}) {
        CHECK(coeff(r, e) == 0);
    }
}

TEST_CASE("roots agree with the exact integer oracle")
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const unsigned n = 24;
        const SolveReport r = solve_alpha_fixed_point(p, n);
        const long floor = -40;
        const auto exact = powop::testing::exact_root(p, floor);
        const mpz_class& mod = r.alpha_star.context().modulus();
        for (long e = -1; e >= floor; --e) {
            CHECK(r.alpha_star.coefficient(e).residue() == mod_floor(exact.at(e), mod));
        }
    }
}

TEST_CASE("closed forms for the leading coefficients")
{
    CHECK(leading_closed_forms(3) == std::pair<mpz_class, mpz_class>(3, 108));
    CHECK(leading_closed_forms(2) == std::pair<mpz_class, mpz_class>(-2, 0));
    CHECK(leading_closed_forms(5) == std::pair<mpz_class, mpz_class>(5, 1375));
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const auto [c1, c3] = leading_closed_forms(p);
        const SolveReport r = solve_alpha_fixed_point(p, 32);
        CHECK(coeff(r, -1) == c1);
        CHECK(coeff(r, -3) == c3);
    }
}

TEST_CASE("root is divisible by p and certified")
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const SolveReport r = solve_alpha_fixed_point(p, 32);
        CHECK(r.alpha_star.min_valuation() >= 1);
        CHECK(r.residual_valuation == 32);
        CHECK(residual_valuation(p, r.alpha_star) == 32);
        CHECK(r.alpha_star.top_exponent() == -1);
    }
}

TEST_CASE("fixed-point steps contract strictly")
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const SolveReport r = solve_alpha_fixed_point(p, 40);
        REQUIRE(r.history.size() >= 2);
        for (std::size_t k = 1; k < r.history.size(); ++k) {
            CHECK(r.history[k] > r.history[k - 1]);
        }
        CHECK(r.history.back() == 40);
        CHECK(r.iterations <= 4 * 40);
    }
}

TEST_CASE("Newton residual valuation at least doubles")
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
        const unsigned n = 48;
        const SolveReport r = solve_alpha_newton(p, n);
        REQUIRE(!r.history.empty());
        CHECK(r.history.front() == 1); // w(0) = w_0 = +-p
        for (std::size_t k = 1; k < r.history.size(); ++k) {
            CHECK(r.history[k] >= std::min(2 * r.history[k - 1], n));
        }
        CHECK(r.history.back() == n);
        CHECK(r.method == SolveMethod::newton);
    }
}

TEST_CASE("both methods give the same series")
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u}) {
        for (unsigned n : {2u, 9u, 32u}) {
            CHECK(solve_alpha_fixed_point(p, n).alpha_star == solve_alpha_newton(p, n).alpha_star);
        }
    }
    CHECK(solve_alpha_newton(5, 16).alpha_star.signed_coefficient(-1) == 5);
}

TEST_CASE("coefficient valuations grow linearly with depth")
{
    // With p = pi^{p+1}, h = H pi^p and a = pi A, w reduces to +-1 - HA + A^{p+1}
    // plus pi-multiples, whose root A is integral in H^{-1}. Hence
    // (p + 1) v(coefficient of h^e) >= 1 + p|e|.
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const unsigned n = 40;
        const SolveReport r = solve_alpha_fixed_point(p, n);
        for (const auto& [e, c] : r.alpha_star.terms()) {
            const unsigned v = r.alpha_star.coefficient(e).valuation();
            CHECK(static_cast<long>((p + 1) * v) >= 1 + static_cast<long>(p) * -e);
        }
    }
}

TEST_CASE("explicit floor gives the same coefficients above it")
{
    for (std::uint64_t p : {2u, 3u, 7u}) {
        const PadicContext ctx(p, 24);
        const SolveReport full = solve_alpha_fixed_point(SeriesPrecision::standard(ctx));
        const SeriesPrecision floored(ctx, 2 * static_cast<long>(p), -9);
        const SolveReport fp = solve_alpha_fixed_point(floored);
        const SolveReport nt = solve_alpha_newton(floored);
        CHECK(fp.alpha_star.terms() == full.alpha_star.truncate_below(-9).terms());
        CHECK(nt.alpha_star == fp.alpha_star);
    }
}

TEST_CASE("solver preconditions")
{
    CHECK_THROWS_AS(solve_alpha_fixed_point(3, 1), usage_error);
    CHECK_THROWS_AS(solve_alpha_fixed_point(SeriesPrecision(PadicContext(3, 8), 3)), usage_error);
    CHECK_THROWS_AS(solve_alpha_newton(SeriesPrecision(PadicContext(5, 8), 5)), usage_error);
    CHECK_THROWS_AS(solve_alpha_fixed_point(SeriesPrecision::standard(PadicContext(3, 32)), 2), convergence_error);
    CHECK_THROWS_AS(leading_closed_forms(6), usage_error);
}
