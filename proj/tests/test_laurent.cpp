#include <doctest.h>

#include <algorithm>

#include <powop/error.hpp>
#include <powop/laurent.hpp>

#include "support/random.hpp"

using namespace powop;
using powop::testing::Gen;

namespace {

HLaurentSeries S(const SeriesPrecision& prec, std::map<long, mpz_class> t)
{
    return HLaurentSeries::from_terms(prec, t);
}

SeriesPrecision prec_of(std::uint64_t p, unsigned n, long max_exp = 8)
{
    return SeriesPrecision(PadicContext(p, n), max_exp);
}

} // namespace

TEST_CASE("series_add")
{
    const auto pr = prec_of(2, 16);
    CHECK((S(pr, {{-1, -2}}) + S(pr, {{-1, 2}})).is_zero());
    const auto sum = S(pr, {{2, 1}}) + S(pr, {{-1, -6}});
    CHECK(sum == S(pr, {{2, 1}, {-1, -6}}));
    CHECK(sum.to_string() == "h^2 - 6h^-1");
    const auto p32 = prec_of(3, 2);
    CHECK((S(p32, {{1, 8}}) + S(p32, {{1, 1}})).is_zero());
    CHECK_THROWS_AS(S(pr, {{0, 1}}) + S(p32, {{0, 1}}), usage_error);
}

TEST_CASE("series_mul")
{
    const auto pr = prec_of(2, 16);
    CHECK(S(pr, {{-1, -2}}) * S(pr, {{-1, -2}}) == S(pr, {{-2, 4}}));
    const auto x = S(pr, {{-1, -2}, {-4, -8}});
    // (-2/h - 8/h^4)^2 = 4/h^2 + 32/h^5 + 64/h^8, expanded by hand.
    CHECK(x * x == S(pr, {{-2, 4}, {-5, 32}, {-8, 64}}));
    CHECK(x * HLaurentSeries::constant(pr, 1) == x);
    // Exponents above max_exp vanish.
    CHECK((S(pr, {{5, 1}}) * S(pr, {{5, 1}})).is_zero());
}

TEST_CASE("monomial_div")
{
    const auto pr = prec_of(2, 16);
    CHECK(monomial_div(HLaurentSeries::constant(pr, 3), 1) == S(pr, {{-1, 3}}));
    CHECK(monomial_div(S(pr, {{2, 1}, {-1, -6}}), 2) == S(pr, {{0, 1}, {-3, -6}}));
    CHECK(monomial_div(HLaurentSeries(pr), 5).is_zero());
}

TEST_CASE("series_invert_unit")
{
    const auto pr = prec_of(3, 4);
    CHECK(series_invert_unit(S(pr, {{1, 1}})) == S(pr, {{-1, 1}}));

    const auto inv = series_invert_unit(S(pr, {{1, 1}, {0, 3}}));
    CHECK(inv == S(pr, {{-1, 1}, {-2, -3}, {-3, 9}, {-4, -27}}));
    // Multiply back with plain integers: (h + 3)(1/h - 3/h^2 + 9/h^3 - 27/h^4) = 1 - 81/h^4.
    CHECK((S(pr, {{1, 1}, {0, 3}}) * inv) == HLaurentSeries::constant(pr, 1));

    const auto p2 = prec_of(2, 8);
    CHECK_THROWS_AS(series_invert_unit(S(p2, {{1, 2}})), not_invertible);
    CHECK_THROWS_AS(series_invert_unit(HLaurentSeries(p2)), not_invertible);
}

TEST_CASE("series_invert_unit with positive-exponent tail")
{
    // 1 + h inverts as the power series 1 - h + h^2 - ... cut at max_exp.
    const auto pr = prec_of(5, 6, 6);
    const auto x = S(pr, {{0, 1}, {1, 1}});
    const auto inv = series_invert_unit(x);
    CHECK(inv.top_exponent() == 6);
    CHECK(x * inv == HLaurentSeries::constant(pr, 1));
    CHECK_THROWS_AS(series_invert_unit(x, 3), window_error);
}

TEST_CASE("reduce")
{
    const auto p23 = prec_of(2, 3);
    CHECK(S(p23, {{-9, 8}}).is_zero());
    const auto p32 = prec_of(3, 2);
    CHECK(S(p32, {{5, 9}, {1, 1}}) == S(p32, {{1, 1}}));
    const auto x = S(p32, {{1, 4}, {-3, 2}});
    CHECK(reduce(x) == x);

    SeriesPrecision floored(PadicContext(3, 4), 8, -3);
    const auto y = S(floored, {{-2, 1}, {-3, 1}, {-7, 1}});
    CHECK(y.bottom_exponent() == -2);
    CHECK_THROWS_AS(SeriesPrecision(PadicContext(3, 4), 8, 0), usage_error);
}

TEST_CASE("series ring properties on random samples")
{
    Gen g(0x5eed0101);
    const std::vector<std::pair<std::uint64_t, unsigned>> contexts{{2, 8}, {3, 12}, {5, 6}, {13, 20}};
    for (const auto& [p, n] : contexts) {
        // Negative support only, so products stay exact inside the window.
        const SeriesPrecision pr(PadicContext(p, n), 2 * static_cast<long>(p));
        const auto one = HLaurentSeries::constant(pr, 1);
        const HLaurentSeries zero(pr);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = g.series(pr, -12, 0, 6);
            const auto b = g.series(pr, -12, 0, 6);
            const auto c = g.series(pr, -12, 0, 6);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * one == a);
            CHECK(a + zero == a);
            CHECK((a - a).is_zero());
            CHECK(reduce(reduce(a)) == reduce(a));
        }
    }
}

TEST_CASE("product coherence across precisions")
{
    Gen g(0x5eed0102);
    for (std::uint64_t p : {2u, 3u, 7u}) {
        const unsigned n = 10;
        const SeriesPrecision hi(PadicContext(p, n + 5), 2 * static_cast<long>(p));
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = g.series(hi, -10, 4, 5);
            const auto b = g.series(hi, -10, 4, 5);
            CHECK((a * b).reduce_to_precision(n) == a.reduce_to_precision(n) * b.reduce_to_precision(n));
        }
    }
}

TEST_CASE("monomial_div undoes multiplication by h^k")
{
    Gen g(0x5eed0103);
    const SeriesPrecision pr(PadicContext(3, 8), 12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = g.series(pr, -8, 4, 5);
        if (x.is_zero()) {
            continue;
        }
        // h^k itself must also fit in the window.
        const long k = g.integer(0, std::min(pr.max_exp, pr.max_exp - *x.top_exponent()));
        const auto hk = HLaurentSeries::monomial(pr, 1, k);
        CHECK(monomial_div(x * hk, k) == x);
    }
}

TEST_CASE("inverse multiplies back to one inside the window")
{
    Gen g(0x5eed0104);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const SeriesPrecision pr(PadicContext(p, 12), 2 * static_cast<long>(p));
        for (int trial = 0; trial < 40; ++trial) {
            // unit * h^m plus terms of positive valuation at lower exponents.
            const long m = g.integer(-2, 2);
            std::map<long, mpz_class> t;
            t[m] = g.unit(pr.ctx).residue();
            for (int j = 0; j < 4; ++j) {
                t[m - g.integer(1, 6)] = static_cast<long>(p) * g.residue(pr.ctx.modulus());
            }
            const auto x = HLaurentSeries::from_terms(pr, t);
            const auto inv = series_invert_unit(x);
            CHECK(x * inv == HLaurentSeries::constant(pr, 1));
        }
    }
}
