#ifndef POWOP_TESTS_RANDOM_HPP
#define POWOP_TESTS_RANDOM_HPP

#include <cstdint>
#include <map>
#include <random>

#include <gmpxx.h>

#include <powop/laurent.hpp>
#include <powop/padic.hpp>

namespace powop::testing {

/// Fixed-seed generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// Uniform-ish residue modulo m built from 64-bit limbs.
    mpz_class residue(const mpz_class& m)
    {
        mpz_class r = 0;
        const std::size_t limbs = mpz_sizeinbase(m.get_mpz_t(), 2) / 64 + 2;
        for (std::size_t i = 0; i < limbs; ++i) {
            r <<= 64;
            r += mpz_class(std::to_string(rng_()));
        }
        return r % m;
    }

    PadicInt padic(const PadicContext& ctx) { return PadicInt(ctx, residue(ctx.modulus())); }

    PadicInt unit(const PadicContext& ctx)
    {
        while (true) {
            PadicInt x = padic(ctx);
            if (x.is_unit()) {
                return x;
            }
        }
    }

    /// Up to `terms` random coefficients on exponents in [lo, hi].
    HLaurentSeries series(const SeriesPrecision& prec, long lo, long hi, int terms)
    {
        std::map<long, mpz_class> t;
        for (int i = 0; i < terms; ++i) {
            t[integer(lo, hi)] = residue(prec.ctx.modulus());
        }
        return HLaurentSeries::from_terms(prec, t);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace powop::testing

#endif
