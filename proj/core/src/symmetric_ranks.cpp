#include <powop/symmetric_ranks.hpp>

#include <powop/error.hpp>
#include <powop/primes.hpp>

#include <string>
#include <vector>

namespace powop {

namespace {

void check_rank(std::uint64_t p, unsigned r)
{
    require_prime(p);
    if (r < 1) {
        throw usage_error("lattice rank must be >= 1");
    }
}

mpz_class pow_ui(std::uint64_t p, unsigned e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// Multiset coefficient C(c + j - 1, j) for big c.
mpz_class multichoose(const mpz_class& c, unsigned j)
{
    mpz_class num = 1;
    mpz_class den = 1;
    for (unsigned t = 0; t < j; ++t) {
        num *= c + t;
        den *= t + 1;
    }
    return num / den;
}

} // namespace

mpz_class sublattice_count_closed(std::uint64_t p, unsigned r, unsigned m)
{
    check_rank(p, r);
    mpz_class num = 1;
    mpz_class den = 1;
    for (unsigned t = 1; t < r; ++t) {
        num *= pow_ui(p, m + t) - 1;
        den *= pow_ui(p, t) - 1;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class sublattice_count_bruteforce(std::uint64_t p, unsigned r, unsigned m)
{
    check_rank(p, r);
    if (r > kBruteForceMaxRank || m > kBruteForceMaxExponent) {
        throw usage_error("HNF enumeration supports r <= " + std::to_string(kBruteForceMaxRank) + " and m <= "
                          + std::to_string(kBruteForceMaxExponent));
    }

    std::vector<unsigned> exps(r);
    std::vector<std::uint64_t> diag(r);
    // Above-diagonal entries, row-major over (row, col) with row < col.
    std::vector<std::uint64_t> upper;
    std::uint64_t count = 0;

    auto enumerate_offsets = [&] {
        std::vector<std::pair<unsigned, unsigned>> slots;
        for (unsigned col = 0; col < r; ++col) {
            for (unsigned row = 0; row < col; ++row) {
                slots.emplace_back(row, col);
            }
        }
        upper.assign(slots.size(), 0);
        // Odometer over entries in [0, diag[col]).
        while (true) {
            if (++count > kBruteForceMaxCount) {
                throw usage_error("HNF enumeration exceeds " + std::to_string(kBruteForceMaxCount)
                                  + " matrices; use the closed form");
            }
            std::size_t s = 0;
            for (; s < slots.size(); ++s) {
                if (++upper[s] < diag[slots[s].second]) {
                    break;
                }
                upper[s] = 0;
            }
            if (s == slots.size()) {
                return;
            }
        }
    };

    // Weak compositions of m into r exponents.
    auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos + 1 == r) {
            exps[pos] = left;
            for (unsigned j = 0; j < r; ++j) {
                const mpz_class d = pow_ui(p, exps[j]);
                if (!d.fits_ulong_p()) {
                    throw usage_error("HNF diagonal entry p^" + std::to_string(exps[j]) + " is too large to enumerate");
                }
                diag[j] = d.get_ui();
            }
            enumerate_offsets();
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, m);
    return mpz_class(static_cast<unsigned long>(count));
}

mpz_class zpn_set_count(std::uint64_t p, unsigned r, unsigned k)
{
    check_rank(p, r);
    if (k < 1) {
        throw usage_error("set order k must be >= 1");
    }
    std::vector<mpz_class> poly(k + 1, 0);
    poly[0] = 1;
    std::uint64_t size = 1;
    for (unsigned m = 0; size <= k; ++m, size *= p) {
        const mpz_class c = sublattice_count_closed(p, r, m);
        // poly *= (1 - x^size)^{-c} = sum_j C(c+j-1, j) x^{size j}
        std::vector<mpz_class> next(k + 1, 0);
        for (unsigned j = 0; j * size <= k; ++j) {
            const mpz_class weight = multichoose(c, j);
            const unsigned shift = static_cast<unsigned>(j * size);
            for (unsigned s = 0; s + shift <= k; ++s) {
                if (poly[s] != 0) {
                    next[s + shift] += weight * poly[s];
                }
            }
        }
        poly = std::move(next);
    }
    return poly[k];
}

} // namespace powop
