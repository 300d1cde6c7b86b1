#include <powop/weierstrass.hpp>

#include <powop/error.hpp>
#include <powop/primes.hpp>

#include <algorithm>
#include <string>

namespace powop {

namespace {

long sign_pow(std::uint64_t e)
{
    return e % 2 == 0 ? 1 : -1;
}

} // namespace

std::vector<HPolynomial> w_coefficients(std::uint64_t p)
{
    require_prime(p);
    const long pl = static_cast<long>(p);
    std::vector<HPolynomial> w;
    w.reserve(p + 2);
    for (long i = 0; i <= pl + 1; ++i) {
        if (i == 1) {
            w.push_back(-HPolynomial::h());
            continue;
        }
        // (-1)^{p(p-i+1)}; the exponent is never negative for i <= p+1.
        const long s = sign_pow(p * static_cast<std::uint64_t>(pl - i + 1));
        const mpz_class bracket = binomial(pl, i - 1) + sign_pow(p + 1) * pl * binomial(pl, i);
        w.emplace_back(mpz_class(s * bracket));
    }
    return w;
}

std::vector<HPolynomial> w_expand_oracle(std::uint64_t p)
{
    require_prime(p);
    const long pl = static_cast<long>(p);
    const long sgn = sign_pow(p);
    const AlphaPolynomial a = AlphaPolynomial::monomial(HPolynomial(1), 1);

    AlphaPolynomial prod = a - AlphaPolynomial::monomial(HPolynomial(pl), 0);
    const AlphaPolynomial shift = a + AlphaPolynomial::monomial(HPolynomial(sgn), 0);
    for (std::uint64_t k = 0; k < p; ++k) {
        prod *= shift;
    }
    const HPolynomial lin = HPolynomial::h() - HPolynomial(pl * pl) + HPolynomial(sgn);
    prod -= AlphaPolynomial::monomial(lin, 1);

    std::vector<HPolynomial> out;
    for (std::uint64_t i = 0; i <= p + 1; ++i) {
        out.push_back(prod.coeff(static_cast<unsigned>(i)));
    }
    return out;
}

AlphaPolynomial w_polynomial(std::uint64_t p)
{
    return AlphaPolynomial(w_coefficients(p));
}

HLaurentSeries evaluate(const AlphaPolynomial& f, const HLaurentSeries& a)
{
    const SeriesPrecision& prec = a.precision();
    if (f.is_zero()) {
        return HLaurentSeries(prec);
    }

    const std::optional<long> top = a.top_exponent();
    long reach = f.coeff(0).degree();
    for (int i = 1; i <= f.degree(); ++i) {
        const HPolynomial& c = f.coefficients()[static_cast<std::size_t>(i)];
        if (!c.is_zero() && top) {
            reach = std::max(reach, c.degree() + static_cast<long>(i) * *top);
        }
    }
    if (reach > prec.max_exp) {
        throw window_error("evaluation reaches h^" + std::to_string(reach) + " beyond max_exp "
                           + std::to_string(prec.max_exp) + "; enlarge max_exp");
    }

    // An explicit floor is only safe inside Horner when multiplying by a
    // lowers exponents.
    const bool drop_floor = prec.floor && top && *top > 0;
    const HLaurentSeries x = drop_floor ? a.rewindow(prec.max_exp, std::nullopt) : a;
    const SeriesPrecision& work = x.precision();

    HLaurentSeries acc(work);
    for (int i = f.degree(); i >= 0; --i) {
        acc *= x;
        acc += HLaurentSeries::from_hpoly(work, f.coefficients()[static_cast<std::size_t>(i)]);
    }
    return drop_floor ? acc.rewindow(prec.max_exp, prec.floor) : acc;
}

} // namespace powop
