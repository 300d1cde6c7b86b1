#ifndef POWOP_HPOLY_HPP
#define POWOP_HPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace powop {

/// Exact integer polynomial in h. Zero coefficients are never stored.
class HPolynomial {
public:
    using Terms = std::map<unsigned, mpz_class>;

    HPolynomial() = default;
    /// Constant polynomial.
    HPolynomial(const mpz_class& c);
    HPolynomial(long c) : HPolynomial(mpz_class(c)) {}

    /// c * h^k.
    static HPolynomial monomial(const mpz_class& c, unsigned k);
    /// h itself.
    static HPolynomial h() { return monomial(1, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    mpz_class coeff(unsigned k) const;

    HPolynomial operator-() const;
    HPolynomial& operator+=(const HPolynomial& other);
    HPolynomial& operator-=(const HPolynomial& other);
    HPolynomial& operator*=(const HPolynomial& other);

    friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
    friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
    friend HPolynomial operator*(HPolynomial a, const HPolynomial& b) { return a *= b; }
    friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.terms_ == b.terms_; }

    /// Coefficient-wise reduction into [0, m).
    HPolynomial mod(const mpz_class& m) const;

    /// Descending order, e.g. "h^2 - 36", "-12h + 18", "0".
    std::string to_string() const;

private:
    void add_term(unsigned k, const mpz_class& c);
    Terms terms_;
};

/// Polynomial in alpha whose coefficients are HPolynomials; index = alpha-degree.
class AlphaPolynomial {
public:
    AlphaPolynomial() = default;
    explicit AlphaPolynomial(std::vector<HPolynomial> coefficients);

    /// The single term c * alpha^k.
    static AlphaPolynomial monomial(const HPolynomial& c, unsigned k);

    const std::vector<HPolynomial>& coefficients() const noexcept { return coeffs_; }
    /// -1 for zero.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Zero past the top degree.
    HPolynomial coeff(unsigned i) const;

    AlphaPolynomial& operator+=(const AlphaPolynomial& other);
    AlphaPolynomial& operator-=(const AlphaPolynomial& other);
    AlphaPolynomial& operator*=(const AlphaPolynomial& other);

    friend AlphaPolynomial operator+(AlphaPolynomial a, const AlphaPolynomial& b) { return a += b; }
    friend AlphaPolynomial operator-(AlphaPolynomial a, const AlphaPolynomial& b) { return a -= b; }
    friend AlphaPolynomial operator*(AlphaPolynomial a, const AlphaPolynomial& b) { return a *= b; }
    friend bool operator==(const AlphaPolynomial& a, const AlphaPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Formal d/d(alpha).
    AlphaPolynomial derivative() const;
    AlphaPolynomial mod(const mpz_class& m) const;

    /// e.g. "a^4 - 6a^3 + 12a^2 - h*a + 3"; composite coefficients are parenthesized.
    std::string to_string(const std::string& var = "a") const;

private:
    void normalize();
    std::vector<HPolynomial> coeffs_;
};

/// Binomial coefficient; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

} // namespace powop

#endif
