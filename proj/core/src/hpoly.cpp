#include <powop/hpoly.hpp>

#include <powop/padic.hpp>

#include <sstream>
#include <utility>

namespace powop {

namespace {

// Appends "c*var^k" to a signed sum being built left to right.
void append_term(std::ostringstream& os, bool first, const mpz_class& c, const std::string& body)
{
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
        if (negative) {
            os << '-';
        }
    } else {
        os << (negative ? " - " : " + ");
    }
    if (body.empty()) {
        os << mag.get_str();
    } else if (mag != 1) {
        os << mag.get_str() << body;
    } else {
        os << body;
    }
}

std::string power_body(const std::string& var, unsigned k)
{
    if (k == 0) {
        return {};
    }
    if (k == 1) {
        return var;
    }
    return var + "^" + std::to_string(k);
}

} // namespace

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

HPolynomial::HPolynomial(const mpz_class& c)
{
    add_term(0, c);
}

HPolynomial HPolynomial::monomial(const mpz_class& c, unsigned k)
{
    HPolynomial r;
    r.add_term(k, c);
    return r;
}

void HPolynomial::add_term(unsigned k, const mpz_class& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool HPolynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int HPolynomial::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

mpz_class HPolynomial::coeff(unsigned k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

HPolynomial HPolynomial::operator-() const
{
    HPolynomial r = *this;
    for (auto& [k, c] : r.terms_) {
        c = -c;
    }
    return r;
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& other)
{
    for (const auto& [k, c] : other.terms_) {
        add_term(k, c);
    }
    return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& other)
{
    for (const auto& [k, c] : other.terms_) {
        add_term(k, -c);
    }
    return *this;
}

HPolynomial& HPolynomial::operator*=(const HPolynomial& other)
{
    HPolynomial r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            r.add_term(ka + kb, ca * cb);
        }
    }
    *this = std::move(r);
    return *this;
}

HPolynomial HPolynomial::mod(const mpz_class& m) const
{
    HPolynomial r;
    for (const auto& [k, c] : terms_) {
        r.add_term(k, mod_floor(c, m));
    }
    return r;
}

std::string HPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, first, it->second, power_body("h", it->first));
        first = false;
    }
    return os.str();
}

AlphaPolynomial::AlphaPolynomial(std::vector<HPolynomial> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

AlphaPolynomial AlphaPolynomial::monomial(const HPolynomial& c, unsigned k)
{
    std::vector<HPolynomial> v(k + 1);
    v[k] = c;
    return AlphaPolynomial(std::move(v));
}

void AlphaPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

HPolynomial AlphaPolynomial::coeff(unsigned i) const
{
    return i < coeffs_.size() ? coeffs_[i] : HPolynomial{};
}

AlphaPolynomial& AlphaPolynomial::operator+=(const AlphaPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

AlphaPolynomial& AlphaPolynomial::operator-=(const AlphaPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

AlphaPolynomial& AlphaPolynomial::operator*=(const AlphaPolynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<HPolynomial> r(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

AlphaPolynomial AlphaPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<HPolynomial> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        r[i - 1] = coeffs_[i] * HPolynomial(mpz_class(static_cast<unsigned long>(i)));
    }
    return AlphaPolynomial(std::move(r));
}

AlphaPolynomial AlphaPolynomial::mod(const mpz_class& m) const
{
    std::vector<HPolynomial> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        r.push_back(c.mod(m));
    }
    return AlphaPolynomial(std::move(r));
}

std::string AlphaPolynomial::to_string(const std::string& var) const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const HPolynomial& c = coeffs_[idx];
        if (c.is_zero()) {
            continue;
        }
        const std::string body = power_body(var, static_cast<unsigned>(idx));
        if (c.terms().size() == 1) {
            const auto& [k, v] = *c.terms().begin();
            std::string hk = power_body("h", k);
            std::string full = hk.empty() ? body : (body.empty() ? hk : hk + "*" + body);
            append_term(os, first, v, full);
        } else {
            os << (first ? "" : " + ") << '(' << c.to_string() << ')' << (body.empty() ? "" : "*" + body);
        }
        first = false;
    }
    return os.str();
}

} // namespace powop
