#ifndef POWOP_PADIC_HPP
#define POWOP_PADIC_HPP

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace powop {

/// A prime p together with a working precision N. Elements built on a
/// context are residues modulo p^N.
///
/// Copies share the cached modulus; the context itself is immutable.
class PadicContext {
public:
    /// Throws usage_error if p is not prime or precision is zero.
    PadicContext(std::uint64_t p, unsigned precision);

    std::uint64_t prime() const noexcept { return state_->p; }
    unsigned precision() const noexcept { return state_->n; }
    /// p^N.
    const mpz_class& modulus() const noexcept { return state_->modulus; }

    PadicContext with_precision(unsigned precision) const;

    friend bool operator==(const PadicContext& a, const PadicContext& b) noexcept
    {
        return a.state_ == b.state_ || (a.prime() == b.prime() && a.precision() == b.precision());
    }

private:
    struct State {
        std::uint64_t p;
        unsigned n;
        mpz_class modulus;
    };
    std::shared_ptr<const State> state_;
};

/// Throws usage_error when the two contexts differ.
void require_same_context(const PadicContext& a, const PadicContext& b);

/// Residue of a p-adic integer modulo p^N, stored canonically in [0, p^N).
class PadicInt {
public:
    /// Zero.
    explicit PadicInt(PadicContext ctx);
    /// Any integer, reduced into [0, p^N).
    PadicInt(PadicContext ctx, const mpz_class& value);
    PadicInt(PadicContext ctx, long value);

    const PadicContext& context() const noexcept { return ctx_; }
    const mpz_class& residue() const noexcept { return residue_; }

    /// Representative in (-p^N/2, p^N/2].
    mpz_class signed_value() const;

    /// Largest v <= N with p^v | residue; N for zero.
    unsigned valuation() const;
    bool is_zero() const noexcept { return residue_ == 0; }
    bool is_unit() const { return valuation() == 0; }

    /// Inverse modulo p^N. Throws not_invertible for non-units.
    PadicInt inverse() const;

    /// Exact division by p^k. Requires valuation() >= k; the result lives at
    /// precision N - k, the only digits the quotient determines.
    PadicInt shift_down(unsigned k) const;

    /// Image under Z/p^N -> Z/p^M for M <= N.
    PadicInt reduce_to(unsigned precision) const;

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& other);
    PadicInt& operator-=(const PadicInt& other);
    PadicInt& operator*=(const PadicInt& other);

    friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
    friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
    friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }

    friend bool operator==(const PadicInt& a, const PadicInt& b)
    {
        return a.ctx_ == b.ctx_ && a.residue_ == b.residue_;
    }

    std::string to_string() const { return signed_value().get_str(); }

private:
    PadicContext ctx_;
    mpz_class residue_;
};

/// Non-negative residue of v modulo m.
mpz_class mod_floor(const mpz_class& v, const mpz_class& m);

/// p-adic valuation of v capped at cap; cap for v = 0.
unsigned valuation_capped(const mpz_class& v, std::uint64_t p, unsigned cap);

/// Signed minimal representative of r modulo m, r in [0, m).
mpz_class signed_minimal(const mpz_class& r, const mpz_class& m);

} // namespace powop

#endif
