#include <powop/padic.hpp>

#include <powop/error.hpp>
#include <powop/primes.hpp>

#include <utility>

namespace powop {

PadicContext::PadicContext(std::uint64_t p, unsigned precision)
{
    require_prime(p);
    if (precision == 0) {
        throw usage_error("p-adic precision must be at least 1");
    }
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, precision);
    state_ = std::make_shared<const State>(State{p, precision, std::move(modulus)});
}

PadicContext PadicContext::with_precision(unsigned precision) const
{
    if (precision == state_->n) {
        return *this;
    }
    return PadicContext(state_->p, precision);
}

void require_same_context(const PadicContext& a, const PadicContext& b)
{
    if (!(a == b)) {
        throw usage_error("context mismatch: (p=" + std::to_string(a.prime()) + ", N="
                          + std::to_string(a.precision()) + ") vs (p=" + std::to_string(b.prime())
                          + ", N=" + std::to_string(b.precision()) + ")");
    }
}

mpz_class mod_floor(const mpz_class& v, const mpz_class& m)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

unsigned valuation_capped(const mpz_class& v, std::uint64_t p, unsigned cap)
{
    if (v == 0) {
        return cap;
    }
    mpz_class q = v;
    unsigned count = 0;
    while (count < cap && mpz_divisible_ui_p(q.get_mpz_t(), p)) {
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
        ++count;
    }
    return count;
}

mpz_class signed_minimal(const mpz_class& r, const mpz_class& m)
{
    if (2 * r > m) {
        return r - m;
    }
    return r;
}

PadicInt::PadicInt(PadicContext ctx) : ctx_(std::move(ctx)), residue_(0) {}

PadicInt::PadicInt(PadicContext ctx, const mpz_class& value)
    : ctx_(std::move(ctx)), residue_(mod_floor(value, ctx_.modulus()))
{
}

PadicInt::PadicInt(PadicContext ctx, long value) : PadicInt(std::move(ctx), mpz_class(value)) {}

mpz_class PadicInt::signed_value() const
{
    return signed_minimal(residue_, ctx_.modulus());
}

unsigned PadicInt::valuation() const
{
    return valuation_capped(residue_, ctx_.prime(), ctx_.precision());
}

PadicInt PadicInt::inverse() const
{
    if (!is_unit()) {
        throw not_invertible(to_string() + " is not a unit modulo " + std::to_string(ctx_.prime())
                             + "^" + std::to_string(ctx_.precision()));
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), ctx_.modulus().get_mpz_t());
    return PadicInt(ctx_, inv);
}

PadicInt PadicInt::shift_down(unsigned k) const
{
    if (k == 0) {
        return *this;
    }
    if (k >= ctx_.precision()) {
        throw usage_error("shift by p^" + std::to_string(k) + " leaves no digits at precision "
                          + std::to_string(ctx_.precision()));
    }
    if (valuation() < k) {
        throw usage_error("shift_down: " + to_string() + " is not divisible by p^" + std::to_string(k));
    }
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), ctx_.prime(), k);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), residue_.get_mpz_t(), pk.get_mpz_t());
    return PadicInt(ctx_.with_precision(ctx_.precision() - k), q);
}

PadicInt PadicInt::reduce_to(unsigned precision) const
{
    if (precision > ctx_.precision()) {
        throw usage_error("cannot raise precision from " + std::to_string(ctx_.precision()) + " to "
                          + std::to_string(precision));
    }
    return PadicInt(ctx_.with_precision(precision), residue_);
}

PadicInt PadicInt::operator-() const
{
    if (residue_ == 0) {
        return *this;
    }
    PadicInt r(ctx_);
    r.residue_ = ctx_.modulus() - residue_;
    return r;
}

PadicInt& PadicInt::operator+=(const PadicInt& other)
{
    require_same_context(ctx_, other.ctx_);
    residue_ += other.residue_;
    if (residue_ >= ctx_.modulus()) {
        residue_ -= ctx_.modulus();
    }
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& other)
{
    require_same_context(ctx_, other.ctx_);
    residue_ -= other.residue_;
    if (residue_ < 0) {
        residue_ += ctx_.modulus();
    }
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& other)
{
    require_same_context(ctx_, other.ctx_);
    residue_ *= other.residue_;
    mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), ctx_.modulus().get_mpz_t());
    return *this;
}

} // namespace powop
