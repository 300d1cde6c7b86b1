#ifndef POWOP_LAURENT_HPP
#define POWOP_LAURENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include <powop/hpoly.hpp>
#include <powop/padic.hpp>

namespace powop {

/// Truncation rules for series in Z_p((h))^_p modulo p^N.
///
/// Positive support is cut at max_exp. Negative support is either left to
/// the coefficient valuations ("self-limiting": terms die once p^N divides
/// them) or cut explicitly: with a floor F, only exponents > F are kept.
struct SeriesPrecision {
    PadicContext ctx;
    long max_exp;
    std::optional<long> floor;

    SeriesPrecision(PadicContext c, long max_exponent, std::optional<long> floor_exp = std::nullopt);

    /// max_exp = 2p, self-limiting.
    static SeriesPrecision standard(const PadicContext& c);

    bool keeps(long exp) const noexcept { return exp <= max_exp && (!floor || exp > *floor); }

    friend bool operator==(const SeriesPrecision& a, const SeriesPrecision& b)
    {
        return a.ctx == b.ctx && a.max_exp == b.max_exp && a.floor == b.floor;
    }
};

/// Finite-support element of Z_p((h))^_p modulo p^N.
///
/// Coefficients are residues in [0, p^N); zero residues and exponents outside
/// the precision window are never stored.
class HLaurentSeries {
public:
    /// Descending exponent order.
    using Terms = std::map<long, mpz_class, std::greater<>>;

    explicit HLaurentSeries(SeriesPrecision prec);

    /// Reduces arbitrary integer coefficients into the window.
    static HLaurentSeries from_terms(SeriesPrecision prec, const std::map<long, mpz_class>& terms);
    static HLaurentSeries monomial(SeriesPrecision prec, const mpz_class& c, long exp);
    static HLaurentSeries constant(SeriesPrecision prec, const mpz_class& c) { return monomial(std::move(prec), c, 0); }
    /// Throws window_error when the polynomial degree exceeds max_exp.
    static HLaurentSeries from_hpoly(SeriesPrecision prec, const HPolynomial& poly);

    const SeriesPrecision& precision() const noexcept { return prec_; }
    const PadicContext& context() const noexcept { return prec_.ctx; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    PadicInt coefficient(long exp) const;
    /// Signed minimal representative of the coefficient.
    mpz_class signed_coefficient(long exp) const;

    std::optional<long> top_exponent() const;
    std::optional<long> bottom_exponent() const;
    /// Minimum coefficient valuation; N for zero.
    unsigned min_valuation() const;
    /// Minimum coefficient valuation over exponents > above; N if none.
    unsigned min_valuation_above(long above) const;

    HLaurentSeries operator-() const;
    HLaurentSeries& operator+=(const HLaurentSeries& other);
    HLaurentSeries& operator-=(const HLaurentSeries& other);
    /// Cauchy product; exponents outside the window are discarded.
    HLaurentSeries& operator*=(const HLaurentSeries& other);
    HLaurentSeries& scale(const mpz_class& c);

    friend HLaurentSeries operator+(HLaurentSeries a, const HLaurentSeries& b) { return a += b; }
    friend HLaurentSeries operator-(HLaurentSeries a, const HLaurentSeries& b) { return a -= b; }
    friend HLaurentSeries operator*(HLaurentSeries a, const HLaurentSeries& b) { return a *= b; }
    friend bool operator==(const HLaurentSeries& a, const HLaurentSeries& b)
    {
        return a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    /// Same coefficients under a different window, reduced.
    HLaurentSeries rewindow(long max_exp, std::optional<long> floor) const;
    /// Image at a lower p-adic precision.
    HLaurentSeries reduce_to_precision(unsigned precision) const;
    /// Only exponents strictly above floor.
    HLaurentSeries truncate_below(long floor) const;

    std::string to_string() const;

private:
    void put(long exp, mpz_class&& residue);
    SeriesPrecision prec_;
    Terms terms_;
};

/// Idempotent normalization: drops zero residues and out-of-window exponents.
HLaurentSeries reduce(const HLaurentSeries& x);

/// Shifts every exponent down by k (division by h^k).
HLaurentSeries monomial_div(const HLaurentSeries& x, long k);

/// Inverse of a unit in the windowed ring.
///
/// The input must factor as c*h^m*(1 + eps) where c is a p-adic unit and
/// every term of eps has positive valuation or positive exponent; m is the
/// lowest exponent carrying a unit coefficient. The inverse is summed as a
/// geometric series until the partial sums stop changing modulo p^N on the
/// window. Throws not_invertible when no coefficient is a unit, window_error
/// if the series does not settle within max_iterations terms.
HLaurentSeries series_invert_unit(const HLaurentSeries& x, unsigned max_iterations = 0);

} // namespace powop

#endif
