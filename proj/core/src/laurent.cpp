#include <powop/laurent.hpp>

#include <powop/error.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace powop {

SeriesPrecision::SeriesPrecision(PadicContext c, long max_exponent, std::optional<long> floor_exp)
    : ctx(std::move(c)), max_exp(max_exponent), floor(floor_exp)
{
    if (floor && *floor > -1) {
        throw usage_error("explicit series floor must be <= -1, got " + std::to_string(*floor));
    }
}

SeriesPrecision SeriesPrecision::standard(const PadicContext& c)
{
    return SeriesPrecision(c, 2 * static_cast<long>(c.prime()));
}

HLaurentSeries::HLaurentSeries(SeriesPrecision prec) : prec_(std::move(prec)) {}

void HLaurentSeries::put(long exp, mpz_class&& residue)
{
    if (residue != 0 && prec_.keeps(exp)) {
        terms_.insert_or_assign(exp, std::move(residue));
    }
}

HLaurentSeries HLaurentSeries::from_terms(SeriesPrecision prec, const std::map<long, mpz_class>& terms)
{
    HLaurentSeries r(std::move(prec));
    for (const auto& [k, c] : terms) {
        r.put(k, mod_floor(c, r.prec_.ctx.modulus()));
    }
    return r;
}

HLaurentSeries HLaurentSeries::monomial(SeriesPrecision prec, const mpz_class& c, long exp)
{
    HLaurentSeries r(std::move(prec));
    r.put(exp, mod_floor(c, r.prec_.ctx.modulus()));
    return r;
}

HLaurentSeries HLaurentSeries::from_hpoly(SeriesPrecision prec, const HPolynomial& poly)
{
    if (poly.degree() > prec.max_exp) {
        throw window_error("polynomial of h-degree " + std::to_string(poly.degree()) + " exceeds max_exp "
                           + std::to_string(prec.max_exp) + "; enlarge max_exp");
    }
    HLaurentSeries r(std::move(prec));
    for (const auto& [k, c] : poly.terms()) {
        r.put(static_cast<long>(k), mod_floor(c, r.prec_.ctx.modulus()));
    }
    return r;
}

PadicInt HLaurentSeries::coefficient(long exp) const
{
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        return PadicInt(prec_.ctx);
    }
    return PadicInt(prec_.ctx, it->second);
}

mpz_class HLaurentSeries::signed_coefficient(long exp) const
{
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        return 0;
    }
    return signed_minimal(it->second, prec_.ctx.modulus());
}

std::optional<long> HLaurentSeries::top_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<long> HLaurentSeries::bottom_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

unsigned HLaurentSeries::min_valuation() const
{
    unsigned v = prec_.ctx.precision();
    for (const auto& [k, c] : terms_) {
        v = std::min(v, valuation_capped(c, prec_.ctx.prime(), prec_.ctx.precision()));
    }
    return v;
}

unsigned HLaurentSeries::min_valuation_above(long above) const
{
    unsigned v = prec_.ctx.precision();
    for (const auto& [k, c] : terms_) {
        if (k <= above) {
            break;
        }
        v = std::min(v, valuation_capped(c, prec_.ctx.prime(), prec_.ctx.precision()));
    }
    return v;
}

HLaurentSeries HLaurentSeries::operator-() const
{
    HLaurentSeries r(prec_);
    for (const auto& [k, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), k, prec_.ctx.modulus() - c);
    }
    return r;
}

HLaurentSeries& HLaurentSeries::operator+=(const HLaurentSeries& other)
{
    require_same_context(prec_.ctx, other.prec_.ctx);
    const mpz_class& m = prec_.ctx.modulus();
    for (const auto& [k, c] : other.terms_) {
        if (!prec_.keeps(k)) {
            continue;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second >= m) {
                it->second -= m;
            }
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

HLaurentSeries& HLaurentSeries::operator-=(const HLaurentSeries& other)
{
    return *this += -other;
}

HLaurentSeries& HLaurentSeries::operator*=(const HLaurentSeries& other)
{
    require_same_context(prec_.ctx, other.prec_.ctx);
    std::map<long, mpz_class> acc;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            const long k = ka + kb;
            if (!prec_.keeps(k)) {
                continue;
            }
            mpz_class& slot = acc[k];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    terms_.clear();
    const mpz_class& m = prec_.ctx.modulus();
    for (auto& [k, c] : acc) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c != 0) {
            terms_.emplace(k, std::move(c));
        }
    }
    return *this;
}

HLaurentSeries& HLaurentSeries::scale(const mpz_class& c)
{
    const mpz_class f = mod_floor(c, prec_.ctx.modulus());
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= f;
        mpz_mod(it->second.get_mpz_t(), it->second.get_mpz_t(), prec_.ctx.modulus().get_mpz_t());
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

HLaurentSeries HLaurentSeries::rewindow(long max_exp, std::optional<long> floor) const
{
    HLaurentSeries r(SeriesPrecision(prec_.ctx, max_exp, floor));
    for (const auto& [k, c] : terms_) {
        r.put(k, mpz_class(c));
    }
    return r;
}

HLaurentSeries HLaurentSeries::reduce_to_precision(unsigned precision) const
{
    if (precision > prec_.ctx.precision()) {
        throw usage_error("cannot raise series precision");
    }
    HLaurentSeries r(SeriesPrecision(prec_.ctx.with_precision(precision), prec_.max_exp, prec_.floor));
    for (const auto& [k, c] : terms_) {
        r.put(k, mod_floor(c, r.prec_.ctx.modulus()));
    }
    return r;
}

HLaurentSeries HLaurentSeries::truncate_below(long floor) const
{
    HLaurentSeries r(prec_);
    for (const auto& [k, c] : terms_) {
        if (k <= floor) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), k, c);
    }
    return r;
}

std::string HLaurentSeries::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const mpz_class v = signed_minimal(c, prec_.ctx.modulus());
        os << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
        const mpz_class mag = abs(v);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) {
                os << mag.get_str();
            }
            os << (k == 1 ? std::string("h") : "h^" + std::to_string(k));
        }
        first = false;
    }
    return os.str();
}

HLaurentSeries reduce(const HLaurentSeries& x)
{
    return x.rewindow(x.precision().max_exp, x.precision().floor);
}

HLaurentSeries monomial_div(const HLaurentSeries& x, long k)
{
    std::map<long, mpz_class> shifted;
    for (const auto& [e, c] : x.terms()) {
        shifted.emplace(e - k, c);
    }
    return HLaurentSeries::from_terms(x.precision(), shifted);
}

HLaurentSeries series_invert_unit(const HLaurentSeries& x, unsigned max_iterations)
{
    const SeriesPrecision& prec = x.precision();
    const PadicContext& ctx = prec.ctx;
    const unsigned n = ctx.precision();

    // Lowest exponent carrying a unit: the leading term of x mod p in F_p((h)).
    std::optional<long> lead;
    for (const auto& [k, c] : x.terms()) {
        if (valuation_capped(c, ctx.prime(), n) == 0) {
            lead = k;
        }
    }
    if (!lead) {
        throw not_invertible("series has no unit coefficient; it vanishes modulo p");
    }
    const long m = *lead;
    const PadicInt c_inv = x.coefficient(m).inverse();

    // eps = x / (c h^m) - 1, relative exponents.
    std::map<long, mpz_class> eps_terms;
    bool has_positive = false;
    long depth = 0;
    for (const auto& [k, c] : x.terms()) {
        const long rel = k - m;
        if (rel == 0) {
            continue; // c * c_inv == 1
        }
        has_positive = has_positive || rel > 0;
        depth = std::max(depth, -rel);
        eps_terms.emplace(rel, -(c * c_inv.residue()));
    }

    // With both positive and negative terms in eps, partial products may
    // leave the window and come back; the slack keeps them exact.
    const long slack = has_positive ? static_cast<long>(n - 1) * depth : 0;
    const long rel_max = prec.max_exp + m + slack;
    SeriesPrecision work(ctx, rel_max);
    const HLaurentSeries neg_eps = HLaurentSeries::from_terms(work, eps_terms);

    if (max_iterations == 0) {
        const long span = std::max(0L, rel_max) + static_cast<long>(n) * (depth + 1);
        max_iterations = static_cast<unsigned>(4 * (span + n) + 16);
    }

    HLaurentSeries sum = HLaurentSeries::constant(work, 1);
    HLaurentSeries term = sum;
    unsigned iter = 0;
    while (true) {
        term *= neg_eps;
        if (term.is_zero()) {
            break;
        }
        sum += term;
        if (++iter >= max_iterations) {
            throw window_error("unit inversion did not stabilize within " + std::to_string(max_iterations)
                               + " terms; enlarge max_exp or the iteration budget");
        }
    }

    std::map<long, mpz_class> out;
    for (const auto& [k, c] : sum.terms()) {
        out.emplace(k - m, c * c_inv.residue());
    }
    return HLaurentSeries::from_terms(prec, out);
}

} // namespace powop
