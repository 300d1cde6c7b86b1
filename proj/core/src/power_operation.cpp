#include <powop/power_operation.hpp>

#include <powop/error.hpp>
#include <powop/primes.hpp>
#include <powop/weierstrass.hpp>

#include <string>
#include <vector>

namespace powop {

namespace {

// Depth-first walk over compositions. on_part(pos, m) fires when position pos
// takes value m; on_leaf() fires when a full composition is in place. Branches
// that cannot reach the total within the part bounds are cut.
template <typename OnPart, typename OnLeaf>
void walk_compositions(const CompositionSpec& spec, OnPart&& on_part, OnLeaf&& on_leaf)
{
    if (spec.parts == 0 || spec.lower > spec.upper) {
        return;
    }
    auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        const unsigned left = spec.parts - pos;
        if (left == 1) {
            const unsigned lo = std::max(spec.lower, spec.last_min);
            if (remaining >= lo && remaining <= spec.upper) {
                if (on_part(pos, remaining)) {
                    on_leaf();
                }
            }
            return;
        }
        for (unsigned m = spec.lower; m <= spec.upper && m <= remaining; ++m) {
            const unsigned rest = remaining - m;
            // remaining left-1 parts must fit in [lower, upper] with the last >= last_min.
            const unsigned min_rest = (left - 2) * spec.lower + std::max(spec.lower, spec.last_min);
            const unsigned max_rest = (left - 1) * spec.upper;
            if (rest < min_rest) {
                break;
            }
            if (rest > max_rest) {
                continue;
            }
            if (on_part(pos, m)) {
                self(self, pos + 1, rest);
            }
        }
    };
    rec(rec, 0, spec.total);
}

void check_d_indices(std::uint64_t p, unsigned i, unsigned tau)
{
    require_prime(p);
    if (i > p || tau < 1 || tau > p) {
        throw usage_error("d_{i,tau} needs 0 <= i <= p and 1 <= tau <= p; got i=" + std::to_string(i)
                          + ", tau=" + std::to_string(tau) + " at p=" + std::to_string(p));
    }
}

HPolynomial power(const HPolynomial& x, unsigned e)
{
    HPolynomial r(1);
    for (unsigned k = 0; k < e; ++k) {
        r *= x;
    }
    return r;
}

long sign_of(unsigned e)
{
    return e % 2 == 0 ? 1 : -1;
}

} // namespace

std::uint64_t for_each_composition(const CompositionSpec& spec,
                                   const std::function<void(std::span<const unsigned>)>& visit)
{
    std::vector<unsigned> parts(spec.parts);
    std::uint64_t count = 0;
    walk_compositions(
        spec,
        [&](unsigned pos, unsigned m) {
            parts[pos] = m;
            return true;
        },
        [&] {
            ++count;
            if (visit) {
                visit(parts);
            }
        });
    return count;
}

HPolynomial d_coefficient(std::uint64_t p, unsigned i, unsigned tau)
{
    check_d_indices(p, i, tau);
    const std::vector<HPolynomial> w = w_coefficients(p);
    const unsigned upper = static_cast<unsigned>(p) + 1;

    HPolynomial d;
    for (unsigned n = 0; n < tau; ++n) {
        const unsigned k = tau - n;
        const CompositionSpec spec{tau + i, k, 1, upper, i + 1};
        // prefix[j] = w_{m_1} ... w_{m_j}
        std::vector<HPolynomial> prefix(k + 1);
        prefix[0] = HPolynomial(1);
        HPolynomial inner;
        walk_compositions(
            spec,
            [&](unsigned pos, unsigned m) {
                if (w[m].is_zero()) {
                    return false;
                }
                prefix[pos + 1] = prefix[pos] * w[m];
                return true;
            },
            [&] { inner += prefix[k]; });
        if (!inner.is_zero()) {
            d += HPolynomial(sign_of(tau - n)) * power(w[0], n) * inner;
        }
    }
    return d;
}

HPolynomial d_coefficient_oracle(std::uint64_t p, unsigned i, unsigned tau)
{
    check_d_indices(p, i, tau);
    const std::vector<HPolynomial> w = w_coefficients(p);
    const unsigned upper = static_cast<unsigned>(p) + 1;
    const unsigned total = tau + i;

    // table[j][s]: sum over compositions of s into j parts in [1, p+1] of the w-products.
    std::vector<std::vector<HPolynomial>> table(tau, std::vector<HPolynomial>(total + 1));
    table[0][0] = HPolynomial(1);
    for (unsigned j = 1; j < tau; ++j) {
        for (unsigned s = 1; s <= total; ++s) {
            for (unsigned m = 1; m <= upper && m <= s; ++m) {
                if (!table[j - 1][s - m].is_zero()) {
                    table[j][s] += table[j - 1][s - m] * w[m];
                }
            }
        }
    }

    HPolynomial d;
    for (unsigned n = 0; n < tau; ++n) {
        const unsigned k = tau - n;
        HPolynomial inner;
        for (unsigned last = i + 1; last <= upper && last <= total; ++last) {
            inner += table[k - 1][total - last] * w[last];
        }
        d += HPolynomial(sign_of(tau - n)) * power(w[0], n) * inner;
    }
    return d;
}

PsiEPolynomial psi_E(std::uint64_t p)
{
    require_prime(p);
    const std::vector<HPolynomial> w = w_coefficients(p);
    std::vector<HPolynomial> body(p + 1);
    for (unsigned i = 0; i <= p; ++i) {
        for (unsigned tau = 1; tau <= p; ++tau) {
            body[i] += w[tau + 1] * d_coefficient(p, i, tau);
        }
    }
    body[1] += HPolynomial(1);
    return PsiEPolynomial{p, AlphaPolynomial(std::move(body))};
}

HLaurentSeries specialize_alpha(const PsiEPolynomial& psi, const HLaurentSeries& alpha_star)
{
    if (psi.p != alpha_star.context().prime()) {
        throw usage_error("psi_E is for p=" + std::to_string(psi.p) + " but the root lives at p="
                          + std::to_string(alpha_star.context().prime()));
    }
    return evaluate(psi.body, alpha_star);
}

HLaurentSeries psi_F_termwise(std::uint64_t p, const HLaurentSeries& alpha_star)
{
    require_prime(p);
    if (p != alpha_star.context().prime()) {
        throw usage_error("root lives at a different prime");
    }
    const SeriesPrecision& prec = alpha_star.precision();
    const std::vector<HPolynomial> w = w_coefficients(p);

    HLaurentSeries result = alpha_star;
    HLaurentSeries alpha_power = HLaurentSeries::constant(prec, 1);
    for (unsigned i = 0; i <= p; ++i) {
        HPolynomial tau_sum;
        for (unsigned tau = 1; tau <= p; ++tau) {
            tau_sum += w[tau + 1] * d_coefficient_oracle(p, i, tau);
        }
        result += alpha_power * HLaurentSeries::from_hpoly(prec, tau_sum);
        alpha_power *= alpha_star;
    }
    return result;
}

HLaurentSeries psi_F(const SeriesPrecision& prec)
{
    const std::uint64_t p = prec.ctx.prime();
    std::optional<long> solve_floor;
    if (prec.floor) {
        solve_floor = *prec.floor - static_cast<long>(p);
    }
    const SeriesPrecision solve_prec(prec.ctx, prec.max_exp, solve_floor);
    const SolveReport root = solve_alpha_fixed_point(solve_prec);
    const HLaurentSeries full = specialize_alpha(psi_E(p), root.alpha_star);
    return full.rewindow(prec.max_exp, prec.floor);
}

HLaurentSeries psi_F(std::uint64_t p, unsigned precision)
{
    return psi_F(SeriesPrecision::standard(PadicContext(p, precision)));
}

bool psi_F_window_stable(const SeriesPrecision& prec, long report_floor)
{
    const HLaurentSeries base = psi_F(prec).truncate_below(report_floor);
    std::optional<long> deeper;
    if (prec.floor) {
        deeper = *prec.floor - 8;
    }
    const SeriesPrecision wide(prec.ctx, prec.max_exp + 4, deeper);
    const HLaurentSeries widened = psi_F(wide).truncate_below(report_floor);
    return base.terms() == widened.terms();
}

FrobeniusResult frobenius_check(const HLaurentSeries& psi, std::uint64_t p)
{
    require_prime(p);
    if (psi.context().prime() != p) {
        throw usage_error("series is not p-adic for p=" + std::to_string(p));
    }
    const long target = static_cast<long>(p);
    bool saw_target = false;
    for (const auto& [k, c] : psi.terms()) {
        const unsigned long r = mpz_fdiv_ui(c.get_mpz_t(), p);
        if (k < target && !saw_target) {
            return {false, FrobeniusWitness{target, 0}};
        }
        if (k == target) {
            saw_target = true;
            if (r != 1) {
                return {false, FrobeniusWitness{k, r}};
            }
        } else if (r != 0) {
            return {false, FrobeniusWitness{k, r}};
        }
    }
    if (!saw_target) {
        return {false, FrobeniusWitness{target, 0}};
    }
    return {true, std::nullopt};
}

} // namespace powop
