#include <powop/alpha_solver.hpp>

#include <powop/error.hpp>
#include <powop/primes.hpp>
#include <powop/weierstrass.hpp>

#include <bit>
#include <string>

namespace powop {

namespace {

void require_solver_precision(const SeriesPrecision& prec)
{
    if (prec.ctx.precision() < 2) {
        throw usage_error("root solving needs precision N >= 2");
    }
    const long p = static_cast<long>(prec.ctx.prime());
    if (prec.max_exp < p + 1) {
        throw usage_error("max_exp must be at least p + 1 = " + std::to_string(p + 1));
    }
}

void certify(SolveReport& report, const SeriesPrecision& prec)
{
    const std::uint64_t p = prec.ctx.prime();
    report.residual_valuation = residual_valuation(p, report.alpha_star);
    if (report.residual_valuation < prec.ctx.precision()) {
        throw convergence_error("root certificate failed: w(h, a) has valuation "
                                + std::to_string(report.residual_valuation) + " < N = "
                                + std::to_string(prec.ctx.precision()));
    }
    if (report.alpha_star.min_valuation() < 1) {
        throw convergence_error("root is not divisible by p");
    }
}

} // namespace

std::string_view to_string(SolveMethod m) noexcept
{
    return m == SolveMethod::fixed_point ? "fixed_point" : "newton";
}

unsigned residual_valuation(std::uint64_t p, const HLaurentSeries& alpha)
{
    const HLaurentSeries r = w_eval(w_polynomial(p), alpha);
    const auto& floor = alpha.precision().floor;
    // The -h*a term moves the truncation error of a up by one.
    return floor ? r.min_valuation_above(*floor + 1) : r.min_valuation();
}

SolveReport solve_alpha_fixed_point(const SeriesPrecision& prec, unsigned max_steps)
{
    require_solver_precision(prec);
    const std::uint64_t p = prec.ctx.prime();
    const unsigned n = prec.ctx.precision();
    if (max_steps == 0) {
        max_steps = 4 * n;
    }

    // w without its linear term: the right-hand side before dividing by h.
    std::vector<HPolynomial> coeffs = w_coefficients(p);
    coeffs[1] = HPolynomial{};
    const AlphaPolynomial rhs(std::move(coeffs));

    SolveReport report{HLaurentSeries(prec), 0, 0, SolveMethod::fixed_point, {}};
    HLaurentSeries alpha(prec);
    while (true) {
        if (report.iterations >= max_steps) {
            throw convergence_error("fixed-point iteration did not stabilize in " + std::to_string(max_steps)
                                    + " steps");
        }
        HLaurentSeries next = monomial_div(evaluate(rhs, alpha), 1);
        ++report.iterations;
        const HLaurentSeries diff = next - alpha;
        report.history.push_back(diff.min_valuation());
        if (diff.is_zero()) {
            break;
        }
        alpha = std::move(next);
    }
    report.alpha_star = std::move(alpha);
    certify(report, prec);
    return report;
}

SolveReport solve_alpha_fixed_point(std::uint64_t p, unsigned precision)
{
    return solve_alpha_fixed_point(SeriesPrecision::standard(PadicContext(p, precision)));
}

SolveReport solve_alpha_newton(const SeriesPrecision& prec, unsigned max_steps)
{
    require_solver_precision(prec);
    const std::uint64_t p = prec.ctx.prime();
    const unsigned n = prec.ctx.precision();
    if (max_steps == 0) {
        max_steps = 2 * static_cast<unsigned>(std::bit_width(n)) + 8;
    }

    const AlphaPolynomial w = w_polynomial(p);
    const AlphaPolynomial dw = w_derivative(w);
    const auto& floor = prec.floor;

    SolveReport report{HLaurentSeries(prec), 0, 0, SolveMethod::newton, {}};
    HLaurentSeries alpha(prec);
    while (true) {
        const HLaurentSeries r = w_eval(w, alpha);
        report.history.push_back(floor ? r.min_valuation_above(*floor + 1) : r.min_valuation());
        const HLaurentSeries step = r * series_invert_unit(evaluate(dw, alpha));
        if (step.is_zero()) {
            break;
        }
        if (report.iterations >= max_steps) {
            throw convergence_error("Newton iteration did not converge in " + std::to_string(max_steps) + " steps");
        }
        alpha -= step;
        ++report.iterations;
    }
    report.alpha_star = std::move(alpha);
    certify(report, prec);
    return report;
}

SolveReport solve_alpha_newton(std::uint64_t p, unsigned precision)
{
    return solve_alpha_newton(SeriesPrecision::standard(PadicContext(p, precision)));
}

std::pair<mpz_class, mpz_class> leading_closed_forms(std::uint64_t p)
{
    require_prime(p);
    const long sign = (p + 1) % 2 == 0 ? 1 : -1;
    const mpz_class pz(static_cast<unsigned long>(p));
    const mpz_class c1 = sign * pz;
    const mpz_class c3 = (1 + sign * pz * (pz - 1) / 2) * pz * pz * pz;
    return {c1, c3};
}

} // namespace powop
