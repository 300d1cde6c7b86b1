#include <powop/invariant_suite.hpp>

#include <powop/alpha_solver.hpp>
#include <powop/power_operation.hpp>
#include <powop/primes.hpp>
#include <powop/weierstrass.hpp>

#include <algorithm>
#include <sstream>

namespace powop {

namespace {

std::string join(const std::vector<unsigned>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return os.str();
}

} // namespace

bool InvariantReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string InvariantReport::status() const
{
    if (!all_passed()) {
        return "violation";
    }
    return comparison.status() == "discrepancy" ? "discrepancy" : "ok";
}

nlohmann::ordered_json InvariantReport::to_json() const
{
    nlohmann::ordered_json j;
    j["p"] = p;
    j["padic_precision"] = precision;
    j["status"] = status();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    j["paper_example_comparison"] = comparison.to_json();
    return j;
}

InvariantReport run_invariant_suite(std::uint64_t p, unsigned precision)
{
    require_prime(p);
    InvariantReport report;
    report.p = p;
    report.precision = precision;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const mpz_class pz(static_cast<unsigned long>(p));

    const auto w = w_coefficients(p);
    add("w_closed_form_matches_expansion", w == w_expand_oracle(p), "p+2 coefficients compared exactly");

    {
        const AlphaPolynomial a = AlphaPolynomial::monomial(HPolynomial(1), 1);
        const AlphaPolynomial expected = a * (AlphaPolynomial::monomial(HPolynomial(1), static_cast<unsigned>(p))
                                              - AlphaPolynomial::monomial(HPolynomial::h(), 0));
        const bool ok = w_polynomial(p).mod(pz) == expected.mod(pz);
        add("w_mod_p_is_alpha_times_alpha_p_minus_h", ok, w_polynomial(p).mod(pz).to_string());
    }

    {
        bool ok = w[1] == -HPolynomial::h();
        for (std::size_t i = 0; i < w.size(); ++i) {
            ok = ok && (i == 1 || w[i].is_constant());
        }
        add("w1_is_the_only_h_dependent_coefficient", ok, "w_1 = " + w[1].to_string());
    }

    {
        bool ok = true;
        std::string detail = "full grid 0<=i<=p, 1<=tau<=p";
        for (unsigned i = 0; i <= p && ok; ++i) {
            for (unsigned tau = 1; tau <= p; ++tau) {
                if (!(d_coefficient(p, i, tau) == d_coefficient_oracle(p, i, tau))) {
                    ok = false;
                    detail = "mismatch at i=" + std::to_string(i) + ", tau=" + std::to_string(tau);
                    break;
                }
            }
        }
        add("d_backtracking_matches_dp", ok, detail);
    }

    const PsiEPolynomial psi = psi_E(p);
    {
        const bool ok = psi.body.degree() <= static_cast<int>(p)
                        && psi.body.coeff(0).degree() == static_cast<int>(p);
        add("psi_E_degrees", ok,
            "alpha-degree " + std::to_string(psi.body.degree()) + ", alpha^0 h-degree "
                + std::to_string(psi.body.coeff(0).degree()));
        const HPolynomial c0 = psi.body.coeff(0).mod(pz);
        add("psi_E_alpha0_is_h_to_p_mod_p", c0 == HPolynomial::monomial(1, static_cast<unsigned>(p)), c0.to_string());
    }

    const SolveReport fixed = solve_alpha_fixed_point(p, precision);
    const SolveReport newton = solve_alpha_newton(p, precision);
    add("alpha_residual_vanishes", fixed.residual_valuation >= precision,
        "residual valuation " + std::to_string(fixed.residual_valuation));
    add("alpha_divisible_by_p", fixed.alpha_star.min_valuation() >= 1,
        "min coefficient valuation " + std::to_string(fixed.alpha_star.min_valuation()));
    {
        const auto [c1, c3] = leading_closed_forms(p);
        const mpz_class a1 = fixed.alpha_star.signed_coefficient(-1);
        const mpz_class a3 = fixed.alpha_star.signed_coefficient(-3);
        // Reduce the closed forms the same way the series stores them.
        const PadicContext& ctx = fixed.alpha_star.context();
        const bool ok = a1 == signed_minimal(mod_floor(c1, ctx.modulus()), ctx.modulus())
                        && a3 == signed_minimal(mod_floor(c3, ctx.modulus()), ctx.modulus());
        add("alpha_leading_coefficients", ok,
            "h^-1: " + a1.get_str() + " vs " + c1.get_str() + ", h^-3: " + a3.get_str() + " vs " + c3.get_str());
    }
    add("fixed_point_newton_agree", fixed.alpha_star == newton.alpha_star,
        std::to_string(fixed.iterations) + " fixed-point vs " + std::to_string(newton.iterations) + " Newton steps");
    {
        bool ok = true;
        for (std::size_t k = 1; k < fixed.history.size(); ++k) {
            ok = ok && fixed.history[k] > fixed.history[k - 1];
        }
        add("fixed_point_contraction", ok, "step valuations " + join(fixed.history));
    }
    {
        bool ok = true;
        for (std::size_t k = 1; k < newton.history.size(); ++k) {
            ok = ok && newton.history[k] >= std::min(2 * newton.history[k - 1], precision);
        }
        add("newton_quadratic_convergence", ok, "residual valuations " + join(newton.history));
    }

    const HLaurentSeries psi_f = specialize_alpha(psi, fixed.alpha_star);
    add("psi_F_assembly_orders_agree", psi_f == psi_F_termwise(p, fixed.alpha_star), "Horner vs term order");
    {
        const FrobeniusResult fr = frobenius_check(psi_f, p);
        std::string detail = fr.holds ? "psi_F == h^p mod p"
                                      : "offending exponent " + std::to_string(fr.witness->exp) + " residue "
                                            + std::to_string(fr.witness->residue);
        add("frobenius_congruence", fr.holds, detail);
    }
    add("psi_F_window_stable",
        psi_F_window_stable(SeriesPrecision::standard(fixed.alpha_star.context()), -3 * static_cast<long>(p)),
        "max_exp + 4 leaves coefficients above h^" + std::to_string(-3 * static_cast<long>(p)) + " unchanged");

    report.comparison = compare_reference_examples(p, precision);
    return report;
}

} // namespace powop
