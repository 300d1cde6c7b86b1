#include "cli.hpp"

#include <CLI11.hpp>

#include <powop/alpha_solver.hpp>
#include <powop/error.hpp>
#include <powop/invariant_suite.hpp>
#include <powop/power_operation.hpp>
#include <powop/primes.hpp>
#include <powop/series_io.hpp>
#include <powop/symmetric_ranks.hpp>
#include <powop/weierstrass.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

namespace powop::cli {

namespace {

// psi is shown down to O(h^-p); the root, whose support has gaps of width
// about p+1, gets three of those periods.
long default_floor(const CliConfig& c)
{
    const long p = static_cast<long>(c.p);
    return c.command == "alpha" ? -3 * (p + 1) - 1 : -p;
}

void validate(const CliConfig& c)
{
    if (c.command == "ranks") {
        require_prime(c.p);
        if (c.rank < 1) {
            throw usage_error("--rank must be >= 1");
        }
        if (c.m.has_value() == c.k.has_value()) {
            throw usage_error("ranks needs exactly one of --m or --k");
        }
        if (c.k && *c.k < 1) {
            throw usage_error("--k must be >= 1");
        }
        if (c.bruteforce && c.k) {
            throw usage_error("--bruteforce applies to --m only");
        }
        return;
    }
    require_prime(c.p);
    if (c.precision < 2) {
        throw usage_error("--precision must be >= 2");
    }
    const long p = static_cast<long>(c.p);
    if (c.max_exp && *c.max_exp < p + 1) {
        throw usage_error("--max-exp must be >= p + 1 = " + std::to_string(p + 1));
    }
    if (c.min_floor && *c.min_floor > -1) {
        throw usage_error("--min-floor must be <= -1");
    }
    if (c.method != "fixed_point" && c.command != "alpha" && c.command != "psi") {
        throw usage_error("--method applies to alpha and psi only");
    }
    if (c.command == "dcoef" && (c.i > c.p || c.tau < 1 || c.tau > c.p)) {
        throw usage_error("dcoef needs 0 <= i <= p and 1 <= tau <= p");
    }
}

SeriesPrecision series_precision(const CliConfig& c, std::optional<long> floor)
{
    const long max_exp = c.max_exp.value_or(2 * static_cast<long>(c.p));
    return SeriesPrecision(PadicContext(c.p, c.precision), max_exp, floor);
}

SolveReport solve(const CliConfig& c, const SeriesPrecision& prec, std::ostream& err)
{
    auto log = [&](const SolveReport& r) {
        err << "method=" << to_string(r.method) << " iterations=" << r.iterations
            << " residual_valuation=" << r.residual_valuation << '\n';
    };
    if (c.method == "newton") {
        SolveReport r = solve_alpha_newton(prec);
        log(r);
        return r;
    }
    SolveReport fixed = solve_alpha_fixed_point(prec);
    log(fixed);
    if (c.method == "both") {
        const SolveReport newton = solve_alpha_newton(prec);
        log(newton);
        if (!(newton.alpha_star == fixed.alpha_star)) {
            throw computation_error("fixed-point and Newton roots disagree");
        }
        err << "methods agree\n";
    }
    return fixed;
}

void emit_series(const CliConfig& c, const HLaurentSeries& s, long floor, std::ostream& out)
{
    if (c.format == "json") {
        out << series_to_json(s, floor).dump() << '\n';
    } else {
        out << format_series_pretty(s, floor) << '\n';
    }
}

int cmd_alpha(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    const long floor = c.min_floor.value_or(default_floor(c));
    const SolveReport r = solve(c, series_precision(c, c.min_floor), err);
    emit_series(c, r.alpha_star, floor, out);
    return kOk;
}

int cmd_psi(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    const long floor = c.min_floor.value_or(default_floor(c));
    const SeriesPrecision prec = series_precision(c, c.min_floor);
    std::optional<long> solve_floor;
    if (prec.floor) {
        solve_floor = *prec.floor - static_cast<long>(c.p);
    }
    const SolveReport root = solve(c, SeriesPrecision(prec.ctx, prec.max_exp, solve_floor), err);
    const HLaurentSeries psi = specialize_alpha(psi_E(c.p), root.alpha_star).rewindow(prec.max_exp, prec.floor);
    if (!psi_F_window_stable(prec, floor)) {
        throw window_error("reported coefficients change when the window grows; enlarge --max-exp");
    }
    emit_series(c, psi, floor, out);
    return kOk;
}

int cmd_wpoly(const CliConfig& c, std::ostream& out)
{
    const auto w = w_coefficients(c.p);
    if (c.format == "json") {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& wi : w) {
            if (wi.is_constant() && wi.coeff(0).fits_slong_p()) {
                list.push_back(wi.coeff(0).get_si());
            } else {
                list.push_back(wi.to_string());
            }
        }
        nlohmann::ordered_json j;
        j["p"] = c.p;
        j["w"] = std::move(list);
        out << j.dump() << '\n';
    } else {
        out << "w(h,a) = " << w_polynomial(c.p).to_string() << '\n';
    }
    return kOk;
}

int cmd_dcoef(const CliConfig& c, std::ostream& out)
{
    const HPolynomial d = d_coefficient(c.p, c.i, c.tau);
    const bool agrees = d == d_coefficient_oracle(c.p, c.i, c.tau);
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = c.p;
        j["i"] = c.i;
        j["tau"] = c.tau;
        j["d"] = d.to_string();
        j["oracle_agrees"] = agrees;
        out << j.dump() << '\n';
    } else {
        out << d.to_string() << '\n';
    }
    if (!agrees) {
        throw computation_error("backtracking and DP values of d disagree");
    }
    return kOk;
}

int cmd_ranks(const CliConfig& c, std::ostream& out)
{
    nlohmann::ordered_json j;
    j["p"] = c.p;
    j["rank"] = c.rank;
    mpz_class value;
    if (c.m) {
        value = c.bruteforce ? sublattice_count_bruteforce(c.p, c.rank, *c.m)
                             : sublattice_count_closed(c.p, c.rank, *c.m);
        j["m"] = *c.m;
        j["method"] = c.bruteforce ? "hnf_enumeration" : "closed_form";
        j["sublattice_count"] = value.get_str();
    } else {
        value = zpn_set_count(c.p, c.rank, *c.k);
        j["k"] = *c.k;
        j["set_count"] = value.get_str();
    }
    if (c.format == "json") {
        out << j.dump() << '\n';
    } else {
        out << value.get_str() << '\n';
    }
    return kOk;
}

int cmd_check(const CliConfig& c, std::ostream& out)
{
    const InvariantReport report = run_invariant_suite(c.p, c.precision);
    if (c.format == "json") {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << "p=" << report.p << " N=" << report.precision << " status=" << report.status() << '\n';
        for (const auto& chk : report.checks) {
            out << (chk.passed ? "PASS " : "FAIL ") << chk.name << ": " << chk.detail << '\n';
        }
        const ExampleComparison& cmp = report.comparison;
        out << "reference comparison: " << cmp.status() << '\n';
        for (const auto& r : cmp.rows) {
            out << (r.agrees ? "  same " : "  DIFF ") << r.quantity << " [" << r.variant << "] @" << r.index
                << ": reference " << r.reference << ", computed " << r.computed << '\n';
        }
        for (const auto& n : cmp.notes) {
            out << "  note: " << n << '\n';
        }
    }
    return report.status() == "ok" ? kOk : kCheckFailed;
}

} // namespace

unsigned default_precision()
{
    if (const char* env = std::getenv("POWOP_DEFAULT_PRECISION")) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(env, &used);
            if (used == std::string(env).size() && v >= 1 && v <= 1u << 20) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 64;
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        if (config.command == "alpha") {
            return cmd_alpha(config, out, err);
        }
        if (config.command == "psi") {
            return cmd_psi(config, out, err);
        }
        if (config.command == "wpoly") {
            return cmd_wpoly(config, out);
        }
        if (config.command == "dcoef") {
            return cmd_dcoef(config, out);
        }
        if (config.command == "ranks") {
            return cmd_ranks(config, out);
        }
        if (config.command == "check") {
            return cmd_check(config, out);
        }
        throw usage_error("unknown command '" + config.command + "'");
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const computation_error& e) {
        err << "computation error: " << e.what() << '\n';
        return kComputation;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig config;
    config.precision = default_precision();

    CLI::App app{"Power operations on K(1)-localized height-2 Morava E-theory", "powop"};
    app.require_subcommand(1, 1);

    auto add_series_opts = [&](CLI::App* sub) {
        sub->add_option("--precision", config.precision, "p-adic precision N");
        sub->add_option("--max-exp", config.max_exp, "largest retained h-exponent (default 2p)");
        sub->add_option("--min-floor", config.min_floor, "explicit truncation floor (<= -1)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", config.p, "prime")->required();
        sub->add_option("--format", config.format, "output format")
            ->check(CLI::IsMember({"json", "pretty"}));
    };

    auto* alpha = app.add_subcommand("alpha", "root of w(h, a) in Z_p((h))^_p");
    auto* psi = app.add_subcommand("psi", "image of h under the total power operation");
    auto* wpoly = app.add_subcommand("wpoly", "coefficients of w(h, a)");
    auto* dcoef = app.add_subcommand("dcoef", "combinatorial coefficient d_{i,tau}");
    auto* ranks = app.add_subcommand("ranks", "sublattice and Z_p^r-set counts");
    auto* check = app.add_subcommand("check", "run the invariant suite for one prime");

    for (auto* sub : {alpha, psi}) {
        add_common(sub);
        add_series_opts(sub);
        sub->add_option("--method", config.method, "root solver")
            ->check(CLI::IsMember({"fixed_point", "newton", "both"}));
    }
    add_common(wpoly);
    add_common(dcoef);
    dcoef->add_option("--i", config.i, "alpha index, 0..p")->required();
    dcoef->add_option("--tau", config.tau, "tau index, 1..p")->required();
    add_common(ranks);
    ranks->add_option("--rank", config.rank, "lattice rank r = n-1")->required();
    auto* m_opt = ranks->add_option("--m", config.m, "index exponent: count sublattices of index p^m");
    auto* k_opt = ranks->add_option("--k", config.k, "set order: count Z_p^r-sets of order k");
    m_opt->excludes(k_opt);
    ranks->add_flag("--bruteforce", config.bruteforce, "count by HNF enumeration");
    add_common(check);
    check->add_option("--precision", config.precision, "p-adic precision N");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    for (auto* sub : app.get_subcommands()) {
        config.command = sub->get_name();
    }
    return dispatch(config, out, err);
}

} // namespace powop::cli
