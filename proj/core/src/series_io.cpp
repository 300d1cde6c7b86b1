#include <powop/series_io.hpp>

#include <powop/error.hpp>

#include <algorithm>
#include <map>

namespace powop {

std::string format_series_pretty(const HLaurentSeries& x, long floor)
{
    const HLaurentSeries shown = x.truncate_below(floor);
    const std::string marker = "O(h^" + std::to_string(floor) + ")";
    if (shown.is_zero()) {
        return marker;
    }
    return shown.to_string() + " + " + marker;
}

nlohmann::ordered_json series_to_json(const HLaurentSeries& x, long floor)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : x.terms()) {
        if (k <= floor) {
            break;
        }
        nlohmann::ordered_json t;
        t["exp"] = k;
        t["coeff"] = signed_minimal(c, x.context().modulus()).get_str();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["p"] = x.context().prime();
    j["padic_precision"] = x.context().precision();
    j["terms"] = std::move(terms);
    j["truncation_floor"] = floor;
    return j;
}

HLaurentSeries series_from_json(const nlohmann::ordered_json& j)
{
    try {
        const auto p = j.at("p").get<std::uint64_t>();
        const auto n = j.at("padic_precision").get<unsigned>();
        const auto floor = j.at("truncation_floor").get<long>();
        const PadicContext ctx(p, n);

        std::map<long, mpz_class> terms;
        long top = 2 * static_cast<long>(p);
        for (const auto& t : j.at("terms")) {
            const long e = t.at("exp").get<long>();
            mpz_class c;
            if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
                throw usage_error("bad coefficient string");
            }
            if (e <= floor) {
                throw usage_error("term at h^" + std::to_string(e) + " is not above the truncation floor");
            }
            terms[e] = c;
            top = std::max(top, e);
        }
        return HLaurentSeries::from_terms(SeriesPrecision(ctx, top, floor), terms);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace powop
