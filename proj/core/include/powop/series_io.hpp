#ifndef POWOP_SERIES_IO_HPP
#define POWOP_SERIES_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include <powop/laurent.hpp>

namespace powop {

/// "h^3 - 6h^2 - 96h + 594 - 1158h^-1 + 14580h^-2 + O(h^-3)": terms above
/// the floor in strictly descending order, signed-minimal coefficients.
std::string format_series_pretty(const HLaurentSeries& x, long floor);

/// {"p":3,"padic_precision":32,"terms":[{"exp":3,"coeff":"1"},...],"truncation_floor":-3}
/// Coefficients are signed-minimal decimal strings; only exponents above the
/// floor are written.
nlohmann::ordered_json series_to_json(const HLaurentSeries& x, long floor);

/// Inverse of series_to_json. The result has the serialized floor as its
/// explicit floor and max_exp = max(2p, top exponent). Throws usage_error on
/// malformed input.
HLaurentSeries series_from_json(const nlohmann::ordered_json& j);

} // namespace powop

#endif
