#ifndef VERLINDE_SERIES_JSON_HPP
#define VERLINDE_SERIES_JSON_HPP

#include "verlinde/series.hpp"

#include <json.hpp>

namespace verlinde {

// {variables, denominators, window, terms: [[grid exps], [w_lo, num...], [den...]]}
// Rationals are written as decimal strings; unbounded window ends as null.
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json ycoeff_to_json(const YCoeff& c);
YCoeff ycoeff_from_json(const nlohmann::json& num, const nlohmann::json& den);

} // namespace verlinde

#endif
