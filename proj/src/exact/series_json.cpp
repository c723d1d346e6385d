#include "verlinde/series_json.hpp"

#include <stdexcept>

namespace verlinde {

namespace {

nlohmann::json poly_to_json(const LaurentPoly& p, bool with_low)
{
    nlohmann::json a = nlohmann::json::array();
    if (with_low)
        a.push_back(p.is_zero() ? 0 : p.low());
    for (const auto& c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

LaurentPoly poly_from_json(const nlohmann::json& a, bool with_low)
{
    if (!a.is_array())
        throw std::invalid_argument("coefficient list must be an array");
    size_t start = 0;
    int lo = 0;
    if (with_low) {
        if (a.empty())
            throw std::invalid_argument("missing low exponent");
        lo = a[0].get<int>();
        start = 1;
    }
    std::vector<ExactRational> c;
    for (size_t i = start; i < a.size(); ++i)
        c.push_back(parse_rational(a[i].get<std::string>()));
    return LaurentPoly::from_coeffs(lo, std::move(c));
}

nlohmann::json bound(long v)
{
    if (v >= kUnbounded || v <= -kUnbounded)
        return nullptr;
    return v;
}

long bound_from(const nlohmann::json& j, long fallback)
{
    return j.is_null() ? fallback : j.get<long>();
}

} // namespace

nlohmann::json ycoeff_to_json(const YCoeff& c)
{
    return nlohmann::json::array({poly_to_json(c.num(), true), poly_to_json(c.den(), false)});
}

YCoeff ycoeff_from_json(const nlohmann::json& num, const nlohmann::json& den)
{
    LaurentPoly n = poly_from_json(num, true);
    LaurentPoly d = poly_from_json(den, false);
    if (d.is_one())
        return YCoeff(n);
    return YCoeff(n, d);
}

nlohmann::json series_to_json(const TruncatedSeries& s)
{
    nlohmann::json j;
    j["variables"] = nlohmann::json::array();
    j["denominators"] = nlohmann::json::array();
    j["window"] = nlohmann::json::array();
    for (const auto& v : s.vars()) {
        j["variables"].push_back(v.name);
        j["denominators"].push_back(v.den);
        j["window"].push_back(nlohmann::json::array({bound(v.lo), bound(v.hi)}));
    }
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) {
        nlohmann::json t = nlohmann::json::array();
        t.push_back(e);
        t.push_back(poly_to_json(c.num(), true));
        t.push_back(poly_to_json(c.den(), false));
        j["terms"].push_back(std::move(t));
    }
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    const auto& names = j.at("variables");
    const auto& dens = j.at("denominators");
    const auto& win = j.at("window");
    if (names.size() != dens.size() || names.size() != win.size())
        throw std::invalid_argument("series JSON: variable metadata length mismatch");
    std::vector<SeriesVar> vars;
    for (size_t i = 0; i < names.size(); ++i)
        vars.push_back(SeriesVar{names[i].get<std::string>(), dens[i].get<int>(), bound_from(win[i][0], -kUnbounded),
                                 bound_from(win[i][1], kUnbounded)});
    TruncatedSeries s(std::move(vars));
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("series JSON: malformed term");
        s.set_coeff(t[0].get<Exponents>(), ycoeff_from_json(t[1], t[2]));
    }
    return s;
}

} // namespace verlinde
