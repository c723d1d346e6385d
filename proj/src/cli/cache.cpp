#include "verlinde/cache.hpp"

#include "verlinde/series_json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

std::vector<std::string> labels_of_instanton()
{
    std::vector<std::string> out;
    for (const auto& t : standard_instanton_tuples())
        out.push_back(t.label());
    return out;
}

std::vector<std::string> labels_of_monopole()
{
    std::vector<std::string> out;
    for (const auto& t : standard_monopole_tuples())
        out.push_back(t.label());
    return out;
}

std::string token(const ExactRational& q)
{
    std::string s = to_string(q);
    for (auto& c : s) {
        if (c == '/')
            c = 'd';
        else if (c == '-')
            c = 'm';
    }
    return s;
}

nlohmann::json spec_to_json(const EpsSpec& s)
{
    return {{"p", to_string(s.p)}, {"r", to_string(s.r)}};
}

EpsSpec spec_from_json(const nlohmann::json& j)
{
    return {parse_rational(j.at("p").get<std::string>()), parse_rational(j.at("r").get<std::string>())};
}

} // namespace

std::string CacheKey::file_name() const
{
    std::ostringstream os;
    os << kind << "-" << tuple_hash << "-q" << q_order << "-s" << s_order << "-eps_" << token(spec.p) << "_"
       << token(spec.r) << ".json";
    return os.str();
}

nlohmann::json CacheKey::to_json() const
{
    return {{"kind", kind}, {"tuple_hash", tuple_hash}, {"q_order", q_order}, {"s_order", s_order},
            {"eps", spec_to_json(spec)}};
}

bool CacheKey::matches(const nlohmann::json& j) const
{
    return j.contains("key") && j.at("key") == to_json();
}

std::string tuple_set_hash(const std::vector<std::string>& labels)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    for (const auto& l : labels) {
        for (char c : l)
            mix(static_cast<unsigned char>(c));
        mix(0);
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::filesystem::path default_cache_directory()
{
    if (const char* env = std::getenv("VERLINDE_CACHE_DIR"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "verlinde";
    return ".verlinde-cache";
}

CacheKey instanton_cache_key(const InstantonWindows& w, const EpsSpec& spec)
{
    return {"A", tuple_set_hash(labels_of_instanton()), w.q_order, w.s_order, spec};
}

CacheKey monopole_cache_key(const MonopoleWindows& w, const EpsSpec& spec)
{
    return {"B", tuple_set_hash(labels_of_monopole()), w.q_order, 0, spec};
}

nlohmann::json universal_A_to_json(const UniversalSeriesA& a, const CacheKey& key)
{
    nlohmann::json j;
    j["key"] = key.to_json();
    j["tuples"] = a.tuples;
    j["kappa"] = ycoeff_to_json(a.kappa);
    j["series"] = nlohmann::json::array();
    for (const auto& s : a.A)
        j["series"].push_back(series_to_json(s));
    return j;
}

UniversalSeriesA universal_A_from_json(const nlohmann::json& j)
{
    UniversalSeriesA a;
    const auto& key = j.at("key");
    if (key.at("kind") != "A")
        throw std::invalid_argument("not an instanton cache file");
    a.q_order = key.at("q_order").get<int>();
    a.s_order = key.at("s_order").get<int>();
    a.spec = spec_from_json(key.at("eps"));
    a.tuples = j.at("tuples").get<std::vector<std::string>>();
    a.kappa = ycoeff_from_json(j.at("kappa")[0], j.at("kappa")[1]);
    const auto& s = j.at("series");
    if (s.size() != a.A.size())
        throw std::invalid_argument("instanton cache file has " + std::to_string(s.size()) + " series");
    for (size_t i = 0; i < a.A.size(); ++i)
        a.A[i] = series_from_json(s[i]);
    return a;
}

nlohmann::json universal_B_to_json(const UniversalSeriesB& b, const CacheKey& key)
{
    nlohmann::json j;
    j["key"] = key.to_json();
    j["tuples"] = b.tuples;
    j["series"] = nlohmann::json::array();
    for (const auto& s : b.B)
        j["series"].push_back(series_to_json(s));
    j["C"] = nlohmann::json::array();
    for (const auto& s : derive_C(b).C)
        j["C"].push_back(series_to_json(s));
    return j;
}

UniversalSeriesB universal_B_from_json(const nlohmann::json& j)
{
    UniversalSeriesB b;
    const auto& key = j.at("key");
    if (key.at("kind") != "B")
        throw std::invalid_argument("not a monopole cache file");
    b.q_order = key.at("q_order").get<int>();
    b.spec = spec_from_json(key.at("eps"));
    b.tuples = j.at("tuples").get<std::vector<std::string>>();
    const auto& s = j.at("series");
    if (s.size() != b.B.size())
        throw std::invalid_argument("monopole cache file has " + std::to_string(s.size()) + " series");
    for (size_t i = 0; i < b.B.size(); ++i)
        b.B[i] = series_from_json(s[i]);
    return b;
}

std::optional<nlohmann::json> load_cached(const std::filesystem::path& dir, const CacheKey& key)
{
    std::filesystem::path p = dir / key.file_name();
    std::ifstream in(p);
    if (!in)
        return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !key.matches(j))
        return std::nullopt;
    return j;
}

std::filesystem::path store_cached(const std::filesystem::path& dir, const CacheKey& key, const nlohmann::json& j)
{
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / key.file_name();
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, p);
    return p;
}

} // namespace verlinde
