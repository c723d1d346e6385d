#include "verlinde/toric_surface.hpp"

#include "verlinde/toml.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#ifndef VERLINDE_DATA_DIR
#define VERLINDE_DATA_DIR "data"
#endif

namespace verlinde {

Divisor& Divisor::operator+=(const Divisor& o)
{
    if (cls.size() != o.cls.size() || chars.size() != o.chars.size())
        throw std::invalid_argument("divisors on different surfaces");
    for (size_t i = 0; i < cls.size(); ++i)
        cls[i] += o.cls[i];
    for (size_t i = 0; i < chars.size(); ++i)
        for (int k = 0; k < 2; ++k)
            chars[i][static_cast<size_t>(k)] += o.chars[i][static_cast<size_t>(k)];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o)
{
    return *this += -o;
}

Divisor Divisor::operator-() const
{
    Divisor r = *this;
    for (auto& c : r.cls)
        c = -c;
    for (auto& w : r.chars)
        w = {-w[0], -w[1]};
    return r;
}

Divisor operator*(long k, const Divisor& d)
{
    Divisor r = d;
    for (auto& c : r.cls)
        c *= k;
    for (auto& w : r.chars)
        w = {static_cast<int>(k * w[0]), static_cast<int>(k * w[1])};
    return r;
}

Divisor ToricSurface::divisor(const std::vector<long>& cls) const
{
    if (cls.size() != basis.size())
        throw std::invalid_argument("divisor class has wrong length for " + name);
    Divisor d{cls, std::vector<Weight2>(charts.size(), Weight2{0, 0})};
    for (size_t s = 0; s < charts.size(); ++s)
        for (size_t k = 0; k < basis.size(); ++k)
            for (int i = 0; i < 2; ++i)
                d.chars[s][static_cast<size_t>(i)] += static_cast<int>(cls[k]) * linearization[s][k][static_cast<size_t>(i)];
    return d;
}

Divisor ToricSurface::zero_divisor() const
{
    return divisor(std::vector<long>(basis.size(), 0));
}

Divisor ToricSurface::canonical() const
{
    Divisor d{canonical_class, {}};
    for (const auto& c : charts)
        d.chars.push_back({c.u[0] + c.v[0], c.u[1] + c.v[1]});
    return d;
}

long ToricSurface::intersect(const std::vector<long>& a, const std::vector<long>& b) const
{
    long r = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r += a[i] * gram[i][j] * b[j];
    return r;
}

long ToricSurface::chi(const std::vector<long>& cls) const
{
    long v = intersect(cls, cls) - intersect(cls, canonical_class);
    if (v % 2 != 0)
        throw std::logic_error("odd D^2 - DK on " + name);
    return v / 2 + chi_O;
}

void ToricSurface::validate() const
{
    size_t n = basis.size();
    if (gram.size() != n || canonical_class.size() != n)
        throw std::invalid_argument(name + ": basis, gram and canonical class disagree in size");
    for (const auto& row : gram)
        if (row.size() != n)
            throw std::invalid_argument(name + ": gram matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument(name + ": gram matrix is not symmetric");
    if (linearization.size() != charts.size())
        throw std::invalid_argument(name + ": one linearization row per chart required");
    for (const auto& row : linearization)
        if (row.size() != n)
            throw std::invalid_argument(name + ": linearization row has wrong length");
    for (const auto& c : charts)
        if (static_cast<long>(c.u[0]) * c.v[1] - static_cast<long>(c.u[1]) * c.v[0] == 0)
            throw std::invalid_argument(name + ": chart characters are not independent");
}

namespace {

Weight2 weight_of(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("weight must be a pair of integers");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

ToricSurface load_surface(const std::string& path)
{
    nlohmann::json doc = toml::parse_file(path);
    ToricSurface s;
    s.name = doc.at("name").get<std::string>();
    s.chi_O = doc.value("chi_O", 1L);
    for (const auto& c : doc.at("chart"))
        s.charts.push_back(Chart{weight_of(c.at("u")), weight_of(c.at("v"))});
    const auto& d = doc.at("divisors");
    s.basis = d.at("basis").get<std::vector<std::string>>();
    s.gram = d.at("gram").get<std::vector<std::vector<long>>>();
    s.canonical_class = d.at("canonical").get<std::vector<long>>();
    for (const auto& c : doc.at("chart")) {
        std::vector<Weight2> row;
        for (const auto& w : c.at("linearization"))
            row.push_back(weight_of(w));
        s.linearization.push_back(std::move(row));
    }
    s.validate();
    return s;
}

std::string data_directory()
{
    if (const char* env = std::getenv("VERLINDE_DATA_DIR"))
        return env;
    return VERLINDE_DATA_DIR;
}

ToricSurface builtin_surface(const std::string& name)
{
    std::filesystem::path p = std::filesystem::path(data_directory()) / "surfaces" / (name + ".toml");
    return load_surface(p.string());
}

std::vector<HilbFixedPoint> fixed_points(const ToricSurface& s, int n)
{
    std::vector<HilbFixedPoint> out;
    int k = static_cast<int>(s.euler_number());
    std::vector<std::vector<Partition>> by_size;
    for (int m = 0; m <= n; ++m)
        by_size.push_back(partitions(m));
    for (const auto& comp : compositions(n, k)) {
        HilbFixedPoint cur(static_cast<size_t>(k));
        // odometer over the partition choices of each chart
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        while (true) {
            for (size_t c = 0; c < static_cast<size_t>(k); ++c)
                cur[c] = by_size[static_cast<size_t>(comp[c])][idx[c]];
            out.push_back(cur);
            size_t c = 0;
            for (; c < static_cast<size_t>(k); ++c) {
                if (++idx[c] < by_size[static_cast<size_t>(comp[c])].size())
                    break;
                idx[c] = 0;
            }
            if (c == static_cast<size_t>(k))
                break;
        }
    }
    return out;
}

int fixed_point_size(const HilbFixedPoint& z)
{
    int n = 0;
    for (const auto& p : z)
        n += p.size();
    return n;
}

} // namespace verlinde
