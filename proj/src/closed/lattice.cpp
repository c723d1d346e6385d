#include "verlinde/lattice.hpp"

#include "verlinde/toml.hpp"
#include "verlinde/toric_surface.hpp"

#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

void check_same(const LatticeVec& a, const LatticeVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("lattice vectors of different length");
}

std::vector<std::vector<long>> read_matrix(const nlohmann::json& j)
{
    std::vector<std::vector<long>> m;
    for (const auto& row : j)
        m.push_back(row.get<std::vector<long>>());
    return m;
}

} // namespace

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b)
{
    check_same(a, b);
    LatticeVec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b)
{
    check_same(a, b);
    LatticeVec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

LatticeVec operator*(long k, const LatticeVec& a)
{
    LatticeVec r = a;
    for (auto& x : r)
        x *= k;
    return r;
}

long SurfaceLattice::dot(const LatticeVec& a, const LatticeVec& b) const
{
    if (a.size() != rank() || b.size() != rank())
        throw std::invalid_argument("vector does not match lattice " + name);
    long s = 0;
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j)
            s += a[i] * gram[i][j] * b[j];
    return s;
}

long SurfaceLattice::chi(const LatticeVec& L) const
{
    long twice = square(L) - dot(L, K);
    return twice / 2 + chi_O;
}

void SurfaceLattice::validate() const
{
    for (const auto& row : gram)
        if (row.size() != rank())
            throw std::invalid_argument("gram matrix of " + name + " is not square");
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("gram matrix of " + name + " is not symmetric");
    if (K.size() != rank())
        throw std::invalid_argument("canonical class of " + name + " has wrong length");
    if (H && H->size() != rank())
        throw std::invalid_argument("polarization of " + name + " has wrong length");
    for (const auto& c : sw) {
        if (c.cls.size() != rank())
            throw std::invalid_argument("SW class of " + name + " has wrong length");
        if (square(c.cls) != dot(c.cls, K))
            throw std::invalid_argument("SW class " + format_vec(c.cls) + " of " + name + " violates a^2 = aK");
    }
}

long delta(const LatticeVec& a, const LatticeVec& b)
{
    check_same(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if ((a[i] - b[i]) % 2 != 0)
            return 0;
    return 1;
}

SurfaceLattice k3_lattice()
{
    SurfaceLattice l;
    l.name = "k3";
    l.gram = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    l.K = l.zero();
    l.chi_O = 2;
    l.H = LatticeVec{1, 1, 0, 0};
    l.sw = {{l.zero(), 1}};
    l.builder = "k3";
    return l;
}

SurfaceLattice general_type_lattice(const std::string& name, std::vector<std::vector<long>> gram, LatticeVec K, long chi_O,
                                    std::optional<LatticeVec> H)
{
    SurfaceLattice l;
    l.name = name;
    l.gram = std::move(gram);
    l.K = std::move(K);
    l.chi_O = chi_O;
    l.H = std::move(H);
    l.builder = "general-type";
    l.sw = {{l.zero(), 1}, {l.K, chi_O % 2 == 0 ? 1L : -1L}};
    l.validate();
    return l;
}

SurfaceLattice blow_up(const SurfaceLattice& base)
{
    SurfaceLattice l;
    l.name = base.name + "-blowup";
    size_t r = base.rank();
    l.gram = base.gram;
    for (auto& row : l.gram)
        row.push_back(0);
    l.gram.push_back(std::vector<long>(r + 1, 0));
    l.gram[r][r] = -1;
    l.K = base.K;
    l.K.push_back(1);
    l.chi_O = base.chi_O;
    l.builder = "blow-up";
    for (const auto& c : base.sw) {
        LatticeVec a = c.cls;
        a.push_back(0);
        l.sw.push_back({a, c.value});
        a.back() = 1;
        l.sw.push_back({a, c.value});
    }
    l.validate();
    return l;
}

SurfaceLattice disconnected_canonical(const std::string& name, std::vector<std::vector<long>> gram, long chi_O,
                                      const std::vector<CurveComponent>& curves, std::optional<LatticeVec> H)
{
    if (curves.empty() || curves.size() > 20)
        throw std::invalid_argument("disconnected canonical divisor needs 1..20 curves");
    SurfaceLattice l;
    l.name = name;
    l.gram = std::move(gram);
    l.chi_O = chi_O;
    l.H = std::move(H);
    l.builder = "disconnected";
    l.K = l.zero();
    for (const auto& c : curves)
        l.K = l.K + c.cls;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (l.dot(curves[i].cls, curves[j].cls) != 0)
                throw std::invalid_argument("canonical components must be disjoint");
    std::map<LatticeVec, long> table;
    size_t m = curves.size();
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        LatticeVec cls = l.zero();
        long sign = 1;
        for (size_t i = 0; i < m; ++i) {
            if (mask & (1UL << i)) {
                cls = cls + curves[i].cls;
                if (curves[i].h0_normal % 2 != 0)
                    sign = -sign;
            }
        }
        table[cls] += sign;
    }
    for (const auto& [cls, v] : table)
        if (v != 0)
            l.sw.push_back({cls, v});
    l.validate();
    return l;
}

SurfaceLattice load_lattice(const std::string& path)
{
    nlohmann::json doc = toml::parse_file(path);
    std::string builder = doc.value("builder", std::string("table"));
    std::string name = doc.value("name", std::filesystem::path(path).stem().string());
    std::optional<LatticeVec> H;
    if (doc.contains("polarization"))
        H = doc["polarization"].get<LatticeVec>();
    SurfaceLattice l;
    if (builder == "blow-up") {
        std::string base = doc.at("base").get<std::string>();
        std::filesystem::path p = std::filesystem::path(path).parent_path() / (base + ".toml");
        l = blow_up(load_lattice(p.string()));
        l.name = name;
        l.H = H;
    } else if (builder == "k3") {
        l = k3_lattice();
        l.name = name;
        if (H)
            l.H = H;
    } else if (builder == "general-type") {
        l = general_type_lattice(name, read_matrix(doc.at("gram")), doc.at("canonical").get<LatticeVec>(),
                                 doc.at("chi_O").get<long>(), H);
    } else if (builder == "disconnected") {
        std::vector<CurveComponent> curves;
        for (const auto& c : doc.at("curve"))
            curves.push_back({c.at("class").get<LatticeVec>(), c.at("h0_normal").get<long>()});
        l = disconnected_canonical(name, read_matrix(doc.at("gram")), doc.at("chi_O").get<long>(), curves, H);
    } else if (builder == "table") {
        l.name = name;
        l.gram = read_matrix(doc.at("gram"));
        l.K = doc.at("canonical").get<LatticeVec>();
        l.chi_O = doc.at("chi_O").get<long>();
        l.H = H;
        if (doc.contains("sw"))
            for (const auto& c : doc["sw"])
                l.sw.push_back({c.at("class").get<LatticeVec>(), c.at("value").get<long>()});
    } else {
        throw std::invalid_argument("unknown lattice builder '" + builder + "' in " + path);
    }
    l.validate();
    return l;
}

SurfaceLattice builtin_lattice(const std::string& name)
{
    std::filesystem::path p = std::filesystem::path(data_directory()) / "lattices" / (name + ".toml");
    if (!std::filesystem::exists(p))
        throw std::invalid_argument("no lattice file " + p.string());
    return load_lattice(p.string());
}

std::string format_vec(const LatticeVec& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

LatticeVec parse_vec(const std::string& text)
{
    LatticeVec v;
    std::string t;
    for (char c : text)
        t += (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream is(t);
    long x;
    while (is >> x)
        v.push_back(x);
    if (!is.eof())
        throw std::invalid_argument("cannot parse vector '" + text + "'");
    return v;
}

} // namespace verlinde
