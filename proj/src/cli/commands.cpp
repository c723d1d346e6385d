#include "verlinde/cli.hpp"

#include "verlinde/applications.hpp"
#include "verlinde/closed_forms.hpp"
#include "verlinde/series_json.hpp"

#include <fmt/format.h>
#include <tbb/global_control.h>

#include <algorithm>
#include <filesystem>
#include <memory>
#include <ostream>

namespace verlinde {

namespace {

constexpr int kSpecRetries = 8;

struct Report {
    long passed = 0;
    long failed = 0;

    void check(std::ostream& out, bool ok, const std::string& name, const std::string& detail = "")
    {
        (ok ? passed : failed)++;
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty())
            out << ": " << detail;
        out << "\n";
    }

    int exit_code() const { return failed == 0 ? kExitPass : kExitMismatch; }
};

LatticeVec vector_option(const std::string& text, const SurfaceLattice& lat, const std::string& what)
{
    if (text.empty())
        return lat.zero();
    LatticeVec v;
    try {
        v = parse_vec(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (v.size() != lat.rank())
        throw ConfigError(what + " has " + std::to_string(v.size()) + " entries, lattice " + lat.name + " has rank " +
                          std::to_string(lat.rank()));
    return v;
}

std::string cache_dir_of(const std::string& dir)
{
    return dir.empty() ? default_cache_directory().string() : dir;
}

bool admissible(const SurfaceLattice& lat, const LatticeVec& c1, long vd)
{
    long r = vd_residue(lat, c1);
    return ((vd - r) % 4 + 4) % 4 == 0;
}

// y^(vd/2) p at y = 0
ExactRational donaldson_value(const YCoeff& p, long vd)
{
    YCoeff d = p * YCoeff::w_power(static_cast<int>(vd));
    return d.at_y_zero();
}

std::string lattice_label(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1)
{
    return lat.name + " L=" + format_vec(L) + " c1=" + format_vec(c1);
}

int verify_instanton(const RunConfig& cfg, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                     std::ostream& out, std::ostream& err)
{
    InstantonWindows w = required_instanton_windows(lat, c1, cfg.max_vd);
    if (cfg.order > 0) {
        if (cfg.order < w.q_order)
            throw ConfigError("--order " + std::to_string(cfg.order) + " cannot reach vd " + std::to_string(cfg.max_vd) +
                              " (needs q^" + std::to_string(w.q_order) + ")");
        w.q_order = cfg.order;
    }
    if (cfg.s_order > 0) {
        if (cfg.s_order < w.s_order)
            throw ConfigError("--s-order " + std::to_string(cfg.s_order) + " cannot reach vd " +
                              std::to_string(cfg.max_vd) + " (needs s^" + std::to_string(w.s_order) + ")");
        w.s_order = cfg.s_order;
    }
    UniversalSeriesA A = obtain_universal_A(w, cfg.seed, cfg.cache_dir, err);
    bool donaldson = cfg.target == "conj1";
    TruncatedSeries rhs = donaldson ? conj1_rhs(lat, L, c1, cfg.max_vd) : conj2_rhs(lat, L, c1, cfg.max_vd);
    Report rep;
    for (long vd = 0; vd <= cfg.max_vd; ++vd) {
        if (!admissible(lat, c1, vd))
            continue;
        YCoeff p = mainprop_predict(A, lat, L, c1, vd, cfg.strong_form);
        std::string name = cfg.target + " " + lattice_label(lat, L, c1) + " vd=" + std::to_string(vd);
        if (donaldson) {
            ExactRational a = donaldson_value(p, vd);
            ExactRational b = rhs.coeff(vd).rational_value();
            rep.check(out, a == b, name, "localization " + to_string(a) + (a == b ? "" : ", closed form " + to_string(b)));
        } else {
            YCoeff b = rhs.coeff(vd);
            rep.check(out, p == b, name, "localization " + p.str() + (p == b ? "" : ", closed form " + b.str()));
        }
    }
    return rep.exit_code();
}

int verify_monopole(const RunConfig& cfg, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                    std::ostream& out, std::ostream& err)
{
    int need = required_monopole_order(lat, c1, cfg.max_vd);
    int q = need;
    if (cfg.order > 0) {
        if (cfg.order < need)
            throw ConfigError("--order " + std::to_string(cfg.order) + " cannot reach vd " + std::to_string(cfg.max_vd) +
                              " (needs q^" + std::to_string(need) + ")");
        q = cfg.order;
    }
    UniversalSeriesB B = obtain_universal_B({q, 0}, cfg.seed, cfg.cache_dir, err);
    TruncatedSeries rhs = conj3_rhs(lat, L, c1, cfg.max_vd);
    Report rep;
    for (long vd = rhs.var_at(0).lo; vd <= cfg.max_vd; ++vd) {
        YCoeff p = lemmaC_predict(B, lat, L, c1, vd);
        YCoeff b = minus_x_coefficient(rhs, vd);
        if (p.is_zero() && b.is_zero())
            continue;
        rep.check(out, p == b, "conj3 " + lattice_label(lat, L, c1) + " vd=" + std::to_string(vd),
                  "localization " + p.str() + (p == b ? "" : ", closed form " + b.str()));
    }
    if (rep.passed + rep.failed == 0)
        rep.check(out, true, "conj3 " + lattice_label(lat, L, c1), "both sides vanish for vd <= " + std::to_string(cfg.max_vd));
    return rep.exit_code();
}

void check_diagonal_series(Report& rep, std::ostream& out, long q)
{
    UniversalSeriesC C = closed_universal_C(q - 1);
    rep.check(out, thm2_C1(q - 1) == C.C[0], "C1 from the K3 diagonal series mod q^" + std::to_string(q));
    rep.check(out, thm2_C3(q - 1) == C.C[2], "C3 from the K3 diagonal series mod q^" + std::to_string(q));
}

void check_triple_product(Report& rep, std::ostream& out, long order)
{
    ProductBuilder b("x", order - 1);
    b.family(2, 0, 1, 1);
    b.family(1, 2, -1, 1, 0, 0, 2, -1);
    b.family(1, -2, -1, 1, 0, 0, 2, -1);
    rep.check(out, b.build() == theta3(order - 1, 1, 1, 2), "Jacobi triple product mod x^" + std::to_string(order));
}

void check_blowup(Report& rep, std::ostream& out, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                  long order)
{
    SurfaceLattice b = blow_up(lat);
    for (long ell = -2; ell <= 2; ++ell)
        for (long k = 0; k <= 2; ++k) {
            TruncatedSeries lhs = conj1_rhs(b, blowup_class(L, ell), blowup_class(c1, k), order - 1);
            TruncatedSeries rhs = (blowup_factor(ell, k, order - 1) * conj1_rhs(lat, L, c1, order - 1)).truncated("x", order - 1);
            rep.check(out, lhs == rhs,
                      fmt::format("blow-up {} l={} k={} mod x^{}", lattice_label(lat, L, c1), ell, k, order));
        }
}

void check_apps(Report& rep, std::ostream& out, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                long order)
{
    if (lat.builder == "general-type") {
        long r = vd_residue(lat, c1);
        TruncatedSeries psi = conj1_rhs(lat, L, c1, order - 1);
        TruncatedSeries phi = prop1_rhs(lat, L, order - 1);
        rep.check(out, psi.extract_progression("x", 4, r) == phi.extract_progression("x", 4, r),
                  fmt::format("minimal general type residue class {} mod 4, {} mod x^{}", r, lattice_label(lat, L, c1), order));
        rep.check(out, gaussian_progression(psi, -r) == psi.extract_progression("x", 4, r),
                  "fourth-root-of-unity average equals the residue filter");
        std::vector<CurveComponent> one = {{lat.K, lat.chi_O}};
        SurfaceLattice d = disconnected_canonical(lat.name + "-one-curve", lat.gram, lat.chi_O, one, lat.H);
        rep.check(out, disconnected_rhs(d, one, L, c1, order - 1) == conj1_rhs(d, L, c1, order - 1),
                  "disconnected canonical formula with one component");
    } else {
        out << "SKIP minimal general type checks: lattice builder is " << lat.builder << "\n";
    }
    check_blowup(rep, out, lat, L, c1, order);
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::string& t = cfg.target;
    Report rep;
    if (t == "thm2") {
        check_diagonal_series(rep, out, cfg.order > 0 ? cfg.order : 24);
        return rep.exit_code();
    }
    if (t == "limits") {
        long order = cfg.order > 0 ? cfg.order : 30;
        LimitIdentityReport r = limit_identities_check(order);
        rep.check(out, r.dg2, "limit identity for D G2 mod x^" + std::to_string(order));
        rep.check(out, r.g2_bar, "limit identity for G2 bar mod x^" + std::to_string(order));
        rep.check(out, r.g2_odd, "limit identity for the odd G2 sum mod x^" + std::to_string(order));
        return rep.exit_code();
    }
    if (t == "closed-forms") {
        check_triple_product(rep, out, 50);
        check_diagonal_series(rep, out, 24);
        if (!cfg.lattice.empty()) {
            SurfaceLattice lat = resolve_lattice(cfg.lattice);
            LatticeVec L = vector_option(cfg.L, lat, "--L");
            LatticeVec c1 = vector_option(cfg.c1, lat, "--c1");
            UniversalSeriesC C = closed_universal_C(required_monopole_order(lat, c1, cfg.max_vd));
            TruncatedSeries f = conj3_rhs(lat, L, c1, cfg.max_vd);
            bool ok = true;
            for (long vd = f.var_at(0).lo; vd <= cfg.max_vd; ++vd)
                ok = ok && minus_x_coefficient(f, vd) == thm1_rhs(C, lat, L, c1, vd);
            rep.check(out, ok, "monopole closed form equals the universal C assembly for " + lattice_label(lat, L, c1));
        }
        return rep.exit_code();
    }
    if (cfg.lattice.empty())
        throw ConfigError("verify " + t + " needs --lattice");
    SurfaceLattice lat = resolve_lattice(cfg.lattice);
    LatticeVec L = vector_option(cfg.L, lat, "--L");
    LatticeVec c1 = vector_option(cfg.c1, lat, "--c1");
    if (t == "conj1" || t == "conj2")
        return verify_instanton(cfg, lat, L, c1, out, err);
    if (t == "conj3")
        return verify_monopole(cfg, lat, L, c1, out, err);
    if (t == "blowup") {
        check_blowup(rep, out, lat, L, c1, cfg.order > 0 ? cfg.order : 20);
        return rep.exit_code();
    }
    if (t == "apps") {
        check_apps(rep, out, lat, L, c1, cfg.order > 0 ? cfg.order : 24);
        return rep.exit_code();
    }
    throw ConfigError("unknown verify target '" + t + "'");
}

int run_universal(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    int q = cfg.order > 0 ? cfg.order : 2;
    std::string dir = cache_dir_of(cfg.cache_dir);
    Report rep;
    if (cfg.kind == "inst") {
        InstantonWindows w{q, cfg.s_order > 0 ? cfg.s_order : 2 * q, 0};
        UniversalSeriesA A = obtain_universal_A(w, cfg.seed, cfg.cache_dir, err);
        CacheKey key = instanton_cache_key(w, A.spec);
        if (cfg.format == "json") {
            out << universal_A_to_json(A, key).dump(1) << "\n";
        } else {
            out << "cache " << (std::filesystem::path(dir) / key.file_name()).string() << "\n";
            out << "eps specialization p = " << to_string(A.spec.p) << ", r = " << to_string(A.spec.r) << "\n";
            out << "kappa = " << A.kappa.str() << "\n";
            for (size_t i = 0; i < A.A.size(); ++i)
                out << "A" << i + 1 << " = " << A.A[i].str() << "\n";
        }
        bool ones = std::all_of(A.A.begin(), A.A.end(), [](const TruncatedSeries& s) { return s.coeff({0, 0}) == YCoeff(1L); });
        rep.check(err, ones, "constant terms of A equal 1");
        rep.check(err, A.non_laurent_coefficients().empty(), "A coefficients are Laurent polynomials in y^(1/2)");
        return rep.exit_code();
    }
    if (cfg.kind == "mono") {
        MonopoleWindows w{q, 0};
        UniversalSeriesB B = obtain_universal_B(w, cfg.seed, cfg.cache_dir, err);
        CacheKey key = monopole_cache_key(w, B.spec);
        UniversalSeriesC C = derive_C(B);
        if (cfg.format == "json") {
            out << universal_B_to_json(B, key).dump(1) << "\n";
        } else {
            out << "cache " << (std::filesystem::path(dir) / key.file_name()).string() << "\n";
            out << "eps specialization p = " << to_string(B.spec.p) << ", r = " << to_string(B.spec.r) << "\n";
            for (size_t i = 0; i < B.B.size(); ++i)
                out << "B" << i + 1 << " = " << B.B[i].str() << "\n";
            for (size_t i = 0; i < C.C.size(); ++i)
                out << "C" << i + 1 << " = " << C.C[i].str() << "\n";
        }
        bool ones = std::all_of(B.B.begin(), B.B.end(), [](const TruncatedSeries& s) { return s.coeff(0) == YCoeff(1L); });
        rep.check(err, ones, "constant terms of B equal 1");
        rep.check(err, B.non_laurent_coefficients().empty(), "B coefficients are Laurent polynomials in y^(1/2)");
        UniversalSeriesC closed = closed_universal_C(q);
        for (size_t i = 0; i < C.C.size(); ++i)
            rep.check(err, C.C[i] == closed.C[i], "C" + std::to_string(i + 1) + " equals the closed product mod q^" +
                                                      std::to_string(q + 1));
        return rep.exit_code();
    }
    throw ConfigError("universal needs inst or mono, got '" + cfg.kind + "'");
}

int run_table(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.lattice.empty())
        throw ConfigError("table needs --lattice");
    SurfaceLattice lat = resolve_lattice(cfg.lattice);
    LatticeVec L = vector_option(cfg.L, lat, "--L");
    LatticeVec c1 = vector_option(cfg.c1, lat, "--c1");
    TruncatedSeries f;
    bool minus_x = false;
    if (cfg.formula == "conj1") {
        f = conj1_rhs(lat, L, c1, cfg.max_vd);
    } else if (cfg.formula == "conj2") {
        f = conj2_rhs(lat, L, c1, cfg.max_vd);
    } else if (cfg.formula == "conj3") {
        f = conj3_rhs(lat, L, c1, cfg.max_vd);
        minus_x = true;
    } else if (cfg.formula == "gn") {
        ExactRational lambda;
        try {
            lambda = parse_rational(cfg.lambda);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        f = gn_rhs(lat, L, lambda, c1, cfg.max_vd);
    } else {
        throw ConfigError("unknown formula '" + cfg.formula + "'");
    }
    long lo = f.var_at(0).lo < 0 ? f.var_at(0).lo : 0;
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::tuple<long, bool, std::string>> text;
    for (long vd = lo; vd <= cfg.max_vd; ++vd) {
        YCoeff c = minus_x ? minus_x_coefficient(f, vd) : f.coeff(vd);
        bool adm = admissible(lat, c1, vd);
        rows.push_back({{"vd", vd}, {"admissible", adm}, {"value", c.str()}, {"coeff", ycoeff_to_json(c)}});
        text.emplace_back(vd, adm, c.str());
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["formula"] = cfg.formula;
        j["lattice"] = lat.name;
        j["L"] = L;
        j["c1"] = c1;
        j["max_vd"] = cfg.max_vd;
        j["series"] = series_to_json(f);
        j["rows"] = rows;
        out << j.dump(1) << "\n";
        return kExitPass;
    }
    out << fmt::format("# {} {} ({})\n", cfg.formula, lattice_label(lat, L, c1),
                       minus_x ? "coefficient of (-x)^vd" : "coefficient of x^vd");
    out << fmt::format("{:>5}  {:>10}  {}\n", "vd", "admissible", "value");
    for (const auto& [vd, adm, v] : text)
        out << fmt::format("{:>5}  {:>10}  {}\n", vd, adm ? "yes" : "no", v);
    return kExitPass;
}

} // namespace

void RunConfig::validate() const
{
    if (command != "universal" && command != "verify" && command != "table")
        throw ConfigError("unknown command '" + command + "'");
    if (order < 0 || s_order < 0)
        throw ConfigError("orders must be positive");
    if (threads < 0)
        throw ConfigError("--threads must be positive");
    if (format != "table" && format != "json")
        throw ConfigError("--format must be table or json");
    if (command == "universal" && kind != "inst" && kind != "mono")
        throw ConfigError("universal needs inst or mono");
    static const std::vector<std::string> targets = {"conj1",  "conj2",  "conj3", "thm2",
                                                     "closed-forms", "limits", "blowup", "apps"};
    if (command == "verify" && std::find(targets.begin(), targets.end(), target) == targets.end())
        throw ConfigError("unknown verify target '" + target + "'");
}

SurfaceLattice resolve_lattice(const std::string& name_or_path)
{
    try {
        if (std::filesystem::exists(name_or_path))
            return load_lattice(name_or_path);
        return builtin_lattice(name_or_path);
    } catch (const std::exception& e) {
        throw ConfigError("lattice '" + name_or_path + "': " + e.what());
    }
}

InstantonWindows required_instanton_windows(const SurfaceLattice& lat, const LatticeVec& c1, long max_vd)
{
    InstantonWindows w{1, static_cast<int>(std::max(max_vd, 1L)), 0};
    for (const auto& sw : lat.sw) {
        LatticeVec D = c1 - 2 * sw.cls;
        for (long vd = 0; vd <= max_vd; ++vd) {
            long num = vd + lat.square(D) + 3 * lat.chi_O;
            if (num >= 0 && num % 4 == 0)
                w.q_order = std::max(w.q_order, static_cast<int>(num / 4));
        }
    }
    return w;
}

int required_monopole_order(const SurfaceLattice& lat, const LatticeVec& c1, long max_vd)
{
    int q = 1;
    for (const auto& sw : lat.sw) {
        if (delta(c1, lat.K - sw.cls) == 0)
            continue;
        long b2 = lat.square(sw.cls);
        long bK = lat.dot(sw.cls, lat.K);
        long xv = -b2 + 2 * bK - lat.K2() - 3 * lat.chi_O;
        if (max_vd >= xv)
            q = std::max(q, static_cast<int>((max_vd - xv) / 4));
    }
    return q;
}

UniversalSeriesA obtain_universal_A(const InstantonWindows& w, std::uint64_t seed, const std::string& cache_dir,
                                    std::ostream& log)
{
    std::filesystem::path dir = cache_dir_of(cache_dir);
    for (int index = 0; index < kSpecRetries; ++index) {
        EpsSpec spec = draw_eps_spec(seed, index);
        CacheKey key = instanton_cache_key(w, spec);
        if (auto j = load_cached(dir, key)) {
            log << "using cached " << (dir / key.file_name()).string() << "\n";
            return universal_A_from_json(*j);
        }
        try {
            UniversalSeriesA A = compute_universal_A(w, spec);
            store_cached(dir, key, universal_A_to_json(A, key));
            return A;
        } catch (const std::domain_error& e) {
            log << "eps specialization (" << to_string(spec.p) << ", " << to_string(spec.r)
                << ") is degenerate: " << e.what() << "; retrying with the next draw\n";
        }
    }
    throw std::runtime_error("no generic eps specialization among " + std::to_string(kSpecRetries) + " draws");
}

UniversalSeriesB obtain_universal_B(const MonopoleWindows& w, std::uint64_t seed, const std::string& cache_dir,
                                    std::ostream& log)
{
    std::filesystem::path dir = cache_dir_of(cache_dir);
    for (int index = 0; index < kSpecRetries; ++index) {
        EpsSpec spec = draw_eps_spec(seed, index);
        CacheKey key = monopole_cache_key(w, spec);
        if (auto j = load_cached(dir, key)) {
            log << "using cached " << (dir / key.file_name()).string() << "\n";
            return universal_B_from_json(*j);
        }
        try {
            UniversalSeriesB B = compute_universal_B(w, spec);
            store_cached(dir, key, universal_B_to_json(B, key));
            return B;
        } catch (const std::domain_error& e) {
            log << "eps specialization (" << to_string(spec.p) << ", " << to_string(spec.r)
                << ") is degenerate: " << e.what() << "; retrying with the next draw\n";
        }
    }
    throw std::runtime_error("no generic eps specialization among " + std::to_string(kSpecRetries) + " draws");
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        cfg.validate();
        std::unique_ptr<tbb::global_control> limit;
        if (cfg.threads > 0)
            limit = std::make_unique<tbb::global_control>(tbb::global_control::max_allowed_parallelism,
                                                          static_cast<size_t>(cfg.threads));
        if (cfg.command == "universal")
            return run_universal(cfg, out, err);
        if (cfg.command == "verify")
            return run_verify(cfg, out, err);
        return run_table(cfg, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }
}

} // namespace verlinde
