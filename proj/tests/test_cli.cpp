#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/cli.hpp"
#include "verlinde/closed_forms.hpp"
#include "verlinde/series_json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace verlinde;
namespace fs = std::filesystem;

namespace {

struct ScratchDir {
    fs::path path;

    explicit ScratchDir(const std::string& tag)
    {
        path = fs::temp_directory_path() / ("verlinde-test-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
};

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(RunConfig cfg, const fs::path& cache)
{
    cfg.cache_dir = cache.string();
    std::ostringstream out, err;
    Run r;
    r.code = run_command(cfg, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

RunConfig command(const std::string& name)
{
    RunConfig cfg;
    cfg.command = name;
    return cfg;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

YCoeff w(int e, long c = 1)
{
    return YCoeff::w_power(e, ExactRational(c));
}

} // namespace

TEST_CASE("cache round trip and key mismatch")
{
    ScratchDir dir("cache");
    InstantonWindows iw{1, 2, 0};
    EpsSpec spec = draw_eps_spec(1, 0);
    UniversalSeriesA a = compute_universal_A(iw, spec);
    CacheKey key = instanton_cache_key(iw, spec);
    fs::path p = store_cached(dir.path, key, universal_A_to_json(a, key));
    CHECK(p.filename() == key.file_name());
    CHECK_FALSE(fs::exists(p.string() + ".tmp"));

    auto j = load_cached(dir.path, key);
    REQUIRE(j.has_value());
    UniversalSeriesA b = universal_A_from_json(*j);
    CHECK(b.kappa == a.kappa);
    for (size_t i = 0; i < a.A.size(); ++i)
        CHECK(b.A[i] == a.A[i]);
    CHECK(b.tuples == a.tuples);

    CacheKey other = key;
    other.spec = draw_eps_spec(1, 1);
    CHECK_FALSE(load_cached(dir.path, other).has_value());
    CacheKey deeper = instanton_cache_key({2, 2, 0}, spec);
    CHECK_FALSE(load_cached(dir.path, deeper).has_value());

    // a file whose stored key disagrees with its name is ignored
    nlohmann::json forged = *j;
    forged["key"]["q_order"] = 2;
    std::ofstream(p) << forged.dump();
    CHECK_FALSE(load_cached(dir.path, key).has_value());
    CHECK_THROWS_AS(universal_B_from_json(*j), std::invalid_argument);
}

TEST_CASE("tuple hash")
{
    CHECK(tuple_set_hash({"a", "b"}) != tuple_set_hash({"ab"}));
    CHECK(tuple_set_hash({"a", "b"}).size() == 16);
    CHECK(instanton_cache_key({1, 2, 0}, draw_eps_spec(1, 0)).file_name().find('/') == std::string::npos);
}

TEST_CASE("universal inst writes identical cache files for identical runs")
{
    ScratchDir d1("det1"), d2("det2");
    RunConfig cfg = command("universal");
    cfg.kind = "inst";
    cfg.order = 1;
    Run r1 = run(cfg, d1.path);
    Run r2 = run(cfg, d2.path);
    CHECK(r1.code == kExitPass);
    CHECK(r2.code == kExitPass);
    CHECK(r1.out.substr(r1.out.find('\n')) == r2.out.substr(r2.out.find('\n')));
    REQUIRE(std::distance(fs::directory_iterator(d1.path), fs::directory_iterator()) == 1);
    fs::path f1 = fs::directory_iterator(d1.path)->path();
    fs::path f2 = d2.path / f1.filename();
    REQUIRE(fs::exists(f2));
    CHECK(slurp(f1) == slurp(f2));

    // second run reads the cache
    Run r3 = run(cfg, d1.path);
    CHECK(r3.code == kExitPass);
    CHECK(r3.err.find("using cached") != std::string::npos);
    CHECK(r3.out == r1.out);
}

TEST_CASE("universal inst constant terms")
{
    ScratchDir dir("inst2");
    UniversalSeriesA a = obtain_universal_A({2, 4, 0}, 1, dir.path.string(), std::cerr);
    for (const auto& s : a.A)
        CHECK(s.coeff({0, 0}) == YCoeff(1L));
    RunConfig cfg = command("universal");
    cfg.kind = "inst";
    cfg.order = 2;
    cfg.format = "json";
    Run r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("key").at("q_order") == 2);
    CHECK(j.at("key").at("s_order") == 4);
    CHECK(universal_A_from_json(j).A[0] == a.A[0]);
}

TEST_CASE("universal mono order 3 gives C1")
{
    ScratchDir dir("mono3");
    RunConfig cfg = command("universal");
    cfg.kind = "mono";
    cfg.order = 3;
    Run r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    CHECK(r.err.find("FAIL") == std::string::npos);
    UniversalSeriesB b = obtain_universal_B({3, 0}, 1, dir.path.string(), std::cerr);
    UniversalSeriesC c = derive_C(b);
    CHECK(c.C[0].coeff(2) == w(4) + YCoeff(10L) + w(-4));
    CHECK(c.C[0].coeff(1).is_zero());
}

TEST_CASE("table json round trips")
{
    ScratchDir dir("table");
    RunConfig cfg = command("table");
    cfg.lattice = "k3";
    cfg.L = "1,1,0,0";
    cfg.formula = "conj2";
    cfg.format = "json";
    Run r = run(cfg, dir.path);
    REQUIRE(r.code == kExitPass);
    nlohmann::json j = nlohmann::json::parse(r.out);
    TruncatedSeries s = series_from_json(j.at("series"));
    CHECK(s == conj2_rhs(k3_lattice(), {1, 1, 0, 0}, {0, 0, 0, 0}, 8));
    CHECK(series_to_json(s).dump() == j.at("series").dump());
    REQUIRE(j.at("rows").size() == 9);
    for (const auto& row : j.at("rows")) {
        long vd = row.at("vd");
        CHECK(row.at("admissible") == (vd % 4 == 2));
        CHECK(ycoeff_from_json(row.at("coeff")[0], row.at("coeff")[1]) == s.coeff(vd));
    }
}

TEST_CASE("K3 Donaldson table")
{
    ScratchDir dir("k3");
    RunConfig cfg = command("table");
    cfg.lattice = "k3";
    cfg.format = "json";
    cfg.max_vd = 4;
    Run r = run(cfg, dir.path);
    REQUIRE(r.code == kExitPass);
    nlohmann::json rows = nlohmann::json::parse(r.out).at("rows");
    CHECK(rows[0].at("value") == "1");
    CHECK(rows[2].at("value") == "2");
    CHECK(rows[4].at("value") == "3");
    CHECK(rows[1].at("value") == "0");

    cfg.format = "table";
    Run t = run(cfg, dir.path);
    CHECK(t.out.find("admissible") != std::string::npos);
}

TEST_CASE("lattice without SW classes gives zero")
{
    ScratchDir dir("empty");
    fs::create_directories(dir.path);
    fs::path lat = dir.path / "empty.toml";
    std::ofstream(lat) << "name = \"empty\"\ngram = [[1, 0], [0, -1]]\ncanonical = [3, -1]\nchi_O = 1\n";
    RunConfig cfg = command("table");
    cfg.lattice = lat.string();
    for (const char* f : {"conj1", "conj2", "conj3", "gn"}) {
        cfg.formula = f;
        cfg.format = "json";
        Run r = run(cfg, dir.path);
        REQUIRE(r.code == kExitPass);
        for (const auto& row : nlohmann::json::parse(r.out).at("rows"))
            CHECK(row.at("value") == "0");
    }
}

TEST_CASE("verify targets")
{
    ScratchDir dir("verify");
    RunConfig cfg = command("verify");
    cfg.target = "conj3";
    cfg.lattice = "k3";
    cfg.c1 = "1,0,0,0";
    Run r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("PASS") != std::string::npos);

    cfg = command("verify");
    cfg.target = "closed-forms";
    r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("FAIL") == std::string::npos);

    cfg = command("verify");
    cfg.target = "conj2";
    cfg.lattice = "k3";
    cfg.L = "1,1,0,0";
    cfg.max_vd = 2;
    cfg.strong_form = true;
    r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("3*y + 18 + 3*y^-1") != std::string::npos);

    cfg = command("verify");
    cfg.target = "conj3";
    cfg.lattice = "quintic";
    cfg.max_vd = -8;
    r = run(cfg, dir.path);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("vd=-15") != std::string::npos);
    CHECK(r.out.find("vd=-11") != std::string::npos);
}

TEST_CASE("exit codes for bad configuration")
{
    ScratchDir dir("config");
    RunConfig cfg = command("verify");
    cfg.target = "conj9";
    CHECK(run(cfg, dir.path).code == kExitConfig);

    cfg.target = "conj1";
    CHECK(run(cfg, dir.path).code == kExitConfig); // no lattice

    cfg.lattice = "no-such-surface";
    Run r = run(cfg, dir.path);
    CHECK(r.code == kExitConfig);
    CHECK(r.err.find("no-such-surface") != std::string::npos);

    cfg.lattice = "k3";
    cfg.L = "1,0";
    CHECK(run(cfg, dir.path).code == kExitConfig);

    cfg.L = "";
    cfg.max_vd = 6;
    cfg.order = 1;
    r = run(cfg, dir.path);
    CHECK(r.code == kExitConfig);
    CHECK(r.err.find("needs q^3") != std::string::npos);

    RunConfig t = command("table");
    t.lattice = "k3";
    t.format = "xml";
    CHECK(run(t, dir.path).code == kExitConfig);
    t.format = "table";
    t.formula = "gn";
    t.lambda = "one";
    CHECK(run(t, dir.path).code == kExitConfig);

    RunConfig u = command("universal");
    u.kind = "both";
    CHECK(run(u, dir.path).code == kExitConfig);
    CHECK(run(command("plot"), dir.path).code == kExitConfig);
}

TEST_CASE("required orders")
{
    SurfaceLattice k3 = k3_lattice();
    InstantonWindows w = required_instanton_windows(k3, {1, 0, 0, 0}, 6);
    CHECK(w.q_order == 3);
    CHECK(w.s_order == 6);
    CHECK(required_instanton_windows(k3, k3.zero(), 2).q_order == 2);
    CHECK(required_monopole_order(builtin_lattice("quintic"), {0}, -8) == 1);
    CHECK(required_monopole_order(builtin_lattice("quintic"), {0}, -7) == 2);
}
