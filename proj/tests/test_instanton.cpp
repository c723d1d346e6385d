#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/equiv_eval.hpp"
#include "verlinde/instanton.hpp"
#include "verlinde/series_json.hpp"
#include "verlinde/toric_chars.hpp"

#include <fstream>

using namespace verlinde;

namespace {

const ToricSurface& surface(const std::string& name)
{
    static ToricSurface p2 = builtin_surface("p2");
    static ToricSurface p1p1 = builtin_surface("p1xp1");
    return name == "p2" ? p2 : p1p1;
}

std::vector<long> minus(const std::vector<long>& a, const std::vector<long>& b)
{
    std::vector<long> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

// The same fixed-point sum evaluated with the generic series routines:
// equiv_euler * equiv_xy(-y) * exp(mu) * (2s)^(chi - n) * y^(-vd/2), then the z^0 slice.
TruncatedSeries psi_oracle(const ToricSurface& s, const std::vector<long>& L, const std::vector<long>& a1,
                           const std::vector<long>& a2, int n1, int n2, const EpsSpec& spec, int s_order)
{
    Divisor a1d = s.divisor(a1), a2d = s.divisor(a2), Ld = s.divisor(L);
    Divisor Dd = a2d - a1d;
    std::vector<long> D = minus(a2, a1);
    long n = n1 + n2;
    long vd = 4 * n - s.intersect(D, D) - 3 * s.chi_O;
    int xs = static_cast<int>(2 * n + s_order);
    EquivChar rg0 = rgamma_char(s, s.zero_divisor());
    TruncatedSeries total;
    bool first = true;
    for (const auto& z : fixed_points(s, n1)) {
        for (const auto& w : fixed_points(s, n2)) {
            EquivChar cross = ext_pair_char(s, z, w, Dd).twisted(0, 0, 4) + ext_pair_char(s, w, z, -Dd).twisted(0, 0, -4);
            EquivChar x = rg0 - ext_pair_char(s, z, z, s.zero_divisor()) - ext_pair_char(s, w, w, s.zero_divisor()) - cross;
            EquivChar e = cross + struct_sheaf_char(s, z, a1d, 0) + struct_sheaf_char(s, w, a2d, 4) - tangent_char(s, z) -
                          tangent_char(s, w);
            ExactRational mu_z = 0;
            for (size_t k = 0; k < s.charts.size(); ++k)
                mu_z += (spec.p * Ld.chars[k][0] + spec.r * Ld.chars[k][1]) * (z[k].size() + w[k].size());
            TruncatedSeries mu(zs_vars(xs, 0, xs));
            mu.set_coeff({0, 1}, YCoeff(ExactRational(-s.intersect(L, D))));
            mu.set_coeff({1, 1}, YCoeff(mu_z));
            TruncatedSeries f = equiv_euler(e, spec, 0) * equiv_xy(x, spec, xs, -1) * mu.exp();
            f = f.shifted({0, s.chi_O - n}, static_cast<int>(-vd)) * YCoeff(rational_pow(ExactRational(2), s.chi_O - n));
            TruncatedSeries slice = f.slice("z", 0);
            if (first)
                total = slice;
            else
                total += slice;
            first = false;
        }
    }
    return total;
}

std::string golden_path(const std::string& name)
{
    return std::string(VERLINDE_TEST_DIR) + "/golden/" + name;
}

} // namespace

TEST_CASE("psi_tilde agrees with the series-level fixed-point sum")
{
    EpsSpec spec = draw_eps_spec(1, 0);
    struct Case {
        std::string surface;
        std::vector<long> L, a1, a2;
        int n1, n2;
    };
    std::vector<Case> cases = {
        {"p2", {1}, {0}, {1}, 0, 1},
        {"p2", {1}, {1}, {2}, 1, 0},
        {"p2", {0}, {0}, {2}, 1, 1},
        {"p1xp1", {0, 1}, {0, 1}, {0, 1}, 1, 0},
        {"p1xp1", {1, 0}, {0, 0}, {0, 1}, 0, 1},
    };
    for (const auto& c : cases) {
        CAPTURE(c.surface);
        CAPTURE(c.n1);
        CAPTURE(c.n2);
        const ToricSurface& s = surface(c.surface);
        PsiResult r = psi_tilde(s, c.L, c.a1, c.a2, c.n1, c.n2, spec, 2);
        TruncatedSeries o = psi_oracle(s, c.L, c.a1, c.a2, c.n1, c.n2, spec, 2);
        for (long j = r.s_valuation; j <= r.s_valuation + 2; ++j) {
            CAPTURE(j);
            CHECK(r.value.coeff(j) == o.coeff(j));
        }
    }
}

TEST_CASE("trace-free character rank equals the virtual dimension")
{
    EpsSpec spec = draw_eps_spec(1, 0);
    const ToricSurface& s = surface("p2");
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n1 + n2 <= 2; ++n2) {
            PsiResult r = psi_tilde(s, {1}, {1}, {2}, n1, n2, spec, 0);
            long c2 = n1 + n2 + 2;
            CHECK(r.vd == 4 * c2 - 9 - 3);
        }
}

TEST_CASE("normalized series starts with kappa^chi")
{
    EpsSpec spec = draw_eps_spec(1, 0);
    YCoeff kappa = instanton_kappa();
    CHECK(kappa == YCoeff(LaurentPoly(1L)) / YCoeff(LaurentPoly::monomial(-1) - LaurentPoly::monomial(1)));
    for (const auto& t : standard_instanton_tuples()) {
        CAPTURE(t.label());
        InstantonZ z = z_inst(t, {0, 4, 0}, spec);
        CHECK(z.series.coeff({0, 0}) == kappa.pow(z.chi_O));
        for (long j = 1; j <= 4; ++j)
            CHECK(z.series.coeff({j, 0}).is_zero());
    }
}

TEST_CASE("negative eps powers cancel and the eps^0 slice is independent of the specialization")
{
    InstantonTuple t = standard_instanton_tuples()[4];
    InstantonWindows w{2, 3, 2};
    InstantonZ a = z_inst(t, w, draw_eps_spec(1, 0));
    InstantonZ b = z_inst(t, w, draw_eps_spec(7, 1));
    CHECK(a.eps.negative_clean());
    CHECK(b.eps.negative_clean());
    CHECK(a.series == b.series);
    CHECK(a.fixed_points == 1 + 6 + 27);
}

TEST_CASE("golden series for (P2, O, O, O)")
{
    std::ifstream in(golden_path("z_inst_p2_O_O_O.json"));
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    TruncatedSeries golden = series_from_json(j);
    InstantonZ z = z_inst(standard_instanton_tuples()[0], {1, 4, 0}, draw_eps_spec(3, 2));
    CHECK(z.series == golden);
}

TEST_CASE("universal series reconstruct the inputs and predict the held-out tuple")
{
    EpsSpec spec = draw_eps_spec(1, 0);
    std::vector<InstantonZ> inputs;
    UniversalSeriesA A = compute_universal_A({1, 3, 0}, spec, &inputs);
    auto tuples = standard_instanton_tuples();
    for (size_t i = 0; i < tuples.size(); ++i) {
        CAPTURE(tuples[i].label());
        CHECK(A.evaluate(instanton_chern(surface(tuples[i].surface), tuples[i])) == inputs[i].series);
    }
    InstantonTuple h = heldout_instanton_tuple();
    CHECK(A.evaluate(instanton_chern(surface(h.surface), h)) == z_inst(h, {1, 3, 0}, spec).series);
    for (const auto& a : A.A)
        CHECK(a.coeff({0, 0}) == YCoeff(1L));
    CHECK(A.non_laurent_coefficients().empty());

    // disjoint union P2 + P1xP1 through universality
    InstantonChern v1 = instanton_chern(surface("p2"), tuples[0]);
    InstantonChern v2 = instanton_chern(surface("p1xp1"), tuples[1]);
    InstantonChern v12;
    for (size_t i = 0; i < v12.size(); ++i)
        v12[i] = v1[i] + v2[i];
    CHECK(A.evaluate(v12) == inputs[0].series * inputs[1].series);
}

TEST_CASE("Chern vectors of the eleven tuples are independent")
{
    RationalMatrix W(kInstantonChern, std::vector<ExactRational>(kInstantonChern));
    auto tuples = standard_instanton_tuples();
    for (size_t i = 0; i < tuples.size(); ++i) {
        InstantonChern v = instanton_chern(surface(tuples[i].surface), tuples[i]);
        for (size_t j = 0; j < v.size(); ++j)
            W[j][i] = v[j];
    }
    CHECK_NOTHROW(invert_matrix(W));
    W[0] = W[1];
    CHECK_THROWS_AS(invert_matrix(W), std::domain_error);
}

TEST_CASE("mainprop prediction on K3 and its error paths")
{
    EpsSpec spec = draw_eps_spec(1, 0);
    UniversalSeriesA A = compute_universal_A({2, 2, 0}, spec);
    SurfaceLattice k3 = builtin_lattice("k3");
    LatticeVec L = k3.zero();
    LatticeVec c1 = {1, 0, 0, 0};
    // M is deformation equivalent to K3: y^-1 chi_{-y}(K3)
    YCoeff p = mainprop_predict(A, k3, L, c1, 2, true);
    CHECK(p == YCoeff(LaurentPoly::from_coeffs(-2, {2, 0, 20, 0, 2})));
    CHECK(mainprop_predict(A, k3, L, c1, 2, false) == p);
    CHECK(mainprop_predict(A, k3, L, c1, 3, true).is_zero());
    CHECK_THROWS_AS(mainprop_predict(A, k3, L, c1, 6, true), std::out_of_range);

    SurfaceLattice empty = k3;
    empty.sw.clear();
    CHECK(mainprop_predict(A, empty, L, c1, 2, true).is_zero());

    SurfaceLattice noH = k3;
    noH.H.reset();
    CHECK_THROWS_AS(mainprop_predict(A, noH, L, c1, 2, false), std::invalid_argument);
}
