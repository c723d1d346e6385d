#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/applications.hpp"
#include "verlinde/closed_forms.hpp"

using namespace verlinde;

namespace {

YCoeff w(int e, long c = 1)
{
    return YCoeff::w_power(e, ExactRational(c));
}

TruncatedSeries power_series(long order, long c0, long step, long sign, long exponent)
{
    // (1 + sign x^step)^exponent * c0
    TruncatedSeries b = univariate("x", 0, order);
    b.set_coeff({0}, YCoeff(1L));
    b.add_to({step}, YCoeff(sign));
    return b.pow(exponent) * YCoeff(c0);
}

TruncatedSeries y_inverted(const TruncatedSeries& f)
{
    TruncatedSeries r(f.vars());
    for (const auto& [e, c] : f.terms())
        r.set_coeff(e, c.y_inverted());
    return r;
}

SurfaceLattice gt()
{
    return builtin_lattice("general-type-k1-chi2");
}

} // namespace

TEST_CASE("theta, eta and Eisenstein building blocks")
{
    TruncatedSeries t3 = theta3(9, 1, 1, 2);
    CHECK(t3.coeff(0) == YCoeff(1L));
    CHECK(t3.coeff(1) == w(2) + w(-2));
    CHECK(t3.coeff(4) == w(4) + w(-4));
    CHECK(t3.coeff(2).is_zero());
    CHECK(t3.is_y_symmetric());

    TruncatedSeries t2 = theta2(40, 1);
    CHECK(t2.var_at(0).den == 4);
    CHECK(t2.terms().begin()->first == Exponents{1});
    CHECK(t2.coeff(1) == w(1) + w(-1));
    CHECK(t2.coeff(9) == w(3) + w(-3));
    CHECK(t2.is_y_symmetric());
    CHECK(theta2(40, 4).var_at(0).den == 1);

    TruncatedSeries g = eisenstein_g2_bar(4);
    CHECK(g.coeff(1) == YCoeff(1L));
    CHECK(g.coeff(2) == YCoeff(3L));
    CHECK(g.coeff(3) == YCoeff(4L));
    CHECK(g.coeff(4) == YCoeff(7L));
    CHECK(eisenstein_g2(4).coeff(0) == YCoeff(ExactRational(-1, 24)));

    TruncatedSeries eta = eta_bar(10);
    CHECK(eta.coeff(0) == YCoeff(1L));
    // Euler pentagonal theorem
    CHECK(eta.coeff(1) == YCoeff(-1L));
    CHECK(eta.coeff(2) == YCoeff(-1L));
    CHECK(eta.coeff(5) == YCoeff(1L));
    CHECK(eta.coeff(7) == YCoeff(1L));
    CHECK(eta.coeff(3).is_zero());
}

TEST_CASE("Jacobi triple product mod x^50")
{
    long hi = 49;
    ProductBuilder b("x", hi);
    b.family(2, 0, 1, 1);
    b.family(1, 2, -1, 1, 0, 0, 2, -1);
    b.family(1, -2, -1, 1, 0, 0, 2, -1);
    CHECK(b.build() == theta3(hi, 1, 1, 2));
}

TEST_CASE("Donaldson formula on sample lattices")
{
    SurfaceLattice k3 = k3_lattice();
    LatticeVec o = k3.zero();
    CHECK(conj1_rhs(k3, o, o, 12) == power_series(12, 1, 2, -1, -2));

    SurfaceLattice empty = k3;
    empty.sw.clear();
    CHECK(conj1_rhs(empty, o, o, 12).is_zero());

    SurfaceLattice g = gt();
    LatticeVec L = {1, 1, 0};
    LatticeVec c1 = {1, 0, 1};
    long e = g.dot(g.K, L - g.K);
    long sign = (g.dot(c1, g.K) + g.chi_O) % 2 == 0 ? 1 : -1;
    TruncatedSeries bracket = power_series(16, 1, 1, 1, e) + power_series(16, sign, 1, -1, e);
    TruncatedSeries expected = bracket * power_series(16, 1, 2, -1, -g.chi(L)) *
                               YCoeff(rational_pow(ExactRational(2), 2 - g.chi_O + g.K2()));
    CHECK(conj1_rhs(g, L, c1, 16) == expected.truncated("x", 16));
}

TEST_CASE("refined formula degenerates to the Donaldson formula")
{
    struct Case {
        SurfaceLattice lat;
        LatticeVec L, c1;
    };
    SurfaceLattice k3 = k3_lattice();
    SurfaceLattice k3b = blow_up(k3);
    std::vector<Case> cases = {
        {k3, {1, 1, 0, 0}, {1, 0, 0, 0}},
        {k3, {0, 0, 1, 2}, {1, 0, 1, 1}},
        {k3b, {1, 0, 0, 0, 1}, {1, 0, 0, 0, 1}},
        {gt(), {1, 1, 0}, {1, 0, 1}},
        {gt(), {2, 0, 1}, {0, 1, 0}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.lat.name);
        CAPTURE(format_vec(c.L));
        TruncatedSeries f2 = conj2_rhs(c.lat, c.L, c.c1, 19);
        CHECK(donaldson_limit(f2) == conj1_rhs(c.lat, c.L, c.c1, 19));
        CHECK(y_inverted(f2) == conj2_rhs(c.lat, (-1) * c.L, c.c1, 19));
        if (c.lat.dot(c.L, c.lat.K) == 0)
            CHECK(f2.is_y_symmetric());
    }
}

TEST_CASE("refined formula at L = O is the Vafa-Witten instanton form")
{
    SurfaceLattice g = gt();
    LatticeVec o = g.zero();
    LatticeVec c1 = {1, 0, 1};
    long hi = 12;
    // 4 (1/2 prod 1/((1-x^2n)^10 (1-x^2n y)(1-x^2n/y)))^chi (2 eta(x^4)^2 / theta3)^K2 sum (-1)^(c1 a) SW (theta3/theta3(-x))^(aK)
    ProductBuilder b("x", hi);
    b.family(2, 0, 1, -10 * g.chi_O);
    b.family(2, 2, 1, -g.chi_O);
    b.family(2, -2, 1, -g.chi_O);
    TruncatedSeries t3 = theta3(hi, 1, 1, 1);
    TruncatedSeries eta4 = rescale(eta_bar(hi), "x", 4).truncated("x", hi);
    TruncatedSeries front = b.build() * (eta4.pow(2) * t3.invert() * YCoeff(2L)).pow(g.K2()) *
                            YCoeff(4 * rational_pow(ExactRational(2), -g.chi_O));
    TruncatedSeries ratio = t3 * theta3(hi, 1, -1, 1).invert();
    TruncatedSeries sum = univariate("x", 0, hi);
    for (const auto& sw : g.sw) {
        long sign = g.dot(c1, sw.cls) % 2 == 0 ? 1 : -1;
        sum += ratio.pow(g.dot(sw.cls, g.K)) * YCoeff(sign * sw.value);
    }
    CHECK(conj2_rhs(g, o, c1, hi) == front * sum);
}

TEST_CASE("monopole closed form vanishes on K3 for odd c1")
{
    SurfaceLattice k3 = k3_lattice();
    for (const LatticeVec& c1 : {LatticeVec{1, 0, 0, 0}, LatticeVec{1, 1, 0, 0}, LatticeVec{0, 0, 1, 2}}) {
        TruncatedSeries f = conj3_rhs(k3, {1, 1, 0, 0}, c1, 24);
        CHECK(f.is_zero());
        UniversalSeriesC C = closed_universal_C(6);
        for (long vd = 0; vd <= 24; ++vd)
            CHECK(thm1_rhs(C, k3, {1, 1, 0, 0}, c1, vd).is_zero());
    }
}

TEST_CASE("monopole closed form equals the universal C assembly")
{
    UniversalSeriesC C = closed_universal_C(7);
    for (const auto& c : C.C)
        CHECK(c.coeff(0) == YCoeff(1L));
    struct Case {
        SurfaceLattice lat;
        LatticeVec L, c1;
    };
    SurfaceLattice g = gt();
    std::vector<Case> cases = {
        {g, {0, 0, 0}, {1, 0, 0}},
        {g, {1, 1, 0}, {1, 0, 0}},
        {g, {1, 0, 1}, {1, 2, 0}},
        {k3_lattice(), {1, 1, 0, 0}, {0, 0, 0, 0}},
        {blow_up(k3_lattice()), {1, 0, 0, 0, 1}, {0, 0, 0, 0, 1}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.lat.name);
        CAPTURE(format_vec(c.L));
        TruncatedSeries f = conj3_rhs(c.lat, c.L, c.c1, 23);
        CHECK(y_inverted(f) == conj3_rhs(c.lat, (-1) * c.L, c.c1, 23));
        bool symmetric = c.lat.dot(c.L, c.lat.K) == 0;
        for (long vd = -6; vd <= 23; ++vd) {
            CAPTURE(vd);
            YCoeff a = minus_x_coefficient(f, vd);
            CHECK(a == thm1_rhs(C, c.lat, c.L, c.c1, vd));
            if (symmetric)
                CHECK(a == a.y_inverted());
        }
    }
    CHECK_THROWS_AS(thm1_rhs(closed_universal_C(1), g, g.zero(), {1, 0, 0}, 29), std::out_of_range);
    SurfaceLattice empty = g;
    empty.sw.clear();
    CHECK(thm1_rhs(C, empty, g.zero(), {1, 0, 0}, 3).is_zero());
}

TEST_CASE("K3 diagonal route gives the closed C1 and C3 mod q^24")
{
    long hi = 23;
    UniversalSeriesC C = closed_universal_C(hi);
    CHECK(thm2_C1(hi) == C.C[0]);
    CHECK(thm2_C3(hi) == C.C[2]);
    CHECK(C.C[0].coeff(2) == YCoeff(10L) + w(4) + w(-4));
    TruncatedSeries z = k3_diagonal_series(6, 9);
    CHECK(z.coeff(0) == YCoeff(1L));
    for (long n = 1; n <= 9; n += 2)
        CHECK(z.coeff(n).is_zero());
}

TEST_CASE("higher rank series")
{
    HigherRankSeries two = higher_rank_series(2, 0, 16);
    CHECK(two.C1 == closed_universal_C(16).C[0]);
    for (long r : {2L, 3L, 4L}) {
        HigherRankSeries h = higher_rank_series(r, 0, 2 * r);
        YCoeff expected = (w(static_cast<int>(2 * r)) + w(static_cast<int>(-2 * r)) - YCoeff(2L)) * YCoeff(ExactRational(r * r, 2));
        CHECK(h.C3.coeff(r) == expected);
        CHECK(h.C1.coeff(r) == YCoeff(10L) + w(static_cast<int>(2 * r)) + w(static_cast<int>(-2 * r)));
        CHECK(h.k3_instanton.coeff(1) == YCoeff(20L) + w(2, 2) + w(-2, 2));
    }
    CHECK_THROWS_AS(higher_rank_series(1, 0, 4), std::invalid_argument);
}

TEST_CASE("interpolating formula and limit identities")
{
    LimitIdentityReport rep = limit_identities_check(30);
    CHECK(rep.dg2);
    CHECK(rep.g2_bar);
    CHECK(rep.g2_odd);

    SurfaceLattice g = gt();
    LatticeVec c1 = {1, 0, 1};
    TruncatedSeries a = gn_rhs(g, {2, 1, 0}, 0, c1, 16);
    CHECK(a == gn_rhs(g, g.zero(), 3, c1, 16));
    CHECK(a != gn_rhs(g, {2, 1, 0}, 1, c1, 16));
}

TEST_CASE("minimal general type: residue classes mod 4")
{
    SurfaceLattice g = gt();
    for (const LatticeVec& c1 : {LatticeVec{1, 0, 0}, LatticeVec{0, 1, 0}, LatticeVec{1, 1, 1}}) {
        for (const LatticeVec& L : {LatticeVec{0, 0, 0}, LatticeVec{1, 1, 0}, LatticeVec{3, 0, 1}}) {
            long r = vd_residue(g, c1);
            TruncatedSeries psi = conj1_rhs(g, L, c1, 23);
            TruncatedSeries phi = prop1_rhs(g, L, 23);
            CHECK(psi.extract_progression("x", 4, r) == phi.extract_progression("x", 4, r));
            CHECK(gaussian_progression(psi, -r) == psi.extract_progression("x", 4, r));
        }
    }
}

TEST_CASE("blow-up relation")
{
    for (const SurfaceLattice& base : {k3_lattice(), gt()}) {
        SurfaceLattice b = blow_up(base);
        CAPTURE(base.name);
        CHECK(b.sw.size() == 2 * base.sw.size());
        LatticeVec L = base.zero();
        L[0] = 1;
        LatticeVec c1 = base.zero();
        c1[1] = 1;
        for (long ell = -2; ell <= 2; ++ell)
            for (long k = 0; k <= 2; ++k) {
                TruncatedSeries lhs = conj1_rhs(b, blowup_class(L, ell), blowup_class(c1, k), 19);
                TruncatedSeries rhs = (blowup_factor(ell, k, 19) * conj1_rhs(base, L, c1, 19)).truncated("x", 19);
                CHECK(lhs == rhs);
            }
    }
    SurfaceLattice kb = blow_up(k3_lattice());
    REQUIRE(kb.sw.size() == 2);
    CHECK(kb.sw[0].cls == LatticeVec{0, 0, 0, 0, 0});
    CHECK(kb.sw[0].value == 1);
    CHECK(kb.sw[1].cls == LatticeVec{0, 0, 0, 0, 1});
    CHECK(kb.sw[1].value == 1);
}

TEST_CASE("disconnected canonical divisor")
{
    // one curve C with C^2 = 1 in a rank-2 lattice, K = C
    std::vector<CurveComponent> one = {{{1, 0}, 0}};
    SurfaceLattice s1 = disconnected_canonical("one-curve", {{1, 0}, {0, -1}}, 2, one);
    for (const LatticeVec& L : {LatticeVec{0, 0}, LatticeVec{2, 1}})
        for (const LatticeVec& c1 : {LatticeVec{0, 0}, LatticeVec{1, 1}})
            CHECK(disconnected_rhs(s1, one, L, c1, 20) == conj1_rhs(s1, L, c1, 20));

    std::vector<CurveComponent> two = {{{1, 0, 0}, 1}, {{0, 1, 0}, 0}};
    SurfaceLattice s2 = disconnected_canonical("two-curves", {{2, 0, 0}, {0, 1, 0}, {0, 0, -1}}, 3, two);
    CHECK(s2.sw.size() == 4);
    CHECK(disconnected_rhs(s2, two, {1, 1, 1}, {1, 0, 1}, 20) == conj1_rhs(s2, {1, 1, 1}, {1, 0, 1}, 20));
    CHECK_THROWS_AS(disconnected_rhs(s2, one, {1, 1, 1}, {1, 0, 1}, 20), std::invalid_argument);
}
