#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/series.hpp"
#include "verlinde/series_json.hpp"

#include <random>

using namespace verlinde;

namespace {

TruncatedSeries q_series(std::vector<long> coeffs, long hi)
{
    TruncatedSeries s({TruncatedSeries::var("q", 0, hi)});
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (static_cast<long>(i) <= hi)
            s.set_coeff({static_cast<long>(i)}, YCoeff(coeffs[i]));
    return s;
}

YCoeff ypoly(int lo, std::vector<long> c)
{
    std::vector<ExactRational> v(c.begin(), c.end());
    return YCoeff(LaurentPoly::from_coeffs(lo, v));
}

YCoeff random_coeff(std::mt19937_64& rng, bool allow_den)
{
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<ExactRational> n;
    for (int i = 0; i < 3; ++i)
        n.push_back(ExactRational(d(rng), 1 + std::abs(d(rng))));
    LaurentPoly num = LaurentPoly::from_coeffs(d(rng) % 3, n);
    if (!allow_den || rng() % 2)
        return YCoeff(num);
    LaurentPoly den = LaurentPoly::from_coeffs(0, {ExactRational(1), ExactRational(-1)});
    return YCoeff(num, den);
}

TruncatedSeries random_series(std::mt19937_64& rng, bool laurent, bool invertible)
{
    long lo_s = laurent ? static_cast<long>(rng() % 5) - 2 : 0;
    long lo_q = 0;
    TruncatedSeries s({TruncatedSeries::var("s", lo_s, lo_s + 3), TruncatedSeries::var("q", lo_q, 3)});
    for (long i = lo_s; i <= lo_s + 3; ++i)
        for (long j = 0; j <= 3; ++j)
            if (rng() % 3 == 0)
                s.set_coeff({i, j}, random_coeff(rng, true));
    if (invertible) {
        YCoeff c = random_coeff(rng, false);
        if (c.is_zero())
            c = YCoeff(3L);
        s.set_coeff({lo_s, 0}, c);
    }
    return s;
}

} // namespace

TEST_CASE("laurent polynomial gcd and exact division")
{
    LaurentPoly a = LaurentPoly::from_coeffs(0, {1, -1});
    LaurentPoly b = LaurentPoly::from_coeffs(0, {1, 1});
    LaurentPoly p = a * b * b;
    CHECK(p.exact_div(b) == a * b);
    CHECK(LaurentPoly::gcd(p, a * a) == a.monic());
    CHECK_THROWS(p.exact_div(a * a));
    CHECK(p.reversed().reversed() == p);
}

TEST_CASE("ycoeff reduces fractions")
{
    LaurentPoly one_minus = LaurentPoly::from_coeffs(0, {1, -1});
    YCoeff f(one_minus * one_minus, one_minus);
    CHECK(f.is_laurent());
    CHECK(f == YCoeff(one_minus));
    YCoeff g = YCoeff(1L) / YCoeff(one_minus);
    CHECK(g * YCoeff(one_minus) == YCoeff(1L));
    CHECK(YCoeff::w_power(1) * YCoeff::w_power(-1) == YCoeff(1L));
    YCoeff sq;
    REQUIRE((YCoeff(4L) * YCoeff::w_power(2) * YCoeff(one_minus).pow(2)).root(2, sq));
    CHECK(sq == YCoeff(2L) * YCoeff::w_power(1) * YCoeff(one_minus));
}

TEST_CASE("difference of squares")
{
    TruncatedSeries a = q_series({1, 1}, kUnbounded);
    TruncatedSeries b = q_series({1, -1}, kUnbounded);
    CHECK(a * b == q_series({1, 0, -1}, kUnbounded));
}

TEST_CASE("products respect truncation windows")
{
    TruncatedSeries a = q_series({1, 1, 1}, 2);
    TruncatedSeries b = q_series({1, 1}, kUnbounded);
    TruncatedSeries p = a * b;
    CHECK(p == q_series({1, 2, 2}, 2));
    CHECK(p.var_at(0).hi == 2);
    CHECK_THROWS(p.coeff(3));
}

TEST_CASE("laurent monomials cancel")
{
    TruncatedSeries inv = TruncatedSeries::monomial({TruncatedSeries::var("s", -1, 5)}, {-1});
    TruncatedSeries s = TruncatedSeries::monomial({TruncatedSeries::var("s", 1, 5)}, {1});
    TruncatedSeries p = inv * s;
    CHECK(p.coeff(0) == YCoeff(1L));
    CHECK(p.terms().size() == 1);
    CHECK(p.var_at(0).lo == 0);
    CHECK(p.var_at(0).hi == 4);
}

TEST_CASE("geometric series inverse")
{
    TruncatedSeries inv = q_series({1, -1}, 6).invert();
    CHECK(inv == q_series({1, 1, 1, 1, 1, 1, 1}, 6));
}

TEST_CASE("inverse after factoring the lowest monomial")
{
    TruncatedSeries a({TruncatedSeries::var("s", 1, 4)});
    a.set_coeff({1}, YCoeff(2L));
    a.set_coeff({2}, YCoeff(1L));
    TruncatedSeries b = a.invert();
    CHECK(b.var_at(0).lo == -1);
    CHECK(b.var_at(0).hi == 2);
    CHECK(b.coeff(-1) == YCoeff(ExactRational(1, 2)));
    CHECK(b.coeff(0) == YCoeff(ExactRational(-1, 4)));
    CHECK(b.coeff(1) == YCoeff(ExactRational(1, 8)));
    CHECK(b.coeff(2) == YCoeff(ExactRational(-1, 16)));
}

TEST_CASE("inverse with y-rational coefficients")
{
    TruncatedSeries a({TruncatedSeries::var("s", 0, 6)});
    a.set_coeff({0}, ypoly(0, {1, 0, -1}));
    a.set_coeff({1}, ypoly(2, {2}));
    TruncatedSeries b = a.invert();
    TruncatedSeries p = a * b;
    CHECK(p == TruncatedSeries::constant({TruncatedSeries::var("s", 0, 6)}, YCoeff(1L)));
    CHECK_FALSE(b.coeff(1).is_laurent());
}

TEST_CASE("exp and log of simple series")
{
    TruncatedSeries q = TruncatedSeries::variable("q", 4);
    TruncatedSeries e = q.exp();
    CHECK(e.coeff(0) == YCoeff(1L));
    CHECK(e.coeff(2) == YCoeff(ExactRational(1, 2)));
    CHECK(e.coeff(4) == YCoeff(ExactRational(1, 24)));
    TruncatedSeries l = q_series({1, 1}, 4).log();
    CHECK(l.coeff(1) == YCoeff(1L));
    CHECK(l.coeff(2) == YCoeff(ExactRational(-1, 2)));
    CHECK(l.coeff(3) == YCoeff(ExactRational(1, 3)));
    CHECK(l.coeff(4) == YCoeff(ExactRational(-1, 4)));
}

TEST_CASE("exp of a linear form in a two-sided window")
{
    TruncatedSeries x = TruncatedSeries::monomial({TruncatedSeries::var("e", -3, 3)}, {1}, YCoeff(ExactRational(5, 3)));
    TruncatedSeries e = x.exp();
    CHECK(e.var_at(0).hi == 3);
    CHECK(e.terms().size() == 4);
    CHECK(e.coeff(3) == YCoeff(ExactRational(125, 162)));
}

TEST_CASE("rational powers")
{
    TruncatedSeries r = q_series({1, 1}, 3).pow_rational(ExactRational(1, 2));
    CHECK(r == q_series({0}, 3) + TruncatedSeries::constant({TruncatedSeries::var("q", 0, 3)}, YCoeff(1L)) +
                   TruncatedSeries::monomial({TruncatedSeries::var("q", 0, 3)}, {1}, YCoeff(ExactRational(1, 2))) +
                   TruncatedSeries::monomial({TruncatedSeries::var("q", 0, 3)}, {2}, YCoeff(ExactRational(-1, 8))) +
                   TruncatedSeries::monomial({TruncatedSeries::var("q", 0, 3)}, {3}, YCoeff(ExactRational(1, 16))));
    TruncatedSeries q2 = TruncatedSeries::monomial({TruncatedSeries::var("q", 0, kUnbounded)}, {2});
    TruncatedSeries rt = q2.pow_rational(ExactRational(1, 2));
    CHECK(rt.terms().size() == 1);
    CHECK(rt.coeff(1) == YCoeff(1L));
}

TEST_CASE("square root of 4 s^2 y u")
{
    TruncatedSeries u({TruncatedSeries::var("s", 0, 5)});
    u.set_coeff({0}, YCoeff(1L));
    u.set_coeff({1}, ypoly(0, {1, 0, 3}));
    u.set_coeff({3}, YCoeff(ExactRational(-2, 7)));
    TruncatedSeries a = u.shifted({2}, 2) * YCoeff(4L);
    TruncatedSeries r = a.pow_rational(ExactRational(1, 2));
    CHECK(r.var_at(0).lo == 1);
    CHECK(r.coeff(1) == YCoeff::w_power(1, 2));
    CHECK(r * r == a);
    TruncatedSeries expected = u.pow_rational(ExactRational(1, 2)).shifted({1}, 1) * YCoeff(2L);
    CHECK(r == expected);
}

TEST_CASE("monomial substitution")
{
    TruncatedSeries a = q_series({1, 1}, kUnbounded);
    MonomialImage img{YCoeff(2L), 0, {{"x", ExactRational(4), 1}}};
    TruncatedSeries b = a.substitute_monomial("q", img);
    REQUIRE(b.nvars() == 1);
    CHECK(b.var_at(0).name == "x");
    CHECK(b.coeff(0) == YCoeff(1L));
    CHECK(b.coeff(4) == YCoeff(2L));
    CHECK(b.terms().size() == 2);

    TruncatedSeries x2 = TruncatedSeries::monomial({TruncatedSeries::var("x", 0, 10)}, {2});
    TruncatedSeries c = x2.substitute_monomial("x", MonomialImage{YCoeff(1L), 1, {{"x", ExactRational(1), 1}}});
    CHECK(c.coeff(2) == YCoeff::w_power(2));
    CHECK(c.var_at(0).hi == 10);

    TruncatedSeries d = TruncatedSeries::constant({TruncatedSeries::var("x", 0, 3)}, ypoly(-1, {1, 0, 1}));
    CHECK(d.substitute_monomial("y", MonomialImage{YCoeff(1L), -2, {}}) == d);

    TruncatedSeries tq = q_series({1, 1, 1, 1}, 3);
    TruncatedSeries tx = tq.substitute_monomial("q", MonomialImage{YCoeff(1L), 0, {{"x", ExactRational(4), 1}}});
    CHECK(tx.var_at(0).hi == 15);
    CHECK_THROWS(TruncatedSeries::monomial({TruncatedSeries::var("q", 0, 4)}, {1})
                     .substitute_monomial("q", MonomialImage{YCoeff(1L), 0, {{"x", ExactRational(1, 3), 4}}}));
}

TEST_CASE("progressions by direct filtering")
{
    TruncatedSeries a = q_series({1, 1, 1, 1, 1}, kUnbounded);
    CHECK(a.extract_progression("q", 4, 0) == q_series({1, 0, 0, 0, 1}, kUnbounded));
    TruncatedSeries g = q_series({1, 0, -1}, 12).invert();
    TruncatedSeries r2 = g.extract_progression("q", 4, 2);
    CHECK(r2 == g - g.extract_progression("q", 4, 0));
    CHECK(r2.coeff(6) == YCoeff(1L));
    CHECK_THROWS(a.extract_progression("q", 0, 0));
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937_64 rng(20261016);
    for (int it = 0; it < 20; ++it) {
        TruncatedSeries a = random_series(rng, true, false);
        TruncatedSeries b = random_series(rng, true, false);
        TruncatedSeries c = random_series(rng, true, false);
        CHECK(TruncatedSeries::agree((a * b) * c, a * (b * c)));
        CHECK(TruncatedSeries::agree(a * (b + c), a * b + a * c));
        CHECK(TruncatedSeries::agree(a * b, b * a));
    }
}

TEST_CASE("inverse times series is one on 100 random inputs")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        TruncatedSeries a = random_series(rng, true, true);
        TruncatedSeries p = a * a.invert();
        TruncatedSeries one = TruncatedSeries::constant(p.vars(), YCoeff(1L));
        CHECK(TruncatedSeries::agree(p, one));
        CHECK(p.var_at(0).hi == 3);
        CHECK(p.var_at(1).hi == 3);
    }
}

TEST_CASE("exp log and power round trips")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        TruncatedSeries a = random_series(rng, false, false);
        a.set_coeff({0, 0}, YCoeff());
        TruncatedSeries back = a.exp().log();
        CHECK(TruncatedSeries::agree(back, a));
        TruncatedSeries u = a.exp();
        TruncatedSeries cube_root = u.pow_rational(ExactRational(1, 3));
        CHECK(TruncatedSeries::agree(cube_root.pow(3), u));
        TruncatedSeries pw = u.pow_rational(ExactRational(-5, 2));
        CHECK(TruncatedSeries::agree(pw.pow(2), u.pow(-5)));
    }
}

TEST_CASE("y inversion is an involution")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        TruncatedSeries a = random_series(rng, true, false);
        CHECK(a.y_inverted().y_inverted() == a);
    }
}

TEST_CASE("json round trip is exact")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 10; ++it) {
        TruncatedSeries a = random_series(rng, true, true);
        nlohmann::json j = series_to_json(a);
        TruncatedSeries b = series_from_json(nlohmann::json::parse(j.dump()));
        CHECK(a == b);
        CHECK(series_to_json(b).dump() == j.dump());
    }
}

TEST_CASE("errors are reported")
{
    CHECK_THROWS(TruncatedSeries({TruncatedSeries::var("q", 0, 3)}).invert());
    TruncatedSeries two({TruncatedSeries::var("s", 0, 3), TruncatedSeries::var("q", 0, 3)});
    two.set_coeff({1, 0}, YCoeff(1L));
    two.set_coeff({0, 1}, YCoeff(1L));
    CHECK_THROWS(two.invert());
    CHECK_THROWS(q_series({1, 1}, 3) * TruncatedSeries::variable("x", 3));
    CHECK_THROWS(q_series({1, 1}, 3).exp());
    CHECK_THROWS(q_series({2, 1}, 3).log());
}
