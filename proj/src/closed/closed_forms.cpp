#include "verlinde/closed_forms.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace verlinde {

namespace {

ExactRational two_pow(long e)
{
    return rational_pow(ExactRational(2), e);
}

long parity_sign(long e)
{
    return e % 2 == 0 ? 1 : -1;
}

// Restricts to [.., order] and checks the window reaches it.
TruncatedSeries fit(const TruncatedSeries& f, const std::string& var, long order)
{
    int iv = f.index_of(var);
    if (f.var_at(static_cast<size_t>(iv)).hi < order)
        throw std::logic_error("series window ends at " + std::to_string(f.var_at(static_cast<size_t>(iv)).hi) +
                               " below the requested order " + std::to_string(order));
    return f.truncated(var, order);
}

TruncatedSeries renamed(const TruncatedSeries& f, const std::string& name)
{
    SeriesVar v = f.var_at(0);
    v.name = name;
    TruncatedSeries r({v});
    for (const auto& [e, c] : f.terms())
        r.set_coeff(e, c);
    return r;
}

// 1 + c x^m on [0, hi]
TruncatedSeries binomial_series(long m, long c, long hi)
{
    TruncatedSeries r = univariate("x", 0, hi);
    r.set_coeff({0}, YCoeff(1L));
    if (m <= hi)
        r.add_to({m}, YCoeff(c));
    return r;
}

YCoeff w_plus_inverse()
{
    return YCoeff(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
}

void check_lengths(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1)
{
    if (L.size() != lat.rank() || c1.size() != lat.rank())
        throw std::invalid_argument("class vectors must have the lattice rank " + std::to_string(lat.rank()));
}

// theta_2(q, y) q^(-1/4) = sum_k q^(k^2 + k) y^(k + 1/2) on an integral grid
TruncatedSeries theta2_reduced(long hi)
{
    TruncatedSeries t = theta2(4 * hi + 1, 1).shifted({-1});
    TruncatedSeries r = univariate("x", 0, hi);
    for (const auto& [e, c] : t.terms()) {
        if (e[0] % 4 != 0)
            throw std::logic_error("theta_2 exponent off the shifted grid");
        if (e[0] / 4 <= hi)
            r.set_coeff({e[0] / 4}, c);
    }
    return r;
}

} // namespace

TruncatedSeries conj1_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order)
{
    check_lengths(lat, L, c1);
    long hi = order;
    TruncatedSeries one_plus = binomial_series(1, 1, hi);
    TruncatedSeries one_minus = binomial_series(1, -1, hi);
    TruncatedSeries one_minus_sq = binomial_series(2, -1, hi);
    LatticeVec LmK = L - lat.K;
    TruncatedSeries sum = univariate("x", 0, hi);
    for (const auto& sw : lat.sw) {
        const LatticeVec& a = sw.cls;
        long sign = parity_sign(lat.dot(a, c1));
        sum += one_plus.pow(lat.dot(lat.K - a, LmK)) * one_minus.pow(lat.dot(a, LmK)) * YCoeff(sign * sw.value);
    }
    TruncatedSeries r = sum * one_minus_sq.pow(-lat.chi(L)) * YCoeff(two_pow(2 - lat.chi_O + lat.K2()));
    return fit(r, "x", order);
}

TruncatedSeries conj2_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order)
{
    check_lengths(lat, L, c1);
    long hi = order;
    long chi = lat.chi_O;
    long K2 = lat.K2();
    long LK = lat.dot(L, lat.K);
    ExactRational L2 = lat.square(L);

    ProductBuilder b("x", hi);
    b.family(2, 0, 1, -10 * chi);
    b.family(2, 2, 1, -chi);
    b.family(2, -2, 1, -chi);
    b.family(4, 0, 1, 2 * K2);
    b.family(2, 0, 1, 0, 0, L2);
    b.family(2, 2, 1, 0, 0, -L2 / 2);
    b.family(2, -2, 1, 0, 0, -L2 / 2);
    b.family(2, -2, 1, 0, LK);
    b.family(2, 2, 1, 0, -LK);
    TruncatedSeries t3 = theta3(hi, 1, 1, 1);
    TruncatedSeries base = b.build() * t3.pow(-K2) * YCoeff(4 * two_pow(K2 - chi));

    TruncatedSeries ratio = t3 * theta3(hi, 1, -1, 1).invert();
    TruncatedSeries sum = univariate("x", 0, hi);
    for (const auto& sw : lat.sw) {
        const LatticeVec& a = sw.cls;
        ExactRational E(lat.dot(L, lat.K - 2 * a), 2);
        ProductBuilder pa("x", hi);
        pa.family(1, 1, 1, 0, E, 0, 2, -1);
        pa.family(1, -1, -1, 0, E, 0, 2, -1);
        pa.family(1, -1, 1, 0, -E, 0, 2, -1);
        pa.family(1, 1, -1, 0, -E, 0, 2, -1);
        long sign = parity_sign(lat.dot(c1, a));
        sum += ratio.pow(lat.dot(a, lat.K)) * pa.build() * YCoeff(sign * sw.value);
    }
    return fit(base * sum, "x", order);
}

TruncatedSeries conj3_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order)
{
    check_lengths(lat, L, c1);
    long chi = lat.chi_O;
    long K2 = lat.K2();
    long LK = lat.dot(L, lat.K);
    ExactRational L2 = lat.square(L);
    long min_aK = 0;
    for (const auto& sw : lat.sw)
        min_aK = std::min(min_aK, lat.dot(sw.cls, lat.K));
    long margin = 2 * (std::max(0L, 3 * chi) + std::abs(K2) - min_aK) + 4;
    long hi = std::max(order, 0L) + margin;

    ProductBuilder b("x", hi);
    b.family(8, 0, 1, -10 * chi);
    b.family(8, 4, 1, -chi);
    b.family(8, -4, 1, -chi);
    b.family(4, 0, 1, 2 * K2);
    b.family(8, 0, 1, 0, 0, 4 * L2);
    b.family(8, 4, 1, 0, 0, -2 * L2);
    b.family(8, -4, 1, 0, 0, -2 * L2);
    b.family(4, -2, 1, 0, 2 * LK);
    b.family(4, 2, 1, 0, -2 * LK);
    b.family(4, -2, -1, 0, LK);
    b.family(4, 2, -1, 0, -LK);
    TruncatedSeries t2 = theta2(hi, 4);
    TruncatedSeries base = b.build() * t2.pow(-K2);

    TruncatedSeries ratio = t2 * theta3(hi, 4, 1, 2).invert();
    YCoeff wpw = w_plus_inverse();
    std::optional<TruncatedSeries> sum;
    for (const auto& sw : lat.sw) {
        const LatticeVec& a = sw.cls;
        if (delta(c1, lat.K - a) == 0)
            continue;
        long aL = lat.dot(a, L);
        long LKa = lat.dot(L, lat.K - a);
        ProductBuilder pa("x", hi);
        pa.family(4, -2, -1, 0, 2 * aL, 0, 2, -1);
        pa.family(4, 2, -1, 0, -2 * aL, 0, 2, -1);
        pa.family(8, -2, -1, 0, 4 * LKa);
        pa.family(8, 2, -1, 0, -4 * LKa);
        // k_a = x^(-3 chi) (y^(1/2) + y^(-1/2))^(-chi) y^(L(a-K)/2)
        YCoeff ka = wpw.pow(-chi).shifted(static_cast<int>(-LKa)) * YCoeff(sw.value);
        TruncatedSeries term = ratio.pow(lat.dot(a, lat.K)) * pa.build() * ka;
        term = term.shifted({-3 * chi});
        if (sum)
            *sum += term;
        else
            sum = std::move(term);
    }
    if (!sum)
        return univariate("x", 0, order);
    return fit(base * *sum, "x", order);
}

YCoeff minus_x_coefficient(const TruncatedSeries& f, long vd)
{
    if (f.var_at(0).hi < vd)
        throw std::out_of_range("series known to x^" + std::to_string(f.var_at(0).hi) + " cannot give vd " + std::to_string(vd));
    YCoeff c = f.coeff(vd);
    return vd % 2 == 0 ? c : -c;
}

TruncatedSeries donaldson_limit(const TruncatedSeries& conj2)
{
    MonomialImage img;
    img.y_w = 1;
    img.factors.push_back({"x", ExactRational(1), 1});
    return conj2.substitute_monomial("x", img).at_y_zero();
}

UniversalSeriesC closed_universal_C(long q_order)
{
    long hi = q_order;
    UniversalSeriesC out;
    out.q_order = q_order;
    out.source = "closed";
    YCoeff wpw = w_plus_inverse();

    ProductBuilder c1("q", hi);
    c1.family(2, 0, 1, -10);
    c1.family(2, 4, 1, -1);
    c1.family(2, -4, 1, -1);
    out.C[0] = c1.build();

    TruncatedSeries t2 = theta2_reduced(hi);
    out.C[1] = renamed(eta_bar(hi).pow(2) * t2.invert() * wpw, "q");

    ProductBuilder c3("q", hi);
    c3.family(2, 0, 1, 0, 0, 4);
    c3.family(2, 4, 1, 0, 0, -2);
    c3.family(2, -4, 1, 0, 0, -2);
    out.C[2] = c3.build();

    ProductBuilder c4("q", hi);
    c4.family(1, -2, 1, 0, 1);
    c4.family(1, 2, 1, 0, -1);
    c4.family(2, -4, 1, 0, 1);
    c4.family(2, 4, 1, 0, -1);
    c4.family(2, -2, -1, 0, 4);
    c4.family(2, 2, -1, 0, -4);
    out.C[3] = c4.build();

    out.C[4] = renamed(t2 * theta3(hi, 1, 1, 2).invert() * wpw.inverse(), "q");

    ProductBuilder c6("q", hi);
    c6.family(1, -2, -1, 0, 2, 0, 2, -1);
    c6.family(1, 2, -1, 0, -2, 0, 2, -1);
    c6.family(1, -2, 1, 0, 2, 0, 2, 0);
    c6.family(1, 2, 1, 0, -2, 0, 2, 0);
    c6.family(4, 4, 1, 0, 4);
    c6.family(4, -4, 1, 0, -4);
    out.C[5] = c6.build();
    for (auto& c : out.C)
        c = fit(c, "q", q_order);
    return out;
}

YCoeff thm1_rhs(const UniversalSeriesC& C, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long vd)
{
    check_lengths(lat, L, c1);
    long chi = lat.chi_O;
    long K2 = lat.K2();
    YCoeff wpw = w_plus_inverse();
    TruncatedSeries common = C.C[0].pow(chi) * C.C[1].pow(K2) * C.C[2].pow(lat.square(L)) * C.C[3].pow(lat.dot(L, lat.K));
    YCoeff total;
    for (const auto& sw : lat.sw) {
        const LatticeVec& a = sw.cls;
        if (delta(c1, lat.K - a) == 0)
            continue;
        long aK = lat.dot(a, lat.K);
        // l_a = x^(aK - K^2 - 3 chi) (y^(1/2) + y^(-1/2))^(aK - K^2 - chi) y^(L(a-K)/2)
        long xv = aK - K2 - 3 * chi;
        long rest = vd - xv;
        if (rest < 0 || rest % 4 != 0)
            continue;
        long j = rest / 4;
        if (j > C.q_order)
            throw std::out_of_range("monopole series known to q^" + std::to_string(C.q_order) + " cannot give vd " +
                                    std::to_string(vd) + " (needs q^" + std::to_string(j) + ")");
        TruncatedSeries f = common * C.C[4].pow(aK) * C.C[5].pow(lat.dot(a, L));
        YCoeff la = wpw.pow(aK - K2 - chi).shifted(static_cast<int>(lat.dot(L, a - lat.K)));
        total += f.coeff(j) * la * YCoeff(sw.value);
    }
    return vd % 2 == 0 ? total : -total;
}

TruncatedSeries twisted_chiy_product(long chi_O, long K2, const ExactRational& L2, const ExactRational& LK, long q_order,
                                     long q_step, long y_scale)
{
    if (q_step <= 0 || y_scale <= 0)
        throw std::invalid_argument("substitution exponents must be positive");
    int w = static_cast<int>(2 * y_scale);
    ProductBuilder b("q", q_order);
    b.family(q_step, 0, 1, -10 * chi_O);
    b.family(q_step, w, 1, -chi_O);
    b.family(q_step, -w, 1, -chi_O);
    b.family(q_step, 0, 1, K2);
    b.family(q_step, 0, 1, 0, 0, L2);
    b.family(q_step, w, 1, 0, 0, -L2 / 2);
    b.family(q_step, -w, 1, 0, 0, -L2 / 2);
    b.family(q_step, -w, 1, 0, LK / 2);
    b.family(q_step, w, 1, 0, -LK / 2);
    return b.build();
}

TruncatedSeries k3_diagonal_series(const ExactRational& L2, long q_order)
{
    // sum y^(-2n) chi(S^[n], Lambda_{-y^2} Omega (x) mu(-2L)) q^(2n): chi = 2, K = 0, (2L)^2 = 4 L^2
    return twisted_chiy_product(2, 0, 4 * L2, 0, q_order, 2, 2);
}

TruncatedSeries thm2_C1(long q_order)
{
    return k3_diagonal_series(0, q_order).pow_rational(ExactRational(1, 2));
}

TruncatedSeries thm2_C3(long q_order)
{
    TruncatedSeries ratio = k3_diagonal_series(2, q_order) * k3_diagonal_series(0, q_order).invert();
    return ratio.pow_rational(ExactRational(1, 2));
}

HigherRankSeries higher_rank_series(long r, const ExactRational& L2, long q_order)
{
    if (r < 2)
        throw std::invalid_argument("rank must be at least 2");
    HigherRankSeries out;
    out.rank = r;
    int w = static_cast<int>(2 * r);
    ProductBuilder c1("q", q_order);
    c1.family(r, 0, 1, -10);
    c1.family(r, w, 1, -1);
    c1.family(r, -w, 1, -1);
    out.C1 = c1.build();
    ExactRational e(r * r, 2);
    ProductBuilder c3("q", q_order);
    c3.family(r, 0, 1, 0, 0, 2 * e);
    c3.family(r, w, 1, 0, 0, -e);
    c3.family(r, -w, 1, 0, 0, -e);
    out.C3 = c3.build();
    ProductBuilder k3("q", q_order);
    k3.family(1, 0, 1, -20);
    k3.family(1, 2, 1, -2);
    k3.family(1, -2, 1, -2);
    k3.family(1, 0, 1, 0, 0, L2);
    k3.family(1, 2, 1, 0, 0, -L2 / 2);
    k3.family(1, -2, 1, 0, 0, -L2 / 2);
    out.k3_instanton = k3.build();
    return out;
}

TruncatedSeries gn_rhs(const SurfaceLattice& lat, const LatticeVec& L, const ExactRational& lambda, const LatticeVec& c1,
                       long order)
{
    check_lengths(lat, L, c1);
    long hi = order;
    long chi = lat.chi_O;
    long K2 = lat.K2();
    ProductBuilder b("x", hi);
    b.family(2, 0, 1, -12 * chi);
    b.family(4, 0, 1, 2 * K2);
    TruncatedSeries t3 = theta3(hi, 1, 1, 0);
    TruncatedSeries dg2 = fit(rescale(q_derivative(eisenstein_g2(hi)), "x", 2), "x", hi);
    TruncatedSeries g2b = fit(rescale(eisenstein_g2_bar(hi), "x", 2), "x", hi);
    TruncatedSeries g2 = eisenstein_g2(hi);
    TruncatedSeries g2_odd = g2 - negate_variable(g2, "x");
    ExactRational lL2 = lambda * lambda * lat.square(L);
    ExactRational lLK = lambda * lat.dot(L, lat.K);
    TruncatedSeries expo = dg2 * YCoeff(lL2 / 2) - g2b * YCoeff(2 * lLK);
    TruncatedSeries base = b.build() * t3.pow(-K2) * expo.exp() * YCoeff(4 * two_pow(K2 - chi));

    TruncatedSeries ratio = t3 * theta3(hi, 1, -1, 0).invert();
    TruncatedSeries sum = univariate("x", 0, hi);
    for (const auto& sw : lat.sw) {
        const LatticeVec& a = sw.cls;
        ExactRational e = lambda * lat.dot(L, lat.K - 2 * a) / 2;
        long sign = parity_sign(lat.dot(c1, a));
        sum += ratio.pow(lat.dot(a, lat.K)) * (g2_odd * YCoeff(e)).exp() * YCoeff(sign * sw.value);
    }
    return fit(base * sum, "x", order);
}

TruncatedSeries limit_at_y_one(const TruncatedSeries& f, int power)
{
    LaurentPoly d = (LaurentPoly::monomial(-1) - LaurentPoly::monomial(1)).pow(static_cast<unsigned>(power));
    TruncatedSeries r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_laurent())
            throw std::domain_error("coefficient " + c.str() + " is not a Laurent polynomial");
        r.set_coeff(e, YCoeff(c.num().exact_div(d).eval(ExactRational(1))));
    }
    return r;
}

LimitIdentityReport limit_identities_check(long order)
{
    LimitIdentityReport rep;
    rep.order = order;

    TruncatedSeries lhs1 = fit(rescale(q_derivative(eisenstein_g2(order)), "x", 2), "x", order);
    ProductBuilder b1("x", order);
    b1.family(2, 0, 1, 0, 0, 2);
    b1.family(2, 2, 1, 0, 0, -1);
    b1.family(2, -2, 1, 0, 0, -1);
    rep.dg2 = lhs1 == limit_at_y_one(b1.log(), 2);

    TruncatedSeries lhs2 = fit(rescale(eisenstein_g2_bar(order), "x", 2), "x", order);
    ProductBuilder b2("x", order);
    b2.family(2, -2, 1, 0, 1);
    b2.family(2, 2, 1, 0, -1);
    rep.g2_bar = lhs2 == limit_at_y_one(b2.log(), 1) * YCoeff(ExactRational(-1, 2));

    TruncatedSeries g2 = eisenstein_g2(order);
    TruncatedSeries lhs3 = g2 - negate_variable(g2, "x");
    ProductBuilder b3("x", order);
    b3.family(1, 1, 1, 0, 1, 0, 2, -1);
    b3.family(1, -1, -1, 0, 1, 0, 2, -1);
    b3.family(1, -1, 1, 0, -1, 0, 2, -1);
    b3.family(1, 1, -1, 0, -1, 0, 2, -1);
    rep.g2_odd = lhs3 == limit_at_y_one(b3.log(), 1);
    return rep;
}

} // namespace verlinde
