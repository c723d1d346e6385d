#include "verlinde/equiv_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace verlinde {

namespace {

// beta + alpha z as an exact series
TruncatedSeries linear_factor(const WeightForm& w, long z_hi, long s_hi)
{
    TruncatedSeries f(zs_vars(z_hi, 0, s_hi));
    f.set_coeff({0, 0}, YCoeff(w.beta));
    if (z_hi >= 1)
        f.set_coeff({1, 0}, YCoeff(w.alpha));
    return f;
}

// g(s * lambda) = sum_k g_k s^k lambda^k for a function given by Taylor coefficients
TruncatedSeries compose(const std::vector<YCoeff>& g, const WeightForm& w, long s_hi)
{
    std::vector<SeriesVar> vars = zs_vars(s_hi, 0, s_hi);
    TruncatedSeries lam = linear_factor(w, s_hi, s_hi);
    TruncatedSeries power = TruncatedSeries::constant(vars, YCoeff(1L));
    TruncatedSeries out(vars);
    for (long k = 0; k <= s_hi && k < static_cast<long>(g.size()); ++k) {
        if (!g[static_cast<size_t>(k)].is_zero())
            out += power.shifted({0, k}) * g[static_cast<size_t>(k)];
        power = power * lam;
    }
    return out;
}

TruncatedSeries product_of_powers(const EquivChar& c, const EpsSpec& spec, long s_hi, const std::vector<YCoeff>& g)
{
    TruncatedSeries out = TruncatedSeries::constant(zs_vars(s_hi, 0, s_hi), YCoeff(1L));
    for (const auto& [e, m] : c.terms()) {
        WeightForm w = checked_weight_form(e, spec);
        TruncatedSeries f = compose(g, w, s_hi);
        out = out * f.pow(m);
    }
    return out;
}

} // namespace

std::vector<SeriesVar> zs_vars(long z_hi, long s_lo, long s_hi)
{
    return {TruncatedSeries::var("z", 0, z_hi), TruncatedSeries::var("s", s_lo, s_hi)};
}

std::vector<ExactRational> todd_coefficients(int n)
{
    // (1 - e^-w)/w = sum (-1)^k w^k/(k+1)!
    TruncatedSeries d({TruncatedSeries::var("w", 0, n)});
    ExactRational fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= (k + 1);
        d.set_coeff({k}, YCoeff(ExactRational(k % 2 == 0 ? 1 : -1) / fact));
    }
    TruncatedSeries inv = d.invert();
    std::vector<ExactRational> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(inv.coeff(k).rational_value());
    return out;
}

TruncatedSeries equiv_euler(const EquivChar& c, const EpsSpec& spec, long z_hi)
{
    TruncatedSeries num = TruncatedSeries::constant({TruncatedSeries::var("z", 0, kUnbounded), TruncatedSeries::var("s", 0, kUnbounded)}, YCoeff(1L));
    TruncatedSeries den = num;
    long s_power = 0;
    for (const auto& [e, m] : c.terms()) {
        WeightForm w = checked_weight_form(e, spec);
        if (w.alpha == 0 && w.beta == 0) {
            if (m > 0)
                return TruncatedSeries(zs_vars(z_hi, 0, kUnbounded));
            throw std::domain_error("zero weight in an Euler class denominator");
        }
        TruncatedSeries f = linear_factor(w, kUnbounded, kUnbounded);
        s_power += m;
        if (m > 0)
            num = num * f.pow(m);
        else
            den = den * f.pow(-m);
    }
    long z_low = kUnbounded;
    for (const auto& [e, v] : den.terms())
        z_low = std::min(z_low, e[0]);
    TruncatedSeries inv = den.truncated("z", z_hi + 2 * z_low).invert();
    return (num * inv).truncated("z", z_hi).shifted({0, s_power});
}

TruncatedSeries equiv_ch(const EquivChar& c, const EpsSpec& spec, long s_hi)
{
    std::vector<YCoeff> g;
    ExactRational f = 1;
    for (long k = 0; k <= s_hi; ++k) {
        if (k > 0)
            f /= k;
        g.push_back(YCoeff(f));
    }
    TruncatedSeries out(zs_vars(s_hi, 0, s_hi));
    for (const auto& [e, m] : c.terms())
        out += compose(g, checked_weight_form(e, spec), s_hi) * YCoeff(m);
    return out;
}

TruncatedSeries equiv_td(const EquivChar& c, const EpsSpec& spec, long s_hi)
{
    std::vector<YCoeff> g;
    for (const auto& b : todd_coefficients(static_cast<int>(s_hi)))
        g.push_back(YCoeff(b));
    return product_of_powers(c, spec, s_hi, g);
}

TruncatedSeries equiv_xy(const EquivChar& c, const EpsSpec& spec, long s_hi, int ysign)
{
    // (1 + y e^-w) * td(w)
    std::vector<ExactRational> td = todd_coefficients(static_cast<int>(s_hi));
    YCoeff y = YCoeff::w_power(2, ExactRational(ysign));
    std::vector<YCoeff> g(static_cast<size_t>(s_hi + 1));
    ExactRational f = 1;
    std::vector<ExactRational> em;
    for (long k = 0; k <= s_hi; ++k) {
        if (k > 0)
            f /= k;
        em.push_back(k % 2 == 0 ? f : ExactRational(-f));
    }
    for (long k = 0; k <= s_hi; ++k) {
        YCoeff acc = YCoeff(td[static_cast<size_t>(k)]);
        ExactRational conv = 0;
        for (long j = 0; j <= k; ++j)
            conv += em[static_cast<size_t>(j)] * td[static_cast<size_t>(k - j)];
        acc += y * YCoeff(conv);
        g[static_cast<size_t>(k)] = acc;
    }
    return product_of_powers(c, spec, s_hi, g);
}

TruncatedSeries equiv_chern_class(const EquivChar& c, long k, const EpsSpec& spec)
{
    if (k < 0)
        throw std::invalid_argument("negative Chern degree");
    std::vector<YCoeff> g = {YCoeff(1L), YCoeff(1L)};
    TruncatedSeries total = product_of_powers(c, spec, k, g);
    TruncatedSeries part(zs_vars(k, 0, kUnbounded));
    for (const auto& [e, v] : total.terms())
        if (e[1] == k)
            part.set_coeff(e, v);
    return part;
}

} // namespace verlinde
