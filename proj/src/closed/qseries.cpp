#include "verlinde/qseries.hpp"

#include <stdexcept>

namespace verlinde {

TruncatedSeries univariate(const std::string& var, long lo, long hi, int den)
{
    return TruncatedSeries({TruncatedSeries::var(var, lo, hi, den)});
}

TruncatedSeries univariate_monomial(const std::string& var, long grid, long width, const YCoeff& c, int den)
{
    TruncatedSeries r = univariate(var, grid, grid + width, den);
    r.set_coeff({grid}, c);
    return r;
}

ProductBuilder::ProductBuilder(std::string var, long hi, int den) : var_(std::move(var)), log_(univariate(var_, 0, hi, den))
{
    if (hi < 0)
        throw std::invalid_argument("negative product window");
}

void ProductBuilder::factor(long m, int w, const ExactRational& c, const ExactRational& e)
{
    if (m <= 0)
        throw std::invalid_argument("product factor needs a positive exponent");
    if (e == 0 || c == 0)
        return;
    long hi = log_.var_at(0).hi;
    ExactRational cl = 1;
    for (long l = 1; l * m <= hi; ++l) {
        cl *= c;
        log_.add_to({l * m}, YCoeff::w_power(static_cast<int>(w * l), -e * cl / l));
    }
}

void ProductBuilder::family(long m, int w, const ExactRational& c, const ExactRational& e0, const ExactRational& e1,
                            const ExactRational& e2, long step, long offset)
{
    // factor k = step n + offset is (1 - c var^(m k) y^(w/2))^(e0 + e1 k + e2 k^2)
    long hi = log_.var_at(0).hi;
    for (long n = 1;; ++n) {
        long k = step * n + offset;
        if (k <= 0)
            continue;
        if (k * m > hi)
            break;
        factor(k * m, w, c, e0 + e1 * k + e2 * k * k);
    }
}

void ProductBuilder::absorb(const ProductBuilder& o, const ExactRational& e)
{
    log_ += o.log_ * YCoeff(e);
}

TruncatedSeries ProductBuilder::build() const
{
    return log_.exp();
}

TruncatedSeries theta3(long hi, long scale, int sign, int w_step)
{
    if (scale <= 0)
        throw std::invalid_argument("theta scale must be positive");
    TruncatedSeries r = univariate("x", 0, hi);
    for (long n = 0; scale * n * n <= hi; ++n) {
        ExactRational s = (sign < 0 && n % 2 != 0) ? -1 : 1;
        if (n == 0) {
            r.add_to({0}, YCoeff(1L));
            continue;
        }
        r.add_to({scale * n * n}, YCoeff::w_power(static_cast<int>(w_step * n), s) + YCoeff::w_power(static_cast<int>(-w_step * n), s));
    }
    return r;
}

TruncatedSeries theta2(long hi, long scale)
{
    if (scale <= 0)
        throw std::invalid_argument("theta scale must be positive");
    // n = (2k+1)/2: scale n^2 = scale (2k+1)^2 / 4, y^n = w^(2k+1)
    int den = scale % 4 == 0 ? 1 : (scale % 2 == 0 ? 2 : 4);
    TruncatedSeries r = univariate("x", 0, hi, den);
    for (long k = 0;; ++k) {
        long odd = 2 * k + 1;
        long grid = scale * odd * odd * den / 4;
        if (grid > hi)
            break;
        r.add_to({grid}, YCoeff::w_power(static_cast<int>(odd)) + YCoeff::w_power(static_cast<int>(-odd)));
    }
    return r;
}

TruncatedSeries eta_bar(long hi, long scale)
{
    ProductBuilder b("x", hi);
    b.family(scale, 0, 1, 1);
    return b.build();
}

TruncatedSeries eisenstein_g2_bar(long hi)
{
    TruncatedSeries r = univariate("x", 0, hi);
    for (long d = 1; d <= hi; ++d) {
        long s = 0;
        for (long e = 1; e <= d; ++e)
            if (d % e == 0)
                s += e;
        r.set_coeff({d}, YCoeff(s));
    }
    return r;
}

TruncatedSeries eisenstein_g2(long hi)
{
    TruncatedSeries r = eisenstein_g2_bar(hi);
    r.set_coeff({0}, YCoeff(ExactRational(-1, 24)));
    return r;
}

TruncatedSeries q_derivative(const TruncatedSeries& f, const std::string& var)
{
    return f.euler_derivative(var);
}

TruncatedSeries rescale(const TruncatedSeries& f, const std::string& var, long k)
{
    if (k <= 0)
        throw std::invalid_argument("rescale factor must be positive");
    int iv = f.index_of(var);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + var);
    MonomialImage img;
    img.factors.push_back({var, ExactRational(k), f.var_at(static_cast<size_t>(iv)).den});
    return f.substitute_monomial(var, img);
}

TruncatedSeries negate_variable(const TruncatedSeries& f, const std::string& var)
{
    int iv = f.index_of(var);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + var);
    if (f.var_at(static_cast<size_t>(iv)).den != 1)
        throw std::invalid_argument("sign change needs an integral exponent grid");
    TruncatedSeries r(f.vars());
    for (const auto& [e, c] : f.terms())
        r.set_coeff(e, e[static_cast<size_t>(iv)] % 2 != 0 ? -c : c);
    return r;
}

} // namespace verlinde
