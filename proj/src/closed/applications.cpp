#include "verlinde/applications.hpp"

#include "verlinde/qseries.hpp"

#include <stdexcept>

namespace verlinde {

namespace {

TruncatedSeries one_plus(long m, long c, long hi)
{
    TruncatedSeries r = univariate("x", 0, hi);
    r.set_coeff({0}, YCoeff(1L));
    if (m <= hi)
        r.add_to({m}, YCoeff(c));
    return r;
}

long mod4(long v)
{
    return ((v % 4) + 4) % 4;
}

} // namespace

TruncatedSeries prop1_rhs(const SurfaceLattice& lat, const LatticeVec& L, long order)
{
    long e = lat.dot(lat.K, L - lat.K);
    TruncatedSeries r = one_plus(1, 1, order).pow(e) * one_plus(2, -1, order).pow(-lat.chi(L)) *
                        YCoeff(rational_pow(ExactRational(2), 3 - lat.chi_O + lat.K2()));
    return r.truncated("x", order);
}

long vd_residue(const SurfaceLattice& lat, const LatticeVec& c1)
{
    return mod4(-lat.square(c1) - 3 * lat.chi_O);
}

TruncatedSeries gaussian_progression(const TruncatedSeries& f, long m)
{
    // i^p as (re, im)
    auto ipow = [](long p) -> std::pair<long, long> {
        switch (mod4(p)) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
        }
    };
    TruncatedSeries r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_rational())
            throw std::invalid_argument("gaussian progression needs rational coefficients");
        ExactRational re = 0, im = 0;
        for (long k = 0; k < 4; ++k) {
            auto [a, b] = ipow(k * m + k * e[0]);
            re += ExactRational(a, 4) * c.rational_value();
            im += ExactRational(b, 4) * c.rational_value();
        }
        if (im != 0)
            throw std::logic_error("imaginary part in a progression average");
        if (re != 0)
            r.set_coeff(e, YCoeff(re));
    }
    return r;
}

TruncatedSeries disconnected_rhs(const SurfaceLattice& lat, const std::vector<CurveComponent>& curves, const LatticeVec& L,
                                 const LatticeVec& c1, long order)
{
    LatticeVec sum = lat.zero();
    for (const auto& c : curves) {
        if (c.cls.size() != lat.rank())
            throw std::invalid_argument("curve class has the wrong length");
        sum = sum + c.cls;
    }
    if (curves.empty() || sum != lat.K)
        throw std::invalid_argument("canonical components do not add up to K");
    TruncatedSeries r = one_plus(2, -1, order).pow(-lat.chi(L)) *
                        YCoeff(rational_pow(ExactRational(2), 2 - lat.chi_O + lat.K2()));
    for (const auto& c : curves) {
        long chi_c = lat.dot(c.cls, L - c.cls);
        long sign = (lat.dot(c.cls, c1) + c.h0_normal) % 2 == 0 ? 1 : -1;
        r *= one_plus(1, 1, order).pow(chi_c) + one_plus(1, -1, order).pow(chi_c) * YCoeff(sign);
    }
    return r.truncated("x", order);
}

TruncatedSeries blowup_factor(long ell, long k, long order)
{
    long sign = k % 2 == 0 ? 1 : -1;
    TruncatedSeries bracket = one_plus(1, 1, order).pow(ell + 1) + one_plus(1, -1, order).pow(ell + 1) * YCoeff(sign);
    TruncatedSeries r = one_plus(2, -1, order).pow((ell + 1) * ell / 2) * bracket * YCoeff(ExactRational(1, 2));
    return r.truncated("x", order);
}

LatticeVec blowup_class(const LatticeVec& v, long m)
{
    LatticeVec r = v;
    r.push_back(-m);
    return r;
}

} // namespace verlinde
