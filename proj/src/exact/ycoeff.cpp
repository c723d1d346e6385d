#include "verlinde/ycoeff.hpp"

#include <stdexcept>

namespace verlinde {

namespace {

// q-th root of a Laurent polynomial, positive branch on the lowest coefficient.
bool laurent_root(const LaurentPoly& p, unsigned long q, LaurentPoly& out)
{
    if (p.is_zero()) {
        out = LaurentPoly();
        return true;
    }
    if (q == 1) {
        out = p;
        return true;
    }
    int lo = p.low();
    if (lo % static_cast<int>(q) != 0)
        return false;
    int span = p.high() - lo;
    if (span % static_cast<int>(q) != 0)
        return false;
    ExactRational c0;
    if (!rational_root(p.trailing(), q, c0))
        return false;
    if (c0 < 0)
        c0 = -c0;
    if (q % 2 == 1 && p.trailing() < 0)
        c0 = -c0;
    std::vector<ExactRational> t(static_cast<size_t>(span + 1));
    ExactRational inv = 1 / p.trailing();
    for (int e = 0; e <= span; ++e)
        t[static_cast<size_t>(e)] = p.coeff(lo + e) * inv;
    int deg = span / static_cast<int>(q);
    ExactRational r = ExactRational(1, static_cast<long>(q));
    std::vector<ExactRational> b(static_cast<size_t>(deg + 1));
    b[0] = 1;
    for (int e = 1; e <= deg; ++e) {
        ExactRational acc = 0;
        for (int f = 1; f <= e && f <= span; ++f) {
            if (t[static_cast<size_t>(f)] == 0)
                continue;
            acc += t[static_cast<size_t>(f)] * b[static_cast<size_t>(e - f)] * (r * f - (e - f));
        }
        b[static_cast<size_t>(e)] = acc / e;
    }
    LaurentPoly cand = LaurentPoly::from_coeffs(lo / static_cast<int>(q), std::move(b)) * c0;
    if (cand.pow(static_cast<unsigned>(q)) != p)
        return false;
    out = cand;
    return true;
}

} // namespace

YCoeff::YCoeff(const ExactRational& c) : num_(c) {}

YCoeff::YCoeff(long c) : num_(c) {}

YCoeff::YCoeff(const LaurentPoly& num) : num_(num) {}

YCoeff::YCoeff(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den)
{
    normalize();
}

YCoeff YCoeff::w_power(int e, const ExactRational& c)
{
    return YCoeff(LaurentPoly::monomial(e, c));
}

void YCoeff::normalize()
{
    if (den_.is_zero())
        throw std::domain_error("YCoeff with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    int shift = den_.low();
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    if (den_.is_constant()) {
        num_ *= 1 / den_.trailing();
        den_ = LaurentPoly(1L);
        return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
        int s2 = den_.low();
        if (s2 != 0) {
            num_ = num_.shifted(-s2);
            den_ = den_.shifted(-s2);
        }
    }
    ExactRational lead = den_.leading();
    if (lead != 1) {
        ExactRational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_one())
        den_ = LaurentPoly(1L);
}

ExactRational YCoeff::rational_value() const
{
    if (!is_rational())
        throw std::domain_error("coefficient depends on y: " + str());
    return num_.coeff(0);
}

YCoeff& YCoeff::operator+=(const YCoeff& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one())
            normalize();
        else if (num_.is_zero())
            den_ = LaurentPoly(1L);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

YCoeff& YCoeff::operator-=(const YCoeff& o)
{
    return *this += -o;
}

YCoeff& YCoeff::operator*=(const YCoeff& o)
{
    if (is_zero())
        return *this;
    if (o.is_zero()) {
        *this = YCoeff();
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

YCoeff& YCoeff::operator/=(const YCoeff& o)
{
    return *this *= o.inverse();
}

YCoeff YCoeff::operator-() const
{
    YCoeff r = *this;
    r.num_ = -r.num_;
    return r;
}

YCoeff YCoeff::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero coefficient");
    if (num_.is_monomial() && den_.is_one()) {
        YCoeff r;
        r.num_ = LaurentPoly::monomial(-num_.low(), 1 / num_.trailing());
        return r;
    }
    return YCoeff(den_, num_);
}

YCoeff YCoeff::pow(long n) const
{
    if (n < 0)
        return inverse().pow(-n);
    YCoeff result(1L);
    YCoeff base = *this;
    while (n) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

bool YCoeff::root(unsigned long q, YCoeff& out) const
{
    LaurentPoly rn, rd;
    if (!laurent_root(num_, q, rn))
        return false;
    if (!laurent_root(den_, q, rd))
        return false;
    out = YCoeff(rn, rd);
    return true;
}

YCoeff YCoeff::pow(const ExactRational& r) const
{
    ExactRational rr = r;
    rr.canonicalize();
    long p = rr.get_num().get_si();
    unsigned long q = rr.get_den().get_ui();
    YCoeff base;
    if (!root(q, base))
        throw std::domain_error("no exact root of order " + std::to_string(q) + " for " + str());
    return base.pow(p);
}

YCoeff YCoeff::y_inverted() const
{
    return YCoeff(num_.reversed(), den_.reversed());
}

YCoeff YCoeff::shifted(int e) const
{
    YCoeff r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
}

ExactRational YCoeff::at_y_zero() const
{
    if (is_zero())
        return 0;
    if (num_.low() < 0)
        throw std::domain_error("pole at y = 0 in " + str());
    return num_.coeff(0) / den_.coeff(0);
}

ExactRational YCoeff::eval_w(const ExactRational& w) const
{
    ExactRational d = den_.eval(w);
    if (d == 0)
        throw std::domain_error("pole at evaluation point in " + str());
    return num_.eval(w) / d;
}

std::string YCoeff::str() const
{
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace verlinde
