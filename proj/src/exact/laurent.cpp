#include "verlinde/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace verlinde {

LaurentPoly::LaurentPoly(const ExactRational& constant)
{
    ExactRational c = constant;
    c.canonicalize();
    if (c != 0)
        c_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(ExactRational(constant)) {}

LaurentPoly LaurentPoly::monomial(int w_exponent, const ExactRational& coeff)
{
    LaurentPoly p;
    ExactRational c = coeff;
    c.canonicalize();
    if (c != 0) {
        p.lo_ = w_exponent;
        p.c_.push_back(std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int lo, std::vector<ExactRational> coeffs)
{
    LaurentPoly p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    for (auto& c : p.c_)
        c.canonicalize();
    p.trim();
    return p;
}

void LaurentPoly::trim()
{
    size_t start = 0;
    while (start < c_.size() && c_[start] == 0)
        ++start;
    if (start == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t end = c_.size();
    while (end > start && c_[end - 1] == 0)
        --end;
    if (start > 0 || end < c_.size()) {
        c_ = std::vector<ExactRational>(c_.begin() + static_cast<long>(start), c_.begin() + static_cast<long>(end));
        lo_ += static_cast<int>(start);
    }
}

bool LaurentPoly::is_one() const
{
    return c_.size() == 1 && lo_ == 0 && c_[0] == 1;
}

bool LaurentPoly::is_constant() const
{
    return c_.empty() || (c_.size() == 1 && lo_ == 0);
}

bool LaurentPoly::is_monomial() const
{
    return c_.size() == 1;
}

ExactRational LaurentPoly::coeff(int e) const
{
    if (c_.empty() || e < lo_ || e > high())
        return 0;
    return c_[static_cast<size_t>(e - lo_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(high(), o.high());
    if (nlo < lo_ || nhi > high()) {
        std::vector<ExactRational> n(static_cast<size_t>(nhi - nlo + 1));
        for (size_t i = 0; i < c_.size(); ++i)
            n[static_cast<size_t>(lo_ - nlo) + i].swap(c_[i]);
        c_.swap(n);
        lo_ = nlo;
    }
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[static_cast<size_t>(o.lo_ - lo_) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const ExactRational& s)
{
    if (s == 0) {
        c_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    LaurentPoly r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ExactRational(0));
    mpq_class t;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0)
                continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r.c_[i + j] += t;
        }
    }
    r.trim();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.lo_ == b.lo_ && a.c_ == b.c_;
}

LaurentPoly LaurentPoly::shifted(int w_shift) const
{
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.lo_ += w_shift;
    return r;
}

LaurentPoly LaurentPoly::reversed() const
{
    LaurentPoly r;
    if (is_zero())
        return r;
    r.lo_ = -high();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

LaurentPoly LaurentPoly::sign_flipped() const
{
    LaurentPoly r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        int e = lo_ + static_cast<int>(i);
        if (e % 2 != 0)
            r.c_[i] = -r.c_[i];
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const
{
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

ExactRational LaurentPoly::eval(const ExactRational& w) const
{
    if (is_zero())
        return 0;
    ExactRational acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * w + c_[i];
    return acc * rational_pow(w, lo_);
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.low() < 0 || b.low() < 0)
        throw std::invalid_argument("divmod expects ordinary polynomials");
    int db = b.high();
    std::vector<ExactRational> rem(static_cast<size_t>(std::max(a.high(), 0) + 1));
    for (int e = a.low(); !a.is_zero() && e <= a.high(); ++e)
        rem[static_cast<size_t>(e)] = a.coeff(e);
    int da = a.is_zero() ? -1 : a.high();
    std::vector<ExactRational> quo(static_cast<size_t>(std::max(da - db + 1, 0)));
    ExactRational inv_lead = 1 / b.leading();
    mpq_class t;
    for (int e = da; e >= db; --e) {
        if (rem[static_cast<size_t>(e)] == 0)
            continue;
        ExactRational f = rem[static_cast<size_t>(e)] * inv_lead;
        quo[static_cast<size_t>(e - db)] = f;
        for (int k = b.low(); k <= db; ++k) {
            const ExactRational& bk = b.c_[static_cast<size_t>(k - b.lo_)];
            if (bk == 0)
                continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bk.get_mpq_t());
            rem[static_cast<size_t>(e - db + k)] -= t;
        }
    }
    q = from_coeffs(0, std::move(quo));
    r = from_coeffs(0, std::move(rem));
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero())
        return {};
    LaurentPoly a = stripped();
    LaurentPoly b = d.stripped();
    LaurentPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero())
        throw std::domain_error("inexact Laurent division");
    return q.shifted(lo_ - d.lo_);
}

LaurentPoly LaurentPoly::monic() const
{
    if (is_zero())
        return {};
    LaurentPoly r = *this;
    ExactRational inv = 1 / leading();
    r *= inv;
    return r;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a0, const LaurentPoly& b0)
{
    LaurentPoly a = a0.stripped();
    LaurentPoly b = b0.stripped();
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.high() < b.high())
        std::swap(a, b);
    while (!b.is_zero()) {
        if (b.high() == 0)
            return LaurentPoly(1L);
        LaurentPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

static std::string y_power(int w)
{
    if (w % 2 == 0)
        return std::to_string(w / 2);
    return "(" + std::to_string(w) + "/2)";
}

std::string LaurentPoly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= lo_; --e) {
        ExactRational c = coeff(e);
        if (c == 0)
            continue;
        bool neg = c < 0;
        ExactRational a = neg ? ExactRational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << "y";
        if (e != 2)
            os << "^" << y_power(e);
    }
    return os.str();
}

} // namespace verlinde
