#ifndef VERLINDE_YCOEFF_HPP
#define VERLINDE_YCOEFF_HPP

#include "verlinde/laurent.hpp"

#include <string>

namespace verlinde {

// Element of Q(y^(1/2)) stored as num/den with w = y^(1/2).
// Canonical form: den is an ordinary monic polynomial with den(0) != 0,
// gcd(num, den) = 1 (up to powers of w, which live in num).
class YCoeff {
public:
    YCoeff() = default;
    YCoeff(const ExactRational& c);
    YCoeff(long c);
    YCoeff(const LaurentPoly& num);
    YCoeff(const LaurentPoly& num, const LaurentPoly& den);

    // w^e = y^(e/2)
    static YCoeff w_power(int e, const ExactRational& c = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    ExactRational rational_value() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    YCoeff& operator+=(const YCoeff& o);
    YCoeff& operator-=(const YCoeff& o);
    YCoeff& operator*=(const YCoeff& o);
    YCoeff& operator/=(const YCoeff& o);
    YCoeff operator-() const;

    friend YCoeff operator+(YCoeff a, const YCoeff& b) { return a += b; }
    friend YCoeff operator-(YCoeff a, const YCoeff& b) { return a -= b; }
    friend YCoeff operator*(YCoeff a, const YCoeff& b) { return a *= b; }
    friend YCoeff operator/(YCoeff a, const YCoeff& b) { return a /= b; }
    friend bool operator==(const YCoeff& a, const YCoeff& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const YCoeff& a, const YCoeff& b) { return !(a == b); }

    YCoeff inverse() const;
    YCoeff pow(long n) const;
    // Exact q-th root; returns false when none exists in Q(y^(1/2)).
    bool root(unsigned long q, YCoeff& out) const;
    // Rational power with the positive-leading-coefficient branch; throws if no root.
    YCoeff pow(const ExactRational& r) const;

    // y -> 1/y
    YCoeff y_inverted() const;
    // multiply by w^e
    YCoeff shifted(int e) const;
    // value at y = 0; requires no pole there
    ExactRational at_y_zero() const;
    // value at w = given rational; requires den(w) != 0
    ExactRational eval_w(const ExactRational& w) const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1L);
};

} // namespace verlinde

#endif
