#ifndef VERLINDE_LAURENT_HPP
#define VERLINDE_LAURENT_HPP

#include "verlinde/rational.hpp"

#include <string>
#include <vector>

namespace verlinde {

// Laurent polynomial in w = y^(1/2) over Q.  Exponents are stored as powers of w,
// i.e. doubled y-exponents.  Dense storage between the lowest and highest nonzero term.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const ExactRational& constant);
    LaurentPoly(long constant);

    static LaurentPoly monomial(int w_exponent, const ExactRational& coeff = 1);
    // Builds sum c[i] w^(lo+i).
    static LaurentPoly from_coeffs(int lo, std::vector<ExactRational> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const;
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int length() const { return static_cast<int>(c_.size()); }
    ExactRational coeff(int w_exponent) const;
    const std::vector<ExactRational>& coeffs() const { return c_; }
    const ExactRational& leading() const { return c_.back(); }
    const ExactRational& trailing() const { return c_.front(); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const ExactRational& s);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const ExactRational& s) { return a *= s; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int w_shift) const;
    // w -> 1/w
    LaurentPoly reversed() const;
    // w -> -w, i.e. y^(1/2) -> -y^(1/2)
    LaurentPoly sign_flipped() const;
    LaurentPoly pow(unsigned n) const;
    ExactRational eval(const ExactRational& w) const;

    // Exact division; throws if the remainder is nonzero.
    LaurentPoly exact_div(const LaurentPoly& d) const;
    // Polynomial division of ordinary polynomials (both with low() >= 0).
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
    // Monic gcd of the polynomial parts (w-power factors removed).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly monic() const;
    // Strips the w^low factor.
    LaurentPoly stripped() const { return shifted(-lo_); }

    std::string str() const;

private:
    void trim();
    int lo_ = 0;
    std::vector<ExactRational> c_;
};

} // namespace verlinde

#endif
