#ifndef VERLINDE_EQUIV_CHAR_HPP
#define VERLINDE_EQUIV_CHAR_HPP

#include "verlinde/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace verlinde {

// Exponent of t1^a t2^b x^(c/2) where x is the extra one-dimensional torus
// (the scaling character in either engine).  The third slot is doubled.
using CharExp = std::array<int, 3>;

// Finite Z-linear combination of torus characters.
class EquivChar {
public:
    EquivChar() = default;
    static EquivChar monomial(int a, int b, int c2 = 0, long mult = 1);

    const std::map<CharExp, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long rank() const;
    long coeff(const CharExp& e) const;
    void add(const CharExp& e, long m);

    EquivChar& operator+=(const EquivChar& o);
    EquivChar& operator-=(const EquivChar& o);
    EquivChar operator-() const;
    friend EquivChar operator+(EquivChar a, const EquivChar& b) { return a += b; }
    friend EquivChar operator-(EquivChar a, const EquivChar& b) { return a -= b; }
    friend EquivChar operator*(const EquivChar& a, const EquivChar& b);
    friend EquivChar operator*(EquivChar a, long m);
    friend bool operator==(const EquivChar& a, const EquivChar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const EquivChar& a, const EquivChar& b) { return !(a == b); }

    // character-wise inverse (dual representation)
    EquivChar dual() const;
    EquivChar twisted(int a, int b, int c2 = 0) const;
    // part with third exponent equal to / different from zero
    EquivChar fixed_part() const;
    EquivChar moving_part() const;
    // value at t1 = t2 = 1 as a character of the third torus only
    std::map<int, long> restrict_to_third() const;

    std::string str() const;

private:
    std::map<CharExp, long> terms_;
};

// Generic one-parameter substitution eps1 = p * eps, eps2 = r * eps.
struct EpsSpec {
    ExactRational p;
    ExactRational r;
};

// Weight of a character as a linear form alpha*eps + beta*x.
struct WeightForm {
    ExactRational alpha;
    ExactRational beta;
};

WeightForm weight_form(const CharExp& e, const EpsSpec& spec);
// Throws std::domain_error for a degenerate weight (both parts zero) on a nonzero exponent.
WeightForm checked_weight_form(const CharExp& e, const EpsSpec& spec);

// Draws (p, r) small rationals from a seeded generator; index selects the k-th draw.
EpsSpec draw_eps_spec(std::uint64_t seed, int index = 0);
// True if no character of c has alpha = 0 unless its full exponent vanishes in (a, b).
bool eps_generic_for(const EquivChar& c, const EpsSpec& spec);

} // namespace verlinde

#endif
