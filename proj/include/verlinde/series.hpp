#ifndef VERLINDE_SERIES_HPP
#define VERLINDE_SERIES_HPP

#include "verlinde/ycoeff.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

// Exponents are stored on integer grids: a stored exponent g of a variable with
// denominator d stands for g/d.  Windows are given in the same grid units.
inline constexpr long kUnbounded = 1L << 40;

struct SeriesVar {
    std::string name;
    int den = 1;
    long lo = 0;
    long hi = kUnbounded;
};

using Exponents = std::vector<long>;

// One factor of a monomial image: var^(exponent).  den is used only when var is new.
struct ImageFactor {
    std::string var;
    ExactRational exponent;
    int den = 1;
};

// coeff * y^(y_w/2) * prod factors
struct MonomialImage {
    YCoeff coeff = YCoeff(1L);
    int y_w = 0;
    std::vector<ImageFactor> factors;
};

// Truncated multivariate Laurent series over Q(y^(1/2)).  Each variable has a
// window [lo, hi]: coefficients below lo are zero, coefficients in [lo, hi] are
// exact, nothing is known above hi.  Windows form a box.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<SeriesVar> vars);

    static TruncatedSeries constant(std::vector<SeriesVar> vars, const YCoeff& c);
    static TruncatedSeries monomial(std::vector<SeriesVar> vars, const Exponents& grid, const YCoeff& c = YCoeff(1L));
    // Single-variable helpers: variable name^(1) with given window.
    static TruncatedSeries variable(const std::string& name, long hi, int den = 1);
    static SeriesVar var(const std::string& name, long lo, long hi, int den = 1);

    size_t nvars() const { return vars_.size(); }
    const std::vector<SeriesVar>& vars() const { return vars_; }
    const SeriesVar& var_at(size_t i) const { return vars_[i]; }
    int index_of(const std::string& name) const;
    const std::map<Exponents, YCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    YCoeff coeff(const Exponents& grid) const;
    // univariate convenience
    YCoeff coeff(long grid) const;
    // Whether the grid exponent lies in the exact window.
    bool in_window(const Exponents& grid) const;

    void set_coeff(const Exponents& grid, const YCoeff& c);
    void add_to(const Exponents& grid, const YCoeff& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const YCoeff& c);
    TruncatedSeries operator-() const;

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const YCoeff& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    TruncatedSeries invert() const;
    TruncatedSeries exp() const;
    TruncatedSeries log() const;
    TruncatedSeries pow(long n) const;
    TruncatedSeries pow_rational(const ExactRational& r) const;

    TruncatedSeries substitute_monomial(const std::string& var, const MonomialImage& image) const;
    TruncatedSeries y_inverted() const;
    TruncatedSeries at_y_zero() const;
    TruncatedSeries extract_progression(const std::string& var, long modulus, long residue) const;

    // Restricts the window of var to hi (grid units) and drops terms above it.
    TruncatedSeries truncated(const std::string& var, long hi) const;
    // Coefficient of var^(grid) as a series in the remaining variables.
    TruncatedSeries slice(const std::string& var, long grid) const;
    // Adds a variable in which the series is constant.
    TruncatedSeries with_variable(const SeriesVar& v) const;
    // var * d/dvar
    TruncatedSeries euler_derivative(const std::string& var) const;
    // Multiplies by w^(y_w) and by a monomial in the series variables (grid units).
    TruncatedSeries shifted(const Exponents& grid, int y_w = 0) const;
    TruncatedSeries map_coeffs(YCoeff (*fn)(const YCoeff&)) const;

    // Equality of coefficients on the intersection of both windows.
    static bool agree(const TruncatedSeries& a, const TruncatedSeries& b);
    bool is_y_symmetric() const;

    std::string str() const;

private:
    void check_compatible(const TruncatedSeries& o) const;
    void prune();
    void tighten();
    // series t = a/m - 1 with constant coefficient c0, assumes tightened lo
    void normalized_tail(YCoeff& c0, std::map<Exponents, YCoeff>& tail, Exponents& span) const;
    std::vector<Exponents> box_points(const Exponents& extent) const;

    std::vector<SeriesVar> vars_;
    std::map<Exponents, YCoeff> terms_;
};

long window_add(long a, long b);

} // namespace verlinde

#endif
