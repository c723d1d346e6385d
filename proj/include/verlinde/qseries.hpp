#ifndef VERLINDE_QSERIES_HPP
#define VERLINDE_QSERIES_HPP

#include "verlinde/series.hpp"

#include <string>

namespace verlinde {

// Univariate series in `var` on the grid 1/den with window [lo, hi] (grid units).
TruncatedSeries univariate(const std::string& var, long lo, long hi, int den = 1);
// c * var^(grid) * y^(w/2) with window [grid, grid + width]
TruncatedSeries univariate_monomial(const std::string& var, long grid, long width, const YCoeff& c = YCoeff(1L), int den = 1);

// Infinite products prod (1 - c var^m y^(k/2))^e accumulated in log form and
// exponentiated once, so rational exponents cost nothing extra.
class ProductBuilder {
public:
    ProductBuilder(std::string var, long hi, int den = 1);

    // Multiplies by (1 - c var^(m grid units) y^(w/2))^e, m > 0.
    void factor(long m, int w, const ExactRational& c, const ExactRational& e);
    // Multiplies by prod_{n >= 1} (1 - c var^(m k) y^(w/2))^(e0 + e1 k + e2 k^2), k = step n + offset, k > 0.
    void family(long m, int w, const ExactRational& c, const ExactRational& e0, const ExactRational& e1 = 0,
                const ExactRational& e2 = 0, long step = 1, long offset = 0);
    // Multiplies the accumulated product by another one raised to e.
    void absorb(const ProductBuilder& o, const ExactRational& e);

    const TruncatedSeries& log() const { return log_; }
    TruncatedSeries build() const;

private:
    std::string var_;
    TruncatedSeries log_;
};

// sum_n sign^(n^2) var^(scale n^2) y^(w_step n / 2)
TruncatedSeries theta3(long hi, long scale = 1, int sign = 1, int w_step = 2);
// sum_{n in Z + 1/2} var^(scale n^2) y^n; quarter grid unless 4 | scale
TruncatedSeries theta2(long hi, long scale = 1);
// prod (1 - var^(scale n))
TruncatedSeries eta_bar(long hi, long scale = 1);
// -1/24 + sum sigma_1(d) q^d
TruncatedSeries eisenstein_g2(long hi);
// sum sigma_1(d) q^d
TruncatedSeries eisenstein_g2_bar(long hi);
// q d/dq
TruncatedSeries q_derivative(const TruncatedSeries& f, const std::string& var = "x");

// Substitutes var -> var^k (k > 0) keeping the name.
TruncatedSeries rescale(const TruncatedSeries& f, const std::string& var, long k);
// Substitutes var -> -var.
TruncatedSeries negate_variable(const TruncatedSeries& f, const std::string& var);

} // namespace verlinde

#endif
