#ifndef VERLINDE_INSTANTON_KERNEL_HPP
#define VERLINDE_INSTANTON_KERNEL_HPP

#include "verlinde/equiv_char.hpp"
#include "verlinde/ycoeff.hpp"

#include <vector>

namespace verlinde::kernel {

// Dense polynomial in u = y/(1-y) with rational coefficients.
using UPoly = std::vector<ExactRational>;

// [w^j] of log(w/(1-e^-w)) + log(1 + u(1-e^-w)), j = 0..s_order
std::vector<UPoly> x_log_table(int s_order);

// One fixed point: s^s_shift * prefactor * e(euler) * prod_x X(w)/(1-y) * exp(s (mu_s + mu_z z)),
// every weight written as s (beta + alpha z).
struct PointInput {
    EquivChar euler;
    EquivChar x;
    ExactRational mu_s = 0;
    ExactRational mu_z = 0;
    ExactRational prefactor = 1;
    long s_shift = 0;
};

// acc[j][k - z_lo] is the coefficient of z^k s^(s_val + j), an element of Q[u].
struct Accumulator {
    long z_lo = 0;
    long z_hi = 0;
    int s_order = 0;
    long s_val = 0;
    std::vector<std::vector<UPoly>> acc;

    Accumulator(long z_lo, long z_hi, int s_order, long s_val);
    void merge(const Accumulator& o);
    const UPoly& at(int j, long k) const;
};

// Adds the contribution of one fixed point.  A zero weight in the Euler
// numerator makes the contribution vanish.
void accumulate(const PointInput& in, const EpsSpec& spec, const std::vector<UPoly>& table, Accumulator& out);

bool is_zero(const UPoly& p);
// sum c_i u^i times (1-y)^rank y^(-rank/2), as an element of Q(y^(1/2))
YCoeff to_ycoeff(const UPoly& p, long rank);

} // namespace verlinde::kernel

#endif
