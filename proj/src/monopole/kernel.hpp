#ifndef VERLINDE_MONOPOLE_KERNEL_HPP
#define VERLINDE_MONOPOLE_KERNEL_HPP

#include "verlinde/equiv_char.hpp"
#include "verlinde/laurent.hpp"
#include "verlinde/ycoeff.hpp"

#include <vector>

namespace verlinde::mkernel {

// num / (y^2 - 1)^d with y = w^2
struct Fraction {
    LaurentPoly num;
    int d = 0;

    void add(const LaurentPoly& n, int dn);
    void add(const Fraction& f) { add(f.num, f.d); }
    YCoeff value() const;
};

// (y^2 - 1)^k as a Laurent polynomial in w
const LaurentPoly& y2m1_power(int k);

// One fixed point of S^[n0] x S^[n1].  Weights are alpha*eps + (c/2) t with y = e^t.
//   c_n(gt) * ch(det) * e^(mu eps) * td(fixed) / (e(tangent) * ch(Lambda_-1 moving^dual))
struct PointInput {
    EquivChar tangent;
    EquivChar gt;
    EquivChar fixed;
    EquivChar moving;
    CharExp det{0, 0, 0};
    ExactRational mu = 0;
    int n = 0;
};

// Coefficients of eps^k for k = -n .. eps_hi.
struct PointOutput {
    std::vector<Fraction> eps;
    bool vanished = false;
};

class Kernel {
public:
    explicit Kernel(int max_order);
    // Throws std::domain_error on a zero tangent weight or a t-weight outside {+-1, +-2}.
    PointOutput evaluate(const PointInput& in, const EpsSpec& spec, int eps_hi) const;

private:
    int max_order_;
    // log(x / (1 - e^-x)) coefficients
    std::vector<ExactRational> todd_log_;
    // log((1 - z e^-x) / (1 - z)) = sum_k G_k(v) x^k with v = z / (1 - z); G_k as polynomial in v
    std::vector<std::vector<ExactRational>> lambda_log_;
};

} // namespace verlinde::mkernel

#endif
