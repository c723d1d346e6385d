#ifndef VERLINDE_MONOPOLE_HPP
#define VERLINDE_MONOPOLE_HPP

#include "verlinde/closed_forms.hpp"
#include "verlinde/equiv_char.hpp"
#include "verlinde/instanton.hpp"
#include "verlinde/lattice.hpp"
#include "verlinde/series.hpp"
#include "verlinde/toric_surface.hpp"

#include <array>
#include <string>
#include <vector>

namespace verlinde {

inline constexpr int kMonopoleChern = 7;
// (L^2, L beta, beta^2, LK, beta K, K^2, chi(O))
using MonopoleChern = std::array<long, kMonopoleChern>;

struct MonopoleTuple {
    std::string surface;
    std::vector<long> L;
    std::vector<long> beta;

    std::string label() const;
};

// Seven tuples on P2 and P1xP1 with Q-independent Chern vectors.
std::vector<MonopoleTuple> standard_monopole_tuples();
// (P2, O(-3), O(6)), not among the seven.
MonopoleTuple heldout_monopole_tuple();

MonopoleChern monopole_chern(const ToricSurface& s, const MonopoleTuple& t);
MonopoleChern monopole_chern(const SurfaceLattice& l, const LatticeVec& L, const LatticeVec& beta);

// Obstruction theory character at the fixed point (Z0, Z1); the third slot
// carries twice the exponent of the scaling character t.
EquivChar v_char(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1, const Divisor& beta);
// RGamma(beta) - RHom(I0, I1(beta))
EquivChar gt_char(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1, const Divisor& beta);
// Chern class of gt_char in degree n0 + n1 + extra_degree.
TruncatedSeries gt_virtual_factor(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1,
                                  const Divisor& beta, const EpsSpec& spec, long extra_degree = 0);
// det((V^dual)^(>=0)) t^(r/2) with r the rank of (V^dual)^(>=0), as one character.
CharExp sqrt_det_twist(const EquivChar& v);

struct MonopoleWindows {
    int q_order = 1;
    int eps_hi = 0;
};

struct MonopoleZ {
    // series in q with window [0, q_order]
    TruncatedSeries series;
    EpsResidues eps;
    long fixed_points = 0;
};

// (-1/(y^(1/2) + y^(-1/2)))^(-chi(beta - K)) (y^(1/2) - y^(-1/2))^(chi(O) - chi(beta))
YCoeff monopole_normalization(long chi_O, long chi_beta, long chi_beta_minus_K);

// Throws std::runtime_error if negative powers of eps survive.
MonopoleZ z_mon(const ToricSurface& s, const MonopoleTuple& t, const MonopoleWindows& w, const EpsSpec& spec);
MonopoleZ z_mon(const MonopoleTuple& t, const MonopoleWindows& w, const EpsSpec& spec);

struct UniversalSeriesB {
    std::array<TruncatedSeries, kMonopoleChern> B;
    int q_order = 0;
    EpsSpec spec;
    std::vector<std::string> tuples;

    TruncatedSeries evaluate(const MonopoleChern& v) const;
    std::vector<std::string> non_laurent_coefficients() const;
};

// Throws std::domain_error on a singular Chern matrix.
UniversalSeriesB solve_universal_B(const std::vector<MonopoleChern>& vectors, const std::vector<TruncatedSeries>& z);
UniversalSeriesB compute_universal_B(const MonopoleWindows& w, const EpsSpec& spec,
                                     std::vector<MonopoleZ>* inputs = nullptr);
// C1 = B7, C2 = B6, C3 = B1, C4 = B4, C5 = B3 B5, C6 = B2
UniversalSeriesC derive_C(const UniversalSeriesB& b);

// Monopole contribution: coefficient of (-x)^vd, summed over SW classes with
// c1 = K - beta mod 2.  Throws std::out_of_range if q_order is too small.
YCoeff lemmaC_predict(const UniversalSeriesB& b, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                      long vd);
YCoeff lemmaC_predict(const UniversalSeriesC& c, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                      long vd);

// Universality evaluation at K3 numbers with beta = 0: B1^(L^2) B7^2.
TruncatedSeries k3_series_from_B(const UniversalSeriesB& b, long L2);

} // namespace verlinde

#endif
