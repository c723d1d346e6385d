#ifndef VERLINDE_CLOSED_FORMS_HPP
#define VERLINDE_CLOSED_FORMS_HPP

#include "verlinde/lattice.hpp"
#include "verlinde/qseries.hpp"

#include <array>
#include <string>

namespace verlinde {

// Generating functions in x, window [0, order] unless stated otherwise.

// psi_{S,L,c1}(x): K-theoretic Donaldson invariants are its x^vd coefficients.
TruncatedSeries conj1_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order);
// y^(-vd/2) chi^vir_{-y}(M, mu(L)) are the x^vd coefficients.
TruncatedSeries conj2_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order);
// Monopole contribution: the invariant is the coefficient of (-x)^vd.  The
// window starts below 0 (x^(-3 chi) prefactor) and ends at order.
TruncatedSeries conj3_rhs(const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long order);
// (-1)^vd [x^vd] f
YCoeff minus_x_coefficient(const TruncatedSeries& f, long vd);
// x -> x y^(1/2), then y = 0
TruncatedSeries donaldson_limit(const TruncatedSeries& conj2);

// C1..C6 as series in q with window [0, q_order].
struct UniversalSeriesC {
    std::array<TruncatedSeries, 6> C;
    long q_order = 0;
    std::string source;
};

// The closed product expressions of the six monopole series.
UniversalSeriesC closed_universal_C(long q_order);
// Coefficient of (-x)^vd of the universal monopole expression with q = x^4.
// Throws std::out_of_range if q_order is too small for vd.
YCoeff thm1_rhs(const UniversalSeriesC& C, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1, long vd);

// sum_n chi(S^[n], Lambda_{-y} Omega (x) mu(L)) (q/y)^n with q -> q^q_step, y -> y^y_scale.
TruncatedSeries twisted_chiy_product(long chi_O, long K2, const ExactRational& L2, const ExactRational& LK, long q_order,
                                     long q_step = 1, long y_scale = 1);
// Monopole series of a K3 surface with beta = 0 through the diagonal reduction.
TruncatedSeries k3_diagonal_series(const ExactRational& L2, long q_order);
// C1 and C3 obtained from the K3 diagonal series at L^2 = 0 and L^2 = 2.
TruncatedSeries thm2_C1(long q_order);
TruncatedSeries thm2_C3(long q_order);

struct HigherRankSeries {
    long rank = 2;
    TruncatedSeries C1;
    TruncatedSeries C3;
    // K3 instanton series at the given L^2
    TruncatedSeries k3_instanton;
};
HigherRankSeries higher_rank_series(long r, const ExactRational& L2, long q_order);

// Interpolation between Donaldson invariants and virtual Euler numbers,
// coefficient of x^vd; lambda is a rational specialization of the formal parameter.
TruncatedSeries gn_rhs(const SurfaceLattice& lat, const LatticeVec& L, const ExactRational& lambda, const LatticeVec& c1,
                       long order);

struct LimitIdentityReport {
    long order = 0;
    bool dg2 = false;
    bool g2_bar = false;
    bool g2_odd = false;
    bool all() const { return dg2 && g2_bar && g2_odd; }
};
// The three y -> 1 limits of twisted products, coefficientwise to x^order.
LimitIdentityReport limit_identities_check(long order);
// Coefficientwise (y^(-1/2) - y^(1/2))^(-power) c(y) at y = 1; throws if a coefficient is not divisible.
TruncatedSeries limit_at_y_one(const TruncatedSeries& f, int power);

} // namespace verlinde

#endif
