#ifndef VERLINDE_INSTANTON_HPP
#define VERLINDE_INSTANTON_HPP

#include "verlinde/equiv_char.hpp"
#include "verlinde/lattice.hpp"
#include "verlinde/series.hpp"
#include "verlinde/toric_surface.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace verlinde {

inline constexpr int kInstantonChern = 11;
using InstantonChern = std::array<long, kInstantonChern>;

struct InstantonTuple {
    std::string surface;
    std::vector<long> L;
    std::vector<long> a;
    std::vector<long> c1;

    std::string label() const;
};

// Eleven tuples on P2 and P1xP1 with Q-independent Chern vectors.
std::vector<InstantonTuple> standard_instanton_tuples();
// (P2, O(1), O(1), O(3)), not among the eleven.
InstantonTuple heldout_instanton_tuple();

// (L^2, La, a^2, ac1, c1^2, Lc1, LK, aK, c1K, K^2, chi(O))
InstantonChern instanton_chern(const ToricSurface& s, const InstantonTuple& t);
InstantonChern instanton_chern(const SurfaceLattice& l, const LatticeVec& L, const LatticeVec& a, const LatticeVec& c1);

// kappa = 1 / (y^(-1/2) - y^(1/2))
YCoeff instanton_kappa();

// Residues of eps^k, k != 0, found while summing fixed points.
struct EpsResidues {
    long checked = 0;
    // k -> number of nonzero coefficients
    std::map<long, long> nonzero;
    bool negative_clean() const;
    bool all_clean() const { return nonzero.empty(); }
    void merge(const EpsResidues& o);
};

struct PsiResult {
    // series in s with window [s_valuation, s_valuation + s_order]
    TruncatedSeries value;
    long vd = 0;
    long s_valuation = 0;
    long fixed_points = 0;
    EpsResidues eps;
};

// Sum over fixed points of S^[n1] x S^[n2] of the integrand with the
// rank-2 sheaf I1(a1) x s^-1 + I2(a2) x s, returning the eps^0 slice.
// eps_hi > 0 additionally tracks eps^1..eps^eps_hi.
// Throws std::runtime_error on a nonzero negative eps power or a rank mismatch.
PsiResult psi_tilde(const ToricSurface& s, const std::vector<long>& L, const std::vector<long>& a1,
                    const std::vector<long>& a2, int n1, int n2, const EpsSpec& spec, int s_order, int eps_hi = 0);

struct InstantonWindows {
    int q_order = 1;
    int s_order = 0;
    int eps_hi = 0;
};

// Normalization (2s)^-chi (2s/f(s,y))^-chi(D) (-2s/f(-s,y))^-chi(-D) e^(D L s), window [v, v + s_order].
TruncatedSeries instanton_normalization(long chi_O, long chi_D, long chi_minus_D, long DL, int s_order);
// y^(1/2) (1 - e^(-2 sign s)) / (sign s (1 - y e^(-2 sign s))) up to s^s_order.
TruncatedSeries instanton_g_series(int sign, int s_order);

struct InstantonZ {
    // variables s in [0, s_order] and Q in [0, q_order], Q = q s^-4
    TruncatedSeries series;
    long chi_O = 0;
    EpsResidues eps;
    long fixed_points = 0;
};

InstantonZ z_inst(const InstantonTuple& t, const InstantonWindows& w, const EpsSpec& spec);
InstantonZ z_inst(const ToricSurface& s, const InstantonTuple& t, const InstantonWindows& w, const EpsSpec& spec);

struct UniversalSeriesA {
    // series in (s, Q), each starting with 1
    std::array<TruncatedSeries, kInstantonChern> A;
    // constant carried by A11 on top of the series: Z = kappa^chi * prod A^v
    YCoeff kappa = YCoeff(1L);
    int q_order = 0;
    int s_order = 0;
    EpsSpec spec;
    std::vector<std::string> tuples;

    // kappa^chi * prod A_i^v_i
    TruncatedSeries evaluate(const InstantonChern& v) const;
    // Coefficients that are not Laurent polynomials in y^(1/2).
    std::vector<std::string> non_laurent_coefficients() const;
};

UniversalSeriesA solve_universal_A(const std::vector<InstantonChern>& vectors, const std::vector<TruncatedSeries>& z,
                                   const YCoeff& kappa);
// Runs z_inst on the eleven standard tuples and solves.
UniversalSeriesA compute_universal_A(const InstantonWindows& w, const EpsSpec& spec, std::vector<InstantonZ>* inputs = nullptr);

// y^(-vd/2) chi^vir_{-y}(M, mu(L)) from the universal series.  Throws
// std::out_of_range if the series order does not reach vd, std::invalid_argument
// if strong_form is off and the lattice has no polarization.
YCoeff mainprop_predict(const UniversalSeriesA& A, const SurfaceLattice& lattice, const LatticeVec& L,
                        const LatticeVec& c1, long vd, bool strong_form);

} // namespace verlinde

#endif
