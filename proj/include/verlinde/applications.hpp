#ifndef VERLINDE_APPLICATIONS_HPP
#define VERLINDE_APPLICATIONS_HPP

#include "verlinde/lattice.hpp"
#include "verlinde/series.hpp"

#include <vector>

namespace verlinde {

// 2^(3 - chi + K^2) (1+x)^(K(L-K)) / (1-x^2)^chi(L)
TruncatedSeries prop1_rhs(const SurfaceLattice& lat, const LatticeVec& L, long order);
// Residue class of x^vd modulo 4 fixed by c1: -c1^2 - 3 chi(O).
long vd_residue(const SurfaceLattice& lat, const LatticeVec& c1);
// (1/4) sum_k i^(k m) f(i^k x) for a series with rational coefficients, computed
// over Q(i); throws std::logic_error if an imaginary part survives.
TruncatedSeries gaussian_progression(const TruncatedSeries& f, long m);

// Product over the disjoint canonical components C_i.  Throws std::invalid_argument
// if sum C_i differs from K.
TruncatedSeries disconnected_rhs(const SurfaceLattice& lat, const std::vector<CurveComponent>& curves, const LatticeVec& L,
                                 const LatticeVec& c1, long order);

// (1/2)(1-x^2)^binom(l+1,2) [(1+x)^(l+1) + (-1)^k (1-x)^(l+1)]
TruncatedSeries blowup_factor(long ell, long k, long order);
// pi^* v - m E on the blown-up lattice
LatticeVec blowup_class(const LatticeVec& v, long m);

} // namespace verlinde

#endif
