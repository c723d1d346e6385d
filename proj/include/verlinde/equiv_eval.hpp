#ifndef VERLINDE_EQUIV_EVAL_HPP
#define VERLINDE_EQUIV_EVAL_HPP

#include "verlinde/equiv_char.hpp"
#include "verlinde/series.hpp"

namespace verlinde {

// Evaluation of characters as equivariant classes.  The results are series in
// the variables (z, s) with eps = z * s, so that every weight alpha*eps + beta*s
// equals s * (beta + alpha z) and all expansions have box windows.

std::vector<SeriesVar> zs_vars(long z_hi, long s_lo, long s_hi);

// prod w^m; inverse factors are expanded in z up to z_hi.
TruncatedSeries equiv_euler(const EquivChar& c, const EpsSpec& spec, long z_hi);
// sum m e^w up to s^s_hi.
TruncatedSeries equiv_ch(const EquivChar& c, const EpsSpec& spec, long s_hi);
// prod (w / (1 - e^-w))^m
TruncatedSeries equiv_td(const EquivChar& c, const EpsSpec& spec, long s_hi);
// prod X_{ysign*y}(w)^m with X_y(w) = w (1 + y e^-w) / (1 - e^-w)
TruncatedSeries equiv_xy(const EquivChar& c, const EpsSpec& spec, long s_hi, int ysign = 1);
// degree-k part of prod (1 + w)^m
TruncatedSeries equiv_chern_class(const EquivChar& c, long k, const EpsSpec& spec);

// Taylor coefficients of w / (1 - e^-w) up to w^n.
std::vector<ExactRational> todd_coefficients(int n);

} // namespace verlinde

#endif
