#ifndef VERLINDE_TORIC_CHARS_HPP
#define VERLINDE_TORIC_CHARS_HPP

#include "verlinde/equiv_char.hpp"
#include "verlinde/toric_surface.hpp"

namespace verlinde {

// Sum over boxes of the characters i*u + j*v.
EquivChar partition_char(const Partition& p, const Chart& c);

// H^0(O_Z(D)) twisted by x^(x2/2).
EquivChar struct_sheaf_char(const ToricSurface& s, const HilbFixedPoint& z);
EquivChar struct_sheaf_char(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& d, int x2 = 0);

// H^0 - H^1 + H^2 of O(D), obtained by exact division of the chart sum.
EquivChar rgamma_char(const ToricSurface& s, const Divisor& d, int x2 = 0);

// RHom(I_Z(A), I_W(B) x^(x2/2)) as a virtual character.
EquivChar ext_ideal_char(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& a, const HilbFixedPoint& w,
                         const Divisor& b, int x2 = 0);
// RHom(I_Z, I_W(D)).
EquivChar ext_pair_char(const ToricSurface& s, const HilbFixedPoint& z, const HilbFixedPoint& w, const Divisor& d);

// The three point-supported blocks of RHom(I_Z, I_W(D)) = RGamma(D) - [O, O_W(D)] - [O_Z, O(D)] + [O_Z, O_W(D)].
EquivChar block_sections(const ToricSurface& s, const HilbFixedPoint& w, const Divisor& d);
EquivChar block_dual(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& d);
EquivChar block_points(const ToricSurface& s, const HilbFixedPoint& z, const HilbFixedPoint& w, const Divisor& d);

// Tangent space of the Hilbert scheme at Z: RGamma(O) - RHom(I_Z, I_Z).
EquivChar tangent_char(const ToricSurface& s, const HilbFixedPoint& z);

// Divides a character by (1 - t^e); throws if the division is not exact.
EquivChar divide_one_minus(const EquivChar& n, const CharExp& e);

// Chart-local check through the Taylor resolution of the monomial ideals:
// returns t^d * conj(P_Z) * P_W with P_Z = sum_F (-1)^(|F|-1) t^(lcm F).
EquivChar taylor_local_numerator(const Partition& z, const Partition& w, const Chart& c, const Weight2& d);
// The same quantity from the closed formula: t^d + (1-T1)(1-T2) * (chart correction).
EquivChar vertex_local_numerator(const Partition& z, const Partition& w, const Chart& c, const Weight2& d);

} // namespace verlinde

#endif
