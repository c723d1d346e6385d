#ifndef VERLINDE_TORIC_SURFACE_HPP
#define VERLINDE_TORIC_SURFACE_HPP

#include "verlinde/partition.hpp"

#include <array>
#include <string>
#include <vector>

namespace verlinde {

using Weight2 = std::array<int, 2>;

// Chart around a torus-fixed point.  u, v are the characters of the two
// coordinate functions; the box (i, j) of a partition carries i*u + j*v.
struct Chart {
    Weight2 u;
    Weight2 v;
};

// Equivariant line bundle: class in the divisor basis plus the character of
// its fibre at every fixed point.
struct Divisor {
    std::vector<long> cls;
    std::vector<Weight2> chars;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(long k, const Divisor& d);
    Divisor operator-() const;
};

struct ToricSurface {
    std::string name;
    std::vector<Chart> charts;
    std::vector<std::string> basis;
    std::vector<std::vector<long>> gram;
    std::vector<long> canonical_class;
    long chi_O = 1;
    // linearization[sigma][k] = fibre character of basis divisor k at chart sigma
    std::vector<std::vector<Weight2>> linearization;

    size_t euler_number() const { return charts.size(); }

    // Divisor with the linearization of the basis.
    Divisor divisor(const std::vector<long>& cls) const;
    Divisor zero_divisor() const;
    // Canonical bundle with its natural linearization (determinant of the cotangent bundle).
    Divisor canonical() const;

    long intersect(const std::vector<long>& a, const std::vector<long>& b) const;
    long intersect(const Divisor& a, const Divisor& b) const { return intersect(a.cls, b.cls); }
    // Riemann-Roch: (D^2 - D K)/2 + chi(O)
    long chi(const std::vector<long>& cls) const;
    long chi(const Divisor& d) const { return chi(d.cls); }

    void validate() const;
};

ToricSurface load_surface(const std::string& path);
// Locates data/surfaces/<name>.toml in the installed data directory.
ToricSurface builtin_surface(const std::string& name);
std::string data_directory();

using HilbFixedPoint = std::vector<Partition>;

// All tuples of chart partitions of total size n.
std::vector<HilbFixedPoint> fixed_points(const ToricSurface& s, int n);
int fixed_point_size(const HilbFixedPoint& z);

} // namespace verlinde

#endif
