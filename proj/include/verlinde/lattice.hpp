#ifndef VERLINDE_LATTICE_HPP
#define VERLINDE_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

namespace verlinde {

using LatticeVec = std::vector<long>;

struct SwClass {
    LatticeVec cls;
    long value = 0;
};

// Numerical model of H^2(S, Z) with the data the closed formulas consume.
struct SurfaceLattice {
    std::string name;
    std::vector<std::vector<long>> gram;
    LatticeVec K;
    long chi_O = 0;
    std::optional<LatticeVec> H;
    std::vector<SwClass> sw;
    std::string builder = "table";

    size_t rank() const { return gram.size(); }
    LatticeVec zero() const { return LatticeVec(rank(), 0); }
    long dot(const LatticeVec& a, const LatticeVec& b) const;
    long square(const LatticeVec& a) const { return dot(a, a); }
    long K2() const { return dot(K, K); }
    // Riemann-Roch (L^2 - L K)/2 + chi(O)
    long chi(const LatticeVec& L) const;
    // Throws std::invalid_argument on malformed data or SW classes with a^2 != a K.
    void validate() const;
};

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator*(long k, const LatticeVec& a);

// Number of gamma with a - b = 2 gamma in the free lattice (0 or 1).
long delta(const LatticeVec& a, const LatticeVec& b);

SurfaceLattice k3_lattice();
// SW = {0: 1, K: (-1)^chi}
SurfaceLattice general_type_lattice(const std::string& name, std::vector<std::vector<long>> gram, LatticeVec K, long chi_O,
                                    std::optional<LatticeVec> H = std::nullopt);
// Appends the exceptional class E with E^2 = -1; K' = K + E; SW(a) = SW(a + E) = SW_base(a).
SurfaceLattice blow_up(const SurfaceLattice& base);

struct CurveComponent {
    LatticeVec cls;
    long h0_normal = 0;
};
// Canonical divisor given by disjoint curves; SW classes are the partial sums C_I.
SurfaceLattice disconnected_canonical(const std::string& name, std::vector<std::vector<long>> gram, long chi_O,
                                      const std::vector<CurveComponent>& curves, std::optional<LatticeVec> H = std::nullopt);

SurfaceLattice load_lattice(const std::string& path);
// Looks up data/lattices/<name>.toml
SurfaceLattice builtin_lattice(const std::string& name);

std::string format_vec(const LatticeVec& v);
LatticeVec parse_vec(const std::string& text);

} // namespace verlinde

#endif
