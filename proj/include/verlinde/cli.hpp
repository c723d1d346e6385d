#ifndef VERLINDE_CLI_HPP
#define VERLINDE_CLI_HPP

#include "verlinde/cache.hpp"
#include "verlinde/lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace verlinde {

enum ExitCode { kExitPass = 0, kExitMismatch = 1, kExitConfig = 2 };

// Invalid options, missing files, or an order too small for the request.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command; // universal | verify | table
    std::string kind;    // inst | mono
    std::string target;  // verify target
    std::string lattice; // file path or builtin lattice name
    std::string L;
    std::string c1;
    // 0 selects the order needed for max_vd
    int order = 0;
    int s_order = 0;
    long max_vd = 8;
    bool strong_form = false;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string cache_dir;
    std::string formula = "conj1";
    std::string format = "table";
    std::string lambda = "1";

    // Throws ConfigError.
    void validate() const;
};

// Existing file path, or a name under data/lattices.  Throws ConfigError.
SurfaceLattice resolve_lattice(const std::string& name_or_path);

// Smallest windows that let mainprop_predict reach every admissible vd <= max_vd.
InstantonWindows required_instanton_windows(const SurfaceLattice& lat, const LatticeVec& c1, long max_vd);
// Smallest q-order that lets lemmaC_predict reach every vd <= max_vd.
int required_monopole_order(const SurfaceLattice& lat, const LatticeVec& c1, long max_vd);

// Cached or freshly computed universal series.  A degenerate eps specialization
// is retried with the next draw of the same seed.
UniversalSeriesA obtain_universal_A(const InstantonWindows& w, std::uint64_t seed, const std::string& cache_dir,
                                    std::ostream& log);
UniversalSeriesB obtain_universal_B(const MonopoleWindows& w, std::uint64_t seed, const std::string& cache_dir,
                                    std::ostream& log);

// Dispatches on cfg.command; returns an ExitCode.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace verlinde

#endif
