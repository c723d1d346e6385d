#ifndef VERLINDE_PARTITION_HPP
#define VERLINDE_PARTITION_HPP

#include <utility>
#include <vector>

namespace verlinde {

// Weakly decreasing positive parts.  Box (i, j) has 0 <= j < parts.size(), 0 <= i < parts[j].
struct Partition {
    std::vector<int> parts;

    int size() const;
    bool empty() const { return parts.empty(); }
    std::vector<std::pair<int, int>> boxes() const;
    // Minimal generators x^a y^b of the monomial ideal spanned by the complement.
    std::vector<std::pair<int, int>> ideal_generators() const;
    bool valid() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// All partitions of n, largest first part first.
std::vector<Partition> partitions(int n);

// All ways to write n as an ordered sum of k nonnegative integers.
std::vector<std::vector<int>> compositions(int n, int k);

} // namespace verlinde

#endif
