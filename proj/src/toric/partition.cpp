#include "verlinde/partition.hpp"

#include <numeric>

namespace verlinde {

int Partition::size() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<std::pair<int, int>> Partition::boxes() const
{
    std::vector<std::pair<int, int>> out;
    for (size_t j = 0; j < parts.size(); ++j)
        for (int i = 0; i < parts[j]; ++i)
            out.emplace_back(i, static_cast<int>(j));
    return out;
}

std::vector<std::pair<int, int>> Partition::ideal_generators() const
{
    // corners: x^(parts[j]) y^j where parts[j] < parts[j-1], plus y^(rows)
    std::vector<std::pair<int, int>> gens;
    int rows = static_cast<int>(parts.size());
    if (rows == 0)
        return {{0, 0}};
    for (int j = 0; j < rows; ++j)
        if (j == 0 || parts[static_cast<size_t>(j)] < parts[static_cast<size_t>(j - 1)])
            gens.emplace_back(parts[static_cast<size_t>(j)], j);
    gens.emplace_back(0, rows);
    return gens;
}

bool Partition::valid() const
{
    for (size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] <= 0)
            return false;
        if (j > 0 && parts[j] > parts[j - 1])
            return false;
    }
    return true;
}

namespace {

void extend(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        extend(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void compose(int remaining, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (k == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int p = remaining; p >= 0; --p) {
        cur.push_back(p);
        compose(remaining - p, k - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    extend(n, n, cur, out);
    return out;
}

std::vector<std::vector<int>> compositions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k <= 0 || n < 0)
        return out;
    std::vector<int> cur;
    compose(n, k, cur, out);
    return out;
}

} // namespace verlinde
