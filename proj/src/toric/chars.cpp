#include "verlinde/toric_chars.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace verlinde {

namespace {

EquivChar one()
{
    return EquivChar::monomial(0, 0, 0);
}

EquivChar mono(const Weight2& w, int x2 = 0)
{
    return EquivChar::monomial(w[0], w[1], x2);
}

// (1 - T1^-1)(1 - T2^-1)
EquivChar pbar(const Chart& c)
{
    return (one() - mono({-c.u[0], -c.u[1]})) * (one() - mono({-c.v[0], -c.v[1]}));
}

// t^{b-a} [ -Q_W - conj(Q_Z) T1^-1 T2^-1 + conj(Q_Z) Q_W conj(P) ]
EquivChar chart_correction(const Chart& c, const Partition& z, const Partition& w, const Weight2& shift, int x2)
{
    EquivChar qz = partition_char(z, c);
    EquivChar qw = partition_char(w, c);
    if (qz.is_zero() && qw.is_zero())
        return {};
    EquivChar qzb = qz.dual();
    EquivChar r = -qw;
    r -= qzb.twisted(-c.u[0] - c.v[0], -c.u[1] - c.v[1]);
    r += qzb * qw * pbar(c);
    return r.twisted(shift[0], shift[1], x2);
}

Weight2 minus(const Weight2& a, const Weight2& b)
{
    return {a[0] - b[0], a[1] - b[1]};
}

} // namespace

EquivChar partition_char(const Partition& p, const Chart& c)
{
    EquivChar r;
    for (const auto& [i, j] : p.boxes())
        r.add({i * c.u[0] + j * c.v[0], i * c.u[1] + j * c.v[1], 0}, 1);
    return r;
}

EquivChar struct_sheaf_char(const ToricSurface& s, const HilbFixedPoint& z)
{
    return struct_sheaf_char(s, z, s.zero_divisor());
}

EquivChar struct_sheaf_char(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& d, int x2)
{
    EquivChar r;
    for (size_t k = 0; k < s.charts.size(); ++k)
        r += partition_char(z[k], s.charts[k]).twisted(d.chars[k][0], d.chars[k][1], x2);
    return r;
}

EquivChar divide_one_minus(const EquivChar& n, const CharExp& e)
{
    if (e[0] == 0 && e[1] == 0 && e[2] == 0)
        throw std::invalid_argument("division by 1 - 1");
    size_t axis = e[0] != 0 ? 0 : (e[1] != 0 ? 1 : 2);
    int step = e[axis];
    // group terms along lines r + k e with r[axis] in [0, |step|)
    std::map<CharExp, std::map<int, long>> lines;
    for (const auto& [x, m] : n.terms()) {
        int v = x[axis];
        int mag = std::abs(step);
        int kk = (v >= 0) ? v / mag : -((-v + mag - 1) / mag);
        int k = step > 0 ? kk : -kk;
        CharExp r{x[0] - k * e[0], x[1] - k * e[1], x[2] - k * e[2]};
        lines[r][k] += m;
    }
    EquivChar q;
    for (const auto& [r, coeffs] : lines) {
        long acc = 0;
        int prev = coeffs.begin()->first;
        for (const auto& [k, m] : coeffs) {
            for (int j = prev; j < k; ++j)
                if (acc != 0)
                    q.add({r[0] + j * e[0], r[1] + j * e[1], r[2] + j * e[2]}, acc);
            acc += m;
            prev = k;
        }
        if (acc != 0)
            throw std::domain_error("character is not divisible by 1 - t^e");
    }
    return q;
}

EquivChar rgamma_char(const ToricSurface& s, const Divisor& d, int x2)
{
    size_t e = s.charts.size();
    EquivChar num;
    for (size_t k = 0; k < e; ++k) {
        EquivChar term = mono(d.chars[k], x2);
        for (size_t j = 0; j < e; ++j) {
            if (j == k)
                continue;
            term = term * (one() - mono(s.charts[j].u)) * (one() - mono(s.charts[j].v));
        }
        num += term;
    }
    for (size_t j = 0; j < e; ++j) {
        num = divide_one_minus(num, {s.charts[j].u[0], s.charts[j].u[1], 0});
        num = divide_one_minus(num, {s.charts[j].v[0], s.charts[j].v[1], 0});
    }
    return num;
}

EquivChar ext_ideal_char(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& a, const HilbFixedPoint& w,
                         const Divisor& b, int x2)
{
    EquivChar r = rgamma_char(s, b - a, x2);
    for (size_t k = 0; k < s.charts.size(); ++k)
        r += chart_correction(s.charts[k], z[k], w[k], minus(b.chars[k], a.chars[k]), x2);
    return r;
}

EquivChar ext_pair_char(const ToricSurface& s, const HilbFixedPoint& z, const HilbFixedPoint& w, const Divisor& d)
{
    return ext_ideal_char(s, z, s.zero_divisor(), w, d);
}

EquivChar block_sections(const ToricSurface& s, const HilbFixedPoint& w, const Divisor& d)
{
    return struct_sheaf_char(s, w, d);
}

EquivChar block_dual(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& d)
{
    EquivChar r;
    for (size_t k = 0; k < s.charts.size(); ++k) {
        const Chart& c = s.charts[k];
        r += partition_char(z[k], c).dual().twisted(d.chars[k][0] - c.u[0] - c.v[0], d.chars[k][1] - c.u[1] - c.v[1]);
    }
    return r;
}

EquivChar block_points(const ToricSurface& s, const HilbFixedPoint& z, const HilbFixedPoint& w, const Divisor& d)
{
    EquivChar r;
    for (size_t k = 0; k < s.charts.size(); ++k) {
        const Chart& c = s.charts[k];
        r += (partition_char(z[k], c).dual() * partition_char(w[k], c) * pbar(c)).twisted(d.chars[k][0], d.chars[k][1]);
    }
    return r;
}

EquivChar tangent_char(const ToricSurface& s, const HilbFixedPoint& z)
{
    EquivChar r;
    for (size_t k = 0; k < s.charts.size(); ++k) {
        const Chart& c = s.charts[k];
        EquivChar q = partition_char(z[k], c);
        if (q.is_zero())
            continue;
        EquivChar qb = q.dual();
        r += q;
        r += qb.twisted(-c.u[0] - c.v[0], -c.u[1] - c.v[1]);
        r -= qb * q * pbar(c);
    }
    return r;
}

EquivChar taylor_local_numerator(const Partition& z, const Partition& w, const Chart& c, const Weight2& d)
{
    auto taylor = [&](const Partition& p) {
        auto gens = p.ideal_generators();
        EquivChar out;
        size_t k = gens.size();
        for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
            int ma = 0, mb = 0, cnt = 0;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1UL << i)) {
                    ma = std::max(ma, gens[i].first);
                    mb = std::max(mb, gens[i].second);
                    ++cnt;
                }
            out.add({ma * c.u[0] + mb * c.v[0], ma * c.u[1] + mb * c.v[1], 0}, cnt % 2 == 1 ? 1 : -1);
        }
        return out;
    };
    return (taylor(z).dual() * taylor(w)).twisted(d[0], d[1]);
}

EquivChar vertex_local_numerator(const Partition& z, const Partition& w, const Chart& c, const Weight2& d)
{
    EquivChar p = (one() - mono(c.u)) * (one() - mono(c.v));
    return mono(d) + p * chart_correction(c, z, w, d, 0);
}

} // namespace verlinde
