#include "kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace verlinde::kernel {

namespace {

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void add_scaled(UPoly& a, const UPoly& b, const ExactRational& f)
{
    if (f == 0)
        return;
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0)
            a[i] += f * b[i];
}

UPoly mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Series in z (index = power) with Q[u] coefficients.
using ZPoly = std::vector<UPoly>;

ZPoly zmul(const ZPoly& a, const ZPoly& b, long zmax)
{
    ZPoly r(static_cast<size_t>(zmax + 1));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty())
            continue;
        for (size_t j = 0; j < b.size() && static_cast<long>(i + j) <= zmax; ++j) {
            if (b[j].empty())
                continue;
            UPoly p = mul(a[i], b[j]);
            add_scaled(r[i + j], p, 1);
        }
    }
    for (auto& c : r)
        trim(c);
    return r;
}

// exp of a rational z-series without constant term
std::vector<ExactRational> exp_series(const std::vector<ExactRational>& g)
{
    size_t n = g.size();
    std::vector<ExactRational> e(n, 0);
    if (n == 0)
        return e;
    e[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        ExactRational acc = 0;
        for (size_t i = 1; i <= k; ++i)
            if (g[i] != 0)
                acc += ExactRational(static_cast<long>(i)) * g[i] * e[k - i];
        e[k] = acc / static_cast<long>(k);
    }
    return e;
}

} // namespace

bool is_zero(const UPoly& p)
{
    return std::all_of(p.begin(), p.end(), [](const ExactRational& c) { return c == 0; });
}

std::vector<UPoly> x_log_table(int s_order)
{
    size_t n = static_cast<size_t>(s_order) + 1;
    // log of the Todd series
    std::vector<ExactRational> td(n, 0);
    {
        std::vector<ExactRational> d(n, 0);
        ExactRational fact = 1;
        for (size_t k = 0; k < n; ++k) {
            fact *= static_cast<long>(k + 1);
            d[k] = ExactRational(k % 2 == 0 ? 1 : -1) / fact;
        }
        // log(td) = -log(d)
        std::vector<ExactRational> ld(n, 0);
        for (size_t k = 1; k < n; ++k) {
            ExactRational acc = ExactRational(static_cast<long>(k)) * d[k];
            for (size_t i = 1; i < k; ++i)
                acc -= ExactRational(static_cast<long>(i)) * ld[i] * d[k - i];
            ld[k] = acc / static_cast<long>(k);
        }
        for (size_t k = 0; k < n; ++k)
            td[k] = -ld[k];
    }
    // h = 1 - e^-w and its powers
    std::vector<ExactRational> h(n, 0);
    {
        ExactRational fact = 1;
        for (size_t k = 1; k < n; ++k) {
            fact *= static_cast<long>(k);
            h[k] = ExactRational(k % 2 == 1 ? 1 : -1) / fact;
        }
    }
    std::vector<UPoly> table(n);
    for (size_t j = 0; j < n; ++j)
        table[j] = UPoly{td[j]};
    std::vector<ExactRational> hp(n, 0);
    hp[0] = 1;
    for (size_t m = 1; m < n; ++m) {
        std::vector<ExactRational> next(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 1; i + k < n; ++k)
                next[i + k] += hp[i] * h[k];
        hp = next;
        ExactRational f = ExactRational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
        for (size_t j = m; j < n; ++j) {
            if (table[j].size() < m + 1)
                table[j].resize(m + 1, 0);
            table[j][m] += f * hp[j];
        }
    }
    for (auto& p : table)
        trim(p);
    return table;
}

Accumulator::Accumulator(long z_lo_, long z_hi_, int s_order_, long s_val_)
    : z_lo(z_lo_), z_hi(z_hi_), s_order(s_order_), s_val(s_val_),
      acc(static_cast<size_t>(s_order_ + 1), std::vector<UPoly>(static_cast<size_t>(z_hi_ - z_lo_ + 1)))
{
}

void Accumulator::merge(const Accumulator& o)
{
    if (o.z_lo != z_lo || o.z_hi != z_hi || o.s_order != s_order || o.s_val != s_val)
        throw std::logic_error("incompatible accumulators");
    for (size_t j = 0; j < acc.size(); ++j)
        for (size_t k = 0; k < acc[j].size(); ++k) {
            add_scaled(acc[j][k], o.acc[j][k], 1);
            trim(acc[j][k]);
        }
}

const UPoly& Accumulator::at(int j, long k) const
{
    return acc[static_cast<size_t>(j)][static_cast<size_t>(k - z_lo)];
}

void accumulate(const PointInput& in, const EpsSpec& spec, const std::vector<UPoly>& table, Accumulator& out)
{
    ExactRational coeff = in.prefactor;
    long sdeg = in.s_shift;
    long zdeg = 0;
    struct Ratio {
        ExactRational r;
        long m;
    };
    std::vector<Ratio> ratios;
    for (const auto& [e, m] : in.euler.terms()) {
        WeightForm w = weight_form(e, spec);
        if (w.beta != 0) {
            coeff *= rational_pow(w.beta, m);
            sdeg += m;
            if (w.alpha != 0)
                ratios.push_back({w.alpha / w.beta, m});
        } else if (w.alpha != 0) {
            coeff *= rational_pow(w.alpha, m);
            sdeg += m;
            zdeg += m;
        } else if (e[0] != 0 || e[1] != 0) {
            throw std::domain_error("degenerate epsilon specialization in Euler class");
        } else if (m > 0) {
            return;
        } else {
            throw std::domain_error("zero weight in an Euler class denominator");
        }
    }
    if (sdeg != out.s_val)
        throw std::logic_error("fixed point s-degree " + std::to_string(sdeg) + " differs from stratum value " +
                               std::to_string(out.s_val));
    if (zdeg < out.z_lo)
        throw std::logic_error("z-degree below accumulator window");
    long zmax = out.z_hi - zdeg;
    if (zmax < 0)
        return;
    size_t zn = static_cast<size_t>(zmax + 1);
    int S = out.s_order;

    // log of the Euler factors with nonzero s-part: m log(1 + r z)
    std::vector<ExactRational> geu(zn, 0);
    for (const auto& [r, m] : ratios) {
        ExactRational p = 1;
        for (size_t k = 1; k < zn; ++k) {
            p *= r;
            geu[k] += ExactRational(m * (k % 2 == 1 ? 1 : -1), static_cast<long>(k)) * p;
        }
    }
    std::vector<ExactRational> eeu = exp_series(geu);

    // power sums P[i][j] = sum m alpha^i beta^(j-i)
    std::vector<std::vector<ExactRational>> P(static_cast<size_t>(S + 1), std::vector<ExactRational>(static_cast<size_t>(S + 1), 0));
    for (const auto& [e, m] : in.x.terms()) {
        WeightForm w = weight_form(e, spec);
        if (w.alpha == 0 && w.beta == 0)
            continue;
        std::vector<ExactRational> ap(static_cast<size_t>(S + 1)), bp(static_cast<size_t>(S + 1));
        ap[0] = 1;
        bp[0] = 1;
        for (int k = 1; k <= S; ++k) {
            ap[static_cast<size_t>(k)] = ap[static_cast<size_t>(k - 1)] * w.alpha;
            bp[static_cast<size_t>(k)] = bp[static_cast<size_t>(k - 1)] * w.beta;
        }
        for (int j = 1; j <= S; ++j)
            for (int i = 0; i <= j && i <= zmax; ++i)
                P[static_cast<size_t>(i)][static_cast<size_t>(j)] += m * ap[static_cast<size_t>(i)] * bp[static_cast<size_t>(j - i)];
    }
    std::vector<ZPoly> H(static_cast<size_t>(S + 1), ZPoly(zn));
    for (int j = 1; j <= S; ++j) {
        const UPoly& g = table[static_cast<size_t>(j)];
        for (int i = 0; i <= j && i <= zmax; ++i) {
            ExactRational f = ExactRational(binomial(j, i)) * P[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (f != 0) {
                add_scaled(H[static_cast<size_t>(j)][static_cast<size_t>(i)], g, f);
                trim(H[static_cast<size_t>(j)][static_cast<size_t>(i)]);
            }
        }
    }
    if (S >= 1) {
        if (in.mu_s != 0)
            add_scaled(H[1][0], UPoly{in.mu_s}, 1);
        if (zmax >= 1 && in.mu_z != 0)
            add_scaled(H[1][1], UPoly{in.mu_z}, 1);
        for (auto& c : H[1])
            trim(c);
    }

    // E = exp(sum_j H_j s^j)
    std::vector<ZPoly> E(static_cast<size_t>(S + 1), ZPoly(zn));
    E[0][0] = UPoly{1};
    for (int j = 1; j <= S; ++j) {
        ZPoly acc(zn);
        for (int i = 1; i <= j; ++i) {
            ZPoly p = zmul(H[static_cast<size_t>(i)], E[static_cast<size_t>(j - i)], zmax);
            for (size_t k = 0; k < zn; ++k)
                add_scaled(acc[k], p[k], ExactRational(i));
        }
        for (size_t k = 0; k < zn; ++k) {
            for (auto& c : acc[k])
                c /= j;
            trim(acc[k]);
        }
        E[static_cast<size_t>(j)] = std::move(acc);
    }

    for (int j = 0; j <= S; ++j) {
        const ZPoly& ej = E[static_cast<size_t>(j)];
        for (size_t a = 0; a < zn; ++a) {
            if (ej[a].empty())
                continue;
            for (size_t b = 0; a + b < zn; ++b) {
                if (eeu[b] == 0)
                    continue;
                long k = zdeg + static_cast<long>(a + b);
                UPoly& dst = out.acc[static_cast<size_t>(j)][static_cast<size_t>(k - out.z_lo)];
                add_scaled(dst, ej[a], coeff * eeu[b]);
                trim(dst);
            }
        }
    }
}

YCoeff to_ycoeff(const UPoly& p, long rank)
{
    // sum c_i w^(2i) (1 - w^2)^(d - i) / (1 - w^2)^(d - rank) * w^(-rank)
    if (is_zero(p))
        return YCoeff();
    long d = static_cast<long>(p.size()) - 1;
    LaurentPoly one_minus_y = LaurentPoly(1L) - LaurentPoly::monomial(2, 1);
    LaurentPoly num;
    for (long i = 0; i <= d; ++i)
        if (p[static_cast<size_t>(i)] != 0)
            num += LaurentPoly::monomial(static_cast<int>(2 * i), p[static_cast<size_t>(i)]) *
                   one_minus_y.pow(static_cast<unsigned>(d - i));
    YCoeff r(num.shifted(static_cast<int>(-rank)));
    long e = rank - d;
    if (e >= 0)
        r *= YCoeff(one_minus_y.pow(static_cast<unsigned>(e)));
    else
        r /= YCoeff(one_minus_y.pow(static_cast<unsigned>(-e)));
    return r;
}

} // namespace verlinde::kernel
