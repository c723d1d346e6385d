#include "verlinde/monopole.hpp"

#include "kernel.hpp"
#include "verlinde/equiv_eval.hpp"
#include "verlinde/toric_chars.hpp"

#include <tbb/parallel_for.h>

#include <stdexcept>

namespace verlinde {

namespace {

struct HilbData {
    HilbFixedPoint z;
    EquivChar tangent;
    EquivChar self;
    EquivChar self_k;
    std::vector<int> sizes;
    int n = 0;
};

std::vector<HilbData> hilb_data(const ToricSurface& s, int n, const Divisor& K)
{
    std::vector<HilbData> out;
    Divisor zero = s.zero_divisor();
    for (auto& z : fixed_points(s, n)) {
        HilbData d;
        d.tangent = tangent_char(s, z);
        d.self = ext_pair_char(s, z, z, zero);
        d.self_k = ext_ideal_char(s, z, zero, z, K, 2);
        for (const auto& p : z)
            d.sizes.push_back(p.size());
        d.n = n;
        d.z = std::move(z);
        out.push_back(std::move(d));
    }
    return out;
}

// V from precomputed single-point pieces
EquivChar assemble_v(const ToricSurface& s, const HilbData& a, const HilbData& b, const Divisor& beta, const Divisor& K,
                     const EquivChar& rg0, const EquivChar& rgK)
{
    Divisor zero = s.zero_divisor();
    EquivChar v = ext_pair_char(s, a.z, b.z, beta) + rg0 - a.self - b.self;
    v += ext_ideal_char(s, b.z, beta, a.z, 2 * K, 4) - rgK;
    v += a.self_k + b.self_k;
    v -= ext_ideal_char(s, a.z, zero, b.z, beta - K, -2);
    v -= ext_ideal_char(s, b.z, beta - K, a.z, zero, 2);
    return v;
}

HilbData single(const ToricSurface& s, const HilbFixedPoint& z, const Divisor& K)
{
    HilbData d;
    Divisor zero = s.zero_divisor();
    d.z = z;
    d.tangent = tangent_char(s, z);
    d.self = ext_pair_char(s, z, z, zero);
    d.self_k = ext_ideal_char(s, z, zero, z, K, 2);
    d.n = fixed_point_size(z);
    return d;
}

YCoeff w_plus_inverse()
{
    return YCoeff(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
}

YCoeff w_minus_inverse()
{
    return YCoeff(LaurentPoly::monomial(1) - LaurentPoly::monomial(-1));
}

} // namespace

std::string MonopoleTuple::label() const
{
    return "(" + surface + ", L=" + format_vec(L) + ", beta=" + format_vec(beta) + ")";
}

std::vector<MonopoleTuple> standard_monopole_tuples()
{
    return {
        {"p2", {0}, {0}},    {"p2", {-3}, {0}},  {"p2", {-6}, {0}},         {"p2", {0}, {6}},
        {"p2", {0}, {-6}},   {"p2", {-3}, {-6}}, {"p1xp1", {0, 0}, {0, 0}},
    };
}

MonopoleTuple heldout_monopole_tuple()
{
    return {"p2", {-3}, {6}};
}

MonopoleChern monopole_chern(const ToricSurface& s, const MonopoleTuple& t)
{
    const auto& K = s.canonical_class;
    return {s.intersect(t.L, t.L), s.intersect(t.L, t.beta), s.intersect(t.beta, t.beta), s.intersect(t.L, K),
            s.intersect(t.beta, K),  s.intersect(K, K),         s.chi_O};
}

MonopoleChern monopole_chern(const SurfaceLattice& l, const LatticeVec& L, const LatticeVec& beta)
{
    return {static_cast<long>(l.square(L)), l.dot(L, beta), static_cast<long>(l.square(beta)), l.dot(L, l.K), l.dot(beta, l.K),
            l.K2(), l.chi_O};
}

EquivChar v_char(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1, const Divisor& beta)
{
    Divisor K = s.canonical();
    return assemble_v(s, single(s, z0, K), single(s, z1, K), beta, K, rgamma_char(s, s.zero_divisor()),
                      rgamma_char(s, K, 2));
}

EquivChar gt_char(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1, const Divisor& beta)
{
    return rgamma_char(s, beta) - ext_pair_char(s, z0, z1, beta);
}

TruncatedSeries gt_virtual_factor(const ToricSurface& s, const HilbFixedPoint& z0, const HilbFixedPoint& z1,
                                  const Divisor& beta, const EpsSpec& spec, long extra_degree)
{
    long n = fixed_point_size(z0) + fixed_point_size(z1);
    return equiv_chern_class(gt_char(s, z0, z1, beta), n + extra_degree, spec);
}

CharExp sqrt_det_twist(const EquivChar& v)
{
    CharExp det{0, 0, 0};
    long rank = 0;
    EquivChar dual = v.dual();
    for (const auto& [e, m] : dual.terms()) {
        if (e[2] < 0)
            continue;
        for (int i = 0; i < 3; ++i)
            det[i] += static_cast<int>(m) * e[i];
        rank += m;
    }
    det[2] += static_cast<int>(rank);
    return det;
}

YCoeff monopole_normalization(long chi_O, long chi_beta, long chi_beta_minus_K)
{
    YCoeff a = -w_plus_inverse().inverse();
    return a.pow(-chi_beta_minus_K) * w_minus_inverse().pow(chi_O - chi_beta);
}

MonopoleZ z_mon(const ToricSurface& s, const MonopoleTuple& t, const MonopoleWindows& w, const EpsSpec& spec)
{
    if (w.q_order < 0 || w.eps_hi < 0)
        throw std::invalid_argument("negative window");
    if (t.L.size() != s.basis.size() || t.beta.size() != s.basis.size())
        throw std::invalid_argument("divisor classes do not match the surface basis");
    Divisor K = s.canonical();
    Divisor beta = s.divisor(t.beta);
    Divisor Ld = s.divisor(t.L);
    EquivChar rg0 = rgamma_char(s, s.zero_divisor());
    EquivChar rgb = rgamma_char(s, beta);
    EquivChar rgK = rgamma_char(s, K, 2);
    std::vector<ExactRational> lweights;
    for (const auto& c : Ld.chars)
        lweights.push_back(spec.p * c[0] + spec.r * c[1]);

    std::vector<std::vector<HilbData>> hd;
    for (int n = 0; n <= w.q_order; ++n)
        hd.push_back(hilb_data(s, n, K));
    mkernel::Kernel kernel(w.q_order + w.eps_hi);

    long chi_beta = s.chi(t.beta);
    std::vector<long> bmk = t.beta;
    for (size_t i = 0; i < bmk.size(); ++i)
        bmk[i] -= s.canonical_class[i];
    YCoeff norm = monopole_normalization(s.chi_O, chi_beta, s.chi(bmk));

    MonopoleZ out;
    out.series = TruncatedSeries({TruncatedSeries::var("q", 0, w.q_order)});
    for (int n = 0; n <= w.q_order; ++n) {
        std::vector<std::pair<const HilbData*, const HilbData*>> pairs;
        for (int n0 = 0; n0 <= n; ++n0)
            for (const auto& a : hd[n0])
                for (const auto& b : hd[n - n0])
                    pairs.emplace_back(&a, &b);
        std::vector<mkernel::PointOutput> parts(pairs.size());
        std::vector<long> ranks(pairs.size(), n);
        tbb::parallel_for(size_t(0), pairs.size(), [&](size_t idx) {
            const HilbData& a = *pairs[idx].first;
            const HilbData& b = *pairs[idx].second;
            mkernel::PointInput in;
            in.n = n;
            in.tangent = a.tangent + b.tangent;
            in.gt = rgb - ext_pair_char(s, a.z, b.z, beta);
            ranks[idx] = in.gt.rank();
            EquivChar v = assemble_v(s, a, b, beta, K, rg0, rgK);
            in.fixed = v.fixed_part();
            in.moving = v.moving_part();
            in.det = sqrt_det_twist(v);
            for (size_t k = 0; k < lweights.size(); ++k)
                in.mu += lweights[k] * (a.sizes[k] + b.sizes[k]);
            parts[idx] = kernel.evaluate(in, spec, w.eps_hi);
        });
        for (long r : ranks)
            if (r != n)
                throw std::runtime_error("virtual class character of rank " + std::to_string(r) + " at n = " +
                                         std::to_string(n));
        std::vector<mkernel::Fraction> total(n + w.eps_hi + 1);
        for (const auto& p : parts)
            if (!p.vanished)
                for (size_t j = 0; j < p.eps.size(); ++j)
                    total[j].add(p.eps[j]);
        out.fixed_points += static_cast<long>(pairs.size());
        for (int j = 0; j <= n + w.eps_hi; ++j) {
            int k = j - n;
            if (k == 0) {
                out.series.set_coeff({n}, total[j].value() * norm);
                continue;
            }
            ++out.eps.checked;
            if (!total[j].value().is_zero())
                ++out.eps.nonzero[k];
        }
        if (!out.eps.negative_clean())
            throw std::runtime_error("negative powers of eps survive the monopole sum at q^" + std::to_string(n) + " for " +
                                     t.label());
    }
    return out;
}

MonopoleZ z_mon(const MonopoleTuple& t, const MonopoleWindows& w, const EpsSpec& spec)
{
    return z_mon(builtin_surface(t.surface), t, w, spec);
}

TruncatedSeries UniversalSeriesB::evaluate(const MonopoleChern& v) const
{
    TruncatedSeries r = TruncatedSeries::constant(B[0].vars(), YCoeff(1L));
    for (int i = 0; i < kMonopoleChern; ++i)
        if (v[static_cast<size_t>(i)] != 0)
            r *= B[static_cast<size_t>(i)].pow(v[static_cast<size_t>(i)]);
    return r;
}

std::vector<std::string> UniversalSeriesB::non_laurent_coefficients() const
{
    std::vector<std::string> out;
    for (int i = 0; i < kMonopoleChern; ++i)
        for (const auto& [e, c] : B[static_cast<size_t>(i)].terms())
            if (!c.is_laurent())
                out.push_back("B" + std::to_string(i + 1) + "[q^" + std::to_string(e[0]) + "] = " + c.str());
    return out;
}

UniversalSeriesB solve_universal_B(const std::vector<MonopoleChern>& vectors, const std::vector<TruncatedSeries>& z)
{
    if (vectors.size() != kMonopoleChern || z.size() != kMonopoleChern)
        throw std::invalid_argument("universal series need exactly 7 tuples");
    RationalMatrix W(kMonopoleChern, std::vector<ExactRational>(kMonopoleChern));
    for (size_t i = 0; i < kMonopoleChern; ++i)
        for (size_t j = 0; j < kMonopoleChern; ++j)
            W[j][i] = vectors[i][j];
    RationalMatrix M = invert_matrix(W);
    std::vector<TruncatedSeries> logs;
    for (const auto& zi : z)
        logs.push_back(zi.log());
    UniversalSeriesB out;
    for (size_t j = 0; j < kMonopoleChern; ++j) {
        TruncatedSeries acc(z[0].vars());
        for (size_t i = 0; i < kMonopoleChern; ++i)
            if (M[i][j] != 0)
                acc += logs[i] * YCoeff(M[i][j]);
        out.B[j] = acc.exp();
    }
    out.q_order = static_cast<int>(z[0].vars()[0].hi);
    return out;
}

UniversalSeriesB compute_universal_B(const MonopoleWindows& w, const EpsSpec& spec, std::vector<MonopoleZ>* inputs)
{
    std::vector<MonopoleChern> vecs;
    std::vector<TruncatedSeries> zs;
    std::vector<std::string> labels;
    for (const auto& t : standard_monopole_tuples()) {
        ToricSurface s = builtin_surface(t.surface);
        MonopoleZ z = z_mon(s, t, w, spec);
        vecs.push_back(monopole_chern(s, t));
        zs.push_back(z.series);
        labels.push_back(t.label());
        if (inputs)
            inputs->push_back(std::move(z));
    }
    UniversalSeriesB b = solve_universal_B(vecs, zs);
    b.spec = spec;
    b.tuples = labels;
    return b;
}

UniversalSeriesC derive_C(const UniversalSeriesB& b)
{
    UniversalSeriesC c;
    c.C = {b.B[6], b.B[5], b.B[0], b.B[3], b.B[2] * b.B[4], b.B[1]};
    c.q_order = b.q_order;
    c.source = "localization";
    return c;
}

YCoeff lemmaC_predict(const UniversalSeriesB& b, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                      long vd)
{
    if (L.size() != lat.rank() || c1.size() != lat.rank())
        throw std::invalid_argument("class vectors must have the lattice rank " + std::to_string(lat.rank()));
    long chi = lat.chi_O;
    long K2 = lat.K2();
    YCoeff m = -w_plus_inverse().inverse();
    YCoeff d = w_minus_inverse();
    YCoeff total;
    for (const auto& sw : lat.sw) {
        const LatticeVec& beta = sw.cls;
        if (delta(c1, lat.K - beta) == 0)
            continue;
        MonopoleChern v = monopole_chern(lat, L, beta);
        long b2 = v[2], bK = v[4];
        if ((b2 - bK) % 2 != 0)
            throw std::logic_error("beta^2 and beta K of different parity");
        // power of (-x): -beta^2 + 2 beta K - K^2 - 3 chi
        long xv = -b2 + 2 * bK - K2 - 3 * chi;
        long rest = vd - xv;
        if (rest < 0 || rest % 4 != 0)
            continue;
        long j = rest / 4;
        if (j > b.q_order)
            throw std::out_of_range("monopole series known to q^" + std::to_string(b.q_order) + " cannot give vd " +
                                    std::to_string(vd) + " (needs q^" + std::to_string(j) + ")");
        YCoeff pre = YCoeff::w_power(static_cast<int>(v[1] - v[3])) * m.pow((b2 - 3 * bK) / 2 + K2 + chi) *
                     d.pow((b2 - bK) / 2);
        total += b.evaluate(v).coeff(j) * pre * YCoeff(sw.value);
    }
    return total;
}

YCoeff lemmaC_predict(const UniversalSeriesC& c, const SurfaceLattice& lat, const LatticeVec& L, const LatticeVec& c1,
                      long vd)
{
    return thm1_rhs(c, lat, L, c1, vd);
}

TruncatedSeries k3_series_from_B(const UniversalSeriesB& b, long L2)
{
    return b.evaluate({L2, 0, 0, 0, 0, 0, 2});
}

} // namespace verlinde
