#include "verlinde/instanton.hpp"

#include "kernel.hpp"
#include "verlinde/toric_chars.hpp"

#include <tbb/parallel_for.h>

#include <stdexcept>

namespace verlinde {

namespace {

long dot(const ToricSurface& s, const std::vector<long>& a, const std::vector<long>& b)
{
    return s.intersect(a, b);
}

std::vector<long> sub(const std::vector<long>& a, const std::vector<long>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("divisor classes of different length");
    std::vector<long> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

std::vector<long> scaled(long k, const std::vector<long>& a)
{
    std::vector<long> r = a;
    for (auto& x : r)
        x *= k;
    return r;
}

struct HilbData {
    HilbFixedPoint z;
    EquivChar self;
    EquivChar tangent;
    EquivChar sheaf;
    std::vector<int> sizes;
};

std::vector<HilbData> hilb_data(const ToricSurface& s, int n, const Divisor& twist, int x2)
{
    std::vector<HilbData> out;
    Divisor zero = s.zero_divisor();
    for (auto& z : fixed_points(s, n)) {
        HilbData d;
        d.self = ext_pair_char(s, z, z, zero);
        d.tangent = tangent_char(s, z);
        d.sheaf = struct_sheaf_char(s, z, twist, x2);
        for (const auto& p : z)
            d.sizes.push_back(p.size());
        d.z = std::move(z);
        out.push_back(std::move(d));
    }
    return out;
}

TruncatedSeries s_series(int s_order)
{
    return TruncatedSeries({TruncatedSeries::var("s", 0, s_order)});
}

TruncatedSeries exp_linear(const ExactRational& c, int s_order)
{
    TruncatedSeries e = s_series(s_order);
    ExactRational term = 1;
    for (int k = 0; k <= s_order; ++k) {
        if (k > 0)
            term = term * c / k;
        e.set_coeff({k}, YCoeff(term));
    }
    return e;
}

} // namespace

std::string InstantonTuple::label() const
{
    return "(" + surface + ", L=" + format_vec(L) + ", a=" + format_vec(a) + ", c1=" + format_vec(c1) + ")";
}

std::vector<InstantonTuple> standard_instanton_tuples()
{
    return {
        {"p2", {0}, {0}, {0}},
        {"p1xp1", {0, 0}, {0, 0}, {0, 0}},
        {"p2", {0}, {1}, {2}},
        {"p2", {0}, {0}, {1}},
        {"p2", {0}, {1}, {3}},
        {"p1xp1", {0, 0}, {0, 1}, {0, 2}},
        {"p1xp1", {0, 0}, {0, 0}, {0, 1}},
        {"p2", {1}, {0}, {0}},
        {"p1xp1", {0, 1}, {0, 0}, {0, 0}},
        {"p2", {1}, {1}, {2}},
        {"p2", {1}, {0}, {1}},
    };
}

InstantonTuple heldout_instanton_tuple()
{
    return {"p2", {1}, {1}, {3}};
}

InstantonChern instanton_chern(const ToricSurface& s, const InstantonTuple& t)
{
    const auto& K = s.canonical_class;
    return {dot(s, t.L, t.L),  dot(s, t.L, t.a), dot(s, t.a, t.a),  dot(s, t.a, t.c1), dot(s, t.c1, t.c1), dot(s, t.L, t.c1),
            dot(s, t.L, K),    dot(s, t.a, K),   dot(s, t.c1, K),   dot(s, K, K),      s.chi_O};
}

InstantonChern instanton_chern(const SurfaceLattice& l, const LatticeVec& L, const LatticeVec& a, const LatticeVec& c1)
{
    const auto& K = l.K;
    return {l.dot(L, L),  l.dot(L, a), l.dot(a, a),  l.dot(a, c1), l.dot(c1, c1), l.dot(L, c1),
            l.dot(L, K),  l.dot(a, K), l.dot(c1, K), l.dot(K, K),  l.chi_O};
}

YCoeff instanton_kappa()
{
    // w / (1 - w^2)
    return YCoeff(LaurentPoly::monomial(1), LaurentPoly(1L) - LaurentPoly::monomial(2));
}

bool EpsResidues::negative_clean() const
{
    return nonzero.empty() || nonzero.begin()->first > 0;
}

void EpsResidues::merge(const EpsResidues& o)
{
    checked += o.checked;
    for (const auto& [k, c] : o.nonzero)
        nonzero[k] += c;
}

PsiResult psi_tilde(const ToricSurface& s, const std::vector<long>& L, const std::vector<long>& a1,
                    const std::vector<long>& a2, int n1, int n2, const EpsSpec& spec, int s_order, int eps_hi)
{
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("negative number of points");
    if (s_order < 0 || eps_hi < 0)
        throw std::invalid_argument("negative window");
    Divisor a1d = s.divisor(a1);
    Divisor a2d = s.divisor(a2);
    Divisor Ld = s.divisor(L);
    Divisor Dd = a2d - a1d;
    std::vector<long> D = sub(a2, a1);
    long n = n1 + n2;
    long chi = s.chi_O;
    long D2 = dot(s, D, D);
    long vd = 4 * n - D2 - 3 * chi;
    long s_val = D2 + 3 * chi - 4 * n;

    EquivChar rg0 = rgamma_char(s, s.zero_divisor());
    std::vector<HilbData> zs = hilb_data(s, n1, a1d, 0);
    std::vector<HilbData> ws = hilb_data(s, n2, a2d, 4);
    std::vector<kernel::UPoly> table = kernel::x_log_table(s_order);

    ExactRational mu_s = -dot(s, L, D);
    ExactRational prefactor = rational_pow(ExactRational(2), chi - n);
    std::vector<ExactRational> lweights;
    for (const auto& c : Ld.chars)
        lweights.push_back(spec.p * c[0] + spec.r * c[1]);

    size_t npairs = zs.size() * ws.size();
    std::vector<kernel::Accumulator> parts(npairs, kernel::Accumulator(-2 * n, eps_hi, s_order, s_val));
    std::vector<long> ranks(npairs, vd);
    tbb::parallel_for(size_t(0), npairs, [&](size_t idx) {
        const HilbData& z = zs[idx / ws.size()];
        const HilbData& w = ws[idx % ws.size()];
        EquivChar cross = ext_pair_char(s, z.z, w.z, Dd).twisted(0, 0, 4) + ext_pair_char(s, w.z, z.z, -Dd).twisted(0, 0, -4);
        kernel::PointInput in;
        in.x = rg0 - z.self - w.self - cross;
        ranks[idx] = in.x.rank();
        in.euler = cross + z.sheaf + w.sheaf - z.tangent - w.tangent;
        in.mu_s = mu_s;
        for (size_t k = 0; k < lweights.size(); ++k)
            in.mu_z += lweights[k] * (z.sizes[k] + w.sizes[k]);
        in.prefactor = prefactor;
        in.s_shift = chi - n;
        kernel::accumulate(in, spec, table, parts[idx]);
    });
    for (long r : ranks)
        if (r != vd)
            throw std::runtime_error("rank " + std::to_string(r) + " of the trace-free character differs from vd " +
                                     std::to_string(vd));
    kernel::Accumulator total(-2 * n, eps_hi, s_order, s_val);
    for (const auto& p : parts)
        total.merge(p);

    PsiResult out;
    out.vd = vd;
    out.s_valuation = s_val;
    out.fixed_points = static_cast<long>(npairs);
    out.value = TruncatedSeries({TruncatedSeries::var("s", s_val, s_val + s_order)});
    for (int j = 0; j <= s_order; ++j) {
        for (long k = -2 * n; k <= eps_hi; ++k) {
            if (k == 0)
                continue;
            ++out.eps.checked;
            if (!kernel::is_zero(total.at(j, k)))
                ++out.eps.nonzero[k];
        }
        out.value.set_coeff({s_val + j}, kernel::to_ycoeff(total.at(j, 0), vd));
    }
    if (!out.eps.negative_clean())
        throw std::runtime_error("negative powers of eps survive the fixed-point sum (n1=" + std::to_string(n1) +
                                 ", n2=" + std::to_string(n2) + ")");
    return out;
}

TruncatedSeries instanton_g_series(int sign, int s_order)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    // t = sign * s; N(t) = (1 - e^-2t)/t, R(t) = 1 - y e^-2t
    TruncatedSeries num = s_series(s_order);
    TruncatedSeries den = s_series(s_order);
    YCoeff y = YCoeff::w_power(2);
    ExactRational fact = 1;
    ExactRational m2 = 1;
    for (int k = 0; k <= s_order + 1; ++k) {
        if (k > 0) {
            fact *= k;
            m2 *= -2;
        }
        // e^-2t = sum m2 t^k / k!
        ExactRational ek = m2 / fact;
        ExactRational sk = (sign == -1 && k % 2 == 1) ? ExactRational(-1) : ExactRational(1);
        if (k >= 1 && k - 1 <= s_order) {
            ExactRational sk1 = (sign == -1 && (k - 1) % 2 == 1) ? ExactRational(-1) : ExactRational(1);
            num.set_coeff({k - 1}, YCoeff(-ek * sk1));
        }
        if (k <= s_order) {
            YCoeff c = y * YCoeff(-ek * sk);
            if (k == 0)
                c += YCoeff(1L);
            den.set_coeff({k}, c);
        }
    }
    return num * den.invert() * YCoeff::w_power(1);
}

TruncatedSeries instanton_normalization(long chi_O, long chi_D, long chi_minus_D, long DL, int s_order)
{
    TruncatedSeries gp = instanton_g_series(1, s_order);
    TruncatedSeries gm = instanton_g_series(-1, s_order);
    ExactRational c = rational_pow(ExactRational(2), -chi_O);
    if (chi_minus_D % 2 != 0)
        c = -c;
    TruncatedSeries r = gp.pow(-chi_D) * gm.pow(-chi_minus_D) * exp_linear(ExactRational(DL), s_order) * YCoeff(c);
    long v = -chi_O - chi_D - chi_minus_D;
    return r.shifted({v});
}

InstantonZ z_inst(const InstantonTuple& t, const InstantonWindows& w, const EpsSpec& spec)
{
    return z_inst(builtin_surface(t.surface), t, w, spec);
}

InstantonZ z_inst(const ToricSurface& s, const InstantonTuple& t, const InstantonWindows& w, const EpsSpec& spec)
{
    if (w.q_order < 0 || w.s_order < 0)
        throw std::invalid_argument("negative window");
    std::vector<long> a2 = sub(t.c1, t.a);
    std::vector<long> D = sub(t.c1, scaled(2, t.a));
    std::vector<long> mD = scaled(-1, D);
    TruncatedSeries norm =
        instanton_normalization(s.chi_O, s.chi(D), s.chi(mD), dot(s, D, t.L), w.s_order);
    InstantonZ out;
    out.chi_O = s.chi_O;
    out.series = TruncatedSeries({TruncatedSeries::var("s", 0, w.s_order), TruncatedSeries::var("Q", 0, w.q_order)});
    for (int n = 0; n <= w.q_order; ++n) {
        TruncatedSeries raw;
        for (int n1 = 0; n1 <= n; ++n1) {
            PsiResult p = psi_tilde(s, t.L, t.a, a2, n1, n - n1, spec, w.s_order, w.eps_hi);
            out.eps.merge(p.eps);
            out.fixed_points += p.fixed_points;
            if (n1 == 0)
                raw = p.value;
            else
                raw += p.value;
        }
        TruncatedSeries prod = raw * norm;
        for (int j = 0; j <= w.s_order; ++j) {
            YCoeff c = prod.coeff(static_cast<long>(j - 4 * n));
            if (!c.is_zero())
                out.series.set_coeff({j, n}, c);
        }
    }
    return out;
}

TruncatedSeries UniversalSeriesA::evaluate(const InstantonChern& v) const
{
    TruncatedSeries r = TruncatedSeries::constant(A[0].vars(), kappa.pow(v[kInstantonChern - 1]));
    for (int i = 0; i < kInstantonChern; ++i)
        if (v[static_cast<size_t>(i)] != 0)
            r *= A[static_cast<size_t>(i)].pow(v[static_cast<size_t>(i)]);
    return r;
}

std::vector<std::string> UniversalSeriesA::non_laurent_coefficients() const
{
    std::vector<std::string> out;
    for (int i = 0; i < kInstantonChern; ++i)
        for (const auto& [e, c] : A[static_cast<size_t>(i)].terms())
            if (!c.is_laurent())
                out.push_back("A" + std::to_string(i + 1) + "[s^" + std::to_string(e[0]) + " Q^" + std::to_string(e[1]) +
                              "] = " + c.str());
    return out;
}

UniversalSeriesA solve_universal_A(const std::vector<InstantonChern>& vectors, const std::vector<TruncatedSeries>& z,
                                   const YCoeff& kappa)
{
    if (vectors.size() != kInstantonChern || z.size() != kInstantonChern)
        throw std::invalid_argument("universal series need exactly 11 tuples");
    RationalMatrix W(kInstantonChern, std::vector<ExactRational>(kInstantonChern));
    for (size_t i = 0; i < kInstantonChern; ++i)
        for (size_t j = 0; j < kInstantonChern; ++j)
            W[j][i] = vectors[i][j];
    RationalMatrix M = invert_matrix(W);
    std::vector<TruncatedSeries> logs;
    for (size_t i = 0; i < kInstantonChern; ++i) {
        TruncatedSeries zh = z[i] * kappa.pow(-vectors[i][kInstantonChern - 1]);
        logs.push_back(zh.log());
    }
    UniversalSeriesA out;
    out.kappa = kappa;
    for (size_t j = 0; j < kInstantonChern; ++j) {
        TruncatedSeries acc(z[0].vars());
        for (size_t i = 0; i < kInstantonChern; ++i)
            if (M[i][j] != 0)
                acc += logs[i] * YCoeff(M[i][j]);
        out.A[j] = acc.exp();
    }
    const auto& vars = z[0].vars();
    out.s_order = static_cast<int>(vars[0].hi);
    out.q_order = static_cast<int>(vars[1].hi);
    return out;
}

UniversalSeriesA compute_universal_A(const InstantonWindows& w, const EpsSpec& spec, std::vector<InstantonZ>* inputs)
{
    std::vector<InstantonChern> vecs;
    std::vector<TruncatedSeries> zs;
    std::vector<std::string> labels;
    for (const auto& t : standard_instanton_tuples()) {
        ToricSurface s = builtin_surface(t.surface);
        InstantonZ z = z_inst(s, t, w, spec);
        vecs.push_back(instanton_chern(s, t));
        zs.push_back(z.series);
        labels.push_back(t.label());
        if (inputs)
            inputs->push_back(std::move(z));
    }
    UniversalSeriesA a = solve_universal_A(vecs, zs, instanton_kappa());
    a.spec = spec;
    a.tuples = labels;
    return a;
}

YCoeff mainprop_predict(const UniversalSeriesA& A, const SurfaceLattice& lattice, const LatticeVec& L,
                        const LatticeVec& c1, long vd, bool strong_form)
{
    if (!strong_form && !lattice.H)
        throw std::invalid_argument("lattice " + lattice.name + " has no polarization; use the strong form");
    long chi = lattice.chi_O;
    long c1sq = lattice.square(c1);
    long c1K = lattice.dot(c1, lattice.K);
    YCoeff total;
    for (const auto& sw : lattice.sw) {
        const LatticeVec& a = sw.cls;
        if (!strong_form) {
            const LatticeVec& H = *lattice.H;
            if (!(lattice.dot(a, H) < lattice.dot(c1 - a, H)))
                continue;
        }
        LatticeVec D = c1 - 2 * a;
        long D2 = lattice.square(D);
        long num = vd + D2 + 3 * chi;
        if (num < 0 || num % 4 != 0)
            continue;
        long n = num / 4;
        if (vd < 0)
            continue;
        if (n > A.q_order || vd > A.s_order)
            throw std::out_of_range("universal series of order (q^" + std::to_string(A.q_order) + ", s^" +
                                    std::to_string(A.s_order) + ") cannot reach vd " + std::to_string(vd) + " (needs q^" +
                                    std::to_string(n) + ", s^" + std::to_string(vd) + ")");
        long c2 = n + lattice.dot(a, c1 - a);
        long twice_chi_ch = 4 * chi - c1K + c1sq - 2 * c2;
        if (twice_chi_ch % 2 != 0)
            throw std::logic_error("non-integral holomorphic Euler characteristic");
        long e2 = 1 - twice_chi_ch / 2 + chi;
        long chiD = lattice.chi(D);
        long chimD = lattice.chi(-1 * D);
        TruncatedSeries prod = A.evaluate(instanton_chern(lattice, L, a, c1)).slice("Q", n);
        TruncatedSeries f = instanton_g_series(1, A.s_order).pow(chiD) * instanton_g_series(-1, A.s_order).pow(chimD) *
                            exp_linear(ExactRational(-lattice.dot(L, D)), A.s_order) * prod;
        ExactRational c = -rational_pow(ExactRational(2), e2) * sw.value;
        if (chimD % 2 != 0)
            c = -c;
        total += f.coeff(vd) * YCoeff(c);
    }
    if (total.y_inverted() != total)
        throw std::runtime_error("prediction is not invariant under y -> 1/y: " + total.str());
    return total;
}

} // namespace verlinde
