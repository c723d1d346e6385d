#include "kernel.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace verlinde::mkernel {

namespace {

using RSeries = std::vector<ExactRational>;

// log of a rational series with constant term 1, up to x^n
RSeries rlog(const RSeries& f, int n)
{
    RSeries out(n + 1, ExactRational(0));
    // f' = f * (log f)'
    std::vector<ExactRational> d(n + 1, ExactRational(0));
    for (int k = 1; k <= n; ++k) {
        ExactRational acc = k < static_cast<int>(f.size()) ? f[k] * k : ExactRational(0);
        for (int i = 1; i < k; ++i)
            if (k - i < static_cast<int>(f.size()))
                acc -= d[i] * f[k - i];
        d[k] = acc;
        out[k] = acc / k;
    }
    return out;
}

RSeries rexp(const RSeries& g, int n)
{
    RSeries out(n + 1, ExactRational(0));
    out[0] = 1;
    for (int j = 1; j <= n; ++j) {
        ExactRational acc = 0;
        for (int i = 1; i <= j && i < static_cast<int>(g.size()); ++i)
            acc += g[i] * out[j - i] * i;
        out[j] = acc / j;
    }
    return out;
}

// v (y^2 - 1) for v = 1 / (y^b - 1)
LaurentPoly v_numerator(int b)
{
    switch (b) {
    case 1:
        return LaurentPoly::monomial(2) + LaurentPoly(1L);
    case 2:
        return LaurentPoly(1L);
    case -1:
        return -(LaurentPoly::monomial(4) + LaurentPoly::monomial(2));
    case -2:
        return -LaurentPoly::monomial(4);
    default:
        throw std::domain_error("t-weight " + std::to_string(b) + " outside the supported range");
    }
}

// (1 - y^-b)^-1 (y^2 - 1)
LaurentPoly inverse_numerator(int b)
{
    return v_numerator(b) * LaurentPoly::monomial(2 * b);
}

// 1 - y^-b
LaurentPoly one_minus(int b)
{
    return LaurentPoly(1L) - LaurentPoly::monomial(-2 * b);
}

LaurentPoly power(const LaurentPoly& p, long k)
{
    return k == 0 ? LaurentPoly(1L) : p.pow(static_cast<unsigned>(k));
}

} // namespace

void Fraction::add(const LaurentPoly& n, int dn)
{
    if (n.is_zero())
        return;
    if (num.is_zero()) {
        num = n;
        d = dn;
        return;
    }
    if (dn > d) {
        num = num * y2m1_power(dn - d);
        d = dn;
    }
    num += dn < d ? n * y2m1_power(d - dn) : n;
}

YCoeff Fraction::value() const
{
    if (num.is_zero())
        return YCoeff();
    return YCoeff(num, y2m1_power(d));
}

const LaurentPoly& y2m1_power(int k)
{
    static std::mutex m;
    static std::map<int, LaurentPoly> cache;
    if (k < 0)
        throw std::invalid_argument("negative denominator power");
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(k);
    if (it != cache.end())
        return it->second;
    LaurentPoly base = LaurentPoly::monomial(4) - LaurentPoly(1L);
    return cache.emplace(k, power(base, k)).first->second;
}

Kernel::Kernel(int max_order) : max_order_(max_order)
{
    int n = max_order + 1;
    // (1 - e^-x)/x = sum (-1)^k x^k / (k+1)!
    RSeries f(n + 1);
    ExactRational fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= k + 1;
        f[k] = ExactRational(k % 2 == 0 ? 1 : -1) / fact;
    }
    todd_log_ = rlog(f, n);
    for (auto& c : todd_log_)
        c = -c;
    // H_0 = v, H_(i+1) = -(v + v^2) H_i'; G_k = H_(k-1) / k!
    lambda_log_.assign(n + 1, {});
    std::vector<ExactRational> h = {ExactRational(0), ExactRational(1)};
    ExactRational kfact = 1;
    for (int k = 1; k <= n; ++k) {
        kfact *= k;
        std::vector<ExactRational> g = h;
        for (auto& c : g)
            c /= kfact;
        lambda_log_[k] = g;
        std::vector<ExactRational> next(h.size() + 1, ExactRational(0));
        for (size_t i = 1; i < h.size(); ++i) {
            ExactRational di = h[i] * static_cast<long>(i);
            next[i] -= di;
            next[i + 1] -= di;
        }
        h = next;
    }
}

PointOutput Kernel::evaluate(const PointInput& in, const EpsSpec& spec, int eps_hi) const
{
    int n = in.n;
    int J = n + eps_hi;
    if (J > max_order_ + 1)
        throw std::invalid_argument("kernel built for a smaller order");
    PointOutput out;
    out.eps.assign(n + eps_hi + 1, Fraction());

    // c_n of the Carlsson-Okounkov character
    RSeries clog(n + 1, ExactRational(0));
    for (const auto& [e, m] : in.gt.terms()) {
        ExactRational a = weight_form(e, spec).alpha;
        if (e[2] != 0)
            throw std::domain_error("moving weight in the virtual class character");
        if (a == 0)
            continue;
        ExactRational p = 1;
        for (int k = 1; k <= n; ++k) {
            p *= a;
            clog[k] += ExactRational(m) * p * ExactRational(k % 2 == 1 ? 1 : -1) / k;
        }
    }
    ExactRational c_top = rexp(clog, n)[n];
    if (c_top == 0) {
        out.vanished = true;
        return out;
    }

    ExactRational constant = c_top;
    for (const auto& [e, m] : in.tangent.terms()) {
        ExactRational a = weight_form(e, spec).alpha;
        if (a == 0 || e[2] != 0)
            throw std::domain_error("degenerate tangent weight");
        for (long i = 0; i < (m > 0 ? m : -m); ++i) {
            if (m > 0)
                constant /= a;
            else
                constant *= a;
        }
    }

    // rational part of the log: todd and linear terms
    RSeries rpart(J + 1, ExactRational(0));
    for (const auto& [e, m] : in.fixed.terms()) {
        ExactRational a = weight_form(e, spec).alpha;
        if (e[2] != 0)
            throw std::domain_error("moving weight in the fixed part");
        if (a == 0)
            continue;
        ExactRational p = 1;
        for (int k = 1; k <= J; ++k) {
            p *= a;
            rpart[k] += todd_log_[k] * p * ExactRational(m);
        }
    }
    if (J >= 1)
        rpart[1] += weight_form(in.det, spec).alpha + in.mu;

    // moving part grouped by t-weight
    std::map<int, RSeries> sums;
    std::map<int, long> mult;
    for (const auto& [e, m] : in.moving.terms()) {
        if (e[2] % 2 != 0)
            throw std::domain_error("half-integral t-weight in the moving part");
        int b = e[2] / 2;
        ExactRational a = weight_form(e, spec).alpha;
        mult[b] += m;
        RSeries& s = sums[b];
        if (s.empty())
            s.assign(J + 1, ExactRational(0));
        ExactRational p = 1;
        for (int k = 1; k <= J; ++k) {
            p *= a;
            s[k] -= p * ExactRational(m);
        }
    }

    // P_k: numerator of the eps^k log coefficient over (y^2 - 1)^k
    std::vector<LaurentPoly> P(J + 1);
    for (int k = 1; k <= J; ++k)
        P[k] = y2m1_power(k) * rpart[k];
    for (const auto& [b, s] : sums) {
        LaurentPoly vn = v_numerator(b);
        std::vector<LaurentPoly> vpow = {LaurentPoly(1L)};
        for (int i = 1; i <= J; ++i)
            vpow.push_back(vpow.back() * vn);
        for (int k = 1; k <= J; ++k) {
            if (s[k] == 0)
                continue;
            LaurentPoly q;
            const auto& g = lambda_log_[k];
            for (size_t i = 0; i < g.size(); ++i)
                if (g[i] != 0)
                    q += vpow[i] * y2m1_power(k - static_cast<int>(i)) * g[i];
            P[k] += q * s[k];
        }
    }

    // constant factor: w^det * prod (1 - y^-b)^-m
    LaurentPoly cnum = LaurentPoly::monomial(in.det[2], constant);
    int cd = 0;
    for (const auto& [b, m] : mult) {
        if (m > 0) {
            cnum = cnum * power(inverse_numerator(b), m);
            cd += static_cast<int>(m);
        } else if (m < 0) {
            cnum = cnum * power(one_minus(b), -m);
        }
    }

    // exp of the log series
    std::vector<LaurentPoly> N(J + 1);
    N[0] = LaurentPoly(1L);
    for (int j = 1; j <= J; ++j) {
        LaurentPoly acc;
        for (int i = 1; i <= j; ++i)
            if (!P[i].is_zero() && !N[j - i].is_zero())
                acc += P[i] * N[j - i] * ExactRational(i);
        N[j] = acc * ExactRational(1, j);
    }
    for (int j = 0; j <= J; ++j)
        out.eps[j].add(cnum * N[j], cd + j);
    return out;
}

} // namespace verlinde::mkernel
