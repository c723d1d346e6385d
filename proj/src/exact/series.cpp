#include "verlinde/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace verlinde {

long window_add(long a, long b)
{
    if (a >= kUnbounded || b >= kUnbounded)
        return kUnbounded;
    if (a <= -kUnbounded || b <= -kUnbounded)
        return -kUnbounded;
    long r = a + b;
    return std::clamp(r, -kUnbounded, kUnbounded);
}

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long ceil_div(long a, long b)
{
    return -floor_div(-a, b);
}

long degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0L);
}

Exponents sub(const Exponents& a, const Exponents& b)
{
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

bool dominated(const Exponents& f, const Exponents& e)
{
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] > e[i])
            return false;
    return true;
}

std::string exponent_str(long g, int den)
{
    ExactRational q(g, den);
    q.canonicalize();
    return q.get_str();
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<SeriesVar> vars) : vars_(std::move(vars)) {}

SeriesVar TruncatedSeries::var(const std::string& name, long lo, long hi, int den)
{
    if (den <= 0)
        throw std::invalid_argument("exponent denominator must be positive");
    return SeriesVar{name, den, lo, hi};
}

TruncatedSeries TruncatedSeries::constant(std::vector<SeriesVar> vars, const YCoeff& c)
{
    TruncatedSeries s(std::move(vars));
    s.set_coeff(Exponents(s.nvars(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<SeriesVar> vars, const Exponents& grid, const YCoeff& c)
{
    TruncatedSeries s(std::move(vars));
    s.set_coeff(grid, c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(const std::string& name, long hi, int den)
{
    return monomial({var(name, 0, hi, den)}, {static_cast<long>(den)});
}

int TruncatedSeries::index_of(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

bool TruncatedSeries::in_window(const Exponents& grid) const
{
    if (grid.size() != vars_.size())
        return false;
    for (size_t i = 0; i < grid.size(); ++i)
        if (grid[i] > vars_[i].hi)
            return false;
    return true;
}

YCoeff TruncatedSeries::coeff(const Exponents& grid) const
{
    if (grid.size() != vars_.size())
        throw std::invalid_argument("exponent vector has wrong length");
    for (size_t i = 0; i < grid.size(); ++i)
        if (grid[i] > vars_[i].hi)
            throw std::out_of_range("coefficient of " + vars_[i].name + "^" + exponent_str(grid[i], vars_[i].den) +
                                    " lies outside the exact window");
    auto it = terms_.find(grid);
    return it == terms_.end() ? YCoeff() : it->second;
}

YCoeff TruncatedSeries::coeff(long grid) const
{
    return coeff(Exponents{grid});
}

void TruncatedSeries::set_coeff(const Exponents& grid, const YCoeff& c)
{
    if (grid.size() != vars_.size())
        throw std::invalid_argument("exponent vector has wrong length");
    for (size_t i = 0; i < grid.size(); ++i)
        if (grid[i] < vars_[i].lo || grid[i] > vars_[i].hi)
            throw std::out_of_range("exponent outside window for " + vars_[i].name);
    if (c.is_zero())
        terms_.erase(grid);
    else
        terms_[grid] = c;
}

void TruncatedSeries::add_to(const Exponents& grid, const YCoeff& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(grid);
    if (it == terms_.end()) {
        set_coeff(grid, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const
{
    if (vars_.size() != o.vars_.size())
        throw std::invalid_argument("incompatible variable sets");
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].den != o.vars_[i].den)
            throw std::invalid_argument("incompatible variable sets: " + vars_[i].name + " vs " + o.vars_[i].name);
}

void TruncatedSeries::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool drop = it->second.is_zero();
        for (size_t i = 0; !drop && i < vars_.size(); ++i)
            drop = it->first[i] > vars_[i].hi;
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

void TruncatedSeries::tighten()
{
    if (terms_.empty())
        return;
    for (size_t i = 0; i < vars_.size(); ++i) {
        long m = kUnbounded;
        for (const auto& [e, c] : terms_)
            m = std::min(m, e[i]);
        vars_[i].lo = std::max(vars_[i].lo, m);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    check_compatible(o);
    for (size_t i = 0; i < vars_.size(); ++i) {
        vars_[i].lo = std::min(vars_[i].lo, o.vars_[i].lo);
        vars_[i].hi = std::min(vars_[i].hi, o.vars_[i].hi);
    }
    for (const auto& [e, c] : o.terms_) {
        if (!in_window(e))
            continue;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    prune();
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    return *this += -o;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o)
{
    *this = *this * o;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const YCoeff& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.check_compatible(b);
    std::vector<SeriesVar> vars = a.vars_;
    for (size_t i = 0; i < vars.size(); ++i) {
        const SeriesVar& va = a.vars_[i];
        const SeriesVar& vb = b.vars_[i];
        vars[i].lo = window_add(va.lo, vb.lo);
        vars[i].hi = std::min(window_add(va.hi, vb.lo), window_add(vb.hi, va.lo));
    }
    TruncatedSeries r(std::move(vars));
    size_t n = r.vars_.size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                e[i] = ea[i] + eb[i];
                ok = e[i] <= r.vars_[i].hi;
            }
            if (!ok)
                continue;
            YCoeff p = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(e, std::move(p));
            else
                it->second += p;
        }
    }
    r.prune();
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.vars_.size() != b.vars_.size())
        return false;
    for (size_t i = 0; i < a.vars_.size(); ++i) {
        const SeriesVar& va = a.vars_[i];
        const SeriesVar& vb = b.vars_[i];
        if (va.name != vb.name || va.den != vb.den || va.hi != vb.hi)
            return false;
    }
    return a.terms_ == b.terms_;
}

void TruncatedSeries::normalized_tail(YCoeff& c0, std::map<Exponents, YCoeff>& tail, Exponents& span) const
{
    if (terms_.empty())
        throw std::domain_error("operation on a zero series");
    Exponents m(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i)
        m[i] = vars_[i].lo;
    auto it = terms_.find(m);
    if (it == terms_.end())
        throw std::domain_error("lowest stratum is not a single monomial");
    c0 = it->second;
    YCoeff inv = c0.inverse();
    tail.clear();
    for (const auto& [e, c] : terms_) {
        if (e == m)
            continue;
        tail.emplace(sub(e, m), c * inv);
    }
    span.assign(vars_.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool moves = false;
        for (const auto& [f, c] : tail)
            if (f[i] != 0) {
                moves = true;
                break;
            }
        if (!moves)
            continue;
        if (vars_[i].hi >= kUnbounded)
            throw std::domain_error("unbounded window in " + vars_[i].name + " for an infinite expansion");
        span[i] = vars_[i].hi - vars_[i].lo;
    }
}

std::vector<Exponents> TruncatedSeries::box_points(const Exponents& extent) const
{
    std::vector<Exponents> pts;
    Exponents cur(extent.size(), 0);
    while (true) {
        pts.push_back(cur);
        size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < extent[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == cur.size())
            break;
    }
    std::stable_sort(pts.begin(), pts.end(), [](const Exponents& x, const Exponents& y) { return degree(x) < degree(y); });
    return pts;
}

TruncatedSeries TruncatedSeries::pow_rational(const ExactRational& r0) const
{
    ExactRational r = r0;
    r.canonicalize();
    TruncatedSeries a = *this;
    a.prune();
    a.tighten();
    YCoeff c0;
    std::map<Exponents, YCoeff> tail;
    Exponents span;
    a.normalized_tail(c0, tail, span);

    std::vector<SeriesVar> vars = a.vars_;
    Exponents shift(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
        ExactRational lo = r * a.vars_[i].lo;
        if (lo.get_den() != 1)
            throw std::domain_error("root of the lowest monomial is off the exponent grid of " + vars[i].name);
        shift[i] = lo.get_num().get_si();
        vars[i].lo = shift[i];
        vars[i].hi = window_add(shift[i], a.vars_[i].hi >= kUnbounded ? kUnbounded : a.vars_[i].hi - a.vars_[i].lo);
    }
    YCoeff lead;
    if (r.get_den() == 1)
        lead = c0.pow(r.get_num().get_si());
    else
        lead = c0.pow(r);

    std::map<Exponents, YCoeff> b;
    Exponents zero(vars.size(), 0);
    b.emplace(zero, YCoeff(1L));
    std::vector<Exponents> pts = box_points(span);
    bool is_inverse = (r == -1);
    for (const auto& e : pts) {
        if (e == zero)
            continue;
        long de = degree(e);
        YCoeff acc;
        for (const auto& [f, t] : tail) {
            if (!dominated(f, e))
                continue;
            auto it = b.find(sub(e, f));
            if (it == b.end())
                continue;
            if (is_inverse) {
                acc -= t * it->second;
            } else {
                ExactRational w = r * degree(f) - degree(sub(e, f));
                if (w == 0)
                    continue;
                acc += t * it->second * YCoeff(w);
            }
        }
        if (!is_inverse)
            acc *= YCoeff(ExactRational(1, de));
        if (!acc.is_zero())
            b.emplace(e, std::move(acc));
    }
    TruncatedSeries out(std::move(vars));
    for (auto& [e, c] : b) {
        Exponents g(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            g[i] = e[i] + shift[i];
        if (out.in_window(g))
            out.terms_.emplace(std::move(g), c * lead);
    }
    return out;
}

TruncatedSeries TruncatedSeries::invert() const
{
    return pow_rational(ExactRational(-1));
}

TruncatedSeries TruncatedSeries::pow(long n) const
{
    if (n < 0)
        return invert().pow(-n);
    TruncatedSeries result = constant(vars_, YCoeff(1L));
    for (auto& v : result.vars_) {
        v.lo = 0;
        v.hi = kUnbounded;
    }
    TruncatedSeries base = *this;
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::exp() const
{
    TruncatedSeries a = *this;
    a.prune();
    std::vector<SeriesVar> vars = a.vars_;
    Exponents span(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) {
        bool moves = false;
        for (const auto& [e, c] : a.terms_) {
            if (e[i] < 0)
                throw std::domain_error("exp of a series with negative exponents in " + vars[i].name);
            moves = moves || e[i] > 0;
        }
        vars[i].lo = 0;
        if (moves) {
            if (vars[i].hi >= kUnbounded)
                throw std::domain_error("unbounded window in " + vars[i].name + " for exp");
            span[i] = vars[i].hi;
        }
    }
    Exponents zero(vars.size(), 0);
    if (a.terms_.count(zero))
        throw std::domain_error("exp of a series with nonzero constant term");
    std::map<Exponents, YCoeff> out;
    out.emplace(zero, YCoeff(1L));
    for (const auto& e : box_points(span)) {
        if (e == zero)
            continue;
        YCoeff acc;
        for (const auto& [f, g] : a.terms_) {
            if (!dominated(f, e))
                continue;
            auto it = out.find(sub(e, f));
            if (it == out.end())
                continue;
            acc += g * it->second * YCoeff(ExactRational(degree(f)));
        }
        if (!acc.is_zero()) {
            acc *= YCoeff(ExactRational(1, degree(e)));
            out.emplace(e, std::move(acc));
        }
    }
    TruncatedSeries r(std::move(vars));
    r.terms_ = std::move(out);
    return r;
}

TruncatedSeries TruncatedSeries::log() const
{
    TruncatedSeries a = *this;
    a.prune();
    a.tighten();
    Exponents zero(a.nvars(), 0);
    for (const auto& v : a.vars_)
        if (v.lo != 0)
            throw std::domain_error("log requires constant term 1");
    auto it0 = a.terms_.find(zero);
    if (it0 == a.terms_.end() || !it0->second.is_one())
        throw std::domain_error("log requires constant term 1");
    YCoeff c0;
    std::map<Exponents, YCoeff> tail;
    Exponents span;
    a.normalized_tail(c0, tail, span);
    std::map<Exponents, YCoeff> out;
    for (const auto& e : box_points(span)) {
        if (e == zero)
            continue;
        long de = degree(e);
        YCoeff acc;
        auto te = tail.find(e);
        if (te != tail.end())
            acc = te->second * YCoeff(ExactRational(de));
        for (const auto& [f, t] : tail) {
            if (f == e || !dominated(f, e))
                continue;
            auto it = out.find(sub(e, f));
            if (it == out.end())
                continue;
            acc -= t * it->second * YCoeff(ExactRational(degree(it->first)));
        }
        if (!acc.is_zero()) {
            acc *= YCoeff(ExactRational(1, de));
            out.emplace(e, std::move(acc));
        }
    }
    TruncatedSeries r(a.vars_);
    r.terms_ = std::move(out);
    return r;
}

TruncatedSeries TruncatedSeries::substitute_monomial(const std::string& v, const MonomialImage& image) const
{
    if (v == "y") {
        if (!image.factors.empty() || image.y_w != -2 || !image.coeff.is_one())
            throw std::invalid_argument("only y -> 1/y is supported for the coefficient variable");
        return y_inverted();
    }
    int iv = index_of(v);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + v);
    const SeriesVar& src = vars_[static_cast<size_t>(iv)];

    std::vector<SeriesVar> vars;
    std::vector<int> from_old;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (static_cast<int>(i) == iv) {
            bool keeps = false;
            for (const auto& f : image.factors)
                keeps = keeps || f.var == v;
            if (keeps) {
                vars.push_back(SeriesVar{v, src.den, 0, kUnbounded});
                from_old.push_back(-1);
            }
            continue;
        }
        vars.push_back(vars_[i]);
        from_old.push_back(static_cast<int>(i));
    }
    auto target = [&](const std::string& name) {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name)
                return static_cast<int>(i);
        return -1;
    };

    struct Route {
        int target;
        ExactRational per_grid; // target grid units per source grid unit
    };
    std::vector<Route> routes;
    bool any_positive = false;
    for (const auto& f : image.factors) {
        if (f.exponent < 0)
            throw std::invalid_argument("monomial image must have nonnegative exponents");
        if (f.exponent == 0)
            continue;
        int t = target(f.var);
        if (t < 0) {
            vars.push_back(SeriesVar{f.var, f.den, 0, kUnbounded});
            from_old.push_back(-1);
            t = static_cast<int>(vars.size()) - 1;
        }
        ExactRational pg = f.exponent * vars[static_cast<size_t>(t)].den / src.den;
        pg.canonicalize();
        routes.push_back({t, pg});
        any_positive = true;
    }
    if (!any_positive && src.hi < kUnbounded)
        throw std::domain_error("substituting a constant into truncated variable " + v);

    for (const auto& rt : routes) {
        SeriesVar& tv = vars[static_cast<size_t>(rt.target)];
        const ExactRational& pg = rt.per_grid;
        long c_lo = -kUnbounded, c_hi = kUnbounded;
        if (src.lo > -kUnbounded) {
            ExactRational x = pg * src.lo;
            c_lo = floor_div(x.get_num().get_si(), x.get_den().get_si());
        }
        if (src.hi < kUnbounded) {
            ExactRational x = pg * (src.hi + 1);
            c_hi = ceil_div(x.get_num().get_si(), x.get_den().get_si()) - 1;
        }
        long nlo = window_add(tv.lo, c_lo);
        long nhi = std::min(window_add(tv.hi, c_lo), window_add(tv.lo, c_hi));
        tv.lo = nlo;
        tv.hi = nhi;
    }

    TruncatedSeries out(std::move(vars));
    size_t n = out.vars_.size();
    for (const auto& [e, c] : terms_) {
        long g = e[static_cast<size_t>(iv)];
        Exponents ne(n, 0);
        for (size_t i = 0; i < n; ++i)
            if (from_old[i] >= 0)
                ne[i] = e[static_cast<size_t>(from_old[i])];
        for (const auto& rt : routes) {
            ExactRational x = rt.per_grid * g;
            if (x.get_den() != 1)
                throw std::domain_error("image exponent off the declared grid of " + out.vars_[static_cast<size_t>(rt.target)].name);
            ne[static_cast<size_t>(rt.target)] += x.get_num().get_si();
        }
        ExactRational power(g, src.den);
        power.canonicalize();
        YCoeff factor = image.coeff.is_one() ? YCoeff(1L) : (power.get_den() == 1 ? image.coeff.pow(power.get_num().get_si()) : image.coeff.pow(power));
        ExactRational yshift = power * image.y_w;
        if (yshift.get_den() != 1)
            throw std::domain_error("y-power of the image is off the half-integer grid");
        YCoeff term = (c * factor).shifted(static_cast<int>(yshift.get_num().get_si()));
        if (!out.in_window(ne))
            continue;
        out.add_to(ne, term);
    }
    return out;
}

TruncatedSeries TruncatedSeries::y_inverted() const
{
    TruncatedSeries r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c.y_inverted());
    return r;
}

TruncatedSeries TruncatedSeries::at_y_zero() const
{
    TruncatedSeries r(vars_);
    for (const auto& [e, c] : terms_) {
        ExactRational v = c.at_y_zero();
        if (v != 0)
            r.terms_.emplace(e, YCoeff(v));
    }
    return r;
}

TruncatedSeries TruncatedSeries::extract_progression(const std::string& v, long modulus, long residue) const
{
    if (modulus <= 0)
        throw std::invalid_argument("modulus must be positive");
    int iv = index_of(v);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + v);
    if (vars_[static_cast<size_t>(iv)].den != 1)
        throw std::invalid_argument("progression extraction needs an integral exponent grid");
    TruncatedSeries r(vars_);
    for (const auto& [e, c] : terms_) {
        long d = e[static_cast<size_t>(iv)] - residue;
        if (((d % modulus) + modulus) % modulus == 0)
            r.terms_.emplace(e, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(const std::string& v, long hi) const
{
    int iv = index_of(v);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + v);
    TruncatedSeries r = *this;
    r.vars_[static_cast<size_t>(iv)].hi = std::min(hi, r.vars_[static_cast<size_t>(iv)].hi);
    r.prune();
    return r;
}

TruncatedSeries TruncatedSeries::slice(const std::string& v, long grid) const
{
    int iv = index_of(v);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + v);
    const SeriesVar& sv = vars_[static_cast<size_t>(iv)];
    if (grid > sv.hi)
        throw std::out_of_range("slice of " + v + " outside the exact window");
    std::vector<SeriesVar> vars;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != iv)
            vars.push_back(vars_[i]);
    TruncatedSeries r(std::move(vars));
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(iv)] != grid)
            continue;
        Exponents ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != iv)
                ne.push_back(e[i]);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::with_variable(const SeriesVar& v) const
{
    if (index_of(v.name) >= 0)
        throw std::invalid_argument("variable already present: " + v.name);
    if (v.lo > 0 || v.hi < 0)
        throw std::invalid_argument("new variable window must contain 0");
    std::vector<SeriesVar> vars = vars_;
    vars.push_back(v);
    TruncatedSeries r(std::move(vars));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne.push_back(0);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::euler_derivative(const std::string& v) const
{
    int iv = index_of(v);
    if (iv < 0)
        throw std::invalid_argument("unknown variable " + v);
    int den = vars_[static_cast<size_t>(iv)].den;
    TruncatedSeries r(vars_);
    for (const auto& [e, c] : terms_) {
        long g = e[static_cast<size_t>(iv)];
        if (g != 0)
            r.terms_.emplace(e, c * YCoeff(ExactRational(g, den)));
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(const Exponents& grid, int y_w) const
{
    if (grid.size() != vars_.size())
        throw std::invalid_argument("exponent vector has wrong length");
    std::vector<SeriesVar> vars = vars_;
    for (size_t i = 0; i < vars.size(); ++i) {
        vars[i].lo = window_add(vars[i].lo, grid[i]);
        vars[i].hi = window_add(vars[i].hi, grid[i]);
    }
    TruncatedSeries r(std::move(vars));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        for (size_t i = 0; i < ne.size(); ++i)
            ne[i] += grid[i];
        r.terms_.emplace(std::move(ne), y_w ? c.shifted(y_w) : c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::map_coeffs(YCoeff (*fn)(const YCoeff&)) const
{
    TruncatedSeries r(vars_);
    for (const auto& [e, c] : terms_) {
        YCoeff v = fn(c);
        if (!v.is_zero())
            r.terms_.emplace(e, std::move(v));
    }
    return r;
}

bool TruncatedSeries::agree(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.check_compatible(b);
    auto inside = [&](const Exponents& e) {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > a.vars_[i].hi || e[i] > b.vars_[i].hi)
                return false;
        return true;
    };
    for (const auto& [e, c] : a.terms_)
        if (inside(e)) {
            auto it = b.terms_.find(e);
            if (it == b.terms_.end() || it->second != c)
                return false;
        }
    for (const auto& [e, c] : b.terms_)
        if (inside(e) && !a.terms_.count(e))
            return false;
    return true;
}

bool TruncatedSeries::is_y_symmetric() const
{
    return y_inverted().terms_ == terms_;
}

std::string TruncatedSeries::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << "*" << vars_[i].name;
            if (e[i] != vars_[i].den)
                os << "^" << exponent_str(e[i], vars_[i].den);
        }
    }
    return os.str();
}

} // namespace verlinde
