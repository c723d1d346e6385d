#include "verlinde/equiv_char.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace verlinde {

EquivChar EquivChar::monomial(int a, int b, int c2, long mult)
{
    EquivChar c;
    c.add({a, b, c2}, mult);
    return c;
}

long EquivChar::rank() const
{
    long r = 0;
    for (const auto& [e, m] : terms_)
        r += m;
    return r;
}

long EquivChar::coeff(const CharExp& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void EquivChar::add(const CharExp& e, long m)
{
    if (m == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, m);
    if (!fresh) {
        it->second += m;
        if (it->second == 0)
            terms_.erase(it);
    }
}

EquivChar& EquivChar::operator+=(const EquivChar& o)
{
    for (const auto& [e, m] : o.terms_)
        add(e, m);
    return *this;
}

EquivChar& EquivChar::operator-=(const EquivChar& o)
{
    for (const auto& [e, m] : o.terms_)
        add(e, -m);
    return *this;
}

EquivChar EquivChar::operator-() const
{
    EquivChar r;
    for (const auto& [e, m] : terms_)
        r.terms_.emplace(e, -m);
    return r;
}

EquivChar operator*(const EquivChar& a, const EquivChar& b)
{
    EquivChar r;
    for (const auto& [ea, ma] : a.terms_)
        for (const auto& [eb, mb] : b.terms_)
            r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ma * mb);
    return r;
}

EquivChar operator*(EquivChar a, long m)
{
    if (m == 0)
        return {};
    for (auto& [e, v] : a.terms_)
        v *= m;
    return a;
}

EquivChar EquivChar::dual() const
{
    EquivChar r;
    for (const auto& [e, m] : terms_)
        r.terms_.emplace(CharExp{-e[0], -e[1], -e[2]}, m);
    return r;
}

EquivChar EquivChar::twisted(int a, int b, int c2) const
{
    EquivChar r;
    for (const auto& [e, m] : terms_)
        r.terms_.emplace(CharExp{e[0] + a, e[1] + b, e[2] + c2}, m);
    return r;
}

EquivChar EquivChar::fixed_part() const
{
    EquivChar r;
    for (const auto& [e, m] : terms_)
        if (e[2] == 0)
            r.terms_.emplace(e, m);
    return r;
}

EquivChar EquivChar::moving_part() const
{
    EquivChar r;
    for (const auto& [e, m] : terms_)
        if (e[2] != 0)
            r.terms_.emplace(e, m);
    return r;
}

std::map<int, long> EquivChar::restrict_to_third() const
{
    std::map<int, long> r;
    for (const auto& [e, m] : terms_) {
        r[e[2]] += m;
        if (r[e[2]] == 0)
            r.erase(e[2]);
    }
    return r;
}

std::string EquivChar::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, m] : terms_) {
        if (!first)
            os << (m < 0 ? " - " : " + ");
        else if (m < 0)
            os << "-";
        first = false;
        long a = m < 0 ? -m : m;
        if (a != 1)
            os << a << "*";
        os << "t^(" << e[0] << "," << e[1] << ")";
        if (e[2] != 0) {
            os << "x^";
            if (e[2] % 2 == 0)
                os << e[2] / 2;
            else
                os << "(" << e[2] << "/2)";
        }
    }
    return os.str();
}

WeightForm weight_form(const CharExp& e, const EpsSpec& spec)
{
    WeightForm w{spec.p * e[0] + spec.r * e[1], ExactRational(e[2], 2)};
    w.alpha.canonicalize();
    w.beta.canonicalize();
    return w;
}

WeightForm checked_weight_form(const CharExp& e, const EpsSpec& spec)
{
    WeightForm w = weight_form(e, spec);
    if (w.alpha == 0 && w.beta == 0 && (e[0] != 0 || e[1] != 0))
        throw std::domain_error("degenerate epsilon specialization for character (" + std::to_string(e[0]) + "," +
                                std::to_string(e[1]) + ")");
    return w;
}

EpsSpec draw_eps_spec(std::uint64_t seed, int index)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 13);
    std::uniform_int_distribution<int> den(1, 11);
    EpsSpec spec;
    for (int k = 0; k <= index; ++k) {
        while (true) {
            ExactRational p(num(rng), den(rng));
            ExactRational r(num(rng), den(rng));
            if (rng() % 2)
                r = -r;
            p.canonicalize();
            r.canonicalize();
            // exclude p/r in a box of small ratios so weights stay nondegenerate
            ExactRational ratio = p / r;
            bool bad = false;
            for (int a = -12; a <= 12 && !bad; ++a)
                for (int b = 1; b <= 12 && !bad; ++b)
                    if (ratio == ExactRational(a, b))
                        bad = true;
            if (bad)
                continue;
            spec = EpsSpec{p, r};
            break;
        }
    }
    return spec;
}

bool eps_generic_for(const EquivChar& c, const EpsSpec& spec)
{
    for (const auto& [e, m] : c.terms())
        if ((e[0] != 0 || e[1] != 0) && spec.p * e[0] + spec.r * e[1] == 0)
            return false;
    return true;
}

} // namespace verlinde
