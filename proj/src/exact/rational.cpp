#include "verlinde/rational.hpp"

#include <stdexcept>

namespace verlinde {

ExactRational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    ExactRational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const ExactRational& q)
{
    return q.get_str(10);
}

std::string to_string(const BigInt& z)
{
    return z.get_str(10);
}

static bool integer_root(const BigInt& v, unsigned long q, BigInt& out)
{
    if (v < 0) {
        if (q % 2 == 0)
            return false;
        BigInt pos = -v;
        if (!integer_root(pos, q, out))
            return false;
        out = -out;
        return true;
    }
    BigInt r;
    int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), q);
    if (!exact)
        return false;
    out = r;
    return true;
}

bool rational_root(const ExactRational& value, unsigned long q, ExactRational& out)
{
    if (q == 0)
        throw std::invalid_argument("zeroth root");
    BigInt n, d;
    if (!integer_root(value.get_num(), q, n))
        return false;
    if (!integer_root(value.get_den(), q, d))
        return false;
    out = ExactRational(n, d);
    out.canonicalize();
    return true;
}

ExactRational rational_pow(const ExactRational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("negative power of zero");
        ExactRational inv = 1 / base;
        return rational_pow(inv, -exponent);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    ExactRational r(n, d);
    r.canonicalize();
    return r;
}

BigInt binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (n >= 0) {
        if (k > n)
            return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // C(n,k) = (-1)^k C(k-n-1, k)
    BigInt r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
}

RationalMatrix invert_matrix(const RationalMatrix& m)
{
    size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<ExactRational>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("matrix is not square");
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        ExactRational f = 1 / a[col][col];
        for (size_t k = 0; k < n; ++k) {
            a[col][k] *= f;
            inv[col][k] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            ExactRational g = a[r][col];
            for (size_t k = 0; k < n; ++k) {
                a[r][k] -= g * a[col][k];
                inv[r][k] -= g * inv[col][k];
            }
        }
    }
    return inv;
}

} // namespace verlinde
